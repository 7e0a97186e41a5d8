//! The rank-8 lattice `Lambda = Z + Pic + Z (p/2)` in the rational Chow ring
//! of the surface, with the Euler pairing from Riemann-Roch.
//!
//! Coordinates are `(x, y_1..y_6, z)` for `x + sum y_i l_i + (z/2) p`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::dp4geom::PicardData;
use crate::exactnum::{rat, BigRat};
use crate::gmodule::IntMatrix;
use crate::{Error, Result};

/// A vector of `Lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChowVector {
    pub x: i64,
    pub y: [i64; 6],
    pub z: i64,
}

impl ChowVector {
    pub fn new(x: i64, y: [i64; 6], z: i64) -> Self {
        ChowVector { x, y, z }
    }

    pub fn from_coords(c: &[i64]) -> Result<Self> {
        if c.len() != 8 {
            return Err(Error::Shape(format!("expected 8 coordinates, got {}", c.len())));
        }
        Ok(ChowVector { x: c[0], y: [c[1], c[2], c[3], c[4], c[5], c[6]], z: c[7] })
    }

    pub fn coords(&self) -> [i64; 8] {
        let y = self.y;
        [self.x, y[0], y[1], y[2], y[3], y[4], y[5], self.z]
    }

    /// The i-th basis vector of `Lambda`.
    pub fn basis(i: usize) -> Self {
        let mut c = [0; 8];
        c[i] = 1;
        Self::from_coords(&c).expect("eight coordinates")
    }
}

/// `Lambda` with the Euler pairing and the group action.
#[derive(Clone, Debug)]
pub struct EulerLattice {
    gram: [[i64; 6]; 6],
    /// coordinates of `K_X`
    kx: [i64; 6],
    /// column-convention action on `Lambda`, one per generator
    generators: Vec<IntMatrix>,
}

fn fixed6(v: &[i64]) -> [i64; 6] {
    [v[0], v[1], v[2], v[3], v[4], v[5]]
}

impl EulerLattice {
    /// Builds `Lambda` from the Picard data. Generators are `beta`, `gamma`,
    /// acting by `1 + M + 1`.
    pub fn from_picard(p: &PicardData) -> Result<Self> {
        let gram_rows = p.gram.to_i64_rows().ok_or_else(|| Error::Shape("Gram overflow".into()))?;
        let gram: Vec<[i64; 6]> = gram_rows.iter().map(|r| fixed6(r)).collect();
        let kx: Vec<i64> = p.minus_k.iter().map(|x| -x).collect();
        let block = |m: &IntMatrix| {
            IntMatrix::from_fn(8, 8, |i, j| match (i, j) {
                (0, 0) | (7, 7) => BigInt::from(1),
                (1..=6, 1..=6) => m.get(i - 1, j - 1).clone(),
                _ => BigInt::zero(),
            })
        };
        Ok(EulerLattice {
            gram: [gram[0], gram[1], gram[2], gram[3], gram[4], gram[5]],
            kx: fixed6(&kx),
            generators: vec![block(&p.beta), block(&p.gamma)],
        })
    }

    pub fn kx(&self) -> [i64; 6] {
        self.kx
    }

    /// The same pairing with a different group action.
    pub fn with_generators(&self, generators: Vec<IntMatrix>) -> Self {
        EulerLattice { generators, ..self.clone() }
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    /// Intersection product on `Pic`.
    pub fn dot(&self, a: &[i64; 6], b: &[i64; 6]) -> i64 {
        let mut s = 0;
        for i in 0..6 {
            for j in 0..6 {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// `2 chi(v, w)`, always an integer on `Lambda`.
    pub fn doubled_pairing(&self, v: &ChowVector, w: &ChowVector) -> i64 {
        // chi = x1 x2 - (x1 y2 - x2 y1).K / 2 + (x1 z2 + x2 z1 - 2 y1.y2) / 2
        let mut d = [0; 6];
        for i in 0..6 {
            d[i] = v.x * w.y[i] - w.x * v.y[i];
        }
        2 * v.x * w.x - self.dot(&d, &self.kx) + v.x * w.z + w.x * v.z - 2 * self.dot(&v.y, &w.y)
    }

    pub fn euler_pairing(&self, v: &ChowVector, w: &ChowVector) -> BigRat {
        rat(self.doubled_pairing(v, w), 2)
    }

    /// Matrix of `chi` on the basis `(1, l_1..l_6, p/2)`.
    pub fn euler_gram(&self) -> Vec<Vec<BigRat>> {
        (0..8)
            .map(|i| {
                (0..8)
                    .map(|j| self.euler_pairing(&ChowVector::basis(i), &ChowVector::basis(j)))
                    .collect()
            })
            .collect()
    }

    /// Integer matrix of `2 chi`.
    pub fn doubled_gram(&self) -> IntMatrix {
        IntMatrix::from_fn(8, 8, |i, j| {
            BigInt::from(self.doubled_pairing(&ChowVector::basis(i), &ChowVector::basis(j)))
        })
    }

    /// `ch(O(D)) = (1, D, D^2)`.
    pub fn ch_line_bundle(&self, d: [i64; 6]) -> ChowVector {
        ChowVector::new(1, d, self.dot(&d, &d))
    }

    /// Membership in `ch(K_0)`: `z = y.K_X (mod 2)`.
    pub fn in_k0(&self, v: &ChowVector) -> bool {
        (v.z - self.dot(&v.y, &self.kx)).rem_euclid(2) == 0
    }

    pub fn act(&self, g: usize, v: &ChowVector) -> ChowVector {
        let c: Vec<BigInt> = v.coords().iter().map(|&x| BigInt::from(x)).collect();
        let out: Vec<i64> = self.generators[g]
            .mul_vec(&c)
            .iter()
            .map(|x| i64::try_from(x).expect("small coordinates"))
            .collect();
        ChowVector::from_coords(&out).expect("eight coordinates")
    }

    /// Checks the splitting `K_0 = Z + Pic + Z` as modules.
    pub fn k0_decomposition_check(&self) -> K0Check {
        let rank_class = ChowVector::basis(0);
        let point = ChowVector::basis(7);
        let ngen = self.generators.len();
        let fixes_rank = (0..ngen).all(|g| self.act(g, &rank_class) == rank_class);
        let fixes_point = (0..ngen).all(|g| self.act(g, &point) == point);
        let pic_nontrivial: Vec<bool> = self
            .generators
            .iter()
            .map(|m| (1..7).any(|i| (1..7).any(|j| m.get(i, j) != &BigInt::from((i == j) as i64))))
            .collect();
        let block_diagonal = self.generators.iter().all(|m| {
            (0..8).all(|i| {
                (0..8).all(|j| {
                    let outer = i == 0 || i == 7 || j == 0 || j == 7;
                    !outer || i == j || m.get(i, j).is_zero()
                })
            })
        });
        let id = IntMatrix::identity(8);
        let stacked = IntMatrix::vstack(
            &self.generators.iter().map(|m| m.sub(&id).expect("8x8")).collect::<Vec<_>>(),
            8,
        )
        .expect("8 columns");
        let invariant_rank = crate::gmodule::kernel(&stacked).cols();
        K0Check {
            fixes_rank,
            fixes_point,
            block_diagonal,
            pic_nontrivial,
            invariant_rank,
            fully_fixed: invariant_rank == 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Check {
    pub fixes_rank: bool,
    pub fixes_point: bool,
    pub block_diagonal: bool,
    pub pic_nontrivial: Vec<bool>,
    pub invariant_rank: usize,
    /// whether `K_0^G = K_0`
    pub fully_fixed: bool,
}

/// Displayed form of a rational matrix entry, e.g. `-1/2`.
pub fn fmt_entry(r: &BigRational) -> String {
    crate::exactnum::fmt_rat(r)
}
