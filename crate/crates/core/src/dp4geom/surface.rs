use std::collections::BTreeMap;

use super::linalg::{apply, rank, rref, CycMatrix};
use crate::exactnum::CycNum;
use crate::{Error, Result};

/// The intersection of two diagonal quadrics in `P^4` over `Q(zeta_3)`,
/// with two monomial automorphisms and a rank-2 skew matrix giving one line.
#[derive(Clone, Debug)]
pub struct SurfaceDP4 {
    /// diagonal coefficients of the two quadrics
    pub q1: Vec<CycNum>,
    pub q2: Vec<CycNum>,
    /// order 3 generator
    pub gamma: CycMatrix,
    /// order 4 generator
    pub beta: CycMatrix,
    pub skew: CycMatrix,
}

fn z(e: i64) -> CycNum {
    CycNum::zeta_pow(3, e).expect("conductor 3 is always allowed")
}

fn c(i: i64) -> CycNum {
    CycNum::from_int(i)
}

/// 5x5 matrix sending `x` to `(coef_i * x_{src_i})_i`.
fn monomial(src: [usize; 5], coef: [CycNum; 5]) -> CycMatrix {
    let mut m = vec![vec![CycNum::zero(); 5]; 5];
    for (i, k) in coef.into_iter().enumerate() {
        m[i][src[i]] = k;
    }
    m
}

impl SurfaceDP4 {
    /// `x1^2 + z x2^2 + z^2 x3^2 + x4^2 = x1^2 + z^2 x2^2 + z x3^2 + x5^2 = 0`.
    pub fn standard() -> Self {
        let q1 = vec![c(1), z(1), z(2), c(1), c(0)];
        let q2 = vec![c(1), z(2), z(1), c(0), c(1)];
        // (x1..x5) -> (x2, x3, x1, z x4, z^2 x5)
        let gamma = monomial([1, 2, 0, 3, 4], [c(1), c(1), c(1), z(1), z(2)]);
        // (x1..x5) -> (x1, x3, x2, -x5, x4)
        let beta = monomial([0, 2, 1, 4, 3], [c(1), c(1), c(1), c(-1), c(1)]);
        let zz = |e| z(e);
        let skew = vec![
            vec![c(0), c(1), c(-1), c(1), c(1)],
            vec![c(-1), c(0), c(1), zz(2), zz(1)],
            vec![c(1), c(-1), c(0), zz(1), zz(2)],
            vec![c(-1), -zz(2), -zz(1), c(0), &zz(1) - &zz(2)],
            vec![c(-1), -zz(1), -zz(2), &zz(2) - &zz(1), c(0)],
        ];
        SurfaceDP4 { q1, q2, gamma, beta, skew }
    }

    fn polar(q: &[CycNum], u: &[CycNum], v: &[CycNum]) -> CycNum {
        q.iter().zip(u).zip(v).map(|((a, x), y)| &(a * x) * y).sum()
    }

    /// True when both quadrics vanish on the span of `rows`.
    pub fn contains_plane(&self, rows: &[Vec<CycNum>]) -> bool {
        [&self.q1, &self.q2].iter().all(|q| {
            rows.iter()
                .enumerate()
                .all(|(i, u)| rows[i..].iter().all(|v| Self::polar(q, u, v).is_zero()))
        })
    }

    /// True when `q o g` lies in the span of the two quadrics for both.
    pub fn preserves_pencil(&self, g: &[Vec<CycNum>]) -> bool {
        let pulled = |q: &[CycNum]| -> CycMatrix {
            // (g^T diag(q) g)_{jk}
            (0..5)
                .map(|j| {
                    (0..5)
                        .map(|k| (0..5).map(|i| &(&q[i] * &g[i][j]) * &g[i][k]).sum())
                        .collect()
                })
                .collect()
        };
        [&self.q1, &self.q2].iter().all(|q| {
            let m = pulled(q);
            // x4^2 appears only in q1 and x5^2 only in q2
            let (a, b) = (m[3][3].clone(), m[4][4].clone());
            (0..5).all(|j| {
                (0..5).all(|k| {
                    let expect = if j == k { &(&a * &self.q1[j]) + &(&b * &self.q2[j]) } else { CycNum::zero() };
                    m[j][k] == expect
                })
            })
        })
    }
}

/// A line on the surface, as an echelonized 2-plane in `k^5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    plane: CycMatrix,
    key: String,
}

impl Line {
    /// Builds the line spanned by `rows`, which must have rank 2.
    pub fn from_rows(rows: &[Vec<CycNum>]) -> Result<Self> {
        let plane = rref(rows)?;
        if plane.len() != 2 {
            return Err(Error::GeometryInconsistency(format!(
                "expected a 2-plane, got rank {}",
                plane.len()
            )));
        }
        let key = plane
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.embed(3).map(|y| y.body()).unwrap_or_else(|_| x.to_string()))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect::<Vec<_>>()
            .join("; ");
        Ok(Line { plane, key })
    }

    pub fn plane(&self) -> &CycMatrix {
        &self.plane
    }

    /// Serialized echelon form; equal lines have equal keys.
    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn image(&self, g: &[Vec<CycNum>]) -> Result<Line> {
        let rows: CycMatrix = self.plane.iter().map(|r| apply(g, r)).collect();
        Line::from_rows(&rows)
    }
}

pub fn intersection_number(a: &Line, b: &Line) -> Result<i64> {
    if a.key == b.key {
        return Ok(-1);
    }
    let stacked: CycMatrix = a.plane.iter().chain(&b.plane).cloned().collect();
    Ok(if rank(&stacked)? <= 3 { 1 } else { 0 })
}

/// The 16 lines in key order, with incidences and the generator actions.
#[derive(Clone, Debug)]
pub struct LineConfiguration {
    pub lines: Vec<Line>,
    pub incidence: Vec<Vec<i64>>,
    /// index of the line of the skew matrix itself
    pub base: usize,
    /// `gamma_perm[i]` is the index of the image of line `i`
    pub gamma_perm: Vec<usize>,
    pub beta_perm: Vec<usize>,
    /// number of sign diagonals tried
    pub sign_choices: usize,
}

/// Runs `D L D^T` over all 32 sign diagonals and deduplicates.
pub fn enumerate_lines(s: &SurfaceDP4) -> Result<LineConfiguration> {
    let base_line = Line::from_rows(&s.skew)?;
    let mut found: BTreeMap<String, Line> = BTreeMap::new();
    let mut sign_choices = 0;
    for mask in 0u32..32 {
        let d: Vec<i64> = (0..5).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let m: CycMatrix = (0..5)
            .map(|i| (0..5).map(|j| s.skew[i][j].scale(&crate::exactnum::int(d[i] * d[j]))).collect())
            .collect();
        let line = Line::from_rows(&m)?;
        if !s.contains_plane(line.plane()) {
            return Err(Error::GeometryInconsistency(format!(
                "plane {} is not on the surface",
                line.key()
            )));
        }
        found.entry(line.key.clone()).or_insert(line);
        sign_choices += 1;
    }
    let lines: Vec<Line> = found.into_values().collect();
    if lines.len() != 16 {
        return Err(Error::GeometryInconsistency(format!("found {} lines, expected 16", lines.len())));
    }
    let index = |l: &Line| -> Result<usize> {
        lines
            .iter()
            .position(|m| m.key == l.key)
            .ok_or_else(|| Error::GeometryInconsistency(format!("{} is not one of the 16 lines", l.key)))
    };
    let base = index(&base_line)?;
    let mut incidence = vec![vec![0; 16]; 16];
    for i in 0..16 {
        for j in 0..16 {
            incidence[i][j] = intersection_number(&lines[i], &lines[j])?;
        }
    }
    let perm = |g: &CycMatrix| -> Result<Vec<usize>> {
        lines.iter().map(|l| index(&l.image(g)?)).collect()
    };
    let gamma_perm = perm(&s.gamma)?;
    let beta_perm = perm(&s.beta)?;
    Ok(LineConfiguration { lines, incidence, base, gamma_perm, beta_perm, sign_choices })
}

impl LineConfiguration {
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&j| self.incidence[i][j] == 1).collect()
    }

    pub fn gamma_invariant(&self) -> Vec<usize> {
        (0..self.lines.len()).filter(|&j| self.gamma_perm[j] == j).collect()
    }

    /// True when the permutation preserves the incidence matrix.
    pub fn preserves_incidence(&self, perm: &[usize]) -> bool {
        (0..16).all(|i| (0..16).all(|j| self.incidence[perm[i]][perm[j]] == self.incidence[i][j]))
    }
}

/// Order of a permutation given by its image list.
pub fn perm_order(p: &[usize]) -> usize {
    let id: Vec<usize> = (0..p.len()).collect();
    let mut q = p.to_vec();
    let mut k = 1;
    while q != id {
        q = q.iter().map(|&i| p[i]).collect();
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_preserve_the_pencil() {
        let s = SurfaceDP4::standard();
        assert!(s.preserves_pencil(&s.gamma));
        assert!(s.preserves_pencil(&s.beta));
        assert!(!s.preserves_pencil(&super::super::linalg::int_matrix(&[
            vec![2, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
        ])));
    }

    #[test]
    fn base_plane_is_on_the_surface() {
        let s = SurfaceDP4::standard();
        let l = Line::from_rows(&s.skew).unwrap();
        assert!(s.contains_plane(l.plane()));
        assert_eq!(l.image(&s.gamma).unwrap(), l);
    }

    #[test]
    fn sixteen_lines() {
        let s = SurfaceDP4::standard();
        let conf = enumerate_lines(&s).unwrap();
        assert_eq!(conf.lines.len(), 16);
        assert_eq!(conf.sign_choices, 32);
        assert_eq!(conf.neighbors(conf.base).len(), 5);
        for i in 0..16 {
            assert_eq!(conf.incidence[i][i], -1);
            assert_eq!(conf.neighbors(i).len(), 5);
        }
        let inv = conf.gamma_invariant();
        assert_eq!(inv.len(), 4);
        assert!(inv.contains(&conf.base));
        assert!(conf.preserves_incidence(&conf.gamma_perm));
        assert!(conf.preserves_incidence(&conf.beta_perm));
        assert_eq!(perm_order(&conf.gamma_perm), 3);
        assert_eq!(4 % perm_order(&conf.beta_perm), 0);
    }

    #[test]
    fn sign_flips_pair_up() {
        let s = SurfaceDP4::standard();
        let flip = |mask: u32| {
            let d: Vec<i64> = (0..5).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let m: CycMatrix = (0..5)
                .map(|i| (0..5).map(|j| s.skew[i][j].scale(&crate::exactnum::int(d[i] * d[j]))).collect())
                .collect();
            Line::from_rows(&m).unwrap()
        };
        for mask in 0..32 {
            assert_eq!(flip(mask), flip(mask ^ 31));
        }
    }
}
