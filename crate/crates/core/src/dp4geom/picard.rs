use std::sync::Arc;

use super::linalg::{int_matrix, solve};
use super::surface::LineConfiguration;
use crate::exactnum::CycNum;
use crate::gmodule::{GLattice, IntMatrix};
use crate::grouptheory::{FinGroup, GroupElement, SmallMat, DEFAULT_GROUP_CAP};
use crate::{Error, Result};

/// Reference intersection matrix of `L1..L6`.
pub const REFERENCE_GRAM: [[i64; 6]; 6] = [
    [-1, 0, 0, 0, 0, 1],
    [0, -1, 0, 0, 0, 1],
    [0, 0, -1, 0, 0, 0],
    [0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, -1, 0],
    [1, 1, 0, 0, 0, -1],
];

/// Reference action matrices in row convention: row `i` holds the
/// coordinates of the image of `L_{i+1}`.
pub const REFERENCE_B_ROWS: [[i64; 6]; 6] = [
    [1, 1, -1, -1, -1, 2],
    [0, 0, 0, 0, 0, 1],
    [1, 0, 0, -1, 0, 1],
    [1, 0, -1, 0, 0, 1],
    [1, 0, 0, 0, -1, 1],
    [1, 0, 0, 0, 0, 0],
];

pub const REFERENCE_C_ROWS: [[i64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1],
];

pub const REFERENCE_MINUS_K: [i64; 6] = [2, 2, -1, -1, -1, 3];

/// Basis choice with ties broken by key order.
#[derive(Clone, Debug)]
pub struct BasisSelection {
    pub base: usize,
    pub neighbors: Vec<usize>,
    pub gamma_invariant: Vec<usize>,
    /// line indices of `L1..L6`
    pub lines: [usize; 6],
}

pub fn select_basis(conf: &LineConfiguration) -> Result<BasisSelection> {
    let base = conf.base;
    let neighbors = conf.neighbors(base);
    let gamma_invariant = conf.gamma_invariant();
    let (inv_nb, other_nb): (Vec<usize>, Vec<usize>) =
        neighbors.iter().partition(|j| gamma_invariant.contains(j));
    let far: Vec<usize> = gamma_invariant
        .iter()
        .copied()
        .filter(|&j| j != base && !neighbors.contains(&j))
        .collect();
    if neighbors.len() != 5 || inv_nb.len() != 2 || far.len() != 1 || !gamma_invariant.contains(&base) {
        return Err(Error::GeometryInconsistency(format!(
            "expected 5 neighbors, 2 of them and 1 further line gamma-invariant; got {}, {}, {}",
            neighbors.len(),
            inv_nb.len(),
            far.len()
        )));
    }
    let lines = [inv_nb[0], inv_nb[1], other_nb[0], other_nb[1], other_nb[2], far[0]];
    Ok(BasisSelection { base, neighbors, gamma_invariant, lines })
}

/// Which reference matrices are reproduced after relabeling.
#[derive(Clone, Debug, Default)]
pub struct Alignment {
    /// `relabeling[i]` is the position, in the key-ordered basis, of `L_{i+1}`
    pub relabeling: [usize; 6],
    pub gram: bool,
    pub beta: bool,
    pub gamma: bool,
    pub minus_k: bool,
    pub candidates_tried: usize,
}

impl Alignment {
    pub fn full(&self) -> bool {
        self.gram && self.beta && self.gamma && self.minus_k
    }
}

/// Picard lattice data in the aligned basis. Matrices act on column vectors.
#[derive(Clone, Debug)]
pub struct PicardData {
    pub selection: BasisSelection,
    pub alignment: Alignment,
    /// line indices of `L1..L6` after relabeling
    pub basis: [usize; 6],
    pub gram: IntMatrix,
    pub beta: IntMatrix,
    pub gamma: IntMatrix,
    pub minus_k: Vec<i64>,
    /// coordinates of all 16 line classes
    pub line_classes: Vec<Vec<i64>>,
}

fn to_int(v: &CycNum) -> Result<i64> {
    v.as_integer()
        .and_then(|x| i64::try_from(x).ok())
        .ok_or_else(|| Error::GeometryInconsistency(format!("non-integral coordinate {v}")))
}

/// Solves `gram c = rhs` over the integers.
fn expand(gram: &[Vec<i64>], rhs: &[i64]) -> Result<Vec<i64>> {
    let a = int_matrix(gram);
    let b: Vec<CycNum> = rhs.iter().map(|&x| CycNum::from_int(x)).collect();
    solve(&a, &b)?.iter().map(to_int).collect()
}

/// Permutations of 0..6 that permute {0,1} and {2,3,4} and fix 5, in lexicographic order.
fn allowed_relabelings() -> Vec<[usize; 6]> {
    let triples = [[2, 3, 4], [2, 4, 3], [3, 2, 4], [3, 4, 2], [4, 2, 3], [4, 3, 2]];
    let mut out = Vec::new();
    for pair in [[0, 1], [1, 0]] {
        for t in triples {
            out.push([pair[0], pair[1], t[0], t[1], t[2], 5]);
        }
    }
    out
}

fn relabel(m: &[Vec<i64>], s: &[usize; 6]) -> Vec<Vec<i64>> {
    (0..6).map(|i| (0..6).map(|j| m[s[i]][s[j]]).collect()).collect()
}

fn rows_of<const N: usize>(a: &[[i64; N]; N]) -> Vec<Vec<i64>> {
    a.iter().map(|r| r.to_vec()).collect()
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

pub fn picard_data(conf: &LineConfiguration) -> Result<PicardData> {
    let selection = select_basis(conf)?;
    let b0 = selection.lines;
    let gram0: Vec<Vec<i64>> = (0..6).map(|i| (0..6).map(|j| conf.incidence[b0[i]][b0[j]]).collect()).collect();
    let classes0: Vec<Vec<i64>> = (0..16)
        .map(|l| {
            let rhs: Vec<i64> = b0.iter().map(|&j| conf.incidence[l][j]).collect();
            expand(&gram0, &rhs)
        })
        .collect::<Result<_>>()?;
    // column j = class of the image of L_{j+1}
    let action0 = |perm: &[usize]| -> Vec<Vec<i64>> {
        transpose(&b0.iter().map(|&l| classes0[perm[l]].clone()).collect::<Vec<_>>())
    };
    let beta0 = action0(&conf.beta_perm);
    let gamma0 = action0(&conf.gamma_perm);
    let minus_k0 = expand(&gram0, &[1; 6])?;

    let ref_gram = rows_of(&REFERENCE_GRAM);
    let ref_beta = transpose(&rows_of(&REFERENCE_B_ROWS));
    let ref_gamma = transpose(&rows_of(&REFERENCE_C_ROWS));
    let candidates = allowed_relabelings();
    let score = |s: &[usize; 6]| Alignment {
        relabeling: *s,
        gram: relabel(&gram0, s) == ref_gram,
        beta: relabel(&beta0, s) == ref_beta,
        gamma: relabel(&gamma0, s) == ref_gamma,
        minus_k: (0..6).all(|i| minus_k0[s[i]] == REFERENCE_MINUS_K[i]),
        candidates_tried: candidates.len(),
    };
    let alignment = candidates
        .iter()
        .map(score)
        .find(Alignment::full)
        .unwrap_or_else(|| score(&[0, 1, 2, 3, 4, 5]));
    let s = alignment.relabeling;
    let basis = [b0[s[0]], b0[s[1]], b0[s[2]], b0[s[3]], b0[s[4]], b0[s[5]]];
    let mat = |m: &[Vec<i64>]| IntMatrix::from_rows(&relabel(m, &s));
    Ok(PicardData {
        gram: mat(&gram0)?,
        beta: mat(&beta0)?,
        gamma: mat(&gamma0)?,
        minus_k: (0..6).map(|i| minus_k0[s[i]]).collect(),
        line_classes: classes0.iter().map(|c| (0..6).map(|i| c[s[i]]).collect()).collect(),
        selection,
        alignment,
        basis,
    })
}

fn small(m: &IntMatrix) -> Result<SmallMat> {
    let rows = m.to_i64_rows().ok_or_else(|| Error::Shape("matrix entries overflow".into()))?;
    SmallMat::from_rows(&rows)
}

impl PicardData {
    /// Intersection product in the aligned basis.
    pub fn dot(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..6 {
            for j in 0..6 {
                let g = i64::try_from(self.gram.get(i, j)).unwrap_or(0);
                s += a[i] * g * b[j];
            }
        }
        s
    }

    /// The group generated by the two action matrices, `beta` first.
    pub fn image_group(&self) -> Result<Arc<FinGroup>> {
        let gens = [GroupElement::Matrix(small(&self.beta)?), GroupElement::Matrix(small(&self.gamma)?)];
        Ok(Arc::new(FinGroup::close_generators(&gens, DEFAULT_GROUP_CAP)?))
    }

    /// `Pic` as a lattice for the image group, with its intersection form.
    pub fn lattice(&self) -> Result<GLattice> {
        GLattice::from_matrix_group(self.image_group()?)?.with_form(self.gram.clone())
    }

    /// Sum of the classes of the given lines.
    pub fn class_sum(&self, lines: &[usize]) -> Vec<i64> {
        (0..6).map(|i| lines.iter().map(|&l| self.line_classes[l][i]).sum()).collect()
    }
}
