//! Row reduction over cyclotomic fields.

use crate::exactnum::CycNum;
use crate::{Error, Result};

pub type CycMatrix = Vec<Vec<CycNum>>;

/// Reduced row echelon form; zero rows are dropped, pivots are 1.
pub fn rref(m: &[Vec<CycNum>]) -> Result<CycMatrix> {
    let mut a: CycMatrix = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv()?;
        a[r] = a[r].iter().map(|x| x * &inv).collect();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    Ok(a)
}

pub fn rank(m: &[Vec<CycNum>]) -> Result<usize> {
    Ok(rref(m)?.len())
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &[Vec<CycNum>], b: &[CycNum]) -> Result<Vec<CycNum>> {
    let n = a.len();
    let aug: CycMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain([rhs.clone()]).collect())
        .collect();
    let red = rref(&aug)?;
    if red.len() != n || (0..n).any(|i| !red[i][i].is_one()) {
        return Err(Error::GeometryInconsistency("singular linear system".into()));
    }
    Ok(red.iter().map(|row| row[n].clone()).collect())
}

/// `g x` for a square matrix `g` and a column vector `x`.
pub fn apply(g: &[Vec<CycNum>], x: &[CycNum]) -> Vec<CycNum> {
    g.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn int_matrix(rows: &[Vec<i64>]) -> CycMatrix {
    rows.iter().map(|r| r.iter().map(|&x| CycNum::from_int(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_q_zeta3() {
        let z = CycNum::zeta(3).unwrap();
        let one = CycNum::one();
        // (1, z) and (z, z^2) are proportional
        let m = vec![vec![one.clone(), z.clone()], vec![z.clone(), &z * &z]];
        assert_eq!(rank(&m).unwrap(), 1);
        let m = vec![vec![one.clone(), z.clone()], vec![z.clone(), one.clone()]];
        assert_eq!(rank(&m).unwrap(), 2);
        assert_eq!(rref(&m).unwrap(), int_matrix(&[vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn solve_small_system() {
        let a = int_matrix(&[vec![2, 1], vec![1, 1]]);
        let b = vec![CycNum::from_int(3), CycNum::from_int(2)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![CycNum::from_int(1), CycNum::from_int(1)]);
        assert!(solve(&int_matrix(&[vec![1, 1], vec![1, 1]]), &b).is_err());
    }
}
