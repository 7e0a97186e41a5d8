//! sl2 weight calculus on `Sym^n(k^2)` and its exterior square.
//!
//! Operators are stored column-wise: column `j` of `X` is `X(e_j)`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{fmt_rat, int, BigRat};

pub type RatMatrix = Vec<Vec<BigRat>>;

fn zeros(n: usize) -> RatMatrix {
    vec![vec![BigRat::zero(); n]; n]
}

fn matmul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

fn commutator(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let ab = matmul(a, b);
    let ba = matmul(b, a);
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

fn scaled(a: &RatMatrix, k: i64) -> RatMatrix {
    a.iter().map(|r| r.iter().map(|x| x * int(k)).collect()).collect()
}

/// A finite-dimensional sl2-module with a weight basis.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightModule {
    pub weights: Vec<i64>,
    pub labels: Vec<String>,
    pub h: RatMatrix,
    pub x: RatMatrix,
    pub y: RatMatrix,
}

/// Result of checking the defining relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub hx: bool,
    pub hy: bool,
    pub xy: bool,
    pub h_diagonal: bool,
}

impl RelationCheck {
    pub fn all(&self) -> bool {
        self.hx && self.hy && self.xy && self.h_diagonal
    }
}

impl WeightModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn check_relations(&self) -> RelationCheck {
        let n = self.dim();
        RelationCheck {
            hx: commutator(&self.h, &self.x) == scaled(&self.x, 2),
            hy: commutator(&self.h, &self.y) == scaled(&self.y, -2),
            xy: commutator(&self.x, &self.y) == self.h,
            h_diagonal: (0..n).all(|i| {
                (0..n).all(|j| if i == j { self.h[i][i] == int(self.weights[i]) } else { self.h[i][j].is_zero() })
            }),
        }
    }

    fn apply(m: &RatMatrix, v: &[BigRat]) -> Vec<BigRat> {
        m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn apply_x(&self, v: &[BigRat]) -> Vec<BigRat> {
        Self::apply(&self.x, v)
    }

    pub fn apply_y(&self, v: &[BigRat]) -> Vec<BigRat> {
        Self::apply(&self.y, v)
    }

    pub fn apply_h(&self, v: &[BigRat]) -> Vec<BigRat> {
        Self::apply(&self.h, v)
    }

    /// Coefficient `c` with `X(e_j) = c e_i`, for chains where that is the only entry.
    pub fn x_coefficients(&self) -> Vec<BigRat> {
        (0..self.dim())
            .map(|j| (0..self.dim()).map(|i| self.x[i][j].clone()).find(|c| !c.is_zero()).unwrap_or_else(BigRat::zero))
            .collect()
    }

    /// E.g. `3 w2∧w0 - 2 w4∧w-2`.
    pub fn render(&self, v: &[BigRat]) -> String {
        let mut out = String::new();
        for (c, label) in v.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if mag.is_one() { label.clone() } else { format!("{} {label}", fmt_rat(&mag)) };
            if out.is_empty() {
                out = if c.is_negative() { format!("-{term}") } else { term };
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    /// Coordinates of a basis vector by label.
    pub fn basis_vector(&self, label: &str) -> Option<Vec<BigRat>> {
        let i = self.labels.iter().position(|l| l == label)?;
        Some((0..self.dim()).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }).collect())
    }

    /// Vector from `(coefficient, label)` terms.
    pub fn combination(&self, terms: &[(i64, &str)]) -> Option<Vec<BigRat>> {
        let mut v = vec![BigRat::zero(); self.dim()];
        for &(c, l) in terms {
            let i = self.labels.iter().position(|x| x == l)?;
            v[i] += int(c);
        }
        Some(v)
    }
}

/// `Sym^n(k^2)` with basis `w_n, w_{n-2}, .., w_{-n}`, `Y(w_l) = w_{l-2}`.
pub fn sym_module(n: usize) -> WeightModule {
    let d = n + 1;
    let weights: Vec<i64> = (0..d).map(|k| n as i64 - 2 * k as i64).collect();
    let labels = weights.iter().map(|w| format!("w{w}")).collect();
    let mut h = zeros(d);
    let mut x = zeros(d);
    let mut y = zeros(d);
    for k in 0..d {
        h[k][k] = int(weights[k]);
        if k + 1 < d {
            y[k + 1][k] = BigRat::one();
        }
        if k > 0 {
            // forced by [X, Y] = H along the chain
            x[k - 1][k] = int((k * (n - k + 1)) as i64);
        }
    }
    WeightModule { weights, labels, h, x, y }
}

/// `∧^2 M` with basis `e_i ∧ e_j`, `i < j`, operators by the Leibniz rule.
#[derive(Clone, Debug, PartialEq)]
pub struct WedgeModule {
    pub base: WeightModule,
    pub pairs: Vec<(usize, usize)>,
    pub module: WeightModule,
}

impl WedgeModule {
    pub fn new(base: WeightModule) -> Self {
        let n = base.dim();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let induce = |m: &RatMatrix| -> RatMatrix {
            let mut out = zeros(pairs.len());
            for (col, &(i, j)) in pairs.iter().enumerate() {
                // g(e_i) ∧ e_j + e_i ∧ g(e_j)
                for (k, (a, b)) in (0..n).map(|k| (k, (m[k][i].clone(), m[k][j].clone()))) {
                    for (coef, p, q) in [(a, k, j), (b, i, k)] {
                        if coef.is_zero() || p == q {
                            continue;
                        }
                        let (row, sign) = if p < q { (index[&(p, q)], 1) } else { (index[&(q, p)], -1) };
                        out[row][col] += coef * int(sign);
                    }
                }
            }
            out
        };
        let weights = pairs.iter().map(|&(i, j)| base.weights[i] + base.weights[j]).collect();
        let labels = pairs.iter().map(|&(i, j)| format!("{}∧{}", base.labels[i], base.labels[j])).collect();
        let module = WeightModule { weights, labels, h: induce(&base.h), x: induce(&base.x), y: induce(&base.y) };
        WedgeModule { base, pairs, module }
    }
}

fn primitive(v: &mut [BigRat]) {
    let den = v.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums: Vec<_> = v.iter().map(|x| (x * BigRat::from_integer(den.clone())).to_integer()).collect();
    let g = nums.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let sign = if nums.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) { -1 } else { 1 };
    for (slot, n) in v.iter_mut().zip(nums) {
        *slot = BigRat::from_integer(n * sign / &g);
    }
}

/// Kernel of a rational matrix (rows of equations) as column vectors.
fn rational_kernel(rows: &RatMatrix, ncols: usize) -> Vec<Vec<BigRat>> {
    let mut m = rows.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRat::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRat::zero(); ncols];
            v[free] = BigRat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

/// Basis of `ker X` in the weight-`lambda` space, each vector integral,
/// primitive, with first nonzero coordinate positive.
pub fn highest_weight_vectors(m: &WeightModule, lambda: i64) -> Vec<Vec<BigRat>> {
    let idx: Vec<usize> = (0..m.dim()).filter(|&i| m.weights[i] == lambda).collect();
    let rows: RatMatrix = m.x.iter().map(|row| idx.iter().map(|&j| row[j].clone()).collect()).collect();
    rational_kernel(&rows, idx.len())
        .into_iter()
        .map(|k| {
            let mut v = vec![BigRat::zero(); m.dim()];
            for (c, &i) in k.into_iter().zip(&idx) {
                v[i] = c;
            }
            primitive(&mut v);
            debug_assert!(m.apply_x(&v).iter().all(Zero::is_zero));
            v
        })
        .collect()
}

/// `[v, Y v, .., Y^steps v]`.
pub fn lowering_orbit(m: &WeightModule, v: &[BigRat], steps: usize) -> Vec<Vec<BigRat>> {
    let mut out = vec![v.to_vec()];
    for _ in 0..steps {
        let next = m.apply_y(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// `c` with `v = c * reference`, if any.
pub fn scalar_multiple(v: &[BigRat], reference: &[BigRat]) -> Option<BigRat> {
    let i = reference.iter().position(|x| !x.is_zero())?;
    let c = &v[i] / &reference[i];
    v.iter().zip(reference).all(|(a, b)| *a == &c * b).then_some(c)
}

/// Irreducible summands `Sym^m` of `∧^2 Sym^n` with multiplicities, by weight counting.
pub fn decompose_wedge(n: usize) -> Vec<(usize, usize)> {
    let w = WedgeModule::new(sym_module(n)).module;
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in &w.weights {
        *mult.entry(x).or_default() += 1;
    }
    let at = |k: i64| mult.get(&k).copied().unwrap_or(0);
    let mut out: Vec<(usize, usize)> = mult
        .keys()
        .filter(|&&k| k >= 0)
        .filter_map(|&k| {
            let c = at(k) - at(k + 2);
            (c > 0).then_some((k as usize, c))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Highest-weight vectors and lowering chains of every summand of `∧^2 Sym^n`.
#[derive(Clone, Debug)]
pub struct WedgeBasisReport {
    pub n: usize,
    pub module: WeightModule,
    pub summands: Vec<(usize, usize)>,
    pub chains: Vec<(usize, Vec<Vec<BigRat>>)>,
}

pub fn wedge_basis_report(n: usize) -> WedgeBasisReport {
    let module = WedgeModule::new(sym_module(n)).module;
    let summands = decompose_wedge(n);
    let mut chains = Vec::new();
    for &(m, _) in &summands {
        for v in highest_weight_vectors(&module, m as i64) {
            chains.push((m, lowering_orbit(&module, &v, m)));
        }
    }
    WedgeBasisReport { n, module, summands, chains }
}

impl fmt::Display for WedgeBasisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(m, c)| if *c == 1 { format!("Sym^{m}") } else { format!("{c} Sym^{m}") })
            .collect();
        writeln!(f, "∧^2 Sym^{} = {}", self.n, parts.join(" + "))?;
        for (m, chain) in &self.chains {
            writeln!(f, "Sym^{m}:")?;
            for (k, v) in chain.iter().enumerate() {
                writeln!(f, "  x{} = {}", *m as i64 - 2 * k as i64, self.module.render(v))?;
            }
        }
        Ok(())
    }
}
