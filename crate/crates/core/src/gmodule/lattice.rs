use std::collections::VecDeque;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intmat::{coordinates, kernel, smith_normal_form, IntMatrix};
use crate::grouptheory::{enumerate_subgroups, FinGroup, Subgroup};
use crate::{Error, Result};

/// A lattice `Z^rank` with a group acting on column vectors.
#[derive(Clone, Debug)]
pub struct GLattice {
    rank: usize,
    group: Arc<FinGroup>,
    /// action matrix of every group element, by element index
    action: Vec<IntMatrix>,
    form: Option<IntMatrix>,
}

impl GLattice {
    /// `gens[i]` is the action of the i-th generator of `group`. The
    /// assignment is extended along the multiplication table and then
    /// checked to be a homomorphism on all pairs.
    pub fn new(group: Arc<FinGroup>, gens: Vec<IntMatrix>) -> Result<Self> {
        let gidx = group.generators().to_vec();
        if gens.len() != gidx.len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} generators",
                gens.len(),
                gidx.len()
            )));
        }
        let rank = gens.first().map_or(0, IntMatrix::rows);
        for m in &gens {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::Shape("action matrices must be square of equal size".into()));
            }
            if !m.det()?.abs_is_one() {
                return Err(Error::BadGenerator(format!("action matrix {m} is not invertible over Z")));
            }
        }
        let n = group.order();
        let mut action: Vec<Option<IntMatrix>> = vec![None; n];
        action[group.identity()] = Some(IntMatrix::identity(rank));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in gidx.iter().enumerate() {
                let y = group.mul(x, g);
                if action[y].is_none() {
                    action[y] = Some(action[x].as_ref().unwrap().mul(&gens[k])?);
                    queue.push_back(y);
                }
            }
        }
        let action: Vec<IntMatrix> = action.into_iter().map(Option::unwrap).collect();
        for a in 0..n {
            for b in 0..n {
                if action[a].mul(&action[b])? != action[group.mul(a, b)] {
                    return Err(Error::BadGenerator(
                        "generator matrices do not define a homomorphism".into(),
                    ));
                }
            }
        }
        Ok(GLattice { rank, group, action, form: None })
    }

    /// A group of integer matrices acting on its own lattice.
    pub fn from_matrix_group(group: Arc<FinGroup>) -> Result<Self> {
        let gens = group
            .generators()
            .iter()
            .map(|&g| {
                let m = group
                    .element(g)
                    .as_matrix()
                    .ok_or_else(|| Error::Shape("group is not a matrix group".into()))?;
                IntMatrix::from_rows(&m.rows())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, gens)
    }

    /// Attaches a bilinear form, which must be invariant: `g^T F g = F`.
    pub fn with_form(mut self, form: IntMatrix) -> Result<Self> {
        for &g in self.group.generators() {
            let m = &self.action[g];
            if m.transpose().mul(&form)?.mul(m)? != form {
                return Err(Error::BadGenerator("form is not invariant".into()));
            }
        }
        self.form = Some(form);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn form(&self) -> Option<&IntMatrix> {
        self.form.as_ref()
    }

    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    /// The dual lattice, `g` acting by `(g^-1)^T`.
    pub fn dual(&self) -> GLattice {
        let action = (0..self.group.order())
            .map(|g| self.action[self.group.inv(g)].transpose())
            .collect();
        GLattice { rank: self.rank, group: self.group.clone(), action, form: None }
    }

    /// Saturated basis (as columns) of the vectors fixed by every element of `h`.
    pub fn invariant_sublattice(&self, h: &Subgroup) -> Result<IntMatrix> {
        let id = IntMatrix::identity(self.rank);
        let blocks = h
            .generators()
            .iter()
            .map(|&g| self.action[g].sub(&id))
            .collect::<Result<Vec<_>>>()?;
        let stacked = IntMatrix::vstack(&blocks, self.rank)?;
        Ok(kernel(&stacked))
    }

    /// Invariant factors of `H^1(h, M)` other than 1, from the bar resolution.
    ///
    /// Cochains are the values `f(g)` for `g != 1`; cocycles satisfy
    /// `f(gk) = f(g) + g f(k)` for all pairs. `Z^1` is saturated in the
    /// cochain lattice, so the torsion of `Z^1 / B^1` is read off from the
    /// Smith form of the coboundary map once the ranks agree.
    pub fn h1(&self, h: &Subgroup) -> Result<Vec<BigInt>> {
        let r = self.rank;
        let g = &self.group;
        let elems: Vec<usize> = h.elements().iter().copied().filter(|&x| x != g.identity()).collect();
        let slot = |x: usize| elems.iter().position(|&y| y == x);
        let n = elems.len() * r;
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut cocycle = IntMatrix::zeros(elems.len() * elems.len() * r, n);
        let mut row = 0;
        for &a in &elems {
            for &b in &elems {
                // f(ab) - f(a) - a f(b) = 0
                let sa = slot(a).unwrap() * r;
                let sb = slot(b).unwrap() * r;
                let ma = &self.action[a];
                for i in 0..r {
                    if let Some(sab) = slot(g.mul(a, b)) {
                        let x = cocycle.get(row + i, sab * r + i) + 1;
                        cocycle.set(row + i, sab * r + i, x);
                    }
                    let x = cocycle.get(row + i, sa + i) - 1;
                    cocycle.set(row + i, sa + i, x);
                    for j in 0..r {
                        let x = cocycle.get(row + i, sb + j) - ma.get(i, j);
                        cocycle.set(row + i, sb + j, x);
                    }
                }
                row += r;
            }
        }
        let z1 = kernel(&cocycle);
        // coboundaries f(g) = g m - m
        let id = IntMatrix::identity(r);
        let blocks = elems
            .iter()
            .map(|&x| self.action[x].sub(&id))
            .collect::<Result<Vec<_>>>()?;
        let delta = IntMatrix::vstack(&blocks, r)?;
        if !cocycle.mul(&delta)?.is_zero() {
            return Err(Error::Shape("coboundaries are not cocycles".into()));
        }
        let snf = smith_normal_form(&delta);
        if snf.rank() != z1.cols() {
            return Err(Error::Shape(format!(
                "H^1 has free rank {}, impossible for a finite group",
                z1.cols() - snf.rank()
            )));
        }
        Ok(snf.diagonal().into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect())
    }

    /// `H^1` of a cyclic group `<g>` as `ker(N) / im(g - 1)`.
    pub fn h1_cyclic(&self, g: usize) -> Result<Vec<BigInt>> {
        let grp = &self.group;
        let r = self.rank;
        let mut norm = IntMatrix::zeros(r, r);
        let mut x = grp.identity();
        for _ in 0..grp.element_order(g) {
            norm = norm.add(&self.action[x])?;
            x = grp.mul(x, g);
        }
        let ker = kernel(&norm);
        let img = self.action[g].sub(&IntMatrix::identity(r))?;
        if ker.cols() == 0 {
            return Ok(Vec::new());
        }
        let coords = coordinates(&ker, &img)?;
        let snf = smith_normal_form(&coords);
        Ok(snf.nontrivial_divisors())
    }

    /// `H^1` of every subgroup, for the lattice and its dual.
    pub fn h1_all_subgroups(&self) -> Result<H1Report> {
        let dual = self.dual();
        let mut rows = Vec::new();
        for h in enumerate_subgroups(&self.group) {
            let divisors = self.h1(&h)?;
            let dual_divisors = dual.h1(&h)?;
            let cyclic_agrees = match h.cyclic_generator(&self.group) {
                Some(g) => Some(
                    self.h1_cyclic(g)? == divisors && dual.h1_cyclic(g)? == dual_divisors,
                ),
                None => None,
            };
            rows.push(H1Row {
                order: h.order(),
                generators: h.generators().to_vec(),
                cyclic: h.is_cyclic(),
                divisors,
                dual_divisors,
                cyclic_agrees,
            });
        }
        Ok(H1Report { rows })
    }
}

trait AbsIsOne {
    fn abs_is_one(&self) -> bool;
}

impl AbsIsOne for BigInt {
    fn abs_is_one(&self) -> bool {
        self.is_one() || (-self).is_one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Row {
    pub order: usize,
    pub generators: Vec<usize>,
    pub cyclic: bool,
    pub divisors: Vec<BigInt>,
    pub dual_divisors: Vec<BigInt>,
    /// Agreement with the `ker N / im(g-1)` formula, for cyclic subgroups.
    pub cyclic_agrees: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct H1Report {
    pub rows: Vec<H1Row>,
}

impl H1Report {
    /// True when `H^1` vanishes for every subgroup, on both sides.
    pub fn passes(&self) -> bool {
        self.rows.iter().all(|r| r.divisors.is_empty() && r.dual_divisors.is_empty())
    }

    pub fn first_failure(&self) -> Option<&H1Row> {
        self.rows.iter().find(|r| !r.divisors.is_empty() || !r.dual_divisors.is_empty())
    }

    pub fn cross_checks_agree(&self) -> bool {
        self.rows.iter().all(|r| r.cyclic_agrees != Some(false))
    }
}

pub fn fmt_divisors(d: &[BigInt]) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter()
        .map(|x| if x.is_zero() { "Z".to_string() } else { format!("Z/{x}") })
        .collect::<Vec<_>>()
        .join(" + ")
}
