use std::collections::{HashMap, HashSet};

use super::element::GroupElement;
use crate::{Error, Result};

/// A conjugacy class; `representative` is its least element in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    pub elements: Vec<usize>,
    pub element_order: usize,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// A finite group with all elements enumerated.
///
/// Elements are indexed in canonical order (lexicographic on the byte
/// encoding). Classes are ordered by `(element order, class size,
/// representative)`, so the identity class is always class 0.
#[derive(Clone, Debug)]
pub struct FinGroup {
    generators: Vec<usize>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    table: Vec<u32>,
    inverse: Vec<usize>,
    identity: usize,
    element_order: Vec<usize>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

pub const DEFAULT_GROUP_CAP: usize = 5000;

impl FinGroup {
    /// Enumerates the group generated by `gens`.
    pub fn close_generators(gens: &[GroupElement], cap: usize) -> Result<FinGroup> {
        let first = gens
            .first()
            .ok_or_else(|| Error::BadGenerator("no generators given".into()))?;
        let id = first.identity_like();
        for g in gens {
            if let GroupElement::Matrix(m) = g {
                let d = m.det();
                if d != 1 && d != -1 {
                    return Err(Error::BadGenerator(format!("matrix {g} has determinant {d}")));
                }
            }
            id.compose(g)?;
        }
        let mut seen: HashSet<GroupElement> = HashSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in gens {
                    let y = x.compose(g)?;
                    if !seen.contains(&y) {
                        if seen.len() >= cap {
                            return Err(Error::GroupTooLarge(cap));
                        }
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<GroupElement> = seen.into_iter().collect();
        elements.sort_by_cached_key(GroupElement::encoding);
        Self::from_sorted_elements(elements, gens)
    }

    fn from_sorted_elements(elements: Vec<GroupElement>, gens: &[GroupElement]) -> Result<FinGroup> {
        let n = elements.len();
        let index: HashMap<GroupElement, usize> =
            elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = a.compose(b)?;
                table[i * n + j] = *index
                    .get(&c)
                    .ok_or_else(|| Error::BadGenerator("element set is not closed".into()))?
                    as u32;
            }
        }
        let identity = elements
            .iter()
            .position(GroupElement::is_identity)
            .expect("closure contains the identity");
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] as usize == identity {
                    inverse[i] = j;
                    break;
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let mut group = FinGroup {
            generators,
            elements,
            index,
            table,
            inverse,
            identity,
            element_order: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.element_order = (0..n).map(|i| group.compute_order(i)).collect();
        group.build_classes();
        Ok(group)
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    fn build_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<ConjClass> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| self.conjugate(x, g)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = raw.len();
            }
            raw.push(ConjClass {
                representative: x,
                elements: members,
                element_order: self.element_order[x],
            });
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| (raw[c].element_order, raw[c].size(), raw[c].representative));
        let mut renumber = vec![0; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        self.classes = order.iter().map(|&c| raw[c].clone()).collect();
        self.class_of = class_of.into_iter().map(|c| renumber[c]).collect();
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Generator element indices, in the order they were supplied.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let ord = self.element_order[x] as i64;
        let k = k.rem_euclid(ord);
        let mut y = self.identity;
        for _ in 0..k {
            y = self.mul(y, x);
        }
        y
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_order[x]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        use num_integer::Integer;
        self.element_order.iter().fold(1, |a, &b| a.lcm(&b))
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Class of `g^k` for any `g` in class `class_idx`.
    pub fn power_class(&self, class_idx: usize, k: i64) -> usize {
        let rep = self.classes[class_idx].representative;
        self.class_of[self.pow(rep, k)]
    }

    /// Evaluates a word such as `a^3*b*a^-1` in the named generators; `1`
    /// denotes the identity.
    pub fn evaluate_word(&self, word: &str, names: &[String]) -> Result<usize> {
        let word: String = word.chars().filter(|c| !c.is_whitespace()).collect();
        let mut acc = self.identity;
        if word.is_empty() || word == "1" {
            return Ok(acc);
        }
        for factor in word.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in word {word:?}")))?,
                ),
                None => (factor, 1),
            };
            let gi = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?} in {word:?}")))?;
            let g = *self
                .generators
                .get(gi)
                .ok_or_else(|| Error::Parse(format!("generator {name:?} has no element")))?;
            acc = self.mul(acc, self.pow(g, exp));
        }
        Ok(acc)
    }

    /// True when both groups consist of the same elements.
    pub fn same_as(&self, other: &FinGroup) -> bool {
        std::ptr::eq(self, other) || self.elements == other.elements
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::element::{Perm, SmallMat};

    fn perm(s: &str, n: usize) -> GroupElement {
        GroupElement::Perm(Perm::parse_cycles(s, n).unwrap())
    }

    #[test]
    fn trivial_and_cyclic_groups() {
        let g = FinGroup::close_generators(&[perm("()", 3)], 10).unwrap();
        assert_eq!(g.order(), 1);
        let c3 = FinGroup::close_generators(&[perm("(1,2,3)", 3)], 10).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.num_classes(), 3);
    }

    #[test]
    fn s4_class_structure() {
        let g = FinGroup::close_generators(&[perm("(1,2,3,4)", 4), perm("(1,2)", 4)], 100).unwrap();
        assert_eq!(g.order(), 24);
        let sizes: Vec<usize> = g.classes().iter().map(ConjClass::size).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 24);
        assert_eq!(sizes, vec![1, 3, 6, 8, 6]);
        for c in g.classes() {
            assert_eq!(24 % c.size(), 0);
            for &x in &c.elements {
                assert_eq!(g.class_of(x), g.class_of(c.representative));
            }
        }
        assert_eq!(g.class_of(g.identity()), 0);
    }

    #[test]
    fn size_cap_and_bad_generators() {
        let gens = [perm("(1,2,3,4,5)", 5), perm("(1,2)", 5)];
        assert_eq!(FinGroup::close_generators(&gens, 50).unwrap_err(), Error::GroupTooLarge(50));
        let singular = GroupElement::Matrix(SmallMat::from_rows(&[vec![2]]).unwrap());
        assert!(matches!(
            FinGroup::close_generators(&[singular], 10),
            Err(Error::BadGenerator(_))
        ));
        let mixed = [perm("(1,2)", 2), perm("(1,2)", 3)];
        assert!(FinGroup::close_generators(&mixed, 10).is_err());
        assert!(FinGroup::close_generators(&[], 10).is_err());
    }

    #[test]
    fn power_maps() {
        let g = FinGroup::close_generators(&[perm("(1,2,3)", 3), perm("(1,2)", 3)], 10).unwrap();
        for c in 0..g.num_classes() {
            assert_eq!(g.power_class(c, g.classes()[c].element_order as i64), 0);
            for k1 in 1..4 {
                for k2 in 1..4 {
                    assert_eq!(g.power_class(c, k1 * k2), g.power_class(g.power_class(c, k1), k2));
                }
            }
        }
        assert_eq!(g.power_class(0, 5), 0);
    }

    #[test]
    fn words() {
        let g = FinGroup::close_generators(&[perm("(1,2,3)", 3), perm("(1,2)", 3)], 10).unwrap();
        let names = vec!["a".to_string(), "b".to_string()];
        let x = g.evaluate_word("a*b", &names).unwrap();
        assert_eq!(*g.element(x), perm("(1,2,3)", 3).compose(&perm("(1,2)", 3)).unwrap());
        assert_eq!(g.evaluate_word("a^3", &names).unwrap(), g.identity());
        assert_eq!(g.evaluate_word("a^-1", &names).unwrap(), g.evaluate_word("a^2", &names).unwrap());
        assert!(g.evaluate_word("c", &names).is_err());
    }
}
