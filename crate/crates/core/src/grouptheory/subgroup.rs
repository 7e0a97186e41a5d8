use std::collections::HashSet;

use super::group::FinGroup;

/// A subgroup given by its sorted element indices in the parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
    is_cyclic: bool,
    is_normal: bool,
}

impl Subgroup {
    /// The subgroup generated by the given element indices.
    pub fn generated_by(group: &FinGroup, gens: &[usize]) -> Subgroup {
        let elements = closure(group, gens);
        Self::from_elements(group, elements, gens.to_vec())
    }

    pub fn whole(group: &FinGroup) -> Subgroup {
        Self::generated_by(group, group.generators())
    }

    pub fn trivial(group: &FinGroup) -> Subgroup {
        Self::generated_by(group, &[])
    }

    fn from_elements(group: &FinGroup, elements: Vec<usize>, generators: Vec<usize>) -> Subgroup {
        let n = elements.len();
        let is_cyclic = elements.iter().any(|&x| group.element_order(x) == n);
        let members: HashSet<usize> = elements.iter().copied().collect();
        let is_normal = group
            .generators()
            .iter()
            .all(|&g| elements.iter().all(|&h| members.contains(&group.conjugate(h, g))));
        Subgroup { elements, generators, is_cyclic, is_normal }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_cyclic
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// An element generating the subgroup, if it is cyclic.
    pub fn cyclic_generator(&self, group: &FinGroup) -> Option<usize> {
        self.elements
            .iter()
            .copied()
            .find(|&x| group.element_order(x) == self.order())
    }

    /// The sorted element set of `g H g^-1`.
    pub fn conjugate_elements(&self, group: &FinGroup, g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements.iter().map(|&h| group.conjugate(h, g)).collect();
        out.sort_unstable();
        out
    }

    /// Left coset representatives: the least element of each coset `gH`.
    pub fn left_coset_representatives(&self, group: &FinGroup) -> Vec<usize> {
        let mut covered = vec![false; group.order()];
        let mut reps = Vec::new();
        for g in 0..group.order() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &h in &self.elements {
                covered[group.mul(g, h)] = true;
            }
        }
        reps
    }
}

fn closure(group: &FinGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let id = group.identity();
    seen[id] = true;
    let mut out = vec![id];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for &g in gens {
                let y = group.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    out.sort_unstable();
    out
}

/// All subgroups of `group`, each exactly once, sorted by order and then by
/// element list.
///
/// Cyclic subgroups are joined with existing subgroups until no new subgroup
/// appears; every subgroup is the join of its cyclic subgroups, so the
/// iteration reaches all of them.
pub fn enumerate_subgroups(group: &FinGroup) -> Vec<Subgroup> {
    let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for x in 0..group.order() {
        let c = closure(group, &[x]);
        if seen.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut all: Vec<(Vec<usize>, Vec<usize>)> =
        cyclic.iter().map(|(x, c)| (c.clone(), vec![*x])).collect();
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for (x, _) in &cyclic {
                if all[i].0.binary_search(x).is_ok() {
                    continue;
                }
                let mut gens = all[i].1.clone();
                gens.push(*x);
                let joined = closure(group, &gens);
                if seen.insert(joined.clone()) {
                    all.push((joined, gens));
                    next.push(all.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let mut subgroups: Vec<Subgroup> = all
        .into_iter()
        .map(|(els, gens)| Subgroup::from_elements(group, els, gens))
        .collect();
    subgroups.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    subgroups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::element::{GroupElement, Perm};

    fn group(gens: &[&str], n: usize) -> FinGroup {
        let gens: Vec<GroupElement> = gens
            .iter()
            .map(|s| GroupElement::Perm(Perm::parse_cycles(s, n).unwrap()))
            .collect();
        FinGroup::close_generators(&gens, 1000).unwrap()
    }

    #[test]
    fn cyclic_four() {
        let g = group(&["(1,2,3,4)"], 4);
        let orders: Vec<usize> = enumerate_subgroups(&g).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn klein_four() {
        let g = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        let subs = enumerate_subgroups(&g);
        assert_eq!(subs.iter().filter(|s| s.order() == 2).count(), 3);
        assert_eq!(subs.len(), 5);
        assert!(!subs[4].is_cyclic());
        assert!(subs.iter().all(Subgroup::is_normal));
    }

    #[test]
    fn s4_subgroup_lattice() {
        let g = group(&["(1,2,3,4)", "(1,2)"], 4);
        let subs = enumerate_subgroups(&g);
        assert_eq!(subs.len(), 30);
        for s in &subs {
            assert_eq!(24 % s.order(), 0);
            for x in 0..g.order() {
                let conj = s.conjugate_elements(&g, x);
                assert!(subs.iter().any(|t| t.elements() == conj.as_slice()));
            }
        }
        assert_eq!(subs.iter().filter(|s| s.is_normal()).count(), 4);
    }

    #[test]
    fn coset_representatives() {
        let g = group(&["(1,2,3)", "(1,2)"], 3);
        let h = Subgroup::generated_by(&g, &[g.evaluate_word("b", &["a".into(), "b".into()]).unwrap()]);
        let reps = h.left_coset_representatives(&g);
        assert_eq!(reps.len(), 3);
        assert_eq!(reps[0], 0);
    }
}
