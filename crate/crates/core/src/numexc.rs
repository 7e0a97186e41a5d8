//! Numerical obstruction to invariant exceptional sequences.
//!
//! If `v` is the class of a member of an exceptional orbit with stabilizer
//! `H`, then `chi(v, g v)` is 1 on `H` and 0 off it. On the `H`-invariant
//! sublattice these are quadratic equations in the coordinates; here they are
//! doubled to integer forms with targets 2 and 0 and shown to have no
//! solution modulo a small prime by exhaustive enumeration.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::gmodule::{GLattice, IntMatrix};
use crate::grouptheory::{enumerate_subgroups, FinGroup, Subgroup};
use crate::k0euler::EulerLattice;
use crate::{Error, Result};

pub const DEFAULT_MODULUS: u64 = 3;
/// Largest residue space searched when falling back to other primes.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Integer quadratic form `sum_{i<=j} c_ij s_i s_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadPoly {
    /// upper triangular, `coeffs[i][j]` for `i <= j`
    coeffs: Vec<Vec<i64>>,
}

impl QuadPoly {
    /// The form `s^T m s` for a square matrix `m`.
    pub fn from_matrix(m: &[Vec<i64>]) -> Self {
        let r = m.len();
        let mut coeffs = vec![vec![0; r]; r];
        for i in 0..r {
            for j in 0..r {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                coeffs[a][b] += m[i][j];
            }
        }
        QuadPoly { coeffs }
    }

    pub fn from_terms(r: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut coeffs = vec![vec![0; r]; r];
        for &(i, j, c) in terms {
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            coeffs[a][b] += c;
        }
        QuadPoly { coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.coeffs[a][b]
    }

    pub fn eval(&self, s: &[i64]) -> i64 {
        let r = self.nvars();
        let mut acc = 0;
        for i in 0..r {
            for j in i..r {
                acc += self.coeffs[i][j] * s[i] * s[j];
            }
        }
        acc
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        QuadPoly { coeffs }
    }

    pub fn scale(&self, k: i64) -> Self {
        QuadPoly { coeffs: self.coeffs.iter().map(|r| r.iter().map(|x| k * x).collect()).collect() }
    }

    /// True when every coefficient is divisible by `k`.
    pub fn divisible_by(&self, k: i64) -> bool {
        self.coeffs.iter().flatten().all(|c| c % k == 0)
    }

    pub fn divide(&self, k: i64) -> Self {
        QuadPoly { coeffs: self.coeffs.iter().map(|r| r.iter().map(|x| x / k).collect()).collect() }
    }

    /// Renders with variables named `{var}1, {var}2, ...`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        let r = self.nvars();
        for i in 0..r {
            for j in i..r {
                let c = self.coeffs[i][j];
                if c == 0 {
                    continue;
                }
                let mono = if i == j {
                    format!("{var}{}^2", i + 1)
                } else {
                    format!("{var}{}*{var}{}", i + 1, j + 1)
                };
                let mag = c.abs();
                let term = if mag == 1 { mono } else { format!("{mag}*{mono}") };
                if out.is_empty() {
                    out = if c < 0 { format!("-{term}") } else { term };
                } else {
                    out.push_str(if c < 0 { " - " } else { " + " });
                    out.push_str(&term);
                }
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("s"))
    }
}

/// One condition `2 chi(v, g v) = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    /// least element of the coset `gH`
    pub coset_rep: usize,
    pub in_subgroup: bool,
    pub poly: QuadPoly,
    pub target: i64,
}

/// The conditions on the `H`-invariant part of the lattice.
#[derive(Clone, Debug)]
pub struct OrbitConditionSystem {
    pub subgroup: Subgroup,
    /// columns: a basis of the parameter lattice inside `Lambda`
    pub basis: IntMatrix,
    pub conditions: Vec<Condition>,
}

impl OrbitConditionSystem {
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }
}

/// A finite check that no residue vector satisfies the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub modulus: u64,
    pub rank: usize,
    /// `modulus^rank` residue vectors were tried
    pub enumerated: u64,
    /// a pair of conditions whose difference alone is already infeasible,
    /// as (condition index of the identity coset, other condition index)
    pub distinguished: Option<(usize, usize)>,
}

/// `2 chi` as an integer matrix (row: first argument) on `Lambda`.
fn doubled_gram_rows(euler: &EulerLattice) -> Vec<Vec<i64>> {
    euler.doubled_gram().to_i64_rows().expect("small entries")
}

fn big_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows().expect("small entries")
}

/// `Lambda` as a module over `group`, whose generators act through the
/// Euler lattice's generators in order.
pub fn lambda_module(euler: &EulerLattice, group: Arc<FinGroup>) -> Result<GLattice> {
    let gens = euler.generators().to_vec();
    if group.generators().len() != gens.len() {
        return Err(Error::Shape("group and lattice have different generator counts".into()));
    }
    GLattice::new(group, gens)
}

/// Builds the conditions on the parameter lattice spanned by `basis`
/// (columns, all `H`-invariant).
pub fn build_system_on(
    euler: &EulerLattice,
    module: &GLattice,
    h: &Subgroup,
    basis: IntMatrix,
) -> Result<OrbitConditionSystem> {
    let group = module.group();
    let e2 = doubled_gram_rows(euler);
    let b = big_rows(&basis);
    let r = basis.cols();
    for &x in h.elements() {
        if module.action(x).mul(&basis)? != basis {
            return Err(Error::Shape("parameter basis is not invariant".into()));
        }
    }
    let form_for = |g: usize| -> Result<QuadPoly> {
        let gb = big_rows(&module.action(g).mul(&basis)?);
        // m[i][j] = b_i^T E2 (g b_j)
        let mut m = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let mut s = 0;
                for k in 0..8 {
                    for l in 0..8 {
                        s += b[k][i] * e2[k][l] * gb[l][j];
                    }
                }
                m[i][j] = s;
            }
        }
        Ok(QuadPoly::from_matrix(&m))
    };
    let mut conditions = Vec::new();
    for rep in h.left_coset_representatives(group) {
        let poly = form_for(rep)?;
        // the form only depends on the coset
        for &x in h.elements() {
            if form_for(group.mul(rep, x))? != poly {
                return Err(Error::Shape("condition depends on the coset representative".into()));
            }
        }
        let in_subgroup = h.contains(rep);
        conditions.push(Condition { coset_rep: rep, in_subgroup, poly, target: if in_subgroup { 2 } else { 0 } });
    }
    Ok(OrbitConditionSystem { subgroup: h.clone(), basis, conditions })
}

pub fn build_system(euler: &EulerLattice, module: &GLattice, h: &Subgroup) -> Result<OrbitConditionSystem> {
    let basis = module.invariant_sublattice(h)?;
    build_system_on(euler, module, h, basis)
}

/// Restricts a parameter basis to `ch(K_0)`, the vectors with `z = y.K (mod 2)`.
pub fn k0_sublattice(euler: &EulerLattice, basis: &IntMatrix) -> IntMatrix {
    let kx = euler.kx();
    let parity = |c: &[BigInt]| -> bool {
        let y: [i64; 6] = std::array::from_fn(|i| i64::try_from(&c[i + 1]).expect("small"));
        let z = i64::try_from(&c[7]).expect("small");
        (z - euler.dot(&y, &kx)).rem_euclid(2) == 1
    };
    let cols: Vec<Vec<BigInt>> = (0..basis.cols()).map(|j| basis.column(j)).collect();
    let Some(odd) = cols.iter().position(|c| parity(c)) else {
        return basis.clone();
    };
    let out: Vec<Vec<BigInt>> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if j == odd {
                c.iter().map(|x| x * 2).collect()
            } else if parity(c) {
                c.iter().zip(&cols[odd]).map(|(a, b)| a + b).collect()
            } else {
                c.clone()
            }
        })
        .collect();
    IntMatrix::from_columns(8, &out)
}

fn satisfies_mod(polys: &[(Vec<Vec<u64>>, u64)], s: &[u64], p: u64) -> bool {
    polys.iter().all(|(c, t)| {
        let r = s.len();
        let mut acc = 0u64;
        for i in 0..r {
            if s[i] == 0 {
                continue;
            }
            for j in i..r {
                acc = (acc + c[i][j] * s[i] % p * s[j]) % p;
            }
        }
        acc == *t
    })
}

fn reduce(poly: &QuadPoly, target: i64, p: u64) -> (Vec<Vec<u64>>, u64) {
    let pi = p as i64;
    let c = poly.coeffs.iter().map(|r| r.iter().map(|x| x.rem_euclid(pi) as u64).collect()).collect();
    (c, target.rem_euclid(pi) as u64)
}

/// Number of residue vectors mod `p` satisfying all `(poly, target)` pairs.
pub fn count_solutions_mod(system: &[(QuadPoly, i64)], rank: usize, p: u64) -> u64 {
    let polys: Vec<_> = system.iter().map(|(q, t)| reduce(q, *t, p)).collect();
    let mut s = vec![0u64; rank];
    let mut count = 0;
    loop {
        if satisfies_mod(&polys, &s, p) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == rank {
                return count;
            }
            s[i] += 1;
            if s[i] < p {
                break;
            }
            s[i] = 0;
            i += 1;
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Exhaustive search mod `p`; `None` when some residue vector satisfies all conditions.
pub fn infeasible_mod_p(sys: &OrbitConditionSystem, p: u64) -> Option<InfeasibilityCertificate> {
    let r = sys.rank();
    let all: Vec<(QuadPoly, i64)> = sys.conditions.iter().map(|c| (c.poly.clone(), c.target)).collect();
    if count_solutions_mod(&all, r, p) != 0 {
        return None;
    }
    let id = sys.conditions.iter().position(|c| c.in_subgroup);
    let distinguished = id.and_then(|i| {
        (0..sys.conditions.len()).filter(|&j| j != i).find(|&j| {
            let diff = sys.conditions[i].poly.sub(&sys.conditions[j].poly);
            let t = sys.conditions[i].target - sys.conditions[j].target;
            count_solutions_mod(&[(diff, t)], r, p) == 0
        })
        .map(|j| (i, j))
    });
    Some(InfeasibilityCertificate { modulus: p, rank: r, enumerated: p.pow(r as u32), distinguished })
}

/// Tries `first`, then larger odd primes while `p^rank` stays within the limit.
pub fn certify(sys: &OrbitConditionSystem, first: u64) -> Option<InfeasibilityCertificate> {
    if let Some(c) = infeasible_mod_p(sys, first) {
        return Some(c);
    }
    let r = sys.rank() as u32;
    (first + 1..)
        .filter(|&p| p % 2 == 1 && is_prime(p))
        .take_while(|&p| p.checked_pow(r).is_some_and(|n| n <= ENUMERATION_LIMIT))
        .find_map(|p| infeasible_mod_p(sys, p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupStatus {
    /// `H = G`: a single invariant class, allowed by the numerics
    WholeGroup,
    /// `H = 1` with `|G|` larger than the lattice rank
    ExcludedByOrbitLength { orbit: usize, slots: usize },
    Certified(InfeasibilityCertificate),
    Uncertified,
}

#[derive(Clone, Debug)]
pub struct SubgroupOutcome {
    pub system: Option<OrbitConditionSystem>,
    pub order: usize,
    pub cyclic: bool,
    pub invariant_rank: usize,
    pub status: SubgroupStatus,
    /// the same search on `ch(K_0)` instead of `Lambda`
    pub k0_status: Option<SubgroupStatus>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NoFullGInvariantSequence,
    Inconclusive(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NoFullGInvariantSequence => f.write_str("NO_FULL_G_INVARIANT_SEQUENCE"),
            Verdict::Inconclusive(_) => f.write_str("INCONCLUSIVE"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub group_order: usize,
    pub lattice_rank: usize,
    pub modulus: u64,
    pub subgroups: Vec<SubgroupOutcome>,
    /// rank of `Lambda^G`; below the full rank means `K_0^G != K_0`
    pub invariant_rank: usize,
    pub verdict: Verdict,
}

impl ObstructionReport {
    pub fn certified(&self) -> usize {
        self.subgroups.iter().filter(|s| matches!(s.status, SubgroupStatus::Certified(_))).count()
    }
}

/// Runs the argument for every subgroup of `group` acting on `Lambda`.
pub fn theorem_pipeline(euler: &EulerLattice, group: Arc<FinGroup>, modulus: u64) -> Result<ObstructionReport> {
    if !is_prime(modulus) {
        return Err(Error::Parse(format!("modulus {modulus} is not prime")));
    }
    let module = lambda_module(euler, group.clone())?;
    let rank = module.rank();
    let mut subgroups = Vec::new();
    let mut failure: Option<String> = None;
    for h in enumerate_subgroups(&group) {
        let basis = module.invariant_sublattice(&h)?;
        let invariant_rank = basis.cols();
        let order = h.order();
        let cyclic = h.is_cyclic();
        if order == group.order() {
            subgroups.push(SubgroupOutcome { system: None, order, cyclic, invariant_rank, status: SubgroupStatus::WholeGroup, k0_status: None });
            continue;
        }
        if order == 1 && group.order() > rank {
            let status = SubgroupStatus::ExcludedByOrbitLength { orbit: group.order(), slots: rank };
            subgroups.push(SubgroupOutcome { system: None, order, cyclic, invariant_rank, status, k0_status: None });
            continue;
        }
        let k0_basis = k0_sublattice(euler, &basis);
        let sys = build_system_on(euler, &module, &h, basis)?;
        let status = match certify(&sys, modulus) {
            Some(c) => SubgroupStatus::Certified(c),
            None => {
                failure.get_or_insert_with(|| {
                    format!("no certificate for the subgroup of order {order} generated by {:?}", h.generators())
                });
                SubgroupStatus::Uncertified
            }
        };
        let k0_sys = build_system_on(euler, &module, &h, k0_basis)?;
        let k0_status = Some(match certify(&k0_sys, modulus) {
            Some(c) => SubgroupStatus::Certified(c),
            None => SubgroupStatus::Uncertified,
        });
        subgroups.push(SubgroupOutcome { system: Some(sys), order, cyclic, invariant_rank, status, k0_status });
    }
    let invariant_rank = module.invariant_sublattice(&Subgroup::whole(&group))?.cols();
    let verdict = match failure {
        Some(f) => Verdict::Inconclusive(f),
        None if invariant_rank == rank => {
            Verdict::Inconclusive("every class may be invariant: the group fixes all of K_0".into())
        }
        None => Verdict::NoFullGInvariantSequence,
    };
    Ok(ObstructionReport { group_order: group.order(), lattice_rank: rank, modulus, subgroups, invariant_rank, verdict })
}

/// Coordinates of the columns of `m` in the saturated `basis`, when both span the same lattice.
pub fn reparametrization(basis: &IntMatrix, m: &IntMatrix) -> Result<IntMatrix> {
    let u = crate::gmodule::coordinates(basis, m)?;
    let d = u.det()?;
    if d != BigInt::from(1) && d != BigInt::from(-1) {
        return Err(Error::Shape(format!("change of parameters has determinant {d}")));
    }
    Ok(u)
}

/// True when `v` is fixed by every element of `h`.
pub fn is_invariant(module: &GLattice, h: &Subgroup, v: &IntMatrix) -> bool {
    h.elements().iter().all(|&x| module.action(x).mul(v).map(|w| &w == v).unwrap_or(false))
}

/// A parametrization of the `beta`-invariants of `Lambda`:
/// `v = (z1, -2z3, -2z3, -z2-z3, z2+3z3, z3, -3z3, z4)`.
pub const BETA_INVARIANT_PARAMETRIZATION: [[i64; 4]; 8] = [
    [1, 0, 0, 0],
    [0, 0, -2, 0],
    [0, 0, -2, 0],
    [0, -1, -1, 0],
    [0, 1, 3, 0],
    [0, 0, 1, 0],
    [0, 0, -3, 0],
    [0, 0, 0, 1],
];

/// `chi(v, v) = z1^2 + 2z2^2 + 8z2z3 + 4z3^2 + z1z4` in those parameters.
pub fn reference_self_pairing() -> QuadPoly {
    QuadPoly::from_terms(4, &[(0, 0, 1), (1, 1, 2), (1, 2, 8), (2, 2, 4), (0, 3, 1)])
}

/// `chi(v, gamma v) = z1^2 - z2^2 - 4z2z3 - 8z3^2 + z1z4`.
pub fn reference_cross_pairing() -> QuadPoly {
    QuadPoly::from_terms(4, &[(0, 0, 1), (1, 1, -1), (1, 2, -4), (2, 2, -8), (0, 3, 1)])
}

/// The conditions for `H = <beta>` in the parameters above, compared with
/// the reference forms.
#[derive(Clone, Debug)]
pub struct BetaCheck {
    pub system: OrbitConditionSystem,
    /// change of parameters from the saturated invariant basis
    pub reparametrization: IntMatrix,
    /// `chi(v, v)`, undoubled
    pub self_pairing: QuadPoly,
    /// `chi(v, g v)` for the coset of `gamma` and of `gamma^2`
    pub cross_pairings: Vec<(usize, QuadPoly)>,
    pub difference: QuadPoly,
    pub certificate: Option<InfeasibilityCertificate>,
}

impl BetaCheck {
    pub fn matches_reference(&self) -> bool {
        self.self_pairing == reference_self_pairing()
            && self.cross_pairings.iter().any(|(_, q)| *q == reference_cross_pairing())
            && self.difference == QuadPoly::from_terms(4, &[(1, 1, 3), (1, 2, 12), (2, 2, 12)])
    }
}

/// Builds the `<beta>` system on the fixed parametrization. `beta` and
/// `gamma` are the first and second generators of `group`.
pub fn beta_subgroup_check(euler: &EulerLattice, group: Arc<FinGroup>, p: u64) -> Result<BetaCheck> {
    let module = lambda_module(euler, group.clone())?;
    let beta = group.generators()[0];
    let gamma = group.generators()[1];
    let h = Subgroup::generated_by(&group, &[beta]);
    let rows: Vec<Vec<i64>> = BETA_INVARIANT_PARAMETRIZATION.iter().map(|r| r.to_vec()).collect();
    let param = IntMatrix::from_rows(&rows)?;
    let reparametrization = reparametrization(&module.invariant_sublattice(&h)?, &param)?;
    let system = build_system_on(euler, &module, &h, param)?;
    let undouble = |q: &QuadPoly| -> Result<QuadPoly> {
        if !q.divisible_by(2) {
            return Err(Error::Shape(format!("odd doubled form {q}")));
        }
        Ok(q.divide(2))
    };
    let self_cond = system.conditions.iter().find(|c| c.in_subgroup).expect("identity coset");
    let self_pairing = undouble(&self_cond.poly)?;
    let mut cross_pairings = Vec::new();
    for g in [gamma, group.mul(gamma, gamma)] {
        let cond = system
            .conditions
            .iter()
            .find(|c| h.elements().iter().any(|&x| group.mul(c.coset_rep, x) == g))
            .expect("every element lies in a coset");
        cross_pairings.push((g, undouble(&cond.poly)?));
    }
    let reference = cross_pairings
        .iter()
        .find(|(_, q)| *q == reference_cross_pairing())
        .map(|(_, q)| q.clone())
        .unwrap_or_else(|| cross_pairings[0].1.clone());
    let difference = self_pairing.sub(&reference);
    let certificate = infeasible_mod_p(&system, p);
    Ok(BetaCheck { system, reparametrization, self_pairing, cross_pairings, difference, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp4geom::{enumerate_lines, picard_data, SurfaceDP4};
    use crate::grouptheory::{GroupElement, Perm};

    fn setup() -> (EulerLattice, Arc<FinGroup>) {
        let conf = enumerate_lines(&SurfaceDP4::standard()).unwrap();
        let p = picard_data(&conf).unwrap();
        (EulerLattice::from_picard(&p).unwrap(), p.image_group().unwrap())
    }

    #[test]
    fn beta_subgroup_matches_reference() {
        let (euler, g) = setup();
        let c = beta_subgroup_check(&euler, g.clone(), 3).unwrap();
        assert_eq!(c.self_pairing, reference_self_pairing(), "{}", c.self_pairing.render("z"));
        assert!(c.matches_reference());
        assert_eq!(c.reparametrization.det().unwrap().magnitude(), &num_bigint::BigUint::from(1u8));
        let cert = c.certificate.unwrap();
        assert_eq!(cert.enumerated, 81);
        assert!(cert.distinguished.is_some());
        // the difference alone has no solution mod 3
        assert_eq!(count_solutions_mod(&[(c.difference.clone(), 1)], 4, 3), 0);
    }

    #[test]
    fn quad_poly_basics() {
        let q = QuadPoly::from_terms(2, &[(0, 0, 1), (0, 1, 2), (1, 0, 3)]);
        assert_eq!(q.coeff(0, 1), 5);
        assert_eq!(q.eval(&[1, 2]), 1 + 10);
        assert_eq!(q.render("z"), "z1^2 + 5*z1*z2");
        assert_eq!(QuadPoly::from_terms(1, &[]).render("s"), "0");
    }

    #[test]
    fn unit_equation_is_feasible() {
        let sq = QuadPoly::from_terms(1, &[(0, 0, 1)]);
        assert_eq!(count_solutions_mod(&[(sq, 1)], 1, 3), 2);
    }

    #[test]
    fn whole_group_has_one_condition() {
        let (euler, g) = setup();
        let module = lambda_module(&euler, g.clone()).unwrap();
        let sys = build_system(&euler, &module, &Subgroup::whole(&g)).unwrap();
        assert_eq!(sys.conditions.len(), 1);
        assert_eq!(sys.conditions[0].target, 2);
    }

    #[test]
    fn all_proper_subgroups_certified() {
        let (euler, g) = setup();
        let rep = theorem_pipeline(&euler, g, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::NoFullGInvariantSequence);
        assert_eq!(rep.certified(), 6);
        for s in &rep.subgroups {
            if let SubgroupStatus::Certified(c) = &s.status {
                assert_eq!(c.modulus, 3);
                assert!(matches!(&s.k0_status, Some(SubgroupStatus::Certified(k)) if k.modulus == 3));
            }
        }
        assert!(rep.invariant_rank < 8);
    }

    #[test]
    fn trivial_group_is_inconclusive() {
        let (euler, _) = setup();
        let g = Arc::new(FinGroup::close_generators(&[GroupElement::Perm(Perm::identity(1))], 1).unwrap());
        let trivial_euler = euler.with_generators(vec![IntMatrix::identity(8)]);
        let rep = theorem_pipeline(&trivial_euler, g, 3).unwrap();
        assert!(matches!(rep.verdict, Verdict::Inconclusive(_)));
    }

    #[test]
    fn soundness_on_small_rank() {
        // brute force over a box agrees with certificates for rank <= 3
        let (euler, g) = setup();
        let module = lambda_module(&euler, g.clone()).unwrap();
        for h in enumerate_subgroups(&g) {
            if h.order() == 1 || h.order() == g.order() {
                continue;
            }
            let sys = build_system(&euler, &module, &h).unwrap();
            if sys.rank() > 3 || infeasible_mod_p(&sys, 3).is_none() {
                continue;
            }
            let r = sys.rank();
            let mut s = vec![-10i64; r];
            loop {
                assert!(!sys.conditions.iter().all(|c| c.poly.eval(&s) == c.target));
                let mut i = 0;
                while i < r {
                    s[i] += 1;
                    if s[i] <= 10 {
                        break;
                    }
                    s[i] = -10;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
        }
    }
}
