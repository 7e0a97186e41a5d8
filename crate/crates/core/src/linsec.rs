//! Dimension bookkeeping for linear sections `X = Gr(2, W) ∩ P(V)` with
//! `V ⊂ ∧^2 W` a subrepresentation of codimension `r`.
//!
//! The geometric hypothesis (irreducibility of the expected dimension) is
//! not decided here; reports carry it as an external flag.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::characters::{CharTable, ClassFunction};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSectionScenario {
    pub n: usize,
    pub r: usize,
    /// chosen irreducible summands and their dimensions
    pub chosen: Vec<(String, usize)>,
}

impl LinearSectionScenario {
    pub fn new(n: usize, r: usize, chosen: Vec<(String, usize)>) -> Self {
        LinearSectionScenario { n, r, chosen }
    }

    pub fn wedge_dim(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn dim_v(&self) -> usize {
        self.wedge_dim() - self.r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precondition {
    Pass,
    Fail,
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Precondition::Pass => "PASS",
            Precondition::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSectionReport {
    pub scenario: LinearSectionScenario,
    pub dim_v: usize,
    /// `2(n-2) - r`; negative when the section is expected to be empty
    pub expected_dim: i64,
    /// `n - 2 - r`
    pub fiber_dim: i64,
    pub precondition: Precondition,
    /// `X x P^1` and `P(W) x P^{n-2-r}`, as dimensions
    pub product_dims: Option<(i64, i64)>,
    /// irreducibility and expected dimension of `X`: not computed
    pub geometric_hypothesis: &'static str,
}

pub const EXTERNAL: &str = "EXTERNAL";

pub fn check_scenario(s: &LinearSectionScenario) -> Result<LinearSectionReport> {
    if s.n < 2 {
        return Err(Error::BadScenario(format!("n = {} is below 2", s.n)));
    }
    if s.r > s.wedge_dim() {
        return Err(Error::BadScenario(format!("codimension {} exceeds dim ∧^2 W = {}", s.r, s.wedge_dim())));
    }
    let summed: usize = s.chosen.iter().map(|(_, d)| d).sum();
    if !s.chosen.is_empty() && summed != s.dim_v() {
        return Err(Error::BadScenario(format!(
            "chosen summands have total dimension {summed}, expected {}",
            s.dim_v()
        )));
    }
    let (n, r) = (s.n as i64, s.r as i64);
    let expected_dim = 2 * (n - 2) - r;
    let fiber_dim = n - 2 - r;
    let precondition = if r <= n - 2 { Precondition::Pass } else { Precondition::Fail };
    let product_dims = (precondition == Precondition::Pass).then_some((expected_dim + 1, (n - 1) + fiber_dim));
    Ok(LinearSectionReport {
        scenario: s.clone(),
        dim_v: s.dim_v(),
        expected_dim,
        fiber_dim,
        precondition,
        product_dims,
        geometric_hypothesis: EXTERNAL,
    })
}

fn as_usize(d: &BigInt) -> Result<usize> {
    d.to_usize().ok_or_else(|| Error::BadScenario(format!("dimension {d} out of range")))
}

/// Scenario for `V` the sum of `chosen` inside `∧^2` of the character `w`.
pub fn scenario_from_decomposition(
    w: &ClassFunction,
    table: &CharTable,
    chosen: &[String],
) -> Result<LinearSectionScenario> {
    let n = as_usize(&w.degree().ok_or_else(|| Error::NotACharacter("degree is not an integer".into()))?)?;
    let parts = table.decompose(&w.wedge_square())?;
    let mut dims = Vec::new();
    for label in chosen {
        let Some((_, mult)) = parts.iter().find(|(l, _)| l == label) else {
            return Err(Error::BadChoice(format!("{label} does not occur in ∧^2 of the representation")));
        };
        let used = chosen.iter().filter(|l| *l == label).count();
        if BigInt::from(used) > *mult {
            return Err(Error::BadChoice(format!("{label} chosen {used} times, multiplicity {mult}")));
        }
        let d = table.row(label)?.degree().expect("irreducible characters have integer degree");
        dims.push((label.clone(), as_usize(&d)?));
    }
    let dim_v: usize = dims.iter().map(|(_, d)| d).sum();
    let wedge = n * (n - 1) / 2;
    Ok(LinearSectionScenario::new(n, wedge - dim_v, dims))
}

/// Every summand of `∧^2 W`, repeated by multiplicity.
pub fn full_support(w: &ClassFunction, table: &CharTable) -> Result<Vec<String>> {
    let parts = table.decompose(&w.wedge_square())?;
    Ok(parts
        .into_iter()
        .flat_map(|(l, m)| std::iter::repeat(l).take(m.to_usize().unwrap_or(0)))
        .collect())
}

impl fmt::Display for LinearSectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.scenario;
        let chosen: Vec<String> = s.chosen.iter().map(|(l, d)| format!("{l} ({d})")).collect();
        writeln!(f, "n = {}, dim V = {}, r = {}", s.n, self.dim_v, s.r)?;
        if !chosen.is_empty() {
            writeln!(f, "V = {}", chosen.join(" + "))?;
        }
        writeln!(f, "precondition r <= n - 2: {}", self.precondition)?;
        writeln!(f, "expected dim X = {}, generic fiber dim = {}", self.expected_dim, self.fiber_dim)?;
        if let Some((a, b)) = self.product_dims {
            writeln!(f, "X x P^1 (dim {a}) ~ P(W) x P^{} (dim {b})", self.fiber_dim)?;
        }
        writeln!(f, "irreducibility of X: {}", self.geometric_hypothesis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::FixtureSource;

    fn table(name: &str) -> CharTable {
        let (fx, _) = FixtureSource::embedded().group(name).unwrap();
        CharTable::from_fixture(&fx).unwrap()
    }

    fn labels(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn reference_scenarios() {
        let a5 = check_scenario(&LinearSectionScenario::new(5, 3, vec![])).unwrap();
        assert_eq!((a5.precondition, a5.expected_dim, a5.fiber_dim), (Precondition::Pass, 3, 0));
        assert_eq!(a5.dim_v, 7);
        let s5 = check_scenario(&LinearSectionScenario::new(5, 4, vec![])).unwrap();
        assert_eq!(s5.precondition, Precondition::Fail);
        assert_eq!(s5.product_dims, None);
        let c9 = check_scenario(&LinearSectionScenario::new(6, 4, vec![])).unwrap();
        assert_eq!((c9.precondition, c9.expected_dim, c9.dim_v), (Precondition::Pass, 4, 11));
        for rep in [a5, c9] {
            assert_eq!(rep.expected_dim + rep.scenario.r as i64, 2 * (rep.scenario.n as i64 - 2));
            assert_eq!(rep.fiber_dim + rep.scenario.r as i64, rep.scenario.n as i64 - 2);
            assert_eq!(rep.geometric_hypothesis, EXTERNAL);
        }
    }

    #[test]
    fn bad_scenarios() {
        assert!(matches!(check_scenario(&LinearSectionScenario::new(1, 0, vec![])), Err(Error::BadScenario(_))));
        assert!(matches!(check_scenario(&LinearSectionScenario::new(5, 11, vec![])), Err(Error::BadScenario(_))));
        let wrong = LinearSectionScenario::new(5, 3, vec![("A".into(), 3)]);
        assert!(matches!(check_scenario(&wrong), Err(Error::BadScenario(_))));
    }

    #[test]
    fn from_decompositions() {
        let a5 = table("a5");
        let s = scenario_from_decomposition(a5.row("W5").unwrap(), &a5, &labels(&["W3", "W4"])).unwrap();
        assert_eq!((s.n, s.dim_v(), s.r), (5, 7, 3));
        let s5 = table("s5");
        let s = scenario_from_decomposition(s5.row("W5").unwrap(), &s5, &labels(&["W6"])).unwrap();
        assert_eq!((s.dim_v(), s.r), (6, 4));
        let err = scenario_from_decomposition(s5.row("W5").unwrap(), &s5, &labels(&["W5"]));
        assert!(matches!(err, Err(Error::BadChoice(_))));
        let c = table("c3wr");
        let s = scenario_from_decomposition(c.row("X.13").unwrap(), &c, &labels(&["X.6", "X.7", "X.12"])).unwrap();
        assert_eq!((s.n, s.dim_v(), s.r), (6, 11, 4));
        assert_eq!(check_scenario(&s).unwrap().expected_dim, 4);
        for name in ["a5", "s5", "c9c6", "c3wr"] {
            let t = table(name);
            let rep = match name {
                "a5" | "s5" => "W5",
                "c9c6" => "X.10",
                _ => "X.13",
            };
            let w = t.row(rep).unwrap();
            let all = full_support(w, &t).unwrap();
            let s = scenario_from_decomposition(w, &t, &all).unwrap();
            assert_eq!(s.r, 0, "{name}");
        }
    }
}
