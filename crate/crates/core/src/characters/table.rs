use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::ClassFunction;
use crate::exactnum::CycNum;
use crate::fixtures::GroupFixture;
use crate::grouptheory::{FinGroup, GroupElement, Perm, SmallMat, DEFAULT_GROUP_CAP};
use crate::{Error, Result};

/// Irreducible characters of a group, as shipped in a fixture.
#[derive(Clone, Debug)]
pub struct CharTable {
    group: Arc<FinGroup>,
    labels: Vec<String>,
    rows: Vec<ClassFunction>,
    name: String,
    /// `fixture_classes[i]` is the group class of the fixture's i-th column.
    fixture_classes: Vec<usize>,
}

/// Outcome of a table validation; the first failed check is kept separately.
#[derive(Clone, Debug)]
pub struct TableReport {
    pub checks: Vec<(String, bool)>,
    pub first_violation: Option<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }

    fn check(&mut self, name: String, ok: bool) {
        if !ok && self.first_violation.is_none() {
            self.first_violation = Some(name.clone());
        }
        self.checks.push((name, ok));
    }
}

impl CharTable {
    /// Assembles a table without validating it; see [`CharTable::verify`].
    pub fn new(group: Arc<FinGroup>, labels: Vec<String>, rows: Vec<ClassFunction>) -> Result<Self> {
        if labels.len() != rows.len() {
            return Err(Error::Shape("labels and rows differ in length".into()));
        }
        for r in &rows {
            if !r.group().same_as(&group) {
                return Err(Error::GroupMismatch);
            }
        }
        let fixture_classes = (0..group.num_classes()).collect();
        Ok(CharTable { group, labels, rows, name: String::new(), fixture_classes })
    }

    /// Builds the group from the fixture generators and aligns the fixture's
    /// columns with the computed classes through the representative words.
    pub fn from_fixture(fx: &GroupFixture) -> Result<Self> {
        let bad = |m: String| Error::Fixture(format!("{}: {m}", fx.name));
        let mut gens = Vec::new();
        for g in &fx.generators {
            let elem = match (&g.perm, &g.matrix, fx.kind.as_str()) {
                (Some(p), None, "permutation") => {
                    let degree = fx.degree.ok_or_else(|| bad("permutation fixture without degree".into()))?;
                    GroupElement::Perm(Perm::parse_cycles(p, degree)?)
                }
                (None, Some(m), "matrix") => GroupElement::Matrix(SmallMat::from_rows(m)?),
                _ => return Err(bad(format!("generator {} does not match kind {}", g.name, fx.kind))),
            };
            gens.push(elem);
        }
        let group = Arc::new(FinGroup::close_generators(&gens, DEFAULT_GROUP_CAP)?);
        if group.order() != fx.expected_order {
            return Err(bad(format!(
                "generators give order {}, expected {}",
                group.order(),
                fx.expected_order
            )));
        }
        if fx.classes.len() != group.num_classes() {
            return Err(bad(format!(
                "{} classes listed, group has {}",
                fx.classes.len(),
                group.num_classes()
            )));
        }
        let names: Vec<String> = fx.generators.iter().map(|g| g.name.clone()).collect();
        let mut fixture_classes = Vec::with_capacity(fx.classes.len());
        for (i, c) in fx.classes.iter().enumerate() {
            let x = group.evaluate_word(&c.rep, &names)?;
            let k = group.class_of(x);
            let actual = &group.classes()[k];
            if actual.size() != c.size || actual.element_order != c.order {
                return Err(bad(format!(
                    "class {i} ({}) has size {} and order {}, fixture says {} and {}",
                    c.rep,
                    actual.size(),
                    actual.element_order,
                    c.size,
                    c.order
                )));
            }
            if fixture_classes.contains(&k) {
                return Err(bad(format!("class {i} ({}) repeats an earlier class", c.rep)));
            }
            fixture_classes.push(k);
        }
        let mut labels = Vec::new();
        let mut rows = Vec::new();
        for ch in &fx.characters {
            if ch.values.len() != fixture_classes.len() {
                return Err(bad(format!("character {} has wrong length", ch.label)));
            }
            let mut values = vec![CycNum::zero(); fixture_classes.len()];
            for (i, v) in ch.values.iter().enumerate() {
                values[fixture_classes[i]] = CycNum::parse(v, fx.conductor)?;
            }
            labels.push(ch.label.clone());
            rows.push(ClassFunction::new(group.clone(), values)?);
        }
        Ok(CharTable { group, labels, rows, name: fx.name.clone(), fixture_classes })
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn row(&self, label: &str) -> Result<&ClassFunction> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.rows[i])
            .ok_or_else(|| Error::Fixture(format!("no character labelled {label:?}")))
    }

    /// Group class index of each fixture column.
    pub fn fixture_classes(&self) -> &[usize] {
        &self.fixture_classes
    }

    /// Values of `f` listed in the fixture's column order.
    pub fn in_fixture_order(&self, f: &ClassFunction) -> Vec<CycNum> {
        self.fixture_classes.iter().map(|&k| f.value(k).clone()).collect()
    }

    /// Orthonormality, row count, degree sum and power-map consistency.
    pub fn verify(&self) -> TableReport {
        let mut report = TableReport { checks: Vec::new(), first_violation: None };
        let g = &self.group;
        report.check(
            format!("{} rows for {} classes", self.rows.len(), g.num_classes()),
            self.rows.len() == g.num_classes(),
        );
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in self.rows.iter().enumerate().skip(i) {
                let ip = a.inner_product(b).unwrap_or_else(|_| CycNum::from_int(-1));
                let ok = if i == j { ip.is_one() } else { ip.is_zero() };
                report.check(
                    format!("<{}, {}> = {}", self.labels[i], self.labels[j], ip.body()),
                    ok,
                );
            }
        }
        let mut sum = BigInt::zero();
        let mut degrees_ok = true;
        for r in &self.rows {
            match r.degree() {
                Some(d) if !d.is_zero() => sum += &d * &d,
                _ => degrees_ok = false,
            }
        }
        report.check("degrees are positive integers".into(), degrees_ok);
        report.check(
            format!("sum of squared degrees {sum} = |G| = {}", g.order()),
            degrees_ok && sum == BigInt::from(g.order()),
        );
        // chi(g^k) = sigma_k(chi(g)) for k prime to the exponent
        let e = g.exponent() as i64;
        for (label, r) in self.labels.iter().zip(&self.rows) {
            let mut ok = true;
            for k in (2..e).filter(|k| k.gcd(&e) == 1) {
                for c in 0..g.num_classes() {
                    match r.value(c).galois(k) {
                        Ok(v) if &v == r.value(g.power_class(c, k)) => {}
                        _ => ok = false,
                    }
                }
            }
            report.check(format!("{label} is compatible with the power maps"), ok);
        }
        report
    }

    /// Multiplicities `<chi, chi_i>` of each irreducible in `chi`.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<(String, BigInt)>> {
        let mut out = Vec::new();
        let mut rebuilt = ClassFunction::zero(self.group.clone());
        for (label, row) in self.labels.iter().zip(&self.rows) {
            let ip = chi.inner_product(row)?;
            let m = ip
                .as_integer()
                .filter(|m| m >= &BigInt::zero())
                .ok_or_else(|| {
                    Error::NotACharacter(format!("multiplicity of {label} is {}", ip.body()))
                })?;
            let m_i64 = i64::try_from(&m).map_err(|_| Error::NotACharacter("huge multiplicity".into()))?;
            rebuilt = (&rebuilt + &row.scale(m_i64))?;
            out.push((label.clone(), m));
        }
        if &rebuilt != chi {
            return Err(Error::NotACharacter("not a combination of the table rows".into()));
        }
        Ok(out)
    }

    /// Sum of the named rows.
    pub fn sum_of(&self, labels: &[String]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(self.group.clone());
        for l in labels {
            acc = (&acc + self.row(l)?)?;
        }
        Ok(acc)
    }
}
