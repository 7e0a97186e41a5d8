//! Dimension bookkeeping for Gr(2, W) ∩ P(V), from a character decomposition.

use equivkit::characters::CharTable;
use equivkit::fixtures::FixtureSource;
use equivkit::linsec::{check_scenario, full_support, scenario_from_decomposition};

fn main() -> equivkit::Result<()> {
    let src = FixtureSource::embedded();
    for name in src.scenario_names()? {
        let (sc, _) = src.scenario(&name)?;
        let (fx, _) = src.group(&sc.group)?;
        let t = CharTable::from_fixture(&fx)?;
        let w = t.row(&sc.representation)?;
        let s = scenario_from_decomposition(w, &t, &sc.chosen)?;
        println!("{}", sc.name);
        print!("{}", check_scenario(&s)?);
        let all = full_support(w, &t)?;
        println!("  all of ∧^2: r = {}\n", scenario_from_decomposition(w, &t, &all)?.r);
    }
    Ok(())
}
