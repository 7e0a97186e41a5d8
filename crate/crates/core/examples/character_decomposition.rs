//! Exterior squares of characters from the shipped tables, decomposed into
//! irreducibles.

use equivkit::characters::CharTable;
use equivkit::fixtures::FixtureSource;

fn show(t: &CharTable, label: &str) -> equivkit::Result<()> {
    let chi = t.row(label)?;
    let parts: Vec<String> = t
        .decompose(&chi.wedge_square())?
        .into_iter()
        .filter(|(_, m)| *m != 0.into())
        .map(|(l, m)| if m == 1.into() { l } else { format!("{m} {l}") })
        .collect();
    println!("{}: ∧^2 {label} = {}", t.name(), parts.join(" + "));
    Ok(())
}

fn main() -> equivkit::Result<()> {
    let src = FixtureSource::embedded();
    let mut tables = Vec::new();
    for name in ["s5", "a5", "c9c6", "c3wr"] {
        let (fx, _) = src.group(name)?;
        let t = CharTable::from_fixture(&fx)?;
        let rep = t.verify();
        println!("{name}: {} irreducibles, table valid: {}", t.labels().len(), rep.passed());
        tables.push(t);
    }
    show(&tables[0], "W5")?;
    show(&tables[2], "X.10")?;
    show(&tables[3], "X.13")?;

    // restrict the S5 character to A5 and decompose there
    let w = tables[0].row("W5")?.restrict(tables[1].group())?;
    println!("restricted to a5: {w}");
    let parts = tables[1].decompose(&w.wedge_square())?;
    println!("a5 multiplicities: {parts:?}");
    Ok(())
}
