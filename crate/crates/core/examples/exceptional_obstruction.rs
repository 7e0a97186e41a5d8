//! Certificates that no full exceptional sequence on the surface is
//! invariant under the order 12 group.

use equivkit::dp4geom::{enumerate_lines, picard_data, SurfaceDP4};
use equivkit::k0euler::EulerLattice;
use equivkit::numexc::{beta_subgroup_check, theorem_pipeline, SubgroupStatus};

fn main() -> equivkit::Result<()> {
    let p = picard_data(&enumerate_lines(&SurfaceDP4::standard())?)?;
    let e = EulerLattice::from_picard(&p)?;
    let g = p.image_group()?;

    let b = beta_subgroup_check(&e, g.clone(), 3)?;
    println!("H = <beta>:");
    println!("  chi(v, v)       = {}", b.self_pairing.render("z"));
    println!("  chi(v, gamma v) = {}", b.cross_pairings[0].1.render("z"));
    println!("  difference      = {}", b.difference.render("z"));

    let rep = theorem_pipeline(&e, g, 3)?;
    for s in &rep.subgroups {
        let what = match &s.status {
            SubgroupStatus::Certified(c) => format!("certified mod {} ({} cases)", c.modulus, c.enumerated),
            other => format!("{other:?}"),
        };
        println!("|H| = {:>2}, invariant rank {}: {what}", s.order, s.invariant_rank);
    }
    println!("verdict: {}", rep.verdict);
    Ok(())
}
