//! A permutation group from generators: classes, power maps, subgroups.

use equivkit::grouptheory::{enumerate_subgroups, FinGroup, GroupElement, Perm, DEFAULT_GROUP_CAP};

fn main() -> equivkit::Result<()> {
    let gens = [
        GroupElement::Perm(Perm::parse_cycles("(1,2,3,4,5)", 5)?),
        GroupElement::Perm(Perm::parse_cycles("(1,2)", 5)?),
    ];
    let g = FinGroup::close_generators(&gens, DEFAULT_GROUP_CAP)?;
    println!("order {}, exponent {}, {} classes", g.order(), g.exponent(), g.num_classes());
    for (i, c) in g.classes().iter().enumerate() {
        let rep = g.element(c.representative);
        println!(
            "  class {i}: order {:>2}, size {:>2}, rep {}, square in class {}",
            g.element_order(c.representative),
            c.size(),
            rep,
            g.power_class(i, 2)
        );
    }
    let subs = enumerate_subgroups(&g);
    let normal = subs.iter().filter(|h| h.is_normal()).count();
    let cyclic = subs.iter().filter(|h| h.is_cyclic()).count();
    println!("{} subgroups, {normal} normal, {cyclic} cyclic", subs.len());
    Ok(())
}
