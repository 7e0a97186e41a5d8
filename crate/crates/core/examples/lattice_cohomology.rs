//! Smith normal form and H^1 of a lattice with group action.

use std::sync::Arc;

use equivkit::gmodule::{fmt_divisors, smith_normal_form, GLattice, IntMatrix};
use equivkit::grouptheory::{FinGroup, GroupElement, Perm, Subgroup};

fn main() -> equivkit::Result<()> {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let snf = smith_normal_form(&m);
    println!("SNF diagonal: {:?}", snf.diagonal());
    assert_eq!(snf.u.mul(&m)?.mul(&snf.v)?, snf.d);

    // C3 acting on the augmentation lattice {x1 + x2 + x3 = 0}
    let c3 = Arc::new(FinGroup::close_generators(
        &[GroupElement::Perm(Perm::parse_cycles("(1,2,3)", 3)?)],
        10,
    )?);
    let rot = IntMatrix::from_rows(&[vec![0, -1], vec![1, -1]])?;
    let lat = GLattice::new(c3.clone(), vec![rot])?;
    let whole = Subgroup::whole(&c3);
    println!("H1(C3, augmentation) = {}", fmt_divisors(&lat.h1(&whole)?));
    println!("H1(C3, dual) = {}", fmt_divisors(&lat.dual().h1(&whole)?));

    let rep = lat.h1_all_subgroups()?;
    for r in &rep.rows {
        println!("  |H| = {}: {} (norm formula agrees: {:?})", r.order, fmt_divisors(&r.divisors), r.cyclic_agrees);
    }
    Ok(())
}
