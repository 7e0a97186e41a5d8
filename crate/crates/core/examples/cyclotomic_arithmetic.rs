//! Arithmetic in Q(zeta_n): roots of unity, Galois action, embeddings.

use equivkit::exactnum::{cyclotomic_polynomial, CycNum};

fn main() -> equivkit::Result<()> {
    let z = CycNum::zeta(3)?;
    // 1 + z + z^2 = 0
    let s = &(&CycNum::one() + &z) + &z.pow(2);
    println!("1 + z3 + z3^2 = {s}");

    let i = CycNum::zeta(4)?;
    let w = &z + &i; // lives in Q(zeta_12)
    println!("z3 + i = {w}  (conductor {})", w.conductor());
    println!("its inverse: {}", w.inv()?);
    println!("complex conjugate: {}", w.conj());
    for k in [1, 5, 7, 11] {
        println!("  sigma_{k}: {}", w.galois(k)?);
    }

    let half = CycNum::parse("1/2 + 3*z", 9)?;
    println!("parsed in Q(zeta_9): {half}, embedded in Q(zeta_18): {}", half.embed(18)?);
    println!("Phi_12 = {:?}", cyclotomic_polynomial(12));
    Ok(())
}
