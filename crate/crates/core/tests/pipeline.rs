use equivkit::dp4geom::{enumerate_lines, picard_data, SurfaceDP4};
use equivkit::gmodule::IntMatrix;
use equivkit::grouptheory::enumerate_subgroups;
use equivkit::k0euler::EulerLattice;
use equivkit::numexc::{build_system_on, certify, count_solutions_mod, lambda_module, theorem_pipeline, Verdict};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// product of random elementary column operations, so det = 1
fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n < 2 {
        return u;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k: i64 = rng.gen_range(-2..=2);
        let mut e = IntMatrix::identity(n);
        e.set(i, j, BigInt::from(k));
        u = u.mul(&e).unwrap();
    }
    u
}

#[test]
fn certificates_survive_change_of_parameters() {
    let conf = enumerate_lines(&SurfaceDP4::standard()).unwrap();
    let p = picard_data(&conf).unwrap();
    let e = EulerLattice::from_picard(&p).unwrap();
    let g = p.image_group().unwrap();
    let module = lambda_module(&e, g.clone()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    for h in enumerate_subgroups(&g) {
        if h.order() == 1 || h.order() == g.order() {
            continue;
        }
        let basis = module.invariant_sublattice(&h).unwrap();
        let base = build_system_on(&e, &module, &h, basis.clone()).unwrap();
        for _ in 0..3 {
            let u = random_unimodular(&mut rng, basis.cols());
            let sys = build_system_on(&e, &module, &h, basis.mul(&u).unwrap()).unwrap();
            assert!(certify(&sys, 3).is_some(), "order {}", h.order());
            // residue counts of each single condition are invariant too
            for (a, b) in base.conditions.iter().zip(&sys.conditions) {
                let ca = count_solutions_mod(&[(a.poly.clone(), a.target)], base.rank(), 3);
                let cb = count_solutions_mod(&[(b.poly.clone(), b.target)], sys.rank(), 3);
                assert_eq!(ca, cb);
            }
        }
        checked += 1;
    }
    assert_eq!(checked, 6);
}

#[test]
fn verdict_is_stable_across_primes() {
    let conf = enumerate_lines(&SurfaceDP4::standard()).unwrap();
    let p = picard_data(&conf).unwrap();
    let e = EulerLattice::from_picard(&p).unwrap();
    for m in [3, 5, 7] {
        let rep = theorem_pipeline(&e, p.image_group().unwrap(), m).unwrap();
        assert_eq!(rep.verdict, Verdict::NoFullGInvariantSequence, "p = {m}");
        assert_eq!(rep.certified(), 6);
    }
}
