//! Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::sync::Arc;
use std::time::{Duration, Instant};

use equivkit::characters::CharTable;
use equivkit::cli;
use equivkit::dp4geom::{
    enumerate_lines, perm_order, picard_data, PicardData, SurfaceDP4, REFERENCE_B_ROWS, REFERENCE_C_ROWS,
    REFERENCE_GRAM, REFERENCE_MINUS_K,
};
use equivkit::exactnum::{rat, BigRat, CycNum};
use equivkit::fixtures::FixtureSource;
use equivkit::gmodule::{smith_normal_form, GLattice, IntMatrix};
use equivkit::grouptheory::{enumerate_subgroups, FinGroup, GroupElement, Perm, Subgroup};
use equivkit::k0euler::{ChowVector, EulerLattice};
use equivkit::linsec::{check_scenario, scenario_from_decomposition, Precondition};
use equivkit::numexc::{beta_subgroup_check, reference_cross_pairing, theorem_pipeline, QuadPoly, SubgroupStatus, Verdict};
use equivkit::sl2rep::{decompose_wedge, highest_weight_vectors, lowering_orbit, scalar_multiple, WedgeModule, sym_module};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rows<const N: usize>(a: &[[i64; N]]) -> Vec<Vec<i64>> {
    a.iter().map(|r| r.to_vec()).collect()
}

fn dp4() -> std::result::Result<(equivkit::dp4geom::LineConfiguration, PicardData), String> {
    let conf = enumerate_lines(&SurfaceDP4::standard()).map_err(err)?;
    let p = picard_data(&conf).map_err(err)?;
    Ok((conf, p))
}

fn table(name: &str) -> std::result::Result<CharTable, String> {
    let (fx, _) = FixtureSource::embedded().group(name).map_err(err)?;
    CharTable::from_fixture(&fx).map_err(err)
}

fn line_enumeration() -> Check {
    let s = SurfaceDP4::standard();
    let t = Instant::now();
    let conf = enumerate_lines(&s).map_err(err)?;
    let elapsed = t.elapsed();
    ensure(conf.lines.len() == 16, format!("{} lines", conf.lines.len()))?;
    ensure(conf.lines.iter().all(|l| s.contains_plane(l.plane())), "a plane is off the surface")?;
    let nb = conf.neighbors(conf.base);
    ensure(nb.len() == 5, format!("base meets {} lines", nb.len()))?;
    let inv = conf.gamma_invariant();
    ensure(inv.len() == 4, format!("{} gamma-invariant lines", inv.len()))?;
    let inv_nb = nb.iter().filter(|j| inv.contains(j)).count();
    ensure(inv_nb == 2, format!("{inv_nb} invariant neighbors"))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("16 lines, base meets 5, 4 gamma-invariant (2 neighbors), {elapsed:.1?}"))
}

fn gram_matrix() -> Check {
    let (_, p) = dp4()?;
    let want = IntMatrix::from_rows(&rows(&REFERENCE_GRAM)).map_err(err)?;
    ensure(p.alignment.gram && p.gram == want, "Gram matrix differs")?;
    Ok(format!("exact match after relabeling {:?} ({} candidates)", p.alignment.relabeling, p.alignment.candidates_tried))
}

fn picard_action() -> Check {
    let (conf, p) = dp4()?;
    let b = IntMatrix::from_rows(&rows(&REFERENCE_B_ROWS)).map_err(err)?.transpose();
    let c = IntMatrix::from_rows(&rows(&REFERENCE_C_ROWS)).map_err(err)?.transpose();
    ensure(p.beta == b && p.gamma == c, "B or C differs")?;
    let c3 = p.gamma.mul(&p.gamma).and_then(|x| x.mul(&p.gamma)).map_err(err)?;
    ensure(c3.is_identity(), "C^3 != 1")?;
    for m in [&p.beta, &p.gamma] {
        ensure(m.transpose().mul(&p.gram).and_then(|x| x.mul(m)).map_err(err)? == p.gram, "form not preserved")?;
    }
    ensure(perm_order(&conf.gamma_perm) == 3, "gamma does not have order 3 on lines")?;
    let g = p.image_group().map_err(err)?;
    let proper: Vec<_> = enumerate_subgroups(&g).into_iter().filter(|h| h.order() > 1 && h.order() < g.order()).collect();
    ensure(proper.len() == 6, format!("{} nontrivial proper subgroups", proper.len()))?;
    ensure(proper.iter().all(|h| h.is_cyclic()), "a subgroup is not cyclic")?;
    Ok(format!("B, C exact, C^3 = 1, form preserved, |<B,C>| = {}, 6 proper subgroups all cyclic", g.order()))
}

fn canonical_class() -> Check {
    let (conf, p) = dp4()?;
    ensure(p.minus_k == REFERENCE_MINUS_K, format!("-K = {:?}", p.minus_k))?;
    ensure(p.dot(&p.minus_k, &p.minus_k) == 4, "(-K)^2 != 4")?;
    ensure(p.line_classes.iter().all(|l| p.dot(&p.minus_k, l) == 1), "-K.l != 1")?;
    ensure(p.class_sum(&conf.gamma_invariant()) == p.minus_k, "invariant lines do not sum to -K")?;
    Ok("-K = 2L1+2L2-L3-L4-L5+3L6, (-K)^2 = 4, -K.l = 1 on 16 lines, -K = sum of invariant lines".into())
}

const REFERENCE_2CHI: [[i64; 8]; 8] = [
    [2, 1, 1, 1, 1, 1, 1, 1],
    [-1, 2, 0, 0, 0, 0, -2, 0],
    [-1, 0, 2, 0, 0, 0, -2, 0],
    [-1, 0, 0, 2, 0, 0, 0, 0],
    [-1, 0, 0, 0, 2, 0, 0, 0],
    [-1, 0, 0, 0, 0, 2, 0, 0],
    [-1, -2, -2, 0, 0, 0, 2, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
];

fn euler_gram() -> Check {
    let (_, p) = dp4()?;
    let e = EulerLattice::from_picard(&p).map_err(err)?;
    let g = e.euler_gram();
    for i in 0..8 {
        for j in 0..8 {
            ensure(g[i][j] == rat(REFERENCE_2CHI[i][j], 2), format!("entry ({i}, {j}) = {}", g[i][j]))?;
        }
    }
    let o = ChowVector::new(1, [0; 6], 0);
    let pt = ChowVector::new(0, [0; 6], 2);
    ensure(e.euler_pairing(&o, &pt) == BigRat::one(), "chi(O, O_p) != 1")?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let mut v = || ChowVector::from_coords(&(0..8).map(|_| rng.gen_range(-50..=50)).collect::<Vec<_>>()).unwrap();
        let (x, y) = (v(), v());
        for k in 0..2 {
            ensure(e.euler_pairing(&e.act(k, &x), &e.act(k, &y)) == e.euler_pairing(&x, &y), "chi not invariant")?;
        }
    }
    Ok("8x8 Euler matrix exact, chi(O, O_p) = 1, invariant on 1000 random pairs".into())
}

fn beta_subgroup() -> Check {
    let (_, p) = dp4()?;
    let e = EulerLattice::from_picard(&p).map_err(err)?;
    let t = Instant::now();
    let c = beta_subgroup_check(&e, p.image_group().map_err(err)?, 3).map_err(err)?;
    let elapsed = t.elapsed();
    ensure(c.matches_reference(), format!("chi(v, v) = {}", c.self_pairing.render("z")))?;
    ensure(
        c.cross_pairings.len() == 2 && c.cross_pairings.iter().all(|(_, q)| *q == reference_cross_pairing()),
        "chi(v, gamma v) and chi(v, gamma^2 v) differ",
    )?;
    let want = QuadPoly::from_terms(4, &[(1, 1, 3), (1, 2, 12), (2, 2, 12)]);
    ensure(c.difference == want, format!("difference {}", c.difference.render("z")))?;
    let d = c.reparametrization.det().map_err(err)?;
    ensure(d.abs().is_one(), format!("reparametrization has determinant {d}"))?;
    let cert = c.certificate.ok_or("no mod-3 certificate")?;
    ensure(cert.enumerated <= 81, format!("{} cases", cert.enumerated))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("both forms match, difference 3z2^2+12z2z3+12z3^2, {} residues, {elapsed:.1?}", cert.enumerated))
}

fn all_subgroups() -> Check {
    let (_, p) = dp4()?;
    let e = EulerLattice::from_picard(&p).map_err(err)?;
    let t = Instant::now();
    let rep = theorem_pipeline(&e, p.image_group().map_err(err)?, 3).map_err(err)?;
    let elapsed = t.elapsed();
    let at3 = rep
        .subgroups
        .iter()
        .filter(|s| matches!(&s.status, SubgroupStatus::Certified(c) if c.modulus == 3))
        .count();
    ensure(at3 == 6, format!("{at3} certificates at p = 3"))?;
    ensure(rep.verdict == Verdict::NoFullGInvariantSequence, rep.verdict.to_string())?;
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("6 certificates mod 3, verdict {}, {elapsed:.1?}", rep.verdict))
}

fn c2_sign() -> std::result::Result<(Arc<FinGroup>, GLattice), String> {
    let g = Arc::new(
        FinGroup::close_generators(&[GroupElement::Perm(Perm::from_images(vec![1, 0]).map_err(err)?)], 2).map_err(err)?,
    );
    let l = GLattice::new(g.clone(), vec![IntMatrix::from_rows(&[vec![-1]]).map_err(err)?]).map_err(err)?;
    Ok((g, l))
}

fn h1_vanishing() -> Check {
    let (_, p) = dp4()?;
    let rep = p.lattice().map_err(err)?.h1_all_subgroups().map_err(err)?;
    ensure(rep.passes(), format!("nonzero H1 for {:?}", rep.first_failure()))?;
    let (g, sign) = c2_sign()?;
    let h = sign.h1(&Subgroup::whole(&g)).map_err(err)?;
    ensure(h == vec![BigInt::from(2)], format!("H1(C2, Z_sign) = {h:?}"))?;
    Ok(format!("H1 = dual H1 = 0 on all {} subgroups; control H1(C2, Z_sign) = Z/2", rep.rows.len()))
}

fn nonzero(v: Vec<(String, BigInt)>) -> Vec<(String, BigInt)> {
    v.into_iter().filter(|(_, m)| !m.is_zero()).collect()
}

fn character_pipeline() -> Check {
    let s5 = table("s5")?;
    let a5 = table("a5")?;
    let c96 = table("c9c6")?;
    for t in [&s5, &a5, &c96, &table("c3wr")?, &table("dic12")?, &table("s3")?] {
        ensure(t.verify().passed(), format!("{} table fails {:?}", t.name(), t.verify().first_violation))?;
    }
    let one = BigInt::one();
    let w5 = s5.row("W5").map_err(err)?;
    let d = nonzero(s5.decompose(&w5.wedge_square()).map_err(err)?);
    ensure(d == vec![("W4".into(), one.clone()), ("W6".into(), one.clone())], format!("S5: {d:?}"))?;
    let r = w5.restrict(a5.group()).map_err(err)?;
    let d = nonzero(a5.decompose(&r.wedge_square()).map_err(err)?);
    let labels: Vec<&str> = d.iter().map(|(l, _)| l.as_str()).collect();
    ensure(labels == ["W3", "W3'", "W4"] && d.iter().all(|x| x.1 == one), format!("A5: {d:?}"))?;
    let x10 = c96.row("X.10").map_err(err)?;
    let printed: Vec<CycNum> = c96.in_fixture_order(x10);
    let want: Vec<CycNum> = [6, 0, -3, 0, 0, 0, 0, 0, 0, 0].iter().map(|&x| CycNum::from_int(x)).collect();
    ensure(printed == want, "X.10 values differ")?;
    let d = nonzero(c96.decompose(&x10.wedge_square()).map_err(err)?);
    let labels: Vec<&str> = d.iter().map(|(l, _)| l.as_str()).collect();
    ensure(labels == ["X.2", "X.3", "X.6", "X.7", "X.8", "X.9", "X.10"] && d.iter().all(|x| x.1 == one), format!("C9:C6: {d:?}"))?;
    Ok("S5: W4+W6; A5: W3+W3'+W4; C9:C6: seven summands; all tables orthonormal with sum d^2 = |G|".into())
}

fn sl2() -> Check {
    ensure(decompose_wedge(4) == [(2, 1), (6, 1)], "decompose_wedge(4)")?;
    let w = WedgeModule::new(sym_module(4)).module;
    ensure(w.check_relations().all(), "relations fail")?;
    let x2 = w.combination(&[(3, "w2∧w0"), (-2, "w4∧w-2")]).ok_or("labels")?;
    let hw = highest_weight_vectors(&w, 2);
    ensure(hw.len() == 1, "weight-2 highest weights not one-dimensional")?;
    let scalar = scalar_multiple(&hw[0], &x2).ok_or("not a multiple of 3 w2∧w0 - 2 w4∧w-2")?;
    let chain = lowering_orbit(&w, &x2, 2);
    ensure(chain[1] == w.combination(&[(1, "w2∧w-2"), (-2, "w4∧w-4")]).ok_or("labels")?, "Y x2")?;
    ensure(chain[2] == w.combination(&[(1, "w0∧w-2"), (-1, "w2∧w-4")]).ok_or("labels")?, "Y^2 x2")?;
    Ok(format!("Sym^2 + Sym^6; x2 found up to scalar {}; x0, x-2 reproduced", equivkit::exactnum::fmt_rat(&scalar)))
}

fn linsec() -> Check {
    let mut out = Vec::new();
    for (group, expect, dim) in [("a5", Precondition::Pass, Some(3)), ("s5", Precondition::Fail, None), ("c9c6", Precondition::Pass, Some(4))] {
        let t = table(group)?;
        let (rep, chosen): (&str, &[&str]) = match group {
            "a5" => ("W5", &["W3", "W4"]),
            "s5" => ("W5", &["W6"]),
            _ => ("X.10", &["X.6", "X.7", "X.8", "X.10"]),
        };
        let chosen: Vec<String> = chosen.iter().map(|s| s.to_string()).collect();
        let s = scenario_from_decomposition(t.row(rep).map_err(err)?, &t, &chosen).map_err(err)?;
        let r = check_scenario(&s).map_err(err)?;
        ensure(r.precondition == expect, format!("{group}: {}", r.precondition))?;
        if let Some(d) = dim {
            ensure(r.expected_dim == d, format!("{group}: dim {}", r.expected_dim))?;
        }
        if group == "s5" {
            ensure(s.r == 4, format!("s5: r = {}", s.r))?;
        }
        out.push(format!("{group} {} (r = {}, dim {})", r.precondition, s.r, r.expected_dim));
    }
    Ok(out.join("; "))
}

fn random_cyc(rng: &mut ChaCha8Rng, n: u32) -> CycNum {
    let coeffs = (0..n).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
    CycNum::from_coeffs(n, coeffs).unwrap()
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for k in 0..500 {
        let r = rng.gen_range(1..=6);
        let c = rng.gen_range(1..=6);
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-30..=30)).collect()).collect();
        let m = IntMatrix::from_rows(&rows).map_err(err)?;
        let snf = smith_normal_form(&m);
        ensure(snf.u.mul(&m).and_then(|x| x.mul(&snf.v)).map_err(err)? == snf.d, format!("UMV != D for case {k}"))?;
        ensure(snf.u.det().map_err(err)?.abs().is_one() && snf.v.det().map_err(err)?.abs().is_one(), "U or V not unimodular")?;
        let diag = snf.diagonal();
        for i in 0..r.min(c) {
            for j in 0..r.min(c) {
                if i != j {
                    ensure(snf.d.get(i, j).is_zero(), "D not diagonal")?;
                }
            }
        }
        for w in diag.windows(2) {
            let ok = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            ensure(ok && !w[0].is_negative(), format!("divisibility chain broken in case {k}: {diag:?}"))?;
        }
    }
    for n in [1u32, 3, 4, 5, 7, 8, 9, 12, 15] {
        for _ in 0..20 {
            let (a, b, c) = (random_cyc(&mut rng, n), random_cyc(&mut rng, n), random_cyc(&mut rng, n));
            ensure(&(&a * &b) * &c == &a * &(&b * &c), "associativity")?;
            ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
            ensure(&a * &b == &b * &a && &a + &b == &b + &a, "commutativity")?;
            if !a.is_zero() {
                ensure(&a * &a.inv().map_err(err)? == CycNum::one(), "inverse")?;
            }
        }
    }
    // bar resolution vs norm formula on every cyclic subgroup
    let (_, p) = dp4()?;
    let mut cyclic = 0;
    let (_, sign) = c2_sign()?;
    let c3 = Arc::new(
        FinGroup::close_generators(&[GroupElement::Perm(Perm::parse_cycles("(1,2,3)", 3).map_err(err)?)], 10).map_err(err)?,
    );
    let aug = GLattice::new(c3, vec![IntMatrix::from_rows(&[vec![0, -1], vec![1, -1]]).map_err(err)?]).map_err(err)?;
    let pic = p.lattice().map_err(err)?;
    for lat in [pic.clone(), pic.dual(), sign, aug] {
        let rep = lat.h1_all_subgroups().map_err(err)?;
        ensure(rep.cross_checks_agree(), "norm formula disagrees")?;
        cyclic += rep.rows.iter().filter(|r| r.cyclic_agrees.is_some()).count();
    }
    let t = Instant::now();
    let code = cli::execute(&clap_all()).map_err(err)?.1;
    let elapsed = t.elapsed();
    ensure(code == 0, format!("`all` exited with {code}"))?;
    ensure(elapsed < Duration::from_secs(60), format!("`all` took {elapsed:?}"))?;
    Ok(format!("500 SNF cases, field axioms on 180 triples, {cyclic} cyclic H1 cross-checks, `all` in {elapsed:.1?}"))
}

fn clap_all() -> cli::RunConfig {
    use clap::Parser;
    cli::RunConfig::try_parse_from(["equivkit", "all", "--format", "structured"]).unwrap()
}

fn main() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("line enumeration", line_enumeration),
        ("basis Gram matrix", gram_matrix),
        ("Picard action", picard_action),
        ("canonical class", canonical_class),
        ("Euler pairing", euler_gram),
        ("beta-invariant conditions", beta_subgroup),
        ("mod-3 certificates", all_subgroups),
        ("H1 vanishing", h1_vanishing),
        ("character pipeline", character_pipeline),
        ("sl2 weights", sl2),
        ("linear sections", linsec),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_secs_f64() * 1000.0;
        match res {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{ms:.0} ms]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{ms:.0} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
