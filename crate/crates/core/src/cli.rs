//! Command-line front end. Every subcommand builds a [`Document`] and
//! renders it as text or JSON.
//!
//! Exit codes: 0 when every check passes and verdicts match expectations,
//! 1 on a failed check or an inconclusive verdict, 2 on input errors.

use std::collections::{BTreeMap, VecDeque};
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::characters::{CharTable, ClassFunction};
use crate::dp4geom::{enumerate_lines, picard_data, LineConfiguration, PicardData, SurfaceDP4};
use crate::fixtures::{parse_versioned, FixtureSource, FixtureText, Provenance, ScenarioFixture};
use crate::gmodule::{fmt_divisors, GLattice, IntMatrix};
use crate::grouptheory::{FinGroup, GroupElement, Perm, Subgroup};
use crate::k0euler::{fmt_entry, ChowVector, EulerLattice};
use crate::linsec::{check_scenario, scenario_from_decomposition, Precondition};
use crate::numexc::{beta_subgroup_check, theorem_pipeline, SubgroupStatus, Verdict, DEFAULT_MODULUS};
use crate::report::{Document, Evidence, Status};
use crate::sl2rep::{decompose_wedge, highest_weight_vectors, wedge_basis_report, WedgeModule};
use crate::{sl2rep, Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "equivkit", version, about = "Exact computations for equivariant geometry")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Read fixtures from this directory instead of the built-in copies.
    #[arg(long, global = true, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
    /// Prime for the residue search.
    #[arg(long, global = true, value_name = "P", default_value_t = DEFAULT_MODULUS)]
    pub modulus: u64,
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The 16 lines on the quartic del Pezzo surface.
    Lines {
        /// Print only the number of lines.
        #[arg(long)]
        count_only: bool,
    },
    /// Picard data and the Euler pairing on the Chow lattice.
    EulerGram,
    /// H^1 of every subgroup on Pic and its dual.
    H1Check,
    /// Mod-p certificates against invariant full exceptional sequences.
    Dp4Obstruction,
    /// Decompose the exterior square of a character.
    Wedge2Decompose {
        /// Group fixture; with --rep, replaces the built-in examples.
        #[arg(long, requires = "rep")]
        group: Option<String>,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Highest-weight vectors and lowering chains in ∧^2 Sym^n.
    Sl2Basis {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Dimension checks for linear sections of Gr(2, n).
    LinsecCheck {
        /// Scenario files; the shipped scenarios when omitted.
        scenarios: Vec<PathBuf>,
    },
    /// Validate every fixture character table.
    VerifyFixtures,
    /// Run everything.
    All,
}

/// Parses `argv` (including the program name), runs, writes output, and
/// returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cfg) {
        Ok((rendered, code)) => match write_output(&cfg, &rendered) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn write_output(cfg: &RunConfig, text: &str) -> Result<()> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
        }
    }
}

/// Rendered output and exit code.
pub fn execute(cfg: &RunConfig) -> Result<(String, i32)> {
    if let Command::Lines { count_only: true } = cfg.command {
        let conf = enumerate_lines(&SurfaceDP4::standard())?;
        return Ok((format!("{}\n", conf.lines.len()), 0));
    }
    let doc = document(cfg)?;
    let code = if doc.all_passed() { 0 } else { 1 };
    let rendered = match cfg.format {
        Format::Text => doc.to_text(),
        Format::Structured => doc.to_json(),
    };
    Ok((rendered, code))
}

fn source(cfg: &RunConfig) -> FixtureSource {
    match &cfg.fixtures {
        Some(d) => FixtureSource::directory(d),
        None => FixtureSource::embedded(),
    }
}

/// The document for a subcommand.
pub fn document(cfg: &RunConfig) -> Result<Document> {
    let src = source(cfg);
    match &cfg.command {
        Command::Lines { .. } => lines_doc(),
        Command::EulerGram => euler_doc(),
        Command::H1Check => h1_doc(),
        Command::Dp4Obstruction => obstruction_doc(cfg.modulus),
        Command::Wedge2Decompose { group, rep } => wedge_doc(&src, group.as_deref().zip(rep.as_deref())),
        Command::Sl2Basis { n } => sl2_doc(*n),
        Command::LinsecCheck { scenarios } => linsec_doc(&src, scenarios),
        Command::VerifyFixtures => fixtures_doc(&src),
        Command::All => {
            let docs = [
                fixtures_doc(&src)?,
                lines_doc()?,
                euler_doc()?,
                h1_doc()?,
                obstruction_doc(cfg.modulus)?,
                wedge_doc(&src, None)?,
                sl2_doc(4)?,
                linsec_doc(&src, &[])?,
            ];
            let mut evidence = Vec::new();
            let mut digests = BTreeMap::new();
            for d in &docs {
                digests.extend(d.provenance.fixtures.clone());
                evidence.push(Evidence::new(d.command.clone(), Status::from_bool(d.all_passed()), d.verdict.clone()));
                evidence.extend(d.evidence.iter().map(|e| {
                    let mut e = e.clone();
                    e.check = format!("{}/{}", d.command, e.check);
                    e
                }));
            }
            let ok = docs.iter().all(Document::all_passed);
            let mut doc = Document::new("all", verdict(ok), evidence, &Provenance::default());
            doc.provenance.fixtures = digests;
            Ok(doc)
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn finish(command: &str, evidence: Vec<Evidence>, prov: &Provenance) -> Document {
    let ok = evidence.iter().all(|e| e.status != Status::Fail);
    Document::new(command, verdict(ok), evidence, prov)
}

/// Shortest words in the generator names, by breadth-first search.
pub fn element_words(group: &FinGroup, names: &[&str]) -> Vec<String> {
    let mut words = vec![None; group.order()];
    words[group.identity()] = Some("1".to_string());
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for (k, &g) in group.generators().iter().enumerate() {
            let y = group.mul(x, g);
            if words[y].is_none() {
                let w = words[x].as_deref().filter(|w| *w != "1").map_or(names[k].to_string(), |w| format!("{w}*{}", names[k]));
                words[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    words.into_iter().map(|w| w.expect("generators reach every element")).collect()
}

fn matrix_rows(m: &IntMatrix) -> Vec<String> {
    m.to_i64_rows()
        .expect("small entries")
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" ")))
        .collect()
}

struct Dp4 {
    conf: LineConfiguration,
    picard: PicardData,
    euler: EulerLattice,
    group: Arc<FinGroup>,
}

fn dp4() -> Result<Dp4> {
    let conf = enumerate_lines(&SurfaceDP4::standard())?;
    let picard = picard_data(&conf)?;
    let euler = EulerLattice::from_picard(&picard)?;
    let group = picard.image_group()?;
    Ok(Dp4 { conf, picard, euler, group })
}

fn lines_doc() -> Result<Document> {
    let s = SurfaceDP4::standard();
    let conf = enumerate_lines(&s)?;
    let on_surface = conf.lines.iter().all(|l| s.contains_plane(l.plane()));
    let nb = conf.neighbors(conf.base);
    let inv = conf.gamma_invariant();
    let inv_nb = nb.iter().filter(|j| inv.contains(j)).count();
    let ev = vec![
        Evidence::new("count", Status::from_bool(conf.lines.len() == 16), format!(
            "{} distinct lines from {} sign choices",
            conf.lines.len(),
            conf.sign_choices
        ))
        .with_transcript(conf.lines.iter().enumerate().map(|(i, l)| format!("{i:>2}: {}", l.key())).collect()),
        Evidence::new("on-surface", Status::from_bool(on_surface), "every plane lies on both quadrics"),
        Evidence::new("base-neighbors", Status::from_bool(nb.len() == 5), format!("the base line meets {} lines", nb.len()))
            .with_data(json!({ "base": conf.base, "neighbors": nb })),
        Evidence::new("gamma-invariant", Status::from_bool(inv.len() == 4 && inv_nb == 2), format!(
            "{} gamma-invariant lines, {} of them meet the base line",
            inv.len(),
            inv_nb
        ))
        .with_data(json!({ "lines": inv })),
        Evidence::new(
            "incidence",
            Status::from_bool(conf.preserves_incidence(&conf.gamma_perm) && conf.preserves_incidence(&conf.beta_perm)),
            "both generators preserve the intersection matrix",
        ),
    ];
    Ok(finish("lines", ev, &Provenance::default()))
}

fn euler_doc() -> Result<Document> {
    let d = dp4()?;
    let p = &d.picard;
    let a = &p.alignment;
    let mk = p.minus_k.clone();
    let mk6: [i64; 6] = std::array::from_fn(|i| mk[i]);
    let k2 = p.dot(&mk, &mk);
    let line_deg_ok = p.line_classes.iter().all(|c| p.dot(&mk, c) == 1 && p.dot(c, c) == -1);
    let inv_sum = p.class_sum(&d.conf.gamma_invariant());
    let c = &p.gamma;
    let c3 = c.mul(c)?.mul(c)?;
    let preserves = [&p.beta, &p.gamma].iter().all(|m| m.transpose().mul(&p.gram).and_then(|x| x.mul(m)).ok() == Some(p.gram.clone()));
    let gram = d.euler.euler_gram();
    let gram_rows: Vec<String> = gram
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| format!("{:>4}", fmt_entry(x))).collect::<Vec<_>>().join(" ")))
        .collect();
    let o = ChowVector::new(1, [0; 6], 0);
    let pt = ChowVector::new(0, [0; 6], 2);
    let chi_opt = d.euler.euler_pairing(&o, &pt);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut invariant = true;
    for _ in 0..1000 {
        let mut v = || {
            let c: Vec<i64> = (0..8).map(|_| rng.gen_range(-9..=9)).collect();
            ChowVector::from_coords(&c).expect("eight coordinates")
        };
        let (x, y) = (v(), v());
        for g in 0..2 {
            invariant &= d.euler.doubled_pairing(&d.euler.act(g, &x), &d.euler.act(g, &y)) == d.euler.doubled_pairing(&x, &y);
        }
    }
    let split = d.euler.k0_decomposition_check();
    let relabel: Vec<String> = a.relabeling.iter().map(|i| format!("L{}", i + 1)).collect();
    let ev = vec![
        Evidence::new("basis", Status::from_bool(a.gram), "Gram matrix of L1..L6 matches the reference")
            .with_data(json!({
                "lines": p.basis,
                "relabeling": a.relabeling,
                "candidates": a.candidates_tried,
            }))
            .with_transcript({
                let mut t = matrix_rows(&p.gram);
                t.push(format!("key-order basis relabeled as ({})", relabel.join(", ")));
                t
            }),
        Evidence::new("beta", Status::from_bool(a.beta), "beta acts by the reference matrix (columns are images)")
            .with_transcript(matrix_rows(&p.beta)),
        Evidence::new("gamma", Status::from_bool(a.gamma && c3.is_identity()), "gamma acts by the reference matrix, gamma^3 = 1")
            .with_transcript(matrix_rows(&p.gamma)),
        Evidence::new("form-preserved", Status::from_bool(preserves), "beta and gamma preserve the intersection form"),
        Evidence::new(
            "canonical-class",
            Status::from_bool(a.minus_k && k2 == 4 && line_deg_ok && inv_sum == mk),
            format!("-K = {mk:?}, (-K)^2 = {k2}, -K.l = 1 on all 16 lines, -K = sum of the gamma-invariant lines"),
        ),
        Evidence::new("euler-gram", Status::Info, "chi on (1, L1..L6, p/2)").with_transcript(gram_rows).with_data(json!({
            "doubled": d.euler.doubled_gram().to_i64_rows(),
        })),
        Evidence::new("chi(O, O_p)", Status::from_bool(chi_opt == crate::exactnum::int(1)), format!("chi(O, O_p) = {}", fmt_entry(&chi_opt))),
        Evidence::new("invariance", Status::from_bool(invariant), "chi is invariant under both generators on 1000 random pairs"),
        Evidence::new(
            "k0-splitting",
            Status::from_bool(split.fixes_rank && split.fixes_point && split.block_diagonal && !split.fully_fixed),
            format!("K0 = Z + Pic + Z as modules; invariant rank {} of 8", split.invariant_rank),
        ),
        Evidence::new("ch-parity", Status::from_bool(d.euler.in_k0(&d.euler.ch_line_bundle(mk6))), "ch(O(-K)) satisfies z = y.K mod 2"),
    ];
    Ok(finish("euler-gram", ev, &Provenance::default()))
}

fn h1_rows(lat: &GLattice, words: &[String]) -> Result<(bool, bool, Vec<String>)> {
    let rep = lat.h1_all_subgroups()?;
    let lines = rep
        .rows
        .iter()
        .map(|r| {
            let gens: Vec<&str> = r.generators.iter().map(|&g| words[g].as_str()).collect();
            format!(
                "order {:>2} <{}>: H1 = {}, dual H1 = {}{}",
                r.order,
                gens.join(", "),
                fmt_divisors(&r.divisors),
                fmt_divisors(&r.dual_divisors),
                match r.cyclic_agrees {
                    Some(true) => ", norm formula agrees",
                    Some(false) => ", norm formula DISAGREES",
                    None => "",
                }
            )
        })
        .collect();
    Ok((rep.passes(), rep.cross_checks_agree(), lines))
}

fn h1_doc() -> Result<Document> {
    let d = dp4()?;
    let lat = d.picard.lattice()?;
    let words = element_words(&d.group, &["b", "c"]);
    let (vanish, agree, lines) = h1_rows(&lat, &words)?;
    let c2 = Arc::new(FinGroup::close_generators(&[GroupElement::Perm(Perm::from_images(vec![1, 0])?)], 2)?);
    let sign = GLattice::new(c2.clone(), vec![IntMatrix::from_rows(&[vec![-1]])?])?;
    let control = sign.h1(&Subgroup::whole(&c2))?;
    let ev = vec![
        Evidence::new("pic", Status::from_bool(vanish), format!(
            "H1(H, Pic) = H1(H, Pic^dual) = 0 for all {} subgroups of the order {} group",
            lines.len(),
            d.group.order()
        ))
        .with_transcript(lines),
        Evidence::new("norm-formula", Status::from_bool(agree), "bar resolution agrees with ker N / im(g - 1) on cyclic subgroups"),
        Evidence::new(
            "control",
            Status::from_bool(control == vec![BigInt::from(2)]),
            format!("H1(C2, Z_sign) = {}", fmt_divisors(&control)),
        ),
    ];
    Ok(finish("h1-check", ev, &Provenance::default()))
}

fn status_text(s: &SubgroupStatus) -> String {
    match s {
        SubgroupStatus::WholeGroup => "H = G: a single invariant class, allowed".into(),
        SubgroupStatus::ExcludedByOrbitLength { orbit, slots } => {
            format!("orbit of length {orbit} exceeds the {slots} classes of a full sequence")
        }
        SubgroupStatus::Certified(c) => format!(
            "no solution mod {} among {} residue vectors{}",
            c.modulus,
            c.enumerated,
            if c.distinguished.is_some() { " (a single difference of two conditions already fails)" } else { "" }
        ),
        SubgroupStatus::Uncertified => "no certificate found".into(),
    }
}

fn obstruction_doc(modulus: u64) -> Result<Document> {
    let d = dp4()?;
    let words = element_words(&d.group, &["b", "c"]);
    let rep = theorem_pipeline(&d.euler, d.group.clone(), modulus)?;
    let mut ev = vec![Evidence::new("setup", Status::Info, format!(
        "G = <b, c> of order {} acting on Lambda of rank {}; an orbit with stabilizer H needs chi(v, g v) = 1 on H and 0 off H",
        rep.group_order, rep.lattice_rank
    ))];
    for s in &rep.subgroups {
        let gens: Vec<&str> = s.system.as_ref().map_or(vec![], |sys| sys.subgroup.generators().iter().map(|&g| words[g].as_str()).collect());
        let status = match &s.status {
            SubgroupStatus::Uncertified => Status::Fail,
            SubgroupStatus::Certified(_) => Status::Pass,
            _ => Status::Info,
        };
        let mut transcript = Vec::new();
        let mut conds = Vec::new();
        if let Some(sys) = &s.system {
            for c in &sys.conditions {
                transcript.push(format!("2 chi(v, {} v) = {} = {}", words[c.coset_rep], c.poly, c.target));
                conds.push(json!({
                    "coset": words[c.coset_rep],
                    "polynomial": c.poly.to_string(),
                    "target": c.target,
                }));
            }
        }
        let k0 = s.k0_status.as_ref().map(status_text);
        if let Some(k) = &k0 {
            transcript.push(format!("on ch(K0): {k}"));
        }
        let cert = match &s.status {
            SubgroupStatus::Certified(c) => json!({
                "modulus": c.modulus,
                "enumerated": c.enumerated,
                "distinguished": c.distinguished.map(|(i, j)| json!([i, j])),
            }),
            _ => serde_json::Value::Null,
        };
        let label = if gens.is_empty() { format!("order {}", s.order) } else { format!("order {} <{}>", s.order, gens.join(", ")) };
        ev.push(
            Evidence::new(format!("H {label}"), status, status_text(&s.status))
                .with_transcript(transcript)
                .with_data(json!({
                    "order": s.order,
                    "generators": gens,
                    "cyclic": s.cyclic,
                    "invariant_rank": s.invariant_rank,
                    "conditions": conds,
                    "certificate": cert,
                    "k0_sublattice": k0,
                })),
        );
    }
    let beta = beta_subgroup_check(&d.euler, d.group.clone(), modulus)?;
    ev.push(
        Evidence::new("H = <b> by hand", Status::from_bool(beta.matches_reference() && beta.certificate.is_some()), format!(
            "chi(v, v) - chi(v, c v) = {} = 1 has no solution mod {modulus}",
            beta.difference.render("z")
        ))
        .with_transcript(vec![
            "v = (z1, -2z3, -2z3, -z2-z3, z2+3z3, z3, -3z3, z4)".into(),
            format!("chi(v, v) = {}", beta.self_pairing.render("z")),
            format!("chi(v, c v) = {}", beta.cross_pairings[0].1.render("z")),
        ]),
    );
    ev.push(Evidence::new(
        "invariants",
        Status::from_bool(rep.invariant_rank < rep.lattice_rank),
        format!(
            "Lambda^G has rank {} < {}, so G-invariant classes cannot form a basis",
            rep.invariant_rank, rep.lattice_rank
        ),
    ));
    let ok = rep.verdict == Verdict::NoFullGInvariantSequence;
    let mut v = Evidence::new("verdict", Status::from_bool(ok), rep.verdict.to_string());
    if let Verdict::Inconclusive(why) = &rep.verdict {
        v.summary = format!("INCONCLUSIVE: {why}");
    }
    ev.push(v);
    Ok(Document::new("dp4-obstruction", rep.verdict.to_string(), ev, &Provenance::default()))
}

fn load_table(src: &FixtureSource, name: &str, prov: &mut Provenance) -> Result<CharTable> {
    let (fx, text) = src.group(name)?;
    prov.record(&text);
    CharTable::from_fixture(&fx)
}

fn decomposition_text(t: &CharTable, chi: &ClassFunction) -> Result<(String, Vec<(String, i64)>)> {
    let parts: Vec<(String, i64)> = t
        .decompose(chi)?
        .into_iter()
        .filter(|(_, m)| *m != BigInt::from(0))
        .map(|(l, m)| (l, i64::try_from(m).unwrap_or(i64::MAX)))
        .collect();
    let s = parts.iter().map(|(l, m)| if *m == 1 { l.clone() } else { format!("{m} {l}") }).collect::<Vec<_>>().join(" + ");
    Ok((s, parts))
}

fn labels(v: &[(String, i64)]) -> Vec<&str> {
    v.iter().map(|(l, _)| l.as_str()).collect()
}

fn wedge_doc(src: &FixtureSource, custom: Option<(&str, &str)>) -> Result<Document> {
    let mut prov = Provenance::default();
    let mut ev = Vec::new();
    if let Some((group, rep)) = custom {
        let t = load_table(src, group, &mut prov)?;
        let (s, parts) = decomposition_text(&t, &t.row(rep)?.wedge_square())?;
        ev.push(Evidence::new(format!("{group} ∧^2 {rep}"), Status::Info, s).with_data(json!(parts)));
        return Ok(finish("wedge2-decompose", ev, &prov));
    }
    let s5 = load_table(src, "s5", &mut prov)?;
    let a5 = load_table(src, "a5", &mut prov)?;
    let w5 = s5.row("W5")?;
    let (s, p) = decomposition_text(&s5, &w5.wedge_square())?;
    ev.push(Evidence::new("s5 ∧^2 W5", Status::from_bool(labels(&p) == ["W4", "W6"] && p.iter().all(|x| x.1 == 1)), s));
    let res = w5.restrict(a5.group())?;
    let (s, p) = decomposition_text(&a5, &res.wedge_square())?;
    ev.push(Evidence::new("a5 ∧^2 W5", Status::from_bool(labels(&p) == ["W3", "W3'", "W4"]), s));
    let c96 = load_table(src, "c9c6", &mut prov)?;
    let x10 = c96.row("X.10")?;
    let printed: Vec<String> = c96.in_fixture_order(x10).iter().map(|v| v.body()).collect();
    let (s, p) = decomposition_text(&c96, &x10.wedge_square())?;
    let want = ["X.2", "X.3", "X.6", "X.7", "X.8", "X.9", "X.10"];
    ev.push(
        Evidence::new("c9c6 ∧^2 X.10", Status::from_bool(labels(&p) == want && p.iter().all(|x| x.1 == 1)), s)
            .with_transcript(vec![format!("X.10 = ({})", printed.join(", "))]),
    );
    let c3 = load_table(src, "c3wr", &mut prov)?;
    let (s, p) = decomposition_text(&c3, &c3.row("X.13")?.wedge_square())?;
    let degs: Vec<String> = p.iter().map(|(l, _)| c3.row(l).ok().and_then(|r| r.degree()).map_or("?".into(), |d| d.to_string())).collect();
    ev.push(Evidence::new("c3wr ∧^2 X.13", Status::from_bool(degs == ["1", "2", "3", "3", "6"]), s).with_transcript(vec![format!(
        "dimensions {}",
        degs.join(", ")
    )]));
    Ok(finish("wedge2-decompose", ev, &prov))
}

fn sl2_doc(n: usize) -> Result<Document> {
    let rep = wedge_basis_report(n);
    let relations = (0..=n).all(|k| sl2rep::sym_module(k).check_relations().all())
        && WedgeModule::new(sl2rep::sym_module(n)).module.check_relations().all();
    let total: usize = rep.summands.iter().map(|(m, c)| (m + 1) * c).sum();
    let mut ev = vec![
        Evidence::new("relations", Status::from_bool(relations), "[H,X] = 2X, [H,Y] = -2Y, [X,Y] = H on Sym^k and the wedge"),
        Evidence::new("decomposition", Status::from_bool(total == n * (n + 1) / 2), rep.to_string().lines().next().unwrap_or("").to_string())
            .with_data(json!(rep.summands)),
    ];
    for (m, chain) in &rep.chains {
        let lines = chain.iter().enumerate().map(|(k, v)| format!("x{} = {}", *m as i64 - 2 * k as i64, rep.module.render(v))).collect();
        let annihilated = rep.module.apply_x(&chain[0]).iter().all(num_traits::Zero::is_zero);
        ev.push(Evidence::new(format!("Sym^{m}"), Status::from_bool(annihilated), "highest-weight vector and its lowering chain").with_transcript(lines));
    }
    if n == 4 {
        let w = &rep.module;
        let x2 = w.combination(&[(3, "w2∧w0"), (-2, "w4∧w-2")]).expect("labels exist");
        let found = highest_weight_vectors(w, 2);
        let scalar = found.first().and_then(|v| sl2rep::scalar_multiple(v, &x2));
        let chain = sl2rep::lowering_orbit(w, &x2, 2);
        let x0 = w.combination(&[(1, "w2∧w-2"), (-2, "w4∧w-4")]).expect("labels exist");
        let xm2 = w.combination(&[(1, "w0∧w-2"), (-1, "w2∧w-4")]).expect("labels exist");
        ev.push(Evidence::new(
            "reference x2",
            Status::from_bool(scalar.is_some() && chain[1] == x0 && chain[2] == xm2 && decompose_wedge(4) == [(2, 1), (6, 1)]),
            format!(
                "3 w2∧w0 - 2 w4∧w-2 spans the weight-2 highest weights (computed vector = {} times it); Y x2 = {}, Y^2 x2 = {}",
                scalar.map_or("?".into(), |s| crate::exactnum::fmt_rat(&s)),
                w.render(&chain[1]),
                w.render(&chain[2])
            ),
        ));
    }
    Ok(finish("sl2-basis", ev, &Provenance::default()))
}

fn scenario_evidence(src: &FixtureSource, sc: &ScenarioFixture, text: &FixtureText, prov: &mut Provenance) -> Result<Evidence> {
    prov.record(text);
    let t = load_table(src, &sc.group, prov)?;
    let s = scenario_from_decomposition(t.row(&sc.representation)?, &t, &sc.chosen)?;
    let rep = check_scenario(&s)?;
    let expected_pre = match sc.expect.as_str() {
        "PASS" => Precondition::Pass,
        "FAIL" => Precondition::Fail,
        other => return Err(Error::BadScenario(format!("{}: expect must be PASS or FAIL, got {other}", text.name))),
    };
    let dim_ok = sc.expect_dim.is_none_or(|d| d == rep.expected_dim);
    let ok = rep.precondition == expected_pre && dim_ok;
    Ok(Evidence::new(
        sc.name.clone(),
        Status::from_bool(ok),
        format!("precondition {} (expected {}), dim X = {}, r = {}", rep.precondition, sc.expect, rep.expected_dim, s.r),
    )
    .with_transcript(rep.to_string().lines().map(str::to_string).collect())
    .with_data(json!({
        "n": s.n,
        "dim_v": rep.dim_v,
        "r": s.r,
        "expected_dim": rep.expected_dim,
        "fiber_dim": rep.fiber_dim,
        "precondition": rep.precondition.to_string(),
        "geometric_hypothesis": rep.geometric_hypothesis,
    })))
}

fn linsec_doc(src: &FixtureSource, files: &[PathBuf]) -> Result<Document> {
    let mut prov = Provenance::default();
    let mut ev = Vec::new();
    if files.is_empty() {
        for name in src.scenario_names()? {
            let (sc, text) = src.scenario(&name)?;
            ev.push(scenario_evidence(src, &sc, &text, &mut prov)?);
        }
    } else {
        for f in files {
            let raw = std::fs::read_to_string(f).map_err(|e| Error::Io(format!("{}: {e}", f.display())))?;
            let text = FixtureText {
                name: f.display().to_string(),
                digest: crate::fixtures::digest_of(&raw),
                text: raw,
            };
            let sc: ScenarioFixture = parse_versioned(&text)?;
            ev.push(scenario_evidence(src, &sc, &text, &mut prov)?);
        }
    }
    ev.push(Evidence::new("irreducibility", Status::External, "whether X is irreducible of the expected dimension is not decided here"));
    Ok(finish("linsec-check", ev, &prov))
}

fn fixtures_doc(src: &FixtureSource) -> Result<Document> {
    let mut prov = Provenance::default();
    let mut ev = Vec::new();
    for name in src.group_names()? {
        let t = load_table(src, &name, &mut prov)?;
        let rep = t.verify();
        let summary = match &rep.first_violation {
            None => format!("{} characters of a group of order {}: all {} checks pass", t.labels().len(), t.group().order(), rep.checks.len()),
            Some(v) => format!("first violation: {v}"),
        };
        ev.push(Evidence::new(name, Status::from_bool(rep.passed()), summary));
    }
    for name in src.scenario_names()? {
        let (sc, text) = src.scenario(&name)?;
        prov.record(&text);
        ev.push(Evidence::new(name, Status::Pass, format!("scenario parses: {}", sc.name)));
    }
    Ok(finish("verify-fixtures", ev, &prov))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("equivkit").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn count_only() {
        assert_eq!(execute(&cfg(&["lines", "--count-only"])).unwrap(), ("16\n".to_string(), 0));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["equivkit", "no-such-command"]), 2);
        assert_eq!(run(["equivkit", "--fixtures", "/nonexistent", "verify-fixtures"]), 2);
        let (_, code) = execute(&cfg(&["verify-fixtures"])).unwrap();
        assert_eq!(code, 0);
    }

    #[test]
    fn obstruction_verdict() {
        let doc = document(&cfg(&["dp4-obstruction"])).unwrap();
        assert_eq!(doc.verdict, "NO_FULL_G_INVARIANT_SEQUENCE");
        assert!(doc.all_passed());
        let json = doc.to_json();
        assert!(json.contains("\"polynomial\""));
        assert_eq!(json, document(&cfg(&["dp4-obstruction"])).unwrap().to_json());
    }

    #[test]
    fn words_cover_the_group() {
        let d = dp4().unwrap();
        let w = element_words(&d.group, &["b", "c"]);
        assert_eq!(w.len(), 12);
        assert_eq!(w[d.group.identity()], "1");
        assert_eq!(w[d.group.generators()[0]], "b");
    }
}
