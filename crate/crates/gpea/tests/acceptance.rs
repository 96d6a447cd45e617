//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `--nocapture`) and asserting its runtime budget.
//!
//! Criteria run over the standard corpus: every isomorphism class of order
//! at most four plus the constructed zoo (chains, diamond, vee, cone
//! intervals up to 24 elements, the smallest non-commutative model, and
//! pairwise direct sums capped at 24 elements).

use std::time::{Duration, Instant};

use gpea::algebra::{FiniteGpea, SumTable};
use gpea::axioms::{self, Axiom};
use gpea::cover;
use gpea::exocenter::{self, ExoMap};
use gpea::laws::{self, ModelCtx};
use gpea::set::ElementSet;
use gpea::typetheory;
use gpea::{cli, construct};

fn run_selected(ids: &[&str]) -> (usize, Vec<laws::LawResult>) {
    let selection: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    let mut failures = Vec::new();
    let corpus = laws::acceptance_corpus();
    let mut checks = 0;
    for model in &corpus {
        let ctx = ModelCtx::new(&model.id, model.model.clone());
        let results = laws::verify_laws_on(&ctx, Some(&selection)).expect("known law ids");
        checks += results.len();
        failures.extend(results.into_iter().filter(|r| !r.pass));
    }
    (checks, failures)
}

fn report(criterion: &str, t0: Instant, budget: Duration, checks: usize, failures: &[laws::LawResult]) {
    let elapsed = t0.elapsed();
    for f in failures {
        eprintln!("  [{}] {} @ {}: {}", criterion, f.law, f.model, f.witness.as_deref().unwrap_or(""));
    }
    let status = if failures.is_empty() && elapsed <= budget { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} ({checks} checks, {} failures, {:.2?} of {:.0?} budget)",
        failures.len(),
        elapsed,
        budget
    );
    assert!(failures.is_empty(), "criterion {criterion} has failing checks");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_1_axiom_kernel() {
    let t0 = Instant::now();
    let (checks, failures) = run_selected(&[
        "SlashProps.i",
        "SlashProps.ii",
        "SlashProps.iii",
        "SlashProps.iv",
        "oplusdist",
        "veeopluswedge",
        "cancel.leq",
    ]);
    report("1 (axiom kernel)", t0, Duration::from_secs(10), checks, &failures);
}

#[test]
fn criterion_2_exocenter() {
    let t0 = Instant::now();
    let (mut checks, mut failures) = run_selected(&[
        "piprime",
        "EXCprop.i",
        "EXCprop.ii",
        "EXCprop.iii",
        "EXCprop.iv",
        "EXCprop.v",
        "EXCprop.vi",
        "EXCprop.vii",
        "EXCprop.viii",
        "EXCprop.ix",
        "EXCprop.x",
        "circ.i",
        "circ.ii",
        "boolalg",
        "CentId=piE",
        "CIposet",
        "piEnormal",
    ]);

    // exhaustive map validation agrees with summand-based enumeration on
    // every corpus model with at most four elements
    for model in laws::acceptance_corpus() {
        let e = &model.model;
        let n = e.order();
        if n > 4 {
            continue;
        }
        checks += 1;
        let mut brute: Vec<Vec<usize>> = Vec::new();
        let total: usize = n.pow(n as u32);
        for code in 0..total {
            let mut values = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                values.push(c % n);
                c /= n;
            }
            if exocenter::is_exomap(e, &values) {
                brute.push(values);
            }
        }
        brute.sort();
        let mut enumerated: Vec<Vec<usize>> =
            exocenter::exocenter(e).iter().map(|m| m.values().to_vec()).collect();
        enumerated.sort();
        if brute != enumerated {
            failures.push(laws::LawResult {
                law: "map-validation".into(),
                model: model.id.clone(),
                pass: false,
                witness: Some(format!("{} brute maps vs {} enumerated", brute.len(), enumerated.len())),
            });
        }
    }
    report("2 (exocenter)", t0, Duration::from_secs(60), checks, &failures);
}

#[test]
fn criterion_3_center() {
    let t0 = Instant::now();
    let (checks, failures) = run_selected(&[
        "CentProp.i",
        "CentProp.ii",
        "CentProp.iii",
        "centr",
        "pic",
        "ceprop.i",
        "ceprop.ii",
        "ceprop.iii",
        "ceprop.iv",
        "ceprop.v",
        "ceprop.vi",
        "ceprop.vii",
        "ceprop.viii",
        "ceprop.ix",
        "ceprop.x",
        "ceprop.xi",
        "centerless.i",
        "centerless.ii",
        "centerless.iii",
    ]);
    report("3 (center)", t0, Duration::from_secs(30), checks, &failures);
}

#[test]
fn criterion_4_covers() {
    let t0 = Instant::now();
    let (mut checks, mut failures) = run_selected(&[
        "ExCovExists",
        "ExCovProp.i",
        "ExCovProp.ii",
        "ExCovProp.iii",
        "ExCovProp.iv",
        "ExCovProp.v",
        "ExCovProp.vi",
        "ExCovProp.vii",
        "ExCovProp.viii",
        "ThetasbgammaGBA",
        "gammahullsys.system",
        "gammahullsys.invariants",
        "gammahullsys.central",
        "disjointgammasbei",
        "COGPEA.co1",
        "COGPEA.co2",
    ]);
    // orthocompleteness holds with a certificate on every model
    for model in laws::acceptance_corpus() {
        checks += 1;
        let cert = cover::is_cogpea(&model.model);
        if !cert.holds {
            failures.push(laws::LawResult {
                law: "is_cogpea".into(),
                model: model.id.clone(),
                pass: false,
                witness: Some(format!("{:?}", cert.failure)),
            });
        }
    }
    report("4 (covers)", t0, Duration::from_secs(30), checks, &failures);
}

#[test]
fn criterion_5_type_theory() {
    let t0 = Instant::now();
    let (checks, failures) = run_selected(&[
        "QK.i",
        "QK.ii",
        "QK.iii",
        "QK.iv",
        "QK.v",
        "centrTD",
        "TypeClass",
        "kstar",
        "type.lemma.i",
        "type.lemma.ii",
        "decompos",
        "decompos.uniqueness",
        "tau",
        "I-II-III",
        "I-II-III.uniqueness",
        "I-II-III.refinements",
    ]);
    report("5 (type theory)", t0, Duration::from_secs(300), checks, &failures);
}

#[test]
fn criterion_6_closure_oracle() {
    let t0 = Instant::now();
    let mut checks = 0usize;
    let mut failures: Vec<laws::LawResult> = Vec::new();
    for model in laws::acceptance_corpus() {
        let e = &model.model;
        let n = e.order();
        if n > 4 {
            continue;
        }
        let covers = cover::cover_system(e);
        for mask in 0..(1usize << n) {
            checks += 1;
            let q = ElementSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let fixpoint = typetheory::closure_gamma(e, &q);
            let mut by_families = ElementSet::empty(n);
            // direct route: orthosum every cover-orthogonal subset of q
            let members: Vec<usize> = q.iter().collect();
            for sub in 0..(1usize << members.len()) {
                let family: Vec<usize> = members
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| sub >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect();
                let disjoint = family.iter().enumerate().all(|(i, &x)| {
                    family
                        .iter()
                        .skip(i + 1)
                        .all(|&y| covers.gamma[x].meet(&covers.gamma[y]).is_zero())
                });
                if disjoint {
                    if let Some(total) = e.orthosum(&family) {
                        by_families.insert(total);
                    }
                }
            }
            if fixpoint != by_families {
                failures.push(laws::LawResult {
                    law: "closure-oracle".into(),
                    model: model.id.clone(),
                    pass: false,
                    witness: Some(format!("Q={{{q}}}: {{{fixpoint}}} vs {{{by_families}}}")),
                });
            }
        }
    }
    report("6 (closure oracle)", t0, Duration::from_secs(60), checks, &failures);
}

#[test]
fn criterion_7_negative_controls() {
    let t0 = Instant::now();
    let mut checks = 0usize;
    let mut failures: Vec<laws::LawResult> = Vec::new();
    let mut control = |name: &str, table: SumTable, axiom: Axiom, witness: &[usize]| {
        checks += 1;
        let report = axioms::check_gpea(&table);
        let ok = FiniteGpea::from_table(&table).is_err()
            && report.first_witness(axiom) == Some(witness);
        if !ok {
            failures.push(laws::LawResult {
                law: name.into(),
                model: "corrupted".into(),
                pass: false,
                witness: Some(format!("report: {report}")),
            });
        }
    };

    // positivity break: 1+1 = 0 on the two-element carrier
    control(
        "positivity-control",
        SumTable::from_sums(2, &[(1, 1, 0)]).unwrap(),
        Axiom::Gpea4,
        &[1, 1],
    );
    // cancellation break: 1+1 = 1+2 on the diamond carrier
    control(
        "cancellation-control",
        SumTable::from_sums(4, &[(1, 1, 3), (1, 2, 3), (2, 1, 3)]).unwrap(),
        Axiom::Gpea3,
        &[1, 1, 2],
    );
    // associativity break: (1+1)+1 defined one way only
    control(
        "associativity-control",
        SumTable::from_sums(4, &[(1, 1, 2), (2, 1, 3)]).unwrap(),
        Axiom::Gpea1,
        &[1, 1, 1],
    );

    // a non-central ideal in the vee yields no complement
    checks += 1;
    let v3 = construct::from_sums(3, &[]).unwrap();
    let ideal = ElementSet::from_iter(3, [0, 1]);
    assert!(axioms::is_ideal(&v3, &ideal));
    if axioms::central_ideal_complement(&v3, &ideal).is_some() {
        failures.push(laws::LawResult {
            law: "vee-noncentral-control".into(),
            model: "v3".into(),
            pass: false,
            witness: Some("complement unexpectedly present".into()),
        });
    }
    report("7 (negative controls)", t0, Duration::from_secs(10), checks, &failures);
}

#[test]
fn criterion_8_determinism() {
    let t0 = Instant::now();
    let args: Vec<String> = ["gpea", "laws", "--corpus", "4", "--format", "machine"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut first = Vec::new();
    let code1 = cli::run(&args, &mut first);
    let mut second = Vec::new();
    let code2 = cli::run(&args, &mut second);
    let mut failures: Vec<laws::LawResult> = Vec::new();
    if code1 != 0 || code2 != 0 {
        failures.push(laws::LawResult {
            law: "determinism".into(),
            model: "corpus4".into(),
            pass: false,
            witness: Some(format!("exit codes {code1}/{code2}")),
        });
    }
    if first != second {
        failures.push(laws::LawResult {
            law: "determinism".into(),
            model: "corpus4".into(),
            pass: false,
            witness: Some("outputs differ between runs".into()),
        });
    }
    assert!(first.ends_with(b"record=summary models=9 pass=1269 fail=0\n"));
    report("8 (determinism)", t0, Duration::from_secs(60), 2, &failures);
}

/// The canonical example maps stay available to scripts: identity and zero
/// are always present in an exocenter listing.
#[test]
fn exocenter_contains_bounds_everywhere() {
    for model in laws::acceptance_corpus() {
        let gex = exocenter::exocenter(&model.model);
        let n = model.model.order();
        assert!(gex.contains(&ExoMap::zero(n)), "{}: zero map missing", model.id);
        assert!(gex.contains(&ExoMap::identity(n)), "{}: identity missing", model.id);
    }
}
