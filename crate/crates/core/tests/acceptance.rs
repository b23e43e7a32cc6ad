//! One PASS/FAIL line per acceptance criterion; fails if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{corpus_rings, oracle_graph, Oracle};
use divgraph_core::{
    phi, run_suite, AssocKind, AtomKind, Corpus, ElementId, ElementScope, EnumOptions, ExtNat, Lab,
    PropertyReport, Status, StructureClass, SuiteConfig, SuiteReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn id(i: usize) -> ElementId {
    ElementId::new(i)
}

fn suite(only: &[&str], jobs: usize) -> SuiteReport {
    let cfg = SuiteConfig {
        jobs,
        only: (!only.is_empty()).then(|| only.iter().map(|s| s.to_string()).collect()),
        ..SuiteConfig::default()
    };
    run_suite(&Corpus::default_corpus(), &cfg).expect("suite runs")
}

fn all_clean(report: &SuiteReport) -> Result<(), String> {
    for t in &report.theorems {
        ensure(
            t.status == Status::Pass && t.total_counterexamples == 0,
            || format!("{} {}: {:?}", t.id, t.status, t.counterexamples.first()),
        )?;
    }
    ensure(report.build_failures.is_empty(), || {
        format!("{:?}", report.build_failures)
    })
}

fn z2z2_regression() -> Outcome {
    let start = Instant::now();
    let lab = Lab::from_spec("Prod(Zmod(2),Zmod(2))").unwrap();
    let el = |s: &str| lab.element(s).unwrap();
    let (zero, e1, e2) = (el("(0,0)"), el("(1,0)"), el("(0,1)"));
    for alpha in [
        AtomKind::Irreducible,
        AtomKind::StrongIrreducible,
        AtomKind::MIrreducible,
    ] {
        for beta in [AssocKind::Assoc, AssocKind::Strong] {
            let g = lab.graph(zero, alpha, beta).unwrap();
            let names: Vec<&str> = g.vertices().iter().map(|v| v.name.as_str()).collect();
            ensure(names == ["(0,1)", "(1,0)"], || {
                format!("{alpha}/{beta}: vertices {names:?}")
            })?;
            ensure(g.edge_count() == 1, || {
                format!("{alpha}/{beta}: {} edges", g.edge_count())
            })?;
            ensure(g.loop_counts() == [ExtNat::Infinite; 2], || {
                format!("{alpha}/{beta}: loops {:?}", g.loop_counts())
            })?;
            for x in [e1, e2] {
                let h = lab.graph(x, alpha, beta).unwrap();
                ensure(
                    h.vertex_count() == 1 && h.loops(0) == ExtNat::Infinite,
                    || {
                        format!(
                            "{alpha}/{beta} x={}: {:?}",
                            lab.ring().name(x),
                            h.loop_counts()
                        )
                    },
                )?;
            }
        }
    }
    let p = PropertyReport::compute(&lab, ElementScope::Nonzero).unwrap();
    let got = [
        p.ufr(AtomKind::Irreducible, AssocKind::Assoc).holds,
        p.hfr(AtomKind::Irreducible).holds,
        p.ffr(AssocKind::Assoc).holds,
        p.bfr.holds,
        p.accp.holds,
    ];
    ensure(got == [false, false, false, false, true], || {
        format!("UFR/HFR/FFR/BFR/ACCP = {got:?}")
    })?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn classification_oracle() -> Outcome {
    let start = Instant::now();
    let mut elements = 0;
    for ring in corpus_rings() {
        let o = Oracle::new(&ring);
        let lab = Lab::new(ring);
        for a in o.non_units() {
            let p = lab.profile(id(a)).map_err(|e| e.to_string())?;
            for kind in AtomKind::ALL {
                ensure(p.is(kind) == o.is_atom(kind, a), || {
                    format!(
                        "{} {} {kind}",
                        lab.ring().spec_string(),
                        lab.ring().name(id(a))
                    )
                })?;
            }
            elements += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("{elements} non-units, {t:.2?}"))
}

fn hierarchy_and_zero() -> Outcome {
    all_clean(&suite(&["T-hierarchy", "T-zero"], 0))?;
    for ring in corpus_rings() {
        let o = Oracle::new(&ring);
        for a in o.non_units().into_iter().filter(|&a| a != o.zero) {
            let is = |k| o.is_atom(k, a);
            let chain = [
                (AtomKind::VeryStrongIrreducible, AtomKind::MIrreducible),
                (AtomKind::MIrreducible, AtomKind::StrongIrreducible),
                (AtomKind::StrongIrreducible, AtomKind::Irreducible),
                (AtomKind::Prime, AtomKind::Irreducible),
            ];
            for (p, q) in chain {
                ensure(!is(p) || is(q), || {
                    format!(
                        "{}: {} is {p} but not {q}",
                        ring.spec_string(),
                        ring.name(id(a))
                    )
                })?;
            }
        }
    }
    Ok(String::new())
}

fn inclusions_and_quotients() -> Outcome {
    let report = suite(&["T-inclusions"], 0);
    all_clean(&report)?;
    let t = &report.theorems[0];
    for key in ["strict-vs-in-m", "merged-loop"] {
        ensure(t.note(key).is_some(), || {
            format!("no {key} witness reported")
        })?;
    }

    // strict inclusion G_vs ⊊ G_m, found by the oracle
    let strict = corpus_rings().into_iter().find_map(|r| {
        let o = Oracle::new(&r);
        o.non_units().into_iter().find_map(|x| {
            AssocKind::RELATIONS.into_iter().find_map(|b| {
                let vs = oracle_graph(&o, x, AtomKind::VeryStrongIrreducible, b);
                let m = oracle_graph(&o, x, AtomKind::MIrreducible, b);
                (vs != m).then(|| format!("{} x={} {b}", r.spec_string(), r.name(id(x))))
            })
        })
    });
    let strict = strict.ok_or("no strict vs-irr ⊊ m-irr graph in the corpus")?;

    // Zmod(6), x=0: two adjacent ≅-classes merge into one looped ≈-class
    let r = divgraph_core::FiniteRing::from_spec("Zmod(6)").unwrap();
    let o = Oracle::new(&r);
    let merged = AtomKind::ALL.into_iter().find(|&alpha| {
        let fine = oracle_graph(&o, 0, alpha, AssocKind::VeryStrong);
        let coarse = oracle_graph(&o, 0, alpha, AssocKind::Strong);
        fine.edges.iter().any(|&(u, v)| {
            let (a, b) = (fine.reps[u], fine.reps[v]);
            let target = coarse.reps.iter().position(|&c| o.strong(c, a));
            o.strong(a, b) && target.is_some_and(|t| coarse.loops[t] != ExtNat::ZERO)
        })
    });
    let merged = merged.ok_or("no loop created by merging in Zmod(6) at 0")?;
    Ok(format!(
        "strict at {strict}; merged loop for alpha={merged}"
    ))
}

fn presimplifiable_collapse() -> Outcome {
    let rings = [
        "Zmod(4)",
        "Zmod(8)",
        "Zmod(9)",
        "PolyQ(Zmod(2),x^2+x+1)",
        "PolyQ(Zmod(3),x^2+1)",
        "PolyQ(Zmod(2),x^2)",
        "PolyQ(Zmod(4),x^2)",
    ];
    let mut compared = 0;
    for s in rings {
        let lab = Lab::from_spec(s).unwrap();
        let o = Oracle::new(lab.ring());
        ensure(o.is_presimplifiable(), || {
            format!("{s} is not presimplifiable")
        })?;
        for x in o.non_units().into_iter().filter(|&x| x != o.zero) {
            for beta in AssocKind::RELATIONS {
                let base = lab.graph(id(x), AtomKind::Irreducible, beta).unwrap();
                let want = oracle_graph(&o, x, AtomKind::Irreducible, beta);
                for alpha in AtomKind::IRREDUCIBLES {
                    let g = lab.graph(id(x), alpha, beta).unwrap();
                    ensure(g.literally_equal(&base), || {
                        format!("{s} x={} {alpha}/{beta}", g.x_name())
                    })?;
                    ensure(oracle_graph(&o, x, alpha, beta) == want, || {
                        format!("oracle graphs differ on {s} {alpha}/{beta}")
                    })?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} graphs"))
}

fn section_four_theorems() -> Outcome {
    let report = suite(&["T-vsatomic", "T-matomic", "T-converse", "T-diameter"], 0);
    all_clean(&report)?;
    let vs = report.theorem("T-vsatomic").unwrap();
    ensure(vs.note("unit-cardinality").is_some(), || {
        "no unit-cardinality note".into()
    })?;
    let r = divgraph_core::FiniteRing::from_spec("Zmod(4)").unwrap();
    let o = Oracle::new(&r);
    let two = r.parse_element("2").unwrap().index();
    let orbit: BTreeSet<usize> = (0..o.n)
        .filter(|&u| o.unit[u])
        .map(|u| o.mul[u][two])
        .collect();
    let units = o.unit.iter().filter(|&&u| u).count();
    ensure(orbit == BTreeSet::from([two]) && units == 2, || {
        format!("orbit {orbit:?}, |U| = {units}")
    })?;
    Ok("Zmod(4): {u*2} = {2} while |U| = 2".into())
}

fn phi_formula() -> Outcome {
    let report = suite(&["T-phi"], 0);
    all_clean(&report)?;
    let checked = report.theorems[0].checked;
    ensure(checked >= 10_000, || {
        format!("only {checked} factorizations")
    })?;

    let mut direct = 0u64;
    for ring in corpus_rings().into_iter().filter(|r| r.size() <= 16) {
        let lab = Lab::new(ring);
        for x in lab.ring().non_unit_list() {
            for alpha in AtomKind::IRREDUCIBLES {
                for beta in AssocKind::RELATIONS {
                    let g = lab.graph(x, alpha, beta).unwrap();
                    let e = lab
                        .enumerate(x, alpha, beta, EnumOptions::capped(6))
                        .unwrap();
                    for f in &e.factorizations {
                        let n = f.len() as u64;
                        let mut reps = f.representatives.clone();
                        reps.dedup();
                        let s = reps.len() as u64;
                        let p = phi(n, s);
                        let sub = g
                            .factorization_subgraph(lab.ring(), f)
                            .map_err(|e| e.to_string())?;
                        ensure(sub.weight == p, || {
                            format!("weight {} != phi({n},{s})", sub.weight)
                        })?;
                        ensure(
                            n - 1 <= p && p <= n * (n - 1) / 2 + u64::from(n == 1),
                            || format!("phi({n},{s}) = {p} out of bounds"),
                        )?;
                        for (i, &u) in sub.vertices.iter().enumerate() {
                            ensure(ExtNat::Finite(sub.loops[i]) <= g.loops(u), || {
                                "loops exceed host".into()
                            })?;
                            for &v in &sub.vertices[i + 1..] {
                                ensure(g.adjacent(u, v), || "factor classes not adjacent".into())?;
                            }
                        }
                        direct += 1;
                    }
                }
            }
        }
    }
    ensure(direct >= 10_000, || {
        format!("only {direct} factorizations checked directly")
    })?;
    Ok(format!("{checked} in suite, {direct} direct"))
}

fn ffr_characterization() -> Outcome {
    all_clean(&suite(&["T-ffr"], 0))?;
    let mut graphs = 0;
    for ring in corpus_rings() {
        let lab = Lab::new(ring);
        for x in lab.ring().non_unit_list() {
            for alpha in AtomKind::ALL {
                for beta in AssocKind::ALL {
                    let g = lab.graph(x, alpha, beta).unwrap();
                    let l = g.loop_total();
                    if !l.is_finite() {
                        continue;
                    }
                    let want = ExtNat::Finite(2 * g.edge_count() as u64) + l;
                    ensure(g.sum_degl() == want, || {
                        format!(
                            "{} x={} {alpha}/{beta}: sum degl {} != {want}",
                            g.ring(),
                            g.x_name(),
                            g.sum_degl()
                        )
                    })?;
                    graphs += 1;
                }
            }
        }
    }
    Ok(format!("degl identity on {graphs} finite graphs"))
}

fn prop66_and_noetherian() -> Outcome {
    all_clean(&suite(&["T-prop66", "T-noeth"], 0))?;
    Ok(String::new())
}

fn ufr_structure() -> Outcome {
    all_clean(&suite(&["T-ufr"], 0))?;
    let positives = [
        "Zmod(2)",
        "Zmod(3)",
        "Zmod(4)",
        "Zmod(5)",
        "Zmod(7)",
        "Zmod(8)",
        "Zmod(9)",
        "Zmod(16)",
        "Zmod(25)",
        "Zmod(27)",
        "Zmod(32)",
        "PolyQ(Zmod(2),x^2+x+1)",
        "PolyQ(Zmod(3),x^2+1)",
        "PolyQ(Zmod(2),x^2)",
    ];
    // Z4[x]/(x^2) is local with non-principal M and M^2 = (2x) != 0
    let negatives = ["Zmod(6)", "Zmod(12)", "PolyQ(Zmod(4),x^2)"];
    let mut pos = 0;
    for ring in corpus_rings() {
        let spec = ring.spec_string().to_string();
        let o = Oracle::new(&ring);
        let nonunits: BTreeSet<usize> = o.non_units().into_iter().collect();
        let local = o.idempotents() == 2;
        let expected = local
            && ((0..o.n).any(|m| o.ideal[m] == nonunits)
                || nonunits
                    .iter()
                    .all(|&a| nonunits.iter().all(|&b| o.mul[a][b] == o.zero)));
        let lab = Lab::new(ring);
        let p = PropertyReport::compute(&lab, ElementScope::Nonzero).map_err(|e| e.to_string())?;
        for alpha in AtomKind::IRREDUCIBLES {
            for beta in AssocKind::RELATIONS {
                ensure(p.ufr(alpha, beta).holds == expected, || {
                    format!(
                        "{spec} {alpha}/{beta}: UFR {} but structure says {expected}",
                        p.ufr(alpha, beta).holds
                    )
                })?;
            }
        }
        ensure(
            (p.structure.class != StructureClass::None) == expected,
            || format!("{spec}: structure class"),
        )?;
        if positives.contains(&spec.as_str()) {
            ensure(expected, || format!("{spec} should be a UFR"))?;
        }
        if negatives.contains(&spec.as_str()) || spec.starts_with("Prod(") {
            ensure(!expected, || format!("{spec} should not be a UFR"))?;
        }
        if expected {
            pos += 1;
            for x in o.non_units().into_iter().filter(|&x| x != o.zero) {
                for alpha in AtomKind::IRREDUCIBLES {
                    for beta in AssocKind::RELATIONS {
                        let g = lab.graph(id(x), alpha, beta).unwrap();
                        ensure(g.is_pseudo_clique() && g.reduced().is_complete(), || {
                            format!(
                                "{spec} x={} {alpha}/{beta} is not a pseudo-clique",
                                g.x_name()
                            )
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("{pos} positive rings"))
}

fn determinism_and_performance() -> Outcome {
    let start = Instant::now();
    let one = suite(&[], 1);
    let full = start.elapsed();
    let many = suite(&[], 8);
    ensure(one.render_text() == many.render_text(), || {
        "text reports differ".into()
    })?;
    ensure(one.to_json() == many.to_json(), || {
        "JSON reports differ".into()
    })?;
    all_clean(&one)?;
    ensure(full <= Duration::from_secs(300), || {
        format!("single-thread suite took {full:?}")
    })?;
    Ok(format!("single-thread suite {full:.2?}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("Z2xZ2 regression", z2z2_regression),
        ("atom classification matches oracle", classification_oracle),
        ("hierarchy and zero theorems", hierarchy_and_zero),
        (
            "inclusion and quotient lemmas with strictness witnesses",
            inclusions_and_quotients,
        ),
        ("presimplifiable collapse", presimplifiable_collapse),
        (
            "vs/m-atomic, converse and diameter theorems",
            section_four_theorems,
        ),
        ("phi formula", phi_formula),
        (
            "FFR characterization and degl identity",
            ffr_characterization,
        ),
        (
            "FFR/BFR equivalences and Noetherian criterion",
            prop66_and_noetherian,
        ),
        ("UFR structure theorem", ufr_structure),
        ("determinism and performance", determinism_and_performance),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(info) if info.is_empty() => println!("PASS {:>2} {name}", i + 1),
            Ok(info) => println!("PASS {:>2} {name} ({info})", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
