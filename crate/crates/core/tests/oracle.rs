mod common;

use std::collections::BTreeSet;

use common::{
    corpus_rings, oracle_diameter, oracle_factorizations, oracle_graph, oracle_longer_than,
    oracle_omega, Oracle,
};
use divgraph_core::{AssocKind, AtomKind, ElementId, EnumOptions, ExtNat, Lab, StructureClass};

fn id(i: usize) -> ElementId {
    ElementId::new(i)
}

fn small_labs(max: usize) -> Vec<(Lab, Oracle)> {
    corpus_rings()
        .into_iter()
        .filter(|r| r.size() <= max)
        .map(|r| {
            let o = Oracle::new(&r);
            (Lab::new(r), o)
        })
        .collect()
}

#[test]
fn classification_matches_definitions_on_corpus() {
    for ring in corpus_rings() {
        let o = Oracle::new(&ring);
        let lab = Lab::new(ring);
        for a in 0..o.n {
            assert_eq!(lab.ring().is_unit(id(a)), o.unit[a]);
            if o.unit[a] {
                assert!(lab.profile(id(a)).is_err());
                continue;
            }
            let p = lab.profile(id(a)).unwrap();
            for kind in AtomKind::ALL {
                assert_eq!(
                    p.is(kind),
                    o.is_atom(kind, a),
                    "{} {} {kind}",
                    lab.ring().spec_string(),
                    lab.ring().name(id(a))
                );
            }
            assert_eq!(p.self_vs, o.very_strong(a, a));
        }
    }
}

#[test]
fn relations_and_partitions_match_definitions() {
    for (lab, o) in small_labs(32) {
        let rel = lab.relations();
        for a in 0..o.n {
            for b in 0..o.n {
                for kind in AssocKind::ALL {
                    assert_eq!(rel.related(kind, id(a), id(b)), o.related(kind, a, b));
                }
            }
        }
        for kind in AssocKind::ALL {
            let got: BTreeSet<Vec<usize>> = lab
                .partition(kind)
                .unwrap()
                .classes()
                .iter()
                .map(|c| c.iter().map(|e| e.index()).collect())
                .collect();
            let want: BTreeSet<Vec<usize>> = o.classes(kind).into_iter().collect();
            assert_eq!(got, want, "{} {kind}", lab.ring().spec_string());
        }
    }
}

#[test]
fn presimplifiable_matches_definition() {
    for ring in corpus_rings() {
        let o = Oracle::new(&ring);
        assert_eq!(
            divgraph_core::associates::is_presimplifiable(&ring),
            o.is_presimplifiable()
        );
    }
}

#[test]
fn closure_matches_brute_force() {
    for (lab, o) in small_labs(32) {
        for kind in AtomKind::ALL {
            let got: BTreeSet<usize> = lab.closure(kind).ones().collect();
            let want: BTreeSet<usize> = o.closure(&o.atoms(kind)).into_iter().collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn graphs_match_factorization_witnesses() {
    let mut graphs = 0;
    for (lab, o) in small_labs(16) {
        for x in o.non_units() {
            for alpha in AtomKind::ALL {
                for beta in AssocKind::ALL {
                    let g = lab.graph(id(x), alpha, beta).unwrap();
                    let want = oracle_graph(&o, x, alpha, beta);
                    let reps: Vec<usize> = g.representatives().iter().map(|e| e.index()).collect();
                    let ctx = format!(
                        "{} x={} {alpha}/{beta}",
                        lab.ring().spec_string(),
                        lab.ring().name(id(x))
                    );
                    assert_eq!(reps, want.reps, "{ctx}");
                    let edges: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
                    assert_eq!(edges, want.edges, "{ctx}");
                    assert_eq!(g.loop_counts(), &want.loops[..], "{ctx}");
                    assert_eq!(g.diameter(), oracle_diameter(&want), "{ctx}");
                    assert_eq!(g.pseudo_clique_number(), oracle_omega(&want), "{ctx}");
                    graphs += 1;
                }
            }
        }
    }
    assert!(graphs > 1000, "only {graphs} graphs compared");
}

#[test]
fn enumeration_matches_brute_force() {
    const CAP: usize = 5;
    for (lab, o) in small_labs(16) {
        for x in o.non_units() {
            for alpha in [
                AtomKind::Irreducible,
                AtomKind::MIrreducible,
                AtomKind::VeryStrongIrreducible,
            ] {
                for beta in AssocKind::ALL {
                    let e = lab
                        .enumerate(id(x), alpha, beta, EnumOptions::capped(CAP))
                        .unwrap();
                    let got: Vec<Vec<usize>> = e
                        .factorizations
                        .iter()
                        .map(|f| f.representatives.iter().map(|r| r.index()).collect())
                        .collect();
                    let unique: BTreeSet<Vec<usize>> = got.iter().cloned().collect();
                    assert_eq!(unique.len(), got.len(), "duplicate factorization");
                    for f in &e.factorizations {
                        let prod = f
                            .factors
                            .iter()
                            .fold(lab.ring().one(), |p, &a| lab.ring().mul(p, a));
                        assert_eq!(prod, id(x));
                    }
                    let want = oracle_factorizations(&o, x, alpha, beta, CAP);
                    let ctx = format!(
                        "{} x={} {alpha}/{beta}",
                        lab.ring().spec_string(),
                        lab.ring().name(id(x))
                    );
                    assert_eq!(unique, want, "{ctx}");
                    assert_eq!(e.truncated, oracle_longer_than(&o, x, alpha, CAP), "{ctx}");
                    assert!(!e.limited);
                }
            }
        }
    }
}

#[test]
fn structure_matches_idempotent_and_ideal_tests() {
    for ring in corpus_rings() {
        let o = Oracle::new(&ring);
        let s = divgraph_core::props::structure(&ring);
        // a finite commutative ring is local iff 0 and 1 are its only idempotents
        let local = o.idempotents() == 2;
        let nonunits: BTreeSet<usize> = o.non_units().into_iter().collect();
        let field = nonunits.len() == 1;
        let principal_max = local && (0..o.n).any(|m| o.ideal[m] == nonunits);
        let msq0 = local
            && nonunits
                .iter()
                .all(|&a| nonunits.iter().all(|&b| o.mul[a][b] == o.zero));
        let ctx = ring.spec_string().to_string();
        assert_eq!(s.is_local, local, "{ctx}");
        assert_eq!(s.is_field, field, "{ctx}");
        // a field is local with principal maximal ideal (0)
        assert_eq!(s.is_spir, principal_max, "{ctx}");
        assert_eq!(s.is_local_msq0, msq0, "{ctx}");
        let expected = if field {
            StructureClass::Field
        } else if principal_max {
            StructureClass::Spir
        } else if msq0 {
            StructureClass::LocalMsq0
        } else {
            StructureClass::None
        };
        assert_eq!(s.class, expected, "{ctx}");
    }
}

#[test]
fn lengths_match_exact_powers() {
    for (lab, o) in small_labs(16) {
        for kind in AtomKind::ALL {
            let powers = o.exact_powers(&o.atoms(kind));
            for x in o.non_units() {
                let l = lab.lengths(kind, id(x));
                for k in 1..=common::WINDOW {
                    assert_eq!(l.contains(k), powers[k - 1].contains(&x));
                }
                let hits: Vec<usize> = (1..=common::WINDOW)
                    .filter(|&k| powers[k - 1].contains(&x))
                    .collect();
                let want = match hits.last() {
                    Some(&k) if k > common::TAIL => ExtNat::Infinite,
                    Some(&k) => ExtNat::Finite(k as u64),
                    None => ExtNat::ZERO,
                };
                assert_eq!(l.max(), want);
            }
        }
    }
}
