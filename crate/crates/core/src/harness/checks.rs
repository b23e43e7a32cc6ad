//! The individual theorem checks. Each one runs on a single ring and records
//! every instance it asserts.

use crate::associates::{is_presimplifiable, AssocKind};
use crate::atoms::AtomKind;
use crate::error::Result;
use crate::extnat::ExtNat;
use crate::factor::{EnumOptions, Enumeration};
use crate::graph::{phi, DivisorGraph};
use crate::lab::Lab;
use crate::props::{ElementScope, PropertyReport, StructureClass};
use crate::ring::{ElementId, FiniteRing};

use super::{Counterexample, Findings, RingCase};

type CheckFn = fn(&Ctx<'_>, &mut Findings) -> Result<()>;

/// A named, universally quantified assertion.
pub struct Theorem {
    pub id: &'static str,
    pub domain: &'static str,
    check: CheckFn,
}

impl std::fmt::Debug for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Theorem").field("id", &self.id).finish()
    }
}

/// All checks, in report order.
pub static THEOREMS: [Theorem; 18] = [
    Theorem {
        id: "T-hierarchy",
        domain: "rings x non-units",
        check: hierarchy,
    },
    Theorem {
        id: "T-zero",
        domain: "rings",
        check: zero,
    },
    Theorem {
        id: "T-collapse",
        domain: "presimplifiable rings x elements x beta x irreducible alpha",
        check: collapse,
    },
    Theorem {
        id: "T-inclusions",
        domain: "rings x elements x (alpha chain x beta, beta chain x alpha)",
        check: inclusions,
    },
    Theorem {
        id: "T-vsatomic",
        domain: "rings x very strongly irreducible elements",
        check: vsatomic,
    },
    Theorem {
        id: "T-matomic",
        domain: "rings x m-irreducible elements",
        check: matomic,
    },
    Theorem {
        id: "T-converse",
        domain: "rings x elements x three graph-shape clauses",
        check: converse,
    },
    Theorem {
        id: "T-diameter",
        domain: "rings x (strongly) irreducible elements",
        check: diameter,
    },
    Theorem {
        id: "T-phi",
        domain: "rings x elements x alpha x beta x enumerated factorizations",
        check: phi_check,
    },
    Theorem {
        id: "T-accp",
        domain: "rings x (alpha, beta)",
        check: accp,
    },
    Theorem {
        id: "T-bfr",
        domain: "rings x elements x alpha x beta",
        check: bfr,
    },
    Theorem {
        id: "T-ffr",
        domain: "rings of size <= 64 x elements x beta",
        check: ffr,
    },
    Theorem {
        id: "T-wffr",
        domain: "rings x elements x beta",
        check: wffr,
    },
    Theorem {
        id: "T-idf",
        domain: "rings x elements x irreducible alpha x beta",
        check: idf,
    },
    Theorem {
        id: "T-prop66",
        domain: "rings x irreducible alpha x associate beta",
        check: prop66,
    },
    Theorem {
        id: "T-noeth",
        domain: "rings",
        check: noeth,
    },
    Theorem {
        id: "T-ufr",
        domain: "rings x irreducible alpha x associate beta (x elements when UFR)",
        check: ufr,
    },
    Theorem {
        id: "T-z2z2",
        domain: "Prod(Zmod(2),Zmod(2)) x fixed (alpha, beta) grid",
        check: z2z2,
    },
];

pub fn theorem(id: &str) -> Option<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id == id)
}

/// Run one check, turning an internal error into a counterexample.
pub(super) fn run(t: &Theorem, case: &RingCase, scope: ElementScope) -> Findings {
    let ctx = Ctx { case, scope };
    let mut findings = Findings::default();
    if let Err(e) = (t.check)(&ctx, &mut findings) {
        findings.failures.push(Counterexample {
            ring: case.spec.clone(),
            x: None,
            alpha: None,
            beta: None,
            detail: format!("error: {e}"),
        });
    }
    findings
}

const IRREDUCIBLE_GRID: [AtomKind; 4] = AtomKind::IRREDUCIBLES;
const ASSOCIATE_GRID: [AssocKind; 3] = AssocKind::RELATIONS;
/// `(finer, coarser)` associate relations.
const BETA_CHAIN: [(AssocKind, AssocKind); 3] = [
    (AssocKind::None, AssocKind::VeryStrong),
    (AssocKind::VeryStrong, AssocKind::Strong),
    (AssocKind::Strong, AssocKind::Assoc),
];
/// Results kept per enumeration when checking the pseudo-clique formula.
const PHI_LIMIT: usize = 400;
/// Length cap used when the pseudo-clique number is infinite.
const PROBE_CAP: usize = 12;
/// Distinct factorizations that witness infinitely many.
const INFINITE_WITNESS: usize = 20;

struct Ctx<'a> {
    case: &'a RingCase,
    scope: ElementScope,
}

impl Ctx<'_> {
    fn lab(&self) -> &Lab {
        &self.case.lab
    }

    fn ring(&self) -> &FiniteRing {
        self.case.lab.ring()
    }

    fn xs(&self) -> Vec<ElementId> {
        self.case.elements(self.scope)
    }

    fn props(&self) -> Result<&PropertyReport> {
        self.case.props(self.scope)
    }

    fn name(&self, x: ElementId) -> String {
        self.ring().name(x).to_string()
    }

    fn graph(
        &self,
        x: ElementId,
        a: AtomKind,
        b: AssocKind,
    ) -> Result<std::sync::Arc<DivisorGraph>> {
        self.lab().graph(x, a, b)
    }

    fn fail(
        &self,
        f: &mut Findings,
        x: Option<ElementId>,
        alpha: Option<AtomKind>,
        beta: Option<AssocKind>,
        detail: impl Into<String>,
    ) {
        f.failures.push(Counterexample {
            ring: self.case.spec.clone(),
            x: x.map(|x| self.name(x)),
            alpha,
            beta,
            detail: detail.into(),
        });
    }

    /// Enumerate until `want` factorizations are found, doubling the cap.
    fn probe(&self, x: ElementId, a: AtomKind, b: AssocKind, want: usize) -> Result<Enumeration> {
        let mut cap = PROBE_CAP;
        loop {
            let e = self.lab().enumerate(
                x,
                a,
                b,
                EnumOptions {
                    cap,
                    limit: Some(want),
                },
            )?;
            if e.factorizations.len() >= want || cap >= 8 * PROBE_CAP {
                return Ok(e);
            }
            cap *= 2;
        }
    }
}

fn omega_cap(g: &DivisorGraph) -> Option<usize> {
    g.pseudo_clique_number().finite().map(|o| o as usize + 1)
}

fn hierarchy(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    for p in c.lab().profiles() {
        f.checked += 1;
        let v = p.hierarchy_violations();
        if !v.is_empty() {
            c.fail(
                f,
                Some(p.element),
                None,
                None,
                format!("violates {}", v.join(", ")),
            );
        }
    }
    Ok(())
}

fn zero(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let ring = c.ring();
    let z = ring.zero();
    let p = c.lab().profile(z)?;
    let field = ring.elements().all(|a| a == z || ring.is_unit(a));
    let domain = ring
        .elements()
        .all(|a| a == z || ring.elements().all(|b| b == z || ring.mul(a, b) != z));
    f.checked += 2;
    if p.m_irr != field {
        c.fail(
            f,
            Some(z),
            None,
            None,
            format!("0 m-irreducible is {} but field is {field}", p.m_irr),
        );
    }
    if p.irreducible != domain {
        c.fail(
            f,
            Some(z),
            None,
            None,
            format!("0 irreducible is {} but domain is {domain}", p.irreducible),
        );
    }
    Ok(())
}

fn collapse(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    if !is_presimplifiable(c.ring()) {
        return Ok(());
    }
    for b in AssocKind::ALL {
        for x in c.xs() {
            let base = c.graph(x, AtomKind::Irreducible, b)?;
            for a in &IRREDUCIBLE_GRID[1..] {
                f.checked += 1;
                if !c.graph(x, *a, b)?.literally_equal(&base) {
                    c.fail(f, Some(x), Some(*a), Some(b), "differs from the irr graph");
                }
            }
        }
    }
    Ok(())
}

fn inclusions(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    for x in c.xs() {
        for b in AssocKind::ALL {
            for (small, big) in AtomKind::INCLUSIONS {
                let (gs, gb) = (c.graph(x, small, b)?, c.graph(x, big, b)?);
                f.checked += 1;
                let v = gs.subgraph_violations(&gb)?;
                if let Some(first) = v.first() {
                    c.fail(
                        f,
                        Some(x),
                        Some(small),
                        Some(b),
                        format!("not inside the {big} graph: {first}"),
                    );
                }
                let strict = gs.vertex_count() < gb.vertex_count()
                    || gs.edge_count() < gb.edge_count()
                    || gs.loop_total() < gb.loop_total();
                if v.is_empty() && strict && small == AtomKind::VeryStrongIrreducible {
                    f.note(
                        "strict-vs-in-m",
                        format!(
                            "G[vs-irr,{b}]({}) is a proper subgraph of G[m-irr,{b}] in {}",
                            c.name(x),
                            c.case.spec
                        ),
                    );
                }
            }
        }
        for a in AtomKind::ALL {
            for (fine, coarse) in BETA_CHAIN {
                let (gf, gc) = (c.graph(x, a, fine)?, c.graph(x, a, coarse)?);
                f.checked += 1;
                let v = gf.quotient_violations(&gc)?;
                if let Some(first) = v.first() {
                    c.fail(
                        f,
                        Some(x),
                        Some(a),
                        Some(fine),
                        format!("no quotient onto {coarse}: {first}"),
                    );
                    continue;
                }
                for (u, w) in gf.edges() {
                    let (ru, rw) = (gf.vertices()[u].rep, gf.vertices()[w].rep);
                    if gc.vertex_of(ru).is_some() && gc.vertex_of(ru) == gc.vertex_of(rw) {
                        f.note(
                            "merged-loop",
                            format!(
                                "in {}, x={}, alpha={a}: the edge {}-{} of the {fine} graph becomes a loop under {coarse}",
                                c.case.spec,
                                c.name(x),
                                c.name(ru),
                                c.name(rw)
                            ),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn single_loopless_vertex(g: &DivisorGraph, x: ElementId) -> bool {
    g.vertex_count() == 1
        && g.edge_count() == 0
        && g.loop_total() == ExtNat::ZERO
        && g.vertex_of(x) == Some(0)
}

fn vsatomic(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let ring = c.ring();
    let units = ring.unit_list();
    for x in c.xs() {
        if !c.lab().profile(x)?.very_strong {
            continue;
        }
        f.checked += 3;
        let a = Some(AtomKind::AnyNonunit);
        if !single_loopless_vertex(&*c.graph(x, AtomKind::AnyNonunit, AssocKind::Strong)?, x) {
            c.fail(
                f,
                Some(x),
                a,
                Some(AssocKind::Strong),
                "graph is not a loop-free K1",
            );
        }
        if !single_loopless_vertex(&*c.graph(x, AtomKind::AnyNonunit, AssocKind::Assoc)?, x) {
            c.fail(f, Some(x), a, Some(AssocKind::Assoc), "graph is not K1");
        }
        let g = c.graph(x, AtomKind::AnyNonunit, AssocKind::None)?;
        let mut orbit: Vec<ElementId> = units.iter().map(|&u| ring.mul(u, x)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if g.representatives() != orbit || g.edge_count() != 0 || g.loop_total() != ExtNat::ZERO {
            c.fail(
                f,
                Some(x),
                a,
                Some(AssocKind::None),
                "vertices are not the unit multiples of x, or edges exist",
            );
        } else if orbit.len() != units.len() {
            f.note(
                "unit-cardinality",
                format!(
                    "{}, x={}: {{ux : u unit}} has {} element(s) while |U(R)| = {}; the set form holds, the count |U(R)| does not",
                    c.case.spec,
                    c.name(x),
                    orbit.len(),
                    units.len()
                ),
            );
        }
    }
    Ok(())
}

fn matomic(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    for x in c.xs() {
        if !c.lab().profile(x)?.m_irr {
            continue;
        }
        f.checked += 1;
        let g = c.graph(x, AtomKind::AnyNonunit, AssocKind::Assoc)?;
        if g.vertex_count() != 1 || g.edge_count() != 0 || g.vertex_of(x) != Some(0) {
            c.fail(
                f,
                Some(x),
                Some(AtomKind::AnyNonunit),
                Some(AssocKind::Assoc),
                "reduced graph is not K1",
            );
        }
    }
    Ok(())
}

fn converse(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let any = AtomKind::AnyNonunit;
    for x in c.xs() {
        let p = *c.lab().profile(x)?;
        let g = c.graph(x, any, AssocKind::Strong)?;
        if g.vertex_count() == 1 && g.edge_count() == 0 && g.loop_total() == ExtNat::ZERO {
            f.checked += 1;
            if !p.very_strong {
                c.fail(
                    f,
                    Some(x),
                    Some(any),
                    Some(AssocKind::Strong),
                    "graph is K1 but x is not vs-irr",
                );
            }
        }
        let g = c.graph(x, any, AssocKind::None)?;
        if g.edge_count() == 0 {
            if g.loop_total() == ExtNat::ZERO {
                f.checked += 1;
                if !p.very_strong {
                    c.fail(
                        f,
                        Some(x),
                        Some(any),
                        Some(AssocKind::None),
                        "no edges but x is not vs-irr",
                    );
                }
            } else if !p.very_strong {
                f.note(
                    "loops-are-edges",
                    format!(
                        "{}, x={}: the graph has loops and no other edges, and x is not vs-irr, so loops must count as edges",
                        c.case.spec,
                        c.name(x)
                    ),
                );
            }
        }
        let g = c.graph(x, any, AssocKind::Assoc)?;
        if g.vertex_count() == 1 && g.edge_count() == 0 {
            f.checked += 1;
            if !p.m_irr {
                c.fail(
                    f,
                    Some(x),
                    Some(any),
                    Some(AssocKind::Assoc),
                    "reduced graph is K1 but x is not m-irr",
                );
            }
        }
    }
    Ok(())
}

fn diameter(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    for x in c.xs() {
        let p = *c.lab().profile(x)?;
        for (holds, b) in [
            (p.irreducible, AssocKind::Assoc),
            (p.strong, AssocKind::Strong),
        ] {
            if !holds {
                continue;
            }
            f.checked += 1;
            let g = c.graph(x, AtomKind::AnyNonunit, b)?;
            let d = g.diameter();
            if d > ExtNat::Finite(2) {
                c.fail(
                    f,
                    Some(x),
                    Some(AtomKind::AnyNonunit),
                    Some(b),
                    format!("diameter {d}"),
                );
            }
            let universal = g
                .vertex_of(x)
                .is_some_and(|u| (0..g.vertex_count()).all(|w| w == u || g.adjacent(u, w)));
            if !universal {
                c.fail(
                    f,
                    Some(x),
                    Some(AtomKind::AnyNonunit),
                    Some(b),
                    "the vertex of x is not adjacent to every other vertex",
                );
            }
        }
    }
    Ok(())
}

fn phi_check(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let ring = c.ring();
    for x in c.xs() {
        for a in AtomKind::ALL {
            for b in AssocKind::ALL {
                let g = c.graph(x, a, b)?;
                let omega = g.pseudo_clique_number();
                let cap = omega_cap(&g).unwrap_or(PROBE_CAP);
                let e = c.lab().enumerate(
                    x,
                    a,
                    b,
                    EnumOptions {
                        cap,
                        limit: Some(PHI_LIMIT),
                    },
                )?;
                for fact in &e.factorizations {
                    f.checked += 1;
                    let sub = match g.factorization_subgraph(ring, fact) {
                        Ok(s) => s,
                        Err(err) => {
                            c.fail(f, Some(x), Some(a), Some(b), err.to_string());
                            continue;
                        }
                    };
                    let (n, s) = (fact.len() as u64, fact.distinct_classes() as u64);
                    let p = phi(n, s);
                    let ok = sub.vertices.len() as u64 == s
                        && sub.weight == p
                        && n - 1 <= p
                        && p <= n * (n - 1) / 2
                        && ExtNat::Finite(sub.weight) <= omega;
                    if !ok {
                        let factors: Vec<&str> =
                            fact.factors.iter().map(|&y| ring.name(y)).collect();
                        c.fail(
                            f,
                            Some(x),
                            Some(a),
                            Some(b),
                            format!(
                                "{}: n={n}, s={s}, weight {} vs phi {p}, Omega {omega}",
                                factors.join("*"),
                                sub.weight
                            ),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn accp(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let props = c.props()?;
    let xs = c.xs();
    let pairs = AssocKind::ALL
        .iter()
        .map(|&b| (AtomKind::AnyNonunit, b))
        .chain(
            IRREDUCIBLE_GRID
                .iter()
                .flat_map(|&a| ASSOCIATE_GRID.iter().map(move |&b| (a, b))),
        );
    let mut converse_noted = false;
    for (a, b) in pairs {
        let atomic = a == AtomKind::AnyNonunit || props.atomic(a).holds;
        let mut infinite = None;
        for &x in &xs {
            let g = c.graph(x, a, b)?;
            if let Some(v) = (0..g.vertex_count()).find(|&v| !g.degl(v).is_finite()) {
                infinite = Some((x, g.vertices()[v].name.clone()));
                break;
            }
        }
        match infinite {
            None if atomic => {
                f.checked += 1;
                if !props.accp.holds || props.longest_chain == 0 {
                    c.fail(
                        f,
                        None,
                        Some(a),
                        Some(b),
                        "every degl is finite but ACCP fails",
                    );
                }
            }
            Some((x, v)) if props.accp.holds && !converse_noted => {
                converse_noted = true;
                f.note(
                    "converse-fails",
                    format!(
                        "{} satisfies ACCP although degl({v}) = inf in G[{a},{b}]({})",
                        c.case.spec,
                        c.name(x)
                    ),
                );
            }
            _ => {}
        }
    }
    Ok(())
}

fn bfr(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let props = c.props()?;
    let xs = c.xs();
    let alphas = std::iter::once(AtomKind::AnyNonunit).chain(IRREDUCIBLE_GRID);
    for a in alphas {
        for b in AssocKind::ALL {
            let mut all_finite = true;
            for &x in &xs {
                let g = c.graph(x, a, b)?;
                let Some(bound) = omega_cap(&g) else {
                    all_finite = false;
                    continue;
                };
                f.checked += 1;
                if c.lab().lengths(a, x).exceeds(bound) {
                    c.fail(
                        f,
                        Some(x),
                        Some(a),
                        Some(b),
                        format!("a factorization is longer than Omega+1 = {bound}"),
                    );
                }
                let e = c.lab().enumerate(
                    x,
                    a,
                    b,
                    EnumOptions {
                        cap: bound + 1,
                        limit: Some(PHI_LIMIT),
                    },
                )?;
                if let Some(long) = e.factorizations.iter().find(|fact| fact.len() > bound) {
                    c.fail(
                        f,
                        Some(x),
                        Some(a),
                        Some(b),
                        format!("observed length {} beyond Omega+1 = {bound}", long.len()),
                    );
                }
            }
            if all_finite && a == AtomKind::AnyNonunit {
                f.checked += 1;
                if !props.bfr.holds || !props.presimplifiable.holds {
                    c.fail(
                        f,
                        None,
                        Some(a),
                        Some(b),
                        "every Omega is finite but the ring is not BFR",
                    );
                }
            }
        }
    }
    Ok(())
}

fn ffr(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    if c.ring().size() > 64 {
        return Ok(());
    }
    let props = c.props()?;
    let any = AtomKind::AnyNonunit;
    for b in AssocKind::ALL {
        let mut all_finite = true;
        for x in c.xs() {
            f.checked += 1;
            let g = c.graph(x, any, b)?;
            let e_total = g.edge_and_loop_total();
            let sum = g.sum_degl();
            if e_total.is_finite() != sum.is_finite() {
                c.fail(
                    f,
                    Some(x),
                    Some(any),
                    Some(b),
                    format!("|E| = {e_total} but sum degl = {sum}"),
                );
                continue;
            }
            if let ExtNat::Finite(loops) = g.loop_total() {
                let expected = ExtNat::Finite(2 * g.edge_count() as u64 + loops);
                if sum != expected {
                    c.fail(
                        f,
                        Some(x),
                        Some(any),
                        Some(b),
                        format!("sum degl = {sum} but 2E + L = {expected}"),
                    );
                }
                let cap = omega_cap(&g).expect("finite loops give a finite Omega");
                let e = c.lab().enumerate(x, any, b, EnumOptions::capped(cap))?;
                if e.truncated {
                    c.fail(
                        f,
                        Some(x),
                        Some(any),
                        Some(b),
                        "enumeration does not stabilise below Omega+1",
                    );
                }
            } else {
                all_finite = false;
                let e = c.probe(x, any, b, INFINITE_WITNESS)?;
                if e.factorizations.len() < INFINITE_WITNESS {
                    c.fail(
                        f,
                        Some(x),
                        Some(any),
                        Some(b),
                        format!(
                            "|E| = inf but only {} factorizations found",
                            e.factorizations.len()
                        ),
                    );
                }
            }
        }
        f.checked += 1;
        let ffr = props.ffr(b).holds;
        if ffr != all_finite {
            c.fail(
                f,
                None,
                Some(any),
                Some(b),
                format!("FFR verdict {ffr} but finite edge sets is {all_finite}"),
            );
        }
        if ffr && !(props.bfr.holds && props.presimplifiable.holds) {
            c.fail(
                f,
                None,
                Some(any),
                Some(b),
                "FFR but not BFR and presimplifiable",
            );
        }
    }
    Ok(())
}

/// Vertex classes against an independent scan of the `α`-divisors of `x`.
fn divisor_classes(c: &Ctx<'_>, f: &mut Findings, a: AtomKind, b: AssocKind) -> Result<()> {
    let ring = c.ring();
    let partition = c.lab().partition(b)?;
    let atoms = c.lab().atoms(a);
    for x in c.xs() {
        f.checked += 1;
        let mut expected: Vec<usize> = ring
            .non_unit_list()
            .into_iter()
            .filter(|&d| atoms.contains(d.index()) && ring.divides(d, x))
            .map(|d| partition.class_of(d))
            .collect();
        expected.sort_unstable();
        expected.dedup();
        let g = c.graph(x, a, b)?;
        let mut got: Vec<usize> = g.vertices().iter().map(|v| v.class).collect();
        got.sort_unstable();
        if got != expected {
            c.fail(
                f,
                Some(x),
                Some(a),
                Some(b),
                format!(
                    "{} vertices but {} divisor classes",
                    got.len(),
                    expected.len()
                ),
            );
        }
    }
    Ok(())
}

fn wffr(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let props = c.props()?;
    for b in AssocKind::ALL {
        divisor_classes(c, f, AtomKind::AnyNonunit, b)?;
        f.checked += 1;
        if !props.wffr(b).holds {
            c.fail(f, None, None, Some(b), "finite vertex sets but not WFFR");
        }
    }
    Ok(())
}

fn idf(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let props = c.props()?;
    for a in IRREDUCIBLE_GRID {
        for b in AssocKind::ALL {
            divisor_classes(c, f, a, b)?;
            f.checked += 1;
            if !props.df(a, b).holds {
                c.fail(
                    f,
                    None,
                    Some(a),
                    Some(b),
                    "finite vertex sets but not divisor finite",
                );
            }
        }
    }
    Ok(())
}

fn prop66(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let props = c.props()?;
    let xs = c.xs();
    let (bfr, pres) = (props.bfr.holds, props.presimplifiable.holds);
    for b in ASSOCIATE_GRID {
        let mut degl_finite = true;
        let mut edges_finite = true;
        let mut vertices_finite = true;
        for &x in &xs {
            let g = c.graph(x, AtomKind::AnyNonunit, b)?;
            degl_finite &= g.sum_degl().is_finite();
            edges_finite &= g.edge_and_loop_total().is_finite();
            vertices_finite &= g.vertex_count() <= c.ring().size();
        }
        for a in IRREDUCIBLE_GRID {
            let mut alpha_finite = true;
            for &x in &xs {
                alpha_finite &= c.graph(x, a, b)?.vertex_count() <= c.ring().size();
            }
            let (wffr, df) = (props.wffr(b).holds, props.df(a, b).holds);
            let v = [
                props.ffr(b).holds,
                bfr && wffr,
                pres && wffr,
                bfr && df,
                pres && df,
                degl_finite,
                edges_finite,
                bfr && vertices_finite,
                pres && vertices_finite,
                bfr && alpha_finite,
                pres && alpha_finite,
            ];
            f.checked += 1;
            if v.iter().any(|&h| h != v[0]) {
                let shown: Vec<&str> = v.iter().map(|&h| if h { "T" } else { "F" }).collect();
                c.fail(
                    f,
                    None,
                    Some(a),
                    Some(b),
                    format!("conditions 1-11 disagree: {}", shown.join("")),
                );
            }
        }
    }
    Ok(())
}

fn noeth(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let p = c.props()?;
    let v = [
        p.bfr.holds,
        p.presimplifiable.holds,
        p.power_intersection_zero.holds,
        p.ideal_power_intersection_zero.holds,
    ];
    f.checked += 1;
    if v.iter().any(|&h| h != v[0]) {
        c.fail(
            f,
            None,
            None,
            None,
            format!(
                "BFR {}, presimplifiable {}, powers of elements {}, powers of ideals {}",
                v[0], v[1], v[2], v[3]
            ),
        );
    }
    Ok(())
}

fn ufr(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    let props = c.props()?;
    let expected = props.structure.class != StructureClass::None;
    for a in IRREDUCIBLE_GRID {
        for b in ASSOCIATE_GRID {
            f.checked += 1;
            let v = props.ufr(a, b);
            if v.holds != expected {
                let mut detail = format!(
                    "UFR is {} but the structure class is {}",
                    v.holds, props.structure.class
                );
                if let Some(w) = &v.witness {
                    detail.push_str(&format!(" ({w})"));
                }
                c.fail(f, None, Some(a), Some(b), detail);
            }
            if v.holds {
                ufr_graphs(c, f, a, b)?;
            }
        }
    }
    Ok(())
}

/// In a UFR every graph is a pseudo-clique whose loops record exponents.
fn ufr_graphs(c: &Ctx<'_>, f: &mut Findings, a: AtomKind, b: AssocKind) -> Result<()> {
    for x in c.xs() {
        f.checked += 1;
        let g = c.graph(x, a, b)?;
        if !g.is_pseudo_clique() || !g.reduced().is_complete() || g.is_empty() {
            c.fail(f, Some(x), Some(a), Some(b), "not a pseudo-clique");
            continue;
        }
        let Some(cap) = omega_cap(&g) else {
            c.fail(f, Some(x), Some(a), Some(b), "infinite loops in a UFR");
            continue;
        };
        let e = c.lab().enumerate(x, a, b, EnumOptions::capped(cap))?;
        let [only] = e.factorizations.as_slice() else {
            c.fail(
                f,
                Some(x),
                Some(a),
                Some(b),
                format!("{} factorizations", e.factorizations.len()),
            );
            continue;
        };
        let sub = g.factorization_subgraph(c.ring(), only)?;
        let loops: Vec<ExtNat> = sub.vertices.iter().map(|&v| g.loops(v)).collect();
        let exps: Vec<ExtNat> = sub.loops.iter().map(|&l| ExtNat::Finite(l)).collect();
        if sub.vertices.len() != g.vertex_count() || loops != exps {
            c.fail(
                f,
                Some(x),
                Some(a),
                Some(b),
                "vertices or loops differ from the unique factorization",
            );
        }
    }
    Ok(())
}

fn z2z2(c: &Ctx<'_>, f: &mut Findings) -> Result<()> {
    if c.case.spec != "Prod(Zmod(2),Zmod(2))" {
        return Ok(());
    }
    let lab = c.lab();
    let props = c.props()?;
    let zero = lab.element("(0,0)")?;
    let e1 = lab.element("(1,0)")?;
    let e2 = lab.element("(0,1)")?;
    let inf = ExtNat::Infinite;
    for a in [
        AtomKind::Irreducible,
        AtomKind::StrongIrreducible,
        AtomKind::MIrreducible,
    ] {
        for b in [AssocKind::Assoc, AssocKind::Strong] {
            f.checked += 1;
            let g = c.graph(zero, a, b)?;
            let reps = g.representatives();
            if reps != [e2, e1] || g.edge_count() != 1 || g.loop_counts() != [inf, inf] {
                c.fail(
                    f,
                    Some(zero),
                    Some(a),
                    Some(b),
                    "expected (0,1)-(1,0) with infinite loops on both",
                );
            }
            for x in [e1, e2] {
                f.checked += 1;
                let g = c.graph(x, a, b)?;
                if g.representatives() != [x] || g.edge_count() != 0 || g.loop_counts() != [inf] {
                    c.fail(
                        f,
                        Some(x),
                        Some(a),
                        Some(b),
                        "expected one vertex with infinite loops",
                    );
                }
            }
            f.checked += 1;
            if props.ufr(a, b).holds || props.hfr(a).holds || props.ffr(b).holds {
                c.fail(f, None, Some(a), Some(b), "UFR, HFR or FFR holds");
            }
        }
    }
    f.checked += 1;
    if props.bfr.holds || !props.accp.holds {
        c.fail(f, None, None, None, "expected BFR false and ACCP true");
    }
    Ok(())
}
