//! Ring-level factorization properties and structure.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::associates::{
    is_presimplifiable, presimplifiable_witness, strongly_associate_witness, AssocKind,
};
use crate::atoms::AtomKind;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::factor::EnumOptions;
use crate::lab::Lab;
use crate::ring::{ElementId, ElementSet, FiniteRing};

/// The elements ring-level properties quantify over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementScope {
    /// Non-zero non-units (the default).
    Nonzero,
    /// Every non-unit, zero included.
    All,
}

impl ElementScope {
    pub fn from_include_zero(include_zero: bool) -> Self {
        if include_zero {
            ElementScope::All
        } else {
            ElementScope::Nonzero
        }
    }

    pub fn includes_zero(self) -> bool {
        self == ElementScope::All
    }

    pub fn elements(self, ring: &FiniteRing) -> Vec<ElementId> {
        ring.elements()
            .filter(|&a| !ring.is_unit(a) && (self.includes_zero() || !ring.is_zero(a)))
            .collect()
    }

    pub fn token(self) -> &'static str {
        match self {
            ElementScope::Nonzero => "nonzero",
            ElementScope::All => "all",
        }
    }
}

/// A property verdict with a counterexample when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn no(witness: impl Into<String>) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness.into()),
        }
    }

    fn from_first_failure(failure: Option<String>) -> Self {
        failure.map_or_else(Verdict::yes, Verdict::no)
    }
}

/// Field, SPIR, local with `M² = 0`, or none of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StructureClass {
    Field,
    #[serde(rename = "SPIR")]
    Spir,
    LocalMsq0,
    None,
}

impl std::fmt::Display for StructureClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StructureClass::Field => "Field",
            StructureClass::Spir => "SPIR",
            StructureClass::LocalMsq0 => "LocalMsq0",
            StructureClass::None => "None",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub class: StructureClass,
    pub is_field: bool,
    pub is_domain: bool,
    pub is_local: bool,
    pub is_spir: bool,
    pub is_local_msq0: bool,
    /// A generator of the maximal ideal when local and principal.
    pub generator: Option<ElementId>,
}

/// Field / local / SPIR / `M² = 0` detection.
pub fn structure(ring: &FiniteRing) -> Structure {
    let non_units = ring.non_unit_list();
    let is_field = ring.is_field();
    let is_local = non_units
        .iter()
        .all(|&a| non_units.iter().all(|&b| !ring.is_unit(ring.add(a, b))));
    let m = ring.non_units();
    let generator = is_local
        .then(|| {
            non_units
                .iter()
                .copied()
                .find(|&g| *ring.principal_ideal(g) == m)
        })
        .flatten();
    let is_spir = generator.is_some_and(|g| {
        let cycle = ring.power_cycle(g);
        ring.is_zero(cycle.power(cycle.preperiod))
    });
    let is_local_msq0 = is_local
        && non_units
            .iter()
            .all(|&a| non_units.iter().all(|&b| ring.is_zero(ring.mul(a, b))));
    let class = if is_field {
        StructureClass::Field
    } else if is_spir {
        StructureClass::Spir
    } else if is_local_msq0 {
        StructureClass::LocalMsq0
    } else {
        StructureClass::None
    };
    Structure {
        class,
        is_field,
        is_domain: ring.is_domain(),
        is_local,
        is_spir,
        is_local_msq0,
        generator,
    }
}

/// Length of the longest strictly ascending chain of principal ideals.
/// Always finite here; computing it exercises the ideal tables.
pub fn longest_principal_chain(ring: &FiniteRing) -> usize {
    let mut ideals: Vec<&ElementSet> = ring.elements().map(|a| ring.principal_ideal(a)).collect();
    ideals.sort_by_key(|s| s.count_ones(..));
    ideals.dedup();
    // ascending by size, so every strict superset comes later
    let mut best = vec![1usize; ideals.len()];
    for j in 0..ideals.len() {
        for i in 0..j {
            if ideals[i] != ideals[j] && ideals[i].is_subset(ideals[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `∩_n (y^n)`, the stable value of the descending chain `(y) ⊇ (y²) ⊇ …`.
pub fn stable_power_ideal(ring: &FiniteRing, y: ElementId) -> ElementSet {
    let cycle = ring.power_cycle(y);
    let mut out = ring.principal_ideal(y).clone();
    for &p in &cycle.values {
        out.intersect_with(ring.principal_ideal(p));
    }
    out
}

/// Additive closure of `{s·r : s ∈ gens, r ∈ R}`.
pub fn ideal_generated(ring: &FiniteRing, gens: &ElementSet) -> ElementSet {
    let mut out = ring.singleton(ring.zero());
    for s in gens.ones() {
        out.union_with(ring.principal_ideal(ElementId::new(s)));
    }
    let mut frontier: Vec<ElementId> = out.ones().map(ElementId::new).collect();
    while let Some(a) = frontier.pop() {
        let current: Vec<ElementId> = out.ones().map(ElementId::new).collect();
        for b in current {
            let c = ring.add(a, b);
            if !out.put(c.index()) {
                frontier.push(c);
            }
        }
    }
    out
}

/// All maximal ideals, each found by greedily enlarging a principal ideal.
pub fn maximal_ideals(ring: &FiniteRing) -> Vec<ElementSet> {
    let one = ring.one().index();
    let mut found: Vec<ElementSet> = Vec::new();
    for a in ring.non_unit_list() {
        if found.iter().any(|m| m.contains(a.index())) {
            continue;
        }
        let mut ideal = ring.principal_ideal(a).clone();
        for b in ring.elements() {
            if ideal.contains(b.index()) {
                continue;
            }
            let mut gens = ideal.clone();
            gens.insert(b.index());
            let bigger = ideal_generated(ring, &gens);
            if !bigger.contains(one) {
                ideal = bigger;
            }
        }
        found.push(ideal);
    }
    found.sort_by_key(|m| m.ones().collect::<Vec<_>>());
    found.dedup();
    found
}

/// `∩_n I^n`, the stable value of the descending chain of ideal powers.
pub fn stable_ideal_power(ring: &FiniteRing, ideal: &ElementSet) -> ElementSet {
    let mut current = ideal.clone();
    loop {
        let next = ideal_generated(ring, &ring.set_mul(&current, ideal));
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Verdicts for every ring-level property, under one element scope.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub ring: String,
    pub scope: ElementScope,
    pub presimplifiable: Verdict,
    pub strongly_associate: Verdict,
    /// Indexed like [`AtomKind::ALL`].
    pub atomic: Vec<Verdict>,
    /// Finite pseudo-clique number of every `G_∅^assoc(x)`.
    pub bfr: Verdict,
    /// Indexed like [`AssocKind::ALL`]; the `none` entry is strong-FFR.
    pub ffr: Vec<Verdict>,
    pub wffr: Vec<Verdict>,
    /// `df[α][β]`, indexed like the `ALL` arrays.
    pub df: Vec<Vec<Verdict>>,
    pub hfr: Vec<Verdict>,
    pub ufr: Vec<Vec<Verdict>>,
    pub accp: Verdict,
    pub longest_chain: usize,
    pub structure: Structure,
    /// `∩ (y^n) = 0` for every non-unit `y`.
    pub power_intersection_zero: Verdict,
    /// `∩ I^n = 0` for every proper ideal `I` (checked on maximal ideals).
    pub ideal_power_intersection_zero: Verdict,
    pub annotations: Vec<String>,
}

impl PropertyReport {
    pub fn compute(lab: &Lab, scope: ElementScope) -> Result<PropertyReport> {
        let ring = lab.ring();
        let xs = scope.elements(ring);
        let name = |a: ElementId| ring.name(a).to_string();
        let mut annotations = Vec::new();

        let presimplifiable = Verdict::from_first_failure(
            presimplifiable_witness(ring)
                .map(|(x, y)| format!("{} = {}*{}", name(x), name(x), name(y))),
        );
        let strongly_associate = Verdict::from_first_failure(
            strongly_associate_witness(ring, lab.relations())
                .map(|(a, b)| format!("{} ~ {} but not strongly", name(a), name(b))),
        );
        let atomic = AtomKind::ALL
            .iter()
            .map(|&k| {
                Verdict::from_first_failure(
                    lab.atomic_failures(k, &xs)
                        .first()
                        .map(|&x| format!("{} has no {k}-factorization", name(x))),
                )
            })
            .collect::<Vec<_>>();

        let bfr = bfr_graph_route(lab, &xs)?;
        if bfr.holds != presimplifiable.holds {
            let msg = format!(
                "BFR via pseudo-clique numbers is {} but presimplifiable is {} on {} ({} scope)",
                bfr.holds,
                presimplifiable.holds,
                ring,
                scope.token()
            );
            if scope.includes_zero() {
                annotations.push(msg);
            } else {
                return Err(Error::Diagnostic(msg));
            }
        }

        let ffr = AssocKind::ALL
            .iter()
            .map(|&b| ffr_verdict(lab, &xs, b))
            .collect::<Result<Vec<_>>>()?;
        let wffr = AssocKind::ALL
            .iter()
            .map(|&b| divisor_finite(lab, &xs, AtomKind::AnyNonunit, b))
            .collect::<Result<Vec<_>>>()?;
        let df = AtomKind::ALL
            .iter()
            .map(|&a| {
                AssocKind::ALL
                    .iter()
                    .map(|&b| divisor_finite(lab, &xs, a, b))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let hfr = AtomKind::ALL
            .iter()
            .map(|&a| hfr_verdict(lab, &xs, a, &atomic[a.index()]))
            .collect::<Result<Vec<_>>>()?;
        let ufr = AtomKind::ALL
            .iter()
            .map(|&a| {
                AssocKind::ALL
                    .iter()
                    .map(|&b| ufr_verdict(lab, &xs, a, b, &atomic[a.index()]))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;

        let longest_chain = longest_principal_chain(ring);
        let power_intersection_zero = Verdict::from_first_failure(
            ring.non_unit_list()
                .into_iter()
                .find(|&y| stable_power_ideal(ring, y).count_ones(..) > 1)
                .map(|y| format!("the powers of {} stabilise at a non-zero ideal", name(y))),
        );
        let ideal_power_intersection_zero = Verdict::from_first_failure(
            maximal_ideals(ring)
                .iter()
                .find(|m| stable_ideal_power(ring, m).count_ones(..) > 1)
                .map(|m| {
                    let gens: Vec<&str> = ring.names(m).collect();
                    format!(
                        "powers of the maximal ideal {{{}}} stabilise above 0",
                        gens.join(",")
                    )
                }),
        );

        Ok(PropertyReport {
            ring: ring.spec_string().to_string(),
            scope,
            presimplifiable,
            strongly_associate,
            atomic,
            bfr,
            ffr,
            wffr,
            df,
            hfr,
            ufr,
            accp: Verdict::yes(),
            longest_chain,
            structure: structure(ring),
            power_intersection_zero,
            ideal_power_intersection_zero,
            annotations,
        })
    }

    pub fn atomic(&self, a: AtomKind) -> &Verdict {
        &self.atomic[a.index()]
    }

    pub fn ffr(&self, b: AssocKind) -> &Verdict {
        &self.ffr[b.index()]
    }

    pub fn wffr(&self, b: AssocKind) -> &Verdict {
        &self.wffr[b.index()]
    }

    pub fn df(&self, a: AtomKind, b: AssocKind) -> &Verdict {
        &self.df[a.index()][b.index()]
    }

    pub fn hfr(&self, a: AtomKind) -> &Verdict {
        &self.hfr[a.index()]
    }

    pub fn ufr(&self, a: AtomKind, b: AssocKind) -> &Verdict {
        &self.ufr[a.index()][b.index()]
    }

    /// Property name → verdict, in a fixed order.
    pub fn rows(&self) -> Vec<(String, &Verdict)> {
        let mut rows: Vec<(String, &Verdict)> = vec![
            ("presimplifiable".into(), &self.presimplifiable),
            ("strongly-associate".into(), &self.strongly_associate),
        ];
        for a in AtomKind::ALL.into_iter().skip(1) {
            rows.push((format!("atomic[{a}]"), self.atomic(a)));
        }
        rows.push(("ACCP".into(), &self.accp));
        rows.push(("BFR".into(), &self.bfr));
        for b in AssocKind::ALL {
            rows.push((format!("FFR[{b}]"), self.ffr(b)));
        }
        for b in AssocKind::ALL {
            rows.push((format!("WFFR[{b}]"), self.wffr(b)));
        }
        for a in AtomKind::ALL.into_iter().skip(1) {
            for b in AssocKind::ALL {
                rows.push((format!("df[{a},{b}]"), self.df(a, b)));
            }
        }
        for a in AtomKind::ALL {
            rows.push((format!("HFR[{a}]"), self.hfr(a)));
        }
        for a in AtomKind::ALL {
            for b in AssocKind::ALL {
                rows.push((format!("UFR[{a},{b}]"), self.ufr(a, b)));
            }
        }
        rows.push((
            "power-intersection-zero".into(),
            &self.power_intersection_zero,
        ));
        rows.push((
            "ideal-power-intersection-zero".into(),
            &self.ideal_power_intersection_zero,
        ));
        rows
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring: {}", self.ring);
        let _ = writeln!(out, "scope: {}", self.scope.token());
        let s = &self.structure;
        let _ = writeln!(out, "structure: {}", s.class);
        let _ = writeln!(
            out,
            "field={} domain={} local={} SPIR={} LocalMsq0={}",
            s.is_field, s.is_domain, s.is_local, s.is_spir, s.is_local_msq0
        );
        let _ = writeln!(out, "longest principal chain: {}", self.longest_chain);
        let rows = self.rows();
        let width = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        for (name, v) in rows {
            let _ = write!(out, "{name:<width$}  {}", v.holds);
            if let Some(w) = &v.witness {
                let _ = write!(out, "  ({w})");
            }
            out.push('\n');
        }
        for a in &self.annotations {
            let _ = writeln!(out, "note: {a}");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let verdicts: BTreeMap<String, &Verdict> = self.rows().into_iter().collect();
        json!({
            "ring": self.ring,
            "scope": self.scope,
            "structure": self.structure,
            "longest_principal_chain": self.longest_chain,
            "verdicts": verdicts,
            "annotations": self.annotations,
        })
    }
}

fn graph_failure(
    lab: &Lab,
    xs: &[ElementId],
    alpha: AtomKind,
    beta: AssocKind,
    what: &str,
) -> Result<Option<String>> {
    for &x in xs {
        let g = lab.graph(x, alpha, beta)?;
        if let Some(v) = (0..g.vertex_count()).find(|&v| !g.loops(v).is_finite()) {
            return Ok(Some(format!(
                "{what}: x={} has infinitely many loops on {}",
                g.x_name(),
                g.vertices()[v].name
            )));
        }
    }
    Ok(None)
}

/// BFR from pseudo-clique numbers of `G_∅^assoc(x)`.
pub fn bfr_graph_route(lab: &Lab, xs: &[ElementId]) -> Result<Verdict> {
    Ok(Verdict::from_first_failure(graph_failure(
        lab,
        xs,
        AtomKind::AnyNonunit,
        AssocKind::Assoc,
        "unbounded lengths",
    )?))
}

/// `β`-FFR from edge-plus-loop counts of `G_∅^β(x)`.
pub fn ffr_verdict(lab: &Lab, xs: &[ElementId], beta: AssocKind) -> Result<Verdict> {
    Ok(Verdict::from_first_failure(graph_failure(
        lab,
        xs,
        AtomKind::AnyNonunit,
        beta,
        "infinitely many factorizations",
    )?))
}

/// Finiteness of the vertex set of `G_α^β(x)` for every `x`, after checking
/// it matches an independent count of `α`-divisors up to `β`.
pub fn divisor_finite(
    lab: &Lab,
    xs: &[ElementId],
    alpha: AtomKind,
    beta: AssocKind,
) -> Result<Verdict> {
    let ring = lab.ring();
    let partition = lab.partition(beta)?;
    let atoms = lab.atoms(alpha);
    for &x in xs {
        let g = lab.graph(x, alpha, beta)?;
        let mut classes: Vec<usize> = atoms
            .ones()
            .map(ElementId::new)
            .filter(|&a| ring.divides(a, x))
            .map(|a| partition.class_of(a))
            .collect();
        classes.sort_unstable();
        classes.dedup();
        if classes.len() != g.vertex_count() {
            return Err(Error::Diagnostic(format!(
                "{} has {} {alpha}-divisor classes up to {beta} but its graph has {} vertices",
                ring.name(x),
                classes.len(),
                g.vertex_count()
            )));
        }
    }
    Ok(Verdict::yes())
}

/// Cap under which enumeration is complete: `Ω + 1` of `G_α^β(x)`, or
/// `None` when `Ω = ∞`.
pub fn complete_cap(
    lab: &Lab,
    x: ElementId,
    alpha: AtomKind,
    beta: AssocKind,
) -> Result<Option<usize>> {
    let g = lab.graph(x, alpha, beta)?;
    Ok(match g.pseudo_clique_number() {
        ExtNat::Finite(o) => Some(o as usize + 1),
        ExtNat::Infinite => None,
    })
}

fn hfr_verdict(lab: &Lab, xs: &[ElementId], alpha: AtomKind, atomic: &Verdict) -> Result<Verdict> {
    if !atomic.holds {
        return Ok(atomic.clone());
    }
    let ring = lab.ring();
    for &x in xs {
        let Some(cap) = complete_cap(lab, x, alpha, AssocKind::Assoc)? else {
            return Ok(Verdict::no(format!(
                "{} has {alpha}-factorizations of unbounded length",
                ring.name(x)
            )));
        };
        let e = lab.enumerate(x, alpha, AssocKind::Assoc, EnumOptions::capped(cap))?;
        if e.truncated {
            return Err(Error::Diagnostic(format!(
                "{} has an {alpha}-factorization longer than its pseudo-clique bound {cap}",
                ring.name(x)
            )));
        }
        let mut lengths: Vec<usize> = e.factorizations.iter().map(|f| f.len()).collect();
        lengths.dedup();
        if lengths.len() > 1 {
            return Ok(Verdict::no(format!(
                "{} has {alpha}-factorizations of lengths {lengths:?}",
                ring.name(x)
            )));
        }
    }
    Ok(Verdict::yes())
}

fn ufr_verdict(
    lab: &Lab,
    xs: &[ElementId],
    alpha: AtomKind,
    beta: AssocKind,
    atomic: &Verdict,
) -> Result<Verdict> {
    if !atomic.holds {
        return Ok(atomic.clone());
    }
    let ring = lab.ring();
    for &x in xs {
        let Some(cap) = complete_cap(lab, x, alpha, beta)? else {
            return Ok(Verdict::no(format!(
                "{} has infinitely many {alpha}-factorizations up to {beta}",
                ring.name(x)
            )));
        };
        let e = lab.enumerate(x, alpha, beta, EnumOptions::capped(cap))?;
        if e.truncated {
            return Err(Error::Diagnostic(format!(
                "{} has an {alpha}-factorization longer than its pseudo-clique bound {cap}",
                ring.name(x)
            )));
        }
        if e.factorizations.len() != 1 {
            let shown: Vec<String> = e
                .factorizations
                .iter()
                .take(2)
                .map(|f| {
                    f.factors
                        .iter()
                        .map(|&a| ring.name(a))
                        .collect::<Vec<_>>()
                        .join("*")
                })
                .collect();
            return Ok(Verdict::no(format!(
                "{} has {} {alpha}-factorizations up to {beta} (e.g. {})",
                ring.name(x),
                e.factorizations.len(),
                shown.join(", ")
            )));
        }
    }
    Ok(Verdict::yes())
}

/// Convenience: whether the ring is présimplifiable (shared with the
/// associates module).
pub fn presimplifiable(ring: &FiniteRing) -> bool {
    is_presimplifiable(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(spec: &str) -> PropertyReport {
        PropertyReport::compute(&Lab::from_spec(spec).unwrap(), ElementScope::Nonzero).unwrap()
    }

    #[test]
    fn zmod4_is_a_spir_ufr() {
        let r = report("Zmod(4)");
        assert_eq!(r.structure.class, StructureClass::Spir);
        assert!(r.bfr.holds && r.presimplifiable.holds);
        assert!(r.ffr(AssocKind::Assoc).holds);
        for a in AtomKind::IRREDUCIBLES {
            assert!(r.hfr(a).holds);
            assert!(r.ufr(a, AssocKind::Assoc).holds);
        }
    }

    #[test]
    fn product_of_fields_fails_everything_finite() {
        let r = report("Prod(Zmod(2),Zmod(2))");
        assert_eq!(r.structure.class, StructureClass::None);
        assert!(!r.bfr.holds && !r.presimplifiable.holds);
        assert!(!r.ffr(AssocKind::Assoc).holds);
        assert!(r.wffr(AssocKind::Assoc).holds);
        assert!(!r.hfr(AtomKind::Irreducible).holds);
        assert!(!r.ufr(AtomKind::Irreducible, AssocKind::Assoc).holds);
        assert!(r.accp.holds);
        assert!(!r.power_intersection_zero.holds);
        assert!(!r.ideal_power_intersection_zero.holds);
    }

    #[test]
    fn zmod6_and_zmod9() {
        let r = report("Zmod(6)");
        assert!(!r.bfr.holds);
        assert!(!r.ufr(AtomKind::Irreducible, AssocKind::Assoc).holds);
        let r = report("Zmod(9)");
        assert!(r.hfr(AtomKind::Irreducible).holds);
        assert!(r.structure.is_local_msq0 && r.structure.is_spir);
    }

    #[test]
    fn fields_are_vacuously_everything() {
        let r = report("PolyQ(Zmod(3),x^2+1)");
        assert_eq!(r.structure.class, StructureClass::Field);
        assert!(r.rows().iter().all(|(_, v)| v.holds));
    }

    #[test]
    fn structure_examples() {
        let s = structure(&FiniteRing::from_spec("PolyQ(Zmod(2),x^2)").unwrap());
        assert!(s.is_spir && s.is_local_msq0);
        assert_eq!(s.class, StructureClass::Spir);
        let s = structure(&FiniteRing::from_spec("PolyQ(Zmod(4),x^2)").unwrap());
        assert!(s.is_local && !s.is_spir && !s.is_local_msq0);
        let s = structure(&FiniteRing::from_spec("Zmod(12)").unwrap());
        assert!(!s.is_local);
    }

    #[test]
    fn ideals() {
        let r = FiniteRing::from_spec("PolyQ(Zmod(4),x^2)").unwrap();
        let max = maximal_ideals(&r);
        assert_eq!(max.len(), 1);
        assert_eq!(max[0], r.non_units());
        let r = FiniteRing::from_spec("Zmod(12)").unwrap();
        let max = maximal_ideals(&r);
        let named: Vec<Vec<&str>> = max.iter().map(|m| r.names(m).collect()).collect();
        assert_eq!(
            named,
            [
                vec!["0", "2", "4", "6", "8", "10"],
                vec!["0", "3", "6", "9"]
            ]
        );
        assert_eq!(longest_principal_chain(&r), 4);
        assert_eq!(
            longest_principal_chain(&FiniteRing::from_spec("Zmod(32)").unwrap()),
            6
        );
    }

    #[test]
    fn include_zero_breaks_bfr_on_spirs() {
        let lab = Lab::from_spec("Zmod(4)").unwrap();
        let r = PropertyReport::compute(&lab, ElementScope::All).unwrap();
        assert!(!r.bfr.holds && r.presimplifiable.holds);
        assert_eq!(r.annotations.len(), 1);
    }
}
