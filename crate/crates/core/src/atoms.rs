//! Classification of non-units under the five atom notions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::associates::Relations;
use crate::error::{Error, Result};
use crate::ring::{ElementId, ElementSet, FiniteRing};

/// Which elements may appear as factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "&'static str")]
pub enum AtomKind {
    /// Any non-unit.
    AnyNonunit,
    Prime,
    Irreducible,
    StrongIrreducible,
    MIrreducible,
    VeryStrongIrreducible,
}

impl AtomKind {
    pub const ALL: [AtomKind; 6] = [
        AtomKind::AnyNonunit,
        AtomKind::Prime,
        AtomKind::Irreducible,
        AtomKind::StrongIrreducible,
        AtomKind::MIrreducible,
        AtomKind::VeryStrongIrreducible,
    ];

    /// The four irreducibility notions, weakest first.
    pub const IRREDUCIBLES: [AtomKind; 4] = [
        AtomKind::Irreducible,
        AtomKind::StrongIrreducible,
        AtomKind::MIrreducible,
        AtomKind::VeryStrongIrreducible,
    ];

    pub fn token(self) -> &'static str {
        match self {
            AtomKind::AnyNonunit => "none",
            AtomKind::Prime => "prime",
            AtomKind::Irreducible => "irr",
            AtomKind::StrongIrreducible => "s-irr",
            AtomKind::MIrreducible => "m-irr",
            AtomKind::VeryStrongIrreducible => "vs-irr",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// Pairs `(stronger, weaker)` with `A_stronger ⊆ A_weaker`.
    pub const INCLUSIONS: [(AtomKind, AtomKind); 5] = [
        (AtomKind::VeryStrongIrreducible, AtomKind::MIrreducible),
        (AtomKind::MIrreducible, AtomKind::StrongIrreducible),
        (AtomKind::StrongIrreducible, AtomKind::Irreducible),
        (AtomKind::Irreducible, AtomKind::AnyNonunit),
        (AtomKind::Prime, AtomKind::Irreducible),
    ];
}

impl From<AtomKind> for &'static str {
    fn from(k: AtomKind) -> Self {
        k.token()
    }
}

impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for AtomKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        Ok(match norm.as_str() {
            "none" | "empty" | "nonunit" | "any" => AtomKind::AnyNonunit,
            "prime" => AtomKind::Prime,
            "irr" | "irreducible" | "atomic" => AtomKind::Irreducible,
            "s-irr" | "strong" | "strongly-irreducible" | "strong-irreducible" => {
                AtomKind::StrongIrreducible
            }
            "m-irr" | "m-irreducible" => AtomKind::MIrreducible,
            "vs-irr" | "very-strong" | "very-strongly-irreducible" | "very-strong-irreducible" => {
                AtomKind::VeryStrongIrreducible
            }
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown atom kind '{s}' (expected none, prime, irr, s-irr, m-irr or vs-irr)"
                )))
            }
        })
    }
}

/// Classification flags of one non-unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AtomProfile {
    pub element: ElementId,
    pub prime: bool,
    pub irreducible: bool,
    pub strong: bool,
    pub m_irr: bool,
    pub very_strong: bool,
    /// Whether `a ≅ a`.
    pub self_vs: bool,
}

impl AtomProfile {
    pub fn is(&self, kind: AtomKind) -> bool {
        match kind {
            AtomKind::AnyNonunit => true,
            AtomKind::Prime => self.prime,
            AtomKind::Irreducible => self.irreducible,
            AtomKind::StrongIrreducible => self.strong,
            AtomKind::MIrreducible => self.m_irr,
            AtomKind::VeryStrongIrreducible => self.very_strong,
        }
    }

    /// Names of the implications `very_strong ⇒ m_irr ⇒ strong ⇒ irreducible`
    /// and `prime ⇒ irreducible` that this profile violates.
    pub fn hierarchy_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.very_strong && !self.m_irr {
            out.push("vs-irr => m-irr");
        }
        if self.m_irr && !self.strong {
            out.push("m-irr => s-irr");
        }
        if self.strong && !self.irreducible {
            out.push("s-irr => irr");
        }
        if self.prime && !self.irreducible {
            out.push("prime => irr");
        }
        out
    }
}

/// Classifies every non-unit, in id order.
///
/// The irreducible family is decided from one pass over all factor pairs,
/// m-irreducibility from divisibility, and primality once per principal
/// ideal (the prime condition depends only on `(a)`).
pub fn classify_all(ring: &FiniteRing, rel: &Relations) -> Vec<AtomProfile> {
    let n = ring.size();
    let mut fail_irr = vec![false; n];
    let mut fail_strong = vec![false; n];
    let mut fail_vs = vec![false; n];
    for b in ring.elements() {
        for c in ring.elements().skip(b.index()) {
            let p = ring.mul(b, c);
            if ring.is_unit(p) {
                continue;
            }
            let i = p.index();
            if !fail_irr[i] && !(rel.associate(p, b) || rel.associate(p, c)) {
                fail_irr[i] = true;
            }
            if !fail_strong[i] && !(rel.strong(p, b) || rel.strong(p, c)) {
                fail_strong[i] = true;
            }
            if !fail_vs[i] && !(rel.very_strong(p, b) || rel.very_strong(p, c)) {
                fail_vs[i] = true;
            }
        }
    }

    let non_units = ring.non_unit_list();
    let mut prime_by_ideal: Vec<Option<bool>> = vec![None; n];
    non_units
        .iter()
        .map(|&a| {
            let ideal = ring.principal_ideal(a);
            let m_irr = non_units
                .iter()
                .all(|&b| !ring.divides(b, a) || rel.associate(a, b));
            let slot = &mut prime_by_ideal[rel.ideal_class(a)];
            let prime = *slot.get_or_insert_with(|| is_prime_ideal_generator(ring, ideal));
            AtomProfile {
                element: a,
                prime,
                irreducible: !fail_irr[a.index()],
                strong: !fail_strong[a.index()],
                m_irr,
                very_strong: !fail_vs[a.index()],
                self_vs: rel.very_strong(a, a),
            }
        })
        .collect()
}

/// `a | bc ⇒ a | b or a | c`, phrased on the ideal `(a)`.
fn is_prime_ideal_generator(ring: &FiniteRing, ideal: &ElementSet) -> bool {
    ring.elements()
        .filter(|b| !ideal.contains(b.index()))
        .all(|b| {
            ring.elements()
                .filter(|c| !ideal.contains(c.index()))
                .all(|c| !ideal.contains(ring.mul(b, c).index()))
        })
}

/// Classifies one non-unit.
pub fn classify(ring: &FiniteRing, a: ElementId) -> Result<AtomProfile> {
    if ring.is_unit(a) {
        return Err(Error::Domain(format!(
            "{} is a unit; units are not classified",
            ring.name(a)
        )));
    }
    let rel = Relations::new(ring);
    Ok(classify_all(ring, &rel)
        .into_iter()
        .find(|p| p.element == a)
        .expect("every non-unit is classified"))
}

/// `A_α(R)`: the non-units satisfying `kind`.
pub fn atom_set(ring: &FiniteRing, profiles: &[AtomProfile], kind: AtomKind) -> ElementSet {
    ring.set_of(profiles.iter().filter(|p| p.is(kind)).map(|p| p.element))
}
