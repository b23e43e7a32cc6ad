//! Associate relations and the partitions they induce.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{ElementId, ElementSet, FiniteRing};

/// Which associate relation to quotient by. Declaration order is the
/// refinement order: each kind refines the next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "&'static str")]
pub enum AssocKind {
    /// No quotienting: every element stands alone.
    None,
    /// `a ≅ b`.
    VeryStrong,
    /// `a ≈ b`: `a = λb` for a unit `λ`.
    Strong,
    /// `a ~ b`: `(a) = (b)`.
    Assoc,
}

impl AssocKind {
    pub const ALL: [AssocKind; 4] = [
        AssocKind::None,
        AssocKind::VeryStrong,
        AssocKind::Strong,
        AssocKind::Assoc,
    ];

    /// The three genuine relations (everything except `None`).
    pub const RELATIONS: [AssocKind; 3] =
        [AssocKind::VeryStrong, AssocKind::Strong, AssocKind::Assoc];

    pub fn token(self) -> &'static str {
        match self {
            AssocKind::None => "none",
            AssocKind::VeryStrong => "vs-assoc",
            AssocKind::Strong => "s-assoc",
            AssocKind::Assoc => "assoc",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(self, coarser: AssocKind) -> bool {
        self <= coarser
    }
}

impl From<AssocKind> for &'static str {
    fn from(k: AssocKind) -> Self {
        k.token()
    }
}

impl fmt::Display for AssocKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for AssocKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        Ok(match norm.as_str() {
            "none" | "empty" | "identity" => AssocKind::None,
            "assoc" | "associate" => AssocKind::Assoc,
            "s-assoc" | "strong" | "strong-associate" | "strongly-associate" => AssocKind::Strong,
            "vs-assoc" | "very-strong" | "very-strong-associate" | "very-strongly-associate" => {
                AssocKind::VeryStrong
            }
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown associate kind '{s}' (expected none, assoc, s-assoc or vs-assoc)"
                )))
            }
        })
    }
}

/// `a ~ b`, straight from the definition.
pub fn is_associate(ring: &FiniteRing, a: ElementId, b: ElementId) -> bool {
    ring.principal_ideal(a) == ring.principal_ideal(b)
}

/// `a ≈ b`, straight from the definition.
pub fn is_strong_associate(ring: &FiniteRing, a: ElementId, b: ElementId) -> bool {
    ring.unit_list().iter().any(|&u| ring.mul(u, b) == a)
}

/// `a ≅ b`, straight from the definition.
pub fn is_very_strong_associate(ring: &FiniteRing, a: ElementId, b: ElementId) -> bool {
    if !is_associate(ring, a, b) {
        return false;
    }
    if ring.is_zero(a) && ring.is_zero(b) {
        return true;
    }
    ring.elements()
        .filter(|&r| ring.mul(r, b) == a)
        .all(|r| ring.is_unit(r))
}

/// Precomputed tables answering all three relations in O(1).
#[derive(Clone, Debug)]
pub struct Relations {
    ideal_class: Vec<u32>,
    strong_class: Vec<u32>,
    /// `b ↦ {r·b : r non-unit}`; `a ≅ b` iff `a ~ b` and `a` is not here
    /// (or both are zero).
    nonunit_mult: Vec<ElementSet>,
    zero: ElementId,
}

impl Relations {
    pub fn new(ring: &FiniteRing) -> Relations {
        let n = ring.size();
        let mut ideal_ids: HashMap<&ElementSet, u32> = HashMap::new();
        let ideal_class = ring
            .elements()
            .map(|a| {
                let next = ideal_ids.len() as u32;
                *ideal_ids.entry(ring.principal_ideal(a)).or_insert(next)
            })
            .collect();

        let mut strong_class = vec![u32::MAX; n];
        let mut next = 0;
        for a in ring.elements() {
            if strong_class[a.index()] != u32::MAX {
                continue;
            }
            for &u in ring.unit_list() {
                strong_class[ring.mul(u, a).index()] = next;
            }
            next += 1;
        }

        let non_units = ring.non_unit_list();
        let nonunit_mult = ring
            .elements()
            .map(|b| ring.set_of(non_units.iter().map(|&r| ring.mul(r, b))))
            .collect();

        Relations {
            ideal_class,
            strong_class,
            nonunit_mult,
            zero: ring.zero(),
        }
    }

    pub fn associate(&self, a: ElementId, b: ElementId) -> bool {
        self.ideal_class[a.index()] == self.ideal_class[b.index()]
    }

    pub fn strong(&self, a: ElementId, b: ElementId) -> bool {
        self.strong_class[a.index()] == self.strong_class[b.index()]
    }

    pub fn very_strong(&self, a: ElementId, b: ElementId) -> bool {
        self.associate(a, b)
            && ((a == self.zero && b == self.zero)
                || !self.nonunit_mult[b.index()].contains(a.index()))
    }

    pub fn related(&self, kind: AssocKind, a: ElementId, b: ElementId) -> bool {
        match kind {
            AssocKind::None => a == b,
            AssocKind::VeryStrong => self.very_strong(a, b),
            AssocKind::Strong => self.strong(a, b),
            AssocKind::Assoc => self.associate(a, b),
        }
    }

    /// Id of the principal ideal `(a)`; equal ids mean `a ~ b`.
    pub fn ideal_class(&self, a: ElementId) -> usize {
        self.ideal_class[a.index()] as usize
    }
}

/// A partition of the whole ring into classes of one associate relation.
/// Classes are numbered by their least element, so class order and
/// representative choice are both deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaPartition {
    kind: AssocKind,
    class_of: Vec<u32>,
    classes: Vec<Vec<ElementId>>,
    sets: Vec<ElementSet>,
}

impl BetaPartition {
    /// Builds the partition. For `VeryStrong`, elements with `a ≇ a` become
    /// singletons; if the remaining relation is not an equivalence the
    /// result is a [`Error::Diagnostic`] rather than a silent repair.
    pub fn build(ring: &FiniteRing, rel: &Relations, kind: AssocKind) -> Result<BetaPartition> {
        let n = ring.size();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        for a in ring.elements() {
            if class_of[a.index()] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let members: Vec<ElementId> = if kind == AssocKind::VeryStrong && !rel.very_strong(a, a)
            {
                vec![a]
            } else {
                ring.elements()
                    .filter(|&b| rel.related(kind, a, b))
                    .collect()
            };
            for &b in &members {
                if class_of[b.index()] != u32::MAX {
                    return Err(Error::Diagnostic(format!(
                        "{kind} is not transitive on {}: {} is related to {} and to an earlier class",
                        ring,
                        ring.name(a),
                        ring.name(b)
                    )));
                }
                class_of[b.index()] = id;
            }
            classes.push(members);
        }
        if kind == AssocKind::VeryStrong {
            for class in classes.iter().filter(|c| c.len() > 1) {
                for &b in class {
                    for &c in class {
                        if !rel.very_strong(b, c) {
                            return Err(Error::Diagnostic(format!(
                                "very strong association is not an equivalence on {}: {} vs {}",
                                ring,
                                ring.name(b),
                                ring.name(c)
                            )));
                        }
                    }
                }
            }
        }
        let sets = classes
            .iter()
            .map(|c| ring.set_of(c.iter().copied()))
            .collect();
        Ok(BetaPartition {
            kind,
            class_of,
            classes,
            sets,
        })
    }

    pub fn kind(&self) -> AssocKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, a: ElementId) -> usize {
        self.class_of[a.index()] as usize
    }

    pub fn class(&self, index: usize) -> &[ElementId] {
        &self.classes[index]
    }

    pub fn class_set(&self, index: usize) -> &ElementSet {
        &self.sets[index]
    }

    pub fn classes(&self) -> &[Vec<ElementId>] {
        &self.classes
    }

    /// Least element of the class.
    pub fn representative(&self, index: usize) -> ElementId {
        self.classes[index][0]
    }

    pub fn same_class(&self, a: ElementId, b: ElementId) -> bool {
        self.class_of[a.index()] == self.class_of[b.index()]
    }

    /// Whether every class of `self` lies inside one class of `coarser`.
    pub fn refines(&self, coarser: &BetaPartition) -> bool {
        self.classes.iter().all(|c| {
            let target = coarser.class_of(c[0]);
            c.iter().all(|&b| coarser.class_of(b) == target)
        })
    }
}

/// First pair `(x, y)` with `x ≠ 0`, `y` a non-unit and `x = x·y`.
pub fn presimplifiable_witness(ring: &FiniteRing) -> Option<(ElementId, ElementId)> {
    let non_units = ring.non_unit_list();
    ring.elements().filter(|&x| !ring.is_zero(x)).find_map(|x| {
        non_units
            .iter()
            .find(|&&y| ring.mul(x, y) == x)
            .map(|&y| (x, y))
    })
}

/// `x = xy` forces `x = 0` or `y` a unit.
pub fn is_presimplifiable(ring: &FiniteRing) -> bool {
    presimplifiable_witness(ring).is_none()
}

/// First pair with `a ~ b` but not `a ≈ b`.
pub fn strongly_associate_witness(
    ring: &FiniteRing,
    rel: &Relations,
) -> Option<(ElementId, ElementId)> {
    ring.elements().find_map(|a| {
        ring.elements()
            .find(|&b| rel.associate(a, b) && !rel.strong(a, b))
            .map(|b| (a, b))
    })
}

/// `a ~ b` implies `a ≈ b` for all `a, b`.
pub fn is_strongly_associate_ring(ring: &FiniteRing) -> bool {
    strongly_associate_witness(ring, &Relations::new(ring)).is_none()
}
