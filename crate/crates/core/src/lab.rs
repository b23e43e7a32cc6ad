//! A ring together with lazily computed, cached analyses.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::associates::{AssocKind, BetaPartition, Relations};
use crate::atoms::{atom_set, classify_all, AtomKind, AtomProfile};
use crate::error::{Error, Result};
use crate::factor::{
    alpha_closure, completers, enumerate_factorizations, ClassPowerReach, EnumContext, EnumOptions,
    Enumeration, LengthSet,
};
use crate::graph::{DivisorGraph, GraphContext};
use crate::ring::{BuildOptions, ElementId, ElementSet, FiniteRing};

type GraphKey = (ElementId, AtomKind, AssocKind);

/// Shared analysis context for one ring. Every cache is filled at most once
/// and the results are deterministic, so a `Lab` can be used from many
/// threads at once.
pub struct Lab {
    ring: FiniteRing,
    relations: OnceLock<Relations>,
    partitions: [OnceLock<Result<BetaPartition>>; 4],
    profiles: OnceLock<Vec<AtomProfile>>,
    atoms: [OnceLock<ElementSet>; 6],
    closures: [OnceLock<ElementSet>; 6],
    powers: [OnceLock<ClassPowerReach>; 6],
    graphs: RwLock<HashMap<GraphKey, Arc<DivisorGraph>>>,
}

impl std::fmt::Debug for Lab {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lab").field("ring", &self.ring).finish()
    }
}

impl Lab {
    pub fn new(ring: FiniteRing) -> Lab {
        Lab {
            ring,
            relations: OnceLock::new(),
            partitions: Default::default(),
            profiles: OnceLock::new(),
            atoms: Default::default(),
            closures: Default::default(),
            powers: Default::default(),
            graphs: RwLock::new(HashMap::new()),
        }
    }

    pub fn from_spec(spec: &str) -> Result<Lab> {
        Ok(Lab::new(FiniteRing::from_spec(spec)?))
    }

    pub fn build(spec: &str, opts: &BuildOptions) -> Result<Lab> {
        Ok(Lab::new(FiniteRing::build(spec, opts)?))
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn element(&self, literal: &str) -> Result<ElementId> {
        self.ring.parse_element(literal)
    }

    pub fn relations(&self) -> &Relations {
        self.relations.get_or_init(|| Relations::new(&self.ring))
    }

    pub fn partition(&self, kind: AssocKind) -> Result<&BetaPartition> {
        self.partitions[kind.index()]
            .get_or_init(|| BetaPartition::build(&self.ring, self.relations(), kind))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Profiles of all non-units, in id order.
    pub fn profiles(&self) -> &[AtomProfile] {
        self.profiles
            .get_or_init(|| classify_all(&self.ring, self.relations()))
    }

    pub fn profile(&self, a: ElementId) -> Result<&AtomProfile> {
        self.profiles()
            .iter()
            .find(|p| p.element == a)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "{} is a unit; units are not classified",
                    self.ring.name(a)
                ))
            })
    }

    /// `A_α(R)`.
    pub fn atoms(&self, kind: AtomKind) -> &ElementSet {
        self.atoms[kind.index()].get_or_init(|| atom_set(&self.ring, self.profiles(), kind))
    }

    /// Everything with an `α`-factorization.
    pub fn closure(&self, kind: AtomKind) -> &ElementSet {
        self.closures[kind.index()].get_or_init(|| alpha_closure(&self.ring, self.atoms(kind)))
    }

    /// Power sequence `A_α^k`.
    pub fn atom_powers(&self, kind: AtomKind) -> &ClassPowerReach {
        self.powers[kind.index()].get_or_init(|| ClassPowerReach::new(&self.ring, self.atoms(kind)))
    }

    pub fn completers(&self, kind: AtomKind, x: ElementId) -> ElementSet {
        completers(&self.ring, self.closure(kind), x)
    }

    /// Lengths of the `α`-factorizations of `x`.
    pub fn lengths(&self, kind: AtomKind, x: ElementId) -> LengthSet {
        LengthSet::new(self.atom_powers(kind), x)
    }

    fn require_non_unit(&self, x: ElementId, what: &str) -> Result<()> {
        if self.ring.is_unit(x) {
            return Err(Error::Domain(format!(
                "{} is a unit; {what} needs a non-unit",
                self.ring.name(x)
            )));
        }
        Ok(())
    }

    /// `G_α^β(x)`, cached.
    pub fn graph(
        &self,
        x: ElementId,
        alpha: AtomKind,
        beta: AssocKind,
    ) -> Result<Arc<DivisorGraph>> {
        self.require_non_unit(x, "a divisor graph")?;
        let key = (x, alpha, beta);
        if let Some(g) = self.graphs.read().expect("graph cache poisoned").get(&key) {
            return Ok(Arc::clone(g));
        }
        let ctx = GraphContext {
            ring: &self.ring,
            partition: self.partition(beta)?,
            atoms: self.atoms(alpha),
            closure: self.closure(alpha),
            alpha,
        };
        let g = Arc::new(DivisorGraph::build(&ctx, x)?);
        let mut cache = self.graphs.write().expect("graph cache poisoned");
        Ok(Arc::clone(cache.entry(key).or_insert(g)))
    }

    pub fn enumerate(
        &self,
        x: ElementId,
        alpha: AtomKind,
        beta: AssocKind,
        opts: EnumOptions,
    ) -> Result<Enumeration> {
        let ctx = EnumContext {
            ring: &self.ring,
            atoms: self.atoms(alpha),
            partition: self.partition(beta)?,
            atom_powers: self.atom_powers(alpha),
            kind: alpha,
        };
        enumerate_factorizations(&ctx, x, opts)
    }

    /// Elements in `candidates` that have no `α`-factorization.
    pub fn atomic_failures(&self, kind: AtomKind, candidates: &[ElementId]) -> Vec<ElementId> {
        let closure = self.closure(kind);
        candidates
            .iter()
            .copied()
            .filter(|x| !closure.contains(x.index()))
            .collect()
    }
}
