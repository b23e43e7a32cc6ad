//! Factorization machinery: closures under atom products, power-set
//! sequences of classes, loop counts and exhaustive enumeration.

use std::collections::HashMap;

use serde::Serialize;

use crate::associates::{AssocKind, BetaPartition};
use crate::atoms::AtomKind;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::ring::{ElementId, ElementSet, FiniteRing};

/// All products of one or more elements of `atoms` (least fixed point of
/// `P ↦ P ∪ P·atoms`).
pub fn alpha_closure(ring: &FiniteRing, atoms: &ElementSet) -> ElementSet {
    let mut members = atoms.clone();
    let mut frontier: Vec<ElementId> = atoms.ones().map(ElementId::new).collect();
    let atom_list = frontier.clone();
    while let Some(p) = frontier.pop() {
        for &a in &atom_list {
            let q = ring.mul(p, a);
            if !members.put(q.index()) {
                frontier.push(q);
            }
        }
    }
    members
}

/// `{p : p·w = x for some w ∈ closure ∪ {1}}`: the elements that can be
/// completed to `x` by an empty or `α`-factorizable remainder.
pub fn completers(ring: &FiniteRing, closure: &ElementSet, x: ElementId) -> ElementSet {
    let mut out = ring.singleton(x);
    for w in closure.ones().map(ElementId::new) {
        for p in ring.elements() {
            if ring.mul(p, w) == x {
                out.insert(p.index());
            }
        }
    }
    out
}

/// The sequence `T_1 = C`, `T_{k+1} = T_k·C` of products of exactly `k`
/// elements of a set `C`, up to its first repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPowerReach {
    sets: Vec<ElementSet>,
    preperiod: usize,
    period: usize,
}

impl ClassPowerReach {
    pub fn new(ring: &FiniteRing, class: &ElementSet) -> ClassPowerReach {
        let mut seen: HashMap<ElementSet, usize> = HashMap::new();
        let mut sets = Vec::new();
        let mut cur = class.clone();
        loop {
            let k = sets.len() + 1;
            if let Some(&first) = seen.get(&cur) {
                return ClassPowerReach {
                    sets,
                    preperiod: first,
                    period: k - first,
                };
            }
            seen.insert(cur.clone(), k);
            let next = ring.set_mul(&cur, class);
            sets.push(cur);
            cur = next;
        }
    }

    /// Least `λ` with `T_{λ+p} = T_λ`.
    pub fn preperiod(&self) -> usize {
        self.preperiod
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `T_k` for any `k >= 1`.
    pub fn set(&self, k: usize) -> &ElementSet {
        assert!(k >= 1, "class powers start at 1");
        let idx = if k < self.preperiod + self.period {
            k
        } else {
            self.preperiod + (k - self.preperiod) % self.period
        };
        &self.sets[idx - 1]
    }

    /// `T_1 .. T_{λ+p-1}`: every distinct set in the sequence.
    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    /// Indices `k` among `1..λ+p` whose `T_k` meets `target`, and whether
    /// one of them lies in the periodic part (so infinitely many do).
    pub fn hits(&self, target: &ElementSet) -> (Vec<usize>, bool) {
        let hits: Vec<usize> = (1..self.preperiod + self.period)
            .filter(|&k| !self.sets[k - 1].is_disjoint(target))
            .collect();
        let periodic = hits.iter().any(|&k| k >= self.preperiod);
        (hits, periodic)
    }
}

/// Whether some product of `n` class members times a completer equals `x`,
/// i.e. `T_n ∩ completers ≠ ∅`.
pub fn has_factorization_with_class_power(
    reach: &ClassPowerReach,
    completers: &ElementSet,
    n: usize,
) -> bool {
    !reach.set(n).is_disjoint(completers)
}

/// Loop count of a class: `∞` if the class power condition holds somewhere
/// in the periodic part, otherwise the largest `n` where it holds minus one.
pub fn loop_count(reach: &ClassPowerReach, completers: &ElementSet) -> ExtNat {
    let (hits, periodic) = reach.hits(completers);
    if periodic {
        ExtNat::Infinite
    } else {
        ExtNat::Finite(hits.last().map_or(0, |&n| n as u64 - 1))
    }
}

/// The lengths `k` for which `x` is a product of exactly `k` atoms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthSet {
    /// Every length below `λ + p` of the atom power sequence.
    pub lengths: Vec<usize>,
    /// Whether the lengths repeat periodically forever.
    pub unbounded: bool,
    pub preperiod: usize,
    pub period: usize,
}

impl LengthSet {
    pub fn new(powers: &ClassPowerReach, x: ElementId) -> LengthSet {
        let mut target = ElementSet::with_capacity(powers.sets[0].len());
        target.insert(x.index());
        let (lengths, unbounded) = powers.hits(&target);
        LengthSet {
            lengths,
            unbounded,
            preperiod: powers.preperiod,
            period: powers.period,
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        let k = if k < self.preperiod + self.period {
            k
        } else {
            self.preperiod + (k - self.preperiod) % self.period
        };
        self.lengths.contains(&k)
    }

    /// Whether some length exceeds `cap`.
    pub fn exceeds(&self, cap: usize) -> bool {
        self.unbounded || self.lengths.iter().any(|&k| k > cap)
    }

    pub fn max(&self) -> ExtNat {
        if self.unbounded {
            ExtNat::Infinite
        } else {
            self.lengths
                .last()
                .map_or(ExtNat::ZERO, |&k| ExtNat::Finite(k as u64))
        }
    }
}

/// One factorization up to rearrangement and `β`, with a witness choice of
/// factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub target: ElementId,
    /// Witness factors sorted by (representative, element id).
    pub factors: Vec<ElementId>,
    /// Representative of each factor's class, parallel to `factors`. Two
    /// factorizations are identified iff these multisets agree.
    pub representatives: Vec<ElementId>,
    pub kind: AtomKind,
    pub beta: AssocKind,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct classes among the factors.
    pub fn distinct_classes(&self) -> usize {
        let mut reps = self.representatives.clone();
        reps.dedup();
        reps.len()
    }
}

/// Limits on an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Longest factorization produced.
    pub cap: usize,
    /// Stop after this many results.
    pub limit: Option<usize>,
}

impl EnumOptions {
    pub fn capped(cap: usize) -> Self {
        EnumOptions { cap, limit: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub factorizations: Vec<Factorization>,
    /// Some factorization longer than the cap exists.
    pub truncated: bool,
    /// The result limit stopped the search early.
    pub limited: bool,
}

/// The inputs an enumeration needs, all relative to one ring.
pub struct EnumContext<'a> {
    pub ring: &'a FiniteRing,
    pub atoms: &'a ElementSet,
    pub partition: &'a BetaPartition,
    /// Power sequence of the whole atom set, used to decide truncation.
    pub atom_powers: &'a ClassPowerReach,
    pub kind: AtomKind,
}

/// All `α`-factorizations of `x` of length at most `cap`, one per multiset
/// of `β`-classes, sorted by length then representatives.
pub fn enumerate_factorizations(
    ctx: &EnumContext<'_>,
    x: ElementId,
    opts: EnumOptions,
) -> Result<Enumeration> {
    if opts.cap < 1 {
        return Err(Error::InvalidArgument(
            "length cap must be at least 1".into(),
        ));
    }
    if ctx.ring.is_unit(x) {
        return Err(Error::Domain(format!(
            "{} is a unit; only non-units are factored",
            ctx.ring.name(x)
        )));
    }
    let mut e = Enumerator::new(ctx, x, opts);
    let mut chosen = Vec::new();
    let mut stack = vec![ctx.ring.singleton(ctx.ring.one())];
    e.dfs(0, &mut chosen, &mut stack);
    let mut factorizations = e.found;
    factorizations.sort_by(|a, b| {
        (a.len(), &a.representatives, &a.factors).cmp(&(b.len(), &b.representatives, &b.factors))
    });
    let truncated = LengthSet::new(ctx.atom_powers, x).exceeds(opts.cap);
    Ok(Enumeration {
        factorizations,
        truncated,
        limited: e.limited,
    })
}

struct Pool {
    rep: ElementId,
    members: Vec<ElementId>,
    set: ElementSet,
}

struct Enumerator<'a> {
    ring: &'a FiniteRing,
    x: ElementId,
    kind: AtomKind,
    beta: AssocKind,
    opts: EnumOptions,
    pools: Vec<Pool>,
    /// `reach[j][r]`: products of at most `r` atoms from pools `j..`
    /// (including the empty product), with its completers of `x`.
    reach: Vec<Vec<(ElementSet, ElementSet)>>,
    stable: Vec<bool>,
    found: Vec<Factorization>,
    limited: bool,
}

impl<'a> Enumerator<'a> {
    fn new(ctx: &EnumContext<'a>, x: ElementId, opts: EnumOptions) -> Self {
        let ring = ctx.ring;
        let mut pools: Vec<Pool> = (0..ctx.partition.len())
            .filter_map(|c| {
                let mut set = ctx.partition.class_set(c).clone();
                set.intersect_with(ctx.atoms);
                let members: Vec<ElementId> = set.ones().map(ElementId::new).collect();
                let rep = *members.first()?;
                ring.divides(rep, x).then_some(Pool { rep, members, set })
            })
            .collect();
        pools.sort_by_key(|p| p.rep);
        let m = pools.len();
        let one = ring.singleton(ring.one());
        let base = (one.clone(), Self::completers_of(ring, &one, x));
        let mut reach = vec![vec![base]; m + 1];
        reach.iter_mut().for_each(|v| v.reserve(4));
        let mut stable = vec![false; m + 1];
        stable[m] = true;
        Enumerator {
            ring,
            x,
            kind: ctx.kind,
            beta: ctx.partition.kind(),
            opts,
            pools,
            reach,
            stable,
            found: Vec::new(),
            limited: false,
        }
    }

    fn completers_of(ring: &FiniteRing, set: &ElementSet, x: ElementId) -> ElementSet {
        let mut out = ring.empty_set();
        for w in set.ones().map(ElementId::new) {
            for p in ring.elements() {
                if ring.mul(p, w) == x {
                    out.insert(p.index());
                }
            }
        }
        out
    }

    /// Completers of `x` using at most `r` more atoms from pools `j..`.
    fn reach_completers(&mut self, j: usize, r: usize) -> &ElementSet {
        self.extend_reach(j, r);
        let row = &self.reach[j];
        &row[r.min(row.len() - 1)].1
    }

    fn extend_reach(&mut self, j: usize, r: usize) {
        let m = self.pools.len();
        if j == m {
            return;
        }
        while !self.stable[j] && self.reach[j].len() <= r {
            let k = self.reach[j].len();
            self.extend_reach(j + 1, k);
            let below = &self.reach[j + 1];
            let (below_k, below_prev) = (
                &below[k.min(below.len() - 1)].0,
                &below[(k - 1).min(below.len() - 1)].0,
            );
            let mut next = self
                .ring
                .set_mul(&self.pools[j].set, &self.reach[j][k - 1].0);
            next.union_with(below_k);
            let settled =
                self.stable[j + 1] && below_k == below_prev && next == self.reach[j][k - 1].0;
            if settled {
                self.stable[j] = true;
            } else {
                let comp = Self::completers_of(self.ring, &next, self.x);
                self.reach[j].push((next, comp));
            }
        }
    }

    fn dfs(&mut self, start: usize, chosen: &mut Vec<usize>, stack: &mut Vec<ElementSet>) {
        if self.limited {
            return;
        }
        let depth = chosen.len();
        if depth >= 1 && stack[depth].contains(self.x.index()) {
            if self.opts.limit.is_some_and(|l| self.found.len() >= l) {
                self.limited = true;
                return;
            }
            let f = self.witness(chosen, stack);
            self.found.push(f);
        }
        if depth == self.opts.cap {
            return;
        }
        let remaining = self.opts.cap - depth - 1;
        for j in start..self.pools.len() {
            let next = self.ring.set_mul(&stack[depth], &self.pools[j].set);
            if next.is_disjoint(self.reach_completers(j, remaining)) {
                continue;
            }
            chosen.push(j);
            stack.push(next);
            self.dfs(j, chosen, stack);
            stack.pop();
            chosen.pop();
            if self.limited {
                return;
            }
        }
    }

    /// Recovers concrete factors for a class multiset from the partial
    /// product sets on the stack.
    fn witness(&self, chosen: &[usize], stack: &[ElementSet]) -> Factorization {
        let ring = self.ring;
        let mut target = self.x;
        let mut factors = Vec::with_capacity(chosen.len());
        for i in (0..chosen.len()).rev() {
            let pool = &self.pools[chosen[i]];
            let (c, p) = pool
                .members
                .iter()
                .find_map(|&c| {
                    stack[i]
                        .ones()
                        .map(ElementId::new)
                        .find(|&p| ring.mul(p, c) == target)
                        .map(|p| (c, p))
                })
                .expect("partial products always admit a witness");
            factors.push((pool.rep, c));
            target = p;
        }
        debug_assert_eq!(target, ring.one());
        factors.sort();
        Factorization {
            target: self.x,
            representatives: factors.iter().map(|f| f.0).collect(),
            factors: factors.iter().map(|f| f.1).collect(),
            kind: self.kind,
            beta: self.beta,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::associates::Relations;
    use crate::atoms::{atom_set, classify_all};

    struct Fixture {
        ring: FiniteRing,
        rel: Relations,
    }

    fn fixture(spec: &str) -> Fixture {
        let ring = FiniteRing::from_spec(spec).unwrap();
        let rel = Relations::new(&ring);
        Fixture { ring, rel }
    }

    impl Fixture {
        fn atoms(&self, kind: AtomKind) -> ElementSet {
            atom_set(&self.ring, &classify_all(&self.ring, &self.rel), kind)
        }

        fn el(&self, s: &str) -> ElementId {
            self.ring.parse_element(s).unwrap()
        }

        fn set(&self, names: &[&str]) -> ElementSet {
            self.ring.set_of(names.iter().map(|s| self.el(s)))
        }

        fn names(&self, s: &ElementSet) -> Vec<String> {
            self.ring.names(s).map(str::to_string).collect()
        }

        fn enumerate(&self, x: &str, kind: AtomKind, beta: AssocKind, cap: usize) -> Enumeration {
            let atoms = self.atoms(kind);
            let partition = BetaPartition::build(&self.ring, &self.rel, beta).unwrap();
            let powers = ClassPowerReach::new(&self.ring, &atoms);
            let ctx = EnumContext {
                ring: &self.ring,
                atoms: &atoms,
                partition: &partition,
                atom_powers: &powers,
                kind,
            };
            enumerate_factorizations(&ctx, self.el(x), EnumOptions::capped(cap)).unwrap()
        }

        fn render(&self, e: &Enumeration) -> Vec<String> {
            e.factorizations
                .iter()
                .map(|f| {
                    f.factors
                        .iter()
                        .map(|&a| self.ring.name(a))
                        .collect::<Vec<_>>()
                        .join("*")
                })
                .collect()
        }
    }

    #[test]
    fn closures() {
        let f = fixture("Zmod(4)");
        let c = alpha_closure(&f.ring, &f.atoms(AtomKind::VeryStrongIrreducible));
        assert_eq!(f.names(&c), ["0", "2"]);
        let f = fixture("PolyQ(Zmod(2),x^2+x+1)");
        let c = alpha_closure(&f.ring, &f.atoms(AtomKind::Irreducible));
        assert_eq!(f.names(&c), ["0"]);
        let f = fixture("Zmod(12)");
        let c = alpha_closure(&f.ring, &f.atoms(AtomKind::AnyNonunit));
        assert_eq!(c, f.ring.non_units());
    }

    #[test]
    fn class_power_sequences() {
        let f = fixture("Zmod(4)");
        let r = ClassPowerReach::new(&f.ring, &f.set(&["2"]));
        assert_eq!((r.preperiod(), r.period()), (2, 1));
        assert_eq!(f.names(r.set(1)), ["2"]);
        assert_eq!(f.names(r.set(3)), ["0"]);

        let f = fixture("Prod(Zmod(2),Zmod(2))");
        let r = ClassPowerReach::new(&f.ring, &f.set(&["(1,0)"]));
        assert_eq!((r.preperiod(), r.period()), (1, 1));

        let f = fixture("Zmod(6)");
        let r = ClassPowerReach::new(&f.ring, &f.set(&["2", "4"]));
        assert_eq!(f.names(r.set(2)), ["2", "4"]);
        assert_eq!((r.preperiod(), r.period()), (1, 1));
    }

    #[test]
    fn loop_counts() {
        let f = fixture("Prod(Zmod(2),Zmod(2))");
        let atoms = f.atoms(AtomKind::MIrreducible);
        let q = completers(&f.ring, &alpha_closure(&f.ring, &atoms), f.el("(0,0)"));
        let reach = ClassPowerReach::new(&f.ring, &f.set(&["(1,0)"]));
        assert!(has_factorization_with_class_power(&reach, &q, 3));
        assert_eq!(loop_count(&reach, &q), ExtNat::Infinite);

        let f = fixture("Zmod(4)");
        let any = f.atoms(AtomKind::AnyNonunit);
        let q = completers(&f.ring, &alpha_closure(&f.ring, &any), f.el("2"));
        let reach = ClassPowerReach::new(&f.ring, &f.set(&["2"]));
        assert!(!has_factorization_with_class_power(&reach, &q, 2));
        assert_eq!(loop_count(&reach, &q), ExtNat::Finite(0));

        let vs = f.atoms(AtomKind::VeryStrongIrreducible);
        let q = completers(&f.ring, &alpha_closure(&f.ring, &vs), f.ring.zero());
        assert!(has_factorization_with_class_power(&reach, &q, 5));
        assert_eq!(loop_count(&reach, &q), ExtNat::Infinite);
    }

    #[test]
    fn enumerates_product_zero() {
        let f = fixture("Prod(Zmod(2),Zmod(2))");
        let e = f.enumerate("(0,0)", AtomKind::MIrreducible, AssocKind::Assoc, 4);
        assert_eq!(
            f.render(&e),
            [
                "(0,1)*(1,0)",
                "(0,1)*(0,1)*(1,0)",
                "(0,1)*(1,0)*(1,0)",
                "(0,1)*(0,1)*(0,1)*(1,0)",
                "(0,1)*(0,1)*(1,0)*(1,0)",
                "(0,1)*(1,0)*(1,0)*(1,0)",
            ]
        );
        assert!(e.truncated);
    }

    #[test]
    fn enumerates_zmod4_two() {
        let f = fixture("Zmod(4)");
        let e = f.enumerate("2", AtomKind::AnyNonunit, AssocKind::Assoc, 5);
        assert_eq!(f.render(&e), ["2"]);
        assert!(!e.truncated);
        let e = f.enumerate("0", AtomKind::AnyNonunit, AssocKind::Assoc, 3);
        assert_eq!(
            f.render(&e),
            ["0", "0*0", "0*2", "2*2", "0*0*0", "0*0*2", "0*2*2", "2*2*2"]
        );
        assert!(e.truncated);
    }

    #[test]
    fn cap_one_is_the_element_itself() {
        let f = fixture("Zmod(12)");
        for x in ["0", "2", "6"] {
            let e = f.enumerate(x, AtomKind::AnyNonunit, AssocKind::None, 1);
            assert_eq!(f.render(&e), [x]);
        }
        let e = f.enumerate("4", AtomKind::Irreducible, AssocKind::Assoc, 1);
        assert!(e.factorizations.is_empty());
    }

    #[test]
    fn limit_stops_early() {
        let f = fixture("Prod(Zmod(2),Zmod(2))");
        let atoms = f.atoms(AtomKind::AnyNonunit);
        let partition = BetaPartition::build(&f.ring, &f.rel, AssocKind::None).unwrap();
        let powers = ClassPowerReach::new(&f.ring, &atoms);
        let ctx = EnumContext {
            ring: &f.ring,
            atoms: &atoms,
            partition: &partition,
            atom_powers: &powers,
            kind: AtomKind::AnyNonunit,
        };
        let e = enumerate_factorizations(
            &ctx,
            f.ring.zero(),
            EnumOptions {
                cap: 30,
                limit: Some(20),
            },
        )
        .unwrap();
        assert_eq!(e.factorizations.len(), 20);
        assert!(e.limited && e.truncated);
        assert!(enumerate_factorizations(&ctx, f.ring.one(), EnumOptions::capped(3)).is_err());
        assert!(enumerate_factorizations(&ctx, f.ring.zero(), EnumOptions::capped(0)).is_err());
    }

    #[test]
    fn length_sets() {
        let f = fixture("Zmod(8)");
        let atoms = f.atoms(AtomKind::Irreducible);
        let powers = ClassPowerReach::new(&f.ring, &atoms);
        let l = LengthSet::new(&powers, f.el("4"));
        assert_eq!(l.lengths, [2]);
        assert!(!l.unbounded && !l.exceeds(2) && l.exceeds(1));
        let l = LengthSet::new(&powers, f.ring.zero());
        assert!(l.unbounded && l.contains(40) && !l.contains(2));
    }
}
