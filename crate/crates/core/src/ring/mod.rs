//! Finite commutative rings with identity.
//!
//! Elements are dense ids `0..N`. Structured kinds (`Zmod`, `Prod`, `PolyQ`)
//! compute arithmetic on demand and materialize full Cayley tables when the
//! ring is small enough; `Table` rings always carry their tables.

mod cursor;
mod element;
mod poly;
mod spec;
mod table;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use spec::RingSpec;
pub use table::TableFile;

/// A set of elements of one ring, indexed by element id.
pub type ElementSet = FixedBitSet;

/// Index of an element inside one [`FiniteRing`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(u32);

impl ElementId {
    pub const fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Limits applied while building a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Largest ring that may be built.
    pub max_size: usize,
    /// Structured rings up to this size get memoized Cayley tables.
    pub table_threshold: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_size: 4096,
            table_threshold: 512,
        }
    }
}

#[derive(Clone, Debug)]
enum ArithKind {
    Zmod(u64),
    Product(Vec<Arith>),
    /// `Z/n[x]/(f)` with `modulus` monic, lowest degree first.
    Poly {
        n: u64,
        modulus: Vec<u64>,
    },
    Table,
}

/// Arithmetic core shared by a ring and (recursively) its product factors.
#[derive(Clone, Debug)]
struct Arith {
    kind: ArithKind,
    size: usize,
    zero: u32,
    one: u32,
    add_table: Option<Arc<[u32]>>,
    mul_table: Option<Arc<[u32]>>,
    names: Vec<String>,
}

impl Arith {
    fn build(spec: &RingSpec, opts: &BuildOptions) -> Result<Arith> {
        if let Some(size) = spec.declared_size() {
            if size > opts.max_size as u128 {
                return Err(Error::SizeOverflow {
                    size,
                    max: opts.max_size,
                });
            }
        }
        let mut arith = match spec {
            RingSpec::Zmod(n) => Arith {
                kind: ArithKind::Zmod(*n),
                size: *n as usize,
                zero: 0,
                one: 1,
                add_table: None,
                mul_table: None,
                names: (0..*n).map(|i| i.to_string()).collect(),
            },
            RingSpec::Prod(parts) => {
                let parts = parts
                    .iter()
                    .map(|p| Arith::build(p, opts))
                    .collect::<Result<Vec<_>>>()?;
                let size = parts
                    .iter()
                    .try_fold(1usize, |acc, p| acc.checked_mul(p.size))
                    .filter(|&s| s <= opts.max_size)
                    .ok_or_else(|| Error::SizeOverflow {
                        size: parts.iter().map(|p| p.size as u128).product(),
                        max: opts.max_size,
                    })?;
                let mut arith = Arith {
                    kind: ArithKind::Product(parts),
                    size,
                    zero: 0,
                    one: 0,
                    add_table: None,
                    mul_table: None,
                    names: Vec::new(),
                };
                let ones: Vec<u32> = arith.parts().iter().map(|p| p.one).collect();
                let zeros: Vec<u32> = arith.parts().iter().map(|p| p.zero).collect();
                arith.one = arith.encode(&ones);
                arith.zero = arith.encode(&zeros);
                arith.names = (0..size as u32)
                    .map(|id| {
                        let digits = arith.decode(id);
                        let inner: Vec<&str> = arith
                            .parts()
                            .iter()
                            .zip(&digits)
                            .map(|(p, &d)| p.names[d as usize].as_str())
                            .collect();
                        format!("({})", inner.join(","))
                    })
                    .collect();
                arith
            }
            RingSpec::PolyQ { base, modulus } => {
                let degree = modulus.len() - 1;
                let size = (*base as usize).pow(degree as u32);
                let mut arith = Arith {
                    kind: ArithKind::Poly {
                        n: *base,
                        modulus: modulus.clone(),
                    },
                    size,
                    zero: 0,
                    one: 1,
                    add_table: None,
                    mul_table: None,
                    names: Vec::new(),
                };
                arith.names = (0..size as u32)
                    .map(|id| poly::format_ascending(&arith.poly_coeffs(id)))
                    .collect();
                arith
            }
            RingSpec::Table(path) => {
                let t = TableFile::load(path)?.validate(opts.max_size)?;
                Arith {
                    kind: ArithKind::Table,
                    size: t.size,
                    zero: t.zero,
                    one: t.one,
                    add_table: Some(t.add.into()),
                    mul_table: Some(t.mul.into()),
                    names: t.names,
                }
            }
        };
        if arith.zero == arith.one {
            return Err(Error::Axiom {
                law: "1 != 0",
                witness: format!("one = zero in {spec}"),
            });
        }
        if arith.mul_table.is_none() && arith.size <= opts.table_threshold {
            arith.materialize();
        }
        Ok(arith)
    }

    fn parts(&self) -> &[Arith] {
        match &self.kind {
            ArithKind::Product(parts) => parts,
            _ => &[],
        }
    }

    fn decode(&self, mut id: u32) -> Vec<u32> {
        let parts = self.parts();
        let mut digits = vec![0u32; parts.len()];
        for (d, p) in digits.iter_mut().zip(parts).rev() {
            *d = id % p.size as u32;
            id /= p.size as u32;
        }
        digits
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        self.parts()
            .iter()
            .zip(digits)
            .fold(0u32, |acc, (p, &d)| acc * p.size as u32 + d)
    }

    fn poly_coeffs(&self, mut id: u32) -> Vec<u64> {
        let ArithKind::Poly { n, modulus } = &self.kind else {
            unreachable!("poly_coeffs on a non-polynomial ring")
        };
        let degree = modulus.len() - 1;
        let mut c = vec![0u64; degree];
        for slot in c.iter_mut() {
            *slot = id as u64 % n;
            id /= *n as u32;
        }
        c
    }

    fn poly_encode(&self, coeffs: &[u64]) -> u32 {
        let ArithKind::Poly { n, .. } = &self.kind else {
            unreachable!("poly_encode on a non-polynomial ring")
        };
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * n + c) as u32
    }

    fn materialize(&mut self) {
        let n = self.size;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                add.push(self.add_structural(a, b));
                mul.push(self.mul_structural(a, b));
            }
        }
        self.add_table = Some(add.into());
        self.mul_table = Some(mul.into());
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_table {
            Some(t) => t[a as usize * self.size + b as usize],
            None => self.add_structural(a, b),
        }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[a as usize * self.size + b as usize],
            None => self.mul_structural(a, b),
        }
    }

    fn add_structural(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            ArithKind::Zmod(n) => ((a as u64 + b as u64) % n) as u32,
            ArithKind::Product(parts) => {
                let (da, db) = (self.decode(a), self.decode(b));
                let sum: Vec<u32> = parts
                    .iter()
                    .zip(da.iter().zip(&db))
                    .map(|(p, (&x, &y))| p.add(x, y))
                    .collect();
                self.encode(&sum)
            }
            ArithKind::Poly { n, .. } => {
                let (ca, cb) = (self.poly_coeffs(a), self.poly_coeffs(b));
                let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % n).collect();
                self.poly_encode(&sum)
            }
            ArithKind::Table => unreachable!("table rings always carry their tables"),
        }
    }

    fn mul_structural(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            ArithKind::Zmod(n) => ((a as u64 * b as u64) % n) as u32,
            ArithKind::Product(parts) => {
                let (da, db) = (self.decode(a), self.decode(b));
                let prod: Vec<u32> = parts
                    .iter()
                    .zip(da.iter().zip(&db))
                    .map(|(p, (&x, &y))| p.mul(x, y))
                    .collect();
                self.encode(&prod)
            }
            ArithKind::Poly { n, modulus } => {
                let (ca, cb) = (self.poly_coeffs(a), self.poly_coeffs(b));
                let d = ca.len();
                let mut r = vec![0u64; 2 * d - 1];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        r[i + j] = (r[i + j] + x * y) % n;
                    }
                }
                // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
                for k in (d..r.len()).rev() {
                    let c = r[k];
                    if c == 0 {
                        continue;
                    }
                    r[k] = 0;
                    for (j, &m) in modulus[..d].iter().enumerate() {
                        let idx = k - d + j;
                        r[idx] = (r[idx] + (n - (c * m) % n)) % n;
                    }
                }
                self.poly_encode(&r[..d])
            }
            ArithKind::Table => unreachable!("table rings always carry their tables"),
        }
    }
}

/// Powers `a^1, a^2, …` of one element, up to the first repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerCycle {
    /// Least `λ >= 1` with `a^{λ+p} = a^λ`.
    pub preperiod: usize,
    /// Least `p >= 1` with `a^{λ+p} = a^λ`.
    pub period: usize,
    /// `a^1 ..= a^{λ+p-1}`.
    pub values: Vec<ElementId>,
}

impl PowerCycle {
    /// `a^k` for any `k >= 1`.
    pub fn power(&self, k: usize) -> ElementId {
        assert!(k >= 1, "powers start at 1");
        self.values[self.fold_index(k) - 1]
    }

    fn fold_index(&self, k: usize) -> usize {
        if k < self.preperiod + self.period {
            k
        } else {
            self.preperiod + (k - self.preperiod) % self.period
        }
    }
}

/// A validated finite commutative ring with `1 != 0`.
///
/// Immutable after construction; unit and principal-ideal structure are
/// computed eagerly, so a ring can be shared freely across threads.
pub struct FiniteRing {
    spec: RingSpec,
    canonical: String,
    arith: Arith,
    units: ElementSet,
    unit_list: Vec<ElementId>,
    ideals: Vec<ElementSet>,
    by_name: HashMap<String, ElementId>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("spec", &self.canonical)
            .field("size", &self.size())
            .finish()
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical)
    }
}

impl FiniteRing {
    /// Builds a ring from a spec string with default limits.
    pub fn from_spec(spec: &str) -> Result<FiniteRing> {
        FiniteRing::build(spec, &BuildOptions::default())
    }

    pub fn build(spec: &str, opts: &BuildOptions) -> Result<FiniteRing> {
        let parsed = RingSpec::parse(spec)?;
        FiniteRing::from_parsed(parsed, opts)
    }

    pub fn from_parsed(spec: RingSpec, opts: &BuildOptions) -> Result<FiniteRing> {
        let arith = Arith::build(&spec, opts)?;
        let n = arith.size;
        let mut units = ElementSet::with_capacity(n);
        let mut ideals = Vec::with_capacity(n);
        for a in 0..n as u32 {
            let mut ideal = ElementSet::with_capacity(n);
            for r in 0..n as u32 {
                let p = arith.mul(a, r);
                ideal.insert(p as usize);
                if p == arith.one {
                    units.insert(a as usize);
                }
            }
            ideals.push(ideal);
        }
        let unit_list = units.ones().map(ElementId::new).collect();
        let by_name = arith
            .names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), ElementId::new(i)))
            .collect();
        Ok(FiniteRing {
            canonical: spec.to_string(),
            spec,
            arith,
            units,
            unit_list,
            ideals,
            by_name,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// Canonical spec string (whitespace removed, modulus normalized).
    pub fn spec_string(&self) -> &str {
        &self.canonical
    }

    pub fn size(&self) -> usize {
        self.arith.size
    }

    pub fn zero(&self) -> ElementId {
        ElementId(self.arith.zero)
    }

    pub fn one(&self) -> ElementId {
        ElementId(self.arith.one)
    }

    pub fn has_mul_table(&self) -> bool {
        self.arith.mul_table.is_some()
    }

    /// All elements in id order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.size()).map(ElementId::new)
    }

    /// The element with this index, if in range.
    pub fn element(&self, index: usize) -> Option<ElementId> {
        (index < self.size()).then(|| ElementId::new(index))
    }

    pub fn name(&self, a: ElementId) -> &str {
        &self.arith.names[a.index()]
    }

    pub fn names<'a>(&'a self, set: &'a ElementSet) -> impl Iterator<Item = &'a str> + 'a {
        set.ones().map(|i| self.arith.names[i].as_str())
    }

    /// Parses an element literal in this ring's naming scheme.
    pub fn parse_element(&self, literal: &str) -> Result<ElementId> {
        if let Some(&id) = self.by_name.get(literal.trim()) {
            return Ok(id);
        }
        element::parse_element(&self.arith, literal).map(ElementId)
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.arith.add(a.0, b.0))
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.arith.mul(a.0, b.0))
    }

    /// `a^k`, with `a^0 = 1`.
    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        (0..k).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    pub fn is_zero(&self, a: ElementId) -> bool {
        a == self.zero()
    }

    pub fn is_unit(&self, a: ElementId) -> bool {
        self.units.contains(a.index())
    }

    /// `U(R)`.
    pub fn units(&self) -> &ElementSet {
        &self.units
    }

    pub fn unit_list(&self) -> &[ElementId] {
        &self.unit_list
    }

    /// `R - U(R)` (always contains zero).
    pub fn non_units(&self) -> ElementSet {
        let mut s = self.units.clone();
        s.toggle_range(..);
        s
    }

    pub fn non_unit_list(&self) -> Vec<ElementId> {
        self.elements().filter(|&a| !self.is_unit(a)).collect()
    }

    /// Whether `x = a·r` for some `r`.
    pub fn divides(&self, a: ElementId, x: ElementId) -> bool {
        self.ideals[a.index()].contains(x.index())
    }

    /// `(a) = {a·r : r ∈ R}`.
    pub fn principal_ideal(&self, a: ElementId) -> &ElementSet {
        &self.ideals[a.index()]
    }

    /// Whether every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        self.unit_list.len() == self.size() - 1
    }

    /// Whether the ring has no nonzero zero-divisors.
    pub fn is_domain(&self) -> bool {
        let zero = self.zero();
        self.elements().filter(|&a| a != zero).all(|a| {
            self.elements()
                .filter(|&b| b != zero)
                .all(|b| self.mul(a, b) != zero)
        })
    }

    /// Eventually periodic power sequence of `a`.
    pub fn power_cycle(&self, a: ElementId) -> PowerCycle {
        let mut seen: Vec<usize> = vec![0; self.size()];
        let mut values = Vec::new();
        let mut cur = a;
        let mut k = 1;
        loop {
            let slot = &mut seen[cur.index()];
            if *slot != 0 {
                let preperiod = *slot;
                return PowerCycle {
                    preperiod,
                    period: k - preperiod,
                    values,
                };
            }
            *slot = k;
            values.push(cur);
            cur = self.mul(cur, a);
            k += 1;
        }
    }

    /// `{a·b : a ∈ s, b ∈ t}`.
    pub fn set_mul(&self, s: &ElementSet, t: &ElementSet) -> ElementSet {
        let mut out = ElementSet::with_capacity(self.size());
        for a in s.ones() {
            for b in t.ones() {
                out.insert(self.arith.mul(a as u32, b as u32) as usize);
            }
        }
        out
    }

    pub fn singleton(&self, a: ElementId) -> ElementSet {
        let mut s = ElementSet::with_capacity(self.size());
        s.insert(a.index());
        s
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::with_capacity(self.size())
    }

    pub fn set_of(&self, items: impl IntoIterator<Item = ElementId>) -> ElementSet {
        let mut s = self.empty_set();
        for a in items {
            s.insert(a.index());
        }
        s
    }
}
