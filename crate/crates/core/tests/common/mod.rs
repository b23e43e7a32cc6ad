//! Brute-force oracles computed straight from the definitions, using only
//! the ring's addition and multiplication tables.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use divgraph_core::{AssocKind, AtomKind, Corpus, ElementId, ExtNat, FiniteRing};

/// Lengths beyond this count as unbounded in the loop and length oracles;
/// every sequence checked here settles long before it.
pub const WINDOW: usize = 64;
/// A hit at or beyond this length means infinitely many.
pub const TAIL: usize = 32;

pub fn corpus_rings() -> Vec<FiniteRing> {
    Corpus::default_corpus()
        .specs
        .iter()
        .map(|s| FiniteRing::from_spec(s).expect("corpus ring builds"))
        .collect()
}

pub fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub struct Oracle {
    pub n: usize,
    pub zero: usize,
    pub one: usize,
    pub mul: Vec<Vec<usize>>,
    pub add: Vec<Vec<usize>>,
    pub unit: Vec<bool>,
    pub ideal: Vec<BTreeSet<usize>>,
}

impl Oracle {
    pub fn new(r: &FiniteRing) -> Oracle {
        let n = r.size();
        let id = |i: usize| ElementId::new(i);
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| r.mul(id(a), id(b)).index()).collect())
            .collect();
        let add: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| r.add(id(a), id(b)).index()).collect())
            .collect();
        let one = r.one().index();
        let unit = (0..n).map(|a| (0..n).any(|b| mul[a][b] == one)).collect();
        let ideal = (0..n).map(|a| mul[a].iter().copied().collect()).collect();
        Oracle {
            n,
            zero: r.zero().index(),
            one,
            mul,
            add,
            unit,
            ideal,
        }
    }

    pub fn non_units(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| !self.unit[a]).collect()
    }

    pub fn divides(&self, a: usize, b: usize) -> bool {
        (0..self.n).any(|r| self.mul[a][r] == b)
    }

    pub fn assoc(&self, a: usize, b: usize) -> bool {
        self.ideal[a] == self.ideal[b]
    }

    pub fn strong(&self, a: usize, b: usize) -> bool {
        (0..self.n).any(|u| self.unit[u] && self.mul[u][b] == a)
    }

    pub fn very_strong(&self, a: usize, b: usize) -> bool {
        self.assoc(a, b)
            && ((a == self.zero && b == self.zero)
                || (0..self.n).all(|r| self.mul[r][b] != a || self.unit[r]))
    }

    pub fn related(&self, kind: AssocKind, a: usize, b: usize) -> bool {
        match kind {
            AssocKind::None => a == b,
            AssocKind::VeryStrong => self.very_strong(a, b),
            AssocKind::Strong => self.strong(a, b),
            AssocKind::Assoc => self.assoc(a, b),
        }
    }

    fn irreducible_under(&self, a: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
        !self.unit[a]
            && (0..self.n)
                .all(|b| (0..self.n).all(|c| self.mul[b][c] != a || rel(a, b) || rel(a, c)))
    }

    pub fn is_atom(&self, kind: AtomKind, a: usize) -> bool {
        if self.unit[a] {
            return false;
        }
        match kind {
            AtomKind::AnyNonunit => true,
            AtomKind::Prime => (0..self.n).all(|b| {
                (0..self.n).all(|c| {
                    !self.divides(a, self.mul[b][c]) || self.divides(a, b) || self.divides(a, c)
                })
            }),
            AtomKind::Irreducible => self.irreducible_under(a, |x, y| self.assoc(x, y)),
            AtomKind::StrongIrreducible => self.irreducible_under(a, |x, y| self.strong(x, y)),
            AtomKind::VeryStrongIrreducible => {
                self.irreducible_under(a, |x, y| self.very_strong(x, y))
            }
            AtomKind::MIrreducible => self.non_units().into_iter().all(|b| {
                !self.ideal[a].is_subset(&self.ideal[b]) || self.ideal[a] == self.ideal[b]
            }),
        }
    }

    pub fn atoms(&self, kind: AtomKind) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_atom(kind, a)).collect()
    }

    /// Classes of `kind`, as sorted member lists; elements not related to
    /// themselves form singletons.
    pub fn classes(&self, kind: AssocKind) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for a in 0..self.n {
            if seen[a] {
                continue;
            }
            let members: Vec<usize> = if self.related(kind, a, a) {
                (0..self.n).filter(|&b| self.related(kind, a, b)).collect()
            } else {
                vec![a]
            };
            for &b in &members {
                seen[b] = true;
            }
            out.push(members);
        }
        out
    }

    /// Products of one or more of `atoms`.
    pub fn closure(&self, atoms: &[usize]) -> HashSet<usize> {
        let mut seen: HashSet<usize> = atoms.iter().copied().collect();
        let mut todo: Vec<usize> = atoms.to_vec();
        while let Some(p) = todo.pop() {
            for &a in atoms {
                let q = self.mul[p][a];
                if seen.insert(q) {
                    todo.push(q);
                }
            }
        }
        seen
    }

    /// Sets of products of exactly `k` elements of `set`, for `k = 1..=WINDOW`.
    pub fn exact_powers(&self, set: &[usize]) -> Vec<HashSet<usize>> {
        let mut out = Vec::with_capacity(WINDOW);
        let mut cur: HashSet<usize> = set.iter().copied().collect();
        for _ in 0..WINDOW {
            let next = cur
                .iter()
                .flat_map(|&p| set.iter().map(move |&a| (p, a)))
                .map(|(p, a)| self.mul[p][a])
                .collect();
            out.push(cur);
            cur = next;
        }
        out
    }

    pub fn is_presimplifiable(&self) -> bool {
        (0..self.n)
            .all(|x| (0..self.n).all(|y| self.mul[x][y] != x || x == self.zero || self.unit[y]))
    }

    pub fn idempotents(&self) -> usize {
        (0..self.n).filter(|&e| self.mul[e][e] == e).count()
    }
}

/// `G_α^β(x)` rebuilt from factorization witnesses.
#[derive(Debug, PartialEq, Eq)]
pub struct OracleGraph {
    /// Least atom of each vertex class, ascending.
    pub reps: Vec<usize>,
    pub edges: BTreeSet<(usize, usize)>,
    pub loops: Vec<ExtNat>,
}

pub fn oracle_graph(o: &Oracle, x: usize, alpha: AtomKind, beta: AssocKind) -> OracleGraph {
    let atoms = o.atoms(alpha);
    let closure = o.closure(&atoms);
    // c·d·w = x with w empty or an α-product
    let completes = |p: usize| p == x || closure.iter().any(|&w| o.mul[p][w] == x);
    let mut verts: Vec<Vec<usize>> = o
        .classes(beta)
        .into_iter()
        .map(|c| {
            c.into_iter()
                .filter(|a| atoms.contains(a))
                .collect::<Vec<_>>()
        })
        .filter(|c: &Vec<usize>| c.first().is_some_and(|&a| o.divides(a, x)))
        .collect();
    verts.sort();
    let mut edges = BTreeSet::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let linked = verts[i]
                .iter()
                .any(|&c| verts[j].iter().any(|&d| completes(o.mul[c][d])));
            if linked {
                edges.insert((i, j));
            }
        }
    }
    let loops = verts
        .iter()
        .map(|members| {
            let powers = o.exact_powers(members);
            let hits: Vec<usize> = (1..=WINDOW)
                .filter(|&k| powers[k - 1].iter().any(|&p| completes(p)))
                .collect();
            match hits.last() {
                Some(&k) if k > TAIL => ExtNat::Infinite,
                Some(&k) => ExtNat::Finite(k as u64 - 1),
                None => ExtNat::ZERO,
            }
        })
        .collect();
    OracleGraph {
        reps: verts.iter().map(|c| c[0]).collect(),
        edges,
        loops,
    }
}

/// Largest `C(|S|,2) + Σ loops` over cliques `S`, by subset enumeration.
pub fn oracle_omega(g: &OracleGraph) -> ExtNat {
    if g.loops.iter().any(|l| !l.is_finite()) {
        return ExtNat::Infinite;
    }
    let n = g.reps.len();
    assert!(n <= 20, "subset enumeration is for small graphs");
    let mut best = 0u64;
    for mask in 1u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let clique = vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.edges.contains(&(u, v))));
        if clique {
            let s = vs.len() as u64;
            let w = s * (s - 1) / 2
                + vs.iter()
                    .map(|&v| g.loops[v].finite().unwrap())
                    .sum::<u64>();
            best = best.max(w);
        }
    }
    ExtNat::Finite(best)
}

/// Longest shortest path, by Floyd–Warshall; `∞` when disconnected.
pub fn oracle_diameter(g: &OracleGraph) -> ExtNat {
    let n = g.reps.len();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in &g.edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let worst = d.iter().flatten().copied().max().unwrap_or(0);
    if worst >= inf {
        ExtNat::Infinite
    } else {
        ExtNat::Finite(worst)
    }
}

/// Every `α`-factorization of `x` with at most `cap` factors, as the sorted
/// list of the least member of each factor's `β`-class.
pub fn oracle_factorizations(
    o: &Oracle,
    x: usize,
    alpha: AtomKind,
    beta: AssocKind,
    cap: usize,
) -> BTreeSet<Vec<usize>> {
    let atoms = o.atoms(alpha);
    let classes = o.classes(beta);
    let rep_of = |a: usize| {
        classes
            .iter()
            .find(|c| c.contains(&a))
            .and_then(|c| c.iter().copied().find(|b| atoms.contains(b)))
            .expect("atom lies in its own class")
    };
    let mut out = BTreeSet::new();
    let search = Search {
        o,
        atoms: &atoms,
        x,
        cap,
    };
    search.go(0, o.one, &mut Vec::new(), &mut |s: &[usize]| {
        let mut reps: Vec<usize> = s.iter().map(|&a| rep_of(a)).collect();
        reps.sort_unstable();
        out.insert(reps);
    });
    out
}

/// Depth-first walk over non-decreasing atom sequences of length `<= cap`.
struct Search<'a> {
    o: &'a Oracle,
    atoms: &'a [usize],
    x: usize,
    cap: usize,
}

impl Search<'_> {
    fn go(&self, start: usize, prod: usize, seq: &mut Vec<usize>, hit: &mut dyn FnMut(&[usize])) {
        if !seq.is_empty() && prod == self.x {
            hit(seq);
        }
        if seq.len() == self.cap {
            return;
        }
        for i in start..self.atoms.len() {
            seq.push(self.atoms[i]);
            self.go(i, self.o.mul[prod][self.atoms[i]], seq, hit);
            seq.pop();
        }
    }
}

/// Whether `x` has an `α`-factorization of length in `cap+1..=WINDOW`.
pub fn oracle_longer_than(o: &Oracle, x: usize, alpha: AtomKind, cap: usize) -> bool {
    let atoms = o.atoms(alpha);
    let powers = o.exact_powers(&atoms);
    (cap + 1..=WINDOW).any(|k| powers[k - 1].contains(&x))
}
