//! The `α-β` divisor graph of an element and its metrics.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use crate::associates::{AssocKind, BetaPartition};
use crate::atoms::AtomKind;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::factor::{completers, loop_count, ClassPowerReach, Factorization};
use crate::ring::{ElementId, ElementSet, FiniteRing};

/// One vertex: a `β`-class meeting `A_α` whose members divide `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Index of the class in the ring's `β`-partition.
    pub class: usize,
    /// Least element of `class ∩ A_α`; the displayed representative.
    pub rep: ElementId,
    pub name: String,
    /// `class ∩ A_α`, ascending.
    pub members: Vec<ElementId>,
}

/// `G_α^β(x)`: vertices in ascending representative order, simple
/// adjacency and per-vertex loop counts.
#[derive(Clone, Debug)]
pub struct DivisorGraph {
    ring: String,
    x: ElementId,
    x_name: String,
    alpha: AtomKind,
    beta: AssocKind,
    vertices: Vec<Vertex>,
    adj: Vec<FixedBitSet>,
    loops: Vec<ExtNat>,
}

/// Inputs for building graphs of one ring under one `(α, β)`.
pub struct GraphContext<'a> {
    pub ring: &'a FiniteRing,
    pub partition: &'a BetaPartition,
    pub atoms: &'a ElementSet,
    /// `α`-closure of `atoms`.
    pub closure: &'a ElementSet,
    pub alpha: AtomKind,
}

impl DivisorGraph {
    pub fn build(ctx: &GraphContext<'_>, x: ElementId) -> Result<DivisorGraph> {
        let ring = ctx.ring;
        if ring.is_unit(x) {
            return Err(Error::Domain(format!(
                "{} is a unit; divisor graphs are defined for non-units",
                ring.name(x)
            )));
        }
        let q = completers(ring, ctx.closure, x);
        let mut pools: Vec<(Vertex, ElementSet)> = (0..ctx.partition.len())
            .filter_map(|class| {
                let mut set = ctx.partition.class_set(class).clone();
                set.intersect_with(ctx.atoms);
                let members: Vec<ElementId> = set.ones().map(ElementId::new).collect();
                let rep = *members.first()?;
                ring.divides(rep, x).then(|| {
                    let v = Vertex {
                        class,
                        rep,
                        name: ring.name(rep).to_string(),
                        members,
                    };
                    (v, set)
                })
            })
            .collect();
        pools.sort_by_key(|(v, _)| v.rep);

        let n = pools.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in i + 1..n {
                let linked = pools[i].0.members.iter().any(|&c| {
                    pools[j]
                        .0
                        .members
                        .iter()
                        .any(|&d| q.contains(ring.mul(c, d).index()))
                });
                if linked {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let loops = pools
            .iter()
            .map(|(_, set)| loop_count(&ClassPowerReach::new(ring, set), &q))
            .collect();
        Ok(DivisorGraph {
            ring: ring.spec_string().to_string(),
            x,
            x_name: ring.name(x).to_string(),
            alpha: ctx.alpha,
            beta: ctx.partition.kind(),
            vertices: pools.into_iter().map(|(v, _)| v).collect(),
            adj,
            loops,
        })
    }

    pub fn ring(&self) -> &str {
        &self.ring
    }

    pub fn x(&self) -> ElementId {
        self.x
    }

    pub fn x_name(&self) -> &str {
        &self.x_name
    }

    pub fn alpha(&self) -> AtomKind {
        self.alpha
    }

    pub fn beta(&self) -> AssocKind {
        self.beta
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn representatives(&self) -> Vec<ElementId> {
        self.vertices.iter().map(|v| v.rep).collect()
    }

    /// Index of the vertex whose class contains `a`.
    pub fn vertex_of(&self, a: ElementId) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.members.binary_search(&a).is_ok())
    }

    pub fn vertex_of_class(&self, class: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.class == class)
    }

    fn require(&self, a: ElementId) -> Result<usize> {
        self.vertex_of(a)
            .ok_or_else(|| Error::UnknownVertex(format!("{a} in the graph of {}", self.x_name)))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    /// Simple edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| {
                self.adj[u]
                    .ones()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn loops(&self, v: usize) -> ExtNat {
        self.loops[v]
    }

    pub fn loop_counts(&self) -> &[ExtNat] {
        &self.loops
    }

    /// Total number of loops.
    pub fn loop_total(&self) -> ExtNat {
        self.loops.iter().copied().sum()
    }

    /// `|E|` counting loops.
    pub fn edge_and_loop_total(&self) -> ExtNat {
        self.loop_total() + self.edge_count() as u64
    }

    pub fn has_infinite_loops(&self) -> bool {
        self.loops.iter().any(|l| !l.is_finite())
    }

    /// Same vertices and edges, all loop counts zero.
    pub fn reduced(&self) -> DivisorGraph {
        let mut g = self.clone();
        g.loops.iter_mut().for_each(|l| *l = ExtNat::ZERO);
        g
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// `deg(v) + loops(v)`.
    pub fn degl(&self, v: usize) -> ExtNat {
        self.loops[v] + self.degree(v) as u64
    }

    pub fn degree_of(&self, a: ElementId) -> Result<usize> {
        Ok(self.degree(self.require(a)?))
    }

    pub fn degl_of(&self, a: ElementId) -> Result<ExtNat> {
        Ok(self.degl(self.require(a)?))
    }

    pub fn sum_degl(&self) -> ExtNat {
        (0..self.vertex_count()).map(|v| self.degl(v)).sum()
    }

    /// Shortest path length ignoring loops; `∞` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> ExtNat {
        self.bfs(u)[v].map_or(ExtNat::Infinite, |d| ExtNat::Finite(d as u64))
    }

    pub fn distance_between(&self, a: ElementId, b: ElementId) -> Result<ExtNat> {
        Ok(self.distance(self.require(a)?, self.require(b)?))
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for w in self.adj[u].ones() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest distance between two vertices; 0 for the empty graph.
    pub fn diameter(&self) -> ExtNat {
        let mut best = ExtNat::ZERO;
        for u in 0..self.vertex_count() {
            for d in self.bfs(u) {
                let d = d.map_or(ExtNat::Infinite, |d| ExtNat::Finite(d as u64));
                best = best.max(d);
            }
        }
        best
    }

    /// Every vertex adjacent to every other.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    /// Complete graph with any loops.
    pub fn is_pseudo_clique(&self) -> bool {
        self.is_complete()
    }

    /// `ω`: size of the largest clique of the reduced graph.
    pub fn clique_number(&self) -> ExtNat {
        let (best, _) = self.best_clique(|_| 0);
        ExtNat::Finite(best.len() as u64)
    }

    /// `Ω`: largest `C(|S|,2) + Σ loops` over cliques `S`; `∞` as soon as a
    /// vertex has infinitely many loops.
    pub fn pseudo_clique_number(&self) -> ExtNat {
        if self.has_infinite_loops() {
            return ExtNat::Infinite;
        }
        let weights: Vec<u64> = self
            .loops
            .iter()
            .map(|l| l.finite().expect("checked finite above"))
            .collect();
        let (_, weight) = self.best_clique(|v| weights[v]);
        ExtNat::Finite(weight)
    }

    /// A clique maximizing `C(|S|,2) + Σ w(v)`, by Bron–Kerbosch with
    /// pivoting and a weight bound. Ties resolve to the first clique found.
    fn best_clique(&self, w: impl Fn(usize) -> u64) -> (Vec<usize>, u64) {
        let n = self.vertex_count();
        let weights: Vec<u64> = (0..n).map(&w).collect();
        let mut search = CliqueSearch {
            adj: &self.adj,
            weights: &weights,
            best: Vec::new(),
            best_weight: 0,
        };
        if n > 0 {
            let mut all = FixedBitSet::with_capacity(n);
            all.insert_range(..);
            search.expand(&mut Vec::new(), all, FixedBitSet::with_capacity(n));
        }
        (search.best, search.best_weight)
    }

    /// The vertices of a maximum-weight pseudo-clique (empty if `Ω = ∞`).
    pub fn max_pseudo_clique(&self) -> Vec<usize> {
        if self.has_infinite_loops() {
            return Vec::new();
        }
        let loops = self.loops.clone();
        self.best_clique(|v| loops[v].finite().unwrap_or(0)).0
    }

    /// Same representatives, adjacency and loop counts.
    pub fn literally_equal(&self, other: &DivisorGraph) -> bool {
        self.representatives() == other.representatives()
            && self.adj == other.adj
            && self.loops == other.loops
    }

    fn same_context(&self, other: &DivisorGraph, what: &str) -> Result<()> {
        if self.ring != other.ring || self.x != other.x {
            return Err(Error::Mismatch(format!(
                "{what} needs graphs of the same ring and element"
            )));
        }
        Ok(())
    }

    /// Ways in which `self` fails to be a subgraph of `host` (vertices
    /// matched by class). Empty means `self ⊆ host`.
    pub fn subgraph_violations(&self, host: &DivisorGraph) -> Result<Vec<String>> {
        self.same_context(host, "subgraph comparison")?;
        if self.beta != host.beta {
            return Err(Error::Mismatch(
                "subgraph comparison needs the same beta".into(),
            ));
        }
        let mut out = Vec::new();
        let map: Vec<Option<usize>> = self
            .vertices
            .iter()
            .map(|v| host.vertex_of_class(v.class))
            .collect();
        for (u, m) in map.iter().enumerate() {
            match m {
                None => out.push(format!("vertex {} missing", self.vertices[u].name)),
                Some(hu) if host.loops[*hu] < self.loops[u] => out.push(format!(
                    "vertex {} has {} loops but only {} in the host",
                    self.vertices[u].name, self.loops[u], host.loops[*hu]
                )),
                _ => {}
            }
        }
        for (u, v) in self.edges() {
            if let (Some(hu), Some(hv)) = (map[u], map[v]) {
                if !host.adjacent(hu, hv) {
                    out.push(format!(
                        "edge {}--{} missing",
                        self.vertices[u].name, self.vertices[v].name
                    ));
                }
            }
        }
        Ok(out)
    }

    pub fn is_subgraph_of(&self, host: &DivisorGraph) -> Result<bool> {
        Ok(self.subgraph_violations(host)?.is_empty())
    }

    /// Ways in which `coarse` fails to be the quotient of `self` obtained by
    /// merging classes. Empty means the quotient relation holds.
    pub fn quotient_violations(&self, coarse: &DivisorGraph) -> Result<Vec<String>> {
        self.same_context(coarse, "quotient comparison")?;
        if self.alpha != coarse.alpha {
            return Err(Error::Mismatch(
                "quotient comparison needs the same alpha".into(),
            ));
        }
        if !self.beta.refines(coarse.beta) {
            return Err(Error::Mismatch(format!(
                "{} does not refine {}",
                self.beta, coarse.beta
            )));
        }
        let mut out = Vec::new();
        let mut map = Vec::with_capacity(self.vertex_count());
        for v in &self.vertices {
            let target = coarse.vertex_of(v.members[0]);
            match target {
                Some(t) if v.members.iter().all(|&m| coarse.vertex_of(m) == Some(t)) => {
                    if coarse.loops[t] < self.loops[map.len()] {
                        out.push(format!(
                            "merged vertex {} has fewer loops than {}",
                            coarse.vertices[t].name, v.name
                        ));
                    }
                }
                _ => out.push(format!("vertex {} has no image", v.name)),
            }
            map.push(target);
        }
        for (u, v) in self.edges() {
            let (Some(cu), Some(cv)) = (map[u], map[v]) else {
                continue;
            };
            if cu == cv {
                if coarse.loops[cu] == ExtNat::ZERO {
                    out.push(format!(
                        "edge {}--{} merged without creating a loop on {}",
                        self.vertices[u].name, self.vertices[v].name, coarse.vertices[cu].name
                    ));
                }
            } else if !coarse.adjacent(cu, cv) {
                out.push(format!(
                    "edge {}--{} has no image",
                    self.vertices[u].name, self.vertices[v].name
                ));
            }
        }
        Ok(out)
    }

    /// The pseudo-clique associated to a factorization: one vertex per
    /// distinct class, `e_i - 1` loops on each.
    pub fn factorization_subgraph(
        &self,
        ring: &FiniteRing,
        f: &Factorization,
    ) -> Result<PseudoClique> {
        let product = f
            .factors
            .iter()
            .fold(ring.one(), |acc, &a| ring.mul(acc, a));
        if f.factors.is_empty() || product != self.x || f.target != self.x {
            return Err(Error::Mismatch(format!(
                "not a factorization of {}",
                self.x_name
            )));
        }
        let mut counts: Vec<(usize, u64)> = Vec::new();
        for &a in &f.factors {
            let v = self.vertex_of(a).ok_or_else(|| {
                Error::Diagnostic(format!(
                    "factor {} of {} is not a vertex",
                    ring.name(a),
                    self.x_name
                ))
            })?;
            match counts.iter_mut().find(|(u, _)| *u == v) {
                Some(entry) => entry.1 += 1,
                None => counts.push((v, 1)),
            }
        }
        counts.sort();
        for (i, &(u, e)) in counts.iter().enumerate() {
            if ExtNat::Finite(e - 1) > self.loops[u] {
                return Err(Error::Diagnostic(format!(
                    "{} occurs {e} times but carries {} loops",
                    self.vertices[u].name, self.loops[u]
                )));
            }
            for &(v, _) in &counts[i + 1..] {
                if !self.adjacent(u, v) {
                    return Err(Error::Diagnostic(format!(
                        "factors {} and {} are not adjacent",
                        self.vertices[u].name, self.vertices[v].name
                    )));
                }
            }
        }
        let s = counts.len() as u64;
        let loops: Vec<u64> = counts.iter().map(|&(_, e)| e - 1).collect();
        Ok(PseudoClique {
            vertices: counts.iter().map(|&(v, _)| v).collect(),
            weight: s * (s - 1) / 2 + loops.iter().sum::<u64>(),
            loops,
        })
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let title = format!(
            "G[{},{}]({}) in {}",
            self.alpha, self.beta, self.x_name, self.ring
        );
        let _ = writeln!(out, "graph {} {{", quote(&title));
        let _ = writeln!(out, "  label={};", quote(&title));
        for v in &self.vertices {
            let _ = writeln!(out, "  {};", quote(&v.name));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(
                out,
                "  {} -- {};",
                quote(&self.vertices[u].name),
                quote(&self.vertices[v].name)
            );
        }
        for (v, l) in self.vertices.iter().zip(&self.loops) {
            if *l != ExtNat::ZERO {
                let _ = writeln!(
                    out,
                    "  {0} -- {0} [label=\"loops={1}\"];",
                    quote(&v.name),
                    l
                );
            }
        }
        out.push_str("}\n");
        out
    }

    /// Structured rendering: vertices, edges, loops and metrics.
    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                json!({
                    "name": v.name,
                    "id": v.rep.index(),
                    "members": v.members.iter().map(|m| m.index()).collect::<Vec<_>>(),
                    "loops": self.loops[i],
                    "deg": self.degree(i),
                    "degl": self.degl(i),
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges()
            .into_iter()
            .map(|(u, v)| json!([self.vertices[u].name, self.vertices[v].name]))
            .collect();
        json!({
            "ring": self.ring,
            "x": self.x_name,
            "alpha": self.alpha,
            "beta": self.beta,
            "vertices": vertices,
            "edges": edges,
            "metrics": {
                "vertex_count": self.vertex_count(),
                "edge_count": self.edge_count(),
                "loop_total": self.loop_total(),
                "edge_and_loop_total": self.edge_and_loop_total(),
                "sum_degl": self.sum_degl(),
                "diameter": self.diameter(),
                "empty": self.is_empty(),
                "clique_number": self.clique_number(),
                "pseudo_clique_number": self.pseudo_clique_number(),
                "is_pseudo_clique": self.is_pseudo_clique(),
            },
        })
    }
}

/// The subgraph associated to one factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoClique {
    /// Vertex indices in the host graph, ascending.
    pub vertices: Vec<usize>,
    /// `e_i - 1` for each vertex.
    pub loops: Vec<u64>,
    /// `C(s,2) + Σ loops`.
    pub weight: u64,
}

/// `φ(n, s) = s(s-1)/2 + n - s`.
pub fn phi(n: u64, s: u64) -> u64 {
    assert!(1 <= s && s <= n, "phi needs 1 <= s <= n");
    s * (s - 1) / 2 + n - s
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

struct CliqueSearch<'a> {
    adj: &'a [FixedBitSet],
    weights: &'a [u64],
    best: Vec<usize>,
    best_weight: u64,
}

impl CliqueSearch<'_> {
    fn weight_of(&self, r: &[usize]) -> u64 {
        let s = r.len() as u64;
        s * s.saturating_sub(1) / 2 + r.iter().map(|&v| self.weights[v]).sum::<u64>()
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet) {
        if p.is_clear() {
            if x.is_clear() {
                let w = self.weight_of(r);
                if w > self.best_weight || self.best.is_empty() {
                    self.best_weight = w;
                    self.best = r.clone();
                }
            }
            return;
        }
        // Bound: the best possible extension takes every candidate.
        let total = (r.len() + p.count_ones(..)) as u64;
        let bound = total * (total - 1) / 2
            + r.iter().map(|&v| self.weights[v]).sum::<u64>()
            + p.ones().map(|v| self.weights[v]).sum::<u64>();
        if !self.best.is_empty() && bound <= self.best_weight {
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| p.intersection(&self.adj[u]).count())
            .expect("p is non-empty");
        let candidates: Vec<usize> = p.difference(&self.adj[pivot]).collect();
        for v in candidates {
            r.push(v);
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.adj[v]);
            self.expand(r, np, nx);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
}
