//! Hypergraphs with bounded brute-force dualization.
//!
//! Minimal transversals are found by testing every vertex subset up to a
//! size bound, in order of size then lexicographic index sequence. This is
//! exactly what the bounded-degree enumeration algorithms need: their
//! hypergraphs have few edges, and a minimal transversal never has more
//! members than there are edges.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::{minimal_sets, ElementSet, GroundSet, SetFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: Arc<GroundSet>,
    vertices: ElementSet,
    edges: Vec<ElementSet>,
}

impl Hypergraph {
    pub fn new(ground: Arc<GroundSet>, vertices: ElementSet, edges: Vec<ElementSet>) -> Result<Self> {
        ground.check(&vertices)?;
        for e in &edges {
            ground.check(e)?;
            if !e.is_subset(&vertices) {
                return Err(Error::InconsistentInput("edge outside the vertex set".into()));
            }
        }
        Ok(Hypergraph {
            ground,
            vertices,
            edges,
        })
    }

    /// Hypergraph whose vertex set is the union of its edges.
    pub fn from_edges(ground: Arc<GroundSet>, edges: Vec<ElementSet>) -> Result<Self> {
        let mut vertices = ground.empty_set();
        for e in &edges {
            ground.check(e)?;
            vertices.union_with(e);
        }
        Self::new(ground, vertices, edges)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn vertices(&self) -> &ElementSet {
        &self.vertices
    }

    pub fn edges(&self) -> &[ElementSet] {
        &self.edges
    }

    pub fn is_sperner(&self) -> bool {
        minimal_sets(&self.edges).len() == self.edges.len()
    }

    pub fn is_transversal(&self, t: &ElementSet) -> bool {
        self.edges.iter().all(|e| e.intersects(t))
    }

    /// Transversal in which every member has a private edge.
    pub fn is_minimal_transversal(&self, t: &ElementSet) -> bool {
        self.is_transversal(t) && has_private_edges(&self.edges, t)
    }
}

fn has_private_edges(edges: &[ElementSet], t: &ElementSet) -> bool {
    t.iter().all(|v| {
        edges
            .iter()
            .any(|e| e.contains(v) && e.intersection(t).len() == 1)
    })
}

/// Keeps the inclusion-minimal edges, deduplicated, in first-occurrence order.
pub fn sperner_reduce(h: &Hypergraph) -> Hypergraph {
    Hypergraph {
        ground: h.ground.clone(),
        vertices: h.vertices.clone(),
        edges: minimal_sets(&h.edges),
    }
}

/// All minimal transversals with at most `kmax` members, ordered by size then
/// lexicographically. Passing `kmax = |edges|` yields the complete dual.
pub fn minimal_transversals_bounded(h: &Hypergraph, kmax: usize) -> SetFamily {
    let sets = transversals_bounded(h, kmax);
    SetFamily::from_sets(h.ground.clone(), sets).expect("transversals live on the ground set")
}

pub(crate) fn transversals_bounded(h: &Hypergraph, kmax: usize) -> Vec<ElementSet> {
    let n = h.ground.len();
    if h.edges.iter().any(ElementSet::is_empty) {
        return Vec::new();
    }
    if h.edges.is_empty() {
        return vec![ElementSet::empty(n)];
    }
    // Only vertices lying in some edge can have a private edge.
    let mut covered = ElementSet::empty(n);
    for e in &h.edges {
        covered.union_with(e);
    }
    covered.intersect_with(&h.vertices);
    let verts = covered.to_vec();
    let local_n = verts.len();
    let local_edges: Vec<ElementSet> = h
        .edges
        .iter()
        .map(|e| {
            ElementSet::from_elements(
                local_n,
                verts.iter().enumerate().filter(|(_, v)| e.contains(**v)).map(|(i, _)| i),
            )
        })
        .collect();

    let mut out = Vec::new();
    for size in 1..=kmax.min(local_n) {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let t = ElementSet::from_elements(local_n, comb.iter().copied());
            if local_edges.iter().all(|e| e.intersects(&t)) && has_private_edges(&local_edges, &t) {
                out.push(ElementSet::from_elements(n, comb.iter().map(|&i| verts[i])));
            }
            if !next_combination(&mut comb, local_n) {
                break;
            }
        }
    }
    out
}

/// Advances `comb` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Maximal independent sets as complements (within the vertex set) of the
/// minimal transversals. Intended for oracles and instance validation.
pub fn maximal_independent_sets_small(h: &Hypergraph, cap: usize) -> Result<SetFamily> {
    if h.ground.len() > cap {
        return Err(Error::CapExceeded {
            size: h.ground.len(),
            cap,
        });
    }
    let reduced = sperner_reduce(h);
    let mut sets: Vec<ElementSet> = transversals_bounded(&reduced, reduced.edges.len())
        .into_iter()
        .map(|t| h.vertices.difference(&t))
        .collect();
    sets.sort();
    SetFamily::from_sets(h.ground.clone(), sets)
}

/// True iff every minimal transversal has at most `k` members.
pub fn dual_dimension_at_most(h: &Hypergraph, k: usize) -> bool {
    let reduced = sperner_reduce(h);
    transversals_bounded(&reduced, reduced.edges.len())
        .iter()
        .all(|t| t.len() <= k)
}
