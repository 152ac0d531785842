//! Implication graphs, the δ-graph of an irreducible family, topological
//! orders and ancestor sets.

use std::sync::Arc;

use crate::base::ImplicationalBase;
use crate::error::{Error, Result};
use crate::set::{AttachedFamily, Element, ElementSet, GroundSet};

/// Directed graph on the elements of a ground set, stored as out-neighbour sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    ground: Arc<GroundSet>,
    out: Vec<ElementSet>,
}

impl DirectedGraph {
    pub fn new(ground: Arc<GroundSet>) -> Self {
        let n = ground.len();
        DirectedGraph {
            ground,
            out: vec![ElementSet::empty(n); n],
        }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// Self-loops are ignored.
    pub fn add_arc(&mut self, a: Element, b: Element) {
        if a != b {
            self.out[a].insert(b);
        }
    }

    pub fn has_arc(&self, a: Element, b: Element) -> bool {
        self.out[a].contains(b)
    }

    pub fn out_neighbors(&self, a: Element) -> &ElementSet {
        &self.out[a]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |b| (a, b)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(ElementSet::len).sum()
    }

    pub fn is_acyclic(&self) -> bool {
        topological_order(self).is_ok()
    }

    /// Elements with a directed path to `x`, excluding `x` unless on a cycle.
    pub fn reaching(&self, x: Element) -> ElementSet {
        let n = self.ground.len();
        let mut into = vec![ElementSet::empty(n); n];
        for (a, b) in self.arcs() {
            into[b].insert(a);
        }
        let mut seen = ElementSet::empty(n);
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            for u in into[v].iter() {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Reflexive-free transitive closure, as a graph.
    pub fn transitive_closure(&self) -> DirectedGraph {
        let mut tc = DirectedGraph::new(self.ground.clone());
        for b in self.ground.elements() {
            for a in self.reaching(b).iter() {
                tc.add_arc(a, b);
            }
        }
        tc
    }
}

/// Arc `a -> b` whenever some implication has `a` in its premise and `b` in its conclusion.
pub fn implication_graph(ib: &ImplicationalBase) -> DirectedGraph {
    let mut g = DirectedGraph::new(ib.ground().clone());
    for imp in ib.implications() {
        for a in imp.premise().iter() {
            for b in imp.conclusion().iter() {
                g.add_arc(a, b);
            }
        }
    }
    g
}

pub fn is_acyclic_ib(ib: &ImplicationalBase) -> bool {
    implication_graph(ib).is_acyclic()
}

/// Kahn's algorithm, always removing the smallest-index source.
pub fn topological_order(g: &DirectedGraph) -> Result<Vec<Element>> {
    let n = g.ground.len();
    let mut indeg = vec![0usize; n];
    for (_, b) in g.arcs() {
        indeg[b] += 1;
    }
    let mut ready: std::collections::BTreeSet<Element> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for b in g.out[v].iter() {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.insert(b);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err(Error::CyclicGraph)
    }
}

/// Ancestors of `x` in the implication graph of an acyclic base.
pub fn ancestors(ib: &ImplicationalBase, x: Element) -> Result<ElementSet> {
    let g = implication_graph(ib);
    topological_order(&g)?;
    Ok(g.reaching(x))
}

/// Arc `a -> b` iff some `M ∈ irr(b)` omits `a`, for `a ≠ b`.
pub fn delta_graph(irr_all: &AttachedFamily) -> DirectedGraph {
    let ground = irr_all.ground();
    let mut g = DirectedGraph::new(ground.clone());
    for b in ground.elements() {
        for m in irr_all.of(b) {
            for a in ground.elements().filter(|&a| !m.contains(a)) {
                g.add_arc(a, b);
            }
        }
    }
    g
}

pub fn is_acyclic_system_from_irr(irr_all: &AttachedFamily) -> bool {
    delta_graph(irr_all).is_acyclic()
}

/// Ancestors of `x` with respect to the critical base, read off the δ-graph.
pub fn critanc_from_irr(irr_all: &AttachedFamily, x: Element) -> Result<ElementSet> {
    let g = delta_graph(irr_all);
    if !g.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    Ok(g.reaching(x))
}
