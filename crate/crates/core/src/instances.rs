//! Instance families and reductions used as generators for tests and benches.

use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::base::{Implication, ImplicationalBase};
use crate::error::{Error, Result};
use crate::hypergraph::{sperner_reduce, Hypergraph};
use crate::set::{AttachedFamily, Element, ElementSet, GroundSet};

fn pair_names(k: usize) -> Vec<String> {
    (1..=k).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect()
}

fn unit(n: usize, premise: &[Element], b: Element) -> Implication {
    Implication::unit(ElementSet::from_elements(n, premise.iter().copied()), b).expect("disjoint by construction")
}

/// `{a_i b_i -> x}` on `a1 b1 … ak bk x`; it has `2^k + 2k` irreducible closed sets.
pub fn gen_exponential(k: usize) -> ImplicationalBase {
    assert!(k >= 1, "k must be positive");
    let mut names = pair_names(k);
    names.push("x".into());
    let g = GroundSet::new(names).expect("generated names are valid");
    let n = g.len();
    let x = n - 1;
    let imps = (0..k).map(|i| unit(n, &[2 * i, 2 * i + 1], x)).collect();
    ImplicationalBase::new(g, imps).expect("non-empty premises")
}

/// The irreducible family of the dual of [`gen_exponential`]: `X ∖ {y}`
/// attached to each `y ≠ x`, and `X ∖ {a_i, b_i, x}` attached to `x`.
pub fn gen_exponential_dual_irr(k: usize) -> AttachedFamily {
    assert!(k >= 1, "k must be positive");
    let mut names = pair_names(k);
    names.push("x".into());
    let g = GroundSet::new(names).expect("generated names are valid");
    let n = g.len();
    let x = n - 1;
    let full = g.full_set();
    let mut per_element: Vec<Vec<ElementSet>> = (0..n).map(|y| vec![full.without(y)]).collect();
    per_element[x] = (0..k)
        .map(|i| full.without(2 * i).without(2 * i + 1).without(x))
        .collect();
    AttachedFamily::from_parts(g, per_element).expect("valid attached family")
}

/// `{a_i b_i -> x} ∪ {b_i -> b_{i+1}}` on `a1 b1 … ak bk x`.
pub fn gen_chain(k: usize) -> ImplicationalBase {
    assert!(k >= 1, "k must be positive");
    let mut names = pair_names(k);
    names.push("x".into());
    let g = GroundSet::new(names).expect("generated names are valid");
    let n = g.len();
    let x = n - 1;
    let mut imps: Vec<Implication> = (0..k).map(|i| unit(n, &[2 * i, 2 * i + 1], x)).collect();
    imps.extend((0..k - 1).map(|i| unit(n, &[2 * i + 1], 2 * i + 3)));
    ImplicationalBase::new(g, imps).expect("non-empty premises")
}

/// First of `base`, `base'`, `base''`, … not already taken.
fn fresh_name(taken: &HashSet<String>, base: &str) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Ground set made of the hypergraph's vertices (in order) followed by
/// `extra` fresh names, plus the edges mapped onto it.
fn vertex_ground(h: &Hypergraph, extra: &[&str]) -> Result<(Arc<GroundSet>, Vec<ElementSet>)> {
    if h.edges().iter().any(ElementSet::is_empty) {
        return Err(Error::EmptyEdge);
    }
    if !h.is_sperner() {
        return Err(Error::NotSperner);
    }
    let verts = h.vertices().to_vec();
    let mut names: Vec<String> = verts.iter().map(|&v| h.ground().name(v).to_string()).collect();
    let mut taken: HashSet<String> = names.iter().cloned().collect();
    for e in extra {
        let name = fresh_name(&taken, e);
        taken.insert(name.clone());
        names.push(name);
    }
    let g = GroundSet::new(names)?;
    let n = g.len();
    let edges = h
        .edges()
        .iter()
        .map(|e| {
            ElementSet::from_elements(
                n,
                verts.iter().enumerate().filter(|(_, v)| e.contains(**v)).map(|(i, _)| i),
            )
        })
        .collect();
    Ok((g, edges))
}

/// `{E -> z : E ∈ edges}` on the vertices plus a fresh element `z` (the last
/// element); `irr(z)` is the family of maximal independent sets.
pub fn gen_mis_reduction(h: &Hypergraph) -> Result<ImplicationalBase> {
    let (g, edges) = vertex_ground(h, &["z"])?;
    let z = g.len() - 1;
    let imps = edges
        .into_iter()
        .map(|e| Implication::unit(e, z))
        .collect::<Result<Vec<_>>>()?;
    ImplicationalBase::new(g, imps)
}

/// `{E_i -> z_i} ∪ {z_i -> z_{i+1}}` with target `z_m`, whose irreducible
/// sets are the maximal independent sets. Conclusion-degree is at most 2.
pub fn gen_conclusion_chain(h: &Hypergraph) -> Result<(ImplicationalBase, Element)> {
    let m = h.edges().len();
    if m == 0 {
        return Err(Error::InconsistentInput("hypergraph has no edges".into()));
    }
    let zs: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
    let zrefs: Vec<&str> = zs.iter().map(String::as_str).collect();
    let (g, edges) = vertex_ground(h, &zrefs)?;
    let n = g.len();
    let first_z = n - m;
    let mut imps = Vec::new();
    for (i, e) in edges.into_iter().enumerate() {
        imps.push(Implication::unit(e, first_z + i)?);
    }
    for i in 0..m - 1 {
        imps.push(unit(n, &[first_z + i], first_z + i + 1));
    }
    Ok((ImplicationalBase::new(g, imps)?, n - 1))
}

/// Copies of the original elements inside the degree-reduced base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMapping {
    pub copies: Vec<Vec<Element>>,
}

impl DegreeMapping {
    /// `ψ(C)`: the union of the copies of the members of `c`.
    pub fn psi(&self, c: &ElementSet, target: &GroundSet) -> ElementSet {
        ElementSet::from_elements(target.len(), c.iter().flat_map(|x| self.copies[x].iter().copied()))
    }
}

/// Replaces every occurrence of `x` in the `j`-th implication by a copy
/// `x^j` and makes the copies of `x` equivalent with a cycle. Elements that
/// occur nowhere keep a single copy `x^0`, so `ψ` stays a bijection.
pub fn reduce_degree(ib: &ImplicationalBase) -> (ImplicationalBase, DegreeMapping) {
    let g = ib.ground();
    let mut names = Vec::new();
    let mut copies: Vec<Vec<Element>> = vec![Vec::new(); g.len()];
    let mut copy_of: Vec<Vec<Option<Element>>> = vec![vec![None; ib.len()]; g.len()];
    for x in g.elements() {
        for (j, imp) in ib.implications().iter().enumerate() {
            if imp.premise().contains(x) || imp.conclusion().contains(x) {
                copy_of[x][j] = Some(names.len());
                copies[x].push(names.len());
                names.push(format!("{}^{}", g.name(x), j + 1));
            }
        }
        if copies[x].is_empty() {
            copies[x].push(names.len());
            names.push(format!("{}^0", g.name(x)));
        }
    }
    let target = GroundSet::new(names).expect("copy names are valid");
    let n = target.len();
    let mut imps = Vec::new();
    for (j, imp) in ib.implications().iter().enumerate() {
        let map = |s: &ElementSet| {
            ElementSet::from_elements(n, s.iter().map(|x| copy_of[x][j].expect("occurrence has a copy")))
        };
        imps.push(Implication::raw(map(imp.premise()), map(imp.conclusion())));
    }
    for cs in copies.iter().filter(|cs| cs.len() > 1) {
        for (i, &c) in cs.iter().enumerate() {
            imps.push(unit(n, &[c], cs[(i + 1) % cs.len()]));
        }
    }
    let base = ImplicationalBase::with_empty_premises(target, imps).expect("copies live on the target");
    (base, DegreeMapping { copies })
}

/// Random base whose index order is a topological order: each implication
/// draws its premise below a random split and its conclusion above it.
/// Duplicates are redrawn; premises are never empty.
pub fn random_acyclic(n: usize, m: usize, pmax: usize, cmax: usize, seed: u64) -> ImplicationalBase {
    assert!(n >= 2, "need at least two elements");
    let g = GroundSet::numbered(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut imps = Vec::new();
    let mut attempts = 0;
    while imps.len() < m && attempts < 50 * (m + 1) {
        attempts += 1;
        let split = rng.gen_range(1..n);
        let premise = random_subset(&mut rng, n, 0..split, pmax.max(1));
        let conclusion = random_subset(&mut rng, n, split..n, cmax.max(1));
        let imp = Implication::new(premise, conclusion).expect("disjoint ranges");
        if seen.insert(imp.clone()) {
            imps.push(imp);
        }
    }
    ImplicationalBase::new(g, imps).expect("non-empty premises")
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, range: std::ops::Range<usize>, max: usize) -> ElementSet {
    let mut pool: Vec<Element> = range.collect();
    let size = rng.gen_range(1..=max.min(pool.len()));
    let mut out = ElementSet::empty(n);
    for _ in 0..size {
        let i = rng.gen_range(0..pool.len());
        out.insert(pool.swap_remove(i));
    }
    out
}

/// Random Sperner hypergraph on `n` vertices with at most `m` non-empty edges.
pub fn random_sperner(n: usize, m: usize, max_edge: usize, seed: u64) -> Hypergraph {
    let g = GroundSet::numbered(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..m)
        .map(|_| random_subset(&mut rng, n, 0..n, max_edge.max(1)))
        .collect();
    let h = Hypergraph::new(g.clone(), g.full_set(), edges).expect("edges on the ground set");
    sperner_reduce(&h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acyclic::is_acyclic_ib;
    use crate::base::degree_profile;
    use crate::closure::{all_closed_sets_oracle, irr_oracle, is_closed};
    use crate::fixtures::{fixture_a, three_edge_hypergraph};
    use crate::hypergraph::maximal_independent_sets_small;

    fn irr_count(ib: &ImplicationalBase) -> usize {
        irr_oracle(ib, 20).unwrap().total()
    }

    #[test]
    fn exponential_family() {
        assert_eq!(gen_exponential(1).len(), 1);
        assert_eq!(irr_count(&gen_exponential(1)), 4);
        assert_eq!(irr_count(&gen_exponential(3)), 14);
        assert_eq!(gen_exponential(3).ground().len(), 7);
    }

    #[test]
    fn exponential_dual_family() {
        assert_eq!(gen_exponential_dual_irr(1).total(), 3);
        assert_eq!(gen_exponential_dual_irr(2).total(), 6);
        assert_eq!(gen_exponential_dual_irr(3).total(), 9);
    }

    #[test]
    fn chain_family() {
        let c2 = gen_chain(2);
        assert_eq!((c2.ground().len(), c2.len()), (5, 3));
        let c5 = gen_chain(5);
        let irr = irr_oracle(&c5, 20).unwrap();
        assert_eq!(irr.of(c5.ground().element("x").unwrap()).len(), 6);
        assert_eq!(irr.total(), 16);
        assert!(is_acyclic_ib(&c5));
    }

    #[test]
    fn mis_reduction() {
        let h = three_edge_hypergraph();
        let ib = gen_mis_reduction(&h).unwrap();
        assert_eq!(ib.len(), 3);
        let z = ib.ground().element("z").unwrap();
        let irr = irr_oracle(&ib, 20).unwrap();
        let mut got: Vec<ElementSet> = irr.of(z).to_vec();
        got.sort();
        let mis: Vec<ElementSet> = maximal_independent_sets_small(&h, 22)
            .unwrap()
            .iter()
            .map(|s| ElementSet::from_elements(6, s.iter()))
            .collect();
        assert_eq!(got, mis);
        assert!(got.contains(&ib.ground().parse_set("1 2 5").unwrap()));

        let g = GroundSet::new(["a", "b"]).unwrap();
        let none = Hypergraph::new(g.clone(), g.full_set(), vec![]).unwrap();
        let ib = gen_mis_reduction(&none).unwrap();
        assert_eq!(irr_oracle(&ib, 20).unwrap().of(2), &[ib.ground().parse_set("a b").unwrap()]);

        let bad = Hypergraph::new(g.clone(), g.full_set(), vec![g.parse_set("a").unwrap(), g.full_set()]).unwrap();
        assert_eq!(gen_mis_reduction(&bad), Err(Error::NotSperner));
    }

    #[test]
    fn conclusion_chain() {
        let h = three_edge_hypergraph();
        let (ib, target) = gen_conclusion_chain(&h).unwrap();
        assert_eq!(ib.ground().name(target), "z3");
        assert!(degree_profile(&ib).summary.cdeg <= 2);
        let irr = irr_oracle(&ib, 20).unwrap();
        let mut got: Vec<ElementSet> = irr.of(target).to_vec();
        got.sort();
        let mis: Vec<ElementSet> = maximal_independent_sets_small(&h, 22)
            .unwrap()
            .iter()
            .map(|s| ElementSet::from_elements(ib.ground().len(), s.iter()))
            .collect();
        assert_eq!(got, mis);

        let g = GroundSet::new(["a", "b"]).unwrap();
        let one = Hypergraph::new(g.clone(), g.full_set(), vec![g.full_set()]).unwrap();
        let (ib, _) = gen_conclusion_chain(&one).unwrap();
        assert_eq!(degree_profile(&ib).summary.cdeg, 1);
    }

    fn check_gadget(ib: &ImplicationalBase) {
        let (reduced, mapping) = reduce_degree(ib);
        assert!(degree_profile(&reduced).summary.deg <= 3);
        let before = all_closed_sets_oracle(ib, 20).unwrap();
        let after = all_closed_sets_oracle(&reduced, 20).unwrap();
        assert_eq!(before.len(), after.len());
        for c in before.iter() {
            assert!(is_closed(&reduced, &mapping.psi(c, reduced.ground())));
        }
    }

    #[test]
    fn degree_gadget() {
        for rules in [[("1 3", "4"), ("1 2", "4"), ("4 5", "2")], [("1 3", "4"), ("1 2", "3"), ("4 5", "2")]] {
            let g = GroundSet::new(["1", "2", "3", "4", "5"]).unwrap();
            let ib = ImplicationalBase::from_names(g, &rules).unwrap();
            let (reduced, _) = reduce_degree(&ib);
            assert_eq!(degree_profile(&reduced).summary.deg, 3);
            check_gadget(&ib);
        }
        check_gadget(&fixture_a());

        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        let once = ImplicationalBase::from_names(g, &[("a", "b"), ("c", "d")]).unwrap();
        let (reduced, mapping) = reduce_degree(&once);
        assert_eq!(reduced.len(), 2);
        assert!(mapping.copies.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn random_bases() {
        let a = random_acyclic(5, 4, 2, 2, 42);
        assert_eq!(a, random_acyclic(5, 4, 2, 2, 42));
        assert!(is_acyclic_ib(&a));
        assert_eq!(a.len(), 4);
        for seed in 0..20 {
            let two = random_acyclic(2, 1, 1, 1, seed);
            assert_eq!(two.implications(), ImplicationalBase::from_names(two.ground().clone(), &[("0", "1")]).unwrap().implications());
            assert!(is_acyclic_ib(&random_acyclic(12, 15, 3, 3, seed)));
        }
    }

    #[test]
    fn random_hypergraphs_are_sperner() {
        for seed in 0..20 {
            let h = random_sperner(10, 6, 4, seed);
            assert!(h.is_sperner());
            assert!(h.edges().iter().all(|e| !e.is_empty()));
        }
    }
}
