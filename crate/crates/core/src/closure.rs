//! Closure operators, extreme points, attachment and brute-force oracles.

use std::sync::Arc;

use crate::base::ImplicationalBase;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::set::{size_then_lex, AttachedFamily, Element, ElementSet, GroundSet, SetFamily};

pub const DEFAULT_ORACLE_CAP: usize = 20;
pub const ORACLE_CAP_ENV: &str = "CSKIT_ORACLE_CAP";

/// The oracle cap, taken from `CSKIT_ORACLE_CAP` when set to a number.
pub fn default_oracle_cap() -> usize {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

/// A closure operator on the subsets of a ground set.
pub trait ClosureOperator: Sync {
    fn ground(&self) -> &Arc<GroundSet>;
    fn close(&self, y: &ElementSet) -> ElementSet;
}

impl<T: ClosureOperator + ?Sized> ClosureOperator for &T {
    fn ground(&self) -> &Arc<GroundSet> {
        (**self).ground()
    }

    fn close(&self, y: &ElementSet) -> ElementSet {
        (**self).close(y)
    }
}

impl ClosureOperator for ImplicationalBase {
    fn ground(&self) -> &Arc<GroundSet> {
        ImplicationalBase::ground(self)
    }

    fn close(&self, y: &ElementSet) -> ElementSet {
        closure_fc(self, y)
    }
}

/// Forward chaining: rounds over the base in order until nothing fires.
pub fn closure_fc(ib: &ImplicationalBase, y: &ElementSet) -> ElementSet {
    let mut c = y.clone();
    loop {
        let mut changed = false;
        for imp in ib.implications() {
            if imp.premise().is_subset(&c) && !imp.conclusion().is_subset(&c) {
                c.union_with(imp.conclusion());
                changed = true;
            }
        }
        if !changed {
            return c;
        }
    }
}

/// Closure given by a family of irreducible closed sets: the intersection of
/// the members containing the argument, and the ground set.
#[derive(Debug, Clone)]
pub struct FamilyClosure {
    ground: Arc<GroundSet>,
    sets: Vec<ElementSet>,
}

impl FamilyClosure {
    pub fn new(ground: Arc<GroundSet>, sets: Vec<ElementSet>) -> Result<Self> {
        for s in &sets {
            ground.check(s)?;
        }
        Ok(FamilyClosure { ground, sets })
    }

    pub fn from_family(irr: &SetFamily) -> Self {
        FamilyClosure {
            ground: irr.ground().clone(),
            sets: irr.sets().to_vec(),
        }
    }

    pub fn from_attached(irr: &AttachedFamily) -> Self {
        FamilyClosure {
            ground: irr.ground().clone(),
            sets: irr.flatten(),
        }
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }
}

impl ClosureOperator for FamilyClosure {
    fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    fn close(&self, y: &ElementSet) -> ElementSet {
        let mut c = self.ground.full_set();
        for m in self.sets.iter().filter(|m| y.is_subset(m)) {
            c.intersect_with(m);
        }
        c
    }
}

pub fn closure_from_family(ground: &Arc<GroundSet>, irr: &SetFamily, y: &ElementSet) -> ElementSet {
    let mut c = ground.full_set();
    for m in irr.iter().filter(|m| y.is_subset(m)) {
        c.intersect_with(m);
    }
    c
}

pub fn is_closed(op: &impl ClosureOperator, c: &ElementSet) -> bool {
    op.close(c) == *c
}

/// `{x ∈ a : x ∉ φ(a ∖ {x})}`.
pub fn extreme_points(op: &impl ClosureOperator, a: &ElementSet) -> ElementSet {
    ElementSet::from_elements(
        a.universe(),
        a.iter().filter(|&x| !op.close(&a.without(x)).contains(x)),
    )
}

/// True iff `m` is a maximal closed set avoiding `x`.
pub fn is_attached(op: &impl ClosureOperator, m: &ElementSet, x: Element) -> bool {
    if m.contains(x) || !is_closed(op, m) {
        return false;
    }
    op.ground()
        .elements()
        .filter(|&y| y != x && !m.contains(y))
        .all(|y| op.close(&m.with(y)).contains(x))
}

/// The unique element `m` is attached to in the system given by `irr_all`.
pub fn attached_element(
    ground: &Arc<GroundSet>,
    irr_all: &SetFamily,
    m: &ElementSet,
) -> Result<Element> {
    let op = FamilyClosure::from_family(irr_all);
    let mut found = None;
    for x in ground.elements() {
        if is_attached(&op, m, x) {
            if found.is_some() {
                return Err(Error::NotConvexGeometry);
            }
            found = Some(x);
        }
    }
    found.ok_or(Error::NotConvexGeometry)
}

fn check_cap(ground: &GroundSet, cap: usize) -> Result<()> {
    // Subsets are enumerated as 64-bit masks.
    if ground.len() > cap || ground.len() > 63 {
        return Err(Error::CapExceeded {
            size: ground.len(),
            cap,
        });
    }
    Ok(())
}

pub fn all_closed_sets_oracle(op: &impl ClosureOperator, cap: usize) -> Result<SetFamily> {
    all_closed_sets_oracle_with(op, cap, Execution::default())
}

/// Closes every subset and keeps the distinct fixpoints, sorted canonically.
pub fn all_closed_sets_oracle_with(
    op: &impl ClosureOperator,
    cap: usize,
    exec: Execution,
) -> Result<SetFamily> {
    let ground = op.ground().clone();
    check_cap(&ground, cap)?;
    let n = ground.len();
    let mut sets = exec.chunked(1u64 << n, |range| {
        range
            .filter_map(|mask| {
                let y = ElementSet::from_mask(n, mask);
                let c = op.close(&y);
                // Keep only fixpoints so each closed set appears once.
                (c == y).then_some(c)
            })
            .collect()
    });
    sets.sort();
    SetFamily::from_sets(ground, sets)
}

pub fn irr_oracle(op: &impl ClosureOperator, cap: usize) -> Result<AttachedFamily> {
    irr_oracle_with(op, cap, Execution::default())
}

/// Irreducible closed sets, each attached to its element. Fails with
/// `NotConvexGeometry` unless the system is a convex geometry.
pub fn irr_oracle_with(
    op: &impl ClosureOperator,
    cap: usize,
    exec: Execution,
) -> Result<AttachedFamily> {
    let ground = op.ground().clone();
    let closed = all_closed_sets_oracle_with(op, cap, exec)?;
    let full = ground.full_set();
    if closed.sets().first().is_none_or(|c| !c.is_empty()) {
        return Err(Error::NotConvexGeometry);
    }
    let candidates: Vec<&ElementSet> = closed.iter().filter(|c| **c != full).collect();
    let results = exec.map(&candidates, |c| -> Result<Option<(Element, ElementSet)>> {
        let outside: Vec<Element> = ground.elements().filter(|&y| !c.contains(y)).collect();
        let succ: Vec<ElementSet> = outside.iter().map(|&y| op.close(&c.with(y))).collect();
        if !outside.iter().zip(&succ).any(|(&y, s)| *s == c.with(y)) {
            return Err(Error::NotConvexGeometry);
        }
        let mut meet = full.clone();
        for s in &succ {
            meet.intersect_with(s);
        }
        if meet == **c {
            return Ok(None);
        }
        let mut attached = outside.iter().copied().filter(|&x| {
            outside
                .iter()
                .zip(&succ)
                .all(|(&y, s)| y == x || s.contains(x))
        });
        match (attached.next(), attached.next()) {
            (Some(x), None) => Ok(Some((x, (*c).clone()))),
            _ => Err(Error::NotConvexGeometry),
        }
    });
    let mut family = AttachedFamily::new(ground);
    for r in results {
        if let Some((x, m)) = r? {
            family.push(x, m);
        }
    }
    Ok(family)
}

/// Minimal generators of `x`, ordered by size then lexicographically.
pub fn mingen_oracle(op: &impl ClosureOperator, x: Element, cap: usize) -> Result<SetFamily> {
    let ground = op.ground().clone();
    check_cap(&ground, cap)?;
    let n = ground.len();
    let xbit = 1u64 << x;
    // generates[mask] for masks avoiding x, indexed by the full mask.
    let generates: Vec<bool> = Execution::default().chunked(1u64 << n, |range| {
        range
            .map(|mask| mask & xbit == 0 && op.close(&ElementSet::from_mask(n, mask)).contains(x))
            .collect()
    });
    let mut sets: Vec<ElementSet> = (0..1u64 << n)
        .filter(|&mask| {
            generates[mask as usize]
                && (0..n).all(|b| mask & (1 << b) == 0 || !generates[(mask & !(1 << b)) as usize])
        })
        .map(|mask| ElementSet::from_mask(n, mask))
        .collect();
    sets.sort_by(size_then_lex);
    SetFamily::from_sets(ground, sets)
}

/// `∅` is closed and every closed `C ≠ X` extends by one element to a closed set.
pub fn is_convex_geometry_oracle(op: &impl ClosureOperator, cap: usize) -> Result<bool> {
    let closed = all_closed_sets_oracle(op, cap)?;
    let ground = op.ground();
    let full = ground.full_set();
    if !closed.sets().first().is_some_and(ElementSet::is_empty) {
        return Ok(false);
    }
    Ok(closed.iter().filter(|c| **c != full).all(|c| {
        ground
            .elements()
            .filter(|&y| !c.contains(y))
            .any(|y| is_closed(op, &c.with(y)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{aggregation, normalize, unit_expansion, Implication};
    use crate::fixtures::{acyclic_pair_first, acyclic_pair_second, fixture_a};
    use crate::hypergraph::{maximal_independent_sets_small, minimal_transversals_bounded, Hypergraph};
    use crate::instances::random_acyclic;
    use proptest::prelude::*;

    fn set(ib: &ImplicationalBase, s: &str) -> ElementSet {
        ib.ground().parse_set(s).unwrap()
    }

    fn el(ib: &ImplicationalBase, s: &str) -> Element {
        ib.ground().element(s).unwrap()
    }

    fn fmt(ib: &ImplicationalBase, sets: &[ElementSet]) -> Vec<String> {
        sets.iter().map(|s| ib.ground().format_set(s)).collect()
    }

    #[test]
    fn forward_chaining_on_fixture_a() {
        let a = fixture_a();
        assert_eq!(closure_fc(&a, &set(&a, "2 5")), set(&a, "2 3 5"));
        assert_eq!(closure_fc(&a, &set(&a, "4")), set(&a, "1 4"));
        assert_eq!(closure_fc(&a, &set(&a, "-")), set(&a, "-"));
        assert_eq!(closure_fc(&a, &set(&a, "1 3 5")), set(&a, "1 2 3 5"));
    }

    #[test]
    fn closed_sets_and_extreme_points() {
        let a = fixture_a();
        assert!(is_closed(&a, &set(&a, "1 3 4")));
        assert!(!is_closed(&a, &set(&a, "1 2")));
        assert!(is_closed(&a, &a.ground().full_set()));
        assert_eq!(extreme_points(&a, &set(&a, "1 3 5")), set(&a, "1 5"));
        assert_eq!(extreme_points(&a, &set(&a, "-")), set(&a, "-"));
        assert_eq!(extreme_points(&a, &set(&a, "2")), set(&a, "2"));
    }

    #[test]
    fn attachment() {
        let a = fixture_a();
        assert!(is_attached(&a, &set(&a, "3 5"), el(&a, "2")));
        assert!(!is_attached(&a, &set(&a, "-"), el(&a, "3")));
        assert!(is_attached(&a, &set(&a, "1 2 3 5"), el(&a, "4")));
    }

    #[test]
    fn closed_sets_of_fixture_a() {
        let a = fixture_a();
        let closed = all_closed_sets_oracle(&a, 20).unwrap();
        assert_eq!(closed.len(), 15);
        for s in ["-", "2", "5", "1 4", "1 2 3 4 5"] {
            assert!(closed.contains(&set(&a, s)), "{s}");
        }
        let seq = all_closed_sets_oracle_with(&a, 20, Execution::Sequential).unwrap();
        assert_eq!(seq, closed);
    }

    #[test]
    fn closed_sets_trivial_systems() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let free = ImplicationalBase::empty(g.clone());
        assert_eq!(all_closed_sets_oracle(&free, 20).unwrap().len(), 4);
        let ab = ImplicationalBase::from_names(g, &[("a", "b")]).unwrap();
        assert_eq!(
            fmt(&ab, all_closed_sets_oracle(&ab, 20).unwrap().sets()),
            vec!["", "a b", "b"]
        );
        assert_eq!(
            all_closed_sets_oracle(&fixture_a(), 4).unwrap_err(),
            Error::CapExceeded { size: 5, cap: 4 }
        );
    }

    #[test]
    fn irreducibles_of_fixture_a() {
        let a = fixture_a();
        let irr = irr_oracle(&a, 20).unwrap();
        assert_eq!(fmt(&a, irr.of(el(&a, "2"))), vec!["1 3 4", "3 5"]);
        assert_eq!(fmt(&a, irr.of(el(&a, "3"))), vec!["1 4", "2", "5"]);
        assert_eq!(fmt(&a, irr.of(el(&a, "1"))), vec!["2 3 5"]);
        assert_eq!(fmt(&a, irr.of(el(&a, "4"))), vec!["1 2 3 5"]);
        assert_eq!(fmt(&a, irr.of(el(&a, "5"))), vec!["1 2 3 4"]);
        assert_eq!(irr.total(), 8);
        assert_eq!(irr_oracle_with(&a, 20, Execution::Sequential).unwrap(), irr);
    }

    #[test]
    fn irreducibles_of_free_system() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let free = ImplicationalBase::empty(g.clone());
        let irr = irr_oracle(&free, 20).unwrap();
        assert_eq!(irr.of(0), &[g.parse_set("b").unwrap()]);
        assert_eq!(irr.of(1), &[g.parse_set("a").unwrap()]);
    }

    #[test]
    fn attached_element_of_fixture_a() {
        let a = fixture_a();
        let all = SetFamily::from_sets(a.ground().clone(), irr_oracle(&a, 20).unwrap().flatten()).unwrap();
        let g = a.ground();
        assert_eq!(attached_element(g, &all, &set(&a, "3 5")).unwrap(), el(&a, "2"));
        assert_eq!(attached_element(g, &all, &set(&a, "2 3 5")).unwrap(), el(&a, "1"));
        assert_eq!(attached_element(g, &all, &set(&a, "1 2 3 5")).unwrap(), el(&a, "4"));
    }

    #[test]
    fn family_closure_matches_fixture_a() {
        let a = fixture_a();
        let irr = irr_oracle(&a, 20).unwrap();
        let fam = SetFamily::from_sets(a.ground().clone(), irr.flatten()).unwrap();
        let g = a.ground();
        assert_eq!(closure_from_family(g, &fam, &set(&a, "2 5")), set(&a, "2 3 5"));
        assert_eq!(closure_from_family(g, &fam, &g.full_set()), g.full_set());
        for m in fam.iter() {
            assert_eq!(closure_from_family(g, &fam, m), *m);
        }
    }

    #[test]
    fn mingen_of_fixture_a() {
        let a = fixture_a();
        assert_eq!(fmt(&a, mingen_oracle(&a, el(&a, "1"), 20).unwrap().sets()), vec!["4"]);
        // The figure caption omits 12, but 12 -> 3 belongs to the base.
        assert_eq!(
            fmt(&a, mingen_oracle(&a, el(&a, "3"), 20).unwrap().sets()),
            vec!["1 2", "1 5", "2 4", "2 5", "4 5"]
        );
        assert!(mingen_oracle(&a, el(&a, "4"), 20).unwrap().is_empty());
    }

    #[test]
    fn convex_geometry_oracle() {
        assert!(is_convex_geometry_oracle(&fixture_a(), 20).unwrap());
        assert!(is_convex_geometry_oracle(&acyclic_pair_second(), 20).unwrap());
        assert_eq!(
            all_closed_sets_oracle(&acyclic_pair_first(), 20).unwrap(),
            all_closed_sets_oracle(&acyclic_pair_second(), 20).unwrap()
        );
        let g = GroundSet::new(["a", "b"]).unwrap();
        let imp = Implication::new(g.empty_set(), g.parse_set("a").unwrap()).unwrap();
        let bad = ImplicationalBase::with_empty_premises(g, vec![imp]).unwrap();
        assert!(!is_convex_geometry_oracle(&bad, 20).unwrap());
        assert_eq!(irr_oracle(&bad, 20).unwrap_err(), Error::NotConvexGeometry);
    }

    #[test]
    fn duality_on_random_bases() {
        for seed in 0..40 {
            let ib = random_acyclic(8, 8, 3, 2, seed);
            let g = ib.ground().clone();
            let irr = irr_oracle(&ib, 20).unwrap();
            for x in g.elements() {
                let mingen = mingen_oracle(&ib, x, 20).unwrap();
                let edges: Vec<ElementSet> = irr.of(x).iter().map(|m| m.with(x).complement()).collect();
                let h = Hypergraph::new(g.clone(), g.full_set(), edges).unwrap();
                let mhs = minimal_transversals_bounded(&h, h.edges().len());
                assert_eq!(mhs, mingen, "seed {seed}, x {x}");

                let mut edges: Vec<ElementSet> = mingen.sets().to_vec();
                edges.push(ElementSet::singleton(g.len(), x));
                let h = Hypergraph::new(g.clone(), g.full_set(), edges).unwrap();
                let mut expected = irr.of(x).to_vec();
                expected.sort();
                assert_eq!(maximal_independent_sets_small(&h, 22).unwrap().into_sets(), expected);
            }
        }
    }

    #[test]
    fn extreme_points_are_hereditary() {
        let a = fixture_a();
        let closed = all_closed_sets_oracle(&a, 20).unwrap();
        for c in closed.iter() {
            let ex = extreme_points(&a, c);
            for d in closed.iter().filter(|d| c.is_subset(d)) {
                assert!(extreme_points(&a, d).intersection(c).is_subset(&ex));
            }
        }
    }

    fn arb_base() -> impl Strategy<Value = ImplicationalBase> {
        (2usize..=9, 0usize..10, any::<u64>()).prop_map(|(n, m, seed)| random_acyclic(n, m, 3, 3, seed))
    }

    proptest! {
        #[test]
        fn both_backings_agree(ib in arb_base(), mask in any::<u64>()) {
            let n = ib.ground().len();
            let y = ElementSet::from_mask(n, mask & ((1 << n) - 1));
            let irr = irr_oracle(&ib, 20).unwrap();
            let fam = FamilyClosure::from_attached(&irr);
            prop_assert_eq!(fam.close(&y), closure_fc(&ib, &y));
        }

        #[test]
        fn closure_axioms(ib in arb_base(), m1 in any::<u64>(), m2 in any::<u64>()) {
            let n = ib.ground().len();
            let full = (1u64 << n) - 1;
            let a = ElementSet::from_mask(n, m1 & full);
            let b = a.union(&ElementSet::from_mask(n, m2 & full));
            let fam = FamilyClosure::from_attached(&irr_oracle(&ib, 20).unwrap());
            for op in [&ib as &dyn ClosureOperator, &fam] {
                let ca = op.close(&a);
                prop_assert!(a.is_subset(&ca));
                prop_assert!(ca.is_subset(&op.close(&b)));
                prop_assert_eq!(op.close(&ca), ca);
            }
        }

        #[test]
        fn expansion_round_trip_preserves_closed_sets(ib in arb_base(), mask in any::<u64>()) {
            let n = ib.ground().len();
            let y = ElementSet::from_mask(n, mask & ((1 << n) - 1));
            let round = aggregation(&unit_expansion(&ib));
            prop_assert_eq!(is_closed(&round, &y), is_closed(&ib, &y));
            prop_assert_eq!(normalize(&normalize(&ib)), normalize(&ib));
        }
    }
}
