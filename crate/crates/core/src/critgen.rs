//! Critical generators: the membership test, the descent to a critical
//! generator, and extraction of the critical base from an acyclic base.

use std::collections::HashSet;

use crate::acyclic::{implication_graph, is_acyclic_ib, topological_order};
use crate::base::{normalize, unit_expansion, Implication, ImplicationalBase};
use crate::closure::{extreme_points, is_closed, mingen_oracle, ClosureOperator};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::set::{Element, ElementSet, SetFamily};

/// Minimal generator `a` of `x` with `φ(a) ∖ {e, x}` closed for every `e ∈ a`.
pub fn is_critical(op: &impl ClosureOperator, x: Element, a: &ElementSet) -> bool {
    if a.contains(x) {
        return false;
    }
    let closure = op.close(a);
    if !closure.contains(x) {
        return false;
    }
    if a.iter().any(|e| op.close(&a.without(e)).contains(x)) {
        return false;
    }
    a.iter()
        .all(|e| is_closed(op, &closure.without(e).without(x)))
}

/// Descends from `φ(y)` to a critical generator of `x`, removing the
/// smallest-index extreme point whose removal keeps `x` non-extreme.
pub fn critical_descent(op: &impl ClosureOperator, x: Element, y: &ElementSet) -> Result<ElementSet> {
    if y.contains(x) {
        return Err(Error::PreconditionViolated("descent start contains the target".into()));
    }
    let mut c = op.close(y);
    if !c.contains(x) {
        return Err(Error::PreconditionViolated("descent start does not generate the target".into()));
    }
    'descend: loop {
        let ex = extreme_points(op, &c);
        for e in ex.iter().filter(|&e| e != x) {
            let smaller = c.without(e);
            if !extreme_points(op, &smaller).contains(x) {
                c = smaller;
                continue 'descend;
            }
        }
        return Ok(ex);
    }
}

/// Critical generators of `x` by filtering the minimal-generator oracle.
pub fn critgen_oracle(op: &impl ClosureOperator, x: Element, cap: usize) -> Result<SetFamily> {
    let mut fam = mingen_oracle(op, x, cap)?;
    let kept: Vec<ElementSet> = fam.iter().filter(|a| is_critical(op, x, a)).cloned().collect();
    fam = SetFamily::from_sets(fam.ground().clone(), kept)?;
    Ok(fam.canonical())
}

pub fn critical_base_from_ib(ib: &ImplicationalBase) -> Result<ImplicationalBase> {
    critical_base_from_ib_with(ib, Execution::default())
}

/// One descent per unit implication of the base, deduplicated and put in
/// canonical order.
pub fn critical_base_from_ib_with(ib: &ImplicationalBase, exec: Execution) -> Result<ImplicationalBase> {
    if ib.has_empty_premise() {
        return Err(Error::PreconditionViolated("base has an empty premise".into()));
    }
    let ib = normalize(ib);
    if !is_acyclic_ib(&ib) {
        return Err(Error::CyclicBase);
    }
    let units = unit_expansion(&ib);
    let found = exec.map(units.implications(), |imp| {
        let b = imp.conclusion().first().expect("unit conclusion");
        critical_descent(&ib, b, imp.premise()).map(|a| (b, a))
    });
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for r in found {
        let pair = r?;
        if seen.insert(pair.clone()) {
            pairs.push(pair);
        }
    }
    Ok(canonical_unit_base(ib.ground().clone(), pairs))
}

/// Unit base from `(conclusion, premise)` pairs, ordered by the conclusion's
/// position in the base's own topological order, then by premise.
pub fn canonical_unit_base(
    ground: std::sync::Arc<crate::set::GroundSet>,
    pairs: Vec<(Element, ElementSet)>,
) -> ImplicationalBase {
    let imps: Vec<Implication> = pairs
        .into_iter()
        .map(|(b, a)| Implication::unit(a, b).expect("generator avoids its element"))
        .collect();
    let base = ImplicationalBase::new(ground.clone(), imps).expect("non-empty premises");
    let order = topological_order(&implication_graph(&base))
        .unwrap_or_else(|_| ground.elements().collect());
    let mut rank = vec![0; ground.len()];
    for (i, &e) in order.iter().enumerate() {
        rank[e] = i;
    }
    let mut imps = base.implications().to_vec();
    imps.sort_by(|p, q| {
        let (bp, bq) = (p.conclusion().first().unwrap(), q.conclusion().first().unwrap());
        rank[bp].cmp(&rank[bq]).then_with(|| p.premise().cmp(q.premise()))
    });
    ImplicationalBase::new(ground, imps).expect("non-empty premises")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{aggregation, degree_profile};
    use crate::closure::all_closed_sets_oracle;
    use crate::fixtures::fixture_a;
    use crate::instances::{gen_chain, random_acyclic};

    fn set(ib: &ImplicationalBase, s: &str) -> ElementSet {
        ib.ground().parse_set(s).unwrap()
    }

    fn el(ib: &ImplicationalBase, s: &str) -> Element {
        ib.ground().element(s).unwrap()
    }

    fn lines(ib: &ImplicationalBase) -> Vec<String> {
        let g = ib.ground();
        ib.implications()
            .iter()
            .map(|i| format!("{} -> {}", g.format_set(i.premise()), g.format_set(i.conclusion())))
            .collect()
    }

    #[test]
    fn criticality_on_fixture_a() {
        let a = fixture_a();
        let three = el(&a, "3");
        assert!(is_critical(&a, three, &set(&a, "2 5")));
        // φ(12) = 123, and 123 minus {1,3} or {2,3} leaves a closed singleton.
        assert!(is_critical(&a, three, &set(&a, "1 2")));
        // 15 generates 3 but φ(15) minus {1,3} is 25, which is not closed.
        assert!(!is_critical(&a, three, &set(&a, "1 5")));
        assert!(!is_critical(&a, three, &set(&a, "1 2 5")));
        assert!(!is_critical(&a, three, &set(&a, "4")));
    }

    #[test]
    fn critgen_families_of_fixture_a() {
        let a = fixture_a();
        let fam = |x| {
            critgen_oracle(&a, el(&a, x), 20)
                .unwrap()
                .iter()
                .map(|s| a.ground().format_set(s))
                .collect::<Vec<_>>()
        };
        assert_eq!(fam("1"), vec!["4"]);
        assert_eq!(fam("2"), vec!["1 5"]);
        assert_eq!(fam("3"), vec!["1 2", "2 5"]);
        assert!(fam("4").is_empty());
        assert!(fam("5").is_empty());
    }

    #[test]
    fn descent_examples() {
        let a = fixture_a();
        assert_eq!(critical_descent(&a, el(&a, "3"), &set(&a, "2 5")).unwrap(), set(&a, "2 5"));
        assert_eq!(critical_descent(&a, el(&a, "1"), &set(&a, "4")).unwrap(), set(&a, "4"));
        assert_eq!(critical_descent(&a, el(&a, "2"), &set(&a, "1 5")).unwrap(), set(&a, "1 5"));
        // 15 is not critical for 3; dropping 1 from 1235 leaves 3 generated by 25.
        assert_eq!(critical_descent(&a, el(&a, "3"), &set(&a, "1 5")).unwrap(), set(&a, "2 5"));
        assert!(matches!(
            critical_descent(&a, el(&a, "3"), &set(&a, "4")),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            critical_descent(&a, el(&a, "3"), &set(&a, "3")),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn critical_base_of_fixture_a() {
        let cb = critical_base_from_ib(&fixture_a()).unwrap();
        assert_eq!(lines(&cb), vec!["4 -> 1", "1 5 -> 2", "1 2 -> 3", "2 5 -> 3"]);
        let seq = critical_base_from_ib_with(&fixture_a(), Execution::Sequential).unwrap();
        assert_eq!(seq, cb);
    }

    #[test]
    fn critical_base_of_chain_and_empty() {
        let cb = critical_base_from_ib(&gen_chain(2)).unwrap();
        let mut got = lines(&cb);
        got.sort();
        assert_eq!(got, vec!["a1 b1 -> x", "a2 b2 -> x", "b1 -> b2"]);
        let empty = ImplicationalBase::empty(fixture_a().ground().clone());
        assert!(critical_base_from_ib(&empty).unwrap().is_empty());
        assert_eq!(
            critical_base_from_ib(&crate::fixtures::acyclic_pair_second()),
            Err(Error::CyclicBase)
        );
    }

    #[test]
    fn critical_base_properties_on_random_bases() {
        for seed in 0..60 {
            let ib = random_acyclic(8, 10, 3, 3, seed);
            let cb = critical_base_from_ib(&ib).unwrap();
            assert_eq!(
                all_closed_sets_oracle(&cb, 20).unwrap(),
                all_closed_sets_oracle(&ib, 20).unwrap(),
                "seed {seed}"
            );
            assert!(cb.len() <= unit_expansion(&normalize(&ib)).len());
            for imp in cb.implications() {
                assert!(is_critical(&ib, imp.conclusion().first().unwrap(), imp.premise()));
            }
            let (p, q) = (degree_profile(&aggregation(&cb)), degree_profile(&aggregation(&ib)));
            for (d, e) in p.per_element.iter().zip(&q.per_element) {
                assert!(d.pdeg <= e.pdeg && d.cdeg <= e.cdeg && d.deg <= e.deg, "seed {seed}");
            }
            // Every critical generator is found.
            for x in ib.ground().elements() {
                let expected = critgen_oracle(&ib, x, 20).unwrap();
                let mut got: Vec<ElementSet> = cb
                    .implications()
                    .iter()
                    .filter(|i| i.conclusion().contains(x))
                    .map(|i| i.premise().clone())
                    .collect();
                got.sort();
                assert_eq!(got, expected.into_sets(), "seed {seed}, x {x}");
            }
        }
    }
}
