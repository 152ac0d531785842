//! Enumeration of irreducible closed sets of acyclic bases.
//!
//! Two per-element engines find `irr(x)` given `irr(y)` for the ancestors
//! `y` of `x`: one walks the minimal transversals of the premises of `x`
//! (cheap when few implications conclude `x`), the other traverses a
//! strongly connected solution graph (cheap when ancestors occur in few
//! premises). The driver runs them in topological order.

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;

use crate::acyclic::{ancestors, implication_graph, is_acyclic_ib, topological_order};
use crate::base::{degree_profile, normalize, ImplicationalBase};
use crate::closure::{closure_fc, default_oracle_cap, irr_oracle, is_attached};
use crate::error::{Error, Result};
use crate::hypergraph::{sperner_reduce, transversals_bounded, Hypergraph};
use crate::set::{AttachedFamily, Element, ElementSet};

/// Receives `(x, M)` pairs with `M ∈ irr(x)`; returning `Break` stops the run.
pub trait EmitSink {
    fn emit(&mut self, x: Element, m: &ElementSet) -> ControlFlow<()>;
}

impl<F: FnMut(Element, &ElementSet) -> ControlFlow<()>> EmitSink for F {
    fn emit(&mut self, x: Element, m: &ElementSet) -> ControlFlow<()> {
        self(x, m)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub emitted: usize,
    pub stopped: bool,
    /// Neighbour candidates rejected because their base already implied the target.
    pub discarded: usize,
}

impl EnumStats {
    fn absorb(&mut self, other: EnumStats) {
        self.emitted += other.emitted;
        self.stopped |= other.stopped;
        self.discarded += other.discarded;
    }
}

/// The families `irr(y)` known so far, indexed by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AncestorSolutions {
    families: Vec<Option<Vec<ElementSet>>>,
}

impl AncestorSolutions {
    pub fn new(n: usize) -> Self {
        AncestorSolutions {
            families: vec![None; n],
        }
    }

    pub fn from_attached(irr: &AttachedFamily) -> Self {
        AncestorSolutions {
            families: irr.ground().elements().map(|y| Some(irr.of(y).to_vec())).collect(),
        }
    }

    /// Keeps only the families of the members of `keep`.
    pub fn restricted(irr: &AttachedFamily, keep: &ElementSet) -> Self {
        AncestorSolutions {
            families: irr
                .ground()
                .elements()
                .map(|y| keep.contains(y).then(|| irr.of(y).to_vec()))
                .collect(),
        }
    }

    pub fn insert(&mut self, y: Element, family: Vec<ElementSet>) {
        self.families[y] = Some(family);
    }

    pub fn release(&mut self, y: Element) {
        self.families[y] = None;
    }

    pub fn contains(&self, y: Element) -> bool {
        self.families[y].is_some()
    }

    pub fn get(&self, y: Element) -> Result<&[ElementSet]> {
        self.families[y].as_deref().ok_or(Error::MissingAncestor(y))
    }

    pub fn stored(&self) -> usize {
        self.families.iter().flatten().count()
    }
}

/// Hypergraph of the premises of implications concluding `x`.
pub fn premises_of(ib: &ImplicationalBase, x: Element) -> Hypergraph {
    let mut seen = HashSet::new();
    let edges: Vec<ElementSet> = ib
        .implications()
        .iter()
        .filter(|imp| imp.conclusion().contains(x))
        .map(|imp| imp.premise().clone())
        .filter(|a| seen.insert(a.clone()))
        .collect();
    Hypergraph::from_edges(ib.ground().clone(), edges).expect("premises live on the ground set")
}

/// Cartesian product of `irr(t)` over `t ∈ T`, last element varying fastest.
pub struct Selections<'a> {
    families: Vec<&'a [ElementSet]>,
    index: Vec<usize>,
    done: bool,
}

impl<'a> Iterator for Selections<'a> {
    type Item = Vec<&'a ElementSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = self.families.iter().zip(&self.index).map(|(f, &i)| &f[i]).collect();
        self.done = true;
        for k in (0..self.index.len()).rev() {
            self.index[k] += 1;
            if self.index[k] < self.families[k].len() {
                self.done = false;
                break;
            }
            self.index[k] = 0;
        }
        Some(out)
    }
}

pub fn irreducible_selections<'a>(t: &ElementSet, anc: &'a AncestorSolutions) -> Result<Selections<'a>> {
    let families = t.iter().map(|y| anc.get(y)).collect::<Result<Vec<_>>>()?;
    let done = families.iter().any(|f| f.is_empty());
    Ok(Selections {
        index: vec![0; families.len()],
        families,
        done,
    })
}

fn meet(n: usize, selection: &[&ElementSet]) -> ElementSet {
    let mut c = ElementSet::full(n);
    for m in selection {
        c.intersect_with(m);
    }
    c
}

fn require_acyclic(ib: &ImplicationalBase) -> Result<()> {
    if is_acyclic_ib(ib) {
        Ok(())
    } else {
        Err(Error::CyclicBase)
    }
}

/// Emits `irr(x)` from the minimal transversals `T` of the premises of `x`:
/// every member is `(⋂S) ∖ {x}` for a selection `S` over `T`.
pub fn acs_conclusion(
    ib: &ImplicationalBase,
    x: Element,
    anc: &AncestorSolutions,
    out: &mut impl EmitSink,
) -> Result<EnumStats> {
    require_acyclic(ib)?;
    acs_conclusion_unchecked(ib, x, anc, out)
}

fn acs_conclusion_unchecked(
    ib: &ImplicationalBase,
    x: Element,
    anc: &AncestorSolutions,
    out: &mut impl EmitSink,
) -> Result<EnumStats> {
    let n = ib.ground().len();
    let mut stats = EnumStats::default();
    let h = sperner_reduce(&premises_of(ib, x));
    if h.edges().is_empty() {
        stats.emitted = 1;
        stats.stopped = out.emit(x, &ElementSet::full(n).without(x)).is_break();
        return Ok(stats);
    }
    let mut seen = HashSet::new();
    for t in transversals_bounded(&h, h.edges().len()) {
        for s in irreducible_selections(&t, anc)? {
            let candidate = meet(n, &s).without(x);
            if seen.contains(&candidate) || !is_attached(ib, &candidate, x) {
                continue;
            }
            stats.emitted += 1;
            if out.emit(x, &candidate).is_break() {
                stats.stopped = true;
                return Ok(stats);
            }
            seen.insert(candidate);
        }
    }
    Ok(stats)
}

/// `GC_x(y)`: grows `φ(y)` by every element whose addition keeps `x` out of the closure.
pub fn greedy_completion(ib: &ImplicationalBase, x: Element, y: &ElementSet) -> Result<ElementSet> {
    let mut c = closure_fc(ib, y);
    if c.contains(x) {
        return Err(Error::PreconditionViolated(
            "completion start already implies the target".into(),
        ));
    }
    loop {
        let mut grew = false;
        for z in ib.ground().elements() {
            if c.contains(z) || z == x {
                continue;
            }
            let next = closure_fc(ib, &c.with(z));
            if !next.contains(x) {
                c = next;
                grew = true;
            }
        }
        if !grew {
            return Ok(c);
        }
    }
}

/// Premises `A` with `A ∖ M = {y}` whose conclusion leaves `M`.
pub fn triggered_premises(ib: &ImplicationalBase, m: &ElementSet, y: Element) -> Hypergraph {
    let mut seen = HashSet::new();
    let edges: Vec<ElementSet> = ib
        .implications()
        .iter()
        .filter(|imp| {
            let residue = imp.premise().difference(m);
            residue.len() == 1 && residue.contains(y) && !imp.conclusion().is_subset(m)
        })
        .map(|imp| imp.premise().clone())
        .filter(|a| seen.insert(a.clone()))
        .collect();
    Hypergraph::from_edges(ib.ground().clone(), edges).expect("premises live on the ground set")
}

/// Out-neighbours of `m ∈ irr(x)` in the solution graph, sorted canonically.
pub fn neighbors(
    ib: &ImplicationalBase,
    x: Element,
    m: &ElementSet,
    anc: &AncestorSolutions,
) -> Result<Vec<ElementSet>> {
    neighbors_counted(ib, x, m, anc).map(|(sets, _)| sets)
}

fn neighbors_counted(
    ib: &ImplicationalBase,
    x: Element,
    m: &ElementSet,
    anc: &AncestorSolutions,
) -> Result<(Vec<ElementSet>, usize)> {
    let g = ib.ground();
    let n = g.len();
    let mut found = HashSet::new();
    let mut discarded = 0;
    for y in g.elements() {
        if y == x || m.contains(y) || closure_fc(ib, &ElementSet::singleton(n, y)).contains(x) {
            continue;
        }
        let h = triggered_premises(ib, m, y);
        debug_assert!(!h.edges().is_empty(), "maximality of M forces a triggered premise");
        // Transversals of {A ∖ {y}}; an empty residue means y alone fires the implication.
        let reduced: Vec<ElementSet> = h.edges().iter().map(|a| a.without(y)).collect();
        if reduced.iter().any(ElementSet::is_empty) {
            continue;
        }
        let reduced = Hypergraph::from_edges(g.clone(), reduced).expect("same ground");
        let reduced = sperner_reduce(&reduced);
        for t in transversals_bounded(&reduced, reduced.edges().len()) {
            for s in irreducible_selections(&t, anc)? {
                let mut base = meet(n, &s);
                base.intersect_with(m);
                base.insert(y);
                if closure_fc(ib, &base).contains(x) {
                    log::warn!("discarded neighbour candidate of {} via {}", g.name(x), g.name(y));
                    discarded += 1;
                    continue;
                }
                found.insert(greedy_completion(ib, x, &base)?);
            }
        }
    }
    let mut sets: Vec<ElementSet> = found.into_iter().collect();
    sets.sort();
    Ok((sets, discarded))
}

/// Breadth-first traversal of the solution graph from `GC_x(∅)`.
pub fn acs_premise(
    ib: &ImplicationalBase,
    x: Element,
    anc: &AncestorSolutions,
    out: &mut impl EmitSink,
) -> Result<EnumStats> {
    require_acyclic(ib)?;
    acs_premise_unchecked(ib, x, anc, out)
}

fn acs_premise_unchecked(
    ib: &ImplicationalBase,
    x: Element,
    anc: &AncestorSolutions,
    out: &mut impl EmitSink,
) -> Result<EnumStats> {
    let mut stats = EnumStats::default();
    let start = greedy_completion(ib, x, &ib.ground().empty_set())?;
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    stats.emitted += 1;
    if out.emit(x, &start).is_break() {
        stats.stopped = true;
        return Ok(stats);
    }
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(m) = queue.pop_front() {
        let (next, discarded) = neighbors_counted(ib, x, &m, anc)?;
        stats.discarded += discarded;
        for m2 in next {
            if seen.contains(&m2) {
                continue;
            }
            stats.emitted += 1;
            if out.emit(x, &m2).is_break() {
                stats.stopped = true;
                return Ok(stats);
            }
            seen.insert(m2.clone());
            queue.push_back(m2);
        }
    }
    Ok(stats)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Algorithm {
    #[default]
    Auto,
    Conclusion,
    Premise,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub algorithm: Algorithm,
    /// Degree bound used by `Auto` for both conclusion- and premise-degree.
    pub bound: usize,
    pub oracle_cap: usize,
}

pub const DEFAULT_DEGREE_BOUND: usize = 6;

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            algorithm: Algorithm::Auto,
            bound: DEFAULT_DEGREE_BOUND,
            oracle_cap: default_oracle_cap(),
        }
    }
}

impl EnumConfig {
    pub fn with_algorithm(algorithm: Algorithm) -> Self {
        EnumConfig {
            algorithm,
            ..Self::default()
        }
    }
}

/// Emits every irreducible closed set of the system exactly once, element
/// by element in topological order. Ancestor families are kept only until
/// their last descendant has been processed.
pub fn ics_enum(ib: &ImplicationalBase, config: EnumConfig, out: &mut impl EmitSink) -> Result<EnumStats> {
    if ib.has_empty_premise() {
        return Err(Error::PreconditionViolated("base has an empty premise".into()));
    }
    let ib = normalize(ib);
    if config.algorithm == Algorithm::Oracle {
        return ics_oracle(&ib, config.oracle_cap, out);
    }
    let graph = implication_graph(&ib);
    let order = topological_order(&graph).map_err(|_| Error::CyclicBase)?;
    let n = ib.ground().len();
    let anc_sets: Vec<ElementSet> = (0..n).map(|x| graph.reaching(x)).collect();
    let mut position = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let mut last_use: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        for y in anc_sets[x].iter() {
            last_use[y] = last_use[y].max(Some(position[x]));
        }
    }
    let profile = degree_profile(&ib);
    let mut store = AncestorSolutions::new(n);
    let mut stats = EnumStats::default();
    for (i, &x) in order.iter().enumerate() {
        let premise_mode = match config.algorithm {
            Algorithm::Conclusion => false,
            Algorithm::Premise => true,
            _ => {
                let cdeg = profile.of(x).cdeg;
                let pdeg = anc_sets[x].iter().map(|y| profile.of(y).pdeg).max().unwrap_or(0);
                if cdeg <= config.bound {
                    false
                } else if pdeg <= config.bound {
                    true
                } else {
                    return Err(Error::BoundExceeded {
                        element: x,
                        degree: cdeg.min(pdeg),
                        bound: config.bound,
                    });
                }
            }
        };
        let keep = last_use[x].is_some();
        let mut family = Vec::new();
        let mut sink = |e: Element, m: &ElementSet| {
            if keep {
                family.push(m.clone());
            }
            out.emit(e, m)
        };
        let run = if premise_mode {
            acs_premise_unchecked(&ib, x, &store, &mut sink)?
        } else {
            acs_conclusion_unchecked(&ib, x, &store, &mut sink)?
        };
        stats.absorb(run);
        if stats.stopped {
            return Ok(stats);
        }
        if keep {
            store.insert(x, family);
        }
        for y in anc_sets[x].iter() {
            if last_use[y] == Some(i) {
                store.release(y);
            }
        }
    }
    Ok(stats)
}

fn ics_oracle(ib: &ImplicationalBase, cap: usize, out: &mut impl EmitSink) -> Result<EnumStats> {
    let irr = irr_oracle(ib, cap)?;
    let order = topological_order(&implication_graph(ib)).unwrap_or_else(|_| ib.ground().elements().collect());
    let mut stats = EnumStats::default();
    for x in order {
        for m in irr.of(x) {
            stats.emitted += 1;
            if out.emit(x, m).is_break() {
                stats.stopped = true;
                return Ok(stats);
            }
        }
    }
    Ok(stats)
}

/// Runs [`ics_enum`] and collects the result, keeping discovery order per element.
pub fn enumerate_irr(ib: &ImplicationalBase, config: EnumConfig) -> Result<AttachedFamily> {
    let mut family = AttachedFamily::new(ib.ground().clone());
    ics_enum(ib, config, &mut |x: Element, m: &ElementSet| {
        family.push(x, m.clone());
        ControlFlow::Continue(())
    })?;
    Ok(family)
}

/// Irreducible sets of `x` alone, from its ancestors' oracle families.
pub fn irr_of_element(
    ib: &ImplicationalBase,
    x: Element,
    anc: &AncestorSolutions,
    algorithm: Algorithm,
) -> Result<Vec<ElementSet>> {
    let mut sets = Vec::new();
    let mut sink = |_: Element, m: &ElementSet| {
        sets.push(m.clone());
        ControlFlow::Continue(())
    };
    match algorithm {
        Algorithm::Premise => acs_premise(ib, x, anc, &mut sink)?,
        _ => acs_conclusion(ib, x, anc, &mut sink)?,
    };
    Ok(sets)
}

/// Ancestors of `x` in an acyclic base, as used to restrict ancestor solutions.
pub fn required_ancestors(ib: &ImplicationalBase, x: Element) -> Result<ElementSet> {
    ancestors(ib, x).map_err(|_| Error::CyclicBase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture_a;
    use crate::instances::{gen_chain, gen_exponential, random_acyclic};

    fn set(ib: &ImplicationalBase, s: &str) -> ElementSet {
        ib.ground().parse_set(s).unwrap()
    }

    fn el(ib: &ImplicationalBase, s: &str) -> Element {
        ib.ground().element(s).unwrap()
    }

    fn fmt(ib: &ImplicationalBase, sets: &[ElementSet]) -> Vec<String> {
        sets.iter().map(|s| ib.ground().format_set(s)).collect()
    }

    fn sorted(mut v: Vec<String>) -> Vec<String> {
        v.sort();
        v
    }

    fn oracle_anc(ib: &ImplicationalBase) -> AncestorSolutions {
        AncestorSolutions::from_attached(&irr_oracle(ib, 20).unwrap())
    }

    #[test]
    fn premises_of_fixture_a() {
        let a = fixture_a();
        let h = premises_of(&a, el(&a, "3"));
        assert_eq!(fmt(&a, h.edges()), vec!["2 5", "1 2", "1 5"]);
        assert_eq!(*h.vertices(), set(&a, "1 2 5"));
        assert!(premises_of(&a, el(&a, "4")).edges().is_empty());
        assert_eq!(fmt(&a, premises_of(&a, el(&a, "2")).edges()), vec!["1 5"]);
    }

    #[test]
    fn selections() {
        let a = fixture_a();
        let anc = oracle_anc(&a);
        let got: Vec<Vec<String>> = irreducible_selections(&set(&a, "1 2"), &anc)
            .unwrap()
            .map(|s| s.into_iter().map(|m| a.ground().format_set(m)).collect())
            .collect();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&vec!["2 3 5".to_string(), "3 5".to_string()]));
        assert!(got.contains(&vec!["2 3 5".to_string(), "1 3 4".to_string()]));
        assert_eq!(irreducible_selections(&set(&a, "-"), &anc).unwrap().count(), 1);
        assert_eq!(irreducible_selections(&set(&a, "4"), &anc).unwrap().count(), 1);
        let empty = AncestorSolutions::new(5);
        assert_eq!(irreducible_selections(&set(&a, "1"), &empty).err(), Some(Error::MissingAncestor(0)));
        for s in irreducible_selections(&set(&a, "1 2"), &anc).unwrap() {
            let c = meet(5, &s);
            assert!(crate::closure::is_closed(&a, &c));
            assert!(c.is_disjoint(&set(&a, "1 2")));
        }
    }

    fn collect_conclusion(ib: &ImplicationalBase, x: Element) -> Vec<String> {
        let sets = irr_of_element(ib, x, &oracle_anc(ib), Algorithm::Conclusion).unwrap();
        fmt(ib, &sets)
    }

    #[test]
    fn conclusion_engine() {
        let a = fixture_a();
        assert_eq!(sorted(collect_conclusion(&a, el(&a, "3"))), vec!["1 4", "2", "5"]);
        assert_eq!(collect_conclusion(&a, el(&a, "4")), vec!["1 2 3 5"]);
        let c = gen_chain(2);
        assert_eq!(sorted(collect_conclusion(&c, el(&c, "x"))), vec!["a1 a2", "a1 b2", "b1 b2"]);
        let empty = AncestorSolutions::new(5);
        let mut sink = |_: Element, _: &ElementSet| ControlFlow::Continue(());
        assert_eq!(acs_conclusion(&a, el(&a, "3"), &empty, &mut sink), Err(Error::MissingAncestor(0)));
    }

    #[test]
    fn greedy_completions() {
        let a = fixture_a();
        let three = el(&a, "3");
        assert_eq!(greedy_completion(&a, three, &set(&a, "-")).unwrap(), set(&a, "1 4"));
        assert_eq!(greedy_completion(&a, three, &set(&a, "2")).unwrap(), set(&a, "2"));
        assert_eq!(greedy_completion(&a, three, &set(&a, "5")).unwrap(), set(&a, "5"));
        assert!(greedy_completion(&a, three, &set(&a, "1 2")).is_err());
    }

    #[test]
    fn triggered() {
        let a = fixture_a();
        let edges = |m: &str, y: &str| fmt(&a, triggered_premises(&a, &set(&a, m), el(&a, y)).edges());
        assert_eq!(edges("1 4", "2"), vec!["1 2"]);
        assert_eq!(edges("1 4", "5"), vec!["1 5"]);
        assert_eq!(edges("2", "4"), vec!["4"]);
    }

    #[test]
    fn neighbours_on_fixture_a() {
        let a = fixture_a();
        let anc = oracle_anc(&a);
        let three = el(&a, "3");
        assert_eq!(fmt(&a, &neighbors(&a, three, &set(&a, "1 4"), &anc).unwrap()), vec!["2", "5"]);
        assert_eq!(fmt(&a, &neighbors(&a, three, &set(&a, "2"), &anc).unwrap()), vec!["1 4", "5"]);
    }

    #[test]
    fn premise_engine() {
        let a = fixture_a();
        let got = irr_of_element(&a, el(&a, "3"), &oracle_anc(&a), Algorithm::Premise).unwrap();
        assert_eq!(fmt(&a, &got[..1]), vec!["1 4"]);
        assert_eq!(sorted(fmt(&a, &got)), vec!["1 4", "2", "5"]);
        let c = gen_chain(3);
        let got = irr_of_element(&c, el(&c, "x"), &oracle_anc(&c), Algorithm::Premise).unwrap();
        assert_eq!(sorted(fmt(&c, &got)), vec!["a1 a2 a3", "a1 a2 b3", "a1 b2 b3", "b1 b2 b3"]);
        let four = irr_of_element(&a, el(&a, "4"), &oracle_anc(&a), Algorithm::Premise).unwrap();
        assert_eq!(fmt(&a, &four), vec!["1 2 3 5"]);
    }

    #[test]
    fn driver_counts() {
        let a = fixture_a();
        for algo in [Algorithm::Auto, Algorithm::Conclusion, Algorithm::Premise, Algorithm::Oracle] {
            let irr = enumerate_irr(&a, EnumConfig::with_algorithm(algo)).unwrap();
            assert_eq!(irr.canonical(), irr_oracle(&a, 20).unwrap(), "{algo:?}");
        }
        let exp = enumerate_irr(&gen_exponential(10), EnumConfig::default()).unwrap();
        assert_eq!(exp.total(), 1044);
        let chain = enumerate_irr(&gen_chain(12), EnumConfig::default()).unwrap();
        assert_eq!(chain.total(), 37);
    }

    #[test]
    fn driver_errors_and_stop() {
        let cyclic = crate::fixtures::acyclic_pair_second();
        let mut sink = |_: Element, _: &ElementSet| ControlFlow::Continue(());
        assert_eq!(ics_enum(&cyclic, EnumConfig::default(), &mut sink), Err(Error::CyclicBase));
        assert!(ics_enum(&cyclic, EnumConfig::with_algorithm(Algorithm::Oracle), &mut sink).is_ok());

        let config = EnumConfig {
            bound: 1,
            ..EnumConfig::default()
        };
        assert!(matches!(ics_enum(&fixture_a(), config, &mut sink), Err(Error::BoundExceeded { .. })));

        let mut count = 0;
        let mut stop = |_: Element, _: &ElementSet| {
            count += 1;
            if count == 3 { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
        };
        let stats = ics_enum(&fixture_a(), EnumConfig::default(), &mut stop).unwrap();
        assert!(stats.stopped);
        assert_eq!(stats.emitted, 3);
    }

    #[test]
    fn engines_match_oracle_on_random_bases() {
        for seed in 0..40 {
            let ib = random_acyclic(9, 10, 3, 3, seed);
            let expected = irr_oracle(&ib, 20).unwrap();
            for algo in [Algorithm::Conclusion, Algorithm::Premise] {
                let got = enumerate_irr(&ib, EnumConfig::with_algorithm(algo)).unwrap();
                assert_eq!(got.total(), expected.total(), "seed {seed} {algo:?}");
                assert_eq!(got.canonical(), expected, "seed {seed} {algo:?}");
            }
        }
    }
}
