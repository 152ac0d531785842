//! Critical-base generation from the irreducible closed sets of an acyclic
//! convex geometry, by saturation.
//!
//! For each element `x` in topological order, a partial family `F` of
//! critical generators is tested for completeness by enumerating the
//! irreducible sets of `x` in the smaller system given by `F` and the
//! critical implications of the ancestors of `x`. The first enumerated set
//! that is not irreducible in the input system witnesses a missing
//! generator, which is then extracted and added to `F`.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::acyclic::{delta_graph, topological_order};
use crate::base::{aggregation, Implication, ImplicationalBase};
use crate::closure::{extreme_points, is_attached, ClosureOperator, FamilyClosure};
use crate::critgen::{canonical_unit_base, is_critical};
use crate::error::{Error, Result};
use crate::ics_enum::{acs_conclusion, acs_premise, Algorithm, AncestorSolutions, DEFAULT_DEGREE_BOUND};
use crate::set::{AttachedFamily, Element, ElementSet, GroundSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MibConfig {
    /// `Auto` uses the conclusion engine while `|F|` is within `bound`.
    pub algorithm: Algorithm,
    pub bound: usize,
}

impl Default for MibConfig {
    fn default() -> Self {
        MibConfig {
            algorithm: Algorithm::Auto,
            bound: DEFAULT_DEGREE_BOUND,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub counterexamples: usize,
    /// Extractions that needed the descent search rather than the greedy shrink.
    pub descent_fallbacks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Complete,
    Counterexample(ElementSet),
}

/// Input system plus the critical generators discovered so far.
#[derive(Debug, Clone)]
pub struct CritgenState {
    ground: Arc<GroundSet>,
    irr_all: AttachedFamily,
    op: FamilyClosure,
    owner: HashMap<ElementSet, Element>,
    critgen: Vec<Option<Vec<ElementSet>>>,
    order: Vec<Element>,
    critanc: Vec<ElementSet>,
    pub config: MibConfig,
    pub diagnostics: Diagnostics,
}

impl CritgenState {
    /// Validates the family: attachment, convexity and acyclicity.
    pub fn new(irr_all: AttachedFamily) -> Result<Self> {
        irr_all.validate()?;
        let ground = irr_all.ground().clone();
        let op = FamilyClosure::from_attached(&irr_all);
        if !op.close(&ground.empty_set()).is_empty() {
            return Err(Error::NotConvexGeometry);
        }
        for (x, m) in irr_all.pairs() {
            if !is_attached(&op, m, x) {
                return Err(Error::NotConvexGeometry);
            }
        }
        let delta = delta_graph(&irr_all);
        let order = topological_order(&delta).map_err(|_| Error::NotAcyclic)?;
        let critanc = ground.elements().map(|x| delta.reaching(x)).collect();
        let owner = irr_all.pairs().map(|(x, m)| (m.clone(), x)).collect();
        Ok(CritgenState {
            critgen: vec![None; ground.len()],
            ground,
            irr_all,
            op,
            owner,
            order,
            critanc,
            config: MibConfig::default(),
            diagnostics: Diagnostics::default(),
        })
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn irr_all(&self) -> &AttachedFamily {
        &self.irr_all
    }

    pub fn closure(&self) -> &FamilyClosure {
        &self.op
    }

    pub fn order(&self) -> &[Element] {
        &self.order
    }

    pub fn critanc(&self, x: Element) -> &ElementSet {
        &self.critanc[x]
    }

    pub fn critgen(&self, x: Element) -> Option<&[ElementSet]> {
        self.critgen[x].as_deref()
    }

    /// Records `critgen(x)`, e.g. from an oracle.
    pub fn set_critgen(&mut self, x: Element, family: Vec<ElementSet>) {
        self.critgen[x] = Some(family);
    }

    /// Generates `critgen(y)` for every ancestor of `x`, in topological order.
    pub fn finalize_ancestors(&mut self, x: Element) -> Result<()> {
        let pending: Vec<Element> = self
            .order
            .iter()
            .copied()
            .filter(|&y| self.critanc[x].contains(y) && self.critgen[y].is_none())
            .collect();
        for y in pending {
            let fam = cge_gen(self, y)?;
            self.critgen[y] = Some(fam);
        }
        Ok(())
    }
}

/// `Σ′*`: the critical implications of the ancestors of `x` and `A -> x` for
/// `A ∈ f`, aggregated.
pub fn build_reduced_base(state: &CritgenState, x: Element, f: &[ElementSet]) -> Result<ImplicationalBase> {
    let mut imps = Vec::new();
    for &y in state.order.iter().filter(|&&y| state.critanc[x].contains(y)) {
        let fam = state.critgen[y].as_ref().ok_or(Error::MissingAncestor(y))?;
        for a in fam {
            imps.push(Implication::unit(a.clone(), y)?);
        }
    }
    for a in f {
        imps.push(Implication::unit(a.clone(), x)?);
    }
    let base = ImplicationalBase::new(state.ground.clone(), imps)?;
    Ok(aggregation(&base))
}

/// Decides whether `f = critgen(x)`; otherwise returns an irreducible set of
/// `x` in the reduced system that is not one in the input system.
pub fn cge_dec(state: &mut CritgenState, x: Element, f: &[ElementSet]) -> Result<Decision> {
    let base = build_reduced_base(state, x, f)?;
    let anc = AncestorSolutions::restricted(&state.irr_all, &state.critanc[x]);
    let expected: HashSet<&ElementSet> = state.irr_all.of(x).iter().collect();
    let mut found: Option<Result<ElementSet>> = None;
    let mut sink = |_: Element, m: &ElementSet| {
        if expected.contains(m) {
            return ControlFlow::Continue(());
        }
        found = Some(match state.owner.get(m) {
            Some(&y) if y != x => Err(Error::InconsistentInput(format!(
                "set irreducible for {} emitted for {}",
                state.ground.name(y),
                state.ground.name(x)
            ))),
            _ => Ok(m.clone()),
        });
        ControlFlow::Break(())
    };
    let premise_mode = match state.config.algorithm {
        Algorithm::Premise => true,
        Algorithm::Conclusion => false,
        _ => f.len() > state.config.bound,
    };
    if premise_mode {
        acs_premise(&base, x, &anc, &mut sink)?;
    } else {
        acs_conclusion(&base, x, &anc, &mut sink)?;
    }
    match found {
        None => Ok(Decision::Complete),
        Some(Ok(m)) => {
            state.diagnostics.counterexamples += 1;
            Ok(Decision::Counterexample(m))
        }
        Some(Err(e)) => Err(e),
    }
}

/// A critical generator of `x` outside `f`, recovered from a reduced-closed
/// set `m` with `x ∈ φ(m)`.
pub fn extract_counterexample(
    op: &impl ClosureOperator,
    x: Element,
    m: &ElementSet,
    f: &[ElementSet],
) -> Result<ElementSet> {
    extract_layered(op, x, m, f).map(|(a, _)| a)
}

/// Returns the generator and whether the descent search was needed.
fn extract_layered(
    op: &impl ClosureOperator,
    x: Element,
    m: &ElementSet,
    f: &[ElementSet],
) -> Result<(ElementSet, bool)> {
    if m.contains(x) || !op.close(m).contains(x) {
        return Err(Error::PreconditionViolated("counterexample does not generate the target".into()));
    }
    let mut a0 = m.clone();
    for e in m.iter() {
        let smaller = a0.without(e);
        if op.close(&smaller).contains(x) {
            a0 = smaller;
        }
    }
    if is_critical(op, x, &a0) && !f.contains(&a0) {
        return Ok((a0, false));
    }
    log::info!("extraction for element {x} falls back to the descent search");
    let mut visited = HashSet::new();
    for start in [op.close(&a0), op.close(m)] {
        if let Some(a) = descent_search(op, x, m, f, start, &mut visited) {
            return Ok((a, true));
        }
    }
    Err(Error::ExtractionFailed(x))
}

/// Depth-first search over removals of extreme points that keep `x`
/// non-extreme, trying points outside `m` first. Leaves are critical.
fn descent_search(
    op: &impl ClosureOperator,
    x: Element,
    m: &ElementSet,
    f: &[ElementSet],
    c: ElementSet,
    visited: &mut HashSet<ElementSet>,
) -> Option<ElementSet> {
    if !visited.insert(c.clone()) {
        return None;
    }
    let ex = extreme_points(op, &c);
    let mut moves: Vec<Element> = ex.iter().filter(|&e| e != x).collect();
    moves.sort_by_key(|&e| (m.contains(e), e));
    let mut leaf = true;
    for e in moves {
        let smaller = c.without(e);
        if extreme_points(op, &smaller).contains(x) {
            continue;
        }
        leaf = false;
        if let Some(a) = descent_search(op, x, m, f, smaller, visited) {
            return Some(a);
        }
    }
    (leaf && !f.contains(&ex) && is_critical(op, x, &ex)).then_some(ex)
}

/// Saturation: grows `F` from the counterexamples until `cge_dec` reports completeness.
pub fn cge_gen(state: &mut CritgenState, x: Element) -> Result<Vec<ElementSet>> {
    let mut f: Vec<ElementSet> = Vec::new();
    loop {
        match cge_dec(state, x, &f)? {
            Decision::Complete => {
                f.sort();
                return Ok(f);
            }
            Decision::Counterexample(m) => {
                let (a, fallback) = extract_layered(&state.op, x, &m, &f)?;
                if fallback {
                    state.diagnostics.descent_fallbacks += 1;
                }
                if f.contains(&a) {
                    return Err(Error::ExtractionFailed(x));
                }
                f.push(a);
            }
        }
    }
}

pub fn cb_gen(irr_all: &AttachedFamily) -> Result<ImplicationalBase> {
    cb_gen_with(irr_all, MibConfig::default()).map(|(base, _)| base)
}

/// The critical base of the system, in the same order as
/// [`crate::critgen::critical_base_from_ib`].
pub fn cb_gen_with(irr_all: &AttachedFamily, config: MibConfig) -> Result<(ImplicationalBase, Diagnostics)> {
    let mut state = CritgenState::new(irr_all.clone())?;
    state.config = config;
    let order = state.order.clone();
    for x in order {
        let fam = cge_gen(&mut state, x)?;
        state.critgen[x] = Some(fam);
    }
    let pairs = state
        .order
        .iter()
        .flat_map(|&x| {
            state.critgen[x]
                .as_ref()
                .expect("finalized")
                .iter()
                .map(move |a| (x, a.clone()))
        })
        .collect();
    Ok((canonical_unit_base(state.ground.clone(), pairs), state.diagnostics))
}
