//! Implications, implicational bases and their degree metrics.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::{Element, ElementSet, GroundSet};

/// An implication `premise -> conclusion`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Implication {
    premise: ElementSet,
    conclusion: ElementSet,
}

impl Implication {
    /// Strict constructor: premise and conclusion must be disjoint and the
    /// conclusion non-empty.
    pub fn new(premise: ElementSet, conclusion: ElementSet) -> Result<Self> {
        if premise.universe() != conclusion.universe() {
            return Err(Error::GroundMismatch {
                expected: premise.universe(),
                found: conclusion.universe(),
            });
        }
        if conclusion.is_empty() {
            return Err(Error::EmptyConclusion);
        }
        if premise.intersects(&conclusion) {
            return Err(Error::OverlappingImplication);
        }
        Ok(Implication {
            premise,
            conclusion,
        })
    }

    /// Unchecked constructor for raw input; [`normalize`] makes such
    /// implications disjoint.
    pub fn raw(premise: ElementSet, conclusion: ElementSet) -> Self {
        assert_eq!(premise.universe(), conclusion.universe());
        Implication {
            premise,
            conclusion,
        }
    }

    pub fn unit(premise: ElementSet, b: Element) -> Result<Self> {
        let conclusion = ElementSet::singleton(premise.universe(), b);
        Self::new(premise, conclusion)
    }

    pub fn premise(&self) -> &ElementSet {
        &self.premise
    }

    pub fn conclusion(&self) -> &ElementSet {
        &self.conclusion
    }

    pub fn is_unit(&self) -> bool {
        self.conclusion.len() == 1
    }

    pub fn is_disjoint(&self) -> bool {
        self.premise.is_disjoint(&self.conclusion)
    }
}

impl fmt::Debug for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.premise, self.conclusion)
    }
}

/// A ground set together with an ordered list of implications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationalBase {
    ground: Arc<GroundSet>,
    implications: Vec<Implication>,
}

impl ImplicationalBase {
    /// Rejects implications on another ground set and empty premises.
    pub fn new(ground: Arc<GroundSet>, implications: Vec<Implication>) -> Result<Self> {
        Self::build(ground, implications, false)
    }

    /// Same as [`ImplicationalBase::new`] but accepts empty premises.
    pub fn with_empty_premises(
        ground: Arc<GroundSet>,
        implications: Vec<Implication>,
    ) -> Result<Self> {
        Self::build(ground, implications, true)
    }

    fn build(
        ground: Arc<GroundSet>,
        implications: Vec<Implication>,
        allow_empty_premise: bool,
    ) -> Result<Self> {
        for imp in &implications {
            ground.check(&imp.premise)?;
            ground.check(&imp.conclusion)?;
            if imp.premise.is_empty() && !allow_empty_premise {
                return Err(Error::EmptyPremise);
            }
        }
        Ok(ImplicationalBase {
            ground,
            implications,
        })
    }

    pub fn empty(ground: Arc<GroundSet>) -> Self {
        ImplicationalBase {
            ground,
            implications: Vec::new(),
        }
    }

    /// Builds a base from `(premise names, conclusion names)` pairs.
    pub fn from_names(ground: Arc<GroundSet>, implications: &[(&str, &str)]) -> Result<Self> {
        let imps = implications
            .iter()
            .map(|(p, c)| Ok(Implication::raw(ground.parse_set(p)?, ground.parse_set(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, imps)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.implications
            .iter()
            .all(|imp| imp.is_disjoint() && !imp.conclusion.is_empty())
    }

    pub fn has_empty_premise(&self) -> bool {
        self.implications.iter().any(|imp| imp.premise.is_empty())
    }

    /// Set of implications, ignoring order.
    pub fn implication_set(&self) -> HashSet<&Implication> {
        self.implications.iter().collect()
    }
}

/// Removes premise elements from conclusions, drops implications left with
/// an empty conclusion and drops repeated implications.
pub fn normalize(ib: &ImplicationalBase) -> ImplicationalBase {
    let mut seen = HashSet::new();
    let mut implications = Vec::new();
    for imp in &ib.implications {
        let conclusion = imp.conclusion.difference(&imp.premise);
        if conclusion.is_empty() {
            continue;
        }
        let imp = Implication {
            premise: imp.premise.clone(),
            conclusion,
        };
        if seen.insert(imp.clone()) {
            implications.push(imp);
        }
    }
    ImplicationalBase {
        ground: ib.ground.clone(),
        implications,
    }
}

/// Replaces every `A -> B` by the unit implications `A -> b`, `b ∈ B`.
pub fn unit_expansion(ib: &ImplicationalBase) -> ImplicationalBase {
    let n = ib.ground.len();
    let implications = ib
        .implications
        .iter()
        .flat_map(|imp| {
            imp.conclusion.iter().map(move |b| Implication {
                premise: imp.premise.clone(),
                conclusion: ElementSet::singleton(n, b),
            })
        })
        .collect();
    ImplicationalBase {
        ground: ib.ground.clone(),
        implications,
    }
}

/// Merges implications with equal premises; premises keep their first-occurrence order.
pub fn aggregation(ib: &ImplicationalBase) -> ImplicationalBase {
    let mut slot: HashMap<&ElementSet, usize> = HashMap::new();
    let mut implications: Vec<Implication> = Vec::new();
    for imp in &ib.implications {
        match slot.get(&imp.premise) {
            Some(&i) => implications[i].conclusion.union_with(&imp.conclusion),
            None => {
                slot.insert(&imp.premise, implications.len());
                implications.push(imp.clone());
            }
        }
    }
    ImplicationalBase {
        ground: ib.ground.clone(),
        implications,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Degrees {
    pub pdeg: usize,
    pub cdeg: usize,
    pub deg: usize,
}

/// Per-element premise-, conclusion- and total degree, with their maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub per_element: Vec<Degrees>,
    pub summary: Degrees,
}

impl DegreeProfile {
    pub fn of(&self, x: Element) -> Degrees {
        self.per_element[x]
    }
}

pub fn degree_profile(ib: &ImplicationalBase) -> DegreeProfile {
    let mut per_element = vec![Degrees::default(); ib.ground.len()];
    for imp in &ib.implications {
        for a in imp.premise.iter() {
            per_element[a].pdeg += 1;
        }
        for b in imp.conclusion.iter() {
            per_element[b].cdeg += 1;
        }
        for x in imp.premise.union(&imp.conclusion).iter() {
            per_element[x].deg += 1;
        }
    }
    let summary = per_element.iter().fold(Degrees::default(), |acc, d| Degrees {
        pdeg: acc.pdeg.max(d.pdeg),
        cdeg: acc.cdeg.max(d.cdeg),
        deg: acc.deg.max(d.deg),
    });
    DegreeProfile {
        per_element,
        summary,
    }
}
