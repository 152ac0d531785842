//! Ground sets, element sets and set families.
//!
//! Every set is a dense bitset over the indices of one [`GroundSet`]. The
//! index order of the ground set is the canonical element order: iteration,
//! set ordering and every "smallest index" tie-break use it.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Dense index of an element in its ground set.
pub type Element = usize;

const WORD_BITS: usize = u64::BITS as usize;

/// An ordered list of distinct element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
    index: HashMap<String, Element>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = GroundSet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if !is_valid_name(&name) {
                return Err(Error::InvalidName(name));
            }
            if out.index.contains_key(&name) {
                return Err(Error::DuplicateName(name));
            }
            out.index.insert(name.clone(), out.names.len());
            out.names.push(name);
        }
        Ok(Arc::new(out))
    }

    /// Ground set `0, 1, ..., n-1` with decimal names.
    pub fn numbered(n: usize) -> Arc<Self> {
        Self::new((0..n).map(|i| i.to_string())).expect("decimal names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Element) -> &str {
        &self.names[e]
    }

    pub fn index_of(&self, name: &str) -> Option<Element> {
        self.index.get(name).copied()
    }

    pub fn element(&self, name: &str) -> Result<Element> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.len()
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set<'a, I>(&self, names: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut s = self.empty_set();
        for name in names {
            s.insert(self.element(name)?);
        }
        Ok(s)
    }

    /// Parses whitespace-separated element names. A lone `-` denotes the
    /// empty set.
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        let trimmed = text.trim();
        if trimmed == "-" {
            return Ok(self.empty_set());
        }
        self.set(trimmed.split_whitespace())
    }

    /// Space-separated names in canonical order; empty string for the empty set.
    pub fn format_set(&self, set: &ElementSet) -> String {
        let mut out = String::new();
        for e in set.iter() {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(self.name(e));
        }
        out
    }

    pub fn check(&self, set: &ElementSet) -> Result<()> {
        if set.universe() != self.len() {
            return Err(Error::GroundMismatch {
                expected: self.len(),
                found: set.universe(),
            });
        }
        Ok(())
    }
}

fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "-"
        && name != ":"
        && !name.contains('#')
        && !name.contains("->")
        && !name.chars().any(char::is_whitespace)
}

/// A subset of a ground set, stored as a bitset.
///
/// Binary operations between sets of different universes panic; validated
/// entry points (`GroundSet::check`, base and family constructors) reject
/// such inputs before they reach the algorithms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: SmallVec::from_elem(0, universe.div_ceil(WORD_BITS)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, e: Element) -> Self {
        let mut s = Self::empty(universe);
        s.insert(e);
        s
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(universe: usize, elements: I) -> Self {
        let mut s = Self::empty(universe);
        for e in elements {
            s.insert(e);
        }
        s
    }

    /// Set whose members are the bits of `mask`; `universe` must be at most 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD_BITS, "from_mask needs a universe of at most 64");
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
            s.trim();
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    fn same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "element sets from different ground sets"
        );
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        e < self.universe && self.words[e / WORD_BITS] >> (e % WORD_BITS) & 1 == 1
    }

    /// Returns `true` if `e` was not present.
    #[inline]
    pub fn insert(&mut self, e: Element) -> bool {
        assert!(e < self.universe, "element {e} outside universe {}", self.universe);
        let w = &mut self.words[e / WORD_BITS];
        let mask = 1u64 << (e % WORD_BITS);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    /// Returns `true` if `e` was present.
    #[inline]
    pub fn remove(&mut self, e: Element) -> bool {
        if e >= self.universe {
            return false;
        }
        let w = &mut self.words[e / WORD_BITS];
        let mask = 1u64 << (e % WORD_BITS);
        let present = *w & mask != 0;
        *w &= !mask;
        present
    }

    pub fn with(&self, e: Element) -> Self {
        let mut s = self.clone();
        s.insert(e);
        s
    }

    pub fn without(&self, e: Element) -> Self {
        let mut s = self.clone();
        s.remove(e);
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn first(&self) -> Option<Element> {
        self.iter().next()
    }

    pub fn iter(&self) -> Elements<'_> {
        Elements {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }

    /// True if some member is strictly greater than `e`.
    fn has_member_above(&self, e: Element) -> bool {
        let wi = e / WORD_BITS;
        let bit = e % WORD_BITS;
        let above = if bit + 1 == WORD_BITS {
            0
        } else {
            self.words[wi] & (u64::MAX << (bit + 1))
        };
        above != 0 || self.words[wi + 1..].iter().any(|&w| w != 0)
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
pub struct Elements<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Elements<'_> {
    type Item = Element;

    #[inline]
    fn next(&mut self) -> Option<Element> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD_BITS + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = Element;
    type IntoIter = Elements<'a>;

    fn into_iter(self) -> Elements<'a> {
        self.iter()
    }
}

/// Lexicographic order on ascending index sequences; a proper prefix sorts
/// first, so the empty set is the minimum.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.universe != other.universe {
            return self.universe.cmp(&other.universe);
        }
        for (wi, (a, b)) in self.words.iter().zip(other.words.iter()).enumerate() {
            let diff = a ^ b;
            if diff == 0 {
                continue;
            }
            let d = wi * WORD_BITS + diff.trailing_zeros() as usize;
            // Both sequences agree below `d`; exactly one of them holds `d`.
            return if self.contains(d) {
                if other.has_member_above(d) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            } else if self.has_member_above(d) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        Ordering::Equal
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Orders sets by size first, then lexicographically.
pub fn size_then_lex(a: &ElementSet, b: &ElementSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Inclusion-wise minimal members of `sets`, deduplicated, in first-occurrence order.
pub fn minimal_sets(sets: &[ElementSet]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, t)| t.is_proper_subset(s) || (j < i && t == s));
        if !dominated {
            out.push(s.clone());
        }
    }
    out
}

/// Inclusion-wise maximal members of `sets`, deduplicated, in first-occurrence order.
pub fn maximal_sets(sets: &[ElementSet]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, t)| s.is_proper_subset(t) || (j < i && t == s));
        if !dominated {
            out.push(s.clone());
        }
    }
    out
}

/// An ordered collection of subsets of one ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: Arc<GroundSet>,
    sets: Vec<ElementSet>,
}

impl SetFamily {
    pub fn new(ground: Arc<GroundSet>) -> Self {
        SetFamily {
            ground,
            sets: Vec::new(),
        }
    }

    pub fn from_sets(ground: Arc<GroundSet>, sets: Vec<ElementSet>) -> Result<Self> {
        for s in &sets {
            ground.check(s)?;
        }
        Ok(SetFamily { ground, sets })
    }

    /// Like [`SetFamily::from_sets`], additionally enforcing pairwise
    /// incomparability (`sperner`) and absence of duplicates (`dedup`).
    pub fn checked(
        ground: Arc<GroundSet>,
        sets: Vec<ElementSet>,
        sperner: bool,
        dedup: bool,
    ) -> Result<Self> {
        let family = Self::from_sets(ground, sets)?;
        if dedup && family.has_duplicates() {
            return Err(Error::InconsistentInput("duplicate set in family".into()));
        }
        if sperner && !family.is_sperner() {
            return Err(Error::NotSperner);
        }
        Ok(family)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn into_sets(self) -> Vec<ElementSet> {
        self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ElementSet> {
        self.sets.iter()
    }

    pub fn contains(&self, set: &ElementSet) -> bool {
        self.sets.contains(set)
    }

    pub fn push(&mut self, set: ElementSet) -> Result<()> {
        self.ground.check(&set)?;
        self.sets.push(set);
        Ok(())
    }

    pub fn has_duplicates(&self) -> bool {
        let mut seen = HashSet::new();
        !self.sets.iter().all(|s| seen.insert(s))
    }

    pub fn is_sperner(&self) -> bool {
        self.sets.iter().enumerate().all(|(i, a)| {
            self.sets
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || (a != b && !a.is_subset(b)))
        })
    }

    pub fn sort_canonical(&mut self) {
        self.sets.sort();
    }

    pub fn canonical(mut self) -> Self {
        self.sort_canonical();
        self
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a ElementSet;
    type IntoIter = std::slice::Iter<'a, ElementSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

/// Irreducible closed sets grouped by the element they are attached to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachedFamily {
    ground: Arc<GroundSet>,
    per_element: Vec<Vec<ElementSet>>,
}

impl AttachedFamily {
    pub fn new(ground: Arc<GroundSet>) -> Self {
        let n = ground.len();
        AttachedFamily {
            ground,
            per_element: vec![Vec::new(); n],
        }
    }

    /// Builds and validates: `x ∉ M` for each member of `irr(x)`, and no set
    /// is attached to two elements.
    pub fn from_parts(ground: Arc<GroundSet>, per_element: Vec<Vec<ElementSet>>) -> Result<Self> {
        if per_element.len() != ground.len() {
            return Err(Error::InconsistentInput(format!(
                "{} attached families for {} elements",
                per_element.len(),
                ground.len()
            )));
        }
        let family = AttachedFamily {
            ground,
            per_element,
        };
        family.validate()?;
        Ok(family)
    }

    pub fn validate(&self) -> Result<()> {
        let mut owner: HashMap<&ElementSet, Element> = HashMap::new();
        for (x, sets) in self.per_element.iter().enumerate() {
            for m in sets {
                self.ground.check(m)?;
                if m.contains(x) {
                    return Err(Error::InconsistentInput(format!(
                        "set attached to {} contains it",
                        self.ground.name(x)
                    )));
                }
                if let Some(&y) = owner.get(m) {
                    if y != x {
                        return Err(Error::NotConvexGeometry);
                    }
                    return Err(Error::InconsistentInput("duplicate attached set".into()));
                }
                owner.insert(m, x);
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn of(&self, x: Element) -> &[ElementSet] {
        &self.per_element[x]
    }

    pub fn family(&self, x: Element) -> SetFamily {
        SetFamily {
            ground: self.ground.clone(),
            sets: self.per_element[x].clone(),
        }
    }

    pub fn push(&mut self, x: Element, set: ElementSet) {
        self.per_element[x].push(set);
    }

    pub fn set_family(&mut self, x: Element, sets: Vec<ElementSet>) {
        self.per_element[x] = sets;
    }

    pub fn total(&self) -> usize {
        self.per_element.iter().map(Vec::len).sum()
    }

    /// `(x, M)` pairs, element-major.
    pub fn pairs(&self) -> impl Iterator<Item = (Element, &ElementSet)> {
        self.per_element
            .iter()
            .enumerate()
            .flat_map(|(x, sets)| sets.iter().map(move |m| (x, m)))
    }

    pub fn flatten(&self) -> Vec<ElementSet> {
        self.pairs().map(|(_, m)| m.clone()).collect()
    }

    /// Sorts every per-element family canonically.
    pub fn sort_canonical(&mut self) {
        for sets in &mut self.per_element {
            sets.sort();
        }
    }

    pub fn canonical(mut self) -> Self {
        self.sort_canonical();
        self
    }
}
