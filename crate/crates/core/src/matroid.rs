//! Ordered matroids stored by their basis lists.
//!
//! Elements are 1-based ids. A matroid built by [`OrderedMatroid::from_bases`]
//! or [`OrderedMatroid::uniform`] has ground set `{1, ..., n}`; deletions and
//! contractions keep the surviving ids, so a minor's ground set is a subset of
//! its parent's. The linear order on the ground set is a stored permutation and
//! every "min" or "lexicographic" notion in this crate is taken under it.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::MatroidError;
use crate::set::{Element, ElementSet};

/// Largest supported id. Signed vertex encodings need `2 * MAX_GROUND` slots.
pub const MAX_GROUND: usize = 32;

/// A circuit is a minimal dependent set.
pub type Circuit = ElementSet;

#[derive(Clone)]
pub struct OrderedMatroid {
    universe: usize,
    ground: ElementSet,
    // ground elements from smallest to largest
    order: Vec<Element>,
    // position[e] = index of e in `order`; usize::MAX off the ground set
    position: Vec<usize>,
    bases: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    rank: usize,
    circuits: OnceLock<Vec<Circuit>>,
}

impl PartialEq for OrderedMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.order == other.order && self.bases == other.bases
    }
}

impl Eq for OrderedMatroid {}

impl fmt::Debug for OrderedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedMatroid")
            .field("ground", &self.ground)
            .field("order", &self.order)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

/// Witness that `U_{3,1}` is a minor: `M / contracted \ deleted` has ground set
/// `kept` and is three parallel elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct U31Minor {
    pub kept: ElementSet,
    pub deleted: ElementSet,
    pub contracted: ElementSet,
}

impl OrderedMatroid {
    /// Validating constructor over ground set `{1, ..., n}` in natural order.
    pub fn from_bases<I>(n: usize, bases: I) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        if n > MAX_GROUND {
            return Err(MatroidError::TooLarge { n, max: MAX_GROUND });
        }
        let ground = ElementSet::full(n);
        let order: Vec<Element> = (1..=n).collect();
        let mut list: Vec<ElementSet> = Vec::new();
        for b in bases {
            if !b.is_subset(ground) {
                let bad = (b - ground).first().unwrap_or(0);
                return Err(MatroidError::InvalidElement(bad as i64));
            }
            list.push(b);
        }
        let m = Self::assemble(n, ground, order, list)?;
        m.check_exchange()?;
        Ok(m)
    }

    /// Like [`from_bases`](Self::from_bases) with an explicit ground order,
    /// listing elements from smallest to largest.
    pub fn from_bases_ordered<I>(n: usize, order: &[Element], bases: I) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        Self::from_bases(n, bases)?.with_order(order)
    }

    /// `U_{n,k}`: every `k`-subset of `{1, ..., n}` is a basis.
    pub fn uniform(n: usize, k: usize) -> Result<Self, MatroidError> {
        if k > n {
            return Err(MatroidError::InvalidRank {
                n: n as i64,
                k: k as i64,
            });
        }
        if n > MAX_GROUND {
            return Err(MatroidError::TooLarge { n, max: MAX_GROUND });
        }
        let ground = ElementSet::full(n);
        let bases = ground.subsets_of_size(k).collect();
        Self::assemble(n, ground, (1..=n).collect(), bases)
    }

    /// Sorts and deduplicates the basis list, checks purity, and builds the
    /// lookup tables. Does not check the exchange axiom.
    pub(crate) fn assemble(
        universe: usize,
        ground: ElementSet,
        order: Vec<Element>,
        mut bases: Vec<ElementSet>,
    ) -> Result<Self, MatroidError> {
        if bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let rank = bases[0].len();
        if let Some(other) = bases.iter().find(|b| b.len() != rank) {
            return Err(MatroidError::UnequalSizes {
                first: bases[0],
                first_len: rank,
                other: *other,
                other_len: other.len(),
            });
        }
        let mut position = vec![usize::MAX; universe + 1];
        for (k, &e) in order.iter().enumerate() {
            position[e] = k;
        }
        bases.sort_unstable();
        bases.dedup();
        let mut m = OrderedMatroid {
            universe,
            ground,
            order,
            position,
            bases,
            index: HashMap::new(),
            rank,
            circuits: OnceLock::new(),
        };
        let mut sorted = m.bases.clone();
        sorted.sort_by(|a, b| m.lex_cmp(*a, *b));
        m.index = sorted.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        m.bases = sorted;
        Ok(m)
    }

    fn check_exchange(&self) -> Result<(), MatroidError> {
        for &a in &self.bases {
            for &b in &self.bases {
                if a == b {
                    continue;
                }
                for x in a - b {
                    let ok = (b - a).iter().any(|y| self.is_basis(a.without(x).with(y)));
                    if !ok {
                        return Err(MatroidError::ExchangeAxiomViolated { a, b, element: x });
                    }
                }
            }
        }
        Ok(())
    }

    /// Same matroid, new linear order (elements listed from smallest to largest).
    pub fn with_order(&self, order: &[Element]) -> Result<Self, MatroidError> {
        let as_set: ElementSet = order
            .iter()
            .map(|&e| {
                if e == 0 || e > self.universe || !self.ground.contains(e) {
                    Err(MatroidError::InvalidOrder(format!("{e} is not a ground element")))
                } else {
                    Ok(e)
                }
            })
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .collect();
        if order.len() != self.ground.len() || as_set != self.ground {
            return Err(MatroidError::InvalidOrder(format!(
                "{order:?} does not list each of {} exactly once",
                self.ground
            )));
        }
        Self::assemble(self.universe, self.ground, order.to_vec(), self.bases.clone())
    }

    /// Number of ground elements.
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// Ids live in `1..=universe()`.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    /// Ground elements from smallest to largest.
    pub fn order(&self) -> &[Element] {
        &self.order
    }

    pub fn is_natural_order(&self) -> bool {
        self.order.windows(2).all(|w| w[0] < w[1])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in lexicographic order (under the ground order).
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn basis_index(&self, b: ElementSet) -> Option<usize> {
        self.index.get(&b).copied()
    }

    pub fn is_basis(&self, s: ElementSet) -> bool {
        self.index.contains_key(&s)
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.bases.iter().any(|b| s.is_subset(*b))
    }

    pub(crate) fn require_basis(&self, b: ElementSet) -> Result<usize, MatroidError> {
        self.basis_index(b).ok_or(MatroidError::NotABasis(b))
    }

    fn require_element(&self, e: Element) -> Result<(), MatroidError> {
        if self.ground.contains(e) {
            Ok(())
        } else {
            Err(MatroidError::InvalidElement(e as i64))
        }
    }

    /// Position of `e` in the ground order (0 = smallest).
    pub fn position(&self, e: Element) -> usize {
        self.position[e]
    }

    /// Bitmask of `s` re-indexed by order positions.
    fn position_mask(&self, s: ElementSet) -> u64 {
        s.iter().fold(0u64, |acc, e| acc | 1u64 << self.position[e])
    }

    /// `<`-smallest element of `s`.
    pub fn min_of(&self, s: ElementSet) -> Option<Element> {
        let pm = self.position_mask(s);
        (pm != 0).then(|| self.order[pm.trailing_zeros() as usize])
    }

    /// `<`-largest element of `s`.
    pub fn max_of(&self, s: ElementSet) -> Option<Element> {
        let pm = self.position_mask(s);
        (pm != 0).then(|| self.order[63 - pm.leading_zeros() as usize])
    }

    /// Lexicographic comparison of the `<`-sorted sequences of `a` and `b`.
    pub fn lex_cmp(&self, a: ElementSet, b: ElementSet) -> Ordering {
        let (pa, pb) = (self.position_mask(a), self.position_mask(b));
        if pa == pb {
            return Ordering::Equal;
        }
        let low = (pa ^ pb) & (pa ^ pb).wrapping_neg();
        let above = !(low | (low - 1));
        if pa & low != 0 {
            // a holds the first difference; b is smaller only if it stops there
            if pb & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if pa & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Elements in no basis.
    pub fn loops(&self) -> ElementSet {
        let covered = self.bases.iter().fold(ElementSet::EMPTY, |acc, b| acc | *b);
        self.ground - covered
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> ElementSet {
        self.bases.iter().fold(self.ground, |acc, b| acc & *b)
    }

    /// Minimal dependent sets, sorted by their increasing id sequences.
    pub fn circuits(&self) -> &[Circuit] {
        self.circuits.get_or_init(|| {
            let mut found: Vec<Circuit> = Vec::new();
            for size in 1..=(self.rank + 1).min(self.n()) {
                for s in self.ground.subsets_of_size(size) {
                    if found.iter().any(|c| c.is_subset(s)) {
                        continue;
                    }
                    if !self.is_independent(s) {
                        found.push(s);
                    }
                }
            }
            found.sort_by_key(|c| c.to_vec());
            found
        })
    }

    /// Matroid whose bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Self {
        let bases = self.bases.iter().map(|b| self.ground - *b).collect();
        Self::assemble(self.universe, self.ground, self.order.clone(), bases)
            .expect("complements of a pure basis list are pure")
    }

    /// `M \ e`, for `e` not a coloop.
    pub fn delete(&self, e: Element) -> Result<Self, MatroidError> {
        self.require_element(e)?;
        if self.coloops().contains(e) {
            return Err(MatroidError::DeleteColoop(e));
        }
        let bases = self.bases.iter().copied().filter(|b| !b.contains(e)).collect();
        self.minor_from(e, bases)
    }

    /// `M / e`, for `e` not a loop.
    pub fn contract(&self, e: Element) -> Result<Self, MatroidError> {
        self.require_element(e)?;
        if self.loops().contains(e) {
            return Err(MatroidError::ContractLoop(e));
        }
        let bases = self
            .bases
            .iter()
            .filter(|b| b.contains(e))
            .map(|b| b.without(e))
            .collect();
        self.minor_from(e, bases)
    }

    fn minor_from(&self, e: Element, bases: Vec<ElementSet>) -> Result<Self, MatroidError> {
        let order = self.order.iter().copied().filter(|&x| x != e).collect();
        Self::assemble(self.universe, self.ground.without(e), order, bases)
    }

    /// `Circ(B, e) = { x : B + e - x is a basis }` for `e` outside `B`.
    pub fn fundamental_circuit(&self, b: ElementSet, e: Element) -> Result<Circuit, MatroidError> {
        self.require_basis(b)?;
        self.require_element(e)?;
        if b.contains(e) {
            return Err(MatroidError::ElementInBasis { basis: b, element: e });
        }
        Ok(self.fundamental_circuit_unchecked(b, e))
    }

    pub(crate) fn fundamental_circuit_unchecked(&self, b: ElementSet, e: Element) -> Circuit {
        let be = b.with(e);
        be.iter().filter(|&x| self.is_basis(be.without(x))).collect()
    }

    /// `Cocirc(B, i) = { x : B + x - i is a basis }` for `i` in `B`.
    pub fn fundamental_cocircuit(&self, b: ElementSet, i: Element) -> Result<ElementSet, MatroidError> {
        self.require_basis(b)?;
        if !b.contains(i) {
            return Err(MatroidError::ElementNotInBasis { basis: b, element: i });
        }
        Ok(self.fundamental_cocircuit_unchecked(b, i))
    }

    pub(crate) fn fundamental_cocircuit_unchecked(&self, b: ElementSet, i: Element) -> ElementSet {
        let rest = b.without(i);
        (self.ground - rest)
            .iter()
            .filter(|&x| self.is_basis(rest.with(x)))
            .collect()
    }

    /// Whether two distinct circuits share an element.
    pub fn has_intersecting_circuits(&self) -> bool {
        let cs = self.circuits();
        cs.iter()
            .enumerate()
            .any(|(k, a)| cs[k + 1..].iter().any(|b| !a.is_disjoint(*b)))
    }

    /// Whether `U_{3,1}` is a minor, by search over deletion/contraction sequences.
    pub fn has_u31_minor(&self) -> bool {
        self.find_u31_minor().is_some()
    }

    /// Searches every 3-element target set and every way of deleting or
    /// contracting the remaining elements one at a time. Loops and coloops
    /// persist in minors, so a branch dies as soon as a target element
    /// becomes one.
    pub fn find_u31_minor(&self) -> Option<U31Minor> {
        for kept in self.ground.subsets_of_size(3) {
            let rest: Vec<Element> = (self.ground - kept).to_vec();
            if let Some(w) = u31_search(self, kept, &rest, ElementSet::EMPTY, ElementSet::EMPTY) {
                return Some(w);
            }
        }
        None
    }
}

fn u31_search(
    m: &OrderedMatroid,
    kept: ElementSet,
    rest: &[Element],
    deleted: ElementSet,
    contracted: ElementSet,
) -> Option<U31Minor> {
    if !(m.loops() | m.coloops()).is_disjoint(kept) {
        return None;
    }
    let Some((&x, tail)) = rest.split_first() else {
        // three elements, none a loop or coloop: rank 1 forces all three parallel
        return (m.rank() == 1 && m.bases().len() == 3).then_some(U31Minor {
            kept,
            deleted,
            contracted,
        });
    };
    let is_loop = m.loops().contains(x);
    let is_coloop = m.coloops().contains(x);
    if !is_coloop {
        let d = m.delete(x).expect("non-coloop deletion");
        if let Some(w) = u31_search(&d, kept, tail, deleted.with(x), contracted) {
            return Some(w);
        }
    }
    if !is_loop {
        let c = m.contract(x).expect("non-loop contraction");
        if let Some(w) = u31_search(&c, kept, tail, deleted, contracted.with(x)) {
            return Some(w);
        }
    }
    None
}
