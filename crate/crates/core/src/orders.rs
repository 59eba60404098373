//! Las Vergnas's active orders on the bases of an ordered matroid, and
//! linear-extension machinery for them.
//!
//! Each order has several equivalent characterizations. The relation used to
//! build a [`BasisPoset`] is the cheapest one; the others are exposed so that
//! tests can check every pair of bases against all of them.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::activity::{activity_unchecked, ActivityTable};
use crate::error::{MatroidError, OrderError};
use crate::matroid::OrderedMatroid;
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Ext,
    Int,
    ExtInt,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Ext => "ext",
            OrderKind::Int => "int",
            OrderKind::ExtInt => "extint",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ext" => Ok(OrderKind::Ext),
            "int" => Ok(OrderKind::Int),
            "extint" | "ext/int" => Ok(OrderKind::ExtInt),
            other => Err(format!("unknown order kind {other:?} (expected ext, int or extint)")),
        }
    }
}

fn check_pair(m: &OrderedMatroid, a: ElementSet, b: ElementSet) -> Result<(), MatroidError> {
    m.require_basis(a)?;
    m.require_basis(b)?;
    Ok(())
}

/// `A <=_ext B` iff `A ⊆ B ∪ EA(B)`.
pub fn leq_ext(m: &OrderedMatroid, a: ElementSet, b: ElementSet) -> Result<bool, MatroidError> {
    check_pair(m, a, b)?;
    let act = activity_unchecked(m, b);
    Ok(a.is_subset(b | act.ea))
}

/// `A <=_int B` iff `A - IA(A) ⊆ B`.
pub fn leq_int(m: &OrderedMatroid, a: ElementSet, b: ElementSet) -> Result<bool, MatroidError> {
    check_pair(m, a, b)?;
    let act = activity_unchecked(m, a);
    Ok(act.ip.is_subset(b))
}

/// `A <=_ext/int B` iff `IP(A) ∩ EP(B) = ∅`.
pub fn leq_extint(m: &OrderedMatroid, a: ElementSet, b: ElementSet) -> Result<bool, MatroidError> {
    check_pair(m, a, b)?;
    let (aa, ab) = (activity_unchecked(m, a), activity_unchecked(m, b));
    Ok(aa.ip.is_disjoint(ab.ep))
}

/// Restriction sets of the lexicographic facet order of a pure complex whose
/// facets are `facets` (already in order): `R(F_j) = {x ∈ F_j : F_j - x ⊆ F_i, i < j}`.
fn lex_restriction_sets(facets: &[ElementSet]) -> Vec<ElementSet> {
    facets
        .iter()
        .enumerate()
        .map(|(j, &f)| {
            f.iter()
                .filter(|&x| facets[..j].iter().any(|&g| f.without(x).is_subset(g)))
                .collect()
        })
        .collect()
}

/// The four characterizations of `A <=_ext B`, in order:
///
/// 1. `E - B <=_int E - A` in the dual, read off as inclusion of restriction
///    sets in the lexicographic shelling of the dual's independence complex;
/// 2. `A ⊆ B ∪ EA(B)`;
/// 3. `A ∪ EA(A) ⊆ B ∪ EA(B)`;
/// 4. `B` is the lexicographically largest basis contained in `A ∪ B`.
pub fn ext_characterizations(
    m: &OrderedMatroid,
    a: ElementSet,
    b: ElementSet,
) -> Result<[bool; 4], MatroidError> {
    check_pair(m, a, b)?;
    let dual = m.dual();
    let restr = lex_restriction_sets(dual.bases());
    let r_of = |s: ElementSet| restr[dual.basis_index(m.ground() - s).expect("dual basis")];
    let c1 = r_of(b).is_subset(r_of(a));

    let (act_a, act_b) = (activity_unchecked(m, a), activity_unchecked(m, b));
    let c2 = a.is_subset(b | act_b.ea);
    let c3 = (a | act_a.ea).is_subset(b | act_b.ea);
    let union = a | b;
    let largest = m
        .bases()
        .iter()
        .rev()
        .find(|x| x.is_subset(union))
        .copied();
    let c4 = largest == Some(b);
    Ok([c1, c2, c3, c4])
}

/// The four characterizations of `A <=_int B`, in order:
///
/// 1. `R(A) ⊆ R(B)` for the restriction sets of the lexicographic shelling of
///    the independence complex;
/// 2. `A - IA(A) ⊆ B`;
/// 3. `A - IA(A) ⊆ B - IA(B)`;
/// 4. `A` is the lexicographically smallest basis containing `A ∩ B`.
pub fn int_characterizations(
    m: &OrderedMatroid,
    a: ElementSet,
    b: ElementSet,
) -> Result<[bool; 4], MatroidError> {
    check_pair(m, a, b)?;
    let restr = lex_restriction_sets(m.bases());
    let r_of = |s: ElementSet| restr[m.basis_index(s).expect("basis")];
    let c1 = r_of(a).is_subset(r_of(b));

    let (act_a, act_b) = (activity_unchecked(m, a), activity_unchecked(m, b));
    let c2 = act_a.ip.is_subset(b);
    let c3 = act_a.ip.is_subset(act_b.ip);
    let meet = a & b;
    let smallest = m.bases().iter().find(|x| meet.is_subset(**x)).copied();
    let c4 = smallest == Some(a);
    Ok([c1, c2, c3, c4])
}

/// The bases of a matroid under one active order. Bases are listed in
/// lexicographic order and indexed by their position in that list.
#[derive(Debug, Clone)]
pub struct BasisPoset {
    kind: OrderKind,
    bases: Vec<ElementSet>,
    leq: Vec<bool>,
}

impl BasisPoset {
    pub fn build(m: &OrderedMatroid, kind: OrderKind) -> Result<Self, OrderError> {
        let table = ActivityTable::new(m);
        Self::build_with(m, &table, kind)
    }

    pub fn build_with(
        m: &OrderedMatroid,
        table: &ActivityTable,
        kind: OrderKind,
    ) -> Result<Self, OrderError> {
        let k = m.bases().len();
        let mut leq = vec![false; k * k];
        for i in 0..k {
            let a = table.get(i);
            for j in 0..k {
                let b = table.get(j);
                leq[i * k + j] = match kind {
                    OrderKind::Ext => a.basis.is_subset(b.basis | b.ea),
                    OrderKind::Int => a.ip.is_subset(b.basis),
                    OrderKind::ExtInt => a.ip.is_disjoint(b.ep),
                };
            }
        }
        let poset = BasisPoset {
            kind,
            bases: m.bases().to_vec(),
            leq,
        };
        poset.check_axioms()?;
        Ok(poset)
    }

    /// Builds a poset from an explicit relation matrix (row-major, `leq[i*k+j]`
    /// meaning `i <= j`) after checking the partial-order axioms.
    pub fn from_relation(
        kind: OrderKind,
        bases: Vec<ElementSet>,
        leq: Vec<bool>,
    ) -> Result<Self, OrderError> {
        if leq.len() != bases.len() * bases.len() {
            return Err(OrderError::NotAPartialOrder("relation matrix has the wrong size".into()));
        }
        let poset = BasisPoset { kind, bases, leq };
        poset.check_axioms()?;
        Ok(poset)
    }

    fn check_axioms(&self) -> Result<(), OrderError> {
        let k = self.len();
        for i in 0..k {
            if !self.leq(i, i) {
                return Err(OrderError::NotAPartialOrder(format!("{} is not reflexive", self.bases[i])));
            }
            for j in 0..k {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(OrderError::NotAPartialOrder(format!(
                        "{} and {} are mutually comparable",
                        self.bases[i], self.bases[j]
                    )));
                }
                if !self.leq(i, j) {
                    continue;
                }
                for l in 0..k {
                    if self.leq(j, l) && !self.leq(i, l) {
                        return Err(OrderError::NotAPartialOrder(format!(
                            "transitivity fails on {}, {}, {}",
                            self.bases[i], self.bases[j], self.bases[l]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.bases.len() + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn index_of(&self, b: ElementSet) -> Option<usize> {
        self.bases.iter().position(|&x| x == b)
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if self.lt(i, j) && !(0..k).any(|l| self.lt(i, l) && self.lt(l, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Whether every covering pair raises `grade` by exactly one.
    pub fn is_graded_by(&self, grade: impl Fn(usize) -> i64) -> bool {
        self.hasse().into_iter().all(|(i, j)| grade(j) == grade(i) + 1)
    }

    fn order_indices(&self, ord: &BasisOrder) -> Result<Vec<usize>, OrderError> {
        if ord.sequence.len() != self.len() {
            return Err(OrderError::WrongBasisSet);
        }
        let mut seen = vec![false; self.len()];
        ord.sequence
            .iter()
            .map(|&b| {
                let i = self.index_of(b).ok_or(OrderError::WrongBasisSet)?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(OrderError::WrongBasisSet);
                }
                Ok(i)
            })
            .collect()
    }

    /// Whether `ord` lists `A` before `B` whenever `A < B` in this poset.
    pub fn is_linear_extension(&self, ord: &BasisOrder) -> Result<bool, OrderError> {
        let idx = self.order_indices(ord)?;
        Ok(self.is_linear_extension_indices(&idx))
    }

    pub(crate) fn is_linear_extension_indices(&self, idx: &[usize]) -> bool {
        let mut placed = vec![false; self.len()];
        for &j in idx {
            if (0..self.len()).any(|i| self.lt(i, j) && !placed[i]) {
                return false;
            }
            placed[j] = true;
        }
        true
    }

    fn strict_predecessor_counts(&self) -> Vec<usize> {
        let k = self.len();
        (0..k)
            .map(|j| (0..k).filter(|&i| self.lt(i, j)).count())
            .collect()
    }

    /// Up to `limit` linear extensions (as index sequences) in lexicographic
    /// order of index sequences. Returns `limit + 1` entries when there are
    /// more than `limit`.
    fn enumerate_extensions(&self, limit: usize) -> Vec<Vec<usize>> {
        let k = self.len();
        let mut out = Vec::new();
        let mut indeg = self.strict_predecessor_counts();
        let mut used = vec![false; k];
        let mut current = Vec::with_capacity(k);
        self.extend_rec(limit + 1, &mut indeg, &mut used, &mut current, &mut out);
        out
    }

    fn extend_rec(
        &self,
        cap: usize,
        indeg: &mut [usize],
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = self.len();
        if out.len() >= cap {
            return;
        }
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in 0..k {
            if used[v] || indeg[v] != 0 {
                continue;
            }
            used[v] = true;
            current.push(v);
            for (w, d) in indeg.iter_mut().enumerate() {
                if self.lt(v, w) {
                    *d -= 1;
                }
            }
            self.extend_rec(cap, indeg, used, current, out);
            for (w, d) in indeg.iter_mut().enumerate() {
                if self.lt(v, w) {
                    *d += 1;
                }
            }
            current.pop();
            used[v] = false;
            if out.len() >= cap {
                return;
            }
        }
    }

    fn random_extension(&self, rng: &mut ChaCha8Rng) -> Vec<usize> {
        let k = self.len();
        let mut indeg = self.strict_predecessor_counts();
        let mut available: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(k);
        while !available.is_empty() {
            let pick = *available.choose(rng).expect("nonempty");
            available.retain(|&v| v != pick);
            out.push(pick);
            for (w, d) in indeg.iter_mut().enumerate() {
                if self.lt(pick, w) {
                    *d -= 1;
                    if *d == 0 {
                        available.push(w);
                    }
                }
            }
            available.sort_unstable();
        }
        out
    }

    /// Linear extensions as index sequences: all of them when there are at
    /// most `exhaustive_limit`, otherwise `samples` distinct ones drawn by
    /// seeded random topological sorting (each step picks uniformly among the
    /// currently minimal bases).
    pub fn extension_indices(&self, exhaustive_limit: usize, samples: usize, seed: u64) -> ExtensionSet {
        let all = self.enumerate_extensions(exhaustive_limit);
        if all.len() <= exhaustive_limit {
            return ExtensionSet {
                orders: all,
                exhaustive: true,
            };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = HashSet::new();
        let mut orders = Vec::with_capacity(samples);
        let max_attempts = samples.saturating_mul(100).max(1000);
        for _ in 0..max_attempts {
            if orders.len() >= samples {
                break;
            }
            let ext = self.random_extension(&mut rng);
            if seen.insert(ext.clone()) {
                orders.push(ext);
            }
        }
        ExtensionSet {
            orders,
            exhaustive: false,
        }
    }

    /// Distinct linear extensions: every one of them when their number is at
    /// most `limit`, otherwise a seeded sample of `limit` of them.
    pub fn linear_extensions(&self, limit: usize, seed: u64) -> Vec<BasisOrder> {
        assert!(limit >= 1, "limit must be positive");
        self.extension_indices(limit, limit, seed)
            .orders
            .into_iter()
            .map(|idx| BasisOrder::from_indices(&self.bases, &idx))
            .collect()
    }
}

/// Linear extensions as index sequences into [`BasisPoset::bases`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSet {
    pub orders: Vec<Vec<usize>>,
    pub exhaustive: bool,
}

/// A total order on the bases of a matroid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisOrder {
    pub sequence: Vec<ElementSet>,
}

impl BasisOrder {
    pub fn new(sequence: Vec<ElementSet>) -> Self {
        BasisOrder { sequence }
    }

    pub fn from_indices(bases: &[ElementSet], idx: &[usize]) -> Self {
        BasisOrder {
            sequence: idx.iter().map(|&i| bases[i]).collect(),
        }
    }

    /// Positions of the sequence in `bases`, if it is a permutation of them.
    pub fn indices_in(&self, bases: &[ElementSet]) -> Option<Vec<usize>> {
        if self.sequence.len() != bases.len() {
            return None;
        }
        let mut seen = vec![false; bases.len()];
        let mut out = Vec::with_capacity(bases.len());
        for b in &self.sequence {
            let i = bases.iter().position(|x| x == b)?;
            if std::mem::replace(&mut seen[i], true) {
                return None;
            }
            out.push(i);
        }
        Some(out)
    }
}
