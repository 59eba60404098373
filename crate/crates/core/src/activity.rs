//! Basis activities, the Tutte polynomial, and Crapo's interval partition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::MatroidError;
use crate::matroid::OrderedMatroid;
use crate::set::ElementSet;

/// External and internal activity of one basis.
///
/// `ea`/`ep` split `E - basis`: `e` is externally active when it is the
/// `<`-smallest element of its fundamental circuit. `ia`/`ip` split the basis
/// the same way using fundamental cocircuits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisActivity {
    pub basis: ElementSet,
    pub ea: ElementSet,
    pub ep: ElementSet,
    pub ia: ElementSet,
    pub ip: ElementSet,
}

pub fn basis_activity(m: &OrderedMatroid, b: ElementSet) -> Result<BasisActivity, MatroidError> {
    m.require_basis(b)?;
    Ok(activity_unchecked(m, b))
}

pub(crate) fn activity_unchecked(m: &OrderedMatroid, b: ElementSet) -> BasisActivity {
    let mut ea = ElementSet::EMPTY;
    for e in m.ground() - b {
        let circ = m.fundamental_circuit_unchecked(b, e);
        if m.min_of(circ) == Some(e) {
            ea.insert(e);
        }
    }
    let mut ia = ElementSet::EMPTY;
    for i in b {
        let cocirc = m.fundamental_cocircuit_unchecked(b, i);
        if m.min_of(cocirc) == Some(i) {
            ia.insert(i);
        }
    }
    BasisActivity {
        basis: b,
        ea,
        ep: m.ground() - b - ea,
        ia,
        ip: b - ia,
    }
}

/// Activities of every basis, aligned with [`OrderedMatroid::bases`].
#[derive(Debug, Clone)]
pub struct ActivityTable {
    rows: Vec<BasisActivity>,
}

impl ActivityTable {
    pub fn new(m: &OrderedMatroid) -> Self {
        ActivityTable {
            rows: m.bases().iter().map(|&b| activity_unchecked(m, b)).collect(),
        }
    }

    pub fn rows(&self) -> &[BasisActivity] {
        &self.rows
    }

    pub fn get(&self, index: usize) -> &BasisActivity {
        &self.rows[index]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Sparse coefficient table: `(i, j) -> #{B : |IA(B)| = i, |EA(B)| = j}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), u64>,
}

impl TuttePolynomial {
    pub fn from_activities(rows: &[BasisActivity]) -> Self {
        let mut coeffs = BTreeMap::new();
        for row in rows {
            *coeffs.entry((row.ia.len(), row.ea.len())).or_insert(0) += 1;
        }
        TuttePolynomial { coeffs }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> u64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(i, j, c)`, highest `x` power first, then increasing `y` power.
    pub fn terms(&self) -> Vec<(usize, usize, u64)> {
        let mut out: Vec<_> = self.coeffs.iter().map(|(&(i, j), &c)| (i, j, c)).collect();
        out.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        out
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| {
                c as i128 * (x as i128).pow(i as u32) * (y as i128).pow(j as u32)
            })
            .sum()
    }

    /// Coefficients of `T(x, 1)` listed from `x^degree` down to `x^0`, where
    /// `degree` is the rank. This is the h-vector of the independence complex.
    pub fn shelling_coefficients(&self, rank: usize) -> Vec<u64> {
        let mut out = vec![0u64; rank + 1];
        for (&(i, _), &c) in &self.coeffs {
            out[rank - i] += c;
        }
        out
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut mono = String::new();
            match i {
                0 => {}
                1 => mono.push('x'),
                _ => mono.push_str(&format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => mono.push('y'),
                _ => mono.push_str(&format!("y^{j}")),
            }
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{mono}")?,
                (_, false) => write!(f, "{c}{mono}")?,
            }
        }
        Ok(())
    }
}

pub fn tutte_polynomial(m: &OrderedMatroid) -> TuttePolynomial {
    TuttePolynomial::from_activities(ActivityTable::new(m).rows())
}

/// Which statement of the partition theorem a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrapoPart {
    /// `[B - IA(B), B + EA(B)]` over all bases partition `2^E`.
    AllSubsets,
    /// `[B - IA(B), B]` over all bases partition the independent sets.
    IndependentSets,
}

/// A subset covered by zero or several intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrapoViolation {
    pub part: CrapoPart,
    pub subset: ElementSet,
    pub covered: usize,
}

impl fmt::Display for CrapoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}: subset {} lies in {} intervals",
            self.part, self.subset, self.covered
        )
    }
}

impl std::error::Error for CrapoViolation {}

/// Counts, for every subset of the ground set, how many activity intervals
/// contain it, and reports the first subset whose count is not exactly one.
pub fn crapo_partition_check(m: &OrderedMatroid) -> Result<(), CrapoViolation> {
    let table = ActivityTable::new(m);
    let mut all: HashMap<ElementSet, usize> = HashMap::new();
    let mut indep: HashMap<ElementSet, usize> = HashMap::new();
    for row in table.rows() {
        let low = row.basis - row.ia;
        for x in row.ea.subsets() {
            for y in row.ia.subsets() {
                *all.entry(low | x | y).or_insert(0) += 1;
            }
        }
        for y in row.ia.subsets() {
            *indep.entry(low | y).or_insert(0) += 1;
        }
    }
    for s in m.ground().subsets() {
        let covered = all.get(&s).copied().unwrap_or(0);
        if covered != 1 {
            return Err(CrapoViolation {
                part: CrapoPart::AllSubsets,
                subset: s,
                covered,
            });
        }
        let covered = indep.get(&s).copied().unwrap_or(0);
        let expected = usize::from(m.is_independent(s));
        if covered != expected {
            return Err(CrapoViolation {
                part: CrapoPart::IndependentSets,
                subset: s,
                covered,
            });
        }
    }
    Ok(())
}

/// Absolutely externally active and passive elements.
///
/// `e` is absolutely active (passive) when it is externally active (passive)
/// for every basis avoiding it. Coloops avoid no basis and are reported in
/// neither set.
pub fn absolute_elements(m: &OrderedMatroid) -> (ElementSet, ElementSet) {
    absolute_from_table(m, &ActivityTable::new(m))
}

pub(crate) fn absolute_from_table(
    m: &OrderedMatroid,
    table: &ActivityTable,
) -> (ElementSet, ElementSet) {
    let candidates = m.ground() - m.coloops();
    let mut aea = candidates;
    let mut aep = candidates;
    for row in table.rows() {
        aea = aea - row.ep;
        aep = aep - row.ea;
    }
    (aea, aep)
}
