use crate::error::ComplexError;
use crate::set::ElementSet;

use super::SimplicialComplex;

/// Result of testing one facet order.
///
/// Positions refer to the order passed to [`shelling_check`], not to the
/// complex's facet list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingReport {
    pub is_shelling: bool,
    /// First position `j` whose facet meets an earlier one badly.
    pub failure_index: Option<usize>,
    /// An earlier position `i < j` whose intersection with `F_j` lies in no
    /// codimension-one intersection `F_k ∩ F_j`, `k < j`.
    pub failure_witness: Option<usize>,
    /// `R(F_j)` for each position; empty unless `is_shelling`.
    pub restriction_sets: Vec<ElementSet>,
    /// Number of faces first introduced at each position; empty unless `is_shelling`.
    pub new_face_counts: Vec<u128>,
}

impl ShellingReport {
    fn failed(j: usize, witness: Option<usize>) -> Self {
        ShellingReport {
            is_shelling: false,
            failure_index: Some(j),
            failure_witness: witness,
            restriction_sets: Vec::new(),
            new_face_counts: Vec::new(),
        }
    }
}

/// Checks that `order` (a permutation of facet indices) is a shelling: for
/// every `i < j` there are `k < j` and `f ∈ F_j` with
/// `F_i ∩ F_j ⊆ F_k ∩ F_j = F_j - f`.
///
/// On success the restriction set of each facet is
/// `R(F_j) = {x ∈ F_j : F_j - x ⊆ F_i for some i < j}`. Each one is then
/// re-verified: `R(F_j)` must itself be new, and the number of new faces,
/// counted by inclusion-exclusion over the maximal old faces inside `F_j`,
/// must equal `2^(|F_j| - |R(F_j)|)`.
pub fn shelling_check(k: &SimplicialComplex, order: &[usize]) -> Result<ShellingReport, ComplexError> {
    if !k.is_pure() {
        return Err(ComplexError::NonPure);
    }
    let count = k.facets().len();
    let mut seen = vec![false; count];
    for &i in order {
        if i >= count || std::mem::replace(&mut seen[i], true) {
            return Err(ComplexError::NotAPermutation(count));
        }
    }
    if order.len() != count {
        return Err(ComplexError::NotAPermutation(count));
    }

    let facets: Vec<ElementSet> = order.iter().map(|&i| k.facets()[i]).collect();
    let mut restriction_sets = Vec::with_capacity(count);
    let mut new_face_counts = Vec::with_capacity(count);
    let mut codim_one: Vec<ElementSet> = Vec::new();
    let mut maximal: Vec<ElementSet> = Vec::new();

    for (j, &fj) in facets.iter().enumerate() {
        let size = fj.len();
        codim_one.clear();
        for &fi in &facets[..j] {
            let meet = fi & fj;
            if meet.len() + 1 == size && !codim_one.contains(&meet) {
                codim_one.push(meet);
            }
        }
        for (i, &fi) in facets[..j].iter().enumerate() {
            let meet = fi & fj;
            if !codim_one.iter().any(|g| meet.is_subset(*g)) {
                return Ok(ShellingReport::failed(j, Some(i)));
            }
        }
        let restriction = codim_one.iter().fold(ElementSet::EMPTY, |acc, g| acc | (fj - *g));

        if facets[..j].iter().any(|fi| restriction.is_subset(*fi)) {
            return Ok(ShellingReport::failed(j, None));
        }
        maximal.clear();
        for &fi in &facets[..j] {
            let meet = fi & fj;
            if maximal.iter().any(|g| meet.is_subset(*g)) {
                continue;
            }
            maximal.retain(|g| !g.is_subset(meet));
            maximal.push(meet);
        }
        let new_faces = (1u128 << size) - old_face_count(&maximal, fj);
        if new_faces != 1u128 << (size - restriction.len()) {
            return Ok(ShellingReport::failed(j, None));
        }
        restriction_sets.push(restriction);
        new_face_counts.push(new_faces);
    }

    Ok(ShellingReport {
        is_shelling: true,
        failure_index: None,
        failure_witness: None,
        restriction_sets,
        new_face_counts,
    })
}

/// `|∪ 2^G|` over the given sets, by inclusion-exclusion.
fn old_face_count(maximal: &[ElementSet], within: ElementSet) -> u128 {
    let m = maximal.len();
    if m > 20 {
        // too many terms; count directly
        return within
            .subsets()
            .filter(|s| maximal.iter().any(|g| s.is_subset(*g)))
            .count() as u128;
    }
    let mut total: i128 = 0;
    for mask in 1u32..(1u32 << m) {
        let meet = (0..m)
            .filter(|t| mask >> t & 1 == 1)
            .fold(within, |acc, t| acc & maximal[t]);
        let term = 1i128 << meet.len();
        if mask.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total as u128
}
