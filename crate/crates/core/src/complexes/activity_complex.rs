use std::fmt;

use serde::{Deserialize, Serialize};

use crate::activity::{absolute_from_table, ActivityTable, BasisActivity};
use crate::error::OrderError;
use crate::matroid::{Circuit, OrderedMatroid};
use crate::orders::{BasisOrder, BasisPoset, OrderKind};
use crate::set::{Element, ElementSet};

use super::{barred_slots, SignedVertex, SimplicialComplex, VertexLabels};

/// Which of the two complexes attached to a matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// The independence complex `IN(M)`: facets are the bases.
    In,
    /// The external activity complex `Act(M)` on the doubled ground set.
    Act,
}

impl ComplexKind {
    /// The active order whose linear extensions shell this complex.
    pub fn shelling_order(self) -> OrderKind {
        match self {
            ComplexKind::In => OrderKind::Int,
            ComplexKind::Act => OrderKind::ExtInt,
        }
    }
}

impl std::str::FromStr for ComplexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "in" => Ok(ComplexKind::In),
            "act" => Ok(ComplexKind::Act),
            other => Err(format!("unknown complex {other:?} (expected in or act)")),
        }
    }
}

/// Facets are the bases, in the matroid's lexicographic order.
pub fn independence_complex(m: &OrderedMatroid) -> SimplicialComplex {
    SimplicialComplex::from_facets(VertexLabels::Plain, m.ground(), m.bases().to_vec())
        .expect("bases form a nonempty antichain")
}

/// `F(B) = B ∪ EP(B) ∪ bar(B ∪ EA(B))`.
pub fn act_facet(m: &OrderedMatroid, act: &BasisActivity) -> ElementSet {
    act.basis | act.ep | barred_slots(m.universe(), act.basis | act.ea)
}

/// Facets `F(B)`, aligned with [`OrderedMatroid::bases`].
pub fn external_activity_complex(m: &OrderedMatroid) -> SimplicialComplex {
    act_from_table(m, &ActivityTable::new(m))
}

fn act_from_table(m: &OrderedMatroid, table: &ActivityTable) -> SimplicialComplex {
    let u = m.universe();
    let facets = table.rows().iter().map(|row| act_facet(m, row)).collect();
    SimplicialComplex::from_facets(
        VertexLabels::Signed { universe: u },
        m.ground() | barred_slots(u, m.ground()),
        facets,
    )
    .expect("activity facets form a nonempty antichain")
}

/// `S(γ) = c ∪ bar(γ - c)` where `c` is the smallest element of `γ`.
pub fn circuit_nonface(m: &OrderedMatroid, circuit: Circuit) -> ElementSet {
    let c = m.min_of(circuit).expect("circuits are nonempty");
    ElementSet::singleton(c) | barred_slots(m.universe(), circuit.without(c))
}

/// Difference between the minimal non-faces of `Act(M)` computed from its
/// facets and the sets `S(γ)` predicted from the circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyReisnerMismatch {
    /// Predicted sets that are not minimal non-faces.
    pub missing: Vec<ElementSet>,
    /// Minimal non-faces that no circuit predicts.
    pub unexpected: Vec<ElementSet>,
}

impl fmt::Display for StanleyReisnerMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} predicted non-faces missing, {} unexpected minimal non-faces",
            self.missing.len(),
            self.unexpected.len()
        )
    }
}

impl std::error::Error for StanleyReisnerMismatch {}

pub fn verify_stanley_reisner(m: &OrderedMatroid) -> Result<(), StanleyReisnerMismatch> {
    let computed = external_activity_complex(m).minimal_nonfaces();
    let mut predicted: Vec<ElementSet> = m.circuits().iter().map(|&g| circuit_nonface(m, g)).collect();
    predicted.sort_by_key(|s| s.to_vec());
    let missing: Vec<ElementSet> = predicted.iter().filter(|s| !computed.contains(s)).copied().collect();
    let unexpected: Vec<ElementSet> = computed.iter().filter(|s| !predicted.contains(s)).copied().collect();
    if missing.is_empty() && unexpected.is_empty() {
        Ok(())
    } else {
        Err(StanleyReisnerMismatch { missing, unexpected })
    }
}

/// `AEP ∪ bar(AEA)`, plus `c` and `c̄` for every coloop `c`.
pub fn act_cone_points_predicted(m: &OrderedMatroid) -> ElementSet {
    cone_from_table(m, &ActivityTable::new(m))
}

fn cone_from_table(m: &OrderedMatroid, table: &ActivityTable) -> ElementSet {
    let u = m.universe();
    let (aea, aep) = absolute_from_table(m, table);
    let coloops = m.coloops();
    aep | barred_slots(u, aea) | coloops | barred_slots(u, coloops)
}

/// `Act(M)` with its cone points removed. The vertex set is the union of the
/// reduced facets, so plain copies of matroid loops are dropped as well.
pub fn reduced_complex(m: &OrderedMatroid) -> SimplicialComplex {
    let full = external_activity_complex(m);
    let cone = full.cone_points();
    SimplicialComplex::from_facets(
        full.labels(),
        ElementSet::EMPTY,
        full.facets().iter().map(|f| *f - cone).collect(),
    )
    .expect("removing common vertices keeps an antichain")
}

/// Restriction sets a shelling along `ord` must have: `IP(C)` on `IN(M)` when
/// `ord` extends the internal order, `bar(IP(C))` on `Act(M)` when it extends
/// the external/internal order.
pub fn restriction_sets_predicted(
    m: &OrderedMatroid,
    ord: &BasisOrder,
    kind: ComplexKind,
) -> Result<Vec<ElementSet>, OrderError> {
    let table = ActivityTable::new(m);
    let order_kind = kind.shelling_order();
    let poset = BasisPoset::build_with(m, &table, order_kind)?;
    if !poset.is_linear_extension(ord)? {
        return Err(OrderError::NotALinearExtension(order_kind.name()));
    }
    Ok(ord
        .sequence
        .iter()
        .map(|&b| {
            let ip = table.get(m.basis_index(b).expect("checked basis")).ip;
            match kind {
                ComplexKind::In => ip,
                ComplexKind::Act => barred_slots(m.universe(), ip),
            }
        })
        .collect())
}

/// The vertex map `e ↦ e` for absolutely active `e`, `e ↦ ē` otherwise, on
/// the coloop-free part of the ground set, and its effect on every basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<(Element, SignedVertex)>,
    /// Image of `B - coloops` for each basis `B`, in basis order.
    pub images: Vec<ElementSet>,
    /// Reduced facet of each basis, in basis order.
    pub reduced_facets: Vec<ElementSet>,
    /// Every image lies in the reduced facet of the same basis.
    pub contained: bool,
    /// Every image equals the reduced facet of the same basis.
    pub isomorphism: bool,
}

pub fn independence_embedding(m: &OrderedMatroid) -> Embedding {
    let u = m.universe();
    let table = ActivityTable::new(m);
    let (aea, _) = absolute_from_table(m, &table);
    let free = m.ground() - m.coloops();
    let map: Vec<(Element, SignedVertex)> = free
        .iter()
        .map(|e| {
            let v = if aea.contains(e) {
                SignedVertex::plain(e)
            } else {
                SignedVertex::bar(e)
            };
            (e, v)
        })
        .collect();
    let image_of = |s: ElementSet| -> ElementSet {
        map.iter()
            .filter(|(e, _)| s.contains(*e))
            .map(|(_, v)| v.slot(u))
            .collect()
    };
    let cone = cone_from_table(m, &table);
    let act = act_from_table(m, &table);
    let images: Vec<ElementSet> = m.bases().iter().map(|&b| image_of(b)).collect();
    let reduced_facets: Vec<ElementSet> = act.facets().iter().map(|f| *f - cone).collect();
    let contained = images.iter().zip(&reduced_facets).all(|(i, f)| i.is_subset(*f));
    let isomorphism = images == reduced_facets;
    Embedding {
        map,
        images,
        reduced_facets,
        contained,
        isomorphism,
    }
}
