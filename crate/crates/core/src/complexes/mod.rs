//! Simplicial complexes attached to an ordered matroid: the independence
//! complex, the external activity complex, and its reduction by cone points.
//!
//! Vertices of the external activity complex live on the doubled ground set.
//! For a matroid whose ids live in `1..=u`, element `e` occupies slot `e` and
//! its barred copy `ē` occupies slot `u + e`. Serialized labels write `ē` as
//! the negative integer `-e`.

mod activity_complex;
mod shelling;
mod simplicial;
mod topology;

pub use activity_complex::{
    act_cone_points_predicted, act_facet, circuit_nonface, external_activity_complex,
    independence_complex, independence_embedding, reduced_complex, restriction_sets_predicted,
    verify_stanley_reisner, ComplexKind, Embedding, StanleyReisnerMismatch,
};
pub use shelling::{shelling_check, ShellingReport};
pub use simplicial::{binomial, h_from_f, SimplicialComplex};
pub use topology::{classify_topology, topology_report, Topology, TopologyReport};

use crate::set::{Element, ElementSet};

/// An element `e` or its barred copy `ē`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVertex {
    pub element: Element,
    pub barred: bool,
}

impl SignedVertex {
    pub fn plain(element: Element) -> Self {
        SignedVertex {
            element,
            barred: false,
        }
    }

    pub fn bar(element: Element) -> Self {
        SignedVertex {
            element,
            barred: true,
        }
    }

    pub fn slot(self, universe: usize) -> usize {
        if self.barred {
            universe + self.element
        } else {
            self.element
        }
    }

    pub fn from_slot(universe: usize, slot: usize) -> Self {
        if slot > universe {
            SignedVertex::bar(slot - universe)
        } else {
            SignedVertex::plain(slot)
        }
    }

    /// `e` for plain vertices, `-e` for barred ones.
    pub fn label(self) -> i64 {
        if self.barred {
            -(self.element as i64)
        } else {
            self.element as i64
        }
    }
}

/// Slots of the barred copy `s̄`.
pub fn barred_slots(universe: usize, s: ElementSet) -> ElementSet {
    ElementSet::from_bits(s.bits() << universe)
}

/// Splits a signed vertex set into its plain part and the elements whose bar it holds.
pub fn split_signed(universe: usize, s: ElementSet) -> (ElementSet, ElementSet) {
    let plain = s & ElementSet::full(universe);
    let barred = ElementSet::from_bits((s - plain).bits() >> universe);
    (plain, barred)
}

/// How vertex slots of a complex are named.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexLabels {
    /// Slot `e` is element `e`.
    Plain,
    /// Slot `e` is `e`, slot `universe + e` is `ē`.
    Signed { universe: usize },
}

impl VertexLabels {
    pub fn label(self, slot: usize) -> i64 {
        match self {
            VertexLabels::Plain => slot as i64,
            VertexLabels::Signed { universe } => SignedVertex::from_slot(universe, slot).label(),
        }
    }

    /// Labels of a vertex set: plain vertices ascending, then barred ones by element.
    pub fn labels(self, s: ElementSet) -> Vec<i64> {
        s.iter().map(|v| self.label(v)).collect()
    }

    /// Inverse of [`label`](Self::label).
    pub fn slot(self, label: i64) -> Option<usize> {
        match self {
            VertexLabels::Plain => (label > 0).then_some(label as usize),
            VertexLabels::Signed { universe } => {
                let e = label.unsigned_abs() as usize;
                (e >= 1 && e <= universe).then(|| {
                    if label > 0 {
                        e
                    } else {
                        universe + e
                    }
                })
            }
        }
    }
}
