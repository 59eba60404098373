use std::fmt;

use crate::activity::{absolute_from_table, ActivityTable};
use crate::matroid::OrderedMatroid;

use super::reduced_complex;

/// Homotopy type of the reduced external activity complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    /// Two circuits meet, equivalently `U(3,1)` is a minor.
    ContractibleU31,
    /// Circuits are pairwise disjoint; a sphere of this dimension.
    SphereOfDim(i64),
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Topology::ContractibleU31 => write!(f, "contractible"),
            Topology::SphereOfDim(d) => write!(f, "sphere of dimension {d}"),
        }
    }
}

/// Contractible when two circuits intersect, otherwise a sphere of dimension
/// `r' - 1` where `r'` is the rank of the coloop-free part.
pub fn classify_topology(m: &OrderedMatroid) -> Topology {
    if m.has_intersecting_circuits() {
        Topology::ContractibleU31
    } else {
        Topology::SphereOfDim(m.rank() as i64 - m.coloops().len() as i64 - 1)
    }
}

/// The classification together with the numbers it is checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyReport {
    pub topology: Topology,
    /// Dimension of the reduced complex.
    pub dimension: i64,
    /// `n + r - 1 - |AEA ∪ AEP| - 2 * #coloops`.
    pub predicted_dimension: i64,
    pub h_vector: Vec<i64>,
    pub euler_characteristic: i64,
    pub reduced_euler_characteristic: i64,
    /// Dimensions agree, and the top `h` entry and `χ` fit the class: `1` and
    /// `1 + (-1)^d` for a sphere, `0` and `1` when contractible.
    pub consistent: bool,
}

impl TopologyReport {
    pub fn top_h(&self) -> i64 {
        *self.h_vector.last().expect("h-vector is nonempty")
    }
}

pub fn topology_report(m: &OrderedMatroid) -> TopologyReport {
    let topology = classify_topology(m);
    let reduced = reduced_complex(m);
    let (aea, aep) = absolute_from_table(m, &ActivityTable::new(m));
    let predicted_dimension = (m.n() + m.rank()) as i64
        - 1
        - (aea | aep).len() as i64
        - 2 * m.coloops().len() as i64;
    let dimension = reduced.dimension();
    let h_vector = reduced.h_vector().expect("activity complexes are pure");
    let chi = reduced.euler_characteristic();
    let top = *h_vector.last().expect("h-vector is nonempty");
    let class_ok = match topology {
        Topology::ContractibleU31 => top == 0 && chi == 1,
        Topology::SphereOfDim(d) => {
            d == dimension && top == 1 && chi == 1 + if d.rem_euclid(2) == 0 { 1 } else { -1 }
        }
    };
    TopologyReport {
        topology,
        dimension,
        predicted_dimension,
        h_vector,
        euler_characteristic: chi,
        reduced_euler_characteristic: chi - 1,
        consistent: class_ok && dimension == predicted_dimension,
    }
}
