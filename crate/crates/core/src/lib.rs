//! Ordered matroids and their external activity complexes.
//!
//! The crate computes basis activities and the Tutte polynomial, the three
//! active orders on bases, the independence complex `IN(M)` and the external
//! activity complex `Act(M)`, shellings and restriction sets, f- and
//! h-vectors, minimal non-faces, and the homotopy type of the complex obtained
//! from `Act(M)` by removing its cone points.
//!
//! ```
//! use extact::{corpus, tutte_polynomial};
//!
//! let m = corpus::m0();
//! assert_eq!(tutte_polynomial(&m).to_string(), "x^3 + 2x^2 + x + 2xy + y + y^2");
//! ```

pub mod activity;
pub mod complexes;
pub mod corpus;
pub mod descriptor;
pub mod error;
pub mod graphic;
pub mod matroid;
pub mod orders;
pub mod set;

pub use activity::{
    absolute_elements, basis_activity, crapo_partition_check, tutte_polynomial, ActivityTable,
    BasisActivity, CrapoPart, CrapoViolation, TuttePolynomial,
};
pub use complexes::{
    classify_topology, external_activity_complex, independence_complex, reduced_complex,
    shelling_check, ComplexKind, ShellingReport, SignedVertex, SimplicialComplex, Topology,
};
pub use descriptor::MatroidDescriptor;
pub use error::{ComplexError, MatroidError, OrderError};
pub use matroid::{Circuit, OrderedMatroid, U31Minor, MAX_GROUND};
pub use orders::{leq_ext, leq_extint, leq_int, BasisOrder, BasisPoset, OrderKind};
pub use set::{Element, ElementSet};
