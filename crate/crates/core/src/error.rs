use thiserror::Error;

use crate::set::{Element, ElementSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("a matroid needs at least one basis")]
    EmptyBases,
    #[error("bases have unequal sizes: {first} has {first_len} elements, {other} has {other_len}")]
    UnequalSizes {
        first: ElementSet,
        first_len: usize,
        other: ElementSet,
        other_len: usize,
    },
    #[error("basis exchange fails for A={a}, B={b}: no b in B-A makes A-{element}+b a basis")]
    ExchangeAxiomViolated {
        a: ElementSet,
        b: ElementSet,
        element: Element,
    },
    #[error("rank {k} is not in 0..={n}")]
    InvalidRank { n: i64, k: i64 },
    #[error("element {0} is not in the ground set")]
    InvalidElement(i64),
    #[error("order is not a permutation of the ground set: {0}")]
    InvalidOrder(String),
    #[error("ground set of size {n} exceeds the maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("ground set size {0} is negative")]
    InvalidSize(i64),
    #[error("element {0} is listed twice")]
    DuplicateElement(i64),
    #[error("graph is malformed: {0}")]
    MalformedGraph(String),
    #[error("cannot delete coloop {0}")]
    DeleteColoop(Element),
    #[error("cannot contract loop {0}")]
    ContractLoop(Element),
    #[error("{0} is not a basis")]
    NotABasis(ElementSet),
    #[error("element {element} lies in basis {basis}")]
    ElementInBasis { basis: ElementSet, element: Element },
    #[error("element {element} is not in basis {basis}")]
    ElementNotInBasis { basis: ElementSet, element: Element },
}

impl MatroidError {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            MatroidError::EmptyBases => "empty-bases",
            MatroidError::UnequalSizes { .. } => "unequal-sizes",
            MatroidError::ExchangeAxiomViolated { .. } => "exchange-axiom-violated",
            MatroidError::InvalidRank { .. } => "invalid-rank",
            MatroidError::InvalidElement(_) => "invalid-element",
            MatroidError::InvalidOrder(_) => "invalid-order",
            MatroidError::TooLarge { .. } => "too-large",
            MatroidError::InvalidSize(_) => "invalid-size",
            MatroidError::DuplicateElement(_) => "duplicate-element",
            MatroidError::MalformedGraph(_) => "malformed-graph",
            MatroidError::DeleteColoop(_) => "delete-coloop",
            MatroidError::ContractLoop(_) => "contract-loop",
            MatroidError::NotABasis(_) => "not-a-basis",
            MatroidError::ElementInBasis { .. } => "element-in-basis",
            MatroidError::ElementNotInBasis { .. } => "element-not-in-basis",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("order does not list each basis of the poset exactly once")]
    WrongBasisSet,
    #[error("order is not a linear extension of the {0} order")]
    NotALinearExtension(&'static str),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

impl OrderError {
    pub fn code(&self) -> &'static str {
        match self {
            OrderError::NotAPartialOrder(_) => "not-a-partial-order",
            OrderError::WrongBasisSet => "wrong-basis-set",
            OrderError::NotALinearExtension(_) => "not-a-linear-extension",
            OrderError::Matroid(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex has no facets")]
    NoFacets,
    #[error("facet list is not an antichain: {0} is contained in {1}")]
    NotAnAntichain(ElementSet, ElementSet),
    #[error("complex is not pure")]
    NonPure,
    #[error("facet order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

impl ComplexError {
    pub fn code(&self) -> &'static str {
        match self {
            ComplexError::NoFacets => "no-facets",
            ComplexError::NotAnAntichain(..) => "not-an-antichain",
            ComplexError::NonPure => "non-pure",
            ComplexError::NotAPermutation(_) => "not-a-permutation",
        }
    }
}
