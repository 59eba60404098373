//! Serializable description of a matroid, as read by the command-line tool.
//!
//! ```json
//! {"type":"bases","n":5,"order":[1,2,3,4,5],"bases":[[1,2,4],[1,2,5]]}
//! {"type":"graph","vertices":4,"edges":[[1,2],[2,3]]}
//! {"type":"uniform","n":3,"k":1}
//! ```
//!
//! Element ids are 1-based. `order` lists the ground set from smallest to
//! largest and defaults to the natural order.

use serde::{Deserialize, Serialize};

use crate::error::MatroidError;
use crate::matroid::OrderedMatroid;
use crate::set::{Element, ElementSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatroidDescriptor {
    Bases {
        n: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<Vec<i64>>,
        bases: Vec<Vec<i64>>,
    },
    Graph {
        vertices: i64,
        edges: Vec<[i64; 2]>,
    },
    Uniform {
        n: i64,
        k: i64,
    },
}

impl MatroidDescriptor {
    /// Number of ground elements the descriptor asks for.
    pub fn ground_size(&self) -> i64 {
        match self {
            MatroidDescriptor::Bases { n, .. } | MatroidDescriptor::Uniform { n, .. } => *n,
            MatroidDescriptor::Graph { edges, .. } => edges.len() as i64,
        }
    }

    /// Validates and builds the matroid, refusing ground sets larger than `max_n`.
    pub fn to_matroid(&self, max_n: usize) -> Result<OrderedMatroid, MatroidError> {
        let n = self.ground_size();
        if n < 0 {
            return Err(MatroidError::InvalidSize(n));
        }
        if n as usize > max_n {
            return Err(MatroidError::TooLarge { n: n as usize, max: max_n });
        }
        let n = n as usize;
        match self {
            MatroidDescriptor::Bases { order, bases, .. } => {
                let sets = bases
                    .iter()
                    .map(|b| element_set(n, b))
                    .collect::<Result<Vec<_>, _>>()?;
                let m = OrderedMatroid::from_bases(n, sets)?;
                match order {
                    None => Ok(m),
                    Some(order) => {
                        let order = order
                            .iter()
                            .map(|&e| {
                                usize::try_from(e).map_err(|_| {
                                    MatroidError::InvalidOrder(format!("{e} is not an element"))
                                })
                            })
                            .collect::<Result<Vec<Element>, _>>()?;
                        m.with_order(&order)
                    }
                }
            }
            MatroidDescriptor::Graph { vertices, edges } => {
                let vertices = usize::try_from(*vertices)
                    .map_err(|_| MatroidError::MalformedGraph(format!("{vertices} vertices")))?;
                let edges = edges
                    .iter()
                    .map(|&[a, b]| match (usize::try_from(a), usize::try_from(b)) {
                        (Ok(a), Ok(b)) => Ok((a, b)),
                        _ => Err(MatroidError::MalformedGraph(format!(
                            "edge ({a},{b}) has a negative endpoint"
                        ))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                OrderedMatroid::from_graph(vertices, &edges)
            }
            MatroidDescriptor::Uniform { k, .. } => {
                if *k < 0 || *k as usize > n {
                    return Err(MatroidError::InvalidRank { n: n as i64, k: *k });
                }
                OrderedMatroid::uniform(n, *k as usize)
            }
        }
    }

    /// Describes `m` by its ground size, order and basis list.
    pub fn from_matroid(m: &OrderedMatroid) -> Self {
        MatroidDescriptor::Bases {
            n: m.universe() as i64,
            order: (!m.is_natural_order()).then(|| m.order().iter().map(|&e| e as i64).collect()),
            bases: m
                .bases()
                .iter()
                .map(|b| b.iter().map(|e| e as i64).collect())
                .collect(),
        }
    }
}

fn element_set(n: usize, list: &[i64]) -> Result<ElementSet, MatroidError> {
    let mut s = ElementSet::EMPTY;
    for &e in list {
        if e < 1 || e as usize > n {
            return Err(MatroidError::InvalidElement(e));
        }
        if s.contains(e as usize) {
            return Err(MatroidError::DuplicateElement(e));
        }
        s.insert(e as usize);
    }
    Ok(s)
}
