//! Cycle matroids of multigraphs.

use crate::error::MatroidError;
use crate::matroid::{OrderedMatroid, MAX_GROUND};
use crate::set::ElementSet;

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl OrderedMatroid {
    /// Cycle matroid of a multigraph on vertices `1..=vertex_count`. Edge `k`
    /// of the list (0-based) becomes element `k + 1`. Self-loops are matroid
    /// loops; parallel edges are parallel elements. Bases are the edge sets of
    /// maximal spanning forests.
    pub fn from_graph(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, MatroidError> {
        let n = edges.len();
        if n > MAX_GROUND {
            return Err(MatroidError::TooLarge { n, max: MAX_GROUND });
        }
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(MatroidError::MalformedGraph(format!(
                    "edge ({u},{v}) has an endpoint outside 1..={vertex_count}"
                )));
            }
        }
        let mut uf = UnionFind::new(vertex_count + 1);
        let mut rank = 0;
        for &(u, v) in edges {
            if uf.union(u, v) {
                rank += 1;
            }
        }
        let ground = ElementSet::full(n);
        let bases = ground
            .subsets_of_size(rank)
            .filter(|s| {
                let mut uf = UnionFind::new(vertex_count + 1);
                s.iter().all(|e| {
                    let (u, v) = edges[e - 1];
                    uf.union(u, v)
                })
            })
            .collect();
        Self::assemble(n, ground, (1..=n).collect(), bases)
    }
}
