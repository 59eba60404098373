use std::fmt;

use crate::error::ComplexError;
use crate::set::ElementSet;

use super::VertexLabels;

/// A simplicial complex given by its facets.
///
/// Vertices are slots of an [`ElementSet`]; `labels` says how to print them.
/// `ground` is the declared vertex set, which may contain vertices lying in no
/// facet (loops of the complex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: VertexLabels,
    ground: ElementSet,
    facets: Vec<ElementSet>,
}

impl SimplicialComplex {
    /// The facet list must be a nonempty antichain. `ground` is widened to
    /// cover every facet.
    pub fn from_facets(
        labels: VertexLabels,
        ground: ElementSet,
        facets: Vec<ElementSet>,
    ) -> Result<Self, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::NoFacets);
        }
        for (i, &a) in facets.iter().enumerate() {
            for (j, &b) in facets.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(ComplexError::NotAnAntichain(a, b));
                }
            }
        }
        let ground = facets.iter().fold(ground, |acc, f| acc | *f);
        Ok(SimplicialComplex {
            labels,
            ground,
            facets,
        })
    }

    pub fn labels(&self) -> VertexLabels {
        self.labels
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn facets(&self) -> &[ElementSet] {
        &self.facets
    }

    /// Vertices lying in at least one facet.
    pub fn vertices(&self) -> ElementSet {
        self.facets.iter().fold(ElementSet::EMPTY, |acc, f| acc | *f)
    }

    /// Ground vertices `v` with `{v}` not a face.
    pub fn loops(&self) -> ElementSet {
        self.ground - self.vertices()
    }

    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn is_face(&self, s: ElementSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Vertices lying in every facet.
    pub fn cone_points(&self) -> ElementSet {
        self.facets.iter().fold(self.ground, |acc, f| acc & *f)
    }

    /// Removes the cone points from every facet and from the ground set.
    pub fn without_cone_points(&self) -> SimplicialComplex {
        let cone = self.cone_points();
        SimplicialComplex {
            labels: self.labels,
            ground: self.ground - cone,
            facets: self.facets.iter().map(|f| *f - cone).collect(),
        }
    }

    /// Calls `visit` once for every face, the empty face included.
    pub fn for_each_face(&self, mut visit: impl FnMut(ElementSet)) {
        let verts = self.vertices().to_vec();
        let all: Vec<usize> = (0..self.facets.len()).collect();
        face_rec(&self.facets, &verts, ElementSet::EMPTY, 0, &all, &mut visit);
    }

    pub fn faces(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        self.for_each_face(|f| out.push(f));
        out.sort_by_key(|f| (f.len(), f.to_vec()));
        out
    }

    /// `f[i]` = number of faces with `i` vertices; `f[0] = 1` counts the empty face.
    ///
    /// Faces are enumerated on the link of the cone points; every such face
    /// combines freely with any subset of the cone points.
    pub fn f_vector(&self) -> Vec<u64> {
        let cone = self.cone_points();
        let base = self.without_cone_points();
        let mut link_f = vec![0u64; (base.dimension() + 2) as usize];
        base.for_each_face(|f| link_f[f.len()] += 1);
        let c = cone.len();
        let mut out = vec![0u64; link_f.len() + c];
        for (i, &fi) in link_f.iter().enumerate() {
            for t in 0..=c {
                out[i + t] += fi * binomial(c as u64, t as u64);
            }
        }
        out
    }

    /// Solves `sum f_i (x-1)^(d-i) = sum h_i x^(d-i)` where `d` is the facet size.
    pub fn h_vector(&self) -> Result<Vec<i64>, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NonPure);
        }
        Ok(h_from_f(&self.f_vector()))
    }

    /// `sum_{i>=1} (-1)^(i-1) f_i`: the ordinary Euler characteristic, which
    /// ignores the empty face.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &fi)| if i % 2 == 1 { fi as i64 } else { -(fi as i64) })
            .sum()
    }

    /// Reduced Euler characteristic, `χ - 1` (the empty face counts as dimension -1).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.euler_characteristic() - 1
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    ///
    /// A cone point never belongs to a minimal non-face, so the search runs on
    /// the link of the cone points: each candidate is a face plus one larger
    /// vertex, kept when dropping any single vertex leaves a face.
    pub fn minimal_nonfaces(&self) -> Vec<ElementSet> {
        let base = self.without_cone_points();
        let ground = base.ground.to_vec();
        let mut out = Vec::new();
        base.for_each_face(|face| {
            let top = face.last().unwrap_or(0);
            for &v in ground.iter().filter(|&&v| v > top) {
                let s = face.with(v);
                if !base.is_face(s) && s.iter().all(|u| base.is_face(s.without(u))) {
                    out.push(s);
                }
            }
        });
        out.sort_by_key(|s| s.to_vec());
        out
    }
}

fn face_rec(
    facets: &[ElementSet],
    verts: &[usize],
    current: ElementSet,
    start: usize,
    containing: &[usize],
    visit: &mut impl FnMut(ElementSet),
) {
    visit(current);
    for t in start..verts.len() {
        let v = verts[t];
        let next: Vec<usize> = containing
            .iter()
            .copied()
            .filter(|&i| facets[i].contains(v))
            .collect();
        if !next.is_empty() {
            face_rec(facets, verts, current.with(v), t + 1, &next, visit);
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_i` with `d = f.len() - 1`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let d = f.len() - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let term = binomial((d - i) as u64, (k - i) as u64) as i64 * f[i] as i64;
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .facets
            .iter()
            .map(|facet| {
                let vs: Vec<String> = facet.iter().map(|v| self.labels.label(v).to_string()).collect();
                format!("[{}]", vs.join(","))
            })
            .collect();
        write!(f, "{{{}}}", rendered.join(", "))
    }
}
