//! A fixed family of small matroids used by tests, the acceptance suite and
//! the CLI. Everything random is drawn from a seeded ChaCha stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphic::UnionFind;
use crate::matroid::OrderedMatroid;
use crate::set::{ElementSet, KSubsets};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub matroid: OrderedMatroid,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, matroid: OrderedMatroid) -> Self {
        CorpusEntry {
            name: name.into(),
            matroid,
        }
    }
}

/// Rank 3 on five elements: every 3-subset except `{1,2,3}` and `{1,4,5}`.
pub fn m0() -> OrderedMatroid {
    let bad = [ElementSet::from([1, 2, 3]), ElementSet::from([1, 4, 5])];
    OrderedMatroid::from_bases(5, ElementSet::full(5).subsets_of_size(3).filter(|b| !bad.contains(b)))
        .expect("valid matroid")
}

/// An edge list realizing [`m0`] on vertices `a, b, c, d = 1, 2, 3, 4`:
/// edges `ab, ac, bc, ad, bd`.
pub const M0_GRAPH: (usize, [(usize, usize); 5]) = (4, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)]);

/// `U(n, k)` for `0 <= k <= n <= max_n`.
pub fn uniform_family(max_n: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            out.push(CorpusEntry::new(
                format!("uniform({n},{k})"),
                OrderedMatroid::uniform(n, k).expect("k <= n"),
            ));
        }
    }
    out
}

/// Connected simple graphs on exactly `v` labeled vertices, for `1 <= v <=
/// max_vertices`, as `(v, edges)` with edges in lexicographic order.
pub fn connected_simple_graphs(max_vertices: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for v in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (1..=v)
            .flat_map(|a| (a + 1..=v).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..(1 << slots.len()) {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut uf = UnionFind::new(v + 1);
            let joins = edges.iter().filter(|&&(a, b)| uf.union(a, b)).count();
            if joins + 1 == v {
                out.push((v, edges));
            }
        }
    }
    out
}

pub fn graphic_family(max_vertices: usize) -> Vec<CorpusEntry> {
    connected_simple_graphs(max_vertices)
        .into_iter()
        .map(|(v, edges)| {
            let label: Vec<String> = edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
            CorpusEntry::new(
                format!("graph(v={v};{})", label.join(",")),
                OrderedMatroid::from_graph(v, &edges).expect("valid graph"),
            )
        })
        .collect()
}

/// Rank of a matrix over `GF(p)` (rows of column-major `cols` restricted to `pick`).
fn rank_mod_p(cols: &[Vec<u32>], pick: &[usize], p: u32) -> usize {
    let rows = cols.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u32>> = (0..rows)
        .map(|r| pick.iter().map(|&c| cols[c][r]).collect())
        .collect();
    let width = pick.len();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Column matroid of a random `rows x n` matrix over `GF(p)`. Columns are
/// zero (a loop) or a copy of an earlier column (a parallel element) with
/// small probability.
pub fn random_linear_matroid(rng: &mut impl Rng, p: u32, rows: usize, n: usize) -> OrderedMatroid {
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(n);
    for i in 0..n {
        let roll: f64 = rng.gen();
        let col = if roll < 0.08 {
            vec![0; rows]
        } else if roll < 0.18 && i > 0 {
            cols[rng.gen_range(0..i)].clone()
        } else {
            (0..rows).map(|_| rng.gen_range(0..p)).collect()
        };
        cols.push(col);
    }
    let all: Vec<usize> = (0..n).collect();
    let r = rank_mod_p(&cols, &all, p);
    let bases: Vec<ElementSet> = KSubsets::new(n, r)
        .filter(|pick| rank_mod_p(&cols, pick, p) == r)
        .map(|pick| pick.iter().map(|&c| c + 1).collect())
        .collect();
    OrderedMatroid::from_bases(n, bases).expect("column matroids satisfy exchange")
}

/// `count` random column matroids over `GF(2)`, `GF(3)` or `GF(5)` with
/// `1 <= n <= max_n` elements.
pub fn random_family(count: usize, max_n: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let p = [2, 3, 5][rng.gen_range(0..3)];
            let n = rng.gen_range(1..=max_n);
            let rows = rng.gen_range(1..=n.min(4));
            let m = random_linear_matroid(&mut rng, p, rows, n);
            CorpusEntry::new(format!("random#{i}(GF({p}),n={n})"), m)
        })
        .collect()
}

/// Small multigraphs with loops, coloops and parallel classes.
pub fn multigraph_family() -> Vec<CorpusEntry> {
    type Case<'a> = (&'a str, usize, &'a [(usize, usize)]);
    let cases: [Case; 6] = [
        ("three parallel edges", 2, &[(1, 2), (1, 2), (1, 2)]),
        ("triangle + digon", 5, &[(1, 2), (2, 3), (1, 3), (4, 5), (4, 5)]),
        ("two disjoint triangles", 6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]),
        ("loop + bridge + digon", 3, &[(1, 1), (1, 2), (2, 3), (2, 3)]),
        ("bowtie", 5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]),
        ("path with a loop", 3, &[(1, 2), (2, 2), (2, 3)]),
    ];
    cases
        .iter()
        .map(|(name, v, edges)| {
            CorpusEntry::new(*name, OrderedMatroid::from_graph(*v, edges).expect("valid graph"))
        })
        .collect()
}

/// `m0`, `U(n,k)` for `n <= 6`, connected simple graphs on at most four
/// vertices, the multigraph examples, and 50 random column matroids with at
/// most seven elements.
pub fn standard_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut out = vec![CorpusEntry::new("M0", m0())];
    out.extend(uniform_family(6));
    out.extend(graphic_family(4));
    out.extend(multigraph_family());
    out.extend(random_family(50, 7, seed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|v| connected_simple_graphs(v).iter().filter(|(w, _)| *w == v).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38]);
    }

    #[test]
    fn m0_graph_realizes_m0() {
        let (v, edges) = M0_GRAPH;
        assert_eq!(OrderedMatroid::from_graph(v, &edges).unwrap(), m0());
    }

    #[test]
    fn gf2_rank() {
        // columns e1, e2, e1+e2 over GF(2)
        let cols = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(rank_mod_p(&cols, &[0, 1, 2], 2), 2);
        assert_eq!(rank_mod_p(&cols, &[0, 2], 2), 2);
        // over GF(3) the column (2, 2) is parallel to (1, 1)
        let cols = vec![vec![1, 1], vec![2, 2]];
        assert_eq!(rank_mod_p(&cols, &[0, 1], 3), 1);
    }

    #[test]
    fn random_family_is_deterministic() {
        let a: Vec<_> = random_family(10, 7, 3).into_iter().map(|e| e.matroid).collect();
        let b: Vec<_> = random_family(10, 7, 3).into_iter().map(|e| e.matroid).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|m| m.n() <= 7));
    }

    #[test]
    fn corpus_size() {
        assert_eq!(standard_corpus(0).len(), 1 + 28 + 44 + 6 + 50);
    }
}
