//! Central hyperplane arrangements over sign vectors.
//!
//! A matching arrangement assigns coordinate `N(r_i)` the coefficient
//! `(-1)^{i+1}` for each traversed edge `r_i` of a path or even cycle,
//! then sign-normalizes so the first nonzero entry is +1. A graphical
//! arrangement has one hyperplane `x_i - x_j = 0` per edge `(v_i, v_j)`.
//! Arrangements are deduplicated sets of normals, stored sorted, so
//! identity checks are sequence comparisons and all downstream output is
//! deterministic.

use crate::error::{Error, Result};
use crate::graph::{EdgeNumbering, Graph};
use crate::paths::{enumerate_even_cycles, enumerate_simple_paths, EdgeSequence};

pub use crate::paths::MAX_ENUM_EDGES;

/// Where a hyperplane came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HyperplaneSource {
    /// Path or even cycle of a matching arrangement.
    Sequence(EdgeSequence),
    /// Edge `(v_i, v_j)` of a graphical arrangement.
    Edge(usize, usize),
}

/// One hyperplane through the origin, as its sign-normalized normal
/// vector over `{-1, 0, +1}`. Distinct generating sequences that define
/// the same hyperplane are retained as extra sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Vec<i8>,
    sources: Vec<HyperplaneSource>,
}

impl Hyperplane {
    pub fn normal(&self) -> &[i8] {
        &self.normal
    }

    pub fn sources(&self) -> &[HyperplaneSource] {
        &self.sources
    }

    /// Support: coordinates with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.normal
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Flip signs so the first nonzero entry is +1.
fn normalize(mut normal: Vec<i8>) -> Vec<i8> {
    if let Some(first) = normal.iter().find(|&&c| c != 0) {
        if *first < 0 {
            for c in &mut normal {
                *c = -*c;
            }
        }
    }
    normal
}

/// Normal vector of the hyperplane generated by an edge sequence under a
/// numbering: coordinate `N(r_i)` gets `(-1)^{i+1}`, then the vector is
/// sign-normalized.
pub fn normal_vector(seq: &EdgeSequence, num: &EdgeNumbering) -> Hyperplane {
    let n = num.len();
    let mut normal = vec![0i8; n];
    for (i, &e) in seq.edges.iter().enumerate() {
        let coord = num.number_of(e) - 1;
        debug_assert_eq!(normal[coord], 0, "edge repeated in sequence");
        normal[coord] = if i % 2 == 0 { 1 } else { -1 };
    }
    Hyperplane {
        normal: normalize(normal),
        sources: vec![HyperplaneSource::Sequence(seq.clone())],
    }
}

/// Deduplicated set of hyperplanes in a fixed ambient dimension, sorted
/// lexicographically by normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dimension: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Builds from raw normals: entries must be in `{-1,0,1}` and nonzero;
    /// vectors are sign-normalized, deduplicated, and sorted.
    pub fn from_normals(dimension: usize, normals: Vec<Vec<i8>>) -> Result<Self> {
        let hyperplanes = normals
            .into_iter()
            .map(|v| {
                if v.len() != dimension {
                    return Err(Error::DimensionMismatch {
                        expected: dimension,
                        actual: v.len(),
                    });
                }
                if v.iter().all(|&c| c == 0) || v.iter().any(|&c| c.abs() > 1) {
                    return Err(Error::BadNormal);
                }
                Ok(Hyperplane {
                    normal: normalize(v),
                    sources: Vec::new(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::collect(dimension, hyperplanes))
    }

    fn collect(dimension: usize, planes: Vec<Hyperplane>) -> Self {
        let mut merged: Vec<Hyperplane> = Vec::new();
        for h in planes {
            match merged.iter_mut().find(|m| m.normal == h.normal) {
                Some(m) => m.sources.extend(h.sources),
                None => merged.push(h),
            }
        }
        merged.sort_by(|a, b| a.normal.cmp(&b.normal));
        Arrangement {
            dimension,
            hyperplanes: merged,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn normals(&self) -> impl Iterator<Item = &[i8]> {
        self.hyperplanes.iter().map(|h| h.normal())
    }

    /// Index of the hyperplane with this (already normalized) normal.
    pub fn position_of(&self, normal: &[i8]) -> Option<usize> {
        self.hyperplanes
            .binary_search_by(|h| h.normal.as_slice().cmp(normal))
            .ok()
    }

    /// `{"dimension": n, "hyperplanes": [[c1,...,cn], ...]}`, sorted.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let coords: Vec<String> = h.normal.iter().map(|c| c.to_string()).collect();
                format!("[{}]", coords.join(","))
            })
            .collect();
        format!(
            "{{\"dimension\":{},\"hyperplanes\":[{}]}}",
            self.dimension,
            rows.join(",")
        )
    }
}

fn arrangement_guard(g: &Graph, limit: usize) -> Result<()> {
    if g.edge_count() > limit {
        return Err(Error::GuardExceeded {
            what: "arrangement edge",
            limit,
            actual: g.edge_count(),
        });
    }
    Ok(())
}

/// The matching arrangement of `g` under `num`: normals of all canonical
/// simple paths and even cycles, deduplicated as a set. Dimension = |E|.
pub fn build_matching_arrangement(g: &Graph, num: &EdgeNumbering) -> Result<Arrangement> {
    build_matching_arrangement_with_limit(g, num, MAX_ENUM_EDGES)
}

/// Same with an explicit edge-count guard (raising it may be slow).
pub fn build_matching_arrangement_with_limit(
    g: &Graph,
    num: &EdgeNumbering,
    max_edges: usize,
) -> Result<Arrangement> {
    arrangement_guard(g, max_edges)?;
    let n = g.edge_count();
    if num.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: num.len(),
        });
    }
    let mut planes = Vec::new();
    for seq in enumerate_simple_paths(g)? {
        planes.push(normal_vector(&seq, num));
    }
    for seq in enumerate_even_cycles(g)? {
        planes.push(normal_vector(&seq, num));
    }
    Ok(Arrangement::collect(n, planes))
}

/// The graphical arrangement of `g`: one normal `e_i - e_j` per edge
/// `(v_i, v_j)`, in dimension |V|.
pub fn build_graphical_arrangement(g: &Graph) -> Arrangement {
    let dim = g.vertex_count();
    let planes = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut normal = vec![0i8; dim];
            normal[u - 1] = 1;
            normal[v - 1] = -1;
            Hyperplane {
                normal,
                sources: vec![HyperplaneSource::Edge(u, v)],
            }
        })
        .collect();
    Arrangement::collect(dim, planes)
}

/// Same dimension and same normalized hyperplane sets.
pub fn arrangements_identical(a: &Arrangement, b: &Arrangement) -> bool {
    a.dimension == b.dimension
        && a.len() == b.len()
        && a.normals().eq(b.normals())
}

/// Rebuilds the edge graph encoded by a matching arrangement: `n` =
/// dimension vertices, `i` adjacent to `j` iff the arrangement contains
/// the normalized form of `e_i - e_j`.
pub fn reconstruct_line_graph(a: &Arrangement) -> Graph {
    let n = a.dimension;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut probe = vec![0i8; n];
            probe[i] = 1;
            probe[j] = -1;
            if a.position_of(&probe).is_some() {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::new(n, edges).expect("pair list is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::line_graph;
    use crate::paths::SequenceKind;

    fn k3() -> Graph {
        Graph::parse("3 3\n1 2\n2 3\n3 1").unwrap()
    }

    fn star3() -> Graph {
        Graph::parse("4 3\n1 2\n1 3\n1 4").unwrap()
    }

    fn path3() -> Graph {
        Graph::parse("3 2\n1 2\n2 3").unwrap()
    }

    fn c4() -> Graph {
        Graph::parse("4 4\n1 2\n2 3\n3 4\n4 1").unwrap()
    }

    fn seq(kind: SequenceKind, edges: Vec<usize>, vertices: Vec<usize>) -> EdgeSequence {
        EdgeSequence {
            kind,
            edges,
            vertices,
        }
    }

    #[test]
    fn normal_vector_examples() {
        let id3 = EdgeNumbering::identity(3);
        let h = normal_vector(&seq(SequenceKind::Path, vec![0], vec![1, 2]), &id3);
        assert_eq!(h.normal(), &[1, 0, 0]);

        let h = normal_vector(
            &seq(SequenceKind::Path, vec![0, 1, 2], vec![1, 2, 3, 4]),
            &id3,
        );
        assert_eq!(h.normal(), &[1, -1, 1]);

        // raw (-1, 1) flips to (1, -1)
        let id2 = EdgeNumbering::identity(2);
        let h = normal_vector(&seq(SequenceKind::Path, vec![1, 0], vec![3, 2, 1]), &id2);
        assert_eq!(h.normal(), &[1, -1]);
    }

    #[test]
    fn numbering_moves_coordinates() {
        let num = EdgeNumbering::new(vec![3, 1, 2]).unwrap();
        let h = normal_vector(&seq(SequenceKind::Path, vec![0, 1], vec![1, 2, 3]), &num);
        // edge 0 -> coordinate 3, edge 1 -> coordinate 1
        assert_eq!(h.normal(), &[-1, 0, 1].map(|x: i8| -x)); // normalized (1, 0, -1)
        assert_eq!(h.normal(), &[1, 0, -1]);
    }

    #[test]
    fn matching_arrangement_of_k3() {
        let a = build_matching_arrangement(&k3(), &EdgeNumbering::identity(3)).unwrap();
        assert_eq!(a.dimension(), 3);
        let normals: Vec<&[i8]> = a.normals().collect();
        assert_eq!(
            normals,
            vec![
                &[0, 0, 1][..],
                &[0, 1, -1],
                &[0, 1, 0],
                &[1, -1, 0],
                &[1, 0, -1],
                &[1, 0, 0],
            ]
        );
    }

    #[test]
    fn matching_arrangement_of_path3() {
        let a = build_matching_arrangement(&path3(), &EdgeNumbering::identity(2)).unwrap();
        let normals: Vec<&[i8]> = a.normals().collect();
        assert_eq!(normals, vec![&[0, 1][..], &[1, -1], &[1, 0]]);
    }

    #[test]
    fn matching_arrangement_of_c4() {
        // 4 coordinates + 4 adjacent differences + 4 length-3 sums + 1 cycle
        let a = build_matching_arrangement(&c4(), &EdgeNumbering::identity(4)).unwrap();
        assert_eq!(a.len(), 13);
        assert!(a.position_of(&[1, -1, 1, -1]).is_some());
    }

    #[test]
    fn tree_arrangement_size_is_vertex_pairs() {
        let tree = Graph::parse("6 5\n1 2\n2 3\n3 4\n4 5\n5 6").unwrap();
        let a = build_matching_arrangement(&tree, &EdgeNumbering::identity(5)).unwrap();
        assert_eq!(a.len(), 6 * 5 / 2);
    }

    #[test]
    fn graphical_arrangement_examples() {
        let a = build_graphical_arrangement(&k3());
        assert_eq!(a.dimension(), 3);
        let normals: Vec<&[i8]> = a.normals().collect();
        assert_eq!(normals, vec![&[0, 1, -1][..], &[1, -1, 0], &[1, 0, -1]]);

        let single = Graph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(build_graphical_arrangement(&single).normals().next().unwrap(), &[1, -1]);

        let k4 = Graph::parse("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4").unwrap();
        let a = build_graphical_arrangement(&k4);
        assert_eq!((a.dimension(), a.len()), (4, 6));
    }

    #[test]
    fn k3_and_star_are_identical() {
        let a = build_matching_arrangement(&k3(), &EdgeNumbering::identity(3)).unwrap();
        let b = build_matching_arrangement(&star3(), &EdgeNumbering::identity(3)).unwrap();
        assert!(arrangements_identical(&a, &b));
        // any numbering of the star gives the same set
        let c = build_matching_arrangement(&star3(), &EdgeNumbering::new(vec![2, 3, 1]).unwrap())
            .unwrap();
        assert!(arrangements_identical(&a, &c));
    }

    #[test]
    fn path3_identical_under_both_numberings() {
        let a = build_matching_arrangement(&path3(), &EdgeNumbering::identity(2)).unwrap();
        let b = build_matching_arrangement(&path3(), &EdgeNumbering::new(vec![2, 1]).unwrap())
            .unwrap();
        assert!(arrangements_identical(&a, &b));
    }

    #[test]
    fn union_pairs_are_identical() {
        use crate::graph::disjoint_union;
        let g1 = disjoint_union(&k3(), &k3());
        let g2 = disjoint_union(&k3(), &star3());
        let a = build_matching_arrangement(&g1, &EdgeNumbering::identity(6)).unwrap();
        let b = build_matching_arrangement(&g2, &EdgeNumbering::identity(6)).unwrap();
        assert!(arrangements_identical(&a, &b));
        assert!(!crate::graph::is_isomorphic(&g1, &g2).unwrap());
    }

    #[test]
    fn reconstruction_examples() {
        let a = build_matching_arrangement(&k3(), &EdgeNumbering::identity(3)).unwrap();
        assert_eq!(reconstruct_line_graph(&a), Graph::complete(3));

        let a = build_matching_arrangement(&path3(), &EdgeNumbering::identity(2)).unwrap();
        assert_eq!(reconstruct_line_graph(&a), Graph::new(2, vec![(1, 2)]).unwrap());

        let single = Graph::new(2, vec![(1, 2)]).unwrap();
        let a = build_matching_arrangement(&single, &EdgeNumbering::identity(1)).unwrap();
        assert_eq!(reconstruct_line_graph(&a), Graph::new(1, vec![]).unwrap());
    }

    #[test]
    fn reconstruction_matches_line_graph_exactly_under_identity() {
        for g in [k3(), star3(), path3(), c4()] {
            let num = EdgeNumbering::identity(g.edge_count());
            let a = build_matching_arrangement(&g, &num).unwrap();
            assert_eq!(reconstruct_line_graph(&a), line_graph(&g));
        }
    }

    #[test]
    fn sign_balance_by_source_parity() {
        let a = build_matching_arrangement(&c4(), &EdgeNumbering::identity(4)).unwrap();
        for h in a.hyperplanes() {
            let plus = h.normal().iter().filter(|&&c| c == 1).count() as i64;
            let minus = h.normal().iter().filter(|&&c| c == -1).count() as i64;
            let len = plus + minus;
            if len % 2 == 0 {
                assert_eq!(plus, minus);
            } else {
                assert_eq!((plus - minus).abs(), 1);
            }
        }
    }

    #[test]
    fn sources_merge_on_dedup() {
        // in K3 each difference hyperplane comes from exactly one canonical
        // path, but coordinate hyperplanes keep one source each
        let a = build_matching_arrangement(&k3(), &EdgeNumbering::identity(3)).unwrap();
        for h in a.hyperplanes() {
            assert_eq!(h.sources().len(), 1);
            assert_eq!(
                h.support().len(),
                match &h.sources()[0] {
                    HyperplaneSource::Sequence(s) => s.edges.len(),
                    _ => unreachable!(),
                }
            );
        }
    }

    #[test]
    fn from_normals_validates() {
        assert!(Arrangement::from_normals(2, vec![vec![0, 0]]).is_err());
        assert!(Arrangement::from_normals(2, vec![vec![2, 0]]).is_err());
        assert!(Arrangement::from_normals(2, vec![vec![1, 0, 0]]).is_err());
        let a = Arrangement::from_normals(2, vec![vec![-1, 1], vec![1, -1], vec![1, 0]]).unwrap();
        assert_eq!(a.len(), 2); // (-1,1) normalizes onto (1,-1)
    }

    #[test]
    fn json_export_is_stable() {
        let a = build_matching_arrangement(&path3(), &EdgeNumbering::identity(2)).unwrap();
        assert_eq!(
            a.to_json(),
            "{\"dimension\":2,\"hyperplanes\":[[0,1],[1,-1],[1,0]]}"
        );
    }
}
