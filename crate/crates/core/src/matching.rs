//! Matchings, brute-force maximum-weight matching, sign vectors of weight
//! points, and the region-constancy probe.
//!
//! The brute force over all matchings is deliberate: at most 2^12 edge
//! subsets, and the enumeration itself is the oracle everything else is
//! checked against. The probe samples generic integer weight points,
//! groups them by the sign vector they induce on the arrangement, and
//! flags two kinds of failures: two points in one region with different
//! maximum matchings, and any generic point whose maximum is not unique.
//! A correct construction reports zero of both.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrangement::{build_matching_arrangement, Arrangement};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{EdgeNumbering, Graph};
use crate::linalg::{Rat, RatVector, Sign};
use crate::paths::SequenceKind;

pub const MAX_MATCHING_EDGES: usize = 12;
pub const SAMPLE_COORD_BOUND: i64 = 1_000_000;
pub const MAX_SAMPLE_ATTEMPTS: usize = 10_000;

/// Set of pairwise non-adjacent edges, stored as sorted edge indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    /// Validates that the edges exist in `g` and share no vertex.
    pub fn new(g: &Graph, mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        for &e in &edges {
            if e >= g.edge_count() {
                return Err(Error::HyperplaneIndex {
                    index: e,
                    len: g.edge_count(),
                });
            }
        }
        for (i, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[i + 1..] {
                let (a, b) = g.edge(e1);
                let (c, d) = g.edge(e2);
                if a == c || a == d || b == c || b == d {
                    return Err(Error::NotAMatching { e1, e2 });
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// Weight vector: weight `a_i` on the edge at position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoint {
    weights: RatVector,
}

impl WeightPoint {
    pub fn new(weights: RatVector) -> Self {
        WeightPoint { weights }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        WeightPoint {
            weights: RatVector::from_integers(values),
        }
    }

    pub fn weights(&self) -> &RatVector {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }
}

/// One sign per hyperplane of a fixed arrangement, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector {
    signs: Vec<Sign>,
}

impl SignVector {
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn negate(&self) -> SignVector {
        SignVector {
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }
}

impl std::fmt::Display for SignVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Connected piece of the symmetric difference of two matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDiffComponent {
    pub kind: SequenceKind,
    /// Edge indices in traversal order; membership alternates between the
    /// two source matchings.
    pub edges: Vec<usize>,
}

/// All matchings of `g`, including the empty one.
pub fn enumerate_matchings(g: &Graph) -> Result<Vec<Matching>> {
    enumerate_matchings_with_limit(g, MAX_MATCHING_EDGES)
}

/// Same with an explicit edge-count guard.
pub fn enumerate_matchings_with_limit(g: &Graph, max_edges: usize) -> Result<Vec<Matching>> {
    if g.edge_count() > max_edges {
        return Err(Error::GuardExceeded {
            what: "matching edge",
            limit: max_edges,
            actual: g.edge_count(),
        });
    }
    let edges = g.edges();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn extend(
        from: usize,
        edges: &[(usize, usize)],
        used: &mut u64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Matching>,
    ) {
        out.push(Matching {
            edges: chosen.clone(),
        });
        for e in from..edges.len() {
            let (u, v) = edges[e];
            let mask = (1u64 << u) | (1u64 << v);
            if *used & mask != 0 {
                continue;
            }
            *used |= mask;
            chosen.push(e);
            extend(e + 1, edges, used, chosen, out);
            chosen.pop();
            *used &= !mask;
        }
    }

    let mut used = 0u64;
    extend(0, edges, &mut used, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn weight_of(m: &Matching, w: &WeightPoint) -> Rat {
    m.edges
        .iter()
        .map(|&e| w.weights.entries()[e].clone())
        .sum()
}

/// The full argmax set over all matchings; ties are preserved.
pub fn max_weight_matchings(g: &Graph, w: &WeightPoint) -> Result<Vec<Matching>> {
    if w.dim() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: g.edge_count(),
            actual: w.dim(),
        });
    }
    let all = enumerate_matchings(g)?;
    let mut best: Option<Rat> = None;
    let mut argmax: Vec<Matching> = Vec::new();
    for m in all {
        let score = weight_of(&m, w);
        match &best {
            Some(b) if score < *b => {}
            Some(b) if score == *b => argmax.push(m),
            _ => {
                best = Some(score);
                argmax = vec![m];
            }
        }
    }
    argmax.sort();
    Ok(argmax)
}

/// Sign of `<normal, p>` for every hyperplane in sorted order; fails with
/// the offending index when `p` lies on a hyperplane.
pub fn sign_vector(a: &Arrangement, p: &WeightPoint) -> Result<SignVector> {
    if p.dim() != a.dimension() {
        return Err(Error::DimensionMismatch {
            expected: a.dimension(),
            actual: p.dim(),
        });
    }
    let mut signs = Vec::with_capacity(a.len());
    for (index, h) in a.hyperplanes().iter().enumerate() {
        let value: Rat = h
            .normal()
            .iter()
            .zip(p.weights.entries())
            .map(|(&c, w)| w * Rat::from(num_bigint::BigInt::from(c)))
            .sum();
        match Sign::of_rat(&value) {
            Some(s) => signs.push(s),
            None => return Err(Error::OnHyperplane { index }),
        }
    }
    Ok(SignVector { signs })
}

/// Integer point in `[-10^6, 10^6]^n` lying on no hyperplane, redrawn on
/// rejection; deterministic per seed.
pub fn sample_generic_point(a: &Arrangement, rng_seed: u64) -> Result<WeightPoint> {
    let n = a.dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for _ in 0..MAX_SAMPLE_ATTEMPTS {
        let coords: Vec<i64> = (0..n)
            .map(|_| rng.gen_range(-SAMPLE_COORD_BOUND..=SAMPLE_COORD_BOUND))
            .collect();
        let generic = a.normals().all(|normal| {
            let dot: i64 = normal
                .iter()
                .zip(&coords)
                .map(|(&c, &x)| c as i64 * x)
                .sum();
            dot != 0
        });
        if generic {
            return Ok(WeightPoint::from_integers(&coords));
        }
    }
    Err(Error::SamplingExhausted {
        attempts: MAX_SAMPLE_ATTEMPTS,
    })
}

/// Connected components of the symmetric difference of two matchings of
/// `g`, each a simple path or an even cycle with edges alternating
/// between the sources. Empty when the matchings agree.
pub fn symdiff_decompose(m1: &Matching, m2: &Matching, g: &Graph) -> Vec<SymDiffComponent> {
    let mut sym: Vec<usize> = m1
        .edges
        .iter()
        .filter(|e| !m2.contains(**e))
        .chain(m2.edges.iter().filter(|e| !m1.contains(**e)))
        .copied()
        .collect();
    sym.sort_unstable();

    // degree <= 2 everywhere, because each matching touches a vertex once
    let mut adj: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &e in &sym {
        let (u, v) = g.edge(e);
        adj.entry(u).or_default().push((v, e));
        adj.entry(v).or_default().push((u, e));
    }

    let mut used = vec![false; g.edge_count()];
    let mut components = Vec::new();
    // paths first: walk from each degree-1 vertex
    let endpoints: Vec<usize> = adj
        .iter()
        .filter(|(_, n)| n.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    for start in endpoints {
        let (first, e0) = adj[&start][0];
        if used[e0] {
            continue;
        }
        let mut edges = vec![e0];
        used[e0] = true;
        let (mut prev, mut at) = (start, first);
        while let Some(&(next, e)) = adj[&at].iter().find(|&&(w, e)| !used[e] && w != prev) {
            used[e] = true;
            edges.push(e);
            prev = at;
            at = next;
        }
        components.push(SymDiffComponent {
            kind: SequenceKind::Path,
            edges,
        });
    }
    // remaining edges form cycles; start each at its smallest vertex,
    // stepping along the smaller edge index
    for (&start, neighbors) in &adj {
        let Some(&(first, e0)) = neighbors.iter().filter(|&&(_, e)| !used[e]).min_by_key(|&&(_, e)| e)
        else {
            continue;
        };
        let mut edges = vec![e0];
        used[e0] = true;
        let (mut prev, mut at) = (start, first);
        while at != start {
            let &(next, e) = adj[&at]
                .iter()
                .find(|&&(w, e)| !used[e] && w != prev)
                .expect("cycle continues");
            used[e] = true;
            edges.push(e);
            prev = at;
            at = next;
        }
        components.push(SymDiffComponent {
            kind: SequenceKind::EvenCycle,
            edges,
        });
    }
    components.sort_by_key(|c| c.edges.iter().copied().min());
    components
}

/// Probe report; a correct construction yields zero violations of both
/// kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionReport {
    pub sign_vectors_seen: usize,
    pub constancy_violations: usize,
    pub uniqueness_violations: usize,
    pub samples: usize,
    pub seed: u64,
}

impl RegionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn derive_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 over (seed, index) so samples are independent of order
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Samples generic weight points, groups them by sign vector, and checks
/// that each group sees exactly one maximum matching and each point a
/// unique maximum.
pub fn probe_theorem2(
    g: &Graph,
    num: &EdgeNumbering,
    samples: usize,
    rng_seed: u64,
) -> Result<RegionReport> {
    let a = build_matching_arrangement(g, num)?;
    let per_sample: Vec<Result<(SignVector, Vec<Matching>)>> = exec::map_range(samples, |i| {
        let p = sample_generic_point(&a, derive_seed(rng_seed, i as u64))?;
        let sv = sign_vector(&a, &p)?;
        let argmax = max_weight_matchings(g, &p)?;
        Ok((sv, argmax))
    });

    let mut groups: BTreeMap<SignVector, Vec<Vec<Matching>>> = BTreeMap::new();
    let mut uniqueness_violations = 0usize;
    for r in per_sample {
        let (sv, argmax) = r?;
        if argmax.len() > 1 {
            uniqueness_violations += 1;
        }
        groups.entry(sv).or_default().push(argmax);
    }
    let mut constancy_violations = 0usize;
    for argmaxes in groups.values() {
        let mut distinct = argmaxes.clone();
        distinct.sort();
        distinct.dedup();
        constancy_violations += distinct.len() - 1;
    }
    Ok(RegionReport {
        sign_vectors_seen: groups.len(),
        constancy_violations,
        uniqueness_violations,
        samples,
        seed: rng_seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn k3() -> Graph {
        Graph::parse("3 3\n1 2\n2 3\n3 1").unwrap()
    }

    fn c4() -> Graph {
        Graph::parse("4 4\n1 2\n2 3\n3 4\n4 1").unwrap()
    }

    fn path3() -> Graph {
        Graph::parse("3 2\n1 2\n2 3").unwrap()
    }

    fn ma(g: &Graph) -> Arrangement {
        build_matching_arrangement(g, &EdgeNumbering::identity(g.edge_count())).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let ms = enumerate_matchings(&k3()).unwrap();
        assert_eq!(ms.len(), 4);
        assert_eq!(ms[0], Matching::empty());

        let single = Graph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(enumerate_matchings(&single).unwrap().len(), 2);

        let ms = enumerate_matchings(&c4()).unwrap();
        assert_eq!(ms.len(), 7);
        assert!(ms.iter().any(|m| m.edges() == [0, 2]));
        assert!(ms.iter().any(|m| m.edges() == [1, 3]));
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::new(&k3(), vec![0, 1]).is_err());
        assert!(Matching::new(&c4(), vec![0, 2]).is_ok());
        assert!(Matching::new(&k3(), vec![9]).is_err());
    }

    #[test]
    fn max_weight_examples() {
        let w = WeightPoint::from_integers(&[3, 1, 1]);
        let best = max_weight_matchings(&k3(), &w).unwrap();
        assert_eq!(best.len(), 1);
        assert_eq!(best[0].edges(), [0]);

        let w = WeightPoint::from_integers(&[-1, -2, -3]);
        let best = max_weight_matchings(&k3(), &w).unwrap();
        assert_eq!(best, vec![Matching::empty()]);

        let w = WeightPoint::from_integers(&[1, 1, 1]);
        let best = max_weight_matchings(&k3(), &w).unwrap();
        assert_eq!(best.len(), 3);
    }

    #[test]
    fn sign_vector_examples() {
        let a = ma(&path3());
        // sorted hyperplanes: x2, x1-x2, x1
        let sv = sign_vector(&a, &WeightPoint::from_integers(&[2, 1])).unwrap();
        assert_eq!(sv.signs(), [Sign::Plus, Sign::Plus, Sign::Plus]);

        let sv = sign_vector(&a, &WeightPoint::from_integers(&[1, 2])).unwrap();
        assert_eq!(sv.signs(), [Sign::Plus, Sign::Minus, Sign::Plus]);

        let err = sign_vector(&a, &WeightPoint::from_integers(&[1, 1])).unwrap_err();
        let diff = a.position_of(&[1, -1]).unwrap();
        assert_eq!(err, Error::OnHyperplane { index: diff });
    }

    #[test]
    fn sign_vector_antipodality() {
        let a = ma(&c4());
        let p = WeightPoint::from_integers(&[5, -3, 2, 11]);
        let q = WeightPoint::from_integers(&[-5, 3, -2, -11]);
        let sp = sign_vector(&a, &p).unwrap();
        let sq = sign_vector(&a, &q).unwrap();
        assert_eq!(sp.negate(), sq);
    }

    #[test]
    fn sampling_is_deterministic_and_generic() {
        let a = ma(&k3());
        let p = sample_generic_point(&a, 7).unwrap();
        let q = sample_generic_point(&a, 7).unwrap();
        assert_eq!(p, q);
        assert!(sign_vector(&a, &p).is_ok());
        // empty arrangement accepts the first draw
        let empty = Arrangement::from_normals(2, vec![]).unwrap();
        assert!(sample_generic_point(&empty, 0).is_ok());
    }

    #[test]
    fn symdiff_examples() {
        let g = c4();
        let m1 = Matching::new(&g, vec![0, 2]).unwrap();
        let m2 = Matching::new(&g, vec![1, 3]).unwrap();
        let comps = symdiff_decompose(&m1, &m2, &g);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, SequenceKind::EvenCycle);
        assert_eq!(comps[0].edges.len(), 4);

        assert!(symdiff_decompose(&m1, &m1, &g).is_empty());

        let g = path3();
        let m1 = Matching::new(&g, vec![0]).unwrap();
        let m2 = Matching::new(&g, vec![1]).unwrap();
        let comps = symdiff_decompose(&m1, &m2, &g);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, SequenceKind::Path);
        assert_eq!(comps[0].edges, vec![0, 1]);
    }

    #[test]
    fn symdiff_components_alternate() {
        // every component alternates matching membership, no odd cycles
        let g = Graph::parse("6 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1").unwrap();
        let ms = enumerate_matchings(&g).unwrap();
        for m1 in &ms {
            for m2 in &ms {
                for c in symdiff_decompose(m1, m2, &g) {
                    if c.kind == SequenceKind::EvenCycle {
                        assert_eq!(c.edges.len() % 2, 0);
                    }
                    for pair in c.edges.windows(2) {
                        assert_ne!(m1.contains(pair[0]), m1.contains(pair[1]));
                        assert_ne!(m2.contains(pair[0]), m2.contains(pair[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn swap_delta_matches_inner_product() {
        // swapping a component's edges changes the weight by the
        // component's alternating sum, i.e. by the hyperplane inner product
        let g = c4();
        let p = WeightPoint::from_integers(&[7, -2, 5, 3]);
        let m1 = Matching::new(&g, vec![0, 2]).unwrap();
        let m2 = Matching::new(&g, vec![1, 3]).unwrap();
        let comps = symdiff_decompose(&m1, &m2, &g);
        let c = &comps[0];
        let delta: Rat = c
            .edges
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let w = p.weights().entries()[e].clone();
                if i % 2 == 0 {
                    w
                } else {
                    -w
                }
            })
            .sum();
        let w1 = weight_of(&m1, &p);
        let w2 = weight_of(&m2, &p);
        let diff = w1 - w2;
        assert!(delta == diff || delta == -diff.clone(), "{delta} vs {diff}");
        assert_eq!(
            delta.numer().magnitude(),
            diff.numer().magnitude(),
        );
    }

    #[test]
    fn probe_k3() {
        let report = probe_theorem2(&k3(), &EdgeNumbering::identity(3), 200, 7).unwrap();
        assert_eq!(report.constancy_violations, 0);
        assert_eq!(report.uniqueness_violations, 0);
        assert!(report.sign_vectors_seen <= 24);
        assert_eq!(report.samples, 200);
    }

    #[test]
    fn probe_single_edge_sees_both_regions() {
        let g = Graph::new(2, vec![(1, 2)]).unwrap();
        let report = probe_theorem2(&g, &EdgeNumbering::identity(1), 50, 3).unwrap();
        assert_eq!(report.sign_vectors_seen, 2);
        assert_eq!(report.constancy_violations, 0);
        assert_eq!(report.uniqueness_violations, 0);
        // argmax on the two sides: {e1} and the empty matching
        let a = ma(&g);
        let plus = max_weight_matchings(&g, &WeightPoint::from_integers(&[5])).unwrap();
        let minus = max_weight_matchings(&g, &WeightPoint::from_integers(&[-5])).unwrap();
        assert_eq!(plus[0].edges(), [0]);
        assert_eq!(minus[0], Matching::empty());
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn report_json_schema() {
        let r = RegionReport {
            sign_vectors_seen: 4,
            constancy_violations: 0,
            uniqueness_violations: 0,
            samples: 10,
            seed: 7,
        };
        assert_eq!(
            r.to_json(),
            "{\"sign_vectors_seen\":4,\"constancy_violations\":0,\"uniqueness_violations\":0,\"samples\":10,\"seed\":7}"
        );
    }

    #[test]
    fn weight_delta_rat_sum() {
        let w = WeightPoint::new(RatVector::new(vec![
            Rat::new(BigInt::from(1), BigInt::from(2)),
            Rat::new(BigInt::from(1), BigInt::from(3)),
        ]));
        let g = Graph::parse("4 2\n1 2\n3 4").unwrap();
        let m = Matching::new(&g, vec![0, 1]).unwrap();
        assert_eq!(weight_of(&m, &w), Rat::new(BigInt::from(5), BigInt::from(6)));
    }
}
