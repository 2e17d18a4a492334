//! Theorem-level verification harness: instance generators, independent
//! counting oracles, and one entry point per claimed identity.
//!
//! Identities are checked extensionally — conclusions are evaluated on
//! concrete instances through the public operations, never by replaying
//! proof constructions. The finite-field point count and the exact
//! Fourier–Motzkin region enumeration are deliberately separate
//! computation routes from the lattice, so agreement is evidence rather
//! than tautology.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::{
    arrangements_identical, build_graphical_arrangement, build_matching_arrangement,
    reconstruct_line_graph, Arrangement,
};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{
    chromatic_polynomial, connected_components, count_acyclic_orientations, disjoint_union,
    is_isomorphic, line_graph, EdgeNumbering, Graph,
};
use crate::lattice::{build_flat_lattice, characteristic_polynomial};
use crate::linalg::{fm_feasible, RatVector, Sign, StrictSystem};
use crate::matching::probe_theorem2;
use crate::poly::IntPolynomial;

pub const MIN_TREE_VERTICES: usize = 2;
pub const MAX_TREE_VERTICES: usize = 8;
pub const MAX_GRAPH_GEN_VERTICES: usize = 5;
pub const MAX_FF_DIMENSION: usize = 4;
pub const MAX_REGION_DIMENSION: usize = 4;
pub const MAX_REGION_HYPERPLANES: usize = 14;

/// One representative per isomorphism class of trees on `v` vertices,
/// for `2 <= v <= 8`. Labeled trees come from Prüfer sequences and are
/// deduplicated by a canonical rooted form at the tree centers.
pub fn all_trees(v: usize) -> Result<Vec<Graph>> {
    if !(MIN_TREE_VERTICES..=MAX_TREE_VERTICES).contains(&v) {
        return Err(Error::GuardExceeded {
            what: "tree generator vertex",
            limit: MAX_TREE_VERTICES,
            actual: v,
        });
    }
    if v == 2 {
        return Ok(vec![Graph::new(2, vec![(1, 2)])?]);
    }
    let mut by_cert: HashMap<String, Graph> = HashMap::new();
    let len = v - 2;
    let mut seq = vec![1usize; len];
    loop {
        let tree = prufer_decode(v, &seq);
        by_cert
            .entry(tree_certificate(&tree))
            .or_insert(tree);
        // odometer over {1..v}^(v-2)
        let mut pos = 0;
        loop {
            if pos == len {
                let mut reps: Vec<(String, Graph)> = by_cert.into_iter().collect();
                reps.sort_by(|a, b| a.0.cmp(&b.0));
                return Ok(reps.into_iter().map(|(_, g)| g).collect());
            }
            if seq[pos] < v {
                seq[pos] += 1;
                break;
            }
            seq[pos] = 1;
            pos += 1;
        }
    }
}

fn prufer_decode(v: usize, seq: &[usize]) -> Graph {
    let mut deg = vec![1usize; v + 1];
    for &x in seq {
        deg[x] += 1;
    }
    let mut edges = Vec::with_capacity(v - 1);
    for &x in seq {
        let leaf = (1..=v).find(|&j| deg[j] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        deg[leaf] = 0;
        deg[x] -= 1;
    }
    let rest: Vec<usize> = (1..=v).filter(|&j| deg[j] == 1).collect();
    edges.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
    edges.sort_unstable();
    Graph::new(v, edges).expect("Prüfer decode yields a tree")
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let v = g.vertex_count();
    let adj = g.adjacency();
    let mut deg: Vec<usize> = (0..=v).map(|x| adj[x].len()).collect();
    let mut removed = vec![false; v + 1];
    let mut remaining = v;
    let mut layer: Vec<usize> = (1..=v).filter(|&x| deg[x] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            if removed[leaf] {
                continue;
            }
            removed[leaf] = true;
            remaining -= 1;
            for &(w, _) in &adj[leaf] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (1..=v).filter(|&x| !removed[x]).collect()
}

fn rooted_form(adj: &[Vec<(usize, usize)>], at: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[at]
        .iter()
        .filter(|&&(w, _)| w != parent)
        .map(|&(w, _)| rooted_form(adj, w, at))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

fn tree_certificate(g: &Graph) -> String {
    let adj = g.adjacency();
    tree_centers(g)
        .into_iter()
        .map(|c| rooted_form(&adj, c, 0))
        .min()
        .expect("a tree has a center")
}

/// One representative per isomorphism class of simple graphs on exactly
/// `v` vertices, `v <= 5`, by brute force over all edge subsets.
pub fn all_graphs(v: usize) -> Result<Vec<Graph>> {
    if v == 0 || v > MAX_GRAPH_GEN_VERTICES {
        return Err(Error::GuardExceeded {
            what: "graph generator vertex",
            limit: MAX_GRAPH_GEN_VERTICES,
            actual: v,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..=v)
        .flat_map(|a| ((a + 1)..=v).map(move |b| (a, b)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(v, edges)?;
        let mut fresh = true;
        for r in &reps {
            if is_isomorphic(r, &g)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(g);
        }
    }
    Ok(reps)
}

/// Uniform random simple graph with exactly `e` edges, deterministic per
/// seed.
pub fn random_graph(v: usize, e: usize, seed: u64) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = (1..=v)
        .flat_map(|a| ((a + 1)..=v).map(move |b| (a, b)))
        .collect();
    if e > pairs.len() {
        return Err(Error::InfeasibleEdgeCount { v, e });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    let mut edges: Vec<(usize, usize)> = pairs.into_iter().take(e).collect();
    edges.sort_unstable();
    Graph::new(v, edges)
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Counts points of `F_q^dim` lying on none of the hyperplanes, by
/// exhaustive enumeration. For primes exceeding every minor of the normal
/// matrix (q > 16 covers sign matrices up to 4x4) this count equals the
/// characteristic polynomial evaluated at q, which makes it an oracle
/// independent of the lattice computation.
pub fn finite_field_count(a: &Arrangement, q: u64) -> Result<u64> {
    if a.dimension() > MAX_FF_DIMENSION {
        return Err(Error::GuardExceeded {
            what: "finite-field dimension",
            limit: MAX_FF_DIMENSION,
            actual: a.dimension(),
        });
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let dim = a.dimension();
    let planes: Vec<Vec<i64>> = a
        .normals()
        .map(|n| n.iter().map(|&c| c as i64).collect())
        .collect();
    let q = q as i64;
    let off_all = |x: &[i64]| -> bool {
        planes.iter().all(|p| {
            let s: i64 = p.iter().zip(x).map(|(c, v)| c * v).sum();
            s.rem_euclid(q) != 0
        })
    };
    let count = match dim {
        0 => 1,
        1 => exec::sum_range_u64(q as usize, |x0| off_all(&[x0 as i64]) as u64),
        2 => exec::sum_range_u64(q as usize, |x0| {
            (0..q).map(|x1| off_all(&[x0 as i64, x1]) as u64).sum()
        }),
        3 => exec::sum_range_u64(q as usize, |x0| {
            let mut c = 0;
            for x1 in 0..q {
                for x2 in 0..q {
                    c += off_all(&[x0 as i64, x1, x2]) as u64;
                }
            }
            c
        }),
        _ => exec::sum_range_u64(q as usize, |x0| {
            let mut c = 0;
            for x1 in 0..q {
                for x2 in 0..q {
                    for x3 in 0..q {
                        c += off_all(&[x0 as i64, x1, x2, x3]) as u64;
                    }
                }
            }
            c
        }),
    };
    Ok(count)
}

/// Counts regions exactly: the number of full sign vectors whose strict
/// system is feasible. Independent of the lattice route.
pub fn enumerate_regions_exact(a: &Arrangement) -> Result<u64> {
    if a.dimension() > MAX_REGION_DIMENSION {
        return Err(Error::GuardExceeded {
            what: "region-enumeration dimension",
            limit: MAX_REGION_DIMENSION,
            actual: a.dimension(),
        });
    }
    if a.len() > MAX_REGION_HYPERPLANES {
        return Err(Error::GuardExceeded {
            what: "region-enumeration hyperplane",
            limit: MAX_REGION_HYPERPLANES,
            actual: a.len(),
        });
    }
    if a.is_empty() {
        return Ok(1);
    }
    let m = a.len();
    let vectors: Vec<RatVector> = a
        .hyperplanes()
        .iter()
        .map(|h| RatVector::from_signs(h.normal()))
        .collect();
    let per_mask: Vec<Result<u64>> = exec::map_range(1usize << m, |mask| {
        let cons: Vec<(RatVector, Sign)> = (0..m)
            .map(|i| {
                let s = if mask >> i & 1 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                (vectors[i].clone(), s)
            })
            .collect();
        Ok(fm_feasible(&StrictSystem::new(cons)?)? as u64)
    });
    let mut total = 0;
    for r in per_mask {
        total += r?;
    }
    Ok(total)
}

/// Attaches `tail` to `host` by identifying `tail_vertex` with
/// `host_vertex`; host edges keep their positions, tail edges follow.
pub fn glue_at(host: &Graph, host_vertex: usize, tail: &Graph, tail_vertex: usize) -> Result<Graph> {
    if host_vertex == 0 || host_vertex > host.vertex_count() {
        return Err(Error::Graph(crate::error::GraphDefect::VertexOutOfRange {
            v: host_vertex,
            max: host.vertex_count(),
        }));
    }
    if tail_vertex == 0 || tail_vertex > tail.vertex_count() {
        return Err(Error::Graph(crate::error::GraphDefect::VertexOutOfRange {
            v: tail_vertex,
            max: tail.vertex_count(),
        }));
    }
    let base = host.vertex_count();
    // tail vertices other than the glued one map to fresh ids in order
    let mut map = vec![0usize; tail.vertex_count() + 1];
    map[tail_vertex] = host_vertex;
    let mut next = base;
    for t in 1..=tail.vertex_count() {
        if t != tail_vertex {
            next += 1;
            map[t] = next;
        }
    }
    let mut edges = host.edges().to_vec();
    edges.extend(tail.edges().iter().map(|&(u, v)| (map[u], map[v])));
    Graph::new(base + tail.vertex_count() - 1, edges)
}

/// Which claim a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    #[serde(rename = "T1_reconstruction")]
    T1Reconstruction,
    #[serde(rename = "T1_exception")]
    T1Exception,
    #[serde(rename = "T2_regions")]
    T2Regions,
    #[serde(rename = "T3_invariance")]
    T3Invariance,
    #[serde(rename = "T4_product")]
    T4Product,
    #[serde(rename = "T5_tree")]
    T5Tree,
    #[serde(rename = "T6_tails")]
    T6Tails,
    #[serde(rename = "chromatic_graphical")]
    ChromaticGraphical,
    #[serde(rename = "remark_unions")]
    RemarkUnions,
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TheoremId::T1Reconstruction => "T1_reconstruction",
            TheoremId::T1Exception => "T1_exception",
            TheoremId::T2Regions => "T2_regions",
            TheoremId::T3Invariance => "T3_invariance",
            TheoremId::T4Product => "T4_product",
            TheoremId::T5Tree => "T5_tree",
            TheoremId::T6Tails => "T6_tails",
            TheoremId::ChromaticGraphical => "chromatic_graphical",
            TheoremId::RemarkUnions => "remark_unions",
        };
        f.write_str(s)
    }
}

/// One verification instance.
#[derive(Debug, Clone)]
pub enum TheoremCheck {
    /// Rebuilt edge graph equals the line graph.
    T1Reconstruction { graph: Graph },
    /// The K3 / K_{1,3} coincidence.
    T1Exception,
    /// Region constancy and generic uniqueness of maximum matchings.
    T2Regions { graph: Graph, samples: usize, seed: u64 },
    /// The characteristic polynomial ignores the edge numbering.
    T3Invariance { graph: Graph, numberings: usize, seed: u64 },
    /// chi of a disjoint union is the product of the parts' chis.
    T4Product { g1: Graph, g2: Graph },
    /// chi equals the product over connected components.
    T4Components { graph: Graph },
    /// Trees: chi = (t-1)(t-2)...(t-n).
    T5Tree { tree: Graph },
    /// Equal-size tails at one vertex leave chi unchanged. Tails are
    /// `(tree, attachment vertex)` pairs glued to `host_vertex`.
    T6Tails {
        host: Graph,
        host_vertex: usize,
        tails: Vec<(Graph, usize)>,
    },
    /// Non-isomorphic unions with identical arrangements.
    RemarkUnions,
    /// Graphical arrangement: chi = chromatic polynomial, regions =
    /// acyclic orientations.
    ChromaticGraphical { graph: Graph },
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub instance_description: String,
    pub pass: bool,
    pub details: Value,
}

impl TheoremReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn chi_value(p: &IntPolynomial) -> Value {
    let coeffs: Vec<Value> = p
        .coeffs()
        .iter()
        .map(|c| match i64::try_from(c.clone()) {
            Ok(v) => json!(v),
            Err(_) => json!(c.to_string()),
        })
        .collect();
    Value::Array(coeffs)
}

fn chi_of(g: &Graph) -> Result<IntPolynomial> {
    let a = build_matching_arrangement(g, &EdgeNumbering::identity(g.edge_count()))?;
    characteristic_polynomial(&a)
}

fn describe(g: &Graph) -> String {
    format!("{}v/{}e graph", g.vertex_count(), g.edge_count())
}

fn derive(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i + 1)
}

/// Runs one instance and reports the outcome with structured evidence.
pub fn verify_theorem(check: &TheoremCheck) -> Result<TheoremReport> {
    match check {
        TheoremCheck::T1Reconstruction { graph } => {
            let a = build_matching_arrangement(
                graph,
                &EdgeNumbering::identity(graph.edge_count()),
            )?;
            let rebuilt = reconstruct_line_graph(&a);
            let expected = line_graph(graph);
            let pass = rebuilt == expected;
            Ok(TheoremReport {
                theorem_id: TheoremId::T1Reconstruction,
                instance_description: describe(graph),
                pass,
                details: json!({
                    "hyperplanes": a.len(),
                    "line_graph_edges": expected.edge_count(),
                    "rebuilt_edges": rebuilt.edge_count(),
                }),
            })
        }
        TheoremCheck::T1Exception => {
            let k3 = Graph::complete(3);
            let star = Graph::star(3);
            let a = build_matching_arrangement(&k3, &EdgeNumbering::identity(3))?;
            let b = build_matching_arrangement(&star, &EdgeNumbering::identity(3))?;
            let identical = arrangements_identical(&a, &b);
            let chi_a = characteristic_polynomial(&a)?;
            let chi_b = characteristic_polynomial(&b)?;
            let expected = IntPolynomial::falling_product(3);
            let pass = identical && chi_a == expected && chi_b == expected;
            Ok(TheoremReport {
                theorem_id: TheoremId::T1Exception,
                instance_description: "K3 vs K_{1,3}".into(),
                pass,
                details: json!({
                    "identical": identical,
                    "hyperplanes": a.len(),
                    "chi": chi_value(&chi_a),
                }),
            })
        }
        TheoremCheck::T2Regions {
            graph,
            samples,
            seed,
        } => {
            let report = probe_theorem2(
                graph,
                &EdgeNumbering::identity(graph.edge_count()),
                *samples,
                *seed,
            )?;
            let pass = report.constancy_violations == 0 && report.uniqueness_violations == 0;
            Ok(TheoremReport {
                theorem_id: TheoremId::T2Regions,
                instance_description: format!("{}, {} samples, seed {}", describe(graph), samples, seed),
                pass,
                details: serde_json::to_value(&report).expect("report serializes"),
            })
        }
        TheoremCheck::T3Invariance {
            graph,
            numberings,
            seed,
        } => {
            let n = graph.edge_count();
            let base = chi_of(graph)?;
            let mut all_equal = true;
            for i in 0..*numberings {
                let num = EdgeNumbering::random(n, derive(*seed, i as u64));
                let a = build_matching_arrangement(graph, &num)?;
                if characteristic_polynomial(&a)? != base {
                    all_equal = false;
                    break;
                }
            }
            Ok(TheoremReport {
                theorem_id: TheoremId::T3Invariance,
                instance_description: format!("{}, {} numberings", describe(graph), numberings),
                pass: all_equal,
                details: json!({ "chi": chi_value(&base), "numberings": numberings }),
            })
        }
        TheoremCheck::T4Product { g1, g2 } => {
            let union = disjoint_union(g1, g2);
            let chi_union = chi_of(&union)?;
            let chi1 = chi_of(g1)?;
            let chi2 = chi_of(g2)?;
            let product = chi1.mul(&chi2);
            let pass = chi_union == product;
            Ok(TheoremReport {
                theorem_id: TheoremId::T4Product,
                instance_description: format!("{} + {}", describe(g1), describe(g2)),
                pass,
                details: json!({
                    "chi_union": chi_value(&chi_union),
                    "chi_product": chi_value(&product),
                }),
            })
        }
        TheoremCheck::T4Components { graph } => {
            let chi_whole = chi_of(graph)?;
            let mut product = IntPolynomial::one();
            let comps = connected_components(graph);
            for (piece, _) in &comps {
                product = product.mul(&chi_of(piece)?);
            }
            let pass = chi_whole == product;
            Ok(TheoremReport {
                theorem_id: TheoremId::T4Product,
                instance_description: format!("{} with {} components", describe(graph), comps.len()),
                pass,
                details: json!({
                    "components": comps.len(),
                    "chi": chi_value(&chi_whole),
                    "chi_component_product": chi_value(&product),
                }),
            })
        }
        TheoremCheck::T5Tree { tree } => {
            let comps = connected_components(tree);
            let is_tree =
                comps.len() == 1 && tree.edge_count() + 1 == tree.vertex_count();
            let chi = chi_of(tree)?;
            let expected = IntPolynomial::falling_product(tree.edge_count());
            let pass = is_tree && chi == expected;
            Ok(TheoremReport {
                theorem_id: TheoremId::T5Tree,
                instance_description: format!("tree on {} vertices", tree.vertex_count()),
                pass,
                details: json!({
                    "is_tree": is_tree,
                    "chi": chi_value(&chi),
                    "chi_expected": chi_value(&expected),
                }),
            })
        }
        TheoremCheck::T6Tails {
            host,
            host_vertex,
            tails,
        } => {
            let mut glued: Vec<Graph> = Vec::new();
            for (tail, at) in tails {
                glued.push(glue_at(host, *host_vertex, tail, *at)?);
            }
            let chis: Vec<IntPolynomial> = glued
                .iter()
                .map(chi_of)
                .collect::<Result<_>>()?;
            let all_equal = chis.windows(2).all(|w| w[0] == w[1]);
            let mut isomorphic_pairs = 0usize;
            for i in 0..glued.len() {
                for j in (i + 1)..glued.len() {
                    if glued[i].vertex_count() <= 8 && is_isomorphic(&glued[i], &glued[j])? {
                        isomorphic_pairs += 1;
                    }
                }
            }
            Ok(TheoremReport {
                theorem_id: TheoremId::T6Tails,
                instance_description: format!(
                    "{} host, {} tails of {} edges",
                    describe(host),
                    tails.len(),
                    tails.first().map_or(0, |(t, _)| t.edge_count())
                ),
                pass: all_equal,
                details: json!({
                    "chi": chi_value(&chis[0]),
                    "isomorphic_pairs": isomorphic_pairs,
                }),
            })
        }
        TheoremCheck::RemarkUnions => {
            let g1 = disjoint_union(&Graph::complete(3), &Graph::complete(3));
            let g2 = disjoint_union(&Graph::complete(3), &Graph::star(3));
            let a = build_matching_arrangement(&g1, &EdgeNumbering::identity(6))?;
            let b = build_matching_arrangement(&g2, &EdgeNumbering::identity(6))?;
            let identical = arrangements_identical(&a, &b);
            let iso = is_isomorphic(&g1, &g2)?;
            Ok(TheoremReport {
                theorem_id: TheoremId::RemarkUnions,
                instance_description: "K3+K3 vs K3+K_{1,3}".into(),
                pass: identical && !iso,
                details: json!({ "identical": identical, "isomorphic": iso }),
            })
        }
        TheoremCheck::ChromaticGraphical { graph } => {
            let a = build_graphical_arrangement(graph);
            let lattice = build_flat_lattice(&a)?;
            let chi = lattice.characteristic_polynomial();
            let chromatic = chromatic_polynomial(graph)?;
            let regions = lattice.region_count();
            let acyclic = count_acyclic_orientations(graph)?;
            let pass = chi == chromatic && regions == BigInt::from(acyclic);
            Ok(TheoremReport {
                theorem_id: TheoremId::ChromaticGraphical,
                instance_description: describe(graph),
                pass,
                details: json!({
                    "chi": chi_value(&chi),
                    "chromatic": chi_value(&chromatic),
                    "regions": regions.to_string().parse::<u64>().map(Value::from)
                        .unwrap_or_else(|_| json!(regions.to_string())),
                    "acyclic_orientations": acyclic,
                }),
            })
        }
    }
}

/// A fixed, fast instance set touching every claim once.
pub fn default_suite() -> Vec<TheoremCheck> {
    vec![
        TheoremCheck::T1Reconstruction {
            graph: Graph::complete(3),
        },
        TheoremCheck::T1Reconstruction {
            graph: Graph::cycle(4),
        },
        TheoremCheck::T1Reconstruction {
            graph: Graph::complete(4),
        },
        TheoremCheck::T1Exception,
        TheoremCheck::T2Regions {
            graph: Graph::path(3),
            samples: 200,
            seed: 7,
        },
        TheoremCheck::T2Regions {
            graph: Graph::complete(3),
            samples: 200,
            seed: 7,
        },
        TheoremCheck::T3Invariance {
            graph: Graph::cycle(4),
            numberings: 5,
            seed: 5,
        },
        TheoremCheck::T4Product {
            g1: Graph::complete(3),
            g2: Graph::path(3),
        },
        TheoremCheck::T4Components {
            graph: disjoint_union(
                &disjoint_union(&Graph::complete(3), &Graph::path(2)),
                &Graph::path(2),
            ),
        },
        TheoremCheck::T5Tree {
            tree: Graph::path(6),
        },
        TheoremCheck::T5Tree {
            tree: Graph::star(4),
        },
        TheoremCheck::T6Tails {
            host: Graph::complete(3),
            host_vertex: 1,
            tails: vec![(Graph::path(3), 1), (Graph::path(3), 2)],
        },
        TheoremCheck::RemarkUnions,
        TheoremCheck::ChromaticGraphical {
            graph: Graph::complete(3),
        },
        TheoremCheck::ChromaticGraphical {
            graph: Graph::cycle(4),
        },
        TheoremCheck::ChromaticGraphical {
            graph: Graph::complete(4),
        },
    ]
}

/// Runs a batch of checks; report order matches instance order.
pub fn run_suite(checks: &[TheoremCheck]) -> Result<Vec<TheoremReport>> {
    exec::map_slice(checks, verify_theorem).into_iter().collect()
}
