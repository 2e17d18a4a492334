//! Simple undirected graphs with numbered edges.
//!
//! Vertices are 1-based ids; edges are unordered pairs stored in a fixed
//! order, and the position of an edge in that order is its default number.
//! Everything here is desk scale: isomorphism enumerates permutations,
//! the chromatic polynomial runs plain deletion–contraction, and acyclic
//! orientations are counted by brute force over `2^|E|` orientations.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, GraphDefect, Result};
use crate::poly::IntPolynomial;

pub const MAX_CHROMATIC_EDGES: usize = 10;
pub const MAX_ORIENTATION_EDGES: usize = 10;
pub const MAX_ISO_VERTICES: usize = 8;

/// Simple undirected graph. No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates and normalizes each edge to `(min, max)`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let e = check_edge(u, v, vertex_count).map_err(Error::Graph)?;
            if normalized.contains(&e) {
                return Err(Error::Graph(GraphDefect::ParallelEdge { u: e.0, v: e.1 }));
            }
            normalized.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
        })
    }

    /// Parses the graph file format: a `V E` header line, then one `u v`
    /// line per edge. Lines starting with `#` are comments; blank lines
    /// are ignored. Edge order is file order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut data_lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_no, header) = data_lines.next().ok_or(Error::Parse {
            line: 1,
            defect: GraphDefect::Malformed("empty input".into()),
        })?;
        let mut it = header.split_whitespace();
        let v = parse_field(it.next(), header_no, "vertex count")?;
        let e = parse_field(it.next(), header_no, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: header_no,
                defect: GraphDefect::Malformed("trailing tokens after header".into()),
            });
        }

        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(e);
        let mut last_line = header_no;
        for (line_no, line) in data_lines {
            if edges.len() == e {
                return Err(Error::Parse {
                    line: line_no,
                    defect: GraphDefect::Malformed(format!("more than {e} edge lines")),
                });
            }
            let mut it = line.split_whitespace();
            let a = parse_field(it.next(), line_no, "edge endpoint")?;
            let b = parse_field(it.next(), line_no, "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    defect: GraphDefect::Malformed("trailing tokens after edge".into()),
                });
            }
            let edge = check_edge(a, b, v).map_err(|defect| Error::Parse {
                line: line_no,
                defect,
            })?;
            if edges.contains(&edge) {
                return Err(Error::Parse {
                    line: line_no,
                    defect: GraphDefect::ParallelEdge {
                        u: edge.0,
                        v: edge.1,
                    },
                });
            }
            edges.push(edge);
            last_line = line_no;
        }
        if edges.len() < e {
            return Err(Error::Parse {
                line: last_line,
                defect: GraphDefect::Malformed(format!(
                    "expected {e} edges, found {}",
                    edges.len()
                )),
            });
        }
        Ok(Graph {
            vertex_count: v,
            edges,
        })
    }

    /// Path on `v` vertices: edges (1,2), (2,3), ...
    pub fn path(v: usize) -> Graph {
        let edges = (1..v).map(|i| (i, i + 1)).collect();
        Graph::new(v, edges).expect("path is simple")
    }

    /// Cycle on `v >= 3` vertices.
    pub fn cycle(v: usize) -> Graph {
        assert!(v >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..v).map(|i| (i, i + 1)).collect();
        edges.push((v, 1));
        Graph::new(v, edges).expect("cycle is simple")
    }

    /// Complete graph on `v` vertices, edges in lexicographic order.
    pub fn complete(v: usize) -> Graph {
        let edges = (1..=v)
            .flat_map(|a| ((a + 1)..=v).map(move |b| (a, b)))
            .collect();
        Graph::new(v, edges).expect("complete graph is simple")
    }

    /// Star `K_{1,leaves}` with vertex 1 as the center.
    pub fn star(leaves: usize) -> Graph {
        let edges = (2..=leaves + 1).map(|b| (1, b)).collect();
        Graph::new(leaves + 1, edges).expect("star is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs, in numbering order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Per-vertex list of `(neighbor, edge index)`, indexed by vertex id
    /// (slot 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    pub fn has_isolated_vertices(&self) -> bool {
        let mut seen = vec![false; self.vertex_count + 1];
        for &(u, v) in &self.edges {
            seen[u] = true;
            seen[v] = true;
        }
        (1..=self.vertex_count).any(|v| !seen[v])
    }

    fn degree_sequence(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.vertex_count + 1];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        let mut seq: Vec<usize> = d[1..].to_vec();
        seq.sort_unstable();
        seq
    }
}

fn check_edge(u: usize, v: usize, max: usize) -> std::result::Result<(usize, usize), GraphDefect> {
    if u == 0 || u > max {
        return Err(GraphDefect::VertexOutOfRange { v: u, max });
    }
    if v == 0 || v > max {
        return Err(GraphDefect::VertexOutOfRange { v, max });
    }
    if u == v {
        return Err(GraphDefect::LoopEdge { u, v });
    }
    Ok((u.min(v), u.max(v)))
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        defect: GraphDefect::Malformed(format!("missing {what}")),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        defect: GraphDefect::Malformed(format!("bad {what} `{tok}`")),
    })
}

/// Bijection from edge positions to the numbers `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeNumbering {
    numbers: Vec<usize>,
}

impl EdgeNumbering {
    pub fn identity(n: usize) -> Self {
        EdgeNumbering {
            numbers: (1..=n).collect(),
        }
    }

    /// `numbers[i]` is the number of edge position `i`; must be a
    /// permutation of `1..=n`.
    pub fn new(numbers: Vec<usize>) -> Result<Self> {
        let n = numbers.len();
        let mut seen = vec![false; n + 1];
        for &x in &numbers {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidNumbering { n });
            }
            seen[x] = true;
        }
        Ok(EdgeNumbering { numbers })
    }

    /// Uniform random permutation, deterministic per seed.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut numbers: Vec<usize> = (1..=n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        numbers.shuffle(&mut rng);
        EdgeNumbering { numbers }
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }

    /// Number assigned to the edge at `position`.
    pub fn number_of(&self, position: usize) -> usize {
        self.numbers[position]
    }

    pub fn numbers(&self) -> &[usize] {
        &self.numbers
    }
}

/// Splits into maximal connected pieces. Each piece is returned with
/// vertices relabeled to `1..k` (preserving relative order) together with
/// the original edge indices it owns; isolated vertices come out as
/// single-vertex edgeless components. Components are ordered by their
/// smallest original vertex.
pub fn connected_components(g: &Graph) -> Vec<(Graph, Vec<usize>)> {
    let adj = g.adjacency();
    let mut comp = vec![0usize; g.vertex_count + 1];
    let mut n_comp = 0usize;
    for start in 1..=g.vertex_count {
        if comp[start] != 0 {
            continue;
        }
        n_comp += 1;
        let mut stack = vec![start];
        comp[start] = n_comp;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if comp[w] == 0 {
                    comp[w] = n_comp;
                    stack.push(w);
                }
            }
        }
    }

    let mut result = Vec::with_capacity(n_comp);
    for c in 1..=n_comp {
        let verts: Vec<usize> = (1..=g.vertex_count).filter(|&v| comp[v] == c).collect();
        let mut local = vec![0usize; g.vertex_count + 1];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i + 1;
        }
        let mut edges = Vec::new();
        let mut indices = Vec::new();
        for (i, &(u, v)) in g.edges.iter().enumerate() {
            if comp[u] == c {
                edges.push((local[u], local[v]));
                indices.push(i);
            }
        }
        let piece = Graph::new(verts.len(), edges).expect("component of a valid graph");
        result.push((piece, indices));
    }
    result
}

/// One vertex per edge of `g` (vertex `i+1` for edge position `i`),
/// adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let n = g.edge_count();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = g.edges[i];
            let (c, d) = g.edges[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::new(n, edges).expect("line graph of a simple graph is simple")
}

/// Disjoint union; vertices and edges of `g2` are shifted after `g1`'s.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.vertex_count;
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(g1.vertex_count + g2.vertex_count, edges).expect("union of valid graphs")
}

/// Exact isomorphism test by permutation enumeration with a
/// degree-sequence pre-filter and prefix pruning. Both graphs must have
/// at most [`MAX_ISO_VERTICES`] vertices.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    let n = g1.vertex_count.max(g2.vertex_count);
    if n > MAX_ISO_VERTICES {
        return Err(Error::GuardExceeded {
            what: "isomorphism vertex",
            limit: MAX_ISO_VERTICES,
            actual: n,
        });
    }
    if g1.vertex_count != g2.vertex_count || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }
    let v = g1.vertex_count;
    let adj1 = adjacency_matrix(g1);
    let adj2 = adjacency_matrix(g2);
    let deg1: Vec<usize> = (0..=v).map(|x| g1.degree(x)).collect();
    let deg2: Vec<usize> = (0..=v).map(|x| g2.degree(x)).collect();

    // map[i] = image of vertex i+1 in g2, built depth-first
    let mut map = vec![0usize; v];
    let mut used = vec![false; v + 1];
    fn extend(
        depth: usize,
        v: usize,
        map: &mut [usize],
        used: &mut [bool],
        adj1: &[Vec<bool>],
        adj2: &[Vec<bool>],
        deg1: &[usize],
        deg2: &[usize],
    ) -> bool {
        if depth == v {
            return true;
        }
        let a = depth + 1;
        for b in 1..=v {
            if used[b] || deg1[a] != deg2[b] {
                continue;
            }
            let consistent = (1..a).all(|p| adj1[a][p] == adj2[b][map[p - 1]]);
            if !consistent {
                continue;
            }
            map[depth] = b;
            used[b] = true;
            if extend(depth + 1, v, map, used, adj1, adj2, deg1, deg2) {
                return true;
            }
            used[b] = false;
        }
        false
    }
    Ok(extend(0, v, &mut map, &mut used, &adj1, &adj2, &deg1, &deg2))
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let v = g.vertex_count;
    let mut m = vec![vec![false; v + 1]; v + 1];
    for &(a, b) in &g.edges {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

/// Chromatic polynomial by deletion–contraction on the lexicographically
/// first edge. `P(k)` counts proper colorings with `k` colors.
pub fn chromatic_polynomial(g: &Graph) -> Result<IntPolynomial> {
    if g.edge_count() > MAX_CHROMATIC_EDGES {
        return Err(Error::GuardExceeded {
            what: "chromatic edge",
            limit: MAX_CHROMATIC_EDGES,
            actual: g.edge_count(),
        });
    }
    Ok(chromatic_rec(g))
}

fn chromatic_rec(g: &Graph) -> IntPolynomial {
    if g.edges.is_empty() {
        return IntPolynomial::monomial(g.vertex_count);
    }
    let ei = g
        .edges
        .iter()
        .enumerate()
        .min_by_key(|(_, &e)| e)
        .map(|(i, _)| i)
        .unwrap();
    let deleted = delete_edge(g, ei);
    let contracted = contract_edge(g, ei);
    chromatic_rec(&deleted).sub(&chromatic_rec(&contracted))
}

fn delete_edge(g: &Graph, ei: usize) -> Graph {
    let mut edges = g.edges.clone();
    edges.remove(ei);
    Graph {
        vertex_count: g.vertex_count,
        edges,
    }
}

/// Contracts edge `ei = (u, v)`: `v` is merged into `u`, vertices above
/// `v` shift down, loops vanish and parallel edges collapse.
fn contract_edge(g: &Graph, ei: usize) -> Graph {
    let (u, v) = g.edges[ei];
    let remap = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        if i == ei {
            continue;
        }
        let (a, b) = (remap(a), remap(b));
        if a == b {
            continue;
        }
        let e = (a.min(b), a.max(b));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Graph {
        vertex_count: g.vertex_count - 1,
        edges,
    }
}

/// Counts orientations of `g` with no directed cycle, by brute force over
/// all `2^|E|` orientations.
pub fn count_acyclic_orientations(g: &Graph) -> Result<u64> {
    let e = g.edge_count();
    if e > MAX_ORIENTATION_EDGES {
        return Err(Error::GuardExceeded {
            what: "orientation edge",
            limit: MAX_ORIENTATION_EDGES,
            actual: e,
        });
    }
    let mut count = 0u64;
    for mask in 0u32..(1u32 << e) {
        let arcs: Vec<(usize, usize)> = g
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        if is_acyclic(g.vertex_count, &arcs) {
            count += 1;
        }
    }
    Ok(count)
}

fn is_acyclic(v: usize, arcs: &[(usize, usize)]) -> bool {
    // Kahn's algorithm: a digraph is acyclic iff it peels completely.
    let mut indeg = vec![0usize; v + 1];
    let mut out = vec![Vec::new(); v + 1];
    for &(a, b) in arcs {
        indeg[b] += 1;
        out[a].push(b);
    }
    let mut queue: Vec<usize> = (1..=v).filter(|&x| indeg[x] == 0).collect();
    let mut removed = 0usize;
    while let Some(x) = queue.pop() {
        removed += 1;
        for &y in &out[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                queue.push(y);
            }
        }
    }
    removed == v
}
