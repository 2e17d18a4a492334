//! Enumeration of the generating set of a matching arrangement: all simple
//! paths and all simple even cycles, one canonical representative each.
//!
//! A path traversed backwards and a rotated or reflected even cycle define
//! the same hyperplane up to sign, so canonicalization happens here and
//! the arrangement layer receives exactly one sequence per geometric
//! object. Canonical path: of the two traversal directions, the one whose
//! first edge index is smaller (single edges break the tie trivially).
//! Canonical cycle: starts at the smallest edge index and proceeds toward
//! the smaller of its two neighboring edge indices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUM_EDGES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Path,
    EvenCycle,
}

/// Walk through a graph as an ordered run of edge indices plus the vertex
/// sequence realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSequence {
    pub kind: SequenceKind,
    /// Edge positions in `Graph::edges` order.
    pub edges: Vec<usize>,
    /// Traversal vertices; paths have `edges.len() + 1` entries, cycles
    /// repeat the start vertex at the end.
    pub vertices: Vec<usize>,
}

impl EdgeSequence {
    /// Checks the kind invariants against the owning graph.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.edges.is_empty() {
            return Err("empty edge sequence".into());
        }
        if self.vertices.len() != self.edges.len() + 1 {
            return Err("vertex sequence length mismatch".into());
        }
        let mut seen_edges = std::collections::HashSet::new();
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= g.edge_count() {
                return Err(format!("edge index {e} out of range"));
            }
            if !seen_edges.insert(e) {
                return Err(format!("repeated edge {e}"));
            }
            let (a, b) = g.edge(e);
            let (u, v) = (self.vertices[i], self.vertices[i + 1]);
            if (a, b) != (u.min(v), u.max(v)) {
                return Err(format!("edge {e} does not join step {i}"));
            }
        }
        match self.kind {
            SequenceKind::Path => {
                let mut verts = self.vertices.clone();
                verts.sort_unstable();
                verts.dedup();
                if verts.len() != self.vertices.len() {
                    return Err("path repeats a vertex".into());
                }
            }
            SequenceKind::EvenCycle => {
                if self.vertices.first() != self.vertices.last() {
                    return Err("cycle does not close".into());
                }
                if self.edges.len() % 2 != 0 || self.edges.len() < 4 {
                    return Err("cycle length must be even and >= 4".into());
                }
                let body = &self.vertices[..self.vertices.len() - 1];
                let mut verts = body.to_vec();
                verts.sort_unstable();
                verts.dedup();
                if verts.len() != body.len() {
                    return Err("cycle repeats an interior vertex".into());
                }
            }
        }
        Ok(())
    }
}

fn check_guard(g: &Graph) -> Result<()> {
    if g.edge_count() > MAX_ENUM_EDGES {
        return Err(Error::GuardExceeded {
            what: "enumeration edge",
            limit: MAX_ENUM_EDGES,
            actual: g.edge_count(),
        });
    }
    Ok(())
}

/// All simple paths with at least one edge, one canonical representative
/// per path.
pub fn enumerate_simple_paths(g: &Graph) -> Result<Vec<EdgeSequence>> {
    check_guard(g)?;
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut edges: Vec<usize> = Vec::new();
    let mut verts: Vec<usize> = Vec::new();
    let mut on_path = vec![false; g.vertex_count() + 1];

    fn extend(
        v: usize,
        adj: &[Vec<(usize, usize)>],
        edges: &mut Vec<usize>,
        verts: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<EdgeSequence>,
    ) {
        for &(w, e) in &adj[v] {
            if on_path[w] {
                continue;
            }
            edges.push(e);
            verts.push(w);
            on_path[w] = true;
            let canonical = match edges.len() {
                1 => verts[0] < verts[1],
                k => edges[0] < edges[k - 1],
            };
            if canonical {
                out.push(EdgeSequence {
                    kind: SequenceKind::Path,
                    edges: edges.clone(),
                    vertices: verts.clone(),
                });
            }
            extend(w, adj, edges, verts, on_path, out);
            on_path[w] = false;
            verts.pop();
            edges.pop();
        }
    }

    for start in 1..=g.vertex_count() {
        verts.push(start);
        on_path[start] = true;
        extend(start, &adj, &mut edges, &mut verts, &mut on_path, &mut out);
        on_path[start] = false;
        verts.pop();
    }
    out.sort_by(|a, b| (a.edges.len(), &a.edges).cmp(&(b.edges.len(), &b.edges)));
    Ok(out)
}

/// All simple cycles with an even number of edges (>= 4), one canonical
/// representative per cycle.
pub fn enumerate_even_cycles(g: &Graph) -> Result<Vec<EdgeSequence>> {
    check_guard(g)?;
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut edges: Vec<usize> = Vec::new();
    let mut verts: Vec<usize> = Vec::new();
    let mut on_path = vec![false; g.vertex_count() + 1];

    fn extend(
        v: usize,
        start: usize,
        adj: &[Vec<(usize, usize)>],
        edges: &mut Vec<usize>,
        verts: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<EdgeSequence>,
    ) {
        for &(w, e) in &adj[v] {
            if edges.contains(&e) {
                continue;
            }
            if w == start {
                let k = edges.len() + 1;
                if k >= 4 && k % 2 == 0 {
                    edges.push(e);
                    verts.push(w);
                    // canonical: min edge first, second edge below last
                    if edges[0] == *edges.iter().min().unwrap() && edges[1] < edges[k - 1] {
                        out.push(EdgeSequence {
                            kind: SequenceKind::EvenCycle,
                            edges: edges.clone(),
                            vertices: verts.clone(),
                        });
                    }
                    verts.pop();
                    edges.pop();
                }
                continue;
            }
            if on_path[w] {
                continue;
            }
            edges.push(e);
            verts.push(w);
            on_path[w] = true;
            extend(w, start, adj, edges, verts, on_path, out);
            on_path[w] = false;
            verts.pop();
            edges.pop();
        }
    }

    for start in 1..=g.vertex_count() {
        verts.push(start);
        on_path[start] = true;
        extend(start, start, &adj, &mut edges, &mut verts, &mut on_path, &mut out);
        on_path[start] = false;
        verts.pop();
    }
    out.sort_by(|a, b| (a.edges.len(), &a.edges).cmp(&(b.edges.len(), &b.edges)));
    Ok(out)
}
