use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::sets::{EdgeSet, VertexSet};
use super::ExtNat;
use crate::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Undirected loopless multigraph with dense, stable edge indices.
///
/// Parallel edges are distinct edge indices sharing endpoints. Adjacency
/// lists are kept in edge-index order so every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    name: Option<String>,
    adjacency: Vec<Vec<(EdgeId, VertexId)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl TryFrom<RawGraph> for Multigraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Ok(Multigraph::new(raw.vertex_count, raw.edges)?.with_name_opt(raw.name))
    }
}

impl From<Multigraph> for RawGraph {
    fn from(g: Multigraph) -> Self {
        RawGraph {
            name: g.name,
            vertex_count: g.vertex_count,
            edges: g.edges,
        }
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} = ({u},{v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {e} is a loop at {u}")));
            }
            adjacency[u].push((e, v));
            adjacency[v].push((e, u));
        }
        Ok(Multigraph {
            vertex_count,
            edges,
            name: None,
            adjacency,
        })
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        self.with_name_opt(Some(name.into()))
    }

    fn with_name_opt(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        debug_assert!(a == v || b == v, "vertex {v} not on edge {e}");
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident `(edge, neighbor)` pairs in edge-index order.
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == 3)
    }

    pub fn require_cubic(&self) -> Result<()> {
        match (0..self.vertex_count).find(|&v| self.degree(v) != 3) {
            Some(v) => Err(Error::NotCubic {
                vertex: v,
                degree: self.degree(v),
            }),
            None => Ok(()),
        }
    }

    /// First edge parallel to an earlier edge, if any.
    pub fn first_parallel_edge(&self) -> Option<EdgeId> {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().position(|&(u, v)| !seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_simple(&self) -> bool {
        self.first_parallel_edge().is_none()
    }

    /// Graph with extra edges appended after the existing ones.
    pub fn with_added_edges(&self, extra: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra);
        Ok(Multigraph::new(self.vertex_count, edges)?.with_name_opt(self.name.clone()))
    }

    /// Relabels vertex `v` as `perm[v]`; edge indices are kept.
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Ok(Multigraph::new(self.vertex_count, edges)?.with_name_opt(self.name.clone()))
    }

    /// Component index per vertex, numbered in order of lowest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        self.components_without(&EdgeSet::new(self.edge_count()))
    }

    /// Components of the graph with the edges in `removed` deleted.
    pub fn components_without(&self, removed: &EdgeSet) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.vertex_count {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &(e, w) in &self.adjacency[v] {
                    if !removed.contains(e) && comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.components().0 == 1
    }

    /// Edges with exactly one endpoint in `x`.
    pub fn boundary(&self, x: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::new(self.edge_count());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if x.contains(u) != x.contains(v) {
                out.insert(e);
            }
        }
        out
    }

    /// Edges with both endpoints in `x`.
    pub fn induced_edges(&self, x: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::new(self.edge_count());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if x.contains(u) && x.contains(v) {
                out.insert(e);
            }
        }
        out
    }

    /// Whether `G[x]` is connected (the empty set counts as not connected).
    pub fn is_connected_subset(&self, x: &VertexSet) -> bool {
        let Some(start) = x.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::new(self.vertex_count);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(_, w) in &self.adjacency[v] {
                if x.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == x.len()
    }

    /// All bridges, found with a lowpoint DFS that skips the tree edge by
    /// index (so a parallel copy of the tree edge counts as a back edge).
    pub fn bridges(&self) -> EdgeSet {
        let n = self.vertex_count;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = EdgeSet::new(self.edge_count());
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next adjacency position)
            let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, parent_edge, ref mut pos)) = stack.last_mut() {
                if let Some(&(e, w)) = self.adjacency[v].get(*pos) {
                    *pos += 1;
                    if Some(e) == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.insert(e);
                        }
                    }
                }
            }
        }
        out
    }

    /// `Ok(())` when bridgeless, otherwise every bridge.
    pub fn is_bridgeless(&self) -> std::result::Result<(), EdgeSet> {
        let b = self.bridges();
        if b.is_empty() {
            Ok(())
        } else {
            Err(b)
        }
    }

    pub fn require_bridgeless(&self) -> Result<()> {
        match self.bridges().iter().next() {
            Some(edge) => Err(Error::Bridged { edge }),
            None => Ok(()),
        }
    }

    /// Length of a shortest cycle: 2 when parallel edges exist, ∞ for forests.
    pub fn girth(&self) -> ExtNat {
        if !self.is_simple() {
            return ExtNat::Finite(2);
        }
        let n = self.vertex_count;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for &(e, w) in &self.adjacency[v] {
                    if e == via[v] && v != s {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        // non-tree edge closes a cycle through s of length at most this
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            ExtNat::Infinite
        } else {
            ExtNat::Finite(best as u64)
        }
    }

    /// Cycle-space dimension `|E| - |V| + components`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.components().0 - self.vertex_count
    }
}
