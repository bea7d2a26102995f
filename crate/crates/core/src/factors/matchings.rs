use serde::{Deserialize, Serialize};

use crate::graph_core::{EdgeId, EdgeSet, Multigraph, VertexId};
use crate::{Error, Result};

/// A perfect matching, stored as its edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PerfectMatching {
    pub edges: EdgeSet,
}

impl PerfectMatching {
    /// Validates that `edges` covers every vertex of `g` exactly once.
    pub fn new(g: &Multigraph, edges: EdgeSet) -> Result<Self> {
        let edges = edges.with_universe(g.edge_count());
        let mut covered = vec![0u8; g.vertex_count()];
        for e in edges.iter() {
            if e >= g.edge_count() {
                return Err(Error::InvalidArgument(format!("edge {e} not in graph")));
            }
            let (u, v) = g.endpoints(e);
            covered[u] += 1;
            covered[v] += 1;
        }
        if let Some(v) = covered.iter().position(|&c| c != 1) {
            return Err(Error::InvalidArgument(format!(
                "not a perfect matching: vertex {v} covered {} times",
                covered[v]
            )));
        }
        Ok(PerfectMatching { edges })
    }

    /// The matching edge at `v`.
    pub fn edge_at(&self, g: &Multigraph, v: VertexId) -> EdgeId {
        g.incident(v)
            .iter()
            .map(|&(e, _)| e)
            .find(|&e| self.edges.contains(e))
            .expect("perfect matching covers every vertex")
    }
}

struct Frame {
    vertex: VertexId,
    pos: usize,
    chosen: Option<(EdgeId, VertexId)>,
}

/// Depth-first enumeration of perfect matchings: always match the lowest
/// uncovered vertex, trying its incident edges in index order. Each matching
/// is produced exactly once, in a fixed order.
pub struct PerfectMatchings<'g> {
    g: &'g Multigraph,
    covered: Vec<bool>,
    /// uncovered neighbors per vertex (with multiplicity), for pruning
    free_degree: Vec<usize>,
    stack: Vec<Frame>,
    descend: bool,
    finished: bool,
}

pub fn perfect_matchings(g: &Multigraph) -> Result<PerfectMatchings<'_>> {
    g.require_cubic()?;
    Ok(PerfectMatchings::any_graph(g))
}

impl<'g> PerfectMatchings<'g> {
    /// Enumerator without the cubic precondition (used by oracles).
    pub fn any_graph(g: &'g Multigraph) -> Self {
        PerfectMatchings {
            g,
            covered: vec![false; g.vertex_count()],
            free_degree: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            stack: Vec::new(),
            descend: true,
            finished: g.vertex_count() % 2 == 1,
        }
    }

    fn set_covered(&mut self, v: VertexId, on: bool) {
        self.covered[v] = on;
        for &(_, w) in self.g.incident(v) {
            if on {
                self.free_degree[w] -= 1;
            } else {
                self.free_degree[w] += 1;
            }
        }
    }

    /// After covering `u` and `v`, every uncovered neighbor must keep at
    /// least one uncovered neighbor of its own.
    fn dead_end(&self, u: VertexId, v: VertexId) -> bool {
        [u, v].iter().any(|&x| {
            self.g
                .incident(x)
                .iter()
                .any(|&(_, w)| !self.covered[w] && self.free_degree[w] == 0)
        })
    }

    fn current(&self) -> PerfectMatching {
        let mut edges = EdgeSet::new(self.g.edge_count());
        for f in &self.stack {
            if let Some((e, _)) = f.chosen {
                edges.insert(e);
            }
        }
        PerfectMatching { edges }
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = PerfectMatching;

    fn next(&mut self) -> Option<PerfectMatching> {
        if self.finished {
            return None;
        }
        loop {
            if self.descend {
                self.descend = false;
                match (0..self.g.vertex_count()).find(|&v| !self.covered[v]) {
                    None => {
                        if self.stack.is_empty() {
                            // the empty graph has exactly one (empty) matching
                            self.finished = true;
                        }
                        return Some(self.current());
                    }
                    Some(v) => self.stack.push(Frame {
                        vertex: v,
                        pos: 0,
                        chosen: None,
                    }),
                }
            }
            let top = self.stack.len() - 1;
            if let Some((_, w)) = self.stack[top].chosen.take() {
                let v = self.stack[top].vertex;
                self.set_covered(v, false);
                self.set_covered(w, false);
            }
            let v = self.stack[top].vertex;
            let incident = self.g.incident(v);
            let mut advanced = false;
            while self.stack[top].pos < incident.len() {
                let (e, w) = incident[self.stack[top].pos];
                self.stack[top].pos += 1;
                if self.covered[w] {
                    continue;
                }
                self.set_covered(v, true);
                self.set_covered(w, true);
                if self.dead_end(v, w) {
                    self.set_covered(v, false);
                    self.set_covered(w, false);
                    continue;
                }
                self.stack[top].chosen = Some((e, w));
                advanced = true;
                break;
            }
            if advanced {
                self.descend = true;
                continue;
            }
            self.stack.pop();
            if self.stack.is_empty() {
                self.finished = true;
                return None;
            }
        }
    }
}
