use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::canonical_coloring::color;
use crate::graph_core::{EdgeId, EdgeSet, Multigraph, VertexId, VertexSet};
use crate::valuations::FlowPartition;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Path,
    OddCycle,
    EvenCycle,
}

/// A component of `G[S]` minus its 1-colored edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorPiece {
    pub kind: ComponentKind,
    pub vertices: Vec<VertexId>,
    pub white: usize,
    pub black: usize,
}

/// The spanning tree of `G[S]` obtained by first deleting 1-colored edges
/// that lie on cycles (lowest index first, one at a time) and then one
/// 2-colored edge from every factor cycle left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeReduction {
    /// Phase 1 deletions in the order they were made.
    pub removed_1: Vec<EdgeId>,
    pub removed_2: Vec<EdgeId>,
    pub n1: usize,
    pub n2: usize,
    pub n: usize,
    /// Odd and even factor cycles among the `n2` cycles.
    pub n2_odd: usize,
    pub n2_even: usize,
    pub tree: EdgeSet,
    /// Tree vertices of degree 0 (only when `|S| = 1`), 1 and 2.
    pub t0: usize,
    pub t1: usize,
    pub t2: usize,
    /// 1-colored edges of `G[S]`.
    pub e1: usize,
    pub pieces: Vec<FactorPiece>,
}

/// Whether `u` and `v` are joined in the subgraph with edges `alive`,
/// ignoring edge `skip`.
fn joined(g: &Multigraph, alive: &EdgeSet, skip: EdgeId, u: VertexId, v: VertexId) -> bool {
    let mut seen = VertexSet::new(g.vertex_count());
    seen.insert(u);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return true;
        }
        for &(e, y) in g.incident(x) {
            if e != skip && alive.contains(e) && seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    false
}

pub fn tree_reduction(g: &Multigraph, s: &VertexSet, p: &FlowPartition) -> Result<TreeReduction> {
    if s.is_empty() || !g.is_connected_subset(s) {
        return Err(Error::InvalidArgument(
            "vertex set does not induce a connected subgraph".into(),
        ));
    }
    let colors = &p.provenance.augmented.coloring.colors;
    let factor = p.factor();
    let inside = g.induced_edges(s);
    let mut alive = inside.clone();

    let mut removed_1 = Vec::new();
    loop {
        let next = alive.iter().find(|&e| {
            let (u, v) = g.endpoints(e);
            colors[e] == color::ONE && joined(g, &alive, e, u, v)
        });
        match next {
            Some(e) => {
                alive.remove(e);
                removed_1.push(e);
            }
            None => break,
        }
    }

    let whole_cycles: Vec<_> = factor
        .cycles
        .iter()
        .filter(|c| c.vertices.iter().all(|&v| s.contains(v)))
        .collect();
    // cycle rank of the remainder must be exactly the number of factor cycles
    if alive.len() + 1 != s.len() + whole_cycles.len() {
        return Err(Error::Internal("a cycle survives phase 1 outside the 2-factor".into()));
    }
    let mut removed_2 = Vec::new();
    for cyc in &whole_cycles {
        let e = *cyc
            .edges
            .iter()
            .filter(|&&e| colors[e] == color::TWO)
            .min()
            .ok_or_else(|| Error::Internal("factor cycle without a 2-colored edge".into()))?;
        alive.remove(e);
        removed_2.push(e);
    }
    let n2_odd = whole_cycles.iter().filter(|c| c.is_odd()).count();
    let tree = alive;
    if tree.len() + 1 != s.len() {
        return Err(Error::Internal("reduction did not end in a tree".into()));
    }
    let mut deg = vec![0usize; g.vertex_count()];
    for e in tree.iter() {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    let count_deg = |d: usize| s.iter().filter(|&v| deg[v] == d).count();

    let mut without_one = inside.clone();
    for e in inside.iter() {
        if colors[e] == color::ONE {
            without_one.remove(e);
        }
    }
    let e1 = inside.len() - without_one.len();
    let pieces = pieces_of(g, s, &without_one, p);

    let (n1, n2) = (removed_1.len(), removed_2.len());
    Ok(TreeReduction {
        removed_1,
        removed_2,
        n1,
        n2,
        n: n1 + n2,
        n2_odd,
        n2_even: n2 - n2_odd,
        t0: count_deg(0),
        t1: count_deg(1),
        t2: count_deg(2),
        tree,
        e1,
        pieces,
    })
}

fn pieces_of(g: &Multigraph, s: &VertexSet, edges: &EdgeSet, p: &FlowPartition) -> Vec<FactorPiece> {
    let mut seen = VertexSet::new(g.vertex_count());
    let mut out = Vec::new();
    for root in s.iter() {
        if !seen.insert(root) {
            continue;
        }
        let mut vertices = vec![root];
        let mut edge_ends = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(e, y) in g.incident(x) {
                if !edges.contains(e) {
                    continue;
                }
                edge_ends += 1;
                if seen.insert(y) {
                    vertices.push(y);
                    queue.push_back(y);
                }
            }
        }
        vertices.sort_unstable();
        let edge_count = edge_ends / 2;
        let kind = if edge_count < vertices.len() {
            ComponentKind::Path
        } else if vertices.len() % 2 == 1 {
            ComponentKind::OddCycle
        } else {
            ComponentKind::EvenCycle
        };
        let black = vertices.iter().filter(|&&v| p.is_black(v)).count();
        out.push(FactorPiece {
            kind,
            white: vertices.len() - black,
            black,
            vertices,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::{oddness_analysis, perfect_matchings, two_factor_of};
    use crate::generate::corpus;
    use crate::valuations::flow_partition;

    #[test]
    fn k4_whole_graph() {
        let g = corpus::k4();
        let m = perfect_matchings(&g).unwrap().next().unwrap();
        let p = flow_partition(&g, &two_factor_of(&g, &m).unwrap(), None).unwrap();
        let r = tree_reduction(&g, &VertexSet::full(4), &p).unwrap();
        assert_eq!(r.n, 3);
        assert_eq!((r.n1, r.n2), (2, 1));
        assert_eq!(r.tree.len(), 3);
        // c = a + b + 2 - 2n with c = 0
        assert_eq!(4 + 2, 2 * r.n);
    }

    #[test]
    fn single_cycle() {
        let g = corpus::petersen();
        let a = oddness_analysis(&g).unwrap();
        let p = flow_partition(&g, &a.minimum_factors[0], None).unwrap();
        let s = p.factor().cycles[0].vertex_set(10);
        let r = tree_reduction(&g, &s, &p).unwrap();
        assert_eq!((r.n1, r.n2, r.n2_odd), (0, 1, 1));
        assert_eq!(r.pieces.len(), 1);
        assert_eq!(r.pieces[0].kind, ComponentKind::OddCycle);
    }

    #[test]
    fn factor_path_is_already_a_tree() {
        let g = corpus::petersen();
        let a = oddness_analysis(&g).unwrap();
        let p = flow_partition(&g, &a.minimum_factors[0], None).unwrap();
        let cyc = &p.factor().cycles[0];
        let s = VertexSet::from_indices(10, cyc.vertices[..3].iter().copied());
        let r = tree_reduction(&g, &s, &p).unwrap();
        assert_eq!(r.n, 0);
        assert_eq!(r.tree, g.induced_edges(&s));
        assert_eq!((r.t1, r.t2), (2, 1));
    }
}
