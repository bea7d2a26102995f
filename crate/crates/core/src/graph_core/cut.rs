use serde::{Deserialize, Serialize};

use super::maxflow::FlowNetwork;
use super::{EdgeSet, Multigraph, VertexSet};
use crate::{Error, Result};

/// A minimum edge cut between two vertex sets under unit edge capacities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub value: usize,
    pub cut_edges: EdgeSet,
    /// Source side of the cut.
    pub side: VertexSet,
}

/// Minimum number of edges separating every vertex of `sources` from every
/// vertex of `sinks`. Each edge (parallel copies included) has capacity 1 in
/// both directions; the terminal sets are contracted onto a super source and
/// super sink.
pub fn max_flow_min_cut(g: &Multigraph, sources: &VertexSet, sinks: &VertexSet) -> Result<CutResult> {
    if sources.is_empty() || sinks.is_empty() {
        return Err(Error::InvalidArgument("terminal sets must be nonempty".into()));
    }
    if !sources.is_disjoint(sinks) {
        return Err(Error::InvalidArgument("sources and sinks intersect".into()));
    }
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let node = |v: usize| {
        if sources.contains(v) {
            s
        } else if sinks.contains(v) {
            t
        } else {
            v
        }
    };
    let mut net = FlowNetwork::new(n + 2);
    for &(u, v) in g.edges() {
        let (a, b) = (node(u), node(v));
        if a != b {
            net.add_arc(a, b, 1);
            net.add_arc(b, a, 1);
        }
    }
    let value = net.max_flow(s, t) as usize;
    let reach = net.reachable_from(s);
    let side = VertexSet::from_indices(n, (0..n).filter(|&v| reach[node(v)]));
    let cut_edges = g.boundary(&side);
    debug_assert_eq!(cut_edges.len(), value);
    Ok(CutResult { value, cut_edges, side })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn triangle_cut() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = max_flow_min_cut(&g, &set(3, &[0]), &set(3, &[1])).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.cut_edges, g.boundary(&r.side));
    }

    #[test]
    fn joined_triangles() {
        let g = Multigraph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        let r = max_flow_min_cut(&g, &set(6, &[0, 1, 2]), &set(6, &[3, 4, 5])).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.cut_edges.to_vec(), vec![6]);
    }

    #[test]
    fn parallel_edges_count_separately() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        let r = max_flow_min_cut(&g, &set(2, &[0]), &set(2, &[1])).unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn overlapping_terminals_rejected() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert!(max_flow_min_cut(&g, &set(2, &[0]), &set(2, &[0, 1])).is_err());
        assert!(max_flow_min_cut(&g, &set(2, &[]), &set(2, &[1])).is_err());
    }
}
