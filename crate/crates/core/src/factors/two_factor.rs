use serde::{Deserialize, Serialize};

use super::matchings::PerfectMatching;
use crate::graph_core::{EdgeId, EdgeSet, Multigraph, VertexId, VertexSet};
use crate::{Error, Result};

/// One cycle of a 2-factor in canonical walk order: it starts at its lowest
/// vertex and first steps toward the lower of that vertex's two cycle
/// neighbors (lower edge index on a tie). `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl FactorCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_indices(n, self.vertices.iter().copied())
    }
}

/// A 2-factor of a cubic graph with its complementary perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFactor {
    /// Ordered by lowest vertex.
    pub cycles: Vec<FactorCycle>,
    pub odd_cycle_count: usize,
    pub matching: PerfectMatching,
}

impl TwoFactor {
    pub fn odd_cycles(&self) -> impl Iterator<Item = (usize, &FactorCycle)> {
        self.cycles.iter().enumerate().filter(|(_, c)| c.is_odd())
    }

    pub fn factor_edges(&self, edge_count: usize) -> EdgeSet {
        EdgeSet::from_indices(edge_count, self.cycles.iter().flat_map(|c| c.edges.iter().copied()))
    }

    /// Index of the cycle through each vertex.
    pub fn cycle_of_vertex(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, c) in self.cycles.iter().enumerate() {
            for &v in &c.vertices {
                out[v] = i;
            }
        }
        out
    }

    /// Checks that this factor really is a 2-factor of `g` whose complement
    /// is `matching`.
    pub fn check_against(&self, g: &Multigraph) -> Result<()> {
        let n = g.vertex_count();
        let m = g.edge_count();
        let bad = |msg: String| {
            Err(Error::InvalidArgument(format!(
                "2-factor inconsistent with graph: {msg}"
            )))
        };
        if self.matching.edges.universe() != m {
            return bad("matching universe differs from edge count".into());
        }
        let mut seen = vec![false; n];
        let mut used = EdgeSet::new(m);
        for c in &self.cycles {
            if c.vertices.len() != c.edges.len() || c.is_empty() {
                return bad("malformed cycle".into());
            }
            let len = c.len();
            for i in 0..len {
                let (a, b) = (c.vertices[i], c.vertices[(i + 1) % len]);
                let e = c.edges[i];
                if e >= m || a >= n {
                    return bad(format!("index out of range in cycle at {a}"));
                }
                let (u, v) = g.endpoints(e);
                if !((u == a && v == b) || (u == b && v == a)) {
                    return bad(format!("edge {e} does not join {a} and {b}"));
                }
                if seen[a] {
                    return bad(format!("vertex {a} on two cycles"));
                }
                seen[a] = true;
                if !used.insert(e) || self.matching.edges.contains(e) {
                    return bad(format!("edge {e} reused"));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return bad(format!("vertex {v} not covered"));
        }
        if used.len() + self.matching.edges.len() != m {
            return bad("factor and matching do not partition the edges".into());
        }
        let odd = self.cycles.iter().filter(|c| c.is_odd()).count();
        if odd != self.odd_cycle_count {
            return bad("odd cycle count mismatch".into());
        }
        Ok(())
    }
}

/// The 2-factor `g - m` of a cubic graph.
pub fn two_factor_of(g: &Multigraph, m: &PerfectMatching) -> Result<TwoFactor> {
    g.require_cubic()?;
    let m = PerfectMatching::new(g, m.edges.clone())?;
    let n = g.vertex_count();
    let factor_at = |v: VertexId| -> [(EdgeId, VertexId); 2] {
        let mut it = g.incident(v).iter().copied().filter(|&(e, _)| !m.edges.contains(e));
        let first = it.next().expect("two factor edges per vertex");
        let second = it.next().expect("two factor edges per vertex");
        [first, second]
    };
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for s in 0..n {
        if visited[s] {
            continue;
        }
        let [a, b] = factor_at(s);
        let (first_edge, mut v) = if (b.1, b.0) < (a.1, a.0) {
            (b.0, b.1)
        } else {
            (a.0, a.1)
        };
        let mut vertices = vec![s];
        let mut edges = vec![first_edge];
        visited[s] = true;
        let mut via = first_edge;
        while v != s {
            visited[v] = true;
            vertices.push(v);
            let [x, y] = factor_at(v);
            let (e, w) = if x.0 == via { y } else { x };
            edges.push(e);
            via = e;
            v = w;
        }
        cycles.push(FactorCycle { vertices, edges });
    }
    let odd_cycle_count = cycles.iter().filter(|c| c.is_odd()).count();
    Ok(TwoFactor {
        cycles,
        odd_cycle_count,
        matching: m,
    })
}

#[cfg(test)]
mod tests {
    use super::super::perfect_matchings;
    use super::*;
    use crate::generate::corpus;

    #[test]
    fn k4_factors_are_hamiltonian() {
        let g = corpus::k4();
        for m in perfect_matchings(&g).unwrap() {
            let f = two_factor_of(&g, &m).unwrap();
            assert_eq!(f.cycles.len(), 1);
            assert_eq!(f.cycles[0].len(), 4);
            assert_eq!(f.odd_cycle_count, 0);
            f.check_against(&g).unwrap();
        }
    }

    #[test]
    fn petersen_factors_are_two_pentagons() {
        let g = corpus::petersen();
        for m in perfect_matchings(&g).unwrap() {
            let f = two_factor_of(&g, &m).unwrap();
            assert_eq!(f.cycles.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![5, 5]);
            assert_eq!(f.odd_cycle_count, 2);
            assert_eq!(f.matching, m);
            let all = f.factor_edges(15).union(&m.edges);
            assert_eq!(all.len(), 15);
            assert!(f.factor_edges(15).is_disjoint(&m.edges));
        }
    }

    #[test]
    fn bipartite_has_no_odd_cycles() {
        let g = corpus::k33();
        for m in perfect_matchings(&g).unwrap() {
            assert_eq!(two_factor_of(&g, &m).unwrap().odd_cycle_count, 0);
        }
    }

    #[test]
    fn canonical_walk_order() {
        let g = corpus::k4();
        // matching {0-1, 2-3} = edges 0 and 5; factor 0-2-1-3-0
        let m = PerfectMatching::new(&g, EdgeSet::from_indices(6, [0, 5])).unwrap();
        let f = two_factor_of(&g, &m).unwrap();
        assert_eq!(f.cycles[0].vertices, vec![0, 2, 1, 3]);
        let theta = corpus::theta();
        let m = PerfectMatching::new(&theta, EdgeSet::from_indices(3, [2])).unwrap();
        let f = two_factor_of(&theta, &m).unwrap();
        assert_eq!(f.cycles[0].edges, vec![0, 1]);
        assert_eq!(f.cycles[0].vertices, vec![0, 1]);
    }

    #[test]
    fn rejects_bad_matching() {
        let g = corpus::k4();
        let bogus = PerfectMatching {
            edges: EdgeSet::from_indices(6, [0]),
        };
        assert!(two_factor_of(&g, &bogus).is_err());
    }
}
