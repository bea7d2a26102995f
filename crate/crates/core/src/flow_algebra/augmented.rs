use serde::{Deserialize, Serialize};

use super::flow::{cycle_flow, flow_sum, verify_flow, Arc, Flow};
use crate::canonical_coloring::{color, Color, DeficiencyPairing, EdgeColoring};
use crate::graph_core::{EdgeId, Multigraph, VertexId};
use crate::{Error, Result};

/// One added parallel pair `f`, `f'` between two deficient vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedPair {
    pub f: EdgeId,
    pub f_prime: EdgeId,
    pub ends: (VertexId, VertexId),
}

/// `M_G`: the base graph plus, for every pair of deficient vertices, an edge
/// `f'` colored 2 and an edge `f` colored 4. Added edges come after the base
/// edges, `f` before `f'` within a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentedGraph {
    pub base: Multigraph,
    pub graph: Multigraph,
    pub added: Vec<AddedPair>,
    /// Colors of all edges of `graph`.
    pub colors: Vec<Color>,
    pub coloring: EdgeColoring,
}

/// A cycle of the {1,2}-colored 2-factor of `M_G`, walked from its lowest
/// vertex along that vertex's 2-colored edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl AugmentedGraph {
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    fn edge_of_color(&self, v: VertexId, c: Color) -> Option<EdgeId> {
        self.graph
            .incident(v)
            .iter()
            .find(|&&(e, _)| self.colors[e] == c)
            .map(|&(e, _)| e)
    }

    /// The cycles `C'_i`. Every vertex of `M_G` has exactly one edge of
    /// color 1 and one of color 2, so these partition the vertices.
    pub fn alternating_cycles(&self) -> Vec<AlternatingCycle> {
        let n = self.graph.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut vertices = Vec::new();
            let mut edges = Vec::new();
            let mut v = s;
            let mut want = color::TWO;
            loop {
                seen[v] = true;
                vertices.push(v);
                let e = self.edge_of_color(v, want).expect("augmented graph is {1,2}-regular");
                edges.push(e);
                v = self.graph.other_end(e, v);
                want = if want == color::TWO { color::ONE } else { color::TWO };
                if v == s {
                    break;
                }
            }
            out.push(AlternatingCycle { vertices, edges });
        }
        out
    }

    fn check_regular(&self) -> Result<()> {
        for v in 0..self.graph.vertex_count() {
            for c in [color::ONE, color::TWO] {
                let k = self
                    .graph
                    .incident(v)
                    .iter()
                    .filter(|&&(e, _)| self.colors[e] == c)
                    .count();
                if k != 1 {
                    return Err(Error::Internal(format!("vertex {v} has {k} edges of color {c} in M_G")));
                }
            }
        }
        Ok(())
    }
}

pub fn build_augmented(g: &Multigraph, c: &EdgeColoring, p: &DeficiencyPairing) -> Result<AugmentedGraph> {
    c.validate(g)?;
    if c.colors.len() != g.edge_count() {
        return Err(Error::InvalidArgument("coloring does not match graph".into()));
    }
    let mut z = p.z.clone();
    z.sort_unstable();
    if z != c.vertices_missing_two(g) {
        return Err(Error::InvalidArgument(
            "pairing vertices are not exactly the vertices missing color 2".into(),
        ));
    }
    let mut ends: Vec<VertexId> = p.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    ends.sort_unstable();
    if ends != z {
        return Err(Error::InvalidArgument(
            "pairs do not partition the deficient vertices".into(),
        ));
    }
    let m = g.edge_count();
    let mut new_edges = Vec::with_capacity(2 * p.pairs.len());
    let mut added = Vec::with_capacity(p.pairs.len());
    let mut colors = c.colors.clone();
    for (i, &(a, b)) in p.pairs.iter().enumerate() {
        new_edges.push((a, b));
        new_edges.push((a, b));
        colors.push(color::FOUR);
        colors.push(color::TWO);
        added.push(AddedPair {
            f: m + 2 * i,
            f_prime: m + 2 * i + 1,
            ends: (a, b),
        });
    }
    let mut graph = g.with_added_edges(&new_edges)?;
    if let Some(name) = g.name() {
        graph = graph.with_name(format!("M({name})"));
    }
    let ag = AugmentedGraph {
        base: g.clone(),
        graph,
        added,
        colors,
        coloring: c.clone(),
    };
    ag.check_regular()?;
    Ok(ag)
}

/// The explicit nowhere-zero 4-flow on `M_G`: value 2 around every cycle of
/// the 2-factor, value 1 around every {1,2}-cycle, and value 1 around every
/// added pair with `f'` directed as in its {1,2}-cycle.
pub fn construct_4flow(ag: &AugmentedGraph) -> Result<Flow> {
    let mg = &ag.graph;
    let m = mg.edge_count();
    let mut total = Flow::zero(m);
    for cyc in &ag.coloring.factor.cycles {
        let d = cycle_flow(mg, cyc.vertices[0], &cyc.edges, 2)?;
        total = flow_sum(&total, &d)?;
    }
    let mut primed: Vec<Option<Arc>> = vec![None; m];
    for cyc in ag.alternating_cycles() {
        let d = cycle_flow(mg, cyc.vertices[0], &cyc.edges, 1)?;
        for &e in &cyc.edges {
            primed[e] = d.arc(e);
        }
        total = flow_sum(&total, &d)?;
    }
    for pair in &ag.added {
        let a = primed[pair.f_prime].ok_or_else(|| Error::Internal("f' not on a {1,2}-cycle".into()))?;
        // f' keeps its direction; the 2-cycle returns along f
        let d = cycle_flow(mg, a.tail, &[pair.f_prime, pair.f], 1)?;
        total = flow_sum(&total, &d)?;
    }
    let total = total.with_k(4);
    let report = verify_flow(mg, &total, 4, true);
    if !report.is_valid() {
        return Err(Error::Internal(format!("4-flow construction failed: {report:?}")));
    }
    Ok(total)
}
