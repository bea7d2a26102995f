use serde::{Deserialize, Serialize};

use crate::graph_core::{EdgeId, Multigraph, VertexId};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub fn reversed(self) -> Arc {
        Arc {
            tail: self.head,
            head: self.tail,
        }
    }
}

/// Directions for (some of) the edges of a host graph, indexed by edge.
/// Edges without a direction are outside the orientation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    arcs: Vec<Option<Arc>>,
}

impl Orientation {
    pub fn empty(edge_count: usize) -> Self {
        Orientation {
            arcs: vec![None; edge_count],
        }
    }

    /// Every edge `(u, v)` of `g` directed `u -> v`.
    pub fn reference(g: &Multigraph) -> Self {
        Orientation {
            arcs: g.edges().iter().map(|&(u, v)| Some(Arc { tail: u, head: v })).collect(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn get(&self, e: EdgeId) -> Option<Arc> {
        self.arcs[e]
    }

    pub fn set(&mut self, e: EdgeId, arc: Arc) {
        self.arcs[e] = Some(arc);
    }

    pub fn reverse(&mut self, e: EdgeId) {
        if let Some(a) = self.arcs[e] {
            self.arcs[e] = Some(a.reversed());
        }
    }

    pub fn is_total(&self) -> bool {
        self.arcs.iter().all(Option::is_some)
    }

    pub fn out_degree(&self, g: &Multigraph, v: VertexId) -> usize {
        g.incident(v)
            .iter()
            .filter(|&&(e, _)| self.arcs[e].is_some_and(|a| a.tail == v))
            .count()
    }

    pub fn out_degrees(&self, g: &Multigraph) -> Vec<usize> {
        let mut out = vec![0; g.vertex_count()];
        for a in self.arcs.iter().flatten() {
            out[a.tail] += 1;
        }
        out
    }

    /// Every directed edge joins the endpoints of the underlying edge.
    pub fn check_against(&self, g: &Multigraph) -> Result<()> {
        if self.arcs.len() != g.edge_count() {
            return Err(Error::InvalidArgument(
                "orientation size differs from edge count".into(),
            ));
        }
        for (e, a) in self.arcs.iter().enumerate() {
            if let Some(a) = a {
                let (u, v) = g.endpoints(e);
                if !((a.tail == u && a.head == v) || (a.tail == v && a.head == u)) {
                    return Err(Error::InvalidArgument(format!("arc on edge {e} has wrong endpoints")));
                }
            }
        }
        Ok(())
    }
}

/// An orientation plus non-negative integer values on its domain. Values of
/// zero are allowed (sums may cancel); nowhere-zero is checked by
/// [`verify_flow`], not enforced by the type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flow {
    /// Declared bound: values are meant to lie in `0..k`.
    pub k: u32,
    orientation: Orientation,
    values: Vec<u32>,
}

impl Flow {
    pub fn zero(edge_count: usize) -> Self {
        Flow {
            k: 1,
            orientation: Orientation::empty(edge_count),
            values: vec![0; edge_count],
        }
    }

    pub fn from_parts(k: u32, orientation: Orientation, values: Vec<u32>) -> Result<Self> {
        if orientation.edge_count() != values.len() {
            return Err(Error::InvalidArgument("orientation and values differ in length".into()));
        }
        Ok(Flow { k, orientation, values })
    }

    pub fn edge_count(&self) -> usize {
        self.values.len()
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn arc(&self, e: EdgeId) -> Option<Arc> {
        self.orientation.get(e)
    }

    pub fn value(&self, e: EdgeId) -> u32 {
        self.values[e]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn domain(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.values.len()).filter(|&e| self.orientation.get(e).is_some())
    }

    /// Same flow restricted to the first `edge_count` edges (e.g. from the
    /// augmented graph back to the base graph).
    pub fn truncated(&self, edge_count: usize) -> Flow {
        Flow {
            k: self.k,
            orientation: Orientation {
                arcs: self.orientation.arcs[..edge_count].to_vec(),
            },
            values: self.values[..edge_count].to_vec(),
        }
    }

    pub fn with_k(mut self, k: u32) -> Flow {
        self.k = k;
        self
    }

    /// Signed net outflow at every vertex.
    pub fn net_outflow(&self, n: usize) -> Vec<i64> {
        let mut net = vec![0i64; n];
        for e in self.domain() {
            let a = self.orientation.get(e).expect("domain edge");
            net[a.tail] += self.values[e] as i64;
            net[a.head] -= self.values[e] as i64;
        }
        net
    }
}

/// Value `value` on every edge of a closed walk, directed along the walk.
/// The walk starts at `start` and follows `edges` in order.
pub fn cycle_flow(g: &Multigraph, start: VertexId, edges: &[EdgeId], value: u32) -> Result<Flow> {
    if value == 0 {
        return Err(Error::InvalidArgument("cycle flow value must be positive".into()));
    }
    if edges.is_empty() {
        return Err(Error::InvalidArgument("empty walk".into()));
    }
    let mut orientation = Orientation::empty(g.edge_count());
    let mut values = vec![0; g.edge_count()];
    let mut at = start;
    for &e in edges {
        if e >= g.edge_count() {
            return Err(Error::InvalidArgument(format!("edge {e} not in graph")));
        }
        let (u, v) = g.endpoints(e);
        if at != u && at != v {
            return Err(Error::InvalidArgument(format!("walk breaks at edge {e}")));
        }
        if orientation.get(e).is_some() {
            return Err(Error::InvalidArgument(format!("walk repeats edge {e}")));
        }
        let next = if at == u { v } else { u };
        orientation.set(e, Arc { tail: at, head: next });
        values[e] = value;
        at = next;
    }
    if at != start {
        return Err(Error::InvalidArgument("walk is not closed".into()));
    }
    Ok(Flow {
        k: value + 1,
        orientation,
        values,
    })
}

/// Sum of two flows on subgraphs of a common graph. On shared edges the
/// direction comes from the flow with the larger value (the first one on a
/// tie); the value is the sum when the directions agree and the absolute
/// difference otherwise. Other edges are copied.
pub fn flow_sum(a: &Flow, b: &Flow) -> Result<Flow> {
    if a.edge_count() != b.edge_count() {
        return Err(Error::InvalidArgument("flows live on different graphs".into()));
    }
    let m = a.edge_count();
    let mut orientation = Orientation::empty(m);
    let mut values = vec![0; m];
    #[allow(clippy::needless_range_loop)]
    for e in 0..m {
        match (a.arc(e), b.arc(e)) {
            (None, None) => {}
            (Some(x), None) => {
                orientation.set(e, x);
                values[e] = a.values[e];
            }
            (None, Some(y)) => {
                orientation.set(e, y);
                values[e] = b.values[e];
            }
            (Some(x), Some(y)) => {
                let (p, q) = (a.values[e], b.values[e]);
                let same = if x == y {
                    true
                } else if x == y.reversed() {
                    false
                } else {
                    return Err(Error::InvalidArgument(format!(
                        "flows disagree on endpoints of edge {e}"
                    )));
                };
                orientation.set(e, if p >= q { x } else { y });
                values[e] = if same { p + q } else { p.abs_diff(q) };
            }
        }
    }
    Ok(Flow {
        k: a.k + b.k - 1,
        orientation,
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConservationViolation {
    pub vertex: VertexId,
    pub outflow: u64,
    pub inflow: u64,
}

/// Everything `verify_flow` found wrong; empty lists mean a valid flow.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowReport {
    pub conservation: Vec<ConservationViolation>,
    /// Edges whose value is outside `0..k`.
    pub out_of_range: Vec<EdgeId>,
    /// Edges that are zero or undirected (only when nowhere-zero is asked).
    pub zero_edges: Vec<EdgeId>,
    /// Edges whose direction does not match the graph, or a size mismatch.
    pub malformed: Vec<EdgeId>,
}

impl FlowReport {
    pub fn is_valid(&self) -> bool {
        self.conservation.is_empty()
            && self.out_of_range.is_empty()
            && self.zero_edges.is_empty()
            && self.malformed.is_empty()
    }
}

/// Checks conservation at every vertex, the range `0..k`, and optionally
/// that every edge of `g` carries a nonzero value. Never fails; it reports.
pub fn verify_flow(g: &Multigraph, fl: &Flow, k: u32, require_nowhere_zero: bool) -> FlowReport {
    let mut report = FlowReport::default();
    if fl.edge_count() != g.edge_count() {
        report.malformed = (fl.edge_count().min(g.edge_count())..fl.edge_count().max(g.edge_count())).collect();
        return report;
    }
    let n = g.vertex_count();
    let mut out = vec![0u64; n];
    let mut inn = vec![0u64; n];
    for e in 0..g.edge_count() {
        let Some(a) = fl.arc(e) else {
            if require_nowhere_zero {
                report.zero_edges.push(e);
            }
            continue;
        };
        let (u, v) = g.endpoints(e);
        if !((a.tail == u && a.head == v) || (a.tail == v && a.head == u)) {
            report.malformed.push(e);
            continue;
        }
        let val = fl.value(e);
        if val >= k {
            report.out_of_range.push(e);
        }
        if require_nowhere_zero && val == 0 {
            report.zero_edges.push(e);
        }
        out[a.tail] += val as u64;
        inn[a.head] += val as u64;
    }
    for v in 0..n {
        if out[v] != inn[v] {
            report.conservation.push(ConservationViolation {
                vertex: v,
                outflow: out[v],
                inflow: inn[v],
            });
        }
    }
    report
}
