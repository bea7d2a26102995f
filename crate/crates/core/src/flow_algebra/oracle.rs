use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use super::flow::{verify_flow, Arc, Flow, Orientation};
use crate::graph_core::maxflow::FlowNetwork;
use crate::graph_core::{EdgeId, Multigraph, VertexId};
use crate::{Error, Exec, Result};

pub const DEFAULT_MAX_DIMENSION: usize = 12;

/// A `Z_k` circulation; `values[e]` is read along the reference direction
/// `u -> v` of edge `e = (u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModFlow {
    pub k: u32,
    pub values: Vec<u32>,
}

impl ModFlow {
    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|&v| v % self.k != 0)
    }

    pub fn is_circulation(&self, g: &Multigraph) -> bool {
        let k = self.k as i64;
        let mut net = vec![0i64; g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            net[u] += self.values[e] as i64;
            net[v] -= self.values[e] as i64;
        }
        net.iter().all(|x| x.rem_euclid(k) == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub flow: Option<ModFlow>,
    /// Cycle space dimension searched over.
    pub dimension: usize,
    /// Partial assignments tried before the answer was settled.
    pub explored: u64,
}

/// Tree/cotree decomposition: each cotree edge closes a fundamental cycle,
/// and every tree edge's value is a signed sum of cotree values.
struct CycleBasis {
    cotree: Vec<EdgeId>,
    /// Per cotree position: `(tree edge, sign)` on its fundamental cycle.
    cycles: Vec<Vec<(EdgeId, i64)>>,
    tree: Vec<EdgeId>,
    /// Per cotree position: tree edges whose value is final once it is set.
    closing: Vec<Vec<EdgeId>>,
    /// Tree edges on no fundamental cycle, i.e. bridges.
    free_tree_edges: bool,
}

impl CycleBasis {
    fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut in_tree = vec![false; m];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(e, w) in g.incident(v) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some((v, e));
                        depth[w] = depth[v] + 1;
                        in_tree[e] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let cotree: Vec<EdgeId> = (0..m).filter(|&e| !in_tree[e]).collect();
        let tree: Vec<EdgeId> = (0..m).filter(|&e| in_tree[e]).collect();
        let mut cycles = Vec::with_capacity(cotree.len());
        for &c in &cotree {
            let (u, v) = g.endpoints(c);
            // cycle: u -> v along c, then v back to u through the tree
            let mut from_v = Vec::new();
            let mut from_u = Vec::new();
            let (mut a, mut b) = (v, u);
            while a != b {
                if depth[a] >= depth[b] {
                    let (p, e) = parent[a].expect("non-root");
                    from_v.push((e, a));
                    a = p;
                } else {
                    let (p, e) = parent[b].expect("non-root");
                    from_u.push((e, b));
                    b = p;
                }
            }
            let mut cyc = Vec::new();
            for (e, x) in from_v {
                // traversed child x -> parent
                cyc.push((e, if g.endpoints(e).0 == x { 1 } else { -1 }));
            }
            for (e, x) in from_u.into_iter().rev() {
                // traversed parent -> x
                cyc.push((e, if g.endpoints(e).1 == x { 1 } else { -1 }));
            }
            cycles.push(cyc);
        }
        let mut last = vec![usize::MAX; m];
        for (i, cyc) in cycles.iter().enumerate() {
            for &(e, _) in cyc {
                last[e] = i;
            }
        }
        let mut closing = vec![Vec::new(); cotree.len()];
        let mut free_tree_edges = false;
        for &t in &tree {
            if last[t] == usize::MAX {
                free_tree_edges = true;
            } else {
                closing[last[t]].push(t);
            }
        }
        CycleBasis {
            cotree,
            cycles,
            tree,
            closing,
            free_tree_edges,
        }
    }
}

struct Search<'a> {
    basis: &'a CycleBasis,
    k: i64,
    acc: Vec<i64>,
    chosen: Vec<u32>,
    explored: u64,
    split: usize,
    best: &'a AtomicUsize,
}

impl Search<'_> {
    fn assign(&mut self, i: usize, val: i64) -> bool {
        for &(e, s) in &self.basis.cycles[i] {
            self.acc[e] += s * val;
        }
        self.chosen[i] = val as u32;
        self.explored += 1;
        self.basis.closing[i]
            .iter()
            .all(|&t| self.acc[t].rem_euclid(self.k) != 0)
    }

    fn unassign(&mut self, i: usize, val: i64) {
        for &(e, s) in &self.basis.cycles[i] {
            self.acc[e] -= s * val;
        }
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.basis.cotree.len() {
            return true;
        }
        if self.best.load(Ordering::Relaxed) < self.split {
            return false;
        }
        for val in 1..self.k {
            let ok = self.assign(i, val);
            if ok && self.run(i + 1) {
                return true;
            }
            self.unassign(i, val);
        }
        false
    }
}

/// Exhaustive search for a nowhere-zero `Z_k` circulation over a cotree
/// basis. The first hit in lexicographic order of cotree values is returned
/// under either execution mode. Refuses graphs whose cycle space dimension
/// exceeds `max_dim`.
pub fn nz_mod_flow_oracle(g: &Multigraph, k: u32, max_dim: usize, exec: Exec) -> Result<OracleOutcome> {
    if !(2..=6).contains(&k) {
        return Err(Error::InvalidArgument(format!("k = {k} outside 2..=6")));
    }
    let dimension = g.cycle_rank();
    if dimension > max_dim {
        return Err(Error::BoundExceeded {
            what: "cycle space dimension",
            actual: dimension,
            limit: max_dim,
        });
    }
    let basis = CycleBasis::new(g);
    if basis.free_tree_edges {
        return Ok(OracleOutcome {
            flow: None,
            dimension,
            explored: 0,
        });
    }
    let m = g.edge_count();
    let finish = |chosen: &[u32], acc: &[i64]| {
        let mut values = vec![0u32; m];
        for (i, &c) in basis.cotree.iter().enumerate() {
            values[c] = chosen[i];
        }
        for &t in &basis.tree {
            values[t] = acc[t].rem_euclid(k as i64) as u32;
        }
        ModFlow { k, values }
    };
    if basis.cotree.is_empty() {
        // a forest without bridges has no edges
        return Ok(OracleOutcome {
            flow: Some(ModFlow { k, values: vec![0; m] }),
            dimension,
            explored: 0,
        });
    }
    let best = AtomicUsize::new(usize::MAX);
    let splits = (k - 1) as usize;
    let run_split = |j: usize| -> (Option<ModFlow>, u64) {
        let mut s = Search {
            basis: &basis,
            k: k as i64,
            acc: vec![0; m],
            chosen: vec![0; basis.cotree.len()],
            explored: 0,
            split: j,
            best: &best,
        };
        let ok = s.assign(0, j as i64 + 1) && s.run(1);
        if ok {
            best.fetch_min(j, Ordering::Relaxed);
            (Some(finish(&s.chosen, &s.acc)), s.explored)
        } else {
            (None, s.explored)
        }
    };
    let results: Vec<(Option<ModFlow>, u64)> = if exec.is_parallel() {
        exec.map_indices(splits, run_split)
    } else {
        let mut out = Vec::new();
        for j in 0..splits {
            let r = run_split(j);
            let hit = r.0.is_some();
            out.push(r);
            if hit {
                break;
            }
        }
        out
    };
    let winner = results.iter().position(|r| r.0.is_some());
    let upto = winner.map_or(results.len(), |w| w + 1);
    let explored = results[..upto].iter().map(|r| r.1).sum();
    let flow = winner.and_then(|w| results[w].0.clone());
    if let Some(f) = &flow {
        debug_assert!(f.is_circulation(g) && f.is_nowhere_zero());
    }
    Ok(OracleOutcome {
        flow,
        dimension,
        explored,
    })
}

/// Lifts a nowhere-zero `Z_k` circulation to an integer nowhere-zero
/// `k`-flow. Each edge keeps its representative `r` in `1..k` or switches to
/// `r - k` (then reversed); the switches form a 0/1 flow with divergence
/// `div(r) / k`, found by max-flow.
pub fn mod_to_integer_flow(g: &Multigraph, mf: &ModFlow) -> Result<Flow> {
    let k = mf.k;
    if mf.values.len() != g.edge_count() {
        return Err(Error::InvalidArgument("mod flow does not match graph".into()));
    }
    let reps: Vec<i64> = mf.values.iter().map(|&v| (v % k) as i64).collect();
    if reps.contains(&0) {
        return Err(Error::InvalidArgument("mod flow has a zero edge".into()));
    }
    let n = g.vertex_count();
    let mut div = vec![0i64; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        div[u] += reps[e];
        div[v] -= reps[e];
    }
    if div.iter().any(|d| d % k as i64 != 0) {
        return Err(Error::InvalidArgument("not a circulation mod k".into()));
    }
    let (src, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    let handles: Vec<_> = g.edges().iter().map(|&(u, v)| net.add_arc(u, v, 1)).collect();
    let mut need = 0;
    for (v, &d) in div.iter().enumerate() {
        let b = d / k as i64;
        if b > 0 {
            net.add_arc(src, v, b);
            need += b;
        } else if b < 0 {
            net.add_arc(v, sink, -b);
        }
    }
    if net.max_flow(src, sink) != need {
        return Err(Error::Internal("no integer lift of a Z_k flow".into()));
    }
    let mut orientation = Orientation::empty(g.edge_count());
    let mut values = vec![0; g.edge_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if net.flow_on(handles[e]) == 0 {
            orientation.set(e, Arc { tail: u, head: v });
            values[e] = reps[e] as u32;
        } else {
            orientation.set(e, Arc { tail: v, head: u });
            values[e] = k - reps[e] as u32;
        }
    }
    let fl = Flow::from_parts(k, orientation, values)?;
    let report = verify_flow(g, &fl, k, true);
    if !report.is_valid() {
        return Err(Error::Internal(format!("integer lift failed verification: {report:?}")));
    }
    Ok(fl)
}
