//! Directed max-flow (Dinic) on small integer-capacity networks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

/// Residual network; arcs are addressed by the handle returned from
/// [`FlowNetwork::add_arc`].
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    level: Vec<usize>,
    iter: Vec<usize>,
}

/// `(tail, position in tail's list, original capacity)`
#[derive(Debug, Clone, Copy)]
pub struct ArcHandle {
    tail: usize,
    idx: usize,
    cap: i64,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn node_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> ArcHandle {
        debug_assert!(cap >= 0);
        let idx = self.arcs[from].len();
        let rev_idx = self.arcs[to].len() + usize::from(from == to);
        self.arcs[from].push(Arc { to, cap, rev: rev_idx });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: idx,
        });
        ArcHandle { tail: from, idx, cap }
    }

    /// Flow currently routed along the arc.
    pub fn flow_on(&self, h: ArcHandle) -> i64 {
        h.cap - self.arcs[h.tail][h.idx].cap
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = usize::MAX);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for a in &self.arcs[v] {
                if a.cap > 0 && self.level[a.to] == usize::MAX {
                    self.level[a.to] = self.level[v] + 1;
                    q.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, limit: i64) -> i64 {
        if v == t {
            return limit;
        }
        while self.iter[v] < self.arcs[v].len() {
            let i = self.iter[v];
            let Arc { to, cap, rev } = self.arcs[v][i];
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.arcs[v][i].cap -= pushed;
                    self.arcs[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    /// Pushes a maximum flow from `s` to `t` and returns its value.
    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        assert_ne!(s, t);
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] == usize::MAX {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network (the source side of
    /// a minimum cut once `max_flow` has run).
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for a in &self.arcs[v] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_network() {
        let mut net = FlowNetwork::new(6);
        net.add_arc(0, 1, 10);
        net.add_arc(0, 2, 10);
        net.add_arc(1, 3, 4);
        net.add_arc(1, 4, 8);
        net.add_arc(2, 4, 9);
        net.add_arc(3, 5, 10);
        net.add_arc(4, 3, 6);
        net.add_arc(4, 5, 10);
        assert_eq!(net.max_flow(0, 5), 19);
        let side = net.reachable_from(0);
        assert!(side[0] && !side[5]);
    }

    #[test]
    fn disconnected() {
        let mut net = FlowNetwork::new(4);
        let h = net.add_arc(0, 1, 3);
        net.add_arc(2, 3, 5);
        assert_eq!(net.max_flow(0, 3), 0);
        assert_eq!(net.flow_on(h), 0);
    }
}
