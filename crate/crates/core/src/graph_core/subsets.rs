//! Enumeration of connected induced vertex subsets on graphs with at most 64
//! vertices, each subset generated exactly once.
//!
//! Subsets are grouped by their lowest vertex (the root). Below a root the
//! search branches on the frontier: a node `(S, banned)` stands for all
//! connected supersets of `S` avoiding `banned`; it reports `S` itself, then
//! for the frontier vertices `w1 < w2 < ...` recurses into "contains `wi`,
//! avoids `w1..w(i-1)`". Those branches partition the supersets, so no set is
//! produced twice.

use std::ops::ControlFlow;

use super::Multigraph;
use crate::{Error, Exec, Result};

pub const MAX_MASK_VERTICES: usize = 64;

/// Neighbor masks, one per vertex.
#[derive(Debug, Clone)]
pub struct MaskGraph {
    neighbors: Vec<u64>,
}

impl MaskGraph {
    pub fn new(g: &Multigraph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_MASK_VERTICES {
            return Err(Error::BoundExceeded {
                what: "vertex count for subset enumeration",
                actual: n,
                limit: MAX_MASK_VERTICES,
            });
        }
        let mut neighbors = vec![0u64; n];
        for &(u, v) in g.edges() {
            neighbors[u] |= 1 << v;
            neighbors[v] |= 1 << u;
        }
        Ok(MaskGraph { neighbors })
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn neighborhood(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.neighbors[v];
        }
        out
    }

    /// Visits every connected subset whose lowest vertex is `root`, in a
    /// fixed depth-first order. Stops early when `visit` breaks.
    pub fn for_each_rooted<B>(&self, root: usize, visit: &mut impl FnMut(u64) -> ControlFlow<B>) -> ControlFlow<B> {
        let below = (1u64 << root) - 1;
        let set = 1u64 << root;
        self.extend(set, below, visit)
    }

    fn extend<B>(&self, set: u64, banned: u64, visit: &mut impl FnMut(u64) -> ControlFlow<B>) -> ControlFlow<B> {
        visit(set)?;
        let mut frontier = self.neighborhood(set) & !set & !banned;
        let mut banned = banned;
        while frontier != 0 {
            let w = frontier.trailing_zeros();
            let bit = 1u64 << w;
            frontier &= !bit;
            self.extend(set | bit, banned, visit)?;
            banned |= bit;
        }
        ControlFlow::Continue(())
    }

    /// Every connected subset, roots in increasing order.
    pub fn for_each<B>(&self, mut visit: impl FnMut(u64) -> ControlFlow<B>) -> ControlFlow<B> {
        for root in 0..self.vertex_count() {
            self.for_each_rooted(root, &mut visit)?;
        }
        ControlFlow::Continue(())
    }

    /// First subset (in sequential enumeration order) accepted by `pred`.
    /// The parallel mode splits by root and keeps the lowest root's answer,
    /// which is exactly the sequential answer.
    pub fn find_first(&self, exec: Exec, pred: impl Fn(u64) -> bool + Sync + Send) -> Option<u64> {
        exec.find_first(self.vertex_count(), |root| {
            match self.for_each_rooted(root, &mut |s| {
                if pred(s) {
                    ControlFlow::Break(s)
                } else {
                    ControlFlow::Continue(())
                }
            }) {
                ControlFlow::Break(s) => Some(s),
                ControlFlow::Continue(()) => None,
            }
        })
        .map(|(_, s)| s)
    }

    /// Number of connected subsets (test and benchmark helper).
    pub fn count(&self, exec: Exec) -> u64 {
        exec.map_indices(self.vertex_count(), |root| {
            let mut c = 0u64;
            let _ = self.for_each_rooted::<()>(root, &mut |_| {
                c += 1;
                ControlFlow::Continue(())
            });
            c
        })
        .into_iter()
        .sum()
    }
}
