//! Seeded random cubic graphs and random connected vertex subsets.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph_core::{Multigraph, VertexSet};

/// Uniform stub pairing (configuration model) on `n` vertices, retried until
/// the result is loopless, connected and (when asked) simple.
pub fn random_cubic<R: Rng + ?Sized>(n: usize, simple: bool, rng: &mut R) -> Multigraph {
    assert!(n >= 2 && n.is_multiple_of(2), "cubic graphs need an even vertex count");
    assert!(!simple || n >= 4, "no simple cubic graph on 2 vertices");
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    loop {
        stubs.shuffle(rng);
        let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let Ok(g) = Multigraph::new(n, edges) else { continue };
        if (simple && !g.is_simple()) || !g.is_connected() {
            continue;
        }
        return g;
    }
}

/// A random connected vertex set grown from a random seed vertex by adding
/// random frontier vertices up to a random target size in `1..=n`.
pub fn random_connected_subset<R: Rng + ?Sized>(g: &Multigraph, rng: &mut R) -> VertexSet {
    let n = g.vertex_count();
    let target = rng.gen_range(1..=n);
    let start = rng.gen_range(0..n);
    let mut set = VertexSet::new(n);
    set.insert(start);
    let mut frontier: Vec<usize> = Vec::new();
    let push_neighbors = |v: usize, set: &VertexSet, frontier: &mut Vec<usize>| {
        for &(_, w) in g.incident(v) {
            if !set.contains(w) && !frontier.contains(&w) {
                frontier.push(w);
            }
        }
    };
    push_neighbors(start, &set, &mut frontier);
    while set.len() < target && !frontier.is_empty() {
        let i = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(i);
        set.insert(v);
        push_neighbors(v, &set, &mut frontier);
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_graphs_are_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2, 4, 8, 14] {
            let g = random_cubic(n, n >= 4, &mut rng);
            assert!(g.is_cubic() && g.is_connected());
        }
    }

    #[test]
    fn subsets_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = super::super::corpus::petersen();
        for _ in 0..200 {
            let s = random_connected_subset(&g, &mut rng);
            assert!(g.is_connected_subset(&s));
        }
    }
}
