//! Named cubic graphs used by the bundled corpus and the test suites.
//!
//! Constructions only: properties (oddness, connectivity, colorability) are
//! always measured by the tool, never asserted here.

use crate::graph_core::{Multigraph, VertexId};

fn build(name: &str, n: usize, edges: Vec<(VertexId, VertexId)>) -> Multigraph {
    Multigraph::new(n, edges)
        .expect("corpus constructions are valid")
        .with_name(name)
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> Multigraph {
    build("theta", 2, vec![(0, 1), (0, 1), (0, 1)])
}

pub fn k4() -> Multigraph {
    build("k4", 4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k33() -> Multigraph {
    let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    build("k33", 6, edges)
}

/// Two triangles `0 1 2` and `3 4 5` joined by the matching `i -- i+3`.
pub fn prism() -> Multigraph {
    build(
        "prism",
        6,
        vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
}

fn petersen_edges(offset: usize) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((offset + i, offset + (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((offset + i, offset + 5 + i));
    }
    for i in 0..5 {
        edges.push((offset + 5 + i, offset + 5 + (i + 2) % 5));
    }
    edges
}

/// Outer pentagon `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Multigraph {
    build("petersen", 10, petersen_edges(0))
}

/// Flower snark `J_k` (k odd ≥ 3): stars `a_i b_i c_i d_i`, the `b` cycle,
/// and the `c`/`d` vertices on one cycle of length `2k`.
pub fn flower_snark(k: usize) -> Multigraph {
    assert!(k >= 3 && k % 2 == 1, "flower snarks need odd k >= 3");
    let a = |i: usize| 4 * i;
    let b = |i: usize| 4 * i + 1;
    let c = |i: usize| 4 * i + 2;
    let d = |i: usize| 4 * i + 3;
    let mut edges = Vec::new();
    for i in 0..k {
        edges.extend([(a(i), b(i)), (a(i), c(i)), (a(i), d(i))]);
    }
    for i in 0..k {
        edges.push((b(i), b((i + 1) % k)));
    }
    for i in 0..k - 1 {
        edges.push((c(i), c(i + 1)));
        edges.push((d(i), d(i + 1)));
    }
    edges.push((c(k - 1), d(0)));
    edges.push((d(k - 1), c(0)));
    build(&format!("flower-j{k}"), 4 * k, edges)
}

/// Dot product of two Petersen graphs: the first copy loses two independent
/// edges `removed`, the second copy loses the adjacent vertices 0 and 1; the
/// four degree-2 vertices on each side are matched up.
fn petersen_dot(name: &str, removed: [(VertexId, VertexId); 2]) -> Multigraph {
    let mut edges: Vec<_> = petersen_edges(0).into_iter().filter(|e| !removed.contains(e)).collect();
    // second copy: vertices 2..10 of a Petersen graph relabeled to 10..18
    let relabel = |v: usize| 10 + v - 2;
    for (u, v) in petersen_edges(0) {
        if u > 1 && v > 1 {
            edges.push((relabel(u), relabel(v)));
        }
    }
    // neighbors of 0 other than 1: 4, 5; neighbors of 1 other than 0: 2, 6
    let [(a, b), (c, d)] = removed;
    edges.extend([(a, relabel(4)), (b, relabel(5)), (c, relabel(2)), (d, relabel(6))]);
    build(name, 18, edges)
}

/// Blanuša-type snark: dot product removing two edges joined by an edge.
pub fn blanusa_a() -> Multigraph {
    petersen_dot("blanusa-a", [(0, 1), (2, 3)])
}

/// Blanuša-type snark: dot product removing two edges at distance two.
pub fn blanusa_b() -> Multigraph {
    petersen_dot("blanusa-b", [(0, 1), (7, 9)])
}

/// Two Petersen graphs, each missing edge `0 -- 1`, reconnected by the two
/// edges `0 -- 0'` and `1 -- 1'` (a 2-edge cut).
pub fn petersen_splice_2() -> Multigraph {
    let mut edges: Vec<_> = petersen_edges(0).into_iter().filter(|&e| e != (0, 1)).collect();
    edges.extend(petersen_edges(10).into_iter().filter(|&e| e != (10, 11)));
    edges.extend([(0, 10), (1, 11)]);
    build("petersen-splice-2", 20, edges)
}

/// Petersen minus vertex 0 on `offset..offset+9` (vertex `v` ↦ `offset+v-1`);
/// returns the edges and the three degree-2 ports (old neighbors 1, 4, 5).
fn petersen_minus_vertex(offset: usize) -> (Vec<(VertexId, VertexId)>, [VertexId; 3]) {
    let map = |v: usize| offset + v - 1;
    let edges = petersen_edges(0)
        .into_iter()
        .filter(|&(u, v)| u != 0 && v != 0)
        .map(|(u, v)| (map(u), map(v)))
        .collect();
    (edges, [map(1), map(4), map(5)])
}

/// Replaces every vertex of a cubic host graph by a copy of Petersen minus a
/// vertex; host edges connect the ports.
pub fn petersen_inflation(name: &str, host: &Multigraph) -> Multigraph {
    let mut edges = Vec::new();
    let mut ports = Vec::new();
    for h in 0..host.vertex_count() {
        let (e, p) = petersen_minus_vertex(9 * h);
        edges.extend(e);
        ports.push(p);
    }
    let mut used = vec![0usize; host.vertex_count()];
    for &(u, v) in host.edges() {
        let pu = ports[u][used[u]];
        let pv = ports[v][used[v]];
        used[u] += 1;
        used[v] += 1;
        edges.push((pu, pv));
    }
    build(name, 9 * host.vertex_count(), edges)
}

/// Two Petersen-minus-a-vertex pieces joined by a 3-edge matching.
pub fn petersen_join_3() -> Multigraph {
    petersen_inflation("petersen-join-3", &theta())
}

/// K4 with every vertex inflated to Petersen minus a vertex (36 vertices).
pub fn petersen_inflated_k4() -> Multigraph {
    petersen_inflation("petersen-inflated-k4", &k4())
}

/// Every named construction, in corpus order.
pub fn all() -> Vec<Multigraph> {
    vec![
        theta(),
        k4(),
        k33(),
        prism(),
        petersen(),
        blanusa_a(),
        blanusa_b(),
        flower_snark(5),
        petersen_splice_2(),
        petersen_join_3(),
        petersen_inflated_k4(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cubic_and_bridgeless() {
        for g in all() {
            assert!(g.is_cubic(), "{:?}", g.name());
            assert!(g.is_bridgeless().is_ok(), "{:?}", g.name());
            assert!(g.is_connected(), "{:?}", g.name());
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(blanusa_a().vertex_count(), 18);
        assert_eq!(flower_snark(5).edge_count(), 30);
        assert_eq!(petersen_inflated_k4().edge_count(), 54);
    }
}
