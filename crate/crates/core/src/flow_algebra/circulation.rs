use std::collections::VecDeque;

use super::flow::{verify_flow, Arc, Flow, Orientation};
use crate::graph_core::maxflow::FlowNetwork;
use crate::graph_core::{Multigraph, VertexId, VertexSet};
use crate::{Error, Result};

/// An orientation with prescribed out-degrees, or `None` if there is none.
/// Starts from the reference orientation and reverses directed paths from
/// vertices with surplus out-degree to vertices with a deficit.
pub fn orient_with_outdegrees(g: &Multigraph, target: &[usize]) -> Result<Option<Orientation>> {
    Ok(orient_or_witness(g, target)?.ok())
}

/// Like [`orient_with_outdegrees`], but on failure returns a set `R` with
/// fewer target out-degrees in total than edges inside `R`.
pub fn orient_or_witness(g: &Multigraph, target: &[usize]) -> Result<std::result::Result<Orientation, VertexSet>> {
    let n = g.vertex_count();
    if target.len() != n {
        return Err(Error::InvalidArgument("one target per vertex expected".into()));
    }
    if let Some(v) = (0..n).find(|&v| target[v] > g.degree(v)) {
        return Err(Error::InvalidArgument(format!(
            "target at vertex {v} exceeds its degree"
        )));
    }
    if target.iter().sum::<usize>() != g.edge_count() {
        return Err(Error::InvalidArgument("targets must sum to the number of edges".into()));
    }
    let mut o = Orientation::reference(g);
    let mut out = o.out_degrees(g);
    loop {
        let surplus: Vec<VertexId> = (0..n).filter(|&v| out[v] > target[v]).collect();
        if surplus.is_empty() {
            return Ok(Ok(o));
        }
        let mut pred = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in &surplus {
            seen[s] = true;
            queue.push_back(s);
        }
        let mut end = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &(e, w) in g.incident(v) {
                if seen[w] || o.get(e).map(|a| a.tail) != Some(v) {
                    continue;
                }
                seen[w] = true;
                pred[w] = Some(e);
                if out[w] < target[w] {
                    end = Some(w);
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        let Some(mut w) = end else {
            return Ok(Err(VertexSet::from_indices(n, (0..n).filter(|&v| seen[v]))));
        };
        out[w] += 1;
        while let Some(e) = pred[w] {
            let a = o.get(e).expect("total orientation");
            o.reverse(e);
            w = a.tail;
        }
        out[w] -= 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Circulation {
    Feasible(Flow),
    /// `upper * |in(X)| < lower * |out(X)|`.
    Infeasible(VertexSet),
}

/// A circulation with `lower <= value <= upper` on every edge under the
/// fixed orientation `d`, or a vertex set witnessing that none exists.
pub fn bounded_circulation(g: &Multigraph, d: &Orientation, lower: u32, upper: u32) -> Result<Circulation> {
    if lower > upper {
        return Err(Error::InvalidArgument("lower bound above upper bound".into()));
    }
    d.check_against(g)?;
    if !d.is_total() {
        return Err(Error::InvalidArgument("orientation must cover every edge".into()));
    }
    let n = g.vertex_count();
    let (src, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    let mut excess = vec![0i64; n];
    let mut handles = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let a = d.get(e).expect("total");
        handles.push(net.add_arc(a.tail, a.head, (upper - lower) as i64));
        excess[a.head] += lower as i64;
        excess[a.tail] -= lower as i64;
    }
    let mut need = 0;
    for (v, &x) in excess.iter().enumerate() {
        if x > 0 {
            net.add_arc(src, v, x);
            need += x;
        } else if x < 0 {
            net.add_arc(v, sink, -x);
        }
    }
    if net.max_flow(src, sink) == need {
        let values = (0..g.edge_count())
            .map(|e| lower + net.flow_on(handles[e]) as u32)
            .collect();
        let fl = Flow::from_parts(upper + 1, d.clone(), values)?;
        debug_assert!(verify_flow(g, &fl, upper + 1, false).is_valid());
        return Ok(Circulation::Feasible(fl));
    }
    let reach = net.reachable_from(src);
    let x = VertexSet::from_indices(n, (0..n).filter(|&v| !reach[v]));
    let (inn, out) = directed_boundary(g, d, &x);
    if (upper as u64) * inn >= (lower as u64) * out {
        return Err(Error::Internal("min cut does not witness infeasibility".into()));
    }
    Ok(Circulation::Infeasible(x))
}

/// `(|in(X)|, |out(X)|)` under `d`.
pub fn directed_boundary(g: &Multigraph, d: &Orientation, x: &VertexSet) -> (u64, u64) {
    let mut inn = 0;
    let mut out = 0;
    for e in g.boundary(x).iter() {
        if let Some(Arc { tail, .. }) = d.get(e) {
            if x.contains(tail) {
                out += 1;
            } else {
                inn += 1;
            }
        }
    }
    (inn, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::enumerate::bridgeless_cubic_multigraphs;
    use crate::Exec;

    fn triangle() -> Multigraph {
        Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Every orientation, by brute force.
    fn orientations(g: &Multigraph) -> impl Iterator<Item = Orientation> + '_ {
        let m = g.edge_count();
        (0u64..1 << m).map(move |mask| {
            let mut o = Orientation::reference(g);
            for e in 0..m {
                if mask >> e & 1 == 1 {
                    o.reverse(e);
                }
            }
            o
        })
    }

    #[test]
    fn triangle_targets() {
        let g = triangle();
        let o = orient_with_outdegrees(&g, &[1, 1, 1]).unwrap().unwrap();
        assert_eq!(o.out_degrees(&g), vec![1, 1, 1]);
        let o = orient_with_outdegrees(&g, &[2, 1, 0]).unwrap().unwrap();
        assert_eq!(o.out_degrees(&g), vec![2, 1, 0]);
        assert_eq!(o.get(2), Some(Arc { tail: 0, head: 2 }));
        assert!(orient_with_outdegrees(&g, &[2, 2, 0]).is_err());
        assert!(orient_with_outdegrees(&g, &[3, 0, 0]).is_err());
    }

    #[test]
    fn infeasible_targets() {
        // two digons sharing vertex 1
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2), (1, 2)]).unwrap();
        assert_eq!(
            orient_with_outdegrees(&g, &[0, 4, 0])
                .unwrap()
                .map(|o| o.out_degrees(&g)),
            Some(vec![0, 4, 0])
        );
        assert!(orient_with_outdegrees(&g, &[2, 0, 2]).unwrap().is_some());
        assert!(orient_with_outdegrees(&g, &[2, 2, 0]).unwrap().is_some());
        // the edge 0-1 has no tail
        let h = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(orient_with_outdegrees(&h, &[0, 0, 2, 1]).unwrap().is_none());
    }

    #[test]
    fn outdegree_search_matches_brute_force() {
        let levels = bridgeless_cubic_multigraphs(6, Exec::Sequential);
        for g in levels.iter().flatten() {
            let n = g.vertex_count();
            for mask in 0u32..1 << n {
                let target: Vec<usize> = (0..n).map(|v| 1 + (mask >> v & 1) as usize).collect();
                if target.iter().sum::<usize>() != g.edge_count() {
                    continue;
                }
                let brute = orientations(g).any(|o| o.out_degrees(g) == target);
                let found = orient_with_outdegrees(g, &target).unwrap();
                assert_eq!(found.is_some(), brute);
                if let Err(r) = orient_or_witness(g, &target).unwrap() {
                    let inside = g.induced_edges(&r).len();
                    assert!(r.iter().map(|v| target[v]).sum::<usize>() < inside);
                }
                if let Some(o) = found {
                    assert_eq!(o.out_degrees(g), target);
                }
            }
        }
    }

    #[test]
    fn directed_cycles_are_feasible() {
        let digon = Multigraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        let o = Orientation::reference(&digon);
        match bounded_circulation(&digon, &o, 1, 4).unwrap() {
            Circulation::Feasible(f) => assert_eq!(f.values(), &[1, 1]),
            other => panic!("{other:?}"),
        }
        let g = triangle();
        match bounded_circulation(&g, &Orientation::reference(&g), 1, 4).unwrap() {
            Circulation::Feasible(f) => assert_eq!(f.values(), &[1, 1, 1]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn source_vertex_is_the_witness() {
        // K_{1,3} plus a triangle on the leaves so the graph is not a tree
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
        let o = Orientation::reference(&g);
        match bounded_circulation(&g, &o, 1, 4).unwrap() {
            Circulation::Infeasible(x) => {
                let (inn, out) = directed_boundary(&g, &o, &x);
                assert!(4 * inn < out);
                assert!(x.contains(0));
            }
            other => panic!("{other:?}"),
        }
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        match bounded_circulation(&star, &Orientation::reference(&star), 1, 4).unwrap() {
            Circulation::Infeasible(x) => assert!(x.contains(0)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn feasibility_matches_cut_condition() {
        let levels = bridgeless_cubic_multigraphs(6, Exec::Sequential);
        for g in levels.iter().flatten() {
            let n = g.vertex_count();
            for o in orientations(g) {
                let cut_ok = (1u64..(1 << n) - 1).all(|mask| {
                    let x = VertexSet::from_mask(n, mask);
                    let (inn, out) = directed_boundary(g, &o, &x);
                    4 * inn >= out && 4 * out >= inn
                });
                let got = bounded_circulation(g, &o, 1, 4).unwrap();
                assert_eq!(matches!(got, Circulation::Feasible(_)), cut_ok);
                if let Circulation::Feasible(f) = got {
                    assert!(verify_flow(g, &f, 5, true).is_valid());
                }
            }
        }
    }
}
