//! The canonical 4-coloring of a cubic graph with respect to a 2-factor and
//! the pairing of the vertices where color 2 is missing.

use serde::{Deserialize, Serialize};

use crate::factors::TwoFactor;
use crate::graph_core::{EdgeId, Multigraph, VertexId};
use crate::{Error, Result};

pub type Color = u8;

/// Palette: matching edges get 1, cycle edges alternate 2/3, each odd cycle
/// has one 0 edge, and 4 is reserved for the added edges of the augmented
/// graph.
pub mod color {
    use super::Color;
    pub const ZERO: Color = 0;
    pub const ONE: Color = 1;
    pub const TWO: Color = 2;
    pub const THREE: Color = 3;
    pub const FOUR: Color = 4;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub colors: Vec<Color>,
    pub factor: TwoFactor,
}

impl EdgeColoring {
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn incident_colors(&self, g: &Multigraph, v: VertexId) -> Vec<Color> {
        g.incident(v).iter().map(|&(e, _)| self.colors[e]).collect()
    }

    /// Vertices none of whose edges carry color 2, in vertex order.
    pub fn vertices_missing_two(&self, g: &Multigraph) -> Vec<VertexId> {
        (0..g.vertex_count())
            .filter(|&v| !self.incident_colors(g, v).contains(&color::TWO))
            .collect()
    }

    /// Checks every structural property of a canonical coloring.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let bad = |m: String| Err(Error::Internal(format!("canonical coloring: {m}")));
        if self.colors.len() != g.edge_count() {
            return bad("length mismatch".into());
        }
        for e in self.factor.matching.edges.iter() {
            if self.colors[e] != color::ONE {
                return bad(format!("matching edge {e} not colored 1"));
            }
        }
        for (ci, c) in self.factor.cycles.iter().enumerate() {
            let seq: Vec<Color> = c.edges.iter().map(|&e| self.colors[e]).collect();
            let zeros = seq.iter().filter(|&&x| x == color::ZERO).count();
            if zeros != usize::from(c.is_odd()) {
                return bad(format!("cycle {ci} has {zeros} zero edges"));
            }
            // around the cycle, the non-zero edges alternate 2/3
            let len = seq.len();
            for i in 0..len {
                let (a, b) = (seq[i], seq[(i + 1) % len]);
                if a == color::ZERO || b == color::ZERO {
                    continue;
                }
                if !matches!((a, b), (2, 3) | (3, 2)) {
                    return bad(format!("cycle {ci} does not alternate 2/3 at position {i}"));
                }
            }
        }
        if self.colors.contains(&color::FOUR) {
            return bad("color 4 on an edge of G".into());
        }
        Ok(())
    }
}

/// Colors `g` canonically with respect to `f`. Each cycle is colored along
/// its canonical walk starting with 2; on an odd cycle the last edge of the
/// walk is the 0 edge.
pub fn canonical_coloring(g: &Multigraph, f: &TwoFactor) -> Result<EdgeColoring> {
    g.require_cubic()?;
    f.check_against(g)?;
    let mut colors = vec![color::ONE; g.edge_count()];
    for c in &f.cycles {
        let len = c.len();
        for (i, &e) in c.edges.iter().enumerate() {
            colors[e] = if c.is_odd() && i == len - 1 {
                color::ZERO
            } else if i % 2 == 0 {
                color::TWO
            } else {
                color::THREE
            };
        }
    }
    let coloring = EdgeColoring {
        colors,
        factor: f.clone(),
    };
    coloring.validate(g)?;
    Ok(coloring)
}

/// The color-2-deficient vertices `z` (one per odd cycle, in cycle order)
/// and their pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyPairing {
    pub z: Vec<VertexId>,
    pub pairs: Vec<(VertexId, VertexId)>,
}

fn deficient_in_cycle_order(g: &Multigraph, c: &EdgeColoring) -> Result<Vec<VertexId>> {
    let mut z = Vec::new();
    for cycle in c.factor.cycles.iter().filter(|cy| cy.is_odd()) {
        let missing: Vec<_> = cycle
            .vertices
            .iter()
            .copied()
            .filter(|&v| !c.incident_colors(g, v).contains(&color::TWO))
            .collect();
        if missing.len() != 1 {
            return Err(Error::Internal(format!(
                "odd cycle at {} has {} vertices missing color 2",
                cycle.vertices[0],
                missing.len()
            )));
        }
        z.push(missing[0]);
    }
    let mut sorted = z.clone();
    sorted.sort_unstable();
    if sorted != c.vertices_missing_two(g) {
        return Err(Error::Internal("a vertex off the odd cycles misses color 2".into()));
    }
    if z.len() % 2 == 1 {
        return Err(Error::Internal(format!(
            "odd number ({}) of deficient vertices",
            z.len()
        )));
    }
    Ok(z)
}

/// Pairs consecutive deficient vertices in cycle order.
pub fn deficiency_pairing(g: &Multigraph, c: &EdgeColoring) -> Result<DeficiencyPairing> {
    let z = deficient_in_cycle_order(g, c)?;
    let pairs = z.chunks(2).map(|p| (p[0], p[1])).collect();
    Ok(DeficiencyPairing { z, pairs })
}

/// A caller-chosen pairing of the deficient vertices.
pub fn deficiency_pairing_with(
    g: &Multigraph,
    c: &EdgeColoring,
    pairs: Vec<(VertexId, VertexId)>,
) -> Result<DeficiencyPairing> {
    let z = deficient_in_cycle_order(g, c)?;
    let mut used: Vec<VertexId> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    used.sort_unstable();
    let mut expect = z.clone();
    expect.sort_unstable();
    if used != expect {
        return Err(Error::InvalidArgument(
            "pairing does not partition the deficient vertices".into(),
        ));
    }
    Ok(DeficiencyPairing { z, pairs })
}

/// Every perfect pairing of `z` ((2t-1)!! of them), in a fixed order.
pub fn all_pairings(z: &[VertexId]) -> Vec<Vec<(VertexId, VertexId)>> {
    if z.is_empty() {
        return vec![Vec::new()];
    }
    let first = z[0];
    let mut out = Vec::new();
    for i in 1..z.len() {
        let rest: Vec<_> = z[1..]
            .iter()
            .enumerate()
            .filter(|&(j, _)| j + 1 != i)
            .map(|(_, &v)| v)
            .collect();
        for mut tail in all_pairings(&rest) {
            tail.insert(0, (first, z[i]));
            out.push(tail);
        }
    }
    out
}

/// Proper 3-edge-coloring by plain backtracking (colors 1..=3), used as an
/// oracle independent of the 2-factor machinery. `None` for snarks and for
/// graphs that are not cubic.
pub fn three_edge_coloring(g: &Multigraph) -> Option<Vec<Color>> {
    if !g.is_cubic() {
        return None;
    }
    // edges in BFS order so constraints bite early
    let m = g.edge_count();
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    let mut seen = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(e, w) in g.incident(v) {
                if !placed[e] {
                    placed[e] = true;
                    order.push(e);
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut colors = vec![0 as Color; m];
    fn rec(g: &Multigraph, order: &[EdgeId], i: usize, colors: &mut [Color]) -> bool {
        let Some(&e) = order.get(i) else {
            return true;
        };
        let (u, v) = g.endpoints(e);
        for c in 1..=3 {
            let clash = [u, v]
                .iter()
                .any(|&x| g.incident(x).iter().any(|&(f, _)| f != e && colors[f] == c));
            if clash {
                continue;
            }
            colors[e] = c;
            if rec(g, order, i + 1, colors) {
                return true;
            }
            colors[e] = 0;
        }
        false
    }
    rec(g, &order, 0, &mut colors).then_some(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::{oddness_analysis, perfect_matchings, two_factor_of, PerfectMatching};
    use crate::generate::corpus;
    use crate::graph_core::EdgeSet;

    fn first_factor(g: &Multigraph) -> TwoFactor {
        let m = perfect_matchings(g).unwrap().next().unwrap();
        two_factor_of(g, &m).unwrap()
    }

    #[test]
    fn k4_coloring() {
        let g = corpus::k4();
        let f = first_factor(&g);
        let c = canonical_coloring(&g, &f).unwrap();
        let seq: Vec<_> = f.cycles[0].edges.iter().map(|&e| c.color(e)).collect();
        assert_eq!(seq, vec![2, 3, 2, 3]);
        assert!(!c.colors.contains(&0));
        assert_eq!(c.colors.iter().filter(|&&x| x == 1).count(), 2);
        assert!(deficiency_pairing(&g, &c).unwrap().z.is_empty());
    }

    #[test]
    fn petersen_coloring() {
        let g = corpus::petersen();
        for m in perfect_matchings(&g).unwrap() {
            let f = two_factor_of(&g, &m).unwrap();
            let c = canonical_coloring(&g, &f).unwrap();
            assert_eq!(c.colors.iter().filter(|&&x| x == 1).count(), 5);
            for cy in &f.cycles {
                let seq: Vec<_> = cy.edges.iter().map(|&e| c.color(e)).collect();
                assert_eq!(seq, vec![2, 3, 2, 3, 0]);
            }
            let p = deficiency_pairing(&g, &c).unwrap();
            assert_eq!(p.z.len(), 2);
            assert_eq!(p.pairs.len(), 1);
            assert_eq!(c.colors.iter().filter(|&&x| x == 0).count(), f.odd_cycle_count);
        }
    }

    #[test]
    fn theta_coloring() {
        let g = corpus::theta();
        let m = PerfectMatching::new(&g, EdgeSet::from_indices(3, [2])).unwrap();
        let f = two_factor_of(&g, &m).unwrap();
        let c = canonical_coloring(&g, &f).unwrap();
        assert_eq!(c.colors, vec![2, 3, 1]);
    }

    #[test]
    fn local_color_sets() {
        for g in corpus::all().into_iter().filter(|g| g.vertex_count() <= 20) {
            let a = oddness_analysis(&g).unwrap();
            for f in &a.minimum_factors {
                let c = canonical_coloring(&g, f).unwrap();
                let z = deficiency_pairing(&g, &c).unwrap().z;
                for v in 0..g.vertex_count() {
                    let mut cs = c.incident_colors(&g, v);
                    cs.sort_unstable();
                    if cs.contains(&0) {
                        assert!(cs == vec![0, 1, 2] || cs == vec![0, 1, 3], "{cs:?}");
                        assert_eq!(cs == vec![0, 1, 3], z.contains(&v));
                    } else {
                        assert_eq!(cs, vec![1, 2, 3]);
                    }
                }
            }
        }
    }

    #[test]
    fn splice_with_four_odd_cycles() {
        let g = corpus::petersen_splice_2();
        let f = perfect_matchings(&g)
            .unwrap()
            .map(|m| two_factor_of(&g, &m).unwrap())
            .find(|f| f.odd_cycle_count == 4)
            .unwrap();
        let c = canonical_coloring(&g, &f).unwrap();
        let p = deficiency_pairing(&g, &c).unwrap();
        assert_eq!((p.z.len(), p.pairs.len()), (4, 2));
        assert_eq!(all_pairings(&p.z).len(), 3);
        let alt = deficiency_pairing_with(&g, &c, vec![(p.z[0], p.z[3]), (p.z[1], p.z[2])]).unwrap();
        assert_eq!(alt.z, p.z);
        assert!(deficiency_pairing_with(&g, &c, vec![(p.z[0], p.z[1])]).is_err());
    }

    #[test]
    fn pairing_counts() {
        assert_eq!(all_pairings(&[]).len(), 1);
        assert_eq!(all_pairings(&[1, 2, 3, 4, 5, 6]).len(), 15);
    }

    #[test]
    fn tait_coloring_oracle() {
        assert!(three_edge_coloring(&corpus::k4()).is_some());
        assert!(three_edge_coloring(&corpus::k33()).is_some());
        assert!(three_edge_coloring(&corpus::prism()).is_some());
        assert!(three_edge_coloring(&corpus::theta()).is_some());
        assert!(three_edge_coloring(&corpus::petersen()).is_none());
        let g = corpus::prism();
        let c = three_edge_coloring(&g).unwrap();
        for v in 0..g.vertex_count() {
            let mut cs: Vec<_> = g.incident(v).iter().map(|&(e, _)| c[e]).collect();
            cs.sort_unstable();
            assert_eq!(cs, vec![1, 2, 3]);
        }
    }
}
