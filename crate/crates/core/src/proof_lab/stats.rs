use serde::{Deserialize, Serialize};

use crate::canonical_coloring::color;
use crate::graph_core::{Multigraph, VertexSet};
use crate::valuations::FlowPartition;
use crate::{Error, Result};

/// Color statistics of the cut around a connected vertex set `S` under a
/// flow partition. `a`, `b` are the class sizes oriented so that `b >= a`
/// (`swapped` says whether black and white were exchanged for that).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutColorStats {
    pub set: VertexSet,
    pub white: usize,
    pub black: usize,
    pub swapped: bool,
    pub a: usize,
    pub b: usize,
    /// `b - a`
    pub k: usize,
    /// `|boundary(S)|`
    pub c: usize,
    pub c1: usize,
    pub c2: usize,
    /// Color-2-deficient vertices in `S` by class.
    pub deficient_white: usize,
    pub deficient_black: usize,
    pub l: usize,
    /// Number of deficient pairs of the whole graph.
    pub t: usize,
    /// Equality in `k <= c1`; reported, never assumed.
    pub k_equals_c1: bool,
}

impl CutColorStats {
    /// `|sum_S w| > |boundary(S)|` for the ±5/3 valuation, i.e. `5k > 3c`.
    pub fn violates(&self) -> bool {
        5 * self.k > 3 * self.c
    }
}

pub fn cut_color_stats(g: &Multigraph, s: &VertexSet, p: &FlowPartition) -> Result<CutColorStats> {
    if s.universe() != g.vertex_count() || s.is_empty() {
        return Err(Error::InvalidArgument(
            "vertex set must be a nonempty subset of the graph".into(),
        ));
    }
    if !g.is_connected_subset(s) {
        return Err(Error::InvalidArgument(
            "vertex set does not induce a connected subgraph".into(),
        ));
    }
    let colors = &p.provenance.augmented.coloring.colors;
    let (white, black) = p.counts(s);
    let swapped = white > black;
    let (a, b) = if swapped { (black, white) } else { (white, black) };
    let boundary = g.boundary(s);
    let c = boundary.len();
    let c1 = boundary.iter().filter(|&e| colors[e] == color::ONE).count();
    let c2 = boundary.iter().filter(|&e| colors[e] == color::TWO).count();
    let z = &p.provenance.pairing.z;
    let deficient_white = z.iter().filter(|&&v| s.contains(v) && !p.is_black(v)).count();
    let deficient_black = z.iter().filter(|&&v| s.contains(v) && p.is_black(v)).count();
    let l = deficient_white.abs_diff(deficient_black);
    let t = p.provenance.pairing.pairs.len();
    let k = b - a;
    let stats = CutColorStats {
        set: s.clone(),
        white,
        black,
        swapped,
        a,
        b,
        k,
        c,
        c1,
        c2,
        deficient_white,
        deficient_black,
        l,
        t,
        k_equals_c1: k == c1,
    };
    let fail = |what: &str| Err(Error::Internal(format!("cut statistics violate {what}: {stats:?}")));
    if k > c1 {
        return fail("k <= c1");
    }
    if k > c2 + l {
        return fail("k <= c2 + l");
    }
    if l > t {
        return fail("l <= t");
    }
    if c1 + c2 > c {
        return fail("c1 + c2 <= c");
    }
    Ok(stats)
}
