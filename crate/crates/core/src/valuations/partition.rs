use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::valuation::{valuation_from_flow, Rational, Valuation};
use crate::canonical_coloring::{canonical_coloring, deficiency_pairing, deficiency_pairing_with, DeficiencyPairing};
use crate::factors::TwoFactor;
use crate::flow_algebra::{build_augmented, construct_4flow, AugmentedGraph, Flow};
use crate::graph_core::{Multigraph, VertexId, VertexSet};
use crate::{Error, Result};

/// White (`w' = -2`) and black (`w' = +2`) vertices, with everything that
/// produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowPartition {
    pub white: VertexSet,
    pub black: VertexSet,
    pub provenance: PartitionProvenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionProvenance {
    pub pairing: DeficiencyPairing,
    pub augmented: AugmentedGraph,
    /// The nowhere-zero 4-flow on the augmented graph.
    pub flow: Flow,
}

impl FlowPartition {
    pub fn factor(&self) -> &TwoFactor {
        &self.provenance.augmented.coloring.factor
    }

    pub fn is_black(&self, v: VertexId) -> bool {
        self.black.contains(v)
    }

    /// `(a_X, b_X)`.
    pub fn counts(&self, x: &VertexSet) -> (usize, usize) {
        (x.intersection(&self.white).len(), x.intersection(&self.black).len())
    }
}

/// Canonical coloring, deficiency pairing (consecutive in cycle order unless
/// `pairs` is given), augmented graph, its 4-flow, and the sign split of the
/// induced valuation on `M_G`.
pub fn flow_partition(
    g: &Multigraph,
    f: &TwoFactor,
    pairs: Option<Vec<(VertexId, VertexId)>>,
) -> Result<FlowPartition> {
    g.require_bridgeless()?;
    let c = canonical_coloring(g, f)?;
    let pairing = match pairs {
        Some(p) => deficiency_pairing_with(g, &c, p)?,
        None => deficiency_pairing(g, &c)?,
    };
    let augmented = build_augmented(g, &c, &pairing)?;
    let flow = construct_4flow(&augmented)?;
    let w = valuation_from_flow(&augmented.graph, &flow, 4)?;
    let n = g.vertex_count();
    let two = Rational::from_integer(2);
    let mut white = VertexSet::new(n);
    let mut black = VertexSet::new(n);
    for (v, &x) in w.values.iter().enumerate() {
        if x == two {
            black.insert(v);
        } else if x == -two {
            white.insert(v);
        } else {
            return Err(Error::Internal(format!("w'({v}) = {x}, expected +-2")));
        }
    }
    if !w.total().is_zero() {
        return Err(Error::Internal("w' does not sum to zero".into()));
    }
    Ok(FlowPartition {
        white,
        black,
        provenance: PartitionProvenance {
            pairing,
            augmented,
            flow,
        },
    })
}

/// `-5/3` on white vertices, `+5/3` on black ones.
pub fn five_thirds_valuation(p: &FlowPartition) -> Valuation {
    let n = p.white.universe();
    Valuation::signed(5, n, &p.white, Rational::new(5, 3))
}
