//! Orientations and integer flows, flow sums, the augmented graph with its
//! explicit nowhere-zero 4-flow, exhaustive `Z_k` flow search and bounded
//! circulations.
//!
//! Stored values are never negative: a negative value is represented by
//! reversing the edge.

mod augmented;
mod circulation;
mod flow;
mod oracle;

use serde::{Deserialize, Serialize};

pub use augmented::{build_augmented, construct_4flow, AddedPair, AlternatingCycle, AugmentedGraph};
pub use circulation::{bounded_circulation, directed_boundary, orient_or_witness, orient_with_outdegrees, Circulation};
pub use flow::{cycle_flow, flow_sum, verify_flow, Arc, ConservationViolation, Flow, FlowReport, Orientation};
pub use oracle::{mod_to_integer_flow, nz_mod_flow_oracle, ModFlow, OracleOutcome, DEFAULT_MAX_DIMENSION};

use crate::graph_core::{encode_edge_list, EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlowKind {
    Integer,
    Mod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEdge {
    pub edge: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
    pub value: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowCertificate {
    pub graph: String,
    pub k: u32,
    pub edges: Vec<CertificateEdge>,
    pub kind: FlowKind,
    pub verified: bool,
}

/// The graph's name, or a stable FNV-1a hash of its edge-list encoding.
pub fn graph_label(g: &Multigraph) -> String {
    if let Some(name) = g.name() {
        return name.to_string();
    }
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in encode_edge_list(g).bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("fnv1a:{h:016x}")
}

impl FlowCertificate {
    pub fn integer(g: &Multigraph, fl: &Flow, k: u32) -> Self {
        let edges = fl
            .domain()
            .map(|e| {
                let a = fl.arc(e).expect("domain edge");
                CertificateEdge {
                    edge: e,
                    tail: a.tail,
                    head: a.head,
                    value: fl.value(e),
                }
            })
            .collect();
        FlowCertificate {
            graph: graph_label(g),
            k,
            edges,
            kind: FlowKind::Integer,
            verified: verify_flow(g, fl, k, true).is_valid(),
        }
    }

    pub fn modular(g: &Multigraph, mf: &ModFlow) -> Self {
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| CertificateEdge {
                edge: e,
                tail: u,
                head: v,
                value: mf.values[e],
            })
            .collect();
        FlowCertificate {
            graph: graph_label(g),
            k: mf.k,
            edges,
            kind: FlowKind::Mod,
            verified: mf.values.len() == g.edge_count() && mf.is_circulation(g) && mf.is_nowhere_zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::corpus;

    #[test]
    fn certificate_json_shape() {
        let g = corpus::theta();
        let fl = cycle_flow(&g, 0, &[0, 1], 1).unwrap();
        let cert = FlowCertificate::integer(&g, &fl, 2);
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["kind"], "integer");
        assert_eq!(json["graph"], "theta");
        assert_eq!(json["verified"], false);
        assert_eq!(json["edges"][0]["tail"], 0);
        assert_eq!(json["edges"].as_array().unwrap().len(), 2);
        let back: FlowCertificate = serde_json::from_value(json).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn unnamed_graphs_get_stable_hashes() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(graph_label(&g), graph_label(&g.clone()));
        assert!(graph_label(&g).starts_with("fnv1a:"));
        let h = Multigraph::new(2, vec![(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_ne!(graph_label(&g), graph_label(&h));
    }
}
