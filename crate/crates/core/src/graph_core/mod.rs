//! Multigraphs, vertex/edge sets, cuts, max-flow and graph file formats.

mod cut;
mod ext;
mod graph;
mod io;
pub mod maxflow;
mod sets;
pub mod subsets;

pub use cut::{max_flow_min_cut, CutResult};
pub use ext::ExtNat;
pub use graph::{EdgeId, Multigraph, VertexId};
pub use io::{encode_edge_list, encode_graph6, parse_graph, Format};
pub use sets::{EdgeSet, IndexSet, VertexSet};
