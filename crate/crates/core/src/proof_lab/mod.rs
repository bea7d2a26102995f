//! The counting argument behind the 5-flow theorem, made executable: cut
//! color statistics, the tree reduction and its identities, the structural
//! lemmas, the hypothesis check and the certification pipeline.

mod certify;
mod counting;
mod lemmas;
mod reduction;
mod stats;

pub use certify::{
    certify, hypothesis_check, hypothesis_with, meets_threshold, Bounds, Certificate, CertifyConfig, Hypothesis,
    OracleCheck, PartitionTrace, Stage, Status,
};
pub use counting::{verify_counting_propositions, Check, CountingReport};
pub use lemmas::lemma_violations;
pub use reduction::{tree_reduction, ComponentKind, FactorPiece, TreeReduction};
pub use stats::{cut_color_stats, CutColorStats};
