//! Balanced valuations: flow to valuation and back, flow partitions, the
//! ±5/3 valuation and two independent balance checkers.

mod balance;
mod partition;
mod valuation;

pub use balance::{
    balance_check_cut, balance_check_cut_with_flow, balance_check_exhaustive, balanced_sign_valuation,
    valuation_to_flow, BalanceVerdict, DEFAULT_MAX_BALANCE_VERTICES,
};
pub use partition::{five_thirds_valuation, flow_partition, FlowPartition, PartitionProvenance};
pub use valuation::{valuation_from_flow, Rational, Valuation};
