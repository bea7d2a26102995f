//! Perfect matchings, 2-factors, oddness and the odd-cycle cut parameters.

mod connectivity;
mod matchings;
mod two_factor;

pub use connectivity::{
    connectivity_profile, cyclic_edge_connectivity, cyclic_edge_connectivity_bounded, m_of, m_per_factor, m_star,
    m_star_from, oddness_analysis, oddness_analysis_bounded, ConnectivityProfile, OddnessAnalysis,
    DEFAULT_MAX_CUT_SUBSETS, DEFAULT_MAX_ODDNESS_VERTICES,
};
pub use matchings::{perfect_matchings, PerfectMatching, PerfectMatchings};
pub use two_factor::{two_factor_of, FactorCycle, TwoFactor};
