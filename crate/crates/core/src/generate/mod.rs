//! Graph constructions: the named corpus, exhaustive small-graph generation
//! and seeded random sampling.

pub mod corpus;
pub mod enumerate;
pub mod random;
