use serde::{Deserialize, Serialize};

use super::matchings::perfect_matchings;
use super::two_factor::{two_factor_of, TwoFactor};
use crate::graph_core::{max_flow_min_cut, EdgeSet, ExtNat, Multigraph};
use crate::{Error, Exec, Result};

/// Oddness is computed by enumerating every perfect matching; past this
/// order the enumeration is refused rather than left to run for hours.
pub const DEFAULT_MAX_ODDNESS_VERTICES: usize = 40;

/// Upper bound on edge subsets examined by [`cyclic_edge_connectivity`].
pub const DEFAULT_MAX_CUT_SUBSETS: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddnessAnalysis {
    pub omega: usize,
    /// Every 2-factor with exactly `omega` odd cycles, in matching
    /// enumeration order.
    pub minimum_factors: Vec<TwoFactor>,
    /// Number of 2-factors (= perfect matchings) examined.
    pub factor_count: usize,
}

pub fn oddness_analysis(g: &Multigraph) -> Result<OddnessAnalysis> {
    oddness_analysis_bounded(g, DEFAULT_MAX_ODDNESS_VERTICES)
}

pub fn oddness_analysis_bounded(g: &Multigraph, max_vertices: usize) -> Result<OddnessAnalysis> {
    g.require_cubic()?;
    if g.vertex_count() > max_vertices {
        return Err(Error::BoundExceeded {
            what: "vertex count for oddness enumeration",
            actual: g.vertex_count(),
            limit: max_vertices,
        });
    }
    let mut omega = usize::MAX;
    let mut minimum_factors = Vec::new();
    let mut factor_count = 0;
    for m in perfect_matchings(g)? {
        factor_count += 1;
        let f = two_factor_of(g, &m)?;
        if f.odd_cycle_count < omega {
            omega = f.odd_cycle_count;
            minimum_factors.clear();
        }
        if f.odd_cycle_count == omega {
            minimum_factors.push(f);
        }
    }
    if factor_count == 0 {
        return Err(Error::InvalidGraph("graph has no perfect matching".into()));
    }
    Ok(OddnessAnalysis {
        omega,
        minimum_factors,
        factor_count,
    })
}

/// Fewest edges whose removal leaves two odd cycles of `f` in different
/// components: the minimum over pairs of odd cycles of the min cut between
/// their vertex sets. ∞ when `f` has no odd cycles.
pub fn m_of(g: &Multigraph, f: &TwoFactor) -> Result<ExtNat> {
    f.check_against(g)?;
    let n = g.vertex_count();
    let odd: Vec<_> = f.odd_cycles().map(|(_, c)| c.vertex_set(n)).collect();
    if odd.is_empty() {
        return Ok(ExtNat::Infinite);
    }
    let mut best = u64::MAX;
    for i in 0..odd.len() {
        for j in i + 1..odd.len() {
            let cut = max_flow_min_cut(g, &odd[i], &odd[j])?;
            best = best.min(cut.value as u64);
        }
    }
    Ok(ExtNat::Finite(best))
}

/// `m_of` for every minimum 2-factor, in the same order as
/// `analysis.minimum_factors`.
pub fn m_per_factor(g: &Multigraph, analysis: &OddnessAnalysis, exec: Exec) -> Result<Vec<ExtNat>> {
    exec.map_slice(&analysis.minimum_factors, |f| m_of(g, f))
        .into_iter()
        .collect()
}

/// Maximum of `m_of` over all minimum 2-factors.
pub fn m_star(g: &Multigraph, exec: Exec) -> Result<ExtNat> {
    let analysis = oddness_analysis(g)?;
    m_star_from(g, &analysis, exec)
}

pub fn m_star_from(g: &Multigraph, analysis: &OddnessAnalysis, exec: Exec) -> Result<ExtNat> {
    Ok(m_per_factor(g, analysis, exec)?
        .into_iter()
        .max()
        .expect("at least one minimum factor"))
}

/// Number of components of `g - removed` that contain a cycle.
fn cyclic_components(g: &Multigraph, removed: &EdgeSet) -> usize {
    let (count, comp) = g.components_without(removed);
    let mut vertices = vec![0usize; count];
    let mut edges = vec![0usize; count];
    for &c in &comp {
        vertices[c] += 1;
    }
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if !removed.contains(e) {
            edges[comp[u]] += 1;
        }
    }
    (0..count).filter(|&c| edges[c] >= vertices[c]).count()
}

/// Largest `k` such that no edge cut with fewer than `k` edges leaves two
/// components containing cycles; ∞ when no such cut exists at all (no two
/// vertex-disjoint cycles). Cuts are searched by increasing size.
pub fn cyclic_edge_connectivity(g: &Multigraph) -> Result<ExtNat> {
    cyclic_edge_connectivity_bounded(g, DEFAULT_MAX_CUT_SUBSETS, Exec::Parallel)
}

pub fn cyclic_edge_connectivity_bounded(g: &Multigraph, max_subsets: u64, exec: Exec) -> Result<ExtNat> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.edge_count();
    let mut budget = max_subsets;
    for k in 0..=m {
        let combos = binomial(m as u64, k as u64);
        if combos > budget {
            return Err(Error::BoundExceeded {
                what: "edge subsets for cyclic connectivity",
                actual: (max_subsets - budget).saturating_add(combos) as usize,
                limit: max_subsets as usize,
            });
        }
        budget -= combos;
        if k == 0 {
            if cyclic_components(g, &EdgeSet::new(m)) >= 2 {
                return Ok(ExtNat::Finite(0));
            }
            continue;
        }
        // split on the first chosen edge; each branch enumerates the rest
        let found = exec.find_first(m, |first| {
            let mut chosen: Vec<usize> = Vec::with_capacity(k);
            chosen.push(first);
            search_cuts(g, &mut chosen, k, first + 1).then_some(())
        });
        if found.is_some() {
            return Ok(ExtNat::Finite(k as u64));
        }
    }
    Ok(ExtNat::Infinite)
}

fn search_cuts(g: &Multigraph, chosen: &mut Vec<usize>, k: usize, next: usize) -> bool {
    let m = g.edge_count();
    if chosen.len() == k {
        let removed = EdgeSet::from_indices(m, chosen.iter().copied());
        return cyclic_components(g, &removed) >= 2;
    }
    let need = k - chosen.len();
    for e in next..=m.saturating_sub(need) {
        chosen.push(e);
        if search_cuts(g, chosen, k, e + 1) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Oddness together with the cut parameters built on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityProfile {
    pub oddness: usize,
    pub cyclic_connectivity: ExtNat,
    pub m_star: ExtNat,
    /// `(index into the minimum factors, m of that factor)`
    pub per_factor_m: Vec<(usize, ExtNat)>,
}

pub fn connectivity_profile(g: &Multigraph, exec: Exec) -> Result<ConnectivityProfile> {
    let analysis = oddness_analysis(g)?;
    let per = m_per_factor(g, &analysis, exec)?;
    Ok(ConnectivityProfile {
        oddness: analysis.omega,
        cyclic_connectivity: cyclic_edge_connectivity(g)?,
        m_star: per.iter().copied().max().expect("nonempty"),
        per_factor_m: per.into_iter().enumerate().collect(),
    })
}
