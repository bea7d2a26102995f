use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::valuation::{ratio_json, valuation_from_flow, Rational, Valuation};
use crate::flow_algebra::{bounded_circulation, orient_or_witness, Circulation, Flow};
use crate::graph_core::subsets::MaskGraph;
use crate::graph_core::{Multigraph, VertexSet};
use crate::{Error, Exec, Result};

pub const DEFAULT_MAX_BALANCE_VERTICES: usize = 24;

/// Outcome of a balance check. A witness `S` has `lhs = |sum_S w| > rhs =
/// |boundary(S)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceVerdict {
    pub balanced: bool,
    pub witness: Option<VertexSet>,
    #[serde(with = "ratio_json")]
    pub lhs: Option<Rational>,
    pub rhs: Option<u64>,
    /// Connected subsets examined (exhaustive checker only).
    pub subsets_checked: Option<u64>,
}

impl BalanceVerdict {
    fn balanced(subsets_checked: Option<u64>) -> Self {
        BalanceVerdict {
            balanced: true,
            witness: None,
            lhs: None,
            rhs: None,
            subsets_checked,
        }
    }

    /// Builds an unbalanced verdict, checking that `s` really violates.
    fn violated(g: &Multigraph, w: &Valuation, s: VertexSet, subsets_checked: Option<u64>) -> Result<Self> {
        let lhs = w.sum_over(&s).abs();
        let rhs = g.boundary(&s).len() as u64;
        if lhs <= Rational::from_integer(rhs as i64) {
            return Err(Error::Internal("reported witness is not a violator".into()));
        }
        Ok(BalanceVerdict {
            balanced: false,
            witness: Some(s),
            lhs: Some(lhs),
            rhs: Some(rhs),
            subsets_checked,
        })
    }
}

/// Searches every connected vertex subset for `|sum_S w| > |boundary(S)|`.
/// Connected subsets suffice for any `w`: a violator splits into
/// components, and one of them violates. The lowest-rooted witness in
/// enumeration order is returned under either execution mode.
pub fn balance_check_exhaustive(g: &Multigraph, w: &Valuation, max_n: usize, exec: Exec) -> Result<BalanceVerdict> {
    let n = g.vertex_count();
    if n > max_n {
        return Err(Error::BoundExceeded {
            what: "vertex count for exhaustive balance check",
            actual: n,
            limit: max_n,
        });
    }
    if w.len() != n {
        return Err(Error::InvalidArgument(
            "valuation size differs from vertex count".into(),
        ));
    }
    let mg = MaskGraph::new(g)?;
    let scale = w.values.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
    let scaled: Vec<i64> = w.values.iter().map(|r| (r * scale).to_integer()).collect();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| g.incident(v).iter().map(|&(_, u)| u).collect())
        .collect();
    let violates = |s: u64| {
        let mut sum = 0i64;
        let mut bd = 0i64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            sum += scaled[v];
            bd += nbrs[v].iter().filter(|&&u| s >> u & 1 == 0).count() as i64;
        }
        sum.abs() > bd * scale
    };
    let best = AtomicUsize::new(usize::MAX);
    let per_root = exec.map_indices(n, |root| {
        let mut count = 0u64;
        let found = mg.for_each_rooted(root, &mut |s| {
            count += 1;
            if violates(s) {
                return ControlFlow::Break(Some(s));
            }
            if count.is_multiple_of(4096) && best.load(Ordering::Relaxed) < root {
                return ControlFlow::Break(None);
            }
            ControlFlow::Continue(())
        });
        match found {
            ControlFlow::Break(Some(s)) => {
                best.fetch_min(root, Ordering::Relaxed);
                (Some(s), count)
            }
            _ => (None, count),
        }
    });
    let winner = per_root.iter().position(|r| r.0.is_some());
    let upto = winner.map_or(n, |r| r + 1);
    let checked = per_root[..upto].iter().map(|r| r.1).sum();
    match winner {
        None => Ok(BalanceVerdict::balanced(Some(checked))),
        Some(r) => {
            let s = VertexSet::from_mask(n, per_root[r].0.expect("winner"));
            BalanceVerdict::violated(g, w, s, Some(checked))
        }
    }
}

/// Balance check through orientations and circulations: `w` is balanced iff
/// some orientation with the implied out-degrees carries a flow with values
/// in `1..k`. Returns that flow when balanced.
pub fn balance_check_cut_with_flow(g: &Multigraph, w: &Valuation) -> Result<(BalanceVerdict, Option<Flow>)> {
    let k = w.k;
    let target = w.target_outdegrees(g)?;
    let n = g.vertex_count();
    if target.iter().sum::<usize>() != g.edge_count() {
        let all = VertexSet::full(n);
        return Ok((BalanceVerdict::violated(g, w, all, None)?, None));
    }
    let o = match orient_or_witness(g, &target)? {
        Ok(o) => o,
        Err(r) => return Ok((BalanceVerdict::violated(g, w, r, None)?, None)),
    };
    match bounded_circulation(g, &o, 1, k - 1)? {
        Circulation::Feasible(fl) => Ok((BalanceVerdict::balanced(None), Some(fl.with_k(k)))),
        Circulation::Infeasible(x) => Ok((BalanceVerdict::violated(g, w, x, None)?, None)),
    }
}

pub fn balance_check_cut(g: &Multigraph, w: &Valuation) -> Result<BalanceVerdict> {
    Ok(balance_check_cut_with_flow(g, w)?.0)
}

/// A nowhere-zero `k`-flow realizing a balanced valuation of Jaeger form.
pub fn valuation_to_flow(g: &Multigraph, w: &Valuation) -> Result<Flow> {
    let (_, flow) = balance_check_cut_with_flow(g, w)?;
    let fl = flow.ok_or(Error::Unbalanced)?;
    if valuation_from_flow(g, &fl, w.k)? != *w {
        return Err(Error::Internal("flow does not reproduce the valuation".into()));
    }
    Ok(fl)
}

/// First balanced valuation with values `+-value` (half of each sign, minus
/// signs on the lexicographically first vertex set in increasing-mask
/// order), checked exhaustively. Independent of flows and partitions.
pub fn balanced_sign_valuation(
    g: &Multigraph,
    k: u32,
    value: Rational,
    max_n: usize,
    exec: Exec,
) -> Result<Option<Valuation>> {
    let n = g.vertex_count();
    if n > max_n.min(30) {
        return Err(Error::BoundExceeded {
            what: "vertex count for sign search",
            actual: n,
            limit: max_n.min(30),
        });
    }
    if n % 2 == 1 {
        return Ok(None);
    }
    let masks: Vec<u64> = (0u64..1 << n).filter(|m| m.count_ones() as usize == n / 2).collect();
    let hit = exec.find_first(masks.len(), |i| {
        let w = Valuation::signed(k, n, &VertexSet::from_mask(n, masks[i]), value);
        match balance_check_exhaustive(g, &w, n, Exec::Sequential) {
            Ok(v) if v.balanced => Some(w),
            _ => None,
        }
    });
    Ok(hit.map(|(_, w)| w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::{perfect_matchings, two_factor_of};
    use crate::flow_algebra::{cycle_flow, verify_flow};
    use crate::generate::corpus;
    use crate::valuations::{five_thirds_valuation, flow_partition};
    use num_traits::Zero;

    fn both(g: &Multigraph, w: &Valuation) -> (BalanceVerdict, BalanceVerdict) {
        let a = balance_check_exhaustive(g, w, 24, Exec::Parallel).unwrap();
        let b = balance_check_cut(g, w).unwrap();
        assert_eq!(a.balanced, b.balanced);
        (a, b)
    }

    #[test]
    fn zero_is_balanced() {
        let g = corpus::petersen();
        let w = Valuation::new(5, vec![Rational::zero(); 10]);
        let v = balance_check_exhaustive(&g, &w, 24, Exec::Sequential).unwrap();
        assert!(v.balanced);
        assert!(v.subsets_checked.unwrap() > 10);
    }

    #[test]
    fn prism_heavy_triangle() {
        let g = corpus::prism();
        let w = Valuation::signed(5, 6, &VertexSet::from_indices(6, [3, 4, 5]), Rational::new(5, 3));
        let (a, b) = both(&g, &w);
        assert!(!a.balanced);
        assert_eq!(a.witness.clone().unwrap().to_vec(), vec![0, 1, 2]);
        let tri = VertexSet::from_indices(6, [0, 1, 2]);
        assert!(!w.satisfied_on(&g, &tri));
        assert_eq!(w.sum_over(&tri), Rational::from_integer(5));
        for v in [&a, &b] {
            assert!(v.lhs.unwrap() > Rational::from_integer(v.rhs.unwrap() as i64));
        }
        let wb = b.witness.unwrap();
        assert!(wb == tri || wb == tri.complement());
    }

    #[test]
    fn partitions_agree_and_extract_flows() {
        for g in [corpus::k4(), corpus::petersen(), corpus::prism(), corpus::k33()] {
            for m in perfect_matchings(&g).unwrap() {
                let f = two_factor_of(&g, &m).unwrap();
                let p = flow_partition(&g, &f, None).unwrap();
                let w = five_thirds_valuation(&p);
                let (a, _) = both(&g, &w);
                if a.balanced {
                    let fl = valuation_to_flow(&g, &w).unwrap();
                    assert!(verify_flow(&g, &fl, 5, true).is_valid());
                } else {
                    assert!(matches!(valuation_to_flow(&g, &w), Err(Error::Unbalanced)));
                }
            }
        }
    }

    #[test]
    fn k4_partition_is_balanced() {
        let g = corpus::k4();
        let m = perfect_matchings(&g).unwrap().next().unwrap();
        let p = flow_partition(&g, &two_factor_of(&g, &m).unwrap(), None).unwrap();
        let (v, fl) = balance_check_cut_with_flow(&g, &five_thirds_valuation(&p)).unwrap();
        assert!(v.balanced);
        assert!(verify_flow(&g, &fl.unwrap(), 5, true).is_valid());
    }

    #[test]
    fn four_flow_round_trip() {
        let g = corpus::k4();
        let m = perfect_matchings(&g).unwrap().next().unwrap();
        let p = flow_partition(&g, &two_factor_of(&g, &m).unwrap(), None).unwrap();
        let w4 = valuation_from_flow(&g, &p.provenance.flow, 4).unwrap();
        let fl = valuation_to_flow(&g, &w4).unwrap();
        assert_eq!(valuation_from_flow(&g, &fl, 4).unwrap(), w4);
    }

    #[test]
    fn cycle_two_flow() {
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = Valuation::new(2, vec![Rational::zero(); 4]);
        let fl = valuation_to_flow(&g, &w).unwrap();
        assert_eq!(fl.values(), &[1, 1, 1, 1]);
        let expected = cycle_flow(&g, 0, &[0, 1, 2, 3], 1).unwrap();
        let same = fl.orientation() == expected.orientation();
        let reversed = (0..4).all(|e| fl.arc(e).unwrap() == expected.arc(e).unwrap().reversed());
        assert!(same || reversed);
    }

    #[test]
    fn unbalanced_totals() {
        let g = corpus::k4();
        let w = Valuation::new(5, vec![Rational::new(5, 3); 4]);
        let (a, b) = both(&g, &w);
        assert!(!a.balanced);
        assert_eq!(b.witness.unwrap().len(), 4);
    }

    #[test]
    fn sign_search() {
        let g = corpus::petersen();
        let w = balanced_sign_valuation(&g, 5, Rational::new(5, 3), 12, Exec::Parallel)
            .unwrap()
            .unwrap();
        assert!(balance_check_cut(&g, &w).unwrap().balanced);
        assert!(
            balanced_sign_valuation(&g, 4, Rational::from_integer(2), 12, Exec::Parallel)
                .unwrap()
                .is_none()
        );
        let seq = balanced_sign_valuation(&g, 5, Rational::new(5, 3), 12, Exec::Sequential)
            .unwrap()
            .unwrap();
        assert_eq!(seq, w);
    }

    #[test]
    fn refuses_large_graphs() {
        let g = corpus::flower_snark(7);
        let w = Valuation::new(5, vec![Rational::zero(); 28]);
        assert!(balance_check_exhaustive(&g, &w, 24, Exec::Sequential).is_err());
    }
}
