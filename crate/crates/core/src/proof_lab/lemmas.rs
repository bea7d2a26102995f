use crate::canonical_coloring::color;
use crate::graph_core::Multigraph;
use crate::valuations::FlowPartition;

/// Every way a flow partition breaks the two structural lemmas: 1- and
/// 2-colored edges join different classes, and connected pieces of the
/// 2-factor are nearly balanced (even cycle: equal; odd cycle: at most one
/// more black; path: at most three more black). Both class orders are
/// checked. Empty means no violation.
pub fn lemma_violations(g: &Multigraph, p: &FlowPartition) -> Vec<String> {
    let mut out = Vec::new();
    let colors = &p.provenance.augmented.coloring.colors;
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        if (colors[e] == color::ONE || colors[e] == color::TWO) && p.is_black(x) == p.is_black(y) {
            out.push(format!("edge {e} ({x}-{y}) colored {} inside one class", colors[e]));
        }
    }
    for (ci, cyc) in p.factor().cycles.iter().enumerate() {
        let len = cyc.len();
        let black: Vec<i64> = cyc.vertices.iter().map(|&v| i64::from(p.is_black(v))).collect();
        let total_black: i64 = black.iter().sum();
        let diff = 2 * total_black - len as i64;
        let ok = if cyc.is_odd() { diff.abs() <= 1 } else { diff == 0 };
        if !ok {
            out.push(format!("cycle {ci} (length {len}) has black - white = {diff}"));
        }
        // proper subpaths: `count` consecutive vertices from every start
        for start in 0..len {
            let mut b = 0;
            for count in 1..len {
                b += black[(start + count - 1) % len];
                let d = 2 * b - count as i64;
                if d.abs() > 3 {
                    out.push(format!(
                        "cycle {ci}: path of {count} vertices from position {start} has black - white = {d}"
                    ));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::{perfect_matchings, two_factor_of};
    use crate::generate::corpus;
    use crate::valuations::flow_partition;

    #[test]
    fn corpus_small_graphs_clean() {
        for g in [
            corpus::k4(),
            corpus::petersen(),
            corpus::prism(),
            corpus::blanusa_a(),
            corpus::theta(),
        ] {
            for m in perfect_matchings(&g).unwrap().take(30) {
                let p = flow_partition(&g, &two_factor_of(&g, &m).unwrap(), None).unwrap();
                assert!(lemma_violations(&g, &p).is_empty());
            }
        }
    }

    #[test]
    fn tampered_partition_is_caught() {
        let g = corpus::petersen();
        let m = perfect_matchings(&g).unwrap().next().unwrap();
        let mut p = flow_partition(&g, &two_factor_of(&g, &m).unwrap(), None).unwrap();
        let v = p.white.iter().next().unwrap();
        p.white.remove(v);
        p.black.insert(v);
        assert!(!lemma_violations(&g, &p).is_empty());
    }
}
