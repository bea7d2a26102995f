//! How often does a flow partition give a balanced ±5/3 valuation? Runs
//! over every 2-factor with odd cycles (minimum or not) of all bridgeless
//! cubic multigraphs up to `N` vertices and of seeded random cubic graphs.
//!
//! cargo run --release -p nzflow --example partition_survey -- 12 200

use nzflow::factors::{oddness_analysis, perfect_matchings, two_factor_of};
use nzflow::generate::enumerate::bridgeless_cubic_multigraphs;
use nzflow::generate::random::random_cubic;
use nzflow::valuations::{balance_check_cut, five_thirds_valuation, flow_partition};
use nzflow::{Exec, Multigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Default)]
struct Tally {
    graphs: usize,
    /// Graphs whose every 2-factor has odd cycles.
    odd_graphs: usize,
    factors: usize,
    balanced: usize,
    minimum: usize,
    minimum_balanced: usize,
    graphs_without_balanced_minimum: usize,
}

fn survey(g: &Multigraph, t: &mut Tally) {
    t.graphs += 1;
    let omega = oddness_analysis(g).unwrap().omega;
    t.odd_graphs += usize::from(omega > 0);
    let mut any_minimum = false;
    for m in perfect_matchings(g).unwrap() {
        let f = two_factor_of(g, &m).unwrap();
        if f.odd_cycle_count == 0 {
            continue;
        }
        let ok = balance_check_cut(g, &five_thirds_valuation(&flow_partition(g, &f, None).unwrap()))
            .unwrap()
            .balanced;
        t.factors += 1;
        t.balanced += usize::from(ok);
        if f.odd_cycle_count == omega {
            t.minimum += 1;
            t.minimum_balanced += usize::from(ok);
            any_minimum |= ok;
        }
    }
    t.graphs_without_balanced_minimum += usize::from(omega > 0 && !any_minimum);
}

fn report(label: &str, t: &Tally) {
    println!(
        "{label}: {} graphs, {} not 3-edge-colorable; {}/{} odd factors balanced; \
         {}/{} minimum factors balanced; {} graphs with no balanced minimum factor",
        t.graphs, t.odd_graphs, t.balanced, t.factors, t.minimum_balanced, t.minimum, t.graphs_without_balanced_minimum
    );
}

fn main() {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().map_or(12, |s| s.parse().unwrap());
    let samples: usize = args.next().map_or(200, |s| s.parse().unwrap());

    let mut t = Tally::default();
    for g in bridgeless_cubic_multigraphs(max_n, Exec::Parallel)
        .into_iter()
        .flatten()
    {
        survey(&g, &mut t);
    }
    report(&format!("all n <= {max_n}"), &t);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut t = Tally::default();
    while t.graphs < samples {
        let g = random_cubic(2 * rng.gen_range(5..=10), true, &mut rng);
        if g.is_bridgeless().is_ok() {
            survey(&g, &mut t);
        }
    }
    report("random n <= 20", &t);
}
