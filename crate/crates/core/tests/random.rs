use ordered_ramsey::arrow::does_arrow;
use ordered_ramsey::random::{
    run_threshold_scan, sample_gnp, sample_gnp_stream, scan_to_csv, RandomError, ThresholdExperiment,
};
use ordered_ramsey::OrderedGraph;
use proptest::prelude::*;

fn experiment(n: usize, p_grid: Vec<f64>, trials: usize) -> ThresholdExperiment {
    ThresholdExperiment {
        h: OrderedGraph::monotone_path(3),
        n,
        p_grid,
        trials,
        seed: 17,
        search: Default::default(),
    }
}

#[test]
fn extreme_probabilities() {
    assert_eq!(sample_gnp(9, 0.0, 1), OrderedGraph::empty(9));
    assert_eq!(sample_gnp(9, 1.0, 1), OrderedGraph::complete(9));
}

#[test]
fn complete_graphs_always_arrow() {
    let p3 = OrderedGraph::monotone_path(3);
    assert!(does_arrow(&OrderedGraph::complete(10), &p3, &p3, &Default::default()).unwrap());
    let rows = run_threshold_scan(&experiment(10, vec![0.0, 1.0], 20)).unwrap();
    assert_eq!(rows[0].frequency(), 0.0);
    assert_eq!(rows[1].frequency(), 1.0);
}

#[test]
fn frequencies_rise_with_density() {
    let rows = run_threshold_scan(&experiment(9, vec![0.1, 0.3, 0.5, 0.7, 0.9], 100)).unwrap();
    // Two binomial standard deviations at 100 trials.
    for w in rows.windows(2) {
        assert!(w[1].frequency() >= w[0].frequency() - 0.1, "{:?}", rows);
    }
    assert_eq!(rows.iter().map(|r| r.unknown).sum::<usize>(), 0);
}

#[test]
fn invalid_experiments() {
    assert_eq!(
        run_threshold_scan(&experiment(5, vec![1.5], 3)),
        Err(RandomError::Probability(1.5))
    );
    assert_eq!(
        run_threshold_scan(&experiment(5, vec![0.5], 0)),
        Err(RandomError::NoTrials)
    );
}

#[test]
fn csv_has_one_row_per_point() {
    let rows = run_threshold_scan(&experiment(6, vec![0.0, 0.5, 1.0], 4)).unwrap();
    let csv = scan_to_csv(&rows);
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("p,trials,arrows,not_arrows,unknown\n"));
}

proptest! {
    #[test]
    fn sampling_is_reproducible_and_coupled(seed in any::<u64>(), stream in 0u64..50, p in 0.0f64..1.0, q in 0.0f64..1.0) {
        let (lo, hi) = if p < q { (p, q) } else { (q, p) };
        let a = sample_gnp_stream(8, lo, seed, stream);
        prop_assert_eq!(&a, &sample_gnp_stream(8, lo, seed, stream));
        let b = sample_gnp_stream(8, hi, seed, stream);
        for &(u, v) in a.edges() {
            prop_assert!(b.has_edge(u, v));
        }
    }
}
