use ffibench_core::record::{ChunkExponent, Function, Strategy as BindingStrategy, TimingRecord};
use ffibench_core::{FloorRule, aggregate, kernels, ols_fit, overhead_series};
use proptest::prelude::*;

fn buffers() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1e3f64..1e3, 1..500)
}

fn scale_floor(x: f64) -> f64 {
    x.abs().max(1.0)
}

proptest! {
    #[test]
    fn mean_lies_within_range(xs in buffers()) {
        let m = kernels::mean(&xs).unwrap();
        let lo = xs.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(lo <= m && m <= hi);
    }

    #[test]
    fn stddev_is_non_negative(xs in buffers()) {
        prop_assert!(kernels::stddev(&xs).unwrap() >= 0.0);
    }

    #[test]
    fn stddev_is_shift_invariant(xs in buffers(), c in -1e3f64..1e3) {
        let sd = kernels::stddev(&xs).unwrap();
        let shifted: Vec<f64> = xs.iter().map(|x| x + c).collect();
        let sd_shifted = kernels::stddev(&shifted).unwrap();
        prop_assert!((sd_shifted - sd).abs() <= 1e-9 * scale_floor(sd));
    }

    #[test]
    fn stddev_scales_with_abs_factor(xs in buffers(), c in -1e3f64..1e3) {
        let sd = kernels::stddev(&xs).unwrap();
        let scaled: Vec<f64> = xs.iter().map(|x| c * x).collect();
        let sd_scaled = kernels::stddev(&scaled).unwrap();
        prop_assert!((sd_scaled - c.abs() * sd).abs() <= 1e-9 * c.abs() * scale_floor(sd));
    }

    #[test]
    fn mean_is_linear(xs in buffers(), c in -1e3f64..1e3) {
        let m = kernels::mean(&xs).unwrap();
        let scaled: Vec<f64> = xs.iter().map(|x| c * x).collect();
        let m_scaled = kernels::mean(&scaled).unwrap();
        prop_assert!((m_scaled - c * m).abs() <= 1e-9 * c.abs() * scale_floor(m));
    }

    #[test]
    fn ols_recovers_exact_lines(
        slope in -1e3f64..1e3,
        intercept in -1e6f64..1e6,
        xs in prop::collection::btree_set(1u32..5000, 3..40),
    ) {
        let points: Vec<(f64, f64)> = xs
            .iter()
            .map(|&x| (f64::from(x), intercept + slope * f64::from(x)))
            .collect();
        let fit = ols_fit(&points).unwrap();
        let y_scale = points.iter().map(|p| p.1.abs()).fold(1.0, f64::max);
        prop_assert!((fit.slope - slope).abs() <= 1e-12 * y_scale);
        prop_assert!((fit.intercept - intercept).abs() <= 1e-12 * y_scale * 5000.0);
        prop_assert!(fit.slope_se <= 1e-12 * y_scale);
        prop_assert!(fit.intercept_se <= 1e-12 * y_scale * 5000.0);
    }

    #[test]
    fn aggregate_ignores_record_order(
        totals in prop::collection::vec((0usize..3, 0u64..1_000_000_000), 1..60),
        seed in any::<u64>(),
    ) {
        let records: Vec<TimingRecord> = totals
            .iter()
            .map(|&(group, total_ns)| record("a", 10.0 + group as f64, total_ns))
            .collect();
        let mut shuffled = records.clone();
        // Deterministic Fisher-Yates from the seed.
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(aggregate(&records), aggregate(&shuffled));
    }

    #[test]
    fn floor_never_exceeds_baseline_means(
        means in prop::collection::vec(1u64..1_000_000, 1..18),
    ) {
        let records: Vec<TimingRecord> = means
            .iter()
            .enumerate()
            .map(|(i, &t)| record("reference_baseline", 10.0 + 0.5 * i as f64, t))
            .collect();
        let agg = aggregate(&records);
        let rule = FloorRule::BaselineMinimum("reference_baseline".into());
        let series = overhead_series(&agg.stats, &rule, 1_000_000).unwrap();
        for s in &series {
            for stat in &agg.stats {
                prop_assert!(s.floor_ns <= stat.mean_ns);
            }
            prop_assert!(s.points.iter().all(|p| p.overhead_ns >= 0.0));
        }
    }
}

fn record(adapter: &str, exponent: f64, total_ns: u64) -> TimingRecord {
    TimingRecord {
        adapter: adapter.to_string(),
        strategy: BindingStrategy::InSitu,
        function: Function::Mean,
        sample_id: "s0".to_string(),
        run_id: 0,
        chunk_exponent: Some(ChunkExponent::new(exponent).unwrap()),
        n_calls: 1,
        total_ns,
    }
}
