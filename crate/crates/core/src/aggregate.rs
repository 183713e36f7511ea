//! Per-group summary statistics over repeated timing records.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::record::{GroupKey, TimingRecord};

/// Mean and sample standard deviation of `total_ns` over one group.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateStat {
    pub key: GroupKey,
    pub mean_ns: f64,
    pub stddev_ns: f64,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AggregateWarning {
    /// Only one record in the group; its standard deviation is reported as 0.
    SingleRecord(GroupKey),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Aggregation {
    /// Sorted by group key.
    pub stats: Vec<AggregateStat>,
    pub warnings: Vec<AggregateWarning>,
}

/// Groups records by (adapter, strategy, function, chunk exponent).
///
/// Durations are sorted within each group before reduction, so the result
/// does not depend on record order.
pub fn aggregate(records: &[TimingRecord]) -> Aggregation {
    let mut groups: BTreeMap<GroupKey, Vec<u64>> = BTreeMap::new();
    for record in records {
        groups
            .entry(record.group_key())
            .or_default()
            .push(record.total_ns);
    }

    let mut out = Aggregation::default();
    for (key, mut durations) in groups {
        durations.sort_unstable();
        let n = durations.len();
        let total: u128 = durations.iter().map(|&d| u128::from(d)).sum();
        let mean_ns = total as f64 / n as f64;
        let stddev_ns = if n > 1 {
            let mut squared = 0.0;
            for &d in &durations {
                let shifted = d as f64 - mean_ns;
                squared += shifted * shifted;
            }
            libm::sqrt(squared / (n - 1) as f64)
        } else {
            out.warnings
                .push(AggregateWarning::SingleRecord(key.clone()));
            0.0
        };
        out.stats.push(AggregateStat {
            key,
            mean_ns,
            stddev_ns,
            n,
        });
    }
    out
}
