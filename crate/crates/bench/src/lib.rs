//! Shared inputs for the benchmarks.

use repcalc::{Bipartition, Partition};

/// Every partition of size at most `k`.
pub fn partitions_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(Partition::all).collect()
}

/// Every bipartition of total size at most `k`.
pub fn bipartitions_up_to(k: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for s in 0..=k {
        for a in 0..=s {
            for p in Partition::all(a) {
                for m in Partition::all(s - a) {
                    out.push(Bipartition::new(p.clone(), m));
                }
            }
        }
    }
    out
}
