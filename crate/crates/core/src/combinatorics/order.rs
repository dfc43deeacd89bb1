use super::PairOfPartitions;
use crate::error::{Error, Result};

use super::young::permutations;

/// Whether `b ≥ a` in the order on `P_i^l`: the first components dominate
/// partwise, and the parts of `a.nu` can be distributed, after permuting
/// `a.mu` by some σ, to fill the gaps `ξ_j − μ_σ(j)` and the parts of `η`.
pub fn pair_partition_leq(a: &PairOfPartitions, b: &PairOfPartitions) -> Result<bool> {
    if a.total_size() != b.total_size() || a.mu.len() != b.mu.len() {
        return Err(Error::Incomparable(format!("{a} and {b} lie in different P_i^l")));
    }
    let (mu, nu) = (&a.mu, &a.nu);
    let (xi, eta) = (&b.mu, &b.nu);
    let l = mu.len();
    if (0..l).any(|j| xi.part(j) < mu.part(j)) {
        return Ok(false);
    }
    for sigma in permutations(l) {
        let mut targets: Vec<i64> = (0..l).map(|j| xi.part(j) as i64 - mu.part(sigma[j]) as i64).collect();
        if targets.iter().any(|&t| t < 0) {
            continue;
        }
        targets.extend(eta.parts().iter().map(|&e| e as i64));
        if distribute(nu.parts(), 0, &mut targets) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn distribute(parts: &[usize], k: usize, room: &mut [i64]) -> bool {
    if k == parts.len() {
        return room.iter().all(|&r| r == 0);
    }
    let v = parts[k] as i64;
    for j in 0..room.len() {
        if room[j] >= v {
            room[j] -= v;
            let ok = distribute(parts, k + 1, room);
            room[j] += v;
            if ok {
                return true;
            }
        }
    }
    false
}

/// Elements of `P_i^l`, the pairs of total size `i` with `l(μ) = l`.
pub fn pairs_with_length(i: usize, l: usize) -> Vec<PairOfPartitions> {
    PairOfPartitions::with_length(i, l)
}

#[cfg(test)]
fn min_element(i: usize, l: usize) -> PairOfPartitions {
    PairOfPartitions::new(super::Partition::column(l), super::Partition::column(i - l))
}
