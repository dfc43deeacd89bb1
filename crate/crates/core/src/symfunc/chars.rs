//! Irreducible characters of symmetric groups, by Murnaghan–Nakayama.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::combinatorics::Partition;
use crate::Q;

pub(crate) struct CharTable {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `chi[λ][ρ]`, indices into `parts`.
    pub chi: Vec<Vec<i64>>,
    pub z: Vec<Q>,
}

impl CharTable {
    #[cfg(test)]
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.chi[self.index[lambda]][self.index[rho]]
    }
}

/// `s_μ · p_k` in the Schur basis: add border strips of size k, signed by
/// height, via bead moves on beta-numbers.
pub(crate) fn mul_power_sum(mu: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = mu.len() + k;
    let beta: Vec<usize> = (0..len).map(|i| mu.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &x) in beta.iter().enumerate() {
        let y = x + k;
        if beta.contains(&y) {
            continue;
        }
        let between = beta.iter().filter(|&&b| b > x && b < y).count();
        let mut next = beta.clone();
        next[idx] = y;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

pub(crate) fn table(n: usize) -> Arc<CharTable> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build(n));
    cache.write().unwrap().entry(n).or_insert(t).clone()
}

fn build(n: usize) -> CharTable {
    let parts = Partition::all(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut chi = vec![vec![0i64; parts.len()]; parts.len()];
    for (j, rho) in parts.iter().enumerate() {
        if n == 0 {
            chi[0][0] = 1;
            break;
        }
        let k = *rho.parts().last().unwrap();
        let rest = Partition::from_unsorted(rho.parts()[..rho.len() - 1].to_vec());
        let sub = table(n - k);
        let col = sub.index[&rest];
        let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
        for (i, mu) in sub.parts.iter().enumerate() {
            let c = sub.chi[i][col];
            if c == 0 {
                continue;
            }
            for (lambda, s) in mul_power_sum(mu, k) {
                *acc.entry(lambda).or_insert(0) += c * s;
            }
        }
        for (lambda, c) in acc {
            chi[index[&lambda]][j] = c;
        }
    }
    let z = parts.iter().map(|p| Q::from_integer(p.z())).collect();
    CharTable { parts, index, chi, z }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;
    use num::BigInt;

    #[test]
    fn known_values() {
        let t = table(3);
        assert_eq!(t.value(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(t.value(&p("2,1"), &p("3")), -1);
        assert_eq!(t.value(&p("1,1,1"), &p("2,1")), -1);
        let t = table(4);
        assert_eq!(t.value(&p("2,2"), &p("2,2")), 2);
        assert_eq!(t.value(&p("3,1"), &p("4")), -1);
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=8 {
            let t = table(n);
            for a in 0..t.parts.len() {
                for b in 0..t.parts.len() {
                    let s: i64 = (0..t.parts.len()).map(|l| t.chi[l][a] * t.chi[l][b]).sum();
                    let want = if a == b { t.parts[a].z() } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), want);
                }
            }
            for (l, lambda) in t.parts.iter().enumerate() {
                let id = t.index[&Partition::column(n)];
                assert_eq!(BigInt::from(t.chi[l][id]), lambda.num_standard_tableaux());
            }
        }
    }
}
