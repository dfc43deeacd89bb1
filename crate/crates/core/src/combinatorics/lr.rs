use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::Partition;

type Table = Arc<BTreeMap<Partition, u64>>;
type Cache = RwLock<HashMap<(Partition, Partition), Table>>;

fn cached(cell: &'static OnceLock<Cache>, key: (Partition, Partition), f: impl FnOnce() -> BTreeMap<Partition, u64>) -> Table {
    let cache = cell.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&key) {
        return t.clone();
    }
    let t = Arc::new(f());
    cache.write().unwrap().insert(key, t.clone());
    t
}

/// `s_λ · s_μ` in the Schur basis, by adding the letters of μ as successive
/// horizontal strips subject to the lattice-word condition.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Table {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    cached(&CACHE, (lambda.clone(), mu.clone()), || {
        let mut out = BTreeMap::new();
        let rows = lambda.len() + mu.len();
        let mut shape = lambda.parts().to_vec();
        shape.resize(rows, 0);
        let prev = vec![0usize; rows];
        add_strips(&mut shape, mu.parts(), 0, &prev, &mut out);
        out
    })
}

// `prev[r]` is the number of boxes labelled with the previous letter in row r.
fn add_strips(shape: &mut Vec<usize>, mu: &[usize], k: usize, prev: &[usize], out: &mut BTreeMap<Partition, u64>) {
    if k == mu.len() {
        *out.entry(Partition::from_sorted(shape.clone())).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let mut added = vec![0usize; shape.len()];
    strip_rows(shape, &old, mu, k, 0, mu[k], 0, 0, prev, &mut added, out);
}

#[allow(clippy::too_many_arguments)]
fn strip_rows(
    shape: &mut Vec<usize>,
    old: &[usize],
    mu: &[usize],
    k: usize,
    r: usize,
    remaining: usize,
    cum_k: usize,
    cum_prev: usize,
    prev: &[usize],
    added: &mut Vec<usize>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let next = added.clone();
        add_strips(shape, mu, k + 1, &next, out);
        return;
    }
    if r == shape.len() {
        return;
    }
    let cap = if r == 0 { remaining } else { (old[r - 1] - old[r]).min(remaining) };
    for x in (0..=cap).rev() {
        let ck = cum_k + x;
        // first letter is unconstrained by the lattice condition
        if k > 0 && ck > cum_prev {
            continue;
        }
        shape[r] += x;
        added[r] = x;
        strip_rows(shape, old, mu, k, r + 1, remaining - x, ck, cum_prev + if k > 0 { prev[r] } else { 0 }, prev, added, out);
        shape[r] -= x;
        added[r] = 0;
    }
}

/// Littlewood–Richardson fillings of the skew shape `outer/inner`, grouped by
/// content. With `content` set, only fillings of that content are counted.
fn lr_fillings(outer: &Partition, inner: &Partition, content: Option<&Partition>) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !outer.contains(inner) {
        return out;
    }
    if let Some(c) = content {
        if c.size() + inner.size() != outer.size() {
            return out;
        }
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = outer.parts().iter().map(|&w| vec![0; w]).collect();
    let mut counts = vec![0usize; outer.len() + 2];
    let st = FillState {
        cells: &cells,
        inner,
        content: content.map(|c| c.parts()),
    };
    st.dfs(0, &mut grid, &mut counts, &mut out);
    out
}

struct FillState<'a> {
    cells: &'a [(usize, usize)],
    inner: &'a Partition,
    content: Option<&'a [usize]>,
}

impl FillState<'_> {
    fn dfs(&self, idx: usize, grid: &mut [Vec<usize>], counts: &mut Vec<usize>, out: &mut BTreeMap<Partition, u64>) {
        if idx == self.cells.len() {
            let c = counts[1..].iter().copied().filter(|&x| x > 0).collect();
            *out.entry(Partition::from_sorted(c)).or_insert(0) += 1;
            return;
        }
        let (r, c) = self.cells[idx];
        let mut hi = counts.iter().skip(1).take_while(|&&x| x > 0).count() + 1;
        if c + 1 < grid[r].len() {
            hi = hi.min(grid[r][c + 1]);
        }
        let lo = if r > 0 && c >= self.inner.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
        for v in lo..=hi {
            if v >= counts.len() {
                break;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            if let Some(content) = self.content {
                if counts[v] + 1 > content.get(v - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            grid[r][c] = v;
            counts[v] += 1;
            self.dfs(idx + 1, grid, counts, out);
            counts[v] -= 1;
        }
        grid[r][c] = 0;
    }
}

/// `N_{λμ}^ν`, the coefficient of `s_ν` in `s_λ s_μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    lr_fillings(nu, lambda, Some(mu)).get(mu).copied().unwrap_or(0)
}

/// The skew Schur function `s_{λ/κ}` in the Schur basis. Empty unless κ ⊆ λ.
pub fn skew(lambda: &Partition, kappa: &Partition) -> Table {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    cached(&CACHE, (lambda.clone(), kappa.clone()), || lr_fillings(lambda, kappa, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    #[test]
    fn pieri_and_small_cases() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("2,2")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2")), 0);
    }

    #[test]
    fn products() {
        let got = lr_product(&p("2,1"), &p("2,1"));
        let want: BTreeMap<Partition, u64> = [
            ("4,2", 1), ("4,1,1", 1), ("3,3", 1), ("3,2,1", 2),
            ("3,1,1,1", 1), ("2,2,2", 1), ("2,2,1,1", 1),
        ]
        .into_iter()
        .map(|(s, m)| (p(s), m))
        .collect();
        assert_eq!(*got, want);
        let unit = lr_product(&p("0"), &p("3,1"));
        assert_eq!(unit.len(), 1);
        assert_eq!(unit[&p("3,1")], 1);
        let pair = lr_product(&p("1"), &p("1"));
        assert_eq!(pair.len(), 2);
    }

    #[test]
    fn skew_matches_coefficients() {
        // s_{λ/κ} = Σ_ν N_{κν}^λ s_ν
        for n in 0..=7 {
            for lambda in Partition::all(n) {
                for k in 0..=n {
                    for kappa in Partition::all(k) {
                        let sk = skew(&lambda, &kappa);
                        for nu in Partition::all(n - k) {
                            let c = lr_coefficient(&kappa, &nu, &lambda);
                            assert_eq!(sk.get(&nu).copied().unwrap_or(0), c, "{lambda}/{kappa} at {nu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn strip_route_agrees_with_fillings() {
        for a in 0..=5 {
            for b in 0..=5 {
                for lambda in Partition::all(a) {
                    for mu in Partition::all(b) {
                        let prod = lr_product(&lambda, &mu);
                        for nu in Partition::all(a + b) {
                            assert_eq!(prod.get(&nu).copied().unwrap_or(0), lr_coefficient(&lambda, &mu, &nu));
                        }
                    }
                }
            }
        }
    }
}
