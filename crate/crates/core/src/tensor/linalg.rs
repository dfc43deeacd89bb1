use std::collections::{BTreeMap, VecDeque};

use num::{BigInt, One, Zero};

use super::element::{Index, Signature, TensorElement, Variance};
use super::group::Generator;
use crate::glrep::dimension;
use crate::{Bipartition, Error, Partition, Result, Q};

/// Largest ambient size (entries) the brute-force oracles accept by default.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

pub type SparseVec = BTreeMap<usize, Q>;

/// Exact row echelon form grown one vector at a time.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0;
        while let Some((&k, c)) = v.range(cursor..).next() {
            if let Some(row) = self.rows.get(&k) {
                let c = c.clone();
                for (j, r) in row {
                    let e = v.entry(*j).or_insert_with(Q::zero);
                    *e -= &c * r;
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            }
            cursor = k + 1;
        }
        v
    }

    /// Adds `v`; returns true if it was independent of the stored rows.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&lead, c)) = v.iter().next() else { return false };
        let inv = Q::one() / c;
        self.rows.insert(lead, v.into_iter().map(|(k, x)| (k, x * &inv)).collect());
        true
    }
}

/// Strictly increasing tuples in `1..=n` of length m.
pub fn increasing_tuples(n: usize, m: usize) -> Vec<Vec<Index>> {
    fn go(start: Index, n: Index, m: usize, cur: &mut Vec<Index>, out: &mut Vec<Vec<Index>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for j in start..=n {
            cur.push(j);
            go(j + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as Index, m, &mut Vec::new(), &mut out);
    out
}

/// All tuples in `[n]^m`.
pub fn all_tuples(n: usize, m: usize) -> Vec<Vec<Index>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=n as Index).map(move |j| {
                    let mut t2 = t.clone();
                    t2.push(j);
                    t2
                })
            })
            .collect();
    }
    out
}

fn flat_index(idx: &[Index], n: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + (i as usize - 1))
}

/// Coordinates of `x` as a sparse vector.
pub fn to_sparse(x: &TensorElement) -> SparseVec {
    x.terms().iter().map(|(k, v)| (flat_index(k, x.rank()), v.clone())).collect()
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

fn mixed_slots(p: usize, q: usize) -> Vec<Variance> {
    let mut v = vec![Variance::Cov; p];
    v.extend(std::iter::repeat_n(Variance::Contra, q));
    v
}

/// Dimension of the joint kernel of the `pq` contractions on
/// `H^{⊗p}⊗(H*)^{⊗q}` at rank n, by exact rank.
pub fn kernel_dim(p: usize, q: usize, n: usize, budget: u128) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("rank 0".into()));
    }
    let ambient = (n as u128).pow((p + q) as u32);
    check_budget((p * q).max(1) as u128 * ambient, budget)?;
    let mut ech = Echelon::new();
    for k in 0..p {
        for l in p..p + q {
            for rest in all_tuples(n, p + q - 2) {
                let mut row = SparseVec::new();
                for j in 1..=n as Index {
                    let mut idx = rest.clone();
                    let (lo, hi) = (k, l);
                    idx.insert(lo, j);
                    idx.insert(hi, j);
                    row.insert(flat_index(&idx, n), Q::one());
                }
                ech.insert(row);
            }
        }
    }
    Ok(ambient as usize - ech.rank())
}

/// `Σ dim V_λ̲(n)·f^{λ⁺}·f^{λ⁻}` over bipartitions with `|λ⁺|=p`, `|λ⁻|=q`.
pub fn kernel_dim_formula(p: usize, q: usize, n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for a in Partition::all(p) {
        for b in Partition::all(q) {
            if a.len() + b.len() > n {
                continue;
            }
            let f = a.num_standard_tableaux() * b.num_standard_tableaux();
            total += dimension(&Bipartition::new(a.clone(), b), n) * f;
        }
    }
    total
}

/// True iff every (covariant, contravariant) contraction of `x` vanishes.
pub fn in_joint_kernel(x: &TensorElement) -> bool {
    let x = x.to_plain();
    let vars = x.signature().slot_variances();
    for k in (0..vars.len()).filter(|&k| vars[k] == Variance::Cov) {
        for l in (0..vars.len()).filter(|&l| vars[l] == Variance::Contra) {
            let mut acc: BTreeMap<Vec<Index>, Q> = BTreeMap::new();
            for (idx, c) in x.terms() {
                if idx[k] != idx[l] {
                    continue;
                }
                let key: Vec<Index> =
                    idx.iter().enumerate().filter(|&(s, _)| s != k && s != l).map(|(_, &i)| i).collect();
                *acc.entry(key).or_insert_with(Q::zero) += c;
            }
            if acc.values().any(|v| !v.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Generators `E(k,l)` (k≠l) and `P(k,l)` (k<l) at rank n.
pub fn all_generators(n: usize) -> Vec<Generator> {
    let n = n as Index;
    let mut g = Vec::new();
    for k in 1..=n {
        for l in 1..=n {
            if k != l {
                g.push(Generator::E(k, l));
            }
            if k < l {
                g.push(Generator::P(k, l));
            }
        }
    }
    g
}

/// Dimension of the smallest subspace containing x and stable under every
/// `E(k,l)` and `P(k,l)`.
pub fn span_closure_dim(x: &TensorElement, budget: u128) -> Result<usize> {
    let n = x.rank();
    check_budget((n as u128).pow(x.signature().num_slots() as u32), budget)?;
    let gens = all_generators(n);
    let mut ech = Echelon::new();
    let mut queue = VecDeque::new();
    if ech.insert(to_sparse(x)) {
        queue.push_back(x.clone());
    }
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = g.apply(&v)?;
            if ech.insert(to_sparse(&w)) {
                queue.push_back(w);
            }
        }
    }
    Ok(ech.rank())
}

/// `e_{p,q} = e_1⊗⋯⊗e_p⊗e_n*⊗⋯⊗e_{n−q+1}*`.
pub fn e_pq(p: usize, q: usize, n: usize) -> Result<TensorElement> {
    let sig = Signature::plain(n, &mixed_slots(p, q))?;
    let mut idx: Vec<Index> = (1..=p as Index).collect();
    idx.extend((0..q).map(|j| (n - j) as Index));
    TensorElement::basis(sig, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new();
        let v = |xs: &[(usize, i64)]| xs.iter().map(|&(k, c)| (k, q(c))).collect::<SparseVec>();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!e.insert(v(&[])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_dim(1, 1, 2, DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(kernel_dim(2, 1, 3, DEFAULT_BUDGET).unwrap(), 21);
        assert_eq!(kernel_dim(1, 0, 5, DEFAULT_BUDGET).unwrap(), 5);
        assert!(matches!(kernel_dim(3, 3, 10, DEFAULT_BUDGET), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn kernel_matches_schur_weyl_count() {
        for p in 0..=4 {
            for q in 0..=4 - p {
                for n in 1..=4 {
                    let k = kernel_dim(p, q, n, DEFAULT_BUDGET).unwrap();
                    assert_eq!(BigInt::from(k), kernel_dim_formula(p, q, n), "p={p} q={q} n={n}");
                }
            }
        }
    }

    #[test]
    fn span_closure_examples() {
        let sig = Signature::plain(3, &[Variance::Cov]).unwrap();
        assert_eq!(span_closure_dim(&TensorElement::basis(sig, &[1]).unwrap(), DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(span_closure_dim(&e_pq(1, 1, 3).unwrap(), DEFAULT_BUDGET).unwrap(), 8);
        assert_eq!(span_closure_dim(&e_pq(2, 1, 3).unwrap(), DEFAULT_BUDGET).unwrap(), 21);
    }
}
