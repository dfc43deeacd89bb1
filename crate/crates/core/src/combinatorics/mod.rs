//! Partitions, bipartitions, Littlewood–Richardson coefficients, Young
//! symmetrizers and the dominance-type order on pairs of partitions.

mod lr;
mod order;
mod young;

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lr::{lr_coefficient, lr_product, skew};
pub use order::{pair_partition_leq, pairs_with_length};
pub use young::{
    column_antisymmetrizer, compose, inverse, permutations, row_symmetrizer, sign, young_symmetrizer,
    GroupAlgebraElement, Perm,
};

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the zero partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the zero partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Whether the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiplicity of each part value, as `(value, count)` with values
    /// decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Hook length of cell `(i, j)` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn num_standard_tableaux(&self) -> BigInt {
        let mut num = factorial(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                num /= BigInt::from(self.hook(i, j));
            }
        }
        num
    }

    /// Dimension of the polynomial GL(n) irreducible via the hook-content
    /// formula. Vanishes when `n < len()`.
    pub fn hook_content(&self, n: i64) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                num *= BigInt::from(n + j as i64 - i as i64);
                den *= BigInt::from(self.hook(i, j));
            }
        }
        num / den
    }

    /// Size of the centralizer of a permutation of cycle type `self`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (v, c) in self.multiplicities() {
            z *= BigInt::from(v).pow(c as u32) * factorial(c);
        }
        z
    }

    /// Sign of a permutation of cycle type `self`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Each part multiplied by `r`.
    pub fn scaled(&self, r: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * r).collect())
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of `n` with at most `max_len` parts.
    pub fn all_bounded(n: usize, max_len: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= max_len).collect()
    }
}

fn gen_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop();
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `a^k` repeats `a` k times; `0` or the empty
    /// string is the zero partition.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "partition",
            input: s.to_string(),
        };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let v: usize = base.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(v, exp));
        }
        Partition::new(parts).map_err(|_| bad())
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Index of an irreducible algebraic GL(n) representation: `plus` records
/// the positive part of the highest weight, `minus` the negated reversed
/// negative part.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl Bipartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        Bipartition { plus, minus }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size()
    }

    pub fn dual(&self) -> Bipartition {
        Bipartition::new(self.minus.clone(), self.plus.clone())
    }

    /// Highest weight at rank `n`, or `None` if `len() > n`.
    pub fn weight(&self, n: usize) -> Option<Vec<i64>> {
        if self.len() > n {
            return None;
        }
        let mut w = vec![0i64; n];
        for (i, &p) in self.plus.parts().iter().enumerate() {
            w[i] = p as i64;
        }
        for (i, &p) in self.minus.parts().iter().enumerate() {
            w[n - 1 - i] = -(p as i64);
        }
        Some(w)
    }

    /// Inverse of [`Bipartition::weight`] for a weakly decreasing weight.
    pub fn from_weight(w: &[i64]) -> Bipartition {
        let plus = w.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
        let minus = w.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as usize).collect();
        Bipartition::new(Partition::from_sorted(plus), Partition::from_sorted(minus))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.plus, self.minus)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// `plus|minus`, e.g. `2,1|1` or `0|1^2`. A bare partition is read as
    /// having empty minus part.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "bipartition",
            input: s.to_string(),
        };
        let (p, m) = s.split_once('|').unwrap_or((s, "0"));
        Ok(Bipartition::new(p.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?))
    }
}

/// A pair `(μ, ν)` of partitions, indexing the summands of the graded
/// symmetric algebra on tree and wheel parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairOfPartitions {
    pub mu: Partition,
    pub nu: Partition,
}

impl PairOfPartitions {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        PairOfPartitions { mu, nu }
    }

    pub fn total_size(&self) -> usize {
        self.mu.size() + self.nu.size()
    }

    /// All pairs of total size `i`.
    pub fn all(i: usize) -> Vec<PairOfPartitions> {
        let mut out = Vec::new();
        for a in (0..=i).rev() {
            for mu in Partition::all(a) {
                for nu in Partition::all(i - a) {
                    out.push(PairOfPartitions::new(mu.clone(), nu));
                }
            }
        }
        out
    }

    /// Pairs of total size `i` with `l(μ) = l`.
    pub fn with_length(i: usize, l: usize) -> Vec<PairOfPartitions> {
        Self::all(i).into_iter().filter(|p| p.mu.len() == l).collect()
    }
}

impl fmt::Display for PairOfPartitions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.mu, self.nu)
    }
}

impl FromStr for PairOfPartitions {
    type Err = Error;

    /// `mu;nu`, e.g. `2,1;1` or `0;2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once(';').ok_or(Error::Parse {
            what: "pair of partitions",
            input: s.to_string(),
        })?;
        Ok(PairOfPartitions::new(a.parse()?, b.parse()?))
    }
}

/// Shorthand used in tests and tables: `p("2,1")`. Panics on bad input.
pub fn p(s: &str) -> Partition {
    s.parse().expect("valid partition literal")
}

/// Shorthand: `bp("2,1|1")`. Panics on bad input.
pub fn bp(s: &str) -> Bipartition {
    s.parse().expect("valid bipartition literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("3").conjugate(), p("1,1,1"));
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("0").conjugate(), p("0"));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(p("1^3"), p("1,1,1"));
        assert_eq!(p("3,1^2").to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(bp("2,1|1").to_string(), "2,1|1");
        assert_eq!(bp("0|1,1").to_string(), "0|1,1");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("1,0,1".parse::<Partition>().is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(Partition::all(5).len(), 7);
        assert_eq!(Partition::all(10).len(), 42);
        assert_eq!(p("3,2").num_standard_tableaux(), BigInt::from(5));
        assert_eq!(p("2,1").hook_content(3), BigInt::from(8));
        assert_eq!(p("1,1,1,1").hook_content(3), BigInt::from(0));
        assert_eq!(p("2,2,1").z(), BigInt::from(8));
    }

    #[test]
    fn weights_round_trip() {
        let b = bp("2,1|3");
        let w = b.weight(5).unwrap();
        assert_eq!(w, vec![2, 1, 0, 0, -3]);
        assert_eq!(Bipartition::from_weight(&w), b);
        assert!(b.weight(2).is_none());
    }

    #[test]
    fn pair_counts() {
        // |P_i| = Σ_a p(a) p(i-a)
        assert_eq!(PairOfPartitions::all(2).len(), 5);
        assert_eq!(PairOfPartitions::all(3).len(), 10);
        assert_eq!(PairOfPartitions::all(4).len(), 20);
    }
}
