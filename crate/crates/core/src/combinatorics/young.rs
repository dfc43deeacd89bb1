use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num::{One, Zero};

use super::Partition;
use crate::Q;

/// A permutation of `{0, …, m-1}` stored as its image vector.
pub type Perm = Vec<usize>;

pub fn identity(m: usize) -> Perm {
    (0..m).collect()
}

/// `(σ∘τ)(x) = σ(τ(x))`.
pub fn compose(sigma: &[usize], tau: &[usize]) -> Perm {
    tau.iter().map(|&x| sigma[x]).collect()
}

pub fn inverse(sigma: &[usize]) -> Perm {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

pub fn sign(sigma: &[usize]) -> i64 {
    let mut seen = vec![false; sigma.len()];
    let mut s = 1;
    for i in 0..sigma.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = sigma[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Perm> {
    let mut cur = identity(m);
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Permutations of `0..m` preserving each block of `blocks` setwise.
fn block_permutations(m: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut out = vec![identity(m)];
    for block in blocks {
        let local = permutations(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for base in &out {
            for sigma in &local {
                let mut p = base.clone();
                for (a, &b) in sigma.iter().enumerate() {
                    p[block[a]] = block[b];
                }
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Element of the rational group algebra `Q[S_m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Perm, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_perm(identity(degree), Q::one())
    }

    /// Panics if `perm` is not a bijection.
    pub fn from_perm(perm: Perm, coef: Q) -> Self {
        let mut seen = vec![false; perm.len()];
        for &x in &perm {
            assert!(x < perm.len() && !seen[x], "not a permutation: {perm:?}");
            seen[x] = true;
        }
        let mut e = Self::zero(perm.len());
        e.add_term(perm, coef);
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Q> {
        &self.terms
    }

    pub fn coefficient(&self, perm: &[usize]) -> Q {
        self.terms.get(perm).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, perm: Perm, coef: Q) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(perm) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: Self) -> GroupAlgebraElement {
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (p, v) in &rhs.terms {
            out.add_term(p.clone(), v.clone());
        }
        out
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: Self) -> GroupAlgebraElement {
        assert_eq!(self.degree, rhs.degree);
        let mut acc: BTreeMap<Perm, Q> = BTreeMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                *acc.entry(compose(s, t)).or_insert_with(Q::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgebraElement { degree: self.degree, terms: acc }
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, v)| {
                let img: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
                format!("{v}*[{}]", img.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rows and columns of the canonical tableau of shape λ, which numbers the
/// boxes `0, 1, …` along rows.
pub(crate) fn canonical_rows_cols(lambda: &Partition) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut rows = Vec::new();
    let mut next = 0;
    for &p in lambda.parts() {
        rows.push((next..next + p).collect::<Vec<_>>());
        next += p;
    }
    let cols = (0..lambda.part(0))
        .map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
        .collect();
    (rows, cols)
}

/// `a_λ`: sum of the row stabilizer of the canonical tableau.
pub fn row_symmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    let (rows, _) = canonical_rows_cols(lambda);
    let mut out = GroupAlgebraElement::zero(lambda.size());
    for p in block_permutations(lambda.size(), &rows) {
        out.add_term(p, Q::one());
    }
    out
}

/// `b_λ`: signed sum of the column stabilizer of the canonical tableau.
pub fn column_antisymmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    let (_, cols) = canonical_rows_cols(lambda);
    let mut out = GroupAlgebraElement::zero(lambda.size());
    for p in block_permutations(lambda.size(), &cols) {
        let s = sign(&p);
        out.add_term(p, Q::from_integer(s.into()));
    }
    out
}

/// `c_λ = b_λ a_λ`.
pub fn young_symmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    &column_antisymmetrizer(lambda) * &row_symmetrizer(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{factorial, p};
    use crate::q;

    #[test]
    fn small_symmetrizers() {
        assert_eq!(young_symmetrizer(&p("1")), GroupAlgebraElement::identity(1));
        let id = GroupAlgebraElement::identity(2);
        let swap = GroupAlgebraElement::from_perm(vec![1, 0], q(1));
        assert_eq!(young_symmetrizer(&p("2")), &id + &swap);
        assert_eq!(young_symmetrizer(&p("1,1")), &id + &swap.scale(&q(-1)));
    }

    #[test]
    fn quasi_idempotent() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let c = young_symmetrizer(&lambda);
                let k = Q::from_integer(factorial(n) / lambda.num_standard_tableaux());
                assert_eq!(&c * &c, c.scale(&k), "{lambda}");
            }
        }
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(4).len(), 24);
        let s = vec![1, 2, 0];
        assert_eq!(compose(&s, &inverse(&s)), identity(3));
        assert_eq!(sign(&s), 1);
        assert_eq!(sign(&[1, 0, 2]), -1);
    }
}
