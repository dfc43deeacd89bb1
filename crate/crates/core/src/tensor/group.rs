use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{One, Zero};

use super::element::{Index, TensorElement, Variance};
use crate::{Error, Result, Q};

/// Generator of the group actions used on tensors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Elementary matrix: `e_l ↦ e_k + e_l`, dually `e_k* ↦ e_k* − e_l*`.
    E(Index, Index),
    /// Transposition of `e_k` and `e_l` (and of their duals).
    P(Index, Index),
}

impl Generator {
    fn validate(&self, n: usize) -> Result<()> {
        let (Generator::E(k, l) | Generator::P(k, l)) = *self;
        if k == 0 || l == 0 || k as usize > n || l as usize > n {
            return Err(Error::InvalidArgument(format!("{self} outside rank {n}")));
        }
        if matches!(self, Generator::E(..)) && k == l {
            return Err(Error::InvalidArgument(format!("{self} needs k ≠ l")));
        }
        Ok(())
    }

    /// Image of one basis vector.
    fn act(&self, v: Variance, i: Index) -> Vec<(Index, i64)> {
        match (*self, v) {
            (Generator::E(k, l), Variance::Cov) if i == l => vec![(k, 1), (l, 1)],
            (Generator::E(k, l), Variance::Contra) if i == k => vec![(k, 1), (l, -1)],
            (Generator::P(k, l), _) if i == k => vec![(l, 1)],
            (Generator::P(k, l), _) if i == l => vec![(k, 1)],
            _ => vec![(i, 1)],
        }
    }

    /// Action on a single tensor.
    pub fn apply(&self, x: &TensorElement) -> Result<TensorElement> {
        self.validate(x.rank())?;
        let vars = x.signature().slot_variances();
        let mut out = TensorElement::zero(x.signature().clone());
        for (idx, c) in x.terms() {
            let mut partial: Vec<(Vec<Index>, i64)> = vec![(Vec::with_capacity(idx.len()), 1)];
            for (&i, &v) in idx.iter().zip(&vars) {
                let img = self.act(v, i);
                if img.len() == 1 {
                    for (k, s) in partial.iter_mut() {
                        k.push(img[0].0);
                        *s *= img[0].1;
                    }
                } else {
                    let mut next = Vec::with_capacity(partial.len() * img.len());
                    for (k, s) in &partial {
                        for &(j, t) in &img {
                            let mut k2 = k.clone();
                            k2.push(j);
                            next.push((k2, s * t));
                        }
                    }
                    partial = next;
                }
            }
            for (k, s) in partial {
                out.add_term(k, c * Q::from_integer(s.into()));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(k, l) => write!(f, "E({k},{l})"),
            Generator::P(k, l) => write!(f, "P({k},{l})"),
        }
    }
}

/// Formal rational combination of words in the generators. A word acts by
/// its last letter first, so `(g·h)x = g(h x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOp {
    terms: BTreeMap<Vec<Generator>, Q>,
}

impl GroupOp {
    pub fn identity() -> Self {
        Self::word(Vec::new())
    }

    pub fn zero() -> Self {
        GroupOp { terms: BTreeMap::new() }
    }

    pub fn word(w: Vec<Generator>) -> Self {
        let w = w.into_iter().filter(|g| !matches!(g, Generator::P(k, l) if k == l)).collect();
        GroupOp { terms: BTreeMap::from([(w, Q::one())]) }
    }

    pub fn e(k: Index, l: Index) -> Self {
        Self::word(vec![Generator::E(k, l)])
    }

    pub fn p(k: Index, l: Index) -> Self {
        Self::word(vec![Generator::P(k, l)])
    }

    /// `id − E(k,l)`.
    pub fn id_minus_e(k: Index, l: Index) -> Self {
        &Self::identity() - &Self::e(k, l)
    }

    /// `E(k,l) − id`.
    pub fn e_minus_id(k: Index, l: Index) -> Self {
        &Self::e(k, l) - &Self::identity()
    }

    /// `id − P(k,l)`.
    pub fn id_minus_p(k: Index, l: Index) -> Self {
        &Self::identity() - &Self::p(k, l)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_word(w.clone(), v * c);
        }
        out
    }

    fn add_word(&mut self, w: Vec<Generator>, c: Q) {
        let e = self.terms.entry(w).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Generator>, Q> {
        &self.terms
    }

    pub fn apply(&self, x: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(x.signature().clone());
        for (w, c) in &self.terms {
            let mut y = x.clone();
            for g in w.iter().rev() {
                y = g.apply(&y)?;
            }
            out = out.try_add(&y.scale(c))?;
        }
        Ok(out)
    }
}

/// Applies `g` to `x`, checking the declared rank.
pub fn apply_group(g: &GroupOp, n: usize, x: &TensorElement) -> Result<TensorElement> {
    if n != x.rank() {
        return Err(Error::RankMismatch { expected: n, found: x.rank() });
    }
    g.apply(x)
}

impl Add for &GroupOp {
    type Output = GroupOp;
    fn add(self, rhs: &GroupOp) -> GroupOp {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_word(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupOp {
    type Output = GroupOp;
    fn sub(self, rhs: &GroupOp) -> GroupOp {
        self + &rhs.scale(&-Q::one())
    }
}

impl Mul for &GroupOp {
    type Output = GroupOp;
    fn mul(self, rhs: &GroupOp) -> GroupOp {
        let mut out = GroupOp::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_word(w, x * y);
            }
        }
        out
    }
}

/// Product of the factors in the given order.
pub fn product(ops: &[GroupOp]) -> GroupOp {
    ops.iter().fold(GroupOp::identity(), |acc, g| &acc * g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use crate::tensor::element::{Signature, Variance::*};

    #[test]
    fn elementary_actions() {
        let cov = Signature::plain(2, &[Cov]).unwrap();
        let e2 = TensorElement::basis(cov.clone(), &[2]).unwrap();
        let img = GroupOp::e(1, 2).apply(&e2).unwrap();
        assert_eq!(img.coefficient(&[1]), q(1));
        assert_eq!(img.coefficient(&[2]), q(1));
        let contra = Signature::plain(2, &[Contra]).unwrap();
        let f1 = TensorElement::basis(contra, &[1]).unwrap();
        let img = GroupOp::e(1, 2).apply(&f1).unwrap();
        assert_eq!(img.coefficient(&[1]), q(1));
        assert_eq!(img.coefficient(&[2]), q(-1));
        assert_eq!(GroupOp::p(1, 1), GroupOp::identity());
        assert!(GroupOp::e(1, 1).apply(&e2).is_err());
        assert!(apply_group(&GroupOp::identity(), 3, &e2).is_err());
    }

    #[test]
    fn pairing_is_invariant() {
        // Σ_j e_j ⊗ e_j* is fixed by every generator.
        let sig = Signature::plain(3, &[Cov, Contra]).unwrap();
        let id = TensorElement::from_terms(sig, (1..=3).map(|j| (vec![j, j], q(1)))).unwrap();
        for g in [GroupOp::e(1, 3), GroupOp::e(3, 2), GroupOp::p(1, 2)] {
            assert_eq!(g.apply(&id).unwrap(), id);
        }
    }
}
