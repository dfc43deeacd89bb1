use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};
use serde::Serialize;

use crate::{Error, Result, Q};

/// Basis index, 1-based.
pub type Index = u16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Variance {
    Cov,
    Contra,
}

/// A group of consecutive slots. Width 1 is a plain factor; width ≥ 2 is an
/// exterior power stored with strictly increasing indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Block {
    pub variance: Variance,
    pub width: usize,
}

impl Block {
    pub fn plain(variance: Variance) -> Self {
        Block { variance, width: 1 }
    }

    pub fn wedge(variance: Variance, width: usize) -> Self {
        Block { variance, width }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    n: Index,
    blocks: Vec<Block>,
}

impl Signature {
    pub fn new(n: usize, blocks: Vec<Block>) -> Result<Self> {
        if n == 0 || n > Index::MAX as usize {
            return Err(Error::InvalidArgument(format!("rank {n} out of range")));
        }
        if blocks.iter().any(|b| b.width == 0) {
            return Err(Error::InvalidArgument("empty block".into()));
        }
        Ok(Signature { n: n as Index, blocks })
    }

    /// Only plain slots.
    pub fn plain(n: usize, slots: &[Variance]) -> Result<Self> {
        Self::new(n, slots.iter().map(|&v| Block::plain(v)).collect())
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_slots(&self) -> usize {
        self.blocks.iter().map(|b| b.width).sum()
    }

    pub fn slot_variances(&self) -> Vec<Variance> {
        self.blocks.iter().flat_map(|b| std::iter::repeat_n(b.variance, b.width)).collect()
    }

    /// Slot range of each block.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|b| {
                let r = start..start + b.width;
                start += b.width;
                r
            })
            .collect()
    }

    pub fn is_plain(&self) -> bool {
        self.blocks.iter().all(|b| b.width == 1)
    }

    pub fn to_plain(&self) -> Signature {
        Signature { n: self.n, blocks: self.slot_variances().into_iter().map(Block::plain).collect() }
    }

    pub fn concat(&self, other: &Signature) -> Result<Signature> {
        if self.n != other.n {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        Ok(Signature { n: self.n, blocks })
    }

    /// Sorts every wedge block of `idx` in place. Returns the sign, or `None`
    /// when a block has a repeated index.
    pub fn canonicalize(&self, idx: &mut [Index]) -> Option<i8> {
        let mut sign = 1i8;
        for r in self.block_ranges() {
            if r.len() > 1 {
                sign *= sort_with_sign(&mut idx[r])?;
            }
        }
        Some(sign)
    }
}

/// Bubble sort tracking the permutation sign. `None` on a repeat.
pub(crate) fn sort_with_sign(xs: &mut [Index]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..xs.len() {
        let mut j = i;
        while j > 0 && xs[j - 1] > xs[j] {
            xs.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && xs[j - 1] == xs[j] {
            return None;
        }
    }
    Some(sign)
}

/// Sparse element of a tensor space given by a [`Signature`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    sig: Signature,
    terms: BTreeMap<Vec<Index>, Q>,
}

impl TensorElement {
    pub fn zero(sig: Signature) -> Self {
        TensorElement { sig, terms: BTreeMap::new() }
    }

    pub fn basis(sig: Signature, idx: &[Index]) -> Result<Self> {
        let mut out = Self::zero(sig);
        out.try_add_term(idx.to_vec(), Q::one())?;
        Ok(out)
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Vec<Index>, Q)>) -> Result<Self> {
        let mut out = Self::zero(sig);
        for (idx, c) in terms {
            out.try_add_term(idx, c)?;
        }
        Ok(out)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn rank(&self) -> usize {
        self.sig.rank()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Index>, Q> {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_index(&self, idx: &[Index]) -> Result<()> {
        if idx.len() != self.sig.num_slots() {
            return Err(Error::SignatureMismatch(format!(
                "index of length {} for {} slots",
                idx.len(),
                self.sig.num_slots()
            )));
        }
        if idx.iter().any(|&i| i == 0 || i > self.sig.n) {
            return Err(Error::InvalidArgument(format!("index {idx:?} outside 1..={}", self.sig.n)));
        }
        Ok(())
    }

    pub fn try_add_term(&mut self, idx: Vec<Index>, c: Q) -> Result<()> {
        self.check_index(&idx)?;
        self.add_term(idx, c);
        Ok(())
    }

    /// Adds `c` times the basis tensor `idx` (wedge blocks in any order).
    pub(crate) fn add_term(&mut self, mut idx: Vec<Index>, c: Q) {
        if c.is_zero() {
            return;
        }
        let Some(s) = self.sig.canonicalize(&mut idx) else { return };
        let c = if s < 0 { -c } else { c };
        add_into(&mut self.terms, idx, c);
    }

    /// Coefficient of a basis tensor; wedge blocks may be given in any order.
    pub fn coefficient(&self, idx: &[Index]) -> Q {
        let mut idx = idx.to_vec();
        if idx.len() != self.sig.num_slots() {
            return Q::zero();
        }
        match self.sig.canonicalize(&mut idx) {
            None => Q::zero(),
            Some(s) => {
                let c = self.terms.get(&idx).cloned().unwrap_or_else(Q::zero);
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig.clone());
        }
        TensorElement {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch("addition of different signatures".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            add_into(&mut out.terms, k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Tensor product; signatures are concatenated.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let sig = self.sig.concat(&other.sig)?;
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut k = a.clone();
                k.extend_from_slice(b);
                terms.insert(k, x * y);
            }
        }
        Ok(TensorElement { sig, terms })
    }

    /// Expands wedge blocks into alternating sums of plain tensors, without
    /// normalization.
    pub fn to_plain(&self) -> Self {
        if self.sig.is_plain() {
            return self.clone();
        }
        let ranges = self.sig.block_ranges();
        let mut out = Self::zero(self.sig.to_plain());
        for (idx, c) in &self.terms {
            let mut partial: Vec<(Vec<Index>, i8)> = vec![(Vec::new(), 1)];
            for r in &ranges {
                let part = &idx[r.clone()];
                let mut next = Vec::new();
                for (pre, s) in &partial {
                    for (perm, ps) in signed_permutations(part) {
                        let mut k = pre.clone();
                        k.extend(perm);
                        next.push((k, s * ps));
                    }
                }
                partial = next;
            }
            for (k, s) in partial {
                out.add_term(k, if s < 0 { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// Replaces the slots in `range` term by term with the given linear map.
    /// The image indices must fit the same blocks.
    pub fn map_slots<F>(&self, range: std::ops::Range<usize>, f: F) -> Self
    where
        F: Fn(&[Index]) -> Vec<(Vec<Index>, Q)>,
    {
        let mut out = Self::zero(self.sig.clone());
        for (idx, c) in &self.terms {
            for (img, d) in f(&idx[range.clone()]) {
                let mut k = idx.clone();
                k.splice(range.clone(), img);
                out.add_term(k, c * &d);
            }
        }
        out
    }

    /// Regroups the slots into new blocks without changing the flat index,
    /// e.g. to view the first two plain slots as a 2-wedge. Wedge blocks of
    /// the result are antisymmetrized (sorted with sign; repeats vanish).
    pub fn regroup(&self, blocks: Vec<Block>) -> Result<Self> {
        let sig = Signature::new(self.rank(), blocks)?;
        if sig.slot_variances() != self.sig.slot_variances() {
            return Err(Error::SignatureMismatch("regroup changes slot variances".into()));
        }
        let mut out = Self::zero(sig);
        for (k, c) in self.to_plain().terms {
            out.add_term(k, c);
        }
        Ok(out)
    }

    /// `Some(c)` if `self = c·other`.
    pub fn ratio_to(&self, other: &Self) -> Option<Q> {
        if self.sig != other.sig {
            return None;
        }
        let Some((k, v)) = other.terms.iter().next() else {
            return self.is_zero().then(Q::zero);
        };
        let c = self.terms.get(k).cloned().unwrap_or_else(Q::zero) / v;
        (other.scale(&c) == *self).then_some(c)
    }
}

fn add_into(terms: &mut BTreeMap<Vec<Index>, Q>, k: Vec<Index>, c: Q) {
    use std::collections::btree_map::Entry;
    match terms.entry(k) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn signed_permutations(xs: &[Index]) -> Vec<(Vec<Index>, i8)> {
    crate::combinatorics::permutations(xs.len())
        .into_iter()
        .map(|p| {
            let s = crate::combinatorics::sign(&p) as i8;
            (p.iter().map(|&i| xs[i]).collect(), s)
        })
        .collect()
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

/// Panics on signature mismatch; use [`TensorElement::try_add`] otherwise.
impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).expect("signature mismatch")
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.try_sub(rhs).expect("signature mismatch")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ranges = self.sig.block_ranges();
        for (t, (idx, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (b, r) in self.sig.blocks.iter().zip(&ranges) {
                let star = if b.variance == Variance::Contra { "*" } else { "" };
                let s: Vec<String> = idx[r.clone()].iter().map(|i| i.to_string()).collect();
                write!(f, " e{star}[{}]", s.join(","))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use Variance::*;

    #[test]
    fn wedge_canonical_form() {
        let sig = Signature::new(3, vec![Block::wedge(Cov, 2), Block::plain(Contra)]).unwrap();
        let mut x = TensorElement::zero(sig.clone());
        x.add_term(vec![2, 1, 1], q(1));
        assert_eq!(x.coefficient(&[1, 2, 1]), q(-1));
        assert_eq!(x.coefficient(&[2, 1, 1]), q(1));
        x.add_term(vec![2, 2, 1], q(5));
        assert_eq!(x.len(), 1);
        let p = x.to_plain();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&[2, 1, 1]), q(1));
        assert_eq!(p.regroup(sig.blocks().to_vec()).unwrap(), x.scale(&q(2)));
        assert!(TensorElement::basis(sig, &[0, 1, 1]).is_err());
    }

    #[test]
    fn ratio() {
        let sig = Signature::plain(2, &[Cov]).unwrap();
        let e1 = TensorElement::basis(sig.clone(), &[1]).unwrap();
        let e2 = TensorElement::basis(sig.clone(), &[2]).unwrap();
        assert_eq!(e1.scale(&q(3)).ratio_to(&e1), Some(q(3)));
        assert_eq!((&e1 + &e2).ratio_to(&e1), None);
        assert_eq!(TensorElement::zero(sig).ratio_to(&e1), Some(q(0)));
    }
}
