use super::element::Index;
use super::uvec::MagnusGen;
use crate::{Error, Result};

/// Reduced word in `x_1, …, x_n`; letter `k` is `x_k`, `-k` its inverse.
pub type Word = Vec<i32>;

pub fn reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Automorphism of the free group of rank n, given by the images of the
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAut {
    images: Vec<Word>,
}

impl FreeAut {
    pub fn identity(n: usize) -> Self {
        FreeAut { images: (1..=n as i32).map(|k| vec![k]).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn from_generator(g: MagnusGen, n: usize) -> Result<Self> {
        g.validate(n)?;
        let mut out = Self::identity(n);
        let x = |i: Index| i as i32;
        match g {
            MagnusGen::G(a, b) => out.images[b as usize - 1] = vec![x(a), x(b), -x(a)],
            MagnusGen::F(a, b, c) => out.images[c as usize - 1] = vec![x(c), x(a), x(b), -x(a), -x(b)],
            MagnusGen::H(k, l) => {
                for j in l..k {
                    out.images[j as usize - 1] = vec![x(k), x(j), -x(k)];
                }
            }
        }
        Ok(out)
    }

    /// Image of a word.
    pub fn apply(&self, w: &[i32]) -> Word {
        let mut out = Vec::new();
        for &l in w {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_from_slice(img);
            } else {
                out.extend(invert(img));
            }
            out = reduce(&out);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeAut) -> Result<FreeAut> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(FreeAut { images: other.images.iter().map(|w| self.apply(w)).collect() })
    }
}

/// True iff the automorphisms of the tuple commute pairwise.
pub fn free_auto_check_commute(tuple: &[MagnusGen], n: usize) -> Result<bool> {
    let auts: Vec<FreeAut> = tuple.iter().map(|&g| FreeAut::from_generator(g, n)).collect::<Result<_>>()?;
    for (i, a) in auts.iter().enumerate() {
        for b in &auts[i + 1..] {
            if a.compose(b)? != b.compose(a)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use MagnusGen::*;

    #[test]
    fn reduction() {
        assert_eq!(reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(reduce(&[1, -1]), Vec::<i32>::new());
    }

    #[test]
    fn h_is_product_of_g() {
        for (k, l) in [(3, 1), (4, 1), (5, 2)] {
            let h = FreeAut::from_generator(H(k, l), 5).unwrap();
            let mut prod = FreeAut::identity(5);
            for j in l..k {
                prod = prod.compose(&FreeAut::from_generator(G(k, j), 5).unwrap()).unwrap();
            }
            assert_eq!(h, prod);
        }
    }

    #[test]
    fn commuting_tuples() {
        assert!(free_auto_check_commute(&[H(2, 1), H(3, 1)], 3).unwrap());
        assert!(free_auto_check_commute(&[F(1, 2, 3), H(4, 1)], 4).unwrap());
        assert!(!free_auto_check_commute(&[G(1, 2), G(2, 1)], 2).unwrap());
        let inv = FreeAut::from_generator(G(1, 2), 2).unwrap();
        assert_eq!(inv.apply(&[2, -2]), Vec::<i32>::new());
    }
}
