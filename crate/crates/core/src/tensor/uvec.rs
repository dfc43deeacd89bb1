use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::element::{Block, Index, Signature, TensorElement, Variance};
use super::plan::tree_projection;
use crate::combinatorics::{permutations, sign};
use crate::{Error, Partition, Result, Q};

/// A vector that `ι` expands into a three-slot tensor factor.
pub trait ChainFactor: Clone {
    fn rank(&self) -> usize;
    /// Variances of the three slots of the factor.
    fn slots() -> [Variance; 3];
    /// Plain-tensor image of the factor.
    fn expand(&self) -> Vec<([Index; 3], Q)>;
}

fn check_indices(n: usize, ids: &[Index]) -> Result<()> {
    if ids.iter().any(|&i| i == 0 || i as usize > n) {
        return Err(Error::InvalidArgument(format!("indices {ids:?} outside 1..={n}")));
    }
    Ok(())
}

fn insert(terms: &mut BTreeMap<(Index, Index, Index), Q>, k: (Index, Index, Index), c: Q) {
    let e = terms.entry(k).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        terms.remove(&k);
    }
}

/// Element of `U = ∧²H⊗H*` in the basis `e_{a,b}^c = (e_a∧e_b)⊗e_c*`, `a<b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UVector {
    n: usize,
    terms: BTreeMap<(Index, Index, Index), Q>,
}

impl UVector {
    pub fn zero(n: usize) -> Self {
        UVector { n, terms: BTreeMap::new() }
    }

    /// `e_{a,b}^c`, with `e_{b,a}^c = −e_{a,b}^c` and `e_{a,a}^c = 0`.
    pub fn basis(n: usize, a: Index, b: Index, c: Index) -> Result<Self> {
        let mut v = Self::zero(n);
        v.add_basis(a, b, c, Q::one())?;
        Ok(v)
    }

    pub fn add_basis(&mut self, a: Index, b: Index, c: Index, coef: Q) -> Result<()> {
        check_indices(self.n, &[a, b, c])?;
        match a.cmp(&b) {
            std::cmp::Ordering::Less => insert(&mut self.terms, (a, b, c), coef),
            std::cmp::Ordering::Greater => insert(&mut self.terms, (b, a, c), -coef),
            std::cmp::Ordering::Equal => {}
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<(Index, Index, Index), Q> {
        &self.terms
    }

    pub fn coefficient(&self, a: Index, b: Index, c: Index) -> Q {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self.terms.get(&(a, b, c)).cloned().unwrap_or_else(Q::zero),
            std::cmp::Ordering::Greater => -self.terms.get(&(b, a, c)).cloned().unwrap_or_else(Q::zero),
            std::cmp::Ordering::Equal => Q::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.n);
        for (&k, v) in &self.terms {
            insert(&mut out.terms, k, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch { expected: self.n, found: other.n });
        }
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            insert(&mut out.terms, k, v.clone());
        }
        Ok(out)
    }

    /// As an element of `∧²H⊗H*`.
    pub fn to_tensor(&self) -> TensorElement {
        let sig = Signature::new(self.n, vec![Block::wedge(Variance::Cov, 2), Block::plain(Variance::Contra)])
            .expect("valid rank");
        let mut t = TensorElement::zero(sig);
        for (&(a, b, c), v) in &self.terms {
            t.add_term(vec![a, b, c], v.clone());
        }
        t
    }

    fn from_tensor(t: &TensorElement) -> Self {
        let mut out = Self::zero(t.rank());
        for (k, v) in t.terms() {
            insert(&mut out.terms, (k[0], k[1], k[2]), v.clone());
        }
        out
    }
}

impl ChainFactor for UVector {
    fn rank(&self) -> usize {
        self.n
    }

    fn slots() -> [Variance; 3] {
        [Variance::Cov, Variance::Cov, Variance::Contra]
    }

    /// `(e_a∧e_b)⊗e_c* ↦ (e_a⊗e_b − e_b⊗e_a)⊗e_c*`.
    fn expand(&self) -> Vec<([Index; 3], Q)> {
        self.terms.iter().flat_map(|(&(a, b, c), v)| [([a, b, c], v.clone()), ([b, a, c], -v)]).collect()
    }
}

impl fmt::Display for UVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((a, b, c), v)| format!("({v})e_{{{a},{b}}}^{c}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of `U* = H⊗∧²H*` in the basis `e_a^{b,c} = e_a⊗(e_b*∧e_c*)`, `b<c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UStarVector {
    n: usize,
    terms: BTreeMap<(Index, Index, Index), Q>,
}

impl UStarVector {
    pub fn zero(n: usize) -> Self {
        UStarVector { n, terms: BTreeMap::new() }
    }

    pub fn basis(n: usize, a: Index, b: Index, c: Index) -> Result<Self> {
        let mut v = Self::zero(n);
        v.add_basis(a, b, c, Q::one())?;
        Ok(v)
    }

    pub fn add_basis(&mut self, a: Index, b: Index, c: Index, coef: Q) -> Result<()> {
        check_indices(self.n, &[a, b, c])?;
        match b.cmp(&c) {
            std::cmp::Ordering::Less => insert(&mut self.terms, (a, b, c), coef),
            std::cmp::Ordering::Greater => insert(&mut self.terms, (a, c, b), -coef),
            std::cmp::Ordering::Equal => {}
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<(Index, Index, Index), Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl ChainFactor for UStarVector {
    fn rank(&self) -> usize {
        self.n
    }

    fn slots() -> [Variance; 3] {
        [Variance::Cov, Variance::Contra, Variance::Contra]
    }

    /// `e_a⊗(e_b*∧e_c*) ↦ e_a⊗e_b*⊗e_c* − e_a⊗e_c*⊗e_b*`.
    fn expand(&self) -> Vec<([Index; 3], Q)> {
        self.terms.iter().flat_map(|(&(a, b, c), v)| [([a, b, c], v.clone()), ([a, c, b], -v)]).collect()
    }
}

/// `x_1∧⋯∧x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeChain<T> {
    factors: Vec<T>,
}

impl<T: ChainFactor> WedgeChain<T> {
    pub fn new(factors: Vec<T>) -> Result<Self> {
        if let Some(f) = factors.first() {
            let n = f.rank();
            if let Some(g) = factors.iter().find(|g| g.rank() != n) {
                return Err(Error::RankMismatch { expected: n, found: g.rank() });
            }
        }
        Ok(WedgeChain { factors })
    }

    pub fn factors(&self) -> &[T] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Sub-chain on the given positions, in order.
    pub fn select(&self, positions: &[usize]) -> Self {
        WedgeChain { factors: positions.iter().map(|&p| self.factors[p].clone()).collect() }
    }
}

/// Signature of `(three-slot factor)^{⊗i}`.
pub fn chain_signature<T: ChainFactor>(n: usize, i: usize) -> Result<Signature> {
    let slots: Vec<Variance> = (0..i).flat_map(|_| T::slots()).collect();
    Signature::plain(n, &slots)
}

/// `ι_i(x_1∧⋯∧x_i) = Σ_σ sgn(σ) φ(x_{σ(1)})⊗⋯⊗φ(x_{σ(i)})`, no `1/i!`.
pub fn iota_expand<T: ChainFactor>(chain: &WedgeChain<T>) -> Result<TensorElement> {
    let i = chain.degree();
    let Some(first) = chain.factors.first() else {
        return Err(Error::InvalidArgument("empty chain".into()));
    };
    let n = first.rank();
    let images: Vec<Vec<([Index; 3], Q)>> = chain.factors.iter().map(|f| f.expand()).collect();
    let mut out = TensorElement::zero(chain_signature::<T>(n, i)?);
    for perm in permutations(i) {
        let s = sign(&perm);
        let mut partial: Vec<(Vec<Index>, Q)> = vec![(Vec::with_capacity(3 * i), Q::from_integer(s.into()))];
        for &p in &perm {
            let mut next = Vec::with_capacity(partial.len() * images[p].len());
            for (k, c) in &partial {
                for (idx, v) in &images[p] {
                    let mut k2 = k.clone();
                    k2.extend_from_slice(idx);
                    next.push((k2, c * v));
                }
            }
            partial = next;
        }
        for (k, c) in partial {
            out.add_term(k, c);
        }
    }
    Ok(out)
}

/// `ι` extended linearly over `Σ c_k·chain_k`.
pub fn iota_sum<T: ChainFactor>(n: usize, i: usize, sum: &[(Q, WedgeChain<T>)]) -> Result<TensorElement> {
    let mut out = TensorElement::zero(chain_signature::<T>(n, i)?);
    for (c, ch) in sum {
        if ch.degree() != i {
            return Err(Error::InvalidArgument(format!("chain of degree {} in a degree-{i} sum", ch.degree())));
        }
        out = out.try_add(&iota_expand(ch)?.scale(c))?;
    }
    Ok(out)
}

/// Magnus-type generators of `IA_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MagnusGen {
    /// `x_b ↦ x_a x_b x_a⁻¹`.
    G(Index, Index),
    /// `x_c ↦ x_c [x_a, x_b]`, `a<b`.
    F(Index, Index, Index),
    /// `g_{k,l} g_{k,l+1} ⋯ g_{k,k−1}`, `k>l`.
    H(Index, Index),
}

impl MagnusGen {
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            MagnusGen::G(a, b) => a != b && [a, b].iter().all(|&i| i >= 1 && i as usize <= n),
            MagnusGen::F(a, b, c) => a < b && c != a && c != b && a >= 1 && [b, c].iter().all(|&i| i >= 1 && i as usize <= n),
            MagnusGen::H(k, l) => k > l && l >= 1 && k as usize <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{self} is not a generator at rank {n}")))
        }
    }
}

impl fmt::Display for MagnusGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagnusGen::G(a, b) => write!(f, "g({a},{b})"),
            MagnusGen::F(a, b, c) => write!(f, "f({a},{b},{c})"),
            MagnusGen::H(k, l) => write!(f, "h({k},{l})"),
        }
    }
}

impl std::str::FromStr for MagnusGen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "generator", input: s.to_string() };
        let s = s.trim();
        let (head, rest) = s.split_once('(').ok_or_else(err)?;
        let args: Vec<Index> = rest
            .strip_suffix(')')
            .ok_or_else(err)?
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| err()))
            .collect::<Result<_>>()?;
        match (head.trim(), args.as_slice()) {
            ("g", &[a, b]) => Ok(MagnusGen::G(a, b)),
            ("f", &[a, b, c]) => Ok(MagnusGen::F(a, b, c)),
            ("h", &[k, l]) => Ok(MagnusGen::H(k, l)),
            _ => Err(err()),
        }
    }
}

/// Johnson image of a generator.
pub fn magnus_image(gen: MagnusGen, n: usize) -> Result<UVector> {
    gen.validate(n)?;
    match gen {
        MagnusGen::G(a, b) => UVector::basis(n, a, b, b),
        MagnusGen::F(a, b, c) => UVector::basis(n, a, b, c),
        MagnusGen::H(k, l) => {
            let mut v = UVector::zero(n);
            for j in l..k {
                v.add_basis(k, j, j, Q::one())?;
            }
            Ok(v)
        }
    }
}

/// Smallest rank admitting the tuple for `(μ,ν)`: `|μ|+|ν|+2l(μ)+l(ν)`.
pub fn min_rank_for_cycle(mu: &Partition, nu: &Partition) -> usize {
    mu.size() + nu.size() + 2 * mu.len() + nu.len()
}

/// The commuting tuple `h_{(μ,ν)}`: one `f`-block per part of `μ`, then one
/// `g`-block per part of `ν`, on disjoint index ranges.
pub fn abelian_cycle_tuple(mu: &Partition, nu: &Partition, n: usize) -> Result<Vec<MagnusGen>> {
    let need = min_rank_for_cycle(mu, nu);
    if n < need {
        return Err(Error::InvalidArgument(format!("rank {n} below {need} for ({mu},{nu})")));
    }
    let mut out = Vec::new();
    let mut a: Index = 1;
    for &r in mu.parts() {
        out.push(MagnusGen::F(a, a + 1, a + 2));
        for q in 3..=r as Index + 1 {
            out.push(MagnusGen::H(a + q, a));
        }
        a += r as Index + 2;
    }
    for &r in nu.parts() {
        for q in 1..=r as Index {
            out.push(MagnusGen::H(a + q, a));
        }
        a += r as Index + 1;
    }
    Ok(out)
}

/// `τ_*(α_{(μ,ν)})` as a wedge chain.
pub fn abelian_cycle_chain(mu: &Partition, nu: &Partition, n: usize) -> Result<WedgeChain<UVector>> {
    let gens = abelian_cycle_tuple(mu, nu, n)?;
    WedgeChain::new(gens.into_iter().map(|g| magnus_image(g, n)).collect::<Result<_>>()?)
}

/// Tree-part projection `U → U^O`, viewed back inside `U`.
pub fn io_embed(v: &UVector) -> Result<UVector> {
    if v.n < 3 {
        return Err(Error::InvalidArgument(format!("rank {} below 3", v.n)));
    }
    Ok(UVector::from_tensor(&tree_projection(&v.to_tensor(), 0)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;
    use crate::{q, qfrac};

    #[test]
    fn magnus_images() {
        assert_eq!(magnus_image(MagnusGen::G(2, 1), 3).unwrap().coefficient(1, 2, 1), q(-1));
        let h = magnus_image(MagnusGen::H(3, 1), 3).unwrap();
        let mut e = UVector::basis(3, 3, 1, 1).unwrap();
        e.add_basis(3, 2, 2, q(1)).unwrap();
        assert_eq!(h, e);
        assert_eq!(magnus_image(MagnusGen::F(1, 2, 3), 3).unwrap(), UVector::basis(3, 1, 2, 3).unwrap());
        assert!(magnus_image(MagnusGen::F(2, 1, 3), 3).is_err());
        assert!(magnus_image(MagnusGen::H(1, 2), 3).is_err());
        assert_eq!("f(1,2,3)".parse::<MagnusGen>().unwrap(), MagnusGen::F(1, 2, 3));
    }

    #[test]
    fn cycle_tuples() {
        use MagnusGen::*;
        assert_eq!(abelian_cycle_tuple(&p(""), &p("2"), 3).unwrap(), vec![H(2, 1), H(3, 1)]);
        assert_eq!(abelian_cycle_tuple(&p("2"), &p(""), 4).unwrap(), vec![F(1, 2, 3), H(4, 1)]);
        assert_eq!(abelian_cycle_tuple(&p(""), &p("1,1"), 4).unwrap(), vec![H(2, 1), H(4, 3)]);
        assert_eq!(
            abelian_cycle_tuple(&p("1"), &p("1"), 5).unwrap(),
            vec![F(1, 2, 3), H(5, 4)]
        );
        assert!(abelian_cycle_tuple(&p("1"), &p("1"), 4).is_err());
        for i in 1..=4 {
            for pair in crate::PairOfPartitions::all(i) {
                let n = min_rank_for_cycle(&pair.mu, &pair.nu);
                let t = abelian_cycle_tuple(&pair.mu, &pair.nu, n).unwrap();
                assert_eq!(t.len(), i);
                t.iter().for_each(|g| g.validate(n).unwrap());
            }
        }
    }

    #[test]
    fn iota_small() {
        let x = UVector::basis(3, 2, 1, 1).unwrap();
        let t = iota_expand(&WedgeChain::new(vec![x.clone()]).unwrap()).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.coefficient(&[2, 1, 1]), q(1));
        assert_eq!(t.coefficient(&[1, 2, 1]), q(-1));
        assert!(iota_expand(&WedgeChain::new(vec![x.clone(), x]).unwrap()).unwrap().is_zero());
        assert!(iota_expand(&WedgeChain::<UVector>::new(vec![]).unwrap()).is_err());
    }

    #[test]
    fn io_embed_examples() {
        let f = UVector::basis(3, 1, 2, 3).unwrap();
        assert_eq!(io_embed(&f).unwrap(), f);
        let g = io_embed(&magnus_image(MagnusGen::G(2, 1), 3).unwrap()).unwrap();
        let mut e = UVector::basis(3, 2, 1, 1).unwrap().scale(&qfrac(1, 2));
        e.add_basis(2, 3, 3, qfrac(-1, 2)).unwrap();
        assert_eq!(g, e);
        assert_eq!(io_embed(&g).unwrap(), g);
        // The wheel line Σ_j e_{a,j}^j is killed.
        let mut w = UVector::zero(4);
        for j in 1..=4 {
            w.add_basis(2, j, j, q(1)).unwrap();
        }
        assert!(io_embed(&w).unwrap().is_zero());
        assert!(io_embed(&UVector::zero(2)).is_err());
    }
}
