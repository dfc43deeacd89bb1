use std::collections::BTreeMap;

use num::{Integer, One, Zero};

use super::{sub_partitions, RepGL};
use crate::combinatorics::{skew, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::symfunc::{h_or_e_in_power_sums, PowerSum, SymFunc};
use crate::Q;

/// Coordinates in the basis `{V_{(α,0)} ⊗ V_{(0,β)}}` of the stable
/// representation ring, written `(s_α, s_β)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductBasisElement {
    terms: BTreeMap<(Partition, Partition), i64>,
}

impl ProductBasisElement {
    pub fn from_terms(terms: impl IntoIterator<Item = ((Partition, Partition), i64)>) -> Self {
        let mut out = Self::default();
        for (k, m) in terms {
            *out.terms.entry(k).or_insert(0) += m;
        }
        out.terms.retain(|_, m| *m != 0);
        out
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), i64> {
        &self.terms
    }

    /// Inverse of [`ProductBasisElement::to_rep`], peeling off the largest
    /// component each step.
    pub fn from_rep(r: &RepGL) -> Self {
        let mut rest = r.clone();
        let mut out = BTreeMap::new();
        while let Some(b) = rest.terms().keys().max_by_key(|b| b.size()).cloned() {
            let m = rest.mult(&b);
            out.insert((b.plus.clone(), b.minus.clone()), m);
            rest = &rest - &expand_pair(&b.plus, &b.minus).scale(m);
        }
        ProductBasisElement { terms: out }
    }

    pub fn to_rep(&self) -> RepGL {
        let mut out = RepGL::zero();
        for ((a, b), m) in &self.terms {
            out = &out + &expand_pair(a, b).scale(*m);
        }
        out
    }
}

/// `V_{(α,0)} ⊗ V_{(0,β)} = Σ_κ V_{(α/κ, β/κ)}`.
pub fn expand_pair(alpha: &Partition, beta: &Partition) -> RepGL {
    let mut out = RepGL::zero();
    for kappa in sub_partitions(alpha, beta) {
        let a = skew(alpha, &kappa);
        let b = skew(beta, &kappa);
        for (g, cg) in a.iter() {
            for (d, cd) in b.iter() {
                out.add_term(Bipartition::new(g.clone(), d.clone()), (cg * cd) as i64);
            }
        }
    }
    out
}

/// Exterior or symmetric power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Alternating,
    Symmetric,
}

/// Element of `Λ ⊗ Λ` in the basis `p_ρ ⊗ p_σ`.
type P2 = BTreeMap<(Partition, Partition), Q>;

fn p2_mul(a: &P2, b: &P2) -> P2 {
    let mut out = P2::new();
    for ((x1, y1), c1) in a {
        for ((x2, y2), c2) in b {
            *out.entry((x1.union(x2), y1.union(y2))).or_insert_with(Q::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn p2_adams(a: &P2, r: usize) -> P2 {
    a.iter().map(|((x, y), c)| ((x.scaled(r), y.scaled(r)), c.clone())).collect()
}

/// `∧^k R` or `Sym^k R`, by plethysm with `e_k` or `h_k` in `Λ ⊗ Λ`, where
/// Adams operations act on both tensor factors at once.
pub fn power(r: &RepGL, k: usize, kind: PowerKind) -> Result<RepGL> {
    let pb = ProductBasisElement::from_rep(r);
    let mut x = P2::new();
    for ((a, b), m) in pb.terms() {
        let pa = SymFunc::s(a.clone()).to_power_sum();
        let pbeta = SymFunc::s(b.clone()).to_power_sum();
        for (ra, ca) in pa.terms() {
            for (rb, cb) in pbeta.terms() {
                *x.entry((ra.clone(), rb.clone())).or_insert_with(Q::zero) += ca * cb * Q::from_integer((*m).into());
            }
        }
    }
    x.retain(|_, c| !c.is_zero());
    let coeffs = h_or_e_in_power_sums(k, kind == PowerKind::Alternating);
    let mut adams: BTreeMap<usize, P2> = BTreeMap::new();
    let mut total = P2::new();
    for (rho, c) in coeffs.terms() {
        let mut acc: P2 = [((Partition::empty(), Partition::empty()), Q::one())].into_iter().collect();
        for &part in rho.parts() {
            let a = adams.entry(part).or_insert_with(|| p2_adams(&x, part));
            acc = p2_mul(&acc, a);
        }
        for (key, v) in acc {
            *total.entry(key).or_insert_with(Q::zero) += v * c;
        }
    }
    let mut schur: BTreeMap<(Partition, Partition), Q> = BTreeMap::new();
    for ((ra, rb), c) in total {
        if c.is_zero() {
            continue;
        }
        let sa = PowerSum::p(ra).to_schur();
        let sb = PowerSum::p(rb).to_schur();
        for (ga, ca) in sa.terms() {
            for (gb, cb) in sb.terms() {
                *schur.entry((ga.clone(), gb.clone())).or_insert_with(Q::zero) += &c * ca * cb;
            }
        }
    }
    let mut terms = Vec::new();
    for (key, c) in schur {
        if c.is_zero() {
            continue;
        }
        if !c.denom().is_one() {
            return Err(Error::NotDecomposable(format!("non-integral coefficient {c} on {:?}", key)));
        }
        let m: i64 = c.numer().try_into().map_err(|_| Error::InvalidArgument("multiplicity overflow".into()))?;
        terms.push((key, m));
    }
    let out = ProductBasisElement::from_terms(terms).to_rep();
    out.check_nonnegative("power")?;
    Ok(out)
}

/// `∧^i U` for `U = ∧²H ⊗ H*`, summed over `λ ⊢ i` as
/// `(s_λ ∘ s_{1,1})(H) ⊗ s_{λ′}(H*)`.
pub fn wedge_u(i: usize) -> RepGL {
    let s11 = SymFunc::e(2);
    let mut out = RepGL::zero();
    for lambda in Partition::all(i) {
        let outer = SymFunc::s(lambda.clone()).plethysm(&s11);
        let mut poly = RepGL::zero();
        for (nu, c) in outer.terms() {
            let (m, rem) = c.numer().div_rem(c.denom());
            debug_assert!(rem.is_zero());
            poly.add_term(Bipartition::new(nu.clone(), Partition::empty()), i64::try_from(m).expect("small multiplicity"));
        }
        let dual = RepGL::irrep(Bipartition::new(Partition::empty(), lambda.conjugate()));
        out = &out + &poly.koike_tensor(&dual);
    }
    out
}
