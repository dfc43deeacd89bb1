//! Stable tensor products of Sp(2g,ℚ)-representations via Newell–Littlewood
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num::{BigInt, BigRational, One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{lr_coefficient, lr_product, skew, Partition};
use crate::glrep::sub_partitions;
use crate::symfunc::{SymFunc, SymSeries};
use crate::Q;

/// Finite ℤ-combination of irreducibles `V^Sp_λ`. No zero multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepSp {
    terms: BTreeMap<Partition, i64>,
}

impl RepSp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn trivial() -> Self {
        Self::irrep(Partition::empty())
    }

    pub fn irrep(lambda: Partition) -> Self {
        Self::from_terms([(lambda, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut out = Self::zero();
        for (l, m) in terms {
            *out.terms.entry(l).or_insert(0) += m;
        }
        out.terms.retain(|_, m| *m != 0);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn mult(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn minimal_rank(&self) -> usize {
        self.terms.keys().map(Partition::len).max().unwrap_or(0)
    }

    /// Drop components with more than `g` rows.
    pub fn restrict(&self, g: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(l, _)| l.len() <= g).map(|(l, m)| (l.clone(), *m)))
    }

    /// Keep the components with `|λ| = full_size`.
    pub fn traceless_filter(&self, full_size: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(l, _)| l.size() == full_size).map(|(l, m)| (l.clone(), *m)))
    }

    pub fn nl_product(&self, other: &RepSp) -> RepSp {
        let mut out = BTreeMap::new();
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                for (nu, c) in nl_irreps(a, b) {
                    *out.entry(nu).or_insert(0) += c as i64 * ma * mb;
                }
            }
        }
        Self::from_terms(out)
    }

    pub fn dimension(&self, g: usize) -> BigInt {
        self.terms.iter().map(|(l, m)| sp_dimension(l, g) * BigInt::from(*m)).sum()
    }

    /// `{"components": [{"partition", "mult"}], "minimal_rank"}`.
    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, m)| json!({"partition": l.to_string(), "mult": m}))
            .collect();
        json!({"components": comps, "minimal_rank": self.minimal_rank()})
    }
}

impl Add for &RepSp {
    type Output = RepSp;
    fn add(self, rhs: &RepSp) -> RepSp {
        RepSp::from_terms(self.terms.iter().chain(&rhs.terms).map(|(l, m)| (l.clone(), *m)))
    }
}

impl fmt::Display for RepSp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, m)| if *m == 1 { format!("V<{l}>") } else { format!("{m}*V<{l}>") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ_ζ s_{λ/ζ} s_{μ/ζ}` in the Schur basis.
fn nl_irreps(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for zeta in sub_partitions(lambda, mu) {
        let a = skew(lambda, &zeta);
        let b = skew(mu, &zeta);
        for (s, cs) in a.iter() {
            for (t, ct) in b.iter() {
                for (nu, c) in lr_product(s, t).iter() {
                    *out.entry(nu.clone()).or_insert(0) += cs * ct * c;
                }
            }
        }
    }
    out
}

/// `Σ_{ζ,σ,τ} N_{ζσ}^λ N_{ζτ}^μ N_{στ}^ν`, enumerating the triple sum
/// directly over partitions of the admissible sizes.
pub fn nl_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let (l, m, n) = (lambda.size(), mu.size(), nu.size());
    if l + m < n || (l + m - n) % 2 == 1 {
        return 0;
    }
    let z = (l + m - n) / 2;
    if z > l || z > m {
        return 0;
    }
    let mut total = 0;
    for zeta in Partition::all(z) {
        for sigma in Partition::all(l - z) {
            let a = lr_coefficient(&zeta, &sigma, lambda);
            if a == 0 {
                continue;
            }
            for tau in Partition::all(m - z) {
                let b = lr_coefficient(&zeta, &tau, mu);
                if b == 0 {
                    continue;
                }
                total += a * b * lr_coefficient(&sigma, &tau, nu);
            }
        }
    }
    total
}

/// `∧^k H = ⊕_{r≥0} V^Sp_{1^{k−2r}}`, truncated to at most `g` rows.
pub fn wedge_h_sp(k: usize, g: usize) -> RepSp {
    RepSp::from_terms((0..=k / 2).map(|r| (Partition::column(k - 2 * r), 1))).restrict(g)
}

/// Weyl dimension formula for type C_g with `ρ = (g, g−1, …, 1)`.
pub fn sp_dimension(lambda: &Partition, g: usize) -> BigInt {
    if lambda.len() > g {
        return BigInt::zero();
    }
    let l: Vec<i64> = (0..g).map(|i| lambda.part(i) as i64 + (g - i) as i64).collect();
    let rho: Vec<i64> = (0..g).map(|i| (g - i) as i64).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..g {
        num *= l[i];
        den *= rho[i];
        for j in i + 1..g {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= rho[i] * rho[i] - rho[j] * rho[j];
        }
    }
    let d = BigRational::new(num, den);
    assert!(d.is_integer());
    d.to_integer()
}

/// Newell–Littlewood product of symmetric functions read as symplectic
/// characters: `s_λ · s_μ ↦ Σ_ζ s_{λ/ζ} s_{μ/ζ}`, extended bilinearly.
pub fn nl_symfunc_product(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            let c = ca * cb;
            out = &out
                + &SymFunc::from_terms(nl_irreps(a, b).into_iter().map(|(nu, m)| (nu, &c * Q::from_integer(m.into()))));
        }
    }
    out
}

/// Truncated Cauchy product of series whose coefficients multiply by
/// [`nl_symfunc_product`]. The flavor of `a` is kept.
pub fn nl_series_product(a: &SymSeries, b: &SymSeries) -> SymSeries {
    let d = a.truncation().min(b.truncation());
    let mut out = vec![SymFunc::zero(); d + 1];
    for i in 0..=d {
        for j in 0..=d - i {
            let (x, y) = (a.coefficient(i), b.coefficient(j));
            if !x.is_zero() && !y.is_zero() {
                out[i + j] = &out[i + j] + &nl_symfunc_product(x, y);
            }
        }
    }
    let s = SymSeries::from_coeffs(d, out);
    match a.flavor() {
        crate::symfunc::Flavor::GlSchur => s,
        crate::symfunc::Flavor::SpSchur => s.d_relabel().expect("fresh series is gl-schur"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;

    fn sp(s: &str) -> RepSp {
        RepSp::from_terms(s.split('+').map(|t| (p(t.trim()), 1)))
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(nl_coefficient(&p("1"), &p("1"), &p("0")), 1);
        assert_eq!(nl_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(nl_coefficient(&p("2,1"), &p("1"), &p("2")), 1);
        assert_eq!(nl_coefficient(&p("2,1"), &p("1"), &p("1,1")), 1);
    }

    #[test]
    fn product_examples() {
        let h = RepSp::irrep(p("1"));
        assert_eq!(h.nl_product(&h), sp("2 + 1,1 + 0"));
        assert_eq!(RepSp::trivial().nl_product(&sp("2,1 + 1")), sp("2,1 + 1"));
        assert_eq!(RepSp::irrep(p("1,1")).nl_product(&h), sp("2,1 + 1,1,1 + 1"));
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge_h_sp(2, 3), sp("1,1 + 0"));
        assert_eq!(wedge_h_sp(3, 3), sp("1,1,1 + 1"));
        assert_eq!(wedge_h_sp(0, 1), RepSp::trivial());
    }

    #[test]
    fn product_routes_agree_and_full_size_is_lr() {
        let all: Vec<Partition> = (0..=4).flat_map(Partition::all).collect();
        for a in &all {
            for b in &all {
                let prod = RepSp::irrep(a.clone()).nl_product(&RepSp::irrep(b.clone()));
                for c in &all {
                    assert_eq!(prod.mult(c) as u64, nl_coefficient(a, b, c), "{a} {b} {c}");
                    if c.size() == a.size() + b.size() {
                        assert_eq!(nl_coefficient(a, b, c), lr_coefficient(a, b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(sp_dimension(&p("1"), 3), BigInt::from(6));
        assert_eq!(sp_dimension(&p("1,1"), 2), BigInt::from(5));
        assert_eq!(sp_dimension(&p("2"), 3), BigInt::from(21));
        let binom = |n: i64, k: i64| (0..k).fold(BigInt::one(), |acc, j| acc * (n - j)) / (1..=k).fold(BigInt::one(), |acc, j| acc * j);
        for g in 1..=4usize {
            for k in 0..=g {
                assert_eq!(wedge_h_sp(k, g).dimension(g), binom(2 * g as i64, k as i64), "g={g} k={k}");
            }
        }
        // dim(V_λ)·dim(V_μ) = Σ N^Sp · dim(V_ν) in the stable range
        let all: Vec<Partition> = (0..=3).flat_map(Partition::all).collect();
        for a in &all {
            for b in &all {
                let g = (a.len() + b.len()).max(1);
                let prod = RepSp::irrep(a.clone()).nl_product(&RepSp::irrep(b.clone()));
                assert_eq!(prod.dimension(g), sp_dimension(a, g) * sp_dimension(b, g), "{a} {b}");
            }
        }
    }

    #[test]
    fn commutative_and_associative() {
        let all: Vec<Partition> = (0..=3).flat_map(Partition::all).collect();
        for a in all.iter().step_by(2) {
            for b in &all {
                let (x, y) = (RepSp::irrep(a.clone()), RepSp::irrep(b.clone()));
                assert_eq!(x.nl_product(&y), y.nl_product(&x));
                for c in all.iter().step_by(3) {
                    let z = RepSp::irrep(c.clone());
                    assert_eq!(x.nl_product(&y).nl_product(&z), x.nl_product(&y.nl_product(&z)));
                }
            }
        }
    }
}
