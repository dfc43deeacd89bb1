//! Symmetric functions over ℚ in the Schur basis, with power-sum arithmetic
//! for plethysm and truncated series in an auxiliary grading variable `t`.

mod chars;
mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::combinatorics::{lr_product, Partition};
use crate::Q;

pub use series::{Flavor, SymSeries};

/// Finite ℚ-combination of Schur functions `s_λ`. No zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Q>,
}

/// Finite ℚ-combination of power sums `p_ρ`. No zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSum {
    terms: BTreeMap<Partition, Q>,
}

fn add_into(map: &mut BTreeMap<Partition, Q>, key: Partition, c: Q) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::s(Partition::empty())
    }

    pub fn constant(c: Q) -> Self {
        Self::s(Partition::empty()).scale(&c)
    }

    pub fn s(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Q::one());
        SymFunc { terms }
    }

    /// Complete homogeneous `h_n = s_(n)`; `h_0 = 1`.
    pub fn h(n: usize) -> Self {
        Self::s(Partition::row(n))
    }

    /// Elementary `e_n = s_(1^n)`.
    pub fn e(n: usize) -> Self {
        Self::s(Partition::column(n))
    }

    /// Power sum `p_n` expanded in Schur functions.
    pub fn p(n: usize) -> Self {
        PowerSum::p(Partition::row(n)).to_schur()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut out = Self::zero();
        for (l, c) in terms {
            add_into(&mut out.terms, l, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    /// Largest `|λ|` occurring, or `None` for zero.
    pub fn max_size(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    /// Bilinear extension of the Littlewood–Richardson product.
    pub fn schur_multiply(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (nu, m) in lr_product(a, b).iter() {
                    add_into(&mut out.terms, nu.clone(), &c * Q::from_integer((*m).into()));
                }
            }
        }
        out
    }

    pub fn to_power_sum(&self) -> PowerSum {
        let mut out = PowerSum::default();
        for (lambda, c) in &self.terms {
            let t = chars::table(lambda.size());
            let row = &t.chi[t.index[lambda]];
            for (j, rho) in t.parts.iter().enumerate() {
                if row[j] != 0 {
                    add_into(&mut out.terms, rho.clone(), c * Q::from_integer(row[j].into()) / &t.z[j]);
                }
            }
        }
        out
    }

    /// `f ∘ g`, through the power-sum expansion of `f`.
    pub fn plethysm(&self, g: &SymFunc) -> SymFunc {
        self.to_power_sum().plethysm(&g.to_power_sum()).to_schur()
    }

    /// The involution `p_n ↦ −p_n`, so that `h_n ↦ (−1)^n e_n`.
    pub fn omega(&self) -> SymFunc {
        SymFunc::from_terms(self.terms.iter().map(|(l, c)| {
            let s = if l.size() % 2 == 0 { c.clone() } else { -c };
            (l.conjugate(), s)
        }))
    }

    /// The classical involution `s_λ ↦ s_λ′` (`p_n ↦ (−1)^{n−1} p_n`).
    pub fn omega_classical(&self) -> SymFunc {
        SymFunc::from_terms(self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())))
    }
}

impl PowerSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    pub fn constant(c: Q) -> Self {
        Self::one().scale(&c)
    }

    pub fn p(rho: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(rho, Q::one());
        PowerSum { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut out = Self::zero();
        for (l, c) in terms {
            add_into(&mut out.terms, l, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    /// Adams operation `p_ρ ↦ p_{rρ}`; rational constants are fixed.
    pub fn adams(&self, r: usize) -> PowerSum {
        PowerSum {
            terms: self.terms.iter().map(|(l, c)| (l.scaled(r), c.clone())).collect(),
        }
    }

    pub fn plethysm(&self, g: &PowerSum) -> PowerSum {
        let mut cache: BTreeMap<usize, PowerSum> = BTreeMap::new();
        let mut out = PowerSum::zero();
        for (rho, c) in &self.terms {
            let mut acc = PowerSum::one();
            for &r in rho.parts() {
                let a = cache.entry(r).or_insert_with(|| g.adams(r));
                acc = &acc * a;
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// `p_ρ ↦ (−1)^{l(ρ)} p_ρ`.
    pub fn omega(&self) -> PowerSum {
        PowerSum::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), if l.len() % 2 == 0 { c.clone() } else { -c })))
    }

    pub fn to_schur(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (rho, c) in &self.terms {
            let t = chars::table(rho.size());
            let j = t.index[rho];
            for (i, lambda) in t.parts.iter().enumerate() {
                let v = t.chi[i][j];
                if v != 0 {
                    add_into(&mut out.terms, lambda.clone(), c * Q::from_integer(v.into()));
                }
            }
        }
        out
    }
}

macro_rules! ring_ops {
    ($t:ident, $mul:expr) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                for (l, c) in &rhs.terms {
                    add_into(&mut out.terms, l.clone(), c.clone());
                }
                out
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                for (l, c) in &rhs.terms {
                    add_into(&mut out.terms, l.clone(), -c);
                }
                out
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(&-Q::one())
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $mul(self, rhs)
            }
        }
    };
}

ring_ops!(SymFunc, |a: &SymFunc, b: &SymFunc| a.schur_multiply(b));
ring_ops!(PowerSum, |a: &PowerSum, b: &PowerSum| {
    let mut out = PowerSum::zero();
    for (x, cx) in &a.terms {
        for (y, cy) in &b.terms {
            add_into(&mut out.terms, x.union(y), cx * cy);
        }
    }
    out
});

fn render(f: &mut fmt::Formatter<'_>, terms: &BTreeMap<Partition, Q>, sym: &str) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (l, c)) in terms.iter().rev().enumerate() {
        let sign = if c.is_negative() { "-" } else if i == 0 { "" } else { "+" };
        let a = c.abs();
        let coef = if a.is_one() { String::new() } else { format!("{a}*") };
        if i == 0 {
            write!(f, "{sign}{coef}{sym}({l})")?;
        } else {
            write!(f, " {sign} {coef}{sym}({l})")?;
        }
    }
    Ok(())
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &self.terms, "s")
    }
}

impl fmt::Display for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &self.terms, "p")
    }
}

/// Coefficients of `h_k` (or `e_k` if `alternating`) in the power-sum basis.
pub fn h_or_e_in_power_sums(k: usize, alternating: bool) -> PowerSum {
    let t = chars::table(k);
    PowerSum::from_terms(t.parts.iter().enumerate().map(|(j, rho)| {
        let sign = if alternating { rho.sign() } else { 1 };
        (rho.clone(), Q::from_integer(sign.into()) / &t.z[j])
    }))
}
