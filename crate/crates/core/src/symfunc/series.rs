use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{PowerSum, SymFunc};
use crate::error::{Error, Result};
use crate::Q;

/// Which Schur labels the coefficients carry: `s_λ` or the symplectic
/// `s_⟨λ⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    #[serde(rename = "gl-schur")]
    GlSchur,
    #[serde(rename = "sp-schur")]
    SpSchur,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::GlSchur => "gl-schur",
            Flavor::SpSchur => "sp-schur",
        })
    }
}

/// Power series in `t` with symmetric-function coefficients, truncated above
/// degree `truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSeries {
    truncation: usize,
    coeffs: Vec<SymFunc>,
    flavor: Flavor,
}

impl SymSeries {
    pub fn zero(truncation: usize) -> Self {
        SymSeries {
            truncation,
            coeffs: vec![SymFunc::zero(); truncation + 1],
            flavor: Flavor::GlSchur,
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(truncation, 0, SymFunc::one())
    }

    /// `f · t^degree`, or zero if the degree is past the truncation.
    pub fn monomial(truncation: usize, degree: usize, f: SymFunc) -> Self {
        let mut s = Self::zero(truncation);
        if degree <= truncation {
            s.coeffs[degree] = f;
        }
        s
    }

    /// Coefficients beyond `truncation` are dropped.
    pub fn from_coeffs(truncation: usize, mut coeffs: Vec<SymFunc>) -> Self {
        coeffs.resize(truncation + 1, SymFunc::zero());
        SymSeries {
            truncation,
            coeffs,
            flavor: Flavor::GlSchur,
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn coeffs(&self) -> &[SymFunc] {
        &self.coeffs
    }

    pub fn coefficient(&self, degree: usize) -> &SymFunc {
        &self.coeffs[degree]
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        let mut s = Self::from_coeffs(truncation, self.coeffs.iter().take(truncation + 1).cloned().collect());
        s.flavor = self.flavor;
        s
    }

    pub fn map(&self, f: impl Fn(&SymFunc) -> SymFunc) -> Self {
        SymSeries {
            truncation: self.truncation,
            coeffs: self.coeffs.iter().map(f).collect(),
            flavor: self.flavor,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.map(|f| f.scale(c))
    }

    /// Coefficientwise `p_n ↦ −p_n`.
    pub fn omega(&self) -> Self {
        self.map(SymFunc::omega)
    }

    pub fn omega_classical(&self) -> Self {
        self.map(SymFunc::omega_classical)
    }

    fn check_pair(&self, other: &Self) -> Result<usize> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch);
        }
        Ok(self.truncation.min(other.truncation))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.check_pair(other)?;
        let mut s = Self::from_coeffs(d, (0..=d).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect());
        s.flavor = self.flavor;
        Ok(s)
    }

    /// Truncated Cauchy product. Only defined on gl-schur series, where the
    /// coefficient product is the Schur product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.check_pair(other)?;
        if self.flavor != Flavor::GlSchur {
            return Err(Error::FlavorMismatch);
        }
        let mut out = vec![SymFunc::zero(); d + 1];
        for a in 0..=d {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..=d - a {
                if !other.coeffs[b].is_zero() {
                    out[a + b] = &out[a + b] + &(&self.coeffs[a] * &other.coeffs[b]);
                }
            }
        }
        Ok(Self::from_coeffs(d, out))
    }

    /// `Exp(f) = Σ_q h_q ∘ f`, where plethysm sends `t ↦ t^r` under `p_r`.
    pub fn exp(&self) -> Result<Self> {
        if self.flavor != Flavor::GlSchur {
            return Err(Error::FlavorMismatch);
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let d = self.truncation;
        let f: Vec<PowerSum> = self.coeffs.iter().map(SymFunc::to_power_sum).collect();
        // log Exp(f) = Σ_r (p_r ∘ f)/r
        let mut log = vec![PowerSum::zero(); d + 1];
        for r in 1..=d {
            let inv = Q::new(1.into(), r.into());
            for k in 1..=d / r {
                if !f[k].is_zero() {
                    log[r * k] = &log[r * k] + &f[k].adams(r).scale(&inv);
                }
            }
        }
        let mut e = vec![PowerSum::one()];
        for n in 1..=d {
            let mut acc = PowerSum::zero();
            for k in 1..=n {
                if !log[k].is_zero() {
                    acc = &acc + &(&log[k] * &e[n - k]).scale(&Q::from_integer(k.into()));
                }
            }
            e.push(acc.scale(&Q::new(1.into(), n.into())));
        }
        Ok(Self::from_coeffs(d, e.iter().map(PowerSum::to_schur).collect()))
    }

    /// Relabel `s_λ ↦ s_⟨λ⟩`.
    pub fn d_relabel(&self) -> Result<Self> {
        if self.flavor != Flavor::GlSchur {
            return Err(Error::FlavorMismatch);
        }
        let mut s = self.clone();
        s.flavor = Flavor::SpSchur;
        Ok(s)
    }

    /// Relabel `s_⟨λ⟩ ↦ s_λ`.
    pub fn d_inverse(&self) -> Result<Self> {
        if self.flavor != Flavor::SpSchur {
            return Err(Error::FlavorMismatch);
        }
        let mut s = self.clone();
        s.flavor = Flavor::GlSchur;
        Ok(s)
    }

    /// `L(t) = Σ_{q≥1} (h_{q+2} + h_q + h_{q−2} + ⋯) t^q`.
    pub fn l_series(max_degree: usize) -> Self {
        let mut coeffs = vec![SymFunc::zero()];
        for q in 1..=max_degree {
            let mut f = SymFunc::zero();
            let mut k = q as i64 + 2;
            while k >= 0 {
                f = &f + &SymFunc::h(k as usize);
                k -= 2;
            }
            coeffs.push(f);
        }
        Self::from_coeffs(max_degree, coeffs)
    }

    /// `Σ_q (−t)^q ch(M_q)`.
    pub fn ch_graded_rep(m: &[SymFunc], truncation: usize) -> Self {
        Self::from_coeffs(
            truncation,
            m.iter()
                .enumerate()
                .map(|(q, f)| if q % 2 == 0 { f.clone() } else { -f })
                .collect(),
        )
    }

    /// `{flavor, truncation, coefficients: [{degree, terms: [...]}]}` with
    /// terms ordered by partition.
    pub fn to_json(&self) -> Value {
        let coefficients: Vec<Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_zero())
            .map(|(d, f)| {
                let terms: Vec<Value> = f
                    .terms()
                    .iter()
                    .map(|(l, c)| {
                        json!({
                            "partition": l.to_string(),
                            "coeff_num": c.numer().to_string(),
                            "coeff_den": c.denom().to_string(),
                        })
                    })
                    .collect();
                json!({"degree": d, "terms": terms})
            })
            .collect();
        json!({
            "flavor": self.flavor,
            "truncation": self.truncation,
            "coefficients": coefficients,
        })
    }
}

impl Add for &SymSeries {
    type Output = SymSeries;
    /// Panics on flavor mismatch; see [`SymSeries::try_add`].
    fn add(self, rhs: &SymSeries) -> SymSeries {
        self.try_add(rhs).expect("series flavors must agree")
    }
}

impl Sub for &SymSeries {
    type Output = SymSeries;
    fn sub(self, rhs: &SymSeries) -> SymSeries {
        self + &-rhs
    }
}

impl Neg for &SymSeries {
    type Output = SymSeries;
    fn neg(self) -> SymSeries {
        self.scale(&-Q::one())
    }
}

impl fmt::Display for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.flavor {
            Flavor::GlSchur => "",
            Flavor::SpSchur => "[sp] ",
        };
        write!(f, "{sym}")?;
        let mut any = false;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if any {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{d}")?;
            any = true;
        }
        if !any {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.truncation + 1)
    }
}
