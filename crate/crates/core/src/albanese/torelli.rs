use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::sprep::nl_series_product;
use crate::symfunc::{SymFunc, SymSeries};
use crate::Q;

/// The graded Sp-representations `X_*, Y_*, Z_*` and their quotients by
/// trivial lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorelliFamily {
    X,
    XPrime,
    XDouble,
    Y,
    YPrime,
    YDouble,
    Z,
    ZPrime,
    ZDouble,
}

impl TorelliFamily {
    pub const ALL: [TorelliFamily; 9] = [
        TorelliFamily::X,
        TorelliFamily::XPrime,
        TorelliFamily::XDouble,
        TorelliFamily::Y,
        TorelliFamily::YPrime,
        TorelliFamily::YDouble,
        TorelliFamily::Z,
        TorelliFamily::ZPrime,
        TorelliFamily::ZDouble,
    ];

    /// `e_F` with `ch(F_*) = Dω(e_F)`.
    pub fn exponent(self, max_degree: usize) -> SymSeries {
        use TorelliFamily::*;
        let d = max_degree;
        let l = SymSeries::l_series(d);
        let h1 = SymSeries::monomial(d, 1, SymFunc::h(1));
        let q2 = SymSeries::monomial(d, 2, SymFunc::one());
        let mut doubled = SymSeries::zero(d);
        for q in 1.. {
            if 4 * q - 2 > d {
                break;
            }
            doubled = &doubled + &SymSeries::monomial(d, 4 * q - 2, SymFunc::one());
        }
        match self {
            Y | ZPrime => l,
            X => &l - &h1,
            Z => &l + &q2,
            YPrime => &l - &q2,
            XPrime => &(&l - &h1) - &q2,
            XDouble => &(&l - &h1) - &doubled,
            YDouble => &l - &doubled,
            ZDouble => &(&l + &q2) - &doubled,
        }
    }
}

impl fmt::Display for TorelliFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TorelliFamily::*;
        f.write_str(match self {
            X => "X",
            XPrime => "X'",
            XDouble => "X''",
            Y => "Y",
            YPrime => "Y'",
            YDouble => "Y''",
            Z => "Z",
            ZPrime => "Z'",
            ZDouble => "Z''",
        })
    }
}

impl FromStr for TorelliFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('′', "'").replace('″', "''");
        TorelliFamily::ALL
            .into_iter()
            .find(|f| f.to_string() == t)
            .ok_or_else(|| Error::Parse {
                what: "torelli family",
                input: s.to_string(),
            })
    }
}

/// `ch(F_*) = Dω(e_F)`, in symplectic labels.
pub fn torelli_char(family: TorelliFamily, max_degree: usize) -> SymSeries {
    family.exponent(max_degree).omega().d_relabel().expect("exponent is gl-schur")
}

/// `ch(S̃*(F_*)) = D Exp D⁻¹ ch(F_*)`.
pub fn traceless_algebra_char(family: TorelliFamily, max_degree: usize) -> Result<SymSeries> {
    torelli_char(family, max_degree).d_inverse()?.exp()?.d_relabel()
}

/// Per-degree outcome of the three character identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GgReport {
    pub max_degree: usize,
    /// `ch(A¹) = ch(A)·(1 − s_⟨1⟩t + t²)`, Sp tensor product on the right.
    pub with_h1: Vec<bool>,
    /// KRW display for `ch(W)` against `D Exp D⁻¹ ch(Y″_*)`.
    pub krw: Vec<bool>,
    /// Trivial multiplicities of `S̃*(X″_*)` by degree.
    pub trivial_multiplicities: Vec<Q>,
    /// Coefficients of `Π_{i≥1}(1 − t^{4i})⁻¹`.
    pub expected_trivial: Vec<Q>,
}

impl GgReport {
    fn first(v: &[bool]) -> Option<usize> {
        v.iter().position(|ok| !ok)
    }

    pub fn with_h1_first_failure(&self) -> Option<usize> {
        Self::first(&self.with_h1)
    }

    pub fn krw_first_failure(&self) -> Option<usize> {
        Self::first(&self.krw)
    }

    pub fn trivial_first_failure(&self) -> Option<usize> {
        (0..=self.max_degree).find(|&d| self.trivial_multiplicities[d] != self.expected_trivial[d])
    }

    pub fn passed(&self) -> bool {
        self.with_h1_first_failure().is_none() && self.krw_first_failure().is_none() && self.trivial_first_failure().is_none()
    }

    pub fn to_json(&self) -> Value {
        let fmt_q = |v: &[Q]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>();
        json!({
            "max_degree": self.max_degree,
            "with_h1": {"pass": self.with_h1_first_failure().is_none(), "first_failure": self.with_h1_first_failure()},
            "krw": {"pass": self.krw_first_failure().is_none(), "first_failure": self.krw_first_failure()},
            "trivial": {
                "pass": self.trivial_first_failure().is_none(),
                "first_failure": self.trivial_first_failure(),
                "computed": fmt_q(&self.trivial_multiplicities),
                "expected": fmt_q(&self.expected_trivial),
            },
        })
    }
}

fn agree(a: &SymSeries, b: &SymSeries) -> Vec<bool> {
    (0..=a.truncation().min(b.truncation()))
        .map(|d| a.coefficient(d) == b.coefficient(d))
        .collect()
}

/// `Dω(Π_{i≥1}(1 − t^{4i−2}) · Exp((Σ_q h_q t^q/(1−t²) − h_0(1+t²) − h_1t − h_2t²)/t²))`.
fn krw_char(max_degree: usize) -> Result<SymSeries> {
    let top = max_degree + 2;
    let mut numerator = vec![SymFunc::zero(); top + 1];
    for (d, slot) in numerator.iter_mut().enumerate() {
        for j in 0..=d / 2 {
            *slot = &*slot + &SymFunc::h(d - 2 * j);
        }
    }
    numerator[0] = &numerator[0] - &SymFunc::h(0);
    numerator[1] = &numerator[1] - &SymFunc::h(1);
    numerator[2] = &(&numerator[2] - &SymFunc::h(0)) - &SymFunc::h(2);
    if numerator[..3].iter().any(|f| !f.is_zero()) {
        return Err(Error::InvalidArgument("numerator not divisible by t²".into()));
    }
    let inner = SymSeries::from_coeffs(max_degree, numerator[2..].to_vec());
    let mut prod = inner.exp()?;
    for i in 1.. {
        if 4 * i - 2 > max_degree {
            break;
        }
        let factor = &SymSeries::one(max_degree) - &SymSeries::monomial(max_degree, 4 * i - 2, SymFunc::one());
        prod = prod.try_mul(&factor)?;
    }
    prod.omega().d_relabel()
}

/// Coefficients of `Π_{i≥1}(1 − t^{4i})⁻¹` up to `max_degree`.
fn partitions_into_multiples_of_four(max_degree: usize) -> Vec<Q> {
    (0..=max_degree)
        .map(|d| {
            if d % 4 == 0 {
                Q::from_integer(Partition::all(d / 4).len().into())
            } else {
                Q::from_integer(0.into())
            }
        })
        .collect()
}

/// Check the three character identities up to `max_degree`.
pub fn gg_identity_checks(max_degree: usize) -> Result<GgReport> {
    let d = max_degree;
    let a1 = SymSeries::monomial(d, 2, SymFunc::one())
        .try_add(&SymSeries::l_series(d))?
        .exp()?
        .omega();
    let a = TorelliFamily::X.exponent(d).exp()?.omega();
    let correction = &(&SymSeries::one(d) - &SymSeries::monomial(d, 1, SymFunc::s(Partition::column(1))))
        + &SymSeries::monomial(d, 2, SymFunc::one());
    let with_h1 = agree(&a1, &nl_series_product(&a, &correction));

    let krw = agree(&krw_char(d)?, &traceless_algebra_char(TorelliFamily::YDouble, d)?);

    let x2 = traceless_algebra_char(TorelliFamily::XDouble, d)?;
    let trivial_multiplicities = (0..=d).map(|k| x2.coefficient(k).coefficient(&Partition::empty())).collect();

    Ok(GgReport {
        max_degree,
        with_h1,
        krw,
        trivial_multiplicities,
        expected_trivial: partitions_into_multiples_of_four(d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sprep::wedge_h_sp;

    #[test]
    fn family_characters() {
        let y = torelli_char(TorelliFamily::Y, 4).d_inverse().unwrap();
        assert_eq!(y.coefficient(1), &-&(&SymFunc::e(3) + &SymFunc::e(1)));
        let x = TorelliFamily::X.exponent(4);
        let yl = TorelliFamily::Y.exponent(4);
        assert_eq!(&yl - &x, SymSeries::monomial(4, 1, SymFunc::h(1)));
        let z = torelli_char(TorelliFamily::Z, 4).d_inverse().unwrap();
        assert_eq!(&z - &y, SymSeries::monomial(4, 2, SymFunc::one()));
        assert_eq!("Y''".parse::<TorelliFamily>().unwrap(), TorelliFamily::YDouble);
        assert_eq!("Z′".parse::<TorelliFamily>().unwrap(), TorelliFamily::ZPrime);
    }

    #[test]
    fn y_matches_exterior_powers() {
        // Y_i = ∧^{i+2}H read through its Sp decomposition.
        let g = 12;
        let mut m: Vec<SymFunc> = (0..=5)
            .map(|i| {
                SymFunc::from_terms(
                    wedge_h_sp(i + 2, g)
                        .terms()
                        .iter()
                        .map(|(lam, c)| (lam.clone(), Q::from_integer((*c).into()))),
                )
            })
            .collect();
        m[0] = SymFunc::zero();
        let want = SymSeries::ch_graded_rep(&m, 5).d_relabel().unwrap();
        assert_eq!(torelli_char(TorelliFamily::Y, 5), want);
    }

    #[test]
    fn identities_low_degree() {
        let r = gg_identity_checks(4).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.trivial_multiplicities[4], Q::from_integer(1.into()));
    }
}
