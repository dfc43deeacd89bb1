use num::{BigInt, One, Zero};

use super::{ProductBasisElement, RepGL};
use crate::combinatorics::{Bipartition, Partition};
use crate::poly::Poly;
use crate::Q;

/// `dim V_λ̲` at rank `n`: twist by `det^k` with `k = λ⁻_1` to reach a
/// polynomial irreducible, then apply the hook-content formula.
pub fn dimension(b: &Bipartition, n: usize) -> BigInt {
    let Some(w) = b.weight(n) else {
        return BigInt::zero();
    };
    let k = b.minus.part(0) as i64;
    let shifted = Partition::from_unsorted(w.iter().map(|x| (x + k) as usize).collect());
    shifted.hook_content(n as i64)
}

/// `Π_{(i,j)∈λ} (n + j − i) / hook(i,j)` as a polynomial in `n`.
pub fn hook_content_poly(lambda: &Partition) -> Poly {
    let mut out = Poly::constant(Q::one());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let factor = Poly::from_coeffs(vec![Q::from_integer((j as i64 - i as i64).into()), Q::one()]);
            out = &out * &factor;
            out = out.scale(&Q::new(1.into(), (lambda.hook(i, j) as i64).into()));
        }
    }
    out
}

/// `dim R` as a polynomial in `n`, read off from the product-basis
/// coordinates: `dim(V_{(α,0)} ⊗ V_{(0,β)}) = hc_α(n) · hc_β(n)`.
pub fn dim_polynomial(r: &RepGL) -> Poly {
    let mut out = Poly::zero();
    for ((a, b), m) in ProductBasisElement::from_rep(r).terms() {
        let term = &hook_content_poly(a) * &hook_content_poly(b);
        out = &out + &term.scale(&Q::from_integer((*m).into()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bp;
    use crate::glrep::{parse_rep, wedge_u};

    #[test]
    fn examples() {
        assert_eq!(dimension(&bp("1|1"), 3), BigInt::from(8));
        assert_eq!(dimension(&bp("2|0"), 3), BigInt::from(6));
        assert_eq!(dimension(&bp("1,1|1"), 3), BigInt::from(6));
        for n in 3..8i64 {
            let want = n * (n + 1) * (n - 2) / 2;
            assert_eq!(dimension(&bp("1,1|1"), n as usize), BigInt::from(want));
            assert_eq!(dimension(&bp("1|1"), n as usize), BigInt::from(n * n - 1));
        }
        assert_eq!(dimension(&bp("1,1|1"), 2), BigInt::zero());
    }

    #[test]
    fn dim_of_wedge_u_is_binomial() {
        for i in 0..=3usize {
            for n in (3 * i).max(3)..=3 * i + 2 {
                let du = n * n * (n - 1) / 2;
                let want: BigInt = (0..i).fold(BigInt::one(), |acc, j| acc * BigInt::from(du - j)) / crate::combinatorics::factorial(i);
                assert_eq!(wedge_u(i).dimension(n), want, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn polynomial_route_agrees() {
        let r = parse_rep("1,1|1 + 2*2,1|1,1 + 0|3").unwrap();
        let poly = dim_polynomial(&r);
        for n in r.minimal_rank()..r.minimal_rank() + 4 {
            assert_eq!(poly.eval(&Q::from_integer(n.into())), Q::from_integer(r.dimension(n)));
        }
    }
}
