//! Graded pieces built from `U_i = Hom(H, ∧^{i+1}H)`: the traceless
//! graded-symmetric algebra `W_* = S̃*(U_*)`, its IO variant, exterior powers
//! of `U` and `U^O`, and symplectic character families.

pub mod reference;
mod torelli;

use std::collections::BTreeMap;

use crate::combinatorics::{PairOfPartitions, Partition};
use crate::error::Result;
use crate::glrep::{dim_polynomial, power, wedge_u, PowerKind, RepGL};
use crate::poly::Poly;
use crate::Bipartition;

pub use torelli::{gg_identity_checks, torelli_char, traceless_algebra_char, GgReport, TorelliFamily};

/// `U_i^tree = V_{1^{i+1},1}`.
pub fn u_tree(i: usize) -> RepGL {
    RepGL::irrep(Bipartition::new(Partition::column(i + 1), Partition::column(1)))
}

/// `U_i^wheel = V_{1^i,0}`.
pub fn u_wheel(i: usize) -> RepGL {
    RepGL::polynomial(Partition::column(i))
}

/// `(U_i, U_i^tree, U_i^wheel)`.
pub fn u_i(i: usize) -> (RepGL, RepGL, RepGL) {
    let (t, w) = (u_tree(i), u_wheel(i));
    (&t + &w, t, w)
}

/// `U^O = U_1^tree`.
pub fn u_o() -> RepGL {
    u_tree(1)
}

fn graded_kind(degree: usize) -> PowerKind {
    if degree % 2 == 1 {
        PowerKind::Alternating
    } else {
        PowerKind::Symmetric
    }
}

/// Full size of `W(μ,ν)`: each tree part `m` contributes `m + 2`, each wheel
/// part `m`.
pub fn full_size(mu: &Partition, nu: &Partition) -> usize {
    mu.size() + 2 * mu.len() + nu.size()
}

/// Graded-symmetric factors of `U^tree_μ ⊗ U^wheel_ν`, optionally reduced to
/// their traceless parts.
fn factors(mu: &Partition, nu: &Partition, traceless: bool) -> Result<Vec<RepGL>> {
    let mut out = Vec::new();
    for (m, k) in mu.multiplicities() {
        let p = power(&u_tree(m), k, graded_kind(m))?;
        out.push(if traceless { p.traceless_filter(k * (m + 2)) } else { p });
    }
    for (m, k) in nu.multiplicities() {
        let p = power(&u_wheel(m), k, graded_kind(m))?;
        out.push(if traceless { p.traceless_filter(k * m) } else { p });
    }
    Ok(out)
}

/// `W(μ,ν)`: the traceless tensor product of the traceless graded-symmetric
/// powers of the tree and wheel parts.
pub fn w_component(mu: &Partition, nu: &Partition) -> Result<RepGL> {
    let mut acc = RepGL::trivial();
    for f in factors(mu, nu, true)? {
        acc = acc.koike_tensor(&f);
    }
    Ok(acc.traceless_filter(full_size(mu, nu)))
}

/// `S^{k'}(U^tree_μ) ⊗ S^{k''}(U^wheel_ν)` with no traceless reduction.
pub fn s_star_u_component(mu: &Partition, nu: &Partition) -> Result<RepGL> {
    let mut acc = RepGL::trivial();
    for f in factors(mu, nu, false)? {
        acc = acc.koike_tensor(&f);
    }
    Ok(acc)
}

/// `W(μ,ν)` for every pair of a given degree, with their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WTable {
    pub degree: usize,
    pub entries: BTreeMap<PairOfPartitions, RepGL>,
    pub total: RepGL,
}

impl WTable {
    fn build(degree: usize, keep: impl Fn(&PairOfPartitions) -> bool) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let mut total = RepGL::zero();
        for pair in PairOfPartitions::all(degree).into_iter().filter(|p| keep(p)) {
            let w = w_component(&pair.mu, &pair.nu)?;
            total = &total + &w;
            entries.insert(pair, w);
        }
        Ok(WTable { degree, entries, total })
    }
}

/// `W_i = ⊕_{(μ,ν)⊢i} W(μ,ν)`.
pub fn w_table(i: usize) -> Result<WTable> {
    WTable::build(i, |_| true)
}

/// `W_i^O`: as `W_i` but without wheel parts of degree 1.
pub fn wo_table(i: usize) -> Result<WTable> {
    WTable::build(i, |p| !p.nu.parts().contains(&1))
}

/// `∧^i U^O`, from `∧^i U = Σ_b ∧^{i−b} U^O ⊗ ∧^b H`.
pub fn wedge_uo(i: usize) -> Result<RepGL> {
    let mut table: Vec<RepGL> = Vec::with_capacity(i + 1);
    for k in 0..=i {
        let mut r = wedge_u(k);
        for b in 1..=k {
            r = &r - &table[k - b].koike_tensor(&RepGL::polynomial(Partition::column(b)));
        }
        r.check_nonnegative("wedge_uo")?;
        table.push(r);
    }
    Ok(table.pop().unwrap())
}

/// `dim (∧^i U)^tl` as a polynomial in `n`, valid for `n ≥ 3i`.
pub fn traceless_dim_polynomial(i: usize) -> Poly {
    dim_polynomial(&wedge_u(i).traceless_filter(3 * i))
}

/// Both sides of `W_i ≅ W_i^O ⊕ (W_{i−1}^O ⊗ H)`.
pub fn wi_woi_sides(i: usize) -> Result<(RepGL, RepGL)> {
    let lhs = w_table(i)?.total;
    let prev = if i == 0 { RepGL::zero() } else { wo_table(i - 1)?.total };
    let rhs = &wo_table(i)?.total + &prev.koike_tensor(&RepGL::polynomial(Partition::column(1)));
    Ok((lhs, rhs))
}

pub fn wi_woi_check(i: usize) -> Result<bool> {
    let (l, r) = wi_woi_sides(i)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;
    use crate::glrep::parse_rep;
    use crate::Q;

    fn rep(s: &str) -> RepGL {
        parse_rep(s).unwrap()
    }

    #[test]
    fn u_parts() {
        assert_eq!(u_i(1).0, rep("1,1|1 + 1|0"));
        assert_eq!(u_i(2).1, rep("1,1,1|1"));
        assert_eq!(u_i(2).2, rep("1,1|0"));
    }

    #[test]
    fn w_components() {
        assert_eq!(w_component(&p("1"), &p("0")).unwrap(), rep("1,1|1"));
        assert_eq!(w_component(&p("1,1"), &p("0")).unwrap(), rep("1^4|1,1 + 2,1,1|2 + 2,2|1,1"));
        assert_eq!(w_component(&p("0"), &p("2")).unwrap(), rep("1,1|0"));
        assert_eq!(w_table(1).unwrap().total, rep(reference::W1));
        assert_eq!(w_table(2).unwrap().total, rep(reference::W2));
        assert_eq!(w_table(2).unwrap().entries.len(), 5);
    }

    #[test]
    fn construction_orders_agree() {
        for i in 0..=3 {
            let table = w_table(i).unwrap();
            for (pair, w) in &table.entries {
                let full = s_star_u_component(&pair.mu, &pair.nu).unwrap();
                assert_eq!(&full.traceless_filter(full_size(&pair.mu, &pair.nu)), w, "{pair}");
            }
            assert!(table.total.minimal_rank() <= 3 * i);
        }
    }

    #[test]
    fn wedge_uo_small() {
        assert_eq!(wedge_uo(1).unwrap(), rep("1,1|1"));
        assert_eq!(wedge_uo(2).unwrap(), power(&u_o(), 2, PowerKind::Alternating).unwrap());
        for i in 0..=3 {
            let mut sum = wedge_uo(i).unwrap();
            for b in 1..=i {
                sum = &sum + &wedge_uo(i - b).unwrap().koike_tensor(&RepGL::polynomial(Partition::column(b)));
            }
            assert_eq!(sum, wedge_u(i));
        }
    }

    #[test]
    fn dim_polynomials() {
        let n = Poly::var();
        let one = Poly::constant(Q::from_integer(1.into()));
        let two = Poly::constant(Q::from_integer(2.into()));
        let want = (&(&n * &(&n + &one)) * &(&n - &two)).scale(&Q::new(1.into(), 2.into()));
        assert_eq!(traceless_dim_polynomial(1), want);
        assert_eq!(traceless_dim_polynomial(1).eval(&Q::from_integer(3.into())), Q::from_integer(6.into()));
        for i in 1..=2 {
            let poly = traceless_dim_polynomial(i);
            assert_eq!(poly.degree(), Some(3 * i));
            let rep = wedge_u(i).traceless_filter(3 * i);
            for k in 3 * i..=3 * i + 2 {
                assert_eq!(poly.eval(&Q::from_integer(k.into())), Q::from_integer(rep.dimension(k)));
            }
        }
    }

    #[test]
    fn wi_woi_small() {
        assert!(wi_woi_check(1).unwrap());
        assert!(wi_woi_check(2).unwrap());
    }
}
