//! The stable representation ring of algebraic GL(n,ℚ)-representations,
//! indexed by bipartitions.

mod dimension;
mod oracle;
mod product_basis;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde_json::{json, Value};

use crate::combinatorics::{lr_product, skew, Bipartition, Partition};
use crate::error::{Error, Result};

pub use dimension::{dim_polynomial, dimension, hook_content_poly};
pub use oracle::{char_oracle_decompose, char_oracle_tensor, irreducible_character, LaurentPoly};
pub use product_basis::{power, wedge_u, PowerKind, ProductBasisElement};

/// Finite ℤ-combination of irreducibles `V_λ̲`. No zero multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RepGL {
    terms: BTreeMap<Bipartition, i64>,
}

impl RepGL {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn trivial() -> Self {
        Self::irrep(Bipartition::trivial())
    }

    pub fn irrep(b: Bipartition) -> Self {
        Self::from_terms([(b, 1)])
    }

    /// `V_{(λ),(0)}`.
    pub fn polynomial(lambda: Partition) -> Self {
        Self::irrep(Bipartition::new(lambda, Partition::empty()))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Bipartition, i64)>) -> Self {
        let mut out = Self::zero();
        for (b, m) in terms {
            out.add_term(b, m);
        }
        out
    }

    pub(crate) fn add_term(&mut self, b: Bipartition, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.terms.entry(b.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&b);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Bipartition, i64> {
        &self.terms
    }

    pub fn mult(&self, b: &Bipartition) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct irreducibles.
    pub fn distinct(&self) -> usize {
        self.terms.len()
    }

    /// Number of irreducibles counted with multiplicity.
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, m)| (b.clone(), m * c)))
    }

    pub fn dual(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, m)| (b.dual(), *m)))
    }

    /// Smallest rank at which every component is nonzero.
    pub fn minimal_rank(&self) -> usize {
        self.terms.keys().map(Bipartition::len).max().unwrap_or(0)
    }

    /// Drop components with more than `n` parts.
    pub fn restrict(&self, n: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(b, _)| b.len() <= n).map(|(b, m)| (b.clone(), *m)))
    }

    /// Keep the components with `|λ̲| = full_size`.
    pub fn traceless_filter(&self, full_size: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(b, _)| b.size() == full_size).map(|(b, m)| (b.clone(), *m)))
    }

    pub fn check_nonnegative(&self, context: &'static str) -> Result<()> {
        match self.terms.iter().find(|(_, &m)| m < 0) {
            Some((b, &m)) => Err(Error::NegativeMultiplicity {
                label: b.to_string(),
                mult: m,
                context,
            }),
            None => Ok(()),
        }
    }

    /// Tensor product by the contraction rule
    /// `V_λ̲ ⊗ V_μ̲ = Σ_{κ,ε} V_{(λ⁺/κ)(μ⁺/ε), (λ⁻/ε)(μ⁻/κ)}`,
    /// where juxtaposition is the Littlewood–Richardson product.
    pub fn koike_tensor(&self, other: &RepGL) -> RepGL {
        let mut out = RepGL::zero();
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                for (nu, m) in koike_irreps(a, b) {
                    out.add_term(nu, m * ma * mb);
                }
            }
        }
        out
    }

    /// Only the components of full size `|λ̲| + |μ̲|` of the tensor product.
    pub fn traceless_tensor(&self, other: &RepGL) -> RepGL {
        let mut out = RepGL::zero();
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                let plus = lr_product(&a.plus, &b.plus);
                let minus = lr_product(&a.minus, &b.minus);
                for (p, cp) in plus.iter() {
                    for (q, cq) in minus.iter() {
                        out.add_term(Bipartition::new(p.clone(), q.clone()), (cp * cq) as i64 * ma * mb);
                    }
                }
            }
        }
        out
    }

    /// `Σ mult · dim V_λ̲` at rank `n`.
    pub fn dimension(&self, n: usize) -> num::BigInt {
        self.terms.iter().map(|(b, m)| dimension(b, n) * num::BigInt::from(*m)).sum()
    }

    /// `{"components": [{"plus", "minus", "mult"}], "minimal_rank"}` in
    /// bipartition order.
    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .terms
            .iter()
            .map(|(b, m)| json!({"plus": b.plus.to_string(), "minus": b.minus.to_string(), "mult": m}))
            .collect();
        json!({"components": comps, "minimal_rank": self.minimal_rank()})
    }

    /// One line per component: `mult  plus|minus`.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        for (b, m) in &self.terms {
            s.push_str(&format!("{m:>4}  {b}\n"));
        }
        s
    }
}

fn koike_irreps(a: &Bipartition, b: &Bipartition) -> Vec<(Bipartition, i64)> {
    let mut out: BTreeMap<Bipartition, i64> = BTreeMap::new();
    // κ ⊆ a⁺ ∩ b⁻, ε ⊆ a⁻ ∩ b⁺
    for kappa in sub_partitions(&a.plus, &b.minus) {
        let ap = skew(&a.plus, &kappa);
        let bm = skew(&b.minus, &kappa);
        for eps in sub_partitions(&a.minus, &b.plus) {
            let am = skew(&a.minus, &eps);
            let bp = skew(&b.plus, &eps);
            let plus = schur_product(&ap, &bp);
            let minus = schur_product(&am, &bm);
            for (p, cp) in &plus {
                for (q, cq) in &minus {
                    *out.entry(Bipartition::new(p.clone(), q.clone())).or_insert(0) += (cp * cq) as i64;
                }
            }
        }
    }
    out.into_iter().collect()
}

fn schur_product(a: &BTreeMap<Partition, u64>, b: &BTreeMap<Partition, u64>) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            for (z, c) in lr_product(x, y).iter() {
                *out.entry(z.clone()).or_insert(0) += cx * cy * c;
            }
        }
    }
    out
}

/// Partitions contained in both `a` and `b`.
pub(crate) fn sub_partitions(a: &Partition, b: &Partition) -> Vec<Partition> {
    let len = a.len().min(b.len());
    let bound: Vec<usize> = (0..len).map(|i| a.part(i).min(b.part(i))).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(bound: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_unsorted(cur.clone()));
        if i == bound.len() {
            return;
        }
        for v in 1..=bound[i].min(max) {
            cur.push(v);
            rec(bound, i + 1, v, cur, out);
            cur.pop();
        }
    }
    rec(&bound, 0, usize::MAX, &mut cur, &mut out);
    out
}

impl Add for &RepGL {
    type Output = RepGL;
    fn add(self, rhs: &RepGL) -> RepGL {
        let mut out = self.clone();
        for (b, m) in &rhs.terms {
            out.add_term(b.clone(), *m);
        }
        out
    }
}

impl Sub for &RepGL {
    type Output = RepGL;
    fn sub(self, rhs: &RepGL) -> RepGL {
        self + &rhs.scale(-1)
    }
}

impl fmt::Display for RepGL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, m)| if *m == 1 { format!("V[{b}]") } else { format!("{m}*V[{b}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Parse `mult*plus|minus + ...`, e.g. `3*2,2,1|2 + 1,1|1`. Used for
/// reading tables as data.
pub fn parse_rep(s: &str) -> Result<RepGL> {
    let mut out = RepGL::zero();
    for tok in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (m, b) = match tok.split_once('*') {
            Some((m, b)) => (
                m.trim().parse::<i64>().map_err(|_| Error::Parse {
                    what: "multiplicity",
                    input: tok.to_string(),
                })?,
                b,
            ),
            None => (1, tok),
        };
        let b = b.trim().trim_start_matches("V[").trim_end_matches(']');
        out.add_term(b.parse()?, m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    pub(crate) fn rep(s: &str) -> RepGL {
        parse_rep(s).unwrap()
    }

    #[test]
    fn koike_examples() {
        let h = rep("1|0");
        let hs = rep("0|1");
        assert_eq!(h.koike_tensor(&hs), rep("1|1 + 0|0"));
        assert_eq!(rep("1|1").koike_tensor(&h), rep("2|1 + 1,1|1 + 1|0"));
        let got = rep("1|1,1").koike_tensor(&rep("1|2,1"));
        let want = rep(
            "2|3,2 + 2|3,1,1 + 2|2,2,1 + 2|2,1,1,1 + 1,1|3,2 + 1,1|3,1,1 + 1,1|2,2,1 + 1,1|2,1,1,1 \
             + 2*1|3,1 + 2*1|2,2 + 3*1|2,1,1 + 1|1,1,1,1 + 0|3 + 2*0|2,1 + 0|1,1,1",
        );
        assert_eq!(got, want);
        assert_eq!(got.total_multiplicity(), 20);
        assert_eq!(got.distinct(), 15);
    }

    #[test]
    fn restriction_and_filters() {
        assert!(rep("1,1|1").restrict(2).is_zero());
        assert_eq!(rep("1,1,1|0 + 1|0").restrict(2), rep("1|0"));
        assert_eq!(rep("1|1 + 0|0").traceless_filter(2), rep("1|1"));
        assert_eq!(rep("2,1|1").dual(), rep("1|2,1"));
    }

    #[test]
    fn dual_pair_contains_trivial_once() {
        let all: Vec<Bipartition> = (0..=3)
            .flat_map(|s| {
                (0..=s).flat_map(move |a| {
                    Partition::all(a).into_iter().flat_map(move |p| {
                        Partition::all(s - a).into_iter().map(move |m| Bipartition::new(p.clone(), m))
                    })
                })
            })
            .collect();
        for b in &all {
            let prod = RepGL::irrep(b.clone()).koike_tensor(&RepGL::irrep(b.dual()));
            assert_eq!(prod.mult(&Bipartition::trivial()), 1, "{b}");
        }
        for a in &all {
            for b in &all {
                let full = RepGL::irrep(a.clone()).koike_tensor(&RepGL::irrep(b.clone()));
                let tl = RepGL::irrep(a.clone()).traceless_tensor(&RepGL::irrep(b.clone()));
                assert_eq!(full.traceless_filter(a.size() + b.size()), tl);
            }
        }
    }
}
