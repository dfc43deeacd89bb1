use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use super::checks::apply_f_to_tensor;
use super::element::{Index, TensorElement};
use super::uvec::{iota_expand, UVector, WedgeChain};
use crate::{PairOfPartitions, Partition, Result, Q};

/// Basis vector of `U_m^tree` (indices of `∧^{m+1}H⊗H*`) or `U_m^wheel`
/// (indices of `∧^mH`), as a generator of the graded-symmetric algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Gen {
    degree: usize,
    tree: bool,
    idx: Vec<Index>,
}

type Monomial = Vec<Gen>;
type SymElement = BTreeMap<Monomial, Q>;
type CoElement = BTreeMap<(Monomial, Monomial), Q>;

fn add<K: Ord>(m: &mut BTreeMap<K, Q>, k: K, c: Q) {
    let e = m.entry(k).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        m.retain(|_, v| !v.is_zero());
    }
}

/// Sorts into graded-commutative normal form. `None` if an odd generator
/// repeats.
fn koszul_sort(mut gens: Vec<Gen>) -> Option<(Monomial, bool)> {
    let mut negate = false;
    for i in 1..gens.len() {
        let mut j = i;
        while j > 0 && gens[j - 1] > gens[j] {
            if gens[j - 1].degree % 2 == 1 && gens[j].degree % 2 == 1 {
                negate = !negate;
            }
            gens.swap(j - 1, j);
            j -= 1;
        }
        if j > 0 && gens[j - 1] == gens[j] && gens[j].degree % 2 == 1 {
            return None;
        }
    }
    Some((gens, negate))
}

fn tensor_to_sym(mu: &Partition, nu: &Partition, y: &TensorElement, out: &mut SymElement) {
    for (idx, c) in y.terms() {
        let mut gens = Vec::new();
        let mut pos = 0;
        for &m in mu.parts() {
            gens.push(Gen { degree: m, tree: true, idx: idx[pos..pos + m + 2].to_vec() });
            pos += m + 2;
        }
        for &m in nu.parts() {
            gens.push(Gen { degree: m, tree: false, idx: idx[pos..pos + m].to_vec() });
            pos += m;
        }
        if let Some((mono, neg)) = koszul_sort(gens) {
            add(out, mono, if neg { -c } else { c.clone() });
        }
    }
}

/// `F_* = Σ_{(μ,ν)} F_{(μ,ν)}` on a chain, as an element of the
/// graded-symmetric algebra on tree and wheel parts.
pub fn f_total(chain: &WedgeChain<UVector>) -> Result<SymElementView> {
    Ok(SymElementView(f_total_raw(chain)?))
}

fn f_total_raw(chain: &WedgeChain<UVector>) -> Result<SymElement> {
    let mut out = SymElement::new();
    if chain.degree() == 0 {
        out.insert(Vec::new(), Q::one());
        return Ok(out);
    }
    let x = iota_expand(chain)?;
    for pair in PairOfPartitions::all(chain.degree()) {
        let y = apply_f_to_tensor(&pair.mu, &pair.nu, &x)?;
        tensor_to_sym(&pair.mu, &pair.nu, &y, &mut out);
    }
    Ok(out)
}

/// Opaque view of an element of the graded-symmetric algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElementView(SymElement);

impl SymElementView {
    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Number of pairs `(a ∈ rest, b ∈ chosen)` with `a` before `b` and both odd.
fn koszul_crossings(degrees: &[usize], chosen: u32) -> usize {
    let mut count = 0;
    for b in 0..degrees.len() {
        if chosen >> b & 1 == 0 || degrees[b].is_multiple_of(2) {
            continue;
        }
        count += (0..b).filter(|&a| chosen >> a & 1 == 0 && degrees[a] % 2 == 1).count();
    }
    count
}

/// `Δ(y_1⋯y_k) = Σ_S ± y_S ⊗ y_{S^c}` with Koszul signs.
fn delta_sym(x: &SymElement) -> CoElement {
    let mut out = CoElement::new();
    for (mono, c) in x {
        let degrees: Vec<usize> = mono.iter().map(|g| g.degree).collect();
        for s in 0..1u32 << mono.len() {
            let left: Monomial = (0..mono.len()).filter(|&j| s >> j & 1 == 1).map(|j| mono[j].clone()).collect();
            let right: Monomial = (0..mono.len()).filter(|&j| s >> j & 1 == 0).map(|j| mono[j].clone()).collect();
            let c = if koszul_crossings(&degrees, s) % 2 == 1 { -c } else { c.clone() };
            add(&mut out, (left, right), c);
        }
    }
    out
}

/// Result of comparing `(F⊗F)Δ` with `ΔF` on a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComultiplyReport {
    pub degree: usize,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub equal: bool,
}

/// Checks `(F⊗F)Δ(x) = ΔF(x)`; Δ on the wedge is the signed shuffle sum.
pub fn comultiply_check(chain: &WedgeChain<UVector>) -> Result<ComultiplyReport> {
    let i = chain.degree();
    let all_odd = vec![1usize; i];
    let mut images: BTreeMap<u32, SymElement> = BTreeMap::new();
    for s in 0..1u32 << i {
        let pos: Vec<usize> = (0..i).filter(|&j| s >> j & 1 == 1).collect();
        images.insert(s, f_total_raw(&chain.select(&pos))?);
    }
    let full = (1u32 << i) - 1;
    let mut lhs = CoElement::new();
    for s in 0..1u32 << i {
        let negate = koszul_crossings(&all_odd, s) % 2 == 1;
        for (a, x) in &images[&s] {
            for (b, y) in &images[&(full ^ s)] {
                let c = x * y;
                add(&mut lhs, (a.clone(), b.clone()), if negate { -c } else { c });
            }
        }
    }
    let rhs = delta_sym(&images[&full]);
    Ok(ComultiplyReport { degree: i, lhs_terms: lhs.len(), rhs_terms: rhs.len(), equal: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::p;
    use crate::tensor::uvec::{abelian_cycle_chain, magnus_image, MagnusGen};

    #[test]
    fn shuffle_signs() {
        // Δ(x₁∧x₂): the x₂⊗x₁ term carries a minus sign.
        assert_eq!(koszul_crossings(&[1, 1], 0b10), 1);
        assert_eq!(koszul_crossings(&[1, 1], 0b01), 0);
        assert_eq!(koszul_crossings(&[2, 1], 0b10), 0);
    }

    #[test]
    fn primitive_degree_one() {
        let c = WedgeChain::new(vec![magnus_image(MagnusGen::F(1, 2, 3), 4).unwrap()]).unwrap();
        let r = comultiply_check(&c).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs_terms, 2 * f_total(&c).unwrap().num_terms());
    }

    #[test]
    fn connected_degree_two() {
        let c = abelian_cycle_chain(&p(""), &p("2"), 6).unwrap();
        assert!(comultiply_check(&c).unwrap().equal);
        let c = abelian_cycle_chain(&p("1"), &p("1"), 6).unwrap();
        assert!(comultiply_check(&c).unwrap().equal);
    }
}
