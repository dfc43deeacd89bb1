use num::One;

use super::element::{Block, Index, Signature, TensorElement, Variance};
use crate::{Error, Result, Q};

/// Contraction of chosen (covariant, contravariant) slot pairs followed by a
/// regrouping of the surviving slots into plain factors and wedge blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionPlan {
    slots: Vec<Variance>,
    pairings: Vec<(usize, usize)>,
    output: Vec<Vec<usize>>,
}

impl ContractionPlan {
    pub fn new(slots: Vec<Variance>, pairings: Vec<(usize, usize)>, output: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidArgument(format!("contraction plan: {m}")));
        let mut used = vec![false; slots.len()];
        let mut mark = |s: usize| -> bool {
            if s >= used.len() || used[s] {
                return false;
            }
            used[s] = true;
            true
        };
        for &(c, d) in &pairings {
            if !mark(c) || !mark(d) {
                return bad(format!("pairing ({c},{d}) reuses or exceeds slots"));
            }
            if slots[c] != Variance::Cov || slots[d] != Variance::Contra {
                return bad(format!("pairing ({c},{d}) is not (cov, contra)"));
            }
        }
        for g in &output {
            if g.is_empty() {
                return bad("empty output group".into());
            }
            for &s in g {
                if !mark(s) {
                    return bad(format!("output slot {s} reused or out of range"));
                }
            }
            if g.iter().any(|&s| slots[s] != slots[g[0]]) {
                return bad("wedge block mixes variances".into());
            }
        }
        if used.iter().any(|u| !u) {
            return bad("some slot is neither paired nor output".into());
        }
        Ok(ContractionPlan { slots, pairings, output })
    }

    pub fn slots(&self) -> &[Variance] {
        &self.slots
    }

    pub fn pairings(&self) -> &[(usize, usize)] {
        &self.pairings
    }

    pub fn output(&self) -> &[Vec<usize>] {
        &self.output
    }

    pub fn output_signature(&self, n: usize) -> Result<Signature> {
        Signature::new(n, self.output.iter().map(|g| Block::wedge(self.slots[g[0]], g.len())).collect())
    }

    pub fn contract(&self, x: &TensorElement) -> Result<TensorElement> {
        if x.signature().slot_variances() != self.slots {
            return Err(Error::SignatureMismatch(format!(
                "plan expects {} slots {:?}",
                self.slots.len(),
                self.slots
            )));
        }
        let x = x.to_plain();
        let mut out = TensorElement::zero(self.output_signature(x.rank())?);
        for (idx, c) in x.terms() {
            if self.pairings.iter().any(|&(a, b)| idx[a] != idx[b]) {
                continue;
            }
            let k: Vec<Index> = self.output.iter().flatten().map(|&s| idx[s]).collect();
            out.add_term(k, c.clone());
        }
        Ok(out)
    }
}

/// Shape of one contraction chunk on `(H⊗H⊗H*)^{⊗m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chunk {
    /// `c_m`: output `a_1∧⋯∧a_m∧b_m ⊗ d_1*`.
    Tree(usize),
    /// `c_m^wheel`: output `a_1∧⋯∧a_m`, with the contraction closed up.
    Wheel(usize),
}

impl Chunk {
    pub fn degree(&self) -> usize {
        match *self {
            Chunk::Tree(m) | Chunk::Wheel(m) => m,
        }
    }
}

/// Slot variances of `M_i = (H⊗H⊗H*)^{⊗i}`.
pub fn m_slots(i: usize) -> Vec<Variance> {
    (0..i).flat_map(|_| [Variance::Cov, Variance::Cov, Variance::Contra]).collect()
}

/// Plan on `M_i` applying the chunks to consecutive factors.
pub fn chunk_plan(chunks: &[Chunk]) -> Result<ContractionPlan> {
    let i: usize = chunks.iter().map(Chunk::degree).sum();
    let mut pairings = Vec::new();
    let mut output = Vec::new();
    let mut start = 0;
    for ch in chunks {
        let m = ch.degree();
        if m == 0 {
            return Err(Error::InvalidArgument("chunk of degree 0".into()));
        }
        let a = |j: usize| 3 * (start + j);
        let b = |j: usize| 3 * (start + j) + 1;
        let d = |j: usize| 3 * (start + j) + 2;
        for j in 1..m {
            pairings.push((b(j - 1), d(j)));
        }
        let mut w: Vec<usize> = (0..m).map(a).collect();
        match ch {
            Chunk::Tree(_) => {
                w.push(b(m - 1));
                output.push(w);
                output.push(vec![d(0)]);
            }
            Chunk::Wheel(_) => {
                pairings.push((b(m - 1), d(0)));
                output.push(w);
            }
        }
        start += m;
    }
    ContractionPlan::new(m_slots(i), pairings, output)
}

/// `c_i`.
pub fn c_plan(i: usize) -> Result<ContractionPlan> {
    chunk_plan(&[Chunk::Tree(i)])
}

/// `c_i^wheel`.
pub fn c_wheel_plan(i: usize) -> Result<ContractionPlan> {
    chunk_plan(&[Chunk::Wheel(i)])
}

fn check_tree_block(x: &TensorElement, block: usize) -> Result<(std::ops::Range<usize>, usize)> {
    let blocks = x.signature().blocks();
    let ok = block + 1 < blocks.len()
        && blocks[block].variance == Variance::Cov
        && blocks[block + 1] == Block::plain(Variance::Contra);
    if !ok {
        return Err(Error::SignatureMismatch(format!("block {block} is not a wedge followed by a dual slot")));
    }
    let r = x.signature().block_ranges();
    Ok((r[block].start..r[block + 1].end, blocks[block].width - 1))
}

/// Signed trace `κ: ∧^{m+1}H⊗H* → ∧^mH` on the given block pair; the result
/// drops the dual slot.
pub fn trace_contract(x: &TensorElement, block: usize) -> Result<TensorElement> {
    let (range, m) = check_tree_block(x, block)?;
    let mut blocks = x.signature().blocks().to_vec();
    blocks[block] = Block::wedge(Variance::Cov, m);
    blocks.remove(block + 1);
    let sig = Signature::new(x.rank(), blocks)?;
    let mut out = TensorElement::zero(sig);
    if m == 0 {
        return Err(Error::InvalidArgument("trace of a width-1 block".into()));
    }
    for (idx, c) in x.terms() {
        let part = &idx[range.clone()];
        let d = part[m + 1];
        for k in 0..=m {
            if part[k] != d {
                continue;
            }
            let mut key = idx[..range.start].to_vec();
            key.extend(part[..m + 1].iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &v)| v));
            key.extend_from_slice(&idx[range.end..]);
            out.add_term(key, if k % 2 == 0 { c.clone() } else { -c });
        }
    }
    Ok(out)
}

/// `w ↦ Σ_j (e_j∧w)⊗e_j*` on a covariant wedge block.
pub fn trace_embed(x: &TensorElement, block: usize) -> Result<TensorElement> {
    let blocks = x.signature().blocks();
    if block >= blocks.len() || blocks[block].variance != Variance::Cov {
        return Err(Error::SignatureMismatch(format!("block {block} is not covariant")));
    }
    let m = blocks[block].width;
    let mut nb = blocks.to_vec();
    nb[block] = Block::wedge(Variance::Cov, m + 1);
    nb.insert(block + 1, Block::plain(Variance::Contra));
    let start = x.signature().block_ranges()[block].start;
    let mut out = TensorElement::zero(Signature::new(x.rank(), nb)?);
    for (idx, c) in x.terms() {
        for j in 1..=x.rank() as Index {
            let mut key = idx[..start].to_vec();
            key.push(j);
            key.extend_from_slice(&idx[start..start + m]);
            key.push(j);
            key.extend_from_slice(&idx[start + m..]);
            out.add_term(key, c.clone());
        }
    }
    Ok(out)
}

/// Projection of `∧^{m+1}H⊗H*` onto its traceless (tree) part:
/// `x − embed(κ(x))/(n−m)`.
pub fn tree_projection(x: &TensorElement, block: usize) -> Result<TensorElement> {
    let (_, m) = check_tree_block(x, block)?;
    let n = x.rank();
    if n <= m {
        return Ok(TensorElement::zero(x.signature().clone()));
    }
    let t = trace_embed(&trace_contract(x, block)?, block)?;
    x.try_sub(&t.scale(&(Q::one() / Q::from_integer((n - m).into()))))
}

/// Checks `κ∘embed = (n−m)·id` on every basis vector of `∧^m H`.
pub fn trace_self_test(n: usize, m: usize) -> Result<bool> {
    let sig = Signature::new(n, vec![Block::wedge(Variance::Cov, m)])?;
    for idx in super::linalg::increasing_tuples(n, m) {
        let w = TensorElement::basis(sig.clone(), &idx)?;
        let back = trace_contract(&trace_embed(&w, 0)?, 0)?;
        if back != w.scale(&Q::from_integer((n as i64 - m as i64).into())) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use Variance::*;

    #[test]
    fn plan_validation() {
        assert!(ContractionPlan::new(vec![Cov, Contra], vec![(1, 0)], vec![]).is_err());
        assert!(ContractionPlan::new(vec![Cov, Contra], vec![(0, 1)], vec![]).is_ok());
        assert!(ContractionPlan::new(vec![Cov, Contra], vec![], vec![vec![0]]).is_err());
        assert!(ContractionPlan::new(vec![Cov, Contra], vec![], vec![vec![0, 1]]).is_err());
        let p = c_plan(2).unwrap();
        assert_eq!(p.pairings(), &[(1, 5)]);
        assert_eq!(p.output(), &[vec![0, 3, 4], vec![2]]);
        let w = c_wheel_plan(2).unwrap();
        assert_eq!(w.pairings(), &[(1, 5), (4, 2)]);
    }

    #[test]
    fn trace_identities() {
        for n in 2..=5 {
            for m in 1..n {
                assert!(trace_self_test(n, m).unwrap(), "n={n} m={m}");
            }
        }
        let sig = Signature::new(4, vec![Block::wedge(Cov, 3), Block::plain(Contra)]).unwrap();
        let x = TensorElement::from_terms(sig, [(vec![1, 2, 3, 1], q(1)), (vec![1, 2, 4, 3], q(2))]).unwrap();
        let p = tree_projection(&x, 0).unwrap();
        assert!(trace_contract(&p, 0).unwrap().is_zero());
        assert_eq!(tree_projection(&p, 0).unwrap(), p);
    }

    #[test]
    fn contract_pairs_and_wedges() {
        let sig = Signature::plain(3, &[Cov, Cov, Contra]).unwrap();
        // (e_2⊗e_1 − e_1⊗e_2)⊗e_1*: the wheel contraction pairs b with d.
        let x = TensorElement::from_terms(sig, [(vec![2, 1, 1], q(1)), (vec![1, 2, 1], q(-1))]).unwrap();
        let y = c_wheel_plan(1).unwrap().contract(&x).unwrap();
        assert_eq!(y.len(), 1);
        assert_eq!(y.coefficient(&[2]), q(1));
        let z = c_plan(1).unwrap().contract(&x).unwrap();
        assert_eq!(z.coefficient(&[2, 1, 1]), q(2));
        assert!(c_plan(2).unwrap().contract(&x).is_err());
    }
}
