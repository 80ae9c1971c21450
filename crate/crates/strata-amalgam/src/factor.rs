//! Merging two consecutive factors of a blown-up cell.
//!
//! The blow-up of a filtered simplex is a product of cones with a plain
//! simplex on top. Coarsening the filtration by one step multiplies a cone
//! factor into its successor; on cells this merge θ sends a closed cone
//! (F₀, 1) ⊗ (F₁, ε) to (F₀∗F₁, ε), lets an open cone (F₀, 0) absorb — and
//! forget — any factor of degree zero, and kills every other shape. Vertex
//! ids are ordered by weight, so the join of consecutive blocks is plain
//! concatenation and never needs a reordering sign.
//!
//! The dual split Ξ is the transpose of θ under the weave-signed evaluation
//! pairing; the weave difference of a cell and its merge is exactly the
//! degree product of the two factors involved, which is where the sign
//! (−1)^{|(F₀,1)|·|(F₁,ε)|} of the split of a joined block comes from. An
//! open cone (F₀, 0) splits into (F₀, 0) ⊗ λ, the sum of all degree-zero
//! shapes of the forgotten factor, with no sign.

use crate::AmalgamError;
use num_traits::Zero;
use strata_blowup::{enumerate_all, BlownUpCochain, BlowupFace};
use strata_complex::WeightedComplex;
use strata_products::{koszul_weave, PrismChain};

/// θ on one cell: merges cone factor `p` into factor `p + 1`, which may be
/// the top. `None` when the cell maps to zero, i.e. when an open cone would
/// have to absorb a factor of positive degree.
pub fn merge_factors(cell: &BlowupFace, p: usize) -> Option<BlowupFace> {
    let n = cell.n();
    assert!(p < n, "only a cone factor can merge into its successor");
    let mut blocks: Vec<Vec<usize>> = cell.blocks().to_vec();
    let mut eps: Vec<u8> = (0..n).map(|i| cell.eps(i)).collect();
    if cell.eps(p) == 1 {
        // Closed cone: join the blocks, keep the successor's shape.
        let mut merged = std::mem::take(&mut blocks[p]);
        merged.extend_from_slice(&blocks[p + 1]);
        debug_assert!(merged.windows(2).all(|w| w[0] < w[1]), "blocks are weight-ordered");
        blocks[p + 1] = merged;
        blocks.remove(p);
        eps.remove(p);
    } else {
        // Open cone: absorb a degree-zero successor, forgetting its vertex.
        let successor_degree =
            blocks[p + 1].len() as i64 - 1 + if p + 1 == n { 0 } else { eps[p + 1] as i64 };
        if successor_degree != 0 {
            return None;
        }
        blocks.remove(p + 1);
        if p + 1 == n {
            // The open cone becomes the new top factor and loses its flag.
            eps.pop();
        } else {
            eps.remove(p + 1);
        }
    }
    Some(BlowupFace::new(blocks, eps).expect("a merged cell is validly coded"))
}

/// The merge position of the elementary k-amalgamation: counted from the
/// top of the filtration, it multiplies factor n−k−1 into its successor.
fn merge_position(n: usize, k: usize) -> Result<usize, AmalgamError> {
    if n == 0 || k >= n {
        return Err(AmalgamError::PositionOutOfRange(format!(
            "k = {} with {} cone factors",
            k, n
        )));
    }
    Ok(n - k - 1)
}

/// Pushforward of a prism chain along the elementary k-amalgamation; every
/// cell merges with coefficient one or dies.
pub fn elementary_push(
    cx: &WeightedComplex,
    k: usize,
    c: &PrismChain,
) -> Result<PrismChain, AmalgamError> {
    let p = merge_position(cx.formal_dimension(), k)?;
    let mut out = PrismChain::zero(c.ring, c.degree);
    for (cell, coeff) in c.iter() {
        if let Some(merged) = merge_factors(cell, p) {
            out.add_term(merged, coeff);
        }
    }
    Ok(out)
}

/// Pullback of a cochain along the elementary k-amalgamation: the transpose
/// of the merge under the weave-signed evaluation pairing. The input lives
/// on merged cells (one factor fewer), the output on the cells of `cx`.
pub fn elementary_pullback(
    cx: &WeightedComplex,
    k: usize,
    omega: &BlownUpCochain,
) -> Result<BlownUpCochain, AmalgamError> {
    let p = merge_position(cx.formal_dimension(), k)?;
    let mut out = BlownUpCochain::zero(omega.ring, omega.degree);
    if omega.degree < 0 {
        return Ok(out);
    }
    let bases = enumerate_all(cx);
    let Some(cells) = bases.get(omega.degree as usize) else {
        return Ok(out);
    };
    for x in cells {
        let Some(merged) = merge_factors(x, p) else { continue };
        let v = omega.coefficient(&merged);
        if v.is_zero() {
            continue;
        }
        let twist = koszul_weave(x) + koszul_weave(&merged);
        out.add_term(x.clone(), &if twist % 2 == 0 { v } else { -v });
    }
    Ok(out)
}
