//! Weight recodings and the maps they induce on blown-up (co)chains.
//!
//! A recoding φ coarsens the weights of a complex without touching its
//! simplices, so the identity is a stratified map from the fine structure to
//! the coarse one. Every coarse cone factor collects a consecutive run of
//! fine factors; on cells the pushforward merges each run with the
//! factor-level θ, and the pullback is the transpose under the weave-signed
//! evaluation pairing. The merge is associative, so the deterministic
//! left-to-right order used here agrees with any decomposition into
//! elementary one-step amalgamations.

use crate::factor::merge_factors;
use crate::{cochain_vector, coordinates_in, AmalgamError, InducedMap};
use num_traits::Zero;
use strata_algebra::{IntMatrix, Ring};
use strata_blowup::{enumerate_all, intersection_subcomplex, BlownUpCochain, BlowupFace};
use strata_chains::TameChain;
use strata_complex::{builders, Perversity, WeightedComplex};
use strata_products::{koszul_weave, PrismChain};

/// A monotone recoding of the weights of one complex, kept together with
/// the fine and coarse structures it connects.
#[derive(Clone, Debug)]
pub struct WeightRecoding {
    fine: WeightedComplex,
    coarse: WeightedComplex,
    phi: Vec<usize>,
}

impl WeightRecoding {
    /// Validates φ (monotone, unit increments, one entry per fine weight)
    /// and recodes. Unit increments bound φ(n) − φ(i) by n − i, so no
    /// stratum's codimension can grow under the coarsening: the identity is
    /// a stratified map.
    pub fn new(fine: &WeightedComplex, phi: &[usize]) -> Result<Self, AmalgamError> {
        let coarse = builders::recode_weights(fine, phi)?;
        debug_assert!(coarse.same_underlying(fine), "recoding must keep the simplices");
        Ok(WeightRecoding { fine: fine.clone(), coarse, phi: phi.to_vec() })
    }

    /// Parses the command-line form `0->0,1->0,2->1`.
    pub fn parse(fine: &WeightedComplex, text: &str) -> Result<Self, AmalgamError> {
        let n = fine.formal_dimension();
        let mut phi: Vec<Option<usize>> = vec![None; n + 1];
        for part in text.split(',') {
            let (from, to) = part
                .split_once("->")
                .ok_or_else(|| AmalgamError::BadRecoding(format!("expected i->j, got `{part}`")))?;
            let i: usize = from
                .trim()
                .parse()
                .map_err(|_| AmalgamError::BadRecoding(format!("bad weight `{from}`")))?;
            let j: usize = to
                .trim()
                .parse()
                .map_err(|_| AmalgamError::BadRecoding(format!("bad weight `{to}`")))?;
            if i > n {
                return Err(AmalgamError::BadRecoding(format!(
                    "weight {} exceeds the formal dimension {}",
                    i, n
                )));
            }
            if phi[i].replace(j).is_some() {
                return Err(AmalgamError::BadRecoding(format!("weight {} mapped twice", i)));
            }
        }
        let phi = phi
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| AmalgamError::BadRecoding(format!("weight {} is unmapped", i)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(fine, &phi)
    }

    pub fn identity(cx: &WeightedComplex) -> Self {
        let phi: Vec<usize> = (0..=cx.formal_dimension()).collect();
        Self::new(cx, &phi).expect("the identity recoding is valid")
    }

    pub fn fine(&self) -> &WeightedComplex {
        &self.fine
    }

    pub fn coarse(&self) -> &WeightedComplex {
        &self.coarse
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// The fine factor positions feeding each coarse factor. Positions below
    /// φ(0) collect nothing and stay empty in every coarse block structure.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.coarse.formal_dimension() + 1];
        for (i, &j) in self.phi.iter().enumerate() {
            groups[j].push(i);
        }
        groups
    }

    /// A recoding is simple when every merged run contains at most one
    /// inhabited weight class, so each elementary step joins an empty block
    /// in every simplex; simple pushforwards and pullbacks are bijections
    /// on cells.
    pub fn is_simple(&self) -> bool {
        let mut inhabited = vec![false; self.fine.formal_dimension() + 1];
        for v in 0..self.fine.vertex_count() {
            inhabited[self.fine.vertex_weight(v)] = true;
        }
        self.groups().iter().all(|g| g.iter().filter(|&&i| inhabited[i]).count() <= 1)
    }

    /// This recoding followed by `outer`, as a single recoding.
    pub fn compose(&self, outer: &WeightRecoding) -> Result<Self, AmalgamError> {
        let same_weights = (0..self.coarse.vertex_count())
            .all(|v| outer.fine.vertex_weight(v) == self.coarse.vertex_weight(v));
        if !outer.fine.same_underlying(&self.coarse) || !same_weights {
            return Err(AmalgamError::BadRecoding(
                "composition needs the outer fine structure to match the inner coarse one".into(),
            ));
        }
        let phi: Vec<usize> = self.phi.iter().map(|&j| outer.phi[j]).collect();
        Self::new(&self.fine, &phi)
    }
}

/// Pushforward of one cell: each coarse factor is the left-to-right merge
/// of the fine factors feeding it, and factors below φ(0) become empty
/// closed cones. `None` when any merge dies.
pub fn push_cell(r: &WeightRecoding, cell: &BlowupFace) -> Option<BlowupFace> {
    debug_assert_eq!(cell.n(), r.fine.formal_dimension(), "cell of the fine structure");
    let mut current = cell.clone();
    let mut at = 0usize;
    for group in r.groups() {
        if group.is_empty() {
            current = insert_empty_cone(&current, at);
        } else {
            for _ in 1..group.len() {
                current = merge_factors(&current, at)?;
            }
        }
        at += 1;
    }
    debug_assert_eq!(current.n(), r.coarse.formal_dimension());
    Some(current)
}

fn insert_empty_cone(cell: &BlowupFace, at: usize) -> BlowupFace {
    let mut blocks = cell.blocks().to_vec();
    let mut eps: Vec<u8> = (0..cell.n()).map(|i| cell.eps(i)).collect();
    blocks.insert(at, Vec::new());
    eps.insert(at, 1);
    BlowupFace::new(blocks, eps).expect("an empty closed cone keeps the coding valid")
}

/// Pushforward of a prism chain: cells merge with coefficient one or die.
pub fn push_chain(r: &WeightRecoding, c: &PrismChain) -> PrismChain {
    let mut out = PrismChain::zero(c.ring, c.degree);
    for (cell, coeff) in c.iter() {
        if let Some(merged) = push_cell(r, cell) {
            out.add_term(merged, coeff);
        }
    }
    out
}

/// Pushforward of a chain of regular simplices: the simplices stay put,
/// only their block decomposition coarsens.
pub fn push_tame(r: &WeightRecoding, xi: &TameChain) -> Result<TameChain, AmalgamError> {
    let mut out = TameChain::zero(xi.ring, xi.degree);
    for (s, v) in xi.iter() {
        out.add_term(r.coarse.join_decomposition(&s.vertices())?, v);
    }
    Ok(out)
}

/// Pullback of a global cochain: the transpose of the pushforward under the
/// weave-signed evaluation pairing, so a fine cell receives the coefficient
/// of its merge twisted by the weave difference of the two cells. The
/// coefficient at a cell only involves cells over the same simplex, which is
/// why the simplex-by-simplex description glues to this global map.
pub fn pullback_cochain(r: &WeightRecoding, omega: &BlownUpCochain) -> BlownUpCochain {
    let mut out = BlownUpCochain::zero(omega.ring, omega.degree);
    if omega.is_zero() || omega.degree < 0 {
        return out;
    }
    let bases = enumerate_all(&r.fine);
    let Some(cells) = bases.get(omega.degree as usize) else {
        return out;
    };
    for x in cells {
        let Some(merged) = push_cell(r, x) else { continue };
        let v = omega.coefficient(&merged);
        if v.is_zero() {
            continue;
        }
        let twist = koszul_weave(x) + koszul_weave(&merged);
        out.add_term(x.clone(), &if twist % 2 == 0 { v } else { -v });
    }
    out
}

/// The pullback restricted to allowable subcomplexes: a chain map from the
/// coarse intersection cochains into the fine ones, defined whenever the
/// fine perversity dominates the pullback of the coarse one.
pub fn refinement_pullback(
    r: &WeightRecoding,
    ring: Ring,
    p_coarse: &Perversity,
    p_fine: &Perversity,
) -> Result<InducedMap, AmalgamError> {
    let pulled = p_coarse.pullback(&r.coarse, &r.fine)?;
    for s in r.fine.strata() {
        if p_fine.eval(s) < pulled.eval(s) {
            return Err(AmalgamError::PerversityCondition(format!(
                "stratum {} has fine perversity {} below the pulled-back {}",
                s.id,
                p_fine.eval(s),
                pulled.eval(s)
            )));
        }
    }
    let source = intersection_subcomplex(&r.coarse, ring, p_coarse)?;
    let target = intersection_subcomplex(&r.fine, ring, p_fine)?;
    let len = source.len().max(target.len());
    let source = source.pad_to_len(len);
    let target = target.pad_to_len(len);
    let coarse_cells = enumerate_all(&r.coarse);
    let fine_cells = enumerate_all(&r.fine);
    let empty: Vec<BlowupFace> = Vec::new();
    let src_inc = source.inclusion.as_ref().expect("subcomplex carries its inclusion");
    let tgt_inc = target.inclusion.as_ref().expect("subcomplex carries its inclusion");
    let mut maps = Vec::new();
    for k in 0..len {
        let mut m = IntMatrix::zeros(target.dim(k), source.dim(k));
        let coarse_bucket = coarse_cells.get(k).unwrap_or(&empty);
        let fine_bucket = fine_cells.get(k).unwrap_or(&empty);
        for j in 0..source.dim(k) {
            let mut omega = BlownUpCochain::zero(ring, k as i64);
            let col = src_inc[k].col(j);
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    omega.add_term(coarse_bucket[i].clone(), v);
                }
            }
            let pulled = pullback_cochain(r, &omega);
            let vec = cochain_vector(fine_bucket, &pulled);
            let sol = coordinates_in(ring, &tgt_inc[k], &vec).ok_or_else(|| {
                AmalgamError::NotAllowable(format!(
                    "pulled generator {} of degree {} misses the fine subcomplex",
                    j, k
                ))
            })?;
            m.set_col(j, &sol);
        }
        maps.push(m);
    }
    Ok(InducedMap { source, target, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_complex::fixtures;

    fn cell(blocks: Vec<Vec<usize>>, eps: Vec<u8>) -> BlowupFace {
        BlowupFace::new(blocks, eps).unwrap()
    }

    #[test]
    fn recodings_validate_their_map() {
        let cx = fixtures::cone_circle();
        assert!(WeightRecoding::new(&cx, &[0, 1, 1]).is_ok());
        assert!(WeightRecoding::new(&cx, &[0, 1]).is_err(), "wrong length");
        assert!(WeightRecoding::new(&cx, &[1, 0, 1]).is_err(), "not monotone");
        assert!(WeightRecoding::new(&cx, &[0, 0, 2]).is_err(), "jump of two");
        let r = WeightRecoding::new(&cx, &[0, 0, 1]).unwrap();
        assert_eq!(r.coarse().formal_dimension(), 1);
        assert_eq!(r.coarse().vertex_weight(0), 0);
        assert_eq!(r.coarse().vertex_weight(1), 1);
    }

    #[test]
    fn parsing_matches_the_explicit_map() {
        let cx = fixtures::fake_s2();
        let r = WeightRecoding::parse(&cx, "0->2,1->2,2->2").unwrap();
        assert_eq!(r.phi(), &[2, 2, 2]);
        assert!(WeightRecoding::parse(&cx, "0->2,1->2").is_err(), "weight 2 unmapped");
        assert!(WeightRecoding::parse(&cx, "0->2,0->1,1->2,2->2").is_err(), "duplicate");
        assert!(WeightRecoding::parse(&cx, "0=2").is_err(), "bad separator");
    }

    #[test]
    fn groups_partition_the_fine_positions() {
        let cx = fixtures::fake_s2();
        let r = WeightRecoding::parse(&cx, "0->2,1->2,2->2").unwrap();
        assert_eq!(r.groups(), vec![vec![], vec![], vec![0, 1, 2]]);
        let id = WeightRecoding::identity(&cx);
        assert_eq!(id.groups(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn simplicity_sees_only_inhabited_classes() {
        // cone_circle has weights {0, 2}: merging 1 and 2 joins one inhabited
        // class, merging 0 and 1 as well; collapsing everything joins two.
        let cx = fixtures::cone_circle();
        assert!(WeightRecoding::new(&cx, &[0, 1, 1]).unwrap().is_simple());
        assert!(WeightRecoding::new(&cx, &[0, 0, 1]).unwrap().is_simple());
        assert!(!WeightRecoding::new(&cx, &[0, 0, 0]).unwrap().is_simple());
    }

    #[test]
    fn pushing_a_cell_merges_each_group() {
        let cx = fixtures::cone_circle();
        // Collapse everything onto weight 0: the fundamental cell of a facet
        // becomes the plain simplex.
        let all = WeightRecoding::new(&cx, &[0, 0, 0]).unwrap();
        let fund = cell(vec![vec![0], vec![], vec![1, 2]], vec![1, 1]);
        assert_eq!(push_cell(&all, &fund), Some(cell(vec![vec![0, 1, 2]], vec![])));
        let open = cell(vec![vec![0], vec![], vec![1, 2]], vec![0, 1]);
        assert_eq!(push_cell(&all, &open), None, "an open cone cannot absorb an edge");
        // Collapse onto weight 2 instead: empty cones are inserted below.
        let up = WeightRecoding::new(&fixtures::fake_s2(), &[2, 2, 2]).unwrap();
        let vert = cell(vec![vec![0], vec![], vec![1]], vec![0, 1]);
        assert_eq!(
            push_cell(&up, &vert),
            Some(cell(vec![vec![], vec![], vec![0]], vec![1, 1])),
            "the open cone absorbs the vertex and shifts into the top position"
        );
    }

    #[test]
    fn identity_recoding_pulls_back_to_the_identity() {
        let cx = fixtures::cone_circle();
        let id = WeightRecoding::identity(&cx);
        for bucket in enumerate_all(&cx) {
            for x in bucket {
                let one = BlownUpCochain::basis(Ring::Z, x.clone());
                assert_eq!(pullback_cochain(&id, &one), one);
            }
        }
    }

    #[test]
    fn refinement_needs_the_perversity_condition() {
        let cx = fixtures::fake_s2();
        let r = WeightRecoding::parse(&cx, "0->2,1->2,2->2").unwrap();
        let zero_c = Perversity::zero(r.coarse());
        let zero_f = Perversity::zero(r.fine());
        assert!(refinement_pullback(&r, Ring::Z, &zero_c, &zero_f).is_ok());
        // A negative fine perversity sits below the pulled-back zero.
        let neg = Perversity::per_stratum(
            r.fine(),
            &[(0, strata_complex::PValue::Fin(-1))],
        )
        .unwrap();
        assert!(matches!(
            refinement_pullback(&r, Ring::Z, &zero_c, &neg),
            Err(AmalgamError::PerversityCondition(_))
        ));
    }
}
