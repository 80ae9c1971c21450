//! Comparison with ordinary cohomology and with the regular part.
//!
//! The collapse μ sends a blown-up cell to the face of its simplex spanned
//! by the blocks up to the first open cone factor. Its transpose under the
//! weave-signed pairing pulls an ordinary cochain back to a blown-up one;
//! on a normal complex this induces an isomorphism from ordinary cohomology
//! onto the zero-perversity blown-up cohomology. At the other extreme, when
//! the perversity exceeds the top one on every singular stratum, evaluating
//! blown-up cochains on the fundamental cells of fully regular simplices is
//! a quasi-isomorphism onto the cohomology of the fully regular part.

use crate::{cochain_vector, coordinates_in, AmalgamError, InducedMap};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeSet, VecDeque};
use strata_algebra::{IntMatrix, Ring};
use strata_blowup::{enumerate_all, intersection_subcomplex, BlownUpCochain, BlowupFace};
use strata_chains::{fully_regular_cochains, ordinary_cochains};
use strata_complex::{PValue, Perversity, WeightedComplex};
use strata_products::{fundamental_cell, koszul_weave, mu_push_cell, SimplexChain};

/// The codifferential dual to the ordinary boundary, with the sign
/// convention δ = −(−1)^k ∂ᵀ used by every dualized presentation here.
pub fn ordinary_codifferential(cx: &WeightedComplex, eta: &SimplexChain) -> SimplexChain {
    let k = eta.degree;
    let mut out = SimplexChain::zero(eta.ring, k + 1);
    if eta.is_zero() || k < 0 {
        return out;
    }
    let Ok(dim) = usize::try_from(k + 1) else { return out };
    for verts in cx.faces_of_dim(dim) {
        let simplex = cx.join_decomposition(verts).expect("enumerated face");
        let mut acc = BigInt::zero();
        for (sign, face) in cx.boundary(&simplex) {
            acc += eta.coefficient(&face) * sign;
        }
        if acc.is_zero() {
            continue;
        }
        let twist = if k % 2 == 0 { -acc } else { acc };
        out.add_term(simplex, &twist);
    }
    out
}

/// Front-face/back-face cup product of ordinary cochains.
pub fn ordinary_cup(
    cx: &WeightedComplex,
    eta: &SimplexChain,
    zeta: &SimplexChain,
) -> SimplexChain {
    let (k, l) = (eta.degree, zeta.degree);
    let mut out = SimplexChain::zero(eta.ring, k + l);
    if k < 0 || l < 0 {
        return out;
    }
    let Ok(dim) = usize::try_from(k + l) else { return out };
    for verts in cx.faces_of_dim(dim) {
        let front = cx
            .join_decomposition(&verts[..=k as usize])
            .expect("a face of an enumerated face");
        let back = cx.join_decomposition(&verts[k as usize..]).expect("a face of an enumerated face");
        let v = eta.ring.reduce(&(eta.coefficient(&front) * zeta.coefficient(&back)));
        if !v.is_zero() {
            out.add_term(cx.join_decomposition(verts).expect("enumerated face"), &v);
        }
    }
    out
}

/// Pullback of an ordinary cochain along the collapse μ: the transpose
/// under the weave-signed pairing, so a cell that collapses onto a simplex
/// receives that simplex's value twisted by the cell's own weave sign.
pub fn mu_pullback(cx: &WeightedComplex, eta: &SimplexChain) -> BlownUpCochain {
    let mut out = BlownUpCochain::zero(eta.ring, eta.degree);
    if eta.is_zero() || eta.degree < 0 {
        return out;
    }
    let bases = enumerate_all(cx);
    let Some(cells) = bases.get(eta.degree as usize) else {
        return out;
    };
    for x in cells {
        let Some(simplex) = mu_push_cell(x) else { continue };
        let v = eta.coefficient(&simplex);
        if v.is_zero() {
            continue;
        }
        out.add_term(x.clone(), &if koszul_weave(x) % 2 == 0 { v } else { -v });
    }
    out
}

/// Whether every vertex of every singular stratum has a connected link, the
/// combinatorial form of normality for these complexes. Links are read off
/// the edges and triangles through the vertex; an isolated singular vertex
/// has an empty link and is never normal.
pub fn is_normal(cx: &WeightedComplex) -> bool {
    first_abnormal_vertex(cx).is_none()
}

fn first_abnormal_vertex(cx: &WeightedComplex) -> Option<usize> {
    cx.singular_strata()
        .flat_map(|s| s.vertex_set.iter().copied())
        .find(|&v| !vertex_link_connected(cx, v))
}

fn vertex_link_connected(cx: &WeightedComplex, v: usize) -> bool {
    let link: Vec<usize> = (0..cx.vertex_count())
        .filter(|&u| u != v && cx.contains_simplex(&sorted(&[u, v])))
        .collect();
    let Some(&start) = link.first() else {
        return false;
    };
    let mut seen: BTreeSet<usize> = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in &link {
            if !seen.contains(&w) && cx.contains_simplex(&sorted(&[u, v, w])) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    seen.len() == link.len()
}

fn sorted(vertices: &[usize]) -> Vec<usize> {
    let mut v = vertices.to_vec();
    v.sort_unstable();
    v
}

/// The comparison from ordinary cochains into the zero-perversity blown-up
/// cochains, given by pulling each cochain back along the collapse. Defined
/// only on normal complexes, where it is a quasi-isomorphism.
pub fn ordinary_comparison(cx: &WeightedComplex, ring: Ring) -> Result<InducedMap, AmalgamError> {
    if let Some(v) = first_abnormal_vertex(cx) {
        return Err(AmalgamError::NotNormal(format!(
            "vertex {} has a disconnected link",
            cx.vertex_name(v)
        )));
    }
    let source = ordinary_cochains(cx, ring)?;
    let target = intersection_subcomplex(cx, ring, &Perversity::zero(cx))?;
    let len = source.len().max(target.len());
    let source = source.pad_to_len(len);
    let target = target.pad_to_len(len);
    let cells = enumerate_all(cx);
    let empty: Vec<BlowupFace> = Vec::new();
    let tgt_inc = target.inclusion.as_ref().expect("subcomplex carries its inclusion");
    let mut maps = Vec::new();
    for k in 0..len {
        let mut m = IntMatrix::zeros(target.dim(k), source.dim(k));
        let bucket = cells.get(k).unwrap_or(&empty);
        for (j, verts) in cx.faces_of_dim(k).enumerate() {
            let mut eta = SimplexChain::zero(ring, k as i64);
            eta.add_term(cx.join_decomposition(verts)?, &BigInt::from(1));
            let phi = mu_pullback(cx, &eta);
            let vec = cochain_vector(bucket, &phi);
            let sol = coordinates_in(ring, &tgt_inc[k], &vec).ok_or_else(|| {
                AmalgamError::NotAllowable(format!(
                    "the pullback of {} leaves the zero-perversity subcomplex",
                    strata_chains::simplex_label(cx, verts)
                ))
            })?;
            m.set_col(j, &sol);
        }
        maps.push(m);
    }
    Ok(InducedMap { source, target, maps })
}

/// Evaluation on the fundamental cells of fully regular simplices: a chain
/// map from the blown-up cochains onto the cochains of the fully regular
/// part, defined when the perversity strictly exceeds the top perversity on
/// every singular stratum (so allowability constrains nothing there).
pub fn regular_restriction(
    cx: &WeightedComplex,
    ring: Ring,
    p: &Perversity,
) -> Result<InducedMap, AmalgamError> {
    for s in cx.singular_strata() {
        let top = PValue::Fin(s.codim as i64 - 2);
        if p.eval(s) <= top {
            return Err(AmalgamError::PerversityCondition(format!(
                "stratum {} has perversity {} not above the top value {}",
                s.id,
                p.eval(s),
                top
            )));
        }
    }
    let source = intersection_subcomplex(cx, ring, p)?;
    let target = fully_regular_cochains(cx, ring)?;
    let len = source.len().max(target.len());
    let source = source.pad_to_len(len);
    let target = target.pad_to_len(len);
    let n = cx.formal_dimension();
    let cells = enumerate_all(cx);
    let empty: Vec<BlowupFace> = Vec::new();
    let src_inc = source.inclusion.as_ref().expect("subcomplex carries its inclusion");
    let mut maps = Vec::new();
    for k in 0..len {
        let fully_regular: Vec<BlowupFace> = cx
            .faces_of_dim(k)
            .filter(|f| f.iter().all(|&v| cx.vertex_weight(v) == n))
            .map(|f| {
                let s = cx.join_decomposition(f).expect("enumerated face");
                fundamental_cell(&s).expect("fully regular simplices have fundamental cells")
            })
            .collect::<Vec<_>>();
        debug_assert_eq!(fully_regular.len(), target.dim(k));
        let bucket = cells.get(k).unwrap_or(&empty);
        let mut m = IntMatrix::zeros(target.dim(k), source.dim(k));
        for j in 0..source.dim(k) {
            let col = src_inc[k].col(j);
            let mut omega = BlownUpCochain::zero(ring, k as i64);
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    omega.add_term(bucket[i].clone(), v);
                }
            }
            let values: Vec<BigInt> =
                fully_regular.iter().map(|cell| omega.coefficient(cell)).collect();
            m.set_col(j, &values);
        }
        maps.push(m);
    }
    Ok(InducedMap { source, target, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_complex::fixtures;

    #[test]
    fn links_of_cone_points_decide_normality() {
        // The cone on two points has an apex whose link is two disconnected
        // vertices; the cone on a circle has circle links everywhere.
        assert!(!is_normal(&fixtures::cone_two_points()));
        assert!(is_normal(&fixtures::cone_circle()));
        assert!(is_normal(&fixtures::fake_s2()));
        assert!(is_normal(&fixtures::sphere()));
    }

    #[test]
    fn comparison_refuses_non_normal_complexes() {
        let cx = fixtures::cone_two_points();
        assert!(matches!(
            ordinary_comparison(&cx, Ring::Z),
            Err(AmalgamError::NotNormal(_))
        ));
    }

    #[test]
    fn pulling_back_a_vertex_cochain_collects_its_collapsing_cells() {
        // μ collapses a zero-cell onto a vertex of its simplex; the pullback
        // of the dual cochain of [apex] collects every zero-cell whose kept
        // prefix is exactly the apex, with no sign since weaves vanish in
        // degree zero.
        let cx = fixtures::cone_circle();
        let mut eta = SimplexChain::zero(Ring::Z, 0);
        eta.add_term(cx.join_decomposition(&[0]).unwrap(), &BigInt::from(1));
        let pulled = mu_pullback(&cx, &eta);
        assert!(!pulled.is_zero());
        for (cell, v) in pulled.iter() {
            assert_eq!(mu_push_cell(cell).unwrap().vertices(), vec![0]);
            assert_eq!(*v, BigInt::from(1));
        }
        let expected = enumerate_all(&cx)[0]
            .iter()
            .filter(|x| mu_push_cell(x).is_some_and(|s| s.vertices() == vec![0]))
            .count();
        assert_eq!(pulled.iter().count(), expected);
    }

    #[test]
    fn codifferential_matches_the_dualized_presentation() {
        let cx = fixtures::cone_circle();
        let dual = ordinary_cochains(&cx, Ring::Z).unwrap();
        for k in 0..cx.geometric_dimension() {
            for (j, verts) in cx.faces_of_dim(k).enumerate() {
                let mut eta = SimplexChain::zero(Ring::Z, k as i64);
                eta.add_term(cx.join_decomposition(verts).unwrap(), &BigInt::from(1));
                let delta = ordinary_codifferential(&cx, &eta);
                let col = dual.maps[k].col(j);
                for (i, w) in cx.faces_of_dim(k + 1).enumerate() {
                    let s = cx.join_decomposition(w).unwrap();
                    assert_eq!(delta.coefficient(&s), col[i]);
                }
            }
        }
    }

    #[test]
    fn restriction_requires_perversities_above_top() {
        let cx = fixtures::cone_circle();
        assert!(matches!(
            regular_restriction(&cx, Ring::Q, &Perversity::zero(&cx)),
            Err(AmalgamError::PerversityCondition(_))
        ));
        let apex = cx.singular_strata().next().unwrap().id;
        let p = Perversity::per_stratum(&cx, &[(apex, PValue::Fin(1))]).unwrap();
        assert!(regular_restriction(&cx, Ring::Q, &p).is_ok());
    }
}
