//! Matrix presentations of the simplicial chain complexes: ordinary, the
//! regular part, the fully regular subcomplex, and the perversity-filtered
//! intersection and tame complexes.

use crate::allowable::{is_allowable, is_tame};
use crate::chain::gd;
use crate::ChainsError;
use std::collections::BTreeMap;
use strata_algebra::{
    preimage_subcomplex, ChainComplexPresentation, Direction, IntMatrix, Ring,
};
use strata_complex::{FilteredSimplex, Perversity, WeightedComplex};

/// Dot-joined vertex names; the label simplices get in presentations.
pub fn simplex_label(cx: &WeightedComplex, verts: &[usize]) -> String {
    verts.iter().map(|&v| cx.vertex_name(v)).collect::<Vec<_>>().join(".")
}

fn chains_from(
    cx: &WeightedComplex,
    ring: Ring,
    keep: impl Fn(&[usize]) -> bool,
    diff: impl Fn(&FilteredSimplex) -> Vec<(i64, FilteredSimplex)>,
) -> Result<ChainComplexPresentation, ChainsError> {
    let top = cx.geometric_dimension();
    let buckets: Vec<Vec<Vec<usize>>> = (0..=top)
        .map(|d| cx.faces_of_dim(d).filter(|f| keep(f)).cloned().collect())
        .collect();
    let index: Vec<BTreeMap<&[usize], usize>> = buckets
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect())
        .collect();
    let mut maps = Vec::new();
    for k in 0..buckets.len() {
        let rows = if k == 0 { 0 } else { buckets[k - 1].len() };
        let mut m = IntMatrix::zeros(rows, buckets[k].len());
        for (j, verts) in buckets[k].iter().enumerate() {
            let simplex = cx.join_decomposition(verts)?;
            for (sign, face) in diff(&simplex) {
                let i = index[k - 1][face.vertices().as_slice()];
                m.set(i, j, sign.into());
            }
        }
        maps.push(m);
    }
    let labels = buckets
        .iter()
        .map(|b| b.iter().map(|f| simplex_label(cx, f)).collect())
        .collect();
    Ok(ChainComplexPresentation::new(ring, Direction::Down, labels, maps)?)
}

/// Every simplex, with the full simplicial boundary.
pub fn ordinary_chains(
    cx: &WeightedComplex,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    chains_from(cx, ring, |_| true, |s| cx.boundary(s))
}

/// Linear dual of the ordinary chains.
pub fn ordinary_cochains(
    cx: &WeightedComplex,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    Ok(ordinary_chains(cx, ring)?.dualize())
}

/// Regular simplices with the regular-part differential; this presents the
/// chains of the pair (complex, non-regular part).
pub fn regular_chains(
    cx: &WeightedComplex,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    chains_from(
        cx,
        ring,
        |f| cx.is_regular_simplex(f),
        |s| gd(cx, s).expect("regular basis"),
    )
}

/// Cochains vanishing on the non-regular part: the dual of `regular_chains`.
pub fn relative_cochains(
    cx: &WeightedComplex,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    Ok(regular_chains(cx, ring)?.dualize())
}

/// The full subcomplex on the top-weight vertices, with the ordinary
/// boundary; its simplices are everything the singular set cannot see.
pub fn fully_regular_chains(
    cx: &WeightedComplex,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    let n = cx.formal_dimension();
    chains_from(
        cx,
        ring,
        |f| f.iter().all(|&v| cx.vertex_weight(v) == n),
        |s| cx.boundary(s),
    )
}

pub fn fully_regular_cochains(
    cx: &WeightedComplex,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    Ok(fully_regular_chains(cx, ring)?.dualize())
}

/// Allowable chains with allowable ordinary boundary, inside the ordinary
/// chain complex.
pub fn intersection_chains(
    cx: &WeightedComplex,
    p: &Perversity,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    let ambient = ordinary_chains(cx, ring)?;
    let selectors = selectors_for(cx, &ambient, |s| is_allowable(cx, s, p))?;
    Ok(preimage_subcomplex(&ambient, &selectors)?)
}

/// Tame chains with tame regular-part boundary, inside the regular chain
/// complex.
pub fn tame_complex(
    cx: &WeightedComplex,
    p: &Perversity,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    let ambient = regular_chains(cx, ring)?;
    let selectors = selectors_for(cx, &ambient, |s| is_tame(cx, s, p))?;
    Ok(preimage_subcomplex(&ambient, &selectors)?)
}

/// Dual of the tame complex; its homology is the tame intersection
/// cohomology.
pub fn tame_cochains(
    cx: &WeightedComplex,
    p: &Perversity,
    ring: Ring,
) -> Result<ChainComplexPresentation, ChainsError> {
    Ok(tame_complex(cx, p, ring)?.dualize())
}

fn selectors_for(
    cx: &WeightedComplex,
    ambient: &ChainComplexPresentation,
    keep: impl Fn(&FilteredSimplex) -> bool,
) -> Result<Vec<Vec<usize>>, ChainsError> {
    let by_label: BTreeMap<String, FilteredSimplex> = cx
        .all_faces()
        .map(|f| Ok((simplex_label(cx, f), cx.join_decomposition(f)?)))
        .collect::<Result<_, ChainsError>>()?;
    Ok((0..ambient.len())
        .map(|k| {
            (0..ambient.dim(k))
                .filter(|&j| keep(&by_label[&ambient.basis[k][j]]))
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_complex::fixtures;

    #[test]
    fn sphere_boundary_complex_is_unconstrained() {
        // No singular strata: the tame complex is the whole simplicial chain
        // complex of the 2-sphere.
        let cx = fixtures::sphere();
        let p = Perversity::top(&cx);
        let tame = tame_complex(&cx, &p, Ring::Z).unwrap();
        let ordinary = ordinary_chains(&cx, Ring::Z).unwrap();
        assert_eq!(tame.ranks(), vec![1, 0, 1]);
        assert_eq!(ordinary.ranks(), vec![1, 0, 1]);
        for k in 0..ordinary.len() {
            assert_eq!(tame.dim(k), ordinary.dim(k));
        }
    }

    #[test]
    fn tame_cone_formula_over_the_circle() {
        let cx = fixtures::cone_circle();
        let apex = cx.singular_strata().next().unwrap().id;
        let p = Perversity::per_stratum(&cx, &[(apex, strata_complex::PValue::Fin(0))]).unwrap();
        let h = tame_complex(&cx, &p, Ring::Q).unwrap();
        h.validate_dd().unwrap();
        assert_eq!(h.ranks(), vec![1, 0, 0]);
    }

    #[test]
    fn duality_swaps_nothing_over_a_field() {
        let cx = fixtures::cone_circle();
        let p = Perversity::zero(&cx);
        let down = tame_complex(&cx, &p, Ring::Q).unwrap();
        let up = tame_cochains(&cx, &p, Ring::Q).unwrap();
        assert_eq!(down.ranks(), up.ranks());
    }

    #[test]
    fn regular_chains_present_the_pair_with_the_singular_part() {
        // Basis: a, b in degree 0 and apex.a, apex.b in degree 1, each edge
        // with 𝔡 = its regular endpoint. The cone is contractible relative
        // to its apex, so everything cancels.
        let cx = fixtures::cone_two_points();
        let reg = regular_chains(&cx, Ring::Z).unwrap();
        reg.validate_dd().unwrap();
        assert_eq!(reg.dim(0), 2);
        assert_eq!(reg.dim(1), 2);
        assert_eq!(reg.ranks(), vec![0, 0]);
    }

    #[test]
    fn fully_regular_part_of_the_cone_is_its_base() {
        let cx = fixtures::cone_circle();
        let base = fully_regular_chains(&cx, Ring::Z).unwrap();
        assert_eq!(base.ranks(), vec![1, 1, 0]);
        let dual = fully_regular_cochains(&cx, Ring::Z).unwrap();
        assert_eq!(dual.ranks(), vec![1, 1, 0]);
    }
}
