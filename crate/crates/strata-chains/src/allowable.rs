//! Perverse degree and allowability for filtered simplices.

use strata_complex::{FilteredSimplex, PValue, Perversity, Stratum, WeightedComplex};

/// The perverse degree of σ along a stratum: −∞ when σ misses the stratum,
/// otherwise the dimension of the join of the blocks up to depth n−ℓ, where
/// ℓ is the stratum's codimension (dim ∅ = −∞).
pub fn simplex_perverse_degree(
    cx: &WeightedComplex,
    simplex: &FilteredSimplex,
    stratum: &Stratum,
) -> PValue {
    if !cx.meets(simplex, stratum) {
        return PValue::NegInf;
    }
    let cutoff = simplex.n() - stratum.codim;
    let count = simplex.prefix(cutoff).len() as i64;
    if count == 0 {
        PValue::NegInf
    } else {
        PValue::Fin(count - 1)
    }
}

/// ‖σ‖_S ≤ dim σ − codim S + p̄(S) for every stratum.
pub fn is_allowable(cx: &WeightedComplex, simplex: &FilteredSimplex, p: &Perversity) -> bool {
    cx.strata().iter().all(|s| {
        simplex_perverse_degree(cx, simplex, s)
            <= PValue::Fin(simplex.dim() - s.codim as i64) + p.eval(s)
    })
}

/// Allowable and regular.
pub fn is_tame(cx: &WeightedComplex, simplex: &FilteredSimplex, p: &Perversity) -> bool {
    cx.is_regular_simplex(&simplex.vertices()) && is_allowable(cx, simplex, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use strata_complex::fixtures;

    #[test]
    fn perverse_degrees_in_the_cone_over_a_circle() {
        // apex=0 (weight 0), a=1, b=2, c=3 (weight 2); apex stratum has
        // codimension 2.
        let cx = fixtures::cone_circle();
        let apex = cx.singular_strata().next().unwrap();
        let sx = |verts: &[usize]| cx.join_decomposition(verts).unwrap();

        assert_eq!(simplex_perverse_degree(&cx, &sx(&[0, 2, 3]), apex), PValue::Fin(0));
        assert_eq!(simplex_perverse_degree(&cx, &sx(&[2, 3]), apex), PValue::NegInf);
    }

    #[test]
    fn allowability_matches_the_cone_arithmetic() {
        let cx = fixtures::cone_circle();
        let apex_id = cx.singular_strata().next().unwrap().id;
        let sx = |verts: &[usize]| cx.join_decomposition(verts).unwrap();
        let with_apex = |v: PValue| Perversity::per_stratum(&cx, &[(apex_id, v)]).unwrap();

        // 0 ≤ 2 − 2 + 0 passes; with p̄ = −1 it fails.
        assert!(is_allowable(&cx, &sx(&[0, 2, 3]), &with_apex(PValue::Fin(0))));
        assert!(!is_allowable(&cx, &sx(&[0, 2, 3]), &with_apex(PValue::Fin(-1))));
        // An edge through the apex needs p̄ ≥ 1: 0 ≤ 1 − 2 + p̄.
        assert!(!is_allowable(&cx, &sx(&[0, 2]), &with_apex(PValue::Fin(0))));
        assert!(is_allowable(&cx, &sx(&[0, 2]), &with_apex(PValue::Fin(1))));
        // Fully regular simplices pass under any perversity.
        assert!(is_allowable(&cx, &sx(&[2, 3]), &with_apex(PValue::NegInf)));
        // Tameness additionally demands regularity: the apex vertex is
        // allowable only for large perversities and never tame.
        assert!(is_allowable(&cx, &sx(&[0]), &with_apex(PValue::Fin(2))));
        assert!(!is_tame(&cx, &sx(&[0]), &with_apex(PValue::Fin(2))));
        assert!(is_tame(&cx, &sx(&[0, 2, 3]), &with_apex(PValue::Fin(0))));
    }

    #[test]
    fn allowability_is_monotone_in_the_perversity() {
        let cx = fixtures::fake_s2();
        let ladder: Vec<Perversity> = (-2..=2)
            .map(|v| {
                let pairs: Vec<_> =
                    cx.singular_strata().map(|s| (s.id, PValue::Fin(v))).collect();
                Perversity::per_stratum(&cx, &pairs).unwrap()
            })
            .collect();
        for verts in cx.all_faces() {
            let s = cx.join_decomposition(verts).unwrap();
            for pq in ladder.windows(2) {
                assert!(!is_allowable(&cx, &s, &pq[0]) || is_allowable(&cx, &s, &pq[1]));
            }
        }
    }
}
