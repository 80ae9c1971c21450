//! Structural invariants checked across seeded random complexes.

use std::collections::BTreeMap;
use strata_complex::{builders, fixtures, FilteredSimplex, Perversity, WeightedComplex};

fn sample_complexes() -> Vec<WeightedComplex> {
    let mut out: Vec<WeightedComplex> = (0..60).map(|s| fixtures::random_complex(s, 8, 3)).collect();
    out.push(fixtures::cone_circle());
    out.push(fixtures::suspended_torus());
    out.push(fixtures::fake_s2());
    out.push(fixtures::cone_two_points());
    out
}

#[test]
fn boundary_squares_to_zero_everywhere() {
    for cx in sample_complexes() {
        for face in cx.all_faces() {
            let s = cx.join_decomposition(face).unwrap();
            let mut acc: BTreeMap<FilteredSimplex, i64> = BTreeMap::new();
            for (c1, f1) in cx.boundary(&s) {
                for (c2, f2) in cx.boundary(&f1) {
                    *acc.entry(f2).or_insert(0) += c1 * c2;
                }
            }
            assert!(acc.values().all(|&v| v == 0), "dd != 0 at {}", s);
        }
    }
}

#[test]
fn strata_partition_the_open_simplices() {
    for cx in sample_complexes() {
        let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for stratum in cx.strata() {
            for member in &stratum.members {
                assert!(
                    seen.insert(member.clone(), stratum.id).is_none(),
                    "simplex in two strata"
                );
                assert_eq!(cx.max_weight(member), stratum.filtration_index);
            }
        }
        for face in cx.all_faces() {
            assert!(seen.contains_key(face), "simplex in no stratum");
            assert_eq!(seen[face], cx.stratum_of(face).unwrap().id);
        }
    }
}

#[test]
fn meets_implies_nonempty_block() {
    for cx in sample_complexes() {
        for face in cx.all_faces() {
            let s = cx.join_decomposition(face).unwrap();
            for stratum in cx.strata() {
                if cx.meets(&s, stratum) {
                    assert!(!s.block(stratum.filtration_index).is_empty());
                }
            }
            // A simplex always meets the stratum of its own open cell.
            let own = cx.stratum_of(face).unwrap();
            assert!(cx.meets(&s, own));
        }
    }
}

#[test]
fn padding_shifts_strata_but_not_members() {
    for cx in sample_complexes() {
        let padded = builders::pad_weights(&cx, 2);
        assert_eq!(padded.strata().len(), cx.strata().len());
        for (a, b) in cx.strata().iter().zip(padded.strata()) {
            assert_eq!(a.members, b.members);
            assert_eq!(a.codim, b.codim);
            assert_eq!(b.filtration_index, a.filtration_index + 2);
        }
    }
}

#[test]
fn perversity_sum_and_dual_are_involutive_where_finite() {
    for cx in sample_complexes() {
        let zero = Perversity::zero(&cx);
        let top = Perversity::top(&cx);
        for s in cx.strata() {
            // dual is an involution on finite values: t̄ − (t̄ − p̄) = p̄.
            let d = top.dual(&cx).dual(&cx);
            assert_eq!(d.eval(s), top.eval(s));
            assert_eq!(zero.sum(&top, &cx).eval(s), top.eval(s));
        }
    }
}

#[test]
fn cone_adds_one_singular_point_stratum() {
    for cx in sample_complexes().into_iter().take(20) {
        let c = builders::cone(&cx);
        let apex_strata: Vec<_> = c
            .strata()
            .iter()
            .filter(|s| s.filtration_index == 0 && s.vertex_set == vec![0])
            .collect();
        assert_eq!(apex_strata.len(), 1);
        assert_eq!(apex_strata[0].codim, c.formal_dimension());
        // Away from the apex the strata match the base's.
        assert_eq!(
            c.strata().len(),
            cx.strata().len() + 1,
            "cone alters stratum count by exactly the apex"
        );
    }
}
