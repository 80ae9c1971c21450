//! Homology of small spaces built from facet lists alone, so the results
//! are independent oracles for everything downstream of the matrix engine.

use num_bigint::BigInt;
use std::collections::BTreeSet;
use strata_algebra::{ChainComplexPresentation, Direction, IntMatrix, Ring};

/// Closure of a facet list into a simplicial chain complex with the usual
/// alternating-sign boundary on sorted vertex tuples.
fn from_facets(ring: Ring, facets: &[&[u32]]) -> ChainComplexPresentation {
    let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
    for f in facets {
        let mut sorted = f.to_vec();
        sorted.sort_unstable();
        for mask in 1u32..(1 << sorted.len()) {
            let face: Vec<u32> = sorted
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let d = face.len() - 1;
            while by_dim.len() <= d {
                by_dim.push(BTreeSet::new());
            }
            by_dim[d].insert(face);
        }
    }
    let by_dim: Vec<Vec<Vec<u32>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
    let mut maps = Vec::new();
    for (d, faces) in by_dim.iter().enumerate() {
        if d == 0 {
            maps.push(IntMatrix::zeros(0, faces.len()));
            continue;
        }
        let below = &by_dim[d - 1];
        let mut m = IntMatrix::zeros(below.len(), faces.len());
        for (j, face) in faces.iter().enumerate() {
            for skip in 0..face.len() {
                let sub: Vec<u32> = face
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let i = below.binary_search(&sub).expect("closure is closed");
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                m.set(i, j, BigInt::from(sign));
            }
        }
        maps.push(m);
    }
    let basis = by_dim
        .iter()
        .map(|faces| {
            faces
                .iter()
                .map(|f| f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("."))
                .collect()
        })
        .collect();
    ChainComplexPresentation::new(ring, Direction::Down, basis, maps).unwrap()
}

const RP2: [&[u32]; 10] = [
    &[1, 2, 4],
    &[1, 2, 6],
    &[1, 3, 4],
    &[1, 3, 5],
    &[1, 5, 6],
    &[2, 3, 5],
    &[2, 3, 6],
    &[2, 4, 5],
    &[3, 4, 6],
    &[4, 5, 6],
];

#[test]
fn projective_plane_torsion() {
    let p = from_facets(Ring::Z, &RP2);
    p.validate_dd().unwrap();
    let h = p.all_homology();
    assert_eq!(h[0].free_rank, 1);
    assert!(h[0].torsion.is_empty());
    assert_eq!(h[1].free_rank, 0);
    assert_eq!(h[1].torsion, vec![BigInt::from(2)]);
    assert!(h[2].is_trivial());
    // The torsion representative really has order two: doubling it bounds.
    let rep = &h[1].torsion_representatives[0];
    let doubled: Vec<BigInt> = rep.iter().map(|v| v * 2).collect();
    let boundary = p.map(1).mul_vec(rep);
    assert!(boundary.iter().all(|v| v == &BigInt::from(0)));
    let filled = strata_algebra::snf::solve(p.map(2), &doubled);
    assert!(filled.is_some());
    assert!(strata_algebra::snf::solve(p.map(2), rep).is_none());
}

#[test]
fn projective_plane_field_coefficients() {
    let q = from_facets(Ring::Q, &RP2);
    assert_eq!(q.ranks(), vec![1, 0, 0]);
    let f2 = from_facets(Ring::Zp(2), &RP2);
    assert_eq!(f2.ranks(), vec![1, 1, 1]);
    let f3 = from_facets(Ring::Zp(3), &RP2);
    assert_eq!(f3.ranks(), vec![1, 0, 0]);
}

#[test]
fn sphere_as_tetrahedron_boundary() {
    let facets: Vec<&[u32]> = vec![&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]];
    let p = from_facets(Ring::Z, &facets);
    let h = p.all_homology();
    assert_eq!(h[0].free_rank, 1);
    assert!(h[1].is_trivial());
    assert_eq!(h[2].free_rank, 1);
    assert!(h.iter().all(|g| g.torsion.is_empty()));
    // Cohomology agrees for a sphere.
    let dual = p.dualize();
    assert_eq!(dual.ranks(), vec![1, 0, 1]);
}

#[test]
fn two_disjoint_circles() {
    let facets: Vec<&[u32]> = vec![&[0, 1], &[1, 2], &[0, 2], &[10, 11], &[11, 12], &[10, 12]];
    let p = from_facets(Ring::Z, &facets);
    assert_eq!(p.ranks(), vec![2, 2]);
}
