//! Named test spaces and a seeded random-complex generator.

use crate::builders;
use crate::complex::WeightedComplex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn build(n: usize, vertices: &[(&str, usize)], facets: &[&[&str]]) -> WeightedComplex {
    WeightedComplex::new(
        n,
        vertices.iter().map(|(s, w)| (s.to_string(), *w)).collect(),
        facets
            .iter()
            .map(|f| f.iter().map(|s| s.to_string()).collect())
            .collect(),
    )
    .expect("fixture is valid")
}

/// A single point, trivially filtered.
pub fn point() -> WeightedComplex {
    build(0, &[("a", 0)], &[&["a"]])
}

/// A closed interval with both endpoints, trivially filtered.
pub fn interval() -> WeightedComplex {
    build(0, &[("a", 0), ("b", 0)], &[&["a", "b"]])
}

/// The boundary of a triangle, all vertices regular (n = 1).
pub fn circle() -> WeightedComplex {
    build(
        1,
        &[("a", 1), ("b", 1), ("c", 1)],
        &[&["a", "b"], &["a", "c"], &["b", "c"]],
    )
}

/// The boundary of a tetrahedron, all vertices regular (n = 2).
pub fn sphere() -> WeightedComplex {
    build(
        2,
        &[("a", 2), ("b", 2), ("c", 2), ("d", 2)],
        &[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
        ],
    )
}

/// The boundary of a tetrahedron with formal dimension 3: a sphere viewed
/// inside a 3-dimensional filtration with no singular strata.
pub fn sphere_in_dim3() -> WeightedComplex {
    builders::pad_weights(&sphere(), 1)
}

/// The 7-vertex triangulation of the torus, all vertices regular (n = 2).
pub fn torus7() -> WeightedComplex {
    let names: Vec<String> = (0..7).map(|i| format!("t{}", i)).collect();
    let vertices: Vec<(String, usize)> = names.iter().map(|s| (s.clone(), 2)).collect();
    let mut facets = Vec::new();
    for i in 0..7usize {
        facets.push(vec![
            names[i].clone(),
            names[(i + 1) % 7].clone(),
            names[(i + 3) % 7].clone(),
        ]);
        facets.push(vec![
            names[i].clone(),
            names[(i + 2) % 7].clone(),
            names[(i + 3) % 7].clone(),
        ]);
    }
    WeightedComplex::new(2, vertices, facets).expect("torus fixture is valid")
}

/// The 6-vertex triangulation of the real projective plane, all regular.
pub fn projective_plane() -> WeightedComplex {
    let f: [[u32; 3]; 10] = [
        [1, 2, 4],
        [1, 2, 6],
        [1, 3, 4],
        [1, 3, 5],
        [1, 5, 6],
        [2, 3, 5],
        [2, 3, 6],
        [2, 4, 5],
        [3, 4, 6],
        [4, 5, 6],
    ];
    WeightedComplex::new(
        2,
        (1..=6).map(|i| (format!("v{}", i), 2)).collect(),
        f.iter()
            .map(|t| t.iter().map(|v| format!("v{}", v)).collect())
            .collect(),
    )
    .expect("projective plane fixture is valid")
}

/// Cone on two points: the simplest space with a singular vertex.
pub fn cone_two_points() -> WeightedComplex {
    build(1, &[("apex", 0), ("a", 1), ("b", 1)], &[&["apex", "a"], &["apex", "b"]])
}

/// Cone on the circle: a disk with a codimension-2 singular apex.
pub fn cone_circle() -> WeightedComplex {
    builders::cone(&circle())
}

/// Cone on the torus: an isolated codimension-3 singularity.
pub fn cone_torus() -> WeightedComplex {
    builders::cone(&torus7())
}

/// Suspension of the torus: two codimension-3 singular points.
pub fn suspended_torus() -> WeightedComplex {
    builders::suspension(&torus7())
}

/// Cone on the projective plane: torsion appears in the link.
pub fn cone_projective_plane() -> WeightedComplex {
    builders::cone(&projective_plane())
}

/// An octahedral 2-sphere whose two poles are (spuriously) weighted as
/// codimension-2 strata; recoding with φ = (2,2,2) removes the fake strata.
pub fn fake_s2() -> WeightedComplex {
    build(
        2,
        &[("p", 0), ("q", 0), ("a", 2), ("b", 2), ("c", 2), ("d", 2)],
        &[
            &["p", "a", "b"],
            &["p", "b", "c"],
            &["p", "c", "d"],
            &["p", "a", "d"],
            &["q", "a", "b"],
            &["q", "b", "c"],
            &["q", "c", "d"],
            &["q", "a", "d"],
        ],
    )
}

/// Deterministic random weighted complex; facet sizes stay at most 4 so the
/// blown-up bases downstream stay small.
pub fn random_complex(seed: u64, max_vertices: usize, max_formal_dim: usize) -> WeightedComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(0..=max_formal_dim);
    let v = rng.random_range(1..=max_vertices.max(1));
    let mut vertices: Vec<(String, usize)> = (0..v)
        .map(|i| (format!("r{}", i), rng.random_range(0..=n)))
        .collect();
    vertices.last_mut().unwrap().1 = n;
    let facet_count = rng.random_range(1..=(2 * v).min(8));
    let mut facets: Vec<Vec<String>> = Vec::new();
    for _ in 0..facet_count {
        let size = rng.random_range(1..=v.min(4));
        let picks = rand::seq::index::sample(&mut rng, v, size);
        facets.push(picks.iter().map(|i| format!("r{}", i)).collect());
    }
    // Guarantee a regular simplex.
    facets.push(vec![format!("r{}", v - 1)]);
    WeightedComplex::new(n, vertices, facets).expect("random complex construction is total")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_counts() {
        let t = torus7();
        assert_eq!(t.faces_of_dim(0).count(), 7);
        assert_eq!(t.faces_of_dim(1).count(), 21);
        assert_eq!(t.faces_of_dim(2).count(), 14);
        assert_eq!(t.strata().len(), 1); // connected, all regular
    }

    #[test]
    fn projective_plane_counts() {
        let p = projective_plane();
        assert_eq!(p.faces_of_dim(0).count(), 6);
        assert_eq!(p.faces_of_dim(1).count(), 15);
        assert_eq!(p.faces_of_dim(2).count(), 10);
    }

    #[test]
    fn sphere_strata_trivial() {
        let s = sphere_in_dim3();
        assert_eq!(s.formal_dimension(), 3);
        assert_eq!(s.strata().len(), 1);
        assert!(!s.strata()[0].is_singular);
    }

    #[test]
    fn fake_sphere_has_two_point_strata() {
        let f = fake_s2();
        let singular: Vec<_> = f.singular_strata().collect();
        assert_eq!(singular.len(), 2);
        assert!(singular.iter().all(|s| s.codim == 2 && s.vertex_set.len() == 1));
        assert!(!f.has_codim_one_stratum());
    }

    #[test]
    fn random_complexes_are_reproducible() {
        for seed in 0..50 {
            let a = random_complex(seed, 8, 3);
            let b = random_complex(seed, 8, 3);
            assert_eq!(a, b);
            assert!(a.formal_dimension() <= 3);
            assert!(a.vertex_count() <= 8);
        }
    }
}
