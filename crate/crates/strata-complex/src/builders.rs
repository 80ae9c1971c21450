//! Constructions producing new weighted complexes from old ones.

use crate::complex::WeightedComplex;
use crate::ComplexError;

fn fresh_name(taken: &[String], base: &str) -> String {
    if !taken.iter().any(|t| t == base) {
        return base.to_string();
    }
    (0..)
        .map(|i| format!("{}{}", base, i))
        .find(|c| !taken.iter().any(|t| t == c))
        .unwrap()
}

fn vertex_list(cx: &WeightedComplex, shift: usize) -> Vec<(String, usize)> {
    (0..cx.vertex_count())
        .map(|v| (cx.vertex_name(v).to_string(), cx.vertex_weight(v) + shift))
        .collect()
}

fn facet_names(cx: &WeightedComplex) -> Vec<Vec<String>> {
    cx.facets()
        .iter()
        .map(|f| f.iter().map(|&v| cx.vertex_name(v).to_string()).collect())
        .collect()
}

/// Cone: one new apex of weight 0; all existing weights shift up by one, so
/// the filtration of the cone is the coned filtration of the base.
pub fn cone(cx: &WeightedComplex) -> WeightedComplex {
    let apex = fresh_name(cx.vertex_names(), "apex");
    let mut vertices = vec![(apex.clone(), 0)];
    vertices.extend(vertex_list(cx, 1));
    let facets = facet_names(cx)
        .into_iter()
        .map(|mut f| {
            f.insert(0, apex.clone());
            f
        })
        .collect();
    WeightedComplex::new(cx.formal_dimension() + 1, vertices, facets)
        .expect("cone of a valid complex is valid")
}

/// Suspension: two new apexes of weight 0, base weights shifted up by one.
pub fn suspension(cx: &WeightedComplex) -> WeightedComplex {
    let north = fresh_name(cx.vertex_names(), "north");
    let mut taken = cx.vertex_names().to_vec();
    taken.push(north.clone());
    let south = fresh_name(&taken, "south");
    let mut vertices = vec![(north.clone(), 0), (south.clone(), 0)];
    vertices.extend(vertex_list(cx, 1));
    let mut facets = Vec::new();
    for f in facet_names(cx) {
        let mut top = f.clone();
        top.insert(0, north.clone());
        facets.push(top);
        let mut bottom = f;
        bottom.insert(0, south.clone());
        facets.push(bottom);
    }
    WeightedComplex::new(cx.formal_dimension() + 1, vertices, facets)
        .expect("suspension of a valid complex is valid")
}

/// Join: every simplex of `a` joined to every simplex of `b`; the weight
/// ranges concatenate, with `b`'s weights shifted past `a`'s.
pub fn join(a: &WeightedComplex, b: &WeightedComplex) -> WeightedComplex {
    let shift = a.formal_dimension() + 1;
    let mut b_names: Vec<String> = b.vertex_names().to_vec();
    while b_names.iter().any(|nb| a.vertex_names().iter().any(|na| na == nb)) {
        for name in &mut b_names {
            name.push('~');
        }
    }
    let mut vertices = vertex_list(a, 0);
    vertices.extend(
        (0..b.vertex_count()).map(|v| (b_names[v].clone(), b.vertex_weight(v) + shift)),
    );
    let mut facets = Vec::new();
    for fa in a.facets() {
        for fb in b.facets() {
            let mut f: Vec<String> =
                fa.iter().map(|&v| a.vertex_name(v).to_string()).collect();
            f.extend(fb.iter().map(|&v| b_names[v].clone()));
            facets.push(f);
        }
    }
    WeightedComplex::new(
        a.formal_dimension() + b.formal_dimension() + 1,
        vertices,
        facets,
    )
    .expect("join of valid complexes is valid")
}

/// Prism: the cylinder over the complex, triangulated facet by facet with
/// the staircase rule; both copies of a vertex keep its weight.
pub fn prism(cx: &WeightedComplex) -> WeightedComplex {
    let bottom = |v: usize| format!("{}#b", cx.vertex_name(v));
    let top = |v: usize| format!("{}#t", cx.vertex_name(v));
    let mut vertices = Vec::new();
    for v in 0..cx.vertex_count() {
        vertices.push((bottom(v), cx.vertex_weight(v)));
        vertices.push((top(v), cx.vertex_weight(v)));
    }
    let mut facets = Vec::new();
    for f in cx.facets() {
        for pivot in 0..f.len() {
            let mut names: Vec<String> = f[..=pivot].iter().map(|&v| bottom(v)).collect();
            names.extend(f[pivot..].iter().map(|&v| top(v)));
            facets.push(names);
        }
    }
    WeightedComplex::new(cx.formal_dimension(), vertices, facets)
        .expect("prism of a valid complex is valid")
}

/// Shifts every weight and the formal dimension up by `m`, leaving the
/// simplices untouched.
pub fn pad_weights(cx: &WeightedComplex, m: usize) -> WeightedComplex {
    WeightedComplex::new(cx.formal_dimension() + m, vertex_list(cx, m), facet_names(cx))
        .expect("padding keeps the complex valid")
}

/// A weight recoding must be monotone with unit increments so that the
/// identity map is stratified in both directions allowed for comparisons.
pub fn validate_recoding(n: usize, phi: &[usize]) -> Result<(), ComplexError> {
    if phi.len() != n + 1 {
        return Err(ComplexError::BadRecoding(format!(
            "recoding needs {} entries, got {}",
            n + 1,
            phi.len()
        )));
    }
    for i in 0..n {
        if phi[i + 1] < phi[i] {
            return Err(ComplexError::BadRecoding(format!(
                "recoding decreases between {} and {}",
                i,
                i + 1
            )));
        }
        if phi[i + 1] > phi[i] + 1 {
            return Err(ComplexError::BadRecoding(format!(
                "recoding jumps by more than one between {} and {}",
                i,
                i + 1
            )));
        }
    }
    Ok(())
}

/// Applies a valid weight recoding φ; the new formal dimension is φ(n).
pub fn recode_weights(cx: &WeightedComplex, phi: &[usize]) -> Result<WeightedComplex, ComplexError> {
    let n = cx.formal_dimension();
    validate_recoding(n, phi)?;
    let vertices = (0..cx.vertex_count())
        .map(|v| (cx.vertex_name(v).to_string(), phi[cx.vertex_weight(v)]))
        .collect();
    WeightedComplex::new(phi[n], vertices, facet_names(cx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::load_complex;
    use crate::fixtures;

    #[test]
    fn cone_shifts_weights() {
        let circle = fixtures::circle();
        let c = cone(&circle);
        assert_eq!(c.formal_dimension(), 2);
        assert_eq!(c.vertex_weight(0), 0); // apex is the smallest id
        assert!((1..c.vertex_count()).all(|v| c.vertex_weight(v) == 2));
        let strata = c.strata();
        assert_eq!(strata.iter().filter(|s| s.is_singular).count(), 1);
        assert_eq!(strata.iter().find(|s| s.is_singular).unwrap().codim, 2);
        assert_eq!(strata.iter().filter(|s| !s.is_singular).count(), 1);
    }

    #[test]
    fn suspension_of_point_is_interval() {
        let p = load_complex("dim 0\nvertex a 0\nsimplex a\n").unwrap();
        let s = suspension(&p);
        assert_eq!(s.formal_dimension(), 1);
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.facets().len(), 2);
        let zero_weights = (0..3).filter(|&v| s.vertex_weight(v) == 0).count();
        assert_eq!(zero_weights, 2);
    }

    #[test]
    fn suspension_has_two_singular_points() {
        let s = suspension(&fixtures::torus7());
        assert_eq!(s.formal_dimension(), 3);
        let singular: Vec<_> = s.singular_strata().collect();
        assert_eq!(singular.len(), 2);
        assert!(singular.iter().all(|st| st.codim == 3 && st.vertex_set.len() == 1));
    }

    #[test]
    fn join_concatenates_weight_ranges() {
        let a = load_complex("dim 0\nvertex a 0\nsimplex a\n").unwrap();
        let b = load_complex("dim 0\nvertex a 0\nvertex b 0\nsimplex a\nsimplex b\n").unwrap();
        let j = join(&a, &b);
        assert_eq!(j.formal_dimension(), 1);
        assert_eq!(j.vertex_count(), 3);
        assert_eq!(j.facets().len(), 2);
        // Renaming resolved the collision between the two `a`s.
        assert!(j.vertex_id("a").is_some());
        assert!(j.vertex_id("a~").is_some());
    }

    #[test]
    fn prism_doubles_and_keeps_euler_characteristic_zero_on_circle() {
        let p = prism(&fixtures::circle());
        assert_eq!(p.vertex_count(), 6);
        let v = p.faces_of_dim(0).count() as i64;
        let e = p.faces_of_dim(1).count() as i64;
        let f = p.faces_of_dim(2).count() as i64;
        assert_eq!(v - e + f, 0); // annulus
        assert_eq!(p.formal_dimension(), fixtures::circle().formal_dimension());
    }

    #[test]
    fn prism_of_interval_is_square() {
        let i = load_complex("dim 0\nvertex a 0\nvertex b 0\nsimplex a b\n").unwrap();
        let p = prism(&i);
        assert_eq!(p.faces_of_dim(2).count(), 2);
        assert_eq!(p.faces_of_dim(1).count(), 5);
        assert_eq!(p.faces_of_dim(0).count(), 4);
    }

    #[test]
    fn recoding_validation() {
        assert!(validate_recoding(2, &[0, 1, 2]).is_ok());
        assert!(validate_recoding(2, &[2, 2, 2]).is_ok());
        assert!(validate_recoding(2, &[0, 0, 1]).is_ok());
        assert!(validate_recoding(1, &[0, 2]).is_err()); // jump by 2
        assert!(validate_recoding(1, &[1, 0]).is_err()); // decreasing
        assert!(validate_recoding(2, &[0, 1]).is_err()); // wrong length
    }

    #[test]
    fn recode_collapses_fake_strata() {
        let fake = fixtures::fake_s2();
        assert_eq!(fake.singular_strata().count(), 2);
        let plain = recode_weights(&fake, &[2, 2, 2]).unwrap();
        assert_eq!(plain.formal_dimension(), 2);
        assert_eq!(plain.singular_strata().count(), 0);
        assert!(plain.same_underlying(&fake));
    }

    #[test]
    fn pad_is_a_recoding_special_case() {
        let t = fixtures::torus7();
        let padded = pad_weights(&t, 1);
        assert_eq!(padded.formal_dimension(), 3);
        let via_recode = recode_weights(&t, &[1, 2, 3]).unwrap();
        assert_eq!(padded, via_recode);
    }
}
