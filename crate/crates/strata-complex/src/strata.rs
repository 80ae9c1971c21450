//! Strata as connected components of the filtration differences.

use petgraph::unionfind::UnionFind;
use std::collections::{BTreeMap, BTreeSet};

/// One stratum: a connected component of the open part |Lᵢ| ∖ |Lᵢ₋₁| of the
/// filtration, realized combinatorially as a set of member simplices whose
/// maximal vertex weight is exactly i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    /// Position in the owning complex's stratum list.
    pub id: usize,
    pub filtration_index: usize,
    pub codim: usize,
    pub is_singular: bool,
    pub vertex_set: Vec<usize>,
    pub members: BTreeSet<Vec<usize>>,
}

/// Computes the strata of a closure (faces grouped by dimension). Two
/// simplices of maximal weight i are in the same stratum when they are
/// chained through codimension-one faces that keep the maximal weight, which
/// matches path-connectivity of the open filtration difference.
pub fn compute_strata(
    n: usize,
    weights: &[usize],
    faces: &[BTreeSet<Vec<usize>>],
) -> Vec<Stratum> {
    let all: Vec<Vec<usize>> = faces.iter().flat_map(|s| s.iter().cloned()).collect();
    let index_of: BTreeMap<&[usize], usize> =
        all.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut uf: UnionFind<usize> = UnionFind::new(all.len());
    for (si, s) in all.iter().enumerate() {
        if s.len() < 2 {
            continue;
        }
        let mw = weights[*s.last().unwrap()];
        for skip in 0..s.len() {
            let face: Vec<usize> = s
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &v)| v)
                .collect();
            if weights[*face.last().unwrap()] == mw {
                uf.union(si, index_of[face.as_slice()]);
            }
        }
    }
    let mut components: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for (si, s) in all.iter().enumerate() {
        components.entry(uf.find(si)).or_default().insert(s.clone());
    }
    let mut strata: Vec<Stratum> = components
        .into_values()
        .map(|members| {
            let first = members.iter().next().expect("component is nonempty");
            let filtration_index = weights[*first.last().unwrap()];
            let vertex_set: BTreeSet<usize> = members.iter().flatten().copied().collect();
            Stratum {
                id: 0,
                filtration_index,
                codim: n - filtration_index,
                is_singular: filtration_index < n,
                vertex_set: vertex_set.into_iter().collect(),
                members,
            }
        })
        .collect();
    strata.sort_by(|a, b| {
        (a.filtration_index, a.members.iter().next())
            .cmp(&(b.filtration_index, b.members.iter().next()))
    });
    for (i, s) in strata.iter_mut().enumerate() {
        s.id = i;
    }
    strata
}
