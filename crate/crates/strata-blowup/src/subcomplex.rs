//! The blown-up cochain complex as explicit matrices, and the subcomplex of
//! cochains a perversity allows.

use crate::cochain::BlownUpCochain;
use crate::face::{enumerate_all, BlowupFace};
use crate::perverse::WitnessTable;
use crate::BlowupError;
use std::collections::BTreeMap;
use strata_algebra::{
    preimage_subcomplex, ChainComplexPresentation, Direction, IntMatrix, Ring,
};
use strata_complex::{Perversity, Stratum, WeightedComplex};

/// The full blown-up cochain complex with its cell bases kept alongside the
/// matrix presentation (degree k cells index the columns of map k).
pub struct BlowupComplex {
    pub bases: Vec<Vec<BlowupFace>>,
    pub presentation: ChainComplexPresentation,
}

/// Assembles the coboundary matrices over all basis cells.
pub fn blowup_presentation(
    cx: &WeightedComplex,
    ring: Ring,
) -> Result<BlowupComplex, BlowupError> {
    let bases = enumerate_all(cx);
    let index: Vec<BTreeMap<&BlowupFace, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    let mut maps = Vec::new();
    for k in 0..bases.len() {
        let rows = if k + 1 < bases.len() { bases[k + 1].len() } else { 0 };
        let mut m = IntMatrix::zeros(rows, bases[k].len());
        for (j, f) in bases[k].iter().enumerate() {
            let d = BlownUpCochain::basis(ring, f.clone()).differential(cx);
            for (g, v) in d.iter() {
                let i = index[k + 1][g];
                m.set(i, j, v.clone());
            }
        }
        maps.push(m);
    }
    let labels = bases
        .iter()
        .map(|b| b.iter().map(|f| f.to_string()).collect())
        .collect();
    let presentation = ChainComplexPresentation::new(ring, Direction::Up, labels, maps)?;
    Ok(BlowupComplex { bases, presentation })
}

/// Per-degree indices of the cells every singular stratum tolerates. The
/// degree of a cochain along a stratum is the maximum over its support, so
/// the allowable cochains form exactly the span of these cells.
pub fn allowable_selectors(
    cx: &WeightedComplex,
    bases: &[Vec<BlowupFace>],
    p: &Perversity,
) -> Vec<Vec<usize>> {
    let table = WitnessTable::new(cx);
    let strata: Vec<&Stratum> = cx.singular_strata().collect();
    bases
        .iter()
        .map(|bucket| {
            bucket
                .iter()
                .enumerate()
                .filter(|(_, f)| strata.iter().all(|s| table.face_degree(cx, f, s) <= p.eval(s)))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// The cochains that are allowable and have allowable coboundary, presented
/// with inclusion matrices into the full blown-up complex.
pub fn intersection_subcomplex(
    cx: &WeightedComplex,
    ring: Ring,
    p: &Perversity,
) -> Result<ChainComplexPresentation, BlowupError> {
    let ambient = blowup_presentation(cx, ring)?;
    let sel = allowable_selectors(cx, &ambient.bases, p);
    Ok(preimage_subcomplex(&ambient.presentation, &sel)?)
}
