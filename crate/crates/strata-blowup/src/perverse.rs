//! Perverse degrees: how far a blown-up cochain leans over each singular
//! stratum, and the allowability test against a perversity.

use crate::cochain::BlownUpCochain;
use crate::face::BlowupFace;
use strata_complex::{FilteredSimplex, PValue, Perversity, Stratum, WeightedComplex};

/// The weight-`l` degree of a single cell, `1 <= l <= n`: −∞ when the cone
/// factor in position n−l is closed off, otherwise the dimension of the
/// factors strictly above that position.
pub fn local_degree(face: &BlowupFace, l: usize) -> PValue {
    assert!(l >= 1 && l <= face.n(), "filtration level out of range");
    let i = face.n() - l;
    if face.eps(i) == 1 {
        PValue::NegInf
    } else {
        PValue::Fin(face.sum_gt(i))
    }
}

/// The maximal regular simplices, paired with their block decompositions so
/// stratum membership can be tested repeatedly without re-deriving them.
pub(crate) struct WitnessTable {
    deltas: Vec<(Vec<usize>, FilteredSimplex)>,
}

impl WitnessTable {
    pub(crate) fn new(cx: &WeightedComplex) -> Self {
        let deltas = cx
            .maximal_regular_simplices()
            .into_iter()
            .map(|verts| {
                let fs = cx.join_decomposition(&verts).expect("maximal simplex");
                (verts, fs)
            })
            .collect();
        WitnessTable { deltas }
    }

    /// Is there a maximal regular simplex containing `join` and touching the
    /// stratum? Only such simplices carry the cell near the stratum.
    pub(crate) fn witnessed(
        &self,
        cx: &WeightedComplex,
        join: &[usize],
        stratum: &Stratum,
    ) -> bool {
        self.deltas.iter().any(|(verts, fs)| {
            join.iter().all(|v| verts.binary_search(v).is_ok()) && cx.meets(fs, stratum)
        })
    }

    pub(crate) fn face_degree(
        &self,
        cx: &WeightedComplex,
        face: &BlowupFace,
        stratum: &Stratum,
    ) -> PValue {
        if !stratum.is_singular {
            return PValue::Fin(0);
        }
        if !self.witnessed(cx, &face.join(), stratum) {
            return PValue::NegInf;
        }
        local_degree(face, stratum.codim)
    }
}

/// The degree of one cell along one stratum: its local degree when the cell
/// is witnessed near the stratum, −∞ otherwise.
pub fn face_perverse_degree(
    cx: &WeightedComplex,
    face: &BlowupFace,
    stratum: &Stratum,
) -> PValue {
    WitnessTable::new(cx).face_degree(cx, face, stratum)
}

/// The degree of a cochain along one stratum: −∞ for the zero cochain, 0
/// along regular strata, and otherwise the maximum over the support.
pub fn cochain_perverse_degree(
    cx: &WeightedComplex,
    cochain: &BlownUpCochain,
    stratum: &Stratum,
) -> PValue {
    if cochain.is_zero() {
        return PValue::NegInf;
    }
    if !stratum.is_singular {
        return PValue::Fin(0);
    }
    let table = WitnessTable::new(cx);
    cochain
        .support()
        .map(|f| table.face_degree(cx, f, stratum))
        .max()
        .unwrap_or(PValue::NegInf)
}

/// A cochain is allowable when its degree along every singular stratum stays
/// within the perversity.
pub fn is_allowable(cx: &WeightedComplex, cochain: &BlownUpCochain, p: &Perversity) -> bool {
    cx.singular_strata()
        .all(|s| cochain_perverse_degree(cx, cochain, s) <= p.eval(s))
}
