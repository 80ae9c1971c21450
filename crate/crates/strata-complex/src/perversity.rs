//! Perversities: stratum-indexed bounds with saturating ±∞ arithmetic.

use crate::complex::WeightedComplex;
use crate::strata::Stratum;
use crate::ComplexError;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

/// An integer extended by ±∞. Addition saturates with −∞ dominating, so a
/// stratum excluded by one bound stays excluded in sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PValue {
    NegInf,
    Fin(i64),
    PosInf,
}

impl PValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            PValue::Fin(v) => Some(v),
            _ => None,
        }
    }
}

impl Add for PValue {
    type Output = PValue;
    fn add(self, rhs: PValue) -> PValue {
        use PValue::*;
        match (self, rhs) {
            (NegInf, _) | (_, NegInf) => NegInf,
            (PosInf, _) | (_, PosInf) => PosInf,
            (Fin(a), Fin(b)) => Fin(a + b),
        }
    }
}

impl Sub for PValue {
    type Output = PValue;
    fn sub(self, rhs: PValue) -> PValue {
        use PValue::*;
        match (self, rhs) {
            (NegInf, PosInf) | (PosInf, PosInf) | (NegInf, NegInf) | (PosInf, NegInf) => {
                panic!("indeterminate difference of infinities")
            }
            (NegInf, _) | (_, PosInf) => NegInf,
            (PosInf, _) | (_, NegInf) => PosInf,
            (Fin(a), Fin(b)) => Fin(a - b),
        }
    }
}

impl fmt::Display for PValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PValue::NegInf => write!(f, "-inf"),
            PValue::PosInf => write!(f, "inf"),
            PValue::Fin(v) => write!(f, "{}", v),
        }
    }
}

impl FromStr for PValue {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "-inf" => Ok(PValue::NegInf),
            "inf" | "+inf" => Ok(PValue::PosInf),
            _ => s.parse::<i64>().map(PValue::Fin).map_err(|_| ()),
        }
    }
}

/// A perversity request as written in an input document, before it is
/// resolved against a concrete stratum list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerversitySpec {
    /// Values indexed by codimension 0..=n.
    Gm(Vec<i64>),
    /// Explicit values on singular strata by stratum id; unnamed singular
    /// strata default to 0.
    PerStratum(Vec<(usize, PValue)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    /// Codimension-indexed, growth-constrained, classical mode.
    Gm(Vec<i64>),
    /// One value per stratum id.
    PerStratum(Vec<PValue>),
}

/// A perversity on a fixed complex: zero on regular strata, arbitrary
/// extended integers on singular ones (per-stratum mode), or the classical
/// codimension-indexed form (GM mode).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perversity {
    kind: Kind,
}

impl Perversity {
    /// The zero perversity.
    pub fn zero(cx: &WeightedComplex) -> Perversity {
        Perversity { kind: Kind::Gm(vec![0; cx.formal_dimension() + 1]) }
    }

    /// The top perversity t̄(S) = codim S − 2.
    pub fn top(cx: &WeightedComplex) -> Perversity {
        let n = cx.formal_dimension();
        let values = (0..=n).map(|c| (c as i64 - 2).max(0)).collect();
        Perversity { kind: Kind::Gm(values) }
    }

    /// Classical perversity by codimension; requires 0 at codimensions ≤ 2
    /// and unit growth.
    pub fn gm(cx: &WeightedComplex, values: &[i64]) -> Result<Perversity, ComplexError> {
        let n = cx.formal_dimension();
        if values.len() != n + 1 {
            return Err(ComplexError::BadPerversity(format!(
                "gm perversity needs {} values, got {}",
                n + 1,
                values.len()
            )));
        }
        for (c, &v) in values.iter().enumerate().take(3.min(values.len())) {
            if v != 0 {
                return Err(ComplexError::BadPerversity(format!(
                    "gm perversity must vanish at codimension {}",
                    c
                )));
            }
        }
        for c in 2..n {
            let step = values[c + 1] - values[c];
            if step < 0 || step > 1 {
                return Err(ComplexError::BadPerversity(format!(
                    "gm growth violated between codimensions {} and {}",
                    c,
                    c + 1
                )));
            }
        }
        Ok(Perversity { kind: Kind::Gm(values.to_vec()) })
    }

    /// Arbitrary values on singular strata; regular strata stay pinned at 0.
    pub fn per_stratum(
        cx: &WeightedComplex,
        pairs: &[(usize, PValue)],
    ) -> Result<Perversity, ComplexError> {
        let mut values = vec![PValue::Fin(0); cx.strata().len()];
        for &(id, v) in pairs {
            let stratum = cx
                .strata()
                .get(id)
                .ok_or(ComplexError::UnknownStratum(id))?;
            if !stratum.is_singular && v != PValue::Fin(0) {
                return Err(ComplexError::BadPerversity(format!(
                    "stratum {} is regular and must keep perversity 0",
                    id
                )));
            }
            values[id] = v;
        }
        Ok(Perversity { kind: Kind::PerStratum(values) })
    }

    pub fn from_spec(cx: &WeightedComplex, spec: &PerversitySpec) -> Result<Perversity, ComplexError> {
        match spec {
            PerversitySpec::Gm(values) => Perversity::gm(cx, values),
            PerversitySpec::PerStratum(pairs) => Perversity::per_stratum(cx, pairs),
        }
    }

    pub fn is_gm(&self) -> bool {
        matches!(self.kind, Kind::Gm(_))
    }

    pub fn eval(&self, s: &Stratum) -> PValue {
        if !s.is_singular {
            return PValue::Fin(0);
        }
        match &self.kind {
            Kind::Gm(values) => PValue::Fin(values[s.codim]),
            Kind::PerStratum(values) => values[s.id],
        }
    }

    /// The complementary perversity t̄ − p̄ on the same complex.
    pub fn dual(&self, cx: &WeightedComplex) -> Perversity {
        let values = cx
            .strata()
            .iter()
            .map(|s| {
                if s.is_singular {
                    PValue::Fin(s.codim as i64 - 2) - self.eval(s)
                } else {
                    PValue::Fin(0)
                }
            })
            .collect();
        Perversity { kind: Kind::PerStratum(values) }
    }

    /// Pointwise saturating sum.
    pub fn sum(&self, other: &Perversity, cx: &WeightedComplex) -> Perversity {
        let values = cx
            .strata()
            .iter()
            .map(|s| {
                if s.is_singular {
                    self.eval(s) + other.eval(s)
                } else {
                    PValue::Fin(0)
                }
            })
            .collect();
        Perversity { kind: Kind::PerStratum(values) }
    }

    /// Transports a perversity on a coarsened weighting back to the fine
    /// one: a fine stratum takes the value of the coarse stratum containing
    /// it. Both complexes must share the underlying simplices.
    pub fn pullback(
        &self,
        coarse: &WeightedComplex,
        fine: &WeightedComplex,
    ) -> Result<Perversity, ComplexError> {
        if !coarse.same_underlying(fine) {
            return Err(ComplexError::BadPerversity(
                "perversity pullback needs complexes with the same simplices".into(),
            ));
        }
        let mut values = Vec::new();
        for s in fine.strata() {
            if !s.is_singular {
                values.push(PValue::Fin(0));
                continue;
            }
            let member = s.members.iter().next().expect("stratum nonempty");
            let target = coarse
                .stratum_of(member)
                .expect("same simplices, so the member has a coarse stratum");
            values.push(self.eval(target));
        }
        Ok(Perversity { kind: Kind::PerStratum(values) })
    }

    pub fn describe(&self, cx: &WeightedComplex) -> String {
        cx.strata()
            .iter()
            .map(|s| format!("S{}(codim {}) -> {}", s.id, s.codim, self.eval(s)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::load_complex;

    fn cone_like() -> WeightedComplex {
        // Apex of weight 0 over a weight-2 triangle boundary: n = 2.
        load_complex(
            "dim 2\nvertex p 0\nvertex a 2\nvertex b 2\nvertex c 2\n\
             simplex p a b\nsimplex p b c\nsimplex p a c\n",
        )
        .unwrap()
    }

    #[test]
    fn saturating_arithmetic() {
        assert_eq!(PValue::NegInf + PValue::Fin(5), PValue::NegInf);
        assert_eq!(PValue::Fin(2) + PValue::Fin(3), PValue::Fin(5));
        assert_eq!(PValue::PosInf + PValue::Fin(1), PValue::PosInf);
        assert_eq!(PValue::NegInf + PValue::PosInf, PValue::NegInf);
        assert_eq!(PValue::Fin(0) - PValue::NegInf, PValue::PosInf);
        assert_eq!(PValue::Fin(0) - PValue::PosInf, PValue::NegInf);
    }

    #[test]
    fn top_and_dual() {
        let cx = cone_like();
        let apex = cx
            .strata()
            .iter()
            .find(|s| s.is_singular)
            .expect("cone has a singular stratum");
        assert_eq!(apex.codim, 2);
        let top = Perversity::top(&cx);
        assert_eq!(top.eval(apex), PValue::Fin(0));
        let zero = Perversity::zero(&cx);
        assert_eq!(zero.dual(&cx).eval(apex), PValue::Fin(0));
        // dual(t̄) = 0̄ everywhere.
        let dual_top = top.dual(&cx);
        for s in cx.strata() {
            assert_eq!(dual_top.eval(s), PValue::Fin(0));
        }
        // Dualizing an infinite value flips the sign of infinity.
        let inf = Perversity::per_stratum(&cx, &[(apex.id, PValue::NegInf)]).unwrap();
        assert_eq!(inf.dual(&cx).eval(apex), PValue::PosInf);
    }

    #[test]
    fn gm_validation() {
        let cx = cone_like();
        assert!(Perversity::gm(&cx, &[0, 0, 0]).is_ok());
        assert!(Perversity::gm(&cx, &[0, 0, 1]).is_err()); // nonzero at codim 2
        assert!(Perversity::gm(&cx, &[0, 0]).is_err()); // wrong length
        let sphere = load_complex(
            "dim 3\nvertex p 0\nvertex a 3\nvertex b 3\nvertex c 3\nvertex d 3\n\
             simplex p a b c\nsimplex p a b d\nsimplex p a c d\nsimplex p b c d\n",
        )
        .unwrap();
        assert!(Perversity::gm(&sphere, &[0, 0, 0, 1]).is_ok());
        assert!(Perversity::gm(&sphere, &[0, 0, 0, 2]).is_err()); // growth > 1
    }

    #[test]
    fn regular_strata_stay_zero() {
        let cx = cone_like();
        let regular = cx.strata().iter().find(|s| !s.is_singular).unwrap();
        let p = Perversity::per_stratum(&cx, &[]).unwrap();
        assert_eq!(p.eval(regular), PValue::Fin(0));
        assert!(Perversity::per_stratum(&cx, &[(regular.id, PValue::Fin(1))]).is_err());
    }
}
