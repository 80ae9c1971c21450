//! Graded bases with differential matrices, and their homology.

use crate::matrix::IntMatrix;
use crate::modp::{validate_prime, ModMatrix};
use crate::snf::{self, smith_normal_form};
use crate::AlgebraError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient ring of a computation. ℤ and ℚ share integer matrices (every
/// basis this crate produces is saturated, so integer kernels present the
/// rational ones); ℤ/p uses modular elimination.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ring {
    Z,
    Q,
    Zp(u64),
}

impl Ring {
    pub fn parse(spec: &str) -> Result<Ring, AlgebraError> {
        match spec {
            "z" | "Z" => Ok(Ring::Z),
            "q" | "Q" => Ok(Ring::Q),
            _ => {
                let p = spec
                    .strip_prefix("zp:")
                    .or_else(|| spec.strip_prefix("Zp:"))
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| AlgebraError::RingSpec(spec.to_string()))?;
                validate_prime(p)?;
                Ok(Ring::Zp(p))
            }
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Z)
    }

    /// Canonical form of a coefficient: entries in `0..p` for ℤ/p.
    pub fn reduce(&self, v: &BigInt) -> BigInt {
        match self {
            Ring::Z | Ring::Q => v.clone(),
            Ring::Zp(p) => {
                let m = BigInt::from(*p);
                let mut r = v % &m;
                if r.is_negative() {
                    r += &m;
                }
                r
            }
        }
    }

    fn matrix_is_zero(&self, m: &IntMatrix) -> bool {
        match self {
            Ring::Z | Ring::Q => m.is_zero(),
            Ring::Zp(p) => m.mod_reduced(*p).is_zero(),
        }
    }

    pub fn matrices_equal(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        match self {
            Ring::Z | Ring::Q => a == b,
            Ring::Zp(p) => a.mod_reduced(*p) == b.mod_reduced(*p),
        }
    }

    pub fn matrix_rank(&self, m: &IntMatrix) -> usize {
        match self {
            Ring::Z | Ring::Q => snf::integer_rank(m),
            Ring::Zp(p) => ModMatrix::from_int(m, *p).rank(),
        }
    }

    fn kernel_basis(&self, m: &IntMatrix) -> IntMatrix {
        match self {
            Ring::Z | Ring::Q => snf::kernel_basis(m),
            Ring::Zp(p) => ModMatrix::from_int(m, *p).kernel_basis(),
        }
    }

    pub fn solve_matrix(&self, a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
        match self {
            Ring::Z | Ring::Q => snf::solve_matrix(a, b),
            Ring::Zp(p) => ModMatrix::from_int(a, *p).solve_matrix(b),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z => write!(f, "z"),
            Ring::Q => write!(f, "q"),
            Ring::Zp(p) => write!(f, "zp:{}", p),
        }
    }
}

/// Whether the graded maps lower degree (chain complex) or raise it
/// (cochain complex).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Down,
    Up,
}

/// A homology group presented by invariant factors plus representative
/// vectors in the complex's own basis coordinates.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub ring: Ring,
    pub free_rank: usize,
    /// Invariant factors > 1, each dividing the next. Empty over a field.
    pub torsion: Vec<BigInt>,
    pub free_representatives: Vec<Vec<BigInt>>,
    pub torsion_representatives: Vec<Vec<BigInt>>,
}

impl HomologyGroup {
    pub fn trivial(ring: Ring) -> Self {
        HomologyGroup {
            ring,
            free_rank: 0,
            torsion: Vec::new(),
            free_representatives: Vec::new(),
            torsion_representatives: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Equality as abstract groups, ignoring the choice of representatives.
    pub fn same_group(&self, other: &HomologyGroup) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let free_symbol = match self.ring {
            Ring::Z => "Z".to_string(),
            Ring::Q => "Q".to_string(),
            Ring::Zp(p) => format!("Z/{}", p),
        };
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(free_symbol.clone()),
            r => parts.push(format!("{}^{}", free_symbol, r)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Graded basis labels plus one differential matrix per degree; the carrier
/// every homology computation in the workspace consumes. `maps[k]` sends
/// degree k to k−1 (`Down`) or k+1 (`Up`); boundary degrees hold matrices
/// with zero rows so shapes stay total.
#[derive(Clone, Debug)]
pub struct ChainComplexPresentation {
    pub ring: Ring,
    pub direction: Direction,
    pub basis: Vec<Vec<String>>,
    pub maps: Vec<IntMatrix>,
    /// Columns embed this complex's basis into an ambient complex, when this
    /// presentation arose as a subcomplex.
    pub inclusion: Option<Vec<IntMatrix>>,
}

impl ChainComplexPresentation {
    pub fn new(
        ring: Ring,
        direction: Direction,
        basis: Vec<Vec<String>>,
        maps: Vec<IntMatrix>,
    ) -> Result<Self, AlgebraError> {
        if basis.len() != maps.len() {
            return Err(AlgebraError::ShapeMismatch(format!(
                "{} degrees but {} maps",
                basis.len(),
                maps.len()
            )));
        }
        let p = ChainComplexPresentation { ring, direction, basis, maps, inclusion: None };
        for k in 0..p.len() {
            let m = &p.maps[k];
            let want_rows = p.target_degree(k).map_or(0, |t| p.dim(t));
            if m.cols() != p.dim(k) || m.rows() != want_rows {
                return Err(AlgebraError::ShapeMismatch(format!(
                    "map out of degree {} is {}x{}, expected {}x{}",
                    k,
                    m.rows(),
                    m.cols(),
                    want_rows,
                    p.dim(k)
                )));
            }
        }
        Ok(p)
    }

    pub fn with_inclusion(mut self, inclusion: Vec<IntMatrix>) -> Self {
        self.inclusion = Some(inclusion);
        self
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, |b| b.len())
    }

    /// Degree the map out of `k` lands in, if inside the graded range.
    pub fn target_degree(&self, k: usize) -> Option<usize> {
        match self.direction {
            Direction::Down => k.checked_sub(1),
            Direction::Up => {
                if k + 1 < self.len() {
                    Some(k + 1)
                } else {
                    None
                }
            }
        }
    }

    /// The differential out of degree k.
    pub fn map(&self, k: usize) -> &IntMatrix {
        &self.maps[k]
    }

    /// The differential into degree k, if any.
    pub fn map_into(&self, k: usize) -> Option<&IntMatrix> {
        match self.direction {
            Direction::Down => self.maps.get(k + 1),
            Direction::Up => k.checked_sub(1).map(|j| &self.maps[j]),
        }
    }

    /// Exact d∘d = 0 check (mod p over ℤ/p); failure signals an upstream
    /// sign bug, so callers treat it as an error rather than a result.
    pub fn validate_dd(&self) -> Result<(), AlgebraError> {
        for k in 0..self.len() {
            if let Some(t) = self.target_degree(k) {
                if self.target_degree(t).is_some() {
                    let dd = self.maps[t].mul(&self.maps[k]);
                    if !self.ring.matrix_is_zero(&dd) {
                        return Err(AlgebraError::DifferentialSquare(k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn homology(&self, k: usize) -> HomologyGroup {
        if k >= self.len() || self.dim(k) == 0 {
            return HomologyGroup::trivial(self.ring);
        }
        let d_out = self.map(k);
        let zero_in = IntMatrix::zeros(self.dim(k), 0);
        let d_in = self.map_into(k).unwrap_or(&zero_in);
        match self.ring {
            Ring::Z | Ring::Q => homology_integer(self.ring, d_out, d_in),
            Ring::Zp(p) => homology_mod_p(p, d_out, d_in),
        }
    }

    pub fn all_homology(&self) -> Vec<HomologyGroup> {
        (0..self.len()).map(|k| self.homology(k)).collect()
    }

    /// Free ranks per degree (the full story over a field).
    pub fn ranks(&self) -> Vec<usize> {
        self.all_homology().iter().map(|h| h.free_rank).collect()
    }

    /// The dual complex with the transpose differential carrying the sign
    /// (δf)(v) = −(−1)^{|f|} f(∂v); degree labels are kept.
    pub fn dualize(&self) -> Self {
        let n = self.len();
        let maps = (0..n)
            .map(|k| match self.direction {
                Direction::Down => {
                    // dual is a cochain complex: δ^k = −(−1)^k ∂_{k+1}^T
                    if k + 1 < n {
                        let t = self.maps[k + 1].transpose();
                        if k % 2 == 0 {
                            t.neg()
                        } else {
                            t
                        }
                    } else {
                        IntMatrix::zeros(0, self.dim(k))
                    }
                }
                Direction::Up => {
                    // dual is a chain complex: ∂_k = −(−1)^{k−1} δ^{k−1 T}
                    if k > 0 {
                        let t = self.maps[k - 1].transpose();
                        if (k - 1) % 2 == 0 {
                            t.neg()
                        } else {
                            t
                        }
                    } else {
                        IntMatrix::zeros(0, self.dim(0))
                    }
                }
            })
            .collect();
        let direction = match self.direction {
            Direction::Down => Direction::Up,
            Direction::Up => Direction::Down,
        };
        ChainComplexPresentation {
            ring: self.ring,
            direction,
            basis: self.basis.clone(),
            maps,
            inclusion: None,
        }
    }

    /// Extends the graded range with empty degrees.
    pub fn pad_to_len(&self, n: usize) -> Self {
        if n <= self.len() {
            return self.clone();
        }
        let mut basis = self.basis.clone();
        let mut maps = self.maps.clone();
        let mut inclusion = self.inclusion.clone();
        while basis.len() < n {
            basis.push(Vec::new());
            maps.push(IntMatrix::zeros(0, 0));
            if let Some(inc) = &mut inclusion {
                inc.push(IntMatrix::zeros(0, 0));
            }
        }
        // A freshly padded top degree may change the shape of the previous
        // top map for Up complexes (it still has 0 rows, which stays valid).
        ChainComplexPresentation { ring: self.ring, direction: self.direction, basis, maps, inclusion }
    }

    /// Solves `maps[x_degree] · x = v` exactly; the returned witness satisfies
    /// maps·coeffs = denom·v (denom is 1 over ℤ and ℤ/p).
    pub fn coboundary_witness(&self, x_degree: usize, v: &[BigInt]) -> Option<Witness> {
        let m = self.map(x_degree);
        if m.rows() != v.len() {
            return None;
        }
        match self.ring {
            Ring::Z => snf::solve(m, v).map(|coeffs| Witness { coeffs, denom: BigInt::one() }),
            Ring::Zp(p) => ModMatrix::from_int(m, p)
                .solve_matrix(&IntMatrix::column_matrix(v))
                .map(|x| Witness { coeffs: x.col(0), denom: BigInt::one() }),
            Ring::Q => solve_rational(m, v),
        }
    }
}

/// An exact solution of a linear system, with a common denominator to allow
/// rational witnesses while staying in integer arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub coeffs: Vec<BigInt>,
    pub denom: BigInt,
}

fn solve_rational(m: &IntMatrix, v: &[BigInt]) -> Option<Witness> {
    let snf = smith_normal_form(m);
    let uv = snf.u.mul_vec(v);
    for entry in uv.iter().skip(snf.rank) {
        if !entry.is_zero() {
            return None;
        }
    }
    let mut denom = BigInt::one();
    for i in 0..snf.rank {
        denom = denom.lcm(snf.s.get(i, i));
    }
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, item) in y.iter_mut().enumerate().take(snf.rank) {
        *item = &uv[i] * (&denom / snf.s.get(i, i));
    }
    let mut coeffs = snf.v.mul_vec(&y);
    // Normalize by the common content so witnesses are canonical.
    let mut g = denom.clone();
    for c in &coeffs {
        g = g.gcd(c);
    }
    if g > BigInt::one() {
        for c in &mut coeffs {
            *c /= &g;
        }
        denom /= &g;
    }
    Some(Witness { coeffs, denom })
}

fn homology_integer(ring: Ring, d_out: &IntMatrix, d_in: &IntMatrix) -> HomologyGroup {
    let kernel = snf::kernel_basis(d_out);
    let z = kernel.cols();
    if z == 0 {
        return HomologyGroup::trivial(ring);
    }
    // Express the boundaries in kernel coordinates; d²=0 plus saturation of
    // the kernel basis make the integer solve total.
    let c = snf::solve_matrix(&kernel, d_in)
        .expect("boundaries must be cycles: differential does not square to zero");
    let csnf = smith_normal_form(&c);
    let reps = kernel.mul(&csnf.u_inv);
    let mut torsion = Vec::new();
    let mut torsion_representatives = Vec::new();
    if ring == Ring::Z {
        for i in 0..csnf.rank {
            let d = csnf.s.get(i, i);
            if d > &BigInt::one() {
                torsion.push(d.clone());
                torsion_representatives.push(reps.col(i));
            }
        }
    }
    let free_representatives = (csnf.rank..z).map(|i| reps.col(i)).collect();
    HomologyGroup {
        ring,
        free_rank: z - csnf.rank,
        torsion,
        free_representatives,
        torsion_representatives,
    }
}

fn homology_mod_p(p: u64, d_out: &IntMatrix, d_in: &IntMatrix) -> HomologyGroup {
    let ring = Ring::Zp(p);
    let kernel = ModMatrix::from_int(d_out, p).kernel_basis();
    let z = kernel.cols();
    if z == 0 {
        return HomologyGroup::trivial(ring);
    }
    let km = ModMatrix::from_int(&kernel, p);
    let y = km
        .solve_matrix(d_in)
        .expect("boundaries must be cycles: differential does not square to zero mod p");
    let mut yt = ModMatrix::from_int(&y.transpose(), p);
    let pivots = yt.rref();
    let free: Vec<usize> = (0..z).filter(|i| !pivots.contains(i)).collect();
    HomologyGroup {
        ring,
        free_rank: free.len(),
        torsion: Vec::new(),
        free_representatives: free.iter().map(|&i| kernel.col(i)).collect(),
        torsion_representatives: Vec::new(),
    }
}

/// Checks that `f` commutes with the differentials of two same-direction,
/// same-length presentations.
pub fn is_chain_map(
    src: &ChainComplexPresentation,
    tgt: &ChainComplexPresentation,
    f: &[IntMatrix],
) -> Result<(), AlgebraError> {
    if src.direction != tgt.direction || src.len() != tgt.len() || f.len() != src.len() {
        return Err(AlgebraError::ShapeMismatch(
            "chain map needs matching directions and graded lengths".to_string(),
        ));
    }
    for k in 0..src.len() {
        if f[k].rows() != tgt.dim(k) || f[k].cols() != src.dim(k) {
            return Err(AlgebraError::ShapeMismatch(format!(
                "component {} is {}x{}, expected {}x{}",
                k,
                f[k].rows(),
                f[k].cols(),
                tgt.dim(k),
                src.dim(k)
            )));
        }
    }
    for k in 0..src.len() {
        if let Some(t) = src.target_degree(k) {
            let lhs = f[t].mul(src.map(k));
            let rhs = tgt.map(k).mul(&f[k]);
            if !src.ring.matrices_equal(&lhs, &rhs) {
                return Err(AlgebraError::NotChainMap(k));
            }
        }
    }
    Ok(())
}

/// The mapping cone of a chain map; its homology vanishes exactly when `f`
/// is a quasi-isomorphism, which is how comparison theorems are certified
/// over ℤ (torsion included).
pub fn mapping_cone(
    src: &ChainComplexPresentation,
    tgt: &ChainComplexPresentation,
    f: &[IntMatrix],
) -> Result<ChainComplexPresentation, AlgebraError> {
    is_chain_map(src, tgt, f)?;
    let n = src.len() + 1;
    let src = src.pad_to_len(n);
    let tgt = tgt.pad_to_len(n);
    let mut f = f.to_vec();
    while f.len() < n {
        f.push(IntMatrix::zeros(0, 0));
    }
    // Cone degree k holds src shifted by one towards the differential's
    // direction, next to tgt in place.
    let shifted = |k: usize| -> Option<usize> {
        match src.direction {
            Direction::Down => k.checked_sub(1),
            Direction::Up => {
                if k + 1 < n {
                    Some(k + 1)
                } else {
                    None
                }
            }
        }
    };
    let sdim = |k: usize| shifted(k).map_or(0, |j| src.dim(j));
    let basis: Vec<Vec<String>> = (0..n)
        .map(|k| {
            let mut labels: Vec<String> = shifted(k)
                .map(|j| src.basis[j].iter().map(|l| format!("cone[{}]", l)).collect())
                .unwrap_or_default();
            labels.extend(tgt.basis[k].iter().map(|l| format!("tgt[{}]", l)));
            labels
        })
        .collect();
    let maps: Vec<IntMatrix> = (0..n)
        .map(|k| {
            let tdeg = tgt.target_degree(k);
            let out_rows = tdeg.map_or(0, |t| sdim(t) + tgt.dim(t));
            let cols = sdim(k) + tgt.dim(k);
            let Some(t) = tdeg else {
                return IntMatrix::zeros(0, cols);
            };
            let mut m = IntMatrix::zeros(out_rows, cols);
            // [ -d_src     0     ]
            // [ -f_sh      d_tgt ]
            if let (Some(j), Some(jt)) = (shifted(k), shifted(t)) {
                let d = src.map(j);
                debug_assert_eq!(src.target_degree(j), Some(jt));
                for r in 0..d.rows() {
                    for c in 0..d.cols() {
                        m.set(r, c, -d.get(r, c));
                    }
                }
            }
            if let Some(j) = shifted(k) {
                let fj = &f[j];
                for r in 0..fj.rows() {
                    for c in 0..fj.cols() {
                        m.set(sdim(t) + r, c, -fj.get(r, c));
                    }
                }
            }
            let dt = tgt.map(k);
            for r in 0..dt.rows() {
                for c in 0..dt.cols() {
                    m.set(sdim(t) + r, sdim(k) + c, dt.get(r, c).clone());
                }
            }
            m
        })
        .collect();
    ChainComplexPresentation::new(src.ring, src.direction, basis, maps)
}

/// True when `f` induces isomorphisms on homology in all degrees, torsion
/// included when the ring is ℤ.
pub fn is_quasi_iso(
    src: &ChainComplexPresentation,
    tgt: &ChainComplexPresentation,
    f: &[IntMatrix],
) -> Result<bool, AlgebraError> {
    let cone = mapping_cone(src, tgt, f)?;
    cone.validate_dd()?;
    Ok(cone.all_homology().iter().all(|h| h.is_trivial()))
}

/// Rank of the map induced on degree-k homology, over the presentation ring
/// viewed as a field (ℚ for ℤ inputs).
pub fn induced_rank(
    src: &ChainComplexPresentation,
    tgt: &ChainComplexPresentation,
    f: &[IntMatrix],
    k: usize,
) -> usize {
    let ring = src.ring;
    let zero_src = IntMatrix::zeros(src.dim(k), 0);
    let zero_tgt = IntMatrix::zeros(tgt.dim(k), 0);
    let cycles = ring.kernel_basis(src.map(k));
    let boundaries = tgt.map_into(k).unwrap_or(&zero_tgt);
    let _ = zero_src;
    let pushed = f[k].mul(&cycles);
    let combined = pushed.hstack(boundaries);
    ring.matrix_rank(&combined) - ring.matrix_rank(boundaries)
}

/// Field-level isomorphism in one degree: the induced map has full rank on
/// both sides.
pub fn induced_iso_in_degree(
    src: &ChainComplexPresentation,
    tgt: &ChainComplexPresentation,
    f: &[IntMatrix],
    k: usize,
) -> bool {
    let hs = field_rank(src, k);
    let ht = field_rank(tgt, k);
    hs == ht && induced_rank(src, tgt, f, k) == hs
}

/// Homology rank of one degree with the ring read as a field.
pub fn field_rank(p: &ChainComplexPresentation, k: usize) -> usize {
    if k >= p.len() || p.dim(k) == 0 {
        return 0;
    }
    let ring = p.ring;
    let z = p.dim(k) - ring.matrix_rank(p.map(k));
    let b = p.map_into(k).map_or(0, |m| ring.matrix_rank(m));
    z - b
}

/// True when the columns of `small` lie in the ring-span of the columns of
/// `big`; used for submodule comparisons of subcomplex inclusions.
pub fn span_contains(ring: Ring, big: &IntMatrix, small: &IntMatrix) -> bool {
    if small.cols() == 0 {
        return true;
    }
    match ring {
        Ring::Z | Ring::Zp(_) => ring.solve_matrix(big, small).is_some(),
        Ring::Q => {
            // Rational containment: ranks agree after adjoining.
            let r = snf::integer_rank(big);
            snf::integer_rank(&big.hstack(small)) == r
        }
    }
}

/// Computes `{x ∈ span(selected_k) : d x ∈ span(selected_{k'})}` degree-wise
/// and returns it as a free presentation with inclusion matrices into the
/// ambient complex.
pub fn preimage_subcomplex(
    ambient: &ChainComplexPresentation,
    selectors: &[Vec<usize>],
) -> Result<ChainComplexPresentation, AlgebraError> {
    if selectors.len() != ambient.len() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "{} selector degrees for {} graded degrees",
            selectors.len(),
            ambient.len()
        )));
    }
    let ring = ambient.ring;
    let mut inclusions = Vec::new();
    let mut basis = Vec::new();
    for k in 0..ambient.len() {
        let sel = &selectors[k];
        if sel.iter().any(|&i| i >= ambient.dim(k)) {
            return Err(AlgebraError::ShapeMismatch(format!("selector out of range in degree {}", k)));
        }
        let inc = IntMatrix::coordinate_inclusion(ambient.dim(k), sel);
        let restricted = ambient.map(k).mul(&inc);
        let constraint = match ambient.target_degree(k) {
            None => IntMatrix::zeros(0, sel.len()),
            Some(t) => {
                let keep = &selectors[t];
                let kill: Vec<usize> = (0..ambient.dim(t)).filter(|i| !keep.contains(i)).collect();
                restricted.select_rows(&kill)
            }
        };
        let kernel = ring.kernel_basis(&constraint);
        basis.push((0..kernel.cols()).map(|j| format!("g{}d{}", j, k)).collect());
        inclusions.push(inc.mul(&kernel));
    }
    let mut maps = Vec::new();
    for k in 0..ambient.len() {
        let cols = inclusions[k].cols();
        match ambient.target_degree(k) {
            None => maps.push(IntMatrix::zeros(0, cols)),
            Some(t) => {
                let rhs = ambient.map(k).mul(&inclusions[k]);
                let d = ring
                    .solve_matrix(&inclusions[t], &rhs)
                    .ok_or(AlgebraError::NoSolution)?;
                maps.push(d);
            }
        }
    }
    Ok(ChainComplexPresentation::new(ring, ambient.direction, basis, maps)?
        .with_inclusion(inclusions))
}
