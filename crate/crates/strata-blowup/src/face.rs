//! Cells of the blow-up prism ĉL₀ × … × ĉL₍ₙ₋₁₎ × Lₙ.

use crate::BlowupError;
use std::fmt;
use strata_complex::{FilteredSimplex, WeightedComplex};

/// A letter in a cone-factor word: a real vertex, or that factor's apex.
/// The derived order puts every vertex before the apex, which is the word
/// order all sign conventions use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Vertex(usize),
    Apex,
}

/// Sorts a word into canonical order and returns the permutation sign, or
/// `None` when a letter repeats. Every reordering sign in the workspace is
/// produced here.
pub fn normalize_word(word: &[Letter]) -> Option<(i64, Vec<Letter>)> {
    let mut inversions = 0usize;
    for i in 0..word.len() {
        for j in (i + 1)..word.len() {
            if word[i] == word[j] {
                return None;
            }
            if word[i] > word[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, sorted))
}

/// A basis cell (F,ε) of the blown-up complex: block i is a face of the
/// weight-i part of a regular simplex, and for i < n the flag εᵢ records
/// whether the cone factor includes its apex. Empty blocks below the top
/// force ε = 1, and the top block is never empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlowupFace {
    blocks: Vec<Vec<usize>>,
    eps: Vec<u8>,
}

impl BlowupFace {
    pub fn new(blocks: Vec<Vec<usize>>, eps: Vec<u8>) -> Result<Self, BlowupError> {
        if blocks.len() != eps.len() + 1 {
            return Err(BlowupError::Shape(format!(
                "{} blocks need {} flags, got {}",
                blocks.len(),
                blocks.len() - 1,
                eps.len()
            )));
        }
        if blocks.last().unwrap().is_empty() {
            return Err(BlowupError::IrregularBase);
        }
        for (i, b) in blocks.iter().enumerate().take(blocks.len() - 1) {
            if b.is_empty() && eps[i] != 1 {
                return Err(BlowupError::EmptyBlockFlag(i));
            }
        }
        if eps.iter().any(|&e| e > 1) {
            return Err(BlowupError::Shape("flags must be 0 or 1".into()));
        }
        Ok(BlowupFace { blocks, eps })
    }

    /// Formal dimension of the owning complex.
    pub fn n(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn eps(&self, i: usize) -> u8 {
        self.eps[i]
    }

    pub fn base(&self) -> FilteredSimplex {
        FilteredSimplex::new(self.blocks.clone())
    }

    /// The underlying simplex F₀ ∗ … ∗ Fₙ as a sorted vertex list.
    pub fn join(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// Dimension contribution of factor i: dim Fᵢ + εᵢ below the top, dim Fₙ
    /// at the top.
    pub fn term(&self, i: usize) -> i64 {
        let d = self.blocks[i].len() as i64 - 1;
        if i < self.n() {
            d + self.eps[i] as i64
        } else {
            d
        }
    }

    pub fn dim(&self) -> i64 {
        (0..=self.n()).map(|i| self.term(i)).sum()
    }

    /// |(F,ε)| restricted to factors strictly below γ.
    pub fn sum_lt(&self, gamma: usize) -> i64 {
        (0..gamma.min(self.n() + 1)).map(|i| self.term(i)).sum()
    }

    /// |(F,ε)| restricted to factors strictly above γ.
    pub fn sum_gt(&self, gamma: usize) -> i64 {
        (gamma + 1..=self.n()).map(|i| self.term(i)).sum()
    }

    pub fn sum_le(&self, gamma: usize) -> i64 {
        self.sum_lt(gamma + 1)
    }

    pub fn sum_ge(&self, gamma: usize) -> i64 {
        if gamma == 0 {
            self.dim()
        } else {
            self.sum_gt(gamma - 1)
        }
    }

    /// The word of factor i: its vertices in order, apex last when εᵢ = 1.
    pub fn word(&self, i: usize) -> Vec<Letter> {
        let mut w: Vec<Letter> = self.blocks[i].iter().map(|&v| Letter::Vertex(v)).collect();
        if i < self.n() && self.eps[i] == 1 {
            w.push(Letter::Apex);
        }
        w
    }

    /// Rebuilds the face with factor i replaced by a sorted word.
    pub fn with_word(&self, i: usize, word: &[Letter]) -> Result<Self, BlowupError> {
        let mut blocks = self.blocks.clone();
        let mut eps = self.eps.clone();
        let mut vertices = Vec::new();
        let mut apex = false;
        for l in word {
            match l {
                Letter::Vertex(v) => vertices.push(*v),
                Letter::Apex => apex = true,
            }
        }
        blocks[i] = vertices;
        if i < self.n() {
            eps[i] = apex as u8;
        } else if apex {
            return Err(BlowupError::Shape("top factor has no apex".into()));
        }
        BlowupFace::new(blocks, eps)
    }

    /// Whole-complex cells have every cone factor closed off by its apex;
    /// these are the cells a cap against the fundamental class produces.
    pub fn all_cone_flags_set(&self) -> bool {
        self.eps.iter().all(|&e| e == 1)
    }
}

impl fmt::Display for BlowupFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.n() {
            let verts: Vec<String> = self.blocks[i].iter().map(|v| v.to_string()).collect();
            if i < self.n() {
                write!(f, "({};{})", verts.join(" "), self.eps[i])?;
            } else {
                write!(f, "({})", verts.join(" "))?;
            }
        }
        Ok(())
    }
}

/// All basis cells of one degree, in lexicographic (blocks, flags) order.
pub fn enumerate_basis(cx: &WeightedComplex, degree: i64) -> Vec<BlowupFace> {
    enumerate_all(cx)
        .into_iter()
        .nth(degree.max(0) as usize)
        .unwrap_or_default()
}

/// All basis cells grouped by degree 0 ..= geometric dimension.
pub fn enumerate_all(cx: &WeightedComplex) -> Vec<Vec<BlowupFace>> {
    let n = cx.formal_dimension();
    let mut by_degree: Vec<Vec<BlowupFace>> = vec![Vec::new(); cx.geometric_dimension() + 1];
    for simplex in cx.all_faces() {
        if !cx.is_regular_simplex(simplex) {
            continue;
        }
        let blocks = cx
            .join_decomposition(simplex)
            .expect("closure member is a simplex")
            .blocks()
            .to_vec();
        let free: Vec<usize> = (0..n).filter(|&i| !blocks[i].is_empty()).collect();
        for mask in 0u32..(1 << free.len()) {
            let mut eps = vec![1u8; n];
            for (bit, &i) in free.iter().enumerate() {
                eps[i] = (mask >> bit & 1) as u8;
            }
            let face = BlowupFace::new(blocks.clone(), eps).expect("enumerated cell is valid");
            let d = face.dim();
            debug_assert!(d >= 0);
            by_degree[d as usize].push(face);
        }
    }
    for bucket in &mut by_degree {
        bucket.sort();
    }
    by_degree
}
