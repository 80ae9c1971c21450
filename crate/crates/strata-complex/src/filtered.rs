//! Simplices split into weight blocks Δ₀ ∗ … ∗ Δₙ.

use std::fmt;

/// A simplex of a weighted complex presented by its weight blocks: block i
/// lists the vertices of weight i, in increasing id order. The concatenation
/// of the blocks is the simplex itself.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FilteredSimplex {
    blocks: Vec<Vec<usize>>,
}

impl FilteredSimplex {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        debug_assert!(blocks.iter().all(|b| b.windows(2).all(|w| w[0] < w[1])));
        FilteredSimplex { blocks }
    }

    /// Splits a sorted vertex list by weight into n+1 blocks.
    pub fn from_vertices(vertices: &[usize], weights: &[usize], n: usize) -> Self {
        let mut blocks = vec![Vec::new(); n + 1];
        for &v in vertices {
            blocks[weights[v]].push(v);
        }
        FilteredSimplex { blocks }
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

    /// All vertices in increasing id order (ids are weight-compatible).
    pub fn vertices(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Dimension, with the empty simplex at −1.
    pub fn dim(&self) -> i64 {
        self.vertex_count() as i64 - 1
    }

    /// Dimension of one block, −1 when empty.
    pub fn block_dim(&self, i: usize) -> i64 {
        self.blocks[i].len() as i64 - 1
    }

    /// A simplex is regular when its top-weight block is nonempty.
    pub fn is_regular(&self) -> bool {
        !self.blocks[self.n()].is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }

    /// Vertices of the blocks 0..=i, the part of the simplex lying in the
    /// i-th filtration stage.
    pub fn prefix(&self, i: usize) -> Vec<usize> {
        self.blocks[..=i].iter().flatten().copied().collect()
    }

    /// Largest block index carrying a vertex, if any.
    pub fn max_weight(&self) -> Option<usize> {
        (0..self.blocks.len()).rev().find(|&i| !self.blocks[i].is_empty())
    }
}

impl fmt::Display for FilteredSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}
