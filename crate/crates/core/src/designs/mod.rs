//! Block systems on the interior components in which every pair lies in
//! exactly one block. These are exactly the curve collections whose twist
//! products can have the braid of a single outer twist.

mod daisy;
mod enumerate;
mod search;
mod symmetry;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{BoundaryWord, ConvexCurve, SurfaceSpec, TwistWord};

pub use daisy::daisy;
pub use enumerate::{enumerate, enumerate_labeled, feasible_replication, MAX_POINTS, MIN_POINTS};
pub use search::{search_orderings, SearchBudget, SearchReport, SearchStatus};
pub use symmetry::{Relabeling, SymmetryMode};

/// Blocks are stored as bitmasks over the points (bit `x - 1` for point
/// `x`), sorted ascending.
pub type BlockMask = u32;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Design {
    m: usize,
    blocks: Vec<BlockMask>,
}

/// Number of blocks through each point.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ReplicationVector(pub Vec<usize>);

impl ReplicationVector {
    /// Sorted copy, used to compare up to relabeling.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

pub(crate) fn mask_of(labels: &[usize]) -> BlockMask {
    labels.iter().fold(0, |acc, &x| acc | 1 << (x - 1))
}

pub(crate) fn labels_of(mask: BlockMask) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b as usize + 1).collect()
}

impl Design {
    /// Validates and builds a design on `m` points. Blocks must have between
    /// 2 and `m - 1` points and cover every pair exactly once.
    pub fn new(m: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if !(MIN_POINTS..=MAX_POINTS + 1).contains(&m) {
            return Err(Error::OutOfRange(format!("m = {m}; designs need 3 <= m <= 8")));
        }
        let mut cover = vec![0usize; m * m];
        let mut masks = Vec::with_capacity(blocks.len());
        for b in blocks {
            let mut b = b.clone();
            b.sort_unstable();
            b.dedup();
            if b.iter().any(|&x| x == 0 || x > m) {
                return Err(Error::OutOfRange(format!("block {b:?} is not within 1..={m}")));
            }
            if b.len() < 2 || b.len() >= m {
                return Err(Error::BoundaryParallel(b));
            }
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    cover[(x - 1) * m + (y - 1)] += 1;
                }
            }
            masks.push(mask_of(&b));
        }
        for x in 1..=m {
            for y in x + 1..=m {
                let c = cover[(x - 1) * m + (y - 1)];
                if c != 1 {
                    return Err(Error::PairCoverage(x, y, c));
                }
            }
        }
        masks.sort_unstable();
        Ok(Design { m, blocks: masks })
    }

    pub(crate) fn from_masks_unchecked(m: usize, mut blocks: Vec<BlockMask>) -> Self {
        blocks.sort_unstable();
        Design { m, blocks }
    }

    /// Extracts the block system of a right-hand side.
    pub fn from_rhs(word: &TwistWord) -> Result<Self> {
        let surface = word.surface();
        let mut blocks = Vec::with_capacity(word.len());
        for f in word.factors() {
            if f.is_boundary_parallel(surface) {
                return Err(Error::BoundaryParallel(f.support(surface)));
            }
            blocks.push(f.support(surface));
        }
        Design::new(surface.interior(), &blocks)
    }

    pub fn points(&self) -> usize {
        self.m
    }

    pub fn masks(&self) -> &[BlockMask] {
        &self.blocks
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&b| labels_of(b)).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn replication(&self) -> ReplicationVector {
        ReplicationVector((0..self.m).map(|x| self.blocks.iter().filter(|&&b| b >> x & 1 == 1).count()).collect())
    }

    /// Block sizes, sorted descending.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(|b| b.count_ones() as usize).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// The boundary-parallel word whose interior multiplicities match the
    /// design: `a_i = r_i - 1` and a single outer twist.
    pub fn exponents(&self) -> BoundaryWord {
        let surface = SurfaceSpec::new(self.m + 1).expect("m >= 3");
        let a = self.replication().0.into_iter().map(|r| r - 1).collect();
        BoundaryWord::new(surface, a, 1).expect("one exponent per point")
    }

    /// Twist word of the blocks taken in the given order (indices into
    /// [`Design::masks`]).
    pub fn ordered_word(&self, order: &[usize]) -> TwistWord {
        let surface = SurfaceSpec::new(self.m + 1).expect("m >= 3");
        let factors = order.iter().map(|&i| ConvexCurve::around(labels_of(self.blocks[i]))).collect();
        TwistWord::new(surface, factors).expect("blocks are within range")
    }

    /// Order of a twist word's factors as indices into this design's
    /// blocks, if the word uses exactly these blocks.
    pub fn order_of(&self, word: &TwistWord) -> Option<Vec<usize>> {
        if word.len() != self.blocks.len() || word.surface().interior() != self.m {
            return None;
        }
        let mut order = Vec::with_capacity(word.len());
        for f in word.factors() {
            let mask = mask_of(&f.support(word.surface()));
            let idx = self.blocks.iter().position(|&b| b == mask)?;
            if order.contains(&idx) {
                return None;
            }
            order.push(idx);
        }
        Some(order)
    }
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.blocks().iter().map(|b| b.iter().map(|x| x.to_string()).collect::<String>()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
