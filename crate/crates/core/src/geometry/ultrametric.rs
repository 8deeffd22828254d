use rand::Rng;

use crate::error::{Error, Result};

/// A perfect `b`-ary tree of depth `L` whose leaves form an ultrametric space.
///
/// Leaves are numbered `0..b^L` left to right, so the base-`b` digits of a
/// leaf index spell its root-to-leaf path. The distance between two leaves is
/// the number of levels above the leaves at which their paths merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UltrametricTree {
    branching: u64,
    depth: u32,
    leaves: u64,
}

impl UltrametricTree {
    pub fn new(branching: u64, depth: u32) -> Result<Self> {
        if branching < 2 {
            return Err(Error::input(format!(
                "branching factor must be >= 2, got {branching}"
            )));
        }
        if depth < 1 {
            return Err(Error::input("tree depth must be >= 1"));
        }
        let leaves = branching
            .checked_pow(depth)
            .ok_or_else(|| Error::input(format!("{branching}^{depth} leaves overflows u64")))?;
        Ok(UltrametricTree {
            branching,
            depth,
            leaves,
        })
    }

    pub fn branching(&self) -> u64 {
        self.branching
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn leaves(&self) -> u64 {
        self.leaves
    }

    pub fn distance(&self, a: u64, b: u64) -> Result<u32> {
        if a >= self.leaves || b >= self.leaves {
            return Err(Error::input(format!(
                "leaf index out of range 0..{}: ({a}, {b})",
                self.leaves
            )));
        }
        Ok(self.distance_unchecked(a, b))
    }

    pub(crate) fn distance_unchecked(&self, mut a: u64, mut b: u64) -> u32 {
        let mut level = 0;
        while a != b {
            a /= self.branching;
            b /= self.branching;
            level += 1;
        }
        level
    }

    pub fn sample_leaf<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.leaves)
    }
}
