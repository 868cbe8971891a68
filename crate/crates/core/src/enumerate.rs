//! Exhaustive streaming enumeration of partitions of `[n]`.
//!
//! Partitions are generated as restricted-growth strings `a[0..n]` with
//! `a[0] = 0` and `a[i] <= 1 + max(a[0..i])`, in lexicographic order, and
//! converted to standard form one at a time. Nothing is materialized.

use crate::error::{Error, Result};
use crate::partition::{is_nonoverlapping, Block, SetPartition};

/// Default ceiling on `n` (Bell(14) = 190,899,322).
pub const DEFAULT_MAX_N: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationGuard {
    pub max_n: u32,
}

impl Default for EnumerationGuard {
    fn default() -> Self {
        EnumerationGuard { max_n: DEFAULT_MAX_N }
    }
}

impl EnumerationGuard {
    pub fn new(max_n: u32) -> Self {
        EnumerationGuard { max_n }
    }

    pub fn check(&self, n: u32) -> Result<()> {
        if n == 0 {
            Err(Error::EmptyGroundSet)
        } else if n > self.max_n {
            Err(Error::Bound { n, max: self.max_n })
        } else {
            Ok(())
        }
    }

    pub fn enumerate_all(&self, n: u32) -> Result<SetPartitions> {
        self.check(n)?;
        Ok(SetPartitions { rgs: RestrictedGrowth::new(n as usize) })
    }

    pub fn enumerate_nonoverlapping(&self, n: u32) -> Result<Nonoverlapping> {
        Ok(Nonoverlapping { inner: self.enumerate_all(n)? })
    }
}

/// Every partition of `[n]`, each exactly once, in restricted-growth order.
pub fn enumerate_all(n: u32) -> Result<SetPartitions> {
    EnumerationGuard::default().enumerate_all(n)
}

/// The nonoverlapping partitions of `[n]`, in the same order as [`enumerate_all`].
pub fn enumerate_nonoverlapping(n: u32) -> Result<Nonoverlapping> {
    EnumerationGuard::default().enumerate_nonoverlapping(n)
}

/// Lexicographic restricted-growth strings of length `n`.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    a: Vec<u32>,
    // prefix maxima: m[i] = max(a[0..=i])
    m: Vec<u32>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth { a: vec![0; n], m: vec![0; n], started: false, done: n == 0 }
    }

    /// Moves to the next string; returns false once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.a.len();
        for i in (1..n).rev() {
            if self.a[i] <= self.m[i - 1] {
                self.a[i] += 1;
                self.m[i] = self.m[i - 1].max(self.a[i]);
                for j in i + 1..n {
                    self.a[j] = 0;
                    self.m[j] = self.m[i];
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn current(&self) -> &[u32] {
        &self.a
    }

    /// Number of blocks of the current string.
    pub fn num_blocks(&self) -> usize {
        self.m.last().map_or(0, |&m| m as usize + 1)
    }

    /// Converts the current string into standard form.
    pub fn to_partition(&self) -> SetPartition {
        let mut groups: Vec<Vec<u32>> = vec![Vec::new(); self.num_blocks()];
        for (i, &label) in self.a.iter().enumerate().rev() {
            groups[label as usize].push(i as u32 + 1);
        }
        let blocks = groups.into_iter().map(Block::from_sorted_unchecked).collect();
        SetPartition::from_blocks_unchecked(self.a.len() as u32, blocks)
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        self.advance().then(|| self.a.clone())
    }
}

/// Restricted-growth string of a partition: entry `i` gets the index of its
/// block when blocks are ordered by minimum.
pub fn restricted_growth_string(p: &SetPartition) -> Vec<u32> {
    let mut by_min: Vec<&Block> = p.blocks().iter().collect();
    by_min.sort_unstable_by_key(|b| b.min_entry());
    let mut a = vec![0; p.n() as usize];
    for (label, b) in by_min.iter().enumerate() {
        for &e in b.entries() {
            a[e as usize - 1] = label as u32;
        }
    }
    a
}

#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: RestrictedGrowth,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.rgs.advance().then(|| self.rgs.to_partition())
    }
}

#[derive(Debug, Clone)]
pub struct Nonoverlapping {
    inner: SetPartitions,
}

impl Iterator for Nonoverlapping {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.inner.by_ref().find(is_nonoverlapping)
    }
}
