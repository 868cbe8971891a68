//! The involution `sigma` on partitions of `[n]` that swaps `X` and `Y`.
//!
//! Partitions with `X = Y` are fixed. A partition with `X < Y` always starts
//! with a singleton block; `sigma` folds some or all of the leading singleton
//! blocks into the block containing 1, and in the `r > s` case pulls `s` out
//! as a new leading singleton. Partitions with `X > Y` are sent back through
//! [`sigma_inverse`], which keys on whether the first block is a singleton.
//!
//! Only the block containing 1 and singleton blocks change, so the spans of
//! the other nonsingleton blocks are untouched, and the block containing 1
//! keeps both its minimum (1) and its maximum.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Block, SetPartition};
use crate::statistics::{aux_r, aux_s, stat_x, stat_y};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitClass {
    /// `X = Y`
    Fixed,
    /// `X < Y`
    Lower,
    /// `X > Y`
    Upper,
}

impl std::fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            OrbitClass::Fixed => "fixed",
            OrbitClass::Lower => "lower",
            OrbitClass::Upper => "upper",
        })
    }
}

pub fn orbit_class(p: &SetPartition) -> OrbitClass {
    use std::cmp::Ordering::*;
    match stat_x(p).cmp(&stat_y(p)) {
        Equal => OrbitClass::Fixed,
        Less => OrbitClass::Lower,
        Greater => OrbitClass::Upper,
    }
}

pub fn sigma(p: &SetPartition) -> SetPartition {
    match orbit_class(p) {
        OrbitClass::Fixed => p.clone(),
        OrbitClass::Lower => forward(p),
        OrbitClass::Upper => sigma_inverse(p).expect("upper partitions satisfy X > Y"),
    }
}

/// The `X < Y` branch.
fn forward(p: &SetPartition) -> SetPartition {
    let r = aux_r(p).expect("X < Y leaves 1 in a nonsingleton block");
    let s = aux_s(p).expect("X < Y leaves 1 in a nonsingleton block");
    let blocks = p.blocks();
    let leading = blocks.iter().take_while(|b| b.is_singleton()).count();
    let (one_index, one_block) = p.block_containing_one();

    // r > s: only leading singletons below s move; r <= s: all of them (all are < r)
    let moves = |b: &Block| r <= s || b.first() < s;

    let mut one_entries = one_block.entries().to_vec();
    let mut out = Vec::with_capacity(blocks.len() + 1);
    for (i, b) in blocks.iter().enumerate() {
        if i == one_index {
            continue;
        }
        if i < leading && moves(b) {
            one_entries.push(b.first());
        } else {
            out.push(b.clone());
        }
    }
    one_entries.sort_unstable_by(|a, b| b.cmp(a));
    if r > s {
        one_entries.retain(|&e| e != s);
        out.push(Block::from_sorted_unchecked(vec![s]));
    }
    out.push(Block::from_sorted_unchecked(one_entries));
    SetPartition::from_blocks_unchecked(p.n(), out)
}

/// The unique `p` with `X(p) < Y(p)` and `sigma(p) = q`.
pub fn sigma_inverse(q: &SetPartition) -> Result<SetPartition> {
    let (x, y) = (stat_x(q), stat_y(q));
    if x <= y {
        return Err(Error::Precondition { x, y });
    }
    let blocks = q.blocks();
    let first = &blocks[0];
    // a leading singleton {s} undoes the r > s case; otherwise the threshold is r
    let threshold = first.first();
    let drop_first = first.is_singleton();
    let (one_index, one_block) = q.block_containing_one();

    let mut out = Vec::with_capacity(blocks.len() + one_block.len());
    let mut one_entries = Vec::with_capacity(one_block.len() + 1);
    for &e in one_block.entries() {
        if e < threshold && e != 1 {
            out.push(Block::from_sorted_unchecked(vec![e]));
        } else {
            one_entries.push(e);
        }
    }
    if drop_first {
        one_entries.push(threshold);
        one_entries.sort_unstable_by(|a, b| b.cmp(a));
    }
    for (i, b) in blocks.iter().enumerate() {
        if i == one_index || (i == 0 && drop_first) {
            continue;
        }
        out.push(b.clone());
    }
    out.push(Block::from_sorted_unchecked(one_entries));
    Ok(SetPartition::from_blocks_unchecked(q.n(), out))
}
