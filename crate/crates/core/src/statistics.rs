//! The minimax statistic `X`, its companion `Y`, and the auxiliary values
//! `r` and `s` the involution dispatches on.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::SetPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StatPair {
    pub x: u32,
    pub y: u32,
}

/// Minimum over blocks of the block maximum: the first entry of the first block.
pub fn stat_x(p: &SetPartition) -> u32 {
    p.blocks()[0].first()
}

/// 1 when `{1}` is a singleton block, otherwise `min(r, s)`.
pub fn stat_y(p: &SetPartition) -> u32 {
    // {1} can only be the first block, with maximum 1
    if p.blocks()[0].entries() == [1] {
        return 1;
    }
    let r = aux_r(p).expect("block containing 1 is nonsingleton");
    let s = aux_s(p).expect("{1} is not a singleton");
    r.min(s)
}

pub fn stat_pair(p: &SetPartition) -> StatPair {
    StatPair { x: stat_x(p), y: stat_y(p) }
}

/// First entry of the first nonsingleton block.
pub fn aux_r(p: &SetPartition) -> Result<u32> {
    p.blocks()
        .iter()
        .find(|b| !b.is_singleton())
        .map(|b| b.first())
        .ok_or(Error::NoNonsingletonBlock)
}

/// The entry immediately left of 1 in its block.
pub fn aux_s(p: &SetPartition) -> Result<u32> {
    let (_, b) = p.block_containing_one();
    match b.entries() {
        [.., s, _one] => Ok(*s),
        _ => Err(Error::OneIsSingleton),
    }
}
