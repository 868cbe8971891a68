//! Permutations avoiding the vincular patterns `12-3` and `1-23`.
//!
//! In `12-3` the letters playing 1 and 2 sit in adjacent positions and the 3
//! anywhere to their right; in `1-23` the letters playing 2 and 3 are
//! adjacent and the 1 anywhere to their left. Fully adjacent occurrences
//! count for both.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Guard for [`avoider_last_entry_distribution`] (9! = 362,880 permutations).
pub const MAX_AVOIDER_N: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for &v in &values {
            if v == 0 || v as usize > len {
                return Err(Error::InvalidPermutation { len, reason: format!("value {v} out of range") });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidPermutation { len, reason: format!("value {v} repeated") });
            }
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: u32) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Rearranges into the lexicographically next permutation; false at the last one.
    pub fn next_lexicographic(&mut self) -> bool {
        let a = &mut self.0;
        let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
            return false;
        };
        let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("a[i] qualifies");
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Digits (`"231"`) or comma-separated values (`"2,3,1"`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Parse { position: 0, reason };
        let values = if s.contains(',') {
            s.split(',')
                .map(|v| v.parse::<u32>().map_err(|e| bad(format!("bad value {v:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.char_indices()
                .map(|(position, c)| {
                    c.to_digit(10).ok_or_else(|| Error::Parse { position, reason: format!("unexpected {c:?}") })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// All permutations of `[n]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Permutation,
    started: bool,
    done: bool,
}

impl Permutations {
    pub fn new(n: u32) -> Self {
        Permutations { current: Permutation::identity(n), started: false, done: false }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.started && !self.current.next_lexicographic() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current.clone())
    }
}

/// Some `p[i] < p[i+1] < p[j]` with `j >= i + 2`.
pub fn contains_12adj_3(p: &Permutation) -> bool {
    let a = p.values();
    let mut suffix_max = 0;
    // scan right to left, keeping max(a[i+2..])
    for i in (0..a.len().saturating_sub(2)).rev() {
        suffix_max = suffix_max.max(a[i + 2]);
        if a[i] < a[i + 1] && a[i + 1] < suffix_max {
            return true;
        }
    }
    false
}

/// Some `p[i] < p[j] < p[j+1]` with `i < j`.
pub fn contains_1_23adj(p: &Permutation) -> bool {
    let a = p.values();
    let mut prefix_min = u32::MAX;
    for j in 1..a.len().saturating_sub(1) {
        prefix_min = prefix_min.min(a[j - 1]);
        if prefix_min < a[j] && a[j] < a[j + 1] {
            return true;
        }
    }
    false
}

pub fn is_avoider(p: &Permutation) -> bool {
    !contains_12adj_3(p) && !contains_1_23adj(p)
}

/// Avoiders of `[n]` counted by last entry; every `k` in `1..=n` is present.
pub fn avoider_last_entry_distribution(n: u32) -> Result<BTreeMap<u32, u64>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > MAX_AVOIDER_N {
        return Err(Error::Bound { n, max: MAX_AVOIDER_N });
    }
    let mut dist: BTreeMap<u32, u64> = (1..=n).map(|k| (k, 0)).collect();
    for p in Permutations::new(n).filter(is_avoider) {
        *dist.get_mut(&p.last().expect("n >= 1")).expect("k in [n]") += 1;
    }
    Ok(dist)
}
