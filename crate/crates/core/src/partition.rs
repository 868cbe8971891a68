//! Set partitions of `[n]` in standard form.
//!
//! Every block is strictly decreasing and blocks are listed by increasing
//! first entry, so the first entry of a block is its maximum and the block
//! order is the order of block maxima.
//!
//! # Text grammar
//!
//! ```text
//! partition := block ("/" block)*
//! block     := digit+                  (compact: one entry per digit)
//!            | number ("," number)*    (comma form)
//! number    := [1-9][0-9]*
//! ```
//!
//! A partition containing any comma is read in comma form; a comma-free block
//! is then a single number. A comma-free partition is compact, except that a
//! block containing the digit `0` (only possible when `n >= 10` and every
//! block is a singleton) switches the whole partition to decimal singletons.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, StandardFormViolation};

/// A nonempty, strictly decreasing run of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block(Vec<u32>);

impl Block {
    pub fn new(entries: Vec<u32>) -> Result<Self, StandardFormViolation> {
        Self::check(&entries, 0)?;
        Ok(Block(entries))
    }

    /// Builds a block from entries in any order.
    pub fn from_unordered(mut entries: Vec<u32>) -> Result<Self, StandardFormViolation> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = entries.windows(2).find(|w| w[0] == w[1]) {
            return Err(StandardFormViolation::DuplicateEntry { entry: w[0] });
        }
        Self::new(entries)
    }

    fn check(entries: &[u32], index: usize) -> Result<(), StandardFormViolation> {
        if entries.is_empty() {
            return Err(StandardFormViolation::EmptyBlock { index });
        }
        if entries.contains(&0) {
            return Err(StandardFormViolation::ZeroEntry);
        }
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(StandardFormViolation::BlockNotDecreasing { index });
        }
        Ok(())
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Self::check(&entries, 0).is_ok());
        Block(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// The first (and largest) entry.
    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn max_entry(&self) -> u32 {
        self.0[0]
    }

    pub fn min_entry(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; blocks are nonempty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, entry: u32) -> bool {
        self.0.binary_search_by(|e| entry.cmp(e)).is_ok()
    }

    pub fn span(&self) -> Span {
        span(self)
    }
}

/// The integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub lo: u32,
    pub hi: u32,
}

impl Span {
    pub fn contains(&self, other: &Span) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_disjoint(&self, other: &Span) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// Disjoint or nested.
    pub fn is_compatible(&self, other: &Span) -> bool {
        self.is_disjoint(other) || self.contains(other) || other.contains(self)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Smallest integer interval containing `b`.
pub fn span(b: &Block) -> Span {
    Span { lo: b.min_entry(), hi: b.max_entry() }
}

/// A partition of `{1, ..., n}` in standard form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: u32,
    blocks: Vec<Block>,
}

impl SetPartition {
    /// Accepts blocks that are already in standard form, rejecting anything else.
    pub fn from_standard_blocks(blocks: Vec<Vec<u32>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(StandardFormViolation::NoBlocks.into());
        }
        for (index, b) in blocks.iter().enumerate() {
            Block::check(b, index)?;
        }
        if let Some(index) = (1..blocks.len()).find(|&i| blocks[i][0] <= blocks[i - 1][0]) {
            return Err(StandardFormViolation::BlocksOutOfOrder { index }.into());
        }
        let n = check_cover(blocks.iter().map(|b| b.as_slice()))?;
        Ok(SetPartition { n, blocks: blocks.into_iter().map(Block).collect() })
    }

    /// Builds standard form from an unordered family of blocks, each in any order.
    pub fn normalize<I, B>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = u32>,
    {
        let mut out = Vec::new();
        for (index, b) in blocks.into_iter().enumerate() {
            let entries: Vec<u32> = b.into_iter().collect();
            if entries.is_empty() {
                return Err(StandardFormViolation::EmptyBlock { index }.into());
            }
            out.push(Block::from_unordered(entries)?);
        }
        if out.is_empty() {
            return Err(StandardFormViolation::NoBlocks.into());
        }
        let n = check_cover(out.iter().map(|b| b.entries()))?;
        out.sort_unstable_by_key(Block::first);
        Ok(SetPartition { n, blocks: out })
    }

    /// Sorts blocks into standard order. Blocks must already be decreasing and cover `[n]`.
    pub(crate) fn from_blocks_unchecked(n: u32, mut blocks: Vec<Block>) -> Self {
        blocks.sort_unstable_by_key(Block::first);
        let p = SetPartition { n, blocks };
        debug_assert!(p.check_invariants().is_ok(), "{:?}", p);
        p
    }

    /// Re-validates every standard-form invariant.
    pub fn check_invariants(&self) -> Result<()> {
        let raw = self.blocks.iter().map(|b| b.entries().to_vec()).collect();
        let q = Self::from_standard_blocks(raw)?;
        if q.n != self.n {
            return Err(StandardFormViolation::MissingEntry { entry: self.n, n: self.n }.into());
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The block containing 1 is always the one whose last entry is 1.
    pub fn block_containing_one(&self) -> (usize, &Block) {
        self.blocks
            .iter()
            .enumerate()
            .find(|(_, b)| b.min_entry() == 1)
            .expect("every partition of [n] has a block containing 1")
    }

    pub fn spans(&self) -> Vec<Span> {
        self.blocks.iter().map(span).collect()
    }

    /// Spans of the nonsingleton blocks, in block order.
    pub fn nonsingleton_spans(&self) -> Vec<Span> {
        self.blocks.iter().filter(|b| !b.is_singleton()).map(span).collect()
    }

    pub fn is_compact_representable(&self) -> bool {
        self.n <= 9
    }

    pub fn is_nonoverlapping(&self) -> bool {
        is_nonoverlapping(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("partition serializes")
    }
}

fn check_cover<'a>(blocks: impl Iterator<Item = &'a [u32]> + Clone) -> Result<u32> {
    let total: usize = blocks.clone().map(<[u32]>::len).sum();
    let n = u32::try_from(total).expect("partition size fits in u32");
    let mut seen = vec![false; total + 1];
    let mut out_of_range = false;
    for &e in blocks.flatten() {
        if e as usize > total {
            out_of_range = true;
        } else if std::mem::replace(&mut seen[e as usize], true) {
            return Err(StandardFormViolation::DuplicateEntry { entry: e }.into());
        }
    }
    if out_of_range {
        let entry = (1..=n).find(|&i| !seen[i as usize]).expect("an entry is displaced");
        return Err(StandardFormViolation::MissingEntry { entry, n }.into());
    }
    Ok(n)
}

/// True iff every pair of block spans is disjoint or nested.
///
/// Singletons cannot break the property, so only nonsingleton spans are
/// scanned, in order of their low end, against a stack of open spans.
pub fn is_nonoverlapping(p: &SetPartition) -> bool {
    let mut spans = p.nonsingleton_spans();
    spans.sort_unstable();
    let mut open: Vec<Span> = Vec::with_capacity(spans.len());
    for s in spans {
        while open.last().is_some_and(|top| top.hi < s.lo) {
            open.pop();
        }
        if open.last().is_some_and(|top| top.hi < s.hi) {
            return false;
        }
        open.push(s);
    }
    true
}

/// Reference version of [`is_nonoverlapping`] that compares every pair of blocks.
pub fn is_nonoverlapping_all_pairs(p: &SetPartition) -> bool {
    let spans = p.spans();
    spans
        .iter()
        .enumerate()
        .all(|(i, a)| spans[i + 1..].iter().all(|b| a.is_compatible(b)))
}

/// Serializes `p`; `compact` requests the paper-style digit juxtaposition.
pub fn format(p: &SetPartition, compact: bool) -> Result<String> {
    if compact {
        if let Some(entry) = p.blocks.iter().map(Block::max_entry).find(|&m| m > 9) {
            return Err(Error::Format { entry });
        }
    }
    let mut out = String::new();
    for (i, b) in p.blocks.iter().enumerate() {
        if i > 0 {
            out.push('/');
        }
        for (j, e) in b.entries().iter().enumerate() {
            if j > 0 && !compact {
                out.push(',');
            }
            out.push_str(&e.to_string());
        }
    }
    Ok(out)
}

/// Compact form when every entry is at most 9, comma form otherwise.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format(self, self.is_compact_representable()).map_err(|_| fmt::Error)?;
        f.pad(&s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Compact,
    Comma,
}

fn parse_err(position: usize, reason: impl Into<String>) -> Error {
    Error::Parse { position, reason: reason.into() }
}

/// Parses the text grammar and validates standard form.
pub fn parse(text: &str) -> Result<SetPartition> {
    if text.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    if let Some((pos, c)) = text.char_indices().find(|&(_, c)| !(c.is_ascii_digit() || c == '/' || c == ',')) {
        return Err(parse_err(pos, format!("unexpected character {c:?}")));
    }
    let mode = if text.contains(',') || text.split('/').any(|b| b.contains('0')) {
        Mode::Comma
    } else {
        Mode::Compact
    };

    let mut blocks = Vec::new();
    let mut offset = 0;
    for raw in text.split('/') {
        if raw.is_empty() {
            return Err(parse_err(offset, "empty block"));
        }
        let block = match mode {
            Mode::Compact => raw.bytes().map(|d| u32::from(d - b'0')).collect(),
            Mode::Comma => {
                let mut entries = Vec::new();
                let mut pos = offset;
                for num in raw.split(',') {
                    if num.is_empty() {
                        return Err(parse_err(pos, "empty number"));
                    }
                    if num.starts_with('0') {
                        return Err(parse_err(pos, "numbers must not start with 0"));
                    }
                    let v = num
                        .parse::<u32>()
                        .map_err(|e| parse_err(pos, format!("bad number {num:?}: {e}")))?;
                    entries.push(v);
                    pos += num.len() + 1;
                }
                entries
            }
        };
        blocks.push(block);
        offset += raw.len() + 1;
    }
    SetPartition::from_standard_blocks(blocks)
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct BlocksRepr {
    blocks: Vec<Vec<u32>>,
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BlocksRepr { blocks: self.blocks.iter().map(|b| b.0.clone()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = BlocksRepr::deserialize(d)?;
        SetPartition::from_standard_blocks(repr.blocks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parses_four_block_example() {
        let q = p("31/62/7/854");
        assert_eq!(q.n(), 8);
        let blocks: Vec<&[u32]> = q.blocks().iter().map(Block::entries).collect();
        assert_eq!(blocks, vec![&[3, 1][..], &[6, 2], &[7], &[8, 5, 4]]);
    }

    #[test]
    fn parses_smallest() {
        let q = p("1");
        assert_eq!(q.n(), 1);
        assert_eq!(q.num_blocks(), 1);
    }

    #[test]
    fn comma_form_round_trip() {
        let text = "10,7,3/11,9,8,6,5,4,2,1";
        let q = p(text);
        assert_eq!(q.n(), 11);
        assert_eq!(q.num_blocks(), 2);
        assert_eq!(format(&q, false).unwrap(), text);
        assert_eq!(q.to_string(), text);
    }

    #[test]
    fn all_singletons_above_nine() {
        let text = "1/2/3/4/5/6/7/8/9/10";
        let q = p(text);
        assert_eq!(q.n(), 10);
        assert_eq!(q.num_blocks(), 10);
        assert_eq!(q.to_string(), text);
    }

    #[test]
    fn comma_form_for_small_partitions() {
        let q = p("3,1/6,2/7/8,5,4");
        assert_eq!(q, p("31/62/7/854"));
        assert_eq!(format(&q, false).unwrap(), "3,1/6,2/7/8,5,4");
    }

    #[test]
    fn format_compact() {
        let q = SetPartition::normalize([vec![1, 3], vec![2, 6], vec![7], vec![4, 5, 8]]).unwrap();
        assert_eq!(format(&q, true).unwrap(), "31/62/7/854");
        assert_eq!(format(&p("1"), true).unwrap(), "1");
    }

    #[test]
    fn compact_rejected_above_nine() {
        let q = p("10,7,3/11,9,8,6,5,4,2,1");
        assert_eq!(format(&q, true), Err(Error::Format { entry: 10 }));
    }

    #[test]
    fn rejects_non_standard_form() {
        use StandardFormViolation::*;
        let v = |s: &str| match parse(s) {
            Err(Error::Validation(v)) => v,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(v("62/31/7/854"), BlocksOutOfOrder { index: 1 });
        assert_eq!(v("13/62/7/854"), BlockNotDecreasing { index: 0 });
        assert_eq!(v("31/62/7/855"), BlockNotDecreasing { index: 3 });
        assert_eq!(v("31/62/8/954"), MissingEntry { entry: 7, n: 8 });
        assert_eq!(v("31/53"), DuplicateEntry { entry: 3 });
        assert_eq!(v("31/32"), BlocksOutOfOrder { index: 1 });
    }

    #[test]
    fn rejects_malformed_text() {
        let pos = |s: &str| match parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("21/"), 3);
        assert_eq!(pos("/21"), 0);
        assert_eq!(pos("2 1"), 1);
        assert_eq!(pos("2,,1"), 2);
        assert_eq!(pos("3,1/02"), 4);
        assert_eq!(pos("-1"), 0);
    }

    #[test]
    fn mixed_forms_rejected() {
        // "62" in comma mode is the single number 62
        assert!(parse("3,1/62/7/8,5,4").is_err());
    }

    #[test]
    fn spans() {
        assert_eq!(span(&Block::new(vec![8, 5, 4]).unwrap()), Span { lo: 4, hi: 8 });
        assert_eq!(span(&Block::new(vec![7]).unwrap()), Span { lo: 7, hi: 7 });
        assert_eq!(span(&Block::new(vec![9, 6, 1]).unwrap()), Span { lo: 1, hi: 9 });
    }

    #[test]
    fn nonoverlapping_examples() {
        for (s, want) in [("2/43/651/87", true), ("31/62/7/854", false), ("1/2/3", true)] {
            assert_eq!(is_nonoverlapping(&p(s)), want, "{s}");
            assert_eq!(is_nonoverlapping_all_pairs(&p(s)), want, "{s}");
        }
    }

    #[test]
    fn json_shape() {
        let q = p("31/62/7/854");
        let v = q.to_json();
        assert_eq!(v, serde_json::json!({"blocks": [[3, 1], [6, 2], [7], [8, 5, 4]]}));
        let back: SetPartition = serde_json::from_value(v).unwrap();
        assert_eq!(back, q);
        let bad = serde_json::json!({"blocks": [[6, 2], [3, 1]]});
        assert!(serde_json::from_value::<SetPartition>(bad).is_err());
    }

    #[test]
    fn block_helpers() {
        let b = Block::from_unordered(vec![1, 9, 6]).unwrap();
        assert_eq!(b.entries(), &[9, 6, 1]);
        assert!(b.contains(6) && !b.contains(5));
        assert_eq!(Block::from_unordered(vec![2, 2]), Err(StandardFormViolation::DuplicateEntry { entry: 2 }));
        assert_eq!(Block::new(vec![]), Err(StandardFormViolation::EmptyBlock { index: 0 }));
        assert_eq!(Block::new(vec![2, 0]), Err(StandardFormViolation::ZeroEntry));
    }
}
