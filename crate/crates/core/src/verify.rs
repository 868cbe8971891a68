//! Exhaustive checks binding each claimed property to a run over every
//! object of size `1..=n_max`.
//!
//! A failing check carries the first counterexample met, scanning `n`
//! upward and each `n` in restricted-growth (or lexicographic permutation)
//! order, so reports are reproducible. The three checks that depend on
//! `sigma` also come in a `_with` form taking any candidate map, which is how
//! mutants are shown to be caught.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::enumerate::{enumerate_all, EnumerationGuard};
use crate::error::{Error, Result};
use crate::involution::sigma;
use crate::partition::{is_nonoverlapping, SetPartition, Span};
use crate::patterns::{avoider_last_entry_distribution, Permutation, MAX_AVOIDER_N};
use crate::recurrence::v_table;
use crate::statistics::{stat_x, stat_y};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Partition {
        partition: String,
        #[serde(flatten)]
        blocks: SetPartition,
    },
    Permutation { permutation: Permutation },
    /// A count indexed by statistic values, e.g. `[i, j]` for `#{X = i, Y = j}`.
    Cell { coords: Vec<u32> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Partition { partition, .. } => write!(f, "partition {partition}"),
            Witness::Permutation { permutation } => write!(f, "permutation {permutation}"),
            Witness::Cell { coords } => write!(f, "cell {coords:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u32,
    pub property: &'static str,
    pub witness: Witness,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    fn partition(p: &SetPartition, property: &'static str, expected: impl ToString, actual: impl ToString) -> Self {
        Counterexample {
            n: p.n(),
            property,
            witness: Witness::Partition { partition: p.to_string(), blocks: p.clone() },
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    fn cell(n: u32, coords: Vec<u32>, property: &'static str, expected: impl ToString, actual: impl ToString) -> Self {
        Counterexample {
            n,
            property,
            witness: Witness::Cell { coords },
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated at n = {}, {}: expected {}, got {}",
            self.property, self.n, self.witness, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    check_name: &'static str,
    n_range: [u32; 2],
    status: CheckStatus,
    counterexample: Option<Counterexample>,
    /// Objects (partitions or permutations) examined.
    cases: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl CheckReport {
    fn new(check_name: &'static str, n_max: u32, outcome: Outcome, elapsed: Duration) -> Self {
        let status = if outcome.counterexample.is_some() { CheckStatus::Fail } else { CheckStatus::Pass };
        CheckReport {
            check_name,
            n_range: [1, n_max],
            status,
            counterexample: outcome.counterexample,
            cases: outcome.cases,
            elapsed,
        }
    }

    pub fn check_name(&self) -> &'static str {
        self.check_name
    }

    pub fn n_range(&self) -> std::ops::RangeInclusive<u32> {
        self.n_range[0]..=self.n_range[1]
    }

    pub fn status(&self) -> CheckStatus {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }

    pub fn cases(&self) -> u64 {
        self.cases
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {:<22} n = {}..={:<3} {:>9} cases {:>9.3}s",
            self.check_name,
            self.n_range[0],
            self.n_range[1],
            self.cases,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n    {cx}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Outcome {
    cases: u64,
    counterexample: Option<Counterexample>,
}

fn timed(name: &'static str, n_max: u32, body: impl FnOnce() -> Outcome) -> CheckReport {
    let start = Instant::now();
    let outcome = body();
    CheckReport::new(name, n_max, outcome, start.elapsed())
}

fn guard_partitions(n_max: u32) -> Result<()> {
    EnumerationGuard::default().check(n_max)
}

/// Runs `probe` on every partition of `[n]`, `n = 1..=n_max`, stopping at the first failure.
fn scan_partitions(n_max: u32, mut probe: impl FnMut(&SetPartition) -> Option<Counterexample>) -> Outcome {
    let mut outcome = Outcome::default();
    for n in 1..=n_max {
        for p in enumerate_all(n).expect("guarded") {
            outcome.cases += 1;
            if let Some(cx) = probe(&p) {
                outcome.counterexample = Some(cx);
                return outcome;
            }
        }
    }
    outcome
}

pub fn check_involution(n_max: u32) -> Result<CheckReport> {
    check_involution_with(n_max, sigma)
}

/// `map` is an involution, swaps `X` and `Y`, and fixes exactly the partitions with `X = Y`.
pub fn check_involution_with(n_max: u32, map: impl Fn(&SetPartition) -> SetPartition) -> Result<CheckReport> {
    guard_partitions(n_max)?;
    Ok(timed("involution", n_max, || {
        scan_partitions(n_max, |p| {
            let q = map(p);
            if q.n() != p.n() {
                return Some(Counterexample::partition(p, "size preserved", p.n(), q.n()));
            }
            let (px, py, qx, qy) = (stat_x(p), stat_y(p), stat_x(&q), stat_y(&q));
            if (qx, qy) != (py, px) {
                return Some(Counterexample::partition(
                    p,
                    "X/Y interchange",
                    format!("(X, Y) = ({py}, {px})"),
                    format!("(X, Y) = ({qx}, {qy}) for {q}"),
                ));
            }
            if (q == *p) != (px == py) {
                return Some(Counterexample::partition(
                    p,
                    "fixed point iff X = Y",
                    format!("X = {px}, Y = {py}"),
                    format!("image {q}"),
                ));
            }
            let back = map(&q);
            if back != *p {
                return Some(Counterexample::partition(p, "involution", p, format!("{back} via {q}")));
            }
            None
        })
    }))
}

pub fn check_spans(n_max: u32) -> Result<CheckReport> {
    check_spans_with(n_max, sigma)
}

fn sorted_nonsingleton_spans(p: &SetPartition) -> Vec<Span> {
    let mut spans = p.nonsingleton_spans();
    spans.sort_unstable();
    spans
}

fn show_spans(spans: &[Span]) -> String {
    spans.iter().map(Span::to_string).collect::<Vec<_>>().join(" ")
}

/// The multiset of nonsingleton-block spans is the same in `p` and `map(p)`.
pub fn check_spans_with(n_max: u32, map: impl Fn(&SetPartition) -> SetPartition) -> Result<CheckReport> {
    guard_partitions(n_max)?;
    Ok(timed("span preservation", n_max, || {
        scan_partitions(n_max, |p| {
            let q = map(p);
            let (before, after) = (sorted_nonsingleton_spans(p), sorted_nonsingleton_spans(&q));
            (before != after).then(|| {
                Counterexample::partition(p, "nonsingleton spans preserved", show_spans(&before), show_spans(&after))
            })
        })
    }))
}

pub fn check_nonoverlapping(n_max: u32) -> Result<CheckReport> {
    check_nonoverlapping_with(n_max, sigma)
}

pub fn check_nonoverlapping_with(n_max: u32, map: impl Fn(&SetPartition) -> SetPartition) -> Result<CheckReport> {
    guard_partitions(n_max)?;
    Ok(timed("nonoverlapping", n_max, || {
        scan_partitions(n_max, |p| {
            let q = map(p);
            let (a, b) = (is_nonoverlapping(p), is_nonoverlapping(&q));
            (a != b).then(|| Counterexample::partition(p, "nonoverlapping preserved", a, format!("{b} for {q}")))
        })
    }))
}

#[derive(Default)]
struct JointCounts {
    joint: BTreeMap<(u32, u32), u64>,
    x: BTreeMap<u32, u64>,
    y: BTreeMap<u32, u64>,
}

impl JointCounts {
    fn add(&mut self, p: &SetPartition) {
        let (x, y) = (stat_x(p), stat_y(p));
        *self.joint.entry((x, y)).or_default() += 1;
        *self.x.entry(x).or_default() += 1;
        *self.y.entry(y).or_default() += 1;
    }

    fn first_violation(&self, n: u32, label: &'static str, symmetric: &'static str) -> Option<Counterexample> {
        for k in 1..=n {
            let (cx, cy) = (self.x.get(&k).copied().unwrap_or(0), self.y.get(&k).copied().unwrap_or(0));
            if cx != cy {
                return Some(Counterexample::cell(n, vec![k], label, format!("#{{X = {k}}} = {cx}"), format!("#{{Y = {k}}} = {cy}")));
            }
        }
        for (&(i, j), &c) in &self.joint {
            let mirror = self.joint.get(&(j, i)).copied().unwrap_or(0);
            if c != mirror {
                return Some(Counterexample::cell(
                    n,
                    vec![i, j],
                    symmetric,
                    format!("#{{X = {i}, Y = {j}}} = {c}"),
                    format!("#{{X = {j}, Y = {i}}} = {mirror}"),
                ));
            }
        }
        None
    }
}

/// Over all partitions and over nonoverlapping ones: `X` and `Y` share a
/// distribution and the joint distribution is symmetric.
pub fn check_equidistribution(n_max: u32) -> Result<CheckReport> {
    guard_partitions(n_max)?;
    Ok(timed("equidistribution", n_max, || {
        let mut outcome = Outcome::default();
        for n in 1..=n_max {
            let (mut all, mut nonoverlapping) = (JointCounts::default(), JointCounts::default());
            for p in enumerate_all(n).expect("guarded") {
                outcome.cases += 1;
                all.add(&p);
                if is_nonoverlapping(&p) {
                    nonoverlapping.add(&p);
                }
            }
            let violation = all
                .first_violation(n, "X, Y equidistributed (all)", "joint symmetry (all)")
                .or_else(|| {
                    nonoverlapping.first_violation(
                        n,
                        "X, Y equidistributed (nonoverlapping)",
                        "joint symmetry (nonoverlapping)",
                    )
                });
            if violation.is_some() {
                outcome.counterexample = violation;
                break;
            }
        }
        outcome
    }))
}

fn compare_rows(n: u32, label: &'static str, counts: &[u64], row: &[BigUint]) -> Option<Counterexample> {
    counts.iter().zip(row).enumerate().find_map(|(i, (&c, v))| {
        (BigUint::from(c) != *v).then(|| Counterexample::cell(n, vec![i as u32 + 1], label, v, c))
    })
}

/// `#{nonoverlapping P of [n] : Y(P) = k} = v(n, k)`.
pub fn check_y_matches_v(n_max: u32) -> Result<CheckReport> {
    guard_partitions(n_max)?;
    Ok(timed("Y matches v(n,k)", n_max, || {
        let table = v_table(n_max);
        let mut outcome = Outcome::default();
        for n in 1..=n_max {
            let mut counts = vec![0u64; n as usize];
            for p in enumerate_all(n).expect("guarded") {
                outcome.cases += 1;
                if is_nonoverlapping(&p) {
                    counts[stat_y(&p) as usize - 1] += 1;
                }
            }
            let row = table.row(n).expect("row within table");
            if let Some(cx) = compare_rows(n, "#{Y = k} over nonoverlapping = v(n,k)", &counts, row) {
                outcome.counterexample = Some(cx);
                break;
            }
        }
        outcome
    }))
}

/// Last-entry distribution of the pattern avoiders equals `v(n, k)`.
pub fn check_avoiders_match_v(n_max: u32) -> Result<CheckReport> {
    if n_max == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n_max > MAX_AVOIDER_N {
        return Err(Error::Bound { n: n_max, max: MAX_AVOIDER_N });
    }
    Ok(timed("avoiders match v(n,k)", n_max, || {
        let table = v_table(n_max);
        let mut outcome = Outcome::default();
        for n in 1..=n_max {
            let dist = avoider_last_entry_distribution(n).expect("guarded");
            outcome.cases += (1..=u64::from(n)).product::<u64>();
            let counts: Vec<u64> = dist.values().copied().collect();
            let row = table.row(n).expect("row within table");
            if let Some(cx) = compare_rows(n, "avoiders with last entry k = v(n,k)", &counts, row) {
                outcome.counterexample = Some(cx);
                break;
            }
        }
        outcome
    }))
}

/// Per-check `n_max`, defaulting to sizes that finish well within a minute each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub involution: u32,
    pub spans: u32,
    pub nonoverlapping: u32,
    pub equidistribution: u32,
    pub y_matches_v: u32,
    pub avoiders_match_v: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            involution: 10,
            spans: 10,
            nonoverlapping: 10,
            equidistribution: 10,
            y_matches_v: 11,
            avoiders_match_v: 8,
        }
    }
}

/// Runs all six checks, one thread each; reports come back in a fixed order.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    type Check = fn(u32) -> Result<CheckReport>;
    let checks: [(Check, u32); 6] = [
        (check_involution, config.involution),
        (check_spans, config.spans),
        (check_nonoverlapping, config.nonoverlapping),
        (check_equidistribution, config.equidistribution),
        (check_y_matches_v, config.y_matches_v),
        (check_avoiders_match_v, config.avoiders_match_v),
    ];
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|&(check, n)| scope.spawn(move || check(n))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    })
}
