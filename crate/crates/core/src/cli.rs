//! Rendering for the `partition-involution` binary.
//!
//! Each `cmd_*` function produces exactly what the corresponding subcommand
//! prints on standard output, in text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::enumerate::EnumerationGuard;
use crate::error::Result;
use crate::involution::{orbit_class, sigma};
use crate::partition::{format as format_partition, parse, SetPartition};
use crate::patterns::avoider_last_entry_distribution;
use crate::recurrence::{v_table, VTable};
use crate::statistics::{aux_r, aux_s, stat_x, stat_y};
use crate::verify::{run_all, CheckReport, VerifyConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputFormat {
    pub mode: Mode,
    /// Compact digit form where every entry is at most 9; comma form otherwise.
    pub compact_partitions: bool,
}

impl Default for OutputFormat {
    fn default() -> Self {
        OutputFormat { mode: Mode::Text, compact_partitions: true }
    }
}

impl OutputFormat {
    pub fn json() -> Self {
        OutputFormat { mode: Mode::Json, ..Self::default() }
    }

    pub fn partition(&self, p: &SetPartition) -> String {
        let compact = self.compact_partitions && p.is_compact_representable();
        format_partition(p, compact).expect("compact only when representable")
    }
}

fn to_json_string(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    X,
    Y,
    Joint,
}

pub fn cmd_enumerate(n: u32, nonoverlapping: bool, guard: EnumerationGuard, fmt: OutputFormat) -> Result<String> {
    let items: Box<dyn Iterator<Item = SetPartition>> = if nonoverlapping {
        Box::new(guard.enumerate_nonoverlapping(n)?)
    } else {
        Box::new(guard.enumerate_all(n)?)
    };
    let mut out = String::new();
    match fmt.mode {
        Mode::Text => {
            for p in items {
                out.push_str(&fmt.partition(&p));
                out.push('\n');
            }
        }
        Mode::Json => {
            let list: Vec<SetPartition> = items.collect();
            out = to_json_string(&json!({ "n": n, "nonoverlapping": nonoverlapping, "count": list.len(), "partitions": list }));
        }
    }
    Ok(out)
}

pub fn cmd_stats(text: &str, fmt: OutputFormat) -> Result<String> {
    let p = parse(text)?;
    let (x, y) = (stat_x(&p), stat_y(&p));
    let r = aux_r(&p).ok();
    let s = aux_s(&p).ok();
    let spans = p.spans();
    let nonoverlapping = p.is_nonoverlapping();
    Ok(match fmt.mode {
        Mode::Text => {
            let show = |v: Option<u32>| v.map_or("undefined".to_string(), |v| v.to_string());
            let spans: Vec<String> = spans.iter().map(ToString::to_string).collect();
            format!(
                "partition: {}\nX: {x}\nY: {y}\nr: {}\ns: {}\nspans: {}\nnonoverlapping: {nonoverlapping}\n",
                fmt.partition(&p),
                show(r),
                show(s),
                spans.join(" ")
            )
        }
        Mode::Json => to_json_string(&json!({
            "partition": p,
            "x": x,
            "y": y,
            "r": r,
            "s": s,
            "spans": spans,
            "nonoverlapping": nonoverlapping,
        })),
    })
}

pub fn cmd_sigma(text: &str, fmt: OutputFormat) -> Result<String> {
    let p = parse(text)?;
    let q = sigma(&p);
    let class = orbit_class(&p);
    Ok(match fmt.mode {
        Mode::Text => format!("{}\norbit: {class}\n", fmt.partition(&q)),
        Mode::Json => to_json_string(&json!({ "input": p, "image": q, "orbit": class })),
    })
}

/// Right-aligned triangle labelled by `n`, with a trailing row-sum column.
pub fn render_table(table: &VTable) -> String {
    let n_max = table.n_max();
    let cells: Vec<Vec<String>> =
        table.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let sums: Vec<String> = table.row_sums().iter().map(ToString::to_string).collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain((1..=n_max).map(|k| k.to_string().len()))
        .max()
        .unwrap_or(1);
    let sum_width = sums.iter().map(String::len).max().unwrap_or(1).max(3);
    let label = n_max.to_string().len().max(3);

    let mut out = String::new();
    let _ = write!(out, "{:>label$} |", "n\\k");
    for k in 1..=n_max {
        let _ = write!(out, " {k:>width$}");
    }
    let _ = writeln!(out, " | {:>sum_width$}", "sum");
    let rule = label + 2 + (width + 1) * n_max as usize + 3 + sum_width;
    let _ = writeln!(out, "{}", "-".repeat(rule));
    for (i, row) in cells.iter().enumerate() {
        let _ = write!(out, "{:>label$} |", i + 1);
        for k in 0..n_max as usize {
            let _ = write!(out, " {:>width$}", row.get(k).map_or("", String::as_str));
        }
        let _ = writeln!(out, " | {:>sum_width$}", sums[i]);
    }
    out
}

pub fn cmd_table(n_max: u32, fmt: OutputFormat) -> Result<String> {
    if n_max == 0 {
        return Err(crate::Error::EmptyGroundSet);
    }
    let table = v_table(n_max);
    Ok(match fmt.mode {
        Mode::Text => render_table(&table),
        Mode::Json => to_json_string(&table),
    })
}

pub fn cmd_distribution(
    n: u32,
    stat: Stat,
    nonoverlapping: bool,
    guard: EnumerationGuard,
    fmt: OutputFormat,
) -> Result<String> {
    let items: Box<dyn Iterator<Item = SetPartition>> = if nonoverlapping {
        Box::new(guard.enumerate_nonoverlapping(n)?)
    } else {
        Box::new(guard.enumerate_all(n)?)
    };
    let mut joint = vec![vec![0u64; n as usize]; n as usize];
    let mut total = 0u64;
    for p in items {
        joint[stat_x(&p) as usize - 1][stat_y(&p) as usize - 1] += 1;
        total += 1;
    }
    let x: Vec<u64> = joint.iter().map(|row| row.iter().sum()).collect();
    let y: Vec<u64> = (0..n as usize).map(|j| joint.iter().map(|row| row[j]).sum()).collect();

    Ok(match (fmt.mode, stat) {
        (Mode::Text, Stat::X | Stat::Y) => {
            let (name, counts) = if stat == Stat::X { ("X", &x) } else { ("Y", &y) };
            let mut out = String::new();
            for (k, c) in counts.iter().enumerate() {
                let _ = writeln!(out, "{name}={}\t{c}", k + 1);
            }
            let _ = writeln!(out, "total\t{total}");
            out
        }
        (Mode::Text, Stat::Joint) => {
            let w = joint.iter().flatten().map(|c| c.to_string().len()).max().unwrap_or(1).max(2);
            let mut out = format!("{:>4} |", "X\\Y");
            for j in 1..=n {
                let _ = write!(out, " {j:>w$}");
            }
            out.push('\n');
            for (i, row) in joint.iter().enumerate() {
                let _ = write!(out, "{:>4} |", i + 1);
                for c in row {
                    let _ = write!(out, " {c:>w$}");
                }
                out.push('\n');
            }
            let _ = writeln!(out, "total {total}");
            out
        }
        (Mode::Json, _) => {
            let keyed = |counts: &[u64]| -> BTreeMap<String, u64> {
                counts.iter().enumerate().map(|(k, &c)| ((k + 1).to_string(), c)).collect()
            };
            let mut v = json!({ "n": n, "nonoverlapping": nonoverlapping, "total": total });
            match stat {
                Stat::X => v["x"] = json!(keyed(&x)),
                Stat::Y => v["y"] = json!(keyed(&y)),
                Stat::Joint => v["joint"] = json!(joint),
            }
            to_json_string(&v)
        }
    })
}

pub fn cmd_avoiders(n: u32, fmt: OutputFormat) -> Result<String> {
    let dist = avoider_last_entry_distribution(n)?;
    let total: u64 = dist.values().sum();
    Ok(match fmt.mode {
        Mode::Text => {
            let mut out = format!("avoiders of [{n}]: {total}\n");
            for (k, c) in &dist {
                let _ = writeln!(out, "last={k}\t{c}");
            }
            out
        }
        Mode::Json => {
            let by_last: BTreeMap<String, u64> = dist.iter().map(|(k, &c)| (k.to_string(), c)).collect();
            to_json_string(&json!({ "n": n, "count": total, "last_entry": by_last }))
        }
    })
}

/// Output plus whether every check passed.
pub fn cmd_verify(config: &VerifyConfig, fmt: OutputFormat) -> Result<(String, bool)> {
    let reports = run_all(config)?;
    let ok = reports.iter().all(CheckReport::passed);
    let out = match fmt.mode {
        Mode::Text => {
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(out, "{} checks, {failed} failed", reports.len());
            out
        }
        Mode::Json => to_json_string(&reports),
    };
    Ok((out, ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn sigma_text() {
        let out = cmd_sigma("3/4/7/852/961", OutputFormat::default()).unwrap();
        assert_eq!(out, "6/7/852/9431\norbit: lower\n");
    }

    #[test]
    fn sigma_comma_output() {
        let fmt = OutputFormat { compact_partitions: false, ..Default::default() };
        let out = cmd_sigma("2/431", fmt).unwrap();
        assert!(out.starts_with("3/4,2,1\n"));
    }

    #[test]
    fn stats_singleton() {
        let out = cmd_stats("1", OutputFormat::default()).unwrap();
        assert!(out.contains("X: 1\nY: 1\n"));
        assert!(out.contains("r: undefined\ns: undefined\n"));
        assert!(out.contains("nonoverlapping: true"));
        let v: Value = serde_json::from_str(&cmd_stats("1", OutputFormat::json()).unwrap()).unwrap();
        assert_eq!(v["x"], 1);
        assert_eq!(v["r"], Value::Null);
    }

    #[test]
    fn json_partitions_round_trip() {
        let out = cmd_enumerate(4, false, EnumerationGuard::default(), OutputFormat::json()).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        let parts: Vec<SetPartition> = serde_json::from_value(v["partitions"].clone()).unwrap();
        let direct: Vec<SetPartition> = crate::enumerate_all(4).unwrap().collect();
        assert_eq!(parts, direct);
        assert_eq!(v["count"], 15);
    }

    #[test]
    fn table_layout() {
        let out = cmd_table(3, OutputFormat::default()).unwrap();
        assert_eq!(out, "n\\k | 1 2 3 | sum\n-----------------\n  1 | 1     |   1\n  2 | 1 1   |   2\n  3 | 2 2 1 |   5\n");
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn distribution_joint_symmetric() {
        let out = cmd_distribution(4, Stat::Joint, false, EnumerationGuard::default(), OutputFormat::json()).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        let joint: Vec<Vec<u64>> = serde_json::from_value(v["joint"].clone()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(joint[i][j], joint[j][i]);
            }
        }
        assert_eq!(v["total"], 15);
    }

    #[test]
    fn avoiders_text() {
        let out = cmd_avoiders(3, OutputFormat::default()).unwrap();
        assert_eq!(out, "avoiders of [3]: 5\nlast=1\t2\nlast=2\t2\nlast=3\t1\n");
    }

    #[test]
    fn parse_errors_surface() {
        assert!(cmd_sigma("13/2", OutputFormat::default()).is_err());
        assert!(cmd_table(0, OutputFormat::default()).is_err());
    }
}
