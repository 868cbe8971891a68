use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use partition_involution::cli::{self, Mode, OutputFormat, Stat};
use partition_involution::verify::VerifyConfig;
use partition_involution::{EnumerationGuard, DEFAULT_MAX_N};

/// Set partitions, the X/Y-swapping involution, and the v(n,k) triangle.
#[derive(Parser, Debug)]
#[command(version, about)]
struct Args {
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Print partitions in compact digit form when every entry is at most 9 (default).
    #[arg(long, global = true, overrides_with = "no_compact")]
    compact: bool,
    /// Always print partitions in comma form.
    #[arg(long, global = true)]
    no_compact: bool,
    /// Enumeration guard on n.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StatArg {
    X,
    Y,
    Joint,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every partition of [n]
    Enumerate {
        n: u32,
        #[arg(long)]
        nonoverlapping: bool,
    },
    /// X, Y, r, s, spans and the nonoverlapping flag of a partition
    Stats { partition: String },
    /// Apply the involution
    Sigma { partition: String },
    /// The v(n,k) triangle with row sums
    Table { n_max: u32 },
    /// Distribution of X, Y, or both over partitions of [n]
    Distribution {
        n: u32,
        #[arg(long, value_enum, default_value_t = StatArg::Joint)]
        stat: StatArg,
        #[arg(long)]
        nonoverlapping: bool,
    },
    /// Count pattern-avoiding permutations of [n] by last entry
    Avoiders { n: u32 },
    /// Run the exhaustive checks
    Verify {
        #[arg(long)]
        involution: Option<u32>,
        #[arg(long)]
        spans: Option<u32>,
        #[arg(long)]
        nonoverlapping: Option<u32>,
        #[arg(long)]
        equidistribution: Option<u32>,
        #[arg(long)]
        y_matches_v: Option<u32>,
        #[arg(long)]
        avoiders_match_v: Option<u32>,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let fmt = OutputFormat {
        mode: match args.format {
            FormatArg::Text => Mode::Text,
            FormatArg::Json => Mode::Json,
        },
        compact_partitions: !args.no_compact,
    };
    let guard = EnumerationGuard::new(args.max_n);

    let result = match args.command {
        Command::Enumerate { n, nonoverlapping } => cli::cmd_enumerate(n, nonoverlapping, guard, fmt),
        Command::Stats { partition } => cli::cmd_stats(&partition, fmt),
        Command::Sigma { partition } => cli::cmd_sigma(&partition, fmt),
        Command::Table { n_max } => cli::cmd_table(n_max, fmt),
        Command::Distribution { n, stat, nonoverlapping } => {
            let stat = match stat {
                StatArg::X => Stat::X,
                StatArg::Y => Stat::Y,
                StatArg::Joint => Stat::Joint,
            };
            cli::cmd_distribution(n, stat, nonoverlapping, guard, fmt)
        }
        Command::Avoiders { n } => cli::cmd_avoiders(n, fmt),
        Command::Verify { involution, spans, nonoverlapping, equidistribution, y_matches_v, avoiders_match_v } => {
            let d = VerifyConfig::default();
            let config = VerifyConfig {
                involution: involution.unwrap_or(d.involution),
                spans: spans.unwrap_or(d.spans),
                nonoverlapping: nonoverlapping.unwrap_or(d.nonoverlapping),
                equidistribution: equidistribution.unwrap_or(d.equidistribution),
                y_matches_v: y_matches_v.unwrap_or(d.y_matches_v),
                avoiders_match_v: avoiders_match_v.unwrap_or(d.avoiders_match_v),
            };
            match cli::cmd_verify(&config, fmt) {
                Ok((out, ok)) => {
                    print!("{out}");
                    return if ok { ExitCode::SUCCESS } else { ExitCode::from(2) };
                }
                Err(e) => Err(e),
            }
        }
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
