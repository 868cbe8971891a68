//! Set partitions of `[n]` in standard form, the minimax statistic `X`, its
//! companion statistic `Y`, and an involution on partitions that exchanges
//! the two.
//!
//! Standard form writes every block in decreasing order and lists blocks by
//! increasing first entry, so `31/62/7/854` is a partition of `[8]` into four
//! blocks. In that form `X` is simply the first entry of the first block.
//!
//! The crate also carries the `v(n, k)` triangle (permutations avoiding the
//! vincular patterns `1-23` and `12-3` counted by last entry), Bessel
//! numbers, and exhaustive brute-force checks tying everything together:
//!
//! ```
//! use partition_involution::{sigma, stat_x, stat_y, SetPartition};
//!
//! let p: SetPartition = "3/4/7/852/961".parse().unwrap();
//! let q = sigma(&p);
//! assert_eq!(q.to_string(), "6/7/852/9431");
//! assert_eq!((stat_x(&q), stat_y(&q)), (stat_y(&p), stat_x(&p)));
//! assert_eq!(sigma(&q), p);
//! ```
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod enumerate;
mod error;
pub mod involution;
pub mod partition;
pub mod patterns;
pub mod recurrence;
pub mod statistics;
pub mod verify;

pub use enumerate::{
    enumerate_all, enumerate_nonoverlapping, EnumerationGuard, Nonoverlapping, RestrictedGrowth,
    SetPartitions, DEFAULT_MAX_N,
};
pub use error::{Error, Result, StandardFormViolation};
pub use involution::{orbit_class, sigma, sigma_inverse, OrbitClass};
pub use partition::{Block, SetPartition, Span};
pub use patterns::{
    avoider_last_entry_distribution, contains_12adj_3, contains_1_23adj, is_avoider, Permutation,
    Permutations, MAX_AVOIDER_N,
};
pub use recurrence::{bessel, binomial, v_compute, v_table, VTable};
pub use statistics::{aux_r, aux_s, stat_pair, stat_x, stat_y, StatPair};
