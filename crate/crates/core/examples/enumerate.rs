//! Streaming every partition of [n] and the nonoverlapping ones.
//!
//!     cargo run -p partition-involution --release --example enumerate -- 12

use partition_involution::enumerate::restricted_growth_string;
use partition_involution::{enumerate_all, enumerate_nonoverlapping};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(10);

    println!("partitions of [4] in restricted-growth order:");
    for p in enumerate_all(4)? {
        let rgs: String = restricted_growth_string(&p).iter().map(u32::to_string).collect();
        let mark = if p.is_nonoverlapping() { "" } else { "  (overlapping)" };
        println!("  {rgs}  {p}{mark}");
    }

    println!("\n{:>3} {:>10} {:>10}", "n", "Bell", "Bessel");
    for n in 1..=n_max {
        let all = enumerate_all(n)?.count();
        let nonoverlapping = enumerate_nonoverlapping(n)?.count();
        println!("{n:>3} {all:>10} {nonoverlapping:>10}");
    }
    Ok(())
}
