//! The v(n,k) triangle and Bessel numbers in exact arithmetic.
//!
//!     cargo run -p partition-involution --example v_table -- 12

use partition_involution::cli::render_table;
use partition_involution::{bessel, v_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(7);
    print!("{}", render_table(&v_table(n_max)));

    for n in [20, 30, 40] {
        let b = bessel(n);
        println!("bessel({n}) = {b} ({} bits)", b.bits());
    }
    Ok(())
}
