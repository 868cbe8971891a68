//! All exhaustive checks at their default sizes, run concurrently.
//!
//!     cargo run -p partition-involution --release --example verify

use partition_involution::verify::{run_all, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let reports = run_all(&VerifyConfig::default())?;
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(2);
    }
    Ok(())
}
