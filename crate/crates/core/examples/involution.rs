//! The involution on the worked examples, and a full orbit census for small n.
//!
//!     cargo run -p partition-involution --example involution -- 9/8/7/654321

use partition_involution::{enumerate_all, orbit_class, sigma, stat_pair, OrbitClass, SetPartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["3/4/7/852/961", "2/431", "3/4/652/7/981", "2/3/4/51", "21"].map(String::from).to_vec();
    }
    for text in &inputs {
        let p: SetPartition = text.parse()?;
        let q = sigma(&p);
        let (a, b) = (stat_pair(&p), stat_pair(&q));
        println!(
            "{p:>14} -> {q:<14} {:<6} (X, Y): ({}, {}) -> ({}, {})",
            orbit_class(&p),
            a.x,
            a.y,
            b.x,
            b.y
        );
        assert_eq!(sigma(&q), p);
    }

    println!("\n{:>3} {:>8} {:>8} {:>8}", "n", "fixed", "lower", "upper");
    for n in 1..=9 {
        let (mut fixed, mut lower, mut upper) = (0, 0, 0);
        for p in enumerate_all(n)? {
            match orbit_class(&p) {
                OrbitClass::Fixed => fixed += 1,
                OrbitClass::Lower => lower += 1,
                OrbitClass::Upper => upper += 1,
            }
        }
        println!("{n:>3} {fixed:>8} {lower:>8} {upper:>8}");
    }
    Ok(())
}
