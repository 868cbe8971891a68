//! Permutations avoiding 12-3 and 1-23, counted by last entry, against v(n,k).

use partition_involution::{avoider_last_entry_distribution, is_avoider, v_table, Permutations};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let avoiders: Vec<String> = Permutations::new(4).filter(is_avoider).map(|p| p.to_string()).collect();
    println!("avoiders of [4]: {}", avoiders.join(" "));

    let table = v_table(8);
    for n in 1..=8 {
        let dist = avoider_last_entry_distribution(n)?;
        let counts: Vec<String> = dist.values().map(u64::to_string).collect();
        let expected: Vec<String> = table.row(n).unwrap().iter().map(ToString::to_string).collect();
        let verdict = if counts == expected { "matches v(n,k)" } else { "MISMATCH" };
        println!("n = {n}: {:<40} {verdict}", counts.join(" "));
    }
    Ok(())
}
