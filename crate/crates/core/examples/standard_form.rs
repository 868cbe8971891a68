//! Parsing, printing, spans and the nonoverlapping test.
//!
//!     cargo run -p partition-involution --example standard_form -- 2/43/651/87

use partition_involution::partition::{format, is_nonoverlapping_all_pairs};
use partition_involution::SetPartition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec!["31/62/7/854".to_string(), "2/43/651/87".to_string(), "10,7,3/11,9,8,6,5,4,2,1".to_string()]
    } else {
        inputs
    };

    for text in &inputs {
        let p: SetPartition = text.parse()?;
        println!("{p}  (n = {}, {} blocks)", p.n(), p.num_blocks());
        println!("  comma form     {}", format(&p, false)?);
        println!("  json           {}", p.to_json());
        let spans: Vec<String> = p.blocks().iter().map(|b| format!("{:?} -> {}", b.entries(), b.span())).collect();
        println!("  spans          {}", spans.join(", "));
        println!("  nonoverlapping {} (all pairs: {})", p.is_nonoverlapping(), is_nonoverlapping_all_pairs(&p));
    }

    // blocks in any order are brought into standard form
    let q = SetPartition::normalize([vec![4, 5, 8], vec![1, 3], vec![7], vec![2, 6]])?;
    println!("normalize {{458, 13, 7, 26}} = {q}");

    // input not already in standard form is rejected
    for bad in ["62/31/7/854", "13/2", "31/2/"] {
        println!("{bad:>12}: {}", bad.parse::<SetPartition>().unwrap_err());
    }
    Ok(())
}
