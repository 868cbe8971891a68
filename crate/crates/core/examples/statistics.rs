//! X, Y and the auxiliary values r and s, plus their joint distribution.

use partition_involution::{aux_r, aux_s, enumerate_all, stat_x, stat_y, SetPartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["1/32", "3/4/652/7/981", "3/4/7/852/961", "54321"] {
        let p: SetPartition = text.parse()?;
        let show = |v: Result<u32, _>| v.map_or("-".to_string(), |v: u32| v.to_string());
        println!(
            "{text:>14}  X = {}  Y = {}  r = {}  s = {}",
            stat_x(&p),
            stat_y(&p),
            show(aux_r(&p)),
            show(aux_s(&p))
        );
    }

    let n = 6;
    let mut joint = vec![vec![0u32; n]; n];
    for p in enumerate_all(n as u32)? {
        joint[stat_x(&p) as usize - 1][stat_y(&p) as usize - 1] += 1;
    }
    println!("\njoint distribution of (X, Y) over partitions of [{n}]:");
    for row in &joint {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
        println!("  {}", cells.join(""));
    }
    Ok(())
}
