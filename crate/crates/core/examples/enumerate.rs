//! Census of PST connection sets, cross-checked against the numerical walk.

use cayley_pst::{enumerate_pst_sets, AbelianGroup, EnumerateOptions};

fn main() -> cayley_pst::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Z4xZ3".into());
    let g: AbelianGroup = name.parse()?;
    let census = enumerate_pst_sets(&g, &EnumerateOptions::for_group(&g))?;
    println!("{} PST sets in {g}", census.len());
    for entry in &census {
        println!("  |C| = {:2}  {}", entry.set.len(), entry.set);
    }
    Ok(())
}
