//! Amplitudes of e^{itA} on the 6-cycle over one period.

use std::f64::consts::PI;

use cayley_pst::{identity_row, AbelianGroup, ConnectionSet};

fn main() -> cayley_pst::Result<()> {
    let g: AbelianGroup = "Z6".parse()?;
    let c = ConnectionSet::parse(&g, "{1,5}")?;
    for step in 0..=8 {
        let t = step as f64 * PI / 4.0;
        let row: Vec<String> = identity_row(&c, t).iter().map(|z| format!("{:.3}", z.norm())).collect();
        println!("t = {step}pi/4  |U(t)_0,h| = [{}]", row.join(", "));
    }
    Ok(())
}
