//! The 36-vertex example on Z4 x Z3 x Z3: two connection sets, both with
//! perfect state transfer from 0 to (2,0,0) at time pi/2.

use std::f64::consts::FRAC_PI_2;

use cayley_pst::{characterize_pst, dense_expm, transition_amplitude, transition_matrix, AbelianGroup, ConnectionSet};

fn main() -> cayley_pst::Result<()> {
    let g: AbelianGroup = "Z4xZ3xZ3".parse()?;
    for file in [include_str!("../data/z4z3z3_c.json"), include_str!("../data/z4z3z3_c_prime.json")] {
        let c = ConnectionSet::from_json(&g, file)?;
        let report = characterize_pst(&c);
        let (source, target) = report.pair.clone().expect("PST");
        let amp = transition_amplitude(&c, &source, &target, FRAC_PI_2)?;
        let gap = dense_expm(&c, FRAC_PI_2)?.max_abs_diff(&transition_matrix(&c, FRAC_PI_2));
        println!("|C| = {:2}  {:?}  {source} -> {target}  |U| = {:.12}  dense gap {gap:.1e}", c.len(), report.verdict, amp.norm());
    }
    Ok(())
}
