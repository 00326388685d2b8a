//! Algebraic verdict, character criterion and numerical walk side by side
//! for every power-closed set of one group.

use std::f64::consts::FRAC_PI_2;

use cayley_pst::enumerate::DEFAULT_CLASS_CAP;
use cayley_pst::{character_criterion, characterize_pst, class_unions, detect_pst_numeric, AbelianGroup, Verdict};

fn main() -> cayley_pst::Result<()> {
    let g: AbelianGroup = "Z8xZ3".parse()?;
    let mut agree = 0;
    let sets = class_unions(&g, DEFAULT_CLASS_CAP)?;
    for c in &sets {
        let algebraic = characterize_pst(c).verdict == Verdict::Pst;
        let criterion = character_criterion(c)?;
        let numeric = detect_pst_numeric(c, FRAC_PI_2, 1e-6)?.is_some();
        if algebraic == criterion && criterion == numeric {
            agree += 1;
        } else {
            println!("disagreement on {c}: {algebraic} {criterion} {numeric}");
        }
        if algebraic {
            println!("PST: {c}");
        }
    }
    println!("{agree}/{} sets agree", sets.len());
    Ok(())
}
