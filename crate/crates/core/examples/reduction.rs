//! Passing to the subgroup of order 4m keeps the verdict.

use cayley_pst::{characterize_pst, check_4m_conditions, reduce_to_4m, AbelianGroup, ConnectionSet};

fn main() -> cayley_pst::Result<()> {
    let g: AbelianGroup = "Z16xZ3".parse()?;
    let c = ConnectionSet::parse(&g, "{(4,0),(12,0),(1,0),(3,0),(5,0),(7,0),(9,0),(11,0),(13,0),(15,0)}")?;
    let (sub, reduced) = reduce_to_4m(&c)?;
    println!("{g}: {c} -> {:?}", characterize_pst(&c).verdict);
    println!("{}: {reduced} -> {:?}", sub.group(), check_4m_conditions(&reduced)?.verdict);
    Ok(())
}
