//! Integer spectra from character sums, and the gcd `delta` of the gaps.

use cayley_pst::{integral_spectrum, AbelianGroup, ConnectionSet, Error};

fn main() -> cayley_pst::Result<()> {
    for (group, set) in [("Z4", "{1,3}"), ("Z6", "{1,5,3}"), ("Z4xZ3", "{(2,0),(1,1),(3,2),(1,2),(3,1)}"), ("Z8", "{1,7}")] {
        let g: AbelianGroup = group.parse()?;
        let c = ConnectionSet::parse(&g, set)?;
        match integral_spectrum(&c) {
            Ok(s) => println!("{group} {c}: {:?}, delta = {:?}", s, s.delta()),
            Err(e @ Error::NonIntegral { .. }) => println!("{group} {c}: {e}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
