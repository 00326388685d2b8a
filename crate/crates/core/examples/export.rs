//! Writes a Cayley graph as adjacency rows, DOT, and JSON.

use cayley_pst::export::{from_json_graph, to_adjacency, to_dot, to_json_graph};
use cayley_pst::{AbelianGroup, ConnectionSet};

fn main() -> cayley_pst::Result<()> {
    let g: AbelianGroup = "Z6".parse()?;
    let c = ConnectionSet::parse(&g, "{1,5,3}")?;
    print!("{}", to_adjacency(&c));
    print!("{}", to_dot(&c));
    let json = to_json_graph(&c);
    assert_eq!(from_json_graph(&json)?, c);
    print!("{json}");
    Ok(())
}
