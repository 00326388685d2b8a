//! Power classes of a group: elements grouped by the cyclic subgroup they generate.

use cayley_pst::AbelianGroup;

fn main() -> cayley_pst::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Z12".into());
    let g: AbelianGroup = name.parse()?;
    for class in g.power_classes() {
        let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
        println!("order {:3}  {}", class.order, members.join(" "));
    }
    Ok(())
}
