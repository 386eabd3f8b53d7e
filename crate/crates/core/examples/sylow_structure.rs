//! Sylow subgroups, their shapes, and the structural subgroups the class
//! checks use.

use grpclass::field::factorize;
use grpclass::structure::{
    fitting_subgroup, is_nilpotent, is_solvable, is_supersolvable, o_pprime, sylow_shape, sylow_subgroup,
};
use grpclass::zoo;

fn main() -> grpclass::Result<()> {
    for name in ["S4", "SL(2,3)", "SL(2,5)", "PSL(2,8)", "E25:SL(2,3)", "M11"] {
        let g = zoo::by_name(name)?;
        let mut shapes = Vec::new();
        for (p, _) in factorize(g.order()) {
            let s = sylow_subgroup(&g, p)?;
            let shape = sylow_shape(&g, &s)?;
            let normal = if g.is_normal(&s)? { " (normal)" } else { "" };
            shapes.push(format!("{p}:{}{normal}", shape.tag));
        }
        println!("{name:12} order {:5}  {}", g.order(), shapes.join(", "));
        if g.order() <= 1000 {
            println!(
                "{:12} solvable {}, supersolvable {}, nilpotent {}, |F| = {}, |O_2'| = {}",
                "",
                is_solvable(&g)?,
                is_supersolvable(&g)?,
                is_nilpotent(&g)?,
                fitting_subgroup(&g)?.order(),
                o_pprime(&g, 2)?.order()
            );
        }
    }
    Ok(())
}
