//! Named constructions and the plain-text group file format.

use grpclass::zoo::{self, NamedGroupId};

fn main() -> grpclass::Result<()> {
    for name in [
        "C12",
        "E8",
        "D10",
        "Q16",
        "S5",
        "SL(2,9)",
        "PSL(2,11)",
        "E8:(C7:C3)",
        "A4xC5",
        "M11",
    ] {
        let id: NamedGroupId = name.parse()?;
        let g = zoo::construct(&id)?;
        println!(
            "{id:12} order {:5}, degree {:3}, {} generators",
            g.order(),
            g.degree(),
            g.generators().len()
        );
    }

    let g = zoo::by_name("SL(2,3)")?;
    let text = zoo::write_group_file(&g, "SL(2,3) on the nonzero vectors of GF(3)^2");
    print!("{text}");

    let dir = std::env::temp_dir().join("grpclass-zoo-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("sl23.grp");
    std::fs::write(&path, &text)?;
    let back = zoo::ingest(&path)?;
    println!("read back: order {}", back.order());
    Ok(())
}
