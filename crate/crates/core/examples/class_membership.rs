//! Membership in the ten classes for a few groups, with witnesses.

use grpclass::classes::{decide, hierarchy_report, verify_witness, ClassId};
use grpclass::zoo;

fn main() -> grpclass::Result<()> {
    for name in ["A5", "S4", "Q8", "SL(2,3)", "PSL(2,7)"] {
        let g = zoo::by_name(name)?;
        let r = hierarchy_report(&g, name);
        let row: Vec<String> = ClassId::ALL
            .iter()
            .map(|c| format!("{c}:{}", r.verdict(*c).as_str()))
            .collect();
        println!("{name:9} {}", row.join(" "));
    }

    let g = zoo::by_name("PSL(2,7)")?;
    let d = decide(&g, ClassId::APi);
    let w = d.witness.expect("PSL(2,7) is not in A_pi");
    println!(
        "A_pi witness in PSL(2,7): order {}, cyclic {} vs {}; re-verified: {}",
        w.order,
        w.first.generators.join(" "),
        w.second.generators.join(" "),
        verify_witness(&g, &w)?
    );
    Ok(())
}
