//! Conjugacy classes of subgroups: all of them, p-subgroups only, and
//! explicit conjugacy tests.

use grpclass::subgroups::{all_subgroup_classes, are_conjugate, p_subgroup_classes};
use grpclass::zoo;

fn main() -> grpclass::Result<()> {
    let a5 = zoo::alternating(5)?;
    let classes = all_subgroup_classes(&a5)?;
    println!("A5 has {} classes of subgroups", classes.len());
    for c in &classes {
        println!(
            "  order {:2}, {:2} conjugates, (order, count) {:?}",
            c.order(),
            c.orbit_size,
            c.fingerprint.element_orders
        );
    }

    let psl = zoo::by_name("PSL(2,7)")?;
    let twos = p_subgroup_classes(&psl, 2)?;
    println!("PSL(2,7) has {} classes of nontrivial 2-subgroups", twos.len());
    let fours: Vec<_> = twos.iter().filter(|c| c.order() == 4).collect();
    let (h, k) = (&fours[0].representative, &fours[1].representative);
    println!(
        "two order-4 classes; conjugate: {}",
        are_conjugate(&psl, h, k)?.is_some()
    );
    Ok(())
}
