//! A permutation group from generators: order, base, membership and the
//! enumerated element table.

use grpclass::{Group, Permutation};

fn main() -> grpclass::Result<()> {
    // rotations of a cube acting on its 8 vertices
    let gens = vec![
        Permutation::parse("(1,2,3,4)(5,6,7,8)", 8)?,
        Permutation::parse("(1,2,6,5)(4,3,7,8)", 8)?,
    ];
    let g = Group::new(gens)?;
    println!("order {}", g.order());
    println!("base {:?}, basic orbits {:?}", g.base(), g.basic_orbit_lengths());

    let t = Permutation::parse("(1,7)(2,8)(3,5)(4,6)", 8)?;
    println!("{t} in G: {}", g.contains(&t));
    let odd = Permutation::parse("(1,2)", 8)?;
    println!("{odd} in G: {}", g.contains(&odd));

    let en = g.enumeration()?;
    let mut hist = std::collections::BTreeMap::new();
    for x in en.all() {
        *hist.entry(en.element_order(x)).or_insert(0) += 1;
    }
    println!("element orders: {hist:?}");
    println!("conjugacy classes: {}", en.conjugacy_classes().len());
    println!(
        "abelian: {}, center order {}",
        g.is_abelian(),
        g.center()?.order()
    );
    Ok(())
}
