//! Direct products and quotients by normal subgroups.

use grpclass::structure::{derived_subgroup_in, normal_subgroups};
use grpclass::zoo;
use grpclass::Group;

fn main() -> grpclass::Result<()> {
    let s4 = zoo::symmetric(4)?;
    for n in normal_subgroups(&s4)? {
        let q = s4.quotient(&n)?;
        println!(
            "S4 / N with |N| = {:2}: quotient of order {:2}, degree {}",
            n.order(),
            q.order(),
            q.degree()
        );
    }

    let en = s4.enumeration()?;
    let d = derived_subgroup_in(&en, &en.whole());
    let ab = s4.quotient(&d)?;
    println!("abelianization of S4 has order {}", ab.order());

    let sl = zoo::by_name("SL(2,3)")?;
    let z = sl.center()?;
    println!("SL(2,3)/Z has order {}", sl.quotient(&z)?.order());

    let p = Group::direct_product(&zoo::alternating(4)?, &zoo::cyclic(5)?)?;
    println!("A4 x C5: order {}, degree {}", p.order(), p.degree());
    Ok(())
}
