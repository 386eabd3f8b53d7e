//! Parsing, composing and decomposing permutations.

use grpclass::Permutation;

fn main() -> grpclass::Result<()> {
    let a = Permutation::parse("(1,2,3)(4,5)", 5)?;
    let b = Permutation::parse("(1,4)", 5)?;

    // left to right: a first, then b
    let ab = a.compose(&b)?;
    println!("a = {a}, b = {b}");
    println!("ab = {ab}, ba = {}", b.compose(&a)?);
    println!("order(a) = {}, order(ab) = {}", a.order(), ab.order());
    println!("a^-1 = {}, a^4 = {}", a.inverse(), a.pow(4));
    println!("a^b = {}", a.conjugate_by(&b));
    println!("cycles of ab (0-based): {:?}", ab.cycles());
    Ok(())
}
