//! Arithmetic in GF(q) and 2x2 matrices over it.

use grpclass::field::GaloisField;
use grpclass::mat2::Mat2;

fn main() -> grpclass::Result<()> {
    for q in [7, 8, 9] {
        let f = GaloisField::new(q)?;
        let x = f.primitive_element();
        println!(
            "GF({q}): characteristic {}, degree {}, primitive element {x:?} of order {}",
            f.characteristic(),
            f.degree(),
            x.multiplicative_order()
        );
    }

    let f = GaloisField::new(9)?;
    let x = f.generator_x();
    println!("in GF(9): x^2 = {:?}", x * x);
    let y = x + f.one();
    println!("(x+1)^-1 = {:?}, frobenius(x+1) = {:?}", y.inv()?, y.frobenius());

    let m = Mat2::from_ints(f, [[1, 1], [0, 1]]);
    let n = Mat2::from_ints(f, [[0, 2], [1, 0]]);
    let mn = m.mul(&n)?;
    println!("det(mn) = {:?}", mn.det());
    Ok(())
}
