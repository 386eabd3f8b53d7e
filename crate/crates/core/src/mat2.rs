//! 2x2 matrices over a finite field, acting on row vectors from the right.

use crate::error::{Error, Result};
use crate::field::{FieldElement, GaloisField};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    /// `[[a, b], [c, d]]`; all entries must lie in one field.
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Mat2> {
        let f = a.field();
        for e in [b, c, d] {
            if e.field() != f {
                return Err(Error::FieldMismatch(f.size(), e.field().size()));
            }
        }
        Ok(Mat2 { a, b, c, d })
    }

    /// Matrix with integer entries reduced into the prime subfield.
    pub fn from_ints(field: GaloisField, rows: [[i64; 2]; 2]) -> Mat2 {
        Mat2 {
            a: field.from_int(rows[0][0]),
            b: field.from_int(rows[0][1]),
            c: field.from_int(rows[1][0]),
            d: field.from_int(rows[1][1]),
        }
    }

    pub fn identity(field: GaloisField) -> Mat2 {
        Mat2::from_ints(field, [[1, 0], [0, 1]])
    }

    pub fn field(&self) -> GaloisField {
        self.a.field()
    }

    pub fn det(&self) -> FieldElement {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, n: &Mat2) -> Result<Mat2> {
        if self.field() != n.field() {
            return Err(Error::FieldMismatch(self.field().size(), n.field().size()));
        }
        Ok(Mat2 {
            a: self.a * n.a + self.b * n.c,
            b: self.a * n.b + self.b * n.d,
            c: self.c * n.a + self.d * n.c,
            d: self.c * n.b + self.d * n.d,
        })
    }

    pub fn inv(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let di = det.inv()?;
        Ok(Mat2 {
            a: self.d * di,
            b: -self.b * di,
            c: -self.c * di,
            d: self.a * di,
        })
    }

    /// Row vector times matrix: `(x, y) * M`.
    pub fn act(&self, v: (FieldElement, FieldElement)) -> (FieldElement, FieldElement) {
        (v.0 * self.a + v.1 * self.c, v.0 * self.b + v.1 * self.d)
    }

    /// Entry-wise image under a field map (e.g. Frobenius).
    pub fn map_entries(&self, f: impl Fn(FieldElement) -> FieldElement) -> Mat2 {
        Mat2 {
            a: f(self.a),
            b: f(self.b),
            c: f(self.c),
            d: f(self.d),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_matrices(f: GaloisField) -> Vec<Mat2> {
        let els: Vec<_> = f.elements().collect();
        let mut out = Vec::new();
        for &a in &els {
            for &b in &els {
                for &c in &els {
                    for &d in &els {
                        out.push(Mat2 { a, b, c, d });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn identity_is_neutral() {
        let f = GaloisField::new(5).unwrap();
        let m = Mat2::from_ints(f, [[2, 3], [1, 4]]);
        assert_eq!(m.mul(&Mat2::identity(f)).unwrap(), m);
    }

    #[test]
    fn determinant_is_multiplicative_over_gf5() {
        let f = GaloisField::new(5).unwrap();
        let ms = all_matrices(f);
        // direct expansion of both sides on a deterministic sample
        for (i, m) in ms.iter().enumerate().step_by(37) {
            for n in ms.iter().skip(i % 11).step_by(53) {
                let prod = m.mul(n).unwrap();
                let expanded = (m.a * n.a + m.b * n.c) * (m.c * n.b + m.d * n.d)
                    - (m.a * n.b + m.b * n.d) * (m.c * n.a + m.d * n.c);
                assert_eq!(prod.det(), expanded);
                assert_eq!(prod.det(), m.det() * n.det());
            }
        }
    }

    #[test]
    fn unipotent_inverse_over_gf3() {
        let f = GaloisField::new(3).unwrap();
        let m = Mat2::from_ints(f, [[1, 1], [0, 1]]);
        assert_eq!(m.inv().unwrap(), Mat2::from_ints(f, [[1, 2], [0, 1]]));
    }

    #[test]
    fn singular_inverse_fails() {
        let f = GaloisField::new(7).unwrap();
        let m = Mat2::from_ints(f, [[1, 2], [2, 4]]);
        assert_eq!(m.inv(), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_round_trips_over_gf9() {
        let f = GaloisField::new(9).unwrap();
        for m in all_matrices(f).into_iter().step_by(97) {
            if m.det().is_zero() {
                continue;
            }
            assert_eq!(m.mul(&m.inv().unwrap()).unwrap(), Mat2::identity(f));
        }
    }
}
