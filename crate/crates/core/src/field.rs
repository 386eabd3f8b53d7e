//! Small finite fields GF(p^k).
//!
//! Prime fields are integers mod p. Extension fields use fixed irreducible
//! moduli: GF(4) = x^2+x+1, GF(8) = x^3+x+1, GF(9) = x^2+1 over GF(3) and
//! GF(32) = x^5+x^2+1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

const MAX_K: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u32,
    k: u32,
    /// Monic modulus, low coefficient first; length k+1.
    modulus: [u32; MAX_K + 1],
}

impl GaloisField {
    /// The field with `q` elements, if `q` is a supported prime power.
    pub fn new(q: u64) -> Result<GaloisField> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::Unsupported(format!("GF({q})")))?;
        if p > u16::MAX as u64 {
            return Err(Error::Unsupported(format!("GF({q}): characteristic too large")));
        }
        let mut modulus = [0u32; MAX_K + 1];
        let coeffs: &[u32] = match (p, k) {
            (_, 1) => &[0, 1],
            (2, 2) => &[1, 1, 1],
            (2, 3) => &[1, 1, 0, 1],
            (3, 2) => &[1, 0, 1],
            (2, 5) => &[1, 0, 1, 0, 0, 1],
            _ => return Err(Error::Unsupported(format!("GF({q})"))),
        };
        modulus[..coeffs.len()].copy_from_slice(coeffs);
        Ok(GaloisField {
            p: p as u32,
            k,
            modulus,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        (self.p as u64).pow(self.k)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: *self,
            coeffs: [0; MAX_K],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The residue of `n` in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(self.p as i64) as u32;
        e
    }

    /// The element x (the class of the polynomial variable); for prime
    /// fields this is 1.
    pub fn generator_x(&self) -> FieldElement {
        if self.k == 1 {
            return self.one();
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    /// Element with base-p digit expansion `index` (coefficient of x^i is
    /// the i-th digit).
    pub fn element(&self, index: u64) -> FieldElement {
        let mut e = self.zero();
        let mut n = index % self.size();
        for c in e.coeffs.iter_mut().take(self.k as usize) {
            *c = (n % self.p as u64) as u32;
            n /= self.p as u64;
        }
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |i| self.element(i))
    }

    /// Least (by index) element of multiplicative order q-1.
    pub fn primitive_element(&self) -> FieldElement {
        let q1 = self.size() - 1;
        self.elements()
            .skip(1)
            .find(|e| e.multiplicative_order() == q1)
            .expect("multiplicative group of a finite field is cyclic")
    }
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.size())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: GaloisField,
    coeffs: [u32; MAX_K],
}

impl FieldElement {
    pub fn field(&self) -> GaloisField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs[..self.field.k as usize]
    }

    pub fn index(&self) -> u64 {
        self.coefficients()
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.field.p as u64 + c as u64)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.size(), other.field.size()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let p = self.field.p;
        let mut r = *self;
        for (a, b) in r.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a = (*a + *b) % p;
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let f = self.field;
        let p = f.p as u64;
        let k = f.k as usize;
        let mut prod = [0u64; 2 * MAX_K];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + self.coeffs[i] as u64 * other.coeffs[j] as u64) % p;
            }
        }
        // reduce by the monic modulus from the top degree down
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let m = f.modulus[i] as u64;
                prod[d - k + i] = (prod[d - k + i] + p * p - c * m % p) % p;
            }
        }
        let mut r = f.zero();
        for (c, &v) in r.coeffs.iter_mut().zip(&prod[..k]) {
            *c = v as u32;
        }
        Ok(r)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.size() - 2))
    }

    pub fn multiplicative_order(&self) -> u64 {
        assert!(!self.is_zero());
        let mut x = *self;
        let mut n = 1;
        while !x.is_one() {
            x = x * *self;
            n += 1;
        }
        n
    }

    /// Image under the Frobenius map x -> x^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.p as u64)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.try_add(&rhs).expect("field mismatch")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.p;
        let mut r = self;
        for c in r.coeffs.iter_mut() {
            *c = (p - *c) % p;
        }
        r
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.try_mul(&rhs).expect("field mismatch")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let terms: Vec<String> = (0..self.field.k as usize)
            .rev()
            .filter(|&i| self.coeffs[i] != 0)
            .map(|i| match (i, self.coeffs[i]) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (_, 1) => format!("x^{i}"),
                (_, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

/// Splits `q` as p^k with p prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut k = 0;
    let mut n = q;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n == 1).then_some((p, k))
}

pub fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// Prime factorisation as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_identity() {
        let f = GaloisField::new(9).unwrap();
        for a in f.elements() {
            assert_eq!(a + f.zero(), a);
        }
    }

    #[test]
    fn gf7_product() {
        let f = GaloisField::new(7).unwrap();
        assert_eq!(f.from_int(3) * f.from_int(5), f.one());
    }

    #[test]
    fn gf8_reduction() {
        // x * x^2 = x^3 = x + 1 modulo x^3 + x + 1
        let f = GaloisField::new(8).unwrap();
        let x = f.generator_x();
        let x2 = x * x;
        let expected = x + f.one();
        assert_eq!(x * x2, expected);
        assert_eq!(expected.coefficients(), &[1, 1, 0]);
    }

    #[test]
    fn prime_fields_agree_with_integers() {
        for p in (2..=31u64).filter(|&p| is_prime(p)) {
            let f = GaloisField::new(p).unwrap();
            for a in 0..p {
                for b in 0..p {
                    let (x, y) = (f.from_int(a as i64), f.from_int(b as i64));
                    assert_eq!((x + y).index(), (a + b) % p);
                    assert_eq!((x * y).index(), (a * b) % p);
                    assert_eq!((x - y).index(), (a + p - b) % p);
                    if b != 0 {
                        assert_eq!((x * y.inv().unwrap() * y).index(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_groups_are_cyclic() {
        for q in [4u64, 8, 9, 32] {
            let f = GaloisField::new(q).unwrap();
            let max = f.elements().skip(1).map(|e| e.multiplicative_order()).max();
            assert_eq!(max, Some(q - 1));
            // every order divides q-1
            assert!(f
                .elements()
                .skip(1)
                .all(|e| (q - 1) % e.multiplicative_order() == 0));
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = GaloisField::new(5).unwrap();
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_fail() {
        let a = GaloisField::new(5).unwrap().one();
        let b = GaloisField::new(7).unwrap().one();
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch(5, 7)));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn unsupported_fields() {
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(27).is_err());
        assert!(GaloisField::new(1).is_err());
    }
}
