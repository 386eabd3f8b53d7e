//! SL(2,q) on nonzero vectors and PSL(2,q) on projective points.

use crate::error::{Error, Result};
use crate::field::{FieldElement, GaloisField};
use crate::group::Group;
use crate::mat2::Mat2;
use crate::perm::Permutation;

pub const SUPPORTED_Q: [u64; 8] = [3, 4, 5, 7, 8, 9, 11, 13];

pub fn sl2_order(q: u64) -> u64 {
    q * (q - 1) * (q + 1)
}

pub fn psl2_order(q: u64) -> u64 {
    sl2_order(q) / if q % 2 == 1 { 2 } else { 1 }
}

/// Generators of SL(2,q): the two unipotent transvections for prime `q`,
/// otherwise `diag(w, w^-1)` and `[[-1,1],[-1,0]]` with `w` primitive.
pub fn sl2_generators(field: GaloisField) -> Vec<Mat2> {
    if field.degree() == 1 {
        vec![
            Mat2::from_ints(field, [[1, 1], [0, 1]]),
            Mat2::from_ints(field, [[1, 0], [1, 1]]),
        ]
    } else {
        let w = field.primitive_element();
        let z = field.zero();
        let diag = Mat2::new(w, z, z, w.inv().expect("primitive element is nonzero")).unwrap();
        vec![diag, Mat2::from_ints(field, [[-1, 1], [-1, 0]])]
    }
}

fn field_for(q: u64) -> Result<GaloisField> {
    if !SUPPORTED_Q.contains(&q) {
        return Err(Error::Unsupported(format!("q = {q}")));
    }
    GaloisField::new(q)
}

fn vector_index(field: GaloisField, v: (FieldElement, FieldElement)) -> usize {
    (v.0.index() * field.size() + v.1.index()) as usize
}

/// Matrices acting on the nonzero row vectors of GF(q)^2, indexed by
/// `x * q + y - 1`.
pub fn on_vectors(field: GaloisField, mats: &[Mat2]) -> Result<Vec<Permutation>> {
    let q = field.size();
    let n = (q * q - 1) as usize;
    mats.iter()
        .map(|m| {
            let images = (1..=n as u64)
                .map(|i| {
                    let v = (field.element(i / q), field.element(i % q));
                    vector_index(field, m.act(v)) - 1
                })
                .collect();
            Permutation::from_images(images)
        })
        .collect()
}

/// Point of the projective line: `(1, a)` has index `a`, `(0, 1)` has index `q`.
fn projective_index(field: GaloisField, v: (FieldElement, FieldElement)) -> usize {
    if v.0.is_zero() {
        field.size() as usize
    } else {
        let a = v.1 * v.0.inv().expect("nonzero");
        a.index() as usize
    }
}

fn projective_point(field: GaloisField, i: usize) -> (FieldElement, FieldElement) {
    if i as u64 == field.size() {
        (field.zero(), field.one())
    } else {
        (field.one(), field.element(i as u64))
    }
}

/// Matrices (and optionally a field automorphism) acting on the q+1 points of
/// the projective line.
pub fn on_projective_line(field: GaloisField, mats: &[Mat2]) -> Result<Vec<Permutation>> {
    let n = field.size() as usize + 1;
    mats.iter()
        .map(|m| {
            let images = (0..n)
                .map(|i| projective_index(field, m.act(projective_point(field, i))))
                .collect();
            Permutation::from_images(images)
        })
        .collect()
}

pub fn sl2(q: u64) -> Result<Group> {
    let field = field_for(q)?;
    Group::new(on_vectors(field, &sl2_generators(field))?)
}

pub fn psl2(q: u64) -> Result<Group> {
    let field = field_for(q)?;
    Group::new(on_projective_line(field, &sl2_generators(field))?)
}

/// PΓL(2,32) = PSL(2,32) extended by the Frobenius map on coordinates.
pub fn pgammal2_32() -> Result<Group> {
    let field = GaloisField::new(32)?;
    let mut gens = on_projective_line(field, &sl2_generators(field))?;
    let n = 33;
    let frob = (0..n)
        .map(|i| {
            let (x, y) = projective_point(field, i);
            projective_index(field, (x.frobenius(), y.frobenius()))
        })
        .collect();
    gens.push(Permutation::from_images(frob)?);
    Group::new(gens)
}
