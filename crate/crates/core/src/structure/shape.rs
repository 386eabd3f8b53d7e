use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::group::{Enumeration, Group, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ShapeTag {
    Cyclic(u64),
    ElementaryAbelian { p: u64, rank: u32 },
    QuaternionQ8,
    GeneralizedQuaternion(u64),
    Dihedral(u64),
    Other(u64),
}

impl ShapeTag {
    pub fn order(&self) -> u64 {
        match *self {
            ShapeTag::Cyclic(n) | ShapeTag::GeneralizedQuaternion(n) => n,
            ShapeTag::Dihedral(n) | ShapeTag::Other(n) => n,
            ShapeTag::ElementaryAbelian { p, rank } => p.pow(rank),
            ShapeTag::QuaternionQ8 => 8,
        }
    }

    /// Stable lowercase name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            ShapeTag::Cyclic(_) => "cyclic",
            ShapeTag::ElementaryAbelian { .. } => "elementary_abelian",
            ShapeTag::QuaternionQ8 => "quaternion_q8",
            ShapeTag::GeneralizedQuaternion(_) => "generalized_quaternion",
            ShapeTag::Dihedral(_) => "dihedral",
            ShapeTag::Other(_) => "other",
        }
    }

    pub fn is_quaternion(&self) -> bool {
        matches!(self, ShapeTag::QuaternionQ8 | ShapeTag::GeneralizedQuaternion(_))
    }
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ShapeTag::Cyclic(n) => write!(f, "C{n}"),
            ShapeTag::ElementaryAbelian { p, rank } => write!(f, "E{}", p.pow(rank)),
            ShapeTag::QuaternionQ8 => write!(f, "Q8"),
            ShapeTag::GeneralizedQuaternion(n) => write!(f, "Q{n}"),
            ShapeTag::Dihedral(n) => write!(f, "D{n}"),
            ShapeTag::Other(n) => write!(f, "other({n})"),
        }
    }
}

/// Isomorphism type of a Sylow `p`-subgroup, to the extent the class checks
/// need it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SylowShape {
    pub p: u64,
    pub tag: ShapeTag,
}

pub fn sylow_shape(g: &Group, s: &Subgroup) -> Result<SylowShape> {
    sylow_shape_in(&*g.enumeration()?, s)
}

pub fn sylow_shape_in(en: &Enumeration, s: &Subgroup) -> Result<SylowShape> {
    let n = s.order();
    if n == 1 {
        return Err(Error::NotPrimePower(1));
    }
    let (p, rank) = prime_power(n).ok_or(Error::NotPrimePower(n))?;
    let tag = classify(en, s, p, rank);
    Ok(SylowShape { p, tag })
}

fn classify(en: &Enumeration, s: &Subgroup, p: u64, rank: u32) -> ShapeTag {
    let n = s.order();
    let orders: Vec<u32> = s.elements().iter().map(|&x| en.element_order(x)).collect();
    if orders.iter().any(|&o| o as u64 == n) {
        return ShapeTag::Cyclic(n);
    }
    let abelian = s.is_abelian(en);
    if abelian {
        if orders.iter().all(|&o| o as u64 <= p) {
            return ShapeTag::ElementaryAbelian { p, rank };
        }
        return ShapeTag::Other(n);
    }
    if p != 2 {
        return ShapeTag::Other(n);
    }
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    if involutions == 1 {
        return if n == 8 {
            ShapeTag::QuaternionQ8
        } else {
            ShapeTag::GeneralizedQuaternion(n)
        };
    }
    // dihedral: a cyclic subgroup of index 2 whose complement is all involutions
    let half = (n / 2) as u32;
    for &a in s.elements() {
        if en.element_order(a) != half {
            continue;
        }
        let c = en.closure(&[a]);
        let ok = s
            .elements()
            .iter()
            .all(|&x| c.contains(x) || en.element_order(x) == 2);
        return if ok {
            ShapeTag::Dihedral(n)
        } else {
            ShapeTag::Other(n)
        };
    }
    ShapeTag::Other(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn shape_of(gens: Vec<Permutation>) -> ShapeTag {
        let g = Group::new(gens).unwrap();
        sylow_shape(&g, &g.whole().unwrap()).unwrap().tag
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(shape_of(vec![p("(1,2,3,4,5,6,7,8)", 8)]), ShapeTag::Cyclic(8));
        assert_eq!(
            shape_of(vec![p("(1,2)", 6), p("(3,4)", 6), p("(5,6)", 6)]),
            ShapeTag::ElementaryAbelian { p: 2, rank: 3 }
        );
        assert_eq!(
            shape_of(vec![p("(1,2,3,4)(5,6,7,8)", 8), p("(1,5,3,7)(2,8,4,6)", 8)]),
            ShapeTag::QuaternionQ8
        );
        assert_eq!(
            shape_of(vec![p("(1,2,3,4)", 4), p("(1,3)", 4)]),
            ShapeTag::Dihedral(8)
        );
        // C4 x C2 is abelian but neither cyclic nor elementary
        assert_eq!(
            shape_of(vec![p("(1,2,3,4)", 6), p("(5,6)", 6)]),
            ShapeTag::Other(8)
        );
    }

    #[test]
    fn rejects_non_prime_power() {
        let g = Group::new(vec![p("(1,2,3,4,5,6)", 6)]).unwrap();
        assert!(matches!(
            sylow_shape(&g, &g.whole().unwrap()),
            Err(Error::NotPrimePower(6))
        ));
    }
}
