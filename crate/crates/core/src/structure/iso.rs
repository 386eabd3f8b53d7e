//! Isomorphism invariants and an exact test for small groups.

use serde::Serialize;

use super::{
    derived_subgroup_in, is_nilpotent_in, is_solvable_in, sylow_shape_in, sylow_subgroup_in, SylowShape,
};
use crate::error::{Error, Result};
use crate::field::factorize;
use crate::group::{Elt, Enumeration, Group, IDENTITY};

/// Largest order at which [`is_isomorphic_small`] searches by default.
pub const DEFAULT_ISOMORPHISM_CAP: u64 = 256;

/// Isomorphism-invariant summary. Unequal fingerprints rule isomorphism out;
/// equal ones do not prove it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StructuralFingerprint {
    pub order: u64,
    pub element_orders: Vec<(u32, u32)>,
    pub sylow_shapes: Vec<SylowShape>,
    pub solvable: bool,
    pub nilpotent: bool,
    pub center_order: u64,
    pub derived_order: u64,
}

pub fn structural_fingerprint(g: &Group) -> Result<StructuralFingerprint> {
    Ok(fingerprint_in(&*g.enumeration()?))
}

pub(crate) fn fingerprint_in(en: &Enumeration) -> StructuralFingerprint {
    let whole = en.whole();
    let sylow_shapes = factorize(en.order())
        .into_iter()
        .map(|(p, _)| sylow_shape_in(en, &sylow_subgroup_in(en, p)).expect("p-group"))
        .collect();
    StructuralFingerprint {
        order: en.order(),
        element_orders: whole.fingerprint(en).element_orders,
        sylow_shapes,
        solvable: is_solvable_in(en),
        nilpotent: is_nilpotent_in(en),
        center_order: en.center().order(),
        derived_order: derived_subgroup_in(en, &whole).order(),
    }
}

/// Exact isomorphism test for groups of order at most `cap`.
///
/// Picks a small generating set of `a` and backtracks over images in `b` of
/// matching element order, checking each partial assignment along the
/// Cayley graph of the subgroup generated so far.
pub fn is_isomorphic_small(a: &Group, b: &Group, cap: u64) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.order() > cap {
        return Err(Error::CapExceeded {
            what: "isomorphism search",
            size: a.order(),
            cap,
        });
    }
    let (ea, eb) = (a.enumeration()?, b.enumeration()?);
    if fingerprint_in(&ea) != fingerprint_in(&eb) {
        return Ok(false);
    }
    let gens = ea.generators_for(ea.whole().elements());
    let candidates: Vec<Vec<Elt>> = gens
        .iter()
        .map(|&g| {
            eb.all()
                .filter(|&y| eb.element_order(y) == ea.element_order(g))
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(&ea, &eb, &gens, &candidates, &mut images))
}

fn search(
    ea: &Enumeration,
    eb: &Enumeration,
    gens: &[Elt],
    candidates: &[Vec<Elt>],
    images: &mut Vec<Elt>,
) -> bool {
    let k = images.len();
    if k == gens.len() {
        return true;
    }
    for &y in &candidates[k] {
        images.push(y);
        if consistent(ea, eb, &gens[..=k], images) && search(ea, eb, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Whether `gens[i] -> images[i]` extends to an injective homomorphism on
/// the subgroup generated by `gens`.
fn consistent(ea: &Enumeration, eb: &Enumeration, gens: &[Elt], images: &[Elt]) -> bool {
    let mut map = vec![u32::MAX; ea.len()];
    let mut used = vec![false; eb.len()];
    map[IDENTITY as usize] = IDENTITY;
    used[IDENTITY as usize] = true;
    let mut queue = vec![IDENTITY];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let y = ea.mul(x, s);
            let fy = eb.mul(map[x as usize], t);
            if map[y as usize] == u32::MAX {
                if used[fy as usize] {
                    return false;
                }
                used[fy as usize] = true;
                map[y as usize] = fy;
                queue.push(y);
            } else if map[y as usize] != fy {
                return false;
            }
        }
        i += 1;
    }
    true
}
