//! Series, Sylow subgroups, cores and the Fitting subgroup.

mod iso;
mod shape;
mod sylow;

pub use iso::{is_isomorphic_small, structural_fingerprint, StructuralFingerprint, DEFAULT_ISOMORPHISM_CAP};
pub use shape::{sylow_shape, sylow_shape_in, ShapeTag, SylowShape};
pub use sylow::{core_p, core_p_in, sylow_subgroup, sylow_subgroup_in, sylow_subgroup_seeded};

use crate::error::{Error, Result};
use crate::field::factorize;
use crate::group::{Elt, Enumeration, Group, Subgroup};

/// Commutator subgroup `[H, H]`.
pub fn derived_subgroup_in(en: &Enumeration, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let mut comms: Vec<Elt> = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = en.commutator(a, b);
            if !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    en.normal_closure(h, &comms)
}

/// `G = G^(0) ≥ G' ≥ G'' ≥ ...`, stopping at the first repeat.
pub fn derived_series_in(en: &Enumeration) -> Vec<Subgroup> {
    let mut series = vec![en.whole()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup_in(en, last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn derived_series(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(derived_series_in(&*g.enumeration()?))
}

pub fn is_solvable(g: &Group) -> Result<bool> {
    if g.is_abelian() {
        return Ok(true);
    }
    let en = g.enumeration()?;
    Ok(is_solvable_in(&en))
}

pub(crate) fn is_solvable_in(en: &Enumeration) -> bool {
    derived_series_in(en).last().unwrap().is_trivial()
}

/// `G = γ_1 ≥ γ_2 = [G, G] ≥ γ_3 = [γ_2, G] ≥ ...`, stopping at the first
/// repeat.
pub fn lower_central_series_in(en: &Enumeration) -> Vec<Subgroup> {
    let whole = en.whole();
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().unwrap();
        let mut comms = Vec::new();
        for &x in last.generators() {
            for &s in whole.generators() {
                let c = en.commutator(x, s);
                if !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let next = en.normal_closure_in_group(&comms);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(g: &Group) -> Result<bool> {
    if g.is_abelian() || factorize(g.order()).len() <= 1 {
        return Ok(true);
    }
    Ok(is_nilpotent_in(&*g.enumeration()?))
}

pub(crate) fn is_nilpotent_in(en: &Enumeration) -> bool {
    lower_central_series_in(en).last().unwrap().is_trivial()
}

/// Nilpotency via normality of every Sylow subgroup; agrees with
/// [`is_nilpotent`] and serves as its cross-check.
pub fn all_sylows_normal(g: &Group) -> Result<bool> {
    let en = g.enumeration()?;
    Ok(factorize(g.order())
        .iter()
        .all(|&(p, _)| en.is_normal(&sylow_subgroup_in(&en, p))))
}

/// Supersolvability: a chain of normal subgroups of `G` with every factor of
/// prime order, built greedily.
pub fn is_supersolvable(g: &Group) -> Result<bool> {
    if g.is_abelian() {
        return Ok(true);
    }
    Ok(is_supersolvable_in(&*g.enumeration()?))
}

pub(crate) fn is_supersolvable_in(en: &Enumeration) -> bool {
    let classes = en.conjugacy_classes();
    let mut m = en.trivial();
    while m.order() < en.order() {
        let mut step = None;
        for class in &classes {
            let x = class[0];
            if m.contains(x) {
                continue;
            }
            let mut seeds = m.generators().to_vec();
            seeds.push(x);
            let k = en.normal_closure_in_group(&seeds);
            let index = k.order() / m.order();
            if crate::field::is_prime(index) {
                step = Some(k);
                break;
            }
        }
        match step {
            Some(k) => m = k,
            None => return false,
        }
    }
    true
}

/// Supersolvability for an arbitrary subgroup, by building it as a group.
pub(crate) fn subgroup_is_supersolvable(parent: &Group, h: &Subgroup) -> bool {
    let en = parent.enumeration().expect("parent is enumerated");
    if h.is_abelian(&en) || factorize(h.order()).len() <= 1 {
        return true;
    }
    let g = h.to_group(parent);
    is_supersolvable(&g).expect("subgroup fits under the parent cap")
}

/// Fitting subgroup: the product of the cores `O_p(G)`.
pub fn fitting_subgroup(g: &Group) -> Result<Subgroup> {
    let en = g.enumeration()?;
    Ok(fitting_subgroup_in(&en))
}

pub(crate) fn fitting_subgroup_in(en: &Enumeration) -> Subgroup {
    let mut f = en.trivial();
    for (p, _) in factorize(en.order()) {
        let o = core_p_in(en, p);
        f = en.join(&f, &o);
    }
    f
}

/// `O_{p'}(G)`: the largest normal subgroup of order prime to `p`.
///
/// Grows `M` one minimal normal subgroup of `G/M` at a time, taken as an
/// inclusion-minimal normal closure of `M` and a single element, for as long
/// as one of `p'`-order exists.
pub fn o_pprime(g: &Group, p: u64) -> Result<Subgroup> {
    let en = g.enumeration()?;
    Ok(o_pprime_in(&en, p))
}

pub(crate) fn o_pprime_in(en: &Enumeration, p: u64) -> Subgroup {
    let classes = en.conjugacy_classes();
    let mut m = en.trivial();
    loop {
        let minimal = minimal_normal_over(en, &classes, &m);
        match minimal
            .into_iter()
            .find(|k| !(k.order() / m.order()).is_multiple_of(p))
        {
            Some(k) => m = k,
            None => return m,
        }
    }
}

/// Normal subgroups `K > M` of `G` with `K/M` minimal normal in `G/M`.
pub(crate) fn minimal_normal_over(en: &Enumeration, classes: &[Vec<Elt>], m: &Subgroup) -> Vec<Subgroup> {
    let mut candidates: Vec<Subgroup> = Vec::new();
    for class in classes {
        let x = class[0];
        if m.contains(x) {
            continue;
        }
        let mut seeds = m.generators().to_vec();
        seeds.push(x);
        let k = en.normal_closure_in_group(&seeds);
        if !candidates.contains(&k) {
            candidates.push(k);
        }
    }
    candidates.sort_by_key(|k| k.order());
    let mut minimal: Vec<Subgroup> = Vec::new();
    for k in candidates {
        if !minimal.iter().any(|s| s.is_subgroup_of(&k)) {
            minimal.push(k);
        }
    }
    minimal
}

/// Minimal normal subgroups of `G`.
pub fn minimal_normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let en = g.enumeration()?;
    let classes = en.conjugacy_classes();
    Ok(minimal_normal_over(&en, &classes, &en.trivial()))
}

/// Every normal subgroup of `G`: joins of normal closures of conjugacy
/// classes. Sorted by order, then element set.
pub fn normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(normal_subgroups_in(&*g.enumeration()?))
}

pub(crate) fn normal_subgroups_in(en: &Enumeration) -> Vec<Subgroup> {
    let mut found: Vec<Subgroup> = vec![en.trivial()];
    let mut generators: Vec<Subgroup> = Vec::new();
    for class in en.conjugacy_classes() {
        let n = en.normal_closure_in_group(&[class[0]]);
        if !generators.contains(&n) {
            generators.push(n);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for n in &generators {
            if n.is_subgroup_of(&found[i]) {
                continue;
            }
            let j = en.join(&found[i], n);
            if !found.contains(&j) {
                found.push(j);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    found
}

/// p-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut m = n;
    let mut part = 1;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    part
}

pub(crate) fn require_prime_divisor(order: u64, p: u64) -> Result<()> {
    if p < 2 || !crate::field::is_prime(p) || !order.is_multiple_of(p) {
        return Err(Error::PrimeNotDividing { p, order });
    }
    Ok(())
}
