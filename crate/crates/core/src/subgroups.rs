//! Subgroups up to conjugacy.
//!
//! Classes are found by growing representatives and recording each new
//! subgroup's full conjugation orbit, keyed by sorted element sets. The
//! representative of a class is the lexicographically least element set in
//! its orbit.

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::group::{Elt, Enumeration, Group, Subgroup, SubgroupFingerprint, IDENTITY};
use crate::structure::{p_part, require_prime_divisor};

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupClass {
    #[serde(skip)]
    pub representative: Subgroup,
    pub orbit_size: u64,
    pub fingerprint: SubgroupFingerprint,
}

impl SubgroupClass {
    pub fn order(&self) -> u64 {
        self.representative.order()
    }

    /// Every member of the class.
    pub fn members(&self, en: &Enumeration) -> Vec<Subgroup> {
        let (orbit, _) = orbit(en, &self.representative);
        orbit
    }
}

/// Conjugation orbit of `h` (first element `h` itself) and the index of its
/// lexicographically least member.
fn orbit(en: &Enumeration, h: &Subgroup) -> (Vec<Subgroup>, usize) {
    let mut seen: FxHashMap<Vec<Elt>, ()> = FxHashMap::default();
    seen.insert(h.elements().to_vec(), ());
    let mut out = vec![h.clone()];
    let mut least = 0;
    let mut i = 0;
    while i < out.len() {
        for j in 0..en.generators().len() {
            let c = en.conjugate_by_generator(&out[i], j);
            if !seen.contains_key(c.elements()) {
                seen.insert(c.elements().to_vec(), ());
                if c.elements() < out[least].elements() {
                    least = out.len();
                }
                out.push(c);
            }
        }
        i += 1;
    }
    (out, least)
}

/// Registry of discovered classes with every orbit member keyed.
struct Registry<'a> {
    en: &'a Enumeration,
    keys: FxHashMap<Vec<Elt>, usize>,
    classes: Vec<SubgroupClass>,
    key_cap: u64,
}

impl<'a> Registry<'a> {
    fn new(en: &'a Enumeration, key_cap: u64) -> Self {
        Registry {
            en,
            keys: FxHashMap::default(),
            classes: Vec::new(),
            key_cap,
        }
    }

    /// Records `k`'s class if new; returns whether it was new.
    fn insert(&mut self, k: &Subgroup) -> Result<bool> {
        if self.keys.contains_key(k.elements()) {
            return Ok(false);
        }
        let (members, least) = orbit(self.en, k);
        let id = self.classes.len();
        let total = self.keys.len() as u64 + members.len() as u64;
        if total > self.key_cap {
            return Err(Error::CapExceeded {
                what: "conjugation orbit keys",
                size: total,
                cap: self.key_cap,
            });
        }
        let orbit_size = members.len() as u64;
        let representative = members[least].clone();
        for m in members {
            self.keys.insert(m.elements().to_vec(), id);
        }
        self.classes.push(SubgroupClass {
            fingerprint: representative.fingerprint(self.en),
            representative,
            orbit_size,
        });
        Ok(true)
    }

    fn finish(mut self) -> Vec<SubgroupClass> {
        self.classes.sort_by(|a, b| {
            (a.order(), a.representative.elements()).cmp(&(b.order(), b.representative.elements()))
        });
        self.classes
    }
}

/// Conjugacy classes of nontrivial `p`-subgroups, sorted by order and then
/// representative.
pub fn p_subgroup_classes(g: &Group, p: u64) -> Result<Vec<SubgroupClass>> {
    p_subgroup_classes_with(g, p, &Caps::default())
}

pub fn p_subgroup_classes_with(g: &Group, p: u64, caps: &Caps) -> Result<Vec<SubgroupClass>> {
    require_prime_divisor(g.order(), p)?;
    let sylow = p_part(g.order(), p);
    if sylow > caps.sylow_order {
        return Err(Error::CapExceeded {
            what: "Sylow subgroup order for p-subgroup enumeration",
            size: sylow,
            cap: caps.sylow_order,
        });
    }
    let en = g.enumeration()?;
    p_subgroup_classes_in(&en, p, caps.orbit_keys)
}

pub(crate) fn p_subgroup_classes_in(en: &Enumeration, p: u64, key_cap: u64) -> Result<Vec<SubgroupClass>> {
    let mut reg = Registry::new(en, key_cap);
    let whole = en.whole();
    let mut level: Vec<usize> = Vec::new();
    for x in en.all() {
        if en.element_order(x) as u64 == p {
            let c = en.closure(&[x]);
            if reg.insert(&c)? {
                level.push(reg.classes.len() - 1);
            }
        }
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for id in level {
            let h = reg.classes[id].representative.clone();
            let n = en.normalizer_in(&whole, &h);
            let mut covered = vec![false; en.len()];
            for &x in h.elements() {
                covered[x as usize] = true;
            }
            for &x in n.elements() {
                if covered[x as usize] || !h.contains(en.pow(x, p)) {
                    continue;
                }
                // every y in K \ H also gives K, so K's elements are done
                let k = en.extend(&h, &[x]);
                for &y in k.elements() {
                    covered[y as usize] = true;
                }
                if reg.insert(&k)? {
                    next.push(reg.classes.len() - 1);
                }
            }
        }
        level = next;
    }
    Ok(reg.finish())
}

/// Abelian subgroup classes: the abelian nontrivial `p`-subgroup classes
/// when `p` is given, otherwise every abelian subgroup class (including the
/// trivial one).
pub fn abelian_subgroup_classes(g: &Group, p: Option<u64>) -> Result<Vec<SubgroupClass>> {
    let en = g.enumeration()?;
    let classes = match p {
        Some(p) => p_subgroup_classes(g, p)?,
        None => all_subgroup_classes(g)?,
    };
    Ok(classes
        .into_iter()
        .filter(|c| c.representative.is_abelian(&en))
        .collect())
}

/// Every subgroup of `G` up to conjugacy (trivial and whole group
/// included), sorted by order and then representative.
///
/// Each representative `H` is extended by every cyclic subgroup of prime
/// power order not inside it. Every subgroup is generated by such cyclic
/// subgroups, and conjugating a chain of extensions stays within the
/// recorded classes, so the search is complete.
pub fn all_subgroup_classes(g: &Group) -> Result<Vec<SubgroupClass>> {
    all_subgroup_classes_with(g, &Caps::default())
}

pub fn all_subgroup_classes_with(g: &Group, caps: &Caps) -> Result<Vec<SubgroupClass>> {
    if g.order() > caps.full_subgroups {
        return Err(Error::CapExceeded {
            what: "full subgroup enumeration",
            size: g.order(),
            cap: caps.full_subgroups,
        });
    }
    let en = g.enumeration()?;
    all_subgroup_classes_in(&en, caps.orbit_keys)
}

pub(crate) fn all_subgroup_classes_in(en: &Enumeration, key_cap: u64) -> Result<Vec<SubgroupClass>> {
    let cyclic = prime_power_cyclic_subgroups(en);
    let mut reg = Registry::new(en, key_cap);
    reg.insert(&en.trivial())?;
    let mut i = 0;
    while i < reg.classes.len() {
        let h = reg.classes[i].representative.clone();
        if h.order() < en.order() {
            for z in &cyclic {
                if h.contains(z.generators()[0]) {
                    continue;
                }
                let k = en.extend(&h, z.generators());
                reg.insert(&k)?;
            }
        }
        i += 1;
    }
    Ok(reg.finish())
}

/// Distinct nontrivial cyclic subgroups of prime power order.
fn prime_power_cyclic_subgroups(en: &Enumeration) -> Vec<Subgroup> {
    let mut done = vec![false; en.len()];
    let mut out = Vec::new();
    for x in en.all() {
        let o = en.element_order(x) as u64;
        if x == IDENTITY || done[x as usize] || prime_power(o).is_none() {
            continue;
        }
        let c = en.closure(&[x]);
        for &y in c.elements() {
            if en.element_order(y) as u64 == o {
                done[y as usize] = true;
            }
        }
        out.push(c);
    }
    out
}

/// An element `g` with `g^-1 H g = K`, if one exists.
pub fn are_conjugate(g: &Group, h: &Subgroup, k: &Subgroup) -> Result<Option<Elt>> {
    let en = g.enumeration()?;
    Ok(conjugator_in(&en, h, k))
}

pub(crate) fn conjugator_in(en: &Enumeration, h: &Subgroup, k: &Subgroup) -> Option<Elt> {
    if h == k {
        return Some(IDENTITY);
    }
    if h.order() != k.order() || h.fingerprint(en) != k.fingerprint(en) {
        return None;
    }
    let mut seen: FxHashMap<Vec<Elt>, ()> = FxHashMap::default();
    seen.insert(h.elements().to_vec(), ());
    let mut queue = vec![(h.clone(), IDENTITY)];
    let mut i = 0;
    while i < queue.len() {
        for j in 0..en.generators().len() {
            let c = en.conjugate_by_generator(&queue[i].0, j);
            if seen.contains_key(c.elements()) {
                continue;
            }
            let t = en.mul(queue[i].1, en.generators()[j]);
            if c == *k {
                assert_eq!(en.conjugate_subgroup(h, t), *k, "conjugator verification");
                return Some(t);
            }
            seen.insert(c.elements().to_vec(), ());
            queue.push((c, t));
        }
        i += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn s4() -> Group {
        Group::new(vec![p("(1,2,3,4)", 4), p("(1,2)", 4)]).unwrap()
    }

    fn orders(classes: &[SubgroupClass]) -> Vec<u64> {
        classes.iter().map(|c| c.order()).collect()
    }

    #[test]
    fn cyclic_groups() {
        let c4 = Group::new(vec![p("(1,2,3,4)", 4)]).unwrap();
        assert_eq!(orders(&p_subgroup_classes(&c4, 2).unwrap()), vec![2, 4]);
        let c6 = Group::new(vec![p("(1,2,3,4,5,6)", 6)]).unwrap();
        assert_eq!(orders(&all_subgroup_classes(&c6).unwrap()), vec![1, 2, 3, 6]);
    }

    #[test]
    fn s4_two_subgroups() {
        let classes = p_subgroup_classes(&s4(), 2).unwrap();
        assert_eq!(orders(&classes), vec![2, 2, 4, 4, 4, 8]);
        let sizes: u64 = classes.iter().map(|c| c.orbit_size).sum();
        // 9 involutions' subgroups + 3 C4 + 1 + 3 V4 + 3 D8
        assert_eq!(sizes, 9 + 3 + 1 + 3 + 3);
    }

    #[test]
    fn q8_has_five_singleton_classes() {
        let q8 = Group::new(vec![p("(1,2,3,4)(5,6,7,8)", 8), p("(1,5,3,7)(2,8,4,6)", 8)]).unwrap();
        let classes = p_subgroup_classes(&q8, 2).unwrap();
        assert_eq!(orders(&classes), vec![2, 4, 4, 4, 8]);
        assert!(classes.iter().all(|c| c.orbit_size == 1));
        let abelian = abelian_subgroup_classes(&q8, Some(2)).unwrap();
        assert_eq!(orders(&abelian), vec![2, 4, 4, 4]);
    }

    #[test]
    fn elementary_abelian_eight() {
        let e8 = Group::new(vec![p("(1,2)", 6), p("(3,4)", 6), p("(5,6)", 6)]).unwrap();
        let classes = abelian_subgroup_classes(&e8, None).unwrap();
        assert_eq!(classes.len(), 16);
        assert_eq!(orders(&classes).iter().filter(|&&o| o == 2).count(), 7);
        assert_eq!(orders(&classes).iter().filter(|&&o| o == 4).count(), 7);
    }

    #[test]
    fn s3_and_a5() {
        let s3 = Group::new(vec![p("(1,2,3)", 3), p("(1,2)", 3)]).unwrap();
        let classes = all_subgroup_classes(&s3).unwrap();
        assert_eq!(classes.len(), 4);
        assert_eq!(classes.iter().map(|c| c.orbit_size).sum::<u64>(), 6);

        let a5 = Group::new(vec![p("(1,2,3)", 5), p("(1,2,3,4,5)", 5)]).unwrap();
        let classes = all_subgroup_classes(&a5).unwrap();
        assert_eq!(classes.len(), 9);
        assert_eq!(classes.iter().map(|c| c.orbit_size).sum::<u64>(), 59);
        let abelian = abelian_subgroup_classes(&a5, None).unwrap();
        assert_eq!(orders(&abelian), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn conjugacy() {
        let s3 = Group::new(vec![p("(1,2,3)", 3), p("(1,2)", 3)]).unwrap();
        let a = s3.closure(&[p("(1,2)", 3)]).unwrap();
        let b = s3.closure(&[p("(1,3)", 3)]).unwrap();
        let en = s3.enumeration().unwrap();
        let t = are_conjugate(&s3, &a, &b).unwrap().unwrap();
        assert_eq!(en.conjugate_subgroup(&a, t), b);
        assert_eq!(are_conjugate(&s3, &a, &a).unwrap(), Some(IDENTITY));
        assert!(are_conjugate(&s3, &b, &a).unwrap().is_some());

        let g = s4();
        let t = g.closure(&[p("(1,2)", 4)]).unwrap();
        let d = g.closure(&[p("(1,2)(3,4)", 4)]).unwrap();
        assert_eq!(are_conjugate(&g, &t, &d).unwrap(), None);
    }

    #[test]
    fn caps_refuse() {
        let caps = Caps {
            full_subgroups: 10,
            ..Caps::default()
        };
        assert!(all_subgroup_classes_with(&s4(), &caps).is_err());
        let caps = Caps {
            sylow_order: 4,
            ..Caps::default()
        };
        assert!(p_subgroup_classes_with(&s4(), 2, &caps).is_err());
    }
}
