use std::hash::{Hash, Hasher};

use serde::Serialize;

use super::enumeration::{Elt, Enumeration};
use super::Group;
use crate::perm::Permutation;

/// A subgroup of an enumerated group, stored as its sorted element indices
/// plus a generating set. Equality and hashing use the element set only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<Elt>,
    generators: Vec<Elt>,
}

impl Subgroup {
    pub(crate) fn from_parts(elements: Vec<Elt>, generators: Vec<Elt>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements, generators }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Elt] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elt] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, x: Elt) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.len() <= other.elements.len() && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self, en: &Enumeration) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| en.mul(a, b) == en.mul(b, a)))
    }

    pub fn is_cyclic(&self, en: &Enumeration) -> bool {
        let n = self.order() as u32;
        self.elements.iter().any(|&x| en.element_order(x) == n)
    }

    /// Sorted multiset of element orders.
    pub fn element_orders(&self, en: &Enumeration) -> Vec<u32> {
        let mut v: Vec<u32> = self.elements.iter().map(|&x| en.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn fingerprint(&self, en: &Enumeration) -> SubgroupFingerprint {
        let mut histogram: Vec<(u32, u32)> = Vec::new();
        for o in self.element_orders(en) {
            match histogram.last_mut() {
                Some((k, c)) if *k == o => *c += 1,
                _ => histogram.push((o, 1)),
            }
        }
        SubgroupFingerprint {
            order: self.order(),
            element_orders: histogram,
            abelian: self.is_abelian(en),
        }
    }

    pub fn permutations<'a>(&'a self, en: &'a Enumeration) -> impl Iterator<Item = &'a Permutation> {
        self.elements.iter().map(move |&x| en.perm(x))
    }

    pub fn generator_permutations(&self, en: &Enumeration) -> Vec<Permutation> {
        self.generators.iter().map(|&x| en.perm(x).clone()).collect()
    }

    /// The subgroup as a standalone permutation group of the parent degree.
    pub fn to_group(&self, parent: &Group) -> Group {
        let en = parent.enumeration().expect("subgroup of an enumerated group");
        let gens = self.generator_permutations(&en);
        if gens.is_empty() {
            Group::trivial(parent.degree())
        } else {
            Group::new(gens).expect("generators share the parent degree")
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

/// Conjugation-invariant summary of a subgroup: order, histogram of element
/// orders as (order, count) pairs, and commutativity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubgroupFingerprint {
    pub order: u64,
    pub element_orders: Vec<(u32, u32)>,
    pub abelian: bool,
}
