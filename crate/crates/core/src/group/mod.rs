//! Permutation groups given by generators.
//!
//! Order and membership come from a stabilizer chain; everything that needs
//! explicit elements (subgroups, normalizers, quotients) goes through a
//! lazily built [`Enumeration`], refused above the enumeration cap.

mod chain;
pub mod enumeration;
mod products;
pub mod subgroup;

use std::sync::{Arc, OnceLock};

pub use enumeration::{Elt, Enumeration, IDENTITY};
pub use subgroup::{Subgroup, SubgroupFingerprint};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use chain::StabChain;

/// Default ceiling on the number of elements materialised for a group.
pub const DEFAULT_ENUMERATION_CAP: u64 = 200_000;

#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u64,
    enumeration_cap: u64,
    enumeration: OnceLock<Arc<Enumeration>>,
}

impl Group {
    pub fn new(generators: Vec<Permutation>) -> Result<Group> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidPermutation("empty generator list".into()))?;
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let chain = StabChain::build(degree, &generators);
        let order = chain.order()?;
        Ok(Group {
            degree,
            generators,
            chain,
            order,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            enumeration: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Group {
        Group::new(vec![Permutation::identity(degree)]).expect("identity generates")
    }

    pub fn with_enumeration_cap(mut self, cap: u64) -> Group {
        self.enumeration_cap = cap;
        self.enumeration = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    /// Lengths of the basic orbits; their product is the order.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn element_order(&self, g: &Permutation) -> Result<u64> {
        if !self.contains(g) {
            return Err(Error::NotMember);
        }
        Ok(g.order())
    }

    pub fn enumeration_cap(&self) -> u64 {
        self.enumeration_cap
    }

    /// The element list, built on first use.
    pub fn enumeration(&self) -> Result<Arc<Enumeration>> {
        if let Some(e) = self.enumeration.get() {
            return Ok(e.clone());
        }
        if self.order > self.enumeration_cap {
            return Err(Error::CapExceeded {
                what: "element enumeration",
                size: self.order,
                cap: self.enumeration_cap,
            });
        }
        let en = Arc::new(Enumeration::new(self.chain.elements(), &self.generators));
        Ok(self.enumeration.get_or_init(|| en).clone())
    }

    /// Smallest subgroup containing `seeds`.
    pub fn closure(&self, seeds: &[Permutation]) -> Result<Subgroup> {
        let en = self.enumeration()?;
        let idx = self.indices(&en, seeds)?;
        Ok(en.closure(&idx))
    }

    pub(crate) fn indices(&self, en: &Enumeration, perms: &[Permutation]) -> Result<Vec<Elt>> {
        perms
            .iter()
            .map(|p| en.index_of(p).ok_or(Error::NotMember))
            .collect()
    }

    pub fn whole(&self) -> Result<Subgroup> {
        Ok(self.enumeration()?.whole())
    }

    pub fn centralizer(&self, h: &Subgroup) -> Result<Subgroup> {
        let en = self.enumeration()?;
        Ok(en.centralizer_in(&en.whole(), h))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        let en = self.enumeration()?;
        Ok(en.normalizer_in(&en.whole(), h))
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.enumeration()?.is_normal(h))
    }

    pub fn center(&self) -> Result<Subgroup> {
        Ok(self.enumeration()?.center())
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a * b == b * a))
    }
}
