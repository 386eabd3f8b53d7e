//! Explicit element lists with index-based arithmetic.
//!
//! Elements are sorted lexicographically by their image arrays, so index 0 is
//! always the identity. Groups up to [`TABLE_CAP`] elements carry a full
//! multiplication table; larger ones multiply permutations and look the
//! product up in a hash index.

use rustc_hash::FxHashMap;

use super::subgroup::Subgroup;
use crate::perm::Permutation;

/// Largest order for which a multiplication table is precomputed.
pub const TABLE_CAP: usize = 2600;

/// Index of an element in an [`Enumeration`].
pub type Elt = u32;

pub const IDENTITY: Elt = 0;

#[derive(Debug)]
pub struct Enumeration {
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, Elt>,
    table: Option<Vec<u16>>,
    inverse: Vec<Elt>,
    orders: Vec<u32>,
    generators: Vec<Elt>,
    /// `conj[i][x]` is `g_i^-1 x g_i` for the i-th group generator.
    conj: Vec<Vec<Elt>>,
}

impl Enumeration {
    pub(crate) fn new(mut elements: Vec<Permutation>, generators: &[Permutation]) -> Enumeration {
        elements.sort_unstable();
        elements.dedup();
        let n = elements.len();
        let mut index = FxHashMap::default();
        index.reserve(n);
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.clone(), i as Elt);
        }
        let table = (n <= TABLE_CAP).then(|| {
            let mut t = vec![0u16; n * n];
            for (i, a) in elements.iter().enumerate() {
                let row = &mut t[i * n..(i + 1) * n];
                for (j, b) in elements.iter().enumerate() {
                    row[j] = index[&a.compose_unchecked(b)] as u16;
                }
            }
            t
        });
        let inverse = elements.iter().map(|e| index[&e.inverse()]).collect();
        let orders = elements.iter().map(|e| e.order() as u32).collect();
        let generators: Vec<Elt> = generators.iter().map(|g| index[g]).collect();
        let mut en = Enumeration {
            elements,
            index,
            table,
            inverse,
            orders,
            generators: generators.clone(),
            conj: Vec::new(),
        };
        en.conj = generators
            .iter()
            .map(|&g| (0..n as Elt).map(|x| en.conj_slow(x, g)).collect())
            .collect();
        en
    }

    fn conj_slow(&self, x: Elt, g: Elt) -> Elt {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        match &self.table {
            Some(t) => t[a as usize * self.len() + b as usize] as Elt,
            None => {
                let p = self.elements[a as usize].compose_unchecked(&self.elements[b as usize]);
                self.index[&p]
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elt) -> Elt {
        self.inverse[a as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: Elt, g: Elt) -> Elt {
        self.mul(self.mul(self.inverse[g as usize], x), g)
    }

    /// Conjugate of `x` by the i-th group generator.
    #[inline]
    pub fn conj_gen(&self, x: Elt, i: usize) -> Elt {
        self.conj[i][x as usize]
    }

    pub fn commutator(&self, a: Elt, b: Elt) -> Elt {
        // a^-1 b^-1 a b
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elt, mut e: u64) -> Elt {
        let mut acc = IDENTITY;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn element_order(&self, a: Elt) -> u32 {
        self.orders[a as usize]
    }

    pub fn perm(&self, a: Elt) -> &Permutation {
        &self.elements[a as usize]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<Elt> {
        self.index.get(g).copied()
    }

    pub fn generators(&self) -> &[Elt] {
        &self.generators
    }

    pub fn all(&self) -> impl Iterator<Item = Elt> {
        0..self.len() as Elt
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts((0..self.len() as Elt).collect(), self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_parts(vec![IDENTITY], Vec::new())
    }

    /// `<H, gens>` by coset enumeration over right cosets of `H`.
    pub fn extend(&self, h: &Subgroup, gens: &[Elt]) -> Subgroup {
        let new: Vec<Elt> = gens.iter().copied().filter(|&g| !h.contains(g)).collect();
        if new.is_empty() {
            return h.clone();
        }
        let n = self.len();
        let mut member = vec![false; n];
        let mut elements = h.elements().to_vec();
        for &x in &elements {
            member[x as usize] = true;
        }
        let mut all_gens = h.generators().to_vec();
        for g in new {
            if !all_gens.contains(&g) {
                all_gens.push(g);
            }
        }
        let base = h.elements().to_vec();
        let mut reps = vec![IDENTITY];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &s in &all_gens {
                let y = self.mul(r, s);
                if !member[y as usize] {
                    for &b in &base {
                        let z = self.mul(b, y);
                        member[z as usize] = true;
                        elements.push(z);
                    }
                    reps.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        let gens = prune_generators(self, &all_gens, elements.len());
        Subgroup::from_parts(elements, gens)
    }

    pub fn closure(&self, gens: &[Elt]) -> Subgroup {
        self.extend(&self.trivial(), gens)
    }

    /// Image of `h` under conjugation by `g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elt) -> Subgroup {
        let mut els: Vec<Elt> = h.elements().iter().map(|&x| self.conj(x, g)).collect();
        els.sort_unstable();
        let gens = h.generators().iter().map(|&x| self.conj(x, g)).collect();
        Subgroup::from_parts(els, gens)
    }

    pub(crate) fn conjugate_by_generator(&self, h: &Subgroup, i: usize) -> Subgroup {
        let mut els: Vec<Elt> = h.elements().iter().map(|&x| self.conj_gen(x, i)).collect();
        els.sort_unstable();
        let gens = h.generators().iter().map(|&x| self.conj_gen(x, i)).collect();
        Subgroup::from_parts(els, gens)
    }

    /// Normal closure of `seeds` in the subgroup `ambient`.
    pub fn normal_closure(&self, ambient: &Subgroup, seeds: &[Elt]) -> Subgroup {
        let mut cur = self.closure(seeds);
        loop {
            let mut missing = Vec::new();
            for &a in ambient.generators() {
                for &s in cur.generators() {
                    let c = self.conj(s, a);
                    if !cur.contains(c) && !missing.contains(&c) {
                        missing.push(c);
                    }
                }
            }
            if missing.is_empty() {
                return cur;
            }
            cur = self.extend(&cur, &missing);
        }
    }

    /// Normal closure in the whole group of `seeds`, using the cached
    /// generator conjugation tables.
    pub fn normal_closure_in_group(&self, seeds: &[Elt]) -> Subgroup {
        let mut cur = self.closure(seeds);
        loop {
            let mut missing = Vec::new();
            for i in 0..self.generators.len() {
                for &s in cur.generators() {
                    let c = self.conj_gen(s, i);
                    if !cur.contains(c) && !missing.contains(&c) {
                        missing.push(c);
                    }
                }
            }
            if missing.is_empty() {
                return cur;
            }
            cur = self.extend(&cur, &missing);
        }
    }

    pub fn is_normal_in(&self, h: &Subgroup, ambient: &Subgroup) -> bool {
        ambient
            .generators()
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.generators.len()).all(|i| h.generators().iter().all(|&x| h.contains(self.conj_gen(x, i))))
    }

    /// `N_A(H)` for `H` inside the ambient subgroup `A`.
    pub fn normalizer_in(&self, ambient: &Subgroup, h: &Subgroup) -> Subgroup {
        let els: Vec<Elt> = ambient
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        let gens = self.generators_for(&els);
        Subgroup::from_parts(els, gens)
    }

    pub fn centralizer_in(&self, ambient: &Subgroup, h: &Subgroup) -> Subgroup {
        let els: Vec<Elt> = ambient
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.generators().iter().all(|&x| self.mul(x, g) == self.mul(g, x)))
            .collect();
        let gens = self.generators_for(&els);
        Subgroup::from_parts(els, gens)
    }

    /// Greedy small generating set for a sorted element set known to be a
    /// subgroup; prefers elements of large order.
    pub fn generators_for(&self, elements: &[Elt]) -> Vec<Elt> {
        let mut sorted: Vec<Elt> = elements.to_vec();
        sorted.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut cur = self.trivial();
        let mut gens = Vec::new();
        for x in sorted {
            if cur.order() as usize == elements.len() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.extend(&cur, &[x]);
            }
        }
        gens
    }

    /// Intersection of two subgroups.
    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let els: Vec<Elt> = a.elements().iter().copied().filter(|&x| b.contains(x)).collect();
        let gens = self.generators_for(&els);
        Subgroup::from_parts(els, gens)
    }

    /// Join `<A, B>`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.extend(a, b.generators())
    }

    /// Conjugacy classes of elements as sorted index lists, ordered by their
    /// least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elt>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n as Elt {
            if seen[x as usize] {
                continue;
            }
            seen[x as usize] = true;
            let mut class = vec![x];
            let mut i = 0;
            while i < class.len() {
                let y = class[i];
                for g in 0..self.generators.len() {
                    let z = self.conj_gen(y, g);
                    if !seen[z as usize] {
                        seen[z as usize] = true;
                        class.push(z);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            out.push(class);
        }
        out
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_in(&self.whole(), &self.whole())
    }
}

/// Drops redundant generators (keeps a generating subset of `gens`).
fn prune_generators(en: &Enumeration, gens: &[Elt], order: usize) -> Vec<Elt> {
    if gens.len() <= 2 {
        return gens.to_vec();
    }
    // Cheap pass: drop a generator when the others already reach full order.
    let mut kept = gens.to_vec();
    let mut i = 0;
    while i < kept.len() && kept.len() > 2 {
        let mut rest = kept.clone();
        rest.remove(i);
        if en.closure_size(&rest) == order {
            kept = rest;
        } else {
            i += 1;
        }
    }
    kept
}

impl Enumeration {
    fn closure_size(&self, gens: &[Elt]) -> usize {
        let n = self.len();
        let mut member = vec![false; n];
        member[IDENTITY as usize] = true;
        let mut queue = vec![IDENTITY];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        queue.len()
    }
}
