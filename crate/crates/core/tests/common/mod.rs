//! Brute-force oracles that only use generator images, never the
//! library's stabilizer chains or subgroup search.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use grpclass::classes::ClassId;
use grpclass::{Group, Permutation};

pub type Images = Vec<usize>;

/// `(order, orbit size, element-order histogram)` of one subgroup class.
pub type ClassSignature = (u64, u64, Vec<(u64, u64)>);

pub fn images(p: &Permutation) -> Images {
    p.images().collect()
}

/// `a` then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Images {
    a.iter().map(|&i| b[i]).collect()
}

pub fn inverse(a: &[usize]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// `g^-1 x g`.
pub fn conj(x: &[usize], g: &[usize]) -> Images {
    compose(&compose(&inverse(g), x), g)
}

/// Every element, by breadth-first search over right multiplication by
/// the generators.
pub fn elements(g: &Group) -> Vec<Images> {
    let gens: Vec<Images> = g.generators().iter().map(images).collect();
    let id: Images = (0..g.degree()).collect();
    let mut seen: HashSet<Images> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = compose(&x, s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out
}

pub fn element_order(x: &[usize]) -> u64 {
    let id: Images = (0..x.len()).collect();
    let mut y = x.to_vec();
    let mut n = 1;
    while y != id {
        y = compose(&y, x);
        n += 1;
    }
    n
}

/// A group of order at most 64 with its full multiplication table;
/// subgroups are bitmasks over element indices.
pub struct SmallGroup {
    pub elems: Vec<Images>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub orders: Vec<u64>,
}

impl SmallGroup {
    pub fn new(g: &Group) -> SmallGroup {
        let elems = elements(g);
        assert!(elems.len() <= 64, "oracle limited to order 64");
        let index: HashMap<&Images, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let inv = elems.iter().map(|a| index[&inverse(a)]).collect();
        let orders = elems.iter().map(|a| element_order(a)).collect();
        SmallGroup {
            elems,
            mul,
            inv,
            orders,
        }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&i| mask >> i & 1 == 1)
    }

    /// Smallest subset containing `mask` closed under multiplication.
    pub fn close(&self, mut mask: u64) -> u64 {
        loop {
            let mut next = mask;
            for a in self.members(mask) {
                for b in self.members(mask) {
                    next |= 1 << self.mul[a][b];
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    /// Every subgroup: start from the trivial one and keep adjoining single
    /// elements.
    pub fn all_subgroups(&self) -> Vec<u64> {
        let identity = (0..self.order())
            .find(|&i| self.mul[i][i] == i)
            .expect("identity");
        let trivial = 1u64 << identity;
        let mut seen = HashSet::from([trivial]);
        let mut queue = vec![trivial];
        while let Some(h) = queue.pop() {
            for x in 0..self.order() {
                if h >> x & 1 == 0 {
                    let k = self.close(h | 1 << x);
                    if seen.insert(k) {
                        queue.push(k);
                    }
                }
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort();
        out
    }

    pub fn conjugate(&self, mask: u64, g: usize) -> u64 {
        self.members(mask)
            .map(|h| 1u64 << self.mul[self.mul[self.inv[g]][h]][g])
            .fold(0, |a, b| a | b)
    }

    pub fn histogram(&self, mask: u64) -> Vec<(u64, u64)> {
        let mut h = BTreeMap::new();
        for i in self.members(mask) {
            *h.entry(self.orders[i]).or_insert(0) += 1;
        }
        h.into_iter().collect()
    }

    pub fn is_cyclic(&self, mask: u64) -> bool {
        let n = mask.count_ones() as u64;
        self.members(mask).any(|i| self.orders[i] == n)
    }

    pub fn is_abelian(&self, mask: u64) -> bool {
        self.members(mask)
            .all(|a| self.members(mask).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Nilpotent iff, for every prime, the elements of power-of-p order
    /// number exactly the p-part of the order.
    pub fn is_nilpotent(&self, mask: u64) -> bool {
        let n = mask.count_ones() as u64;
        primes(n).into_iter().all(|p| {
            let part = p_part(n, p);
            let count = self
                .members(mask)
                .filter(|&i| part.is_multiple_of(self.orders[i]))
                .count() as u64;
            count == part
        })
    }

    /// Conjugacy classes of subgroups: (representative, orbit size).
    pub fn subgroup_classes(&self) -> Vec<(u64, u64)> {
        let mut done = HashSet::new();
        let mut out = Vec::new();
        for h in self.all_subgroups() {
            if done.contains(&h) {
                continue;
            }
            let orbit: HashSet<u64> = (0..self.order()).map(|g| self.conjugate(h, g)).collect();
            out.push((h, orbit.len() as u64));
            done.extend(orbit);
        }
        out
    }

    /// Sorted `(order, orbit size, element-order histogram)` per class.
    pub fn class_signature(&self) -> Vec<ClassSignature> {
        let mut out: Vec<_> = self
            .subgroup_classes()
            .into_iter()
            .map(|(h, size)| (h.count_ones() as u64, size, self.histogram(h)))
            .collect();
        out.sort();
        out
    }

    /// Membership by definition: within each order, the subgroups of the
    /// class's kind form at most one conjugacy class. `None` for the
    /// supersolvable classes, which this oracle does not model.
    pub fn member(&self, c: ClassId) -> Option<bool> {
        let pi = c.is_pi();
        let keep = |h: u64| -> bool {
            let n = h.count_ones() as u64;
            if pi && primes(n).len() > 1 {
                return false;
            }
            match c {
                ClassId::B | ClassId::BPi | ClassId::NPi => true,
                ClassId::N => self.is_nilpotent(h),
                ClassId::A | ClassId::APi => self.is_abelian(h),
                ClassId::C | ClassId::CPi => self.is_cyclic(h),
                ClassId::H | ClassId::HPi => unreachable!(),
            }
        };
        if matches!(c, ClassId::H | ClassId::HPi) {
            return None;
        }
        let mut per_order: BTreeMap<u32, u32> = BTreeMap::new();
        for (h, _) in self.subgroup_classes() {
            if keep(h) {
                *per_order.entry(h.count_ones()).or_insert(0) += 1;
            }
        }
        Some(per_order.values().all(|&k| k == 1))
    }
}

pub fn primes(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Whether some element of `g` conjugates every element of `h` into `s`,
/// by trying every element. For sets of equal size this is conjugacy.
pub fn conjugates_into(g: &Group, h: &[Images], s: &[Images]) -> bool {
    let s: HashSet<&Images> = s.iter().collect();
    elements(g)
        .iter()
        .any(|t| h.iter().all(|x| s.contains(&conj(x, t))))
}

/// Elements of the subgroup generated by permutations in cycle text.
pub fn subgroup_from_text(gens: &[String], degree: usize) -> Vec<Images> {
    let gens: Vec<Images> = gens
        .iter()
        .map(|t| images(&Permutation::parse(t, degree).expect("witness generators parse")))
        .collect();
    generated(&gens, degree)
}

/// Compares the library's subgroup classes and verdicts for `g` with the
/// brute-force ones. `verdicts` may be partial.
pub fn compare_small(
    id: &str,
    g: &Group,
    verdicts: &BTreeMap<ClassId, grpclass::Verdict>,
) -> Result<(), String> {
    let sg = SmallGroup::new(g);
    let mut lib: Vec<ClassSignature> = grpclass::subgroups::all_subgroup_classes(g)
        .map_err(|e| format!("{id}: {e}"))?
        .into_iter()
        .map(|c| {
            let hist = c
                .fingerprint
                .element_orders
                .iter()
                .map(|&(o, k)| (o as u64, k as u64))
                .collect();
            (c.order(), c.orbit_size, hist)
        })
        .collect();
    lib.sort();
    let oracle = sg.class_signature();
    if lib != oracle {
        return Err(format!(
            "{id}: {} library classes vs {} brute-force classes",
            lib.len(),
            oracle.len()
        ));
    }
    for (&c, v) in verdicts {
        if let (Some(expected), true) = (sg.member(c), v.is_decided()) {
            if v.is_member() != expected {
                return Err(format!(
                    "{id}: {c} is {} but brute force says member = {expected}",
                    v.as_str()
                ));
            }
        }
    }
    Ok(())
}

/// The set generated by `gens` inside the symmetric group.
pub fn generated(gens: &[Images], degree: usize) -> Vec<Images> {
    let id: Images = (0..degree).collect();
    let mut seen: HashSet<Images> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = compose(&x, s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}
