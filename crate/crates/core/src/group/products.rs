//! Quotients by coset action, direct and semidirect products.

use super::{Elt, Enumeration, Group, Subgroup, IDENTITY};
use crate::error::{Error, Result};
use crate::perm::Permutation;

impl Group {
    /// `G/N` as a permutation group. The i-th generator of the result is the
    /// image of the i-th generator of `G`.
    ///
    /// Prefers the restriction of `G` to a union of its orbits whose kernel
    /// is exactly `N`; otherwise acts on the right cosets of `N`.
    pub fn quotient(&self, n: &Subgroup) -> Result<Group> {
        let en = self.enumeration()?;
        if !en.is_normal(n) {
            return Err(Error::NotNormal);
        }
        if n.is_trivial() {
            return Group::new(self.generators.clone());
        }
        if n.order() == self.order() {
            let id = Permutation::identity(1);
            return Group::new(vec![id; self.generators.len()]);
        }
        if let Some(points) = self.orbit_union_with_kernel(&en, n) {
            return self.restrict_to(&points);
        }
        self.coset_action(&en, n)
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                for g in &self.generators {
                    let y = g.apply(orbit[i]);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Smallest union of non-trivial orbits on which exactly `N` acts
    /// trivially.
    fn orbit_union_with_kernel(&self, en: &Enumeration, n: &Subgroup) -> Option<Vec<usize>> {
        let orbits: Vec<Vec<usize>> = self.orbits().into_iter().filter(|o| o.len() > 1).collect();
        if orbits.len() < 2 || orbits.len() > 8 {
            return None;
        }
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u32..(1 << orbits.len()) - 1 {
            let points: Vec<usize> = orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, o)| o.iter().copied())
                .collect();
            if best.as_ref().is_some_and(|b| b.len() <= points.len()) {
                continue;
            }
            // N must act trivially, and nothing outside N may
            let n_trivial = n
                .generators()
                .iter()
                .all(|&x| points.iter().all(|&pt| en.perm(x).apply(pt) == pt));
            if !n_trivial {
                continue;
            }
            let kernel = en
                .all()
                .filter(|&x| points.iter().all(|&pt| en.perm(x).apply(pt) == pt))
                .count();
            if kernel as u64 == n.order() {
                best = Some(points);
            }
        }
        best
    }

    fn restrict_to(&self, points: &[usize]) -> Result<Group> {
        let mut relabel = vec![usize::MAX; self.degree];
        for (i, &pt) in points.iter().enumerate() {
            relabel[pt] = i;
        }
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::from_images(points.iter().map(|&pt| relabel[g.apply(pt)]).collect()))
            .collect::<Result<Vec<_>>>()?;
        Group::new(gens)
    }

    fn coset_action(&self, en: &Enumeration, n: &Subgroup) -> Result<Group> {
        let mut coset_of = vec![u32::MAX; en.len()];
        let mut reps: Vec<Elt> = Vec::new();
        for x in en.all() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            for &m in n.elements() {
                coset_of[en.mul(m, x) as usize] = c;
            }
            reps.push(x);
        }
        let gens = en
            .generators()
            .iter()
            .map(|&g| {
                Permutation::from_images(
                    reps.iter()
                        .map(|&r| coset_of[en.mul(r, g) as usize] as usize)
                        .collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Group::new(gens)
    }

    /// `A x B` acting on the disjoint union of the two point sets; the
    /// generators of `A` come first.
    pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
        let (da, db) = (a.degree(), b.degree());
        let mut gens = Vec::new();
        for g in &a.generators {
            let images = g.images().chain(da..da + db).collect();
            gens.push(Permutation::from_images(images)?);
        }
        for g in &b.generators {
            let images = (0..da).chain(g.images().map(|x| x + da)).collect();
            gens.push(Permutation::from_images(images)?);
        }
        Group::new(gens)
    }

    /// `N ⋊ H`. `action[i]` lists the images of the generators of `N` under
    /// the automorphism induced by the i-th generator of `H` (conjugation by
    /// that generator realises the map).
    ///
    /// The result acts on the elements of `N` (right multiplication by `N`,
    /// automorphisms for `H`) together with the points of `H`. Generators of
    /// `N` come first, then those of `H`.
    pub fn semidirect_product(n: &Group, h: &Group, action: &[Vec<Permutation>]) -> Result<Group> {
        if action.len() != h.generators().len() {
            return Err(Error::NotAutomorphism(format!(
                "{} action entries for {} generators",
                action.len(),
                h.generators().len()
            )));
        }
        let en = n.enumeration()?;
        let size = en.len();
        let dh = h.degree();
        let mut gens = Vec::new();
        for &s in en.generators() {
            let images = (0..size as Elt)
                .map(|x| en.mul(x, s) as usize)
                .chain(size..size + dh)
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        for (hg, images) in h.generators().iter().zip(action) {
            let map = automorphism_map(&en, images)?;
            let images = map
                .into_iter()
                .map(|x| x as usize)
                .chain(hg.images().map(|x| x + size))
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        let g = Group::new(gens)?;
        let expected = n.order() * h.order();
        if g.order() != expected {
            return Err(Error::InconsistentAction {
                expected,
                got: g.order(),
            });
        }
        Ok(g)
    }
}

/// Extends generator images to a map on all elements, verifying that it is a
/// well-defined bijective homomorphism.
pub(crate) fn automorphism_map(en: &Enumeration, images: &[Permutation]) -> Result<Vec<Elt>> {
    let gens = en.generators();
    if images.len() != gens.len() {
        return Err(Error::NotAutomorphism(format!(
            "{} images for {} generators",
            images.len(),
            gens.len()
        )));
    }
    let img: Vec<Elt> = images
        .iter()
        .map(|p| {
            en.index_of(p)
                .ok_or_else(|| Error::NotAutomorphism(format!("{p} lies outside the group")))
        })
        .collect::<Result<_>>()?;
    let mut map = vec![u32::MAX; en.len()];
    map[IDENTITY as usize] = IDENTITY;
    let mut queue = vec![IDENTITY];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(&img) {
            let y = en.mul(x, s);
            let fy = en.mul(map[x as usize], t);
            if map[y as usize] == u32::MAX {
                map[y as usize] = fy;
                queue.push(y);
            } else if map[y as usize] != fy {
                return Err(Error::NotAutomorphism("images violate a relation".into()));
            }
        }
        i += 1;
    }
    let mut hit = vec![false; en.len()];
    for &y in &map {
        if hit[y as usize] {
            return Err(Error::NotAutomorphism("map is not injective".into()));
        }
        hit[y as usize] = true;
    }
    Ok(map)
}
