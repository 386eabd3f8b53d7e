//! Stabilizer chains (base and strong generating set) via deterministic
//! Schreier–Sims.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    /// `transversal[x]` maps the base point to `x`, for `x` in the orbit.
    pub transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    /// Extends the orbit to closure under `gens`.
    fn close_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap() * g;
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
        if gens.is_empty() {
            return chain;
        }
        // initial base: every generator moves some base point
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = (0..degree).find(|&x| g.apply(x) != x).unwrap();
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for l in chain.levels.iter_mut() {
                l.gens.push((*g).clone());
                let fixes_base = g.apply(l.base) == l.base;
                if !fixes_base {
                    break;
                }
            }
        }
        for l in chain.levels.iter_mut() {
            l.close_orbit();
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            let level = &self.levels[li];
            let orbit = level.orbit.clone();
            let gens = level.gens.clone();
            for &x in &orbit {
                let ux = self.levels[li].transversal[x].clone().unwrap();
                for s in &gens {
                    let y = s.apply(x);
                    let uy = self.levels[li].transversal[y].as_ref().unwrap();
                    // Schreier generator u_x s u_y^-1 fixes the base point
                    let sg = &(&ux * s) * &uy.inverse();
                    if sg.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip_from(sg, li + 1);
                    if h.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let b = (0..self.degree).find(|&x| h.apply(x) != x).unwrap();
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in li + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].close_orbit();
                    }
                    i = j as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed all levels).
    fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (j, l) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(l.base);
            match &l.transversal[x] {
                None => return (g, j),
                Some(u) => g = &g * &u.inverse(),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip_from(g.clone(), 0).0.is_identity()
    }

    pub fn order(&self) -> Result<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64).ok_or(Error::OrderOverflow)
        })
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Every element, as products `t_{k-1} ... t_1 t_0` of transversal
    /// elements (unsorted).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * l.orbit.len());
            for h in &out {
                for &x in &l.orbit {
                    next.push(h * l.transversal[x].as_ref().unwrap());
                }
            }
            out = next;
        }
        out
    }
}
