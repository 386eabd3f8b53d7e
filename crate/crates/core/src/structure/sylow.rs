use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use super::{p_part, require_prime_divisor};
use crate::error::Result;
use crate::group::{Elt, Enumeration, Group, Subgroup};

/// A Sylow `p`-subgroup, grown from the trivial group by adjoining
/// `p`-elements of the normalizer.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    require_prime_divisor(g.order(), p)?;
    Ok(sylow_subgroup_in(&*g.enumeration()?, p))
}

/// As [`sylow_subgroup`], choosing each adjoined element at random.
pub fn sylow_subgroup_seeded(g: &Group, p: u64, seed: u64) -> Result<Subgroup> {
    require_prime_divisor(g.order(), p)?;
    let en = g.enumeration()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(grow(&en, p, |cands| *cands.choose(&mut rng).unwrap()))
}

pub fn sylow_subgroup_in(en: &Enumeration, p: u64) -> Subgroup {
    grow(en, p, |cands| cands[0])
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn grow(en: &Enumeration, p: u64, mut pick: impl FnMut(&[Elt]) -> Elt) -> Subgroup {
    let target = p_part(en.order(), p);
    let whole = en.whole();
    let mut h = en.trivial();
    while h.order() < target {
        let n = if h.is_trivial() {
            whole.clone()
        } else {
            en.normalizer_in(&whole, &h)
        };
        let cands: Vec<Elt> = n
            .elements()
            .iter()
            .copied()
            .filter(|&x| !h.contains(x) && is_p_power(en.element_order(x) as u64, p))
            .collect();
        // a proper p-subgroup of a Sylow P has N_P(H) > H, so cands is nonempty
        let x = pick(&cands);
        h = en.extend(&h, &[x]);
    }
    h
}

/// `O_p(G)`: the intersection of the Sylow `p`-subgroups.
pub fn core_p(g: &Group, p: u64) -> Result<Subgroup> {
    require_prime_divisor(g.order(), p)?;
    Ok(core_p_in(&*g.enumeration()?, p))
}

pub fn core_p_in(en: &Enumeration, p: u64) -> Subgroup {
    if !en.order().is_multiple_of(p) {
        return en.trivial();
    }
    let s = sylow_subgroup_in(en, p);
    let mut core: Vec<Elt> = s.elements().to_vec();
    let mut seen: FxHashSet<Vec<Elt>> = FxHashSet::default();
    seen.insert(s.elements().to_vec());
    let mut queue = vec![s];
    let mut i = 0;
    while i < queue.len() {
        for j in 0..en.generators().len() {
            let c = en.conjugate_by_generator(&queue[i], j);
            if seen.insert(c.elements().to_vec()) {
                core.retain(|&x| c.contains(x));
                queue.push(c);
            }
        }
        i += 1;
    }
    let gens = en.generators_for(&core);
    Subgroup::from_parts(core, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::structure::{sylow_shape, ShapeTag};

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn s4() -> Group {
        Group::new(vec![p("(1,2,3,4)", 4), p("(1,2)", 4)]).unwrap()
    }

    #[test]
    fn sylow_of_p_group_is_everything() {
        let d8 = Group::new(vec![p("(1,2,3,4)", 4), p("(1,3)", 4)]).unwrap();
        assert_eq!(sylow_subgroup(&d8, 2).unwrap().order(), 8);
        assert_eq!(core_p(&d8, 2).unwrap().order(), 8);
    }

    #[test]
    fn sylow_two_of_s4_is_dihedral() {
        let g = s4();
        let s = sylow_subgroup(&g, 2).unwrap();
        assert_eq!(s.order(), 8);
        assert_eq!(sylow_shape(&g, &s).unwrap().tag, ShapeTag::Dihedral(8));
        assert_eq!(sylow_subgroup(&g, 3).unwrap().order(), 3);
        assert!(sylow_subgroup(&g, 5).is_err());
    }

    #[test]
    fn o2_of_s4_is_v4() {
        let g = s4();
        let o = core_p(&g, 2).unwrap();
        assert_eq!(o.order(), 4);
        // intersect the three Sylow 2-subgroups directly
        let en = g.enumeration().unwrap();
        let s = sylow_subgroup(&g, 2).unwrap();
        let mut meet: Vec<Elt> = s.elements().to_vec();
        for x in en.all() {
            let c = en.conjugate_subgroup(&s, x);
            meet.retain(|&y| c.contains(y));
        }
        assert_eq!(o.elements(), &meet[..]);
    }

    #[test]
    fn o5_of_a5_is_trivial() {
        let a5 = Group::new(vec![p("(1,2,3)", 5), p("(1,2,3,4,5)", 5)]).unwrap();
        assert!(core_p(&a5, 5).unwrap().is_trivial());
    }

    #[test]
    fn seeded_rebuilds_have_full_order() {
        let g = s4();
        for seed in 0..5 {
            let s = sylow_subgroup_seeded(&g, 2, seed).unwrap();
            assert_eq!(s.order(), 8);
        }
    }
}
