//! Bundled semidirect products `E_{p^k} ⋊ H` with `H` a matrix group acting
//! on row vectors, plus `Q8 ⋊ C3`.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// Matrices are row-major over GF(p); a vector `x` maps to `x M`.
struct LinearDataset {
    name: &'static str,
    p: u64,
    k: usize,
    matrices: &'static [&'static [&'static [u32]]],
    order: u64,
    /// Whether H acts fixed-point-freely on the nonzero vectors.
    frobenius: bool,
}

const LINEAR: &[LinearDataset] = &[
    LinearDataset {
        name: "E4:C3",
        p: 2,
        k: 2,
        matrices: &[&[&[0, 1], &[1, 1]]],
        order: 12,
        frobenius: true,
    },
    LinearDataset {
        name: "E8:C7",
        p: 2,
        k: 3,
        // multiplication by x in GF(8) = GF(2)[x]/(x^3+x+1)
        matrices: &[&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]],
        order: 56,
        frobenius: true,
    },
    LinearDataset {
        name: "E8:(C7:C3)",
        p: 2,
        k: 3,
        // multiplication by x, and the Frobenius squaring map
        matrices: &[
            &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]],
            &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 1]],
        ],
        order: 168,
        frobenius: false,
    },
    LinearDataset {
        name: "E32:(C31:C5)",
        p: 2,
        k: 5,
        // GF(32) = GF(2)[x]/(x^5+x^2+1): multiplication by x and squaring
        matrices: &[
            &[
                &[0, 1, 0, 0, 0],
                &[0, 0, 1, 0, 0],
                &[0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 1],
                &[1, 0, 1, 0, 0],
            ],
            &[
                &[1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1],
                &[0, 1, 0, 1, 0],
                &[1, 0, 1, 1, 0],
            ],
        ],
        order: 4960,
        frobenius: false,
    },
    LinearDataset {
        name: "E25:SL(2,3)",
        p: 5,
        k: 2,
        // SL(2,3) inside SL(2,5): an element of order 4 and one of order 3
        matrices: &[&[&[0, 1], &[4, 0]], &[&[1, 1], &[2, 3]]],
        order: 600,
        frobenius: true,
    },
    LinearDataset {
        name: "E9:C8",
        p: 3,
        k: 2,
        // multiplication by a primitive x in GF(9) = GF(3)[x]/(x^2+x+2)
        matrices: &[&[&[0, 1], &[1, 2]]],
        order: 72,
        frobenius: true,
    },
];

pub const SEMIDIRECT_NAMES: [&str; 7] = [
    "E4:C3",
    "E8:C7",
    "E8:(C7:C3)",
    "E32:(C31:C5)",
    "E25:SL(2,3)",
    "Q8:C3",
    "E9:C8",
];

pub fn semidirect(name: &str) -> Result<Group> {
    if name == "Q8:C3" {
        return q8_c3();
    }
    let d = LINEAR
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let g = linear(d)?;
    if g.order() != d.order {
        return Err(Error::OrderMismatch {
            declared: d.order,
            computed: g.order(),
        });
    }
    Ok(g)
}

fn vec_index(v: &[u64], p: u64) -> usize {
    v.iter().fold(0u64, |acc, &x| acc * p + x) as usize
}

fn vec_of(mut i: usize, p: u64, k: usize) -> Vec<u64> {
    let mut v = vec![0; k];
    for slot in v.iter_mut().rev() {
        *slot = i as u64 % p;
        i /= p as usize;
    }
    v
}

fn act(v: &[u64], m: &[&[u32]], p: u64) -> Vec<u64> {
    let k = v.len();
    (0..k)
        .map(|j| (0..k).map(|i| v[i] * m[i][j] as u64).sum::<u64>() % p)
        .collect()
}

fn linear(d: &LinearDataset) -> Result<Group> {
    let (p, k) = (d.p, d.k);
    let size = (p as usize).pow(k as u32);
    // H on the nonzero vectors
    let h_gens = d
        .matrices
        .iter()
        .map(|m| {
            let images = (1..size)
                .map(|i| vec_index(&act(&vec_of(i, p, k), m, p), p) - 1)
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let h = Group::new(h_gens)?;
    if d.frobenius {
        check_fixed_point_free(&h)?;
    }
    // N = E_{p^k} as k disjoint p-cycles; vector v is prod e_j^{v_j}
    let pu = p as usize;
    let basis: Vec<Permutation> = (0..k)
        .map(|i| Permutation::from_cycles(pu * k, &[(i * pu..(i + 1) * pu).collect()]))
        .collect::<Result<_>>()?;
    let element = |v: &[u64]| {
        v.iter()
            .zip(&basis)
            .fold(Permutation::identity(pu * k), |acc, (&c, e)| {
                &acc * &e.pow(c as i64)
            })
    };
    let n = Group::new(basis.clone())?;
    let action: Vec<Vec<Permutation>> = d
        .matrices
        .iter()
        .map(|m| {
            (0..k)
                .map(|i| element(m[i].iter().map(|&x| x as u64).collect::<Vec<_>>().as_slice()))
                .collect()
        })
        .collect();
    Group::semidirect_product(&n, &h, &action)
}

/// Faithful by construction (H is its own permutation image); fixed point
/// freeness means no nonidentity element fixes a nonzero vector.
fn check_fixed_point_free(h: &Group) -> Result<()> {
    let en = h.enumeration()?;
    for x in en.all().skip(1) {
        if let Some(pt) = (0..h.degree()).find(|&pt| en.perm(x).apply(pt) == pt) {
            return Err(Error::NotAutomorphism(format!(
                "{} fixes vector {}",
                en.perm(x),
                pt + 1
            )));
        }
    }
    Ok(())
}

fn q8_c3() -> Result<Group> {
    let i = Permutation::parse("(1,2,3,4)(5,6,7,8)", 8)?;
    let j = Permutation::parse("(1,5,3,7)(2,8,4,6)", 8)?;
    let k = &i * &j;
    let n = Group::new(vec![i, j.clone()])?;
    let h = Group::new(vec![Permutation::parse("(1,2,3)", 3)?])?;
    // i -> j -> ij
    Group::semidirect_product(&n, &h, &[vec![j, k]])
}
