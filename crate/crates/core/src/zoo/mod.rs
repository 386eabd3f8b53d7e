//! Named groups: constructors, bundled datasets and the default corpus.
//!
//! Names follow the usual notation: `C12`, `E8` (elementary abelian of order
//! 8), `D10` (dihedral of order 10), `Q16`, `S5`, `A5`, `SL(2,7)`,
//! `PSL(2,8)`, the semidirect datasets such as `E25:SL(2,3)`, `M11`, and
//! direct products written `AxB`.

mod datasets;
mod file;
mod linear;

use std::fmt;
use std::str::FromStr;

pub use datasets::{semidirect, SEMIDIRECT_NAMES};
pub use file::{ingest, parse_group_file, write_group_file};
pub use linear::{on_projective_line, on_vectors, psl2_order, sl2_generators, sl2_order, SUPPORTED_Q};

use crate::error::{Error, Result};
use crate::field::{is_prime, prime_power};
use crate::group::Group;
use crate::perm::Permutation;

const M11: &str = include_str!("../../data/m11.grp");

/// Largest `n` for the symmetric and alternating constructors.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroupId {
    Cyclic(u64),
    ElementaryAbelian {
        p: u64,
        k: u32,
    },
    /// Dihedral group of the given order.
    Dihedral(u64),
    /// Generalized quaternion group of the given order (8 gives Q8).
    GeneralizedQuaternion(u64),
    Symmetric(usize),
    Alternating(usize),
    SL2(u64),
    PSL2(u64),
    Semidirect(String),
    Dataset(String),
    PGammaL2_32,
    Product(Box<NamedGroupId>, Box<NamedGroupId>),
}

impl NamedGroupId {
    /// Order from the closed form, without constructing the group.
    pub fn expected_order(&self) -> Option<u64> {
        use NamedGroupId::*;
        Some(match self {
            Cyclic(n) | Dihedral(n) | GeneralizedQuaternion(n) => *n,
            ElementaryAbelian { p, k } => p.pow(*k),
            Symmetric(n) => (1..=*n as u64).product(),
            Alternating(n) => ((1..=*n as u64).product::<u64>() / 2).max(1),
            SL2(q) => sl2_order(*q),
            PSL2(q) => psl2_order(*q),
            PGammaL2_32 => psl2_order(32) * 5,
            Product(a, b) => a.expected_order()? * b.expected_order()?,
            Semidirect(_) | Dataset(_) => return None,
        })
    }
}

impl fmt::Display for NamedGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGroupId::*;
        match self {
            Cyclic(n) => write!(f, "C{n}"),
            ElementaryAbelian { p, k } => write!(f, "E{}", p.pow(*k)),
            Dihedral(n) => write!(f, "D{n}"),
            GeneralizedQuaternion(n) => write!(f, "Q{n}"),
            Symmetric(n) => write!(f, "S{n}"),
            Alternating(n) => write!(f, "A{n}"),
            SL2(q) => write!(f, "SL(2,{q})"),
            PSL2(q) => write!(f, "PSL(2,{q})"),
            Semidirect(s) | Dataset(s) => f.write_str(s),
            PGammaL2_32 => f.write_str("PGammaL(2,32)"),
            Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for NamedGroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownName(s.to_string());
        if let Some(i) = top_level_x(s) {
            let a = s[..i].parse()?;
            let b = s[i + 1..].parse()?;
            return Ok(NamedGroupId::Product(Box::new(a), Box::new(b)));
        }
        if let Some(name) = SEMIDIRECT_NAMES.iter().find(|n| **n == s) {
            return Ok(NamedGroupId::Semidirect(name.to_string()));
        }
        if s == "M11" {
            return Ok(NamedGroupId::Dataset("M11".into()));
        }
        if s == "PGammaL(2,32)" {
            return Ok(NamedGroupId::PGammaL2_32);
        }
        for (prefix, psl) in [
            ("PSL(2,", true),
            ("PSL2(", true),
            ("SL(2,", false),
            ("SL2(", false),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let q: u64 = rest
                    .strip_suffix(')')
                    .and_then(|r| r.trim().parse().ok())
                    .ok_or_else(unknown)?;
                return Ok(if psl {
                    NamedGroupId::PSL2(q)
                } else {
                    NamedGroupId::SL2(q)
                });
            }
        }
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
        if let Some((base, exp)) = tail.split_once('^') {
            if head != "E" {
                return Err(unknown());
            }
            let p = base.parse().map_err(|_| unknown())?;
            let k = exp.parse().map_err(|_| unknown())?;
            return Ok(NamedGroupId::ElementaryAbelian { p, k });
        }
        let n: u64 = tail.parse().map_err(|_| unknown())?;
        Ok(match head {
            "C" => NamedGroupId::Cyclic(n),
            "E" => {
                let (p, k) = prime_power(n).ok_or_else(unknown)?;
                NamedGroupId::ElementaryAbelian { p, k }
            }
            "D" => NamedGroupId::Dihedral(n),
            "Q" => NamedGroupId::GeneralizedQuaternion(n),
            "S" => NamedGroupId::Symmetric(n as usize),
            "A" => NamedGroupId::Alternating(n as usize),
            _ => return Err(unknown()),
        })
    }
}

/// Position of an `x` separating direct factors, outside parentheses.
fn top_level_x(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

pub fn construct(id: &NamedGroupId) -> Result<Group> {
    use NamedGroupId::*;
    let g = match id {
        Cyclic(n) => cyclic(*n)?,
        ElementaryAbelian { p, k } => elementary_abelian(*p, *k)?,
        Dihedral(n) => dihedral(*n)?,
        GeneralizedQuaternion(n) => quaternion(*n)?,
        Symmetric(n) => symmetric(*n)?,
        Alternating(n) => alternating(*n)?,
        SL2(q) => linear::sl2(*q)?,
        PSL2(q) => linear::psl2(*q)?,
        Semidirect(name) => semidirect(name)?,
        Dataset(name) if name == "M11" => parse_group_file(M11)?,
        Dataset(name) => return Err(Error::UnknownName(name.clone())),
        PGammaL2_32 => linear::pgammal2_32()?,
        Product(a, b) => Group::direct_product(&construct(a)?, &construct(b)?)?,
    };
    if let Some(expected) = id.expected_order() {
        if g.order() != expected {
            return Err(Error::OrderMismatch {
                declared: expected,
                computed: g.order(),
            });
        }
    }
    Ok(g)
}

/// Parses `name` and constructs it.
pub fn by_name(name: &str) -> Result<Group> {
    construct(&name.parse()?)
}

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<Permutation> {
    Permutation::from_cycles(degree, &[points.into_iter().collect()])
}

fn check_size(n: u64, limit: u64, what: &str) -> Result<usize> {
    if n == 0 || n > limit {
        return Err(Error::Unsupported(format!("{what} {n}")));
    }
    Ok(n as usize)
}

pub fn cyclic(n: u64) -> Result<Group> {
    let n = check_size(n, 256, "cyclic order")?;
    Group::new(vec![cycle_on(n, 0..n)?])
}

pub fn elementary_abelian(p: u64, k: u32) -> Result<Group> {
    if !is_prime(p) || k == 0 || p * k as u64 > 256 {
        return Err(Error::Unsupported(format!("E({p}^{k})")));
    }
    let p = p as usize;
    let k = k as usize;
    let gens = (0..k)
        .map(|i| cycle_on(p * k, i * p..(i + 1) * p))
        .collect::<Result<Vec<_>>>()?;
    Group::new(gens)
}

/// Dihedral group of order `n` (symmetries of the regular `n/2`-gon).
pub fn dihedral(n: u64) -> Result<Group> {
    if n < 4 || n % 2 == 1 || n > 512 {
        return Err(Error::Unsupported(format!("dihedral order {n}")));
    }
    if n == 4 {
        return Group::new(vec![
            Permutation::parse("(1,2)(3,4)", 4)?,
            Permutation::parse("(1,3)(2,4)", 4)?,
        ]);
    }
    let m = (n / 2) as usize;
    let rotation = cycle_on(m, 0..m)?;
    let reflection = Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
    Group::new(vec![rotation, reflection])
}

/// Generalized quaternion group of order `n = 2^k`, `k >= 3`, in its regular
/// representation on the elements `a^i b^j`.
pub fn quaternion(n: u64) -> Result<Group> {
    match prime_power(n) {
        Some((2, k)) if (3..=7).contains(&k) => {}
        _ => return Err(Error::Unsupported(format!("quaternion order {n}"))),
    }
    let m = (n / 2) as usize;
    let idx = |i: usize, j: usize| i % m + m * j;
    // right multiplication by a and by b, using b a = a^-1 b and b^2 = a^(m/2)
    let a = (0..2 * m)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            if j == 0 {
                idx(i + 1, 0)
            } else {
                idx(i + m - 1, 1)
            }
        })
        .collect();
    let b = (0..2 * m)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            if j == 0 {
                idx(i, 1)
            } else {
                idx(i + m / 2, 0)
            }
        })
        .collect();
    Group::new(vec![Permutation::from_images(a)?, Permutation::from_images(b)?])
}

pub fn symmetric(n: usize) -> Result<Group> {
    check_size(n as u64, MAX_SYMMETRIC_DEGREE as u64, "symmetric degree")?;
    if n == 1 {
        return Ok(Group::trivial(1));
    }
    Group::new(vec![cycle_on(n, 0..n)?, cycle_on(n, [0, 1])?])
}

pub fn alternating(n: usize) -> Result<Group> {
    check_size(n as u64, MAX_SYMMETRIC_DEGREE as u64, "alternating degree")?;
    if n < 3 {
        return Ok(Group::trivial(n));
    }
    let gens = (0..n - 2)
        .map(|i| cycle_on(n, [i, i + 1, i + 2]))
        .collect::<Result<Vec<_>>>()?;
    Group::new(gens)
}

/// The groups analysed by default, in a fixed order.
pub fn default_corpus() -> Vec<NamedGroupId> {
    use NamedGroupId::*;
    let mut out: Vec<NamedGroupId> = (1..=32).map(Cyclic).collect();
    for p in [2, 3, 5] {
        for k in 2..=3 {
            out.push(ElementaryAbelian { p, k });
        }
    }
    out.extend((6..=32).step_by(2).map(Dihedral));
    out.extend([8, 16, 32].map(GeneralizedQuaternion));
    out.extend((2..=6).map(Symmetric));
    out.extend((3..=6).map(Alternating));
    for q in SUPPORTED_Q {
        out.push(SL2(q));
        out.push(PSL2(q));
    }
    out.extend(SEMIDIRECT_NAMES.iter().map(|s| Semidirect(s.to_string())));
    out.push(Dataset("M11".into()));
    for name in [
        "A4xC5",
        "SL(2,3)xC5",
        "S3xC5",
        "A5xC7",
        "SL(2,5)xC7",
        "E8:C7xC3",
        "Q8xC7",
        "C2xC3",
        "PSL(2,8)xC5",
    ] {
        out.push(name.parse().expect("corpus names parse"));
    }
    out
}
