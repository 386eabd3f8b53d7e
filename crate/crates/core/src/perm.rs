//! Permutations of a finite point set.
//!
//! Points are stored 0-based; the cycle text form is 1-based, e.g.
//! `(1,2,3)(4,5)`, with `()` for the identity. Composition is left-to-right:
//! `f * g` first applies `f`, then `g`, so `(f * g)(i) = g(f(i))`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest degree accepted from text input (cycle notation and group files).
pub const MAX_INPUT_DEGREE: usize = 256;

/// Largest degree of any permutation built internally (coset actions of
/// quotients may exceed [`MAX_INPUT_DEGREE`]).
pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&degree), "degree out of range");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeCap {
                degree: n,
                cap: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "images are not a bijection on {n} points"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("point 0 in 1-based images".into()));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {degree}",
                        a + 1
                    )));
                }
                if used[a] {
                    return Err(Error::InvalidPermutation(format!("point {} repeated", a + 1)));
                }
                used[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Left-to-right product: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&sq);
            }
            sq = sq.compose_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g^-1 f g)(g(i)) = g(f(i))
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)` for the given degree.
    /// Whitespace is ignored everywhere.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 || degree > MAX_INPUT_DEGREE {
            return Err(Error::DegreeCap {
                degree,
                cap: MAX_INPUT_DEGREE,
            });
        }
        let bad = |m: String| Error::Parse { line: 1, message: m };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty permutation".into()));
        }
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| bad(format!("expected '(' at {rest:?}")))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle".into()))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in inner.split(',') {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad(format!("invalid point {tok:?}")));
                }
                let point: usize = tok.parse().map_err(|_| bad(format!("invalid point {tok:?}")))?;
                if point == 0 || point > degree {
                    return Err(bad(format!("point {point} outside 1..{degree}")));
                }
                cycle.push(point - 1);
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(degree, &cycles).map_err(|e| bad(e.to_string()))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Left-to-right composition; panics on degree mismatch.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
