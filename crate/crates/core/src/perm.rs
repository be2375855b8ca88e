//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Points are 0-based internally. Text input and output use the familiar
//! 1-based disjoint cycle notation, e.g. `(1,2,3)(4,5)`; the identity is `()`.
//! Composition is left to right: `a * b` applies `a` first, then `b`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation given by its image array.
///
/// Two permutations of different stored degree compare equal when they agree
/// on every point (points beyond the stored degree are fixed).
#[derive(Clone)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image array is not a bijection of 1..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(cycles: &[Vec<u32>], degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let pu = p as usize;
                if pu >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {degree}",
                        p + 1
                    )));
                }
                if used[pu] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated",
                        p + 1
                    )));
                }
                used[pu] = true;
                images[pu] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based disjoint cycle notation on `degree` points.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let cycles: Vec<Vec<u32>> = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|p| p - 1).collect())
            .collect();
        Self::from_cycles(&cycles, degree)
    }

    /// Parses cycle notation, using the largest point mentioned as degree.
    pub fn parse_auto(text: &str) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        let cycles: Vec<Vec<u32>> = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|p| p - 1).collect())
            .collect();
        Self::from_cycles(&cycles, degree)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        match self.images.get(p as usize) {
            Some(&q) => q,
            None => p,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Pads with fixed points up to `degree` (never shrinks).
    pub fn extended(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        let start = images.len();
        if degree > start {
            images.extend(start as u32..degree as u32);
        }
        Permutation { images }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.degree().max(other.degree());
        let images = (0..n as u32).map(|i| other.apply(self.apply(i))).collect();
        Permutation { images }
    }

    /// Replaces `self` by `self * other`. Both must have the same degree.
    #[inline]
    pub(crate) fn mul_right(&mut self, other: &Permutation) {
        debug_assert_eq!(self.degree(), other.degree());
        for x in self.images.iter_mut() {
            *x = other.images[*x as usize];
        }
    }

    /// Replaces `self` by `other * self`. Both must have the same degree.
    #[inline]
    pub(crate) fn mul_left(&mut self, other: &Permutation) {
        debug_assert_eq!(self.degree(), other.degree());
        let images: Vec<u32> = other
            .images
            .iter()
            .map(|&x| self.images[x as usize])
            .collect();
        self.images = images;
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result.mul_right(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.compose(&sq);
            }
        }
        result
    }

    /// Conjugate `g^-1 * self * g`, the image of `self` under conjugation by `g`.
    pub fn conjugate(&self, g: &Permutation) -> Self {
        let n = self.degree().max(g.degree());
        let mut images = vec![0u32; n];
        for i in 0..n as u32 {
            images[g.apply(i) as usize] = g.apply(self.apply(i));
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Lengths of all cycles including fixed points, in ascending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    pub fn moved_points(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
            .collect()
    }

    pub fn nr_moved_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 != x)
            .count()
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn largest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .rev()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Is the permutation even? Fixed points do not matter.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }

    fn trimmed_len(&self) -> usize {
        self.largest_moved_point().map_or(0, |p| p as usize + 1)
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<u32>>> {
    let err = |msg: &str| Error::Parse(format!("bad permutation {text:?}: {msg}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty"));
    }
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body_end = match (rest.strip_prefix('('), rest.find(')')) {
            (Some(_), Some(close)) => close,
            _ => return Err(err("malformed cycle")),
        };
        let body = &rest[1..body_end];
        rest = &rest[body_end + 1..];
        if body.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for part in body.split(',') {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("malformed cycle"));
            }
            let value: u32 = part.parse().map_err(|_| err("point out of range"))?;
            if value == 0 {
                return Err(err("points are numbered from 1"));
            }
            cycle.push(value);
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        let n = self.degree().max(other.degree());
        (0..n as u32).all(|i| self.apply(i) == other.apply(i))
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images[..self.trimmed_len()].hash(state);
    }
}

impl Ord for Permutation {
    /// Lexicographic order of image arrays.
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.degree().max(other.degree());
        for i in 0..n as u32 {
            match self.apply(i).cmp(&other.apply(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        self.compose(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}
