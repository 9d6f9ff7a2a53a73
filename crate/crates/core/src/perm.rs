//! Permutations of strand positions.
//!
//! Positions are 1-based on the public surface and 0-based internally.
//! `image(j)` is the bottom position reached by the strand that enters at
//! top position `j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            map: (0..size).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::Invariant(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[img - 1] = true;
            map.push(img - 1);
        }
        Ok(Permutation { map })
    }

    pub(crate) fn from_zero_based(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { map }
    }

    /// Order-reversing permutation `j -> size + 1 - j`.
    pub fn reversal(size: usize) -> Self {
        Permutation {
            map: (0..size).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    /// 1-based image of the 1-based position `j`.
    pub fn image(&self, j: usize) -> usize {
        self.map[j - 1] + 1
    }

    /// All images, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `self` followed by `other`: the strand at top `j` ends at
    /// `other(self(j))`.
    pub fn then(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::StrandMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            map: self.map.iter().map(|&v| other.map[v]).collect(),
        })
    }

    /// Follows `self` with the transposition of positions `i` and `i + 1`
    /// (1-based `i`).
    pub(crate) fn swap_after(&mut self, i: usize) {
        for v in self.map.iter_mut() {
            if *v == i - 1 {
                *v = i;
            } else if *v == i {
                *v = i - 1;
            }
        }
    }

    /// Cycles as 1-based position lists. Each cycle starts at its least
    /// element and cycles are ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.map[j];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[2, 3]).is_err());
    }

    #[test]
    fn cycles_are_ordered_by_least_element() {
        let p = Permutation::from_images(&[3, 4, 1, 2, 5]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 3], vec![2, 4], vec![5]]);
        assert_eq!(p.to_string(), "(1 3)(2 4)");
    }

    #[test]
    fn inverse_and_then() {
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert!(p.then(&p.inverse()).unwrap().is_identity());
        let q = Permutation::from_images(&[1, 3, 2]).unwrap();
        // 1 -> 2 -> 3, 2 -> 3 -> 2, 3 -> 1 -> 1
        assert_eq!(p.then(&q).unwrap().images(), vec![3, 2, 1]);
    }

    #[test]
    fn swap_after_matches_then() {
        let mut p = Permutation::from_images(&[2, 3, 1]).unwrap();
        let t = Permutation::from_images(&[2, 1, 3]).unwrap();
        let expected = p.then(&t).unwrap();
        p.swap_after(1);
        assert_eq!(p, expected);
    }
}
