use std::fmt;

use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::perm::Permutation;

/// A permutation braid: the positive braid in which every pair of strands
/// crosses at most once, determined by its permutation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleElement {
    perm: Permutation,
}

impl SimpleElement {
    pub fn identity(strands: usize) -> Self {
        SimpleElement {
            perm: Permutation::identity(strands),
        }
    }

    /// The half twist Δ.
    pub fn delta(strands: usize) -> Self {
        SimpleElement {
            perm: Permutation::reversal(strands),
        }
    }

    /// The generator σᵢ (1-based).
    pub fn generator(strands: usize, i: usize) -> Self {
        assert!(i >= 1 && i < strands, "generator {i} out of range");
        let mut perm = Permutation::identity(strands);
        perm.swap_after(i);
        SimpleElement { perm }
    }

    pub fn from_permutation(perm: Permutation) -> Self {
        SimpleElement { perm }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn strands(&self) -> usize {
        self.perm.size()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.size();
        self.perm
            .zero_based()
            .iter()
            .enumerate()
            .all(|(i, &v)| v == n - 1 - i)
    }

    /// Number of crossings, i.e. inversions of the permutation.
    pub fn length(&self) -> usize {
        let m = self.perm.zero_based();
        let mut count = 0;
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if m[i] > m[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True iff σᵢ is a left divisor (the strands entering at `i`, `i + 1`
    /// cross).
    pub fn starts_with(&self, i: usize) -> bool {
        let m = self.perm.zero_based();
        m[i - 1] > m[i]
    }

    /// True iff σᵢ is a right divisor (the strands leaving at `i`, `i + 1`
    /// have crossed).
    pub fn finishes_with(&self, i: usize) -> bool {
        let m = self.perm.zero_based();
        let (mut a, mut b) = (usize::MAX, usize::MAX);
        for (j, &v) in m.iter().enumerate() {
            if v == i - 1 {
                a = j;
            } else if v == i {
                b = j;
            }
        }
        a > b
    }

    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.strands())
            .filter(|&i| self.starts_with(i))
            .collect()
    }

    pub fn finishing_set(&self) -> Vec<usize> {
        (1..self.strands())
            .filter(|&i| self.finishes_with(i))
            .collect()
    }

    /// `self · σᵢ`; caller guarantees the product stays simple.
    pub(crate) fn push_right(&mut self, i: usize) {
        debug_assert!(!self.finishes_with(i));
        self.perm.swap_after(i);
    }

    /// `σᵢ⁻¹ · self`; caller guarantees `σᵢ` is a left divisor.
    pub(crate) fn pop_left(&mut self, i: usize) {
        debug_assert!(self.starts_with(i));
        let mut m = self.perm.zero_based().to_vec();
        m.swap(i - 1, i);
        self.perm = Permutation::from_zero_based(m);
    }

    /// Lexicographically least reduced word.
    pub fn spell(&self) -> Vec<i32> {
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(self.length());
        'outer: loop {
            for i in 1..rest.strands() {
                if rest.starts_with(i) {
                    out.push(i as i32);
                    rest.pop_left(i);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }

    pub fn to_word(&self) -> BraidWord {
        BraidWord::new(self.strands(), self.spell()).expect("spelling stays in range")
    }
}

/// Rewrites `(a, b)` in place into its left-weighted form with the same
/// product. Returns true if anything moved.
pub(crate) fn left_weight(a: &mut SimpleElement, b: &mut SimpleElement) -> bool {
    let mut moved = false;
    'outer: loop {
        for i in 1..a.strands() {
            if b.starts_with(i) && !a.finishes_with(i) {
                a.push_right(i);
                b.pop_left(i);
                moved = true;
                continue 'outer;
            }
        }
        return moved;
    }
}

impl fmt::Debug for SimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple{:?}", self.spell())
    }
}

impl Serialize for SimpleElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.spell().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_spelling_and_sets() {
        let d = SimpleElement::delta(4);
        assert!(d.is_delta());
        assert_eq!(d.length(), 6);
        assert_eq!(d.spell(), vec![1, 2, 1, 3, 2, 1]);
        assert_eq!(d.starting_set(), vec![1, 2, 3]);
        assert_eq!(d.finishing_set(), vec![1, 2, 3]);
    }

    #[test]
    fn generator_sets() {
        let s = SimpleElement::generator(3, 2);
        assert_eq!(s.starting_set(), vec![2]);
        assert_eq!(s.finishing_set(), vec![2]);
        assert_eq!(s.spell(), vec![2]);
    }

    #[test]
    fn starting_and_finishing_sets_differ() {
        // σ₁σ₂: starts with σ₁ only, ends with σ₂ only.
        let mut s = SimpleElement::generator(3, 1);
        s.push_right(2);
        assert_eq!(s.starting_set(), vec![1]);
        assert_eq!(s.finishing_set(), vec![2]);
        assert_eq!(s.spell(), vec![1, 2]);
    }

    #[test]
    fn left_weighting_moves_crossings_forward() {
        // σ₁ · σ₂σ₁ is not left-weighted: σ₂ can move into the first factor.
        let mut a = SimpleElement::generator(3, 1);
        let mut b = SimpleElement::generator(3, 2);
        b.push_right(1);
        assert!(left_weight(&mut a, &mut b));
        assert!(a.is_delta());
        assert!(b.is_identity());

        // σ₁ · σ₁ is already left-weighted.
        let mut a = SimpleElement::generator(3, 1);
        let mut b = SimpleElement::generator(3, 1);
        assert!(!left_weight(&mut a, &mut b));
    }
}
