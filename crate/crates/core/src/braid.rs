//! Braid words in the Artin generators and strand tracking.
//!
//! A letter `+i` is the positive crossing σᵢ of the strands at positions
//! `i` and `i + 1`, a letter `-i` is its inverse. Words are read left to
//! right, top to bottom; [`BraidWord::concat`] stacks its left operand
//! above its right one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// One crossing met while following a strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingEvent {
    /// 0-based index of the letter in the word.
    pub letter_index: usize,
    /// Top position of the other strand in the crossing.
    pub partner: usize,
    /// `+1` or `-1`.
    pub sign: i8,
}

/// Path of a single strand through a word, without closing it up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandTrace {
    pub start_position: usize,
    /// Position at every letter boundary; `positions[0]` is the start and
    /// the last entry is the bottom position.
    pub positions: Vec<usize>,
    pub crossing_events: Vec<CrossingEvent>,
}

impl StrandTrace {
    pub fn end_position(&self) -> usize {
        *self.positions.last().expect("trace always has a start")
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands {
                required: 1,
                strands,
            });
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands)
        {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// `(σ_from σ_{from+1} ⋯ σ_to)^power`, or the descending product when
    /// `from > to`. Generators are 1-based.
    pub fn run(strands: usize, from: usize, to: usize, power: usize) -> Result<Self> {
        let one: Vec<i32> = if from <= to {
            (from..=to).map(|i| i as i32).collect()
        } else {
            (to..=from).rev().map(|i| i as i32).collect()
        };
        let letters = one
            .iter()
            .copied()
            .cycle()
            .take(one.len() * power)
            .collect();
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&g| g > 0)
    }

    /// Errors with the first non-positive letter.
    pub fn require_positive(&self) -> Result<()> {
        match self.letters.iter().position(|&g| g < 0) {
            None => Ok(()),
            Some(index) => Err(Error::NotPositive {
                letter: self.letters[index],
                index,
            }),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Concatenation of `power` copies of `self`.
    pub fn pow(&self, power: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .copied()
                .cycle()
                .take(self.letters.len() * power)
                .collect(),
        }
    }

    /// The same letters read backwards. Reversal is an anti-automorphism of
    /// the positive monoid.
    pub fn reversed(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Embeds the word on the first `self.strands()` of `strands` strands.
    pub fn embed(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::TooFewStrands {
                required: self.strands,
                strands,
            });
        }
        Ok(BraidWord {
            strands,
            letters: self.letters.clone(),
        })
    }

    /// Word moved by cyclic rotation: the first `shift` letters go to the end.
    pub fn rotate(&self, shift: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let s = shift % letters.len();
            letters.rotate_left(s);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// True iff every crossing happens among strands `1..=q`.
    pub fn span_within(&self, q: usize) -> Result<bool> {
        if q == 0 || q > self.strands {
            return Err(Error::PositionOutOfRange {
                position: q,
                strands: self.strands,
            });
        }
        Ok(self.letters.iter().all(|g| (g.unsigned_abs() as usize) < q))
    }

    /// Underlying permutation; the sign of each letter is ignored.
    pub fn permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for &g in &self.letters {
            perm.swap_after(g.unsigned_abs() as usize);
        }
        perm
    }

    pub fn trace_strand(&self, start: usize) -> Result<StrandTrace> {
        if start == 0 || start > self.strands {
            return Err(Error::PositionOutOfRange {
                position: start,
                strands: self.strands,
            });
        }
        // occupant[pos] = top position of the strand now at `pos` (0-based).
        let mut occupant: Vec<usize> = (1..=self.strands).collect();
        let mut pos = start - 1;
        let mut positions = Vec::with_capacity(self.letters.len() + 1);
        let mut crossing_events = Vec::new();
        positions.push(start);
        for (letter_index, &g) in self.letters.iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            if pos == i || pos == i + 1 {
                let other = if pos == i { i + 1 } else { i };
                crossing_events.push(CrossingEvent {
                    letter_index,
                    partner: occupant[other],
                    sign: g.signum() as i8,
                });
                pos = other;
            }
            occupant.swap(i, i + 1);
            positions.push(pos + 1);
        }
        Ok(StrandTrace {
            start_position: start,
            positions,
            crossing_events,
        })
    }
}

/// `(Δ²_p)^k` spelled as `(σ₁⋯σ_{p−1})^{pk}`.
pub fn full_twist(strands: usize, k: usize) -> Result<BraidWord> {
    if k == 0 {
        if strands == 0 {
            return Err(Error::TooFewStrands {
                required: 1,
                strands,
            });
        }
        return Ok(BraidWord::identity(strands));
    }
    if strands < 2 {
        return Err(Error::TooFewStrands {
            required: 2,
            strands,
        });
    }
    BraidWord::run(strands, 1, strands - 1, strands * k)
}

/// Parses `"<p>: g1 g2 … gn"`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (head, body) = text.split_once(':').ok_or_else(|| Error::Parse {
        position: 0,
        message: "missing ':' after strand count".into(),
    })?;
    let head = head.trim();
    if head.is_empty() || !head.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            position: 0,
            message: format!("strand count {head:?} is not a positive decimal integer"),
        });
    }
    let strands: usize = head.parse().map_err(|_| Error::Parse {
        position: 0,
        message: format!("strand count {head:?} is too large"),
    })?;
    if strands == 0 {
        return Err(Error::Parse {
            position: 0,
            message: "strand count must be positive".into(),
        });
    }
    let mut letters = Vec::new();
    for (idx, tok) in body.split_whitespace().enumerate() {
        let position = idx + 1;
        let g: i32 = tok.parse().map_err(|_| Error::Parse {
            position,
            message: format!("{tok:?} is not an integer"),
        })?;
        if g == 0 {
            return Err(Error::Parse {
                position,
                message: "letter 0 is not a generator".into(),
            });
        }
        if g.unsigned_abs() as usize >= strands {
            return Err(Error::Parse {
                position,
                message: format!("letter {g} out of range for {strands} strands"),
            });
        }
        letters.push(g);
    }
    Ok(BraidWord { strands, letters })
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    /// Position-swap simulation, kept apart from `permutation()`.
    fn simulate(word: &BraidWord) -> Vec<usize> {
        let mut at: Vec<usize> = (1..=word.strands()).collect(); // at[pos] = strand
        for &g in word.letters() {
            let i = g.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut images = vec![0; word.strands()];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand - 1] = pos + 1;
        }
        images
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_braid("3: 1 2 1 2 1 2").unwrap(),
            w(3, &[1, 2, 1, 2, 1, 2])
        );
        assert_eq!(parse_braid("2: 1 1").unwrap(), w(2, &[1, 1]));
        assert_eq!(parse_braid("3:").unwrap(), BraidWord::identity(3));
        assert_eq!(parse_braid("  4 :   -3   1 ").unwrap(), w(4, &[-3, 1]));
    }

    #[test]
    fn parse_errors_carry_token_position() {
        match parse_braid("3: 1 3 1") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_braid("3: 1 x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_braid("3: 0") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("unexpected {other:?}"),
        }
        for bad in ["1 2 3", "x: 1", ": 1", "0:", "-3: 1"] {
            assert!(
                matches!(parse_braid(bad), Err(Error::Parse { position: 0, .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn display_round_trips() {
        let b = w(5, &[1, -4, 2]);
        assert_eq!(b.to_string(), "5: 1 -4 2");
        assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn permutation_examples() {
        assert!(w(3, &[1, 2, 1, 2, 1, 2]).permutation().is_identity());
        assert_eq!(w(2, &[1]).permutation().images(), vec![2, 1]);
        let b = w(4, &[1, 2, 3]);
        let expected = simulate(&b);
        assert_eq!(expected, vec![4, 1, 2, 3]);
        assert_eq!(b.permutation().images(), expected);
        // sign is ignored
        assert_eq!(w(4, &[-1, 2, -3]).permutation().images(), expected);
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w(3, &[1]).concat(&w(3, &[2])).unwrap(), w(3, &[1, 2]));
        assert_eq!(
            BraidWord::identity(2).concat(&w(2, &[1, 1])).unwrap(),
            w(2, &[1, 1])
        );
        assert_eq!(
            w(4, &[1]).concat(&w(3, &[1])),
            Err(Error::StrandMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn full_twist_examples() {
        assert_eq!(full_twist(3, 1).unwrap(), w(3, &[1, 2, 1, 2, 1, 2]));
        assert_eq!(full_twist(5, 0).unwrap(), BraidWord::identity(5));
        assert_eq!(full_twist(2, 3).unwrap(), w(2, &[1; 6]));
        assert!(full_twist(1, 1).is_err());
        assert_eq!(full_twist(1, 0).unwrap(), BraidWord::identity(1));
        assert_eq!(full_twist(6, 2).unwrap().len(), 2 * 6 * 5);
    }

    #[test]
    fn positivity_and_span() {
        assert!(w(3, &[1, 2, 1]).is_positive());
        assert!(!w(3, &[1, -2]).is_positive());
        assert!(BraidWord::identity(3).is_positive());
        assert!(w(3, &[1, 1]).span_within(2).unwrap());
        assert!(!w(3, &[1, 2]).span_within(2).unwrap());
        assert!(BraidWord::identity(1).span_within(1).unwrap());
        assert!(w(3, &[1]).span_within(0).is_err());
        assert!(w(3, &[1]).span_within(4).is_err());
    }

    #[test]
    fn new_validates_letters() {
        assert!(BraidWord::new(1, vec![1]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(3, vec![-3]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn trace_examples() {
        let t = w(2, &[1]).trace_strand(1).unwrap();
        assert_eq!(t.positions, vec![1, 2]);
        assert_eq!(
            t.crossing_events,
            vec![CrossingEvent {
                letter_index: 0,
                partner: 2,
                sign: 1
            }]
        );
        let t = full_twist(3, 1).unwrap().trace_strand(3).unwrap();
        assert_eq!(t.end_position(), 3);
        assert_eq!(t.crossing_events.len(), 4);
        assert!(w(3, &[1]).trace_strand(0).is_err());
        assert!(w(3, &[1]).trace_strand(4).is_err());
    }

    #[test]
    fn trace_records_negative_signs_and_partners() {
        let t = w(3, &[-1, 2, 1]).trace_strand(1).unwrap();
        assert_eq!(t.positions, vec![1, 2, 3, 3]);
        let partners: Vec<_> = t
            .crossing_events
            .iter()
            .map(|e| (e.partner, e.sign))
            .collect();
        assert_eq!(partners, vec![(2, -1), (3, 1)]);
    }

    #[test]
    fn run_builds_ascending_and_descending_products() {
        assert_eq!(
            BraidWord::run(4, 1, 3, 2).unwrap(),
            w(4, &[1, 2, 3, 1, 2, 3])
        );
        assert_eq!(BraidWord::run(4, 3, 2, 1).unwrap(), w(4, &[3, 2]));
        assert!(BraidWord::run(3, 1, 3, 1).is_err());
    }
}
