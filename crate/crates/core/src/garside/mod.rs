//! Garside normal form in the positive braid monoid.
//!
//! A positive braid is written uniquely as `Δᵐ · s₁ ⋯ s_r` where each `sᵢ`
//! is a simple element other than `1` and `Δ`, and every adjacent pair is
//! left-weighted: the starting set of `sᵢ₊₁` lies inside the finishing set
//! of `sᵢ`. The exponent `m` is the infimum. Since `Δ²` is central, a
//! positive braid factors as `β₀ · (Δ²)ᵏ` with `β₀` positive exactly when
//! `2k ≤ m`.

pub mod oracle;
mod simple;

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

use simple::left_weight;
pub use simple::SimpleElement;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    strands: usize,
    delta_power: usize,
    factors: Vec<SimpleElement>,
}

/// Result of pulling the largest power of the full twist out of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistExtraction {
    pub k_max: usize,
    /// `Δ^{inf − 2k_max} · s₁ ⋯ s_r`.
    pub remainder: NormalForm,
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm {
            strands,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    /// Normal form of a product of simple elements, computed by appending
    /// one factor at a time and sliding it leftwards.
    pub fn from_simples<I>(strands: usize, simples: I) -> Self
    where
        I: IntoIterator<Item = SimpleElement>,
    {
        let mut seq: Vec<SimpleElement> = Vec::new();
        for s in simples {
            debug_assert_eq!(s.strands(), strands);
            if s.is_identity() {
                continue;
            }
            seq.push(s);
            let mut j = seq.len() - 1;
            while j > 0 {
                let (left, right) = seq.split_at_mut(j);
                if !left_weight(&mut left[j - 1], &mut right[0]) {
                    break;
                }
                j -= 1;
            }
            while seq.last().is_some_and(|s| s.is_identity()) {
                seq.pop();
            }
        }
        let delta_power = seq.iter().take_while(|s| s.is_delta()).count();
        let factors = seq.split_off(delta_power);
        debug_assert!(factors.iter().all(|s| !s.is_identity() && !s.is_delta()));
        NormalForm {
            strands,
            delta_power,
            factors,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> usize {
        self.delta_power
    }

    pub fn infimum(&self) -> usize {
        self.delta_power
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SimpleElement] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Number of letters in any positive word for this braid.
    pub fn letter_count(&self) -> usize {
        let n = self.strands;
        self.delta_power * n * (n - 1) / 2 + self.factors.iter().map(|s| s.length()).sum::<usize>()
    }

    /// Deterministic spelling: each `Δ` and each factor by its
    /// lexicographically least reduced word.
    pub fn to_word(&self) -> BraidWord {
        let delta = SimpleElement::delta(self.strands).spell();
        let mut letters = Vec::with_capacity(self.letter_count());
        for _ in 0..self.delta_power {
            letters.extend_from_slice(&delta);
        }
        for s in &self.factors {
            letters.extend(s.spell());
        }
        BraidWord::new(self.strands, letters).expect("normal form spelling stays in range")
    }

    fn simples(&self) -> impl Iterator<Item = SimpleElement> + '_ {
        std::iter::repeat_n(SimpleElement::delta(self.strands), self.delta_power)
            .chain(self.factors.iter().cloned())
    }

    /// True iff `σᵢ` is a left divisor.
    pub fn starts_with(&self, i: usize) -> bool {
        if i == 0 || i >= self.strands {
            return false;
        }
        self.delta_power > 0 || self.factors.first().is_some_and(|s| s.starts_with(i))
    }

    /// `σᵢ⁻¹ · self`, when `σᵢ` is a left divisor.
    pub fn strip_left(&self, i: usize) -> Option<NormalForm> {
        if !self.starts_with(i) {
            return None;
        }
        let mut head = if self.delta_power > 0 {
            SimpleElement::delta(self.strands)
        } else {
            self.factors[0].clone()
        };
        head.pop_left(i);
        let rest: Vec<SimpleElement> = self.simples().skip(1).collect();
        Some(NormalForm::from_simples(
            self.strands,
            std::iter::once(head).chain(rest),
        ))
    }

    /// `self · w` for a positive word `w`.
    pub fn append(&self, w: &BraidWord) -> Result<NormalForm> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: w.strands(),
            });
        }
        w.require_positive()?;
        let letters = w
            .letters()
            .iter()
            .map(|&g| SimpleElement::generator(self.strands, g as usize));
        Ok(NormalForm::from_simples(
            self.strands,
            self.simples().chain(letters),
        ))
    }

    /// Drops `2k` copies of `Δ`, i.e. divides by `(Δ²)ᵏ`.
    pub fn without_full_twists(&self, k: usize) -> Option<NormalForm> {
        (2 * k <= self.delta_power).then(|| NormalForm {
            strands: self.strands,
            delta_power: self.delta_power - 2 * k,
            factors: self.factors.clone(),
        })
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for s in &self.factors {
            let parts: Vec<String> = s.spell().iter().map(|g| g.to_string()).collect();
            write!(f, " [{}]", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm({}; {self})", self.strands)
    }
}

pub fn normal_form(w: &BraidWord) -> Result<NormalForm> {
    NormalForm::identity(w.strands()).append(w)
}

pub fn extract_full_twists(w: &BraidWord) -> Result<TwistExtraction> {
    w.require_positive()?;
    if w.strands() < 2 {
        return Err(Error::TooFewStrands {
            required: 2,
            strands: w.strands(),
        });
    }
    let nf = normal_form(w)?;
    let k_max = nf.infimum() / 2;
    let remainder = nf.without_full_twists(k_max).expect("2·k_max ≤ infimum");
    Ok(TwistExtraction { k_max, remainder })
}

pub fn positive_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u)? == normal_form(v)?)
}

/// `q` with `w = prefix · q` in the positive monoid, if it exists.
pub fn left_quotient(w: &BraidWord, prefix: &BraidWord) -> Result<Option<NormalForm>> {
    if w.strands() != prefix.strands() {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: prefix.strands(),
        });
    }
    prefix.require_positive()?;
    let mut nf = normal_form(w)?;
    for &g in prefix.letters() {
        match nf.strip_left(g as usize) {
            Some(next) => nf = next,
            None => return Ok(None),
        }
    }
    Ok(Some(nf))
}

/// `q` with `w = q · suffix` in the positive monoid, if it exists.
pub fn right_quotient(w: &BraidWord, suffix: &BraidWord) -> Result<Option<NormalForm>> {
    // Reversal turns right division into left division.
    match left_quotient(&w.reversed(), &suffix.reversed())? {
        None => Ok(None),
        Some(rev) => normal_form(&rev.to_word().reversed()).map(Some),
    }
}
