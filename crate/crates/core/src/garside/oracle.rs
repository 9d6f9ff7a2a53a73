//! Brute-force divisibility check by enumerating the positive-word class.
//!
//! Shares nothing with the normal-form code: it walks every word reachable
//! through the two braid relations and looks for one that starts with the
//! requested power of `Δ`. Exponential, so it is bounded.

use std::collections::{HashSet, VecDeque};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_LEN: usize = 14;
pub const DEFAULT_MAX_STRANDS: usize = 4;
pub const MAX_LEN_ENV: &str = "BRAIDFORGE_ORACLE_MAXLEN";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_len: usize,
    pub max_strands: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_len: DEFAULT_MAX_LEN,
            max_strands: DEFAULT_MAX_STRANDS,
        }
    }
}

impl OracleBounds {
    /// Defaults, with `BRAIDFORGE_ORACLE_MAXLEN` overriding the length bound.
    pub fn from_env() -> Self {
        let mut bounds = OracleBounds::default();
        if let Some(n) = std::env::var(MAX_LEN_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            bounds.max_len = n;
        }
        bounds
    }
}

/// `(σ₁⋯σ_{p−1})(σ₁⋯σ_{p−2})⋯(σ₁)`, one spelling of the half twist.
fn half_twist_word(strands: usize) -> Vec<u8> {
    let mut out = Vec::new();
    for top in (1..strands).rev() {
        out.extend(1..=top as u8);
    }
    out
}

/// Every positive word equal to `w` in the braid monoid.
pub fn equivalence_class(w: &BraidWord, bounds: OracleBounds) -> Result<HashSet<Vec<u8>>> {
    check_bounds(w, bounds)?;
    let start: Vec<u8> = w.letters().iter().map(|&g| g as u8).collect();
    let mut seen = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(word) = queue.pop_front() {
        for next in neighbours(&word) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

fn check_bounds(w: &BraidWord, bounds: OracleBounds) -> Result<()> {
    w.require_positive()?;
    if w.len() > bounds.max_len {
        return Err(Error::OracleBound(format!(
            "word length {} exceeds {}",
            w.len(),
            bounds.max_len
        )));
    }
    if w.strands() > bounds.max_strands {
        return Err(Error::OracleBound(format!(
            "{} strands exceeds {}",
            w.strands(),
            bounds.max_strands
        )));
    }
    Ok(())
}

fn neighbours(word: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a.abs_diff(b) >= 2 {
            let mut next = word.to_vec();
            next.swap(i, i + 1);
            out.push(next);
        }
        if i + 2 < word.len() && a.abs_diff(b) == 1 && word[i + 2] == a {
            let mut next = word.to_vec();
            next[i] = b;
            next[i + 1] = a;
            next[i + 2] = b;
            out.push(next);
        }
    }
    out
}

/// True iff some positive word equal to `w` starts with `Δ^power`.
pub fn oracle_divisible_by_delta(
    w: &BraidWord,
    power: usize,
    bounds: OracleBounds,
) -> Result<bool> {
    check_bounds(w, bounds)?;
    if power == 0 {
        return Err(Error::InvalidParams("power must be positive".into()));
    }
    if w.strands() < 2 {
        return Ok(false);
    }
    let delta = half_twist_word(w.strands());
    let prefix: Vec<u8> = delta
        .iter()
        .copied()
        .cycle()
        .take(delta.len() * power)
        .collect();
    if prefix.len() > w.len() {
        // Both relations preserve length.
        return Ok(false);
    }
    let start: Vec<u8> = w.letters().iter().map(|&g| g as u8).collect();
    if start.starts_with(&prefix) {
        return Ok(true);
    }
    let mut seen = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(word) = queue.pop_front() {
        for next in neighbours(&word) {
            if next.starts_with(&prefix) {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// Largest `k` such that the class contains a word starting with `Δ^{2k}`.
pub fn oracle_full_twists(w: &BraidWord, bounds: OracleBounds) -> Result<usize> {
    let mut k = 0;
    while oracle_divisible_by_delta(w, 2 * (k + 1), bounds)? {
        k += 1;
    }
    Ok(k)
}
