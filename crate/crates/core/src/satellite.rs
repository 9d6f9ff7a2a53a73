//! Combinatorial satellite operations: deleting closure components,
//! adjoining the braid axis as a new component, and recognising braids of
//! the form `B₀ · (σ₁⋯σ_{a−2})ʲ · Δ²ₐ` with `B₀ · (σ₁⋯σ_{a−2})ʲ` supported
//! on the first `a − 1` strands.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::families::{satellite_family_t, t_link_braid, FamilyParams, Strictness, TLinkSpec};
use crate::garside::{normal_form, right_quotient};
use crate::invariants::{bundles_match, closure_components, invariant_bundle};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionResult {
    pub braid: BraidWord,
    pub removed_letters: usize,
    /// Surviving old top position → new top position.
    pub strand_map: BTreeMap<usize, usize>,
}

/// Removes the closure components named by `ids` (least top positions) and
/// every crossing they take part in. The closure of the result is the
/// sublink of the surviving components.
pub fn delete_components(w: &BraidWord, ids: &BTreeSet<usize>) -> Result<DeletionResult> {
    let parts = closure_components(w);
    let known = parts.ids();
    if ids.is_empty() {
        return Err(Error::InvalidParams("no components to delete".into()));
    }
    if let Some(&bad) = ids.iter().find(|id| !known.contains(id)) {
        return Err(Error::UnknownComponent(bad));
    }
    if ids.len() == known.len() {
        return Err(Error::DeleteAll);
    }
    let mut alive = vec![true; w.strands()];
    for cycle in parts.cycles.iter().filter(|c| ids.contains(&c[0])) {
        for &p in cycle {
            alive[p - 1] = false;
        }
    }
    let mut strand_map = BTreeMap::new();
    for (old, _) in alive.iter().enumerate().filter(|(_, &a)| a) {
        strand_map.insert(old + 1, strand_map.len() + 1);
    }

    // occupant[pos] = 0-based top position of the strand at `pos`.
    let mut occupant: Vec<usize> = (0..w.strands()).collect();
    let mut letters = Vec::with_capacity(w.len());
    for &g in w.letters() {
        let i = g.unsigned_abs() as usize - 1;
        if alive[occupant[i]] && alive[occupant[i + 1]] {
            let below = occupant[..i].iter().filter(|&&s| alive[s]).count();
            letters.push(g.signum() * (below as i32 + 1));
        }
        occupant.swap(i, i + 1);
    }
    let removed_letters = w.len() - letters.len();
    Ok(DeletionResult {
        braid: BraidWord::new(strand_map.len(), letters)?,
        removed_letters,
        strand_map,
    })
}

/// `ι(w) · σₙσₙ₋₁⋯σ₁σ₁⋯σₙ₋₁σₙ` on `n + 1` strands: the new last strand
/// goes once around all the others, so its closure is the braid axis.
pub fn adjoin_axis(w: &BraidWord) -> Result<BraidWord> {
    w.require_positive()?;
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    letters.extend((1..=n as i32).rev());
    letters.extend(1..=n as i32);
    BraidWord::new(n + 1, letters)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case2Match {
    /// Strand count of the braid.
    pub a: usize,
    pub matched: bool,
    /// `B₀`; empty when not matched.
    pub b0: BraidWord,
    /// Exponent `j` of the wheel `σ₁⋯σ_{a−2}` split off before `Δ²ₐ`.
    pub wheel_power: usize,
    /// Largest `j` for which the quotient by `Δ²ₐ` is right-divisible by
    /// the `j`-th power of the wheel.
    pub max_wheel_power: usize,
}

impl Case2Match {
    fn unmatched(a: usize) -> Self {
        Case2Match {
            a,
            matched: false,
            b0: BraidWord::identity(a),
            wheel_power: 0,
            max_wheel_power: 0,
        }
    }
}

fn wheel(a: usize) -> BraidWord {
    if a <= 2 {
        BraidWord::identity(a)
    } else {
        BraidWord::run(a, 1, a - 2, 1).expect("a − 2 < a")
    }
}

/// Decides whether a positive braid on `a` strands is
/// `B₀ · (σ₁⋯σ_{a−2})ʲ · Δ²ₐ` with `B₀ · (σ₁⋯σ_{a−2})ʲ` on strands
/// `1..a−1`.
///
/// With `twists = None` the wheel exponent is the largest possible. With
/// `Some(k)` it is pinned to `(k − 1)(a − 1)` and the match fails when
/// that power does not divide.
pub fn match_case2_form(w: &BraidWord, twists: Option<usize>) -> Result<Case2Match> {
    w.require_positive()?;
    let a = w.strands();
    if a < 2 {
        return Err(Error::TooFewStrands {
            required: 2,
            strands: a,
        });
    }
    if twists == Some(0) {
        return Err(Error::InvalidParams(
            "twist count must be at least 1".into(),
        ));
    }
    let nf = normal_form(w)?;
    // Δ² is central, so right and left divisibility by it coincide.
    let Some(quotient) = nf.without_full_twists(1) else {
        return Ok(Case2Match::unmatched(a));
    };
    let quotient = quotient.to_word();
    // Both braid relations preserve the set of generators used, so the
    // canonical spelling decides the span of the whole class.
    if !quotient.span_within(a - 1)? {
        return Ok(Case2Match::unmatched(a));
    }
    let wheel = wheel(a);
    let mut max_wheel_power = 0;
    let mut rest = quotient.clone();
    if !wheel.is_empty() {
        while let Some(q) = right_quotient(&rest, &wheel)? {
            max_wheel_power += 1;
            rest = q.to_word();
        }
    }
    let (wheel_power, b0) = match twists {
        None => (max_wheel_power, rest),
        Some(k) => {
            let j = (k - 1) * (a - 1);
            if wheel.is_empty() {
                (0, quotient)
            } else if j > max_wheel_power {
                return Ok(Case2Match {
                    max_wheel_power,
                    ..Case2Match::unmatched(a)
                });
            } else {
                let b0 = right_quotient(&quotient, &wheel.pow(j))?
                    .expect("j ≤ maximal wheel power")
                    .to_word();
                (j, b0)
            }
        }
    };
    Ok(Case2Match {
        a,
        matched: true,
        b0,
        wheel_power,
        max_wheel_power,
    })
}

/// `B₀ · (σ₁⋯σ_{a−2})ʲ · Δ²ₐ` from a match.
pub fn case2_word(m: &Case2Match) -> Result<BraidWord> {
    let twist = crate::braid::full_twist(m.a, 1)?;
    m.b0.concat(&wheel(m.a).pow(m.wheel_power))?.concat(&twist)
}

/// One step of the reduction from a satellite family member to its
/// companion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionStep {
    /// Component ids deleted from the previous braid; empty when the step
    /// is the identity.
    pub deleted: Vec<usize>,
    pub braid: BraidWord,
    pub target: String,
    pub bundle_matches: bool,
    /// Whether the word equals the target's standard braid letter for
    /// letter.
    pub literal_match: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionChain {
    pub params: FamilyParams,
    /// `(σ₁⋯σ_{N−1})^{a+b+c} (σ₁⋯σ_{a+b+c−1})^c`, a conjugate of the
    /// family's T-braid.
    pub start: BraidWord,
    /// Strands `1..a+b` lie on pairwise distinct components.
    pub leading_block_distinct: bool,
    /// Drops all but two of the leading `a + b` components.
    pub first: DeletionStep,
    /// Drops all but one of the `c` components that follow.
    pub second: DeletionStep,
}

/// `(σ₁⋯σ_{n−1})^{s}(σ₁⋯σ_{r−1})^{t}` on `n` strands.
fn rotated_t_word(n: usize, s: usize, r: usize, t: usize) -> Result<BraidWord> {
    BraidWord::run(n, 1, n - 1, s)?.concat(&BraidWord::run(n, 1, r - 1, t)?)
}

fn step(
    from: &BraidWord,
    ids: BTreeSet<usize>,
    target: &TLinkSpec,
    literal: &BraidWord,
) -> Result<(DeletionStep, BTreeMap<usize, usize>)> {
    let (braid, map) = if ids.is_empty() {
        let map = (1..=from.strands()).map(|p| (p, p)).collect();
        (from.clone(), map)
    } else {
        let r = delete_components(from, &ids)?;
        (r.braid, r.strand_map)
    };
    let bundle_matches = bundles_match(
        &invariant_bundle(&braid)?,
        &invariant_bundle(&t_link_braid(target))?,
    );
    let literal_match = &braid == literal;
    Ok((
        DeletionStep {
            deleted: ids.into_iter().collect(),
            braid,
            target: target.to_string(),
            bundle_matches,
            literal_match,
        },
        map,
    ))
}

/// Reduces `T((a+b+c,c),(a+b+2c+k(a+b+c),a+b+c))` to
/// `T((2+c,c),(2+2c+k(2+c),2+c))` and then to `T((3,1),(4+3k,3))` by
/// deleting parallel components, checking each stage against the target's
/// invariants.
pub fn deletion_chain(params: FamilyParams) -> Result<DeletionChain> {
    let spec = satellite_family_t(params)?;
    let FamilyParams { a, b, c, k } = params;
    let m = a + b + c;
    let n = spec.strands();
    let start = rotated_t_word(n, m, m, c)?;

    let parts = closure_components(&start);
    let lead: Vec<usize> = (1..=a + b).map(|p| parts.id_of(p)).collect();
    let leading_block_distinct = lead.iter().collect::<BTreeSet<_>>().len() == a + b;
    let n2 = 2 + 2 * c + k * (2 + c);
    let target2 = TLinkSpec::new(vec![(2 + c, c), (n2, 2 + c)], Strictness::Relaxed)?;
    let literal2 = rotated_t_word(n2, 2 + c, 2 + c, c)?;
    let (first, map) = step(
        &start,
        lead[2..].iter().copied().collect(),
        &target2,
        &literal2,
    )?;

    // The c-block starts right after the leading block in the original.
    let parts2 = closure_components(&first.braid);
    let block: Vec<usize> = (a + b + 1..=m).map(|old| parts2.id_of(map[&old])).collect();
    let n3 = 4 + 3 * k;
    let target3 = TLinkSpec::new(vec![(3, 1), (n3, 3)], Strictness::Relaxed)?;
    let literal3 = rotated_t_word(n3, 3, 3, 1)?;
    let drop: BTreeSet<usize> = block[1..]
        .iter()
        .copied()
        .filter(|&id| id != block[0])
        .collect();
    let (second, _) = step(&first.braid, drop, &target3, &literal3)?;

    Ok(DeletionChain {
        params,
        start,
        leading_block_distinct,
        first,
        second,
    })
}
