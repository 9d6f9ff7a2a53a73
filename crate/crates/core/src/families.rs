//! T-links, V-links and the satellite families built from them.
//!
//! `T((r₁,s₁),…,(rₙ,sₙ))` is the closure of
//! `(σ₁⋯σ_{r₁−1})^{s₁} ⋯ (σ₁⋯σ_{rₙ−1})^{sₙ}` on `rₙ` strands.
//! `V((u₁,~v₁),…,(r₁,s₁),…,(p,q))` is the closure of the braid on `p`
//! strands made of the descending factors `(σ_{p−1}⋯σ_{p−u+1})^v` for the
//! barred pairs, then the ascending factors `(σ₁⋯σ_{r−1})^s`, then
//! `(σ₁⋯σ_{p−1})^q`.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// How closely a spec must follow the original definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Strictly increasing strand counts, positive exponents, `p ≤ q`.
    Strict,
    /// Zero exponents drop their factor; consecutive T-pairs may share a
    /// strand count. Needed for the `k = 0` members of the families.
    #[default]
    Relaxed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TLinkSpec {
    pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VLinkSpec {
    barred: Vec<(usize, usize)>,
    plain: Vec<(usize, usize)>,
    p: usize,
    q: usize,
}

impl TLinkSpec {
    pub fn new(pairs: Vec<(usize, usize)>, strictness: Strictness) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidSpec(
                "a T-link needs at least one pair".into(),
            ));
        }
        for (idx, &(r, s)) in pairs.iter().enumerate() {
            if r < 2 {
                return Err(Error::InvalidSpec(format!("pair {}: r = {r} < 2", idx + 1)));
            }
            if strictness == Strictness::Strict && s == 0 {
                return Err(Error::InvalidSpec(format!(
                    "pair {}: s must be positive",
                    idx + 1
                )));
            }
            if idx > 0 {
                let prev = pairs[idx - 1].0;
                let ok = match strictness {
                    Strictness::Strict => prev < r,
                    Strictness::Relaxed => prev <= r,
                };
                if !ok {
                    return Err(Error::InvalidSpec(format!(
                        "pair {}: r = {r} does not increase past {prev}",
                        idx + 1
                    )));
                }
            }
        }
        Ok(TLinkSpec { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn strands(&self) -> usize {
        self.pairs.last().expect("nonempty").0
    }

    pub fn is_strict(&self) -> bool {
        TLinkSpec::new(self.pairs.clone(), Strictness::Strict).is_ok()
    }
}

impl VLinkSpec {
    pub fn new(
        barred: Vec<(usize, usize)>,
        plain: Vec<(usize, usize)>,
        (p, q): (usize, usize),
        strictness: Strictness,
    ) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidSpec(format!("p = {p} < 2")));
        }
        let strict = strictness == Strictness::Strict;
        if strict && q < p {
            return Err(Error::InvalidSpec(format!("q = {q} < p = {p}")));
        }
        check_increasing("barred", &barred, |u| u <= p, "≤ p", strict)?;
        check_increasing("plain", &plain, |r| r < p, "< p", strict)?;
        Ok(VLinkSpec {
            barred,
            plain,
            p,
            q,
        })
    }

    pub fn barred_pairs(&self) -> &[(usize, usize)] {
        &self.barred
    }

    pub fn plain_pairs(&self) -> &[(usize, usize)] {
        &self.plain
    }

    pub fn final_pair(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn strands(&self) -> usize {
        self.p
    }

    pub fn is_strict(&self) -> bool {
        VLinkSpec::new(
            self.barred.clone(),
            self.plain.clone(),
            (self.p, self.q),
            Strictness::Strict,
        )
        .is_ok()
    }
}

fn check_increasing(
    which: &str,
    pairs: &[(usize, usize)],
    bound: impl Fn(usize) -> bool,
    bound_text: &str,
    strict: bool,
) -> Result<()> {
    for (idx, &(u, v)) in pairs.iter().enumerate() {
        if u < 2 || !bound(u) {
            return Err(Error::InvalidSpec(format!(
                "{which} pair {}: {u} must be ≥ 2 and {bound_text}",
                idx + 1
            )));
        }
        if idx > 0 && pairs[idx - 1].0 >= u {
            return Err(Error::InvalidSpec(format!(
                "{which} pair {}: {u} does not increase past {}",
                idx + 1,
                pairs[idx - 1].0
            )));
        }
        if strict && v == 0 {
            return Err(Error::InvalidSpec(format!(
                "{which} pair {}: exponent must be positive",
                idx + 1
            )));
        }
    }
    Ok(())
}

pub fn t_link_braid(spec: &TLinkSpec) -> BraidWord {
    let n = spec.strands();
    let mut letters = Vec::new();
    for &(r, s) in &spec.pairs {
        for _ in 0..s {
            letters.extend(1..r as i32);
        }
    }
    BraidWord::new(n, letters).expect("T-link letters stay below rₙ")
}

pub fn v_link_braid(spec: &VLinkSpec) -> BraidWord {
    let p = spec.p;
    let mut letters = Vec::new();
    for &(u, v) in &spec.barred {
        for _ in 0..v {
            letters.extend((p + 1 - u..p).rev().map(|i| i as i32));
        }
    }
    for &(r, s) in &spec.plain {
        for _ in 0..s {
            letters.extend(1..r as i32);
        }
    }
    for _ in 0..spec.q {
        letters.extend(1..p as i32);
    }
    BraidWord::new(p, letters).expect("V-link letters stay below p")
}

/// Parameters `(a, b, c, k)` of the satellite family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub k: usize,
}

impl FamilyParams {
    pub fn new(a: usize, b: usize, c: usize, k: usize) -> Self {
        FamilyParams { a, b, c, k }
    }

    /// `a, b, c ≥ 1` with at least one of them `> 1`.
    pub fn validate(&self) -> Result<()> {
        if self.a == 0 || self.b == 0 || self.c == 0 {
            return Err(Error::InvalidParams(format!(
                "a, b, c must be positive, got ({}, {}, {})",
                self.a, self.b, self.c
            )));
        }
        if self.a.max(self.b).max(self.c) < 2 {
            return Err(Error::InvalidParams(
                "at least one of a, b, c must be greater than 1".into(),
            ));
        }
        Ok(())
    }

    /// Strand count `a + b + c` of the V-representative.
    pub fn width(&self) -> usize {
        self.a + self.b + self.c
    }
}

/// `T((a+b+c, c), (a+b+2c+k(a+b+c), a+b+c))`.
pub fn satellite_family_t(params: FamilyParams) -> Result<TLinkSpec> {
    params.validate()?;
    let FamilyParams { a, b, c, k } = params;
    let m = a + b + c;
    TLinkSpec::new(vec![(m, c), (a + b + 2 * c + k * m, m)], Strictness::Strict)
}

/// `V((a+b+c, ~c), (a+b+c, (k+1)(a+b+c) + c))`.
pub fn satellite_family_v(params: FamilyParams) -> Result<VLinkSpec> {
    params.validate()?;
    let FamilyParams { c, k, .. } = params;
    let m = params.width();
    VLinkSpec::new(
        vec![(m, c)],
        vec![],
        (m, (k + 1) * m + c),
        Strictness::Strict,
    )
}

/// `T((3,1),(3+2k,2))`.
pub fn companion_t(k: usize) -> TLinkSpec {
    TLinkSpec::new(vec![(3, 1), (3 + 2 * k, 2)], Strictness::Relaxed).expect("valid for all k")
}

/// `T((3,1),(4+3k,3))`.
pub fn companion_mid_t(k: usize) -> TLinkSpec {
    TLinkSpec::new(vec![(3, 1), (4 + 3 * k, 3)], Strictness::Relaxed).expect("valid for all k")
}

/// `V((2,2k),(3,3))`, closing `σ₁^{2k}(σ₁σ₂)³`.
pub fn companion_v(k: usize) -> VLinkSpec {
    VLinkSpec::new(vec![], vec![(2, 2 * k)], (3, 3), Strictness::Relaxed).expect("valid for all k")
}

impl fmt::Display for TLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(r, s)| format!("({r},{s})"))
            .collect();
        write!(f, "T({})", parts.join(","))
    }
}

impl fmt::Display for VLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .barred
            .iter()
            .map(|(u, v)| format!("({u},~{v})"))
            .collect();
        parts.extend(self.plain.iter().map(|(r, s)| format!("({r},{s})")));
        parts.push(format!("({},{})", self.p, self.q));
        write!(f, "V({})", parts.join(","))
    }
}

/// Splits `X((a,b),(c,~d),…)` into `(a, b, barred)` triples.
fn parse_literal(text: &str, head: char) -> Result<Vec<(usize, usize, bool)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix(head)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::InvalidSpec(format!("expected {head}(…), got {text:?}")))?;
    let mut out = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidSpec(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::InvalidSpec(format!("unclosed pair at {rest:?}")))?;
        let (x, y) = body[..close].split_once(',').ok_or_else(|| {
            Error::InvalidSpec(format!("pair {:?} needs two entries", &body[..close]))
        })?;
        let (y, barred) = match y.strip_prefix('~') {
            Some(y) => (y, true),
            None => (y, false),
        };
        let num = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::InvalidSpec(format!("{s:?} is not a non-negative integer")))
        };
        out.push((num(x)?, num(y)?, barred));
        rest = &body[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(Error::InvalidSpec("trailing ','".into()));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(Error::InvalidSpec(format!("expected ',' at {rest:?}")));
        }
    }
    Ok(out)
}

impl FromStr for TLinkSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_literal(s, 'T')?;
        if raw.iter().any(|&(_, _, barred)| barred) {
            return Err(Error::InvalidSpec("T-links have no barred pairs".into()));
        }
        TLinkSpec::new(
            raw.into_iter().map(|(r, s, _)| (r, s)).collect(),
            Strictness::Relaxed,
        )
    }
}

impl FromStr for VLinkSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut raw = parse_literal(s, 'V')?;
        let (p, q, final_barred) = raw
            .pop()
            .ok_or_else(|| Error::InvalidSpec("a V-link needs a final (p,q) pair".into()))?;
        if final_barred {
            return Err(Error::InvalidSpec(
                "the final (p,q) pair cannot be barred".into(),
            ));
        }
        let split = raw.iter().take_while(|&&(_, _, barred)| barred).count();
        if raw[split..].iter().any(|&(_, _, barred)| barred) {
            return Err(Error::InvalidSpec(
                "barred pairs must precede plain pairs".into(),
            ));
        }
        let barred = raw[..split].iter().map(|&(u, v, _)| (u, v)).collect();
        let plain = raw[split..].iter().map(|&(r, s, _)| (r, s)).collect();
        VLinkSpec::new(barred, plain, (p, q), Strictness::Relaxed)
    }
}

impl Serialize for TLinkSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TLinkSpec", 2)?;
        st.serialize_field("literal", &self.to_string())?;
        st.serialize_field("pairs", &self.pairs)?;
        st.end()
    }
}

#[derive(Serialize)]
struct VPairView {
    strands: usize,
    exponent: usize,
    barred: bool,
}

impl Serialize for VLinkSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<VPairView> = self
            .barred
            .iter()
            .map(|&(u, v)| VPairView {
                strands: u,
                exponent: v,
                barred: true,
            })
            .chain(self.plain.iter().map(|&(r, s)| VPairView {
                strands: r,
                exponent: s,
                barred: false,
            }))
            .collect();
        let mut st = serializer.serialize_struct("VLinkSpec", 3)?;
        st.serialize_field("literal", &self.to_string())?;
        st.serialize_field("pairs", &pairs)?;
        st.serialize_field("final", &(self.p, self.q))?;
        st.end()
    }
}
