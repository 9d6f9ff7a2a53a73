//! Verification pipelines for the satellite construction and the report
//! format they produce.
//!
//! Every expected value below comes from a closed formula in the family
//! parameters; nothing is derived from the computed side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::families::{
    companion_mid_t, companion_t, companion_v, satellite_family_t, satellite_family_v,
    t_link_braid, v_link_braid, FamilyParams, TLinkSpec, VLinkSpec,
};
use crate::garside::oracle::{oracle_full_twists, OracleBounds};
use crate::garside::{extract_full_twists, positive_equal};
use crate::invariants::{
    bundles_match, closure_components, full_twist_bound, invariant_bundle, linking_matrix,
    nonsplit_certificate, NonsplitCertificate,
};
use crate::satellite::{adjoin_axis, deletion_chain, match_case2_form};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts by name, then parameters, and tallies the summary.
    pub fn from_checks(mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|x, y| (&x.name, &x.params).cmp(&(&y.name, &y.params)));
        let pass = checks.iter().filter(|c| c.pass).count();
        VerificationReport {
            tool_version: TOOL_VERSION.to_string(),
            summary: Summary {
                pass,
                fail: checks.len() - pass,
            },
            checks,
        }
    }

    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        VerificationReport::from_checks(reports.into_iter().flat_map(|r| r.checks).collect())
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "{} {:<36} {:<20} expected={} computed={} ({} ms)",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                params.join(","),
                c.expected,
                c.computed,
                c.elapsed_ms
            );
        }
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail (braidforge {})",
            self.summary.pass, self.summary.fail, self.tool_version
        );
        out
    }
}

/// What a single check compares.
enum Outcome {
    /// Pass iff `computed == expected`.
    Equal(String),
    /// Pass iff `computed ≥ bound`; `expected` reads `≥ bound`.
    AtLeast(i64),
}

struct Check<'a> {
    name: &'a str,
    params: Vec<(&'a str, usize)>,
    expected: Outcome,
}

impl Check<'_> {
    fn run(self, f: impl FnOnce() -> Result<String>) -> CheckRecord {
        let start = Instant::now();
        let computed = f();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let (expected, computed, pass) = match (self.expected, computed) {
            (Outcome::Equal(e), Ok(c)) => {
                let pass = e == c;
                (e, c, pass)
            }
            (Outcome::AtLeast(b), Ok(c)) => {
                let pass = c.parse::<i64>().is_ok_and(|v| v >= b);
                (format!("≥ {b}"), c, pass)
            }
            (e, Err(err)) => {
                let e = match e {
                    Outcome::Equal(e) => e,
                    Outcome::AtLeast(b) => format!("≥ {b}"),
                };
                (e, format!("error: {err}"), false)
            }
        };
        CheckRecord {
            name: self.name.to_string(),
            params: self
                .params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v as i64))
                .collect(),
            expected,
            computed,
            pass,
            elapsed_ms,
        }
    }
}

fn equal<'a>(name: &'a str, params: Vec<(&'a str, usize)>, expected: impl ToString) -> Check<'a> {
    Check {
        name,
        params,
        expected: Outcome::Equal(expected.to_string()),
    }
}

fn at_least<'a>(name: &'a str, params: Vec<(&'a str, usize)>, bound: usize) -> Check<'a> {
    Check {
        name,
        params,
        expected: Outcome::AtLeast(bound as i64),
    }
}

fn point_params(p: &FamilyParams) -> Vec<(&'static str, usize)> {
    vec![("a", p.a), ("b", p.b), ("c", p.c), ("k", p.k)]
}

fn match_label(m: bool) -> String {
    if m { "match" } else { "mismatch" }.to_string()
}

fn t_v_match(t: &TLinkSpec, v: &VLinkSpec) -> Result<String> {
    let bt = invariant_bundle(&t_link_braid(t))?;
    let bv = invariant_bundle(&v_link_braid(v))?;
    Ok(match_label(bundles_match(&bt, &bv)))
}

fn certificate_label(w: &BraidWord) -> Result<String> {
    Ok(match nonsplit_certificate(w)? {
        NonsplitCertificate::Knot => "knot".into(),
        NonsplitCertificate::Certified { .. } => "certified".into(),
        NonsplitCertificate::Uncertified { pair, linking } => {
            format!("uncertified: lk{pair:?} = {linking}")
        }
    })
}

/// `T((3,1),(4+3k,3))` and `T((3,1),(3+2k,2))` close to three components.
pub fn verify_components(k_max: usize) -> VerificationReport {
    let checks = (0..=k_max)
        .into_par_iter()
        .flat_map_iter(|k| {
            [
                ("components.companion_mid_t", companion_mid_t(k)),
                ("components.companion_t", companion_t(k)),
            ]
            .into_iter()
            .map(move |(name, spec)| {
                equal(name, vec![("k", k)], 3)
                    .run(|| Ok(closure_components(&t_link_braid(&spec)).count().to_string()))
            })
        })
        .collect();
    VerificationReport::from_checks(checks)
}

/// Linking numbers of `σ₁^{2k}(σ₁σ₂)³` and the full-twist bound they force.
pub fn verify_companion_obstruction(k_max: usize) -> VerificationReport {
    let bounds = OracleBounds::from_env();
    let checks = (0..=k_max)
        .into_par_iter()
        .flat_map_iter(|k| {
            let w = v_link_braid(&companion_v(k));
            let p = || vec![("k", k)];
            let mut expected_lk = vec![1, 1, k as i64 + 1];
            expected_lk.sort_unstable();
            let mut out = vec![
                equal(
                    "obstruction.linking_multiset",
                    p(),
                    format!("{expected_lk:?}"),
                )
                .run(|| Ok(format!("{:?}", linking_matrix(&w)?.multiset()))),
                equal("obstruction.min_linking", p(), 1).run(|| {
                    let lk = linking_matrix(&w)?;
                    Ok(format!("{}", lk.min_off_diagonal().unwrap_or_default()))
                }),
                equal("obstruction.twist_bound", p(), 1).run(|| {
                    let bound = full_twist_bound(&linking_matrix(&w)?);
                    Ok(bound.map_or("none".into(), |b| b.to_string()))
                }),
                // A positive representative with two full twists would need
                // every pairwise linking number to be at least 2.
                equal("obstruction.two_twists_excluded", p(), "excluded").run(|| {
                    let bound = full_twist_bound(&linking_matrix(&w)?);
                    Ok(if bound.is_some_and(|b| b < 2) {
                        "excluded"
                    } else {
                        "not excluded"
                    }
                    .into())
                }),
                equal("obstruction.companion_twists", p(), 1)
                    .run(|| Ok(extract_full_twists(&w)?.k_max.to_string())),
                equal("obstruction.companion_t_v_bundles", p(), "match")
                    .run(|| t_v_match(&companion_t(k), &companion_v(k))),
            ];
            if w.len() <= bounds.max_len {
                out.push(
                    equal("obstruction.oracle_twists", p(), 1)
                        .run(|| Ok(oracle_full_twists(&w, bounds)?.to_string())),
                );
            }
            out
        })
        .collect();
    VerificationReport::from_checks(checks)
}

/// The V-representatives carry at least `k + 1` full twists and share all
/// invariants with the T-links.
pub fn verify_satellite_twists(grid: &[FamilyParams]) -> VerificationReport {
    let checks = grid
        .par_iter()
        .flat_map_iter(|p| {
            [
                at_least("satellite.v_twists", point_params(p), p.k + 1).run(|| {
                    let w = v_link_braid(&satellite_family_v(*p)?);
                    Ok(extract_full_twists(&w)?.k_max.to_string())
                }),
                equal("satellite.t_v_bundles", point_params(p), "match")
                    .run(|| t_v_match(&satellite_family_t(*p)?, &satellite_family_v(*p)?)),
            ]
        })
        .collect();
    VerificationReport::from_checks(checks)
}

type Job = (&'static str, Vec<(&'static str, usize)>, Result<BraidWord>);

/// Pairwise positive linking on every family member.
pub fn verify_nonsplit_certificates(grid: &[FamilyParams], k_max: usize) -> VerificationReport {
    let mut jobs: Vec<Job> = Vec::new();
    for k in 0..=k_max {
        jobs.push((
            "nonsplit.companion_v",
            vec![("k", k)],
            Ok(v_link_braid(&companion_v(k))),
        ));
        jobs.push((
            "nonsplit.companion_t",
            vec![("k", k)],
            Ok(t_link_braid(&companion_t(k))),
        ));
        jobs.push((
            "nonsplit.companion_mid_t",
            vec![("k", k)],
            Ok(t_link_braid(&companion_mid_t(k))),
        ));
    }
    for p in grid {
        jobs.push((
            "nonsplit.satellite_t",
            point_params(p),
            satellite_family_t(*p).map(|s| t_link_braid(&s)),
        ));
        jobs.push((
            "nonsplit.satellite_v",
            point_params(p),
            satellite_family_v(*p).map(|s| v_link_braid(&s)),
        ));
    }
    let checks = jobs
        .into_par_iter()
        .map(|(name, params, w)| {
            let w = w.and_then(|w| {
                if closure_components(&w).count() < 2 {
                    Err(Error::Invariant("family member closes to a knot".into()))
                } else {
                    Ok(w)
                }
            });
            equal(name, params, "certified").run(|| certificate_label(&w?))
        })
        .collect();
    VerificationReport::from_checks(checks)
}

/// `P₃ = (σ₁σ₂σ₃)²σ₁²` and the family point `(2,2,2,0)`.
pub fn verify_remark() -> VerificationReport {
    let point = FamilyParams::new(2, 2, 2, 0);
    let checks = vec![
        equal("remark.pattern_twists", vec![], 0).run(|| {
            let p3 = BraidWord::new(4, vec![1, 2, 3, 1, 2, 3, 1, 1])?;
            Ok(extract_full_twists(&p3)?.k_max.to_string())
        }),
        equal(
            "remark.family_point",
            point_params(&point),
            "T((6,2),(8,6))",
        )
        .run(|| Ok(satellite_family_t(point)?.to_string())),
        equal("remark.t_v_bundles", point_params(&point), "match")
            .run(|| t_v_match(&"T((6,2),(8,6))".parse()?, &"V((6,~2),(6,8))".parse()?)),
        at_least("remark.v_twists", point_params(&point), 1).run(|| {
            let w = v_link_braid(&"V((6,~2),(6,8))".parse()?);
            Ok(extract_full_twists(&w)?.k_max.to_string())
        }),
    ];
    VerificationReport::from_checks(checks)
}

/// The companion braid has the shape `B₀(σ₁)^{2(k−1)}Δ²₃` with `B₀ = σ₁²`
/// and arises by adjoining the axis to `σ₁^{2k+2}`.
pub fn verify_case2(k_max: usize) -> VerificationReport {
    let checks = (1..=k_max.max(1))
        .into_par_iter()
        .flat_map_iter(|k| {
            let w = v_link_braid(&companion_v(k));
            let p = || vec![("k", k)];
            [
                equal("case2.axis_equal", p(), true).run(|| {
                    let base = BraidWord::new(2, vec![1; 2 * k + 2])?;
                    Ok(positive_equal(&adjoin_axis(&base)?, &w)?.to_string())
                }),
                equal("case2.matched", p(), "a=3").run(|| {
                    let m = match_case2_form(&w, None)?;
                    Ok(if m.matched {
                        format!("a={}", m.a)
                    } else {
                        "unmatched".into()
                    })
                }),
                equal("case2.b0", p(), "3: 1 1")
                    .run(|| Ok(match_case2_form(&w, Some(k))?.b0.to_string())),
                at_least("case2.wheel_power", p(), 2 * (k - 1))
                    .run(|| Ok(match_case2_form(&w, None)?.max_wheel_power.to_string())),
            ]
        })
        .collect();
    VerificationReport::from_checks(checks)
}

/// Deleting parallel components reduces the family to its companion.
pub fn verify_deletion_chain(points: &[FamilyParams]) -> VerificationReport {
    let checks = points
        .par_iter()
        .flat_map_iter(|p| {
            let chain = deletion_chain(*p);
            let get = |f: fn(&crate::satellite::DeletionChain) -> String| match &chain {
                Ok(ch) => Ok(f(ch)),
                Err(e) => Err(e.clone()),
            };
            [
                equal("deletion.leading_block", point_params(p), "distinct").run(|| {
                    get(|ch| {
                        if ch.leading_block_distinct {
                            "distinct"
                        } else {
                            "shared"
                        }
                        .into()
                    })
                }),
                equal("deletion.first_step", point_params(p), "match")
                    .run(|| get(|ch| match_label(ch.first.bundle_matches))),
                equal("deletion.second_step", point_params(p), "match")
                    .run(|| get(|ch| match_label(ch.second.bundle_matches))),
            ]
        })
        .collect();
    VerificationReport::from_checks(checks)
}

/// `(a,b,c) ∈ {1,2,3}³` with `max ≥ 2`, `k ∈ {0..3}`, keeping points whose
/// V-braid has at most 12 strands and 600 letters.
pub fn default_grid() -> Vec<FamilyParams> {
    grid_from_ranges([(1, 3), (1, 3), (1, 3), (0, 3)])
}

pub fn default_deletion_points() -> Vec<FamilyParams> {
    vec![
        FamilyParams::new(1, 1, 2, 1),
        FamilyParams::new(2, 1, 2, 1),
        FamilyParams::new(2, 2, 2, 1),
    ]
}

fn grid_from_ranges(r: [(usize, usize); 4]) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for a in r[0].0..=r[0].1 {
        for b in r[1].0..=r[1].1 {
            for c in r[2].0..=r[2].1 {
                for k in r[3].0..=r[3].1 {
                    let p = FamilyParams::new(a, b, c, k);
                    if p.validate().is_err() {
                        continue;
                    }
                    let w = satellite_family_v(p).map(|s| v_link_braid(&s));
                    if w.is_ok_and(|w| w.strands() <= 12 && w.len() <= 600) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Parses `a=1..3,b=2,c=1..2,k=0..3`. Missing keys keep their default
/// range; points with `a = b = c = 1` are skipped.
pub fn parse_grid(spec: &str) -> Result<Vec<FamilyParams>> {
    let mut ranges = [(1, 3), (1, 3), (1, 3), (0, 3)];
    let mut seen = BTreeSet::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || Error::InvalidParams(format!("bad grid entry {item:?}"));
        let (key, value) = item.split_once('=').ok_or_else(bad)?;
        let idx = match key.trim() {
            "a" => 0,
            "b" => 1,
            "c" => 2,
            "k" => 3,
            _ => return Err(bad()),
        };
        if !seen.insert(idx) {
            return Err(Error::InvalidParams(format!(
                "grid key {key:?} given twice"
            )));
        }
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        let (lo, hi) = match value.split_once("..") {
            Some((lo, hi)) => (num(lo)?, num(hi)?),
            None => (num(value)?, num(value)?),
        };
        if lo > hi {
            return Err(bad());
        }
        ranges[idx] = (lo, hi);
    }
    let grid = grid_from_ranges(ranges);
    if grid.is_empty() {
        return Err(Error::InvalidParams(format!(
            "grid {spec:?} has no valid points"
        )));
    }
    Ok(grid)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub k_max: usize,
    pub grid: Vec<FamilyParams>,
    pub deletion_points: Vec<FamilyParams>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            k_max: 5,
            grid: default_grid(),
            deletion_points: default_deletion_points(),
        }
    }
}

pub fn verify_all(config: &VerifyConfig) -> VerificationReport {
    VerificationReport::merge([
        verify_components(config.k_max),
        verify_companion_obstruction(config.k_max),
        verify_satellite_twists(&config.grid),
        verify_nonsplit_certificates(&config.grid, config.k_max),
        verify_remark(),
        verify_case2(config.k_max),
        verify_deletion_chain(&config.deletion_points),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_count() {
        let r = verify_components(5);
        assert_eq!(r.checks.len(), 12);
        assert!(r.all_passed());
        let r = verify_components(0);
        assert_eq!(r.summary, Summary { pass: 2, fail: 0 });
    }

    #[test]
    fn obstruction_values() {
        let r = verify_companion_obstruction(3);
        assert!(r.all_passed(), "{}", r.to_text());
        let lk: Vec<_> = r
            .checks
            .iter()
            .filter(|c| c.name == "obstruction.linking_multiset")
            .map(|c| c.computed.as_str())
            .collect();
        assert_eq!(lk, ["[1, 1, 1]", "[1, 1, 2]", "[1, 1, 3]", "[1, 1, 4]"]);
    }

    #[test]
    fn failing_checks_are_reported() {
        let rec = equal("x", vec![], 3).run(|| Ok("4".into()));
        assert!(!rec.pass);
        let rec = at_least("x", vec![], 3).run(|| Ok("4".into()));
        assert!(rec.pass);
        assert_eq!(rec.expected, "≥ 3");
        let rec = equal("x", vec![], 3).run(|| Err(Error::DeleteAll));
        assert!(!rec.pass);
        assert!(rec.computed.starts_with("error: "));
        let r = VerificationReport::from_checks(vec![rec]);
        assert_eq!(r.summary, Summary { pass: 0, fail: 1 });
        assert!(!r.all_passed());
    }

    #[test]
    fn ordering_is_by_name_then_params() {
        let mk = |name: &str, k| equal(name, vec![("k", k)], 0).run(|| Ok("0".into()));
        let r = VerificationReport::from_checks(vec![mk("b", 0), mk("a", 2), mk("a", 1)]);
        let order: Vec<_> = r
            .checks
            .iter()
            .map(|c| (c.name.clone(), c.params["k"]))
            .collect();
        assert_eq!(order, [("a".into(), 1), ("a".into(), 2), ("b".into(), 0)]);
    }

    #[test]
    fn grids() {
        let g = default_grid();
        assert_eq!(g.len(), 26 * 4);
        assert_eq!(parse_grid("").unwrap(), g);
        let g = parse_grid("a=1,b=1,c=2,k=1").unwrap();
        assert_eq!(g, [FamilyParams::new(1, 1, 2, 1)]);
        assert_eq!(parse_grid("a=1..2, b=1, c=1, k=0..1").unwrap().len(), 2);
        assert!(parse_grid("a=1,b=1,c=1").is_err());
        assert!(parse_grid("z=1").is_err());
        assert!(parse_grid("a=3..1").is_err());
        assert!(parse_grid("a=1,a=2").is_err());
        assert!(parse_grid("a=x").is_err());
    }

    #[test]
    fn remark_and_case2() {
        let r = verify_remark();
        assert!(r.all_passed(), "{}", r.to_text());
        let r = verify_case2(4);
        assert!(r.all_passed(), "{}", r.to_text());
        assert_eq!(r.checks.len(), 16);
    }

    #[test]
    fn deletion_and_nonsplit() {
        let r = verify_deletion_chain(&default_deletion_points());
        assert!(r.all_passed(), "{}", r.to_text());
        let grid = parse_grid("a=1..2,b=1..2,c=1..2,k=0..1").unwrap();
        let r = verify_nonsplit_certificates(&grid, 2);
        assert!(r.all_passed(), "{}", r.to_text());
        let r = verify_satellite_twists(&grid);
        assert!(r.all_passed(), "{}", r.to_text());
    }

    #[test]
    fn split_link_is_not_certified() {
        let label = certificate_label(&BraidWord::identity(2)).unwrap();
        assert_eq!(label, "uncertified: lk(1, 2) = 0");
    }
}
