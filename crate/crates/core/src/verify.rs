//! Consistency battery: every identity between independent routes to the
//! same polynomial, run over a sweep of genera and degrees.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodge::HodgeResult;
use crate::polyring::BiLaurent;
use crate::rank2_bundles::{kirwan_genus2, m2_even_polystable, m2_even_strata_oracle, m2_odd};
use crate::triples22::{
    chamber_samples_22, critical_values_22, cumulative_22, flip_difference, flip_difference_by_kind,
    large_sigma_22, poincare_residual, residue_f, residue_f_expr, residue_triples, small_sigma_22,
    small_sigma_strata, telescoping_residual, Regime,
};
use crate::triples_low_rank::{chamber_samples, hodge_12, hodge_21, TripleType};
use crate::xseries::{three_pole_closed_form, three_pole_expr};

pub const CHECK_IDS: [&str; 13] = [
    "kirwan-g2",
    "strata-even-rank2",
    "strata-small-22",
    "telescoping",
    "flip-routes",
    "poincare-specialization",
    "duality",
    "symmetry",
    "positivity",
    "chamber-constancy",
    "three-pole-identity",
    "residue-F-identity",
    "duality-of-ranks",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub instance: String,
    pub status: Status,
    /// Exact residual; absent on a pass and when the computation itself failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BiLaurent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl CheckReport {
    fn from_residual(id: &str, instance: &str, r: Result<BiLaurent>) -> Self {
        let (status, witness, message) = match r {
            Ok(w) if w.is_zero() => (Status::Pass, None, None),
            Ok(w) => (Status::Fail, Some(w), None),
            Err(Error::Consistency { check, residual }) => {
                (Status::Fail, Some(residual), Some(format!("consistency failure: {check}")))
            }
            Err(e) => (Status::Fail, None, Some(e.to_string())),
        };
        CheckReport { check_id: id.into(), instance: instance.into(), status, witness, message }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    /// Every check, with the degree sweep capped at one step.
    Fast,
    Single(&'static str),
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "fast" => Ok(Suite::Fast),
            _ => CHECK_IDS
                .iter()
                .find(|id| **id == s)
                .map(|id| Suite::Single(id))
                .ok_or_else(|| {
                    Error::Domain(format!("unknown suite '{s}'; expected all, fast or one of {}", CHECK_IDS.join(", ")))
                }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub g_min: u32,
    pub g_max: u32,
    /// Number of steps in the `d1 - d2` sweep.
    pub span: u32,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { g_min: 2, g_max: 3, span: 2 }
    }
}

/// Rank (2,2) instances: `d2` in `{0, 1}` and `d1 - d2 = 4g - 3 + 2j` for
/// `j < span`, so the degree sum is odd and `mu1 - mu2 > 2g - 2`.
pub fn rank22_instances(g: u32, span: u32) -> Vec<TripleType> {
    let mut out = Vec::new();
    for j in 0..span as i64 {
        for d2 in 0..=1 {
            out.push(TripleType::rank22(g, d2 + 4 * g as i64 - 3 + 2 * j, d2));
        }
    }
    out
}

/// Rank (2,1) instances `(2,1,d1,0)` with `d1 = 2g + 1 + 2j`.
pub fn rank21_instances(g: u32, span: u32) -> Vec<TripleType> {
    (0..span as i64).map(|j| TripleType::rank21(g, 2 * g as i64 + 1 + 2 * j, 0)).collect()
}

type Job = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>;

fn single(id: &'static str, instance: String, f: impl Fn() -> Result<BiLaurent> + Send + Sync + 'static) -> Job {
    Box::new(move || vec![CheckReport::from_residual(id, &instance, f())])
}

/// One computation feeding the duality, symmetry and positivity checks.
fn projective_battery(instance: String, f: impl Fn() -> Result<HodgeResult> + Send + Sync + 'static) -> Job {
    Box::new(move || match f() {
        Ok(h) => {
            let c0 = h.poly.constant_term();
            let positivity = h.poly.negative_part() + BiLaurent::constant(c0 - 1);
            vec![
                CheckReport::from_residual("duality", &instance, Ok(h.duality_residual())),
                CheckReport::from_residual("symmetry", &instance, Ok(h.symmetry_residual())),
                CheckReport::from_residual("positivity", &instance, Ok(positivity)),
            ]
        }
        Err(e) => {
            let msg = e.to_string();
            ["duality", "symmetry", "positivity"]
                .iter()
                .map(|id| CheckReport::from_residual(id, &instance, Err(Error::Precondition(msg.clone()))))
                .collect()
        }
    })
}

fn jobs(params: &SuiteParams, span: u32) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(single("kirwan-g2", "g=2".into(), || Ok(m2_even_polystable(2)?.poly - kirwan_genus2())));

    for g in params.g_min..=params.g_max {
        jobs.push(single("strata-even-rank2", format!("g={g}"), move || {
            m2_even_strata_oracle(g).map(|_| BiLaurent::zero())
        }));
        jobs.push(single("three-pole-identity", format!("g={g}"), move || {
            let (a, b, c) = (BiLaurent::one(), BiLaurent::uv_pow(1), BiLaurent::uv_pow(-1));
            Ok(three_pole_closed_form(&a, &b, &c, g)? - three_pole_expr(&a, &b, &c, g)?.coeff_x0())
        }));
        for m in 0..span as i64 {
            for (i, (a, b, c)) in residue_triples().into_iter().enumerate() {
                jobs.push(single("residue-F-identity", format!("g={g} m={m} triple={}", i + 1), move || {
                    Ok(residue_f(&a, &b, &c, m, g)? - residue_f_expr(&a, &b, &c, m, g)?.coeff_x0())
                }));
            }
        }
        jobs.push(projective_battery(format!("m2-odd g={g}"), move || m2_odd(g)));

        for t21 in rank21_instances(g, span) {
            for (s1, s2) in chamber_samples(&t21).unwrap_or_default() {
                jobs.push(projective_battery(format!("{t21} sigma={s1}"), move || hodge_21(&t21, &s1)));
                let t12 = t21.dual();
                jobs.push(projective_battery(format!("{t12} sigma={s1}"), move || hodge_12(&t12, &s1)));
                jobs.push(single("chamber-constancy", format!("{t21} sigma={s1},{s2}"), move || {
                    Ok(hodge_21(&t21, &s1)?.poly - hodge_21(&t21, &s2)?.poly)
                }));
                jobs.push(single("duality-of-ranks", format!("{t12} sigma={s2}"), move || {
                    Ok(hodge_12(&t12, &s2)?.poly - hodge_21(&t12.dual(), &s2)?.poly)
                }));
            }
        }

        for t in rank22_instances(g, span) {
            if t.d1.rem_euclid(2) == 1 && t.d2.rem_euclid(2) == 0 {
                jobs.push(single("strata-small-22", t.to_string(), move || {
                    Ok(small_sigma_strata(&t)?.total() - small_sigma_22(&t)?.poly)
                }));
            }
            jobs.push(single("telescoping", t.to_string(), move || telescoping_residual(&t)));
            for w in critical_values_22(&t).unwrap_or_default() {
                jobs.push(single("flip-routes", format!("{t} n={}", w.n), move || {
                    Ok(flip_difference(&t, &w)? - flip_difference_by_kind(&t, &w)?)
                }));
            }
            for (which, label) in [(Regime::Small, "small"), (Regime::Large, "large")] {
                jobs.push(single("poincare-specialization", format!("{t} {label}"), move || {
                    poincare_residual(&t, which)
                }));
            }
            jobs.push(projective_battery(format!("{t} small"), move || small_sigma_22(&t)));
            jobs.push(projective_battery(format!("{t} large"), move || large_sigma_22(&t)));
            for (s1, s2) in chamber_samples_22(&t).unwrap_or_default() {
                jobs.push(single("chamber-constancy", format!("{t} sigma={s1},{s2}"), move || {
                    Ok(cumulative_22(&t, &s1)?.poly - cumulative_22(&t, &s2)?.poly)
                }));
            }
        }
    }
    jobs
}

fn check_rank(id: &str) -> usize {
    CHECK_IDS.iter().position(|c| *c == id).unwrap_or(CHECK_IDS.len())
}

/// Runs the suite in parallel. Reports come back grouped by check id in
/// the order of [`CHECK_IDS`], instances in sweep order, so the output is
/// deterministic.
pub fn run_suite(suite: &Suite, params: &SuiteParams) -> Vec<CheckReport> {
    let span = match suite {
        Suite::Fast => params.span.min(1),
        _ => params.span,
    };
    let mut reports: Vec<CheckReport> = jobs(params, span)
        .into_par_iter()
        .flat_map_iter(|job| job())
        .collect();
    if let Suite::Single(id) = suite {
        reports.retain(|r| r.check_id == *id);
    }
    reports.sort_by_key(|r| check_rank(&r.check_id));
    reports
}

pub fn json_lines(reports: &[CheckReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
        .collect()
}

/// Per-check pass/fail counts.
pub fn summary_table(reports: &[CheckReport]) -> String {
    let mut out = format!("{:<26} {:>6} {:>6}\n", "check", "pass", "fail");
    for id in CHECK_IDS {
        let rows: Vec<_> = reports.iter().filter(|r| r.check_id == id).collect();
        if rows.is_empty() {
            continue;
        }
        let pass = rows.iter().filter(|r| r.passed()).count();
        let _ = writeln!(out, "{:<26} {:>6} {:>6}", id, pass, rows.len() - pass);
    }
    let pass = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "{:<26} {:>6} {:>6}", "total", pass, reports.len() - pass);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("fast".parse::<Suite>().unwrap(), Suite::Fast);
        assert_eq!("telescoping".parse::<Suite>().unwrap(), Suite::Single("telescoping"));
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn single_check_is_filtered_and_passes() {
        let params = SuiteParams { g_min: 2, g_max: 2, span: 1 };
        let reports = run_suite(&Suite::Single("flip-routes"), &params);
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.check_id == "flip-routes" && r.passed()));
    }

    #[test]
    fn failing_residual_carries_witness() {
        let r = CheckReport::from_residual("symmetry", "x", Ok(BiLaurent::u()));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness, Some(BiLaurent::u()));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"status\":\"fail\""));
    }
}
