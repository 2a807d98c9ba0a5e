//! Acceptance battery: one line per criterion, all identities exact.

use std::time::{Duration, Instant};

use num_rational::Rational64;
use triples_hodge::rank2_bundles::{kirwan_genus2, m2_even_polystable, m2_even_stable, m2_even_strata_oracle, m2_odd};
use triples_hodge::triples22::{
    accumulated_flips, big_n, chamber_samples_22, critical_values_22, cumulative_22, flip_difference,
    flip_difference_by_kind, large_sigma_22, large_sigma_via_residues, poincare_closed, residue_f,
    residue_f_expr, residue_triples, small_sigma_22, small_sigma_strata_oracle, Regime, WallKind,
};
use triples_hodge::triples_low_rank::{chamber_samples, critical_values_21, hodge_12, hodge_21, SigmaValue, TripleType};
use triples_hodge::xseries::{three_pole_closed_form, three_pole_expr};
use triples_hodge::{BiLaurent, HodgeResult};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const STRATA_INSTANCES: [(u32, i64, i64); 8] =
    [(2, 5, 0), (2, 7, 0), (2, 9, 0), (2, 9, 2), (3, 9, 0), (3, 11, 0), (3, 13, 0), (3, 11, 2)];

const TELESCOPING_INSTANCES: [(u32, i64, i64); 8] =
    [(2, 6, 1), (2, 7, 0), (2, 8, 1), (2, 9, 0), (3, 13, 0), (3, 12, 1), (3, 10, 1), (3, 9, 0)];

fn telescoping_types() -> Vec<TripleType> {
    TELESCOPING_INSTANCES.iter().map(|&(g, d1, d2)| TripleType::rank22(g, d1, d2)).collect()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn zero(residual: &BiLaurent, what: impl FnOnce() -> String) -> Outcome {
    ensure(residual.is_zero(), || format!("{}: residual {residual}", what()))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn kirwan() -> Outcome {
    let expected = BiLaurent::from_terms([(0, 0, 1), (1, 0, 1)]).powu(2)
        * BiLaurent::from_terms([(0, 0, 1), (0, 1, 1)]).powu(2)
        * BiLaurent::from_terms([(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)]);
    let got = m2_even_polystable(2).map_err(err)?.poly;
    zero(&(&got - &expected), || "polystable genus 2".into())?;
    zero(&(&got - &kirwan_genus2()), || "stored genus 2 value".into())
}

fn even_strata() -> Outcome {
    for g in 2..=4 {
        let oracle = m2_even_strata_oracle(g).map_err(err)?;
        zero(&(&oracle - &m2_even_stable(g).map_err(err)?.poly), || format!("g={g}"))?;
    }
    Ok(())
}

fn small_strata() -> Outcome {
    for (g, d1, d2) in STRATA_INSTANCES {
        let t = TripleType::rank22(g, d1, d2);
        let strata = small_sigma_strata_oracle(&t).map_err(err)?;
        zero(&(&strata - &small_sigma_22(&t).map_err(err)?.poly), || t.to_string())?;
    }
    Ok(())
}

fn telescoping() -> Outcome {
    for t in telescoping_types() {
        let small = small_sigma_22(&t).map_err(err)?.poly;
        let flips = accumulated_flips(&t, (t.d1 - t.d2) / 2).map_err(err)?;
        let large = large_sigma_22(&t).map_err(err)?.poly;
        zero(&(&small + &flips - &large), || format!("{t} telescoping"))?;
        let via_residues = large_sigma_via_residues(&t).map_err(err)?;
        zero(&(&via_residues - &large), || format!("{t} residue route"))?;
        let beyond = cumulative_22(&t, &SigmaValue::exact(Rational64::from_integer(t.d1 - t.d2 + 1)))
            .map_err(err)?
            .poly;
        zero(&(&beyond - &large), || format!("{t} cumulative past the last wall"))?;
    }
    Ok(())
}

fn flip_routes() -> Outcome {
    for t in telescoping_types() {
        let walls = critical_values_22(&t).map_err(err)?;
        ensure(walls.len() as i64 == (t.d1 - t.d2) / 2, || format!("{t}: wall count"))?;
        for w in walls {
            ensure(matches!(w.kind, WallKind::DL { .. } | WallKind::DF { .. }), || format!("{t}: {w}"))?;
            let unified = flip_difference(&t, &w).map_err(err)?;
            let by_kind = flip_difference_by_kind(&t, &w).map_err(err)?;
            zero(&(&unified - &by_kind), || format!("{t} {w}"))?;
        }
    }
    Ok(())
}

fn poincare_specializations() -> Outcome {
    for t in telescoping_types() {
        for (which, h) in [
            (Regime::Small, small_sigma_22(&t).map_err(err)?),
            (Regime::Large, large_sigma_22(&t).map_err(err)?),
        ] {
            let closed = poincare_closed(&t, which).map_err(err)?;
            zero(&(&closed - &h.poly.diagonal()), || format!("{t} {which:?}"))?;
        }
    }
    Ok(())
}

fn battery(label: &str, h: &HodgeResult) -> Outcome {
    ensure(h.is_smooth_projective(), || format!("{label}: not smooth projective"))?;
    ensure(h.symmetry_residual().is_zero(), || format!("{label}: symmetry"))?;
    ensure(h.poly.has_nonnegative_coefficients(), || format!("{label}: positivity"))?;
    ensure(h.poly.constant_term() == 1.into(), || format!("{label}: constant term"))?;
    zero(&h.duality_residual(), || format!("{label}: duality at dim {}", h.dim))
}

fn projective_battery() -> Outcome {
    for g in 2..=3 {
        battery(&format!("m2-odd g={g}"), &m2_odd(g).map_err(err)?)?;
    }
    let sweep = TripleType::rank21(2, 9, 0);
    let chambers = chamber_samples(&sweep).map_err(err)?;
    ensure(chambers.len() == 5, || format!("{sweep}: expected 5 chambers, got {}", chambers.len()))?;
    for (s1, s2) in chambers {
        for s in [s1, s2] {
            let h = hodge_21(&sweep, &s).map_err(err)?;
            ensure(h.dim == sweep.dimension(), || format!("{sweep}: dimension"))?;
            battery(&format!("{sweep} sigma={s}"), &h)?;
            let dual = sweep.dual();
            battery(&format!("{dual} sigma={s}"), &hodge_12(&dual, &s).map_err(err)?)?;
        }
    }
    for t in telescoping_types() {
        for h in [small_sigma_22(&t).map_err(err)?, large_sigma_22(&t).map_err(err)?] {
            ensure(h.dim == t.dimension(), || format!("{t}: dimension"))?;
            battery(&t.to_string(), &h)?;
        }
    }
    Ok(())
}

fn extraction_identities() -> Outcome {
    let (a, b, c) = (BiLaurent::one(), BiLaurent::uv_pow(1), BiLaurent::uv_pow(-1));
    for g in 2..=5 {
        let closed = three_pole_closed_form(&a, &b, &c, g).map_err(err)?;
        let direct = three_pole_expr(&a, &b, &c, g).map_err(err)?.coeff_x0();
        zero(&(&closed - &direct), || format!("three-pole g={g}"))?;
    }
    for t in telescoping_types() {
        let m = (t.d1 - t.d2) / 2 - (2 * t.g as i64 - 2);
        for (a, b, c) in residue_triples() {
            let closed = residue_f(&a, &b, &c, m, t.g).map_err(err)?;
            let direct = residue_f_expr(&a, &b, &c, m, t.g).map_err(err)?.coeff_x0();
            zero(&(&closed - &direct), || format!("residue {t} ({a}, {b}, {c})"))?;
        }
    }
    Ok(())
}

fn chamber_constancy() -> Outcome {
    let sweep = TripleType::rank21(2, 9, 0);
    let mut seen = Vec::new();
    for (s1, s2) in chamber_samples(&sweep).map_err(err)? {
        let h1 = hodge_21(&sweep, &s1).map_err(err)?.poly;
        zero(&(&h1 - &hodge_21(&sweep, &s2).map_err(err)?.poly), || format!("{sweep} at {s1}, {s2}"))?;
        seen.push(h1);
    }
    ensure(critical_values_21(&sweep).map_err(err)?.len() == 5, || "rank (2,1) critical values".into())?;
    ensure(seen.windows(2).all(|w| w[0] != w[1]), || format!("{sweep}: adjacent chambers agree"))?;
    for t in telescoping_types() {
        for (s1, s2) in chamber_samples_22(&t).map_err(err)? {
            let h1 = cumulative_22(&t, &s1).map_err(err)?.poly;
            let h2 = cumulative_22(&t, &s2).map_err(err)?.poly;
            zero(&(&h1 - &h2), || format!("{t} at {s1}, {s2}"))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 polystable genus 2 value", kirwan),
        ("2 even-degree strata oracle g=2,3,4", even_strata),
        ("3 small-parameter strata oracle", small_strata),
        ("4 wall-crossing telescoping", telescoping),
        ("5 per-kind vs unified flips", flip_routes),
        ("6 Poincare specializations", poincare_specializations),
        ("7 duality/symmetry/positivity battery", projective_battery),
        ("8 extraction identities", extraction_identities),
        ("9 chamber constancy", chamber_constancy),
    ];
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, check) in criteria {
        let t0 = Instant::now();
        let outcome = check();
        let elapsed = t0.elapsed();
        match &outcome {
            Ok(()) => println!("PASS  {name}  ({:.2}s)", elapsed.as_secs_f64()),
            Err(e) => {
                println!("FAIL  {name}  ({:.2}s): {e}", elapsed.as_secs_f64());
                failures.push(name);
            }
        }
        if name.starts_with("1 ") {
            assert!(elapsed < Duration::from_secs(1), "criterion 1 took {elapsed:?}");
        }
    }
    let total = start.elapsed();
    println!("total {:.2}s", total.as_secs_f64());
    assert!(total < Duration::from_secs(60), "battery took {total:?}");
    assert!(failures.is_empty(), "failed: {failures:?}");
    // N is odd on every telescoping instance
    assert!(telescoping_types().iter().all(|t| big_n(t) % 2 == 1));
}
