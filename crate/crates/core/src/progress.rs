//! One-parameter technical-progress families and their verification.
//!
//! A family maps factor inputs `(K, L)` to "effective" inputs as the progress
//! parameter `t` varies. [`check_group_axioms`] verifies numerically that a
//! family composes like a one-parameter transformation group (composition,
//! inverse, identity) and that its capital and labor maps stay independent
//! (non-vanishing Jacobian determinant in `(K, L)`, estimated by central
//! finite differences). [`check_holothetic`] tests whether a production
//! function sees the family purely as a relabeling of its isoquants: all
//! points of one isoquant must transform to a common output level, and that
//! level must move strictly monotonically in `t`.
//!
//! Everything here is decided numerically on sampled grids; reports speak
//! only for the sampled `t` values and points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{CobbDouglasParams, FactorPoint};

/// Default relative tolerance for axiom and holotheticity checks: an order
/// above double-precision accumulation error across composed exponentials.
pub const DEFAULT_CHECK_TOLERANCE: f64 = 1e-9;

/// A one-parameter family of factor transformations.
///
/// Both maps must be defined (finite) in a small neighborhood of any probed
/// point: the independence check evaluates them slightly off the positive
/// orthant when forming central differences.
pub trait ProgressFamily {
    /// Effective capital after progress `t` acts on `(capital, labor)`.
    fn capital_map(&self, capital: f64, labor: f64, t: f64) -> f64;

    /// Effective labor after progress `t` acts on `(capital, labor)`.
    fn labor_map(&self, capital: f64, labor: f64, t: f64) -> f64;

    /// Applies the family at parameter `t`, validating that the image stays
    /// in the positive orthant.
    fn apply(&self, t: f64, point: FactorPoint) -> Result<FactorPoint> {
        let capital = self.capital_map(point.capital(), point.labor(), t);
        if !(capital.is_finite() && capital > 0.0) {
            return Err(Error::Domain(format!(
                "capital map produced {capital} at (K={}, L={}, t={t})",
                point.capital(),
                point.labor()
            )));
        }
        let labor = self.labor_map(point.capital(), point.labor(), t);
        if !(labor.is_finite() && labor > 0.0) {
            return Err(Error::Domain(format!(
                "labor map produced {labor} at (K={}, L={}, t={t})",
                point.capital(),
                point.labor()
            )));
        }
        FactorPoint::new(capital, labor)
    }
}

/// The exponential family `t -> (e^{lambda t} K, e^{lambda t} L)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpProgressFamily {
    lambda: f64,
}

impl ExpProgressFamily {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(Error::InvalidInput(format!(
                "progress intensity lambda must be finite, got {lambda}"
            )));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

impl ProgressFamily for ExpProgressFamily {
    fn capital_map(&self, capital: f64, _labor: f64, t: f64) -> f64 {
        (self.lambda * t).exp() * capital
    }

    fn labor_map(&self, _capital: f64, labor: f64, t: f64) -> f64 {
        (self.lambda * t).exp() * labor
    }
}

/// A family given by arbitrary capital and labor maps `(K, L, t) -> value`.
///
/// The maps must be safe to call concurrently; they are invoked many times
/// by the checkers with no interior mutation expected.
pub struct GeneralProgressFamily {
    capital_map: Box<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>,
    labor_map: Box<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>,
}

impl GeneralProgressFamily {
    pub fn new(
        capital_map: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static,
        labor_map: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            capital_map: Box::new(capital_map),
            labor_map: Box::new(labor_map),
        }
    }
}

impl ProgressFamily for GeneralProgressFamily {
    fn capital_map(&self, capital: f64, labor: f64, t: f64) -> f64 {
        (self.capital_map)(capital, labor, t)
    }

    fn labor_map(&self, capital: f64, labor: f64, t: f64) -> f64 {
        (self.labor_map)(capital, labor, t)
    }
}

/// Outcome of the group-axiom and factor-independence verification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxiomReport {
    /// Largest relative error of `T_t(T_u(p))` against `T_{t+u}(p)`.
    pub composition_max_err: f64,
    /// Largest relative error of `T_0(p)` against `p`.
    pub identity_max_err: f64,
    /// Largest relative error of `T_{-t}(T_t(p))` against `p`.
    pub inverse_max_err: f64,
    /// Smallest absolute Jacobian determinant of the maps in `(K, L)`.
    pub independence_min_absdet: f64,
    /// True iff all three errors are within tolerance and the determinant
    /// never vanishes.
    pub passed: bool,
}

/// Outcome of the numerical holotheticity check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolotheticityReport {
    /// Largest relative spread `(max - min) / min` of transformed output
    /// values across one isoquant, over all sampled `t`.
    pub max_isoquant_spread: f64,
    /// True iff the per-`t` mean transformed output is strictly monotone
    /// across the sampled `t` grid.
    pub monotone_in_t: bool,
    /// True iff the spread stays within tolerance and the relabeling is
    /// strictly monotone.
    pub holothetic: bool,
}

fn max_component_rel_err(value: FactorPoint, reference: FactorPoint) -> f64 {
    let ek = (value.capital() - reference.capital()).abs() / reference.capital().abs();
    let el = (value.labor() - reference.labor()).abs() / reference.labor().abs();
    ek.max(el)
}

/// Relative step for one coordinate of the central-difference Jacobian.
fn fd_step(x: f64) -> f64 {
    (1e-6f64).max(1e-6 * x.abs())
}

fn jacobian_absdet<F: ProgressFamily + ?Sized>(
    family: &F,
    point: FactorPoint,
    t: f64,
) -> Result<f64> {
    let (k, l) = (point.capital(), point.labor());
    let hk = fd_step(k);
    let hl = fd_step(l);
    let probes = [
        family.capital_map(k + hk, l, t),
        family.capital_map(k - hk, l, t),
        family.capital_map(k, l + hl, t),
        family.capital_map(k, l - hl, t),
        family.labor_map(k + hk, l, t),
        family.labor_map(k - hk, l, t),
        family.labor_map(k, l + hl, t),
        family.labor_map(k, l - hl, t),
    ];
    if probes.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain(format!(
            "family map not finite near (K={k}, L={l}, t={t}); cannot form finite differences"
        )));
    }
    let dcap_dk = (probes[0] - probes[1]) / (2.0 * hk);
    let dcap_dl = (probes[2] - probes[3]) / (2.0 * hl);
    let dlab_dk = (probes[4] - probes[5]) / (2.0 * hk);
    let dlab_dl = (probes[6] - probes[7]) / (2.0 * hl);
    Ok((dcap_dk * dlab_dl - dcap_dl * dlab_dk).abs())
}

/// Verifies the group axioms and factor independence on sampled grids.
///
/// For every ordered pair `(t, u)` of `t_samples` and every point, compares
/// `T_t(T_u(p))` against `T_{t+u}(p)`, `T_0(p)` against `p`, and
/// `T_{-t}(T_t(p))` against `p`, all componentwise relative; the Jacobian
/// determinant of the maps in `(K, L)` is estimated by central differences
/// at every `(point, t)` and its minimum absolute value recorded.
pub fn check_group_axioms<F: ProgressFamily + ?Sized>(
    family: &F,
    t_samples: &[f64],
    points: &[FactorPoint],
    tol: f64,
) -> Result<AxiomReport> {
    if points.is_empty() || t_samples.len() < 2 {
        return Err(Error::Precondition(format!(
            "axiom check needs at least one point and two t values, got {} points, {} t values",
            points.len(),
            t_samples.len()
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    if t_samples.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidInput("t samples must be finite".to_string()));
    }

    let mut composition_max_err = 0.0f64;
    let mut identity_max_err = 0.0f64;
    let mut inverse_max_err = 0.0f64;
    let mut independence_min_absdet = f64::INFINITY;

    for &p in points {
        identity_max_err = identity_max_err.max(max_component_rel_err(family.apply(0.0, p)?, p));
        for &t in t_samples {
            let moved = family.apply(t, p)?;
            inverse_max_err =
                inverse_max_err.max(max_component_rel_err(family.apply(-t, moved)?, p));
            independence_min_absdet =
                independence_min_absdet.min(jacobian_absdet(family, p, t)?);
            for &u in t_samples {
                let two_step = family.apply(t, family.apply(u, p)?)?;
                let one_step = family.apply(t + u, p)?;
                composition_max_err =
                    composition_max_err.max(max_component_rel_err(two_step, one_step));
            }
        }
    }

    let passed = composition_max_err <= tol
        && identity_max_err <= tol
        && inverse_max_err <= tol
        && independence_min_absdet > 0.0;
    Ok(AxiomReport {
        composition_max_err,
        identity_max_err,
        inverse_max_err,
        independence_min_absdet,
        passed,
    })
}

/// The relabeling factor `F_t` for a Cobb-Douglas function under the
/// exponential family: `e^{lambda (alpha + beta) t}`.
///
/// Satisfies `f(T_t(p)) = scale_factor(t) * f(p)` for every point `p`.
/// Reduces to `e^{lambda t}` exactly when `alpha + beta = 1`.
pub fn scale_factor(
    params: &CobbDouglasParams,
    family: &ExpProgressFamily,
    t: f64,
) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::InvalidInput(format!("time t must be finite, got {t}")));
    }
    let log_factor = family.lambda() * params.scale_exponent() * t;
    let value = log_factor.exp();
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::Range(format!(
            "scale factor leaves f64 range (log magnitude {log_factor:.6e})"
        )));
    }
    Ok(value)
}

/// Tests whether `production` sees `family` as a pure relabeling of output
/// levels on the given isoquant sample.
///
/// For each `t`, every isoquant point is pushed through the family and
/// re-evaluated; the relative spread of those values must stay within `tol`
/// for a well-defined relabeling to exist on this sample, and the per-`t`
/// mean must move strictly monotonically for the relabeling to qualify.
pub fn check_holothetic<P, F>(
    production: F,
    family: &P,
    t_samples: &[f64],
    isoquant: &[FactorPoint],
    tol: f64,
) -> Result<HolotheticityReport>
where
    P: ProgressFamily + ?Sized,
    F: Fn(FactorPoint) -> Result<f64>,
{
    if isoquant.len() < 2 {
        return Err(Error::Precondition(format!(
            "holotheticity check needs at least two isoquant points, got {}",
            isoquant.len()
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    if t_samples.iter().any(|t| !t.is_finite()) || t_samples.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Precondition(
            "t samples must be finite and strictly increasing".to_string(),
        ));
    }
    if !t_samples.contains(&0.0) {
        return Err(Error::Precondition(
            "t samples must contain 0 (the identity reference)".to_string(),
        ));
    }

    let eval_positive = |pt: FactorPoint| -> Result<f64> {
        let y = production(pt)?;
        if !(y.is_finite() && y > 0.0) {
            return Err(Error::Domain(format!(
                "production map produced {y} at (K={}, L={})",
                pt.capital(),
                pt.labor()
            )));
        }
        Ok(y)
    };

    let spread_of = |values: &[f64]| -> f64 {
        let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (max - min) / min
    };

    // The sample must actually lie on one isoquant before any transformation.
    let base: Vec<f64> = isoquant
        .iter()
        .map(|&p| eval_positive(p))
        .collect::<Result<_>>()?;
    let base_spread = spread_of(&base);
    if base_spread > tol {
        return Err(Error::Precondition(format!(
            "input points are not on a common isoquant: relative spread {base_spread:.6e} exceeds tolerance {tol:.1e}"
        )));
    }

    let mut max_isoquant_spread = 0.0f64;
    let mut means = Vec::with_capacity(t_samples.len());
    for &t in t_samples {
        let values: Vec<f64> = isoquant
            .iter()
            .map(|&p| eval_positive(family.apply(t, p)?))
            .collect::<Result<_>>()?;
        max_isoquant_spread = max_isoquant_spread.max(spread_of(&values));
        means.push(values.iter().sum::<f64>() / values.len() as f64);
    }

    let increasing = means.windows(2).all(|w| w[1] > w[0]);
    let decreasing = means.windows(2).all(|w| w[1] < w[0]);
    let monotone_in_t = increasing || decreasing;
    let holothetic = max_isoquant_spread <= tol && monotone_in_t;
    Ok(HolotheticityReport {
        max_isoquant_spread,
        monotone_in_t,
        holothetic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{eval_production, isoquant_points};
    use approx::assert_relative_eq;

    fn point(k: f64, l: f64) -> FactorPoint {
        FactorPoint::new(k, l).unwrap()
    }

    fn exp_family(lambda: f64) -> ExpProgressFamily {
        ExpProgressFamily::new(lambda).unwrap()
    }

    #[test]
    fn apply_at_zero_is_bitwise_identity() {
        let family = exp_family(0.05);
        let p = point(3.0, 7.0);
        let image = family.apply(0.0, p).unwrap();
        assert_eq!(image.capital().to_bits(), p.capital().to_bits());
        assert_eq!(image.labor().to_bits(), p.labor().to_bits());
    }

    #[test]
    fn apply_scales_by_exponential() {
        // e^{0.1 * 10} = e = 2.718281828459045.
        let family = exp_family(0.1);
        let image = family.apply(10.0, point(1.0, 1.0)).unwrap();
        assert_relative_eq!(image.capital(), std::f64::consts::E, max_relative = 1e-12);
        assert_relative_eq!(image.labor(), std::f64::consts::E, max_relative = 1e-12);
    }

    #[test]
    fn apply_inverse_round_trip() {
        let family = exp_family(0.1);
        let p = point(13.0, 0.37);
        let back = family.apply(-10.0, family.apply(10.0, p).unwrap()).unwrap();
        assert_relative_eq!(back.capital(), p.capital(), max_relative = 1e-12);
        assert_relative_eq!(back.labor(), p.labor(), max_relative = 1e-12);
    }

    #[test]
    fn apply_rejects_escaping_images() {
        let family = GeneralProgressFamily::new(|k, _, t| k - t, |_, l, _| l);
        let err = family.apply(5.0, point(1.0, 1.0)).unwrap_err();
        match err {
            Error::Domain(msg) => assert!(msg.contains("capital map"), "got {msg}"),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn axioms_identity_family() {
        let family = exp_family(0.0);
        let report = check_group_axioms(
            &family,
            &[0.1, 0.2],
            &[point(1.0, 1.0), point(5.0, 0.2)],
            DEFAULT_CHECK_TOLERANCE,
        )
        .unwrap();
        assert_eq!(report.composition_max_err, 0.0);
        assert_eq!(report.identity_max_err, 0.0);
        assert_eq!(report.inverse_max_err, 0.0);
        assert_relative_eq!(report.independence_min_absdet, 1.0, max_relative = 1e-6);
        assert!(report.passed);
    }

    #[test]
    fn axioms_exponential_family_and_jacobian() {
        let family = exp_family(0.3);
        let points = [point(1.0, 1.0), point(12.0, 3.5), point(0.4, 80.0)];
        let report =
            check_group_axioms(&family, &[0.1, 0.2, 0.3], &points, DEFAULT_CHECK_TOLERANCE)
                .unwrap();
        assert!(report.passed, "report: {report:?}");
        // Determinant of the diagonal scaling is e^{2 lambda t}; the recorded
        // minimum over the grid corresponds to the smallest t.
        let expected_min = (2.0 * 0.3 * 0.1f64).exp();
        assert_relative_eq!(
            report.independence_min_absdet,
            expected_min,
            max_relative = 1e-6
        );
    }

    #[test]
    fn axioms_translation_family() {
        // Hand check: (K + t, L + t) composes additively, inverts by -t, and
        // is the identity at t = 0; its Jacobian in (K, L) is the identity.
        let family = GeneralProgressFamily::new(|k, _, t| k + t, |_, l, t| l + t);
        let report = check_group_axioms(
            &family,
            &[0.5, 1.0],
            &[point(2.0, 3.0), point(10.0, 4.0)],
            DEFAULT_CHECK_TOLERANCE,
        )
        .unwrap();
        assert!(report.passed, "report: {report:?}");
        assert!(report.composition_max_err <= 1e-12);
        assert!(report.inverse_max_err <= 1e-12);
        assert_relative_eq!(report.independence_min_absdet, 1.0, max_relative = 1e-6);
    }

    #[test]
    fn axioms_need_enough_samples() {
        let family = exp_family(0.1);
        assert!(check_group_axioms(&family, &[0.1], &[point(1.0, 1.0)], 1e-9).is_err());
        assert!(check_group_axioms(&family, &[0.1, 0.2], &[], 1e-9).is_err());
    }

    #[test]
    fn scale_factor_examples() {
        let family = exp_family(0.2);
        let degree_one = CobbDouglasParams::new(1.0, 0.4, 0.6, 0.0).unwrap();
        assert_eq!(scale_factor(&degree_one, &family, 0.0).unwrap(), 1.0);
        // alpha + beta = 1, lambda = 0.2, t = 5 -> e^1.
        assert_relative_eq!(
            scale_factor(&degree_one, &family, 5.0).unwrap(),
            std::f64::consts::E,
            max_relative = 1e-12
        );
        // alpha = 0.3, beta = 0.6, lambda = 0.1, t = 10 -> e^0.9.
        let p = CobbDouglasParams::new(1.0, 0.3, 0.6, 0.0).unwrap();
        assert_relative_eq!(
            scale_factor(&p, &exp_family(0.1), 10.0).unwrap(),
            2.45960311115695,
            max_relative = 1e-12
        );
    }

    #[test]
    fn scale_factor_matches_direct_evaluation() {
        // f(e^{lambda t} K, e^{lambda t} L) / f(K, L) must equal the closed form.
        let params = CobbDouglasParams::new(0.021, 0.3564, 0.7783, 0.0).unwrap();
        let family = exp_family(0.1);
        for &(k, l, t) in &[(1.0, 1.0, 1.0), (7.3, 0.4, 4.0), (250.0, 31.0, -3.0)] {
            let p = point(k, l);
            let factor = scale_factor(&params, &family, t).unwrap();
            let direct = eval_production(&params, family.apply(t, p).unwrap()).unwrap()
                / eval_production(&params, p).unwrap();
            assert_relative_eq!(direct, factor, max_relative = 1e-12);
        }
    }

    #[test]
    fn cobb_douglas_is_holothetic_under_exponential_family() {
        let params = CobbDouglasParams::new(0.021, 0.3564, 0.7783, 0.0).unwrap();
        let family = exp_family(0.1);
        let isoquant = isoquant_points(&params, 2.0, 7, (0.5, 20.0)).unwrap();
        let report = check_holothetic(
            |p| eval_production(&params, p),
            &family,
            &[0.0, 0.5, 1.0, 1.5, 2.0],
            &isoquant,
            DEFAULT_CHECK_TOLERANCE,
        )
        .unwrap();
        assert!(report.holothetic, "report: {report:?}");
        assert!(report.max_isoquant_spread <= 1e-12);
        assert!(report.monotone_in_t);
    }

    /// Bisection on a monotone function; test-only oracle for constructing a
    /// second point on an isoquant of a non-homogeneous function.
    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, target: f64) -> f64 {
        assert!((f(lo) - target) * (f(hi) - target) < 0.0, "root not bracketed");
        let rising = f(hi) > f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) < target) == rising {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn perturbed_function_is_not_holothetic() {
        // f(K, L) = K^0.3 L^0.6 + K is not homogeneous; the exponential family
        // moves points of one isoquant to different output levels.
        let f = |p: FactorPoint| -> Result<f64> {
            Ok(p.capital().powf(0.3) * p.labor().powf(0.6) + p.capital())
        };
        let family = exp_family(0.1);
        let level = f(point(1.0, 1.3904)).unwrap();
        let second_labor = bisect(
            |l| 2.0f64.powf(0.3) * l.powf(0.6) + 2.0,
            1e-6,
            1.0,
            level,
        );
        let isoquant = [point(1.0, 1.3904), point(2.0, second_labor)];
        let report = check_holothetic(
            f,
            &family,
            &[0.0, 0.5, 1.0, 1.5, 2.0],
            &isoquant,
            DEFAULT_CHECK_TOLERANCE,
        )
        .unwrap();
        assert!(!report.holothetic, "report: {report:?}");
        assert!(report.max_isoquant_spread > 1e-3, "report: {report:?}");
    }

    #[test]
    fn frozen_family_fails_monotonicity() {
        let params = CobbDouglasParams::new(1.0, 0.5, 0.5, 0.0).unwrap();
        let family = exp_family(0.0);
        let isoquant = isoquant_points(&params, 1.0, 5, (0.5, 2.0)).unwrap();
        let report = check_holothetic(
            |p| eval_production(&params, p),
            &family,
            &[0.0, 1.0, 2.0],
            &isoquant,
            DEFAULT_CHECK_TOLERANCE,
        )
        .unwrap();
        // The frozen family moves nothing, so the spread is the (rounding
        // level) spread of the sampled isoquant itself.
        assert!(report.max_isoquant_spread <= 1e-12);
        assert!(!report.monotone_in_t);
        assert!(!report.holothetic);
    }

    #[test]
    fn holothetic_check_rejects_scattered_points() {
        let params = CobbDouglasParams::new(1.0, 0.5, 0.5, 0.0).unwrap();
        let family = exp_family(0.1);
        let scattered = [point(1.0, 1.0), point(2.0, 2.0)];
        let err = check_holothetic(
            |p| eval_production(&params, p),
            &family,
            &[0.0, 1.0],
            &scattered,
            DEFAULT_CHECK_TOLERANCE,
        )
        .unwrap_err();
        match err {
            Error::Precondition(msg) => assert!(msg.contains("spread"), "got {msg}"),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn holothetic_check_requires_zero_in_grid() {
        let params = CobbDouglasParams::new(1.0, 0.5, 0.5, 0.0).unwrap();
        let family = exp_family(0.1);
        let isoquant = isoquant_points(&params, 1.0, 3, (0.5, 2.0)).unwrap();
        assert!(check_holothetic(
            |p| eval_production(&params, p),
            &family,
            &[0.5, 1.0],
            &isoquant,
            DEFAULT_CHECK_TOLERANCE,
        )
        .is_err());
        assert!(check_holothetic(
            |p| eval_production(&params, p),
            &family,
            &[1.0, 0.0],
            &isoquant,
            DEFAULT_CHECK_TOLERANCE,
        )
        .is_err());
    }

    #[test]
    fn checks_are_deterministic() {
        let params = CobbDouglasParams::new(0.5, 0.3, 1.1, 0.0).unwrap();
        let family = exp_family(0.07);
        let isoquant = isoquant_points(&params, 1.0, 6, (0.2, 9.0)).unwrap();
        let run = || {
            check_holothetic(
                |p| eval_production(&params, p),
                &family,
                &[0.0, 0.5, 1.0],
                &isoquant,
                DEFAULT_CHECK_TOLERANCE,
            )
            .unwrap()
        };
        assert_eq!(run(), run());
        let axioms = || {
            check_group_axioms(
                &family,
                &[0.1, 0.7, 1.3],
                &[point(1.0, 2.0), point(3.0, 0.5)],
                DEFAULT_CHECK_TOLERANCE,
            )
            .unwrap()
        };
        assert_eq!(axioms(), axioms());
    }
}
