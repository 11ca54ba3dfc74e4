//! Adaptive quadrature used by the correlation and moment integrals.
//!
//! Integrands here are smooth with algebraic tails; infinite upper limits are
//! mapped to [0, 1) with r = a + t / (1 - t) before the adaptive pass.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 60;

struct Adaptive<'a, F> {
    f: &'a F,
    worst_error: f64,
    converged: bool,
}

impl<F: Fn(f64) -> f64> Adaptive<'_, F> {
    fn simpson(&self, a: f64, fa: f64, b: f64, fb: f64, fm: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }

    fn step(
        &mut self,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.f)(lm);
        let frm = (self.f)(rm);
        let left = self.simpson(a, fa, m, fm, flm);
        let right = self.simpson(m, fm, b, fb, frm);
        let err = (left + right - whole) / 15.0;
        if err.abs() <= tol || depth >= MAX_DEPTH {
            if err.abs() > tol {
                self.converged = false;
                self.worst_error = self.worst_error.max(err.abs());
            }
            return left + right + err;
        }
        self.step(a, fa, m, fm, flm, left, 0.5 * tol, depth + 1)
            + self.step(m, fm, b, fb, frm, right, 0.5 * tol, depth + 1)
    }
}

/// Adaptive Simpson integration of `f` over [a, b] to absolute tolerance `abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    let mut state = Adaptive { f: &f, worst_error: 0.0, converged: true };
    // Seed with a few panels so a symmetric integrand cannot fool the first
    // error estimate.
    let panels = 8;
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let x0 = a + i as f64 * h;
        let x1 = x0 + h;
        let xm = 0.5 * (x0 + x1);
        let f0 = f(x0);
        let f1 = f(x1);
        let fm = f(xm);
        let whole = state.simpson(x0, f0, x1, f1, fm);
        total += state.step(x0, f0, x1, f1, fm, whole, abs_tol / panels as f64, 0);
    }
    if state.converged {
        Ok(total)
    } else {
        Err(Error::QuadratureNonConvergence { error: state.worst_error, tolerance: abs_tol })
    }
}

/// Integrate `f` over [a, infinity) by the substitution r = a + t / (1 - t).
pub fn integrate_to_inf<F: Fn(f64) -> f64>(f: F, a: f64, abs_tol: f64) -> Result<f64> {
    let transformed = move |t: f64| {
        // keep 1/(1-t) finite; the true integrand decays at the far end
        let t = t.min(1.0 - 1e-13);
        let u = 1.0 - t;
        let r = a + t / u;
        f(r) / (u * u)
    };
    integrate(transformed, 0.0, 1.0, abs_tol)
}

/// Integrate `f` over [a, infinity) to a relative tolerance.
///
/// A coarse fixed-panel pass sizes the absolute tolerance handed to the
/// adaptive pass, so heavy integrands (small epsilon inflates the path loss
/// integrals by orders of magnitude) do not over-subdivide.
pub fn integrate_to_inf_rel<F: Fn(f64) -> f64>(f: F, a: f64, rel_tol: f64) -> Result<f64> {
    let transformed = |t: f64| {
        let t: f64 = t.min(1.0 - 1e-13);
        let u = 1.0 - t;
        f(a + t / u) / (u * u)
    };
    let mut rough = 0.0;
    let panels = 256;
    let h = 1.0 / panels as f64;
    for i in 0..panels {
        let x0 = i as f64 * h;
        rough += h / 6.0
            * (transformed(x0) + 4.0 * transformed(x0 + 0.5 * h) + transformed(x0 + h));
    }
    let abs_tol = rel_tol * rough.abs().max(1e-30);
    integrate(transformed, 0.0, 1.0, abs_tol)
}

/// Composite Simpson with panel doubling until the estimate is stable to
/// `rel_tol`. For smooth integrands only; used for the inner angular integral
/// of the spatial correlation cross term.
pub fn converging_simpson<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<f64> {
    let mut panels = 16usize;
    let mut prev = f64::NAN;
    loop {
        let h = (b - a) / panels as f64;
        let mut sum = f(a) + f(b);
        for i in 1..panels {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * f(a + i as f64 * h);
        }
        let value = sum * h / 3.0;
        if !prev.is_nan() {
            let err = (value - prev).abs();
            if err <= rel_tol * value.abs().max(1e-300) {
                return Ok(value);
            }
            if panels >= 1 << 20 {
                return Err(Error::QuadratureNonConvergence { error: err, tolerance: rel_tol });
            }
        }
        prev = value;
        panels *= 2;
    }
}
