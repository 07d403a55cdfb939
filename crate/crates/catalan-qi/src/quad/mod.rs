//! Numerical integration engine and the semi-infinite integral
//! representations built on it: the generating function G_{a,b}, the
//! second-kind numbers 𝒞ₙ(a,b), the second Catalan–Qi function 𝒞(a,b;z)
//! with its b-derivatives, and the central binomial coefficient.

mod kronrod;
mod tanh_sinh;

pub use kronrod::{integrate_semi_infinite, kronrod_panel};
pub use tanh_sinh::tanh_sinh;

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gamma::PosReal;

/// Tolerance and budget for one integral evaluation.
#[derive(Debug, Clone, Copy)]
pub struct QuadOpts {
    /// Relative tolerance target.
    pub rel_tol: f64,
    /// Hard cap on integrand evaluations.
    pub max_evals: usize,
}

impl Default for QuadOpts {
    fn default() -> Self {
        QuadOpts {
            rel_tol: 1e-10,
            max_evals: 200_000,
        }
    }
}

impl QuadOpts {
    pub fn with_tol(rel_tol: f64) -> Self {
        QuadOpts {
            rel_tol,
            ..QuadOpts::default()
        }
    }
}

/// Outcome of one quadrature run.
///
/// `converged` implies `abs_error_estimate <= rel_tol · max(1, |value|)`;
/// the engine actually aims for the stricter `rel_tol · |value|`.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadResult {
    fn scaled(self, factor: f64) -> QuadResult {
        QuadResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }
}

/// A pointwise evaluator t ↦ f(t) on (0, ∞) together with its singularity
/// descriptor: the exponent of t at the origin (> −1, integrability) and the
/// decay exponent d at infinity (> 1) such that |f(t)| ≤ C·t^(−d) holds for
/// all t ≥ 1. The bound constant C defaults to 1, which every kernel in this
/// crate satisfies after pulling its prefactor outside the integral.
pub struct Integrand<F> {
    f: F,
    origin_exponent: f64,
    decay_exponent: f64,
    tail_coeff: f64,
}

impl<F: Fn(f64) -> f64> Integrand<F> {
    pub fn new(f: F, origin_exponent: f64, decay_exponent: f64) -> Result<Self> {
        if !(origin_exponent > -1.0) || !origin_exponent.is_finite() {
            return Err(Error::domain(format!(
                "origin exponent must exceed -1, got {origin_exponent}"
            )));
        }
        if !(decay_exponent > 1.0) || !decay_exponent.is_finite() {
            return Err(Error::domain(format!(
                "decay exponent must exceed 1, got {decay_exponent}"
            )));
        }
        Ok(Integrand {
            f,
            origin_exponent,
            decay_exponent,
            tail_coeff: 1.0,
        })
    }

    /// Overrides the tail bound constant C.
    pub fn with_tail_coeff(mut self, coeff: f64) -> Result<Self> {
        if !(coeff > 0.0) || !coeff.is_finite() {
            return Err(Error::domain(format!("tail coefficient must be positive, got {coeff}")));
        }
        self.tail_coeff = coeff;
        Ok(self)
    }

    pub fn origin_exponent(&self) -> f64 {
        self.origin_exponent
    }

    pub fn decay_exponent(&self) -> f64 {
        self.decay_exponent
    }

    pub fn tail_coeff(&self) -> f64 {
        self.tail_coeff
    }

    pub(crate) fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }
}

fn pos(name: &str, v: f64) -> Result<f64> {
    PosReal::new(v)
        .map(PosReal::get)
        .map_err(|_| Error::domain(format!("{name} must be a finite positive real, got {v}")))
}

/// G_{a,b}(x) = 1/(a+√(b−x)) as the integral
/// (1/π)∫₀^∞ √t/(a²+t) · 1/(b+t−x) dt, valid for real x ≤ b including the
/// endpoint x = b.
pub fn gen_func_integral(a: f64, b: f64, x: f64, opts: QuadOpts) -> Result<QuadResult> {
    let a = pos("a", a)?;
    let b = pos("b", b)?;
    if !x.is_finite() || x > b {
        return Err(Error::domain(format!(
            "integral representation requires x <= b, got x = {x}, b = {b}"
        )));
    }
    let shift = b - x; // >= 0; kernel denominator is t + shift
    let a2 = a * a;
    let origin = if shift == 0.0 { -0.5 } else { 0.5 };
    let f = move |t: f64| t.sqrt() / ((a2 + t) * (t + shift));
    let integrand = Integrand::new(f, origin, 1.5)?;
    Ok(integrate_semi_infinite(&integrand, opts).scaled(1.0 / PI))
}

/// 𝒞ₙ(a,b) = (1/π)∫₀^∞ √t/(a²+t) · (b+t)^(−(n+1)) dt.
pub fn cq2_integral(a: f64, b: f64, n: u32, opts: QuadOpts) -> Result<QuadResult> {
    let a = pos("a", a)?;
    let b = pos("b", b)?;
    let a2 = a * a;
    let power = -(n as i32) - 1;
    let f = move |t: f64| t.sqrt() / (a2 + t) * (b + t).powi(power);
    let integrand = Integrand::new(f, 0.5, n as f64 + 1.5)?;
    Ok(integrate_semi_infinite(&integrand, opts).scaled(1.0 / PI))
}

/// Second Catalan–Qi function
/// 𝒞(a,b;z) = (1/π)∫₀^∞ √t/(a²+t) · (b+t)^(−(z+1)) dt for real z ≥ 0;
/// at integer z = n it coincides with [`cq2_integral`].
pub fn cq2_function(a: f64, b: f64, z: f64, opts: QuadOpts) -> Result<QuadResult> {
    let a = pos("a", a)?;
    let b = pos("b", b)?;
    if !z.is_finite() || z < 0.0 {
        return Err(Error::domain(format!("z must be finite and >= 0, got {z}")));
    }
    let a2 = a * a;
    // b + t > 0 throughout, so the real power has no branch issues.
    let f = move |t: f64| t.sqrt() / (a2 + t) * (-(z + 1.0) * (b + t).ln()).exp();
    let integrand = Integrand::new(f, 0.5, z + 1.5)?;
    Ok(integrate_semi_infinite(&integrand, opts).scaled(1.0 / PI))
}

/// m-th derivative of 𝒞(a,b;z) with respect to b:
///
/// dᵐ𝒞/dbᵐ = (−1)ᵐ (z+1)ₘ (1/π) ∫₀^∞ √t/(a²+t) · (b+t)^(−(z+m+1)) dt,
///
/// the sign pattern behind complete monotonicity in b.
pub fn cq2_function_db(a: f64, b: f64, z: f64, m: u32, opts: QuadOpts) -> Result<QuadResult> {
    let raw = cq2_function(a, b, z + m as f64, opts)?;
    let mut rising = 1.0;
    for ell in 0..m {
        rising *= z + 1.0 + ell as f64;
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(raw.scaled(sign * rising))
}

/// Central binomial coefficient binom(2n, n) as
/// (2^(2n+1)/π) ∫₀^∞ (1+t²)^(−(n+1)) dt.
pub fn central_binomial_integral(n: u32, opts: QuadOpts) -> Result<QuadResult> {
    if n > 500 {
        return Err(Error::domain(format!(
            "prefactor 2^(2n+1) overflows f64 for n = {n}"
        )));
    }
    let power = -(n as i32) - 1;
    let f = move |t: f64| (1.0 + t * t).powi(power);
    let integrand = Integrand::new(f, 0.0, 2.0 * n as f64 + 2.0)?;
    let scale = 2f64.powi(2 * n as i32 + 1) / PI;
    Ok(integrate_semi_infinite(&integrand, opts).scaled(scale))
}
