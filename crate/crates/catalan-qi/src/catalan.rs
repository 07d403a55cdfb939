//! Catalan numbers and the first-kind Catalan–Qi function C(a,b;x).
//!
//! Cₙ comes in two exact closed forms — binom(2n,n)/(n+1) and the
//! double-factorial sum that falls out of the second-kind explicit formula —
//! and C(a,b;x) in three routes: the gamma-ratio definition and two integral
//! representations (finite beta-type, semi-infinite).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, BigRat};
use crate::gamma::{lbeta_raw, lgamma_raw, PosReal};
use crate::quad::{integrate_semi_infinite, tanh_sinh, Integrand, QuadOpts, QuadResult};

/// Cₙ = binom(2n, n)/(n+1), exactly.
pub fn catalan_exact(n: u32) -> BigInt {
    let c = binomial(2 * n as i64, n) / BigRat::from(BigInt::from(n + 1));
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// Cₙ by the explicit double-factorial sum
///
/// Cₙ = (1/n!) Σ_{ℓ=0}^{n} binom(n+ℓ−1, 2ℓ) · 2^ℓ · (n−ℓ)! · (2ℓ−1)!!
///
/// evaluated exactly with a running term ratio (the ℓ = n term vanishes for
/// n ≥ 1 and the ℓ = 0 term is n!).
pub fn catalan_corollary(n: u32) -> BigInt {
    let n = i64::from(n);
    let mut term: BigInt = factorial(n as u32);
    let mut sum = term.clone();
    for ell in 0..n {
        // term(ℓ+1)/term(ℓ) = (n+ℓ)(n−ℓ−1) / ((ℓ+1)(n−ℓ))
        term *= (n + ell) * (n - ell - 1);
        let den = BigInt::from((ell + 1) * (n - ell));
        debug_assert!((&term % &den).is_zero());
        term /= den;
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    let (q, r) = num_integer::Integer::div_rem(&sum, &factorial(n as u32));
    debug_assert!(r.is_zero());
    q
}

/// Validated parameter pair (a, b) for the first-kind Catalan–Qi function.
/// The integral representations additionally require b > a, checked at the
/// call sites that need it.
#[derive(Debug, Clone, Copy)]
pub struct CQ1Params {
    a: PosReal,
    b: PosReal,
}

impl CQ1Params {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        Ok(CQ1Params {
            a: PosReal::new(a).map_err(|_| Error::domain(format!("a must be positive, got {a}")))?,
            b: PosReal::new(b).map_err(|_| Error::domain(format!("b must be positive, got {b}")))?,
        })
    }

    pub fn a(&self) -> f64 {
        self.a.get()
    }

    pub fn b(&self) -> f64 {
        self.b.get()
    }

    fn require_b_gt_a(&self) -> Result<()> {
        if self.b() > self.a() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "integral representation requires b > a, got a = {}, b = {}",
                self.a(),
                self.b()
            )))
        }
    }
}

/// C(a,b;x) = Γ(b)/Γ(a) · (b/a)^x · Γ(x+a)/Γ(x+b) through log-gamma;
/// exact for x ≥ 0 and never overflows intermediate factors.
pub fn cq1_eval(p: &CQ1Params, x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!("x must be finite and >= 0, got {x}")));
    }
    let (a, b) = (p.a(), p.b());
    let log = lgamma_raw(b) - lgamma_raw(a) + x * (b / a).ln() + lgamma_raw(x + a)
        - lgamma_raw(x + b);
    Ok(log.exp())
}

/// Finite beta-type representation
///
/// C(a,b;x) = (a/b)^(b−1) / B(a, b−a) · ∫₀^(b/a) (b/a − t)^(b−a−1) t^(x+a−1) dt
///
/// for b > a > 0, x ≥ 0. Both endpoints may carry algebraic singularities,
/// so the integral runs under tanh–sinh quadrature.
pub fn cq1_integral_finite(p: &CQ1Params, x: f64, opts: QuadOpts) -> Result<QuadResult> {
    p.require_b_gt_a()?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!("x must be finite and >= 0, got {x}")));
    }
    let (a, b) = (p.a(), p.b());
    let upper = b / a;
    let exp_hi = b - a - 1.0; // exponent of (b/a − t) at the upper endpoint
    let exp_lo = x + a - 1.0; // exponent of t at the lower endpoint
    let raw = tanh_sinh(
        |_t, dist_lo, dist_hi| (exp_hi * dist_hi.ln() + exp_lo * dist_lo.ln()).exp(),
        0.0,
        upper,
        opts,
    );
    let prefactor = ((b - 1.0) * (a / b).ln() - lbeta_raw(a, b - a)).exp();
    Ok(raw.scaled(prefactor))
}

/// Semi-infinite representation
///
/// C(a,b;x) = (a/b)^a / B(a, b−a) · ∫₀^∞ t^(b−a−1) / (t + a/b)^(x+b) dt
///
/// for b > a > 0, x ≥ 0, through the adaptive semi-infinite engine.
pub fn cq1_integral_infinite(p: &CQ1Params, x: f64, opts: QuadOpts) -> Result<QuadResult> {
    p.require_b_gt_a()?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!("x must be finite and >= 0, got {x}")));
    }
    let (a, b) = (p.a(), p.b());
    let shift = a / b;
    let exp0 = b - a - 1.0; // origin exponent, > −1 because b > a
    let power = x + b;
    let f = move |t: f64| (exp0 * t.ln() - power * (t + shift).ln()).exp();
    // t^(b−a−1) (t+a/b)^(−(x+b)) <= t^(−(x+a+1)) for all t > 0.
    let integrand = Integrand::new(f, exp0, x + a + 1.0)?;
    let prefactor = (a * (a / b).ln() - lbeta_raw(a, b - a)).exp();
    Ok(integrate_semi_infinite(&integrand, opts).scaled(prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::to_f64;

    fn opts() -> QuadOpts {
        QuadOpts::default()
    }

    #[test]
    fn catalan_exact_small_values() {
        let expect: [i64; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(catalan_exact(n as u32), BigInt::from(c));
        }
    }

    #[test]
    fn catalan_exact_satisfies_segmented_convolution() {
        // C_{n+1} = Σ_{i=0}^{n} C_i C_{n−i}
        let n_max = 200usize;
        let cs: Vec<BigInt> = (0..=n_max as u32).map(catalan_exact).collect();
        for n in 0..n_max {
            let conv: BigInt = (0..=n).map(|i| &cs[i] * &cs[n - i]).sum();
            assert_eq!(conv, cs[n + 1], "n={n}");
        }
    }

    #[test]
    fn corollary_examples_and_agreement() {
        assert_eq!(catalan_corollary(0), BigInt::one());
        assert_eq!(catalan_corollary(2), BigInt::from(2));
        assert_eq!(catalan_corollary(10), BigInt::from(16796));
        for n in 0..=60 {
            assert_eq!(catalan_corollary(n), catalan_exact(n), "n={n}");
        }
    }

    #[test]
    fn cq1_eval_examples() {
        let p = CQ1Params::new(0.5, 2.0).unwrap();
        assert!((cq1_eval(&p, 0.0).unwrap() - 1.0).abs() < 1e-13);
        assert!((cq1_eval(&p, 3.0).unwrap() - 5.0).abs() < 5e-12);
        let same = CQ1Params::new(1.75, 1.75).unwrap();
        assert!((cq1_eval(&same, 7.5).unwrap() - 1.0).abs() < 1e-12);
        assert!(cq1_eval(&p, -1.0).is_err());
        assert!(CQ1Params::new(0.0, 1.0).is_err());
    }

    #[test]
    fn cq1_relation_to_catalan_numbers() {
        let p = CQ1Params::new(0.5, 2.0).unwrap();
        for n in 0u32..=30 {
            let got = cq1_eval(&p, n as f64).unwrap();
            let expect = to_f64(&BigRat::from(catalan_exact(n)));
            assert!(
                (got / expect - 1.0).abs() <= 1e-11,
                "n={n}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn finite_integral_reduces_to_catalan_values() {
        let p = CQ1Params::new(0.5, 2.0).unwrap();
        let r = cq1_integral_finite(&p, 0.0, opts()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-9);
        let r = cq1_integral_finite(&p, 3.0, opts()).unwrap();
        assert!((r.value - 5.0).abs() < 5.0 * 1e-9);
    }

    #[test]
    fn finite_integral_matches_gamma_route() {
        let p = CQ1Params::new(1.0, 3.0).unwrap();
        let expect = cq1_eval(&p, 2.0).unwrap();
        let r = cq1_integral_finite(&p, 2.0, opts()).unwrap();
        assert!(r.converged);
        assert!((r.value - expect).abs() <= 1e-9 * expect);
    }

    #[test]
    fn infinite_integral_examples() {
        let p = CQ1Params::new(0.5, 2.0).unwrap();
        let r = cq1_integral_infinite(&p, 0.0, opts()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-9);
        let r = cq1_integral_infinite(&p, 4.0, opts()).unwrap();
        assert!((r.value - 14.0).abs() < 14.0 * 1e-9);

        let p = CQ1Params::new(0.75, 2.5).unwrap();
        let expect = cq1_eval(&p, 1.5).unwrap();
        let r = cq1_integral_infinite(&p, 1.5, opts()).unwrap();
        assert!((r.value - expect).abs() <= 1e-9 * expect);
    }

    #[test]
    fn integral_routes_require_b_greater_than_a() {
        let p = CQ1Params::new(2.0, 2.0).unwrap();
        assert!(cq1_integral_finite(&p, 1.0, opts()).is_err());
        assert!(cq1_integral_infinite(&p, 1.0, opts()).is_err());
    }
}
