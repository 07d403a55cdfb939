//! Verification harness for the discrete identities relating double
//! factorials, central binomials, Catalan numbers, and the Catalan–Qi
//! families, with machine-readable reports.
//!
//! Exact suites compare big rationals and report plain pass/fail; float
//! suites carry the tolerance they were run at and the worst deviation seen.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::catalan::{catalan_exact, cq1_eval, CQ1Params};
use crate::exact::{binomial, double_factorial, factorial, format_ratio, rat, BigRat, QuadExtScalar};
use crate::quad::{integrate_semi_infinite, Integrand, QuadOpts};
use crate::second_kind::{cq2_explicit, cq2_explicit_float, Params};

/// One failed check: the index it failed at and both sides, rendered as text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub n: u32,
    pub expected: String,
    pub got: String,
}

/// Outcome of one identity suite over 0..=n_max (or 1..=n_max where the
/// identity starts at 1). Exact suites always report
/// `max_float_deviation = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub suite: String,
    pub n_max: u32,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub max_float_deviation: f64,
}

impl IdentityReport {
    fn new(suite: &str, n_max: u32) -> Self {
        IdentityReport {
            suite: suite.to_string(),
            n_max,
            passed: true,
            failures: Vec::new(),
            max_float_deviation: 0.0,
        }
    }

    fn fail(&mut self, n: u32, expected: String, got: String) {
        self.passed = false;
        self.failures.push(Failure { n, expected, got });
    }

    fn check_exact(&mut self, n: u32, expected: &BigRat, got: &BigRat) {
        if expected != got {
            self.fail(n, format_ratio(expected), format_ratio(got));
        }
    }

    fn check_float(&mut self, n: u32, expected: f64, got: f64, tol: f64) {
        let dev = (got - expected).abs() / expected.abs().max(f64::MIN_POSITIVE);
        self.max_float_deviation = self.max_float_deviation.max(dev);
        if !(dev <= tol) {
            self.fail(n, format!("{expected:e}"), format!("{got:e}"));
        }
    }

    /// Deterministic JSON rendering; two runs over the same inputs produce
    /// byte-identical strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Σ_{ℓ=0}^{n} binom(n+ℓ−1, 2ℓ)·(n−ℓ)!·(2ℓ−1)!! = (2n−1)!!, exactly.
pub fn verify_double_factorial_sum(n_max: u32) -> IdentityReport {
    let mut report = IdentityReport::new("double-factorial-sum", n_max);
    for n in 0..=n_max {
        let lhs = power_sum_query(n, &BigRat::one());
        let rhs = double_factorial(2 * i64::from(n) - 1).expect("odd argument");
        report.check_exact(n, &rhs, &lhs);
    }
    report
}

/// Σ_{ℓ=0}^{n} binom(n+ℓ−1, 2ℓ)·(n−ℓ)!·(2ℓ−1)!!·2^ℓ = (n!/(n+1))·binom(2n,n),
/// exactly.
pub fn verify_central_binomial_sum(n_max: u32) -> IdentityReport {
    let mut report = IdentityReport::new("central-binomial-sum", n_max);
    for n in 0..=n_max {
        let lhs = power_sum_query(n, &rat(2, 1));
        let rhs = BigRat::from(factorial(n) * catalan_exact(n));
        report.check_exact(n, &rhs, &lhs);
    }
    report
}

/// The exploratory power sum Σ_{ℓ=0}^{n} binom(n+ℓ−1, 2ℓ)·(n−ℓ)!·(2ℓ−1)!!·t^ℓ.
///
/// At t = 1 it collapses to (2n−1)!! and at t = 2 to n!·Cₙ; whether a simple
/// closed form exists for other t is open, so this evaluator is the tool for
/// exploring it rather than an answer.
pub fn power_sum_query(n: u32, t: &BigRat) -> BigRat {
    let n_i = i64::from(n);
    let mut total = BigRat::zero();
    let mut t_pow = BigRat::one();
    for ell in 0..=n_i {
        if ell > 0 {
            t_pow *= t;
        }
        total += binomial(n_i + ell - 1, 2 * ell as u32)
            * BigRat::from(factorial((n_i - ell) as u32))
            * double_factorial(2 * ell - 1).expect("odd argument")
            * &t_pow;
    }
    total
}

/// Both central-binomial partial-sum identities:
///
/// Σ_{k=0}^{n−1} binom(2k,k)/((k+1)4^k) = 2·[1 − binom(2n,n)/4ⁿ]
/// Σ_{k=0}^{n−1} binom(2k,k)·4^(n−k)/(n−k) = 2·binom(2n,n)·Σ_{k=1}^{n} 1/(2k−1)
///
/// checked exactly for 1 ≤ n ≤ n_max (the n = 0 sums are empty).
pub fn verify_lemma3_sums(n_max: u32) -> IdentityReport {
    let mut report = IdentityReport::new("lemma3-sums", n_max);
    // binom(2k, k) for k = 0..n_max, built incrementally.
    let centrals: Vec<BigRat> = {
        let mut v = Vec::with_capacity(n_max as usize + 1);
        let mut c = BigRat::one();
        v.push(c.clone());
        for k in 0..n_max as i64 {
            // binom(2k+2, k+1) = binom(2k, k)·2(2k+1)/(k+1)
            c *= rat(2 * (2 * k + 1), k + 1);
            v.push(c.clone());
        }
        v
    };

    for n in 1..=n_max {
        let n_i = n as i64;

        let mut lhs1 = BigRat::zero();
        let mut four_pow = BigRat::one();
        for k in 0..n_i {
            lhs1 += &centrals[k as usize] / (rat(k + 1, 1) * &four_pow);
            four_pow *= rat(4, 1);
        }
        // four_pow is now 4^n.
        let rhs1 = rat(2, 1) * (BigRat::one() - &centrals[n as usize] / &four_pow);
        report.check_exact(n, &rhs1, &lhs1);

        let mut lhs2 = BigRat::zero();
        for k in 0..n_i {
            lhs2 += &centrals[k as usize] * rat(4, 1).pow((n_i - k) as i32) / rat(n_i - k, 1);
        }
        let odd_harmonic: BigRat = (1..=n_i).map(|k| rat(1, 2 * k - 1)).sum();
        let rhs2 = rat(2, 1) * &centrals[n as usize] * odd_harmonic;
        report.check_exact(n, &rhs2, &lhs2);
    }
    report
}

/// The two reductions onto the Catalan numbers: 𝒞ₙ(1/2, 1/4) = Cₙ exactly,
/// and C(1/2, 2; n) = Cₙ in floating point at the given tolerance.
pub fn verify_reductions(n_max: u32, tol: f64) -> IdentityReport {
    let mut report = IdentityReport::new("reductions", n_max);
    let p2 = Params::new(rat(1, 2), rat(1, 4)).expect("positive");
    let p1 = CQ1Params::new(0.5, 2.0).expect("positive");
    for n in 0..=n_max {
        let catalan = BigRat::from(catalan_exact(n));

        let second = cq2_explicit(&p2, n);
        if !(second.is_rational() && second.p() == &catalan) {
            report.fail(n, format_ratio(&catalan), second.to_string());
        }

        let first = cq1_eval(&p1, n as f64).expect("valid arguments");
        report.check_float(n, crate::exact::to_f64(&catalan), first, tol);
    }
    report
}

/// The integral identity tying the explicit formula to the semi-infinite
/// representation:
///
/// ∫₀^∞ √t/(a²+t) · (b+t)^(−(n+1)) dt = π·𝒞ₙ(a,b)
///
/// compared in floating point for 0 ≤ n ≤ n_max. Non-convergence of the
/// quadrature counts as a suite failure.
pub fn verify_integral_identity(
    a: f64,
    b: f64,
    n_max: u32,
    tol: f64,
    opts: QuadOpts,
) -> IdentityReport {
    let mut report = IdentityReport::new("integral-identity", n_max);
    for n in 0..=n_max {
        let expected = match cq2_explicit_float(a, b, n) {
            Ok(v) => std::f64::consts::PI * v,
            Err(e) => {
                report.fail(n, "finite explicit value".to_string(), e.to_string());
                continue;
            }
        };
        let a2 = a * a;
        let power = -(n as i32) - 1;
        let f = move |t: f64| t.sqrt() / (a2 + t) * (b + t).powi(power);
        let integrand = Integrand::new(f, 0.5, n as f64 + 1.5).expect("valid descriptor");
        let quad = integrate_semi_infinite(&integrand, opts);
        if !quad.converged {
            report.fail(
                n,
                format!("{expected:e}"),
                format!("{:e} (quadrature did not converge)", quad.value),
            );
            continue;
        }
        report.check_float(n, expected, quad.value, tol);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn double_factorial_sum_small_cases() {
        // n = 0: 1 = (−1)!!; n = 1: 1 = 1!!; n = 2: 2 + 1 = 3!!
        let report = verify_double_factorial_sum(2);
        assert!(report.passed, "{report:?}");
        assert_eq!(report.max_float_deviation, 0.0);
    }

    #[test]
    fn central_binomial_sum_small_cases() {
        // n = 2: 2 + 2 = (2!/3)·6 = 4
        let report = verify_central_binomial_sum(10);
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn power_sum_specializations() {
        for n in 0..=200u32 {
            let at_one = power_sum_query(n, &rat(1, 1));
            assert_eq!(at_one, double_factorial(2 * i64::from(n) - 1).unwrap());
            let at_two = power_sum_query(n, &rat(2, 1));
            assert_eq!(at_two, BigRat::from(factorial(n) * catalan_exact(n)));
        }
        // Single ℓ = 0 term regardless of t.
        assert_eq!(power_sum_query(0, &rat(7, 3)), rat(1, 1));
    }

    #[test]
    fn lemma3_hand_checked_values() {
        // n = 1: 1 = 2(1 − 2/4) and 4 = 2·2·1; n = 2, second identity: 16.
        let report = verify_lemma3_sums(2);
        assert!(report.passed, "{report:?}");
        let mut lhs2 = BigRat::zero();
        for k in 0..2i64 {
            let central = binomial(2 * k, k as u32);
            lhs2 += central * rat(4, 1).pow((2 - k) as i32) / rat(2 - k, 1);
        }
        assert_eq!(lhs2, rat(16, 1));
    }

    #[test]
    fn reductions_pass_at_modest_range() {
        let report = verify_reductions(60, 1e-10);
        assert!(report.passed, "{report:?}");
        assert!(report.max_float_deviation <= 1e-10);
        assert!(report.max_float_deviation > 0.0);
    }

    #[test]
    fn integral_identity_examples() {
        let opts = QuadOpts::with_tol(1e-10);
        for (a, b, n_max) in [(0.5, 0.25, 4u32), (1.0, 1.0, 2), (2.0, 4.0, 2)] {
            let report = verify_integral_identity(a, b, n_max, 1e-8, opts);
            assert!(report.passed, "a={a} b={b}: {report:?}");
        }
    }

    #[test]
    fn integral_identity_flags_budget_starvation() {
        let starved = QuadOpts {
            rel_tol: 1e-10,
            max_evals: 40,
        };
        let report = verify_integral_identity(0.5, 0.25, 0, 1e-8, starved);
        assert!(!report.passed);
        assert!(report.failures[0].got.contains("did not converge"));
    }

    #[test]
    fn reports_serialize_deterministically() {
        let a = verify_lemma3_sums(20).to_json();
        let b = verify_lemma3_sums(20).to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"suite\":\"lemma3-sums\""));
        assert!(a.contains("\"passed\":true"));

        let parsed: IdentityReport = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed, verify_lemma3_sums(20));
    }

    #[test]
    fn failing_suite_reports_the_offender() {
        // A deliberately wrong tolerance cannot fail an exact suite, so force
        // a float failure through an absurd tolerance demand instead.
        let report = verify_reductions(5, 1e-18);
        assert!(!report.passed);
        assert!(!report.failures.is_empty());
        let json = report.to_json();
        assert!(json.contains("\"passed\":false"));
    }
}
