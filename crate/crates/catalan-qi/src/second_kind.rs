//! Second-kind Catalan–Qi numbers 𝒞ₙ(a,b): the Taylor coefficients of
//! G_{a,b}(x) = 1/(a+√(b−x)) at x = 0.
//!
//! Two exact routes live here — the explicit double-factorial sum, valued in
//! ℚ(√b), and coefficient extraction from the reciprocal of the binomial
//! series for a+√(b−x) — plus a float route that never materializes a
//! factorial, the a→0⁺ limit formula, and the three-parameter reduction
//! G_{a,b,c}(x) = G_{a/√c, b/c}(x)/√c.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, falling_factorial, rat, BigRat, QuadExtScalar};
use crate::gamma::PosReal;

/// Validated positive rational parameter pair (a, b) for the exact routes.
#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    a: BigRat,
    b: BigRat,
}

impl Params {
    pub fn new(a: BigRat, b: BigRat) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::domain("parameters a, b must be positive".to_string()));
        }
        Ok(Params { a, b })
    }

    pub fn a(&self) -> &BigRat {
        &self.a
    }

    pub fn b(&self) -> &BigRat {
        &self.b
    }
}

/// Exact 𝒞ₙ(a,b) ∈ ℚ(√b) by the explicit formula
///
/// 𝒞ₙ(a,b) = 1/((2n)!!·b^(n+1/2)) Σ_{k=0}^{n}
///             binom(2n−k−1, 2(n−k)) · k! · [2(n−k)−1]!! / (1+a/√b)^(k+1).
///
/// The sum runs over m = n−k from the k = n term downward with an exact term
/// ratio, and the 1/b^(n+1/2) prefactor is carried as b^(−n−1)·√b inside
/// ℚ(√b). At n = 0 the boundary conventions binom(−1,0) = 1 and (−1)!! = 1
/// make the value 1/(a+√b) = G_{a,b}(0).
pub fn cq2_explicit(p: &Params, n: u32) -> QuadExtScalar {
    let b = p.b.clone();
    // 1 + a/√b = 1 + (a/b)·√b
    let rho_inv = QuadExtScalar::new(BigRat::one(), &p.a / &p.b, b.clone())
        .expect("positive radicand");
    let rho = rho_inv.inv().expect("1 + a/√b > 0");

    let n_i = i64::from(n);
    // Term m = 0 (k = n): binom(n−1, 0)·n!·(−1)!!·ρ^{n+1} = n!·ρ^{n+1}.
    let mut ratio = BigRat::from(factorial(n));
    let mut power = rho.pow(n + 1);
    let mut sum = power.scale(&ratio);
    for m in 0..n_i {
        // ratio(m+1)/ratio(m) = (n+m)(n−m−1) / ((2m+2)(n−m))
        ratio *= rat((n_i + m) * (n_i - m - 1), (2 * m + 2) * (n_i - m));
        if ratio.is_zero() {
            break;
        }
        power = power.mul(&rho_inv).expect("shared radicand");
        sum = sum.add(&power.scale(&ratio)).expect("shared radicand");
    }

    // 1/((2n)!!·b^(n+1/2)) = 1/(2^n·n!) · b^(−n−1) · √b
    let scale = BigRat::one()
        / (BigRat::from(factorial(n)) * rat(2, 1).pow(n as i32) * b.pow(n_i as i32 + 1));
    let sqrt_b = QuadExtScalar::sqrt_of(b).expect("positive radicand");
    sum.mul(&sqrt_b).expect("shared radicand").scale(&scale)
}

/// Float 𝒞ₙ(a,b) by the same sum, accumulated through running term ratios so
/// no factorial or double factorial ever materializes.
pub fn cq2_explicit_float(a: f64, b: f64, n: u32) -> Result<f64> {
    let a = PosReal::new(a)
        .map_err(|_| Error::domain(format!("a must be positive, got {a}")))?
        .get();
    let b = PosReal::new(b)
        .map_err(|_| Error::domain(format!("b must be positive, got {b}")))?
        .get();
    let rho = 1.0 / (1.0 + a / b.sqrt());
    let n_i = i64::from(n);
    // Combined m = 0 term: ρ^(n+1) / (2^n · b^(n+1/2)).
    let mut term =
        ((n as f64 + 1.0) * rho.ln() - n as f64 * 2f64.ln() - (n as f64 + 0.5) * b.ln()).exp();
    let mut sum = term;
    for m in 0..n_i {
        let num = ((n_i + m) * (n_i - m - 1)) as f64;
        if num == 0.0 {
            break;
        }
        let den = ((2 * m + 2) * (n_i - m)) as f64;
        term *= num / (den * rho);
        sum += term;
    }
    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(Error::domain(format!(
            "float route overflowed despite term ratios at (a, b, n) = ({a}, {b}, {n})"
        )))
    }
}

/// Truncated Taylor expansion of G_{a,b} with exact coefficients in ℚ(√b);
/// coefficient n is 𝒞ₙ(a,b). The radius hint records b, the distance from
/// the expansion point to the branch point of G_{a,b}.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<QuadExtScalar>,
    radius_hint: BigRat,
}

impl TruncatedSeries {
    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, n: u32) -> Option<&QuadExtScalar> {
        self.coeffs.get(n as usize)
    }

    pub fn coeffs(&self) -> &[QuadExtScalar] {
        &self.coeffs
    }

    pub fn radius_hint(&self) -> &BigRat {
        &self.radius_hint
    }

    /// Σ_{n≤N} cₙ xⁿ in floating point.
    pub fn partial_sum(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }
}

/// Coefficients c₀..c_N of G_{a,b} by series inversion: √(b−x) expands
/// through the binomial series √b·Σ binom(1/2,n)(−x/b)ⁿ, a is added to the
/// constant term, and the reciprocal follows the convolution recurrence
/// dₙ = −(1/e₀)·Σ_{j≥1} eⱼ d_{n−j}, all exactly in ℚ(√b).
pub fn cq2_series(p: &Params, order: u32) -> TruncatedSeries {
    let b = p.b.clone();
    let n = order as usize;

    // e_j: coefficients of a + √(b−x). For j ≥ 1 the coefficient is
    // (−1)^j·binom(1/2, j)·b^(−j)·√b, carried through its q-component.
    let mut denom = Vec::with_capacity(n + 1);
    denom.push(QuadExtScalar::new(p.a.clone(), BigRat::one(), b.clone()).expect("positive b"));
    let mut binom_half = BigRat::one(); // binom(1/2, j)
    let mut b_pow = BigRat::one(); // b^(−j)
    for j in 1..=n {
        binom_half *= (rat(1, 2) - rat(j as i64 - 1, 1)) / rat(j as i64, 1);
        b_pow /= &b;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let q = rat(sign, 1) * &binom_half * &b_pow;
        denom.push(QuadExtScalar::new(BigRat::zero(), q, b.clone()).expect("positive b"));
    }

    let inv_e0 = denom[0].inv().expect("a + √b > 0");
    let mut coeffs: Vec<QuadExtScalar> = Vec::with_capacity(n + 1);
    coeffs.push(inv_e0.clone());
    for m in 1..=n {
        let mut acc = QuadExtScalar::from_rational(BigRat::zero());
        for j in 1..=m {
            acc = acc
                .add(&denom[j].mul(&coeffs[m - j]).expect("shared radicand"))
                .expect("shared radicand");
        }
        let next = inv_e0.mul(&acc).expect("shared radicand").neg();
        coeffs.push(next);
    }
    TruncatedSeries {
        coeffs,
        radius_hint: b,
    }
}

/// Direct evaluation of G_{a,b}(x) = 1/(a+√(b−x)) for x ≤ b; at x = b the
/// value is 1/a.
pub fn gen_func_eval(a: f64, b: f64, x: f64) -> Result<f64> {
    let a = PosReal::new(a)
        .map_err(|_| Error::domain(format!("a must be positive, got {a}")))?
        .get();
    let b = PosReal::new(b)
        .map_err(|_| Error::domain(format!("b must be positive, got {b}")))?
        .get();
    if !x.is_finite() || x > b {
        return Err(Error::domain(format!(
            "generating function requires x <= b, got x = {x}, b = {b}"
        )));
    }
    Ok(1.0 / (a + (b - x).sqrt()))
}

/// lim_{a→0⁺} 𝒞ₙ(a,b) = ((−1)ⁿ/n!)·⟨−1/2⟩ₙ·b^(−(2n+1)/2), exactly in ℚ(√b).
pub fn cq2_limit_a0(b: &BigRat, n: u32) -> Result<QuadExtScalar> {
    if !b.is_positive() {
        return Err(Error::domain("b must be positive".to_string()));
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let c = rat(sign, 1) * falling_factorial(&rat(-1, 2), n) / BigRat::from(factorial(n));
    // b^(−(2n+1)/2) = b^(−n−1)·√b
    let q = c / b.pow(n as i32 + 1);
    QuadExtScalar::new(BigRat::zero(), q, b.clone())
}

/// Reduction of the three-parameter generating function:
/// G_{a,b,c}(x) = scale · G_{a',b'}(x) with (a', b') = (a/√c, b/c) and
/// scale = 1/√c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GabcReduction {
    pub a: f64,
    pub b: f64,
    pub scale: f64,
}

pub fn gabc_reduce(a: f64, b: f64, c: f64) -> Result<GabcReduction> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        PosReal::new(v)
            .map_err(|_| Error::domain(format!("{name} must be positive, got {v}")))?;
    }
    let root_c = c.sqrt();
    Ok(GabcReduction {
        a: a / root_c,
        b: b / c,
        scale: 1.0 / root_c,
    })
}
