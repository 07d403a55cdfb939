//! The factorial family: plain and double factorials, falling and rising
//! factorials, and the generalized binomial coefficient built on them.
//!
//! The double factorial is extended to negative odd arguments by
//! (−2ℓ−1)!! = (−1)^ℓ / (2ℓ−1)!!, which is what makes the closed forms in
//! this crate valid at their boundary indices.

use num_bigint::BigInt;
use num_traits::One;

use super::BigRat;
use crate::error::{Error, Result};

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=i64::from(n)).fold(BigInt::one(), |acc, k| acc * k)
}

/// Double factorial m!!, defined for every even m ≥ 0, odd m ≥ 1, and every
/// negative odd m. Even negative arguments have no finite value.
///
/// * even m: 2·4···m, with 0!! = 1
/// * positive odd m: 1·3···m
/// * m = −(2ℓ+1): (−1)^ℓ / (2ℓ−1)!!, so (−1)!! = 1, (−3)!! = −1, (−5)!! = −1/3
pub fn double_factorial(m: i64) -> Result<BigRat> {
    if m >= 0 {
        let mut acc = BigInt::one();
        let mut k = if m % 2 == 0 { 2 } else { 1 };
        while k <= m {
            acc *= k;
            k += 2;
        }
        Ok(BigRat::from(acc))
    } else if m % 2 != 0 {
        let ell = (-m - 1) / 2;
        let odd = double_factorial(2 * ell - 1)?;
        let value = odd.recip();
        Ok(if ell % 2 == 0 { value } else { -value })
    } else {
        Err(Error::domain(format!(
            "double factorial undefined for negative even argument {m}"
        )))
    }
}

/// Falling factorial ⟨α⟩ₙ = α(α−1)···(α−n+1), with the empty product 1 at n = 0.
pub fn falling_factorial(alpha: &BigRat, n: u32) -> BigRat {
    let mut acc = BigRat::one();
    let mut factor = alpha.clone();
    for _ in 0..n {
        acc *= &factor;
        factor -= BigRat::one();
    }
    acc
}

/// Rising factorial (Pochhammer symbol) (z)ₙ = z(z+1)···(z+n−1), 1 at n = 0.
pub fn rising_factorial(z: &BigRat, n: u32) -> BigRat {
    let mut acc = BigRat::one();
    let mut factor = z.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += BigRat::one();
    }
    acc
}

/// Generalized binomial coefficient binom(m, k) = ⟨m⟩ₖ / k!.
///
/// For m ≥ 0 this is the combinatorial value (zero when k > m). For negative
/// m it is the falling-factorial extension, so binom(−1, 0) = 1 — the value
/// the boundary terms of the explicit formulas require.
pub fn binomial(m: i64, k: u32) -> BigRat {
    falling_factorial(&BigRat::from(BigInt::from(m)), k) / BigRat::from(factorial(k))
}
