//! Exact arithmetic: big rationals, the factorial family, and the
//! quadratic extension ℚ(√d).
//!
//! Everything here is immutable after construction and side-effect free,
//! so values can be shared freely across threads.

mod factorial;
mod quadext;

pub use factorial::{binomial, double_factorial, factorial, falling_factorial, rising_factorial};
pub use quadext::QuadExtScalar;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (`num_rational` maintains both invariants).
pub type BigRat = num_rational::BigRational;

/// Shorthand for building a rational from machine integers.
///
/// Panics when `d == 0`; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational from its text form: an optional sign, an integer part,
/// and an optional `/denominator`. Decimal points are rejected; callers that
/// accept decimals parse `f64` themselves.
pub fn parse_rational(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::usage(format!("malformed rational {s:?}")))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| Error::usage(format!("malformed rational {s:?}")))?;
    if denom.is_zero() {
        return Err(Error::usage(format!("zero denominator in {s:?}")));
    }
    Ok(BigRat::new(numer, denom))
}

/// Correctly-rounded conversion from a big rational to `f64`
/// (round-to-nearest, ties-to-even). Overflows to ±∞.
pub fn to_f64(r: &BigRat) -> f64 {
    if r.numer().is_zero() {
        return 0.0;
    }
    let negative = r.numer().sign() == Sign::Minus;
    let n = r.numer().abs().into_parts().1; // BigUint magnitude
    let d = r.denom().abs().into_parts().1;

    // Scale so the integer quotient carries 55 significant bits, then round
    // the low bits away with the division remainder as the sticky bit.
    let shift = 55i64 - (n.bits() as i64 - d.bits() as i64);
    let (q, rem) = if shift >= 0 {
        num_integer::Integer::div_rem(&(n << shift as u64), &d)
    } else {
        num_integer::Integer::div_rem(&n, &(d << (-shift) as u64))
    };
    let qbits = q.bits() as i64; // 54..=56
    let extra = qbits - 53;
    debug_assert!(extra >= 1);
    let top = (&q >> extra as u64).to_u64().expect("53-bit mantissa");
    let low = &q - (&q >> extra as u64 << extra as u64);
    let half = num_bigint::BigUint::from(1u8) << (extra - 1) as u64;
    let sticky = !rem.is_zero();
    let round_up = match low.cmp(&half) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => sticky || top & 1 == 1,
        std::cmp::Ordering::Less => false,
    };
    let mut mant = top;
    let mut exp = extra - shift;
    if round_up {
        mant += 1;
        if mant == 1u64 << 53 {
            mant >>= 1;
            exp += 1;
        }
    }
    let value = mul_pow2(mant as f64, exp);
    if negative {
        -value
    } else {
        value
    }
}

/// Multiplies by 2^k without losing exactness for in-range normal results.
fn mul_pow2(x: f64, k: i64) -> f64 {
    let mut v = x;
    let mut k = k;
    while k > 1000 {
        v *= 2f64.powi(1000);
        k -= 1000;
    }
    while k < -1000 {
        v *= 2f64.powi(-1000);
        k += 1000;
    }
    v * 2f64.powi(k as i32)
}

/// Formats a rational as `numer/denom` with the denominator always present,
/// the form used by the CLI's JSON payloads.
pub fn format_ratio(r: &BigRat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
