//! Exact arithmetic in the quadratic extension ℚ(√d).
//!
//! A value is stored as p + q·√d with rational p, q and a fixed radicand
//! d ≥ 0. One radicand is fixed per value; binary operations refuse to mix
//! two different irrational radicands, but a purely rational value (q = 0)
//! combines with anything. When d is the square of a rational r the
//! irrational part is folded away (q·√d becomes q·r), so equality of
//! canonical values is plain component equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use super::{format_ratio, to_f64, BigRat};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct QuadExtScalar {
    p: BigRat,
    q: BigRat,
    disc: BigRat,
}

/// Exact square root of a nonnegative rational, if it is rational.
fn rational_sqrt(r: &BigRat) -> Option<BigRat> {
    if r.is_negative() {
        return None;
    }
    let sqrt_exact = |n: &BigInt| -> Option<BigInt> {
        let root = n.sqrt();
        (&root * &root == *n).then_some(root)
    };
    let num = sqrt_exact(r.numer())?;
    let den = sqrt_exact(r.denom())?;
    Some(BigRat::new(num, den))
}

impl QuadExtScalar {
    /// Builds p + q·√disc and canonicalizes. Fails when disc < 0.
    pub fn new(p: BigRat, q: BigRat, disc: BigRat) -> Result<Self> {
        if disc.is_negative() {
            return Err(Error::domain(format!(
                "negative radicand {}",
                format_ratio(&disc)
            )));
        }
        let mut value = QuadExtScalar { p, q, disc };
        if !value.q.is_zero() {
            if let Some(root) = rational_sqrt(&value.disc) {
                value.p += &value.q * root;
                value.q = BigRat::zero();
            }
        }
        Ok(value)
    }

    pub fn from_rational(p: BigRat) -> Self {
        QuadExtScalar {
            p,
            q: BigRat::zero(),
            disc: BigRat::zero(),
        }
    }

    /// The element √disc itself.
    pub fn sqrt_of(disc: BigRat) -> Result<Self> {
        QuadExtScalar::new(BigRat::zero(), BigRat::one(), disc)
    }

    pub fn p(&self) -> &BigRat {
        &self.p
    }

    pub fn q(&self) -> &BigRat {
        &self.q
    }

    pub fn disc(&self) -> &BigRat {
        &self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Resolves the radicand both operands must share, treating rational
    /// values (q = 0) as radicand-agnostic.
    fn unify_disc(&self, rhs: &Self) -> Result<BigRat> {
        if self.q.is_zero() {
            Ok(rhs.disc.clone())
        } else if rhs.q.is_zero() || self.disc == rhs.disc {
            Ok(self.disc.clone())
        } else {
            Err(Error::usage(format!(
                "mismatched radicands {} and {}",
                format_ratio(&self.disc),
                format_ratio(&rhs.disc)
            )))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let disc = self.unify_disc(rhs)?;
        QuadExtScalar::new(&self.p + &rhs.p, &self.q + &rhs.q, disc)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let disc = self.unify_disc(rhs)?;
        // (p₁ + q₁√d)(p₂ + q₂√d) = p₁p₂ + q₁q₂d + (p₁q₂ + q₁p₂)√d
        let p = &self.p * &rhs.p + &self.q * &rhs.q * &disc;
        let q = &self.p * &rhs.q + &self.q * &rhs.p;
        QuadExtScalar::new(p, q, disc)
    }

    pub fn neg(&self) -> Self {
        QuadExtScalar {
            p: -self.p.clone(),
            q: -self.q.clone(),
            disc: self.disc.clone(),
        }
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, r: &BigRat) -> Self {
        QuadExtScalar {
            p: &self.p * r,
            q: &self.q * r,
            disc: self.disc.clone(),
        }
    }

    /// Multiplicative inverse via the conjugate:
    /// 1/(p + q√d) = (p − q√d)/(p² − q²d).
    ///
    /// For a canonical nonzero value the norm p² − q²d cannot vanish: q ≠ 0
    /// forces d to be a non-square, and p² = q²d would make √d rational.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        if self.q.is_zero() {
            return Ok(QuadExtScalar {
                p: self.p.recip(),
                q: BigRat::zero(),
                disc: self.disc.clone(),
            });
        }
        let norm = &self.p * &self.p - &self.q * &self.q * &self.disc;
        debug_assert!(!norm.is_zero());
        Ok(QuadExtScalar {
            p: &self.p / &norm,
            q: -(&self.q / &norm),
            disc: self.disc.clone(),
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = QuadExtScalar::from_rational(BigRat::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("shared radicand");
        }
        acc
    }

    /// Exact sign: −1, 0, or +1.
    pub fn signum(&self) -> i32 {
        if self.q.is_zero() {
            num_sign(&self.p)
        } else if self.p.is_zero() {
            num_sign(&self.q)
        } else if self.p.is_positive() == self.q.is_positive() {
            num_sign(&self.p)
        } else {
            // Opposite signs: compare |p| against |q|√d exactly.
            let p2 = &self.p * &self.p;
            let q2d = &self.q * &self.q * &self.disc;
            if p2 > q2d {
                num_sign(&self.p)
            } else {
                num_sign(&self.q)
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.p) + to_f64(&self.q) * to_f64(&self.disc).sqrt()
    }
}

fn num_sign(r: &BigRat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for QuadExtScalar {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.q == other.q
            && (self.q.is_zero() || self.disc == other.disc)
    }
}

impl fmt::Display for QuadExtScalar {
    /// Text form `p/q + r/s*sqrt(u/v)`, all components in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            format_ratio(&self.p),
            format_ratio(&self.q),
            format_ratio(&self.disc)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn qe(p: BigRat, q: BigRat, d: BigRat) -> QuadExtScalar {
        QuadExtScalar::new(p, q, d).unwrap()
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let root2 = QuadExtScalar::sqrt_of(rat(2, 1)).unwrap();
        let sq = root2.mul(&root2).unwrap();
        assert_eq!(sq, QuadExtScalar::from_rational(rat(2, 1)));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let x = qe(rat(1, 1), rat(1, 1), rat(2, 1));
        let inv = x.inv().unwrap();
        assert_eq!(inv, qe(rat(-1, 1), rat(1, 1), rat(2, 1)));
        let product = x.mul(&inv).unwrap();
        assert_eq!(product, QuadExtScalar::from_rational(rat(1, 1)));
    }

    #[test]
    fn perfect_square_radicand_folds() {
        let x = qe(rat(0, 1), rat(1, 1), rat(4, 1));
        assert!(x.is_rational());
        assert_eq!(x.p(), &rat(2, 1));
        let y = qe(rat(1, 1), rat(3, 1), rat(9, 4)); // 1 + 3·(3/2) = 11/2
        assert_eq!(y.p(), &rat(11, 2));
        assert!(y.q().is_zero());
    }

    #[test]
    fn zero_has_no_inverse_and_negative_disc_rejected() {
        assert!(QuadExtScalar::from_rational(rat(0, 1)).inv().is_err());
        assert!(QuadExtScalar::new(rat(1, 1), rat(1, 1), rat(-2, 1)).is_err());
    }

    #[test]
    fn mismatched_radicands_rejected_but_rationals_mix() {
        let a = qe(rat(1, 1), rat(1, 1), rat(2, 1));
        let b = qe(rat(1, 1), rat(1, 1), rat(3, 1));
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
        let r = QuadExtScalar::from_rational(rat(5, 2));
        let sum = a.add(&r).unwrap();
        assert_eq!(sum, qe(rat(7, 2), rat(1, 1), rat(2, 1)));
    }

    #[test]
    fn exact_sign_of_mixed_terms() {
        // 3 − 2√2 > 0, 2 − 2√2 < 0
        assert_eq!(qe(rat(3, 1), rat(-2, 1), rat(2, 1)).signum(), 1);
        assert_eq!(qe(rat(2, 1), rat(-2, 1), rat(2, 1)).signum(), -1);
        assert_eq!(QuadExtScalar::from_rational(rat(0, 1)).signum(), 0);
        assert_eq!(qe(rat(-5, 1), rat(4, 1), rat(2, 1)).signum(), 1); // 4√2 ≈ 5.66
    }

    #[test]
    fn display_text_form() {
        let x = qe(rat(1, 2), rat(-3, 4), rat(2, 1));
        assert_eq!(x.to_string(), "1/2 + -3/4*sqrt(2/1)");
        assert_eq!(
            QuadExtScalar::from_rational(rat(42, 1)).to_string(),
            "42/1 + 0/1*sqrt(0/1)"
        );
    }

    fn arb_elem() -> impl Strategy<Value = QuadExtScalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20, 0i64..30, 1i64..10)
            .prop_map(|(pn, pd, qn, qd, dn, dd)| qe(rat(pn, pd), rat(qn, qd), rat(dn, dd)))
    }

    proptest! {
        #[test]
        fn x_times_inverse_is_one(x in arb_elem()) {
            prop_assume!(!x.is_zero());
            let product = x.mul(&x.inv().unwrap()).unwrap();
            prop_assert_eq!(product, QuadExtScalar::from_rational(rat(1, 1)));
        }

        #[test]
        fn float_image_of_ops_agrees(x in arb_elem(), y in arb_elem()) {
            let y = qe(y.p().clone(), y.q().clone(), x.disc().clone());
            for (exact, float) in [
                (x.add(&y).unwrap(), x.to_f64() + y.to_f64()),
                (x.mul(&y).unwrap(), x.to_f64() * y.to_f64()),
            ] {
                let got = exact.to_f64();
                let ulp = got.abs().max(float.abs()).max(f64::MIN_POSITIVE) * f64::EPSILON;
                prop_assert!((got - float).abs() <= 4.0 * ulp,
                    "exact {got} vs float {float}");
            }
        }

        #[test]
        fn signum_matches_float_sign(x in arb_elem()) {
            let f = x.to_f64();
            prop_assume!(f.abs() > 1e-12);
            prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
        }
    }
}
