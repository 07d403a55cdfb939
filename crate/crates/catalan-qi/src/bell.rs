//! Bell polynomials of the second kind B_{n,k}(x₁, …, x_{n−k+1}).
//!
//! Three evaluators live here: the defining sum over integer partitions
//! (slow, used as the oracle), a memoized recurrence (the production path),
//! and the closed form at the half falling-factorial arguments
//! xᵢ = ⟨1/2⟩ᵢ that the explicit second-kind formulas rest on.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, double_factorial, factorial, rat, BigRat};

/// Argument vector (x₁, x₂, …) for a Bell polynomial evaluation.
#[derive(Debug, Clone)]
pub struct BellArgs {
    x: Vec<BigRat>,
}

impl BellArgs {
    pub fn new(x: Vec<BigRat>) -> Self {
        BellArgs { x }
    }

    /// The arguments ⟨1/2⟩₁ … ⟨1/2⟩_len.
    pub fn half_falling(len: usize) -> Self {
        let mut x = Vec::with_capacity(len);
        let mut acc = BigRat::one();
        for i in 0..len {
            acc *= rat(1, 2) - rat(i as i64, 1);
            x.push(acc.clone());
        }
        BellArgs::new(x)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    fn check(&self, n: u32, k: u32) -> Result<()> {
        if k > n {
            return Err(Error::domain(format!("B_{{{n},{k}}} requires k <= n")));
        }
        if k > 0 && self.x.len() < (n - k + 1) as usize {
            return Err(Error::domain(format!(
                "B_{{{n},{k}}} needs {} arguments, got {}",
                n - k + 1,
                self.x.len()
            )));
        }
        Ok(())
    }
}

/// Hard cap for the partition oracle; beyond this the enumeration explodes
/// combinatorially and the recurrence is the only sensible route.
const PARTITION_ORACLE_MAX_N: u32 = 25;

/// Evaluates B_{n,k} by its defining sum over all multi-indices
/// (ℓ₁, …, ℓ_{n−k+1}) with Σᵢ i·ℓᵢ = n and Σᵢ ℓᵢ = k:
///
/// B_{n,k} = Σ n!/(∏ ℓᵢ!) · ∏ (xᵢ/i!)^{ℓᵢ}
///
/// Equivalently a sum over partitions of n into exactly k parts. This is the
/// reference oracle; use [`bell_recurrence`] for anything performance-minded.
pub fn bell_partitions(args: &BellArgs, n: u32, k: u32) -> Result<BigRat> {
    args.check(n, k)?;
    if n > PARTITION_ORACLE_MAX_N {
        return Err(Error::domain(format!(
            "partition oracle capped at n <= {PARTITION_ORACLE_MAX_N}, got n = {n}"
        )));
    }
    if k == 0 {
        return Ok(if n == 0 { BigRat::one() } else { BigRat::zero() });
    }

    let mut total = BigRat::zero();
    let mut parts: Vec<u32> = Vec::new();
    // Enumerate partitions of `remaining` into exactly `slots` parts of size
    // <= `max_part`, written in non-increasing order.
    fn recurse(
        remaining: u32,
        slots: u32,
        max_part: u32,
        parts: &mut Vec<u32>,
        args: &BellArgs,
        n: u32,
        total: &mut BigRat,
    ) {
        if slots == 0 {
            if remaining == 0 {
                // Multiplicities of each part size.
                let mut mult = vec![0u32; n as usize + 1];
                for &p in parts.iter() {
                    mult[p as usize] += 1;
                }
                let mut term = BigRat::from(factorial(n));
                for (size, &m) in mult.iter().enumerate().skip(1) {
                    if m == 0 {
                        continue;
                    }
                    let x = &args.x[size - 1];
                    let base = x / BigRat::from(factorial(size as u32));
                    let mut pow = BigRat::one();
                    for _ in 0..m {
                        pow *= &base;
                    }
                    term *= pow / BigRat::from(factorial(m));
                }
                *total += term;
            }
            return;
        }
        // Each remaining slot needs at least 1, so the next part is at most
        // remaining − (slots − 1).
        let hi = max_part.min(remaining.saturating_sub(slots - 1));
        let lo = remaining.div_ceil(slots).max(1);
        for p in lo..=hi {
            parts.push(p);
            recurse(remaining - p, slots - 1, p, parts, args, n, total);
            parts.pop();
        }
    }
    recurse(n, k, n - k + 1, &mut parts, args, n, &mut total);
    Ok(total)
}

/// Evaluates B_{n,k} by the recurrence
///
/// B_{n,k} = Σ_{i=1}^{n−k+1} binom(n−1, i−1) · xᵢ · B_{n−i, k−1}
///
/// with B_{0,0} = 1 and B_{n,0} = 0 for n ≥ 1, memoized over the whole
/// (n, k) table. Agrees exactly with [`bell_partitions`].
pub fn bell_recurrence(args: &BellArgs, n: u32, k: u32) -> Result<BigRat> {
    args.check(n, k)?;
    let n = n as usize;
    let k = k as usize;
    // table[m][j] = B_{m,j}; filled column-by-column in j.
    let mut table = vec![vec![BigRat::zero(); k + 1]; n + 1];
    table[0][0] = BigRat::one();
    for j in 1..=k {
        for m in j..=n.saturating_sub(k - j) {
            let mut acc = BigRat::zero();
            for i in 1..=(m - j + 1) {
                let b = binomial((m - 1) as i64, (i - 1) as u32);
                if b.is_zero() {
                    continue;
                }
                let prev = &table[m - i][j - 1];
                if prev.is_zero() {
                    continue;
                }
                acc += b * &args.x[i - 1] * prev;
            }
            table[m][j] = acc;
        }
    }
    Ok(table[n][k].clone())
}

/// Closed form of B_{n,k} at the half falling-factorial arguments:
///
/// B_{n,k}(⟨1/2⟩₁, …, ⟨1/2⟩_{n−k+1})
///   = (−1)^{n+k} [2(n−k)−1]!! (1/2)ⁿ binom(2n−k−1, 2(n−k))
pub fn bell_half_closed(n: u32, k: u32) -> Result<BigRat> {
    if k > n {
        return Err(Error::domain(format!("B_{{{n},{k}}} requires k <= n")));
    }
    let m = (n - k) as i64;
    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
    let dfact = double_factorial(2 * m - 1)?;
    let half_pow = rat(1, 2).pow(n as i32);
    let binom = binomial(2 * n as i64 - k as i64 - 1, 2 * (n - k));
    Ok(rat(sign, 1) * dfact * half_pow * binom)
}
