//! Exact integer helpers shared across the crate.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Binomial coefficient `C(n, k)` over arbitrary-precision integers,
/// computed multiplicatively with exact division.
///
/// `k < 0` returns 0 (the standard combinatorial convention), as does
/// `k > n`. Requires `n >= 0` when `k > 0`.
pub fn binomial(n: &BigInt, k: &BigInt) -> BigInt {
    if k.is_negative() {
        return BigInt::zero();
    }
    if k.is_zero() {
        return BigInt::one();
    }
    assert!(!n.is_negative(), "binomial: negative upper index");
    if k > n {
        return BigInt::zero();
    }
    // symmetry keeps the loop short
    let mut k = k.clone();
    let mirror = n - &k;
    if mirror < k {
        k = mirror;
    }
    let mut acc = BigInt::one();
    let mut i = BigInt::one();
    while i <= k {
        acc = acc * (n - &k + &i) / &i;
        i += 1;
    }
    acc
}

/// `C(n, k)` for machine-sized inputs.
pub fn binomial_i64(n: i64, k: i64) -> BigInt {
    binomial(&BigInt::from(n), &BigInt::from(k))
}

/// Gcd of a slice of machine integers (absolute values); 0 for an empty or
/// all-zero slice.
pub fn gcd_all(values: &[i64]) -> u64 {
    values
        .iter()
        .fold(0u64, |g, &v| num_integer::gcd(g, v.unsigned_abs()))
}

/// All length-`parts` vectors of nonnegative integers summing to `total`.
/// Enumeration order is lexicographic.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial_i64(4, 2), BigInt::from(6));
        assert_eq!(binomial_i64(8, 3), BigInt::from(56));
        assert_eq!(binomial_i64(5, 0), BigInt::from(1));
        assert_eq!(binomial_i64(5, 5), BigInt::from(1));
        assert_eq!(binomial_i64(5, 6), BigInt::from(0));
        assert_eq!(binomial_i64(5, -1), BigInt::from(0));
        assert_eq!(binomial_i64(0, 0), BigInt::from(1));
        // empty product regardless of the upper index
        assert_eq!(binomial_i64(-1, 0), BigInt::from(1));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn binomial_matches_pascal_triangle() {
        // independent oracle: Pascal's recurrence
        let rows = 40usize;
        let mut pascal = vec![vec![BigInt::from(1)]];
        for n in 1..=rows {
            let prev = &pascal[n - 1];
            let mut row = vec![BigInt::from(1)];
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::from(1));
            pascal.push(row);
        }
        for n in 0..=rows {
            for k in 0..=n {
                assert_eq!(binomial_i64(n as i64, k as i64), pascal[n][k]);
            }
        }
    }

    #[test]
    fn gcd_all_examples() {
        assert_eq!(gcd_all(&[2, 0]), 2);
        assert_eq!(gcd_all(&[-1, -1]), 1);
        assert_eq!(gcd_all(&[6, 10, 15]), 1);
        assert_eq!(gcd_all(&[0, 0]), 0);
    }

    #[test]
    fn compositions_count() {
        // C(total + parts - 1, parts - 1) many
        assert_eq!(compositions(5, 3).len(), 21);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(2, 1), vec![vec![2]]);
    }
}
