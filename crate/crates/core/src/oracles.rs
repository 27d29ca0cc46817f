//! Independent reference computations.
//!
//! Each function here reaches a value checked elsewhere through a different
//! algorithm than the one under test, so agreement is meaningful. They are
//! deliberately simple-minded: series expansion instead of enumeration,
//! pairing enumeration instead of rewriting.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::modes::{bracket, ModeWord};
use crate::rational::Q;

/// Coefficients of `prod_{n>=1} (1 - q^n)^{-2}` through degree `max_d`.
/// This is the generating function for pairs of partitions; the bipartition
/// enumerator must reproduce it.
pub fn bipartition_series(max_d: u32) -> Vec<BigInt> {
    power_series_product(max_d, 2)
}

/// Coefficients of `prod_{n>=1} (1 - q^n)^{-m}` through degree `max_d`,
/// computed by repeated truncated multiplication with each geometric factor.
pub fn power_series_product(max_d: u32, copies: u32) -> Vec<BigInt> {
    let len = max_d as usize + 1;
    let mut coeffs = vec![BigInt::zero(); len];
    coeffs[0] = BigInt::one();
    for n in 1..=max_d as usize {
        for _ in 0..copies {
            // multiply by (1 - q^n)^{-1} = 1 + q^n + q^{2n} + ...
            // in place: c[k] += c[k - n]
            for k in n..len {
                let prev = coeffs[k - n].clone();
                coeffs[k] += prev;
            }
        }
    }
    coeffs
}

/// Wick evaluation of a fully contracted product.
///
/// For a left word made only of vacuum annihilators and a right word made
/// only of creation modes, the degree-zero projection of the product is the
/// scalar obtained by summing, over all complete pairings of left letters
/// with right letters, the product of the pair brackets. Incomplete pairings
/// cannot survive the projection, so this enumeration is exhaustive.
pub fn wick_complete_contraction(left: &ModeWord, right: &ModeWord) -> Q {
    let lg = left.generators();
    let rg = right.generators();
    if lg.len() != rg.len() {
        return Q::zero();
    }
    let n = lg.len();
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        n: usize,
        lg: &[crate::modes::Generator],
        rg: &[crate::modes::Generator],
        used: &mut [bool],
        acc: Q,
    ) -> Q {
        if i == n {
            return acc;
        }
        let mut total = Q::zero();
        for j in 0..n {
            if used[j] {
                continue;
            }
            let b = bracket(lg[i], rg[j]);
            if b.is_zero() {
                continue;
            }
            used[j] = true;
            total += rec(i + 1, n, lg, rg, used, acc.clone() * b);
            used[j] = false;
        }
        total
    }
    rec(0, n, lg, rg, &mut used, Q::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::parse_word;
    use crate::rational::q_int;

    #[test]
    fn series_low_coefficients() {
        let s = bipartition_series(6);
        let expect = [1, 2, 5, 10, 20, 36, 65];
        for (d, e) in expect.iter().enumerate() {
            assert_eq!(s[d], BigInt::from(*e));
        }
    }

    #[test]
    fn single_partition_series() {
        let s = power_series_product(10, 1);
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (d, e) in expect.iter().enumerate() {
            assert_eq!(s[d], BigInt::from(*e));
        }
    }

    #[test]
    fn wick_single_pair() {
        // a*(1) against a(-1): one pairing, bracket -1
        let l = parse_word("a*(1)").unwrap();
        let r = parse_word("a(-1)").unwrap();
        assert_eq!(wick_complete_contraction(&l, &r), q_int(-1));
        // a(1) against a*(-1): +1
        let l = parse_word("a(1)").unwrap();
        let r = parse_word("a*(-1)").unwrap();
        assert_eq!(wick_complete_contraction(&l, &r), q_int(1));
    }

    #[test]
    fn wick_repeated_letters_count_pairings() {
        // a*(1) a*(1) against a(-1) a(-1): 2! pairings, each (-1)^2
        let l = parse_word("a*(1) a*(1)").unwrap();
        let r = parse_word("a(-1) a(-1)").unwrap();
        assert_eq!(wick_complete_contraction(&l, &r), q_int(2));
    }

    #[test]
    fn wick_mismatch_is_zero() {
        let l = parse_word("a*(2)").unwrap();
        let r = parse_word("a(-1)").unwrap();
        assert!(wick_complete_contraction(&l, &r).is_zero());
        let l = parse_word("a*(1) a(2)").unwrap();
        let r = parse_word("a(-1)").unwrap();
        assert!(wick_complete_contraction(&l, &r).is_zero());
    }
}
