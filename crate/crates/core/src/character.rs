//! Two-variable character of the Fock module: a power series in `q`
//! (weight) with Laurent-polynomial coefficients in the charge variable.
//!
//! The graded dimensions come from the product
//!
//! ```text
//! prod_{n>=1} (1 - u^{-1} q^n)^{-1} * prod_{n>=0} (1 - u q^n)^{-1}
//! ```
//!
//! where `u` marks charge with `a*` modes counted at +1. The `n = 0` factor
//! makes every coefficient row an eventually-constant staircase in the
//! charge direction, so a series value is only meaningful together with the
//! charge window it was computed for. The conformal prefactor exponent is
//! `-c/24 = -1/12`; it is reported, not expanded.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::error::Error;
use crate::rational::{q_ratio, Q};

/// Expansion of the character up to weight `max_d` and charge `j_window`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    coefficients: BTreeMap<(u32, i64), BigInt>,
    max_d: u32,
    j_min: i64,
    j_max: i64,
    prefactor_exponent: Q,
    charge_convention: &'static str,
}

impl BivariateSeries {
    pub fn coefficient(&self, d: u32, j: i64) -> BigInt {
        self.coefficients
            .get(&(d, j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&(u32, i64), &BigInt)> {
        self.coefficients.iter()
    }

    pub fn max_d(&self) -> u32 {
        self.max_d
    }

    pub fn j_min(&self) -> i64 {
        self.j_min
    }

    pub fn j_max(&self) -> i64 {
        self.j_max
    }

    pub fn prefactor_exponent(&self) -> Q {
        self.prefactor_exponent.clone()
    }

    pub fn charge_convention(&self) -> &'static str {
        self.charge_convention
    }
}

/// Expands the character product, keeping weights `d <= max_d` and charges
/// `-max_d <= j <= j_window`. Coefficients below `j = -d` vanish anyway, so
/// the lower edge is exact; the upper edge is a genuine truncation.
pub fn character_series(max_d: u32, j_window: i64) -> Result<BivariateSeries, Error> {
    if j_window < 0 {
        return Err(Error::Domain(format!(
            "charge window must be nonnegative, got {j_window}"
        )));
    }
    let md = max_d as usize;
    // rows[d] : charge -> coefficient; only n >= 1 factors keep |j| <= d
    let mut rows: Vec<BTreeMap<i64, BigInt>> = vec![BTreeMap::new(); md + 1];
    rows[0].insert(0, BigInt::one());

    // geometric factor (1 - u^e q^n)^{-1}: in place, ascending d
    for (e, n_lo) in [(-1i64, 1u32), (1, 1)] {
        for n in n_lo..=max_d {
            for d in n as usize..=md {
                let prev = rows[d - n as usize].clone();
                for (j, c) in prev {
                    let t = rows[d].entry(j + e).or_insert_with(BigInt::zero);
                    *t += c;
                }
            }
        }
    }

    // the n = 0 charge factor (1 - u)^{-1}: cumulative sum in j up to the
    // requested window
    let mut coefficients = BTreeMap::new();
    for (d, row) in rows.iter().enumerate() {
        let mut running = BigInt::zero();
        let lo = -(d as i64);
        for j in lo..=j_window {
            if let Some(c) = row.get(&j) {
                running += c;
            }
            if j >= -(max_d as i64) && !running.is_zero() {
                coefficients.insert((d as u32, j), running.clone());
            }
        }
    }

    Ok(BivariateSeries {
        coefficients,
        max_d,
        j_min: -(max_d as i64),
        j_max: j_window,
        prefactor_exponent: q_ratio(-1, 12),
        charge_convention: "u marks charge with a* counted at +1; \
             replace u by its inverse for the opposite orientation",
    })
}
