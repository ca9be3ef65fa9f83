//! Lower bound on SCSS size and the performance guarantees of the
//! contraction algorithm with the exact finish at cycle length three.
//!
//! With `k` the largest contraction threshold:
//!
//! ```text
//! exact(k)       = 1/(k-1) + sum_{i=1}^{k-1} 1/i^2 - 1/36
//! simplified(k)  = pi^2/6 - 1/36 + 1/(k(k-1))              (>= exact(k))
//! bounded(k, l)  = (1/k - 1/l)/(1 - 1/k) + sum_{i=1}^{k-1} 1/i^2 - 1/36
//! ```
//!
//! `bounded` applies when the input has no cycle longer than `l >= k`.

use thiserror::Error;

use crate::scalar::{RealScalar, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("threshold k = {0} must be at least 4")]
    ThresholdTooSmall(usize),
    #[error("cycle length bound l = {l} is below threshold k = {k}")]
    CycleBoundBelowThreshold { k: usize, l: usize },
}

fn check_threshold(k: usize) -> Result<(), BoundsError> {
    if k < 4 {
        Err(BoundsError::ThresholdTooSmall(k))
    } else {
        Ok(())
    }
}

/// `sum_{i=1}^{upto} 1/i^2`.
pub fn inverse_square_sum<T: Scalar>(upto: usize) -> T {
    (1..=upto).fold(T::zero(), |acc, i| acc + T::ratio(1, i * i))
}

/// `(n - 1) * l / (l - 1)`: no strongly connected spanning subgraph of an
/// `n`-vertex graph with longest cycle `l` has fewer edges.
///
/// Panics if `l < 2`.
pub fn scss_lower_bound<T: Scalar>(n: usize, l: usize) -> T {
    assert!(l >= 2, "longest cycle length must be at least 2");
    T::ratio(n.saturating_sub(1) * l, l - 1)
}

/// Integer ceiling of [`scss_lower_bound`].
pub fn scss_lower_bound_ceil(n: usize, l: usize) -> usize {
    assert!(l >= 2, "longest cycle length must be at least 2");
    (n.saturating_sub(1) * l).div_ceil(l - 1)
}

pub fn exact_bound<T: Scalar>(k: usize) -> Result<T, BoundsError> {
    check_threshold(k)?;
    Ok(T::ratio(1, k - 1) + inverse_square_sum::<T>(k - 1) - T::ratio(1, 36))
}

pub fn bounded_cycle_bound<T: Scalar>(k: usize, l: usize) -> Result<T, BoundsError> {
    check_threshold(k)?;
    if l < k {
        return Err(BoundsError::CycleBoundBelowThreshold { k, l });
    }
    let head = (T::ratio(1, k) - T::ratio(1, l)) / (T::one() - T::ratio(1, k));
    Ok(head + inverse_square_sum::<T>(k - 1) - T::ratio(1, 36))
}

pub fn simplified_bound<T: RealScalar>(k: usize) -> Result<T, BoundsError> {
    check_threshold(k)?;
    Ok(asymptotic_ratio::<T>() + T::ratio(1, k * (k - 1)))
}

/// `pi^2/6 - 1/36`, the limit of the guarantee as `k` grows.
pub fn asymptotic_ratio<T: RealScalar>() -> T {
    T::basel() - T::ratio(1, 36)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GuaranteeReport<T> {
    pub exact_bound: T,
    pub simplified_bound: T,
    pub bounded_cycle_bound: Option<T>,
}

pub fn performance_bounds<T: RealScalar>(k: usize, l: Option<usize>) -> Result<GuaranteeReport<T>, BoundsError> {
    Ok(GuaranteeReport {
        exact_bound: exact_bound(k)?,
        simplified_bound: simplified_bound(k)?,
        bounded_cycle_bound: l.map(|l| bounded_cycle_bound(k, l)).transpose()?,
    })
}
