//! Scalar abstractions shared by the counting and optimisation code.

use std::fmt::{Debug, Display};

use num_bigint::BigUint;
use num_traits::{Float, FromPrimitive, Num, One, Signed, Zero};

/// A nonnegative count: partition numbers, sphere sizes, binomials.
pub trait Count: Clone + Debug + Display + Ord + Zero + One + Send + Sync {
    fn from_usize(n: usize) -> Self;
}

impl Count for u64 {
    fn from_usize(n: usize) -> Self {
        n as u64
    }
}

impl Count for u128 {
    fn from_usize(n: usize) -> Self {
        n as u128
    }
}

impl Count for BigUint {
    fn from_usize(n: usize) -> Self {
        BigUint::from(n)
    }
}

/// An exact ordered field. Floating point types are deliberately excluded
/// (they are not `Ord`), so every solver built on this trait is exact.
pub trait ExactField: Clone + Debug + Display + Ord + Num + Signed + FromPrimitive {}

impl<T> ExactField for T where T: Clone + Debug + Display + Ord + Num + Signed + FromPrimitive {}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial<C: Count>(n: usize, k: usize) -> C
where
    for<'a> &'a C: std::ops::Mul<&'a C, Output = C> + std::ops::Div<&'a C, Output = C>,
{
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    for i in 0..k {
        let num = C::from_usize(n - i);
        let den = C::from_usize(i + 1);
        acc = &(&acc * &num) / &den;
    }
    acc
}

/// Hardy–Ramanujan asymptotic `p(n) ~ exp(pi sqrt(2n/3)) / (4 n sqrt 3)`.
///
/// Returns `None` for `n = 0`, where the formula is undefined.
pub fn hardy_ramanujan<F: Float + FromPrimitive>(n: usize) -> Option<F> {
    if n == 0 {
        return None;
    }
    let nf = F::from_usize(n)?;
    let two = F::from_u8(2)?;
    let three = F::from_u8(3)?;
    let four = F::from_u8(4)?;
    let pi = F::from_f64(std::f64::consts::PI)?;
    let exponent = pi * (two * nf / three).sqrt();
    Some(exponent.exp() / (four * nf * three.sqrt()))
}
