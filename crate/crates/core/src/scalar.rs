//! Scalar abstraction shared by every engine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use rustfft::FftNum;

/// Real field the engines compute in: `f32` or `f64`.
pub trait Scalar:
    Float + FftNum + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + 'static
{
    /// Relative threshold below which a predicate determinant is treated as zero.
    const DEGENERACY_TOL: f64;
    /// Relative slack used when testing disk containment.
    const CONTAINMENT_TOL: f64;

    #[inline]
    fn of(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("finite conversion")
    }

    #[inline]
    fn of_usize(v: usize) -> Self {
        <Self as FromPrimitive>::from_usize(v).expect("integer conversion")
    }

    #[inline]
    fn of_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer conversion")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }

    fn pi() -> Self {
        Self::of(std::f64::consts::PI)
    }
}

impl Scalar for f64 {
    const DEGENERACY_TOL: f64 = 1e-12;
    const CONTAINMENT_TOL: f64 = 1e-9;
}

impl Scalar for f32 {
    const DEGENERACY_TOL: f64 = 1e-5;
    const CONTAINMENT_TOL: f64 = 1e-4;
}

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum<T> {
    sum: T,
    carry: T,
}

impl<T: Scalar> CompensatedSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            carry: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, v: T) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry = self.carry + ((self.sum - t) + v);
        } else {
            self.carry = self.carry + ((v - t) + self.sum);
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> T {
        self.sum + self.carry
    }
}

/// Compensated sum of a slice, in slice order.
pub fn compensated_sum<T: Scalar>(values: &[T]) -> T {
    let mut acc = CompensatedSum::new();
    for &v in values {
        acc.add(v);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut v = vec![1e16_f64];
        v.extend(std::iter::repeat_n(1.0, 1000));
        v.push(-1e16);
        assert_eq!(compensated_sum(&v), 1000.0);
    }

    #[test]
    fn conversions() {
        assert_eq!(<f32 as Scalar>::of_usize(3), 3.0f32);
        assert_eq!(<f64 as Scalar>::of_i64(-2), -2.0);
        assert!((<f64 as Scalar>::pi() - std::f64::consts::PI).abs() < 1e-15);
    }
}
