use super::convolve::Convolver;
use crate::error::{Result, ShapleyError};
use crate::scalar::Scalar;

/// `R(x) = sum_t b[t] / (delta + t + x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalStepSeries<T> {
    pub b: Vec<T>,
    pub delta: T,
}

/// How consecutive evaluations are carried out.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MultipointMode {
    #[default]
    Fft,
    Direct,
}

/// Below this much work the transform is not worth it.
const DIRECT_WORK: usize = 4096;

impl<T: Scalar> RationalStepSeries<T> {
    pub fn new(b: Vec<T>, delta: T) -> Self {
        Self { b, delta }
    }

    pub fn eval(&self, x: T) -> Result<T> {
        let mut s = T::zero();
        for (t, &bt) in self.b.iter().enumerate() {
            if bt == T::zero() {
                continue;
            }
            let d = self.delta + T::of_usize(t) + x;
            if d == T::zero() {
                return Err(ShapleyError::domain(format!("zero denominator at x = {x}, t = {t}")));
            }
            s = s + bt / d;
        }
        Ok(s)
    }
}

/// `R(x)` at each integer of `points` by direct summation.
pub fn direct_rational_eval<T: Scalar>(series: &RationalStepSeries<T>, points: &[i64]) -> Result<Vec<T>> {
    points.iter().map(|&x| series.eval(T::of_i64(x))).collect()
}

/// `R(ell), R(ell+1), ..., R(ell+m)` with one convolution.
pub fn multipoint_rational_eval<T: Scalar>(
    series: &RationalStepSeries<T>,
    ell: i64,
    m: usize,
) -> Result<Vec<T>> {
    Convolver::new().multipoint(series, ell, m, MultipointMode::Fft)
}

impl<T: Scalar> Convolver<T> {
    pub fn multipoint(
        &mut self,
        series: &RationalStepSeries<T>,
        ell: i64,
        m: usize,
        mode: MultipointMode,
    ) -> Result<Vec<T>> {
        let base = series.delta + T::of_i64(ell);
        if !(base > T::zero()) {
            return Err(ShapleyError::domain(format!(
                "evaluation start {ell} must exceed -delta = {}",
                -series.delta
            )));
        }
        if series.b.is_empty() {
            return Ok(vec![T::zero(); m + 1]);
        }
        let n = series.b.len() - 1;
        if mode == MultipointMode::Direct || (n + 1) * (m + 1) <= DIRECT_WORK {
            return (0..=m).map(|k| series.eval(T::of_i64(ell + k as i64))).collect();
        }
        // a[i] = 1/(delta + ell + m + n - i), R(ell + j) = c[m + n - j]
        let top = m + n;
        let a: Vec<T> = (0..=top)
            .map(|i| T::one() / (base + T::of_usize(top - i)))
            .collect();
        let c = self.convolve_fft(&series.b, &a);
        Ok((0..=m).map(|j| c[top - j]).collect())
    }
}
