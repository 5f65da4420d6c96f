use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::scalar::Scalar;

/// Below this many multiply-adds the direct product beats the transform.
const DIRECT_WORK: usize = 2048;

/// Real convolution through a cached FFT planner. One per worker thread.
pub struct Convolver<T: Scalar> {
    planner: FftPlanner<T>,
    buf: Vec<Complex<T>>,
}

impl<T: Scalar> Default for Convolver<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> Convolver<T> {
    pub fn new() -> Self {
        Self {
            planner: FftPlanner::new(),
            buf: Vec::new(),
        }
    }

    /// `c[k] = sum a[i] b[k-i]`, length `|a| + |b| - 1`.
    pub fn convolve(&mut self, a: &[T], b: &[T]) -> Vec<T> {
        assert!(!a.is_empty() && !b.is_empty(), "convolution of an empty sequence");
        if a.len().min(b.len()) <= 8 || a.len() * b.len() <= DIRECT_WORK {
            return convolve_direct(a, b);
        }
        self.convolve_fft(a, b)
    }

    /// Always through the transform, regardless of size.
    pub fn convolve_fft(&mut self, a: &[T], b: &[T]) -> Vec<T> {
        let out_len = a.len() + b.len() - 1;
        let size = out_len.next_power_of_two();
        let zero = Complex::new(T::zero(), T::zero());
        self.buf.clear();
        self.buf.resize(size, zero);
        // pack both real inputs into one complex signal z = a + i b
        for (z, &v) in self.buf.iter_mut().zip(a) {
            z.re = v;
        }
        for (z, &v) in self.buf.iter_mut().zip(b) {
            z.im = v;
        }
        self.planner.plan_fft_forward(size).process(&mut self.buf);
        // A_k B_k = (Z_k^2 - conj(Z_{N-k})^2) / 4i
        let quarter = T::of(0.25);
        let mut prod = vec![zero; size];
        for k in 0..size {
            let zk = self.buf[k];
            let zm = self.buf[(size - k) % size].conj();
            let d = zk * zk - zm * zm;
            prod[k] = Complex::new(d.im * quarter, -d.re * quarter);
        }
        self.planner.plan_fft_inverse(size).process(&mut prod);
        let scale = T::one() / T::of_usize(size);
        prod[..out_len].iter().map(|z| z.re * scale).collect()
    }
}

pub fn convolve<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    Convolver::new().convolve(a, b)
}

pub fn convolve_direct<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let mut c = vec![T::zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = x.mul_add(y, c[i + j]);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_anchors() {
        assert_eq!(convolve(&[1.0, 1.0], &[1.0, 1.0]), vec![1.0, 2.0, 1.0]);
        let a = [3.0, -1.0, 2.5];
        assert_eq!(convolve(&a, &[1.0]), a.to_vec());
        let mut cv = Convolver::<f64>::new();
        let c = cv.convolve_fft(&[1.0, 1.0], &[1.0, 1.0]);
        for (x, y) in c.iter().zip([1.0, 2.0, 1.0]) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn fft_matches_direct() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a: Vec<f64> = (0..1000).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let b: Vec<f64> = (0..777).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let fast = Convolver::new().convolve_fft(&a, &b);
        let slow = convolve_direct(&a, &b);
        let max = slow.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (x, y) in fast.iter().zip(&slow) {
            assert!((x - y).abs() <= 1e-9 * max);
        }
    }
}
