use crate::scalar::{CompensatedSum, Scalar};

/// `out[k] = v[0] + ... + v[k-1]`, compensated.
pub(crate) fn prefix<T: Scalar>(v: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len() + 1);
    let mut s = CompensatedSum::new();
    out.push(T::zero());
    for &x in v {
        s.add(x);
        out.push(s.value());
    }
    out
}

/// One compensated accumulator per slot.
#[derive(Clone, Debug)]
pub(crate) struct Slots<T>(Vec<CompensatedSum<T>>);

impl<T: Scalar> Slots<T> {
    pub fn new(len: usize) -> Self {
        Self(vec![CompensatedSum::new(); len])
    }

    pub fn add_at(&mut self, start: usize, v: &[T]) {
        for (a, &x) in self.0[start..].iter_mut().zip(v) {
            a.add(x);
        }
    }

    pub fn add(&mut self, k: usize, x: T) {
        self.0[k].add(x);
    }

    pub fn get(&self, k: usize) -> T {
        self.0[k].value()
    }

    pub fn values(&self) -> Vec<T> {
        self.0.iter().map(|a| a.value()).collect()
    }
}
