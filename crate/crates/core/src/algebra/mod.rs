//! FFT convolution and multipoint evaluation of rational step series.

mod convolve;
mod rational;

pub use convolve::{convolve, convolve_direct, Convolver};
pub use rational::{direct_rational_eval, multipoint_rational_eval, MultipointMode, RationalStepSeries};
