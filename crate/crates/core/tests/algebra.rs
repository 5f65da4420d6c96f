use geoshapley::algebra::{direct_rational_eval, multipoint_rational_eval, RationalStepSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(n: usize, m: usize, delta: f64, ell: i64, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let s = RationalStepSeries::new(b, delta);
    let fast = multipoint_rational_eval(&s, ell, m).unwrap();
    let picks: Vec<usize> = (0..64).map(|_| rng.gen_range(0..=m)).chain([0, m]).collect();
    let pts: Vec<i64> = picks.iter().map(|&k| ell + k as i64).collect();
    let slow = direct_rational_eval(&s, &pts).unwrap();
    let scale = slow.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    for (&k, want) in picks.iter().zip(&slow) {
        let err = (fast[k] - want).abs();
        assert!(err <= 1e-9 * scale, "n={n} m={m} k={k} err={err:e} scale={scale:e}");
    }
}

#[test]
fn fft_matches_direct_at_scale() {
    check(100_000, 100_000, 1.0, 0, 1);
    check(100_000, 10, 0.5, 3, 2);
    check(10, 100_000, 2.0, -1, 3);
    check(1_000, 50_000, 1.0, 7, 4);
}

#[test]
fn positive_weights_to_tight_relative_error() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let b: Vec<f64> = (0..100_000).map(|_| rng.gen_range(0.0..1.0)).collect();
    let s = RationalStepSeries::new(b, 1.0);
    let fast = multipoint_rational_eval(&s, 0, 100_000).unwrap();
    for k in (0..=100_000).step_by(997) {
        let want = s.eval(k as f64).unwrap();
        assert!((fast[k] - want).abs() <= 1e-9 * want.abs());
    }
}
