use geoshapley::games::GameKind;
use geoshapley::geometry::PlanarPointSet;
use geoshapley::hull_shapley::*;
use geoshapley::oracle::shapley_by_permutations;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> PlanarPointSet<f64> {
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
        .collect();
    PlanarPointSet::from_xy(&pts).unwrap()
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let scale = b.iter().fold(1e-3f64, |m, v| m.max(v.abs()));
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * scale)
}

#[test]
fn area_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=8 {
        for _ in 0..20 {
            let s = random_set(&mut rng, n);
            let want = shapley_by_permutations(GameKind::HullArea, &s).unwrap();
            let fast = shapley_hull_area(&s).unwrap();
            let naive = shapley_hull_area_naive(&s).unwrap();
            assert!(close(&fast.values, &want.values, 1e-9), "{:?} vs {:?}", fast.values, want.values);
            assert!(close(&naive.values, &want.values, 1e-9));
        }
    }
}

#[test]
fn perimeter_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 1..=8 {
        for _ in 0..20 {
            let s = random_set(&mut rng, n);
            let want = shapley_by_permutations(GameKind::HullPerimeter, &s).unwrap();
            let fast = shapley_hull_perimeter(&s).unwrap();
            let naive = shapley_hull_perimeter_naive(&s).unwrap();
            assert!(close(&fast.values, &want.values, 1e-9), "{:?} vs {:?}", fast.values, want.values);
            assert!(close(&naive.values, &want.values, 1e-9));
        }
    }
}

#[test]
fn levels_match_naive_counting() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = random_set(&mut rng, 40);
    let fast = all_pair_levels(&s).unwrap();
    let slow = all_pair_levels_naive(&s).unwrap();
    assert_eq!(fast, slow);
    for q in 0..40 {
        for r in 0..40 {
            if q != r {
                assert_eq!(fast.get(q, r) + fast.get(r, q), 38);
            }
        }
    }
}
