use geoshapley::disk_shapley::*;
use geoshapley::games::GameKind;
use geoshapley::geometry::PlanarPointSet;
use geoshapley::oracle::shapley_by_subsets;
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
fn matches_subset_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (measure, game) in [(DiskMeasure::Area, GameKind::DiskArea), (DiskMeasure::Perimeter, GameKind::DiskPerimeter)] {
        for n in 1..=7 {
            for _ in 0..20 {
                let s = random_set(&mut rng, n);
                let want = shapley_by_subsets(game, &s).unwrap();
                let fast = shapley_disk(&s, measure).unwrap();
                let naive = shapley_disk_naive(&s, measure).unwrap();
                assert!(close(&fast.values, &want.values, 1e-9), "{n}: {:?} vs {:?}", fast.values, want.values);
                assert!(close(&naive.values, &want.values, 1e-9));
            }
        }
    }
}

/// Brute force: every pair and every triple, containment tested directly.
fn brute_bases(s: &PlanarPointSet<f64>) -> Vec<(Vec<usize>, usize)> {
    let pts = s.points();
    let n = pts.len();
    let outside = |c: (f64, f64), r2: f64, skip: &[usize]| {
        (0..n)
            .filter(|i| !skip.contains(i))
            .filter(|&i| (pts[i].x - c.0).powi(2) + (pts[i].y - c.1).powi(2) > r2)
            .count()
    };
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let c = ((pts[a].x + pts[b].x) / 2.0, (pts[a].y + pts[b].y) / 2.0);
            let r2 = (pts[a].x - c.0).powi(2) + (pts[a].y - c.1).powi(2);
            out.push((vec![a, b], outside(c, r2, &[a, b])));
            for d in b + 1..n {
                let (p, q, r) = (pts[a], pts[b], pts[d]);
                let acute = |u: (f64, f64), v: (f64, f64), w: (f64, f64)| {
                    (v.0 - u.0) * (w.0 - u.0) + (v.1 - u.1) * (w.1 - u.1) > 0.0
                };
                let (pp, qq, rr) = ((p.x, p.y), (q.x, q.y), (r.x, r.y));
                if !(acute(pp, qq, rr) && acute(qq, pp, rr) && acute(rr, pp, qq)) {
                    continue;
                }
                let dd = 2.0 * (p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y));
                let ux = ((p.x * p.x + p.y * p.y) * (q.y - r.y)
                    + (q.x * q.x + q.y * q.y) * (r.y - p.y)
                    + (r.x * r.x + r.y * r.y) * (p.y - q.y))
                    / dd;
                let uy = ((p.x * p.x + p.y * p.y) * (r.x - q.x)
                    + (q.x * q.x + q.y * q.y) * (p.x - r.x)
                    + (r.x * r.x + r.y * r.y) * (q.x - p.x))
                    / dd;
                let r2 = (p.x - ux).powi(2) + (p.y - uy).powi(2);
                out.push((vec![a, b, d], outside((ux, uy), r2, &[a, b, d])));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn bases_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let s = random_set(&mut rng, 25);
    let mut got: Vec<(Vec<usize>, usize)> = enumerate_bases(&s)
        .unwrap()
        .into_iter()
        .map(|b| (b.support, b.level))
        .collect();
    got.sort();
    assert_eq!(got, brute_bases(&s));
}

#[test]
fn pencil_sums_match_direct() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [5, 12, 30] {
        let s = random_set(&mut rng, n);
        for m in [DiskMeasure::Area, DiskMeasure::Perimeter] {
            let a = excluded_basis_sums(&s, m).unwrap();
            let b = excluded_basis_sums_direct(&s, m).unwrap();
            assert!(close(&a, &b, 1e-10));
        }
    }
}
