use geoshapley::algebra::{convolve, convolve_direct};
use geoshapley::geometry::{convex_hull, hull_area, hull_vertices, min_enclosing_disk, Quadrant};
use geoshapley::oracle::shapley_by_permutations;
use geoshapley::{gen, solve, Algorithm, GameKind, PlanarPointSet, Point, Point2, PointSet, SolveOptions};
use proptest::prelude::*;

fn fast(game: GameKind, s: &PointSet) -> Vec<f64> {
    solve(game, s, Algorithm::Fast, SolveOptions::default()).unwrap().values
}

fn points(max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec((-100.0..100.0f64, -100.0..100.0f64), 1..max)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

fn sorted(mut v: Vec<Point>) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = v.drain(..).map(|p| (p.x, p.y)).collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_ignores_input_order((pts, perm) in points(40).prop_flat_map(|p| {
        let idx: Vec<usize> = (0..p.len()).collect();
        (Just(p), Just(idx).prop_shuffle())
    })) {
        let shuffled: Vec<Point> = perm.iter().map(|&i| pts[i]).collect();
        let a: Vec<Point> = convex_hull(&pts).iter().map(|&i| pts[i]).collect();
        let b: Vec<Point> = convex_hull(&shuffled).iter().map(|&i| shuffled[i]).collect();
        prop_assert_eq!(sorted(a), sorted(b));
    }

    #[test]
    fn area_and_radius_grow_with_points(pts in points(50)) {
        for k in 1..pts.len() {
            let (a0, a1) = (hull_area(&hull_vertices(&pts[..k])), hull_area(&hull_vertices(&pts[..=k])));
            prop_assert!(a1 >= a0 - 1e-9 * a1.max(1.0));
            let (r0, r1) = (min_enclosing_disk(&pts[..k]).0.radius, min_enclosing_disk(&pts[..=k]).0.radius);
            prop_assert!(r1 >= r0 - 1e-9 * r1.max(1.0));
        }
    }

    #[test]
    fn enclosing_disk_covers_and_touches_basis(pts in points(60)) {
        let (d, basis) = min_enclosing_disk(&pts);
        let tol = 1e-9 * d.radius.max(1.0);
        prop_assert!(!basis.is_empty() && basis.len() <= 3);
        for p in &pts {
            prop_assert!(p.dist(d.center) <= d.radius + tol);
        }
        for &b in &basis {
            prop_assert!((pts[b].dist(d.center) - d.radius).abs() <= tol);
        }
    }

    #[test]
    fn reflection_round_trips(x in -1e6..1e6f64, y in -1e6..1e6f64) {
        let p = Point::new(x, y);
        for q in Quadrant::ALL {
            let iso = q.isometry();
            prop_assert_eq!(iso.inverse().apply(iso.apply(p)), p);
        }
    }

    #[test]
    fn convolution_is_linear(
        a in prop::collection::vec(-1.0..1.0f64, 1..300),
        bc in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..300),
    ) {
        let (b, c): (Vec<f64>, Vec<f64>) = bc.into_iter().unzip();
        let sum: Vec<f64> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
        let lhs = convolve(&a, &sum);
        let (rb, rc) = (convolve(&a, &b), convolve(&a, &c));
        for k in 0..lhs.len() {
            prop_assert!((lhs[k] - rb[k] - rc[k]).abs() <= 1e-10);
        }
        let direct = convolve_direct(&a, &b);
        for k in 0..direct.len() {
            prop_assert!((direct[k] - rb[k]).abs() <= 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn efficiency_holds(seed in any::<u64>(), n in 1usize..200) {
        for game in GameKind::ALL {
            let n = if matches!(game, GameKind::DiskArea | GameKind::DiskPerimeter) { n.min(60) } else { n };
            let s = gen::instance::<f64>(game, n, seed).unwrap();
            let v = solve(game, &s, Algorithm::Fast, SolveOptions::default()).unwrap();
            prop_assert!(v.efficiency_residual().abs() <= 1e-9 * v.game_total.abs().max(1e-3), "{}", game);
        }
    }

    #[test]
    fn translation_leaves_values(seed in any::<u64>(), n in 1usize..60, dx in -50.0..50.0f64, dy in -50.0..50.0f64) {
        for game in [GameKind::HullArea, GameKind::HullPerimeter, GameKind::DiskArea, GameKind::BboxArea, GameKind::IntervalLength] {
            let s = gen::instance::<f64>(game, n.min(30), seed).unwrap();
            let moved: Vec<Point> = s.points().iter().map(|p| Point::new(p.x + dx, p.y + dy)).collect();
            let t = PointSet::new(moved).unwrap();
            let (a, b) = (fast(game, &s), fast(game, &t));
            let scale = a.iter().fold(1e-3f64, |m, v| m.max(v.abs()));
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() <= 1e-9 * scale.max(dx.abs() + dy.abs()), "{}", game);
            }
        }
    }

    #[test]
    fn mirror_images_get_equal_values(seed in any::<u64>(), half in 1usize..20) {
        // reflecting across x = 0 (hull) or the diagonal (axis games) is an automorphism
        let mut rng = gen::rng(seed);
        let base: Vec<Point> = gen::uniform(&mut rng, half, 0.05, 1.0);
        let mirror_x: Vec<Point> = base.iter().flat_map(|p| [*p, Point::new(-p.x, p.y)]).collect();
        let s = PointSet::new(mirror_x).unwrap();
        for game in [GameKind::HullArea, GameKind::HullPerimeter] {
            let r = solve(game, &s, Algorithm::Fast, SolveOptions::default()).unwrap();
            for k in 0..half {
                prop_assert!((r.values[2 * k] - r.values[2 * k + 1]).abs() <= 1e-12 * r.game_total.max(1.0));
            }
        }
        let diag: Vec<Point> = base.iter().flat_map(|p| [*p, Point::new(p.y, p.x)]).collect();
        let s = PointSet::new(diag).unwrap();
        for game in [GameKind::AnchoredRects, GameKind::AnchoredBboxArea, GameKind::BboxArea] {
            let r = solve(game, &s, Algorithm::Fast, SolveOptions::default()).unwrap();
            for k in 0..half {
                prop_assert!((r.values[2 * k] - r.values[2 * k + 1]).abs() <= 1e-12 * r.game_total.max(1.0), "{}", game);
            }
        }
    }

    #[test]
    fn shared_x_is_exchangeable_in_line_games(xs in prop::collection::vec(0.01..10.0f64, 1..12)) {
        let pts: Vec<Point> = xs.iter().flat_map(|&x| [Point::new(x, 0.0), Point::new(x, 1.0)]).collect();
        let s = PointSet::new(pts).unwrap();
        for game in [GameKind::Airport, GameKind::IntervalLength, GameKind::AreaBand] {
            let v = fast(game, &s);
            for k in 0..xs.len() {
                prop_assert!((v[2 * k] - v[2 * k + 1]).abs() <= 1e-12 * v[2 * k].abs().max(1.0));
            }
        }
    }

    #[test]
    fn origin_is_a_null_player(seed in any::<u64>(), n in 1usize..7) {
        let mut pts = gen::instance::<f64>(GameKind::AnchoredRects, n, seed).unwrap().points().to_vec();
        pts.push(Point::origin());
        let s = PointSet::new(pts).unwrap();
        for game in [GameKind::AnchoredBboxPerimeter, GameKind::AnchoredRects, GameKind::AnchoredBboxArea] {
            let v = shapley_by_permutations(game, &s).unwrap().values;
            prop_assert!(v[n].abs() <= 1e-12);
        }
        prop_assert!(fast(GameKind::AnchoredBboxPerimeter, &s)[n].abs() <= 1e-12);
    }
}

#[test]
fn single_precision_tracks_double() {
    let s = gen::instance::<f64>(GameKind::HullArea, 40, 9).unwrap();
    let pts32: Vec<Point2<f32>> = s.points().iter().map(|p| Point2::new(p.x as f32, p.y as f32)).collect();
    let s32 = PlanarPointSet::new(pts32).unwrap();
    let a = fast(GameKind::HullArea, &s);
    let b = solve(GameKind::HullArea, &s32, Algorithm::Fast, SolveOptions::default()).unwrap().values;
    for (x, y) in a.iter().zip(&b) {
        assert!((x - *y as f64).abs() < 1e-4);
    }
}
