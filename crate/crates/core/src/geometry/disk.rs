use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::point::Point2;
use crate::scalar::Scalar;

const SHUFFLE_SEED: u64 = 0x5eed_d15c;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk<T> {
    pub center: Point2<T>,
    pub radius: T,
}

impl<T: Scalar> Disk<T> {
    pub fn point(p: Point2<T>) -> Self {
        Self {
            center: p,
            radius: T::zero(),
        }
    }

    /// Disk with `p` and `q` as a diameter.
    pub fn diametral(p: Point2<T>, q: Point2<T>) -> Self {
        let two = T::of(2.0);
        Self {
            center: Point2::new((p.x + q.x) / two, (p.y + q.y) / two),
            radius: p.dist(q) / two,
        }
    }

    /// Circle through three points; `None` when they are collinear.
    pub fn circumscribed(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Option<Self> {
        let (b, c) = (b - a, c - a);
        let d = T::of(2.0) * b.cross(c);
        if d == T::zero() {
            return None;
        }
        let (bl, cl) = (b.norm_sq(), c.norm_sq());
        let u = Point2::new((c.y * bl - b.y * cl) / d, (b.x * cl - c.x * bl) / d);
        let center = a + u;
        if !center.is_finite() {
            return None;
        }
        Some(Self {
            center,
            radius: u.norm(),
        })
    }

    pub fn area(&self) -> T {
        T::pi() * self.radius * self.radius
    }

    pub fn perimeter(&self) -> T {
        T::of(2.0) * T::pi() * self.radius
    }

    /// Containment with relative slack `rel` of the length scale.
    pub fn contains_within(&self, p: Point2<T>, rel: T, scale: T) -> bool {
        self.center.dist(p) <= self.radius + rel * scale
    }

    fn contains_loose(&self, p: Point2<T>) -> bool {
        let slack = T::of(T::CONTAINMENT_TOL) * (self.radius + T::epsilon());
        self.center.dist(p) <= self.radius + slack
    }
}

/// Smallest enclosing disk and a basis of 1–3 indices spanning it.
pub fn min_enclosing_disk<T: Scalar>(points: &[Point2<T>]) -> (Disk<T>, Vec<usize>) {
    assert!(!points.is_empty(), "enclosing disk of an empty set");
    let disk = welzl_mtf(points);
    let basis = extract_basis(points, &disk);
    (disk, basis)
}

/// Radius only, used by characteristic evaluation.
pub fn enclosing_radius<T: Scalar>(points: &[Point2<T>]) -> T {
    welzl_mtf(points).radius
}

fn welzl_mtf<T: Scalar>(points: &[Point2<T>]) -> Disk<T> {
    let mut pts: Vec<Point2<T>> = points.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(SHUFFLE_SEED);
    pts.shuffle(&mut rng);
    let mut d = Disk::point(pts[0]);
    for i in 1..pts.len() {
        if d.contains_loose(pts[i]) {
            continue;
        }
        d = Disk::point(pts[i]);
        for j in 0..i {
            if d.contains_loose(pts[j]) {
                continue;
            }
            d = Disk::diametral(pts[i], pts[j]);
            for k in 0..j {
                if d.contains_loose(pts[k]) {
                    continue;
                }
                d = Disk::circumscribed(pts[i], pts[j], pts[k])
                    .unwrap_or_else(|| farthest_pair_disk(pts[i], pts[j], pts[k]));
            }
        }
    }
    d
}

fn farthest_pair_disk<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Disk<T> {
    let cands = [Disk::diametral(a, b), Disk::diametral(a, c), Disk::diametral(b, c)];
    cands
        .into_iter()
        .max_by(|x, y| x.radius.partial_cmp(&y.radius).unwrap())
        .unwrap()
}

fn same_disk<T: Scalar>(a: &Disk<T>, b: &Disk<T>) -> bool {
    let tol = T::of(T::CONTAINMENT_TOL) * (a.radius.max(b.radius) + T::epsilon());
    a.center.dist(b.center) <= tol && (a.radius - b.radius).abs() <= tol
}

fn extract_basis<T: Scalar>(points: &[Point2<T>], disk: &Disk<T>) -> Vec<usize> {
    let tol = T::of(T::CONTAINMENT_TOL) * (disk.radius + T::epsilon());
    let boundary: Vec<usize> = (0..points.len())
        .filter(|&i| (points[i].dist(disk.center) - disk.radius).abs() <= tol)
        .collect();
    if disk.radius <= T::epsilon() || boundary.len() == 1 {
        return boundary.into_iter().take(1).collect();
    }
    for (a, &i) in boundary.iter().enumerate() {
        for &j in &boundary[a + 1..] {
            if same_disk(&Disk::diametral(points[i], points[j]), disk) {
                return vec![i, j];
            }
        }
    }
    for (a, &i) in boundary.iter().enumerate() {
        for (b, &j) in boundary.iter().enumerate().skip(a + 1) {
            for &k in &boundary[b + 1..] {
                let tri = [points[i], points[j], points[k]];
                if same_disk(&welzl_mtf(&tri), disk) {
                    return vec![i, j, k];
                }
            }
        }
    }
    boundary
}
