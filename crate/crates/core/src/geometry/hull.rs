use super::point::Point2;
use super::predicates::orient2d;
use crate::scalar::Scalar;

/// Counterclockwise hull vertex indices (monotone chain). Collinear boundary
/// points are dropped; one point yields itself and a collinear set its endpoints.
pub fn convex_hull<T: Scalar>(points: &[Point2<T>]) -> Vec<usize> {
    let n = points.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (p, q) = (points[a], points[b]);
        p.x.partial_cmp(&q.x)
            .unwrap()
            .then(p.y.partial_cmp(&q.y).unwrap())
    });
    order.dedup_by(|a, b| points[*a] == points[*b]);
    if order.len() <= 2 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                if orient2d(points[a], points[b], points[i]) <= T::zero() {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(i);
        }
        hull.pop();
    }
    if hull.len() < 2 {
        // all points collinear: the two passes cancel to the endpoints
        return vec![order[0], *order.last().unwrap()];
    }
    hull
}

/// Shoelace area of a vertex cycle.
pub fn hull_area<T: Scalar>(vertices: &[Point2<T>]) -> T {
    if vertices.len() < 3 {
        return T::zero();
    }
    let base = vertices[0];
    let mut twice = T::zero();
    for w in vertices[1..].windows(2) {
        twice = twice + orient2d(base, w[0], w[1]);
    }
    twice.abs() / T::of(2.0)
}

/// Boundary length of the vertex cycle; a segment counts both directions.
pub fn hull_perimeter<T: Scalar>(vertices: &[Point2<T>]) -> T {
    let k = vertices.len();
    if k < 2 {
        return T::zero();
    }
    (0..k)
        .map(|i| vertices[i].dist(vertices[(i + 1) % k]))
        .fold(T::zero(), |a, b| a + b)
}

pub fn hull_vertices<T: Scalar>(points: &[Point2<T>]) -> Vec<Point2<T>> {
    convex_hull(points).into_iter().map(|i| points[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point2<f64>> {
        v.iter().map(|&(x, y)| Point2::new(x, y)).collect()
    }

    #[test]
    fn triangle_and_square() {
        let t = pts(&[(0., 0.), (1., 0.), (0., 1.)]);
        let h = convex_hull(&t);
        assert_eq!(h.len(), 3);
        assert!((hull_area(&hull_vertices(&t)) - 0.5).abs() < 1e-15);
        let per = hull_perimeter(&hull_vertices(&t));
        assert!((per - (2.0 + 2f64.sqrt())).abs() < 1e-14);

        let s = pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.), (0.5, 0.5)]);
        let mut h = convex_hull(&s);
        h.sort();
        assert_eq!(h, vec![0, 1, 2, 3]);
    }

    #[test]
    fn ccw_orientation() {
        let s = pts(&[(0., 0.), (1., 1.), (1., 0.), (0., 1.)]);
        let v = hull_vertices(&s);
        for i in 0..v.len() {
            let (a, b, c) = (v[i], v[(i + 1) % v.len()], v[(i + 2) % v.len()]);
            assert!(orient2d(a, b, c) > 0.0);
        }
    }

    #[test]
    fn degenerate_hulls() {
        let seg = pts(&[(0., 0.), (2., 2.)]);
        assert_eq!(convex_hull(&seg), vec![0, 1]);
        let v = hull_vertices(&seg);
        assert_eq!(hull_area(&v), 0.0);
        assert!((hull_perimeter(&v) - 2.0 * 8f64.sqrt()).abs() < 1e-14);

        let one = pts(&[(3., 4.)]);
        assert_eq!(convex_hull(&one), vec![0]);
        assert_eq!(hull_perimeter(&hull_vertices(&one)), 0.0);

        let line = pts(&[(1., 1.), (0., 0.), (3., 3.), (2., 2.)]);
        assert_eq!(convex_hull(&line), vec![1, 2]);
    }
}
