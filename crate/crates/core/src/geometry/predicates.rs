//! Orientation and in-circle tests with a scale-aware degeneracy threshold.

use super::point::{extent_of, Point2};
use crate::scalar::Scalar;

/// `a*b - c*d` with one rounding error via fused multiply-add.
#[inline]
pub fn diff_of_products<T: Scalar>(a: T, b: T, c: T, d: T) -> T {
    let w = c * d;
    let e = (-c).mul_add(d, w);
    let f = a.mul_add(b, -w);
    f + e
}

/// Twice the signed area of `abc`; positive when counterclockwise.
#[inline]
pub fn orient2d<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> T {
    diff_of_products(b.x - a.x, c.y - a.y, b.y - a.y, c.x - a.x)
}

/// Positive when `d` is strictly inside the circle through counterclockwise `abc`.
pub fn incircle<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>, d: Point2<T>) -> T {
    let (ad, bd, cd) = (a - d, b - d, c - d);
    let (al, bl, cl) = (ad.norm_sq(), bd.norm_sq(), cd.norm_sq());
    let m1 = diff_of_products(bd.x, cd.y, bd.y, cd.x);
    let m2 = diff_of_products(ad.x, cd.y, ad.y, cd.x);
    let m3 = diff_of_products(ad.x, bd.y, ad.y, bd.x);
    al * m1 - bl * m2 + cl * m3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Predicate evaluator bound to the length scale of one input.
#[derive(Clone, Copy, Debug)]
pub struct Predicates<T> {
    scale: T,
    tol: T,
}

impl<T: Scalar> Predicates<T> {
    pub fn for_points(points: &[Point2<T>]) -> Self {
        Self::with_scale(extent_of(points))
    }

    pub fn with_scale(scale: T) -> Self {
        Self {
            scale,
            tol: T::of(T::DEGENERACY_TOL),
        }
    }

    pub fn scale(&self) -> T {
        self.scale
    }

    fn classify(&self, v: T, degree: i32) -> Sign {
        if v.abs() <= self.tol * self.scale.powi(degree) {
            Sign::Zero
        } else if v > T::zero() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn orientation(&self, a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Sign {
        self.classify(orient2d(a, b, c), 2)
    }

    pub fn in_circle(&self, a: Point2<T>, b: Point2<T>, c: Point2<T>, d: Point2<T>) -> Sign {
        self.classify(incircle(a, b, c, d), 4)
    }

    /// Whether the angle of triangle `abc` at `a` is a right angle.
    pub fn right_angle_at(&self, a: Point2<T>, b: Point2<T>, c: Point2<T>) -> bool {
        self.classify((b - a).dot(c - a), 2) == Sign::Zero
    }

    pub fn is_degenerate_len(&self, v: T) -> bool {
        self.classify(v, 1) == Sign::Zero
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    #[test]
    fn orientation_signs() {
        let pr = Predicates::with_scale(1.0);
        assert_eq!(pr.orientation(p(0., 0.), p(1., 0.), p(0., 1.)), Sign::Positive);
        assert_eq!(pr.orientation(p(0., 0.), p(0., 1.), p(1., 0.)), Sign::Negative);
        assert_eq!(pr.orientation(p(0., 0.), p(1., 0.), p(2., 0.)), Sign::Zero);
    }

    #[test]
    fn incircle_signs() {
        let pr = Predicates::with_scale(1.0);
        let (a, b, c) = (p(1., 0.), p(0., 1.), p(-1., 0.));
        assert_eq!(pr.in_circle(a, b, c, p(0., 0.)), Sign::Positive);
        assert_eq!(pr.in_circle(a, b, c, p(0., -1.)), Sign::Zero);
        assert_eq!(pr.in_circle(a, b, c, p(3., 3.)), Sign::Negative);
    }

    #[test]
    fn diff_of_products_is_accurate() {
        let a = 1.0 + 2f64.powi(-30);
        let v = diff_of_products(a, a, 1.0, 1.0);
        assert_eq!(v, 2f64.powi(-29) + 2f64.powi(-60));
    }
}
