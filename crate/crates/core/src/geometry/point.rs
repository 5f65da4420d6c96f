use std::ops::{Add, Mul, Sub};

use crate::error::{Result, ShapleyError};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    #[inline]
    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, other: Self) -> T {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<T: Scalar> Add for Point2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Scalar> Sub for Point2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Scalar> Mul<T> for Point2<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

/// Validated player set. Points are pairwise distinct and finite.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarPointSet<T> {
    points: Vec<Point2<T>>,
    x_ranks: Vec<usize>,
    y_ranks: Vec<usize>,
}

impl<T: Scalar> PlanarPointSet<T> {
    pub fn new(points: Vec<Point2<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(ShapleyError::domain("a game needs at least one player"));
        }
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(ShapleyError::domain(format!("point {i} has a non-finite coordinate")));
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| {
            let (p, q) = (points[a], points[b]);
            p.x.partial_cmp(&q.x)
                .unwrap()
                .then(p.y.partial_cmp(&q.y).unwrap())
        });
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(ShapleyError::domain(format!(
                    "points {} and {} coincide",
                    w[0].min(w[1]),
                    w[0].max(w[1])
                )));
            }
        }
        let x_ranks = dense_ranks(&points, |p| p.x);
        let y_ranks = dense_ranks(&points, |p| p.y);
        Ok(Self {
            points,
            x_ranks,
            y_ranks,
        })
    }

    /// Players on the real line, embedded as `(x, 0)`.
    pub fn from_coords(coords: &[T]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| Point2::new(x, T::zero())).collect())
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| Point2::new(T::of(x), T::of(y)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point2<T> {
        self.points[i]
    }

    /// Rank of each point's x-coordinate among the distinct x values.
    pub fn x_ranks(&self) -> &[usize] {
        &self.x_ranks
    }

    pub fn y_ranks(&self) -> &[usize] {
        &self.y_ranks
    }

    pub fn xs(&self) -> Vec<T> {
        self.points.iter().map(|p| p.x).collect()
    }

    pub fn ys(&self) -> Vec<T> {
        self.points.iter().map(|p| p.y).collect()
    }

    /// Side of the axis-aligned bounding box, at least one unit when degenerate.
    pub fn extent(&self) -> T {
        extent_of(&self.points)
    }
}

pub(crate) fn extent_of<T: Scalar>(points: &[Point2<T>]) -> T {
    let (mut lx, mut hx, mut ly, mut hy) = (
        T::infinity(),
        T::neg_infinity(),
        T::infinity(),
        T::neg_infinity(),
    );
    for p in points {
        lx = lx.min(p.x);
        hx = hx.max(p.x);
        ly = ly.min(p.y);
        hy = hy.max(p.y);
    }
    let e = (hx - lx).max(hy - ly);
    if e > T::zero() && e.is_finite() {
        e
    } else {
        T::one()
    }
}

fn dense_ranks<T: Scalar>(points: &[Point2<T>], key: impl Fn(&Point2<T>) -> T) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| key(&points[a]).partial_cmp(&key(&points[b])).unwrap());
    let mut ranks = vec![0; points.len()];
    let mut rank = 0;
    for (k, &i) in order.iter().enumerate() {
        if k > 0 && key(&points[i]) != key(&points[order[k - 1]]) {
            rank += 1;
        }
        ranks[i] = rank;
    }
    ranks
}
