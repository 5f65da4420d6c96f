use std::cmp::Ordering;

use super::point::{PlanarPointSet, Point2};
use super::predicates::{Predicates, Sign};
use crate::error::{Property, Result, ShapleyError};
use crate::scalar::Scalar;

/// Offending tuples kept per property.
pub const MAX_REPORTED: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub property: Property,
    pub tuples: Vec<Vec<usize>>,
}

/// Outcome of a general-position check. Flags that were not requested stay `true`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralPositionReport {
    pub distinct_coords: bool,
    pub no_three_collinear: bool,
    pub no_four_cocircular: bool,
    pub no_diametral_conflict: bool,
    pub checked: Vec<Property>,
    pub offending: Vec<Violation>,
}

impl GeneralPositionReport {
    pub fn holds(&self, property: Property) -> bool {
        match property {
            Property::DistinctCoords => self.distinct_coords,
            Property::NoThreeCollinear => self.no_three_collinear,
            Property::NoFourCocircular => self.no_four_cocircular,
            Property::NoDiametralConflict => self.no_diametral_conflict,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.offending.is_empty()
    }

    pub fn tuples(&self, property: Property) -> &[Vec<usize>] {
        self.offending
            .iter()
            .find(|v| v.property == property)
            .map(|v| v.tuples.as_slice())
            .unwrap_or(&[])
    }

    /// First violation as an error.
    pub fn into_result(self) -> Result<()> {
        match self.offending.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(ShapleyError::GeneralPosition {
                property: v.property,
                tuples: v.tuples,
            }),
        }
    }
}

pub fn validate_general_position<T: Scalar>(
    set: &PlanarPointSet<T>,
    required: &[Property],
) -> GeneralPositionReport {
    let pts = set.points();
    let pred = Predicates::for_points(pts);
    let mut report = GeneralPositionReport {
        distinct_coords: true,
        no_three_collinear: true,
        no_four_cocircular: true,
        no_diametral_conflict: true,
        checked: Vec::new(),
        offending: Vec::new(),
    };
    for prop in [
        Property::DistinctCoords,
        Property::NoThreeCollinear,
        Property::NoFourCocircular,
        Property::NoDiametralConflict,
    ] {
        if !required.contains(&prop) {
            continue;
        }
        report.checked.push(prop);
        let tuples = match prop {
            Property::DistinctCoords => shared_coordinates(pts),
            Property::NoThreeCollinear => collinear_triples(pts, &pred),
            Property::NoFourCocircular => cocircular_quadruples(pts, &pred),
            Property::NoDiametralConflict => right_angles(pts, &pred),
        };
        if !tuples.is_empty() {
            match prop {
                Property::DistinctCoords => report.distinct_coords = false,
                Property::NoThreeCollinear => report.no_three_collinear = false,
                Property::NoFourCocircular => report.no_four_cocircular = false,
                Property::NoDiametralConflict => report.no_diametral_conflict = false,
            }
            report.offending.push(Violation {
                property: prop,
                tuples,
            });
        }
    }
    report
}

fn push_capped(out: &mut Vec<Vec<usize>>, mut t: Vec<usize>) -> bool {
    t.sort_unstable();
    if !out.contains(&t) {
        out.push(t);
    }
    out.len() >= MAX_REPORTED
}

fn shared_coordinates<T: Scalar>(pts: &[Point2<T>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for key in [|p: &Point2<T>| p.x, |p: &Point2<T>| p.y] {
        let mut order: Vec<usize> = (0..pts.len()).collect();
        order.sort_by(|&a, &b| key(&pts[a]).partial_cmp(&key(&pts[b])).unwrap());
        for w in order.windows(2) {
            if key(&pts[w[0]]) == key(&pts[w[1]]) && push_capped(&mut out, vec![w[0], w[1]]) {
                return out;
            }
        }
    }
    out
}

/// Angular sort around each point; collinear triples end up adjacent modulo a half turn.
fn collinear_triples<T: Scalar>(pts: &[Point2<T>], pred: &Predicates<T>) -> Vec<Vec<usize>> {
    let n = pts.len();
    let mut out = Vec::new();
    for q in 0..n {
        let mut dirs: Vec<(T, usize)> = (0..n)
            .filter(|&r| r != q)
            .map(|r| {
                let d = pts[r] - pts[q];
                let mut a = d.y.atan2(d.x);
                if a < T::zero() {
                    a = a + T::pi();
                }
                if a >= T::pi() {
                    a = a - T::pi();
                }
                (a, r)
            })
            .collect();
        dirs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
        let m = dirs.len();
        if m < 2 {
            continue;
        }
        for k in 0..m {
            let (a, b) = (dirs[k].1, dirs[(k + 1) % m].1);
            if a != b
                && pred.orientation(pts[q], pts[a], pts[b]) == Sign::Zero
                && push_capped(&mut out, vec![q, a, b])
            {
                return out;
            }
        }
    }
    out
}

/// For each pair, the other points sorted by the bisector parameter of
/// the circle through the pair and the point; equal parameters mean cocircular.
fn cocircular_quadruples<T: Scalar>(pts: &[Point2<T>], pred: &Predicates<T>) -> Vec<Vec<usize>> {
    let n = pts.len();
    let mut out = Vec::new();
    let two = T::of(2.0);
    for q in 0..n {
        for q2 in q + 1..n {
            let (a, b) = (pts[q], pts[q2]);
            let u = Point2::new((a.x + b.x) / two, (a.y + b.y) / two);
            let d = b - a;
            let len = d.norm();
            let nh = Point2::new(-d.y / len, d.x / len);
            let base = (a - u).norm_sq();
            let mut params: Vec<(T, usize)> = (0..n)
                .filter(|&r| r != q && r != q2)
                .filter_map(|r| {
                    let k = nh.dot(pts[r] - u);
                    if k == T::zero() {
                        return None;
                    }
                    Some((((pts[r] - u).norm_sq() - base) / (two * k), r))
                })
                .collect();
            params.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(Ordering::Equal));
            for w in params.windows(2) {
                let (r, s) = (w[0].1, w[1].1);
                if pred.orientation(a, b, pts[r]) == Sign::Zero {
                    continue;
                }
                if pred.in_circle(a, b, pts[r], pts[s]) == Sign::Zero
                    && push_capped(&mut out, vec![q, q2, r, s])
                {
                    return out;
                }
            }
        }
    }
    out
}

/// A circle through three inputs with a diameter spanned by two of them is
/// a triple with a right angle; other diameters imply a cocircular quadruple.
fn right_angles<T: Scalar>(pts: &[Point2<T>], pred: &Predicates<T>) -> Vec<Vec<usize>> {
    let n = pts.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (pa, pb, pc) = (pts[a], pts[b], pts[c]);
                let hit = pred.right_angle_at(pa, pb, pc)
                    || pred.right_angle_at(pb, pa, pc)
                    || pred.right_angle_at(pc, pa, pb);
                if hit && push_capped(&mut out, vec![a, b, c]) {
                    return out;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [Property; 4] = [
        Property::DistinctCoords,
        Property::NoThreeCollinear,
        Property::NoFourCocircular,
        Property::NoDiametralConflict,
    ];

    fn set(v: &[(f64, f64)]) -> PlanarPointSet<f64> {
        PlanarPointSet::from_xy(v).unwrap()
    }

    #[test]
    fn collinear_detected() {
        let r = validate_general_position(
            &set(&[(0., 0.), (1., 0.), (2., 0.)]),
            &[Property::NoThreeCollinear],
        );
        assert!(!r.no_three_collinear);
        assert_eq!(r.tuples(Property::NoThreeCollinear), &[vec![0, 1, 2]]);
    }

    #[test]
    fn shared_x_detected() {
        let r = validate_general_position(&set(&[(0., 0.), (0., 1.)]), &[Property::DistinctCoords]);
        assert!(!r.distinct_coords);
        assert_eq!(r.tuples(Property::DistinctCoords), &[vec![0, 1]]);
    }

    #[test]
    fn generic_triangle_passes() {
        let r = validate_general_position(&set(&[(0., 0.), (1., 0.2), (0.3, 1.)]), &ALL);
        assert!(r.is_ok());
        assert_eq!(r.checked.len(), 4);
    }

    #[test]
    fn right_triangle_is_diametral_conflict() {
        // the unit right triangle also shares coordinates; only the angle matters here
        let r = validate_general_position(
            &set(&[(0., 0.), (1., 0.), (0., 1.)]),
            &[Property::NoDiametralConflict, Property::NoThreeCollinear],
        );
        assert!(!r.no_diametral_conflict);
        assert!(r.no_three_collinear);
    }

    #[test]
    fn square_is_cocircular() {
        let r = validate_general_position(
            &set(&[(0., 0.), (1., 0.1), (1.1, 1.1), (0.1, 1.)]),
            &[Property::NoFourCocircular],
        );
        assert!(r.no_four_cocircular);
        let c = (0.5f64, 0.5f64);
        let on_circle: Vec<(f64, f64)> = [0.3f64, 1.9, 3.0, 4.4, 5.5]
            .iter()
            .map(|t| (c.0 + t.cos(), c.1 + t.sin()))
            .collect();
        let r = validate_general_position(&set(&on_circle), &[Property::NoFourCocircular]);
        assert!(!r.no_four_cocircular);
        assert!(r.into_result().is_err());
    }

    #[test]
    fn collinear_found_among_many() {
        let mut v: Vec<(f64, f64)> = (0..20).map(|i| (i as f64 * 0.37 % 5.0, (i * i) as f64 * 0.11 % 3.0 + i as f64)).collect();
        v.push((100.0, 200.0));
        v.push((101.0, 202.0));
        v.push((102.5, 205.0));
        let r = validate_general_position(&set(&v), &[Property::NoThreeCollinear]);
        assert!(r.tuples(Property::NoThreeCollinear).contains(&vec![20, 21, 22]));
    }
}
