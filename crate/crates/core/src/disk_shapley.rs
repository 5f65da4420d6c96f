//! Shapley values of the smallest-enclosing-disk games.
//!
//! Every pair of points spans a two-point basis (its diametral disk) and every
//! acute triangle a three-point basis (its circumcircle). The circles through
//! a fixed pair form a pencil whose centers move along the bisector, so
//! sorting the other points by the parameter at which each one lies on the
//! circle gives every level and every exclusion set with prefix sums.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Property, Result, ShapleyError};
use crate::games::{GameKind, ShapleyVector};
use crate::geometry::disk::min_enclosing_disk;
use crate::geometry::{Disk, PlanarPointSet, Point2, Predicates, Sign};
use crate::permcount::{rho_basis, rho_prime_basis};
use crate::scalar::{CompensatedSum, Scalar};

const WORK_UNITS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiskMeasure {
    Area,
    Perimeter,
}

impl DiskMeasure {
    pub fn of<T: Scalar>(self, radius: T) -> T {
        match self {
            DiskMeasure::Area => T::pi() * radius * radius,
            DiskMeasure::Perimeter => T::of(2.0) * T::pi() * radius,
        }
    }

    pub fn game(self) -> GameKind {
        match self {
            DiskMeasure::Area => GameKind::DiskArea,
            DiskMeasure::Perimeter => GameKind::DiskPerimeter,
        }
    }
}

impl fmt::Display for DiskMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiskMeasure::Area => "area",
            DiskMeasure::Perimeter => "perimeter",
        })
    }
}

impl FromStr for DiskMeasure {
    type Err = ShapleyError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "area" => Ok(DiskMeasure::Area),
            "perimeter" => Ok(DiskMeasure::Perimeter),
            _ => Err(ShapleyError::domain(format!("unknown disk measure `{s}`"))),
        }
    }
}

/// A support set of two or three points with the number of points outside its disk.
#[derive(Clone, Debug, PartialEq)]
pub struct DiskBasis<T> {
    pub support: Vec<usize>,
    pub disk: Disk<T>,
    pub level: usize,
}

/// Circles through `q` and `q2`, parametrized by the signed offset `s` of the
/// center along the left normal.
struct PairFrame<T> {
    mid: Point2<T>,
    normal: Point2<T>,
    half_sq: T,
}

impl<T: Scalar> PairFrame<T> {
    fn new(a: Point2<T>, b: Point2<T>) -> Self {
        let two = T::of(2.0);
        let mid = Point2::new((a.x + b.x) / two, (a.y + b.y) / two);
        let d = b - a;
        let len = d.norm();
        Self {
            mid,
            normal: Point2::new(-d.y / len, d.x / len),
            half_sq: (a - mid).norm_sq(),
        }
    }

    /// `(k, excess)`: offset of `r` along the normal and its power with
    /// respect to the diametral circle. `r` lies on the circle at `s = excess / 2k`.
    fn coords(&self, r: Point2<T>) -> (T, T) {
        let v = r - self.mid;
        (self.normal.dot(v), v.norm_sq() - self.half_sq)
    }

    fn radius_at(&self, s: T) -> T {
        (self.half_sq + s * s).sqrt()
    }

    fn center_at(&self, s: T) -> Point2<T> {
        self.mid + self.normal * s
    }
}

#[derive(Clone, Copy)]
struct Crossing<T> {
    s: T,
    k: T,
    idx: usize,
}

/// Everything one pair sweep produces.
struct PairSweep<T> {
    /// Points off the normal axis ordered by crossing parameter.
    sorted: Vec<Crossing<T>>,
    /// Points on the line through the pair, with their power.
    flat: Vec<(usize, T)>,
    /// Level of the circle through the pair and `sorted[i]`.
    levels: Vec<usize>,
    /// Whether that triple is an acute triangle.
    acute: Vec<bool>,
    pair_level: usize,
}

fn sweep_pair<T: Scalar>(pts: &[Point2<T>], q: usize, q2: usize, pred: &Predicates<T>) -> Result<PairSweep<T>> {
    let (a, b) = (pts[q], pts[q2]);
    let frame = PairFrame::new(a, b);
    let two = T::of(2.0);
    let mut sorted = Vec::with_capacity(pts.len());
    let mut flat = Vec::new();
    let mut pair_level = 0;
    for (r, &p) in pts.iter().enumerate() {
        if r == q || r == q2 {
            continue;
        }
        if pred.right_angle_at(p, a, b) {
            return Err(ShapleyError::position(Property::NoDiametralConflict, vec![q, q2, r]));
        }
        let (k, excess) = frame.coords(p);
        if excess > T::zero() {
            pair_level += 1;
        }
        if k == T::zero() {
            flat.push((r, excess));
        } else {
            sorted.push(Crossing { s: excess / (two * k), k, idx: r });
        }
    }
    sorted.sort_by(|x, y| x.s.partial_cmp(&y.s).unwrap_or(Ordering::Equal).then(x.idx.cmp(&y.idx)));
    for w in sorted.windows(2) {
        let (r, t) = (w[0].idx, w[1].idx);
        let tri = if pred.orientation(a, b, pts[r]) == Sign::Positive {
            (a, b)
        } else {
            (b, a)
        };
        if pred.in_circle(tri.0, tri.1, pts[r], pts[t]) == Sign::Zero {
            return Err(ShapleyError::position(Property::NoFourCocircular, vec![q, q2, r, t]));
        }
    }
    let m = sorted.len();
    let flat_out = flat.iter().filter(|f| f.1 > T::zero()).count();
    // outside at parameter s: k > 0 crossing later, or k < 0 crossing earlier
    let mut neg_before = vec![0usize; m + 1];
    for i in 0..m {
        neg_before[i + 1] = neg_before[i] + usize::from(sorted[i].k < T::zero());
    }
    let mut pos_after = vec![0usize; m + 1];
    for i in (0..m).rev() {
        pos_after[i] = pos_after[i + 1] + usize::from(sorted[i].k > T::zero());
    }
    let levels = (0..m).map(|i| pos_after[i + 1] + neg_before[i] + flat_out).collect();
    let acute = sorted
        .iter()
        .map(|c| {
            let r = pts[c.idx];
            let at_r = c.s * c.k > T::zero();
            at_r && (r - a).dot(b - a) > T::zero() && (r - b).dot(a - b) > T::zero()
        })
        .collect();
    Ok(PairSweep { sorted, flat, levels, acute, pair_level })
}

fn check_input<T: Scalar>(set: &PlanarPointSet<T>) -> Result<Predicates<T>> {
    let pts = set.points();
    let pred = Predicates::for_points(pts);
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            for c in b + 1..pts.len() {
                if pred.orientation(pts[a], pts[b], pts[c]) == Sign::Zero {
                    return Err(ShapleyError::position(Property::NoThreeCollinear, vec![a, b, c]));
                }
            }
        }
    }
    Ok(pred)
}

fn pairs_by_unit(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|q| (q + 1..n).map(move |r| (q, r))).collect();
    let chunk = pairs.len().div_ceil(WORK_UNITS).max(1);
    pairs.chunks(chunk).map(|c| c.to_vec()).collect()
}

/// All two- and three-point bases with their levels.
pub fn enumerate_bases<T: Scalar>(set: &PlanarPointSet<T>) -> Result<Vec<DiskBasis<T>>> {
    let pts = set.points();
    let pred = check_input(set)?;
    let units = pairs_by_unit(pts.len());
    let found: Vec<Vec<DiskBasis<T>>> = units
        .par_iter()
        .map(|unit| {
            let mut out = Vec::new();
            for &(q, q2) in unit {
                let sw = sweep_pair(pts, q, q2, &pred)?;
                let frame = PairFrame::new(pts[q], pts[q2]);
                out.push(DiskBasis {
                    support: vec![q, q2],
                    disk: Disk::diametral(pts[q], pts[q2]),
                    level: sw.pair_level,
                });
                for (i, c) in sw.sorted.iter().enumerate() {
                    if c.idx > q2 && sw.acute[i] {
                        out.push(DiskBasis {
                            support: vec![q, q2, c.idx],
                            disk: Disk {
                                center: frame.center_at(c.s),
                                radius: frame.radius_at(c.s),
                            },
                            level: sw.levels[i],
                        });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

struct Terms<T> {
    gain: Vec<CompensatedSum<T>>,
    loss: Vec<CompensatedSum<T>>,
    loss_triples: Vec<CompensatedSum<T>>,
}

fn accumulate<T: Scalar>(set: &PlanarPointSet<T>, measure: DiskMeasure) -> Result<(Vec<T>, Vec<T>)> {
    let pts = set.points();
    let n = pts.len();
    let pred = check_input(set)?;
    let units = pairs_by_unit(n);
    let parts: Vec<Terms<T>> = units
        .par_iter()
        .map(|unit| {
            let mut t = Terms {
                gain: vec![CompensatedSum::new(); n],
                loss: vec![CompensatedSum::new(); n],
                loss_triples: vec![CompensatedSum::new(); n],
            };
            let mut prefix = Vec::new();
            for &(q, q2) in unit {
                let sw = sweep_pair(pts, q, q2, &pred)?;
                let frame = PairFrame::new(pts[q], pts[q2]);
                // diametral basis
                let m2 = measure.of(pts[q].dist(pts[q2]) / T::of(2.0));
                let up = m2 * rho_prime_basis::<T>(sw.pair_level, 2);
                t.gain[q].add(up);
                t.gain[q2].add(up);
                if sw.pair_level > 0 {
                    let w = m2 * rho_basis::<T>(sw.pair_level, 2)?;
                    for (r, &p) in pts.iter().enumerate() {
                        if r != q && r != q2 && frame.coords(p).1 > T::zero() {
                            t.loss[r].add(w);
                        }
                    }
                }
                // circumcircles through the pair
                let m = sw.sorted.len();
                prefix.clear();
                prefix.push(T::zero());
                let mut run = CompensatedSum::new();
                for i in 0..m {
                    let c = sw.sorted[i];
                    let mut w = T::zero();
                    if sw.acute[i] {
                        let size = measure.of(frame.radius_at(c.s));
                        let level = sw.levels[i];
                        if c.idx > q2 {
                            let up = size * rho_prime_basis::<T>(level, 3);
                            t.gain[q].add(up);
                            t.gain[q2].add(up);
                            t.gain[c.idx].add(up);
                        }
                        if level > 0 {
                            w = size * rho_basis::<T>(level, 3)?;
                        }
                    }
                    run.add(w);
                    prefix.push(run.value());
                }
                let all = prefix[m];
                for (i, c) in sw.sorted.iter().enumerate() {
                    let excluded = if c.k > T::zero() { prefix[i] } else { all - prefix[i + 1] };
                    t.loss_triples[c.idx].add(excluded);
                }
                for &(r, excess) in &sw.flat {
                    if excess > T::zero() {
                        t.loss_triples[r].add(all);
                    }
                }
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let third = T::one() / T::of(3.0);
    let mut gain = Vec::with_capacity(n);
    let mut loss = Vec::with_capacity(n);
    for p in 0..n {
        let (mut g, mut l, mut l3) = (CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new());
        for part in &parts {
            g.add(part.gain[p].value());
            l.add(part.loss[p].value());
            l3.add(part.loss_triples[p].value());
        }
        gain.push(g.value());
        loss.push(l.value() + l3.value() * third);
    }
    Ok((gain, loss))
}

fn game_total<T: Scalar>(set: &PlanarPointSet<T>, measure: DiskMeasure) -> T {
    measure.of(min_enclosing_disk(set.points()).0.radius)
}

pub fn shapley_disk<T: Scalar>(set: &PlanarPointSet<T>, measure: DiskMeasure) -> Result<ShapleyVector<T>> {
    let total = game_total(set, measure);
    if set.len() == 1 {
        return Ok(ShapleyVector::new(measure.game(), vec![T::zero()], total));
    }
    let (gain, loss) = accumulate(set, measure)?;
    let values = gain.iter().zip(&loss).map(|(&g, &l)| g - l).collect();
    Ok(ShapleyVector::new(measure.game(), values, total))
}

/// Expected measure lost by each player: weights of bases whose disk excludes it.
pub fn excluded_basis_sums<T: Scalar>(set: &PlanarPointSet<T>, measure: DiskMeasure) -> Result<Vec<T>> {
    if set.len() == 1 {
        return Ok(vec![T::zero()]);
    }
    Ok(accumulate(set, measure)?.1)
}

/// Same sums by testing every player against every basis.
pub fn excluded_basis_sums_direct<T: Scalar>(set: &PlanarPointSet<T>, measure: DiskMeasure) -> Result<Vec<T>> {
    let pts = set.points();
    let bases = enumerate_bases(set)?;
    let mut acc = vec![CompensatedSum::new(); pts.len()];
    for b in &bases {
        if b.level == 0 {
            continue;
        }
        let w = measure.of(b.disk.radius) * rho_basis::<T>(b.level, b.support.len())?;
        let r2 = b.disk.radius * b.disk.radius;
        for (p, &pt) in pts.iter().enumerate() {
            if !b.support.contains(&p) && (pt - b.disk.center).norm_sq() > r2 {
                acc[p].add(w);
            }
        }
    }
    Ok(acc.iter().map(|s| s.value()).collect())
}

/// Quartic evaluation straight from the basis list.
pub fn shapley_disk_naive<T: Scalar>(set: &PlanarPointSet<T>, measure: DiskMeasure) -> Result<ShapleyVector<T>> {
    let total = game_total(set, measure);
    if set.len() == 1 {
        return Ok(ShapleyVector::new(measure.game(), vec![T::zero()], total));
    }
    let loss = excluded_basis_sums_direct(set, measure)?;
    let mut gain = vec![CompensatedSum::new(); set.len()];
    for b in enumerate_bases(set)? {
        let up = measure.of(b.disk.radius) * rho_prime_basis::<T>(b.level, b.support.len());
        for &p in &b.support {
            gain[p].add(up);
        }
    }
    let values = gain.iter().zip(&loss).map(|(g, &l)| g.value() - l).collect();
    Ok(ShapleyVector::new(measure.game(), values, total))
}
