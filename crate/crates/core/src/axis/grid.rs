//! Rank-space grid of a point set in the closed positive quadrant, and
//! dominance counters over its cells.
//!
//! Column `i` (1-based) spans `x_{i-1} .. x_i` where `x_i` is the `i`-th
//! smallest x-coordinate and `x_0 = 0`; rows likewise. Equal coordinates get
//! consecutive ranks (x-ties by descending y, y-ties by descending x) and the
//! resulting zero-width cells carry no area.

use crate::geometry::Point2;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct RankGrid<T> {
    n: usize,
    col: Vec<usize>,
    row: Vec<usize>,
    by_col: Vec<usize>,
    by_row: Vec<usize>,
    widths: Vec<T>,
    heights: Vec<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainShape {
    Increasing,
    Decreasing,
    General,
}

impl<T: Scalar> RankGrid<T> {
    /// Panics on a negative coordinate.
    pub fn new(pts: &[Point2<T>]) -> Self {
        assert!(
            pts.iter().all(|p| p.x >= T::zero() && p.y >= T::zero()),
            "rank grid needs the closed positive quadrant"
        );
        let n = pts.len();
        let mut by_col: Vec<usize> = (0..n).collect();
        by_col.sort_by(|&a, &b| {
            pts[a]
                .x
                .partial_cmp(&pts[b].x)
                .unwrap()
                .then(pts[b].y.partial_cmp(&pts[a].y).unwrap())
                .then(a.cmp(&b))
        });
        let mut by_row: Vec<usize> = (0..n).collect();
        by_row.sort_by(|&a, &b| {
            pts[a]
                .y
                .partial_cmp(&pts[b].y)
                .unwrap()
                .then(pts[b].x.partial_cmp(&pts[a].x).unwrap())
                .then(a.cmp(&b))
        });
        let mut col = vec![0; n];
        let mut row = vec![0; n];
        for (k, &p) in by_col.iter().enumerate() {
            col[p] = k + 1;
        }
        for (k, &p) in by_row.iter().enumerate() {
            row[p] = k + 1;
        }
        let steps = |order: &[usize], key: &dyn Fn(usize) -> T| {
            let mut prev = T::zero();
            order
                .iter()
                .map(|&p| {
                    let v = key(p);
                    let w = v - prev;
                    prev = v;
                    w
                })
                .collect::<Vec<T>>()
        };
        let widths = steps(&by_col, &|p| pts[p].x);
        let heights = steps(&by_row, &|p| pts[p].y);
        Self {
            n,
            col,
            row,
            by_col,
            by_row,
            widths,
            heights,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Column rank of point `p`, 1-based.
    pub fn col(&self, p: usize) -> usize {
        self.col[p]
    }

    pub fn row(&self, p: usize) -> usize {
        self.row[p]
    }

    /// Point whose x-rank is `i`.
    pub fn point_at_col(&self, i: usize) -> usize {
        self.by_col[i - 1]
    }

    pub fn point_at_row(&self, j: usize) -> usize {
        self.by_row[j - 1]
    }

    /// `w_i`, 1-based.
    pub fn width(&self, i: usize) -> T {
        self.widths[i - 1]
    }

    pub fn height(&self, j: usize) -> T {
        self.heights[j - 1]
    }

    pub fn widths(&self) -> &[T] {
        &self.widths
    }

    pub fn heights(&self) -> &[T] {
        &self.heights
    }

    /// Row ranks listed in column order.
    pub fn rows_by_col(&self) -> Vec<usize> {
        self.by_col.iter().map(|&p| self.row[p]).collect()
    }

    pub fn shape(&self) -> ChainShape {
        if (0..self.n).all(|p| self.row[p] == self.col[p]) {
            ChainShape::Increasing
        } else if (0..self.n).all(|p| self.row[p] + self.col[p] == self.n + 1) {
            ChainShape::Decreasing
        } else {
            ChainShape::General
        }
    }

    /// The same grid with the axes exchanged.
    pub fn transposed(&self) -> Self {
        Self {
            n: self.n,
            col: self.row.clone(),
            row: self.col.clone(),
            by_col: self.by_row.clone(),
            by_row: self.by_col.clone(),
            widths: self.heights.clone(),
            heights: self.widths.clone(),
        }
    }
}

/// Closed-quadrant counts at a cell or query point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct DominanceCounts {
    pub ne: usize,
    pub nw: usize,
    pub se: usize,
}

/// Counts over the cells `c_{i,j}`, `1 <= i, j <= n + 1`.
pub trait DominanceCounter: Sync {
    fn size(&self) -> usize;

    /// Points with column rank `>= i` and row rank `>= j`.
    fn ne(&self, i: usize, j: usize) -> usize;

    fn nw(&self, i: usize, j: usize) -> usize {
        self.size() + 1 - j - self.ne(i, j)
    }

    fn se(&self, i: usize, j: usize) -> usize {
        self.size() + 1 - i - self.ne(i, j)
    }

    fn counts(&self, i: usize, j: usize) -> DominanceCounts {
        let ne = self.ne(i, j);
        let n = self.size();
        DominanceCounts {
            ne,
            nw: n + 1 - j - ne,
            se: n + 1 - i - ne,
        }
    }
}

/// Exchanges the roles of columns and rows; `nw` and `se` swap.
pub struct Transposed<'a, C: ?Sized>(pub &'a C);

impl<C: DominanceCounter + ?Sized> DominanceCounter for Transposed<'_, C> {
    fn size(&self) -> usize {
        self.0.size()
    }

    fn ne(&self, i: usize, j: usize) -> usize {
        self.0.ne(j, i)
    }
}

/// Decreasing chain: the point of column `a` sits in row `n + 1 - a`.
#[derive(Clone, Copy, Debug)]
pub struct DecreasingChainCounts {
    pub n: usize,
}

impl DominanceCounter for DecreasingChainCounts {
    fn size(&self) -> usize {
        self.n
    }

    fn ne(&self, i: usize, j: usize) -> usize {
        (self.n + 2).saturating_sub(i + j)
    }
}

/// Static merge tree over the row ranks in column order. Each level stores, for
/// every prefix of every node, how many of its elements go to the left child,
/// so a suffix-dominance count walks one root-to-leaf path in `O(log n)`.
#[derive(Clone, Debug)]
pub struct DominanceIndex {
    n: usize,
    span: usize,
    /// `left[d][g]`: elements sent left among positions `[0, g)` of level `d`.
    left: Vec<Vec<u32>>,
}

impl DominanceIndex {
    /// `rows[c]` is the row rank (a permutation of `1..=n`) in column `c + 1`.
    pub fn new(rows: &[usize]) -> Self {
        let n = rows.len();
        let span = n.next_power_of_two().max(1);
        let mut left = Vec::new();
        // level d holds each node's rows in increasing order; nodes are column ranges
        let mut level: Vec<(usize, usize)> = {
            let mut v: Vec<(usize, usize)> = rows.iter().enumerate().map(|(c, &r)| (r, c)).collect();
            v.sort_unstable();
            v
        };
        let mut size = span;
        while size > 1 {
            let half = size / 2;
            let mut prefix = Vec::with_capacity(n + 1);
            prefix.push(0u32);
            let mut next = Vec::with_capacity(n);
            let mut start = 0;
            while start < n {
                let node = start / size;
                let lo = node * size;
                let end = ((node + 1) * size).min(n);
                let slice = &level[start..end];
                for &(_, c) in slice {
                    let last = *prefix.last().unwrap();
                    prefix.push(last + u32::from(c < lo + half));
                }
                next.extend(slice.iter().filter(|e| e.1 < lo + half));
                next.extend(slice.iter().filter(|e| e.1 >= lo + half));
                start = end;
            }
            left.push(prefix);
            level = next;
            size = half;
        }
        Self { n, span, left }
    }

    /// Points in columns `>= i` with rows `>= j` (1-based, up to `n + 1`).
    pub fn count(&self, i: usize, j: usize) -> usize {
        if i > self.n || j > self.n || self.n == 0 {
            return 0;
        }
        let i = i.max(1) - 1;
        let j = j.max(1);
        // elements with row < j among the node, the root holds every row once
        let mut below = j - 1;
        let (mut lo, mut size, mut start, mut total) = (0usize, self.span, 0usize, 0usize);
        for d in 0..self.left.len() {
            let node_len = (lo + size).min(self.n) - lo;
            if i <= lo {
                return total + node_len - below;
            }
            let half = size / 2;
            let pre = &self.left[d];
            let left_below = (pre[start + below] - pre[start]) as usize;
            let left_len = (pre[start + node_len] - pre[start]) as usize;
            if i < lo + half {
                let right_len = node_len - left_len;
                total += right_len - (below - left_below);
                below = left_below;
            } else {
                below -= left_below;
                start += left_len;
                lo += half;
            }
            size = half;
        }
        let node_len = (lo + size).min(self.n).saturating_sub(lo);
        if i <= lo {
            total + node_len - below
        } else {
            total
        }
    }
}

/// Rank-space counts backed by a [`DominanceIndex`].
#[derive(Clone, Debug)]
pub struct IndexedCounts {
    index: DominanceIndex,
}

impl IndexedCounts {
    pub fn new<T: Scalar>(grid: &RankGrid<T>) -> Self {
        Self {
            index: DominanceIndex::new(&grid.rows_by_col()),
        }
    }
}

impl DominanceCounter for IndexedCounts {
    fn size(&self) -> usize {
        self.index.n
    }

    fn ne(&self, i: usize, j: usize) -> usize {
        self.index.count(i, j)
    }
}

/// Counts for arbitrary query points over a point set with distinct coordinates.
#[derive(Clone, Debug)]
pub struct DominanceQuery<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    counts: IndexedCounts,
}

pub fn build_dominance_index<T: Scalar>(pts: &[Point2<T>]) -> DominanceQuery<T> {
    let grid = RankGrid::new(pts);
    let mut xs: Vec<T> = pts.iter().map(|p| p.x).collect();
    let mut ys: Vec<T> = pts.iter().map(|p| p.y).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    DominanceQuery {
        xs,
        ys,
        counts: IndexedCounts::new(&grid),
    }
}

impl<T: Scalar> DominanceQuery<T> {
    /// Closed-quadrant counts with apex `q`.
    pub fn query(&self, q: Point2<T>) -> DominanceCounts {
        let n = self.xs.len();
        let x_lt = self.xs.partition_point(|&v| v < q.x);
        let x_le = self.xs.partition_point(|&v| v <= q.x);
        let y_lt = self.ys.partition_point(|&v| v < q.y);
        let y_le = self.ys.partition_point(|&v| v <= q.y);
        let c = &self.counts;
        DominanceCounts {
            ne: c.ne(x_lt + 1, y_lt + 1),
            nw: (n - y_lt) - c.ne(x_le + 1, y_lt + 1),
            se: (n - x_lt) - c.ne(x_lt + 1, y_le + 1),
        }
    }

    pub fn cells(&self) -> &IndexedCounts {
        &self.counts
    }
}
