//! Slab sums over empty blocks of the rank grid.
//!
//! Inside a block whose closure holds no point in its interior, every row sees
//! the same change of a dominance count from column to column. Grouping the
//! rows by their count in the first column turns each slab sum into a value of
//! one rational step series, and all columns come out of a single multipoint
//! evaluation.

use crate::algebra::{Convolver, MultipointMode, RationalStepSeries};
use crate::error::{Result, ShapleyError};
use crate::scalar::Scalar;

use super::grid::{DominanceCounter, RankGrid, Transposed};
use super::sums::Slots;

/// Inclusive 1-based ranges of columns `i0..=i1` and rows `j0..=j1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub i0: usize,
    pub i1: usize,
    pub j0: usize,
    pub j1: usize,
}

impl Block {
    pub fn new(i0: usize, i1: usize, j0: usize, j1: usize) -> Self {
        Self { i0, i1, j0, j1 }
    }

    pub fn is_empty(&self) -> bool {
        self.i0 > self.i1 || self.j0 > self.j1
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.j0, self.j1, self.i0, self.i1)
    }

    pub fn cols(&self) -> usize {
        (self.i1 + 1).saturating_sub(self.i0)
    }

    pub fn rows(&self) -> usize {
        (self.j1 + 1).saturating_sub(self.j0)
    }
}

/// Which slabs of a block to sum: columns `V(i, B)` or rows `H(j, B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlabAxis {
    Vertical,
    Horizontal,
}

/// `out[c] = sum_j weights[j] / (keys[j] + shifts[c])`. Terms with a zero
/// denominator belong to cells nobody covers and are left out.
pub fn shifted_reciprocal_sums<T: Scalar>(
    conv: &mut Convolver<T>,
    mode: MultipointMode,
    weights: &[T],
    keys: &[usize],
    shifts: &[i64],
) -> Result<Vec<T>> {
    debug_assert_eq!(weights.len(), keys.len());
    if shifts.is_empty() {
        return Ok(Vec::new());
    }
    if keys.is_empty() {
        return Ok(vec![T::zero(); shifts.len()]);
    }
    let kmin = *keys.iter().min().unwrap();
    let kmax = *keys.iter().max().unwrap();
    let smin = *shifts.iter().min().unwrap();
    let smax = *shifts.iter().max().unwrap();
    if kmin as i64 + smin < 0 {
        return Err(ShapleyError::Internal(format!(
            "negative count {} in block evaluation",
            kmin as i64 + smin
        )));
    }
    let mut groups = Slots::new(kmax - kmin + 1);
    for (&w, &k) in weights.iter().zip(keys) {
        groups.add(k - kmin, w);
    }
    let b = groups.values();
    let head = b[0];
    let tail = RationalStepSeries::new(b[1..].to_vec(), T::of_i64(kmin as i64 + 1));
    let vals = conv.multipoint(&tail, smin, (smax - smin) as usize, mode)?;
    Ok(shifts
        .iter()
        .map(|&s| {
            let d = kmin as i64 + s;
            let v = vals[(s - smin) as usize];
            if d > 0 {
                v + head / T::of_i64(d)
            } else {
                v
            }
        })
        .collect())
}

/// Per-column count offsets against the first column, checked on the last row.
fn offsets<C: DominanceCounter + ?Sized>(
    b: Block,
    f: impl Fn(&C, usize, usize) -> usize,
    c: &C,
) -> Result<Vec<i64>> {
    let base0 = f(c, b.i0, b.j0) as i64;
    let base1 = f(c, b.i0, b.j1) as i64;
    (b.i0..=b.i1)
        .map(|i| {
            let d = f(c, i, b.j0) as i64 - base0;
            if f(c, i, b.j1) as i64 - base1 != d {
                return Err(ShapleyError::Internal(format!(
                    "block {b:?} is not empty: column {i} shifts unevenly"
                )));
            }
            Ok(d)
        })
        .collect()
}

fn column_sums<T: Scalar, C: DominanceCounter + ?Sized>(
    conv: &mut Convolver<T>,
    mode: MultipointMode,
    heights: &[T],
    c: &C,
    b: Block,
    f: impl Fn(&C, usize, usize) -> usize + Copy,
) -> Result<Vec<T>> {
    let weights = &heights[b.j0 - 1..b.j1];
    let keys: Vec<usize> = (b.j0..=b.j1).map(|j| f(c, b.i0, j)).collect();
    let shifts = offsets(b, f, c)?;
    shifted_reciprocal_sums(conv, mode, weights, &keys, &shifts)
}

fn vertical<T: Scalar, C: DominanceCounter + ?Sized>(
    conv: &mut Convolver<T>,
    mode: MultipointMode,
    widths: &[T],
    heights: &[T],
    c: &C,
    b: Block,
) -> Result<Vec<T>> {
    if b.is_empty() {
        return Ok(Vec::new());
    }
    let s = column_sums(conv, mode, heights, c, b, |c: &C, i, j| c.ne(i, j))?;
    Ok(s.iter().zip(&widths[b.i0 - 1..b.i1]).map(|(&s, &w)| w * s).collect())
}

/// Anchored-rectangle slab sums `sigma(V(i, B))` for each column of `block`
/// (or `sigma(H(j, B))` for each row).
pub fn sigma_slabs_empty_block<T: Scalar, C: DominanceCounter + ?Sized>(
    conv: &mut Convolver<T>,
    mode: MultipointMode,
    grid: &RankGrid<T>,
    counter: &C,
    block: Block,
    axis: SlabAxis,
) -> Result<Vec<T>> {
    match axis {
        SlabAxis::Vertical => vertical(conv, mode, grid.widths(), grid.heights(), counter, block),
        SlabAxis::Horizontal => vertical(
            conv,
            mode,
            grid.heights(),
            grid.widths(),
            &Transposed(counter),
            block.transpose(),
        ),
    }
}

/// Slab sums of `area * psi` for the three player classes of a cell.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PsiSlabs<T> {
    pub ne: Vec<T>,
    pub nw: Vec<T>,
    pub se: Vec<T>,
}

fn vertical_psi<T: Scalar, C: DominanceCounter + ?Sized>(
    conv: &mut Convolver<T>,
    mode: MultipointMode,
    widths: &[T],
    heights: &[T],
    c: &C,
    b: Block,
) -> Result<PsiSlabs<T>> {
    if b.is_empty() {
        return Ok(PsiSlabs::default());
    }
    let r1 = column_sums(conv, mode, heights, c, b, |c: &C, i, j| {
        let k = c.counts(i, j);
        k.ne + k.nw
    })?;
    let r2 = column_sums(conv, mode, heights, c, b, |c: &C, i, j| {
        let k = c.counts(i, j);
        k.ne + k.se
    })?;
    let r3 = column_sums(conv, mode, heights, c, b, |c: &C, i, j| {
        let k = c.counts(i, j);
        k.ne + k.nw + k.se
    })?;
    let w = &widths[b.i0 - 1..b.i1];
    let mut out = PsiSlabs::default();
    for t in 0..w.len() {
        out.ne.push(w[t] * (r1[t] + r2[t] - r3[t]));
        out.nw.push(w[t] * (r1[t] - r3[t]));
        out.se.push(w[t] * (r2[t] - r3[t]));
    }
    Ok(out)
}

/// Anchored bounding-box slab sums over `block`, split by the class of the
/// player that receives them. The weights are the closed forms
/// `1/(ne+nw) + 1/(ne+se) - 1/all` and so on, which differ from
/// [`PsiWeights`](crate::permcount::PsiWeights) on cells where that class is
/// empty; only slabs lying in some player's region of the class are meaningful.
pub fn sigma_psi_slabs_empty_block<T: Scalar, C: DominanceCounter + ?Sized>(
    conv: &mut Convolver<T>,
    mode: MultipointMode,
    grid: &RankGrid<T>,
    counter: &C,
    block: Block,
    axis: SlabAxis,
) -> Result<PsiSlabs<T>> {
    match axis {
        SlabAxis::Vertical => vertical_psi(conv, mode, grid.widths(), grid.heights(), counter, block),
        SlabAxis::Horizontal => {
            let t = vertical_psi(
                conv,
                mode,
                grid.heights(),
                grid.widths(),
                &Transposed(counter),
                block.transpose(),
            )?;
            Ok(PsiSlabs {
                ne: t.ne,
                nw: t.se,
                se: t.nw,
            })
        }
    }
}
