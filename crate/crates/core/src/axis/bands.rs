//! Near `n^{3/2}` solvers for arbitrary inputs: horizontal bands of about
//! `sqrt(n)` rows, each cut into empty blocks at the columns of its points.

use rayon::prelude::*;

use crate::algebra::{Convolver, MultipointMode};
use crate::error::Result;
use crate::scalar::{compensated_sum, Scalar};

use super::block::{sigma_psi_slabs_empty_block, sigma_slabs_empty_block, Block, PsiSlabs, SlabAxis};
use super::grid::{IndexedCounts, RankGrid};
use super::sums::{prefix, Slots};

pub(crate) fn band_height(n: usize) -> usize {
    ((n as f64).sqrt().ceil() as usize).max(1)
}

/// Points of rows `j0..=j1` by column, and the blocks they bound on the right.
/// Block `t` ends at the column of point `t`; a trailing block may follow.
fn band_blocks<T: Scalar>(g: &RankGrid<T>, j0: usize, j1: usize) -> (Vec<usize>, Vec<Block>) {
    let mut pts: Vec<usize> = (j0..=j1).map(|j| g.point_at_row(j)).collect();
    pts.sort_by_key(|&p| g.col(p));
    let mut blocks = Vec::with_capacity(pts.len() + 1);
    let mut prev = 0;
    for &p in &pts {
        blocks.push(Block::new(prev + 1, g.col(p), j0, j1));
        prev = g.col(p);
    }
    if prev < g.len() {
        blocks.push(Block::new(prev + 1, g.len(), j0, j1));
    }
    (pts, blocks)
}


pub(crate) fn ar_values<T: Scalar>(g: &RankGrid<T>, mode: MultipointMode) -> Result<Vec<T>> {
    let n = g.len();
    let counter = IndexedCounts::new(g);
    let k = band_height(n);
    let mut cols = Slots::new(n);
    let mut out = vec![T::zero(); n];
    for j0 in (1..=n).step_by(k) {
        let j1 = (j0 + k - 1).min(n);
        let (pts, blocks) = band_blocks(g, j0, j1);
        let sums = blocks
            .par_iter()
            .map_init(Convolver::new, |conv, &b| {
                let v = sigma_slabs_empty_block(conv, mode, g, &counter, b, SlabAxis::Vertical)?;
                let h = sigma_slabs_empty_block(conv, mode, g, &counter, b, SlabAxis::Horizontal)?;
                Ok((v, h))
            })
            .collect::<Result<Vec<_>>>()?;
        let below = prefix(&cols.values());
        let mut rows = Slots::new(j1 + 1 - j0);
        for (t, (_, h)) in sums.iter().enumerate() {
            rows.add_at(0, h);
            if let Some(&p) = pts.get(t) {
                let own = compensated_sum(&rows.values()[..=g.row(p) - j0]);
                out[p] = own + below[g.col(p)];
            }
        }
        for (b, (v, _)) in blocks.iter().zip(&sums) {
            cols.add_at(b.i0 - 1, v);
        }
    }
    Ok(out)
}

pub(crate) fn abb_values<T: Scalar>(g: &RankGrid<T>, mode: MultipointMode) -> Result<Vec<T>> {
    let n = g.len();
    let counter = IndexedCounts::new(g);
    let k = band_height(n);
    let (mut c_ne, mut c_nw, mut c_se) = (Slots::new(n), Slots::new(n), Slots::new(n));
    let mut out = vec![T::zero(); n];
    let mut seen = vec![T::zero(); n];
    for j0 in (1..=n).step_by(k) {
        let j1 = (j0 + k - 1).min(n);
        let (pts, blocks) = band_blocks(g, j0, j1);
        let sums: Vec<(PsiSlabs<T>, PsiSlabs<T>)> = blocks
            .par_iter()
            .map_init(Convolver::new, |conv, &b| {
                let v = sigma_psi_slabs_empty_block(conv, mode, g, &counter, b, SlabAxis::Vertical)?;
                let h = sigma_psi_slabs_empty_block(conv, mode, g, &counter, b, SlabAxis::Horizontal)?;
                Ok((v, h))
            })
            .collect::<Result<Vec<_>>>()?;
        let ne_below = prefix(&c_ne.values());
        let nw_below = prefix(&c_nw.values());
        let rows_n = j1 + 1 - j0;
        let (mut r_ne, mut r_se) = (Slots::new(rows_n), Slots::new(rows_n));
        for (t, (_, h)) in sums.iter().enumerate() {
            r_ne.add_at(0, &h.ne);
            r_se.add_at(0, &h.se);
            if let Some(&p) = pts.get(t) {
                let r = g.row(p) - j0;
                let own = compensated_sum(&r_ne.values()[..=r]) + compensated_sum(&r_se.values()[r + 1..]);
                let c = g.col(p);
                out[p] = own + ne_below[c] + (nw_below[n] - nw_below[c]);
            }
        }
        let mut r_nw = Slots::new(rows_n);
        for t in (1..sums.len()).rev() {
            r_nw.add_at(0, &sums[t].1.nw);
            if let Some(&p) = pts.get(t - 1) {
                out[p] = out[p] + compensated_sum(&r_nw.values()[..=g.row(p) - j0]);
            }
        }
        for (b, (v, _)) in blocks.iter().zip(&sums) {
            c_ne.add_at(b.i0 - 1, &v.ne);
            c_nw.add_at(b.i0 - 1, &v.nw);
            c_se.add_at(b.i0 - 1, &v.se);
        }
        let se_through = prefix(&c_se.values());
        for &p in &pts {
            seen[p] = se_through[g.col(p)];
        }
    }
    let se_all = prefix(&c_se.values());
    for p in 0..n {
        out[p] = out[p] + se_all[g.col(p)] - seen[p];
    }
    Ok(out)
}
