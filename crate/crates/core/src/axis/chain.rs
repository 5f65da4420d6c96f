//! Near-linear solvers for decreasing chains. The cells below the staircase
//! split into dyadic blocks: the cell `(i, j)` belongs to the smallest dyadic
//! interval holding both `i - 1` and `n + 1 - j`.

use rayon::prelude::*;

use crate::algebra::{Convolver, MultipointMode};
use crate::error::Result;
use crate::scalar::{CompensatedSum, Scalar};

use super::block::{sigma_psi_slabs_empty_block, sigma_slabs_empty_block, Block, SlabAxis};
use super::grid::{DecreasingChainCounts, RankGrid};
use super::sums::{prefix, Slots};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Dyadic {
    pub level: u32,
    pub alpha: usize,
    pub ell: usize,
    /// Clamped midpoint.
    pub mid: usize,
    pub block: Block,
}

/// Nonempty dyadic blocks under the staircase of an `n`-point chain.
pub(crate) fn dyadic_blocks(n: usize) -> Vec<Dyadic> {
    let top = (n + 1).next_power_of_two();
    let mut out = Vec::new();
    for level in 1..=top.trailing_zeros() {
        let len = 1usize << level;
        for alpha in 0..top / len {
            let ell = alpha * len;
            let r = (ell + len).min(n + 1);
            let mid = (ell + len / 2).min(n + 1);
            let block = Block::new(ell + 1, mid, n + 2 - r, n + 1 - mid);
            if !block.is_empty() {
                out.push(Dyadic {
                    level,
                    alpha,
                    ell,
                    mid,
                    block,
                });
            }
        }
    }
    out
}

/// Position in `blocks` by level and offset.
fn lookup(n: usize, blocks: &[Dyadic]) -> Vec<Vec<Option<usize>>> {
    let top = (n + 1).next_power_of_two();
    let mut table: Vec<Vec<Option<usize>>> = (0..=top.trailing_zeros())
        .map(|lv| vec![None; top >> lv])
        .collect();
    for (k, d) in blocks.iter().enumerate() {
        table[d.level as usize][d.alpha] = Some(k);
    }
    table
}


/// Sum over the blocks met by point `a` of its part of each block: columns up
/// to `a` when `a` is left of the split, otherwise rows up to its own.
fn staircase_walk<T: Scalar>(
    n: usize,
    a: usize,
    blocks: &[Dyadic],
    table: &[Vec<Option<usize>>],
    vpre: &[Vec<T>],
    hpre: &[Vec<T>],
) -> T {
    let b = n + 1 - a;
    let mut s = CompensatedSum::new();
    for level in 1..table.len() {
        if a % (1 << level) == 0 {
            continue;
        }
        let Some(k) = table[level][a >> level] else {
            continue;
        };
        let d = &blocks[k];
        s.add(if a <= d.mid {
            vpre[k][a - d.ell]
        } else {
            hpre[k][b + 1 - d.block.j0]
        });
    }
    s.value()
}

pub(crate) fn ar_values<T: Scalar>(g: &RankGrid<T>, mode: MultipointMode) -> Result<Vec<T>> {
    let n = g.len();
    let counter = DecreasingChainCounts { n };
    let blocks = dyadic_blocks(n);
    let sums = blocks
        .par_iter()
        .map_init(Convolver::new, |conv, d| {
            let v = sigma_slabs_empty_block(conv, mode, g, &counter, d.block, SlabAxis::Vertical)?;
            let h = sigma_slabs_empty_block(conv, mode, g, &counter, d.block, SlabAxis::Horizontal)?;
            Ok((prefix(&v), prefix(&h)))
        })
        .collect::<Result<Vec<_>>>()?;
    let (vpre, hpre): (Vec<_>, Vec<_>) = sums.into_iter().unzip();
    let table = lookup(n, &blocks);
    let mut out = vec![T::zero(); n];
    for a in 1..=n {
        out[g.point_at_col(a)] = staircase_walk(n, a, &blocks, &table, &vpre, &hpre);
    }
    Ok(out)
}

/// Cells above the staircase, tiled by the dyadic blocks of the chain of
/// `n - 1` points obtained by a half turn.
fn upper_blocks(n: usize) -> Vec<Block> {
    if n < 2 {
        return Vec::new();
    }
    dyadic_blocks(n - 1)
        .into_iter()
        .map(|d| {
            let b = d.block;
            Block::new(n + 1 - b.i1, n + 1 - b.i0, n + 1 - b.j1, n + 1 - b.j0)
        })
        .collect()
}

pub(crate) fn abb_values<T: Scalar>(g: &RankGrid<T>, mode: MultipointMode) -> Result<Vec<T>> {
    let n = g.len();
    let counter = DecreasingChainCounts { n };
    let blocks = dyadic_blocks(n);
    let lower = blocks
        .par_iter()
        .map_init(Convolver::new, |conv, d| {
            let v = sigma_psi_slabs_empty_block(conv, mode, g, &counter, d.block, SlabAxis::Vertical)?;
            let h = sigma_psi_slabs_empty_block(conv, mode, g, &counter, d.block, SlabAxis::Horizontal)?;
            Ok((v, h))
        })
        .collect::<Result<Vec<_>>>()?;
    let upper_b = upper_blocks(n);
    let upper = upper_b
        .par_iter()
        .map_init(Convolver::new, |conv, &b| {
            let v = sigma_psi_slabs_empty_block(conv, mode, g, &counter, b, SlabAxis::Vertical)?;
            let h = sigma_psi_slabs_empty_block(conv, mode, g, &counter, b, SlabAxis::Horizontal)?;
            Ok((v.se, h.nw))
        })
        .collect::<Result<Vec<_>>>()?;

    // full-line sums: below the staircase by column (NW) and row (SE),
    // above it by row (NW) and column (SE)
    let (mut col_nw, mut row_se) = (Slots::new(n + 2), Slots::new(n + 2));
    let (mut row_nw, mut col_se) = (Slots::new(n + 2), Slots::new(n + 2));
    let mut vpre = Vec::with_capacity(blocks.len());
    let mut hpre = Vec::with_capacity(blocks.len());
    for (d, (v, h)) in blocks.iter().zip(&lower) {
        col_nw.add_at(d.block.i0, &v.nw);
        row_se.add_at(d.block.j0, &h.se);
        vpre.push(prefix(&v.ne));
        hpre.push(prefix(&h.ne));
    }
    for (b, (v, h)) in upper_b.iter().zip(&upper) {
        col_se.add_at(b.i0, v);
        row_nw.add_at(b.j0, h);
    }
    let col_nw = prefix(&col_nw.values()[1..=n]);
    let row_se = prefix(&row_se.values()[1..=n]);
    let row_nw = prefix(&row_nw.values()[1..=n]);
    let col_se = prefix(&col_se.values()[1..=n]);

    let table = lookup(n, &blocks);
    let mut out = vec![T::zero(); n];
    for a in 1..=n {
        let b = n + 1 - a;
        let ne = staircase_walk(n, a, &blocks, &table, &vpre, &hpre);
        out[g.point_at_col(a)] = ne
            + (col_nw[n] - col_nw[a])
            + row_nw[b]
            + (row_se[n] - row_se[b])
            + col_se[a];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_tile_both_staircases() {
        for n in 1..40 {
            let mut hits = vec![vec![0u8; n + 1]; n + 1];
            for d in dyadic_blocks(n) {
                let b = d.block;
                for i in b.i0..=b.i1 {
                    for j in b.j0..=b.j1 {
                        hits[i][j] += 1;
                    }
                }
            }
            for b in upper_blocks(n) {
                for i in b.i0..=b.i1 {
                    for j in b.j0..=b.j1 {
                        hits[i][j] += 2;
                    }
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    let want = if i + j <= n + 1 { 1 } else { 2 };
                    assert_eq!(hits[i][j], want, "n={n} cell=({i},{j})");
                }
            }
        }
    }
}
