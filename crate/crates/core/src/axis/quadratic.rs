//! Row sweeps over all cells: `O(n^2)` time, `O(n)` memory.

use crate::permcount::PsiWeights;
use crate::scalar::{CompensatedSum, Scalar};

use super::grid::RankGrid;
use super::sums::Slots;

/// `ne[i]` for the current row, updated as the sweep climbs.
fn initial_ne(n: usize) -> Vec<usize> {
    (0..=n + 1).map(|i| (n + 1).saturating_sub(i)).collect()
}

fn drop_point(ne: &mut [usize], col: usize) {
    for v in &mut ne[1..=col] {
        *v -= 1;
    }
}

pub(crate) fn ar_values<T: Scalar>(g: &RankGrid<T>) -> Vec<T> {
    let n = g.len();
    let mut ne = initial_ne(n);
    let mut cum = Slots::new(n + 1);
    let mut out = vec![T::zero(); n];
    for j in 1..=n {
        let h = g.height(j);
        let mut run = CompensatedSum::new();
        for i in 1..=n {
            if ne[i] > 0 {
                run.add(g.width(i) * h / T::of_usize(ne[i]));
            }
            cum.add(i, run.value());
        }
        let p = g.point_at_row(j);
        let c = g.col(p);
        out[p] = cum.get(c);
        drop_point(&mut ne, c);
    }
    out
}

pub(crate) fn abb_values<T: Scalar>(g: &RankGrid<T>) -> Vec<T> {
    let n = g.len();
    let mut ne = initial_ne(n);
    let (mut cne, mut cnw, mut cse) = (Slots::new(n + 1), Slots::new(n + 1), Slots::new(n + 1));
    let mut out = vec![T::zero(); n];
    let mut below = vec![T::zero(); n];
    let mut row_nw = vec![T::zero(); n + 2];
    for j in 1..=n {
        let h = g.height(j);
        let (mut run_ne, mut run_se) = (CompensatedSum::new(), CompensatedSum::new());
        for i in 1..=n {
            let nw = n + 1 - j - ne[i];
            let se = n + 1 - i - ne[i];
            let psi = PsiWeights::<T>::from_counts(ne[i], nw, se);
            let a = g.width(i) * h;
            run_ne.add(a * psi.psi_ne);
            run_se.add(a * psi.psi_se);
            row_nw[i] = a * psi.psi_nw;
            cne.add(i, run_ne.value());
            cse.add(i, run_se.value());
        }
        // cells strictly right of column i
        let mut run_nw = CompensatedSum::new();
        for i in (1..=n).rev() {
            cnw.add(i, run_nw.value());
            run_nw.add(row_nw[i]);
        }
        let p = g.point_at_row(j);
        let c = g.col(p);
        out[p] = cne.get(c) + cnw.get(c);
        below[p] = cse.get(c);
        drop_point(&mut ne, c);
    }
    for p in 0..n {
        out[p] = out[p] + cse.get(g.col(p)) - below[p];
    }
    out
}
