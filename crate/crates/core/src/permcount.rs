//! Closed-form probabilities for random insertion orders.
//!
//! Every function is generic over the number type so tests can evaluate the
//! same expressions exactly over rationals.

use num_traits::{FromPrimitive, Num};

use crate::error::{Result, ShapleyError};

fn num<N: Num + FromPrimitive>(k: usize) -> N {
    N::from_usize(k).expect("count fits the number type")
}

/// Probability that every element of a `beta`-set precedes `x` and every
/// element of a disjoint `alpha`-set follows it: `alpha! beta! / (alpha+beta+1)!`.
pub fn prob_sandwich<N: Num + Copy + FromPrimitive>(alpha: usize, beta: usize) -> N {
    let mut p = N::one() / num::<N>(alpha + beta + 1);
    for i in 1..=beta {
        p = p * num::<N>(i) / num::<N>(alpha + i);
    }
    p
}

/// Sizes of three disjoint sets `A`, `B`, `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleCounts {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl TripleCounts {
    pub fn new(alpha: usize, beta: usize, gamma: usize) -> Self {
        Self { alpha, beta, gamma }
    }
}

/// Probability that a fixed `a in A` is first among `A`, and also first among
/// `A ∪ B` or first among `A ∪ C`.
pub fn prob_first_of_a<N: Num + Copy + FromPrimitive>(c: TripleCounts) -> Result<N> {
    if c.alpha == 0 {
        return Err(ShapleyError::domain("the first-of-A probability needs a nonempty A"));
    }
    let TripleCounts { alpha, beta, gamma } = c;
    Ok(N::one() / num::<N>(alpha + beta) + N::one() / num::<N>(alpha + gamma)
        - N::one() / num::<N>(alpha + beta + gamma))
}

/// Probability that a fixed `b in B` comes before all of `A ∪ B` except itself
/// and after at least one element of `C`.
pub fn prob_first_of_b<N: Num + Copy + FromPrimitive>(c: TripleCounts) -> Result<N> {
    if c.beta == 0 {
        return Err(ShapleyError::domain("the first-of-B probability needs a nonempty B"));
    }
    let TripleCounts { alpha, beta, gamma } = c;
    Ok(N::one() / num::<N>(alpha + beta) - N::one() / num::<N>(alpha + beta + gamma))
}

/// Hull: probability that `q`, `q'` precede `p` and the other `level - 1`
/// points of the open halfplane follow it.
pub fn rho<N: Num + Copy + FromPrimitive>(level: usize) -> Result<N> {
    if level == 0 {
        return Err(ShapleyError::domain("rho is undefined at level 0"));
    }
    Ok(prob_sandwich(level - 1, 2))
}

/// Hull perimeter: probability that `q` precedes `p` and the `level` halfplane
/// points follow it.
pub fn rho_prime<N: Num + Copy + FromPrimitive>(level: usize) -> N {
    prob_sandwich(level, 1)
}

/// Disk: basis of `size` points all before `p`, the other `level - 1`
/// outside points after it.
pub fn rho_basis<N: Num + Copy + FromPrimitive>(level: usize, size: usize) -> Result<N> {
    if level == 0 {
        return Err(ShapleyError::domain("rho(B) is undefined at level 0"));
    }
    Ok(prob_sandwich(level - 1, size))
}

/// Disk: `p` in the basis is its last member and precedes every outside point.
pub fn rho_prime_basis<N: Num + Copy + FromPrimitive>(level: usize, size: usize) -> N {
    assert!(size >= 1, "a basis has at least one point");
    prob_sandwich(level, size - 1)
}

/// Per-cell weights for the anchored bounding-box game.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsiWeights<N> {
    pub psi_ne: N,
    pub psi_nw: N,
    pub psi_se: N,
}

impl<N: Num + Copy + FromPrimitive> PsiWeights<N> {
    /// Weights of a cell with the given closed-quadrant counts. A term whose
    /// denominator vanishes has no player to receive it and is zero.
    pub fn from_counts(ne: usize, nw: usize, se: usize) -> Self {
        let inv = |k: usize| if k == 0 { N::zero() } else { N::one() / num::<N>(k) };
        let all = inv(ne + nw + se);
        let (a, b) = (inv(ne + nw), inv(ne + se));
        let psi_ne = if ne == 0 { N::zero() } else { a + b - all };
        let psi_nw = if nw == 0 { N::zero() } else { a - all };
        let psi_se = if se == 0 { N::zero() } else { b - all };
        Self { psi_ne, psi_nw, psi_se }
    }

    pub fn weighted_total(&self, ne: usize, nw: usize, se: usize) -> N {
        num::<N>(ne) * self.psi_ne + num::<N>(nw) * self.psi_nw + num::<N>(se) * self.psi_se
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert_eq!(prob_sandwich::<f64>(0, 0), 1.0);
        assert!((prob_sandwich::<f64>(1, 1) - 1.0 / 6.0).abs() < 1e-15);
        let t = TripleCounts::new(1, 1, 1);
        assert!((prob_first_of_a::<f64>(t).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((prob_first_of_b::<f64>(t).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(prob_first_of_b::<f64>(TripleCounts::new(2, 3, 0)).unwrap(), 0.0);
        assert!((prob_first_of_a::<f64>(TripleCounts::new(4, 2, 0)).unwrap() - 0.25).abs() < 1e-15);
        assert!((rho::<f64>(1).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((rho::<f64>(2).unwrap() - 1.0 / 12.0).abs() < 1e-15);
        assert_eq!(rho_prime::<f64>(0), 0.5);
        assert!(rho::<f64>(0).is_err());
        assert!(prob_first_of_a::<f64>(TripleCounts::new(0, 1, 1)).is_err());
    }

    #[test]
    fn psi_sanity_identity() {
        let w = PsiWeights::<f64>::from_counts(1, 1, 1);
        assert!((w.psi_ne - 2.0 / 3.0).abs() < 1e-15);
        assert!((w.psi_nw - 1.0 / 6.0).abs() < 1e-15);
        assert!((w.psi_se - 1.0 / 6.0).abs() < 1e-15);
        for ne in 1..6 {
            for nw in 0..6 {
                for se in 0..6 {
                    let w = PsiWeights::<f64>::from_counts(ne, nw, se);
                    assert!((w.weighted_total(ne, nw, se) - 1.0).abs() < 1e-12);
                }
            }
        }
    }
}
