//! Compensated-arithmetic helpers for the implicit-midpoint solve.
//!
//! The propagator refines each step with one pass of iterative refinement.
//! The correction is only useful if the residual `N x1 - M x0` is formed
//! more accurately than plain f64 accumulation allows, so products are
//! split with fused multiply-add and summed with Neumaier compensation.

use alloc::vec;
use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};

/// Error-free product: returns `(p, e)` with `a * b == p + e` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = libm::fma(a, b, -p);
    (p, e)
}

/// Neumaier-compensated accumulator.
#[derive(Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    #[inline]
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    fn value(self) -> f64 {
        self.sum + self.carry
    }
}

/// Residual `r = n_mat * x1 - m_mat * x0` with compensated accumulation.
///
/// Each row is a single compensated dot product over both terms, so the
/// result is accurate to second order in the unit roundoff — enough for one
/// refinement pass to push the midpoint solve to a few ulps.
pub(crate) fn refinement_residual(
    n_mat: &DMatrix<f64>,
    x1: &DVector<f64>,
    m_mat: &DMatrix<f64>,
    x0: &DVector<f64>,
) -> DVector<f64> {
    let rows = n_mat.nrows();
    let mut out: Vec<f64> = vec![0.0; rows];
    for i in 0..rows {
        let mut acc = Compensated::default();
        for j in 0..n_mat.ncols() {
            let (p, e) = two_prod(n_mat[(i, j)], x1[j]);
            acc.add(p);
            acc.add(e);
        }
        for j in 0..m_mat.ncols() {
            let (p, e) = two_prod(-m_mat[(i, j)], x0[j]);
            acc.add(p);
            acc.add(e);
        }
        out[i] = acc.value();
    }
    DVector::from_vec(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_prod_exact() {
        let (p, e) = two_prod(1.0 + 2f64.powi(-30), 1.0 + 2f64.powi(-30));
        // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60; the last term is below one ulp of p
        assert_eq!(p, 1.0 + 2f64.powi(-29));
        assert_eq!(e, 2f64.powi(-60));
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let mut acc = Compensated::default();
        acc.add(1e16);
        acc.add(1.0);
        acc.add(-1e16);
        assert_eq!(acc.value(), 1.0);
    }

    #[test]
    fn residual_detects_tiny_defect() {
        // 1x1 system: n = [2], m = [1], x0 = [1], exact solve x1 = 0.5.
        // Perturb x1 by one ulp; the residual must resolve it.
        let n = DMatrix::from_element(1, 1, 2.0);
        let m = DMatrix::from_element(1, 1, 1.0);
        let x0 = DVector::from_element(1, 1.0);
        let x1 = DVector::from_element(1, 0.5 + f64::EPSILON);
        let r = refinement_residual(&n, &x1, &m, &x0);
        assert_eq!(r[0], 2.0 * f64::EPSILON);
    }
}
