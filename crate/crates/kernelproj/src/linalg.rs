//! Small dense-matrix helpers shared across the crate.

use ndarray::prelude::*;
use ndarray_linalg::{Eigh, UPLO};

use crate::error::{Error, Result};

/// Absolute tolerance on `max |A - A^T|` for matrices accepted as symmetric.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Components smaller than this are ignored when fixing eigenvector signs.
const SIGN_EPS: f64 = 1e-12;

pub(crate) fn ensure_square(a: &Array2<f64>) -> Result<usize> {
    let (rows, cols) = a.dim();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    Ok(rows)
}

pub(crate) fn max_abs_asymmetry(a: &Array2<f64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in (i + 1)..n {
            worst = worst.max((a[[i, j]] - a[[j, i]]).abs());
        }
    }
    worst
}

pub(crate) fn ensure_symmetric(a: &Array2<f64>) -> Result<()> {
    ensure_square(a)?;
    let defect = max_abs_asymmetry(a);
    if defect > SYMMETRY_TOL {
        return Err(Error::NotSymmetric {
            defect,
            tol: SYMMETRY_TOL,
        });
    }
    Ok(())
}

pub(crate) fn frobenius(a: &Array2<f64>) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// (A + A^T) / 2, exactly symmetric in floating point.
pub(crate) fn symmetrized(a: &Array2<f64>) -> Array2<f64> {
    let n = a.nrows();
    let mut out = a.clone();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (a[[i, j]] + a[[j, i]]);
            out[[i, j]] = v;
            out[[j, i]] = v;
        }
    }
    out
}

/// Flip the column sign so its first component above `SIGN_EPS` is positive.
pub(crate) fn canonicalize_sign(mut col: ArrayViewMut1<f64>) {
    for &x in col.iter() {
        if x.abs() > SIGN_EPS {
            if x < 0.0 {
                col.mapv_inplace(|v| -v);
            }
            return;
        }
    }
}

/// Symmetric eigendecomposition with eigenvalues sorted descending and a
/// deterministic sign convention on each eigenvector column.
pub(crate) fn eigh_desc(a: &Array2<f64>) -> Result<(Vec<f64>, Array2<f64>)> {
    let dim = ensure_square(a)?;
    let (vals, vecs) = a.eigh(UPLO::Lower).map_err(|e| Error::Eigensolver {
        dim,
        frobenius: frobenius(a),
        max_abs: a.iter().fold(0.0_f64, |m, x| m.max(x.abs())),
        reason: e.to_string(),
    })?;
    // LAPACK returns ascending order; reverse it.
    let mut vals_desc = Vec::with_capacity(dim);
    let mut vecs_desc = Array2::zeros((dim, dim));
    for k in 0..dim {
        let src = dim - 1 - k;
        vals_desc.push(vals[src]);
        vecs_desc.column_mut(k).assign(&vecs.column(src));
        canonicalize_sign(vecs_desc.column_mut(k));
    }
    Ok((vals_desc, vecs_desc))
}

/// Eigenvalues only, sorted descending.
pub(crate) fn eigvalsh_desc(a: &Array2<f64>) -> Result<Vec<f64>> {
    let (vals, _) = eigh_desc(a)?;
    Ok(vals)
}

/// Gershgorin interval containing the whole spectrum of a symmetric matrix.
pub(crate) fn gershgorin_bounds(a: &Array2<f64>) -> (f64, f64) {
    let n = a.nrows();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let radius: f64 = (0..n)
            .filter(|&j| j != i)
            .map(|j| a[[i, j]].abs())
            .sum();
        lo = lo.min(a[[i, i]] - radius);
        hi = hi.max(a[[i, i]] + radius);
    }
    (lo, hi)
}

/// Sum a list of equally-shaped matrices by pairwise reduction, so the result
/// does not depend on how callers batch the terms.
pub(crate) fn pairwise_matrix_sum(mut terms: Vec<Array2<f64>>, shape: (usize, usize)) -> Array2<f64> {
    if terms.is_empty() {
        return Array2::zeros(shape);
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn symmetrized_is_exactly_symmetric() {
        let a = array![[1.0, 2.0], [3.0, 4.0]];
        let s = symmetrized(&a);
        assert_eq!(s[[0, 1]], s[[1, 0]]);
        assert_eq!(s[[0, 1]], 2.5);
    }

    #[test]
    fn eigh_desc_orders_and_signs() {
        let a = array![[2.0, 1.0], [1.0, 2.0]];
        let (vals, vecs) = eigh_desc(&a).unwrap();
        assert!((vals[0] - 3.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        // first nonzero component of each column is positive
        for k in 0..2 {
            assert!(vecs[[0, k]] > 0.0);
        }
    }

    #[test]
    fn gershgorin_contains_spectrum() {
        let a = array![[2.0, 1.0], [1.0, 2.0]];
        let (lo, hi) = gershgorin_bounds(&a);
        assert!(lo <= 1.0 && hi >= 3.0);
    }

    #[test]
    fn pairwise_sum_matches_sequential() {
        let terms: Vec<Array2<f64>> = (0..7)
            .map(|k| Array2::from_elem((2, 2), k as f64))
            .collect();
        let total = pairwise_matrix_sum(terms, (2, 2));
        assert_eq!(total[[0, 0]], 21.0);
    }

    #[test]
    fn pairwise_sum_empty_is_zero() {
        let total = pairwise_matrix_sum(Vec::new(), (3, 3));
        assert_eq!(total.sum(), 0.0);
    }
}
