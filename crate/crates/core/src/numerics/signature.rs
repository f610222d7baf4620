use num_traits::Signed;

use super::matrix::Matrix;
use super::rational::Rational;
use super::{ExactField, NumericsError};
use super::field::Zero;

/// Congruence diagonalization PᵀMP = D of a symmetric matrix.
///
/// Zero pivots are handled by a symmetric swap with a later nonzero diagonal
/// entry, or by replacing eₖ with eₖ+eⱼ when only off-diagonal entries survive.
pub fn congruence_diagonalize<T: ExactField>(m: &Matrix<T>) -> (Vec<T>, Matrix<T>) {
    assert!(m.is_square(), "congruence needs a square matrix");
    let n = m.rows();
    let mut a = m.clone();
    let mut p = Matrix::<T>::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_sym(&mut a, k, j);
                swap_cols(&mut p, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                add_sym(&mut a, k, j, &T::one());
                add_col(&mut p, k, j, &T::one());
            } else {
                continue;
            }
        }
        let piv = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(a[(i, k)].clone() / &piv);
            add_sym(&mut a, i, k, &f);
            add_col(&mut p, i, k, &f);
        }
    }
    ((0..n).map(|i| a[(i, i)].clone()).collect(), p)
}

// row_i += f row_j and col_i += f col_j
fn add_sym<T: ExactField>(a: &mut Matrix<T>, i: usize, j: usize, f: &T) {
    let n = a.rows();
    for c in 0..n {
        let t = a[(j, c)].clone() * f;
        a[(i, c)] = a[(i, c)].clone() + &t;
    }
    for r in 0..n {
        let t = a[(r, j)].clone() * f;
        a[(r, i)] = a[(r, i)].clone() + &t;
    }
}

fn add_col<T: ExactField>(p: &mut Matrix<T>, i: usize, j: usize, f: &T) {
    for r in 0..p.rows() {
        let t = p[(r, j)].clone() * f;
        p[(r, i)] = p[(r, i)].clone() + &t;
    }
}

fn swap_sym<T: ExactField>(a: &mut Matrix<T>, i: usize, j: usize) {
    a.swap_rows(i, j);
    swap_cols(a, i, j);
}

fn swap_cols<T: ExactField>(a: &mut Matrix<T>, i: usize, j: usize) {
    for r in 0..a.rows() {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

/// Signature (n_minus, n_plus) of a nondegenerate symmetric rational matrix.
pub fn sym_signature(m: &Matrix<Rational>) -> Result<(usize, usize), NumericsError> {
    let (d, _) = congruence_diagonalize(m);
    if d.iter().any(|x| x.is_zero()) {
        return Err(NumericsError::DegenerateForm { rank: d.iter().filter(|x| !x.is_zero()).count() });
    }
    let neg = d.iter().filter(|x| x.is_negative()).count();
    Ok((neg, d.len() - neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::q;

    fn diag(v: &[i64]) -> Matrix<Rational> {
        Matrix::from_fn(v.len(), v.len(), |i, j| if i == j { q(v[i]) } else { q(0) })
    }

    #[test]
    fn identity_is_positive() {
        assert_eq!(sym_signature(&diag(&[1; 7])).unwrap(), (0, 7));
    }

    #[test]
    fn degenerate_detected() {
        let e = sym_signature(&diag(&[-1, -1, -1, -1, 0, 1, 1])).unwrap_err();
        assert!(matches!(e, NumericsError::DegenerateForm { rank: 6 }));
    }

    #[test]
    fn hyperbolic_plane_needs_the_sum_trick() {
        let h = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert_eq!(sym_signature(&h).unwrap(), (1, 1));
        let (d, p) = congruence_diagonalize(&h);
        let dm = p.transpose().mul(&h).mul(&p);
        assert_eq!(dm, Matrix::from_fn(2, 2, |i, j| if i == j { d[i].clone() } else { q(0) }));
    }
}
