use super::field::{ExactField, Zero};
use super::matrix::Matrix;

/// A subspace of Tⁿ with a fixed basis and a fast coordinate map.
///
/// The basis is reduced to an independent list at construction. A set of
/// pivot coordinates on which the basis restricts to an invertible square
/// matrix is cached, so coordinates cost one small matrix-vector product
/// plus a membership check.
#[derive(Clone, Debug)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
    inv: Matrix<T>,
}

impl<T: ExactField> Subspace<T> {
    pub fn new(ambient: usize, vectors: &[Vec<T>]) -> Self {
        let basis: Vec<Vec<T>> = if vectors.is_empty() {
            Vec::new()
        } else {
            let (_, piv) = Matrix::from_cols(vectors).rref();
            piv.into_iter().map(|i| vectors[i].clone()).collect()
        };
        let k = basis.len();
        if k == 0 {
            return Self { ambient, basis, pivots: Vec::new(), inv: Matrix::zeros(0, 0) };
        }
        let (_, pivots) = Matrix::from_rows(basis.clone()).rref();
        let sub = Matrix::from_fn(k, k, |r, c| basis[c][pivots[r]].clone());
        let inv = sub.inverse().expect("pivot minor of an independent list is invertible");
        Self { ambient, basis, pivots, inv }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        let k = self.dim();
        if k == 0 {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        let head: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let c = self.inv.mul_vec(&head);
        let back = self.combine(&c);
        (back.as_slice() == v).then_some(c)
    }

    pub fn combine(&self, coeffs: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = o.clone() + &(c.clone() * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_all(&self, vs: &[Vec<T>]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.contains_all(&other.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{q, Rational};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn drops_dependent_vectors_and_recovers_coordinates() {
        let s = Subspace::new(3, &[v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        let c = s.coordinates(&v(&[3, 5, 2])).unwrap();
        assert_eq!(s.combine(&c), v(&[3, 5, 2]));
        assert!(!s.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn zero_subspace() {
        let s: Subspace<Rational> = Subspace::new(2, &[]);
        assert!(s.contains(&v(&[0, 0])));
        assert!(!s.contains(&v(&[1, 0])));
    }
}
