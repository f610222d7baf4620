//! Derivation algebras of bilinear products and of alternating 3-forms,
//! stabilizers inside them, and trace forms of Lie algebras given by
//! structure constants.
//!
//! Matrices act on column vectors: d(eᵢ) = Σₖ d[k][i] eₖ. A matrix unknown is
//! flattened row-major, so d[k][i] is unknown number k·m + i.

use rayon::prelude::*;

use crate::numerics::{sym_signature, NumericsError, QMatrix, Rational, Subspace, Zero};
use crate::threeform::{index_sets, KForm};

/// Structure constants c[i][j][k] with eᵢeⱼ = Σₖ c[i][j][k] eₖ.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraTable {
    dim: usize,
    c: Vec<Rational>,
}

impl AlgebraTable {
    pub fn zero(dim: usize) -> Self {
        Self { dim, c: vec![Rational::zero(); dim * dim * dim] }
    }

    /// Builds the table from the coordinate vectors of eᵢeⱼ.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut t = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                for (k, x) in v.into_iter().enumerate() {
                    t.c[(i * dim + j) * dim + k] = x;
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn product(&self, i: usize, j: usize) -> Vec<Rational> {
        let s = (i * self.dim + j) * self.dim;
        self.c[s..s + self.dim].to_vec()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries as (i, j, k, c).
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.dim;
        self.c.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(p, c)| (p / (n * n), (p / n) % n, p % n, c))
    }

    /// Matrix of left multiplication y ↦ eᵢy, i.e. ad eᵢ for a Lie algebra.
    pub fn left_mul(&self, i: usize) -> QMatrix {
        QMatrix::from_fn(self.dim, self.dim, |k, j| self.get(i, j, k).clone())
    }

    pub fn is_anticommutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| (0..self.dim).all(|k| (self.get(i, j, k) + self.get(j, i, k)).is_zero())))
    }

    /// First basis triple failing the Jacobi identity, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let triples: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k)))).collect();
        triples.into_par_iter().find_first(|&(i, j, k)| {
            let e = |a| crate::numerics::unit_vec::<Rational>(n, a);
            let t1 = self.mul(&e(i), &self.mul(&e(j), &e(k)));
            let t2 = self.mul(&e(j), &self.mul(&e(k), &e(i)));
            let t3 = self.mul(&e(k), &self.mul(&e(i), &e(j)));
            t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero())
        })
    }

    /// κ(eᵢ,eⱼ) = tr(ad eᵢ ad eⱼ).
    pub fn killing_form(&self) -> QMatrix {
        let ads: Vec<QMatrix> = (0..self.dim).map(|i| self.left_mul(i)).collect();
        let entries: Vec<Rational> = (0..self.dim * self.dim)
            .into_par_iter()
            .map(|p| {
                let (i, j) = (p / self.dim, p % self.dim);
                ads[i].mul(&ads[j]).trace()
            })
            .collect();
        QMatrix::from_flat(self.dim, self.dim, entries)
    }

    /// Signature (n_minus, n_plus) of the Killing form.
    pub fn killing_signature(&self) -> Result<(usize, usize), NumericsError> {
        sym_signature(&self.killing_form())
    }
}

/// A Lie subalgebra of gl_m given by a basis of m×m matrices.
#[derive(Clone, Debug)]
pub struct DerivationAlgebra {
    ambient: usize,
    basis: Vec<QMatrix>,
    span: Subspace<Rational>,
}

impl DerivationAlgebra {
    pub fn new(ambient: usize, basis: Vec<QMatrix>) -> Self {
        let flat: Vec<Vec<Rational>> = basis.iter().map(QMatrix::flatten).collect();
        let span = Subspace::new(ambient * ambient, &flat);
        let basis = span.basis().iter().map(|v| QMatrix::from_flat(ambient, ambient, v.clone())).collect();
        Self { ambient, basis, span }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn span(&self) -> &Subspace<Rational> {
        &self.span
    }

    pub fn contains(&self, d: &QMatrix) -> bool {
        self.span.contains(&d.flatten())
    }

    pub fn coordinates(&self, d: &QMatrix) -> Option<Vec<Rational>> {
        self.span.coordinates(&d.flatten())
    }

    pub fn combine(&self, coeffs: &[Rational]) -> QMatrix {
        QMatrix::from_flat(self.ambient, self.ambient, self.span.combine(coeffs))
    }

    /// Equality as subspaces of gl_m.
    pub fn same_as(&self, o: &Self) -> bool {
        self.span.same_as(&o.span)
    }

    pub fn is_bracket_closed(&self) -> bool {
        self.structure_table().is_some()
    }

    /// Structure constants of the commutator in this basis, or `None` if
    /// some bracket leaves the span.
    pub fn structure_table(&self) -> Option<AlgebraTable> {
        let n = self.dim();
        let rows: Option<Vec<Vec<Rational>>> = (0..n * n)
            .into_par_iter()
            .map(|p| self.coordinates(&self.basis[p / n].commutator(&self.basis[p % n])))
            .collect();
        let rows = rows?;
        Some(AlgebraTable::from_fn(n, |i, j| rows[i * n + j].clone()))
    }

    /// The elements killing `x`, computed inside this algebra.
    pub fn annihilator(&self, x: &[Rational]) -> DerivationAlgebra {
        let images: Vec<Vec<Rational>> = self.basis.iter().map(|d| d.mul_vec(x)).collect();
        let system = QMatrix::from_cols(&images);
        let combos = if self.basis.is_empty() { Vec::new() } else { system.nullspace() };
        DerivationAlgebra::new(self.ambient, combos.iter().map(|c| self.combine(c)).collect())
    }

    /// Restriction to the coordinates `keep` when those span an invariant
    /// subspace.
    pub fn restrict(&self, keep: &[usize]) -> DerivationAlgebra {
        let k = keep.len();
        let basis = self.basis.iter().map(|d| QMatrix::from_fn(k, k, |r, c| d[(keep[r], keep[c])].clone())).collect();
        DerivationAlgebra::new(k, basis)
    }
}

fn solve(m: usize, rows: Vec<Vec<Rational>>) -> DerivationAlgebra {
    let rows: Vec<Vec<Rational>> = rows.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect();
    let kernel = if rows.is_empty() {
        (0..m * m).map(|i| crate::numerics::unit_vec(m * m, i)).collect()
    } else {
        QMatrix::from_rows(rows).nullspace()
    };
    DerivationAlgebra::new(m, kernel.into_iter().map(|v| QMatrix::from_flat(m, m, v)).collect())
}

/// Der of an algebra: the kernel of the Leibniz rows
/// Σ_p c_ijp d_qp − Σ_p c_pjq d_pi − Σ_p c_ipq d_pj = 0, one per (i, j, q).
pub fn derivations_of_algebra(t: &AlgebraTable) -> DerivationAlgebra {
    let m = t.dim();
    let rows: Vec<Vec<Rational>> = (0..m * m * m)
        .into_par_iter()
        .map(|r| {
            let (i, j, q) = (r / (m * m), (r / m) % m, r % m);
            let mut row = vec![Rational::zero(); m * m];
            for p in 0..m {
                row[q * m + p] += t.get(i, j, p);
                row[p * m + i] -= t.get(p, j, q);
                row[p * m + j] -= t.get(i, p, q);
            }
            row
        })
        .collect();
    solve(m, rows)
}

/// Der of a 3-form: Ω(fX,Y,Z) + Ω(X,fY,Z) + Ω(X,Y,fZ) = 0 on the basis
/// triples i < j < k.
pub fn derivations_of_form(omega: &KForm<Rational>) -> DerivationAlgebra {
    let m = omega.dim();
    let rows = index_sets(m, 3)
        .into_iter()
        .map(|idx| {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let mut row = vec![Rational::zero(); m * m];
            for p in 0..m {
                row[p * m + i] += omega.coeff(&[p, j, k]);
                row[p * m + j] += omega.coeff(&[i, p, k]);
                row[p * m + k] += omega.coeff(&[i, j, p]);
            }
            row
        })
        .collect();
    solve(m, rows)
}

/// {d ∈ alg : d(x) = 0}.
pub fn annihilator_stabilizer(alg: &DerivationAlgebra, x: &[Rational]) -> DerivationAlgebra {
    alg.annihilator(x)
}

/// Whether `d` satisfies d(xy) = d(x)y + x d(y) on all basis pairs.
pub fn is_derivation(t: &AlgebraTable, d: &QMatrix) -> bool {
    let m = t.dim();
    let cols: Vec<Vec<Rational>> = (0..m).map(|i| d.col(i)).collect();
    (0..m).all(|i| {
        (0..m).all(|j| {
            let lhs = d.mul_vec(&t.product(i, j));
            let e = |a| crate::numerics::unit_vec::<Rational>(m, a);
            let rhs = crate::numerics::vec_add(&t.mul(&cols[i], &e(j)), &t.mul(&e(i), &cols[j]));
            lhs == rhs
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::q;
    use crate::octonion::{basis_table, OctonionKind};

    #[test]
    fn octonion_derivations_have_dimension_14() {
        for kind in OctonionKind::ALL {
            let t = basis_table(kind);
            let der = derivations_of_algebra(&t);
            assert_eq!(der.dim(), 14, "{kind:?}");
            assert!(der.basis().iter().all(|d| is_derivation(&t, d)));
            assert!(der.is_bracket_closed());
            assert_eq!(der.annihilator(&crate::numerics::unit_vec(8, 0)).dim(), 14);
        }
    }

    #[test]
    fn componentwise_plane_has_no_derivations() {
        let t = AlgebraTable::from_fn(2, |i, j| if i == j { crate::numerics::unit_vec(2, i) } else { vec![q(0), q(0)] });
        assert_eq!(derivations_of_algebra(&t).dim(), 0);
    }

    #[test]
    fn zero_form_is_fixed_by_everything() {
        assert_eq!(derivations_of_form(&KForm::zero(7, 3)).dim(), 49);
    }

    #[test]
    fn abelian_line_has_degenerate_killing_form() {
        let t = AlgebraTable::zero(1);
        assert!(matches!(t.killing_signature(), Err(NumericsError::DegenerateForm { rank: 0 })));
    }
}
