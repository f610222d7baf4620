//! Seven-dimensional cross products, the triple product, and the split and
//! division octonion algebras 𝒞 = F1 ⊕ V built from them by
//! XY = −n(X,Y)1 + X×Y.
//!
//! Split coordinates on V are (s,u,v) with basis E₀, E₁, E₂, E₃, F₁, F₂, F₃ and
//! norm n(X) = −s² − 4u·v. Division coordinates are e₁…e₇ with the Fano
//! lines (123), (147), (165), (246), (257), (354), (367) and n = I₇.

use std::fmt;
use std::sync::OnceLock;

use crate::derivsolver::AlgebraTable;
use crate::numerics::{congruence_diagonalize, dot, q, unit_vec, vec_add, vec_scale, vec_sub, QMatrix, Rational, Zero};
use crate::threeform::KForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OctonionKind {
    Split,
    Division,
}

impl OctonionKind {
    pub const ALL: [OctonionKind; 2] = [OctonionKind::Split, OctonionKind::Division];

    pub fn name(self) -> &'static str {
        match self {
            OctonionKind::Split => "split",
            OctonionKind::Division => "division",
        }
    }

    /// Labels of the imaginary basis vectors.
    pub fn labels(self) -> [&'static str; 7] {
        match self {
            OctonionKind::Split => ["E0", "E1", "E2", "E3", "F1", "F2", "F3"],
            OctonionKind::Division => ["e1", "e2", "e3", "e4", "e5", "e6", "e7"],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OctonionError {
    #[error("octonion has norm {0}, expected 1")]
    NotUnitNorm(String),
    #[error("no nonisotropic vector found in the required subspace")]
    NonisotropicSearchFailed,
}

pub const FANO_LINES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 7], [1, 6, 5], [2, 4, 6], [2, 5, 7], [3, 5, 4], [3, 6, 7]];

/// V = F⁷ with a nondegenerate norm and a cross product, stored as the table
/// of eᵢ×eⱼ.
#[derive(Clone, Debug)]
pub struct CrossProductSpace {
    kind: OctonionKind,
    norm: QMatrix,
    table: Vec<Vec<Vec<Rational>>>,
}

pub fn space(kind: OctonionKind) -> &'static CrossProductSpace {
    static SPLIT: OnceLock<CrossProductSpace> = OnceLock::new();
    static DIVISION: OnceLock<CrossProductSpace> = OnceLock::new();
    match kind {
        OctonionKind::Split => SPLIT.get_or_init(split_space),
        OctonionKind::Division => DIVISION.get_or_init(division_space),
    }
}

fn split_cross(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (s, u, v) = (&a[0], &a[1..4], &a[4..7]);
    let (t, x, y) = (&b[0], &b[1..4], &b[4..7]);
    let two = q(2);
    let head = (dot(u, y) - dot(v, x)) * &two;
    let mid = vec_sub(&vec_sub(&vec_scale(x, s), &vec_scale(u, t)), &vec_scale(&cross3(v, y), &two));
    let tail = vec_add(&vec_sub(&vec_scale(v, t), &vec_scale(y, s)), &vec_scale(&cross3(u, x), &two));
    let mut out = vec![head];
    out.extend(mid);
    out.extend(tail);
    out
}

/// The usual cross product on F³.
pub fn cross3(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn split_space() -> CrossProductSpace {
    let norm = QMatrix::from_fn(7, 7, |i, j| match (i, j) {
        (0, 0) => q(-1),
        (i, j) if i >= 1 && j == i + 3 && i <= 3 => q(-2),
        (i, j) if j >= 1 && i == j + 3 && j <= 3 => q(-2),
        _ => q(0),
    });
    let table = (0..7)
        .map(|i| (0..7).map(|j| split_cross(&unit_vec(7, i), &unit_vec(7, j))).collect())
        .collect();
    CrossProductSpace { kind: OctonionKind::Split, norm, table }
}

fn division_space() -> CrossProductSpace {
    let mut table = vec![vec![vec![q(0); 7]; 7]; 7];
    for line in FANO_LINES {
        for r in 0..3 {
            let (a, b, c) = (line[r] - 1, line[(r + 1) % 3] - 1, line[(r + 2) % 3] - 1);
            table[a][b][c] = q(1);
            table[b][a][c] = q(-1);
        }
    }
    CrossProductSpace { kind: OctonionKind::Division, norm: QMatrix::identity(7), table }
}

impl CrossProductSpace {
    pub fn kind(&self) -> OctonionKind {
        self.kind
    }

    pub fn norm_matrix(&self) -> &QMatrix {
        &self.norm
    }

    /// Polar form n(x,y), with n(x,x) = n(x).
    pub fn n(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.norm.bilinear(x, y)
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        self.n(x, x)
    }

    pub fn basis_cross(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i][j]
    }

    pub fn cross(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![q(0); 7];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    /// {X,Y,Z} = n(X×Y, Z).
    pub fn triple(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Rational {
        self.n(&self.cross(x, y), z)
    }

    /// Matrix of Y ↦ X×Y.
    pub fn left_cross(&self, x: &[Rational]) -> QMatrix {
        let cols: Vec<Vec<Rational>> = (0..7).map(|j| self.cross(x, &unit_vec(7, j))).collect();
        QMatrix::from_cols(&cols)
    }

    /// The triple product as a 3-form.
    pub fn three_form(&self) -> KForm<Rational> {
        let mut f = KForm::zero(7, 3);
        for idx in crate::threeform::index_sets(7, 3) {
            let c = self.triple(&unit_vec(7, idx[0]), &unit_vec(7, idx[1]), &unit_vec(7, idx[2]));
            if !c.is_zero() {
                f.add_term(&idx, c);
            }
        }
        f
    }

    /// A nonisotropic vector orthogonal to every vector in `perp`. Basis
    /// vectors are tried first, then a basis of the orthogonal complement,
    /// then pairwise sums, then a congruence-diagonal basis.
    pub fn nonisotropic_orthogonal(&self, perp: &[Vec<Rational>]) -> Option<Vec<Rational>> {
        let ok = |w: &[Rational]| perp.iter().all(|p| self.n(p, w).is_zero()) && !self.norm(w).is_zero();
        if let Some(e) = (0..7).map(|i| unit_vec(7, i)).find(|e| ok(e)) {
            return Some(e);
        }
        let comp = if perp.is_empty() {
            (0..7).map(|i| unit_vec(7, i)).collect()
        } else {
            let rows: Vec<Vec<Rational>> = perp.iter().map(|p| self.norm.mul_vec(p)).collect();
            QMatrix::from_rows(rows).nullspace()
        };
        if let Some(w) = comp.iter().find(|w| ok(w)) {
            return Some(w.clone());
        }
        for (i, a) in comp.iter().enumerate() {
            for b in &comp[i + 1..] {
                for w in [vec_add(a, b), vec_sub(a, b)] {
                    if ok(&w) {
                        return Some(w);
                    }
                }
            }
        }
        let k = comp.len();
        let gram = QMatrix::from_fn(k, k, |i, j| self.n(&comp[i], &comp[j]));
        let (d, p) = congruence_diagonalize(&gram);
        let i = d.iter().position(|x| !x.is_zero())?;
        let mut w = vec![q(0); 7];
        for (c, b) in p.col(i).iter().zip(&comp) {
            w = vec_add(&w, &vec_scale(b, c));
        }
        Some(w)
    }
}

/// An element s1 + X of 𝒞 = F1 ⊕ V.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octonion {
    pub kind: OctonionKind,
    pub s: Rational,
    pub v: Vec<Rational>,
}

impl Octonion {
    pub fn new(kind: OctonionKind, s: Rational, v: Vec<Rational>) -> Self {
        assert_eq!(v.len(), 7, "imaginary part must have 7 coordinates");
        Self { kind, s, v }
    }

    pub fn scalar(kind: OctonionKind, s: Rational) -> Self {
        Self::new(kind, s, vec![q(0); 7])
    }

    pub fn one(kind: OctonionKind) -> Self {
        Self::scalar(kind, q(1))
    }

    pub fn imaginary(kind: OctonionKind, v: Vec<Rational>) -> Self {
        Self::new(kind, q(0), v)
    }

    /// Basis element in the order [1, v₁, …, v₇].
    pub fn basis(kind: OctonionKind, i: usize) -> Self {
        let c = unit_vec(8, i);
        Self::from_coords(kind, &c)
    }

    pub fn from_coords(kind: OctonionKind, c: &[Rational]) -> Self {
        Self::new(kind, c[0].clone(), c[1..8].to_vec())
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut c = vec![self.s.clone()];
        c.extend_from_slice(&self.v);
        c
    }

    pub fn space(&self) -> &'static CrossProductSpace {
        space(self.kind)
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.kind, o.kind);
        let sp = self.space();
        let s = &self.s * &o.s - sp.n(&self.v, &o.v);
        let v = vec_add(&vec_add(&vec_scale(&o.v, &self.s), &vec_scale(&self.v, &o.s)), &sp.cross(&self.v, &o.v));
        Self::new(self.kind, s, v)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.kind, &self.s + &o.s, vec_add(&self.v, &o.v))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.kind, &self.s - &o.s, vec_sub(&self.v, &o.v))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.kind, &self.s * c, vec_scale(&self.v, c))
    }

    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.kind, self.s.clone(), vec_scale(&self.v, &q(-1)))
    }

    pub fn norm(&self) -> Rational {
        &self.s * &self.s + self.space().norm(&self.v)
    }

    /// Polar form with n(1) = 1 and 1 ⟂ V.
    pub fn n(&self, o: &Self) -> Rational {
        &self.s * &o.s + self.space().n(&self.v, &o.v)
    }

    pub fn trace(&self) -> Rational {
        &self.s * q(2)
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.v.iter().all(Zero::is_zero)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        (!n.is_zero()).then(|| self.conj().scale(&(q(1) / n)))
    }

    /// (x,y,z) = (xy)z − x(yz).
    pub fn associator(x: &Self, y: &Self, z: &Self) -> Self {
        x.mul(y).mul(z).sub(&x.mul(&y.mul(z)))
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.kind.labels();
        let mut parts = Vec::new();
        if !self.s.is_zero() {
            parts.push(self.s.to_string());
        }
        for (c, l) in self.v.iter().zip(labels) {
            if c.is_zero() {
                continue;
            }
            parts.push(if *c == q(1) {
                l.to_string()
            } else if *c == q(-1) {
                format!("-{l}")
            } else {
                format!("{c}{l}")
            });
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join("+").replace("+-", "-"))
    }
}

/// Product table of 𝒞 in the basis [1, v₁, …, v₇], generated from the cross
/// product and the norm.
pub fn basis_table(kind: OctonionKind) -> AlgebraTable {
    AlgebraTable::from_fn(8, |i, j| Octonion::basis(kind, i).mul(&Octonion::basis(kind, j)).coords())
}

fn check_unit(x: &Octonion) -> Result<(), OctonionError> {
    let n = x.norm();
    if n != q(1) {
        return Err(OctonionError::NotUnitNorm(n.to_string()));
    }
    Ok(())
}

/// Writes a unit x as ab with a, b ∈ V: a is the first nonisotropic vector
/// orthogonal to Im x (basis vectors first) and b = āx/n(a).
pub fn factor_unit(x: &Octonion) -> Result<(Octonion, Octonion), OctonionError> {
    check_unit(x)?;
    let sp = x.space();
    let a = sp.nonisotropic_orthogonal(std::slice::from_ref(&x.v)).ok_or(OctonionError::NonisotropicSearchFailed)?;
    let a = Octonion::imaginary(x.kind, a);
    let b = a.conj().mul(x).scale(&(q(1) / a.norm()));
    debug_assert!(b.s.is_zero());
    Ok((a, b))
}

/// The quaternion-subalgebra route: pick v so that ⟨1,u,v,uv⟩ is a
/// nondegenerate quaternion subalgebra Q ∋ x, take w ∈ Q^⊥ nonisotropic and
/// b = x̄w, then x = (xb)(b̄/n(b)) = w·(b̄/n(b)).
pub fn factor_unit_via_quaternion(x: &Octonion) -> Result<(Octonion, Octonion), OctonionError> {
    check_unit(x)?;
    let kind = x.kind;
    let sp = x.space();
    let fail = OctonionError::NonisotropicSearchFailed;
    let u = &x.v;
    let w = if u.iter().all(Zero::is_zero) {
        sp.nonisotropic_orthogonal(&[]).ok_or(fail.clone())?
    } else {
        let v = if sp.norm(u).is_zero() {
            let candidates = (0..7).map(|i| unit_vec(7, i));
            let mut found = None;
            for e in candidates {
                if !sp.n(u, &e).is_zero() {
                    found = Some(e);
                    break;
                }
            }
            found.ok_or(fail.clone())?
        } else {
            sp.nonisotropic_orthogonal(std::slice::from_ref(u)).ok_or(fail.clone())?
        };
        let uv = sp.cross(u, &v);
        sp.nonisotropic_orthogonal(&[u.clone(), v, uv]).ok_or(fail.clone())?
    };
    let w = Octonion::imaginary(kind, w);
    let b = x.conj().mul(&w);
    let c = b.conj().scale(&(q(1) / b.norm()));
    Ok((w, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use OctonionKind::*;

    fn e(kind: OctonionKind, i: usize) -> Octonion {
        Octonion::basis(kind, i)
    }

    #[test]
    fn fano_products() {
        assert_eq!(e(Division, 1).mul(&e(Division, 2)), e(Division, 3));
        for (a, b) in [(1, 4), (2, 5), (3, 6)] {
            assert_eq!(e(Division, a).mul(&e(Division, b)), e(Division, 7));
        }
        for i in 1..8 {
            assert_eq!(e(Division, i).mul(&e(Division, i)), Octonion::scalar(Division, q(-1)));
        }
        let assoc = Octonion::associator(&e(Division, 1), &e(Division, 2), &e(Division, 4));
        assert!(!assoc.is_zero());
    }

    #[test]
    fn split_cross_and_triple_values() {
        let sp = space(Split);
        let b = |i| unit_vec::<Rational>(7, i);
        for i in 1..4 {
            assert_eq!(sp.cross(&b(0), &b(i)), b(i));
            assert_eq!(sp.cross(&b(i), &b(i + 3)), vec_scale(&b(0), &q(2)));
            assert_eq!(sp.triple(&b(0), &b(i), &b(i + 3)), q(-2));
        }
        assert_eq!(sp.triple(&b(1), &b(2), &b(3)), q(-4));
        assert_eq!(sp.triple(&b(4), &b(5), &b(6)), q(4));
        assert_eq!(e(Split, 1).mul(&e(Split, 1)), Octonion::one(Split));
        assert_eq!(crate::numerics::sym_signature(sp.norm_matrix()).unwrap(), (4, 3));
    }

    #[test]
    fn cross_product_axioms_on_basis() {
        for kind in OctonionKind::ALL {
            let sp = space(kind);
            for i in 0..7 {
                for j in 0..7 {
                    let (u, v) = (unit_vec(7, i), unit_vec(7, j));
                    let w = sp.cross(&u, &v);
                    assert!(sp.n(&w, &u).is_zero() && sp.n(&w, &v).is_zero());
                    let nuv = sp.n(&u, &v);
                    assert_eq!(sp.norm(&w), sp.norm(&u) * sp.norm(&v) - &nuv * &nuv);
                }
            }
        }
    }

    #[test]
    fn tables_are_unital() {
        for kind in OctonionKind::ALL {
            let t = basis_table(kind);
            for i in 0..8 {
                assert_eq!(t.product(0, i), unit_vec(8, i));
                assert_eq!(t.product(i, 0), unit_vec(8, i));
            }
        }
    }

    #[test]
    fn factor_unit_examples() {
        let cases = [(e(Division, 7), (1, 4)), (e(Division, 3), (1, 2))];
        for (x, (a, b)) in cases {
            assert_eq!(factor_unit(&x).unwrap(), (e(Division, a), e(Division, b)));
        }
        let m1 = Octonion::scalar(Division, q(-1));
        assert_eq!(factor_unit(&m1).unwrap(), (e(Division, 1), e(Division, 1)));
        assert_eq!(factor_unit(&Octonion::one(Division)).unwrap(), (e(Division, 1), e(Division, 1).neg()));
        assert!(matches!(factor_unit(&e(Division, 1).scale(&q(2))), Err(OctonionError::NotUnitNorm(_))));
    }

    #[test]
    fn quaternion_route_multiplies_back() {
        for kind in OctonionKind::ALL {
            for i in 0..8 {
                let x = e(kind, i);
                if x.norm() != q(1) {
                    continue;
                }
                let (a, b) = factor_unit_via_quaternion(&x).unwrap();
                assert!(a.s.is_zero() && b.s.is_zero());
                assert_eq!(a.mul(&b), x);
            }
        }
    }
}
