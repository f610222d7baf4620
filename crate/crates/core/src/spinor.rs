//! Cl(V,−n) on seven generators and the spin representation on 𝒞 = V ⊕ ⟨e₈⟩
//! given by octonionic left multiplication, e₈ = 1.
//!
//! Masks: bit i−1 stands for eᵢ, and a monomial is the ascending product of
//! its generators. Multiplying two monomials merges them, the sign counts the
//! transpositions, and every repeated generator contributes its square
//! eᵢ² = −n(eᵢ). For instance (e₁e₂)(e₂e₃) = e₁e₂²e₃ = −n(e₂)e₁e₃.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::derivsolver::{derivations_of_algebra, DerivationAlgebra};
use crate::numerics::{q, qq, span_rank, unit_vec, QMatrix, Rational, Subspace, Zero};
use crate::octonion::{basis_table, factor_unit, space, Octonion, OctonionError, OctonionKind, FANO_LINES};
use crate::threeform::{bivector_coords, bivector_from_coords, bivector_to_skew, index_sets, omega1, skew_to_bivector, KForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpinError {
    #[error("element has odd-degree components")]
    OddPart,
    #[error("factor {0} is isotropic")]
    IsotropicFactor(usize),
    #[error("spin elements need an even number of factors, got {0}")]
    OddLength(usize),
    #[error("product of factor norms is {0}, expected 1")]
    NormProduct(String),
    #[error("the Clifford model needs an orthogonal basis")]
    NotOrthogonal,
    #[error(transparent)]
    Octonion(#[from] OctonionError),
}

pub type Mask = u8;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliffordElement {
    terms: BTreeMap<Mask, Rational>,
}

impl CliffordElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(mask: Mask, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(mask, c);
        e
    }

    /// Σ vᵢ eᵢ.
    pub fn vector(v: &[Rational]) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_term(1 << i, c.clone());
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: Mask) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(|| q(0))
    }

    pub fn add_term(&mut self, mask: Mask, c: Rational) {
        let slot = self.terms.entry(mask).or_insert_with(|| q(0));
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in o.terms() {
            r.add_term(m, c.clone());
        }
        r
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut r = Self::zero();
        for (m, c) in self.terms() {
            r.add_term(m, c * s);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&q(-1)))
    }

    /// Coordinates over the 128 masks.
    pub fn to_dense(&self) -> Vec<Rational> {
        (0..128u8).map(|m| self.coeff(m)).collect()
    }
}

/// Clifford algebra on an orthogonal basis with prescribed squares eᵢ².
#[derive(Clone, Debug)]
pub struct Clifford {
    squares: Vec<Rational>,
}

impl Clifford {
    /// Cl(V,−n) for the norm of `kind`, whose basis must be orthogonal.
    pub fn for_norm(kind: OctonionKind) -> Result<Self, SpinError> {
        let n = space(kind).norm_matrix();
        let diagonal = (0..7).all(|i| (0..7).all(|j| i == j || n[(i, j)].is_zero()));
        if !diagonal {
            return Err(SpinError::NotOrthogonal);
        }
        Ok(Self { squares: (0..7).map(|i| -n[(i, i)].clone()).collect() })
    }

    pub fn definite() -> Self {
        Self::for_norm(OctonionKind::Division).expect("the definite basis is orthonormal")
    }

    pub fn dim(&self) -> usize {
        1 << self.squares.len()
    }

    pub fn generator(&self, i: usize) -> CliffordElement {
        CliffordElement::monomial(1 << (i - 1), q(1))
    }

    pub fn blade_product(&self, a: Mask, b: Mask) -> (Mask, Rational) {
        let mut swaps = 0;
        for j in 0..7 {
            if b & (1 << j) != 0 {
                swaps += (a >> (j + 1)).count_ones();
            }
        }
        let mut c = if swaps % 2 == 0 { q(1) } else { q(-1) };
        for (i, s) in self.squares.iter().enumerate() {
            if a & b & (1 << i) != 0 {
                c *= s;
            }
        }
        (a ^ b, c)
    }

    pub fn mul(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        let mut r = CliffordElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let (m, s) = self.blade_product(a, b);
                r.add_term(m, s * ca * cb);
            }
        }
        r
    }

    pub fn commutator(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    /// Basis of the center, from the kernel of x ↦ ([e₁,x], …, [e₇,x]).
    pub fn center_basis(&self) -> Vec<CliffordElement> {
        let dim = self.dim();
        let cols: Vec<Vec<Rational>> = (0..dim)
            .map(|m| {
                let x = CliffordElement::monomial(m as Mask, q(1));
                (1..=7).flat_map(|i| self.commutator(&self.generator(i), &x).to_dense()).collect()
            })
            .collect();
        QMatrix::from_cols(&cols)
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut e = CliffordElement::zero();
                for (m, c) in v.into_iter().enumerate() {
                    e.add_term(m as Mask, c);
                }
                e
            })
            .collect()
    }

    fn norm_of(&self, v: &[Rational]) -> Rational {
        -v.iter().zip(&self.squares).fold(q(0), |acc, (c, s)| acc + c * c * s)
    }

    /// τ_a(x) = −a x a⁻¹ computed inside the algebra; for a ∈ V this is the
    /// reflection in a^⊥.
    pub fn twisted_conjugation(&self, a: &[Rational], x: &[Rational]) -> Result<Vec<Rational>, SpinError> {
        let n = self.norm_of(a);
        if n.is_zero() {
            return Err(SpinError::IsotropicFactor(0));
        }
        let av = CliffordElement::vector(a);
        let a_inv = av.scale(&(q(-1) / n));
        let r = self.mul(&self.mul(&av, &CliffordElement::vector(x)), &a_inv).scale(&q(-1));
        Ok((0..7).map(|i| r.coeff(1 << i)).collect())
    }

    /// Whether φ_{u,v} ↦ c·[u,v] is a Lie homomorphism on the basis, with
    /// φ_{u,v} = n(u,−)v − n(v,−)u.
    pub fn is_so_embedding(&self, c: &Rational) -> bool {
        let pairs = index_sets(7, 2);
        let image = |i: usize, j: usize| -> CliffordElement {
            self.commutator(&self.generator(i + 1), &self.generator(j + 1)).scale(c)
        };
        let phi = |i: usize, j: usize| -> QMatrix {
            QMatrix::from_fn(7, 7, |r, s| {
                let n = |k: usize| -self.squares[k].clone();
                if r == j && s == i {
                    n(i)
                } else if r == i && s == j {
                    -n(j)
                } else {
                    q(0)
                }
            })
        };
        pairs.par_iter().all(|p| {
            pairs.iter().all(|r| {
                let lhs = self.commutator(&image(p[0], p[1]), &image(r[0], r[1]));
                let m = phi(p[0], p[1]).commutator(&phi(r[0], r[1]));
                // expand m over the φ_{ab} and map each to c[e_a,e_b]
                let mut rhs = CliffordElement::zero();
                for ab in &pairs {
                    let coef = &m[(ab[1], ab[0])] / (-self.squares[ab[0]].clone());
                    if !coef.is_zero() {
                        rhs = rhs.add(&image(ab[0], ab[1]).scale(&coef));
                    }
                }
                lhs == rhs
            })
        })
    }
}

/// Coordinates of x in the spinor basis (e₁, …, e₇, e₈ = 1).
pub fn spinor_coords(x: &Octonion) -> Vec<Rational> {
    let mut v = x.v.clone();
    v.push(x.s.clone());
    v
}

pub fn from_spinor(kind: OctonionKind, c: &[Rational]) -> Octonion {
    Octonion::new(kind, c[7].clone(), c[..7].to_vec())
}

/// L_a on 𝒞 in the spinor basis.
pub fn left_mult(a: &Octonion) -> QMatrix {
    let cols: Vec<Vec<Rational>> = (0..8)
        .map(|j| spinor_coords(&a.mul(&from_spinor(a.kind, &unit_vec(8, j)))))
        .collect();
    QMatrix::from_cols(&cols)
}

/// κᵢ = ρ(eᵢ) = L_{eᵢ}.
pub fn kappa(kind: OctonionKind, i: usize) -> QMatrix {
    left_mult(&Octonion::basis(kind, i))
}

/// φ_{ij} on 𝒞 (1-based, e₈ = 1): sends eᵢ to eⱼ and eⱼ to −eᵢ.
pub fn phi_ij(i: usize, j: usize) -> QMatrix {
    QMatrix::from_fn(8, 8, |r, c| match (r + 1, c + 1) {
        (r, c) if r == j && c == i => q(1),
        (r, c) if r == i && c == j => q(-1),
        _ => q(0),
    })
}

/// κᵢ written as Σ c_{jk} φ_{jk} over j < k ≤ 8.
pub fn kappa_expansion(i: usize) -> Vec<((usize, usize), Rational)> {
    let k = kappa(OctonionKind::Division, i);
    index_sets(8, 2)
        .into_iter()
        .filter_map(|p| {
            let c = k[(p[1], p[0])].clone();
            (!c.is_zero()).then(|| ((p[0] + 1, p[1] + 1), c))
        })
        .collect()
}

/// ρ on the definite Clifford algebra, extended from eᵢ ↦ κᵢ.
pub fn rho(x: &CliffordElement) -> QMatrix {
    let kappas: Vec<QMatrix> = (1..=7).map(|i| kappa(OctonionKind::Division, i)).collect();
    let mut out = QMatrix::zeros(8, 8);
    for (m, c) in x.terms() {
        let mut p = QMatrix::identity(8);
        for (i, k) in kappas.iter().enumerate() {
            if m & (1 << i) != 0 {
                p = p.mul(k);
            }
        }
        out = out.add(&p.scale(c));
    }
    out
}

/// ρ̃ on the even part.
pub fn even_iso_rho(x: &CliffordElement) -> Result<QMatrix, SpinError> {
    if !x.is_even() {
        return Err(SpinError::OddPart);
    }
    Ok(rho(x))
}

/// Rank of the images of the 64 even monomials under ρ̃.
pub fn even_image_rank() -> usize {
    let images: Vec<Vec<Rational>> = (0..128u8)
        .into_par_iter()
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| rho(&CliffordElement::monomial(m, q(1))).flatten())
        .collect();
    span_rank(&images)
}

/// ±a₁⋯a₂ᵣ with aᵢ ∈ V and ∏ n(aᵢ) = 1, kept factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinElement {
    kind: OctonionKind,
    negative: bool,
    factors: Vec<Vec<Rational>>,
}

impl SpinElement {
    pub fn new(kind: OctonionKind, negative: bool, factors: Vec<Vec<Rational>>) -> Result<Self, SpinError> {
        if !factors.len().is_multiple_of(2) {
            return Err(SpinError::OddLength(factors.len()));
        }
        let sp = space(kind);
        let mut prod = q(1);
        for (i, a) in factors.iter().enumerate() {
            let n = sp.norm(a);
            if n.is_zero() {
                return Err(SpinError::IsotropicFactor(i));
            }
            prod *= n;
        }
        if prod != q(1) {
            return Err(SpinError::NormProduct(prod.to_string()));
        }
        Ok(Self { kind, negative, factors })
    }

    pub fn identity(kind: OctonionKind) -> Self {
        Self { kind, negative: false, factors: Vec::new() }
    }

    pub fn factors(&self) -> &[Vec<Rational>] {
        &self.factors
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn compose(&self, o: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(o.factors.iter().cloned());
        Self { kind: self.kind, negative: self.negative != o.negative, factors }
    }

    /// Expansion in the definite Clifford algebra.
    pub fn to_clifford(&self, cl: &Clifford) -> CliffordElement {
        let start = CliffordElement::scalar(if self.negative { q(-1) } else { q(1) });
        self.factors.iter().fold(start, |acc, a| cl.mul(&acc, &CliffordElement::vector(a)))
    }

    /// τ_{a₁}⋯τ_{a₂ᵣ} as a 7×7 matrix; the sign is forgotten.
    pub fn tau(&self) -> QMatrix {
        let sp = space(self.kind);
        self.factors.iter().fold(QMatrix::identity(7), |acc, a| {
            let na = sp.norm(a);
            let refl = QMatrix::from_cols(
                &(0..7)
                    .map(|j| {
                        let x = unit_vec::<Rational>(7, j);
                        let c = q(2) * sp.n(a, &x) / &na;
                        x.iter().zip(a).map(|(xi, ai)| xi - &(&c * ai)).collect()
                    })
                    .collect::<Vec<_>>(),
            );
            acc.mul(&refl)
        })
    }
}

/// g·x = ±L_{a₁}(⋯L_{a₂ᵣ}(x)).
pub fn spin_action(g: &SpinElement, x: &Octonion) -> Octonion {
    let mut y = x.clone();
    for a in g.factors.iter().rev() {
        y = Octonion::imaginary(g.kind, a.clone()).mul(&y);
    }
    if g.negative {
        y.neg()
    } else {
        y
    }
}

/// ⟨x,y,z⟩ = (xȳ)z.
pub fn triple_product(x: &Octonion, y: &Octonion, z: &Octonion) -> Octonion {
    x.mul(&y.conj()).mul(z)
}

/// The element ab with ab = x from the unit factorization, so g·1 = x.
pub fn factor_unit_spin(x: &Octonion) -> Result<SpinElement, SpinError> {
    let (a, b) = factor_unit(x)?;
    SpinElement::new(x.kind, false, vec![a.v, b.v])
}

/// Coefficients a_{ij} (i < j) of Σ a_{ij} κᵢκⱼ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivector(pub Vec<Rational>);

impl Bivector {
    pub fn pairs() -> Vec<Vec<usize>> {
        index_sets(7, 2)
    }

    /// Σ a_{ij} · ½[κᵢ,κⱼ] on 𝒞; equal to Σ a_{ij} κᵢκⱼ in the definite case.
    pub fn action(&self, kind: OctonionKind) -> QMatrix {
        let ks: Vec<QMatrix> = (1..=7).map(|i| kappa(kind, i)).collect();
        Self::pairs().iter().zip(&self.0).fold(QMatrix::zeros(8, 8), |acc, (p, c)| {
            if c.is_zero() {
                return acc;
            }
            acc.add(&ks[p[0]].commutator(&ks[p[1]]).scale(&(c * qq(1, 2))))
        })
    }

    pub fn to_form(&self) -> KForm<Rational> {
        bivector_from_coords(7, &self.0)
    }

    pub fn from_form(a: &KForm<Rational>) -> Self {
        Self(bivector_coords(a))
    }
}

/// The solution space {d ∈ spin(V,−n) : d(e₈) = 0}.
#[derive(Clone, Debug)]
pub struct SpinG2 {
    pub kind: OctonionKind,
    /// Row k: the e_k-coordinate of d(e₈) as a linear form in the a_{ij}.
    pub equations: QMatrix,
    pub solutions: Vec<Bivector>,
    /// Restrictions d|_V.
    pub restricted: DerivationAlgebra,
}

pub fn spin_g2_equations(kind: OctonionKind) -> SpinG2 {
    let pairs = Bivector::pairs();
    let cols: Vec<Vec<Rational>> = (0..pairs.len())
        .map(|k| {
            let d = Bivector(unit_vec(pairs.len(), k)).action(kind);
            (0..7).map(|r| d[(r, 7)].clone()).collect()
        })
        .collect();
    let equations = QMatrix::from_cols(&cols);
    let solutions: Vec<Bivector> = equations.nullspace().into_iter().map(Bivector).collect();
    let restricted = DerivationAlgebra::new(
        7,
        solutions
            .iter()
            .map(|b| {
                let d = b.action(kind);
                QMatrix::from_fn(7, 7, |r, c| d[(r, c)].clone())
            })
            .collect(),
    );
    SpinG2 { kind, equations, solutions, restricted }
}

impl SpinG2 {
    pub fn dim(&self) -> usize {
        self.solutions.len()
    }

    /// Der(𝒞) restricted to V.
    pub fn octonion_derivations(&self) -> DerivationAlgebra {
        let der = derivations_of_algebra(&basis_table(self.kind));
        DerivationAlgebra::new(7, der.basis().iter().map(|d| QMatrix::from_fn(7, 7, |r, c| d[(r + 1, c + 1)].clone())).collect())
    }

    /// Whether d|_V = 2 Σ a_{ij}(E_{ji} − E_{ij}) for every solution.
    pub fn restriction_is_twice_skew(&self) -> bool {
        self.solutions
            .iter()
            .zip(self.restricted.basis())
            .all(|(b, d)| *d == bivector_to_skew(&b.to_form()).scale(&q(2)))
    }
}

/// The ℤ₂³-grading with deg e₁, deg e₂, deg e₇ the standard generators.
#[derive(Clone, Debug)]
pub struct Z23Grading {
    pub degrees: [[u8; 3]; 7],
    /// Wᵢ as the index pairs {j,k} with eᵢeⱼ = ±e_k (1-based).
    pub w: Vec<Vec<(usize, usize)>>,
    pub w_prime: Vec<Vec<Bivector>>,
}

impl Z23Grading {
    pub fn degree(&self, i: usize) -> [u8; 3] {
        self.degrees[i - 1]
    }

    /// deg eᵢ + deg eⱼ = deg e_k on every Fano line.
    pub fn is_consistent(&self) -> bool {
        FANO_LINES.iter().all(|l| {
            let (a, b, c) = (self.degree(l[0]), self.degree(l[1]), self.degree(l[2]));
            (0..3).all(|t| a[t] ^ b[t] == c[t])
        })
    }
}

pub fn z23_grading() -> Z23Grading {
    let mut deg: [Option<[u8; 3]>; 7] = [None; 7];
    deg[0] = Some([1, 0, 0]);
    deg[1] = Some([0, 1, 0]);
    deg[6] = Some([0, 0, 1]);
    while deg.iter().any(Option::is_none) {
        for l in FANO_LINES {
            for r in 0..3 {
                let (a, b, c) = (l[r] - 1, l[(r + 1) % 3] - 1, l[(r + 2) % 3] - 1);
                if let (Some(x), Some(y), None) = (deg[a], deg[b], deg[c]) {
                    deg[c] = Some([x[0] ^ y[0], x[1] ^ y[1], x[2] ^ y[2]]);
                }
            }
        }
    }
    let degrees = deg.map(|d| d.expect("filled"));
    let pairs = Bivector::pairs();
    let mut w = Vec::new();
    let mut w_prime = Vec::new();
    for i in 1..=7 {
        let wi: Vec<(usize, usize)> = FANO_LINES
            .iter()
            .filter(|l| l.contains(&i))
            .map(|l| {
                let mut rest: Vec<usize> = l.iter().copied().filter(|&x| x != i).collect();
                rest.sort();
                (rest[0], rest[1])
            })
            .collect();
        let slots: Vec<usize> = wi.iter().map(|&(j, k)| pairs.iter().position(|p| *p == [j - 1, k - 1]).expect("pair")).collect();
        let embed = |c: &[Rational]| {
            let mut v = vec![q(0); pairs.len()];
            for (s, x) in slots.iter().zip(c) {
                v[*s] = x.clone();
            }
            Bivector(v)
        };
        let cols: Vec<Vec<Rational>> = (0..3)
            .map(|t| {
                let d = embed(&unit_vec(3, t)).action(OctonionKind::Division);
                (0..7).map(|r| d[(r, 7)].clone()).collect()
            })
            .collect();
        w_prime.push(QMatrix::from_cols(&cols).nullspace().iter().map(|c| embed(c)).collect());
        w.push(wi);
    }
    Z23Grading { degrees, w, w_prime }
}

/// The bracket on Λ²V* transported from so(7) by e^{ij} ↦ E_{ji} − E_{ij}.
pub fn two_form_bracket(a: &KForm<Rational>, b: &KForm<Rational>) -> KForm<Rational> {
    skew_to_bivector(&bivector_to_skew(a).commutator(&bivector_to_skew(b)))
}

/// Λ²V* = 𝔤_c ⊕ {u⌟Ω₁}: returns the 𝔤_c part and the u of the other part.
pub fn decompose_two_form(alpha: &KForm<Rational>) -> Option<(KForm<Rational>, Vec<Rational>)> {
    let gc = spin_g2_equations(OctonionKind::Division);
    let om = omega1();
    let mut vecs: Vec<Vec<Rational>> = gc.solutions.iter().map(|b| b.0.clone()).collect();
    vecs.extend((0..7).map(|i| bivector_coords(&om.interior(&unit_vec(7, i)))));
    let joint = Subspace::new(21, &vecs);
    let c = joint.coordinates(&bivector_coords(alpha))?;
    let h = gc.solutions.iter().zip(&c).fold(vec![q(0); 21], |acc, (b, x)| {
        acc.iter().zip(&b.0).map(|(s, t)| s + &(t * x)).collect()
    });
    Some((bivector_from_coords(7, &h), c[gc.solutions.len()..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::same_span;
    use OctonionKind::Division;

    fn e(i: usize) -> Octonion {
        Octonion::basis(Division, i)
    }

    #[test]
    fn clifford_signs() {
        let cl = Clifford::definite();
        let (e1, e2, e3) = (cl.generator(1), cl.generator(2), cl.generator(3));
        assert_eq!(cl.mul(&e1, &e1), CliffordElement::scalar(q(-1)));
        assert_eq!(cl.mul(&e1, &e2), cl.mul(&e2, &e1).scale(&q(-1)));
        let lhs = cl.mul(&cl.mul(&e1, &e2), &cl.mul(&e2, &e3));
        assert_eq!(lhs, CliffordElement::monomial(0b101, q(-1)));
        let a = CliffordElement::vector(&[q(1), q(2), q(0), q(0), q(0), q(0), q(-1)]);
        assert_eq!(cl.mul(&cl.mul(&a, &e2), &e3), cl.mul(&a, &cl.mul(&e2, &e3)));
        assert!(matches!(Clifford::for_norm(OctonionKind::Split), Err(SpinError::NotOrthogonal)));
    }

    #[test]
    fn center_is_one_and_volume() {
        let cl = Clifford::definite();
        let center = cl.center_basis();
        let dense: Vec<Vec<Rational>> = center.iter().map(CliffordElement::to_dense).collect();
        let want = [CliffordElement::scalar(q(1)), CliffordElement::monomial(0x7f, q(1))].map(|x| x.to_dense());
        assert!(same_span(&dense, &want));
    }

    #[test]
    fn kappa_table() {
        let table: [&[(usize, usize, i64)]; 7] = [
            &[(1, 8, -1), (2, 3, 1), (4, 7, 1), (5, 6, -1)],
            &[(1, 3, -1), (2, 8, -1), (4, 6, 1), (5, 7, 1)],
            &[(1, 2, 1), (3, 8, -1), (4, 5, -1), (6, 7, 1)],
            &[(1, 7, -1), (2, 6, -1), (3, 5, 1), (4, 8, -1)],
            &[(1, 6, 1), (2, 7, -1), (3, 4, -1), (5, 8, -1)],
            &[(1, 5, -1), (2, 4, 1), (3, 7, -1), (6, 8, -1)],
            &[(1, 4, 1), (2, 5, 1), (3, 6, 1), (7, 8, -1)],
        ];
        for (i, row) in table.iter().enumerate() {
            let want: Vec<_> = row.iter().map(|&(a, b, c)| ((a, b), q(c))).collect();
            assert_eq!(kappa_expansion(i + 1), want, "κ{}", i + 1);
            let k = kappa(Division, i + 1);
            assert_eq!(k.mul(&k), QMatrix::identity(8).scale(&q(-1)));
        }
    }

    #[test]
    fn rho_is_faithful_on_the_even_part() {
        assert_eq!(even_iso_rho(&CliffordElement::scalar(q(1))).unwrap(), QMatrix::identity(8));
        assert!(matches!(even_iso_rho(&Clifford::definite().generator(1)), Err(SpinError::OddPart)));
        assert_eq!(even_image_rank(), 64);
        let cl = Clifford::definite();
        let x = CliffordElement::monomial(0b11, q(2)).add(&CliffordElement::monomial(0b1100, q(1)));
        let y = CliffordElement::monomial(0b110, q(-1)).add(&CliffordElement::scalar(q(3)));
        assert_eq!(rho(&cl.mul(&x, &y)), rho(&x).mul(&rho(&y)));
    }

    #[test]
    fn spin_action_examples() {
        let g = SpinElement::new(Division, false, vec![e(1).v, e(4).v]).unwrap();
        assert_eq!(spin_action(&g, &Octonion::one(Division)), e(7));
        let a = vec![q(1), q(1), q(0), q(0), q(0), q(0), q(0)];
        let minus_one = SpinElement::new(Division, false, vec![a.clone(), a.iter().map(|x| x * qq(1, 2)).collect()]).unwrap();
        let x = Octonion::from_coords(Division, &[q(1), q(2), q(3), q(4), q(5), q(6), q(7), q(8)]);
        assert_eq!(spin_action(&minus_one, &x), x.neg());
        assert_eq!(minus_one.to_clifford(&Clifford::definite()), CliffordElement::scalar(q(-1)));
        assert!(matches!(SpinElement::new(Division, false, vec![a.clone()]), Err(SpinError::OddLength(1))));
        assert!(matches!(SpinElement::new(Division, false, vec![a.clone(), a]), Err(SpinError::NormProduct(_))));
    }

    #[test]
    fn factor_unit_spin_examples() {
        let g = factor_unit_spin(&e(7)).unwrap();
        assert_eq!(g.factors(), &[e(1).v, e(4).v]);
        let one = Octonion::one(Division);
        let g = factor_unit_spin(&one).unwrap();
        assert_eq!(spin_action(&g, &one), one);
    }

    #[test]
    fn tau_of_spin_elements() {
        let cl = Clifford::definite();
        let a = vec![q(1), q(2), q(0), q(0), q(2), q(0), q(0)];
        let x = vec![q(0), q(1), q(-1), q(3), q(0), q(0), q(1)];
        let refl = SpinElement { kind: Division, negative: false, factors: vec![a.clone()] }.tau();
        assert_eq!(cl.twisted_conjugation(&a, &x).unwrap(), refl.mul_vec(&x));
        let g = SpinElement::new(Division, true, vec![a.iter().map(|c| c * qq(1, 3)).collect(), e(2).v.iter().map(|c| c * q(3)).collect()]);
        assert!(g.is_err());
        let g = SpinElement::new(Division, true, vec![a.iter().map(|c| c * qq(1, 3)).collect(), e(2).v]).unwrap();
        let t = g.tau();
        assert_eq!(t.det(), q(1));
        assert_eq!(t.transpose().mul(&t), QMatrix::identity(7));
    }

    #[test]
    fn so_embedding_factor() {
        let cl = Clifford::definite();
        assert!(cl.is_so_embedding(&qq(1, 4)));
        assert!(!cl.is_so_embedding(&qq(-1, 2)));
        for i in 0..7 {
            for j in 0..7 {
                if i == j {
                    continue;
                }
                let img = cl.commutator(&cl.generator(i + 1), &cl.generator(j + 1)).scale(&qq(1, 4));
                for k in 0..7 {
                    let r = cl.commutator(&img, &cl.generator(k + 1));
                    let want: Vec<Rational> = (0..7)
                        .map(|t| {
                            let mut c = q(0);
                            if k == i && t == j {
                                c += q(1);
                            }
                            if k == j && t == i {
                                c -= q(1);
                            }
                            c
                        })
                        .collect();
                    assert_eq!(r, CliffordElement::vector(&want));
                }
            }
        }
    }

    #[test]
    fn stabilizer_equations() {
        let s = spin_g2_equations(Division);
        assert_eq!(s.dim(), 14);
        let printed: [&[((usize, usize), i64)]; 7] = [
            &[((1, 4), 1), ((2, 5), 1), ((3, 6), 1)],
            &[((2, 3), 1), ((4, 7), 1), ((5, 6), -1)],
            &[((1, 3), 1), ((4, 6), -1), ((5, 7), -1)],
            &[((1, 2), 1), ((4, 5), -1), ((6, 7), 1)],
            &[((1, 7), 1), ((2, 6), 1), ((3, 5), -1)],
            &[((1, 6), 1), ((2, 7), -1), ((3, 4), -1)],
            &[((1, 5), 1), ((2, 4), -1), ((3, 7), 1)],
        ];
        let pairs = Bivector::pairs();
        let rows: Vec<Vec<Rational>> = printed
            .iter()
            .map(|eq| {
                let mut r = vec![q(0); 21];
                for &((i, j), c) in eq.iter() {
                    r[pairs.iter().position(|p| *p == [i - 1, j - 1]).unwrap()] = q(c);
                }
                r
            })
            .collect();
        for r in &rows {
            let neg: Vec<Rational> = r.iter().map(|x| -x.clone()).collect();
            assert!((0..7).any(|k| s.equations.row(k) == r.as_slice() || s.equations.row(k) == neg.as_slice()));
        }
        assert!(s.restriction_is_twice_skew());
        assert!(s.restricted.is_bracket_closed());
        assert!(s.restricted.same_as(&s.octonion_derivations()));
        let split = spin_g2_equations(OctonionKind::Split);
        assert_eq!(split.dim(), 14);
        assert!(split.restricted.same_as(&split.octonion_derivations()));
    }

    #[test]
    fn grading() {
        let g = z23_grading();
        assert!(g.is_consistent());
        assert_eq!(g.degree(3), [1, 1, 0]);
        assert_eq!(g.degree(6), [1, 1, 1]);
        assert_eq!(g.w[3], vec![(1, 7), (2, 6), (3, 5)]);
        assert!(g.w_prime.iter().all(|w| w.len() == 2));
        let all: Vec<Vec<Rational>> = g.w_prime.iter().flatten().map(|b| b.0.clone()).collect();
        let gc = spin_g2_equations(Division);
        assert!(same_span(&all, &gc.solutions.iter().map(|b| b.0.clone()).collect::<Vec<_>>()));
    }

    fn oct(c: [i64; 8]) -> Octonion {
        Octonion::from_coords(Division, &c.map(q))
    }

    #[test]
    fn triple_product_invariance() {
        let (x, y, z) = (oct([1, 0, 2, -1, 0, 3, 0, 1]), oct([0, 1, 1, 0, -2, 0, 1, 0]), oct([2, -1, 0, 0, 1, 1, 0, 3]));
        let a = oct([0, 1, 2, 0, 0, -1, 0, 1]);
        let la = |w: &Octonion| a.mul(w);
        assert_eq!(triple_product(&la(&x), &la(&y), &la(&z)), la(&triple_product(&x, &y, &z)).scale(&a.norm()));
        let g = SpinElement::new(Division, false, vec![a.v.iter().map(|c| c * qq(1, 7)).collect(), a.v.clone()]).unwrap();
        let h = g.compose(&factor_unit_spin(&e(5)).unwrap());
        for g in [g, h] {
            let act = |w: &Octonion| spin_action(&g, w);
            assert_eq!(triple_product(&act(&x), &act(&y), &act(&z)), act(&triple_product(&x, &y, &z)));
            assert_eq!(act(&x).norm(), x.norm());
        }
        let l = left_mult(&a);
        for i in 0..8 {
            for j in 0..8 {
                let (u, v) = (unit_vec::<Rational>(8, i), unit_vec::<Rational>(8, j));
                let lhs: Rational = l.mul_vec(&u).iter().zip(&v).map(|(s, t)| s * t).sum();
                let rhs: Rational = l.mul_vec(&v).iter().zip(&u).map(|(s, t)| s * t).sum();
                assert_eq!(lhs, -rhs);
            }
        }
    }

    #[test]
    fn w4_bracket_with_e1_contraction() {
        let om = omega1();
        let c = |i: usize| om.interior(&unit_vec(7, i - 1));
        let (a17, a26, a35) = (q(2), q(5), q(-3));
        let alpha = KForm::from_terms(7, 2, [(vec![1, 7], a17.clone()), (vec![2, 6], a26.clone()), (vec![3, 5], a35.clone())]);
        let br = two_form_bracket(&alpha, &c(1));
        let want = -&a26 + &a35;
        let rest = br.sub(&c(7).scale(&want));
        let e14 = KForm::monomial(7, &[1, 4]);
        assert_eq!(rest, e14.scale(&(&a17 + &a26 - &a35)));
        // inside W₄' the bracket lies in 𝔪
        let alpha = KForm::from_terms(7, 2, [(vec![1, 7], want.clone()), (vec![2, 6], a26.clone()), (vec![3, 5], a35.clone())]);
        let (h, u) = decompose_two_form(&two_form_bracket(&alpha, &c(1))).unwrap();
        assert!(h.is_zero());
        assert_eq!(u, unit_vec::<Rational>(7, 6).iter().map(|x| x * &want).collect::<Vec<_>>());
        // e₄⌟Ω₁ = −(e¹⁷ + e²⁶ − e³⁵)
        let v4 = KForm::from_terms(7, 2, [(vec![1, 7], q(1)), (vec![2, 6], q(1)), (vec![3, 5], q(-1))]);
        assert_eq!(c(4), v4.scale(&q(-1)));
        let (h, u) = decompose_two_form(&two_form_bracket(&c(4), &c(1))).unwrap();
        assert_eq!(u, unit_vec::<Rational>(7, 6));
        let want_h = KForm::from_terms(7, 2, [(vec![1, 4], q(-2)), (vec![2, 5], q(1)), (vec![3, 6], q(1))]);
        assert_eq!(h, want_h);
    }
}
