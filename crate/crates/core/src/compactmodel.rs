//! The compact model 𝓛 = su(3) ⊕ W, W = ℂ³, acting on 𝒱 = ℝ ⊕ W, all over ℚ(i).
//!
//! 𝒱 is realified in the ordered basis (1, e₁, e₂, e₃, ie₁, ie₂, ie₃).

use crate::derivsolver::{AlgebraTable, DerivationAlgebra};
use crate::numerics::{q, qq, unit_vec, GaussianRational, Matrix, QMatrix, Rational, Subspace, Zero};
use crate::octonion::cross3;
use crate::threeform::{index_sets, KForm, ThreeForm};

pub type CMatrix = Matrix<GaussianRational>;
pub type CVec = Vec<GaussianRational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompactError {
    #[error("matrix is not skew-Hermitian and traceless")]
    NotSkewHermitian,
    #[error("transport mismatch: {0}")]
    TransportMismatch(String),
}

fn g(re: Rational, im: Rational) -> GaussianRational {
    GaussianRational::new(re, im)
}

fn real(r: Rational) -> GaussianRational {
    GaussianRational::real(r)
}

fn i_times(z: &GaussianRational) -> GaussianRational {
    g(-z.im.clone(), z.re.clone())
}

fn conj_vec(u: &[GaussianRational]) -> CVec {
    u.iter().map(GaussianRational::conj).collect()
}

fn cvec_add(a: &[GaussianRational], b: &[GaussianRational]) -> CVec {
    a.iter().zip(b).map(|(x, y)| x.clone() + y).collect()
}

fn cvec_scale(a: &[GaussianRational], s: &GaussianRational) -> CVec {
    a.iter().map(|x| x.clone() * s).collect()
}

fn conj_transpose(m: &CMatrix) -> CMatrix {
    m.transpose().map(GaussianRational::conj)
}

/// σ(u,v) = Σ uᵢ v̄ᵢ.
pub fn sigma(u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
    u.iter().zip(v).fold(GaussianRational::zero(), |acc, (a, b)| acc + &(a.clone() * &b.conj()))
}

/// σ_{u,v}(w) = σ(w,u)v − σ(w,v)u.
pub fn sigma_op(u: &[GaussianRational], v: &[GaussianRational]) -> CMatrix {
    CMatrix::from_fn(3, 3, |r, c| u[c].conj() * &v[r] - &(v[c].conj() * &u[r]))
}

/// The usual cross product on ℂ³.
pub fn cross_c(u: &[GaussianRational], v: &[GaussianRational]) -> CVec {
    (0..3)
        .map(|k| {
            let (a, b) = ((k + 1) % 3, (k + 2) % 3);
            u[a].clone() * &v[b] - &(u[b].clone() * &v[a])
        })
        .collect()
}

/// φ + w with φ ∈ su(3) and w ∈ W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactElement {
    phi: CMatrix,
    w: CVec,
}

impl CompactElement {
    pub fn new(phi: CMatrix, w: CVec) -> Result<Self, CompactError> {
        let skew = phi.add(&conj_transpose(&phi)).is_zero();
        if !skew || !phi.trace().is_zero() {
            return Err(CompactError::NotSkewHermitian);
        }
        Ok(Self { phi, w })
    }

    pub fn zero() -> Self {
        Self { phi: CMatrix::zeros(3, 3), w: vec![GaussianRational::zero(); 3] }
    }

    pub fn from_vector(w: CVec) -> Self {
        Self { phi: CMatrix::zeros(3, 3), w }
    }

    pub fn phi(&self) -> &CMatrix {
        &self.phi
    }

    pub fn w(&self) -> &[GaussianRational] {
        &self.w
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { phi: self.phi.add(&o.phi), w: cvec_add(&self.w, &o.w) }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let s = real(s.clone());
        Self { phi: self.phi.scale(&s), w: cvec_scale(&self.w, &s) }
    }

    /// The 24 real coordinates (Re φ, Im φ, Re w, Im w).
    pub fn to_real(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.phi.entries().iter().map(|z| z.re.clone()).collect();
        out.extend(self.phi.entries().iter().map(|z| z.im.clone()));
        out.extend(self.w.iter().map(|z| z.re.clone()));
        out.extend(self.w.iter().map(|z| z.im.clone()));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.w.iter().all(Zero::is_zero)
    }
}

/// Real basis: i(E₁₁−E₂₂), i(E₂₂−E₃₃), then E_{jk}−E_{kj} and i(E_{jk}+E_{kj})
/// for j < k, then e₁, e₂, e₃, ie₁, ie₂, ie₃ in W.
pub fn compact_basis() -> Vec<CompactElement> {
    let unit = |r: usize, c: usize, z: GaussianRational| CMatrix::from_fn(3, 3, |a, b| if (a, b) == (r, c) { z.clone() } else { GaussianRational::zero() });
    let i = GaussianRational::i();
    let one = real(q(1));
    let mut out = vec![
        unit(0, 0, i.clone()).sub(&unit(1, 1, i.clone())),
        unit(1, 1, i.clone()).sub(&unit(2, 2, i.clone())),
    ];
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        out.push(unit(j, k, one.clone()).sub(&unit(k, j, one.clone())));
        out.push(unit(j, k, i.clone()).add(&unit(k, j, i.clone())));
    }
    let mut basis: Vec<CompactElement> = out.into_iter().map(|m| CompactElement::new(m, vec![GaussianRational::zero(); 3]).expect("su(3)")).collect();
    for z in [one, i] {
        for k in 0..3 {
            let mut w = vec![GaussianRational::zero(); 3];
            w[k] = z.clone();
            basis.push(CompactElement::from_vector(w));
        }
    }
    basis
}

/// [φ+u, ψ+v] = [φ,ψ] + 3σ_{u,v} − tr(σ_{u,v}) id + φ(v) − ψ(u) + 2·conj(u×v).
pub fn bracket_l(a: &CompactElement, b: &CompactElement) -> CompactElement {
    let s = sigma_op(&a.w, &b.w);
    let tr = s.trace();
    let phi = a.phi.commutator(&b.phi).add(&s.scale(&real(q(3)))).sub(&CMatrix::identity(3).scale(&tr));
    let w = cvec_add(
        &cvec_add(&a.phi.mul_vec(&b.w), &cvec_scale(&b.phi.mul_vec(&a.w), &real(q(-1)))),
        &cvec_scale(&conj_vec(&cross_c(&a.w, &b.w)), &real(q(2))),
    );
    CompactElement { phi, w }
}

/// s + u ∈ 𝒱 = ℝ ⊕ ℂ³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactVector {
    pub s: Rational,
    pub u: CVec,
}

impl CompactVector {
    pub fn new(s: Rational, u: CVec) -> Self {
        Self { s, u }
    }

    /// n(s+u) = s² + σ(u,u).
    pub fn norm(&self) -> Rational {
        &self.s * &self.s + sigma(&self.u, &self.u).re
    }

    pub fn to_real(&self) -> Vec<Rational> {
        let mut out = vec![self.s.clone()];
        out.extend(self.u.iter().map(|z| z.re.clone()));
        out.extend(self.u.iter().map(|z| z.im.clone()));
        out
    }

    pub fn from_real(x: &[Rational]) -> Self {
        Self { s: x[0].clone(), u: (0..3).map(|k| g(x[1 + k].clone(), x[4 + k].clone())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { s: &self.s + &o.s, u: cvec_add(&self.u, &o.u) }
    }
}

/// (φ+u)·(s+v) = −2 Im σ(u,v) + φ(v) − 2i s u − conj(u×v).
pub fn action_on_v(a: &CompactElement, x: &CompactVector) -> CompactVector {
    let s = q(-2) * sigma(&a.w, &x.u).im;
    let su: CVec = a.w.iter().map(|z| i_times(z).scale(&(q(-2) * &x.s))).collect();
    let u = cvec_add(&cvec_add(&a.phi.mul_vec(&x.u), &su), &cvec_scale(&conj_vec(&cross_c(&a.w, &x.u)), &real(q(-1))));
    CompactVector { s, u }
}

/// Matrix of a· on the realified 𝒱.
pub fn action_matrix(a: &CompactElement) -> QMatrix {
    let cols: Vec<Vec<Rational>> = (0..7).map(|k| action_on_v(a, &CompactVector::from_real(&unit_vec(7, k))).to_real()).collect();
    QMatrix::from_cols(&cols)
}

/// (s+u)×(t+v) = −Im σ(u,v) + i s v − i t u + conj(u×v).
pub fn cross_v(x: &CompactVector, y: &CompactVector) -> CompactVector {
    let s = -sigma(&x.u, &y.u).im;
    let sv: CVec = y.u.iter().map(|z| i_times(z).scale(&x.s)).collect();
    let tu: CVec = x.u.iter().map(|z| i_times(z).scale(&-y.s.clone())).collect();
    CompactVector { s, u: cvec_add(&cvec_add(&sv, &tu), &conj_vec(&cross_c(&x.u, &y.u))) }
}

fn det3(u: &[GaussianRational], v: &[GaussianRational], w: &[GaussianRational]) -> GaussianRational {
    sigma(&cross_c(u, v), &conj_vec(w))
}

/// Ω(s+u, t+v, r+w) = −Im(sσ(v,w) + tσ(w,u) + rσ(u,v)) + Re det(u,v,w).
pub fn omega_v(x: &CompactVector, y: &CompactVector, z: &CompactVector) -> Rational {
    let im = sigma(&y.u, &z.u).scale(&x.s) + &sigma(&z.u, &x.u).scale(&y.s) + &sigma(&x.u, &y.u).scale(&z.s);
    -im.im + det3(&x.u, &y.u, &z.u).re
}

/// Ω, n and × on the realified 𝒱.
#[derive(Clone, Debug)]
pub struct ModelForms {
    pub omega: ThreeForm,
    pub norm: QMatrix,
}

impl ModelForms {
    pub fn cross(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        cross_v(&CompactVector::from_real(x), &CompactVector::from_real(y)).to_real()
    }
}

pub fn model_forms() -> ModelForms {
    let e = |k: usize| CompactVector::from_real(&unit_vec(7, k));
    let terms = index_sets(7, 3).into_iter().filter_map(|t| {
        let c = omega_v(&e(t[0]), &e(t[1]), &e(t[2]));
        (!c.is_zero()).then(|| (t.iter().map(|i| i + 1).collect::<Vec<_>>(), c))
    });
    let omega = KForm::from_terms(7, 3, terms);
    let norm = QMatrix::from_fn(7, 7, |r, c| qq(1, 2) * (e(r).add(&e(c)).norm() - e(r).norm() - e(c).norm()));
    ModelForms { omega, norm }
}

/// 𝓛 acting on 𝒱, as a subalgebra of gl(7).
pub fn model_algebra() -> DerivationAlgebra {
    DerivationAlgebra::new(7, compact_basis().iter().map(action_matrix).collect())
}

/// Structure constants of 𝓛 on the real basis.
pub fn structure_table() -> AlgebraTable {
    let basis = compact_basis();
    let span = Subspace::new(24, &basis.iter().map(CompactElement::to_real).collect::<Vec<_>>());
    AlgebraTable::from_fn(14, |i, j| span.coordinates(&bracket_l(&basis[i], &basis[j]).to_real()).expect("𝓛 is closed"))
}

/// l_x with l_x y = x × y.
fn lx(x: &[Rational]) -> QMatrix {
    QMatrix::from_cols(&(0..3).map(|k| cross3(x, &unit_vec(3, k))).collect::<Vec<_>>())
}

/// μ_{x,y} = [[l_y, l_x, 2x], [l_x, −l_y, 2y], [−2xᵀ, −2yᵀ, 0]].
pub fn mu(x: &[Rational], y: &[Rational]) -> QMatrix {
    let (lxm, lym) = (lx(x), lx(y));
    QMatrix::from_fn(7, 7, |r, c| match (r / 3, c / 3) {
        (0, 0) => lym[(r, c)].clone(),
        (0, 1) => lxm[(r, c - 3)].clone(),
        (1, 0) => lxm[(r - 3, c)].clone(),
        (1, 1) => -lym[(r - 3, c - 3)].clone(),
        (0, 2) => q(2) * &x[r],
        (1, 2) => q(2) * &y[r - 3],
        (2, 0) => q(-2) * &x[c],
        (2, 1) => q(-2) * &y[c - 3],
        _ => q(0),
    })
}

/// Splits d ∈ 𝔤_c as h + μ_{x,y} with h = [[a,b,0],[−bᵀ,a,0],[0,0,0]].
pub fn split_h_m(d: &QMatrix) -> Result<(QMatrix, Vec<Rational>, Vec<Rational>), CompactError> {
    let x: Vec<Rational> = (0..3).map(|r| &d[(r, 6)] * qq(1, 2)).collect();
    let y: Vec<Rational> = (0..3).map(|r| &d[(r + 3, 6)] * qq(1, 2)).collect();
    let h = d.sub(&mu(&x, &y));
    let block = |r0: usize, c0: usize| QMatrix::from_fn(3, 3, |r, c| h[(r0 + r, c0 + c)].clone());
    let (a, b) = (block(0, 0), block(0, 3));
    let shaped = QMatrix::from_fn(7, 7, |r, c| match (r / 3, c / 3) {
        (0, 0) | (1, 1) => a[(r % 3, c % 3)].clone(),
        (0, 1) => b[(r, c - 3)].clone(),
        (1, 0) => -b[(c, r - 3)].clone(),
        _ => q(0),
    });
    if shaped != h {
        return Err(CompactError::TransportMismatch("𝔥-part is not of block form".into()));
    }
    Ok((h, x, y))
}

/// ψ(h + μ_{x,y}) = (a + ib) + (−y − ix).
pub fn psi(d: &QMatrix) -> Result<CompactElement, CompactError> {
    let (h, x, y) = split_h_m(d)?;
    let phi = CMatrix::from_fn(3, 3, |r, c| g(h[(r, c)].clone(), h[(r, c + 3)].clone()));
    let w = (0..3).map(|k| g(-y[k].clone(), -x[k].clone())).collect();
    CompactElement::new(phi, w).map_err(|_| CompactError::TransportMismatch("ψ(d) ∉ 𝓛".into()))
}

/// ψ′(x, y, s) = s − x + iy.
pub fn psi_prime(v: &[Rational]) -> CompactVector {
    CompactVector { s: v[6].clone(), u: (0..3).map(|k| g(-v[k].clone(), v[k + 3].clone())).collect() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportReport {
    pub action_pairs: usize,
    pub bracket_pairs: usize,
    pub mu_pairs: usize,
}

/// Checks ψ(d)·ψ′(X) = ψ′(dX), ψ[d₁,d₂] = [ψd₁,ψd₂] and the two μ-bracket
/// identities over the given basis of 𝔤_c.
pub fn psi_transport(gc: &DerivationAlgebra) -> Result<TransportReport, CompactError> {
    let images = gc.basis().iter().map(psi).collect::<Result<Vec<_>, _>>()?;
    let mut report = TransportReport { action_pairs: 0, bracket_pairs: 0, mu_pairs: 0 };
    for (d, pd) in gc.basis().iter().zip(&images) {
        for k in 0..7 {
            let x = unit_vec::<Rational>(7, k);
            if action_on_v(pd, &psi_prime(&x)) != psi_prime(&d.mul_vec(&x)) {
                return Err(CompactError::TransportMismatch(format!("action on e{}", k + 1)));
            }
            report.action_pairs += 1;
        }
    }
    for (d1, p1) in gc.basis().iter().zip(&images) {
        for (d2, p2) in gc.basis().iter().zip(&images) {
            if psi(&d1.commutator(d2))? != bracket_l(p1, p2) {
                return Err(CompactError::TransportMismatch("bracket".into()));
            }
            report.bracket_pairs += 1;
        }
    }
    let pr0 = |b: &QMatrix| b.sub(&QMatrix::identity(3).scale(&(b.trace() * qq(1, 3))));
    let outer = |u: &[Rational], v: &[Rational]| QMatrix::from_fn(3, 3, |r, c| &u[r] * &v[c]);
    let e6: Vec<Vec<Rational>> = (0..6).map(|k| unit_vec(6, k)).collect();
    for p in &e6 {
        for r in &e6 {
            let (x, y, u, v) = (&p[..3], &p[3..], &r[..3], &r[3..]);
            let b = mu(x, y).commutator(&mu(u, v));
            let (h, bx, by) = split_h_m(&b)?;
            let mx = vec_two(&vadd(&cross3(y, u), &cross3(x, v)));
            let my = vec_two(&vsub(&cross3(x, u), &cross3(y, v)));
            if bx != mx || by != my {
                return Err(CompactError::TransportMismatch("[μ,μ]_𝔪".into()));
            }
            let re = lx(&vadd(&cross3(y, v), &cross3(x, u))).scale(&q(3));
            let sym = outer(u, y).add(&outer(y, u)).sub(&outer(v, x)).sub(&outer(x, v));
            let im = pr0(&sym).scale(&q(3));
            let want = CMatrix::from_fn(3, 3, |a, c| g(re[(a, c)].clone(), im[(a, c)].clone()));
            if psi(&h)?.phi != want {
                return Err(CompactError::TransportMismatch("[μ,μ]_𝔥".into()));
            }
            report.mu_pairs += 1;
        }
    }
    Ok(report)
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_two(a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| x * q(2)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivsolver::derivations_of_form;
    use crate::numerics::sym_signature;
    use crate::spinor::spin_g2_equations;
    use crate::octonion::OctonionKind;
    use crate::threeform::{classify_orbit, OrbitTag};

    fn cv(re: [i64; 3], im: [i64; 3]) -> CVec {
        (0..3).map(|k| g(q(re[k]), q(im[k]))).collect()
    }

    #[test]
    fn brackets() {
        let basis = compact_basis();
        let e1 = CompactElement::from_vector(cv([1, 0, 0], [0, 0, 0]));
        let e2 = CompactElement::from_vector(cv([0, 1, 0], [0, 0, 0]));
        let b = bracket_l(&e1, &e2);
        assert_eq!(b.phi, sigma_op(&e1.w, &e2.w).scale(&real(q(3))));
        assert_eq!(b.w, cv([0, 0, 2], [0, 0, 0]));
        assert!(bracket_l(&e1, &e1).is_zero());
        let u = CompactElement::from_vector(cv([1, -2, 0], [3, 0, 1]));
        let phi = basis[4].clone();
        assert_eq!(bracket_l(&phi, &u).w, phi.phi.mul_vec(&u.w));
        assert!(CompactElement::new(CMatrix::identity(3), cv([0; 3], [0; 3])).is_err());
        let (x, y) = (cv([1, 2, 0], [0, 1, 1]), cv([0, 1, -1], [2, 0, 1]));
        let tr = sigma_op(&x, &y).trace();
        assert_eq!(tr, sigma(&y, &x) - &sigma(&x, &y));
        assert_eq!(tr, g(q(0), q(-2) * sigma(&x, &y).im));
    }

    #[test]
    fn jacobi_and_killing() {
        let t = structure_table();
        assert!(t.is_anticommutative());
        assert_eq!(t.jacobi_violation(), None);
        assert_eq!(sym_signature(&t.killing_form()).unwrap(), (14, 0));
    }

    #[test]
    fn module_and_forms() {
        let basis = compact_basis();
        for a in &basis {
            for b in &basis {
                let lhs = action_matrix(&bracket_l(a, b));
                assert_eq!(lhs, action_matrix(a).commutator(&action_matrix(b)));
            }
        }
        let one = CompactVector::new(q(1), cv([0; 3], [0; 3]));
        assert_eq!(action_on_v(&basis[0], &one).to_real(), vec![q(0); 7]);
        let u = cv([1, 0, 2], [0, -1, 0]);
        let img = action_on_v(&CompactElement::from_vector(u.clone()), &one);
        assert_eq!(img.u, u.iter().map(|z| i_times(z).scale(&q(-2))).collect::<Vec<_>>());
        let forms = model_forms();
        assert_eq!(forms.norm, QMatrix::identity(7));
        assert_eq!(classify_orbit(&forms.omega), OrbitTag::CompactOrbit);
        assert!(model_algebra().same_as(&derivations_of_form(&forms.omega)));
        let (x, y) = (CompactVector::new(q(2), cv([1, 0, 1], [0, 2, 0])), CompactVector::new(q(-1), cv([0, 1, 0], [1, 0, 3])));
        assert_eq!(cross_v(&x, &y).s, -sigma(&x.u, &y.u).im);
        for i in 0..7 {
            for j in 0..7 {
                let c = forms.cross(&unit_vec(7, i), &unit_vec(7, j));
                for k in 0..7 {
                    assert_eq!(c[k], forms.omega.eval(&[unit_vec(7, i), unit_vec(7, j), unit_vec(7, k)]));
                }
            }
        }
    }

    #[test]
    fn transport_from_spin_stabilizer() {
        let gc = spin_g2_equations(OctonionKind::Division).restricted;
        let r = psi_transport(&gc).unwrap();
        assert_eq!((r.action_pairs, r.bracket_pairs, r.mu_pairs), (98, 196, 36));
        let zero = vec![q(0); 3];
        assert!(psi(&mu(&zero, &zero)).unwrap().is_zero());
    }
}
