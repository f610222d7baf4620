//! Stabilizers of a nonisotropic point for the two real forms: the reductive
//! decomposition 𝔤 = 𝔥 ⊕ 𝔪 at X ∈ S⁶, the complex structure J and Hermitian
//! form σ on X^⊥, the split eigenspaces W^± at X ∈ H₃⁶(1), and frames built
//! from basic triples.

use crate::derivsolver::DerivationAlgebra;
use crate::numerics::{q, qq, unit_vec, vec_add, vec_scale, vec_sub, GaussianRational, QMatrix, Rational, Subspace, Zero};
use crate::octonion::{space, CrossProductSpace, OctonionKind};
use crate::threeform::{omega0, omega1, FormError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomogeneousError {
    #[error("Y is not orthogonal to the base point")]
    NotOrthogonal,
    #[error("base point has norm {0}, expected 1")]
    NotUnitNorm(String),
    #[error("base point has norm {0}, expected -1")]
    WrongNorm(String),
    #[error("not a basic triple: {0}")]
    NotBasicTriple(String),
    #[error("decomposition check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Form(#[from] FormError),
}

/// φ_Y(Z) = X×(Y×Z) − Y×(X×Z) + (X×Y)×Z.
pub fn phi_derivation(sp: &CrossProductSpace, y: &[Rational], x: &[Rational]) -> Result<QMatrix, HomogeneousError> {
    if !sp.n(x, y).is_zero() {
        return Err(HomogeneousError::NotOrthogonal);
    }
    let xy = sp.cross(x, y);
    let cols: Vec<Vec<Rational>> = (0..7)
        .map(|k| {
            let z = unit_vec(7, k);
            let t1 = sp.cross(x, &sp.cross(y, &z));
            let t2 = sp.cross(y, &sp.cross(x, &z));
            vec_add(&vec_sub(&t1, &t2), &sp.cross(&xy, &z))
        })
        .collect();
    Ok(QMatrix::from_cols(&cols))
}

/// Basis of X^⊥ for the norm of `sp`.
pub fn orthogonal_complement(sp: &CrossProductSpace, x: &[Rational]) -> Vec<Vec<Rational>> {
    QMatrix::from_rows(vec![sp.norm_matrix().mul_vec(x)]).nullspace()
}

/// 𝔤 = 𝔥 ⊕ 𝔪 with 𝔥 the stabilizer of X and 𝔪 = {φ_Y : Y ∈ X^⊥}.
#[derive(Clone, Debug)]
pub struct ReductiveSplit {
    pub x: Vec<Rational>,
    pub g: DerivationAlgebra,
    pub h: DerivationAlgebra,
    /// Basis Y₁…Y₆ of X^⊥, with 𝔪 spanned by the φ_{Yᵢ}.
    pub w: Vec<Vec<Rational>>,
    pub m: Vec<QMatrix>,
    kind: OctonionKind,
    joint: Subspace<Rational>,
    killing: QMatrix,
}

impl ReductiveSplit {
    pub fn space(&self) -> &'static CrossProductSpace {
        space(self.kind)
    }

    fn split_coords(&self, d: &QMatrix) -> Option<(Vec<Rational>, Vec<Rational>)> {
        let c = self.joint.coordinates(&d.flatten())?;
        let (hc, mc) = c.split_at(self.h.dim());
        Some((hc.to_vec(), mc.to_vec()))
    }

    /// The vector Y with (d)_𝔪 = φ_Y.
    pub fn m_vector(&self, d: &QMatrix) -> Option<Vec<Rational>> {
        let (_, mc) = self.split_coords(d)?;
        Some(mc.iter().zip(&self.w).fold(vec![q(0); 7], |acc, (c, y)| vec_add(&acc, &vec_scale(y, c))))
    }

    pub fn phi(&self, y: &[Rational]) -> QMatrix {
        phi_derivation(self.space(), y, &self.x).expect("caller passes Y ⟂ X")
    }

    /// Y₃ with [φ_{Y₁}, φ_{Y₂}]_𝔪 = φ_{Y₃}.
    pub fn bracket_m(&self, y1: &[Rational], y2: &[Rational]) -> Vec<Rational> {
        let c = self.phi(y1).commutator(&self.phi(y2));
        self.m_vector(&c).expect("bracket stays in 𝔤")
    }

    /// κ(d₁, d₂) of 𝔤 for elements of 𝔤 given as matrices.
    pub fn killing(&self, d1: &QMatrix, d2: &QMatrix) -> Rational {
        let c1 = self.g.coordinates(d1).expect("in 𝔤");
        let c2 = self.g.coordinates(d2).expect("in 𝔤");
        self.killing.bilinear(&c1, &c2)
    }

    /// [𝔥, 𝔪] ⊂ 𝔪.
    pub fn is_invariant(&self) -> bool {
        let m_span = Subspace::new(49, &self.m.iter().map(QMatrix::flatten).collect::<Vec<_>>());
        self.h.basis().iter().all(|a| self.m.iter().all(|b| m_span.contains(&a.commutator(b).flatten())))
    }

    pub fn is_killing_orthogonal(&self) -> bool {
        self.h.basis().iter().all(|a| self.m.iter().all(|b| self.killing(a, b).is_zero()))
    }

    /// n([Y₁,Y₂]_𝔪, Y₃) + n(Y₂, [Y₁,Y₃]_𝔪) = 0, together with
    /// n(J(Y₁×Y₂), Y₃) = n(X, (Y₁×Y₂)×Y₃), on all basis triples.
    pub fn is_naturally_reductive(&self) -> bool {
        let sp = self.space();
        let w = &self.w;
        w.iter().all(|a| {
            w.iter().all(|b| {
                let ab = sp.cross(a, b);
                w.iter().all(|c| {
                    let skew = (sp.n(&self.bracket_m(a, b), c) + sp.n(b, &self.bracket_m(a, c))).is_zero();
                    skew && sp.n(&sp.cross(&self.x, &ab), c) == sp.n(&self.x, &sp.cross(&ab, c))
                })
            })
        })
    }

    /// The constant α with κ(φ_Y, φ_Z) = −α n(Y,Z) on the basis of X^⊥, if
    /// one exists.
    pub fn killing_constant(&self) -> Option<Rational> {
        let sp = self.space();
        let mut alpha: Option<Rational> = None;
        for (i, yi) in self.w.iter().enumerate() {
            for (j, yj) in self.w.iter().enumerate() {
                let k = self.killing(&self.m[i], &self.m[j]);
                let n = sp.n(yi, yj);
                match (&alpha, n.is_zero()) {
                    (_, true) if !k.is_zero() => return None,
                    (_, true) => {}
                    (None, false) => alpha = Some(-k / n),
                    (Some(a), false) => {
                        if k != -(a * &n) {
                            return None;
                        }
                    }
                }
            }
        }
        alpha
    }
}

pub fn reductive_decomposition(g: &DerivationAlgebra, x: &[Rational], kind: OctonionKind) -> Result<ReductiveSplit, HomogeneousError> {
    let sp = space(kind);
    if sp.norm(x).is_zero() {
        return Err(HomogeneousError::Inconsistent("base point is isotropic".into()));
    }
    let h = g.annihilator(x);
    let w = orthogonal_complement(sp, x);
    let m = w.iter().map(|y| phi_derivation(sp, y, x)).collect::<Result<Vec<_>, _>>()?;
    if !m.iter().all(|d| g.contains(d)) {
        return Err(HomogeneousError::Inconsistent("φ_Y is not in 𝔤".into()));
    }
    let mut flat: Vec<Vec<Rational>> = h.basis().iter().map(QMatrix::flatten).collect();
    flat.extend(m.iter().map(QMatrix::flatten));
    let joint = Subspace::new(49, &flat);
    if joint.dim() != g.dim() || h.dim() + m.len() != g.dim() {
        return Err(HomogeneousError::Inconsistent(format!("dims {} + {} ≠ {}", h.dim(), m.len(), g.dim())));
    }
    let table = g.structure_table().ok_or_else(|| HomogeneousError::Inconsistent("𝔤 not closed".into()))?;
    let killing = table.killing_form();
    Ok(ReductiveSplit { x: x.to_vec(), g: g.clone(), h, w, m, kind, joint, killing })
}

/// J(Y) = X×Y on W = X^⊥ and σ(Y,Z) = n(Y,Z) − i n(JY,Z).
#[derive(Clone, Debug)]
pub struct UnitaryData {
    pub x: Vec<Rational>,
    pub w: Vec<Vec<Rational>>,
    pub j: QMatrix,
    pub h: DerivationAlgebra,
}

impl UnitaryData {
    pub fn sigma(&self, y: &[Rational], z: &[Rational]) -> GaussianRational {
        let sp = space(OctonionKind::Division);
        GaussianRational::new(sp.n(y, z), -sp.n(&self.j.mul_vec(y), z))
    }

    pub fn j_squared_is_minus_one(&self) -> bool {
        self.w.iter().all(|y| self.j.mul_vec(&self.j.mul_vec(y)) == vec_scale(y, &q(-1)))
    }

    pub fn j_is_skew(&self) -> bool {
        let sp = space(OctonionKind::Division);
        self.w.iter().all(|a| self.w.iter().all(|b| (sp.n(&self.j.mul_vec(a), b) + sp.n(a, &self.j.mul_vec(b))).is_zero()))
    }

    /// Every d ∈ 𝔥 commutes with J, is σ-skew-Hermitian, and has complex
    /// trace ½(tr d − i tr Jd) = 0 on W.
    pub fn stabilizer_is_su3(&self) -> bool {
        self.h.basis().iter().all(|d| {
            let commutes = d.mul(&self.j) == self.j.mul(d);
            let skew = self.w.iter().all(|a| {
                self.w.iter().all(|b| (self.sigma(&d.mul_vec(a), b) + &self.sigma(a, &d.mul_vec(b))).is_zero())
            });
            commutes && skew && d.trace().is_zero() && self.j.mul(d).trace().is_zero()
        })
    }
}

pub fn unitary_stabilizer_data(g: &DerivationAlgebra, x: &[Rational]) -> Result<UnitaryData, HomogeneousError> {
    let sp = space(OctonionKind::Division);
    let n = sp.norm(x);
    if n != q(1) {
        return Err(HomogeneousError::NotUnitNorm(n.to_string()));
    }
    Ok(UnitaryData { x: x.to_vec(), w: orthogonal_complement(sp, x), j: sp.left_cross(x), h: g.annihilator(x) })
}

/// W^± = ker(f ∓ id) on X^⊥ for f(Y) = X×Y, with n(X) = −1.
#[derive(Clone, Debug)]
pub struct SplitStabilizerData {
    pub x: Vec<Rational>,
    pub f: QMatrix,
    pub w_plus: Vec<Vec<Rational>>,
    pub w_minus: Vec<Vec<Rational>>,
    pub h: DerivationAlgebra,
}

impl SplitStabilizerData {
    fn sp(&self) -> &'static CrossProductSpace {
        space(OctonionKind::Split)
    }

    pub fn totally_isotropic(&self) -> bool {
        let sp = self.sp();
        [&self.w_plus, &self.w_minus].iter().all(|ws| ws.iter().all(|a| ws.iter().all(|b| sp.n(a, b).is_zero())))
    }

    /// The pairing W⁺ × W⁻ → F is nondegenerate.
    pub fn dual_pairing(&self) -> bool {
        let sp = self.sp();
        QMatrix::from_fn(3, 3, |i, j| sp.n(&self.w_plus[i], &self.w_minus[j])).det() != q(0)
    }

    /// Y×Z = −n(Y,Z)X for Y ∈ W⁺, Z ∈ W⁻.
    pub fn product_rule(&self) -> bool {
        let sp = self.sp();
        self.w_plus.iter().all(|y| {
            self.w_minus.iter().all(|z| sp.cross(y, z) == vec_scale(&self.x, &-sp.n(y, z)))
        })
    }

    /// Trace of each d ∈ 𝔥 on W⁺ (which it preserves).
    pub fn traces_on_w_plus(&self) -> Option<Vec<Rational>> {
        let wp = Subspace::new(7, &self.w_plus);
        self.h
            .basis()
            .iter()
            .map(|d| {
                let mut t = q(0);
                for (i, w) in wp.basis().iter().enumerate() {
                    t += &wp.coordinates(&d.mul_vec(w))?[i];
                }
                Some(t)
            })
            .collect()
    }

    /// For Y ∈ X^⊥ with n(Y) = −1, the frame of the transitivity argument:
    /// Y₁ = Y + f(Y), Y₂, Y₃ ∈ W⁺ ∩ ⟨Y, f(Y)⟩^⊥ with Ω₀(Y₁,Y₂,Y₃) = −4 and
    /// Zᵢ = ½Y_{i+1}×Y_{i+2}. The matrix with columns (X, Y₁, Y₂, Y₃, Z₁, Z₂, Z₃)
    /// fixes Ω₀ and sends (E₁+F₁)/2 to Y.
    pub fn transitivity_frame(&self, y: &[Rational]) -> Result<QMatrix, HomogeneousError> {
        let sp = self.sp();
        if !sp.n(y, &self.x).is_zero() {
            return Err(HomogeneousError::NotOrthogonal);
        }
        if sp.norm(y) != q(-1) {
            return Err(HomogeneousError::WrongNorm(sp.norm(y).to_string()));
        }
        let fy = self.f.mul_vec(y);
        let y1 = vec_add(y, &fy);
        let nrm = sp.norm_matrix();
        let wp = QMatrix::from_cols(&self.w_plus);
        let constraints = QMatrix::from_rows(vec![nrm.mul_vec(y), nrm.mul_vec(&fy)]).mul(&wp);
        let rest: Vec<Vec<Rational>> = constraints.nullspace().iter().map(|c| wp.mul_vec(c)).collect();
        if rest.len() != 2 {
            return Err(HomogeneousError::Inconsistent("W⁺ ∩ ⟨Y,fY⟩^⊥ is not a plane".into()));
        }
        let (y2, mut y3) = (rest[0].clone(), rest[1].clone());
        let t = sp.triple(&y1, &y2, &y3);
        if t.is_zero() {
            return Err(HomogeneousError::Inconsistent("degenerate W⁺ frame".into()));
        }
        y3 = vec_scale(&y3, &(q(-4) / t));
        let ys = [y1, y2, y3];
        let half = qq(1, 2);
        let zs: Vec<Vec<Rational>> = (0..3).map(|i| vec_scale(&sp.cross(&ys[(i + 1) % 3], &ys[(i + 2) % 3]), &half)).collect();
        let mut cols = vec![self.x.clone()];
        cols.extend(ys);
        cols.extend(zs);
        Ok(QMatrix::from_cols(&cols))
    }
}

pub fn split_stabilizer_data(g: &DerivationAlgebra, x: &[Rational]) -> Result<SplitStabilizerData, HomogeneousError> {
    let sp = space(OctonionKind::Split);
    let n = sp.norm(x);
    if n != q(-1) {
        return Err(HomogeneousError::WrongNorm(n.to_string()));
    }
    let f = sp.left_cross(x);
    let eigen = |l: i64| {
        let mut rows: Vec<Vec<Rational>> = (0..7).map(|r| f.sub(&QMatrix::identity(7).scale(&q(l))).row(r).to_vec()).collect();
        rows.push(sp.norm_matrix().mul_vec(x));
        QMatrix::from_rows(rows).nullspace()
    };
    let data = SplitStabilizerData { x: x.to_vec(), w_plus: eigen(1), w_minus: eigen(-1), f, h: g.annihilator(x) };
    if data.w_plus.len() != 3 || data.w_minus.len() != 3 {
        return Err(HomogeneousError::Inconsistent("eigenspaces are not 3-dimensional".into()));
    }
    Ok(data)
}

/// The frame {X, X₁, X₂, X×X₁, X×X₂, X₁×X₂, X×(X₁×X₂)} as matrix columns.
fn triple_frame(sp: &CrossProductSpace, x: &[Rational], x1: &[Rational], x2: &[Rational]) -> QMatrix {
    let x12 = sp.cross(x1, x2);
    QMatrix::from_cols(&[
        x.to_vec(),
        x1.to_vec(),
        x2.to_vec(),
        sp.cross(x, x1),
        sp.cross(x, x2),
        x12.clone(),
        sp.cross(x, &x12),
    ])
}

/// The element g of G_{Ω₁} with (g e₁, g e₂, g e₇) = (X₀, X₁, X₂).
pub fn basic_triple_to_g2(x0: &[Rational], x1: &[Rational], x2: &[Rational]) -> Result<QMatrix, HomogeneousError> {
    let sp = space(OctonionKind::Division);
    let xs = [x0, x1, x2];
    for (i, a) in xs.iter().enumerate() {
        for (j, b) in xs.iter().enumerate() {
            let want = if i == j { q(1) } else { q(0) };
            if sp.n(a, b) != want {
                return Err(HomogeneousError::NotBasicTriple(format!("n(X{i},X{j}) ≠ {want}")));
            }
        }
    }
    if !omega1().eval(&[x0.to_vec(), x1.to_vec(), x2.to_vec()]).is_zero() {
        return Err(HomogeneousError::NotBasicTriple("Ω₁(X₀,X₁,X₂) ≠ 0".into()));
    }
    let e = |i| unit_vec::<Rational>(7, i);
    let canonical = triple_frame(sp, &e(0), &e(1), &e(6));
    let target = triple_frame(sp, x0, x1, x2);
    let inv = canonical.inverse().ok_or(FormError::SingularMatrix)?;
    Ok(target.mul(&inv))
}

/// Whether g·Ω = Ω for the given representative.
pub fn preserves(g: &QMatrix, omega: &crate::threeform::ThreeForm) -> Result<bool, HomogeneousError> {
    Ok(&omega.pullback(g)? == omega)
}

pub fn preserves_omega0(g: &QMatrix) -> Result<bool, HomogeneousError> {
    preserves(g, &omega0())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivsolver::derivations_of_form;

    fn e(i: usize) -> Vec<Rational> {
        unit_vec(7, i - 1)
    }

    #[test]
    fn phi_of_e1_is_a_derivation_sending_x_to_2y() {
        let sp = space(OctonionKind::Division);
        let gc = derivations_of_form(&omega1());
        let p = phi_derivation(sp, &e(1), &e(7)).unwrap();
        assert!(gc.contains(&p));
        assert_eq!(p.mul_vec(&e(7)), vec_scale(&e(1), &q(2)));
        assert!(phi_derivation(sp, &vec![q(0); 7], &e(7)).unwrap().is_zero());
        assert!(phi_derivation(sp, &e(7), &e(7)).is_err());
    }

    #[test]
    fn compact_reductive_pair() {
        let gc = derivations_of_form(&omega1());
        let r = reductive_decomposition(&gc, &e(7), OctonionKind::Division).unwrap();
        assert_eq!((r.h.dim(), r.m.len()), (8, 6));
        assert!(r.is_invariant() && r.is_killing_orthogonal() && r.is_naturally_reductive());
        let alpha = r.killing_constant().unwrap();
        assert!(alpha > q(0));
        let sp = space(OctonionKind::Division);
        let j = |y: &[Rational]| sp.cross(&e(7), y);
        let (y1, y2) = (e(1), e(2));
        assert_eq!(r.bracket_m(&y1, &y2), vec_scale(&j(&sp.cross(&y1, &y2)), &q(2)));
    }

    #[test]
    fn unitary_data() {
        let gc = derivations_of_form(&omega1());
        let u = unitary_stabilizer_data(&gc, &e(7)).unwrap();
        assert!(u.j_squared_is_minus_one() && u.j_is_skew() && u.stabilizer_is_su3());
        let y = vec![q(1), q(2), q(0), q(-1), q(0), q(3), q(0)];
        assert_eq!(u.sigma(&y, &y), GaussianRational::real(q(15)));
        assert!(unitary_stabilizer_data(&gc, &vec_scale(&e(7), &q(2))).is_err());
    }

    #[test]
    fn split_data_and_transitivity() {
        let g = derivations_of_form(&omega0());
        let s = split_stabilizer_data(&g, &e(1)).unwrap();
        assert_eq!(s.h.dim(), 8);
        assert!(s.totally_isotropic() && s.dual_pairing() && s.product_rule());
        assert!(s.traces_on_w_plus().unwrap().iter().all(Zero::is_zero));
        let base = vec_scale(&vec_add(&e(2), &e(5)), &qq(1, 2));
        // u·v = 1/4 on W = ⟨E_i⟩ ⊕ ⟨F_i⟩ gives n = −1
        let y = vec![q(0), q(1), q(2), q(-1), qq(1, 4), q(3), q(6)];
        for y in [base.clone(), y] {
            let frame = s.transitivity_frame(&y).unwrap();
            assert!(preserves_omega0(&frame).unwrap());
            assert_eq!(frame.mul_vec(&base), y);
        }
        assert!(s.transitivity_frame(&e(2)).is_err());
        assert!(split_stabilizer_data(&g, &e(2)).is_err());
    }

    #[test]
    fn basic_triples() {
        let g = basic_triple_to_g2(&e(1), &e(2), &e(7)).unwrap();
        assert_eq!(g, QMatrix::identity(7));
        let g = basic_triple_to_g2(&e(2), &e(7), &e(1)).unwrap();
        assert!(preserves(&g, &omega1()).unwrap());
        assert!(matches!(basic_triple_to_g2(&e(1), &e(2), &e(3)), Err(HomogeneousError::NotBasicTriple(_))));
    }
}
