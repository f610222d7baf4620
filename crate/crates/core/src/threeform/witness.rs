use std::cmp::Ordering;

use crate::numerics::{congruence_diagonalize, dot, BigFloat, Matrix, QMatrix, Rational, Real};

use super::orbit::{classify, OrbitTag};
use super::{omega0, omega1, FormError, KForm, ThreeForm};

/// A matrix φ with φ*Ω equal to the orbit representative (Ω₀ or Ω₁) up to
/// `residual`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub phi: Matrix<BigFloat>,
    pub target: OrbitTag,
    pub residual: BigFloat,
    /// Whether every step stayed in ℚ, making the residual exactly zero.
    pub exact: bool,
    pub digits: u32,
}

impl Witness {
    pub fn to_json(&self) -> serde_json::Value {
        let phi: Vec<Vec<String>> =
            (0..7).map(|i| (0..7).map(|j| self.phi[(i, j)].to_sci(12)).collect()).collect();
        serde_json::json!({
            "phi": phi,
            "residual": self.residual.to_sci(2),
            "target": self.target.name(),
        })
    }
}

/// Ω together with the rescaled norm n' = s·n_{Ω,B} (s³ = α) for which the
/// product ∧' with n'(X∧'Y,Z) = Ω(X,Y,Z) is a cross product.
struct Normalized<R> {
    omega: KForm<R>,
    gram: Matrix<R>,
    wedge_map: Matrix<R>,
}

impl<R: Real> Normalized<R> {
    fn n(&self, x: &[R], y: &[R]) -> R {
        self.gram.bilinear(x, y)
    }

    fn wedge(&self, x: &[R], y: &[R]) -> Vec<R> {
        let one = self.omega.interior(x).interior(y);
        let rhs: Vec<R> = (0..7).map(|k| one.coeff(&[k])).collect();
        self.wedge_map.mul_vec(&rhs)
    }

    fn scale_vec(v: &[R], s: &R) -> Vec<R> {
        v.iter().map(|x| x.clone() * s).collect()
    }

    fn axpy(a: &R, x: &[R], y: &[R]) -> Vec<R> {
        x.iter().zip(y).map(|(xi, yi)| a.clone() * xi + yi).collect()
    }

    /// Largest residual of X∧'(X∧'Y) − n'(X,Y)X + n'(X)Y over basis pairs.
    fn identity_residual(&self) -> R {
        let e = |i| crate::numerics::unit_vec::<R>(7, i);
        let mut worst = R::zero();
        for i in 0..7 {
            for j in 0..7 {
                let (x, y) = (e(i), e(j));
                let lhs = self.wedge(&x, &self.wedge(&x, &y));
                let rhs = Self::axpy(&-self.n(&x, &x), &y, &Self::scale_vec(&x, &self.n(&x, &y)));
                for (a, b) in lhs.iter().zip(&rhs) {
                    let d = a.clone() - b;
                    if d.cmp_abs(&worst) == Ordering::Greater {
                        worst = d;
                    }
                }
            }
        }
        worst
    }
}

enum Failure {
    /// A root left the scalar field; retry with floats.
    Irrational,
    Degenerate,
}

fn normalized<R: Real>(omega: &ThreeForm, gram: &QMatrix, alpha: &Rational, digits: u32) -> Result<Normalized<R>, Failure> {
    let conv = |r: &Rational| R::from_rational(r, digits);
    let s = conv(alpha).cbrt().ok_or(Failure::Irrational)?;
    let gram_inv = gram.inverse().ok_or(Failure::Degenerate)?;
    let inv_s = R::one() / &s;
    Ok(Normalized {
        omega: omega.map(conv),
        gram: gram.map(conv).scale(&s),
        wedge_map: gram_inv.map(conv).scale(&inv_s),
    })
}

/// Candidate with the largest Euclidean residual against `chosen`; ties go
/// to the lowest index.
fn pick_independent<R: Real>(cands: &[Vec<R>], chosen: &[Vec<R>]) -> Option<usize> {
    let mut ortho: Vec<Vec<R>> = Vec::new();
    for c in chosen {
        let mut r = c.clone();
        for o in &ortho {
            let f = dot(&r, o) / &dot(o, o);
            r = r.iter().zip(o).map(|(a, b)| a.clone() - &(f.clone() * b)).collect();
        }
        ortho.push(r);
    }
    let mut best: Option<(usize, R)> = None;
    for (i, c) in cands.iter().enumerate() {
        let mut r = c.clone();
        for o in &ortho {
            let f = dot(&r, o) / &dot(o, o);
            r = r.iter().zip(o).map(|(a, b)| a.clone() - &(f.clone() * b)).collect();
        }
        let size = dot(&r, &r);
        if best.as_ref().is_none_or(|(_, b)| size.cmp_abs(b) == Ordering::Greater) {
            best = Some((i, size));
        }
    }
    best.filter(|(_, s)| !s.is_zero()).map(|(i, _)| i)
}

fn split_frame<R: Real>(nf: &Normalized<R>, gram: &QMatrix, alpha: &Rational, digits: u32) -> Result<Vec<Vec<R>>, Failure> {
    type N<R> = Normalized<R>;
    let (d, p) = congruence_diagonalize(gram);
    let s = R::from_rational(alpha, digits).cbrt().ok_or(Failure::Irrational)?;
    let k = (0..7)
        .find(|&k| (R::from_rational(&d[k], digits) * &s).signum() < 0)
        .ok_or(Failure::Degenerate)?;
    let col: Vec<R> = p.col(k).iter().map(|c| R::from_rational(c, digits)).collect();
    let len = (-(R::from_rational(&d[k], digits) * &s)).sqrt().ok_or(Failure::Irrational)?;
    let x = N::scale_vec(&col, &(R::one() / &len));
    let half = R::one() / &R::from_i64(2);
    let plus: Vec<Vec<R>> = (0..7)
        .map(|j| {
            let e = crate::numerics::unit_vec::<R>(7, j);
            let proj = N::axpy(&nf.n(&e, &x), &x, &e);
            N::scale_vec(&N::axpy(&R::one(), &proj, &nf.wedge(&x, &proj)), &half)
        })
        .collect();
    let mut ys: Vec<Vec<R>> = Vec::new();
    for _ in 0..3 {
        let i = pick_independent(&plus, &ys).ok_or(Failure::Degenerate)?;
        ys.push(plus[i].clone());
    }
    let t = nf.omega.eval(&ys);
    if t.is_zero() {
        return Err(Failure::Degenerate);
    }
    ys[0] = N::scale_vec(&ys[0], &(-R::from_i64(4) / &t));
    let zs: Vec<Vec<R>> =
        (0..3).map(|i| N::scale_vec(&nf.wedge(&ys[(i + 1) % 3], &ys[(i + 2) % 3]), &half)).collect();
    let mut frame = vec![x];
    frame.extend(ys);
    frame.extend(zs);
    Ok(frame)
}

fn compact_frame<R: Real>(nf: &Normalized<R>) -> Result<Vec<Vec<R>>, Failure> {
    type N<R> = Normalized<R>;
    let unit = |v: &[R]| -> Result<Vec<R>, Failure> {
        let len = nf.n(v, v).sqrt().ok_or(Failure::Irrational)?;
        Ok(N::scale_vec(v, &(R::one() / &len)))
    };
    let project = |v: &[R], on: &[Vec<R>]| on.iter().fold(v.to_vec(), |acc, b| N::axpy(&-nf.n(&acc, b), b, &acc));
    let longest = |on: &[Vec<R>]| -> Result<Vec<R>, Failure> {
        let cands: Vec<Vec<R>> = (0..7).map(|j| project(&crate::numerics::unit_vec(7, j), on)).collect();
        let mut best = 0;
        for j in 1..7 {
            if nf.n(&cands[j], &cands[j]).cmp_abs(&nf.n(&cands[best], &cands[best])) == Ordering::Greater {
                best = j;
            }
        }
        unit(&cands[best])
    };
    let x = unit(&crate::numerics::unit_vec(7, 0))?;
    let x1 = longest(std::slice::from_ref(&x))?;
    let y1 = nf.wedge(&x, &x1);
    let x2 = longest(&[x.clone(), x1.clone(), y1.clone()])?;
    let y2 = nf.wedge(&x, &x2);
    let x3 = nf.wedge(&x1, &x2);
    let y3 = nf.wedge(&x, &x3);
    Ok(vec![x1, x2, x3, y1, y2, y3, x])
}

fn build<R: Real>(omega: &ThreeForm, tag: OrbitTag, gram: &QMatrix, alpha: &Rational, digits: u32) -> Result<(Matrix<R>, R), Failure> {
    let nf = normalized::<R>(omega, gram, alpha, digits)?;
    let frame = match tag {
        OrbitTag::SplitOrbit => split_frame(&nf, gram, alpha, digits)?,
        OrbitTag::CompactOrbit => compact_frame(&nf)?,
        OrbitTag::NotGeneric => return Err(Failure::Degenerate),
    };
    let phi = Matrix::from_cols(&frame);
    let target = if tag == OrbitTag::SplitOrbit { omega0() } else { omega1() };
    let diff = nf.omega.compose(&phi).sub(&target.map(|c| R::from_rational(c, digits)));
    let mut residual = nf.identity_residual();
    for (_, c) in diff.terms() {
        if c.cmp_abs(&residual) == Ordering::Greater {
            residual = c.clone();
        }
    }
    let residual = if residual.signum() < 0 { -residual } else { residual };
    Ok((phi, residual))
}

/// Builds φ with φ*Ω = Ω₀ (split orbit) or Ω₁ (compact orbit). The
/// construction runs over ℚ when the cube root of α and the needed square
/// roots are rational, and at `digits` decimal digits otherwise. The
/// residual also covers the identity X∧'(X∧'Y) = n'(X,Y)X − n'(X)Y.
pub fn orbit_witness(omega: &ThreeForm, digits: u32) -> Result<Witness, FormError> {
    let c = classify(omega);
    let (Some(alpha), OrbitTag::SplitOrbit | OrbitTag::CompactOrbit) = (c.alpha.clone(), c.tag) else {
        return Err(FormError::NotGeneric);
    };
    match build::<Rational>(omega, c.tag, &c.gram, &alpha, digits) {
        Ok((phi, residual)) => {
            return Ok(Witness {
                phi: phi.map(|x| BigFloat::from_rational(x, digits)),
                target: c.tag,
                residual: BigFloat::from_rational(&residual, digits),
                exact: true,
                digits,
            })
        }
        Err(Failure::Degenerate) => return Err(FormError::NotGeneric),
        Err(Failure::Irrational) => {}
    }
    let (phi, residual) = match build::<BigFloat>(omega, c.tag, &c.gram, &alpha, digits) {
        Ok(r) => r,
        Err(_) => return Err(FormError::PrecisionExhausted { residual: "n/a".into(), digits }),
    };
    if residual.cmp_value(&BigFloat::tolerance(digits)) == Ordering::Greater {
        return Err(FormError::PrecisionExhausted { residual: residual.to_sci(2), digits });
    }
    Ok(Witness { phi, target: c.tag, residual, exact: false, digits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{qq, Zero, DEFAULT_PRECISION};

    #[test]
    fn representatives_have_exact_witnesses() {
        let w0 = orbit_witness(&omega0(), DEFAULT_PRECISION).unwrap();
        assert!(w0.exact && w0.residual.is_zero());
        assert_eq!(w0.phi, Matrix::identity(7).map(|x: &Rational| BigFloat::from_rational(x, 60)));
        let w1 = orbit_witness(&omega1(), DEFAULT_PRECISION).unwrap();
        assert!(w1.exact && w1.residual.is_zero());
        // a signed permutation matrix
        for r in 0..7 {
            let nonzero = (0..7).filter(|&c| !w1.phi[(r, c)].is_zero()).count();
            assert_eq!(nonzero, 1);
        }
    }

    #[test]
    fn scaled_form_needs_floats() {
        let w = orbit_witness(&omega0().scale(&qq(2, 1)), DEFAULT_PRECISION).unwrap();
        assert!(!w.exact);
        assert!(w.residual.to_f64() < 1e-30);
        assert!(orbit_witness(&KForm::monomial(7, &[1, 2, 3]), 60).is_err());
    }
}
