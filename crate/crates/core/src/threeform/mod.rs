//! Exterior forms on F⁷: the GL action, the bilinear form attached to a
//! 3-form, the two-orbit classification of generic 3-forms with witnesses,
//! Hodge calculus, the coassociative 4-form and the operator α ↦ ⋆(Ω∧α).

mod kform;
mod orbit;
mod witness;

use serde::{Deserialize, Serialize};

pub use kform::{index_sets, sort_sign, KForm};
pub use orbit::{classify, classify_orbit, norm_from_form, Classification, OrbitTag};
pub use witness::{orbit_witness, Witness};

use crate::numerics::{parse_rational, q, unit_vec, QMatrix, Rational, Zero};
use crate::octonion::{space, Octonion, OctonionKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("wedge product would have degree {0} > 7")]
    DegreeOverflow(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("3-form is not generic")]
    NotGeneric,
    #[error("residual {residual} exceeds tolerance at {digits} digits")]
    PrecisionExhausted { residual: String, digits: u32 },
    #[error("bad form file: {0}")]
    Parse(String),
}

pub type ThreeForm = KForm<Rational>;

/// Ω₀ = {X,Y,Z} of the split cross product in the basis E₀, E₁..₃, F₁..₃:
/// −2(e^{125} + e^{136} + e^{147}) − 4e^{234} + 4e^{567}.
pub fn omega0() -> ThreeForm {
    space(OctonionKind::Split).three_form()
}

/// Ω₁ = e^{147}+e^{257}+e^{367}+e^{123}−e^{156}+e^{246}−e^{345}.
pub fn omega1() -> ThreeForm {
    let terms = [
        ([1, 4, 7], 1),
        ([2, 5, 7], 1),
        ([3, 6, 7], 1),
        ([1, 2, 3], 1),
        ([1, 5, 6], -1),
        ([2, 4, 6], 1),
        ([3, 4, 5], -1),
    ];
    KForm::from_terms(7, 3, terms.map(|(i, c)| (i.to_vec(), q(c))))
}

/// Λ = −e^{1245}+e^{1267}−e^{1346}−e^{1357}+e^{2347}−e^{2356}−e^{4567}.
pub fn lambda() -> KForm<Rational> {
    let terms = [
        ([1, 2, 4, 5], -1),
        ([1, 2, 6, 7], 1),
        ([1, 3, 4, 6], -1),
        ([1, 3, 5, 7], -1),
        ([2, 3, 4, 7], 1),
        ([2, 3, 5, 6], -1),
        ([4, 5, 6, 7], -1),
    ];
    KForm::from_terms(7, 4, terms.map(|(i, c)| (i.to_vec(), q(c))))
}

/// Λ(x,y,z,u) = −½ n(x, (y,z,u)) from the associator of the division
/// octonions.
pub fn coassociative_form() -> KForm<Rational> {
    let kind = OctonionKind::Division;
    let e = |i: usize| Octonion::imaginary(kind, unit_vec(7, i));
    let mut f = KForm::zero(7, 4);
    for idx in index_sets(7, 4) {
        let assoc = Octonion::associator(&e(idx[1]), &e(idx[2]), &e(idx[3]));
        let c = -e(idx[0]).n(&assoc) / q(2);
        if !c.is_zero() {
            f.add_term(&idx, c);
        }
    }
    f
}

/// Skew matrix of a 2-form under e^{ij} ↦ E_ji − E_ij.
pub fn bivector_to_skew(a: &KForm<Rational>) -> QMatrix {
    let n = a.dim();
    let mut m = QMatrix::zeros(n, n);
    for (idx, c) in a.terms() {
        let (i, j) = (idx[0], idx[1]);
        m[(j, i)] += c;
        m[(i, j)] -= c;
    }
    m
}

pub fn skew_to_bivector(m: &QMatrix) -> KForm<Rational> {
    let mut a = KForm::zero(m.rows(), 2);
    for idx in index_sets(m.rows(), 2) {
        let c = m[(idx[1], idx[0])].clone();
        if !c.is_zero() {
            a.add_term(&idx, c);
        }
    }
    a
}

/// Coordinates of a 2-form in the lexicographic basis e^{12}, e^{13}, ….
pub fn bivector_coords(a: &KForm<Rational>) -> Vec<Rational> {
    index_sets(a.dim(), 2).iter().map(|idx| a.coeff(idx)).collect()
}

pub fn bivector_from_coords(dim: usize, c: &[Rational]) -> KForm<Rational> {
    let mut a = KForm::zero(dim, 2);
    for (idx, x) in index_sets(dim, 2).iter().zip(c) {
        if !x.is_zero() {
            a.add_term(idx, x.clone());
        }
    }
    a
}

/// F(α) = ⋆(Ω∧α) on Λ²V* with the Euclidean metric, as a 21×21 matrix in the
/// lexicographic basis.
pub fn f_operator(omega: &ThreeForm) -> QMatrix {
    let basis = index_sets(7, 2);
    let cols: Vec<Vec<Rational>> = basis
        .iter()
        .map(|idx| {
            let a = KForm::monomial(7, &[idx[0] + 1, idx[1] + 1]);
            let image = omega.wedge(&a).expect("degree 5").hodge_star(&[1; 7]);
            bivector_coords(&image)
        })
        .collect();
    QMatrix::from_cols(&cols)
}

/// Eigenspaces of F for the eigenvalues +1 and −2.
#[derive(Clone, Debug)]
pub struct FSpectrum {
    pub matrix: QMatrix,
    pub plus_one: Vec<Vec<Rational>>,
    pub minus_two: Vec<Vec<Rational>>,
}

pub fn f_operator_spectrum(omega: &ThreeForm) -> FSpectrum {
    let matrix = f_operator(omega);
    let shifted = |l: i64| matrix.sub(&QMatrix::identity(21).scale(&q(l))).nullspace();
    FSpectrum { plus_one: shifted(1), minus_two: shifted(-2), matrix }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    idx: Vec<usize>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    dim: usize,
    degree: usize,
    terms: Vec<TermJson>,
}

impl KForm<Rational> {
    /// `{"dim":7,"degree":3,"terms":[{"idx":[1,4,7],"c":"1"},…]}` with
    /// 1-based indices.
    pub fn to_json(&self) -> serde_json::Value {
        let terms = self.terms().map(|(idx, c)| TermJson { idx: idx.iter().map(|i| i + 1).collect(), c: c.to_string() });
        serde_json::to_value(FormJson { dim: self.dim(), degree: self.degree(), terms: terms.collect() })
            .expect("plain data serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self, FormError> {
        let raw: FormJson = serde_json::from_str(s).map_err(|e| FormError::Parse(e.to_string()))?;
        if raw.dim == 0 || raw.degree > raw.dim {
            return Err(FormError::Parse(format!("degree {} on dimension {}", raw.degree, raw.dim)));
        }
        let mut f = KForm::zero(raw.dim, raw.degree);
        for t in raw.terms {
            if t.idx.len() != raw.degree || t.idx.iter().any(|&i| i == 0 || i > raw.dim) {
                return Err(FormError::Parse(format!("bad index list {:?}", t.idx)));
            }
            let c = parse_rational(&t.c).map_err(|e| FormError::Parse(e.to_string()))?;
            let idx: Vec<usize> = t.idx.iter().map(|i| i - 1).collect();
            if sort_sign(&idx).is_none() {
                return Err(FormError::Parse(format!("repeated index in {:?}", t.idx)));
            }
            f.add_term(&idx, c);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Matrix;

    #[test]
    fn omega1_is_the_division_triple_product() {
        assert_eq!(omega1(), space(OctonionKind::Division).three_form());
    }

    #[test]
    fn omega0_coefficients() {
        let expected = KForm::from_terms(
            7,
            3,
            [
                (vec![1, 2, 5], q(-2)),
                (vec![1, 3, 6], q(-2)),
                (vec![1, 4, 7], q(-2)),
                (vec![2, 3, 4], q(-4)),
                (vec![5, 6, 7], q(4)),
            ],
        );
        assert_eq!(omega0(), expected);
    }

    #[test]
    fn coassociative_form_matches_and_wedges_to_minus_seven() {
        assert_eq!(coassociative_form(), lambda());
        assert_eq!(omega1().wedge(&lambda()).unwrap(), KForm::volume(7).scale(&q(-7)));
        // with orientation e^{1…7} the star of Ω₁ is −Λ
        assert_eq!(omega1().hodge_star(&[1; 7]), lambda().scale(&q(-1)));
    }

    #[test]
    fn f_operator_block_and_spectrum() {
        let f = f_operator(&omega1());
        let pos = |i: usize, j: usize| index_sets(7, 2).iter().position(|x| x == &vec![i - 1, j - 1]).unwrap();
        let w4 = [pos(1, 7), pos(2, 6), pos(3, 5)];
        let block = Matrix::from_fn(3, 3, |r, c| f[(w4[r], w4[c])].clone());
        let expected = Matrix::from_rows(vec![
            vec![q(0), q(-1), q(1)],
            vec![q(-1), q(0), q(1)],
            vec![q(1), q(1), q(0)],
        ]);
        assert_eq!(block, expected);
        let spectrum = f_operator_spectrum(&omega1());
        assert_eq!((spectrum.plus_one.len(), spectrum.minus_two.len()), (14, 7));
        assert!(spectrum.matrix.trace().is_zero());
    }

    #[test]
    fn interior_of_e4() {
        let e4 = unit_vec(7, 3);
        let expected = KForm::from_terms(7, 2, [(vec![1, 7], q(-1)), (vec![2, 6], q(-1)), (vec![3, 5], q(1))]);
        assert_eq!(omega1().interior(&e4), expected);
    }

    #[test]
    fn skew_identification_round_trip() {
        let a = omega1().interior(&unit_vec(7, 0));
        let m = bivector_to_skew(&a);
        assert_eq!(m.transpose(), m.scale(&q(-1)));
        assert_eq!(skew_to_bivector(&m), a);
    }

    #[test]
    fn json_round_trip() {
        let s = omega1().to_json().to_string();
        assert!(s.contains(r#"{"c":"1","idx":[1,2,3]}"#) || s.contains(r#"{"idx":[1,2,3],"c":"1"}"#));
        assert_eq!(ThreeForm::from_json_str(&s).unwrap(), omega1());
        assert!(ThreeForm::from_json_str(r#"{"dim":7,"degree":3,"terms":[{"idx":[1,1,2],"c":"1"}]}"#).is_err());
        assert!(ThreeForm::from_json_str("nope").is_err());
    }
}
