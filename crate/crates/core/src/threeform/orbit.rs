use num_traits::Signed;
use rayon::prelude::*;

use crate::numerics::{congruence_diagonalize, q, sym_signature, unit_vec, vec_scale, vec_sub, QMatrix, Rational, Zero};

use super::{index_sets, sort_sign, KForm, ThreeForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitTag {
    SplitOrbit,
    CompactOrbit,
    NotGeneric,
}

impl OrbitTag {
    pub fn name(self) -> &'static str {
        match self {
            OrbitTag::SplitOrbit => "split",
            OrbitTag::CompactOrbit => "compact",
            OrbitTag::NotGeneric => "not-generic",
        }
    }
}

/// The 210 ordered splittings {a<b}, {c<d}, {e<f<g} of 0..7 with the sign of
/// the permutation (a b c d e f g).
fn splittings() -> Vec<([usize; 7], i32)> {
    let mut out = Vec::with_capacity(210);
    for ab in index_sets(7, 2) {
        let rest: Vec<usize> = (0..7).filter(|i| !ab.contains(i)).collect();
        for cd in index_sets(5, 2) {
            let (c, d) = (rest[cd[0]], rest[cd[1]]);
            let efg: Vec<usize> = rest.iter().copied().filter(|&i| i != c && i != d).collect();
            let perm = [ab[0], ab[1], c, d, efg[0], efg[1], efg[2]];
            let (_, s) = sort_sign(&perm).expect("a permutation");
            out.push((perm, s));
        }
    }
    out
}

/// Gram matrix over e₁…e₇ of
/// n_{Ω,B}(X,Y) = Σ_{σ∈S₇} sgn σ Ω(X,b_{σ1},b_{σ2}) Ω(Y,b_{σ3},b_{σ4}) Ω(b_{σ5},b_{σ6},b_{σ7}),
/// where the columns of `basis` are the bᵢ. Each of the 210 splittings into
/// increasing blocks stands for 2·2·6 = 24 equal terms.
pub fn norm_from_form(omega: &ThreeForm, basis: &QMatrix) -> QMatrix {
    let b: Vec<Vec<Rational>> = (0..7).map(|i| basis.col(i)).collect();
    let in_basis = omega.compose(basis);
    // u[(a,b)]_k = Ω(e_k, b_a, b_b)
    let pair_index = |a: usize, bb: usize| index_sets(7, 2).iter().position(|p| p == &vec![a, bb]).expect("pair");
    let pairs: Vec<Vec<Rational>> = index_sets(7, 2)
        .iter()
        .map(|p| {
            let one = omega.interior(&b[p[0]]).interior(&b[p[1]]);
            (0..7).map(|k| one.coeff(&[k])).collect()
        })
        .collect();
    let parts: Vec<QMatrix> = splittings()
        .par_iter()
        .filter_map(|(perm, s)| {
            let w = in_basis.coeff(&perm[4..7]);
            if w.is_zero() {
                return None;
            }
            let u = &pairs[pair_index(perm[0], perm[1])];
            let v = &pairs[pair_index(perm[2], perm[3])];
            let w = if *s < 0 { -w } else { w };
            Some(QMatrix::from_fn(7, 7, |i, j| &w * &u[i] * &v[j]))
        })
        .collect();
    let total = parts.iter().fold(QMatrix::zeros(7, 7), |acc, m| acc.add(m));
    total.scale(&q(24))
}

/// Everything `classify_orbit` learns about Ω.
#[derive(Clone, Debug)]
pub struct Classification {
    pub tag: OrbitTag,
    /// n_{Ω,B} over the canonical basis.
    pub gram: QMatrix,
    /// (n_minus, n_plus) of `gram`, if nondegenerate.
    pub raw_signature: Option<(usize, usize)>,
    /// Signature of the rescaled norm for which X∧(X∧Y) = n(X,Y)X − n(X)Y;
    /// equal to `raw_signature` when α > 0 and swapped when α < 0.
    pub signature: Option<(usize, usize)>,
    /// The scalar with X∧(X∧Y) = α(n(X,Y)X − n(X)Y) for the Gram norm.
    pub alpha: Option<Rational>,
}

/// X∧Y defined by gram(X∧Y, Z) = Ω(X,Y,Z).
pub(crate) fn gram_wedge(omega: &ThreeForm, gram_inv: &QMatrix, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let one = omega.interior(x).interior(y);
    let rhs: Vec<Rational> = (0..7).map(|k| one.coeff(&[k])).collect();
    gram_inv.mul_vec(&rhs)
}

fn alpha_of(omega: &ThreeForm, gram: &QMatrix) -> Rational {
    let inv = gram.inverse().expect("nondegenerate");
    let (d, p) = congruence_diagonalize(gram);
    let k = d.iter().position(|x| !x.is_zero()).expect("nonzero pivot");
    let x = p.col(k);
    let nx = gram.bilinear(&x, &x);
    for j in 0..7 {
        let y = unit_vec(7, j);
        let rhs = vec_sub(&vec_scale(&x, &gram.bilinear(&x, &y)), &vec_scale(&y, &nx));
        let Some(i) = rhs.iter().position(|c| !c.is_zero()) else { continue };
        let lhs = gram_wedge(omega, &inv, &x, &gram_wedge(omega, &inv, &x, &y));
        let alpha = &lhs[i] / &rhs[i];
        debug_assert_eq!(lhs, vec_scale(&rhs, &alpha));
        return alpha;
    }
    unreachable!("some basis vector is independent of x")
}

pub fn classify(omega: &ThreeForm) -> Classification {
    let gram = norm_from_form(omega, &QMatrix::identity(7));
    let Ok(raw) = sym_signature(&gram) else {
        return Classification { tag: OrbitTag::NotGeneric, gram, raw_signature: None, signature: None, alpha: None };
    };
    let alpha = alpha_of(omega, &gram);
    let signature = if alpha.is_negative() { (raw.1, raw.0) } else { raw };
    let tag = match signature {
        (4, 3) | (3, 4) => OrbitTag::SplitOrbit,
        (0, 7) | (7, 0) => OrbitTag::CompactOrbit,
        other => panic!("generic 3-form with impossible signature {other:?}"),
    };
    Classification { tag, gram, raw_signature: Some(raw), signature: Some(signature), alpha: Some(alpha) }
}

/// Split or compact orbit, decided exactly from the signature of n_{Ω,B}.
pub fn classify_orbit(omega: &ThreeForm) -> OrbitTag {
    classify(omega).tag
}

impl KForm<Rational> {
    pub fn classify(&self) -> Classification {
        classify(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threeform::{omega0, omega1};

    #[test]
    fn representatives() {
        let c0 = classify(&omega0());
        assert_eq!(c0.tag, OrbitTag::SplitOrbit);
        assert_eq!(c0.signature, Some((4, 3)));
        // n_{Ω₀} = −1152·N, the full S₇ sum at E₀ being 1152
        assert_eq!(c0.gram, crate::octonion::space(crate::octonion::OctonionKind::Split).norm_matrix().scale(&q(-1152)));
        let c1 = classify(&omega1());
        assert_eq!(c1.tag, OrbitTag::CompactOrbit);
        assert_eq!(c1.signature, Some((0, 7)));
    }

    #[test]
    fn decomposable_form_is_not_generic() {
        let f = KForm::monomial(7, &[1, 2, 3]);
        assert_eq!(classify_orbit(&f), OrbitTag::NotGeneric);
        assert!(norm_from_form(&f, &QMatrix::identity(7)).rank() < 7);
        assert!(norm_from_form(&KForm::zero(7, 3), &QMatrix::identity(7)).is_zero());
    }

    #[test]
    fn splitting_count() {
        assert_eq!(splittings().len(), 210);
    }
}
