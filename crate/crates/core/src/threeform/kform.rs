use std::collections::BTreeMap;

use crate::numerics::{ExactField, Field, Matrix};

use super::FormError;

/// An alternating k-form on Fⁿ, stored as coefficients of e^{i₁…i_k} with
/// strictly increasing 0-based indices. Absent keys are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct KForm<T> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, T>,
}

/// Sign of the permutation sorting `idx`, or `None` if an index repeats.
pub fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

/// All strictly increasing k-subsets of 0..n in lexicographic order.
pub fn index_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn signed<T: Field>(c: &T, sign: i32) -> T {
    if sign < 0 {
        -c.clone()
    } else {
        c.clone()
    }
}

impl<T: Field> KForm<T> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self { dim, degree, terms: BTreeMap::new() }
    }

    /// Builds a form from 1-based index lists, e.g. `[(vec![1,4,7], c)]`.
    /// Unsorted indices are sorted with the matching sign.
    pub fn from_terms(dim: usize, degree: usize, terms: impl IntoIterator<Item = (Vec<usize>, T)>) -> Self {
        let mut f = Self::zero(dim, degree);
        for (idx, c) in terms {
            let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            f.add_term(&zero_based, c);
        }
        f
    }

    /// The monomial e^{i₁…i_k} from 1-based indices.
    pub fn monomial(dim: usize, idx: &[usize]) -> Self {
        Self::from_terms(dim, idx.len(), [(idx.to_vec(), T::one())])
    }

    /// The volume form e^{1…n}.
    pub fn volume(dim: usize) -> Self {
        Self::monomial(dim, &(1..=dim).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at 0-based indices in any order.
    pub fn coeff(&self, idx: &[usize]) -> T {
        match sort_sign(idx) {
            Some((key, s)) => self.terms.get(&key).map_or_else(T::zero, |c| signed(c, s)),
            None => T::zero(),
        }
    }

    /// Adds `c·e^{idx}` for 0-based indices in any order.
    pub fn add_term(&mut self, idx: &[usize], c: T) {
        assert_eq!(idx.len(), self.degree, "term degree mismatch");
        let Some((key, s)) = sort_sign(idx) else { return };
        let c = signed(&c, s);
        let entry = self.terms.entry(key.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> KForm<U> {
        let mut out = KForm::zero(self.dim, self.degree);
        for (k, c) in &self.terms {
            out.add_term(k, f(c));
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (k, c) in &self.terms {
            out.add_term(k, c.clone() * s);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.dim, self.degree), (o.dim, o.degree));
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-T::one()))
    }

    /// Ω(v₁,…,v_k): Σ_I c_I det[v_r(i_s)].
    pub fn eval(&self, vs: &[Vec<T>]) -> T {
        assert_eq!(vs.len(), self.degree);
        let mut acc = T::zero();
        for (idx, c) in &self.terms {
            let m = Matrix::from_fn(self.degree, self.degree, |r, s| vs[r][idx[s]].clone());
            acc = acc + &(c.clone() * &det_small(&m));
        }
        acc
    }

    /// φ*Ω, i.e. (X,…) ↦ Ω(φX,…).
    pub fn compose(&self, phi: &Matrix<T>) -> Self {
        let cols: Vec<Vec<T>> = (0..self.dim).map(|c| phi.col(c)).collect();
        let mut out = Self::zero(self.dim, self.degree);
        for idx in index_sets(self.dim, self.degree) {
            let vs: Vec<Vec<T>> = idx.iter().map(|&i| cols[i].clone()).collect();
            let c = self.eval(&vs);
            if !c.is_zero() {
                out.add_term(&idx, c);
            }
        }
        out
    }

    pub fn wedge(&self, o: &Self) -> Result<Self, FormError> {
        let degree = self.degree + o.degree;
        if degree > self.dim {
            return Err(FormError::DegreeOverflow(degree));
        }
        let mut out = Self::zero(self.dim, degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(&idx, ca.clone() * cb);
            }
        }
        Ok(out)
    }

    /// u⌟a, contracting the first slot.
    pub fn interior(&self, u: &[T]) -> Self {
        assert!(self.degree > 0, "cannot contract a 0-form");
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (idx, c) in &self.terms {
            for (s, &i) in idx.iter().enumerate() {
                if u[i].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx.iter().enumerate().filter(|&(t, _)| t != s).map(|(_, &j)| j).collect();
                let v = c.clone() * &u[i];
                out.add_term(&rest, if s % 2 == 0 { v } else { -v });
            }
        }
        out
    }

    /// Hodge star for the diagonal metric with entries `eps` (±1) and
    /// orientation e^{1…n}: ⋆e^I = sgn(I,Iᶜ)·∏_{i∈I}εᵢ·e^{Iᶜ}.
    pub fn hodge_star(&self, eps: &[i32]) -> Self {
        let mut out = Self::zero(self.dim, self.dim - self.degree);
        for (idx, c) in &self.terms {
            let comp: Vec<usize> = (0..self.dim).filter(|i| !idx.contains(i)).collect();
            let mut full = idx.clone();
            full.extend_from_slice(&comp);
            let (_, s) = sort_sign(&full).expect("disjoint index sets");
            let metric: i32 = idx.iter().map(|&i| eps[i]).product();
            out.add_term(&comp, signed(c, s * metric));
        }
        out
    }
}

impl<T: ExactField> KForm<T> {
    /// g·Ω := (g⁻¹)*Ω, so (g·Ω)(X,…) = Ω(g⁻¹X,…).
    pub fn pullback(&self, g: &Matrix<T>) -> Result<Self, FormError> {
        let inv = g.inverse().ok_or(FormError::SingularMatrix)?;
        Ok(self.compose(&inv))
    }
}

fn det_small<T: Field>(m: &Matrix<T>) -> T {
    match m.rows() {
        0 => T::one(),
        1 => m[(0, 0)].clone(),
        2 => m[(0, 0)].clone() * &m[(1, 1)] - &(m[(0, 1)].clone() * &m[(1, 0)]),
        n => {
            // Laplace along the first row; degrees here are at most 7.
            let mut acc = T::zero();
            for c in 0..n {
                if m[(0, c)].is_zero() {
                    continue;
                }
                let minor = Matrix::from_fn(n - 1, n - 1, |r, s| m[(r + 1, if s < c { s } else { s + 1 })].clone());
                let t = m[(0, c)].clone() * &det_small(&minor);
                acc = if c % 2 == 0 { acc + &t } else { acc - &t };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{q, Rational};

    type F = KForm<Rational>;

    #[test]
    fn wedge_of_covectors() {
        let e1 = F::monomial(7, &[1]);
        let e2 = F::monomial(7, &[2]);
        assert_eq!(e1.wedge(&e2).unwrap(), F::monomial(7, &[1, 2]));
        assert_eq!(e2.wedge(&e1).unwrap(), F::monomial(7, &[1, 2]).scale(&q(-1)));
        assert!(F::volume(7).wedge(&e1).is_err());
    }

    #[test]
    fn interior_and_eval_agree() {
        let f = F::from_terms(7, 3, [(vec![1, 2, 3], q(2)), (vec![2, 4, 6], q(-1))]);
        let u: Vec<Rational> = (0..7).map(|i| q(i as i64 - 2)).collect();
        let c = f.interior(&u);
        for idx in index_sets(7, 2) {
            let vs: Vec<Vec<Rational>> =
                vec![u.clone(), crate::numerics::unit_vec(7, idx[0]), crate::numerics::unit_vec(7, idx[1])];
            assert_eq!(c.coeff(&idx), f.eval(&vs));
        }
        assert!(c.interior(&u).is_zero());
        assert!(F::monomial(7, &[2, 3]).interior(&crate::numerics::unit_vec(7, 0)).is_zero());
    }

    #[test]
    fn star_of_one_and_star_star() {
        let one = F::from_terms(7, 0, [(vec![], q(1))]);
        assert_eq!(one.hodge_star(&[1; 7]), F::volume(7));
        let f = F::from_terms(7, 3, [(vec![1, 4, 7], q(3)), (vec![2, 5, 6], q(-2))]);
        assert_eq!(f.hodge_star(&[1; 7]).hodge_star(&[1; 7]), f);
    }

    #[test]
    fn sort_sign_counts_transpositions() {
        assert_eq!(sort_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_sign(&[1, 0, 2]), Some((vec![0, 1, 2], -1)));
        assert_eq!(sort_sign(&[1, 1]), None);
        assert_eq!(index_sets(7, 3).len(), 35);
    }
}
