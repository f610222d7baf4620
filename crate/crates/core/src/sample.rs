//! Seeded random rational data for property checks.

use rand::Rng;

use crate::numerics::{q, qq, unit_vec, QMatrix, Rational, Zero};
use crate::octonion::{space, Octonion, OctonionKind};

/// A rational a/b with |a| ≤ 9 and 1 ≤ b ≤ 4.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    qq(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn small_int<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(-3..=3))
}

pub fn vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rational(rng)).collect()
}

/// Small-integer matrix with nonzero determinant.
pub fn invertible_matrix<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    loop {
        let m = QMatrix::from_fn(n, n, |_, _| small_int(rng));
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn octonion<R: Rng>(rng: &mut R, kind: OctonionKind) -> Octonion {
    Octonion::from_coords(kind, &vector(rng, 8))
}

/// x with n(x) = 1, from the line through 1 in a random direction d:
/// n(1 + t d) = 1 at t = −2n(1,d)/n(d).
pub fn unit_octonion<R: Rng>(rng: &mut R, kind: OctonionKind) -> Octonion {
    let one = Octonion::one(kind);
    loop {
        let d = octonion(rng, kind);
        let (nd, cross) = (d.norm(), one.n(&d));
        if nd.is_zero() || cross.is_zero() {
            continue;
        }
        let t = q(-2) * cross / nd;
        return one.add(&d.scale(&t));
    }
}

pub fn nonisotropic_vector<R: Rng>(rng: &mut R, kind: OctonionKind) -> Vec<Rational> {
    loop {
        let v = vector(rng, 7);
        if !space(kind).norm(&v).is_zero() {
            return v;
        }
    }
}

/// A random vector orthogonal to `x` for the norm of `kind`.
pub fn orthogonal_vector<R: Rng>(rng: &mut R, kind: OctonionKind, x: &[Rational]) -> Vec<Rational> {
    let sp = space(kind);
    let v = vector(rng, 7);
    let nx = sp.norm(x);
    let c = sp.n(&v, x) / nx;
    v.iter().zip(x).map(|(a, b)| a - &(&c * b)).collect()
}

pub fn basis_vector(i: usize) -> Vec<Rational> {
    unit_vec(7, i - 1)
}
