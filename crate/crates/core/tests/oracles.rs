//! Independent recomputations of quantities the library derives another way.

use g2core::derivsolver::derivations_of_form;
use g2core::g2model;
use g2core::numerics::{q, QMatrix, Rational};
use g2core::octonion::{space, OctonionKind};
use g2core::threeform::{norm_from_form, omega0, omega1, ThreeForm};

/// Dense Ω[i][j][k] built straight from the stored terms.
fn dense(omega: &ThreeForm) -> Vec<Vec<Vec<Rational>>> {
    let mut t = vec![vec![vec![q(0); 7]; 7]; 7];
    let json = omega.to_json();
    for term in json["terms"].as_array().unwrap() {
        let idx: Vec<usize> = term["idx"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize - 1).collect();
        let c: Rational = term["c"].as_str().unwrap().parse().unwrap();
        let (a, b, d) = (idx[0], idx[1], idx[2]);
        for (p, s) in [([a, b, d], 1), ([b, d, a], 1), ([d, a, b], 1), ([b, a, d], -1), ([a, d, b], -1), ([d, b, a], -1)] {
            t[p[0]][p[1]][p[2]] = &c * q(s);
        }
    }
    t
}

fn permutations() -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((prefix.clone(), sign));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            // moving the k-th remaining element to the front costs k transpositions
            go(prefix, rest, if k % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..7).collect(), 1, &mut out);
    out
}

/// Σ_{σ∈S₇} sgn σ Ω(eᵢ,e_{σ1},e_{σ2}) Ω(eⱼ,e_{σ3},e_{σ4}) Ω(e_{σ5},e_{σ6},e_{σ7}), all 5040 terms.
fn brute_gram(omega: &ThreeForm) -> QMatrix {
    let t = dense(omega);
    let perms = permutations();
    QMatrix::from_fn(7, 7, |i, j| {
        perms
            .iter()
            .map(|(s, sg)| &t[i][s[0]][s[1]] * &t[j][s[2]][s[3]] * &t[s[4]][s[5]][s[6]] * q(*sg))
            .sum()
    })
}

#[test]
fn permutation_signs() {
    let p = permutations();
    assert_eq!(p.len(), 5040);
    assert_eq!(p.iter().map(|(_, s)| s).sum::<i64>(), 0);
    assert_eq!(p[0], ((0..7).collect(), 1));
}

#[test]
fn gram_matches_brute_force() {
    let id = QMatrix::identity(7);
    for omega in [omega0(), omega1()] {
        assert_eq!(norm_from_form(&omega, &id), brute_gram(&omega));
    }
    let g = QMatrix::from_fn(7, 7, |i, j| q(((i * 3 + j * 5) % 4) as i64 - 1) + if i == j { q(3) } else { q(0) });
    let pulled = omega1().compose(&g);
    assert_eq!(norm_from_form(&pulled, &id), brute_gram(&pulled));
}

#[test]
fn gram_is_multiple_of_norm() {
    // n_{Ω,B} is a scalar multiple of the norm whose cross product Ω encodes
    for (omega, kind, c) in [(omega1(), OctonionKind::Division, -144), (omega0(), OctonionKind::Split, -1152)] {
        assert_eq!(brute_gram(&omega), space(kind).norm_matrix().scale(&q(c)));
    }
}

#[test]
fn killing_is_four_times_trace() {
    // on the 7-dimensional representation of g2, κ(x,y) = 4 tr(xy)
    let t = g2model::structure_table().unwrap();
    let basis = g2model::basis_matrices();
    let k = t.killing_form();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            assert_eq!(k[(i, j)], q(4) * x.mul(y).trace());
        }
    }
    let gc = derivations_of_form(&omega1());
    let kc = gc.structure_table().unwrap().killing_form();
    for (i, x) in gc.basis().iter().enumerate() {
        for (j, y) in gc.basis().iter().enumerate() {
            assert_eq!(kc[(i, j)], q(4) * x.mul(y).trace());
        }
    }
}
