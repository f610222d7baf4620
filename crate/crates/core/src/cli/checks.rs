//! Verification checks. Each takes a seeded generator and returns a one-line
//! detail on success or the first violation found. The sized variants are
//! shared with the acceptance target, which runs them at larger counts.

use rand_chacha::ChaCha8Rng;

use crate::compactmodel;
use crate::derivsolver::{derivations_of_algebra, derivations_of_form, AlgebraTable, DerivationAlgebra};
use crate::g2model::{self, cartan_basis, generated_ideal_dim, root_decomposition, weight_decomposition, z3_bracket, RootTag, SplitElement, Z3Element};
use crate::homogeneous::{basic_triple_to_g2, preserves, reductive_decomposition, split_stabilizer_data, unitary_stabilizer_data};
use crate::numerics::{
    congruence_diagonalize, dot, q, real_cube_root, same_span, sym_signature, unit_vec, BigFloat, QMatrix, Rational, Zero,
};
use crate::octonion::{basis_table, factor_unit, factor_unit_via_quaternion, space, Octonion, OctonionKind};
use crate::rootsys::{cartan_of_type, roots_from_cartan, weyl_group, CartanMatrix, Root};
use crate::sample;
use crate::spinor::{self, spin_action, spin_g2_equations, Clifford, CliffordElement};
use crate::threeform::{
    bivector_coords, classify, classify_orbit, f_operator_spectrum, lambda, norm_from_form, omega0, omega1, orbit_witness,
    skew_to_bivector, KForm, OrbitTag, ThreeForm,
};

pub type Outcome = Result<String, String>;

pub struct Check {
    pub id: &'static str,
    pub run: fn(&mut ChaCha8Rng) -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const KINDS: [OctonionKind; 2] = OctonionKind::ALL;

pub fn registry() -> Vec<Check> {
    vec![
        Check { id: "numerics.rank_nullity", run: |r| rank_nullity(r, 50) },
        Check { id: "numerics.signature_congruence", run: |r| signature_congruence(r, 30) },
        Check { id: "numerics.cube_root", run: |_| cube_root() },
        Check { id: "rootsys.g2", run: |_| g2_roots() },
        Check { id: "rootsys.weyl_orders", run: |_| weyl_orders() },
        Check { id: "g2model.jacobi", run: |_| split_model_axioms() },
        Check { id: "g2model.killing", run: |_| killing_signatures() },
        Check { id: "g2model.roots", run: |_| split_roots_and_weights() },
        Check { id: "g2model.z3", run: |_| z3_model() },
        Check { id: "octonion.laws", run: |r| octonion_laws(r, 100) },
        Check { id: "octonion.moufang", run: |r| moufang(r, 100) },
        Check { id: "octonion.factor_unit", run: |r| factorization(r, 30) },
        Check { id: "derivsolver.realizations", run: |_| triple_realization() },
        Check { id: "threeform.scaling", run: |r| scaling_law(r, 5) },
        Check { id: "threeform.classify", run: |r| classify_pullbacks(r, 5) },
        Check { id: "threeform.witness", run: |r| witnesses(r, 2, 60) },
        Check { id: "threeform.f_operator", run: |r| f_operator_checks(r, 10) },
        Check { id: "threeform.json", run: |_| json_roundtrip() },
        Check { id: "homogeneous.reductive", run: |r| homogeneous_data(r, 20) },
        Check { id: "homogeneous.unitary", run: |_| unitary() },
        Check { id: "homogeneous.split", run: |r| split_stabilizer(r, 10) },
        Check { id: "homogeneous.basic_triple", run: |_| basic_triples() },
        Check { id: "compactmodel.model", run: |_| compact_model() },
        Check { id: "spinor.clifford", run: |_| clifford_spin() },
        Check { id: "spinor.monomorphism", run: |_| monomorphism() },
        Check { id: "spinor.grading", run: |_| grading() },
        Check { id: "spinor.tau", run: |r| tau(r, 20) },
        Check { id: "spinor.transitivity", run: |r| spin_transitivity(r, 50) },
    ]
}

pub fn rank_nullity(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    use rand::Rng;
    for _ in 0..n {
        let (r, c) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let m = QMatrix::from_fn(r, c, |_, _| if rng.gen_bool(0.3) { q(0) } else { sample::rational(rng) });
        let ns = m.nullspace();
        ensure(m.rank() + ns.len() == c, || format!("rank-nullity fails for {r}x{c}"))?;
        ensure(ns.iter().all(|v| m.mul_vec(v).iter().all(Zero::is_zero)), || "nullspace vector not in kernel".into())?;
    }
    Ok(format!("{n} random matrices"))
}

pub fn signature_congruence(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let split = space(OctonionKind::Split).norm_matrix().clone();
    ensure(sym_signature(&split) == Ok((4, 3)), || "split norm signature is not (4,3)".into())?;
    for _ in 0..n {
        let p = sample::invertible_matrix(rng, 7);
        let m = p.transpose().mul(&split).mul(&p);
        ensure(sym_signature(&m) == Ok((4, 3)), || "signature changed under congruence".into())?;
        let (d, pp) = congruence_diagonalize(&m);
        let dm = pp.transpose().mul(&m).mul(&pp);
        ensure(dm == QMatrix::from_fn(7, 7, |i, j| if i == j { d[i].clone() } else { q(0) }), || "diagonalization".into())?;
    }
    Ok(format!("{n} congruent copies of N"))
}

pub fn cube_root() -> Outcome {
    for a in [2i64, -27, 8, 5, -3] {
        let x = BigFloat::from_int(a, 60);
        let r = real_cube_root(&x);
        let err = (r.clone() * &r * &r - &x).abs();
        let bound = BigFloat::tolerance(60) * &x.abs();
        ensure(err.cmp_value(&bound) != std::cmp::Ordering::Greater, || format!("cube root of {a}"))?;
    }
    Ok("cube roots recube within 1e-30".into())
}

pub fn g2_roots() -> Outcome {
    let c = CartanMatrix::new(vec![vec![2, -1], vec![-3, 2]]).map_err(|e| e.to_string())?;
    let sys = roots_from_cartan(&c).map_err(|e| e.to_string())?;
    let expected: Vec<Root> = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]].iter().map(|v| Root { coords: v.to_vec() }).collect();
    let mut got = sys.positive.clone();
    got.sort();
    let mut want = expected.clone();
    want.sort();
    ensure(got == want, || format!("positive roots {got:?}"))?;
    ensure(sys.roots().len() == 12, || "not 12 roots".into())?;
    let mut heights = sys.heights();
    heights.sort();
    ensure(heights == vec![1, 1, 2, 3, 4, 5], || format!("heights {heights:?}"))?;
    let w = weyl_group(&c).map_err(|e| e.to_string())?.order();
    ensure(w == 12, || format!("Weyl order {w}"))?;
    Ok("12 roots, heights 1,1,2,3,4,5, |W| = 12".into())
}

pub fn weyl_orders() -> Outcome {
    for (t, r, n) in [('A', 3, 24), ('A', 4, 120), ('B', 3, 48), ('C', 3, 48), ('D', 4, 192), ('G', 2, 12), ('F', 4, 1152)] {
        let c = cartan_of_type(t, r).map_err(|e| e.to_string())?;
        let sys = roots_from_cartan(&c).map_err(|e| e.to_string())?;
        let w = weyl_group(&c).map_err(|e| e.to_string())?.order();
        ensure(w == n, || format!("{t}{r}: |W| = {w}"))?;
        ensure(sys.positive.iter().all(Root::is_positive), || format!("{t}{r}: mixed signs"))?;
    }
    Ok("A3 A4 B3 C3 D4 G2 F4".into())
}

pub fn split_model_axioms() -> Outcome {
    let t = g2model::structure_table().map_err(|e| e.to_string())?;
    ensure(t.is_anticommutative(), || "bracket not anticommutative".into())?;
    ensure(t.jacobi_violation().is_none(), || format!("Jacobi fails at {:?}", t.jacobi_violation()))?;
    ensure(g2model::basis_matrices().iter().all(g2model::is_skew_for_norm), || "not in so(N)".into())?;
    ensure((0..14).all(|i| generated_ideal_dim(&t, i) == 14), || "a basis element generates a proper ideal".into())?;
    Ok("closed, anticommutative, Jacobi on 14^3 triples, simple".into())
}

fn signature_of(t: &AlgebraTable) -> Result<(usize, usize), String> {
    t.killing_signature().map_err(|e| e.to_string())
}

fn table_of(d: &DerivationAlgebra) -> Result<AlgebraTable, String> {
    d.structure_table().ok_or_else(|| "not closed".to_string())
}

pub fn killing_signatures() -> Outcome {
    let split = signature_of(&g2model::structure_table().map_err(|e| e.to_string())?)?;
    let der0 = signature_of(&table_of(&derivations_of_form(&omega0()))?)?;
    let compact = signature_of(&compactmodel::structure_table())?;
    let der1 = signature_of(&table_of(&derivations_of_form(&omega1()))?)?;
    let diff = |s: (usize, usize)| s.1 as i64 - s.0 as i64;
    ensure(diff(split) == 2 && diff(der0) == 2, || format!("split signatures {split:?} {der0:?}"))?;
    ensure(diff(compact) == -14 && diff(der1) == -14, || format!("compact signatures {compact:?} {der1:?}"))?;
    Ok(format!("split {split:?} (difference 2), compact {compact:?} (difference -14)"))
}

pub fn split_roots_and_weights() -> Outcome {
    let d = root_decomposition(&cartan_basis()).map_err(|e| e.to_string())?;
    ensure(d.len() == 13 && d[&RootTag::Zero].len() == 2, || "root decomposition".into())?;
    ensure(d.iter().all(|(t, v)| *t == RootTag::Zero || v.len() == 1), || "root space not 1-dimensional".into())?;
    let w = weight_decomposition().map_err(|e| e.to_string())?;
    ensure(w.len() == 7 && w.values().all(|v| v.len() == 1), || "weights of V".into())?;
    Ok("12 one-dimensional root spaces, 7 weights on V".into())
}

pub fn z3_model() -> Outcome {
    for i in 0..14 {
        for j in 0..14 {
            let (u, v) = (SplitElement::basis(i), SplitElement::basis(j));
            let z = z3_bracket(&Z3Element::from_split(&u), &Z3Element::from_split(&v));
            ensure(Ok(z.to_split()) == u.bracket(&v).map_err(|e| e.to_string()), || format!("pair ({i},{j})"))?;
        }
    }
    Ok("graded bracket matches the matrix model on 196 pairs".into())
}

pub fn octonion_laws(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    for kind in KINDS {
        for _ in 0..n {
            let (x, y) = (sample::octonion(rng, kind), sample::octonion(rng, kind));
            let xy = x.mul(&y);
            ensure(xy.norm() == x.norm() * y.norm(), || format!("{}: n(xy) ≠ n(x)n(y)", kind.name()))?;
            ensure(x.mul(&x).mul(&y) == x.mul(&xy), || format!("{}: left alternative", kind.name()))?;
            ensure(y.mul(&x).mul(&x) == y.mul(&x.mul(&x)), || format!("{}: right alternative", kind.name()))?;
            ensure(xy.conj() == y.conj().mul(&x.conj()), || format!("{}: conjugation", kind.name()))?;
        }
    }
    Ok(format!("{n} pairs in each algebra"))
}

pub fn moufang(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    for kind in KINDS {
        for _ in 0..n {
            let (x, a, y) = (sample::octonion(rng, kind), sample::octonion(rng, kind), sample::octonion(rng, kind));
            let left = x.mul(&a).mul(&x).mul(&y) == x.mul(&a.mul(&x.mul(&y)));
            let middle = x.mul(&y).mul(&a.mul(&x)) == x.mul(&y.mul(&a)).mul(&x);
            ensure(left && middle, || format!("{}: Moufang", kind.name()))?;
        }
    }
    Ok(format!("{n} triples in each algebra"))
}

pub fn factorization(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    for kind in KINDS {
        for _ in 0..n {
            let x = sample::unit_octonion(rng, kind);
            for (a, b) in [factor_unit(&x).map_err(|e| e.to_string())?, factor_unit_via_quaternion(&x).map_err(|e| e.to_string())?] {
                ensure(a.s.is_zero() && b.s.is_zero() && a.mul(&b) == x, || format!("{}: factorization of {x}", kind.name()))?;
            }
        }
    }
    Ok(format!("{n} unit octonions in each algebra, both routes"))
}

fn cross_table(kind: OctonionKind) -> AlgebraTable {
    let sp = space(kind);
    AlgebraTable::from_fn(7, |i, j| sp.basis_cross(i, j).to_vec())
}

fn restricted_octonion_derivations(kind: OctonionKind) -> DerivationAlgebra {
    let der = derivations_of_algebra(&basis_table(kind));
    DerivationAlgebra::new(7, der.basis().iter().map(|d| QMatrix::from_fn(7, 7, |r, c| d[(r + 1, c + 1)].clone())).collect())
}

pub fn triple_realization() -> Outcome {
    for kind in KINDS {
        let cross = derivations_of_algebra(&cross_table(kind));
        let form = derivations_of_form(&space(kind).three_form());
        let oct = restricted_octonion_derivations(kind);
        ensure(cross.dim() == 14 && form.dim() == 14 && oct.dim() == 14, || format!("{}: dimensions", kind.name()))?;
        ensure(cross.same_as(&form) && form.same_as(&oct), || format!("{}: subspaces differ", kind.name()))?;
        ensure(cross.is_bracket_closed(), || format!("{}: not closed", kind.name()))?;
    }
    Ok("Der(V,x) = Der(V,Ω) = Der(C)|V, dimension 14, both algebras".into())
}

fn scaling_one(omega: &ThreeForm, p: &QMatrix) -> bool {
    norm_from_form(omega, p) == norm_from_form(omega, &QMatrix::identity(7)).scale(&p.det())
}

pub fn scaling_law(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    for omega in [omega0(), omega1()] {
        for _ in 0..n {
            let p = sample::invertible_matrix(rng, 7);
            ensure(scaling_one(&omega, &p), || "n_{Ω,BP} ≠ det(P) n_{Ω,B}".into())?;
        }
    }
    Ok(format!("{n} basis changes for each of Ω0, Ω1"))
}

pub fn classify_pullbacks(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    for (omega, tag) in [(omega0(), OrbitTag::SplitOrbit), (omega1(), OrbitTag::CompactOrbit)] {
        for _ in 0..n {
            let g = sample::invertible_matrix(rng, 7);
            let pulled = omega.compose(&g);
            let got = classify_orbit(&pulled);
            ensure(got == tag, || format!("pullback classified as {}", got.name()))?;
        }
    }
    ensure(classify_orbit(&KForm::monomial(7, &[1, 2, 3])) == OrbitTag::NotGeneric, || "e123".into())?;
    Ok(format!("{n} pullbacks of each representative"))
}

pub fn witnesses(rng: &mut ChaCha8Rng, n: usize, digits: u32) -> Outcome {
    let bound = BigFloat::from_rational(&Rational::new(1.into(), num_bigint::BigInt::from(10).pow(30)), digits);
    let mut worst = BigFloat::zero_with(digits);
    for i in 0..n {
        let omega = if i % 2 == 0 { omega0() } else { omega1() };
        let g = sample::invertible_matrix(rng, 7);
        let w = orbit_witness(&omega.compose(&g), digits).map_err(|e| e.to_string())?;
        ensure(w.residual.cmp_value(&bound) != std::cmp::Ordering::Greater, || format!("residual {}", w.residual.to_sci(3)))?;
        if w.residual.cmp_value(&worst) == std::cmp::Ordering::Greater {
            worst = w.residual;
        }
    }
    Ok(format!("{n} witnesses, worst residual {}", worst.to_sci(2)))
}

pub fn f_operator_checks(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let om = omega1();
    let spectrum = f_operator_spectrum(&om);
    ensure(spectrum.plus_one.len() == 14 && spectrum.minus_two.len() == 7, || "eigenspace dimensions".into())?;
    let gc: Vec<Vec<Rational>> = derivations_of_form(&om).basis().iter().map(|d| bivector_coords(&skew_to_bivector(d))).collect();
    ensure(same_span(&spectrum.plus_one, &gc), || "+1 eigenspace ≠ g_c".into())?;
    let m: Vec<Vec<Rational>> = (0..7).map(|i| bivector_coords(&om.interior(&unit_vec(7, i)))).collect();
    ensure(same_span(&spectrum.minus_two, &m), || "-2 eigenspace ≠ {u⌟Ω1}".into())?;
    let vol = KForm::volume(7);
    let wedge = |a: &KForm<Rational>, b: &KForm<Rational>| a.wedge(b).map_err(|e| e.to_string());
    ensure(wedge(&om, &lambda())? == vol.scale(&q(-7)), || "Ω1∧Λ ≠ -7 vol".into())?;
    // Ω1∧α∧β = ⟨Fα,β⟩ vol, F = -2 on u⌟Ω1 and ⟨u⌟Ω1,v⌟Ω1⟩ = 3n(u,v) force -6
    let sp = space(OctonionKind::Division);
    for _ in 0..n {
        let (u, v) = (sample::vector(rng, 7), sample::vector(rng, 7));
        let (a, b) = (om.interior(&u), om.interior(&v));
        ensure(dot(&bivector_coords(&a), &bivector_coords(&b)) == q(3) * sp.n(&u, &v), || "⟨u⌟Ω1,v⌟Ω1⟩ ≠ 3n(u,v)".into())?;
        let lhs = wedge(&wedge(&om, &a)?, &b)?;
        ensure(lhs == vol.scale(&(q(-6) * sp.n(&u, &v))), || "Ω1∧(u⌟Ω1)∧(v⌟Ω1) ≠ -6n(u,v) vol".into())?;
    }
    Ok(format!("spectrum 14 x (+1), 7 x (-2), Ω1∧Λ = -7 vol; {n} pairs give -6n(u,v) vol"))
}

pub fn json_roundtrip() -> Outcome {
    for omega in [omega0(), omega1(), KForm::monomial(7, &[1, 2, 3])] {
        let back = KForm::from_json_str(&omega.to_json().to_string()).map_err(|e| e.to_string())?;
        ensure(back == omega, || "roundtrip".into())?;
    }
    ensure(KForm::from_json_str("{\"dim\":7}").is_err(), || "accepted malformed JSON".into())?;
    Ok("Ω0, Ω1, e123".into())
}

pub fn homogeneous_data(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let kind = OctonionKind::Division;
    let sp = space(kind);
    let x = unit_vec(7, 6);
    let gc = derivations_of_form(&omega1());
    let r = reductive_decomposition(&gc, &x, kind).map_err(|e| e.to_string())?;
    ensure(r.h.dim() == 8 && r.m.len() == 6, || format!("dims {} + {}", r.h.dim(), r.m.len()))?;
    ensure(r.is_invariant(), || "[h,m] ⊄ m".into())?;
    ensure(r.is_killing_orthogonal(), || "h, m not κ-orthogonal".into())?;
    let alpha = r.killing_constant().ok_or("κ(φ_Y,φ_Z) is not a multiple of n")?;
    ensure(alpha > q(0), || "α ≤ 0".into())?;
    let j = |y: &[Rational]| sp.cross(&x, y);
    for _ in 0..n {
        let ys: Vec<Vec<Rational>> = (0..3).map(|_| sample::orthogonal_vector(rng, kind, &x)).collect();
        let (y1, y2, y3) = (&ys[0], &ys[1], &ys[2]);
        let b12 = r.bracket_m(y1, y2);
        ensure(b12 == j(&sp.cross(y1, y2)).iter().map(|c| c * q(2)).collect::<Vec<_>>(), || "[Y1,Y2]_m ≠ 2J(Y1×Y2)".into())?;
        let skew = sp.n(&b12, y3) + sp.n(y2, &r.bracket_m(y1, y3));
        ensure(skew.is_zero(), || "m-bracket not skew for n".into())?;
        let y12 = sp.cross(y1, y2);
        ensure(sp.n(&j(&y12), y3) == sp.n(&x, &sp.cross(&y12, y3)), || "n(J(Y1×Y2),Y3) ≠ n(X,(Y1×Y2)×Y3)".into())?;
    }
    Ok(format!("8 + 6, κ(φY,φZ) = -{alpha} n(Y,Z), {n} random triples"))
}

pub fn unitary() -> Outcome {
    let gc = derivations_of_form(&omega1());
    let u = unitary_stabilizer_data(&gc, &unit_vec(7, 6)).map_err(|e| e.to_string())?;
    ensure(u.j_squared_is_minus_one() && u.j_is_skew(), || "J".into())?;
    ensure(u.h.dim() == 8 && u.stabilizer_is_su3(), || "stabilizer is not su(3)".into())?;
    Ok("stabilizer of e7 is su(W,σ)".into())
}

pub fn split_stabilizer(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    use rand::Rng;
    let g = derivations_of_form(&omega0());
    let s = split_stabilizer_data(&g, &unit_vec(7, 0)).map_err(|e| e.to_string())?;
    ensure(s.h.dim() == 8, || "stabilizer dimension".into())?;
    ensure(s.totally_isotropic() && s.dual_pairing() && s.product_rule(), || "W± structure".into())?;
    ensure(s.traces_on_w_plus().is_some_and(|t| t.iter().all(Zero::is_zero)), || "trace on W+".into())?;
    let base: Vec<Rational> = [0, 1, 0, 0, 1, 0, 0].iter().map(|&c| Rational::new(c.into(), 2.into())).collect();
    for _ in 0..n {
        // u·v = 1/4 makes n(0, u, v) = -1
        let u: Vec<Rational> = (0..3).map(|_| q(rng.gen_range(-4..=4))).collect();
        if u.iter().all(Zero::is_zero) {
            continue;
        }
        let v0 = sample::vector(rng, 3);
        let uu: Rational = u.iter().map(|c| c * c).sum();
        let uv: Rational = u.iter().zip(&v0).map(|(a, b)| a * b).sum();
        let t = (Rational::new(1.into(), 4.into()) - uv) / uu;
        let v: Vec<Rational> = v0.iter().zip(&u).map(|(a, b)| a + &(&t * b)).collect();
        let mut y = vec![q(0)];
        y.extend(u);
        y.extend(v);
        let frame = s.transitivity_frame(&y).map_err(|e| e.to_string())?;
        ensure(preserves(&frame, &omega0()).unwrap_or(false), || "frame does not fix Ω0".into())?;
        ensure(frame.mul_vec(&base) == y, || "frame does not reach Y".into())?;
    }
    Ok(format!("W± isotropic and dual; {n} transitivity frames"))
}

pub fn basic_triples() -> Outcome {
    let e = |i: usize| unit_vec::<Rational>(7, i - 1);
    for (a, b, c) in [(1, 2, 7), (2, 7, 1), (7, 1, 2), (2, 3, 5), (4, 6, 1)] {
        let g = basic_triple_to_g2(&e(a), &e(b), &e(c)).map_err(|err| format!("({a},{b},{c}): {err}"))?;
        ensure(preserves(&g, &omega1()).unwrap_or(false), || format!("({a},{b},{c}) not in G2"))?;
        ensure(g.mul_vec(&e(1)) == e(a) && g.mul_vec(&e(2)) == e(b) && g.mul_vec(&e(7)) == e(c), || "images".into())?;
    }
    ensure(basic_triple_to_g2(&e(1), &e(2), &e(3)).is_err(), || "accepted a non-basic triple".into())?;
    Ok("5 basic triples".into())
}

pub fn compact_model() -> Outcome {
    let t = compactmodel::structure_table();
    ensure(t.is_anticommutative() && t.jacobi_violation().is_none(), || "Jacobi over Q(i)".into())?;
    let forms = compactmodel::model_forms();
    ensure(classify_orbit(&forms.omega) == OrbitTag::CompactOrbit, || "model Ω is not compact".into())?;
    ensure(compactmodel::model_algebra().same_as(&derivations_of_form(&forms.omega)), || "L ≠ Der(Ω)".into())?;
    let gc = spin_g2_equations(OctonionKind::Division).restricted;
    let r = compactmodel::psi_transport(&gc).map_err(|e| e.to_string())?;
    Ok(format!("Jacobi on 14^3, compact Ω, transport on {} pairs", r.action_pairs))
}

pub fn clifford_spin() -> Outcome {
    ensure(spinor::even_image_rank() == 64, || "even image rank".into())?;
    let table: [[(usize, usize, i64); 4]; 7] = [
        [(1, 8, -1), (2, 3, 1), (4, 7, 1), (5, 6, -1)],
        [(1, 3, -1), (2, 8, -1), (4, 6, 1), (5, 7, 1)],
        [(1, 2, 1), (3, 8, -1), (4, 5, -1), (6, 7, 1)],
        [(1, 7, -1), (2, 6, -1), (3, 5, 1), (4, 8, -1)],
        [(1, 6, 1), (2, 7, -1), (3, 4, -1), (5, 8, -1)],
        [(1, 5, -1), (2, 4, 1), (3, 7, -1), (6, 8, -1)],
        [(1, 4, 1), (2, 5, 1), (3, 6, 1), (7, 8, -1)],
    ];
    for (i, row) in table.iter().enumerate() {
        let want: Vec<_> = row.iter().map(|&(a, b, c)| ((a, b), q(c))).collect();
        ensure(spinor::kappa_expansion(i + 1) == want, || format!("κ{}", i + 1))?;
    }
    let s = spin_g2_equations(OctonionKind::Division);
    ensure(s.dim() == 14 && s.restricted.is_bracket_closed(), || "stabilizer".into())?;
    ensure(s.restricted.same_as(&s.octonion_derivations()), || "stabilizer ≠ Der(O)".into())?;
    ensure(s.restriction_is_twice_skew(), || "restriction factor".into())?;
    let cl = Clifford::definite();
    let center: Vec<Vec<Rational>> = cl.center_basis().iter().map(CliffordElement::to_dense).collect();
    let want = [CliffordElement::scalar(q(1)), CliffordElement::monomial(0x7f, q(1))].map(|x| x.to_dense());
    ensure(same_span(&center, &want), || "center".into())?;
    Ok("rank 64, seven κ rows, dim 14 = Der(O), center <1, e1..e7>".into())
}

pub fn monomorphism() -> Outcome {
    let cl = Clifford::definite();
    ensure(cl.is_so_embedding(&Rational::new(1.into(), 4.into())), || "1/4 [u,v] is not a homomorphism".into())?;
    Ok("φ_{u,v} ↦ 1/4 [u,v] is a Lie monomorphism".into())
}

pub fn grading() -> Outcome {
    let g = spinor::z23_grading();
    ensure(g.is_consistent(), || "degrees".into())?;
    ensure(g.w[3] == vec![(1, 7), (2, 6), (3, 5)], || "W4".into())?;
    let all: Vec<Vec<Rational>> = g.w_prime.iter().flatten().map(|b| b.0.clone()).collect();
    let gc: Vec<Vec<Rational>> = spin_g2_equations(OctonionKind::Division).solutions.into_iter().map(|b| b.0).collect();
    ensure(g.w_prime.iter().all(|w| w.len() == 2) && same_span(&all, &gc), || "W' pieces".into())?;
    Ok("seven planes W'_i spanning g_c".into())
}

pub fn tau(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let cl = Clifford::definite();
    let kind = OctonionKind::Division;
    for _ in 0..n {
        let (a, x) = (sample::nonisotropic_vector(rng, kind), sample::vector(rng, 7));
        let r = spinor::SpinElement::new(kind, false, vec![a.clone(), a.iter().map(|c| c / space(kind).norm(&a)).collect()])
            .map_err(|e| e.to_string())?;
        ensure(r.tau() == QMatrix::identity(7), || "τ(±1) ≠ id".into())?;
        let refl = cl.twisted_conjugation(&a, &x).map_err(|e| e.to_string())?;
        let sp = space(kind);
        let c = q(2) * sp.n(&a, &x) / sp.norm(&a);
        ensure(refl == x.iter().zip(&a).map(|(xi, ai)| xi - &(&c * ai)).collect::<Vec<_>>(), || "−axa⁻¹ is not the reflection".into())?;
        let g = spinor::factor_unit_spin(&sample::unit_octonion(rng, kind)).map_err(|e| e.to_string())?;
        let t = g.tau();
        ensure(t.det() == q(1) && t.transpose().mul(&t) == QMatrix::identity(7), || "τ(g) not in SO(7)".into())?;
    }
    Ok(format!("{n} reflections and spin elements"))
}

pub fn spin_transitivity(rng: &mut ChaCha8Rng, n: usize) -> Outcome {
    let kind = OctonionKind::Division;
    let one = Octonion::one(kind);
    for _ in 0..n {
        let x = sample::unit_octonion(rng, kind);
        let g = spinor::factor_unit_spin(&x).map_err(|e| e.to_string())?;
        ensure(spin_action(&g, &one) == x, || format!("g·1 ≠ {x}"))?;
    }
    Ok(format!("{n} unit octonions reached from 1"))
}

/// Exact Gram check of the classification representatives.
pub fn representatives() -> Outcome {
    let c0 = classify(&omega0());
    let c1 = classify(&omega1());
    ensure(c0.tag == OrbitTag::SplitOrbit && c1.tag == OrbitTag::CompactOrbit, || "representatives".into())?;
    Ok(format!("Ω0 {:?}, Ω1 {:?}", c0.signature, c1.signature))
}
