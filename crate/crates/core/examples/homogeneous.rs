//! S6 as G2/SU(3): the reductive split g = h + m at X = e7.

use g2core::derivsolver::derivations_of_form;
use g2core::numerics::{unit_vec, Rational};
use g2core::octonion::OctonionKind;
use g2core::homogeneous::{reductive_decomposition, unitary_stabilizer_data};
use g2core::threeform::omega1;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gc = derivations_of_form(&omega1());
    let x: Vec<Rational> = unit_vec(7, 6);
    let r = reductive_decomposition(&gc, &x, OctonionKind::Division)?;
    println!("h: {}, m: {}", r.h.dim(), r.m.len());
    println!("[h,m] in m: {}, naturally reductive: {}", r.is_invariant(), r.is_naturally_reductive());
    if let Some(alpha) = r.killing_constant() {
        println!("κ(φY, φZ) = -{alpha} n(Y,Z)");
    }
    println!("stabilizer is su(3): {}", unitary_stabilizer_data(&gc, &x)?.stabilizer_is_su3());
    Ok(())
}
