//! Spin(7) acting on the octonions: reach a unit octonion from 1.

use g2core::numerics::q;
use g2core::octonion::{Octonion, OctonionKind};
use g2core::spinor::{even_image_rank, factor_unit_spin, spin_action, spin_g2_equations};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("even Clifford image rank: {}", even_image_rank());
    let s = spin_g2_equations(OctonionKind::Division);
    println!("stabilizer of 1 in spin(7): dim {}", s.dim());
    let half = q(1) / q(2);
    let x = Octonion::from_coords(OctonionKind::Division, &[half.clone(), half.clone(), q(0), half.clone(), q(0), q(0), -half, q(0)]);
    let g = factor_unit_spin(&x)?;
    println!("g·1 = {}", spin_action(&g, &Octonion::one(OctonionKind::Division)));
    Ok(())
}
