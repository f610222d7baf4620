//! The 14-dimensional matrix model: Jacobi, Killing signature and root spaces.

use g2core::g2model::{cartan_basis, root_decomposition, structure_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = structure_table()?;
    assert!(t.jacobi_violation().is_none());
    let (neg, pos) = t.killing_signature()?;
    println!("Killing form: {pos} positive, {neg} negative");
    for (root, space) in root_decomposition(&cartan_basis())? {
        println!("{root}: dim {}", space.len());
    }
    Ok(())
}
