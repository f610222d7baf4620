//! su(3) + C^3 with its bracket, compared against Der(O).

use g2core::compactmodel::{model_algebra, model_forms, psi_transport, structure_table};
use g2core::derivsolver::derivations_of_form;
use g2core::spinor::spin_g2_equations;
use g2core::octonion::OctonionKind;
use g2core::threeform::classify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = structure_table();
    println!("Jacobi holds: {}", t.jacobi_violation().is_none());
    println!("Killing signature: {:?}", t.killing_signature()?);
    let forms = model_forms();
    println!("model 3-form: {}", classify(&forms.omega).tag.name());
    println!("L = Der(Ω): {}", model_algebra().same_as(&derivations_of_form(&forms.omega)));
    let r = psi_transport(&spin_g2_equations(OctonionKind::Division).restricted)?;
    println!("transport verified on {} action pairs and {} bracket pairs", r.action_pairs, r.bracket_pairs);
    Ok(())
}
