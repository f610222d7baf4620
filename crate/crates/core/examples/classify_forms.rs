//! Classify a few 3-forms and build a witness frame for one of them.

use g2core::numerics::{q, QMatrix};
use g2core::threeform::{classify, omega0, omega1, orbit_witness, KForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = QMatrix::from_fn(7, 7, |i, j| if i == j { q(2) } else if j == i + 1 { q(1) } else { q(0) });
    let forms = [
        ("Ω0", omega0()),
        ("Ω1", omega1()),
        ("Ω1 pulled back", omega1().compose(&p)),
        ("3Ω0", omega0().scale(&q(3))),
        ("e123", KForm::monomial(7, &[1, 2, 3])),
    ];
    for (name, f) in &forms {
        let c = classify(f);
        println!("{name:>15}: {} {:?}", c.tag.name(), c.signature);
    }
    let w = orbit_witness(&forms[3].1, 60)?;
    println!("witness for 3Ω0: exact {}, residual {}", w.exact, w.residual.to_sci(3));
    Ok(())
}
