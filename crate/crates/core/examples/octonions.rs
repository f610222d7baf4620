//! Products in the division and split octonions, and a unit factorization.

use g2core::numerics::q;
use g2core::octonion::{factor_unit, Octonion, OctonionKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in OctonionKind::ALL {
        let e = |i| Octonion::basis(kind, i);
        for (i, j) in [(1, 4), (2, 5), (4, 2)] {
            println!("{}: ({})({}) = {}", kind.name(), e(i), e(j), e(i).mul(&e(j)));
        }
        let x = Octonion::from_coords(kind, &[q(1), q(2), q(0), q(-1), q(3), q(0), q(1), q(2)]);
        println!("  n(x) = {}, n(x x) = {}", x.norm(), x.mul(&x).norm());
    }
    // 3/5 + 4/5 e1 has norm 1
    let x = Octonion::from_coords(OctonionKind::Division, &[q(3) / q(5), q(4) / q(5), q(0), q(0), q(0), q(0), q(0), q(0)]);
    let (a, b) = factor_unit(&x)?;
    println!("{x} = ({a})({b})");
    Ok(())
}
