//! G2 three ways: derivations of the cross product, of the 3-form and of the
//! octonion algebra itself.

use g2core::derivsolver::{derivations_of_algebra, derivations_of_form, AlgebraTable};
use g2core::octonion::{basis_table, space, OctonionKind};

fn main() {
    for kind in OctonionKind::ALL {
        let sp = space(kind);
        let cross = derivations_of_algebra(&AlgebraTable::from_fn(7, |i, j| sp.basis_cross(i, j).to_vec()));
        let form = derivations_of_form(&sp.three_form());
        let oct = derivations_of_algebra(&basis_table(kind));
        println!(
            "{}: Der(V,x) {} Der(V,Ω) {} Der(C) {} equal {}",
            kind.name(),
            cross.dim(),
            form.dim(),
            oct.dim(),
            cross.same_as(&form)
        );
    }
}
