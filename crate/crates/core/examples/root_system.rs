//! Rebuild the G2 root system from its Cartan matrix.

use g2core::rootsys::{parse_type, roots_from_cartan, weyl_order};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = parse_type("G2")?;
    let sys = roots_from_cartan(&c)?;
    for r in &sys.positive {
        println!("{r}  height {}", r.height());
    }
    println!("{} roots, |W| = {}", sys.roots().len(), weyl_order(&c)?);
    Ok(())
}
