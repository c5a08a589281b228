//! Hodge diamonds, the signature evaluators and intersection forms of
//! simply connected surfaces.

use charclass::catalog::build_builtin;
use charclass::hodge::{betti_euler, freedman_equivalent, surface_lattice, SignatureEvaluator};

fn main() -> charclass::Result<()> {
    let x = build_builtin("cubic4")?;
    let d = x.model.hodge.as_ref().expect("cubic has a diamond");
    println!("{d}");
    let (betti, euler) = betti_euler(d)?;
    println!(
        "betti {betti:?}, euler {euler}, chi(O) {}",
        d.chi_structure_sheaf()
    );
    for ev in [SignatureEvaluator::HodgeIndex, SignatureEvaluator::Legacy] {
        println!("signature via {}: {}", ev.name(), ev.eval(d));
    }
    if let Some(q) = x.annotations.quoted_signature {
        println!("quoted: {q}");
    }

    let k3 = surface_lattice(0, 24, true)?;
    let w = surface_lattice(0, 24, true)?;
    let odd = surface_lattice(1, 11, false)?;
    println!(
        "K3 {k3}, W {w}, same form: {}",
        freedman_equivalent(&k3, &w)
    );
    println!("c1^2 = 1, c2 = 11: {odd}");
    Ok(())
}
