//! Solves a small underdetermined system over Q and prints what survives
//! after eliminating everything but two unknowns.

use charclass::exact::{frac, int, LinearSystem};

fn main() -> charclass::Result<()> {
    let mut sys = LinearSystem::new(["x", "y", "z", "w"]).with_targets(["z", "w"])?;
    sys.add_equation(&[("x", int(1)), ("y", int(2)), ("z", int(-1))], int(3))?;
    sys.add_equation(&[("x", int(2)), ("y", int(4)), ("w", frac(1, 2))], int(5))?;
    sys.add_equation(&[("x", int(1)), ("y", int(-1))], int(0))?;

    let sol = sys.solve();
    for v in ["x", "y", "z", "w"] {
        match sol.pivot(v) {
            Some(p) => println!("{v} = {} + {:?}", p.constant, p.terms),
            None => println!("{v} is free"),
        }
    }
    for r in sol.relations() {
        println!("relation among targets: {r}");
    }
    Ok(())
}
