//! Classical enumerative numbers from the Schubert ring.

use charclass::algebra::GradedAlgebra;
use charclass::schubert::{grassmannian_tangent_chern, lr_coefficient, Partition, SchubertRing};

fn main() -> charclass::Result<()> {
    // Lines meeting four general lines in P^3.
    let g24 = SchubertRing::new(2, 4)?;
    let s1 = g24.sigma(&[1]);
    println!("sigma_1^4 on G(2,4) = {}", g24.pow(&s1, 4).integrate());

    // Degree of G(2,5) in its Plucker embedding.
    let g25 = SchubertRing::new(2, 5)?;
    println!("deg G(2,5) = {}", g25.pow(&g25.sigma(&[1]), 6).integrate());

    let c = grassmannian_tangent_chern(2, 4)?;
    println!("c(T G(2,4)) = {c}");
    println!("euler G(2,4) = {}", c.part(4).integrate());

    let p = |v: Vec<u32>| Partition::new(v).expect("partition");
    println!(
        "c^(3,2,1)_(2,1),(2,1) = {}",
        lr_coefficient(&p(vec![2, 1]), &p(vec![2, 1]), &p(vec![3, 2, 1]))
    );
    Ok(())
}
