//! Hyperkähler deductions: the Hilbert square pipeline, Calabi-Yau versus
//! hyperkähler and Ricci-flat decomposition shapes.

use charclass::catalog::build_builtin;
use charclass::deduce::{
    bb_decompositions, cy_hk_distinction, hk_elimination_system, hk_partner_pipeline,
};

fn main() -> charclass::Result<()> {
    let x = build_builtin("hilb2_k3")?;
    for r in hk_elimination_system(&x)?.solve().relations() {
        println!("eliminated: {r}");
    }
    println!("{}", hk_partner_pipeline(&x)?.to_markdown());

    for n in 2..=4 {
        println!("n = {n}: {}", cy_hk_distinction(n)?.verdict.summary);
    }

    for (dim, chi) in [(4, 3), (6, 0), (6, 4), (8, 5)] {
        let shapes: Vec<String> = bb_decompositions(dim, chi)
            .iter()
            .map(|s| s.to_string())
            .collect();
        println!(
            "dim {dim}, chi {chi}: {}",
            if shapes.is_empty() {
                "none".into()
            } else {
                shapes.join(", ")
            }
        );
    }
    Ok(())
}
