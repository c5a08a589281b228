//! Chern, Pontrjagin and Stiefel-Whitney data of a few complete
//! intersections.

use charclass::chern::{
    chern_numbers, complete_intersection, pontrjagin_numbers, sw_numbers, w2_vanishes,
};

fn main() -> charclass::Result<()> {
    for (n, degrees) in [(5, &[3u32][..]), (5, &[2]), (6, &[2, 2]), (4, &[5])] {
        let x = complete_intersection(n, degrees, 1)?;
        println!("{} (dim {}, index {:?})", x.name, x.dim(), x.index);
        println!("  c = {}", x.tangent_total);
        for (label, v) in chern_numbers(&x)?.rows() {
            println!("  {label} = {v}");
        }
        if x.dim() % 2 == 0 {
            for (label, v) in pontrjagin_numbers(&x)?.rows() {
                println!("  {label} = {v}");
            }
        }
        println!("  w2 = 0: {}", w2_vanishes(&x)?);
        let sw: Vec<String> = sw_numbers(&x)?
            .iter()
            .map(|(p, v)| format!("{p}:{v}"))
            .collect();
        println!("  SW numbers {}", sw.join(" "));
    }
    Ok(())
}
