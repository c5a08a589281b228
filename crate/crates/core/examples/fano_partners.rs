//! Deductions about hypothetical partners of Fano fourfolds.

use charclass::catalog::build_builtin;
use charclass::deduce::{
    cubic_partner_solve, divisor_c3_compare, fano_index_match, general_type_index, partner_model,
    replay, ricci_flat_exclusion, Family,
};

fn main() -> charclass::Result<()> {
    let cubic = build_builtin("cubic4")?;
    let dp5 = build_builtin("dp5")?;
    let traces = vec![
        (ricci_flat_exclusion(&cubic)?, cubic.clone()),
        (fano_index_match(&dp5)?, dp5.clone()),
        (general_type_index(&cubic)?, cubic.clone()),
        (cubic_partner_solve(&cubic)?, cubic.clone()),
        (
            divisor_c3_compare(Family::Dp5, 2)?,
            partner_model(Family::Dp5)?.0,
        ),
    ];
    for (t, record) in &traces {
        print!("{}", t.to_markdown());
        match replay(t, Some(record)) {
            Ok(n) => println!("replayed {n} quantities\n"),
            Err(errs) => println!("replay failed: {errs:?}\n"),
        }
    }
    Ok(())
}
