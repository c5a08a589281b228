//! Todd and L polynomials, Riemann-Roch on projective space and the
//! signature of a few fourfolds.

use charclass::catalog::build_builtin;
use charclass::chern::projective_space;
use charclass::exact::{binomial, int};
use charclass::genus::{hrr_chi, l_genus_signature, l_polynomials, todd_polynomials};

fn main() -> charclass::Result<()> {
    let td = todd_polynomials(4)?;
    let l = l_polynomials(2)?;
    for k in 0..=4 {
        println!("Td_{k} = {}", td.format(k));
    }
    for k in 0..=2 {
        println!("L_{k} = {}", l.format(k));
    }

    let p3 = projective_space(3)?;
    for k in -5i64..=3 {
        let chi = hrr_chi(&p3, k)?;
        let expect = if k >= 0 {
            binomial(k as u64 + 3, 3)
        } else {
            int(0)
        };
        let flag = if k >= -3 && chi != expect {
            "  (!)"
        } else {
            ""
        };
        println!("chi(P^3, O({k})) = {chi}{flag}");
    }

    for name in ["pn(2)", "k3", "cubic4", "hilb2_k3"] {
        let x = build_builtin(name)?;
        println!("signature {name} = {}", l_genus_signature(&x.model)?);
    }
    Ok(())
}
