//! Todd and L genera, the Chern character, Riemann-Roch and the
//! signature theorem.

use std::sync::OnceLock;

use crate::algebra::{substitute, GradedAlgebra};
use crate::chern::{pontrjagin_classes, BundleSpec, ManifoldModel, RingClass};
use crate::error::{Error, Result};
use crate::exact::{factorial, int, is_integer, Poly, PolyRing, Rational};
use crate::symmetric::{bernoulli, multiplicative_sequence, power_sums};

const MAX_DIM: usize = 6;

/// Genus polynomials `K_0..=K_n` in variables of weights `1..=n`.
#[derive(Clone, Debug)]
pub struct GenusPolynomials {
    pub ring: PolyRing,
    pub polys: Vec<Poly>,
}

impl GenusPolynomials {
    pub fn degree(&self, k: usize) -> &Poly {
        &self.polys[k]
    }

    pub fn format(&self, k: usize) -> String {
        self.ring.format(&self.polys[k])
    }

    /// The same polynomials in a ring truncated at `n`.
    fn restrict(&self, n: usize) -> GenusPolynomials {
        let names = self.ring.names()[..n].to_vec();
        let ring = PolyRing::new(names, (1..=n).collect(), n);
        let polys = self.polys[..=n]
            .iter()
            .map(|p| {
                let mut q = Poly::zero();
                for (m, c) in p.terms() {
                    q.add_term(m[..n].to_vec(), c.clone());
                }
                q
            })
            .collect();
        GenusPolynomials { ring, polys }
    }
}

fn todd_table() -> &'static GenusPolynomials {
    static TABLE: OnceLock<GenusPolynomials> = OnceLock::new();
    TABLE.get_or_init(|| {
        // x / (1 - e^{-x}) = Σ (-1)^k B_k x^k / k!
        let b = bernoulli(MAX_DIM);
        let q: Vec<Rational> = (0..=MAX_DIM)
            .map(|k| {
                let s = if k % 2 == 1 { int(-1) } else { int(1) };
                s * &b[k] / factorial(k as u64)
            })
            .collect();
        let ring = PolyRing::chern("c", MAX_DIM, MAX_DIM);
        let polys = multiplicative_sequence(&ring, &q, MAX_DIM);
        GenusPolynomials { ring, polys }
    })
}

fn l_table() -> &'static GenusPolynomials {
    static TABLE: OnceLock<GenusPolynomials> = OnceLock::new();
    TABLE.get_or_init(|| {
        // √y / tanh √y = Σ 2^{2k} B_{2k} y^k / (2k)!
        let n = MAX_DIM / 2;
        let b = bernoulli(2 * n);
        let q: Vec<Rational> = (0..=n)
            .map(|k| int(4).pow(k as i32) * &b[2 * k] / factorial(2 * k as u64))
            .collect();
        let ring = PolyRing::chern("p", n, n);
        let polys = multiplicative_sequence(&ring, &q, n);
        GenusPolynomials { ring, polys }
    })
}

/// Todd polynomials `td_0..=td_n` in `c1..cn`, `n ≤ 6`.
pub fn todd_polynomials(n: usize) -> Result<GenusPolynomials> {
    if n > MAX_DIM {
        return Err(Error::Unsupported(format!(
            "Todd polynomials beyond degree {MAX_DIM}"
        )));
    }
    Ok(todd_table().restrict(n))
}

/// Hirzebruch L polynomials `L_0..=L_n` in `p1..pn`, `n ≤ 3`.
pub fn l_polynomials(n: usize) -> Result<GenusPolynomials> {
    if n > MAX_DIM / 2 {
        return Err(Error::Unsupported(format!(
            "L polynomials beyond degree {}",
            MAX_DIM / 2
        )));
    }
    Ok(l_table().restrict(n))
}

/// Total Todd class of the tangent bundle.
pub fn todd_class(m: &ManifoldModel) -> Result<RingClass> {
    let n = m.dim();
    let td = todd_polynomials(n)?;
    let values: Vec<RingClass> = (1..=n).map(|i| m.chern_class(i)).collect();
    let parts: Vec<RingClass> = td
        .polys
        .iter()
        .map(|p| substitute(&td.ring, p, &m.ring, &values))
        .collect();
    Ok(m.ring.sum(parts.iter()))
}

/// `ch(E) = Σ_k p_k(E) / k!` through Newton's identities, truncated at `trunc`.
pub fn chern_character<A: GradedAlgebra>(
    alg: &A,
    e: &BundleSpec<A::Elem>,
    trunc: usize,
) -> Result<A::Elem> {
    if e.rank == 0 || e.rank > 4 {
        return Err(Error::UnsupportedRank(e.rank));
    }
    let trunc = trunc.min(alg.max_degree());
    let el: Vec<A::Elem> = (0..=e.rank).map(|i| e.chern(alg, i)).collect();
    let p = power_sums(alg, e.rank, &el, trunc);
    let parts: Vec<A::Elem> = p
        .iter()
        .enumerate()
        .map(|(k, pk)| alg.scale(&alg.part(pk, k), &(int(1) / factorial(k as u64))))
        .collect();
    Ok(alg.sum(parts.iter()))
}

/// `exp(c)` for a degree-1 class `c`.
pub fn exp_class<A: GradedAlgebra>(alg: &A, c: &A::Elem) -> A::Elem {
    let mut total = alg.one();
    let mut term = alg.one();
    for k in 1..=alg.max_degree() {
        term = alg.scale(&alg.mul(&term, c), &(int(1) / int(k as i64)));
        total = alg.add(&total, &term);
    }
    total
}

/// `χ(X, O(m h)) = ∫ ch(O(m h)) td(T_X)`.
pub fn hrr_chi(m: &ManifoldModel, line_multiple: i64) -> Result<Rational> {
    let td = todd_class(m)?;
    let integrand = if line_multiple == 0 {
        td
    } else {
        let h = m
            .line_generator()
            .ok_or_else(|| Error::MissingData(format!("{} has no line generator", m.name)))?;
        let ch = exp_class(&m.ring, &m.ring.scale(&h, &int(line_multiple)));
        m.ring.mul(&ch, &td)
    };
    let chi = m.integrate(&integrand)?;
    if !is_integer(&chi) {
        return Err(Error::InconsistentModel(format!(
            "χ(O({line_multiple}h)) = {chi} on {}",
            m.name
        )));
    }
    Ok(chi)
}

/// Signature by the L-genus, for surfaces and fourfolds.
pub fn l_genus_signature(m: &ManifoldModel) -> Result<Rational> {
    let n = m.dim();
    if n != 2 && n != 4 {
        return Err(Error::InvalidDimension(format!(
            "signature theorem evaluated only in dimensions 2 and 4, got {n}"
        )));
    }
    let l = l_polynomials(n / 2)?;
    let p = pontrjagin_classes(m)?;
    // The L-polynomials are written in p_i = (-1)^i c_2i(T ⊗ C); the
    // classes above omit the sign.
    let values: Vec<RingClass> = p[..n / 2]
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i % 2 == 0 {
                m.ring.scale(c, &int(-1))
            } else {
                c.clone()
            }
        })
        .collect();
    let top = substitute(&l.ring, &l.polys[n / 2], &m.ring, &values);
    m.integrate(&top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Univariate;
    use crate::chern::{complete_intersection, projective_space};
    use crate::exact::{frac, GradedClass};

    #[test]
    fn todd_closed_forms() {
        let td = todd_polynomials(4).unwrap();
        assert_eq!(td.format(1), "1/2 c1");
        assert_eq!(td.format(2), "1/12 c1^2 + 1/12 c2");
        assert_eq!(td.format(3), "1/24 c1 c2");
        assert_eq!(
            td.format(4),
            "-1/720 c1^4 + 1/180 c1^2 c2 + 1/720 c1 c3 + 1/240 c2^2 - 1/720 c4"
        );
        assert!(todd_polynomials(7).is_err());
    }

    #[test]
    fn l_closed_forms() {
        let l = l_polynomials(2).unwrap();
        assert_eq!(l.format(1), "1/3 p1");
        assert_eq!(l.format(2), "-1/45 p1^2 + 7/45 p2");
    }

    #[test]
    fn chi_on_cubic_and_plane() {
        let x = complete_intersection(5, &[3], 1).unwrap();
        assert_eq!(hrr_chi(&x, 0).unwrap(), int(1));
        assert_eq!(hrr_chi(&x, 1).unwrap(), int(6));
        let p2 = projective_space(2).unwrap();
        for m in -5..=5 {
            assert_eq!(hrr_chi(&p2, m).unwrap(), frac((m + 1) * (m + 2), 2));
        }
    }

    #[test]
    fn chern_character_examples() {
        let alg = Univariate { truncation: 3 };
        let triv = BundleSpec::trivial(&alg, 1);
        assert_eq!(
            chern_character(&alg, &triv, 3).unwrap(),
            GradedClass::one(3)
        );
        let line = BundleSpec::line(&alg, &GradedClass::from_ints(3, &[0, 2]));
        let ch = chern_character(&alg, &line, 3).unwrap();
        assert_eq!(ch.coeff(3), frac(8, 6));
    }

    #[test]
    fn signature_of_cubic() {
        let x = complete_intersection(5, &[3], 1).unwrap();
        assert_eq!(l_genus_signature(&x).unwrap(), int(19));
        let quintic = complete_intersection(4, &[5], 1).unwrap();
        assert!(l_genus_signature(&quintic).is_err());
        // CP^2 with its complex orientation has signature 1.
        assert_eq!(
            l_genus_signature(&projective_space(2).unwrap()).unwrap(),
            int(1)
        );
    }
}
