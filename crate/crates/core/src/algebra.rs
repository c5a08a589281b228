//! The graded-ring interface shared by every cohomology model.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::exact::{GradedClass, Poly, PolyRing, Rational};

/// A commutative graded Q-algebra truncated above `max_degree`.
pub trait GradedAlgebra {
    type Elem: Clone + Debug + PartialEq;

    fn max_degree(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Homogeneous component of the given degree.
    fn part(&self, a: &Self::Elem, degree: usize) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(b, &-Rational::one()))
    }

    fn constant(&self, c: &Rational) -> Self::Elem {
        self.scale(&self.one(), c)
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Drops all components above `degree`.
    fn truncate_to(&self, a: &Self::Elem, degree: usize) -> Self::Elem {
        let parts: Vec<_> = (0..=degree.min(self.max_degree()))
            .map(|k| self.part(a, k))
            .collect();
        self.sum(parts.iter())
    }

    /// Components `[a_0, a_1, .., a_max]`.
    fn components(&self, a: &Self::Elem) -> Vec<Self::Elem> {
        (0..=self.max_degree()).map(|k| self.part(a, k)).collect()
    }
}

/// Substitutes ring elements for the variables of `poly`.
pub fn substitute<A: GradedAlgebra>(
    ring: &PolyRing,
    poly: &Poly,
    alg: &A,
    values: &[A::Elem],
) -> A::Elem {
    assert_eq!(values.len(), ring.num_vars());
    let max_exp: u32 = poly
        .terms()
        .flat_map(|(m, _)| m.iter().copied())
        .max()
        .unwrap_or(0);
    let powers: Vec<Vec<A::Elem>> = values
        .iter()
        .map(|v| {
            let mut ps = vec![alg.one()];
            for _ in 0..max_exp {
                let next = alg.mul(ps.last().expect("nonempty"), v);
                ps.push(next);
            }
            ps
        })
        .collect();
    let mut acc = alg.zero();
    for (m, c) in poly.terms() {
        let mut t = alg.constant(c);
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                t = alg.mul(&t, &powers[i][e as usize]);
            }
        }
        acc = alg.add(&acc, &t);
    }
    acc
}

/// Inverse of a class with constant term 1, as a finite geometric series.
pub fn invert_unit<A: GradedAlgebra>(alg: &A, a: &A::Elem) -> crate::error::Result<A::Elem> {
    if alg.part(a, 0) != alg.one() {
        return Err(crate::error::Error::NonUnit(format!(
            "{:?}",
            alg.part(a, 0)
        )));
    }
    let x = alg.sub(a, &alg.one());
    let neg = alg.scale(&x, &-Rational::one());
    let mut acc = alg.one();
    let mut term = alg.one();
    for _ in 0..alg.max_degree() {
        term = alg.mul(&term, &neg);
        acc = alg.add(&acc, &term);
    }
    Ok(acc)
}

/// `Q[h]/(h^{n+1})` as a [`GradedAlgebra`] over [`GradedClass`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Univariate {
    pub truncation: usize,
}

impl GradedAlgebra for Univariate {
    type Elem = GradedClass;

    fn max_degree(&self) -> usize {
        self.truncation
    }
    fn zero(&self) -> GradedClass {
        GradedClass::zero(self.truncation)
    }
    fn one(&self) -> GradedClass {
        GradedClass::one(self.truncation)
    }
    fn add(&self, a: &GradedClass, b: &GradedClass) -> GradedClass {
        a.add(b).expect("classes share the ring truncation")
    }
    fn scale(&self, a: &GradedClass, c: &Rational) -> GradedClass {
        a.scale(c)
    }
    fn mul(&self, a: &GradedClass, b: &GradedClass) -> GradedClass {
        a.multiply(b).expect("classes share the ring truncation")
    }
    fn part(&self, a: &GradedClass, degree: usize) -> GradedClass {
        a.part(degree)
    }
    fn is_zero(&self, a: &GradedClass) -> bool {
        a.is_zero()
    }
}

impl GradedAlgebra for PolyRing {
    type Elem = Poly;

    fn max_degree(&self) -> usize {
        self.max_weight()
    }
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        PolyRing::constant(self, Rational::one())
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn scale(&self, a: &Poly, c: &Rational) -> Poly {
        a.scale(c)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        PolyRing::mul(self, a, b)
    }
    fn part(&self, a: &Poly, degree: usize) -> Poly {
        PolyRing::part(self, a, degree)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero() || a.terms().all(|(_, c)| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn substitution_into_univariate() {
        let r = PolyRing::chern("c", 2, 4);
        // c1^2 + c2
        let p = r.mul(&r.var(0), &r.var(0)).add(&r.var(1));
        let alg = Univariate { truncation: 4 };
        let c1 = GradedClass::from_ints(4, &[0, 3]);
        let c2 = GradedClass::from_ints(4, &[0, 0, 6]);
        let v = substitute(&r, &p, &alg, &[c1, c2]);
        assert_eq!(v, GradedClass::from_ints(4, &[0, 0, 15]));
        assert_eq!(
            alg.truncate_to(&GradedClass::from_ints(4, &[1, 2, 3]), 1),
            GradedClass::from_ints(4, &[1, 2])
        );
        assert!(alg.is_zero(&alg.constant(&int(0))));
    }
}
