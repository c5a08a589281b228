use crate::algebra::{substitute, GradedAlgebra};
use crate::error::{Error, Result};
use crate::exact::int;
use crate::symmetric::tensor_polynomials;

/// A complex vector bundle, known through its total Chern class.
#[derive(Clone, Debug, PartialEq)]
pub struct BundleSpec<E> {
    pub rank: usize,
    pub total: E,
}

impl<E: Clone + std::fmt::Debug + PartialEq> BundleSpec<E> {
    /// Checks that the constant term is 1 and truncates to the ring.
    pub fn new<A: GradedAlgebra<Elem = E>>(alg: &A, rank: usize, total: E) -> Result<Self> {
        if alg.part(&total, 0) != alg.one() {
            return Err(Error::NonUnit(format!("{:?}", alg.part(&total, 0))));
        }
        Ok(BundleSpec {
            rank,
            total: alg.truncate_to(&total, alg.max_degree()),
        })
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line<A: GradedAlgebra<Elem = E>>(alg: &A, c1: &E) -> Self {
        BundleSpec {
            rank: 1,
            total: alg.add(&alg.one(), &alg.part(c1, 1)),
        }
    }

    pub fn trivial<A: GradedAlgebra<Elem = E>>(alg: &A, rank: usize) -> Self {
        BundleSpec {
            rank,
            total: alg.one(),
        }
    }

    /// `c_i`, zero past the rank.
    pub fn chern<A: GradedAlgebra<Elem = E>>(&self, alg: &A, i: usize) -> E {
        if i > self.rank {
            return alg.zero();
        }
        alg.part(&self.total, i)
    }
}

/// `c_i(E^∨) = (-1)^i c_i(E)`.
pub fn dual_bundle_class<A: GradedAlgebra>(
    alg: &A,
    e: &BundleSpec<A::Elem>,
) -> BundleSpec<A::Elem> {
    let parts: Vec<A::Elem> = (0..=alg.max_degree())
        .map(|i| {
            let p = alg.part(&e.total, i);
            if i % 2 == 1 {
                alg.scale(&p, &int(-1))
            } else {
                p
            }
        })
        .collect();
    BundleSpec {
        rank: e.rank,
        total: alg.sum(parts.iter()),
    }
}

/// Whitney sum: `c(A ⊕ B) = c(A) c(B)`.
pub fn direct_sum<A: GradedAlgebra>(
    alg: &A,
    a: &BundleSpec<A::Elem>,
    b: &BundleSpec<A::Elem>,
) -> BundleSpec<A::Elem> {
    BundleSpec {
        rank: a.rank + b.rank,
        total: alg.mul(&a.total, &b.total),
    }
}

/// Total Chern class of `A ⊗ B` by the splitting principle, truncated at `trunc`.
pub fn tensor_product_class<A: GradedAlgebra>(
    alg: &A,
    a: &BundleSpec<A::Elem>,
    b: &BundleSpec<A::Elem>,
    trunc: usize,
) -> Result<BundleSpec<A::Elem>> {
    for r in [a.rank, b.rank] {
        if r == 0 || r > 4 {
            return Err(Error::UnsupportedRank(r));
        }
    }
    let trunc = trunc.min(alg.max_degree());
    let (ring, e) = tensor_polynomials(a.rank, b.rank, trunc);
    let values: Vec<A::Elem> = (1..=a.rank)
        .map(|i| a.chern(alg, i))
        .chain((1..=b.rank).map(|j| b.chern(alg, j)))
        .collect();
    let parts: Vec<A::Elem> = e
        .iter()
        .map(|p| substitute(&ring, p, alg, &values))
        .collect();
    Ok(BundleSpec {
        rank: a.rank * b.rank,
        total: alg.sum(parts.iter()),
    })
}

/// `(c(E) c(E^∨))_{2i}` for `i = 1..`, the Pontrjagin classes of the
/// underlying real bundle.
pub fn pontrjagin_of_bundle<A: GradedAlgebra>(alg: &A, e: &BundleSpec<A::Elem>) -> Vec<A::Elem> {
    let prod = alg.mul(&e.total, &dual_bundle_class(alg, e).total);
    (1..=alg.max_degree() / 2)
        .map(|i| {
            let p = alg.part(&prod, 2 * i);
            if i % 2 == 1 {
                alg.scale(&p, &int(-1))
            } else {
                p
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Univariate;
    use crate::exact::{GradedClass, PolyRing};

    #[test]
    fn dual_flips_odd_degrees() {
        let alg = Univariate { truncation: 4 };
        let e = BundleSpec::new(&alg, 1, GradedClass::from_ints(4, &[1, 3])).unwrap();
        assert_eq!(
            dual_bundle_class(&alg, &e).total,
            GradedClass::from_ints(4, &[1, -3])
        );
        let f = BundleSpec::new(&alg, 2, GradedClass::from_ints(4, &[1, 2, 5])).unwrap();
        assert_eq!(dual_bundle_class(&alg, &dual_bundle_class(&alg, &f)), f);
        assert!(BundleSpec::new(&alg, 1, GradedClass::from_ints(4, &[2, 1])).is_err());
    }

    #[test]
    fn tensor_rank_two_with_line() {
        // symbolic c1, c2, l
        let r = PolyRing::new(vec!["c1".into(), "c2".into(), "l".into()], vec![1, 2, 1], 2);
        let e = BundleSpec::new(&r, 2, r.one().add(&r.var(0)).add(&r.var(1))).unwrap();
        let l = BundleSpec::line(&r, &r.var(2));
        let t = tensor_product_class(&r, &e, &l, 2).unwrap();
        assert_eq!(r.format(&r.part(&t.total, 1)), "c1 + 2 l");
        assert_eq!(r.format(&r.part(&t.total, 2)), "c1 l + c2 + l^2");
        let trivial = BundleSpec::trivial(&r, 1);
        assert_eq!(
            tensor_product_class(&r, &e, &trivial, 2).unwrap().total,
            e.total
        );
    }

    #[test]
    fn line_tensor_line_adds() {
        let alg = Univariate { truncation: 3 };
        let a = BundleSpec::line(&alg, &GradedClass::from_ints(3, &[0, 2]));
        let b = BundleSpec::line(&alg, &GradedClass::from_ints(3, &[0, 5]));
        let t = tensor_product_class(&alg, &a, &b, 3).unwrap();
        assert_eq!(t.total, GradedClass::from_ints(3, &[1, 7]));
        let big = BundleSpec::trivial(&alg, 5);
        assert!(matches!(
            tensor_product_class(&alg, &big, &a, 3),
            Err(Error::UnsupportedRank(5))
        ));
    }
}
