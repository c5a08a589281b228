//! Newton's identities and multiplicative sequences.
//!
//! Every splitting-principle computation in the crate (Chern character,
//! Todd and L polynomials, tensor products) goes through the two
//! conversions below.

use num_traits::Zero;

use crate::algebra::GradedAlgebra;
use crate::exact::{int, Poly, PolyRing, Rational};

/// Power sums `p_0..=p_upto` of the roots from elementary symmetric
/// functions `e[i]` (`e[0]` is ignored, entries past `rank` are zero).
pub fn power_sums<A: GradedAlgebra>(
    alg: &A,
    rank: usize,
    e: &[A::Elem],
    upto: usize,
) -> Vec<A::Elem> {
    let el = |i: usize| {
        if i <= rank && i < e.len() {
            e[i].clone()
        } else {
            alg.zero()
        }
    };
    let mut p = vec![alg.constant(&int(rank as i64))];
    for k in 1..=upto {
        // p_k = Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        let mut acc = alg.scale(&el(k), &int(sign(k - 1) * k as i64));
        for i in 1..k {
            let t = alg.mul(&el(i), &p[k - i]);
            acc = alg.add(&acc, &alg.scale(&t, &int(sign(i - 1))));
        }
        p.push(acc);
    }
    p
}

/// Elementary symmetric functions `e_0..=e_upto` from power sums `p[1..]`.
pub fn elementary<A: GradedAlgebra>(alg: &A, p: &[A::Elem], upto: usize) -> Vec<A::Elem> {
    let mut e = vec![alg.one()];
    for k in 1..=upto {
        // k e_k = Σ_{i=1}^k (-1)^{i-1} e_{k-i} p_i
        let mut acc = alg.zero();
        for i in 1..=k {
            let pi = p.get(i).cloned().unwrap_or_else(|| alg.zero());
            let t = alg.mul(&e[k - i], &pi);
            acc = alg.add(&acc, &alg.scale(&t, &int(sign(i - 1))));
        }
        e.push(alg.scale(&acc, &(Rational::from_integer(1.into()) / int(k as i64))));
    }
    e
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Coefficients of `log Q(t)` for `Q(t) = 1 + q_1 t + ..` up to `t^n`.
pub fn log_series(q: &[Rational], n: usize) -> Vec<Rational> {
    let qk = |k: usize| q.get(k).cloned().unwrap_or_else(Rational::zero);
    let mut l = vec![Rational::zero(); n + 1];
    for k in 1..=n {
        let mut acc = int(k as i64) * qk(k);
        for (j, lj) in l.iter().enumerate().take(k).skip(1) {
            acc -= int(j as i64) * lj * qk(k - j);
        }
        l[k] = acc / int(k as i64);
    }
    l
}

/// Multiplicative sequence `K_0..=K_n` of the characteristic series `q`,
/// as polynomials in the elementary symmetric functions of the roots.
///
/// `ring` must have `n` variables of weights `1..=n` and truncation `n`.
pub fn multiplicative_sequence(ring: &PolyRing, q: &[Rational], n: usize) -> Vec<Poly> {
    let e: Vec<Poly> = std::iter::once(ring.one())
        .chain((0..n).map(|i| ring.var(i)))
        .collect();
    let p = power_sums(ring, n, &e, n);
    let l = log_series(q, n);
    // log K = Σ l_k p_k
    let log_k = (1..=n).fold(Poly::zero(), |acc, k| acc.add(&p[k].scale(&l[k])));
    // exp of a nilpotent element
    let mut total = ring.one();
    let mut term = ring.one();
    for j in 1..=n {
        term = ring.mul(&term, &log_k).scale(&(int(1) / int(j as i64)));
        total = total.add(&term);
    }
    (0..=n).map(|k| ring.part(&total, k)).collect()
}

/// Chern classes of `A ⊗ B` for ranks `ra`, `rb`, as polynomials in
/// `a1..a_ra, b1..b_rb` truncated at weight `trunc`.
///
/// Uses `p_k(A ⊗ B) = Σ_m C(k, m) p_m(A) p_{k-m}(B)` on power sums.
pub fn tensor_polynomials(ra: usize, rb: usize, trunc: usize) -> (PolyRing, Vec<Poly>) {
    let names: Vec<String> = (1..=ra)
        .map(|i| format!("a{i}"))
        .chain((1..=rb).map(|j| format!("b{j}")))
        .collect();
    let weights: Vec<usize> = (1..=ra).chain(1..=rb).collect();
    let ring = PolyRing::new(names, weights, trunc);
    let ea: Vec<Poly> = std::iter::once(ring.one())
        .chain((0..ra).map(|i| ring.var(i)))
        .collect();
    let eb: Vec<Poly> = std::iter::once(ring.one())
        .chain((0..rb).map(|j| ring.var(ra + j)))
        .collect();
    let pa = power_sums(&ring, ra, &ea, trunc);
    let pb = power_sums(&ring, rb, &eb, trunc);
    let mut pt = vec![ring.constant(int((ra * rb) as i64))];
    for k in 1..=trunc {
        let mut acc = Poly::zero();
        for m in 0..=k {
            let t = ring.mul(&pa[m], &pb[k - m]);
            acc = acc.add(&t.scale(&crate::exact::binomial(k as u64, m as u64)));
        }
        pt.push(acc);
    }
    let upto = trunc.min(ra * rb);
    let e = elementary(&ring, &pt, upto);
    (ring, e)
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![int(1)];
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += crate::exact::binomial(m as u64 + 1, k as u64) * bk;
        }
        b.push(-acc / int(m as i64 + 1));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn newton_round_trip() {
        let r = PolyRing::chern("e", 3, 6);
        let e: Vec<Poly> = std::iter::once(r.one())
            .chain((0..3).map(|i| r.var(i)))
            .collect();
        let p = power_sums(&r, 3, &e, 6);
        let back = elementary(&r, &p, 6);
        for k in 0..=3 {
            assert_eq!(back[k], e[k]);
        }
        assert!(
            back[4..].iter().all(|b| b.is_zero()),
            "e_k of three roots vanishes for k > 3"
        );
        // p2 = e1^2 - 2 e2
        assert_eq!(r.format(&p[2]), "e1^2 - 2 e2");
    }

    #[test]
    fn tensor_with_line_bundle() {
        // (1 + a1 + a2) ⊗ (1 + b1): oracle (1 + x1 + l)(1 + x2 + l)
        let (r, e) = tensor_polynomials(2, 1, 2);
        assert_eq!(r.format(&e[1]), "a1 + 2 b1");
        assert_eq!(r.format(&e[2]), "a1 b1 + a2 + b1^2");
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(6);
        assert_eq!(b[1], frac(-1, 2));
        assert_eq!(b[2], frac(1, 6));
        assert_eq!(b[4], frac(-1, 30));
        assert_eq!(b[6], frac(1, 42));
        assert_eq!(b[5], int(0));
    }

    #[test]
    fn log_of_exponential_is_linear() {
        // exp(t) = 1 + t + t^2/2 + ...
        let q: Vec<Rational> = (0..6)
            .map(|k| int(1) / crate::exact::factorial(k))
            .collect();
        let l = log_series(&q, 5);
        assert_eq!(l[1], int(1));
        assert!(l[2..].iter().all(Zero::is_zero));
    }
}
