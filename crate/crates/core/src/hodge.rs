//! Hodge diamonds, signatures and unimodular lattice invariants.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Mod2Class;

/// Hodge numbers `h^{p,q}`, `0 ≤ p, q ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeDiamond {
    n: usize,
    h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    /// Takes the grid row-major, `rows[p][q] = h^{p,q}`.
    pub fn from_grid(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidDiamond(vec!["empty grid".into()]))?;
        if rows.iter().any(|r| r.len() != n + 1) {
            return Err(Error::InvalidDiamond(vec!["grid is not square".into()]));
        }
        Ok(HodgeDiamond { n, h: rows })
    }

    /// Builds a diamond from the entries with `p ≥ q` and `p + q ≤ n`,
    /// filling the rest by complex conjugation and Serre duality.
    pub fn from_half(n: usize, entries: &[((usize, usize), u64)]) -> Self {
        let mut h = vec![vec![0u64; n + 1]; n + 1];
        for &((p, q), v) in entries {
            for (a, b) in [(p, q), (q, p), (n - p, n - q), (n - q, n - p)] {
                h[a][b] = v;
            }
        }
        HodgeDiamond { n, h }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.h.get(p).and_then(|r| r.get(q)).copied().unwrap_or(0)
    }

    pub fn grid(&self) -> &[Vec<u64>] {
        &self.h
    }

    pub fn set(&mut self, p: usize, q: usize, v: u64) {
        self.h[p][q] = v;
    }

    /// `χ(O) = Σ_q (-1)^q h^{0,q}`.
    pub fn chi_structure_sheaf(&self) -> i64 {
        (0..=self.n).map(|q| sign(q) * self.get(0, q) as i64).sum()
    }
}

impl fmt::Display for HodgeDiamond {
    /// Prints rows of constant `p + q`, top to bottom.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        for k in 0..=2 * n {
            let row: Vec<String> = (0..=k)
                .filter(|&p| p <= n && k - p <= n)
                .map(|p| self.get(p, k - p).to_string())
                .collect();
            let pad = 2 * n.abs_diff(k);
            writeln!(f, "{}{}", " ".repeat(pad), row.join("   "))?;
        }
        Ok(())
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Symmetry, Serre duality and `h^{0,0} = 1` violations.
pub fn validate_diamond(d: &HodgeDiamond) -> Vec<String> {
    let n = d.n;
    let mut out = Vec::new();
    if d.get(0, 0) != 1 {
        out.push(format!("h^{{0,0}} = {} (expected 1)", d.get(0, 0)));
    }
    for p in 0..=n {
        for q in 0..=n {
            if q > p && d.get(p, q) != d.get(q, p) {
                out.push(format!(
                    "h^{{{p},{q}}} = {} but h^{{{q},{p}}} = {}",
                    d.get(p, q),
                    d.get(q, p)
                ));
            }
            let (sp, sq) = (n - p, n - q);
            if (sp, sq) > (p, q) && d.get(p, q) != d.get(sp, sq) {
                out.push(format!(
                    "h^{{{p},{q}}} = {} but h^{{{sp},{sq}}} = {}",
                    d.get(p, q),
                    d.get(sp, sq)
                ));
            }
        }
    }
    out
}

/// Betti numbers `b_0..=b_{2n}` and the Euler number.
pub fn betti_euler(d: &HodgeDiamond) -> Result<(Vec<u64>, i64)> {
    let problems = validate_diamond(d);
    if !problems.is_empty() {
        return Err(Error::InvalidDiamond(problems));
    }
    let n = d.n;
    let betti: Vec<u64> = (0..=2 * n)
        .map(|k| {
            (0..=k)
                .filter(|&p| p <= n && k - p <= n)
                .map(|p| d.get(p, k - p))
                .sum()
        })
        .collect();
    let euler = betti
        .iter()
        .enumerate()
        .map(|(k, &b)| sign(k) * b as i64)
        .sum();
    Ok((betti, euler))
}

/// Signature of the middle intersection form, `Σ_{p,q} (-1)^q h^{p,q}`.
pub fn signature_from_hodge(d: &HodgeDiamond) -> Result<i64> {
    check_even(d)?;
    let problems = validate_diamond(d);
    if !problems.is_empty() {
        return Err(Error::InvalidDiamond(problems));
    }
    Ok(signature_linear(d))
}

/// The same weighted sum on an arbitrary grid, with no validation. Linear
/// in the entries.
pub fn signature_linear(d: &HodgeDiamond) -> i64 {
    let mut s = 0;
    for p in 0..=d.n {
        for q in 0..=d.n {
            s += sign(q) * d.get(p, q) as i64;
        }
    }
    s
}

/// `Σ_{p,q} (-1)^p h^{p,q}`; equal to [`signature_from_hodge`] on symmetric diamonds.
pub fn signature_p_weighted(d: &HodgeDiamond) -> i64 {
    let mut s = 0;
    for p in 0..=d.n {
        for q in 0..=d.n {
            s += sign(p) * d.get(p, q) as i64;
        }
    }
    s
}

/// Middle-row alternating sum `Σ_{p+q=n} (-1)^p h^{p,q}` plus every
/// off-middle `h^{p,p}` counted positively.
///
/// Agrees with the Hodge index value only when the off-middle diagonal
/// terms cancel; kept so that hand computations using this convention can
/// be replayed. Linear in the entries, no validation.
pub fn signature_legacy(d: &HodgeDiamond) -> i64 {
    let n = d.n;
    let middle: i64 = (0..=n).map(|p| sign(p) * d.get(p, n - p) as i64).sum();
    let diagonal: i64 = (0..=n)
        .filter(|&p| 2 * p != n)
        .map(|p| d.get(p, p) as i64)
        .sum();
    middle + diagonal
}

/// Which signature convention a computation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureEvaluator {
    HodgeIndex,
    Legacy,
}

impl SignatureEvaluator {
    pub fn eval(self, d: &HodgeDiamond) -> i64 {
        match self {
            SignatureEvaluator::HodgeIndex => signature_linear(d),
            SignatureEvaluator::Legacy => signature_legacy(d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SignatureEvaluator::HodgeIndex => "hodge-index",
            SignatureEvaluator::Legacy => "legacy",
        }
    }
}

fn check_even(d: &HodgeDiamond) -> Result<()> {
    if d.n % 2 == 1 {
        return Err(Error::InvalidDimension(format!(
            "signature needs even dimension, got {}",
            d.n
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Rank, signature and parity of a unimodular lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeInvariants {
    pub rank: u64,
    pub signature: i64,
    pub parity: Parity,
}

impl fmt::Display for LatticeInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.rank, self.signature, self.parity)
    }
}

/// `H^2(S, Z)` of a simply connected surface from `c1^2`, `c2` and whether
/// `K` is 2-divisible.
pub fn surface_lattice(c1sq: i64, c2: i64, two_divisible_k: bool) -> Result<LatticeInvariants> {
    if (c1sq - 2 * c2).rem_euclid(3) != 0 {
        return Err(Error::NotASurface(format!(
            "c1^2 - 2c2 = {} is not divisible by 3",
            c1sq - 2 * c2
        )));
    }
    if c2 < 2 {
        return Err(Error::NotASurface(format!(
            "c2 = {c2} < 2 for a simply connected surface"
        )));
    }
    let signature = (c1sq - 2 * c2) / 3;
    let rank = (c2 - 2) as u64;
    if signature.unsigned_abs() > rank {
        return Err(Error::NotASurface(format!(
            "|signature| {signature} exceeds rank {rank}"
        )));
    }
    Ok(LatticeInvariants {
        rank,
        signature,
        parity: if two_divisible_k {
            Parity::Even
        } else {
            Parity::Odd
        },
    })
}

/// Lattices of simply connected surfaces are classified by rank,
/// signature and parity.
pub fn freedman_equivalent(a: &LatticeInvariants, b: &LatticeInvariants) -> bool {
    a == b
}

/// Whether a class with the given mod-2 reduction of `c1` is 2-divisible.
pub fn two_divisible(c1_mod2: &Mod2Class) -> bool {
    c1_mod2.coeff(1) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k3() -> HodgeDiamond {
        HodgeDiamond::from_half(2, &[((0, 0), 1), ((1, 0), 0), ((2, 0), 1), ((1, 1), 20)])
    }

    fn cubic() -> HodgeDiamond {
        HodgeDiamond::from_half(
            4,
            &[
                ((0, 0), 1),
                ((1, 1), 1),
                ((3, 1), 1),
                ((2, 2), 21),
                ((4, 0), 0),
            ],
        )
    }

    #[test]
    fn k3_numbers() {
        let d = k3();
        assert!(validate_diamond(&d).is_empty());
        let (b, e) = betti_euler(&d).unwrap();
        assert_eq!(b, vec![1, 0, 22, 0, 1]);
        assert_eq!(e, 24);
        assert_eq!(signature_from_hodge(&d).unwrap(), -16);
        assert_eq!(d.chi_structure_sheaf(), 2);
    }

    #[test]
    fn cubic_evaluators_differ_by_four() {
        let d = cubic();
        assert_eq!(betti_euler(&d).unwrap().0[4], 23);
        assert_eq!(signature_from_hodge(&d).unwrap(), 19);
        assert_eq!(signature_legacy(&d), 23);
        assert_eq!(signature_p_weighted(&d), 19);
    }

    #[test]
    fn broken_symmetry_is_reported() {
        let mut d = HodgeDiamond::from_half(1, &[((0, 0), 1)]);
        d.set(1, 0, 1);
        assert!(!validate_diamond(&d).is_empty());
        assert!(betti_euler(&d).is_err());
        let point = HodgeDiamond::from_grid(vec![vec![1]]).unwrap();
        assert_eq!(betti_euler(&point).unwrap().1, 1);
    }

    #[test]
    fn surface_lattices() {
        let k3 = surface_lattice(0, 24, true).unwrap();
        assert_eq!((k3.rank, k3.signature, k3.parity), (22, -16, Parity::Even));
        let p2 = surface_lattice(9, 3, false).unwrap();
        assert_eq!((p2.rank, p2.signature, p2.parity), (1, 1, Parity::Odd));
        assert!(freedman_equivalent(
            &k3,
            &surface_lattice(0, 24, true).unwrap()
        ));
        assert!(!freedman_equivalent(&k3, &p2));
        assert!(surface_lattice(1, 3, false).is_err());
    }

    #[test]
    fn divisibility_from_mod2() {
        assert!(!two_divisible(&Mod2Class::new(4, [0, 1, 4])));
        assert!(two_divisible(&Mod2Class::new(4, [0])));
    }
}
