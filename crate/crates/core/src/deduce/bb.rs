use std::fmt;

use serde::Serialize;

use super::{num, var, DeductionTrace, Justification, Outcome, Step};
use crate::exact::int;

/// A factor of a product of Ricci-flat manifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Factor {
    /// Calabi-Yau of the given dimension, at least 3.
    Cy(u32),
    /// Hyperkähler of the given even dimension; K3 is `Hk(2)`.
    Hk(u32),
}

impl Factor {
    pub fn dim(self) -> u32 {
        match self {
            Factor::Cy(d) | Factor::Hk(d) => d,
        }
    }

    /// `χ(O)` of the factor.
    pub fn chi(self) -> i64 {
        match self {
            Factor::Cy(d) if d % 2 == 1 => 0,
            Factor::Cy(_) => 2,
            Factor::Hk(d) => d as i64 / 2 + 1,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            Factor::Cy(d) => d >= 3,
            Factor::Hk(d) => d >= 2 && d % 2 == 0,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Cy(d) => write!(f, "CY({d})"),
            Factor::Hk(d) => write!(f, "HK({d})"),
        }
    }
}

/// A multiset of factors, stored in descending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DecompositionShape {
    pub factors: Vec<Factor>,
}

impl DecompositionShape {
    pub fn new(mut factors: Vec<Factor>) -> Self {
        factors.sort_by(|a, b| b.cmp(a));
        DecompositionShape { factors }
    }

    pub fn dim(&self) -> u32 {
        self.factors.iter().map(|f| f.dim()).sum()
    }

    pub fn chi(&self) -> i64 {
        self.factors.iter().map(|f| f.chi()).product()
    }
}

impl fmt::Display for DecompositionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join("×"))
    }
}

/// All products of Calabi-Yau and hyperkähler factors of total dimension
/// `dim` with `Π χ(O) = chi`, sorted.
pub fn bb_decompositions(dim: u32, chi: i64) -> Vec<DecompositionShape> {
    fn go(rest: u32, max: Factor, acc: &mut Vec<Factor>, out: &mut Vec<DecompositionShape>) {
        if rest == 0 {
            out.push(DecompositionShape::new(acc.clone()));
            return;
        }
        for d in (2..=rest).rev() {
            for f in [Factor::Hk(d), Factor::Cy(d)] {
                if f.is_valid() && f <= max {
                    acc.push(f);
                    go(rest - d, f, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut all = Vec::new();
    go(dim, Factor::Hk(u32::MAX), &mut Vec::new(), &mut all);
    let mut out: Vec<DecompositionShape> = all.into_iter().filter(|s| s.chi() == chi).collect();
    out.sort();
    out
}

/// The enumeration as a trace.
pub fn bb_trace(dim: u32, chi: i64) -> DeductionTrace {
    let mut t = DeductionTrace::new(
        "Ricci-flat decompositions",
        &format!("dim {dim}, χ(O) = {chi}"),
    );
    t.parameter("dim", dim as i64);
    t.parameter("chi", chi);
    let shapes = bb_decompositions(dim, chi);
    t.push(
        Step::new(
            Justification::BbDecomposition,
            "χ(O) is multiplicative; χ(CY odd) = 0, χ(CY even) = 2, χ(HK 2m) = m + 1",
        )
        .observed("shape count", int(shapes.len() as i64)),
    );
    for (i, s) in shapes.iter().enumerate() {
        let name = format!("χ[{s}]");
        let expr = s
            .factors
            .iter()
            .map(|f| num(f.chi()))
            .reduce(|a, b| a * b)
            .unwrap_or_else(|| num(1));
        t.push(
            Step::new(
                Justification::BbDecomposition,
                format!("shape {}: {s}", i + 1),
            )
            .derived(name.clone(), int(s.chi()), expr)
            .derived(format!("{name} - chi"), int(0), var(&name) - var("chi")),
        );
    }
    let summary = if shapes.is_empty() {
        "no decompositions".to_string()
    } else {
        shapes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let outcome = Outcome::Shapes {
        shapes: shapes.iter().map(|s| s.to_string()).collect(),
    };
    t.finish(outcome, summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(dim: u32, chi: i64) -> Vec<String> {
        bb_decompositions(dim, chi)
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    #[test]
    fn fourfolds_and_sixfolds() {
        assert!(shapes(4, 0).is_empty());
        assert_eq!(shapes(4, 3), ["HK(4)"]);
        assert_eq!(shapes(6, 0), ["CY(3)×CY(3)"]);
        assert!(shapes(4, 2).contains(&"CY(4)".to_string()));
        assert!(shapes(6, 2).contains(&"CY(6)".to_string()));
        assert_eq!(shapes(4, 4), ["HK(2)×HK(2)"]);
    }

    #[test]
    fn trace_summary() {
        assert_eq!(bb_trace(4, 0).verdict.summary, "no decompositions");
        assert_eq!(bb_trace(4, 3).verdict.summary, "HK(4)");
    }
}
