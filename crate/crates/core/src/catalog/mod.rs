//! Builders and on-disk records for the manifolds the deductions run on.

mod builtin;
mod file;

use std::collections::BTreeMap;
use std::fmt;

pub use builtin::{
    annotation_records, build_builtin, build_hilb2, builtin_names, hilb2_topology,
    lefschetz_diamond, AnnotationRecord,
};
pub use file::{load_record, parse_record, record_to_toml, save_record, FORMAT_VERSION};

use crate::chern::ManifoldModel;
use crate::error::{Error, Result};
use crate::hodge::betti_euler;

/// Kodaira dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KodairaDim {
    NegInfinity,
    Value(u32),
}

impl fmt::Display for KodairaDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaDim::NegInfinity => f.write_str("-inf"),
            KodairaDim::Value(v) => write!(f, "{v}"),
        }
    }
}

impl std::str::FromStr for KodairaDim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "-inf" => Ok(KodairaDim::NegInfinity),
            _ => s.parse().map(KodairaDim::Value).map_err(|_| Error::Parse {
                source_name: "kappa".into(),
                message: format!("expected `-inf` or a non-negative integer, got `{s}`"),
            }),
        }
    }
}

/// Facts about a manifold that are not computed from its cohomology model.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Annotations {
    pub simply_connected: Option<bool>,
    pub kappa: Option<KodairaDim>,
    pub nu: Option<u32>,
    pub k_two_divisible: Option<bool>,
    /// `∫E^4 ≥ 0` for every divisor class.
    pub quartic_nonnegative: Option<bool>,
    /// Cup product `Sym^2 H^2 → H^4` is an isomorphism.
    pub sym2_iso: Option<bool>,
    /// A signature value quoted alongside the record that disagrees with
    /// the computed one; kept for comparison only.
    pub quoted_signature: Option<i64>,
    pub b3: Option<u64>,
}

/// A manifold model plus provenance and non-computed annotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldRecord {
    pub model: ManifoldModel,
    pub provenance: BTreeMap<String, String>,
    pub annotations: Annotations,
}

impl ManifoldRecord {
    pub fn new(model: ManifoldModel) -> Self {
        ManifoldRecord {
            model,
            provenance: BTreeMap::new(),
            annotations: Annotations::default(),
        }
    }

    pub fn name(&self) -> &str {
        &self.model.name
    }

    pub fn note(mut self, key: &str, text: &str) -> Self {
        self.provenance.insert(key.to_string(), text.to_string());
        self
    }

    /// Betti numbers from the Hodge diamond.
    pub fn betti(&self) -> Option<Vec<u64>> {
        self.model
            .hodge
            .as_ref()
            .and_then(|d| betti_euler(d).ok())
            .map(|(b, _)| b)
    }

    pub fn betti_number(&self, k: usize) -> Option<u64> {
        self.betti().and_then(|b| b.get(k).copied())
    }

    /// `b_3`, from the diamond when present.
    pub fn b3(&self) -> Option<u64> {
        self.betti_number(3).or(self.annotations.b3)
    }
}
