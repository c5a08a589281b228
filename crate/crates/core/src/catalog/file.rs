//! One TOML document per manifold. Derived values are stored alongside
//! the model and re-checked on load.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chern::{chern_numbers, Fujiki, ManifoldModel, Ring, RingClass, Tag};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, GradedClass, Poly, PolyRing, Rational};
use crate::hodge::{betti_euler, HodgeDiamond};
use crate::schubert::{Partition, SchubertClass};

use super::{Annotations, ManifoldRecord};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordFile {
    version: u32,
    name: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    index: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    tags: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hodge: Option<Vec<Vec<u64>>>,
    ring: RingFile,
    tangent_total: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fujiki: Option<FujikiFile>,
    #[serde(default)]
    annotations: AnnotationsFile,
    #[serde(default)]
    provenance: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    derived: Option<DerivedFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RingFile {
    Projective {
        degree: String,
    },
    Grassmannian {
        k: usize,
        n: usize,
        hyperplanes: usize,
    },
    Numerical {
        variables: Vec<String>,
        weights: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        line: Option<String>,
        numbers: BTreeMap<String, String>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FujikiFile {
    constant: String,
    form: String,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AnnotationsFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    simply_connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kappa: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nu: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k_two_divisible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    quartic_nonnegative: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sym2_iso: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    quoted_signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b3: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivedFile {
    euler: String,
    chern_numbers: BTreeMap<String, String>,
}

fn parse_err(source_name: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        source_name: source_name.to_string(),
        message: message.into(),
    }
}

fn rational(source_name: &str, field: &str, s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| {
        parse_err(
            source_name,
            format!("field `{field}`: `{s}` is not a rational"),
        )
    })
}

fn numerical_vars(ring: &Ring) -> Option<&PolyRing> {
    match ring {
        Ring::Numerical { vars, .. } => Some(vars),
        _ => None,
    }
}

/// Serializes a record, including the derived Chern numbers.
pub fn record_to_toml(r: &ManifoldRecord) -> Result<String> {
    let m = &r.model;
    let ring = match &m.ring {
        Ring::Projective { degree, .. } => RingFile::Projective {
            degree: degree.to_string(),
        },
        Ring::Grassmannian { k, n, hyperplanes } => RingFile::Grassmannian {
            k: *k,
            n: *n,
            hyperplanes: *hyperplanes,
        },
        Ring::Numerical {
            vars,
            numbers,
            line,
        } => RingFile::Numerical {
            variables: vars.names().to_vec(),
            weights: vars.weights().to_vec(),
            line: line.map(|i| vars.names()[i].clone()),
            numbers: numbers
                .iter()
                .map(|(mono, v)| (vars.format_monomial(mono), v.to_string()))
                .collect(),
        },
    };
    let tangent_total: BTreeMap<String, String> = match &m.tangent_total {
        RingClass::Graded(g) => g
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(k, c)| (k.to_string(), c.to_string()))
            .collect(),
        RingClass::Schubert(s) => s
            .terms()
            .map(|(l, c)| (l.to_string(), c.to_string()))
            .collect(),
        RingClass::Poly(p) => {
            let vars = numerical_vars(&m.ring)
                .ok_or_else(|| Error::AmbientMismatch("polynomial class".into()))?;
            p.terms()
                .map(|(mono, c)| (vars.format_monomial(mono), c.to_string()))
                .collect()
        }
    };
    let derived = match (m.euler_number(), chern_numbers(m)) {
        (Ok(e), Ok(c)) => Some(DerivedFile {
            euler: e.to_string(),
            chern_numbers: c
                .rows()
                .into_iter()
                .map(|(l, v)| (l, v.to_string()))
                .collect(),
        }),
        _ => None,
    };
    let a = &r.annotations;
    let file = RecordFile {
        version: FORMAT_VERSION,
        name: m.name.clone(),
        dim: m.dim(),
        index: m.index,
        tags: m.tags.iter().map(|t| t.to_string()).collect(),
        hodge: m.hodge.as_ref().map(|d| d.grid().to_vec()),
        ring,
        tangent_total,
        fujiki: m.fujiki.as_ref().map(|f| FujikiFile {
            constant: f.constant.to_string(),
            form: f.form.clone(),
        }),
        annotations: AnnotationsFile {
            simply_connected: a.simply_connected,
            kappa: a.kappa.map(|k| k.to_string()),
            nu: a.nu,
            k_two_divisible: a.k_two_divisible,
            quartic_nonnegative: a.quartic_nonnegative,
            sym2_iso: a.sym2_iso,
            quoted_signature: a.quoted_signature,
            b3: a.b3,
        },
        provenance: r.provenance.clone(),
        derived,
    };
    toml::to_string(&file).map_err(|e| parse_err(&m.name, e.to_string()))
}

/// Parses and cross-checks a record. `source_name` labels diagnostics.
pub fn parse_record(text: &str, source_name: &str) -> Result<ManifoldRecord> {
    let file: RecordFile =
        toml::from_str(text).map_err(|e| parse_err(source_name, e.to_string()))?;
    if file.version != FORMAT_VERSION {
        return Err(parse_err(
            source_name,
            format!(
                "unsupported version {} (expected {FORMAT_VERSION})",
                file.version
            ),
        ));
    }
    let dim = file.dim;
    let ring = match &file.ring {
        RingFile::Projective { degree } => {
            Ring::projective(dim, rational(source_name, "ring.degree", degree)?)
        }
        RingFile::Grassmannian { k, n, hyperplanes } => {
            if *k == 0 || k >= n || k * (n - k) != dim + hyperplanes {
                return Err(parse_err(
                    source_name,
                    format!(
                        "ring: G({k},{n}) with {hyperplanes} sections is not {dim}-dimensional"
                    ),
                ));
            }
            Ring::Grassmannian {
                k: *k,
                n: *n,
                hyperplanes: *hyperplanes,
            }
        }
        RingFile::Numerical {
            variables,
            weights,
            line,
            numbers,
        } => {
            if variables.len() != weights.len() {
                return Err(parse_err(
                    source_name,
                    "ring: variables and weights differ in length",
                ));
            }
            let vars: Vec<(&str, usize)> = variables
                .iter()
                .map(String::as_str)
                .zip(weights.iter().copied())
                .collect();
            let nums = numbers
                .iter()
                .map(|(k, v)| {
                    Ok((
                        k.as_str(),
                        rational(source_name, &format!("ring.numbers.{k}"), v)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ring::numerical(&vars, dim, &nums, line.as_deref())
                .map_err(|e| parse_err(source_name, format!("ring: {e}")))?
        }
    };
    let tangent = parse_tangent(&ring, &file.tangent_total, source_name)?;
    let mut model = ManifoldModel::new(file.name.clone(), ring, tangent)
        .map_err(|e| parse_err(source_name, format!("tangent_total: {e}")))?;
    model.index = file.index;
    for t in &file.tags {
        model.tags.insert(
            t.parse::<Tag>()
                .map_err(|_| parse_err(source_name, format!("tags: unknown tag `{t}`")))?,
        );
    }
    if let Some(grid) = file.hodge.clone() {
        model.hodge = Some(
            HodgeDiamond::from_grid(grid)
                .map_err(|e| parse_err(source_name, format!("hodge: {e}")))?,
        );
    }
    if let Some(f) = &file.fujiki {
        model.fujiki = Some(Fujiki {
            constant: rational(source_name, "fujiki.constant", &f.constant)?,
            form: f.form.clone(),
        });
    }
    let a = &file.annotations;
    let annotations = Annotations {
        simply_connected: a.simply_connected,
        kappa: a.kappa.as_deref().map(str::parse).transpose()?,
        nu: a.nu,
        k_two_divisible: a.k_two_divisible,
        quartic_nonnegative: a.quartic_nonnegative,
        sym2_iso: a.sym2_iso,
        quoted_signature: a.quoted_signature,
        b3: a.b3,
    };
    let record = ManifoldRecord {
        model,
        provenance: file.provenance.clone(),
        annotations,
    };
    let problems = cross_check(&record, file.derived.as_ref());
    if !problems.is_empty() {
        return Err(Error::Rejected(problems));
    }
    Ok(record)
}

fn parse_tangent(
    ring: &Ring,
    map: &BTreeMap<String, String>,
    source_name: &str,
) -> Result<RingClass> {
    let field = |k: &str| format!("tangent_total.{k}");
    match ring {
        Ring::Projective { dim, .. } => {
            let mut coeffs = vec![Rational::from_integer(0.into()); dim + 1];
            for (k, v) in map {
                let d: usize = k.parse().map_err(|_| {
                    parse_err(source_name, format!("{}: degree key expected", field(k)))
                })?;
                if d > *dim {
                    return Err(parse_err(
                        source_name,
                        format!("{}: degree above dimension {dim}", field(k)),
                    ));
                }
                coeffs[d] = rational(source_name, &field(k), v)?;
            }
            Ok(RingClass::Graded(GradedClass::from_coeffs(*dim, coeffs)))
        }
        Ring::Grassmannian { k, n, .. } => {
            let mut s = SchubertClass::zero(*k, *n);
            for (key, v) in map {
                let p: Partition = key
                    .parse()
                    .map_err(|e| parse_err(source_name, format!("{}: {e}", field(key))))?;
                if !p.fits(*k, *n) {
                    return Err(parse_err(
                        source_name,
                        format!("{}: partition outside the box", field(key)),
                    ));
                }
                s.add_term(p, rational(source_name, &field(key), v)?);
            }
            Ok(RingClass::Schubert(s))
        }
        Ring::Numerical { vars, .. } => {
            let mut p = Poly::zero();
            for (key, v) in map {
                let mono = vars.parse_monomial(key).ok_or_else(|| {
                    parse_err(source_name, format!("{}: unknown monomial", field(key)))
                })?;
                p.add_term(mono, rational(source_name, &field(key), v)?);
            }
            Ok(RingClass::Poly(p))
        }
    }
}

/// Recomputes derived values and reports every disagreement.
fn cross_check(r: &ManifoldRecord, derived: Option<&DerivedFile>) -> Vec<String> {
    let m = &r.model;
    let mut out = m.violations();
    let numbers = match chern_numbers(m) {
        Ok(c) => Some(c),
        Err(e) => {
            out.push(e.to_string());
            None
        }
    };
    if let Some(d) = derived {
        match m.euler_number() {
            Ok(e) if parse_rational(&d.euler).as_ref() != Some(&e) => {
                out.push(format!(
                    "derived.euler: stored {} but recomputed {e}",
                    d.euler
                ));
            }
            Err(err) => out.push(format!("derived.euler: {err}")),
            _ => {}
        }
        if let Some(c) = &numbers {
            let computed: BTreeMap<String, Rational> = c.rows().into_iter().collect();
            for (label, stored) in &d.chern_numbers {
                match computed.get(label) {
                    None => out.push(format!(
                        "derived.chern_numbers.{label}: not a Chern number of a {}-fold",
                        m.dim()
                    )),
                    Some(v) if parse_rational(stored).as_ref() != Some(v) => out.push(format!(
                        "derived.chern_numbers.{label}: stored {stored} but recomputed {v}"
                    )),
                    _ => {}
                }
            }
        }
    }
    if let (Some(h), Ok(e)) = (&m.hodge, m.euler_number()) {
        if let Ok((_, chi)) = betti_euler(h) {
            if Rational::from_integer(chi.into()) != e
                && !out.iter().any(|s| s.contains("Euler number"))
            {
                out.push(format!("Euler number {e} disagrees with Betti sum {chi}"));
            }
        }
    }
    out
}

pub fn save_record(r: &ManifoldRecord, path: &Path) -> Result<()> {
    let text = record_to_toml(r)?;
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_record(path: &Path) -> Result<ManifoldRecord> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_record(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_builtin;

    #[test]
    fn round_trip_every_builtin() {
        for name in [
            "cubic4",
            "quadric4",
            "pn(3)",
            "dp5",
            "k3",
            "hilb2_k3",
            "kodaira_w_surface",
        ] {
            let r = build_builtin(name).unwrap();
            let text = record_to_toml(&r).unwrap();
            let back = parse_record(&text, name).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
            assert_eq!(back, r, "{name}");
        }
    }

    #[test]
    fn tampered_euler_number_is_rejected() {
        let text = record_to_toml(&build_builtin("cubic4").unwrap()).unwrap();
        let bad = text.replace("c4 = \"27\"", "c4 = \"28\"");
        assert_ne!(bad, text);
        match parse_record(&bad, "bad.toml") {
            Err(Error::Rejected(p)) => assert!(
                p.iter().any(|s| s.contains("c4") && s.contains("27")),
                "{p:?}"
            ),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_field_is_named() {
        let text = record_to_toml(&build_builtin("k3").unwrap()).unwrap();
        let bad = format!("colour = \"blue\"\n{text}");
        let err = parse_record(&bad, "k3.toml").unwrap_err().to_string();
        assert!(err.contains("colour"), "{err}");
    }
}
