use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use super::report::Report;
use super::CmdOutput;
use crate::catalog::{build_builtin, load_record, ManifoldRecord};
use crate::chern::{
    chern_numbers, monomial_label, pontrjagin_classes, pontrjagin_numbers, stiefel_whitney_classes,
    sw_numbers, w2_vanishes,
};
use crate::deduce::{
    bb_trace, cubic_partner_solve, cy_hk_distinction, divisor_c3_compare, fano_index_match,
    general_type_index, hk_partner_pipeline, partner_model, replay, ricci_flat_exclusion,
    DeductionTrace, Family,
};
use crate::error::{Error, Result};
use crate::exact::{is_integer, to_i64};
use crate::genus::{hrr_chi, l_genus_signature};
use crate::hodge::{
    betti_euler, signature_from_hodge, signature_legacy, surface_lattice, LatticeInvariants,
};
use crate::schubert::Partition;

/// Where record names are looked up: a file path, then `<dir>/<name>.toml`
/// when a catalog directory is set, then the built-ins.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    dir: Option<PathBuf>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog { dir: None }
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        Catalog {
            dir: Some(dir.into()),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn resolve(&self, name: &str) -> Result<ManifoldRecord> {
        let p = Path::new(name);
        if p.is_file() {
            return load_record(p);
        }
        if let Some(d) = &self.dir {
            let f = d.join(format!("{name}.toml"));
            if f.is_file() {
                return load_record(&f);
            }
        }
        build_builtin(name)
    }

    /// `*.toml` files of the catalog directory, sorted by name.
    pub fn files(&self) -> Result<Vec<PathBuf>> {
        let Some(d) = &self.dir else {
            return Ok(Vec::new());
        };
        let io = |source| Error::Io {
            path: d.display().to_string(),
            source,
        };
        let mut out = Vec::new();
        for entry in fs::read_dir(d).map_err(io)? {
            let path = entry.map_err(io)?.path();
            if path.extension().is_some_and(|e| e == "toml") {
                out.push(path);
            }
        }
        out.sort();
        Ok(out)
    }
}

fn na<T: ToString>(r: Result<T>) -> String {
    r.map(|v| v.to_string()).unwrap_or_else(|_| "n/a".into())
}

/// `w_{2i}` labels for a partition of Chern indices.
fn sw_label(p: &Partition) -> String {
    let doubled = Partition::new(p.parts().iter().map(|i| 2 * i).collect())
        .expect("doubling keeps the order");
    monomial_label('w', &doubled)
}

fn kv(k: impl Into<String>, v: impl Into<String>) -> Vec<String> {
    vec![k.into(), v.into()]
}

/// Full invariant tables of one record.
pub fn cmd_invariants(catalog: &Catalog, name: &str) -> Result<Report> {
    let r = catalog.resolve(name)?;
    let m = &r.model;
    let n = m.dim();
    let mut rep = Report::new(format!("Invariants of {}", r.name()));

    let tags: Vec<&str> = m.tags.iter().map(|t| t.as_str()).collect();
    let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a".into());
    rep.table(
        "summary",
        &["field", "value"],
        vec![
            kv("name", r.name()),
            kv("dimension", n.to_string()),
            kv("ring", m.ring.kind()),
            kv("degree", opt(m.degree().map(|d| d.to_string()))),
            kv("index", opt(m.index.map(|i| i.to_string()))),
            kv(
                "tags",
                if tags.is_empty() {
                    "none".to_string()
                } else {
                    tags.join(", ")
                },
            ),
            kv(
                "simply connected",
                opt(r.annotations.simply_connected.map(|b| b.to_string())),
            ),
            kv(
                "kodaira dimension",
                opt(r.annotations.kappa.map(|k| k.to_string())),
            ),
        ],
    );

    if let Some(d) = &m.hodge {
        let (betti, euler) = betti_euler(d)?;
        let mut rows: Vec<Vec<String>> = betti
            .iter()
            .enumerate()
            .map(|(k, b)| kv(format!("b{k}"), b.to_string()))
            .collect();
        rows.push(kv("euler", euler.to_string()));
        rep.table("Betti numbers", &["name", "value"], rows);
        let mut headers = vec!["p\\q".to_string()];
        headers.extend((0..=n).map(|q| q.to_string()));
        let rows = (0..=n)
            .map(|p| {
                let mut row = vec![p.to_string()];
                row.extend((0..=n).map(|q| d.get(p, q).to_string()));
                row
            })
            .collect();
        rep.tables.push(super::report::Table {
            caption: "Hodge numbers".into(),
            headers,
            rows,
        });
    }

    let mut classes = Vec::new();
    for i in 1..=n {
        classes.push(kv(format!("c{i}"), m.ring.format(&m.chern_class(i))));
    }
    for (i, p) in pontrjagin_classes(m)?.iter().enumerate().take(n / 2) {
        classes.push(kv(format!("p{}", i + 1), m.ring.format(p)));
    }
    for (i, w) in stiefel_whitney_classes(m)?.iter().enumerate().skip(1) {
        classes.push(kv(format!("w{}", 2 * i), m.ring.format(w)));
    }
    rep.table("characteristic classes", &["class", "value"], classes);

    let chern = chern_numbers(m)?;
    rep.table(
        "Chern numbers",
        &["name", "value"],
        chern
            .rows()
            .into_iter()
            .map(|(k, v)| kv(k, v.to_string()))
            .collect(),
    );
    if n % 2 == 0 {
        let pont = pontrjagin_numbers(m)?;
        rep.table(
            "Pontrjagin numbers",
            &["name", "value"],
            pont.rows()
                .into_iter()
                .map(|(k, v)| kv(k, v.to_string()))
                .collect(),
        );
    }
    let sw = sw_numbers(m)?;
    rep.table(
        "Stiefel-Whitney numbers",
        &["name", "value"],
        sw.iter()
            .map(|(p, v)| kv(sw_label(p), v.to_string()))
            .collect(),
    );

    let mut rows = vec![kv("euler (c_n)", m.euler_number()?.to_string())];
    if n % 2 == 0 {
        let sig = m.hodge.as_ref().map(signature_from_hodge);
        rows.push(kv(
            "signature (hodge-index)",
            opt(sig.and_then(|s| s.ok()).map(|s| s.to_string())),
        ));
        rows.push(kv(
            "signature (legacy)",
            opt(m.hodge.as_ref().map(|d| signature_legacy(d).to_string())),
        ));
        rows.push(kv("signature (L-genus)", na(l_genus_signature(m))));
        if let Some(q) = r.annotations.quoted_signature {
            rows.push(kv("signature (quoted, discrepant)", q.to_string()));
        }
    }
    rows.push(kv(
        "chi(O) (hodge)",
        opt(m
            .hodge
            .as_ref()
            .map(|d| d.chi_structure_sheaf().to_string())),
    ));
    rows.push(kv("chi(O) (Riemann-Roch)", na(hrr_chi(m, 0))));
    rep.table(
        "signature and holomorphic Euler characteristic",
        &["name", "value"],
        rows,
    );

    let integral = chern.iter().all(|(_, v)| is_integer(v));
    rep.table(
        "divisibility",
        &["name", "value"],
        vec![
            kv("w2 = 0", na(w2_vanishes(m))),
            kv(
                "K 2-divisible (annotation)",
                opt(r.annotations.k_two_divisible.map(|b| b.to_string())),
            ),
            kv("c1 = index·h", opt(m.index.map(|i| i.to_string()))),
            kv("Chern numbers integral", integral.to_string()),
        ],
    );
    Ok(rep)
}

/// Rank, signature and parity of `H^2` for a surface.
pub fn lattice_of(r: &ManifoldRecord) -> Result<LatticeInvariants> {
    let m = &r.model;
    if m.dim() != 2 {
        return Err(Error::NotASurface(format!(
            "{} has dimension {}",
            r.name(),
            m.dim()
        )));
    }
    let c = chern_numbers(m)?;
    let c1sq = to_i64(&c.get(&[1, 1])).ok_or_else(|| Error::NonIntegral("c1^2".into()))?;
    let c2 = to_i64(&c.get(&[2])).ok_or_else(|| Error::NonIntegral("c2".into()))?;
    surface_lattice(c1sq, c2, w2_vanishes(m)?)
}

fn comparison_rows(r: &ManifoldRecord) -> Result<Vec<(String, String)>> {
    let m = &r.model;
    let mut rows = Vec::new();
    match r.betti() {
        Some(b) => rows.extend(
            b.iter()
                .enumerate()
                .map(|(k, v)| (format!("b{k}"), v.to_string())),
        ),
        None => rows.extend((0..=2 * m.dim()).map(|k| (format!("b{k}"), "n/a".to_string()))),
    }
    rows.push(("euler".into(), m.euler_number()?.to_string()));
    if m.dim().is_multiple_of(2) {
        for (k, v) in pontrjagin_numbers(m)?.rows() {
            rows.push((k, v.to_string()));
        }
        rows.push(("signature".into(), na(l_genus_signature(m))));
    }
    for (p, v) in sw_numbers(m)? {
        rows.push((sw_label(&p), v.to_string()));
    }
    rows.push(("w2 = 0".into(), w2_vanishes(m)?.to_string()));
    if m.dim() == 2 {
        rows.push(("intersection form".into(), na(lattice_of(r))));
    }
    Ok(rows)
}

/// Side-by-side homeomorphism invariants and the first one that differs.
pub fn cmd_compare(catalog: &Catalog, a: &str, b: &str) -> Result<Report> {
    let ra = catalog.resolve(a)?;
    let rb = catalog.resolve(b)?;
    if ra.model.dim() != rb.model.dim() {
        return Err(Error::InvalidDimension(format!(
            "{} has dimension {} but {} has dimension {}",
            ra.name(),
            ra.model.dim(),
            rb.name(),
            rb.model.dim()
        )));
    }
    let xa = comparison_rows(&ra)?;
    let xb: BTreeMap<String, String> = comparison_rows(&rb)?.into_iter().collect();
    let mut rep = Report::new(format!("Compare {} and {}", ra.name(), rb.name()));
    let mut first = None;
    let mut rows = Vec::new();
    for (k, va) in &xa {
        let vb = xb.get(k).cloned().unwrap_or_else(|| "n/a".into());
        let comparable = va != "n/a" && vb != "n/a";
        let status = match (comparable, *va == vb) {
            (false, _) => "skipped",
            (true, true) => "equal",
            (true, false) => "differ",
        };
        if status == "differ" && first.is_none() {
            first = Some(format!("{k}: {va} vs {vb}"));
        }
        rows.push(vec![k.clone(), va.clone(), vb.clone(), status.to_string()]);
    }
    rep.table(
        "invariants",
        &["invariant", ra.name(), rb.name(), "status"],
        rows,
    );
    if ra.model.dim() == 2 {
        if let (Ok(la), Ok(lb)) = (lattice_of(&ra), lattice_of(&rb)) {
            rep.line(format!(
                "Intersection forms {la} and {lb}: {}",
                if la == lb {
                    "equivalent by the classification of unimodular forms"
                } else {
                    "not equivalent"
                }
            ));
        }
    }
    rep.verdict = Some(match first {
        Some(d) => format!("obstructed ({d})"),
        None => "no obstruction found among computed invariants".into(),
    });
    Ok(rep)
}

/// Deduction pipelines reachable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pipeline {
    RicciFlatExclusion,
    IndexMatch,
    GeneralTypeIndex,
    CubicPartner,
    DivisorC3,
    HkPipeline,
    CyHk,
    Bb,
}

impl Pipeline {
    pub const ALL: [Pipeline; 8] = [
        Pipeline::RicciFlatExclusion,
        Pipeline::IndexMatch,
        Pipeline::GeneralTypeIndex,
        Pipeline::CubicPartner,
        Pipeline::DivisorC3,
        Pipeline::HkPipeline,
        Pipeline::CyHk,
        Pipeline::Bb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pipeline::RicciFlatExclusion => "ricci-flat-exclusion",
            Pipeline::IndexMatch => "index-match",
            Pipeline::GeneralTypeIndex => "general-type-index",
            Pipeline::CubicPartner => "cubic-partner",
            Pipeline::DivisorC3 => "divisor-c3",
            Pipeline::HkPipeline => "hk-pipeline",
            Pipeline::CyHk => "cy-hk",
            Pipeline::Bb => "bb",
        }
    }
}

impl FromStr for Pipeline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pipeline::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Pipeline::ALL.iter().map(|p| p.name()).collect();
                Error::Unsupported(format!(
                    "unknown pipeline `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Arguments of `deduce`; which ones matter depends on the pipeline.
#[derive(Clone, Debug, Default)]
pub struct DeduceArgs {
    pub target: Option<String>,
    pub family: Option<String>,
    pub d: Option<i64>,
    pub n: Option<i64>,
    pub dim: Option<u32>,
    pub chi: Option<i64>,
}

fn usage(msg: &str) -> Error {
    Error::MissingData(msg.to_string())
}

/// Runs a pipeline. Returns the trace, the record used for replay and the
/// key under which its expected verdict is pinned.
pub fn run_pipeline(
    catalog: &Catalog,
    p: Pipeline,
    args: &DeduceArgs,
) -> Result<(DeductionTrace, Option<ManifoldRecord>, String)> {
    let record = |default: Option<&str>| -> Result<ManifoldRecord> {
        let name = args
            .target
            .as_deref()
            .or(default)
            .ok_or_else(|| usage("this pipeline needs a target record"))?;
        catalog.resolve(name)
    };
    Ok(match p {
        Pipeline::RicciFlatExclusion
        | Pipeline::IndexMatch
        | Pipeline::GeneralTypeIndex
        | Pipeline::CubicPartner
        | Pipeline::HkPipeline => {
            let default = match p {
                Pipeline::CubicPartner => Some("cubic4"),
                Pipeline::HkPipeline => Some("hilb2_k3"),
                _ => None,
            };
            let r = record(default)?;
            let t = match p {
                Pipeline::RicciFlatExclusion => ricci_flat_exclusion(&r)?,
                Pipeline::IndexMatch => fano_index_match(&r)?,
                Pipeline::GeneralTypeIndex => general_type_index(&r)?,
                Pipeline::CubicPartner => cubic_partner_solve(&r)?,
                _ => hk_partner_pipeline(&r)?,
            };
            let key = r.name().to_string();
            (t, Some(r), key)
        }
        Pipeline::DivisorC3 => {
            let fam = args
                .family
                .as_deref()
                .or(args.target.as_deref())
                .unwrap_or("cubic");
            let family: Family = fam.parse()?;
            let d = args.d.unwrap_or(1);
            let t = divisor_c3_compare(family, d)?;
            let (x, _) = partner_model(family)?;
            (t, Some(x), format!("{} d={d}", family.record_name()))
        }
        Pipeline::CyHk => {
            let n = match (args.n, &args.target) {
                (Some(n), _) => n,
                (None, Some(t)) => t.parse().map_err(|_| usage("cy-hk takes an integer n"))?,
                (None, None) => return Err(usage("cy-hk needs --n")),
            };
            (cy_hk_distinction(n)?, None, format!("n={n}"))
        }
        Pipeline::Bb => {
            let dim = args.dim.ok_or_else(|| usage("bb needs --dim"))?;
            let chi = args.chi.ok_or_else(|| usage("bb needs --chi"))?;
            (bb_trace(dim, chi), None, format!("dim={dim} chi={chi}"))
        }
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PinFile {
    #[serde(default)]
    verdict: Vec<PinEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PinEntry {
    pipeline: String,
    target: String,
    summary: String,
}

/// Expected verdict summaries, keyed by pipeline and target key.
#[derive(Clone, Debug, Default)]
pub struct Pins {
    entries: BTreeMap<(Pipeline, String), String>,
}

impl Pins {
    /// The verdicts this crate pins for its own catalog.
    pub fn builtin() -> Self {
        let mut p = Pins::default();
        let table: &[(Pipeline, &str, &str)] = &[
            (Pipeline::RicciFlatExclusion, "quadric4", "excluded"),
            (
                Pipeline::RicciFlatExclusion,
                "cubic4",
                "no K-trivial partner: w₂ obstruction",
            ),
            (
                Pipeline::RicciFlatExclusion,
                "dp5",
                "no K-trivial partner: w₂ obstruction",
            ),
            (
                Pipeline::IndexMatch,
                "cubic4",
                "any Fano partner has r_Y = 3 and c1^4 = 243 (eliminated s: -1)",
            ),
            (
                Pipeline::IndexMatch,
                "pn(4)",
                "any Fano partner has r_Y = 5 and c1^4 = 625 (eliminated s: -2, -1)",
            ),
            (
                Pipeline::GeneralTypeIndex,
                "dp5",
                "any general-type partner has K_Y = 3·L_Y",
            ),
            (
                Pipeline::GeneralTypeIndex,
                "cubic4",
                "any general-type partner has K_Y = 3·L_Y",
            ),
            (
                Pipeline::GeneralTypeIndex,
                "quadric4",
                "any general-type partner has K_Y = 4·L_Y",
            ),
            (
                Pipeline::CubicPartner,
                "cubic4",
                "(r,a)=(3,0); h^{4,0} = 0, h^{3,1} = 1, h^{2,2} = 21",
            ),
            (Pipeline::HkPipeline, "hilb2_k3", "ν ∈ {0,2}"),
            (Pipeline::Bb, "dim=4 chi=0", "no decompositions"),
            (Pipeline::Bb, "dim=4 chi=3", "HK(4)"),
            (Pipeline::Bb, "dim=6 chi=0", "CY(3)×CY(3)"),
        ];
        for (pl, k, s) in table {
            p.insert(*pl, k, s);
        }
        p
    }

    pub fn insert(&mut self, p: Pipeline, key: &str, summary: &str) {
        self.entries
            .insert((p, key.to_string()), summary.to_string());
    }

    /// Reads `[[verdict]]` tables with `pipeline`, `target` and `summary`.
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let file: PinFile = toml::from_str(text).map_err(|e| Error::Parse {
            source_name: source_name.to_string(),
            message: e.to_string(),
        })?;
        let mut p = Pins::default();
        for e in file.verdict {
            p.insert(e.pipeline.parse()?, &e.target, &e.summary);
        }
        Ok(p)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Pins::parse(&text, &path.display().to_string())
    }

    /// Entries of `other` take precedence.
    pub fn merged(mut self, other: Pins) -> Self {
        self.entries.extend(other.entries);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pipeline, &str, &str)> {
        self.entries
            .iter()
            .map(|((p, k), s)| (*p, k.as_str(), s.as_str()))
    }

    /// Pinned summary; divisor and CY/HK verdicts follow closed forms for
    /// every parameter.
    pub fn expected(&self, p: Pipeline, key: &str) -> Option<String> {
        if let Some(s) = self.entries.get(&(p, key.to_string())) {
            return Some(s.clone());
        }
        match p {
            Pipeline::DivisorC3 => {
                let (fam, d) = key.split_once(" d=")?;
                let d: i64 = d.parse().ok()?;
                match fam {
                    "cubic4" => {
                        let v = 3 * d * (2 - 6 * d + 3 * d * d - d * d * d);
                        let w = 3 * d * (-2 - 6 * d - 3 * d * d - d * d * d);
                        Some(format!(
                            "c3(V) = {v} ≠ {w} = c3(W): equality forces 2 + 3d^2 = 0"
                        ))
                    }
                    _ => None,
                }
            }
            Pipeline::CyHk => {
                let n: i64 = key.strip_prefix("n=")?.parse().ok()?;
                (n >= 2).then(|| {
                    format!(
                        "CY and HK {}-folds are never o-homeomorphic: χ(O) = 2 vs {}",
                        2 * n,
                        n + 1
                    )
                })
            }
            _ => None,
        }
    }
}

/// Runs a pipeline and checks its verdict against the pins and its steps
/// by replay. Exit code 1 on a mismatch or a failed replay.
pub fn cmd_deduce(
    catalog: &Catalog,
    pins: &Pins,
    pipeline: &str,
    args: &DeduceArgs,
) -> Result<CmdOutput> {
    let p: Pipeline = pipeline.parse()?;
    let (trace, record, key) = run_pipeline(catalog, p, args)?;
    let mut rep = Report::new(format!("{} ({key})", p.name()));
    let mut exit = 0;
    match replay(&trace, record.as_ref()) {
        Ok(n) => rep.line(format!("Replay: {n} quantities recomputed")),
        Err(errs) => {
            rep.line(format!("Replay failed: {}", errs.join("; ")));
            exit = 1;
        }
    }
    match pins.expected(p, &key) {
        Some(want) if want == trace.verdict.summary => rep.line("Pinned verdict: match"),
        Some(want) => {
            rep.line(format!("Pinned verdict: mismatch, expected `{want}`"));
            exit = 1;
        }
        None => rep.line("Pinned verdict: none for this target"),
    }
    rep.traces.push(trace);
    Ok(CmdOutput { report: rep, exit })
}
