use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::deduce::DeductionTrace;
use crate::error::Error;

/// Output encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Markdown,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse {
                source_name: "--format".into(),
                message: format!("expected `md` or `json`, got `{s}`"),
            }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Markdown => "md",
            Format::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub caption: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Tables, free-text lines and deduction traces, rendered in insertion order
/// within each kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub lines: Vec<String>,
    pub tables: Vec<Table>,
    pub traces: Vec<DeductionTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            lines: Vec::new(),
            tables: Vec::new(),
            traces: Vec::new(),
            verdict: None,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn table(&mut self, caption: &str, headers: &[&str], rows: Vec<Vec<String>>) {
        self.tables.push(Table {
            caption: caption.to_string(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows,
        });
    }

    /// Looks up the value column of a two-column table row.
    pub fn value(&self, caption: &str, key: &str) -> Option<&str> {
        self.tables
            .iter()
            .find(|t| t.caption == caption)?
            .rows
            .iter()
            .find(|r| r.first().map(String::as_str) == Some(key))
            .and_then(|r| r.get(1))
            .map(String::as_str)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => self.to_markdown(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# {}\n\n", self.title);
        for l in &self.lines {
            out.push_str(l);
            out.push_str("\n\n");
        }
        for t in &self.tables {
            out.push_str(&format!("## {}\n\n", t.caption));
            out.push_str(&row(&t.headers));
            out.push_str(&format!("|{}\n", "---|".repeat(t.headers.len())));
            for r in &t.rows {
                out.push_str(&row(r));
            }
            out.push('\n');
        }
        for tr in &self.traces {
            out.push_str(&tr.to_markdown());
            out.push('\n');
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("**Verdict:** {v}\n"));
        }
        out
    }
}

fn row(cells: &[String]) -> String {
    let cells: Vec<String> = cells.iter().map(|c| c.replace('|', "\\|")).collect();
    format!("| {} |\n", cells.join(" | "))
}
