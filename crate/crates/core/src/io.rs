//! Reading and writing complexes.
//!
//! Two formats are supported:
//!
//! * `.scx` text: a `vertices <m>` line followed by `facet i1 .. ik` lines
//!   (1-based, whitespace separated). `#` starts a comment.
//! * a JSON document `{"vertices": m, "facets": [[..], ..]}`.
//!
//! Both carry the ground set size explicitly, so ghost vertices survive a
//! round trip. Complexes whose labels are not `1..=m` (for instance a link)
//! are written with their vertices renumbered in order.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexDocument {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let facets = k
            .facets()
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.iter().map(|p| p + 1).collect())
            .collect();
        ComplexDocument {
            vertices: k.ground_size(),
            facets,
        }
    }

    pub fn to_complex(&self, guard: usize) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets_with_guard(self.vertices, &self.facets, guard)
    }
}

pub fn parse_scx(text: &str, guard: usize) -> Result<SimplicialComplex> {
    let mut vertices: Option<usize> = None;
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().expect("nonempty line has a token");
        let parse_int = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found `{tok}`"),
            })
        };
        match keyword {
            "vertices" => {
                if vertices.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate `vertices` line".into(),
                    });
                }
                let m = tokens.next().ok_or_else(|| Error::Parse {
                    line,
                    message: "`vertices` needs a count".into(),
                })?;
                let m = parse_int(m)?;
                if let Some(extra) = tokens.next() {
                    return Err(Error::Parse {
                        line,
                        message: format!("unexpected `{extra}` after vertex count"),
                    });
                }
                vertices = Some(m);
            }
            "facet" => {
                let m = vertices.ok_or_else(|| Error::Parse {
                    line,
                    message: "`facet` before `vertices`".into(),
                })?;
                let facet = tokens.map(parse_int).collect::<Result<Vec<_>>>()?;
                if let Some(&bad) = facet.iter().find(|&&v| v == 0 || v > m) {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex {bad} is out of range 1..={m}"),
                    });
                }
                facets.push(facet);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown keyword `{other}`"),
                })
            }
        }
    }
    let m = vertices.ok_or(Error::Parse {
        line: 1,
        message: "missing `vertices` line".into(),
    })?;
    SimplicialComplex::from_facets_with_guard(m, &facets, guard)
}

pub fn to_scx(k: &SimplicialComplex) -> String {
    let doc = ComplexDocument::from_complex(k);
    let mut out = format!("vertices {}\n", doc.vertices);
    for f in &doc.facets {
        let vs: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("facet {}\n", vs.join(" ")));
    }
    out
}

pub fn parse_json(text: &str, guard: usize) -> Result<SimplicialComplex> {
    let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    doc.to_complex(guard)
}

pub fn to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(&ComplexDocument::from_complex(k)).expect("document serialises")
}

/// Parse either format, detected from the first non-blank character.
pub fn parse_auto(text: &str, guard: usize) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        parse_json(text, guard)
    } else {
        parse_scx(text, guard)
    }
}

pub fn read_complex(path: &Path, guard: usize) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_auto(&text, guard)
}

/// Write as JSON when the extension is `.json`, `.scx` text otherwise.
pub fn write_complex(path: &Path, k: &SimplicialComplex) -> Result<()> {
    let text = if path.extension().is_some_and(|e| e == "json") {
        to_json(k)
    } else {
        to_scx(k)
    };
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
