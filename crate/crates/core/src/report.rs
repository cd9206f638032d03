//! Structured reports emitted by the command-line tool.
//!
//! A [`Report`] serialises to JSON losslessly; its `Display` impl renders the
//! same data as text.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::chordal::{ChordlessCycle, EliminationOrdering};
use crate::complex::SimplicialComplex;
use crate::homology::{BettiTable, Verification, VerificationOutcome};
use crate::io::ComplexDocument;
use crate::lie::{HmFactor, LoopSpaceDecomposition, SeriesCheck};
use crate::series::PoincareSeries;
use crate::wedge::{Pairs, WedgeDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub tool_version: String,
    pub input: Option<InputDigest>,
    pub result: Payload,
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub vertices: usize,
    pub faces: usize,
    pub ghost_vertices: Vec<usize>,
    pub flag: bool,
    pub chordal: bool,
}

impl InputDigest {
    pub fn of(k: &SimplicialComplex) -> Self {
        InputDigest {
            vertices: k.ground_size(),
            faces: k.face_count(),
            ghost_vertices: k.ghost_vertices(),
            flag: k.is_flag(),
            chordal: crate::chordal::is_chordal(&k.skeleton_graph()).is_chordal(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum Payload {
    Info {
        dimension: isize,
        face_size_counts: Vec<usize>,
        facets: Vec<Vec<usize>>,
        missing_faces: Vec<Vec<usize>>,
        components: usize,
    },
    Flagify {
        flag_complex: ComplexDocument,
        added_faces: Vec<Vec<usize>>,
        written_to: Option<String>,
    },
    Chordal {
        ordering: Option<EliminationOrdering>,
        cycle: Option<ChordlessCycle>,
    },
    Decompose {
        decomposition: WedgeDecomposition,
        polynomial: Option<PoincareSeries>,
    },
    Betti {
        table: BettiTable,
        max_degree: Option<usize>,
    },
    Verify(Verification),
    HiltonMilnor {
        spheres: Vec<u32>,
        max_dim: u32,
        factors: Vec<HmFactor>,
        series_check: SeriesCheck,
    },
    LoopSpace(LoopSpaceDecomposition),
    /// The input is well formed but outside the construction's hypotheses.
    Rejected {
        reason: String,
        certificate: Option<Vec<usize>>,
    },
    Error {
        message: String,
    },
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Copy with timing zeroed, for comparisons.
    pub fn without_timing(&self) -> Self {
        Report {
            elapsed_us: 0,
            ..self.clone()
        }
    }
}

fn set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn plural(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn betti_line(t: &BettiTable) -> String {
    let parts: Vec<String> = t.ranks.iter().map(|(d, r)| format!("b{d}={r}")).collect();
    parts.join(" ")
}

fn render_pairs(p: &Pairs) -> String {
    match p {
        Pairs::MomentAngle => "moment-angle".into(),
        Pairs::Spheres(d) => {
            let ds: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            format!("spheres {}", ds.join(","))
        }
        Pairs::Symbolic => "symbolic".into(),
    }
}

fn render_factors(out: &mut String, factors: &[HmFactor], prefix: &str) -> fmt::Result {
    let mut groups: Vec<(String, usize)> = Vec::new();
    for f in factors {
        let name = f.to_string();
        match groups.last_mut() {
            Some((n, c)) if *n == name => *c += 1,
            _ => groups.push((name, 1)),
        }
    }
    let summary: Vec<String> = groups.iter().map(|(n, c)| format!("{n} x{c}")).collect();
    writeln!(out, "factors ({}): {}", factors.len(), summary.join(", "))?;
    for f in factors {
        writeln!(
            out,
            "  {:<8} {:<16} {}",
            f.to_string(),
            f.basis_element.spelled(prefix),
            f.annotation
        )?;
    }
    Ok(())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "polyprod {}: {}", self.tool_version, self.command.join(" "))?;
        if let Some(d) = &self.input {
            writeln!(
                out,
                "complex: {} vertices, {} faces, {}, {}{}",
                d.vertices,
                d.faces,
                if d.flag { "flag" } else { "not flag" },
                if d.chordal { "chordal 1-skeleton" } else { "non-chordal 1-skeleton" },
                if d.ghost_vertices.is_empty() {
                    String::new()
                } else {
                    format!(", ghost vertices {}", set(&d.ghost_vertices))
                }
            )?;
        }
        match &self.result {
            Payload::Info {
                dimension,
                face_size_counts,
                facets,
                missing_faces,
                components,
            } => {
                writeln!(out, "dimension: {dimension}")?;
                let fc: Vec<String> = face_size_counts.iter().map(|x| x.to_string()).collect();
                writeln!(out, "faces by size: {}", fc.join(" "))?;
                writeln!(out, "components: {components}")?;
                let fs: Vec<String> = facets.iter().map(|x| set(x)).collect();
                writeln!(out, "facets: {}", fs.join(" "))?;
                let ms: Vec<String> = missing_faces.iter().map(|x| set(x)).collect();
                writeln!(out, "missing faces: {}", ms.join(" "))?;
            }
            Payload::Flagify {
                flag_complex,
                added_faces,
                written_to,
            } => {
                let fs: Vec<String> = flag_complex.facets.iter().map(|x| set(x)).collect();
                writeln!(out, "flagification facets: {}", fs.join(" "))?;
                if added_faces.is_empty() {
                    writeln!(out, "added faces: none (already flag)")?;
                } else {
                    let a: Vec<String> = added_faces.iter().map(|x| set(x)).collect();
                    writeln!(out, "added faces: {}", a.join(" "))?;
                }
                if let Some(p) = written_to {
                    writeln!(out, "written to: {p}")?;
                }
            }
            Payload::Chordal { ordering, cycle } => {
                if let Some(o) = ordering {
                    writeln!(out, "chordal: yes")?;
                    writeln!(out, "perfect elimination ordering: {}", tuple(&o.order))?;
                }
                if let Some(c) = cycle {
                    writeln!(out, "chordal: no")?;
                    writeln!(out, "chordless cycle: {}", tuple(&c.cycle))?;
                }
            }
            Payload::Decompose {
                decomposition,
                polynomial,
            } => {
                writeln!(out, "pairs: {}", render_pairs(&decomposition.pairs))?;
                writeln!(
                    out,
                    "wedge summands: {} over {}",
                    decomposition.summand_count(),
                    plural(decomposition.summands.len(), "subset")
                )?;
                writeln!(out, "  {:<16} {:>4}  {:<6} name", "omega", "mult", "sphere")?;
                for s in &decomposition.summands {
                    let sphere = s.sphere_dim.map_or("-".to_string(), |d| format!("S^{d}"));
                    writeln!(
                        out,
                        "  {:<16} {:>4}  {:<6} {}",
                        set(&s.omega),
                        s.multiplicity,
                        sphere,
                        s.name
                    )?;
                }
                let mut by_dim: std::collections::BTreeMap<u32, usize> = Default::default();
                for s in &decomposition.summands {
                    if let Some(d) = s.sphere_dim {
                        *by_dim.entry(d).or_default() += s.multiplicity;
                    }
                }
                if !by_dim.is_empty() {
                    let parts: Vec<String> = by_dim.iter().map(|(d, c)| format!("S^{d} x{c}")).collect();
                    writeln!(out, "by sphere: {}", parts.join(", "))?;
                }
                if decomposition.summands.is_empty() {
                    writeln!(out, "contractible")?;
                }
                if let Some(p) = polynomial {
                    writeln!(out, "Poincare polynomial: {}", p.terms())?;
                }
                writeln!(
                    out,
                    "scanned {} ({} with zero multiplicity)",
                    plural(decomposition.stats.subsets_scanned, "subset"),
                    decomposition.stats.zero_multiplicity
                )?;
                for a in &decomposition.assumptions {
                    writeln!(out, "assumes: {a}")?;
                }
            }
            Payload::Betti { table, max_degree } => {
                if let Some(d) = max_degree {
                    writeln!(out, "degrees up to {d}")?;
                }
                writeln!(out, "Betti numbers of Z_K: {}", betti_line(table))?;
            }
            Payload::Verify(v) => {
                writeln!(out, "Betti numbers of Z_K: {}", betti_line(&v.betti))?;
                match &v.outcome {
                    VerificationOutcome::Pass { decomposition, polynomial } => {
                        writeln!(out, "verdict: PASS (wedge of {} spheres)", decomposition.summand_count())?;
                        writeln!(out, "wedge polynomial: {}", polynomial.terms())?;
                        writeln!(out, "higher homology of full subcomplexes: none")?;
                    }
                    VerificationOutcome::NotCoH {
                        cycle,
                        omega,
                        h1_rank,
                        zk_degree,
                    } => {
                        writeln!(out, "verdict: not a co-H-space (1-skeleton not chordal)")?;
                        writeln!(out, "chordless cycle: {}", tuple(&cycle.cycle))?;
                        writeln!(
                            out,
                            "witness: omega {} has H~^1 rank {h1_rank}, giving b{zk_degree}={}",
                            set(omega),
                            v.betti.get(*zk_degree)
                        )?;
                    }
                    VerificationOutcome::Fail { reason, higher } => {
                        writeln!(out, "verdict: FAIL: {reason}")?;
                        for h in higher {
                            writeln!(out, "  omega {} degree {} rank {}", set(&h.omega), h.degree, h.rank)?;
                        }
                    }
                }
            }
            Payload::HiltonMilnor {
                spheres,
                max_dim,
                factors,
                series_check,
            } => {
                let ds: Vec<String> = spheres.iter().map(|d| format!("S^{d}")).collect();
                writeln!(out, "loop space of {} up to dimension {max_dim}", ds.join(" v "))?;
                render_factors(&mut out, factors, "x")?;
                writeln!(
                    out,
                    "series identity through degree {}: {}",
                    series_check.wedge_side.degree(),
                    if series_check.holds { "holds" } else { "FAILS" }
                )?;
                if !series_check.holds {
                    writeln!(out, "residual: {}", series_check.residual)?;
                }
            }
            Payload::LoopSpace(l) => {
                let ls: Vec<String> = l
                    .letters
                    .iter()
                    .map(|w| format!("{}=S^{} on {}", w.name, w.dim, set(&w.omega)))
                    .collect();
                writeln!(out, "wedge letters: {}", if ls.is_empty() { "none".into() } else { ls.join(", ") })?;
                writeln!(
                    out,
                    "factors of loops on Z_K up to dimension {}{}:",
                    l.max_dim,
                    if l.split_hopf { ", Hopf splitting on" } else { "" }
                )?;
                render_factors(&mut out, &l.factors, "w")?;
                writeln!(out, "loops on DJ(K) = (S^1)^{} x loops on Z_K", l.torus_rank)?;
                writeln!(
                    out,
                    "series check through degree {}: {}",
                    l.exact_degree(),
                    if l.series_consistent { "consistent" } else { "INCONSISTENT" }
                )?;
            }
            Payload::Rejected { reason, certificate } => {
                writeln!(out, "rejected: {reason}")?;
                if let Some(c) = certificate {
                    writeln!(out, "certificate: {}", tuple(c))?;
                }
            }
            Payload::Error { message } => {
                writeln!(out, "error: {message}")?;
            }
        }
        writeln!(out, "elapsed: {} us", self.elapsed_us)?;
        f.write_str(&out)
    }
}
