//! Text, JSON and DOT renderings of arborescences, Gray paths and flip graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arborescence::{Arborescence, Flip};
use crate::digraph::ArcId;
use crate::error::{Error, Result};
use crate::graycode::GrayPath;
use crate::oracle::FlipGraph;

pub const DOT_LABEL_WIDTH: usize = 40;

/// Sorted arc ids separated by spaces.
pub fn arborescence_line(a: &Arborescence) -> String {
    join(&a.arc_list())
}

fn join(ids: &[ArcId]) -> String {
    ids.iter().map(|id| id.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrayPathJson {
    pub n_steps: usize,
    pub steps: Vec<Vec<ArcId>>,
    pub flips: Vec<Flip>,
    #[serde(default)]
    pub provenance: Vec<String>,
}

impl From<&GrayPath> for GrayPathJson {
    fn from(p: &GrayPath) -> Self {
        GrayPathJson {
            n_steps: p.len(),
            steps: p.arc_lists(),
            flips: p.flips.clone(),
            provenance: p.provenance.clone(),
        }
    }
}

pub fn gray_path_json(p: &GrayPath) -> String {
    serde_json::to_string_pretty(&GrayPathJson::from(p)).expect("plain data serializes")
}

/// First arborescence in full, then `-removed +added` per step.
pub fn delta_text(p: &GrayPath) -> String {
    let mut out = String::new();
    if let Some(first) = p.steps.first() {
        writeln!(out, "{}", arborescence_line(first)).unwrap();
    }
    for f in &p.flips {
        writeln!(out, "-{} +{}", f.removed, f.added).unwrap();
    }
    out
}

/// Reads the arc lists of a path written as JSON or as delta text.
pub fn parse_path(text: &str) -> Result<Vec<Vec<ArcId>>> {
    if text.trim_start().starts_with('{') {
        let json: GrayPathJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if json.n_steps != json.steps.len() {
            return Err(Error::Parse {
                line: 0,
                message: format!("n_steps is {} but {} steps are listed", json.n_steps, json.steps.len()),
            });
        }
        return Ok(json.steps);
    }
    parse_delta(text)
}

pub fn parse_delta(text: &str) -> Result<Vec<Vec<ArcId>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((line, first)) = lines.next() else {
        return Ok(Vec::new());
    };
    let id = |line: usize, tok: &str| {
        tok.parse::<usize>().map(ArcId).map_err(|_| Error::Parse {
            line,
            message: format!("expected an arc id, found {tok:?}"),
        })
    };
    let mut current: BTreeSet<ArcId> = first.split_whitespace().map(|t| id(line, t)).collect::<Result<_>>()?;
    let mut out = vec![current.iter().copied().collect::<Vec<_>>()];
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [rm, add] = toks.as_slice() else {
            return Err(Error::Parse {
                line,
                message: "expected \"-a +b\"".into(),
            });
        };
        let (Some(rm), Some(add)) = (rm.strip_prefix('-'), add.strip_prefix('+')) else {
            return Err(Error::Parse {
                line,
                message: "expected \"-a +b\"".into(),
            });
        };
        let (rm, add) = (id(line, rm)?, id(line, add)?);
        if !current.remove(&rm) {
            return Err(Error::Parse {
                line,
                message: format!("arc {rm} is not in the current arborescence"),
            });
        }
        current.insert(add);
        out.push(current.iter().copied().collect());
    }
    Ok(out)
}

fn truncate(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let mut t: String = s.chars().take(width - 3).collect();
        t.push_str("...");
        t
    }
}

/// The flip graph as DOT plus a legend mapping node names to full arc lists.
/// Edges are labelled by the pivot vertex.
pub fn flip_graph_dot(fg: &FlipGraph) -> (String, String) {
    let mut dot = String::from("graph flips {\n  node [shape=box, fontname=monospace];\n");
    let mut legend = String::new();
    for (i, a) in fg.nodes.iter().enumerate() {
        let line = arborescence_line(a);
        writeln!(dot, "  t{i} [label=\"{}\"];", truncate(&line, DOT_LABEL_WIDTH)).unwrap();
        writeln!(legend, "t{i}: {line}").unwrap();
    }
    for (i, j, f) in fg.edges() {
        writeln!(dot, "  t{i} -- t{j} [label=\"{}\"];", f.pivot).unwrap();
    }
    dot.push_str("}\n");
    (dot, legend)
}
