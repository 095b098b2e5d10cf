//! Text formats: frame spec files and Graphviz export.
//!
//! A frame spec is a JSON record:
//!
//! ```text
//! {
//!   "elements": ["0", "a", "1"],
//!   "covers": [["0", "a"], ["a", "1"]]
//! }
//! ```
//!
//! `covers` lists `[lower, upper]` pairs; any relation whose reflexive-transitive
//! closure is the intended order is accepted on input, and the Hasse diagram is
//! written on output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{frame_from_covers, standard_frame, Frame, StandardFrame};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameSpec {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl FrameSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }

    pub fn build(&self) -> Result<Frame> {
        let covers: Vec<(&str, &str)> = self.covers.iter().map(|[lo, hi]| (lo.as_str(), hi.as_str())).collect();
        let labels: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        frame_from_covers(&labels, &covers)
    }

    pub fn of_frame(frame: &Frame) -> Self {
        FrameSpec {
            elements: frame.labels().to_vec(),
            covers: frame
                .poset()
                .covers()
                .into_iter()
                .map(|(lo, hi)| [frame.label(lo).to_string(), frame.label(hi).to_string()])
                .collect(),
        }
    }

    /// Canonical rendering: one field per line, lists inline.
    pub fn to_text(&self) -> String {
        let elements: Vec<String> = self.elements.iter().map(|e| quote(e)).collect();
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|[lo, hi]| format!("[{}, {}]", quote(lo), quote(hi)))
            .collect();
        format!(
            "{{\n  \"elements\": [{}],\n  \"covers\": [{}]\n}}\n",
            elements.join(", "),
            covers.join(", ")
        )
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Hasse diagram as a DOT digraph, edges lower → upper, nodes in index order.
pub fn to_dot(frame: &Frame, name: &str) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for l in frame.labels() {
        out.push_str(&format!("  {};\n", quote(l)));
    }
    for (lo, hi) in frame.poset().covers() {
        out.push_str(&format!(
            "  {} -> {};\n",
            quote(frame.label(lo)),
            quote(frame.label(hi))
        ));
    }
    out.push_str("}\n");
    out
}

/// Specs for the built-in names: `S`, `T`, `diamond`, `one_point`, `chainN`, `M3`, `N5`.
/// `M3` and `N5` are lattices but not frames.
pub fn builtin_spec(name: &str) -> Option<FrameSpec> {
    let owned = |xs: &[&str], cs: &[(&str, &str)]| FrameSpec {
        elements: xs.iter().map(|s| s.to_string()).collect(),
        covers: cs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
    };
    let frame = match name {
        "S" => standard_frame(StandardFrame::S),
        "T" => standard_frame(StandardFrame::T),
        "diamond" => standard_frame(StandardFrame::Diamond),
        "one_point" => standard_frame(StandardFrame::OnePoint),
        "M3" => {
            return Some(owned(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            ))
        }
        "N5" => {
            return Some(owned(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
            ))
        }
        _ => {
            let n: usize = name.strip_prefix("chain")?.parse().ok()?;
            if n == 0 {
                return None;
            }
            standard_frame(StandardFrame::Chain(n))
        }
    };
    Some(FrameSpec::of_frame(&frame))
}
