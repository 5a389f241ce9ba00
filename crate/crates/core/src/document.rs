//! JSON persistence for colorings and Graphviz DOT export.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::error::Error;
use crate::planner::Plan;
use crate::torus::{Edge, TorusShape, Vertex};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unsupported format_version {0:?}")]
    Version(String),

    #[error("edge {0} listed twice")]
    DuplicateEdge(String),

    #[error(transparent)]
    Invalid(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: Vec<usize>,
    pub axis: usize,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub format_version: String,
    pub dims: Vec<usize>,
    pub palette_size: usize,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<Plan>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl ColoringDocument {
    /// Edges are listed in canonical order (axis, then base row-major).
    pub fn from_coloring(c: &Coloring, plan: Option<Plan>, provenance: Option<String>) -> Self {
        let shape = c.shape();
        let edges = (0..shape.edge_count())
            .map(|id| {
                let e = shape.edge(id);
                EdgeRecord {
                    u: e.base.0,
                    axis: e.axis,
                    color: c.color(id),
                }
            })
            .collect();
        ColoringDocument {
            format_version: FORMAT_VERSION.to_string(),
            dims: shape.dims().to_vec(),
            palette_size: c.palette_size(),
            edges,
            plan,
            provenance,
        }
    }

    pub fn to_coloring(&self) -> Result<Coloring, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format_version.clone()));
        }
        let shape = TorusShape::new(&self.dims)?;
        let mut colors: Vec<Option<Color>> = vec![None; shape.edge_count()];
        let mut seen = HashSet::new();
        for rec in &self.edges {
            let e = Edge {
                base: Vertex(rec.u.clone()),
                axis: rec.axis,
            };
            let id = shape.edge_id(&e)?;
            if !seen.insert(id) {
                return Err(DocumentError::DuplicateEdge(e.to_string()));
            }
            colors[id] = Some(rec.color);
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(id, c)| c.ok_or_else(|| Error::IncompleteColoring(shape.edge(id).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Coloring::new(shape, self.palette_size, colors)?)
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with a trailing newline; fixed field order.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Edge colors used by the DOT export, cycled for larger palettes.
pub const DOT_PALETTE: [&str; 12] = [
    "red",
    "blue",
    "green3",
    "orange",
    "purple",
    "cyan3",
    "magenta",
    "gold3",
    "brown",
    "gray40",
    "navy",
    "olivedrab",
];

fn node_name(v: &Vertex) -> String {
    let parts: Vec<String> = v.0.iter().map(|c| c.to_string()).collect();
    parts.join("_")
}

pub fn to_dot(c: &Coloring) -> String {
    let shape = c.shape();
    let mut out = String::new();
    let dims: Vec<String> = shape.dims().iter().map(|n| n.to_string()).collect();
    writeln!(out, "graph torus {{").unwrap();
    writeln!(
        out,
        "  label=\"C_{} ({} colors)\";",
        dims.join(" x C_"),
        c.palette_size()
    )
    .unwrap();
    for i in 0..shape.vertex_count() {
        let v = shape.vertex(i);
        writeln!(out, "  \"{}\" [label=\"{}\"];", node_name(&v), v).unwrap();
    }
    for id in 0..shape.edge_count() {
        let (a, b) = shape.edge_endpoints(id);
        let color = c.color(id);
        writeln!(
            out,
            "  \"{}\" -- \"{}\" [color=\"{}\", label=\"{}\"];",
            node_name(&shape.vertex(a)),
            node_name(&shape.vertex(b)),
            DOT_PALETTE[color as usize % DOT_PALETTE.len()],
            color
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
