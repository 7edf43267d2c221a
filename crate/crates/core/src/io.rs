//! JSON persistence for labelings.
//!
//! A labeling file is `{"n": .., "edges": [[u, v, label], ...], "meta": {..}}`
//! with one triple per edge. `meta` is optional and carries certificates.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::{AstrayLabeling, PipelineMeta};
use crate::error::{Error, Result};
use crate::graph::{edge_count, edge_index, Edge, EdgeLabeling, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMeta {
    pub p: u32,
    pub m: u32,
    pub l: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub astray: Option<Vec<[u64; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub type_witness: Option<WitnessMeta>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pipeline: Option<PipelineMeta>,
}

impl Meta {
    pub fn named(construction: impl Into<String>) -> Self {
        Meta {
            construction: Some(construction.into()),
            ..Meta::default()
        }
    }

    /// Records the astray part of `a` as label triples.
    pub fn with_astray(mut self, a: &AstrayLabeling) -> Self {
        self.astray = Some(
            a.astray
                .iter()
                .map(|e| {
                    [
                        u64::from(e.u),
                        u64::from(e.v),
                        u64::from(a.t.label(e.u, e.v)),
                    ]
                })
                .collect(),
        );
        self.b = Some(a.b);
        self
    }

    /// Astray edges recorded in the file, checked against `t`.
    pub fn astray_edges(&self, t: &EdgeLabeling) -> Result<Option<Vec<Edge>>> {
        let Some(triples) = &self.astray else {
            return Ok(None);
        };
        let n = t.order();
        let mut out = Vec::with_capacity(triples.len().min(edge_count(n) as usize));
        for &[u, v, x] in triples {
            let (u, v) = (small(u)?, small(v)?);
            edge_index(n, u, v)?;
            let found = t.label(u, v);
            if u64::from(found) != x {
                return Err(Error::Malformed(format!(
                    "astray entry ({u}, {v}) says label {x} but the labeling has {found}"
                )));
            }
            out.push(Edge { u, v });
        }
        Ok(Some(out))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelingFile {
    n: u32,
    edges: Vec<[u64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
}

fn small(x: u64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Malformed(format!("value {x} is too large")))
}

/// Parses and validates a labeling document.
pub fn parse_labeling(text: &str) -> Result<(EdgeLabeling, Meta)> {
    let file: LabelingFile = serde_json::from_str(text)?;
    let n = file.n;
    if n < 2 {
        return Err(Error::Malformed(format!(
            "n = {n}: a labeling needs at least one edge"
        )));
    }
    let eps = edge_count(n);
    if file.edges.len() as u64 != eps {
        return Err(Error::Malformed(format!(
            "K_{n} has {eps} edges but the file lists {}",
            file.edges.len()
        )));
    }
    let mut values: Vec<Label> = vec![0; file.edges.len()];
    for &[u, v, x] in &file.edges {
        let (u, v) = (small(u)?, small(v)?);
        let k = edge_index(n, u, v)? as usize - 1;
        if x == 0 || x > eps {
            return Err(Error::NotBijection {
                eps,
                detail: format!("label {x} on ({u}, {v}) is outside the range"),
            });
        }
        if values[k] != 0 {
            return Err(Error::Malformed(format!("edge ({u}, {v}) is listed twice")));
        }
        values[k] = x as Label;
    }
    let t = EdgeLabeling::from_values(n, values)?;
    let meta = file.meta.unwrap_or_default();
    meta.astray_edges(&t)?;
    Ok((t, meta))
}

/// Serializes a labeling; output is byte-stable for equal inputs.
pub fn labeling_to_json(t: &EdgeLabeling, meta: &Meta) -> Result<String> {
    let file = LabelingFile {
        n: t.order(),
        edges: t
            .iter()
            .map(|(e, x)| [u64::from(e.u), u64::from(e.v), u64::from(x)])
            .collect(),
        meta: (*meta != Meta::default()).then(|| meta.clone()),
    };
    let mut s = serde_json::to_string(&file)?;
    s.push('\n');
    Ok(s)
}

pub fn save_labeling(t: &EdgeLabeling, meta: &Meta, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, labeling_to_json(t, meta)?)?;
    Ok(())
}

pub fn load_labeling(path: impl AsRef<Path>) -> Result<(EdgeLabeling, Meta)> {
    parse_labeling(&std::fs::read_to_string(path)?)
}
