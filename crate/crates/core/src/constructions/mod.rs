//! Labeling constructions for complete graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_count, Edge, EdgeLabeling};
use crate::verification::{check_astray, AstrayReport};

pub mod cocktail;
pub mod direct;
pub mod factorial;
pub mod pipeline;
pub mod recursive;

pub use cocktail::{set_cache_dir, supermagic_cocktail, CocktailLabeling, SearchStrategy};
pub use direct::{bar_t, t8q, t8q_with, tau};
pub use factorial::{factorial_baseline, factorial_style};
pub use pipeline::{pipeline, pipeline_sequence};
pub use recursive::{double, extend_even, extend_odd, Plan};

/// Where an edge sits relative to the centred astray interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Lower,
    Astray,
    Higher,
}

/// A labeling with its astray part `A`; `L` and `H` follow from the labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AstrayLabeling {
    pub t: EdgeLabeling,
    /// Astray edges in canonical order.
    pub astray: Vec<Edge>,
    pub b: u32,
}

impl AstrayLabeling {
    /// Checks the certificate and wraps it; a failure here is a construction bug.
    pub(crate) fn seal(t: EdgeLabeling, mut astray: Vec<Edge>, b: u32) -> Result<Self> {
        astray.sort_unstable();
        let eps = edge_count(t.order());
        if (astray.len() as u64) % 2 != eps % 2 {
            return Err(Error::Internal(format!(
                "astray part of size {} has the wrong parity for ε = {eps}",
                astray.len()
            )));
        }
        let out = AstrayLabeling { t, astray, b };
        let report = out.check();
        if !report.pass {
            return Err(Error::Internal(format!(
                "construction is not {b}-astray good: {}",
                report.first_violation.unwrap_or_default()
            )));
        }
        Ok(out)
    }

    /// Wraps a labeling read from elsewhere after checking it.
    pub fn from_parts(t: EdgeLabeling, mut astray: Vec<Edge>, b: u32) -> Result<Self> {
        astray.sort_unstable();
        let out = AstrayLabeling { t, astray, b };
        let report = out.check();
        if !report.pass {
            return Err(Error::NotAstrayGood {
                b,
                detail: report.first_violation.unwrap_or_default(),
            });
        }
        Ok(out)
    }

    pub fn check(&self) -> AstrayReport {
        check_astray(&self.t, &self.astray, self.b)
    }

    pub fn order(&self) -> u32 {
        self.t.order()
    }

    pub fn a(&self) -> u64 {
        self.astray.len() as u64
    }

    /// `|L| = |H|`.
    pub fn l(&self) -> u64 {
        (self.t.edge_count() - self.a()) / 2
    }

    pub fn part_of_label(&self, x: u32) -> Part {
        let x = u64::from(x);
        if x <= self.l() {
            Part::Lower
        } else if x <= self.l() + self.a() {
            Part::Astray
        } else {
            Part::Higher
        }
    }

    pub fn part(&self, e: Edge) -> Part {
        self.part_of_label(self.t.label(e.u, e.v))
    }

    pub fn lower(&self) -> Vec<Edge> {
        self.edges_in(Part::Lower)
    }

    pub fn higher(&self) -> Vec<Edge> {
        self.edges_in(Part::Higher)
    }

    fn edges_in(&self, part: Part) -> Vec<Edge> {
        self.t
            .iter()
            .filter(|&(_, x)| self.part_of_label(x) == part)
            .map(|(e, _)| e)
            .collect()
    }
}

/// Record of how a pipeline labeling was assembled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineMeta {
    pub n: u32,
    pub s: u32,
    /// `n_0, n_1, ..., n_s`.
    pub sequence: Vec<u32>,
    /// One tag per construction step, in application order.
    pub steps: Vec<String>,
    /// Type parameters certified on the output, when a magnitude was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
}
