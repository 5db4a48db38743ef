//! Failed structural checks and the search for what caused them.

use alloc::vec::Vec;
use core::fmt;

use crate::atoms;
use crate::graph::Graph;
use crate::search::{self, Embedding, Pattern, SearchScope};

/// A structural check that failed on the input.
///
/// The checks are consequences of the freeness the case assumes, so a failure on a valid input
/// means the input was not valid after all. `certificate` is a forbidden induced subgraph and
/// `cutset` a clique cutset when the search finds one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFault {
    pub claim: &'static str,
    pub vertices: Vec<usize>,
    pub certificate: Option<Embedding>,
    pub cutset: Option<Vec<usize>>,
}

impl StructureFault {
    /// True iff every piece of evidence holds in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let cert_ok = self.certificate.as_ref().is_none_or(|e| e.verify(g));
        let cut_ok = self.cutset.as_ref().is_none_or(|c| {
            g.is_clique(c) && {
                let mut rest = g.vertex_set();
                for &v in c {
                    rest.remove(v);
                }
                g.components_within(&rest).len() > g.components().len()
            }
        });
        cert_ok && cut_ok && self.vertices.iter().all(|&v| v < g.n())
    }

    pub fn map_vertices(self, f: &dyn Fn(usize) -> usize) -> StructureFault {
        StructureFault {
            claim: self.claim,
            vertices: self.vertices.into_iter().map(f).collect(),
            certificate: self.certificate.map(|e| Embedding { pattern: e.pattern, map: e.map.into_iter().map(f).collect() }),
            cutset: self.cutset.map(|c| c.into_iter().map(f).collect()),
        }
    }
}

impl fmt::Display for StructureFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check `{}` failed on {:?}", self.claim, self.vertices)?;
        if let Some(e) = &self.certificate {
            write!(f, "; induced {} on {:?}", e.pattern, e.map)?;
        }
        if let Some(c) = &self.cutset {
            write!(f, "; clique cutset {c:?}")?;
        }
        Ok(())
    }
}

impl core::error::Error for StructureFault {}

/// Searches near the failure first, then the whole graph, for a pattern of `context`; falls back
/// to a clique cutset.
pub(crate) fn diagnose(
    g: &Graph,
    context: &[Pattern],
    focus: &[usize],
    claim: &'static str,
    vertices: Vec<usize>,
) -> StructureFault {
    let mut local = g.set_of(focus);
    for &v in &vertices {
        local.insert(v);
    }
    let mut wider = g.neighborhood_of_set(&local);
    wider.union_with(&local);
    let mut certificate = None;
    for within in [&local, &wider] {
        let scope = SearchScope { within: Some(within), anchor: None };
        certificate = context.iter().find_map(|&p| search::find_induced_scoped(g, p, &scope));
        if certificate.is_some() {
            break;
        }
    }
    if certificate.is_none() {
        certificate = search::violation(g, context);
    }
    let cutset = if certificate.is_none() { atoms::find_clique_cutset(g).map(|c| c.cutset) } else { None };
    StructureFault { claim, vertices, certificate, cutset }
}
