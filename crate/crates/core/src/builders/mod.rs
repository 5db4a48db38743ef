//! Clique-width expressions for (C4, P6)-free atoms.
//!
//! [`build_atom_expr`] removes twins and universal vertices, then dispatches on the first
//! pattern present among F1, C6, F2 and C5 (each later case assumes the earlier patterns are
//! absent); a graph with none of them is a clique. Every structural fact a case relies on is
//! checked as it is used. A failed check becomes a [`StructureFault`] carrying a forbidden
//! induced subgraph or a clique cutset when one can be found.

pub mod assemble;
mod c5;
mod c6;
pub mod chain;
pub mod dnc;
mod f1;
mod f2;
mod fault;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

pub use assemble::{assemble, AssembleError, Assembly, AssemblyRecord, Part};
pub use c5::build_c5_expr;
pub use c6::build_c6_expr;
pub use chain::{chain_expr, ChainError};
pub use dnc::{dnc_expr, DncError};
pub use f1::build_f1_expr;
pub use f2::build_f2_expr;
pub use fault::StructureFault;

use crate::atoms::{self, CliqueCutset};
use crate::cwx::{self, CwExpr};
use crate::graph::Graph;
use crate::search::{self, Embedding, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    F1,
    C6Petersen,
    C6Blowup,
    F2,
    C5Case1,
    C5Case2,
    ChordalClique,
}

impl Case {
    pub const ALL: [Case; 7] =
        [Case::F1, Case::C6Petersen, Case::C6Blowup, Case::F2, Case::C5Case1, Case::C5Case2, Case::ChordalClique];

    pub fn name(self) -> &'static str {
        match self {
            Case::F1 => "F1",
            Case::C6Petersen => "C6-petersen",
            Case::C6Blowup => "C6-blowup",
            Case::F2 => "F2",
            Case::C5Case1 => "C5-case1",
            Case::C5Case2 => "C5-case2",
            Case::ChordalClique => "chordal-clique",
        }
    }

    pub fn parse(s: &str) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s))
    }

    /// Largest width this case may produce.
    pub fn bound(self) -> usize {
        match self {
            Case::F1 | Case::C6Blowup => 13,
            Case::C6Petersen => 10,
            Case::F2 => 14,
            Case::C5Case1 => 11,
            Case::C5Case2 => 18,
            Case::ChordalClique => 2,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildOutcome {
    pub expr: CwExpr,
    pub width: usize,
    pub case: Case,
    /// Structural checks passed on the way, in order.
    pub audit: Vec<&'static str>,
    pub assembly: Option<AssemblyRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("the graph is empty")]
    Empty,
    #[error("the graph contains an induced {} on {:?}", .0.pattern, .0.map)]
    Forbidden(Embedding),
    #[error("the graph is not an atom: {:?} is a clique cutset", .0.cutset)]
    NotAtom(CliqueCutset),
    #[error("the graph is not strong: {0}")]
    NotStrong(String),
    #[error("the graph has no induced {0}")]
    MissingPattern(Pattern),
    #[error(transparent)]
    Fault(#[from] StructureFault),
}

/// Result of a case builder on a strong atom.
pub(crate) struct Built {
    pub expr: CwExpr,
    pub case: Case,
    pub assembly: Option<AssemblyRecord>,
}

const C4_P6: [Pattern; 2] = [Pattern::Cycle(4), Pattern::Path(6)];

/// Checks that `g` is a strong (C4, P6)-free atom that also avoids `extra` and contains `needed`.
fn check_input(g: &Graph, extra: &[Pattern], needed: Option<Pattern>) -> Result<(), BuildError> {
    if g.n() == 0 {
        return Err(BuildError::Empty);
    }
    if let Some(e) = search::violation(g, &C4_P6).or_else(|| search::violation(g, extra)) {
        return Err(BuildError::Forbidden(e));
    }
    if let Some(c) = atoms::find_clique_cutset(g) {
        return Err(BuildError::NotAtom(c));
    }
    if !atoms::is_strong(g) {
        let why = match (0..g.n()).find(|&v| g.is_universal(v)) {
            Some(v) => alloc::format!("vertex {v} is universal"),
            None => {
                let tp = g.twin_partition();
                let c = tp.classes.iter().find(|c| c.len() > 1).expect("a twin class exists");
                alloc::format!("vertices {} and {} are twins", c[0], c[1])
            }
        };
        return Err(BuildError::NotStrong(why));
    }
    if let Some(p) = needed {
        if search::find_induced(g, p).is_none() {
            return Err(BuildError::MissingPattern(p));
        }
    }
    Ok(())
}

/// Runs a case builder and checks its output against `g` and the case bound.
fn finish(ctx: &mut Ctx<'_>, built: Built) -> Result<BuildOutcome, StructureFault> {
    ctx.claim("expr.validates", cwx::validate(&built.expr, ctx.g), Vec::new)?;
    let width = built.expr.width();
    ctx.claim("expr.case-bound", width <= built.case.bound(), Vec::new)?;
    Ok(BuildOutcome { expr: built.expr, width, case: built.case, audit: core::mem::take(&mut ctx.audit), assembly: built.assembly })
}

/// Builds an expression with at most 18 labels for a (C4, P6)-free atom.
pub fn build_atom_expr(g: &Graph) -> Result<BuildOutcome, BuildError> {
    if g.n() == 0 {
        return Err(BuildError::Empty);
    }
    if let Some(e) = search::violation(g, &C4_P6) {
        return Err(BuildError::Forbidden(e));
    }
    if let Some(c) = atoms::find_clique_cutset(g) {
        return Err(BuildError::NotAtom(c));
    }
    let red = atoms::strong_reduce(g);
    let h = &red.reduced;
    let lift = |f: StructureFault| f.map_vertices(&|v| red.kept[v]);
    let inner = build_strong(h).map_err(lift)?;
    let mut ctx = Ctx::new(g, &C4_P6);
    ctx.audit = inner.audit;
    let expr = red.replay(&inner.expr).map_err(|_| ctx.fault("expr.replay", Vec::new()))?;
    ctx.claim("expr.replay-validates", cwx::validate(&expr, g), Vec::new)?;
    let width = expr.width();
    ctx.claim("expr.case-bound", width <= inner.case.bound(), Vec::new)?;
    ctx.claim("expr.width-18", width <= 18, Vec::new)?;
    Ok(BuildOutcome { expr, width, case: inner.case, audit: ctx.audit, assembly: inner.assembly })
}

/// Dispatch on a strong (C4, P6)-free atom.
fn build_strong(h: &Graph) -> Result<BuildOutcome, StructureFault> {
    if search::find_induced(h, Pattern::F1).is_some() {
        let mut ctx = Ctx::new(h, &f1::CONTEXT);
        let built = f1::build(&mut ctx)?;
        return finish(&mut ctx, built);
    }
    if search::find_induced(h, Pattern::Cycle(6)).is_some() {
        let mut ctx = Ctx::new(h, &c6::CONTEXT);
        let built = c6::build(&mut ctx)?;
        return finish(&mut ctx, built);
    }
    if search::find_induced(h, Pattern::F2).is_some() {
        let mut ctx = Ctx::new(h, &f2::CONTEXT);
        let built = f2::build(&mut ctx)?;
        return finish(&mut ctx, built);
    }
    if search::find_induced(h, Pattern::Cycle(5)).is_some() {
        let mut ctx = Ctx::new(h, &c5::CONTEXT);
        let built = c5::build(&mut ctx)?;
        return finish(&mut ctx, built);
    }
    let mut ctx = Ctx::new(h, &c5::CONTEXT);
    let all: Vec<usize> = (0..h.n()).collect();
    ctx.claim("clique.chordal-atom", h.is_clique(&all), || {
        let (u, v) = (0..h.n())
            .flat_map(|u| (u + 1..h.n()).map(move |v| (u, v)))
            .find(|&(u, v)| !h.has_edge(u, v))
            .expect("not a clique");
        alloc::vec![u, v]
    })?;
    let built = Built { expr: cwx::clique_expr(&all), case: Case::ChordalClique, assembly: None };
    finish(&mut ctx, built)
}

/// Shared state of a case builder: the graph, the freeness the case may assume, the vertices
/// the current structure is anchored on, and the audit trail.
pub(crate) struct Ctx<'g> {
    pub g: &'g Graph,
    pub context: &'static [Pattern],
    pub focus: Vec<usize>,
    pub audit: Vec<&'static str>,
}

impl<'g> Ctx<'g> {
    pub fn new(g: &'g Graph, context: &'static [Pattern]) -> Self {
        Ctx { g, context, focus: Vec::new(), audit: Vec::new() }
    }

    pub fn fault(&self, claim: &'static str, vertices: Vec<usize>) -> StructureFault {
        fault::diagnose(self.g, self.context, &self.focus, claim, vertices)
    }

    pub fn claim(&mut self, claim: &'static str, ok: bool, witness: impl FnOnce() -> Vec<usize>) -> Result<(), StructureFault> {
        if ok {
            self.audit.push(claim);
            Ok(())
        } else {
            Err(self.fault(claim, witness()))
        }
    }

    pub fn empty(&mut self, claim: &'static str, s: &[usize]) -> Result<(), StructureFault> {
        self.claim(claim, s.is_empty(), || s.to_vec())
    }

    pub fn at_most(&mut self, claim: &'static str, s: &[usize], k: usize) -> Result<(), StructureFault> {
        self.claim(claim, s.len() <= k, || s.to_vec())
    }

    pub fn complete(&mut self, claim: &'static str, a: &[usize], b: &[usize]) -> Result<(), StructureFault> {
        let g = self.g;
        let bad = a.iter().find_map(|&x| b.iter().find(|&&y| x != y && !g.has_edge(x, y)).map(|&y| (x, y)));
        self.claim(claim, bad.is_none(), || {
            let (x, y) = bad.expect("a non-edge");
            alloc::vec![x, y]
        })
    }

    pub fn anticomplete(&mut self, claim: &'static str, a: &[usize], b: &[usize]) -> Result<(), StructureFault> {
        let g = self.g;
        let bad = a.iter().find_map(|&x| b.iter().find(|&&y| g.has_edge(x, y)).map(|&y| (x, y)));
        self.claim(claim, bad.is_none(), || {
            let (x, y) = bad.expect("an edge");
            alloc::vec![x, y]
        })
    }

    pub fn clique(&mut self, claim: &'static str, a: &[usize]) -> Result<(), StructureFault> {
        self.complete(claim, a, a)
    }

    /// Converts a sub-builder failure into a fault of `claim`.
    pub fn sub<T, E: SubError>(&mut self, claim: &'static str, r: Result<T, E>) -> Result<T, StructureFault> {
        match r {
            Ok(t) => {
                self.audit.push(claim);
                Ok(t)
            }
            Err(e) => Err(self.fault(claim, e.witness())),
        }
    }
}

pub(crate) trait SubError {
    fn witness(&self) -> Vec<usize>;
}

impl SubError for ChainError {
    fn witness(&self) -> Vec<usize> {
        DncError::Chain(self.clone()).vertices()
    }
}

impl SubError for DncError {
    fn witness(&self) -> Vec<usize> {
        self.vertices()
    }
}

impl SubError for AssembleError {
    fn witness(&self) -> Vec<usize> {
        match *self {
            AssembleError::Overlap(v) | AssembleError::Uncovered(v) => alloc::vec![v],
            AssembleError::NotHomogeneous { outside, seen, unseen } => alloc::vec![outside, seen, unseen],
            _ => Vec::new(),
        }
    }
}

/// Vertices of `from` with a neighbour in `set`.
pub(crate) fn seeing(g: &Graph, from: &[usize], set: &[usize]) -> Vec<usize> {
    let s = g.set_of(set);
    from.iter().copied().filter(|&v| g.row(v).intersects(&s)).collect()
}

/// Vertices of `from` adjacent to every vertex of `set`.
pub(crate) fn complete_to(g: &Graph, from: &[usize], set: &[usize]) -> Vec<usize> {
    let s = g.set_of(set);
    from.iter().copied().filter(|&v| s.is_subset(g.row(v))).collect()
}

pub(crate) fn minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| !b.contains(v)).collect()
}

pub(crate) fn union(parts: &[&[usize]]) -> Vec<usize> {
    let mut out: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Expression with one label per vertex, in vertex order.
pub(crate) fn unique_labels(g: &Graph) -> CwExpr {
    let vs: Vec<usize> = (0..g.n()).collect();
    let labels: Vec<cwx::Label> = (1..=g.n() as cwx::Label).collect();
    cwx::unique_label_expr(g, &vs, &labels)
}
