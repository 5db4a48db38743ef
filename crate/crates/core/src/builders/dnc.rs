//! Divide and conquer for a clique `A` next to a P4-free set `B`.
//!
//! Conditions on the `C4`-free graph `g[A ∪ B]`:
//! (i) `A` is a clique; (ii) `g[B]` is P4-free; (iii) no vertex of `A` has two non-adjacent
//! neighbours in `B`; (iv) no induced P4 starts in `A` and continues with three vertices of `B`.
//! The result is a nice 4-expression with `A` labelled 2 and `B` labelled 4.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use thiserror::Error;

use super::chain::{self, chain_expr, ChainError};
use crate::bits::Bits;
use crate::cwx::{clique_expr_with, CwExpr};
use crate::graph::Graph;
use crate::search::{self, Pattern, SearchScope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DncError {
    #[error("both sides are empty")]
    Empty,
    #[error("vertex {0} is on both sides or out of range")]
    BadVertex(usize),
    #[error("g[A ∪ B] contains an induced C4 on {0:?}")]
    C4([usize; 4]),
    #[error("condition (i): {0} and {1} in A are non-adjacent")]
    NotClique(usize, usize),
    #[error("condition (ii): g[B] contains the induced P4 {0:?}")]
    P4InB([usize; 4]),
    #[error("condition (iii): {a} has the non-adjacent neighbours {b1} and {b2} in B")]
    SpreadNeighbours { a: usize, b1: usize, b2: usize },
    #[error("condition (iv): induced P4 {0:?} starts in A and continues in B")]
    LabelledP4([usize; 4]),
    #[error("step `{claim}` failed on {vertices:?}")]
    Step { claim: &'static str, vertices: Vec<usize> },
    #[error(transparent)]
    Chain(#[from] ChainError),
}

impl DncError {
    /// Vertices that witness the failure.
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            DncError::Empty => Vec::new(),
            DncError::BadVertex(v) => alloc::vec![*v],
            DncError::C4(q) | DncError::P4InB(q) | DncError::LabelledP4(q) => q.to_vec(),
            DncError::NotClique(u, v) => alloc::vec![*u, *v],
            DncError::SpreadNeighbours { a, b1, b2 } => alloc::vec![*a, *b1, *b2],
            DncError::Step { vertices, .. } => vertices.clone(),
            DncError::Chain(c) => match c {
                ChainError::Empty => Vec::new(),
                ChainError::BadVertex(v) => alloc::vec![*v],
                ChainError::NotClique { u, v, .. } => alloc::vec![*u, *v],
                ChainError::NotChain { a1, b1, a2, b2 } => alloc::vec![*a1, *b1, *a2, *b2],
            },
        }
    }
}

fn quad(m: &[usize]) -> [usize; 4] {
    [m[0], m[1], m[2], m[3]]
}

/// Which check a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    C4Free,
    Clique,
    P4FreeB,
    NoSpread,
    NoLabelledP4,
}

impl DncError {
    pub fn condition(&self) -> Option<Condition> {
        match self {
            DncError::C4(_) => Some(Condition::C4Free),
            DncError::NotClique(..) => Some(Condition::Clique),
            DncError::P4InB(_) => Some(Condition::P4FreeB),
            DncError::SpreadNeighbours { .. } => Some(Condition::NoSpread),
            DncError::LabelledP4(_) => Some(Condition::NoLabelledP4),
            _ => None,
        }
    }

    /// True iff the witness really shows the stated failure in `g`.
    pub fn verify(&self, g: &Graph, a: &[usize], b: &[usize]) -> bool {
        let in_a = |v: &usize| a.contains(v);
        let in_b = |v: &usize| b.contains(v);
        match *self {
            DncError::C4(q) => {
                q.iter().all(|v| in_a(v) || in_b(v)) && search::is_induced_copy(g, &Pattern::Cycle(4).graph(), &q)
            }
            DncError::NotClique(u, v) => in_a(&u) && in_a(&v) && u != v && !g.has_edge(u, v),
            DncError::P4InB(q) => q.iter().all(in_b) && search::is_induced_copy(g, &Pattern::Path(4).graph(), &q),
            DncError::SpreadNeighbours { a: x, b1, b2 } => {
                in_a(&x) && in_b(&b1) && in_b(&b2) && g.has_edge(x, b1) && g.has_edge(x, b2) && !g.has_edge(b1, b2)
            }
            DncError::LabelledP4(q) => {
                in_a(&q[0]) && q[1..].iter().all(in_b) && search::is_induced_copy(g, &Pattern::Path(4).graph(), &q)
            }
            _ => false,
        }
    }
}

fn c4_violation(g: &Graph, a: &[usize], b: &[usize]) -> Option<DncError> {
    let mut ab = g.set_of(a);
    ab.union_with(&g.set_of(b));
    let scope = SearchScope { within: Some(&ab), anchor: None };
    search::find_induced_scoped(g, Pattern::Cycle(4), &scope).map(|e| DncError::C4(quad(&e.map)))
}

fn clique_violation(g: &Graph, a: &[usize]) -> Option<DncError> {
    a.iter()
        .enumerate()
        .find_map(|(k, &u)| a[k + 1..].iter().find(|&&v| !g.has_edge(u, v)).map(|&v| DncError::NotClique(u, v)))
}

fn p4_violation(g: &Graph, b: &[usize]) -> Option<DncError> {
    let bs = g.set_of(b);
    let scope = SearchScope { within: Some(&bs), anchor: None };
    search::find_induced_scoped(g, Pattern::Path(4), &scope).map(|e| DncError::P4InB(quad(&e.map)))
}

fn spread_violation(g: &Graph, a: &[usize], b: &[usize]) -> Option<DncError> {
    for &u in a {
        let nb: Vec<usize> = b.iter().copied().filter(|&v| g.has_edge(u, v)).collect();
        for (k, &b1) in nb.iter().enumerate() {
            if let Some(&b2) = nb[k + 1..].iter().find(|&&b2| !g.has_edge(b1, b2)) {
                return Some(DncError::SpreadNeighbours { a: u, b1, b2 });
            }
        }
    }
    None
}

fn labelled_p4_violation(g: &Graph, a: &[usize], b: &[usize]) -> Option<DncError> {
    let path = Pattern::Path(4).graph();
    let bs = g.set_of(b);
    for &u in a {
        let mut within = bs.clone();
        within.insert(u);
        let scope = SearchScope { within: Some(&within), anchor: Some(u) };
        let mut found = None;
        search::for_each_induced(g, &path, &scope, |m| {
            if m[0] == u {
                found = Some(quad(m));
            } else if m[3] == u {
                found = Some([m[3], m[2], m[1], m[0]]);
            }
            found.is_some()
        });
        if let Some(q) = found {
            return Some(DncError::LabelledP4(q));
        }
    }
    None
}

/// Every failed check, one witness each, in the order C4, (i), (ii), (iii), (iv).
pub fn violations(g: &Graph, a: &[usize], b: &[usize]) -> Vec<DncError> {
    [c4_violation(g, a, b), clique_violation(g, a), p4_violation(g, b), spread_violation(g, a, b), labelled_p4_violation(g, a, b)]
        .into_iter()
        .flatten()
        .collect()
}

/// Checks conditions (i) to (iv) and C4-freeness of `g[A ∪ B]`.
pub fn check_conditions(g: &Graph, a: &[usize], b: &[usize]) -> Result<(), DncError> {
    chain::check_sides(g, a, b).map_err(|e| match e {
        ChainError::BadVertex(v) => DncError::BadVertex(v),
        _ => DncError::Empty,
    })?;
    if a.is_empty() && b.is_empty() {
        return Err(DncError::Empty);
    }
    if let Some(e) = clique_violation(g, a) {
        return Err(e);
    }
    if let Some(e) = c4_violation(g, a, b) {
        return Err(e);
    }
    match p4_violation(g, b).or_else(|| spread_violation(g, a, b)).or_else(|| labelled_p4_violation(g, a, b)) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Nice 4-expression for `g[a ∪ b]` under conditions (i) to (iv).
pub fn dnc_expr(g: &Graph, a: &[usize], b: &[usize]) -> Result<CwExpr, DncError> {
    check_conditions(g, a, b)?;
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    build(g, &a, &b)
}

fn swap_pairs() -> BTreeMap<u16, u16> {
    BTreeMap::from([(1, 2), (2, 1), (3, 4), (4, 3)])
}

fn split_by(g: &Graph, a: &[usize], part: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let s = g.set_of(part);
    a.iter().partition(|&&u| g.row(u).intersects(&s))
}

fn build(g: &Graph, a: &[usize], b: &[usize]) -> Result<CwExpr, DncError> {
    if b.len() <= 1 {
        return Ok(chain_expr(g, a, b)?);
    }
    let bs: Bits = g.set_of(b);
    let comps = g.components_within(&bs);
    if comps.len() > 1 {
        let b1 = comps[0].clone();
        let b2 = Bits::from_iter(g.n(), comps[1..].iter().flatten().copied()).to_vec();
        let (a1, a2) = split_by(g, a, &b1);
        let t1 = build(g, &a1, &b1)?;
        let t2 = build(g, &a2, &b2)?;
        return Ok(CwExpr::relabel(1, 2, CwExpr::join(1, 2, CwExpr::union(t1, CwExpr::relabel(2, 1, t2)))));
    }
    // g[B] is connected, so its complement is disconnected; B1 is the set of vertices universal in B.
    let (b1, b2): (Vec<usize>, Vec<usize>) = b.iter().partition(|&&v| b.iter().all(|&w| w == v || g.has_edge(v, w)));
    if b1.is_empty() {
        return Err(DncError::Step { claim: "B1 non-empty", vertices: b.to_vec() });
    }
    if b2.is_empty() {
        return Ok(chain_expr(g, a, b)?);
    }
    let (a1, a2) = split_by(g, a, &b1);
    let (an, _) = split_by(g, a, &b2);
    let b1s = g.set_of(&b1);
    if let Some(&u) = an.iter().find(|&&u| !b1s.is_subset(g.row(u))) {
        return Err(DncError::Step { claim: "N(B2) ∩ A complete to B1", vertices: alloc::vec![u] });
    }
    let rest: Vec<usize> = a1.iter().copied().filter(|u| !an.contains(u)).collect();
    let tau = build(g, &an, &b2)?;
    let eps = chain_expr(g, &rest, &b1)?.rename_labels(&swap_pairs()).expect("swap is injective");
    let sigma = CwExpr::relabel(
        3,
        4,
        CwExpr::relabel(1, 2, CwExpr::join(3, 4, CwExpr::join(2, 3, CwExpr::join(1, 2, CwExpr::union(eps, tau))))),
    );
    if a2.is_empty() {
        return Ok(sigma);
    }
    let delta = clique_expr_with(&a2, 1, 2);
    Ok(CwExpr::relabel(1, 2, CwExpr::join(1, 2, CwExpr::union(delta, sigma))))
}
