//! Gluing nice expressions of homogeneous pairs and triples with a small remainder `V0`.
//!
//! Each part is built with the low labels `1..=k` (`k = 6` when a triple is present, else 4) and
//! moved to fresh labels per set, except the last part, which keeps its own labels. Vertices of
//! `V0` take the low labels the last part leaves free, then fresh ones. All edges between units
//! (sets and `V0` vertices) are then added by joins, so the width is at most `|V0| + 2p + 3t`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use thiserror::Error;

use crate::bits::Bits;
use crate::cwx::{self, CwExpr, Label};
use crate::graph::Graph;

/// A homogeneous pair or triple with a nice expression for the graph it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub sets: Vec<Vec<usize>>,
    /// `None` when every set is empty.
    pub expr: Option<CwExpr>,
}

impl Part {
    pub fn new(sets: Vec<Vec<usize>>, expr: Option<CwExpr>) -> Self {
        Part { sets, expr }
    }

    fn is_empty(&self) -> bool {
        self.sets.iter().all(Vec::is_empty)
    }
}

/// Numbers recorded for every assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssemblyRecord {
    pub v0: usize,
    pub pairs: usize,
    pub triples: usize,
    pub bound: usize,
    pub width: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssembleError {
    #[error("V0 has {0} vertices, at least 3 are needed")]
    SmallV0(usize),
    #[error("vertex {0} is covered twice or out of range")]
    Overlap(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("part {0} has no expression or an expression for other vertices")]
    BadPart(usize),
    #[error("expression of part {0} is not nice on its sets")]
    NotNice(usize),
    #[error("expression of part {part} has width {width}, more than {limit}")]
    PartTooWide { part: usize, width: usize, limit: usize },
    #[error("{outside} distinguishes {seen} and {unseen}, which should be homogeneous")]
    NotHomogeneous { outside: usize, seen: usize, unseen: usize },
    #[error("assembled width {width} exceeds the bound {bound}")]
    WidthExceeded { width: usize, bound: usize },
}

pub struct Assembly {
    pub expr: CwExpr,
    pub record: AssemblyRecord,
}

fn compact(e: &CwExpr) -> CwExpr {
    let map: BTreeMap<Label, Label> = e.labels().into_iter().zip(1..).collect();
    e.rename_labels(&map).expect("order-preserving renaming is injective")
}

struct Unit {
    vertices: Vec<usize>,
    label: Label,
    part: Option<usize>,
}

/// Expression for `g` from `v0`, homogeneous `pairs` and `triples`.
pub fn assemble(g: &Graph, v0: &[usize], pairs: &[Part], triples: &[Part]) -> Result<Assembly, AssembleError> {
    if v0.len() < 3 {
        return Err(AssembleError::SmallV0(v0.len()));
    }
    let mut covered = Bits::new(g.n());
    let all_parts: Vec<&Part> = pairs.iter().chain(triples).collect();
    for &v in v0.iter().chain(all_parts.iter().flat_map(|p| p.sets.iter().flatten())) {
        if v >= g.n() || covered.contains(v) {
            return Err(AssembleError::Overlap(v));
        }
        covered.insert(v);
    }
    if let Some(v) = (0..g.n()).find(|&v| !covered.contains(v)) {
        return Err(AssembleError::Uncovered(v));
    }
    let live: Vec<(usize, &Part)> = all_parts.iter().copied().enumerate().filter(|(_, p)| !p.is_empty()).collect();
    let p = pairs.iter().filter(|p| !p.is_empty()).count();
    let t = triples.iter().filter(|p| !p.is_empty()).count();
    let bound = v0.len() + 2 * p + 3 * t;
    let low: Label = if t > 0 { 6 } else { 4 };
    let mut next: Label = low + 1;
    let mut pieces = Vec::new();
    let mut units: Vec<Unit> = Vec::new();
    let mut last_labels: Vec<Label> = Vec::new();
    for (k, &(idx, part)) in live.iter().enumerate() {
        let limit = if idx < pairs.len() { 4 } else { 6 };
        let Some(e) = part.expr.as_ref() else { return Err(AssembleError::BadPart(idx)) };
        let expect: Vec<usize> = {
            let mut v: Vec<usize> = part.sets.iter().flatten().copied().collect();
            v.sort_unstable();
            v
        };
        let mut have = e.vertices();
        have.sort_unstable();
        if have != expect || !cwx::validate_induced(e, g) {
            return Err(AssembleError::BadPart(idx));
        }
        let sets: Vec<&[usize]> = part.sets.iter().map(Vec::as_slice).collect();
        if !cwx::is_nice(e, &sets) {
            return Err(AssembleError::NotNice(idx));
        }
        if e.width() > limit {
            return Err(AssembleError::PartTooWide { part: idx, width: e.width(), limit });
        }
        let mut e = compact(e);
        let is_last = k + 1 == live.len();
        for set in part.sets.iter().filter(|s| !s.is_empty()) {
            let l = cwx::part_label(&e, set).expect("nice expression labels each set uniformly");
            let target = if is_last {
                last_labels.push(l);
                l
            } else {
                let f = next;
                next += 1;
                e = CwExpr::relabel(l, f, e);
                f
            };
            units.push(Unit { vertices: set.clone(), label: target, part: Some(idx) });
        }
        pieces.push(e);
    }
    let mut free_low = (1..=low).filter(|l| !last_labels.contains(l));
    for &v in v0 {
        let l = free_low.next().unwrap_or_else(|| {
            let f = next;
            next += 1;
            f
        });
        pieces.push(CwExpr::create(v, l));
        units.push(Unit { vertices: alloc::vec![v], label: l, part: None });
    }
    let mut expr = CwExpr::union_all(pieces).expect("V0 is non-empty");
    for (i, u) in units.iter().enumerate() {
        for w in &units[i + 1..] {
            if u.part.is_some() && u.part == w.part {
                continue;
            }
            let adjacent = |x: usize| w.vertices.iter().filter(|&&y| g.has_edge(x, y)).count();
            let counts: Vec<usize> = u.vertices.iter().map(|&x| adjacent(x)).collect();
            let full = w.vertices.len();
            if counts.iter().all(|&c| c == full) {
                expr = CwExpr::join(u.label, w.label, expr);
            } else if counts.iter().any(|&c| c != 0) {
                return Err(distinguisher(g, &u.vertices, &w.vertices));
            }
        }
    }
    let width = expr.width();
    let record = AssemblyRecord { v0: v0.len(), pairs: p, triples: t, bound, width };
    if width > bound {
        return Err(AssembleError::WidthExceeded { width, bound });
    }
    Ok(Assembly { expr, record })
}

/// Two units with mixed adjacency: some vertex of one side sees part of the other side, or
/// vertices of one side see different amounts.
fn distinguisher(g: &Graph, u: &[usize], w: &[usize]) -> AssembleError {
    for (x, y) in [(u, w), (w, u)] {
        for &o in x {
            let seen = y.iter().find(|&&v| g.has_edge(o, v));
            let unseen = y.iter().find(|&&v| !g.has_edge(o, v));
            if let (Some(&seen), Some(&unseen)) = (seen, unseen) {
                return AssembleError::NotHomogeneous { outside: o, seen, unseen };
            }
        }
    }
    // Every vertex sees all or nothing of the other side but not uniformly.
    let o = u.iter().copied().find(|&o| w.iter().all(|&v| g.has_edge(o, v))).expect("mixed counts");
    let q = u.iter().copied().find(|&q| w.iter().all(|&v| !g.has_edge(q, v))).expect("mixed counts");
    AssembleError::NotHomogeneous { outside: w[0], seen: o, unseen: q }
}
