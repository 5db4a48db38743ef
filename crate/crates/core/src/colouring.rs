//! Chromatic numbers: a backtracking oracle, dynamic programming over clique-width
//! expressions, and the atom pipeline for (C4, P6)-free graphs.
//!
//! The expression DP keeps, per node, the set of reachable colourings up to renaming, each as
//! a multiset of signatures: the labels present in one colour class. Labels that no ancestor
//! joins are dropped from signatures, so a class with an empty signature can absorb any class
//! from the other side of a union. Under a union, classes of the two sides may merge pairwise,
//! so the combined states range over partial matchings between the sides.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use hashbrown::HashSet;
use thiserror::Error;

use crate::atoms;
use crate::builders::{build_atom_expr, BuildError, Case};
use crate::cwx::{self, CwError, CwExpr, Label};
use crate::graph::Graph;
use crate::search::{self, Embedding, Pattern};

/// Largest graph [`chromatic_bruteforce`] accepts.
pub const BRUTEFORCE_LIMIT: usize = 20;
/// Largest graph [`k_colouring`] accepts.
pub const K_COLOURING_LIMIT: usize = 22;
/// Most distinct labels [`chromatic_cwx`] handles.
pub const MAX_DP_LABELS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColourError {
    #[error("graph has {n} vertices, the brute-force limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("expression uses {0} labels, at most 64 are supported")]
    TooManyLabels(usize),
    #[error("malformed expression: {0}")]
    Malformed(#[from] CwError),
    #[error("graph contains an induced {}", .0.pattern)]
    Forbidden(Embedding),
    #[error("building an expression for an atom failed: {0}")]
    Build(#[from] BuildError),
}

fn guard(g: &Graph, limit: usize) -> Result<(), ColourError> {
    if g.n() > limit {
        Err(ColourError::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn extend(g: &Graph, k: usize, v: usize, used: usize, colour: &mut [usize]) -> bool {
    if v == g.n() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| w > v || colour[w] != c) {
            colour[v] = c;
            if extend(g, k, v + 1, used.max(c + 1), colour) {
                return true;
            }
        }
    }
    false
}

/// A proper colouring with colours `0..k`, trying vertices in order and colours smallest first.
pub fn k_colouring(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, ColourError> {
    guard(g, K_COLOURING_LIMIT)?;
    let mut colour = alloc::vec![0; g.n()];
    Ok(extend(g, k, 0, 0, &mut colour).then_some(colour))
}

/// Size of a greedily grown clique, a lower bound on the chromatic number.
pub fn greedy_clique_bound(g: &Graph) -> usize {
    let mut best = usize::from(g.n() > 0);
    for start in 0..g.n() {
        let mut clique = alloc::vec![start];
        let mut cand: Vec<usize> = g.neighbors(start).to_vec();
        cand.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
        for v in cand {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Chromatic number with a witness colouring, for graphs with at most 20 vertices.
pub fn chromatic_bruteforce(g: &Graph) -> Result<(usize, Vec<usize>), ColourError> {
    guard(g, BRUTEFORCE_LIMIT)?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let mut k = greedy_clique_bound(g);
    loop {
        if let Some(c) = k_colouring(g, k)? {
            return Ok((k, c));
        }
        k += 1;
    }
}

/// Result of [`chromatic_cwx`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiBound {
    Exact(usize),
    /// Every colouring needs more than this many colours.
    Exceeds(usize),
}

type State = Vec<u64>;

struct Dp {
    index: BTreeMap<Label, u32>,
    cap: usize,
}

fn bit(index: &BTreeMap<Label, u32>, l: Label) -> u64 {
    1u64 << index[&l]
}

fn canonical(mut s: State) -> State {
    s.sort_unstable();
    s
}

/// Free classes (empty signature) of the two sides, tracked apart from the rest.
#[derive(Clone, Copy)]
struct Free {
    a: usize,
    b: usize,
}

/// All states from merging classes of `x` and `y` along partial matchings. Free classes absorb
/// unmatched classes of the other side, then pair up with each other; this never costs colours.
fn union_states(x: &State, y: &State, cap: usize, clash: &Clash, out: &mut HashSet<State>) {
    let (fa, ra): (Vec<u64>, Vec<u64>) = x.iter().partition(|&&s| s == 0);
    let (fb, rb): (Vec<u64>, Vec<u64>) = y.iter().partition(|&&s| s == 0);
    let mut used = alloc::vec![false; rb.len()];
    let mut merged = Vec::new();
    let free = Free { a: fa.len(), b: fb.len() };
    match_rest(&ra, &rb, &mut used, &mut merged, 0, free, cap, clash, out);
}

#[allow(clippy::too_many_arguments)]
fn match_rest(
    ra: &[u64],
    rb: &[u64],
    used: &mut [bool],
    merged: &mut Vec<u64>,
    unmatched_a: usize,
    free: Free,
    cap: usize,
    clash: &Clash,
    out: &mut HashSet<State>,
) {
    let i = merged.len();
    if i == ra.len() {
        let mut s = merged.clone();
        s.extend(rb.iter().zip(used.iter()).filter(|(_, &u)| !u).map(|(&sig, _)| sig));
        let unmatched_b = s.len() - ra.len();
        let fa = free.a - free.a.min(unmatched_b);
        let fb = free.b - free.b.min(unmatched_a);
        s.extend(core::iter::repeat_n(0, fa.max(fb)));
        if s.len() <= cap {
            out.insert(canonical(s));
        }
        return;
    }
    merged.push(ra[i]);
    match_rest(ra, rb, used, merged, unmatched_a + 1, free, cap, clash, out);
    merged.pop();
    let mut tried: BTreeSet<u64> = BTreeSet::new();
    for j in 0..rb.len() {
        if used[j] || !tried.insert(rb[j]) || clashes(ra[i] | rb[j], clash) {
            continue;
        }
        used[j] = true;
        merged.push(ra[i] | rb[j]);
        match_rest(ra, rb, used, merged, unmatched_a, free, cap, clash, out);
        merged.pop();
        used[j] = false;
    }
}

/// `clash[l]`: labels that must never share a colour class with `l` because some ancestor joins
/// them (after relabelling).
type Clash = [u64; 64];

fn clashes(sig: u64, clash: &Clash) -> bool {
    let mut rest = sig;
    while rest != 0 {
        let l = rest.trailing_zeros() as usize;
        if sig & clash[l] != 0 {
            return true;
        }
        rest &= rest - 1;
    }
    false
}

impl Dp {
    /// States of `e`, with signatures restricted to `live`, the labels some ancestor may join,
    /// and without classes that a later join would make improper.
    fn run(&self, e: &CwExpr, live: u64, clash: &Clash) -> HashSet<State> {
        let mut out = HashSet::new();
        match e {
            CwExpr::Create { label, .. } => {
                out.insert(alloc::vec![bit(&self.index, *label) & live]);
            }
            CwExpr::Union(a, b) => {
                let sa = self.run(a, live, clash);
                let sb = self.run(b, live, clash);
                for x in &sa {
                    for y in &sb {
                        union_states(x, y, self.cap, clash, &mut out);
                    }
                }
            }
            CwExpr::Join { i, j, child } => {
                let (bi, bj) = (bit(&self.index, *i), bit(&self.index, *j));
                let mut below = *clash;
                below[bi.trailing_zeros() as usize] |= bj;
                below[bj.trailing_zeros() as usize] |= bi;
                for s in self.run(child, live | bi | bj, &below) {
                    out.insert(canonical(s.into_iter().map(|sig| sig & live).collect()));
                }
            }
            CwExpr::Relabel { from, to, child } => {
                let f = bit(&self.index, *from);
                let t = bit(&self.index, *to);
                let (fi, ti) = (f.trailing_zeros() as usize, t.trailing_zeros() as usize);
                let mut below = [0u64; 64];
                if f != t {
                    let rename = |m: u64| if m & t != 0 { m | f } else { m & !f };
                    for l in 0..64 {
                        if l != fi {
                            below[l] = rename(clash[l]);
                        }
                    }
                    below[fi] = rename(clash[ti]);
                    below[fi] &= !f;
                } else {
                    below = *clash;
                }
                let live_below = if live & t != 0 { live | f } else { live & !f };
                for s in self.run(child, live_below, &below) {
                    let s = s.into_iter().map(|sig| if sig & f != 0 { (sig & !f) | t } else { sig } & live).collect();
                    out.insert(canonical(s));
                }
            }
        }
        out
    }
}

/// Chromatic number of the graph `e` builds, by DP over `e`. With `k_max`, colourings with more
/// than `k_max` colours are pruned and [`ChiBound::Exceeds`] reports when none is left.
pub fn chromatic_cwx(e: &CwExpr, k_max: Option<usize>) -> Result<ChiBound, ColourError> {
    let lg = cwx::eval(e)?;
    let labels = e.labels();
    if labels.len() > MAX_DP_LABELS {
        return Err(ColourError::TooManyLabels(labels.len()));
    }
    let index: BTreeMap<Label, u32> = labels.into_iter().zip(0..).collect();
    let n = lg.vertices.len();
    let lower = greedy_clique_bound(&lg.to_compact_graph().0).max(1);
    let top = k_max.unwrap_or(n).min(n);
    for k in lower..=top {
        let dp = Dp { index: index.clone(), cap: k };
        if !dp.run(e, 0, &[0; 64]).is_empty() {
            return Ok(ChiBound::Exact(k));
        }
    }
    Ok(ChiBound::Exceeds(top))
}

/// Chromatic number of one atom with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomChi {
    pub atom: Vec<usize>,
    pub case: Case,
    pub width: usize,
    pub chi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiReport {
    pub chi: usize,
    pub per_atom: Vec<AtomChi>,
}

/// Chromatic number of a (C4, P6)-free graph as the maximum over its atoms, each coloured by
/// DP over the expression the builders give it.
pub fn chromatic_via_atoms(g: &Graph) -> Result<ChiReport, ColourError> {
    if let Some(e) = search::violation(g, &[Pattern::Cycle(4), Pattern::Path(6)]) {
        return Err(ColourError::Forbidden(e));
    }
    let tree = atoms::decompose_atoms(g);
    let mut per_atom = Vec::new();
    for atom in tree.atoms {
        let (h, _) = g.induced(&atom).expect("atom vertices are in range");
        let out = build_atom_expr(&h)?;
        let chi = match chromatic_cwx(&out.expr, None)? {
            ChiBound::Exact(k) => k,
            ChiBound::Exceeds(_) => unreachable!("no bound was given"),
        };
        per_atom.push(AtomChi { atom, case: out.case, width: out.width, chi });
    }
    let chi = per_atom.iter().map(|a| a.chi).max().unwrap_or(0);
    Ok(ChiReport { chi, per_atom })
}
