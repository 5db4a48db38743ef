//! Partition of `V - C` around an induced 5-cycle `C = 1,2,3,4,5`, the properties P1 to P15
//! of that partition in (C4, P6)-free graphs, and homogeneous pairs and triples.
//!
//! Positions on the cycle are `1..=5` and are read modulo 5. `S(X)` is stored by the bitmask of
//! `X` (bit `p - 1` for position `p`).

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::bits::Bits;
use crate::graph::Graph;
use crate::search::{self, Embedding, Pattern, SearchScope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertices {0:?} do not induce a 5-cycle in this order")]
    NotInducedC5([usize; 5]),
    #[error("the graph has no induced 5-cycle")]
    NoC5,
    #[error("sets overlap in vertex {0}")]
    Overlap(usize),
}

/// Position `p` reduced into `1..=5`.
#[inline]
pub fn pos(p: i64) -> u8 {
    (((p - 1).rem_euclid(5)) + 1) as u8
}

/// Bitmask of a set of positions.
pub fn mask(ps: &[i64]) -> u8 {
    ps.iter().fold(0u8, |m, &p| m | 1 << (pos(p) - 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C5Partition {
    /// `cycle[p - 1]` is the vertex at position `p`.
    pub cycle: [usize; 5],
    /// `sets[m]` is `S(X)` for the position set with bitmask `m`, sorted.
    pub sets: Vec<Vec<usize>>,
    /// Mask of `N(v) ∩ C` for vertices off the cycle.
    pub mask_of: Vec<Option<u8>>,
}

impl C5Partition {
    pub fn new(g: &Graph, cycle: [usize; 5]) -> Result<Self, StructureError> {
        if !search::is_induced_copy(g, &Graph::cycle(5), &cycle) {
            return Err(StructureError::NotInducedC5(cycle));
        }
        let mut sets = vec![Vec::new(); 32];
        let mut mask_of = vec![None; g.n()];
        for (v, slot) in mask_of.iter_mut().enumerate() {
            if cycle.contains(&v) {
                continue;
            }
            let m = (0..5).fold(0u8, |m, k| if g.has_edge(v, cycle[k]) { m | 1 << k } else { m });
            sets[m as usize].push(v);
            *slot = Some(m);
        }
        Ok(C5Partition { cycle, sets, mask_of })
    }

    /// `S(X)` for the listed positions (any integers, taken modulo 5).
    pub fn s(&self, ps: &[i64]) -> &[usize] {
        &self.sets[mask(ps) as usize]
    }

    /// Vertex at position `p`.
    pub fn at(&self, p: i64) -> usize {
        self.cycle[pos(p) as usize - 1]
    }

    /// `S_j`: vertices with exactly `j` neighbours on the cycle.
    pub fn s_j(&self, j: u32) -> Vec<usize> {
        let mut out: Vec<usize> = (0..32u32).filter(|m| m.count_ones() == j).flat_map(|m| self.sets[m as usize].iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// Union of several `S(X)` given as position lists.
    pub fn union_of(&self, xs: &[&[i64]]) -> Vec<usize> {
        let mut out: Vec<usize> = xs.iter().flat_map(|x| self.s(x).iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Reoriented partition whose position `p` is the old position `f(p)`; `f` must be a symmetry of the cycle.
    pub fn remap(&self, g: &Graph, f: impl Fn(i64) -> i64) -> C5Partition {
        let cycle = [self.at(f(1)), self.at(f(2)), self.at(f(3)), self.at(f(4)), self.at(f(5))];
        C5Partition::new(g, cycle).expect("dihedral image of an induced cycle is induced")
    }

    pub fn s2_len(&self) -> usize {
        self.s_j(2).len()
    }
}

pub fn partition_around_c5(g: &Graph, cycle: [usize; 5]) -> Result<C5Partition, StructureError> {
    C5Partition::new(g, cycle)
}

/// Calls `f` on every induced 5-cycle, once each, as its lexicographically smallest sequence.
pub fn for_each_c5(g: &Graph, mut f: impl FnMut([usize; 5])) {
    let n = g.n();
    for a in 0..n {
        for &b in g.neighbors(a) {
            if b <= a {
                continue;
            }
            for &e in g.neighbors(a) {
                if e <= b || g.has_edge(b, e) {
                    continue;
                }
                for &c in g.neighbors(b) {
                    if c <= a || g.has_edge(c, a) || g.has_edge(c, e) {
                        continue;
                    }
                    for &d in g.neighbors(c) {
                        if d > a && g.has_edge(d, e) && !g.has_edge(d, a) && !g.has_edge(d, b) {
                            f([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
}

pub fn induced_c5s(g: &Graph) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for_each_c5(g, |c| out.push(c));
    out
}

/// The ten orientations of a cycle in lexicographic order.
fn orientations(c: [usize; 5]) -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(10);
    for r in 0..5 {
        let fwd = [c[r], c[(r + 1) % 5], c[(r + 2) % 5], c[(r + 3) % 5], c[(r + 4) % 5]];
        let bwd = [c[r], c[(r + 4) % 5], c[(r + 3) % 5], c[(r + 2) % 5], c[(r + 1) % 5]];
        out.push(fwd);
        out.push(bwd);
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C5Objective {
    /// Maximise `|S5|`, then minimise `|S3|`.
    MaxS5MinS3,
    /// Maximise `|S2|` over cycles underlying an induced F1, oriented as `x ∈ S(3,4)`, `y ∈ S(2,3)`, `z ∈ S(4,5)`.
    MaxS2WithF1,
    /// Maximise `|S2|` over cycles underlying an induced F2, oriented as `x ∈ S(4,5)`, `y ∈ S(2,3)`, `t ∈ S(5,1,2)`.
    MaxS2WithF2,
}

/// The extra vertices of an F1 on the oriented cycle: `(x, y, z)`.
pub fn f1_extension(g: &Graph, p: &C5Partition) -> Option<[usize; 3]> {
    for &x in p.s(&[3, 4]) {
        for &y in p.s(&[2, 3]) {
            if !g.has_edge(x, y) {
                continue;
            }
            for &z in p.s(&[4, 5]) {
                if g.has_edge(x, z) && !g.has_edge(y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// The extra vertices of an F2 on the oriented cycle: `(x, y, t)`.
pub fn f2_extension(g: &Graph, p: &C5Partition) -> Option<[usize; 3]> {
    for &t in p.s(&[5, 1, 2]) {
        for &x in p.s(&[4, 5]) {
            if !g.has_edge(t, x) {
                continue;
            }
            for &y in p.s(&[2, 3]) {
                if g.has_edge(t, y) && !g.has_edge(x, y) {
                    return Some([x, y, t]);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct ChosenC5 {
    pub partition: C5Partition,
    /// Extension vertices for the F1 and F2 objectives.
    pub extension: Option<[usize; 3]>,
}

/// Optimises `objective` over all induced 5-cycles. Ties go to the lexicographically smallest
/// canonical cycle; the returned orientation is the smallest one meeting the objective's requirements.
pub fn choose_c5(g: &Graph, objective: C5Objective) -> Result<ChosenC5, StructureError> {
    let mut best: Option<((i64, i64), [usize; 5], ChosenC5)> = None;
    let beats = |key: (i64, i64), c: [usize; 5], best: &Option<((i64, i64), [usize; 5], ChosenC5)>| match best {
        None => true,
        Some((k, bc, _)) => key > *k || (key == *k && c < *bc),
    };
    for_each_c5(g, |c| {
        let base = C5Partition::new(g, c).expect("enumerated cycles are induced");
        let (key, chosen) = match objective {
            C5Objective::MaxS5MinS3 => {
                let key = (base.s_j(5).len() as i64, -(base.s_j(3).len() as i64));
                (key, ChosenC5 { partition: base, extension: None })
            }
            C5Objective::MaxS2WithF1 | C5Objective::MaxS2WithF2 => {
                let key = (base.s2_len() as i64, 0);
                if !beats(key, c, &best) {
                    return;
                }
                let mut found = None;
                for o in orientations(c) {
                    let p = C5Partition::new(g, o).expect("orientation of an induced cycle");
                    let ext = if objective == C5Objective::MaxS2WithF1 { f1_extension(g, &p) } else { f2_extension(g, &p) };
                    if let Some(ext) = ext {
                        found = Some(ChosenC5 { partition: p, extension: Some(ext) });
                        break;
                    }
                }
                let Some(ch) = found else { return };
                (key, ch)
            }
        };
        if beats(key, c, &best) {
            best = Some((key, c, chosen));
        }
    });
    best.map(|(_, _, c)| c).ok_or(StructureError::NoC5)
}

/// A failed property with the offending vertices and a forbidden subgraph explaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyViolation {
    /// `0` for the gap condition (no vertex sees `i` and `i+2` but not `i+1`), else `1..=15`.
    pub property: u8,
    pub i: u8,
    pub vertices: Vec<usize>,
    pub certificate: Option<Embedding>,
}

/// Freeness each property relies on. Every property here needs only (C4, P6)-freeness.
pub const PROPERTY_CONTEXT: [Pattern; 2] = [Pattern::Cycle(4), Pattern::Path(6)];

pub const ALL_PROPERTIES: [u8; 16] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub checked: Vec<u8>,
    pub violations: Vec<PropertyViolation>,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Looks for a C4 or P6 near `vertices` (with the cycle), then in the whole graph.
pub fn forbidden_certificate(g: &Graph, p: &C5Partition, vertices: &[usize]) -> Option<Embedding> {
    let mut local = g.set_of(vertices);
    for &c in &p.cycle {
        local.insert(c);
    }
    let scope = SearchScope { within: Some(&local), anchor: None };
    PROPERTY_CONTEXT
        .iter()
        .find_map(|&pat| search::find_induced_scoped(g, pat, &scope))
        .or_else(|| search::violation(g, &PROPERTY_CONTEXT))
}

fn first_edge_between(g: &Graph, a: &[usize], b: &[usize], want_edge: bool) -> Option<(usize, usize)> {
    a.iter().find_map(|&x| b.iter().find(|&&y| x != y && g.has_edge(x, y) == want_edge).map(|&y| (x, y)))
}

fn non_clique_pair(g: &Graph, a: &[usize]) -> Option<(usize, usize)> {
    for (k, &x) in a.iter().enumerate() {
        for &y in &a[k + 1..] {
            if !g.has_edge(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// A vertex of `outside` that is neither complete nor anticomplete to `set`, with a seen and an unseen vertex.
fn mixed_vertex(g: &Graph, outside: &[usize], set: &[usize]) -> Option<(usize, usize, usize)> {
    for &t in outside {
        let seen = set.iter().find(|&&a| g.has_edge(t, a));
        let unseen = set.iter().find(|&&a| a != t && !g.has_edge(t, a));
        if let (Some(&a), Some(&b)) = (seen, unseen) {
            return Some((t, a, b));
        }
    }
    None
}

fn components_of(g: &Graph, set: &[usize]) -> Vec<Vec<usize>> {
    g.components_within(&g.set_of(set))
}

/// Counterexample vertices for property `k` at index `i`, if it fails.
fn check_one(g: &Graph, p: &C5Partition, k: u8, i: i64) -> Option<Vec<usize>> {
    let s = |ps: &[i64]| p.s(ps).to_vec();
    let s5 = p.s_j(5);
    match k {
        0 => {
            for m in 0u8..32 {
                let has = |q: i64| m & (1 << (pos(q) - 1)) != 0;
                if has(i) && has(i + 2) && !has(i + 1) && !p.sets[m as usize].is_empty() {
                    return Some(vec![p.sets[m as usize][0]]);
                }
            }
            None
        }
        1 => {
            let mut set = s5.clone();
            set.extend(s(&[i - 1, i, i + 1]));
            non_clique_pair(g, &set).map(|(a, b)| vec![a, b])
        }
        2 => {
            let (a, b, c) = (s(&[i]), s(&[i + 2]), s(&[i + 1]));
            if let Some((x, y)) = first_edge_between(g, &a, &b, false) {
                return Some(vec![x, y]);
            }
            if let Some((x, y)) = first_edge_between(g, &a, &c, true) {
                return Some(vec![x, y]);
            }
            if !a.is_empty() && !b.is_empty() {
                if let Some((x, y)) = non_clique_pair(g, &a).or_else(|| non_clique_pair(g, &b)) {
                    return Some(vec![x, y, a[0], b[0]]);
                }
            }
            None
        }
        3 => {
            let (a, b, c) = (s(&[i, i + 1]), s(&[i + 1, i + 2]), s(&[i + 2, i + 3]));
            if let Some((x, y)) = first_edge_between(g, &a, &b, false) {
                return Some(vec![x, y]);
            }
            if let Some((x, y)) = first_edge_between(g, &a, &c, true) {
                return Some(vec![x, y]);
            }
            if !a.is_empty() && !b.is_empty() {
                if let Some((x, y)) = non_clique_pair(g, &a).or_else(|| non_clique_pair(g, &b)) {
                    return Some(vec![x, y, a[0], b[0]]);
                }
            }
            None
        }
        4 => first_edge_between(g, &s(&[i - 1, i, i + 1]), &s(&[i + 1, i + 2, i + 3]), true).map(|(x, y)| vec![x, y]),
        5 => {
            let a = s(&[i]);
            for j in 1..=5i64 {
                if pos(j) == pos(i + 2) {
                    continue;
                }
                if let Some((x, y)) = first_edge_between(g, &a, &s(&[j, j + 1]), true) {
                    return Some(vec![x, y]);
                }
            }
            let b = s(&[i + 2, i + 3]);
            for &y in &b {
                if a.iter().any(|&x| g.has_edge(x, y)) {
                    if let Some(&w) = b.iter().find(|&&w| w != y && !g.has_edge(w, y)) {
                        let x = *a.iter().find(|&&x| g.has_edge(x, y)).unwrap();
                        return Some(vec![x, y, w]);
                    }
                }
            }
            None
        }
        6 => first_edge_between(g, &s(&[i]), &s(&[i + 1, i + 2, i + 3]), true).map(|(x, y)| vec![x, y]),
        7 => first_edge_between(g, &s(&[i - 2, i + 2]), &s(&[i - 1, i, i + 1]), true).map(|(x, y)| vec![x, y]),
        8 => {
            let a = s(&[i]);
            for b in [s(&[i + 1, i + 2]), s(&[i - 1, i - 2])] {
                if !a.is_empty() && !b.is_empty() {
                    return Some(vec![a[0], b[0]]);
                }
            }
            None
        }
        9 => {
            let sets = [s(&[i - 1, i]), s(&[i, i + 1]), s(&[i + 2, i - 2])];
            sets.iter().all(|x| !x.is_empty()).then(|| sets.iter().map(|x| x[0]).collect())
        }
        10 => {
            let mut outside = s(&[i - 2, i - 1, i]);
            outside.extend(s(&[i, i + 1, i + 2]));
            components_of(g, &s(&[i])).iter().find_map(|acomp| mixed_vertex(g, &outside, acomp).map(|(t, a, b)| vec![t, a, b]))
        }
        11 => {
            let (a, b) = (s(&[i]), s(&[i - 2, i + 2]));
            for &x in &a {
                for &y in &b {
                    if g.has_edge(x, y) {
                        if let Some(&u) = s5.iter().find(|&&u| g.has_edge(u, x) != g.has_edge(u, y)) {
                            return Some(vec![x, y, u]);
                        }
                    }
                }
            }
            None
        }
        12 => {
            let mut nb = s(&[i - 2, i - 1, i]);
            nb.extend(s(&[i, i + 1, i + 2]));
            for &x in p.s(&[i - 2, i + 2]) {
                if let Some(&t) = nb.iter().find(|&&t| g.has_edge(x, t)) {
                    if let Some(&u) = s5.iter().find(|&&u| !g.has_edge(x, u)) {
                        return Some(vec![x, t, u]);
                    }
                }
            }
            None
        }
        13 => {
            let (l, r) = (s(&[i - 2, i - 1, i]), s(&[i, i + 1, i + 2]));
            for &x in p.s(&[i - 2, i + 2]) {
                let a = l.iter().find(|&&t| g.has_edge(x, t));
                let b = r.iter().find(|&&t| g.has_edge(x, t));
                if let (Some(&a), Some(&b)) = (a, b) {
                    return Some(vec![x, a, b]);
                }
            }
            None
        }
        14 => {
            let mut outside = s(&[i - 1, i - 2, i + 2]);
            outside.extend(s(&[i + 1, i + 2, i - 2]));
            components_of(g, &s(&[i - 2, i + 2])).iter().find_map(|comp| mixed_vertex(g, &outside, comp).map(|(t, a, b)| vec![t, a, b]))
        }
        15 => {
            let (a, b) = (s(&[i - 1, i - 2]), s(&[i + 1, i + 2]));
            if a.is_empty() || b.is_empty() {
                return None;
            }
            let mut both = a.clone();
            both.extend(b.iter().copied());
            mixed_vertex(g, &s(&[i - 1, i, i + 1]), &both).map(|(t, x, y)| vec![t, x, y])
        }
        _ => None,
    }
}

/// Checks the requested properties for every `i`. A failure would mean the host is not
/// (C4, P6)-free, so each violation carries a re-searched C4 or P6 when one exists.
pub fn check_properties(g: &Graph, p: &C5Partition, which: &[u8]) -> PropertyReport {
    let mut violations = Vec::new();
    for &k in which {
        for i in 1..=5i64 {
            if let Some(vs) = check_one(g, p, k, i) {
                let certificate = forbidden_certificate(g, p, &vs);
                violations.push(PropertyViolation { property: k, i: i as u8, vertices: vs, certificate });
                break;
            }
        }
    }
    PropertyReport { checked: which.to_vec(), violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Complete,
    Anticomplete,
}

/// Adjacency mode of every outside vertex to each non-empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityWitness {
    pub modes: Vec<(usize, Vec<Mode>)>,
}

/// An outside vertex adjacent to exactly one of two vertices of the same set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distinguisher {
    pub outside: usize,
    pub seen: usize,
    pub unseen: usize,
}

/// Tests whether `(sets[0], sets[1], ...)` is homogeneous: no vertex outside their union
/// distinguishes two vertices of the same set.
pub fn homogeneity(g: &Graph, sets: &[&[usize]]) -> Result<Result<HomogeneityWitness, Distinguisher>, StructureError> {
    let mut inside = Bits::new(g.n());
    for set in sets {
        for &v in *set {
            if inside.contains(v) {
                return Err(StructureError::Overlap(v));
            }
            inside.insert(v);
        }
    }
    let mut modes = Vec::new();
    for o in (0..g.n()).filter(|v| !inside.contains(*v)) {
        let mut row = Vec::new();
        for set in sets {
            if set.is_empty() {
                continue;
            }
            let seen = set.iter().find(|&&v| g.has_edge(o, v));
            let unseen = set.iter().find(|&&v| !g.has_edge(o, v));
            match (seen, unseen) {
                (Some(&s), Some(&u)) => return Ok(Err(Distinguisher { outside: o, seen: s, unseen: u })),
                (Some(_), None) => row.push(Mode::Complete),
                _ => row.push(Mode::Anticomplete),
            }
        }
        modes.push((o, row));
    }
    Ok(Ok(HomogeneityWitness { modes }))
}

pub fn is_homogeneous_triple(
    g: &Graph,
    x: &[usize],
    y: &[usize],
    z: &[usize],
) -> Result<Result<HomogeneityWitness, Distinguisher>, StructureError> {
    homogeneity(g, &[x, y, z])
}
