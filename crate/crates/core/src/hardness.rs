//! List colouring of complete split graphs reduced to k-colouring.
//!
//! Given a complete split graph `G` with lists of size at most 3 drawn from `k` colours, the
//! gadget `G'` adds a clique `X = {x_1, .., x_k}` and, for every `u`, a clique `Y_u` of size
//! `k - |L(u)|` complete to `u` and to `{x_i : i in L(u)}`. `G` is `L`-colourable iff `G'` is
//! k-colourable, and `G'` is `(C4, 3P3, P3+P6, 2P5, P9)`-free.

use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::colouring::{self, K_COLOURING_LIMIT};
use crate::generators;
use crate::graph::Graph;
use crate::search::{self, Embedding, Pattern};

/// Largest list the reduction accepts.
pub const MAX_LIST: usize = 3;

/// Patterns the gadget avoids.
pub const GADGET_FREE: [Pattern; 5] = [Pattern::Cycle(4), Pattern::ThreeP3, Pattern::P3PlusP6, Pattern::TwoP5, Pattern::Path(9)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("graph is not a complete split graph")]
    NotCompleteSplit,
    #[error("{lists} lists given for {n} vertices")]
    ListCount { lists: usize, n: usize },
    #[error("vertex {0} has an empty list")]
    EmptyList(usize),
    #[error("vertex {vertex} has a list of size {size}, at most {max} allowed")]
    ListTooLarge { vertex: usize, size: usize, max: usize },
    #[error("colour 0 in the list of vertex {0}; colours are positive")]
    ZeroColour(usize),
    #[error("gadget has {n} vertices, the brute-force limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("gadget audit failed: {0}")]
    Audit(&'static str),
}

/// Per-vertex colour lists over positive integers, sorted and without repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u32>>) -> Result<Self, HardnessError> {
        let mut out = Vec::with_capacity(lists.len());
        for (v, mut l) in lists.into_iter().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(HardnessError::EmptyList(v));
            }
            if l[0] == 0 {
                return Err(HardnessError::ZeroColour(v));
            }
            out.push(l);
        }
        Ok(ListAssignment { lists: out })
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    /// All colours used, sorted.
    pub fn palette(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self.lists.iter().flatten().copied().collect();
        p.sort_unstable();
        p.dedup();
        p
    }
}

/// A clique `C` complete to an independent set `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// The complete split partition of `g`, if one exists. `C` is the set of universal vertices.
pub fn complete_split_partition(g: &Graph) -> Option<SplitPartition> {
    let (clique, independent): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| g.is_universal(v));
    g.is_independent(&independent).then_some(SplitPartition { clique, independent })
}

/// Role of a gadget vertex. Colours are normalized to `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexType {
    C(usize),
    I(usize),
    X(usize),
    Y(usize),
}

impl VertexType {
    pub fn tag(self) -> char {
        match self {
            VertexType::C(_) => 'c',
            VertexType::I(_) => 'i',
            VertexType::X(_) => 'x',
            VertexType::Y(_) => 'y',
        }
    }
}

/// Input, gadget and bookkeeping of one reduction.
///
/// Gadget vertices `0..n` are `V(G)`, then `x_1..x_k`, then the blocks `Y_0, Y_1, ..` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub split: SplitPartition,
    pub lists: ListAssignment,
    /// `palette[i - 1]` is the original name of normalized colour `i`.
    pub palette: Vec<u32>,
    /// Lists renamed to `1..=k`.
    pub normalized: Vec<Vec<usize>>,
    pub k: usize,
    pub gadget: Graph,
    pub types: Vec<VertexType>,
}

impl ReductionInstance {
    /// Gadget vertex of `x_i`, `i` in `1..=k`.
    pub fn x(&self, i: usize) -> usize {
        self.graph.n() + i - 1
    }

    /// Gadget vertices of `Y_u`.
    pub fn y_block(&self, u: usize) -> Vec<usize> {
        (0..self.gadget.n()).filter(|&v| self.types[v] == VertexType::Y(u)).collect()
    }

    /// `|V(G)| + k + sum of (k - |L(u)|)`.
    pub fn expected_order(&self) -> usize {
        let n = self.graph.n();
        n + self.k + self.normalized.iter().map(|l| self.k - l.len()).sum::<usize>()
    }
}

/// Builds the gadget for a complete split graph with lists of size at most 3.
pub fn reduce(g: &Graph, lists: &ListAssignment) -> Result<ReductionInstance, HardnessError> {
    let split = complete_split_partition(g).ok_or(HardnessError::NotCompleteSplit)?;
    if lists.len() != g.n() {
        return Err(HardnessError::ListCount { lists: lists.len(), n: g.n() });
    }
    for (v, l) in lists.lists().iter().enumerate() {
        if l.len() > MAX_LIST {
            return Err(HardnessError::ListTooLarge { vertex: v, size: l.len(), max: MAX_LIST });
        }
    }
    let palette = lists.palette();
    let k = palette.len();
    let normalized: Vec<Vec<usize>> = lists
        .lists()
        .iter()
        .map(|l| l.iter().map(|c| palette.binary_search(c).expect("colour is in the palette") + 1).collect())
        .collect();
    let n = g.n();
    let mut types: Vec<VertexType> = (0..n).map(|v| if split.clique.contains(&v) { VertexType::C(v) } else { VertexType::I(v) }).collect();
    types.extend((1..=k).map(VertexType::X));
    let mut edges = g.edges();
    for i in 0..k {
        for j in (i + 1)..k {
            edges.push((n + i, n + j));
        }
    }
    for (u, l) in normalized.iter().enumerate() {
        let start = types.len();
        for _ in 0..(k - l.len()) {
            let y = types.len();
            types.push(VertexType::Y(u));
            edges.push((u, y));
            edges.extend(l.iter().map(|&i| (n + i - 1, y)));
            edges.extend((start..y).map(|w| (w, y)));
        }
    }
    let gadget = Graph::from_edges(types.len(), &edges).expect("gadget edges are valid");
    let r = ReductionInstance { graph: g.clone(), split, lists: lists.clone(), palette, normalized, k, gadget, types };
    audit(&r)?;
    Ok(r)
}

/// Checks the gadget against its construction.
pub fn audit(r: &ReductionInstance) -> Result<(), HardnessError> {
    let n = r.graph.n();
    let g2 = &r.gadget;
    let fail = HardnessError::Audit;
    if g2.n() != r.expected_order() || r.types.len() != g2.n() {
        return Err(fail("gadget order"));
    }
    if (0..n).any(|u| (0..n).any(|v| u != v && g2.has_edge(u, v) != r.graph.has_edge(u, v))) {
        return Err(fail("V(G) is not induced"));
    }
    let xs: Vec<usize> = (1..=r.k).map(|i| r.x(i)).collect();
    if !g2.is_clique(&xs) || xs.iter().enumerate().any(|(i, &x)| r.types[x] != VertexType::X(i + 1)) {
        return Err(fail("X is not a clique on x_1..x_k"));
    }
    if xs.iter().any(|&x| g2.neighbors(x).iter().any(|&w| w < n)) {
        return Err(fail("X meets V(G)"));
    }
    for u in 0..n {
        let yu = r.y_block(u);
        if yu.len() != r.k - r.normalized[u].len() || !g2.is_clique(&yu) {
            return Err(fail("Y_u is not a clique of size k - |L(u)|"));
        }
        for &y in &yu {
            let base: Vec<usize> = g2.neighbors(y).iter().copied().filter(|&w| w < n).collect();
            if base != [u] {
                return Err(fail("y-vertex without exactly one neighbour in V(G)"));
            }
            let on_x: Vec<usize> = g2.neighbors(y).iter().filter(|&&w| r.types[w].tag() == 'x').map(|&w| w - n + 1).collect();
            if on_x != r.normalized[u] {
                return Err(fail("y-vertex sees the wrong part of X"));
            }
            if g2.neighbors(y).iter().any(|&w| matches!(r.types[w], VertexType::Y(o) if o != u)) {
                return Err(fail("distinct Y blocks are adjacent"));
            }
        }
    }
    Ok(())
}

/// A colouring of `g` with `colour[v]` in `lists[v]`, by exhaustive search.
pub fn list_colouring(g: &Graph, lists: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(g: &Graph, lists: &[Vec<usize>], v: usize, colour: &mut [usize]) -> bool {
        if v == g.n() {
            return true;
        }
        for &c in &lists[v] {
            if g.neighbors(v).iter().all(|&w| w > v || colour[w] != c) {
                colour[v] = c;
                if go(g, lists, v + 1, colour) {
                    return true;
                }
            }
        }
        false
    }
    let mut colour = alloc::vec![0; g.n()];
    go(g, lists, 0, &mut colour).then_some(colour)
}

/// Extends a list colouring of `G` (normalized colours) to a k-colouring of the gadget.
pub fn lift_colouring(r: &ReductionInstance, colour: &[usize]) -> Vec<usize> {
    let n = r.graph.n();
    let mut out = alloc::vec![0; r.gadget.n()];
    out[..n].copy_from_slice(colour);
    for i in 1..=r.k {
        out[r.x(i)] = i;
    }
    for u in 0..n {
        let free = (1..=r.k).filter(|c| r.normalized[u].binary_search(c).is_err());
        for (y, c) in r.y_block(u).into_iter().zip(free) {
            out[y] = c;
        }
    }
    out
}

/// Reads a list colouring of `G` off a k-colouring of the gadget by naming colours after `X`.
pub fn project_colouring(r: &ReductionInstance, colour: &[usize]) -> Vec<usize> {
    let mut name = alloc::vec![0; r.k + 1];
    for i in 1..=r.k {
        name[colour[r.x(i)]] = i;
    }
    (0..r.graph.n()).map(|u| name[colour[u]]).collect()
}

pub fn is_proper(g: &Graph, colour: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colour[u] != colour[v])
}

/// Outcome of [`verify_equivalence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    /// List colouring of `G` over normalized colours.
    pub list_witness: Option<Vec<usize>>,
    /// k-colouring of the gadget with colours `0..k`.
    pub gadget_witness: Option<Vec<usize>>,
}

impl Equivalence {
    pub fn list_colourable(&self) -> bool {
        self.list_witness.is_some()
    }

    pub fn gadget_colourable(&self) -> bool {
        self.gadget_witness.is_some()
    }

    pub fn holds(&self) -> bool {
        self.list_colourable() == self.gadget_colourable()
    }
}

/// Solves both sides exhaustively and checks that the witnesses transfer in both directions.
pub fn verify_equivalence(r: &ReductionInstance) -> Result<Equivalence, HardnessError> {
    let too_large = HardnessError::TooLarge { n: r.gadget.n(), limit: K_COLOURING_LIMIT };
    if r.gadget.n() > K_COLOURING_LIMIT {
        return Err(too_large);
    }
    let list_witness = list_colouring(&r.graph, &r.normalized);
    let gadget_witness = colouring::k_colouring(&r.gadget, r.k).map_err(|_| too_large)?;
    if let Some(c) = &list_witness {
        let lifted = lift_colouring(r, c);
        if !is_proper(&r.gadget, &lifted) || lifted.iter().any(|&x| x == 0 || x > r.k) {
            return Err(HardnessError::Audit("lifted colouring is not a k-colouring"));
        }
    }
    if let Some(c) = &gadget_witness {
        let shifted: Vec<usize> = c.iter().map(|&x| x + 1).collect();
        let p = project_colouring(r, &shifted);
        let respects = p.iter().enumerate().all(|(u, x)| r.normalized[u].contains(x));
        if !is_proper(&r.graph, &p) || !respects {
            return Err(HardnessError::Audit("projected colouring does not respect the lists"));
        }
    }
    Ok(Equivalence { list_witness, gadget_witness })
}

/// Outcome of [`verify_freeness`]: `None` when the gadget avoids all five patterns.
pub fn verify_freeness(r: &ReductionInstance) -> Option<Embedding> {
    search::violation(&r.gadget, &GADGET_FREE)
}

/// Random complete split graph with random lists, sized so that the gadget has at most
/// `max_gadget` vertices.
pub fn random_instance(max_gadget: usize, seed: u64) -> (Graph, ListAssignment) {
    let mut rng = generators::rng(seed);
    loop {
        let c = rng.gen_range(0..=3);
        let i = rng.gen_range(usize::from(c == 0)..=3);
        let colours: u32 = rng.gen_range(1..=5);
        let pool: Vec<u32> = (1..=colours).map(|x| x * 2 + rng.gen_range(0..2)).collect();
        let lists: Vec<Vec<u32>> = (0..c + i)
            .map(|_| {
                let size = rng.gen_range(1..=MAX_LIST.min(pool.len()));
                let mut l = pool.clone();
                l.shuffle(&mut rng);
                l.truncate(size);
                l
            })
            .collect();
        let lists = ListAssignment::new(lists).expect("lists are non-empty and positive");
        let k = lists.palette().len();
        let order = c + i + k + lists.lists().iter().map(|l| k - l.len()).sum::<usize>();
        if order <= max_gadget {
            return (generators::complete_split(c, i), lists);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn la(lists: &[&[u32]]) -> ListAssignment {
        ListAssignment::new(lists.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_vertex_full_list() {
        let r = reduce(&Graph::empty(1), &la(&[&[1, 2, 3]])).unwrap();
        assert_eq!(r.k, 3);
        assert_eq!(r.gadget.n(), 4);
        assert_eq!(r.gadget.degree(0), 0);
        let eq = verify_equivalence(&r).unwrap();
        assert!(eq.list_colourable() && eq.gadget_colourable());
    }

    #[test]
    fn figure_shape() {
        let g = generators::complete_split(1, 2);
        let r = reduce(&g, &la(&[&[2, 3], &[1, 4], &[1, 2, 3]])).unwrap();
        assert_eq!(r.k, 4);
        let yu = r.y_block(0);
        assert_eq!(yu.len(), 2);
        for &y in &yu {
            assert!(r.gadget.has_edge(0, y));
            assert!(r.gadget.has_edge(r.x(2), y) && r.gadget.has_edge(r.x(3), y));
            assert!(!r.gadget.has_edge(r.x(1), y) && !r.gadget.has_edge(r.x(4), y));
        }
        assert_eq!(r.gadget.n(), 3 + 4 + 2 + 2 + 1);
        assert!(verify_freeness(&r).is_none());
        assert!(verify_equivalence(&r).unwrap().holds());
    }

    #[test]
    fn forced_clash_is_unsatisfiable() {
        let g = Graph::complete(3);
        let r = reduce(&g, &la(&[&[5], &[5], &[5]])).unwrap();
        assert_eq!(r.k, 1);
        let eq = verify_equivalence(&r).unwrap();
        assert!(!eq.list_colourable() && !eq.gadget_colourable());
    }

    #[test]
    fn colours_are_normalized() {
        let g = generators::complete_split(1, 1);
        let r = reduce(&g, &la(&[&[10, 30], &[20]])).unwrap();
        assert_eq!(r.palette, vec![10, 20, 30]);
        assert_eq!(r.normalized, vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(reduce(&Graph::path(4), &la(&[&[1], &[1], &[1], &[1]])), Err(HardnessError::NotCompleteSplit));
        assert!(matches!(reduce(&Graph::empty(1), &la(&[&[1, 2, 3, 4]])), Err(HardnessError::ListTooLarge { .. })));
        assert!(matches!(reduce(&Graph::empty(2), &la(&[&[1]])), Err(HardnessError::ListCount { .. })));
        assert_eq!(ListAssignment::new(vec![vec![]]), Err(HardnessError::EmptyList(0)));
        assert_eq!(ListAssignment::new(vec![vec![0]]), Err(HardnessError::ZeroColour(0)));
    }

    #[test]
    fn split_partition_recomputed() {
        let p = complete_split_partition(&generators::complete_split(2, 3)).unwrap();
        assert_eq!(p.clique, vec![0, 1]);
        assert_eq!(p.independent, vec![2, 3, 4]);
        assert!(complete_split_partition(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn random_instances_hold() {
        for seed in 0..60 {
            let (g, l) = random_instance(K_COLOURING_LIMIT, seed);
            let r = reduce(&g, &l).unwrap();
            assert!(verify_equivalence(&r).unwrap().holds(), "seed {seed}");
            assert!(verify_freeness(&r).is_none(), "seed {seed}");
        }
    }

    #[test]
    fn mutation_reports_certificate() {
        let g = generators::complete_split(2, 2);
        let mut r = reduce(&g, &la(&[&[1, 2], &[2, 3], &[1, 3], &[1]])).unwrap();
        assert!(verify_freeness(&r).is_none());
        let mut found = false;
        for i in 1..=r.k {
            for u in 0..g.n() {
                let mut m = r.clone();
                m.gadget = r.gadget.with_edge_toggled(u, r.x(i));
                if let Some(e) = verify_freeness(&m) {
                    assert!(e.verify(&m.gadget));
                    found = true;
                }
            }
        }
        assert!(found);
        r.gadget = r.gadget.with_edge_toggled(0, r.x(1));
        assert!(audit(&r).is_err());
    }
}
