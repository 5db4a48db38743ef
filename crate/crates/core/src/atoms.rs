//! Clique-cutset decomposition and the reduction to strong atoms.
//!
//! Clique cutsets are found among the minimal separators of a minimal triangulation computed
//! by MCS-M: every clique minimal separator of `G` is `madj(x)` for some vertex `x` of the
//! triangulation. Cheap candidates `N(D)` for components `D` of `G - N[v]` are tried first.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::cwx::{self, CwError, CwExpr};
use crate::graph::Graph;

/// A clique whose removal disconnects the graph, with the resulting components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCutset {
    pub cutset: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl CliqueCutset {
    pub fn verify(&self, g: &Graph) -> bool {
        if !g.is_clique(&self.cutset) {
            return false;
        }
        let mut rest = g.vertex_set();
        for &v in &self.cutset {
            rest.remove(v);
        }
        let comps = g.components_within(&rest);
        comps.len() >= 2 && comps == self.components
    }
}

fn separates(g: &Graph, s: &Bits) -> Option<Vec<Vec<usize>>> {
    let mut rest = g.vertex_set();
    rest.difference_with(s);
    let comps = g.components_within(&rest);
    (comps.len() >= 2).then_some(comps)
}

fn certificate(g: &Graph, s: &Bits) -> Option<CliqueCutset> {
    if !g.is_clique_bits(s) {
        return None;
    }
    separates(g, s).map(|components| CliqueCutset { cutset: s.to_vec(), components })
}

/// Minimal triangulation by MCS-M. For each vertex, returns its neighbours in the
/// triangulation that were numbered before it.
fn mcs_m(g: &Graph) -> Vec<Bits> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = Bits::new(n);
    let mut fill_rows = vec![Bits::new(n); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&u| !numbered.contains(u))
            .max_by_key(|&u| (weight[u], core::cmp::Reverse(u)))
            .expect("unnumbered vertex exists");
        numbered.insert(v);
        // best[u]: smallest possible maximum interior weight over paths from v to u through
        // unnumbered vertices; -1 for a direct edge.
        let mut best = vec![i64::MAX; n];
        let mut done = Bits::new(n);
        let mut reached = Vec::new();
        for &u in g.neighbors(v) {
            if !numbered.contains(u) {
                best[u] = -1;
            }
        }
        loop {
            let next = (0..n)
                .filter(|&u| !numbered.contains(u) && !done.contains(u) && best[u] != i64::MAX)
                .min_by_key(|&u| (best[u], u));
            let Some(u) = next else { break };
            done.insert(u);
            if best[u] < weight[u] as i64 {
                reached.push(u);
            }
            let through = best[u].max(weight[u] as i64);
            for &x in g.neighbors(u) {
                if !numbered.contains(x) && !done.contains(x) && through < best[x] {
                    best[x] = through;
                }
            }
        }
        for u in reached {
            weight[u] += 1;
            fill_rows[u].insert(v);
        }
    }
    fill_rows
}

/// Finds a clique cutset, or `None` if the graph is an atom. A disconnected graph yields the empty cutset.
pub fn find_clique_cutset(g: &Graph) -> Option<CliqueCutset> {
    let n = g.n();
    if n <= 1 {
        return None;
    }
    let comps = g.components();
    if comps.len() >= 2 {
        return Some(CliqueCutset { cutset: Vec::new(), components: comps });
    }
    for v in 0..n {
        let mut rest = g.vertex_set();
        rest.difference_with(&g.closed_row(v));
        for d in g.components_within(&rest) {
            let sep = g.neighborhood_of_set(&g.set_of(&d));
            if let Some(c) = certificate(g, &sep) {
                return Some(c);
            }
        }
    }
    let madj = mcs_m(g);
    for row in &madj {
        if let Some(c) = certificate(g, row) {
            return Some(c);
        }
    }
    None
}

pub fn is_atom(g: &Graph) -> bool {
    g.n() >= 1 && find_clique_cutset(g).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitStep {
    pub cutset: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AtomTree {
    /// Atoms as sorted vertex sets of the input graph, sorted.
    pub atoms: Vec<Vec<usize>>,
    pub trace: Vec<SplitStep>,
}

/// Decomposes along clique cutsets until every piece is an atom. At each step the smallest
/// component `D` (ties by smallest vertex) is split off as `G[D ∪ N(D)]`, leaving `G - D`.
pub fn decompose_atoms(g: &Graph) -> AtomTree {
    let mut tree = AtomTree::default();
    let mut stack: Vec<Vec<usize>> = Vec::new();
    if g.n() > 0 {
        stack.push((0..g.n()).collect());
    }
    let mut atoms = Vec::new();
    while let Some(piece) = stack.pop() {
        let (h, map) = g.induced(&piece).expect("piece vertices are in range");
        match find_clique_cutset(&h) {
            None => atoms.push(piece),
            Some(cut) => {
                let d = cut
                    .components
                    .iter()
                    .min_by_key(|c| (c.len(), c[0]))
                    .expect("cutset leaves at least two components");
                let dset = h.set_of(d);
                let nd = h.neighborhood_of_set(&dset);
                let mut first: Vec<usize> = d.iter().copied().chain(nd.iter()).map(|x| map[x]).collect();
                first.sort_unstable();
                let mut second: Vec<usize> = (0..h.n()).filter(|x| !dset.contains(*x)).map(|x| map[x]).collect();
                second.sort_unstable();
                tree.trace.push(SplitStep {
                    cutset: nd.iter().map(|x| map[x]).collect(),
                    parts: vec![first.clone(), second.clone()],
                });
                stack.push(second);
                stack.push(first);
            }
        }
    }
    atoms.sort();
    atoms.dedup();
    let keep: Vec<bool> = atoms
        .iter()
        .enumerate()
        .map(|(i, a)| {
            !atoms.iter().enumerate().any(|(j, b)| i != j && b.len() > a.len() && a.iter().all(|x| b.binary_search(x).is_ok()))
        })
        .collect();
    tree.atoms = atoms.into_iter().zip(keep).filter_map(|(a, k)| k.then_some(a)).collect();
    assert!(tree.atoms.len() <= g.n().max(1), "more atoms than vertices");
    tree
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Removal {
    Universal(usize),
    Twin { removed: usize, kept: usize },
}

/// A graph without twins or universal vertices, plus the removals that led to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongReduction {
    pub reduced: Graph,
    /// Original id of each vertex of `reduced`.
    pub kept: Vec<usize>,
    /// Removals in the order they were made, with original ids.
    pub log: Vec<Removal>,
}

impl StrongReduction {
    /// Lifts an expression for `reduced` (ids `0..r`) to one for the original graph.
    pub fn replay(&self, reduced_expr: &CwExpr) -> Result<CwExpr, CwError> {
        let mut e = reduced_expr.rename_vertices(&|v| self.kept[v]);
        for r in self.log.iter().rev() {
            e = match *r {
                Removal::Twin { removed, kept } => cwx::splice_twin(&e, kept, removed)?,
                Removal::Universal(v) => cwx::splice_universal(&e, v)?,
            };
        }
        Ok(e)
    }

    /// Rebuilds the original graph from the reduced graph and the log.
    pub fn reconstruct(&self, n: usize) -> Graph {
        let mut rows = vec![Bits::new(n); n];
        let mut present = Bits::new(n);
        for (i, &u) in self.kept.iter().enumerate() {
            present.insert(u);
            for &j in self.reduced.neighbors(i) {
                rows[u].insert(self.kept[j]);
            }
        }
        for r in self.log.iter().rev() {
            match *r {
                Removal::Twin { removed, kept } => {
                    let nb = rows[kept].clone();
                    for w in nb.iter() {
                        rows[w].insert(removed);
                    }
                    rows[removed] = nb;
                    rows[removed].insert(kept);
                    rows[kept].insert(removed);
                }
                Removal::Universal(v) => {
                    for w in present.iter() {
                        rows[w].insert(v);
                        rows[v].insert(w);
                    }
                }
            }
            match *r {
                Removal::Twin { removed, .. } => present.insert(removed),
                Removal::Universal(v) => present.insert(v),
            }
        }
        Graph::from_rows(rows)
    }
}

/// Repeatedly removes the larger vertex of a twin pair, or else a universal vertex, while at
/// least two vertices remain.
pub fn strong_reduce(g: &Graph) -> StrongReduction {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut log = Vec::new();
    loop {
        if alive.len() < 2 {
            break;
        }
        let (h, _) = g.induced(&alive).expect("alive vertices are in range");
        let tp = h.twin_partition();
        if let Some(class) = tp.classes.iter().find(|c| c.len() >= 2) {
            let kept = alive[class[0]];
            let removed = alive[class[1]];
            log.push(Removal::Twin { removed, kept });
            alive.retain(|&x| x != removed);
            continue;
        }
        if let Some(u) = (0..h.n()).find(|&u| h.is_universal(u)) {
            log.push(Removal::Universal(alive[u]));
            alive.remove(u);
            continue;
        }
        break;
    }
    let (reduced, kept) = g.induced(&alive).expect("alive vertices are in range");
    StrongReduction { reduced, kept, log }
}

pub fn is_strong(g: &Graph) -> bool {
    (0..g.n()).all(|v| !g.is_universal(v) || g.n() == 1) && g.twin_partition().classes.len() == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use rand::{Rng, SeedableRng};

    fn bruteforce_cutset(g: &Graph) -> Option<Vec<usize>> {
        let n = g.n();
        assert!(n <= 16);
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if g.is_clique(&s) && separates(g, &g.set_of(&s)).is_some() {
                return Some(s);
            }
        }
        None
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if r.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_examples() {
        let c = find_clique_cutset(&Graph::path(4)).unwrap();
        assert!(c.cutset == vec![1] || c.cutset == vec![2]);
        assert!(c.verify(&Graph::path(4)));
        assert!(find_clique_cutset(&generators::wall(2).unwrap()).is_none());
        let cs = generators::complete_split(3, 3);
        let c = find_clique_cutset(&cs).unwrap();
        assert!(c.verify(&cs));
        assert!(find_clique_cutset(&Graph::cycle(5)).is_none());
        let d = find_clique_cutset(&Graph::empty(2)).unwrap();
        assert!(d.cutset.is_empty());
    }

    #[test]
    fn agrees_with_bruteforce() {
        for seed in 0..300 {
            let n = 3 + (seed as usize % 9);
            let g = random_graph(n, 0.25 + (seed % 5) as f64 * 0.12, seed);
            let found = find_clique_cutset(&g);
            if let Some(c) = &found {
                assert!(c.verify(&g));
            }
            assert_eq!(found.is_some(), bruteforce_cutset(&g).is_some(), "{g:?}");
        }
    }

    #[test]
    fn decompose_tree_and_cycle() {
        let t = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let at = decompose_atoms(&t);
        assert_eq!(at.atoms, vec![vec![0, 1], vec![1, 2], vec![1, 3], vec![3, 4]]);
        assert_eq!(decompose_atoms(&Graph::cycle(5)).atoms, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(decompose_atoms(&Graph::complete(4)).atoms, vec![vec![0, 1, 2, 3]]);
        let two_k4 = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(decompose_atoms(&two_k4).atoms, vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5]]);
    }

    #[test]
    fn atoms_are_atoms_and_steps_are_cutsets() {
        for seed in 0..120 {
            let g = random_graph(10, 0.3, 1000 + seed);
            let at = decompose_atoms(&g);
            let mut covered = Bits::new(g.n());
            for a in &at.atoms {
                let (h, _) = g.induced(a).unwrap();
                assert!(find_clique_cutset(&h).is_none());
                for &v in a {
                    covered.insert(v);
                }
            }
            assert_eq!(covered.len(), g.n());
            for step in &at.trace {
                assert!(g.is_clique(&step.cutset));
            }
        }
    }

    #[test]
    fn strong_reduction_examples() {
        let k5 = strong_reduce(&Graph::complete(5));
        assert_eq!(k5.reduced.n(), 1);
        assert_eq!(k5.log.len(), 4);
        assert!(k5.log.iter().all(|r| matches!(r, Removal::Twin { .. })));
        let c5 = strong_reduce(&Graph::cycle(5));
        assert!(c5.log.is_empty());
        let f3 = strong_reduce(&generators::f3());
        assert_eq!(f3.reduced, generators::f3());
        let b = Graph::cycle(5).blow_up(&[2, 1, 3, 1, 1]).unwrap().with_vertex(&[0, 1, 2, 3, 4, 5, 6, 7]);
        let r = strong_reduce(&b);
        assert_eq!(r.reduced, Graph::cycle(5));
        assert_eq!(r.reconstruct(b.n()), b);
        assert!(is_strong(&r.reduced));
    }

    #[test]
    fn replay_rebuilds_original() {
        for seed in 0..40 {
            let base = random_graph(6, 0.5, seed);
            let sizes: Vec<usize> = (0..6).map(|i| 1 + (seed as usize + i) % 3).collect();
            let g = base.blow_up(&sizes).unwrap();
            let g = if seed % 2 == 0 { g.with_vertex(&(0..g.n()).collect::<Vec<_>>()) } else { g };
            let r = strong_reduce(&g);
            assert_eq!(r.reconstruct(g.n()), g);
            let rn = r.reduced.n();
            let labels: Vec<u16> = (1..=rn as u16).collect();
            let e = cwx::unique_label_expr(&r.reduced, &(0..rn).collect::<Vec<_>>(), &labels);
            let full = r.replay(&e).unwrap();
            assert!(cwx::validate(&full, &g));
            assert!(full.width() <= e.width().max(2));
        }
    }
}
