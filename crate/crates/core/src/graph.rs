//! Simple undirected graphs on dense ids `0..n`.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;
use thiserror::Error;

use crate::bits::Bits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("blow-up size of vertex {0} is zero")]
    ZeroBlowUp(usize),
    #[error("expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },
}

/// Immutable simple graph. Adjacency is stored both as sorted lists and as bitset rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<Bits>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![Bits::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = vec![Bits::new(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// Builds from symmetric loop-free bitset rows.
    pub(crate) fn from_rows(rows: Vec<Bits>) -> Self {
        let adj = rows.iter().map(|r| r.to_vec()).collect();
        Graph { adj, rows }
    }

    pub fn complete(n: usize) -> Self {
        let mut rows = vec![Bits::full(n); n];
        for (v, r) in rows.iter_mut().enumerate() {
            r.remove(v);
        }
        Self::from_rows(rows)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    pub fn closed_row(&self, v: usize) -> Bits {
        let mut r = self.rows[v].clone();
        r.insert(v);
        r
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self) -> Bits {
        Bits::full(self.n())
    }

    pub fn set_of(&self, vs: &[usize]) -> Bits {
        Bits::from_iter(self.n(), vs.iter().copied())
    }

    fn check_vertices(&self, s: &[usize]) -> Result<(), GraphError> {
        let mut seen = Bits::new(self.n());
        for &v in s {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
            }
            if seen.contains(v) {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen.insert(v);
        }
        Ok(())
    }

    /// Subgraph induced by `s`. Vertex `i` of the result is `s[i]`; the returned remap is `s` itself.
    pub fn induced(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_vertices(s)?;
        let k = s.len();
        let mut rows = vec![Bits::new(k); k];
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(s[i], s[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Ok((Self::from_rows(rows), s.to_vec()))
    }

    /// Subgraph induced by a bitset, vertices in increasing order.
    pub fn induced_bits(&self, s: &Bits) -> (Graph, Vec<usize>) {
        self.induced(&s.to_vec()).expect("bitset vertices are in range")
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = Bits::full(n);
                r.difference_with(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Replaces vertex `v` by a clique of `sizes[v]` vertices. Copies of `v` are numbered
    /// consecutively, in order of `v`.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Graph, GraphError> {
        if sizes.len() != self.n() {
            return Err(GraphError::SizeMismatch { expected: self.n(), got: sizes.len() });
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::ZeroBlowUp(v));
        }
        let mut start = Vec::with_capacity(self.n() + 1);
        let mut acc = 0;
        for &s in sizes {
            start.push(acc);
            acc += s;
        }
        start.push(acc);
        let mut rows = vec![Bits::new(acc); acc];
        for v in 0..self.n() {
            for (a, row) in rows.iter_mut().enumerate().take(start[v + 1]).skip(start[v]) {
                for b in start[v]..start[v + 1] {
                    if a != b {
                        row.insert(b);
                    }
                }
                for &u in self.neighbors(v) {
                    for b in start[u]..start[u + 1] {
                        row.insert(b);
                    }
                }
            }
        }
        Ok(Self::from_rows(rows))
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n() + other.n();
        let mut rows = vec![Bits::new(n); n];
        for (u, v) in self.edges() {
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let off = self.n();
        for (u, v) in other.edges() {
            rows[u + off].insert(v + off);
            rows[v + off].insert(u + off);
        }
        Self::from_rows(rows)
    }

    /// Copy of the graph with the adjacency of `u` and `v` flipped.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n() && v < self.n());
        let mut rows = self.rows.clone();
        if rows[u].contains(v) {
            rows[u].remove(v);
            rows[v].remove(u);
        } else {
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Self::from_rows(rows)
    }

    /// Copy of the graph with one extra vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Graph {
        let n = self.n() + 1;
        let mut rows: Vec<Bits> = (0..self.n())
            .map(|v| Bits::from_iter(n, self.neighbors(v).iter().copied()))
            .collect();
        let mut last = Bits::new(n);
        for &u in nbrs {
            rows[u].insert(n - 1);
            last.insert(u);
        }
        rows.push(last);
        Self::from_rows(rows)
    }

    pub fn is_clique(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_clique_bits(&self, s: &Bits) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_independent(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Vertices outside `s` with a neighbour in `s`.
    pub fn neighborhood_of_set(&self, s: &Bits) -> Bits {
        let mut out = Bits::new(self.n());
        for v in s.iter() {
            out.union_with(&self.rows[v]);
        }
        out.difference_with(s);
        out
    }

    /// Connected components of `G[s]`, each sorted, ordered by smallest vertex.
    pub fn components_within(&self, s: &Bits) -> Vec<Vec<usize>> {
        let mut left = s.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            left.remove(start);
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                let mut next = self.rows[v].clone();
                next.intersect_with(&left);
                for w in next.iter() {
                    left.remove(w);
                    comp.push(w);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    /// Adjacent vertices with equal closed neighbourhoods.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        u != v && self.has_edge(u, v) && self.closed_row(u) == self.closed_row(v)
    }

    /// Whether every vertex of `a` is adjacent to every vertex of `b` (sets disjoint).
    pub fn complete_to(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&u| b.iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn anticomplete_to(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&u| b.iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn twin_partition(&self) -> TwinPartition {
        let mut index: HashMap<Bits, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; self.n()];
        for (v, slot) in class_of.iter_mut().enumerate() {
            let key = self.closed_row(v);
            let c = *index.entry(key).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(v);
            *slot = c;
        }
        let r = classes.len();
        let mut rows = vec![Bits::new(r); r];
        for (c, cls) in classes.iter().enumerate() {
            for &u in self.neighbors(cls[0]) {
                let d = class_of[u];
                if d != c {
                    rows[c].insert(d);
                }
            }
        }
        let sizes = classes.iter().map(Vec::len).collect();
        TwinPartition {
            classes,
            class_of,
            skeleton: Graph::from_rows(rows),
            sizes,
        }
    }
}

/// Classes of true twins and the quotient skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes ordered by smallest member; skeleton vertex `i` is class `i`.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub skeleton: Graph,
    pub sizes: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::path(4)
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn induced_on_cycle() {
        let c5 = Graph::cycle(5);
        let (h, map) = c5.induced(&[0, 1, 2]).unwrap();
        assert_eq!(h, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(c5.induced(&[0, 1, 2, 3, 4]).unwrap().0, c5);
        assert!(c5.induced(&[0, 7]).is_err());
        assert!(c5.induced(&[1, 1]).is_err());
    }

    #[test]
    fn complement_involution() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let g = p4();
        assert_eq!(g.complement().complement(), g);
        // P4 is self-complementary up to relabelling: 1-3-0-2.
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn blow_up_basics() {
        assert_eq!(Graph::empty(1).blow_up(&[4]).unwrap(), Graph::complete(4));
        assert_eq!(Graph::path(2).blow_up(&[1, 1]).unwrap(), Graph::path(2));
        assert_eq!(Graph::path(2).blow_up(&[1, 0]), Err(GraphError::ZeroBlowUp(1)));
        let b = Graph::path(3).blow_up(&[1, 2, 1]).unwrap();
        assert_eq!(b.n(), 4);
        assert_eq!(b.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn twin_classes() {
        let k5 = Graph::complete(5);
        let tp = k5.twin_partition();
        assert_eq!(tp.classes, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(tp.skeleton.n(), 1);
        let c5 = Graph::cycle(5).twin_partition();
        assert_eq!(c5.classes.len(), 5);
        assert_eq!(c5.skeleton, Graph::cycle(5));
        let b = Graph::cycle(5).blow_up(&[2, 1, 3, 1, 1]).unwrap();
        let tp = b.twin_partition();
        assert_eq!(tp.sizes, vec![2, 1, 3, 1, 1]);
        assert_eq!(tp.skeleton.blow_up(&tp.sizes).unwrap(), b);
    }

    #[test]
    fn components_and_cliques() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(Graph::complete(4).is_clique(&[0, 1, 2, 3]));
        assert!(Graph::complete(4).is_clique_bits(&Bits::full(4)));
        assert!(!p4().is_clique(&[0, 2]));
    }
}
