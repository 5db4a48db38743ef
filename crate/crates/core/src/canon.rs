//! Canonical labelling by ordered partition refinement and backtracking.
//!
//! Branching skips vertices that are twins (true or false) of an already tried vertex
//! in the same cell, which keeps cliques and blow-ups cheap. Intended for small graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    code: Vec<u64>,
}

fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    'outer: loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        for ci in 0..cells.len() {
            if cells[ci].len() < 2 {
                continue;
            }
            let mut sigs: Vec<(Vec<usize>, usize)> = cells[ci]
                .iter()
                .map(|&v| {
                    let mut s = vec![0usize; cells.len()];
                    for &u in g.neighbors(v) {
                        s[cell_of[u]] += 1;
                    }
                    (s, v)
                })
                .collect();
            if sigs.iter().all(|(s, _)| *s == sigs[0].0) {
                continue;
            }
            sigs.sort();
            let mut groups: Vec<Vec<usize>> = Vec::new();
            let mut last: Option<&Vec<usize>> = None;
            for (s, v) in &sigs {
                if last != Some(s) {
                    groups.push(Vec::new());
                    last = Some(s);
                }
                groups.last_mut().unwrap().push(*v);
            }
            cells.splice(ci..ci + 1, groups);
            continue 'outer;
        }
        break;
    }
}

fn code_of(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64)];
    let mut idx = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(order[i], order[j]) {
                code[idx / 64] |= 1 << (idx % 64);
            }
            idx += 1;
        }
    }
    code
}

fn same_outside(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.row(u).clone();
    a.remove(v);
    let mut b = g.row(v).clone();
    b.remove(u);
    a == b
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(ti) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[ti].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| same_outside(g, u, v)) {
            continue;
        }
        tried.push(v);
        let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
        let mut next = cells.clone();
        next.splice(ti..ti + 1, [vec![v], rest]);
        search(g, next, best);
    }
}

/// Canonical form and a canonical ordering (position `i` holds the original vertex).
pub fn canonical_labelling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    if g.n() == 0 {
        return (CanonicalForm { n: 0, code: Vec::new() }, Vec::new());
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    let (code, order) = best.expect("at least one leaf");
    (CanonicalForm { n: g.n(), code }, order)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labelling(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn permute(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for g in [generators::petersen(), generators::f1(), generators::f2(), generators::f3(), Graph::cycle(6), Graph::complete(9)] {
            for _ in 0..5 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                assert!(is_isomorphic(&g, &permute(&g, &perm)));
            }
        }
    }

    #[test]
    fn separates_non_isomorphic() {
        assert!(!is_isomorphic(&generators::f1(), &generators::f2()));
        assert!(!is_isomorphic(&Graph::cycle(6), &Graph::cycle(3).disjoint_union(&Graph::cycle(3))));
        assert!(is_isomorphic(&Graph::cycle(5).complement(), &Graph::cycle(5)));
        assert!(is_isomorphic(&Graph::path(4).complement(), &Graph::path(4)));
    }

    #[test]
    fn canonical_order_reproduces_form() {
        let g = generators::petersen();
        let (form, order) = canonical_labelling(&g);
        let (h, _) = g.induced(&order).unwrap();
        let ident: Vec<usize> = (0..h.n()).collect();
        assert_eq!(code_of(&h, &ident), form.code);
    }
}
