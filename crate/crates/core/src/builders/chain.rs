//! Nice 4-expressions for co-bipartite chain graphs.
//!
//! `A` ends with label 2 and `B` with label 4. Vertices of `B` are ordered by decreasing
//! number of neighbours in `A`, so every vertex of `A` sees a prefix `b_1, ..., b_j`. Vertices
//! of `A` with the same prefix are twins and are created together as one clique.

use alloc::vec::Vec;
use thiserror::Error;

use crate::cwx::{clique_expr_with, CwExpr};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("both sides are empty")]
    Empty,
    #[error("vertex {0} is on both sides or out of range")]
    BadVertex(usize),
    #[error("side {side:?} is not a clique: {u} and {v} are non-adjacent")]
    NotClique { side: Side, u: usize, v: usize },
    /// `a1 b1` and `a2 b2` are edges, `a1 b2` and `a2 b1` are not: a 2P2 between the sides.
    #[error("not a chain: {a1}-{b1} and {a2}-{b2} form a 2P2 between the sides")]
    NotChain { a1: usize, b1: usize, a2: usize, b2: usize },
}

fn check_clique(g: &Graph, s: &[usize], side: Side) -> Result<(), ChainError> {
    for (k, &u) in s.iter().enumerate() {
        for &v in &s[k + 1..] {
            if !g.has_edge(u, v) {
                return Err(ChainError::NotClique { side, u, v });
            }
        }
    }
    Ok(())
}

pub(crate) fn check_sides(g: &Graph, a: &[usize], b: &[usize]) -> Result<(), ChainError> {
    let mut seen = crate::bits::Bits::new(g.n());
    for &v in a.iter().chain(b) {
        if v >= g.n() || seen.contains(v) {
            return Err(ChainError::BadVertex(v));
        }
        seen.insert(v);
    }
    Ok(())
}

/// Orders `b` so that each vertex of `a` sees a prefix, or returns a 2P2.
fn chain_order(g: &Graph, a: &[usize], b: &[usize]) -> Result<Vec<usize>, ChainError> {
    let mut order = b.to_vec();
    let deg = |v: usize| a.iter().filter(|&&u| g.has_edge(u, v)).count();
    order.sort_by_key(|&v| (core::cmp::Reverse(deg(v)), v));
    for &u in a {
        let j = order.iter().filter(|&&v| g.has_edge(u, v)).count();
        if order[..j].iter().all(|&v| g.has_edge(u, v)) {
            continue;
        }
        let b2 = order[j..].iter().copied().find(|&v| g.has_edge(u, v)).expect("some neighbour lies past the prefix");
        let b1 = order[..j].iter().copied().find(|&v| !g.has_edge(u, v)).expect("some prefix vertex is missed");
        // b1 has at least as many A-neighbours as b2, so some a2 sees b1 but not b2.
        let a2 = a
            .iter()
            .copied()
            .find(|&w| g.has_edge(w, b1) && !g.has_edge(w, b2))
            .expect("degree order gives a witness");
        return Err(ChainError::NotChain { a1: u, b1: b2, a2, b2: b1 });
    }
    Ok(order)
}

/// Nice 4-expression for `g[a ∪ b]` where `a`, `b` are cliques with nested neighbourhoods.
pub fn chain_expr(g: &Graph, a: &[usize], b: &[usize]) -> Result<CwExpr, ChainError> {
    check_sides(g, a, b)?;
    if a.is_empty() && b.is_empty() {
        return Err(ChainError::Empty);
    }
    check_clique(g, a, Side::A)?;
    check_clique(g, b, Side::B)?;
    if b.is_empty() {
        return Ok(clique_expr_with(a, 2, 1));
    }
    if a.is_empty() {
        return Ok(clique_expr_with(b, 4, 3));
    }
    let order = chain_order(g, a, b)?;
    let t = order.len();
    // classes[j]: vertices of A whose neighbourhood in B is exactly b_1..b_j.
    let mut classes: Vec<Vec<usize>> = alloc::vec![Vec::new(); t + 1];
    for &u in a {
        classes[order.iter().filter(|&&v| g.has_edge(u, v)).count()].push(u);
    }
    let one = |i: usize| -> Option<CwExpr> { (!classes[i].is_empty()).then(|| clique_expr_with(&classes[i], 1, 2)) };
    let with_b = |i: usize| match one(i) {
        Some(e) => CwExpr::union(e, CwExpr::create(order[i - 1], 3)),
        None => CwExpr::create(order[i - 1], 3),
    };
    let mut tau = CwExpr::relabel(3, 4, CwExpr::relabel(1, 2, CwExpr::join(1, 3, with_b(1))));
    for i in 2..=t {
        let step = CwExpr::join(1, 2, CwExpr::union(with_b(i), tau));
        tau = CwExpr::relabel(1, 2, CwExpr::join(1, 4, CwExpr::relabel(3, 4, CwExpr::join(3, 4, step))));
    }
    if let Some(e) = one(0) {
        tau = CwExpr::relabel(1, 2, CwExpr::join(1, 2, CwExpr::union(e, tau)));
    }
    Ok(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwx::{is_nice, validate_induced};
    use crate::generators::random_cobipartite_chain;

    #[test]
    fn appendix_example() {
        // a0 = 0 sees nothing, a1 = 1 sees b1 = 2.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let e = chain_expr(&g, &[0, 1], &[2]).unwrap();
        assert_eq!(alloc::format!("{e}"), "ρ1→2(η1,2(1(0) ⊕ ρ3→4(ρ1→2(η1,3(1(1) ⊕ 3(2))))))");
        assert!(validate_induced(&e, &g));
        assert_eq!(e.width(), 4);
    }

    #[test]
    fn degenerate_sides() {
        let g = Graph::complete(3);
        let e = chain_expr(&g, &[0, 1, 2], &[]).unwrap();
        assert!(is_nice(&e, &[&[0, 1, 2]]) && validate_induced(&e, &g));
        assert_eq!(e.final_labels()[&0], 2);
        let e = chain_expr(&g, &[], &[0, 1, 2]).unwrap();
        assert_eq!(e.final_labels()[&1], 4);
        assert_eq!(chain_expr(&g, &[], &[]), Err(ChainError::Empty));
    }

    #[test]
    fn random_chains() {
        for seed in 0..200u64 {
            let na = (seed % 9) as usize;
            let nb = ((seed / 9) % 8) as usize + usize::from(na == 0);
            let (g, a, b) = random_cobipartite_chain(na, nb, seed);
            let e = chain_expr(&g, &a, &b).unwrap();
            assert!(validate_induced(&e, &g) && e.vertices().len() == g.n());
            assert!(is_nice(&e, &[&a, &b]));
            assert!(e.width() <= 4);
            if !a.is_empty() {
                assert_eq!(e.final_labels()[&a[0]], 2);
            }
            if !b.is_empty() {
                assert_eq!(e.final_labels()[&b[0]], 4);
            }
        }
    }

    #[test]
    fn rejects_2p2_and_non_cliques() {
        // A = {0, 1}, B = {2, 3}; 0-2 and 1-3 only.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (0, 2), (1, 3)]).unwrap();
        match chain_expr(&g, &[0, 1], &[2, 3]) {
            Err(ChainError::NotChain { a1, b1, a2, b2 }) => {
                assert!(g.has_edge(a1, b1) && g.has_edge(a2, b2));
                assert!(!g.has_edge(a1, b2) && !g.has_edge(a2, b1));
            }
            other => panic!("expected a 2P2, got {other:?}"),
        }
        let g = Graph::from_edges(3, &[(0, 2)]).unwrap();
        assert!(matches!(chain_expr(&g, &[0, 1], &[2]), Err(ChainError::NotClique { side: Side::A, .. })));
    }
}
