//! Named graphs and seeded random families.
//!
//! Fixed numbering used throughout the crate:
//! - `f1()`: cycle `1..5` is `0..4`, then `x = 5` (on 3, 4), `y = 6` (on 2, 3), `z = 7` (on 4, 5);
//!   `x` is also adjacent to `y` and `z`.
//! - `f2()`: cycle `0..4`, `x = 5` (on 4, 5), `y = 6` (on 2, 3), `t = 7` (on 5, 1, 2, `x`, `y`).
//! - `f3()`: `f1()` plus `u = 8` adjacent to the whole cycle.
//! - `petersen()`: outer cycle `0..5`, then `6` on 0 and 3, `7` on 1 and 4, `8` on 2 and 5,
//!   `9` on 6, 7 and 8.

use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::atoms;
use crate::graph::Graph;
use crate::search::{self, Pattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("walls are available for heights 2, 3 and 4, not {0}")]
    UnsupportedHeight(usize),
    #[error("no graph found within the sampling budget of {budget} attempts")]
    BudgetExhausted { budget: usize },
    #[error("requested size {0} is outside the supported range")]
    BadSize(usize),
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("fixed edge list is valid")
}

pub fn f1() -> Graph {
    build(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 2), (5, 3), (6, 1), (6, 2), (7, 3), (7, 4), (5, 6), (5, 7)])
}

pub fn f2() -> Graph {
    build(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 3), (5, 4), (6, 1), (6, 2), (7, 4), (7, 0), (7, 1), (7, 6), (7, 5)])
}

pub fn f3() -> Graph {
    f1().with_vertex(&[0, 1, 2, 3, 4])
}

pub fn petersen() -> Graph {
    build(
        10,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 3), (7, 1), (7, 4), (8, 2), (8, 5), (9, 6), (9, 7), (9, 8)],
    )
}

/// Wall rows as `(y, first x, last x)` and vertical edges as `(x, y)` pairs joined to `(x, y + 1)`.
struct WallTable {
    rows: &'static [(u8, u8, u8)],
    verticals: &'static [(u8, u8)],
}

const WALL_2: WallTable = WallTable {
    rows: &[(0, 1, 5), (1, 0, 5), (2, 0, 4)],
    verticals: &[(0, 1), (1, 0), (2, 1), (3, 0), (4, 1), (5, 0)],
};

const WALL_3: WallTable = WallTable {
    rows: &[(0, 1, 7), (1, 0, 7), (2, 0, 7), (3, 1, 7)],
    verticals: &[(0, 1), (1, 0), (1, 2), (2, 1), (3, 0), (3, 2), (4, 1), (5, 0), (5, 2), (6, 1), (7, 0), (7, 2)],
};

const WALL_4: WallTable = WallTable {
    rows: &[(0, 1, 9), (1, 0, 9), (2, 0, 9), (3, 0, 9), (4, 0, 8)],
    verticals: &[
        (0, 1),
        (0, 3),
        (1, 0),
        (1, 2),
        (2, 1),
        (2, 3),
        (3, 0),
        (3, 2),
        (4, 1),
        (4, 3),
        (5, 0),
        (5, 2),
        (6, 1),
        (6, 3),
        (7, 0),
        (7, 2),
        (8, 1),
        (8, 3),
        (9, 0),
        (9, 2),
    ],
};

/// Edges of the wall of the given height. Vertices are numbered row by row (bottom row first)
/// and left to right inside a row.
pub fn wall_edges(height: usize) -> Result<(usize, Vec<(usize, usize)>), GenError> {
    let table = match height {
        2 => &WALL_2,
        3 => &WALL_3,
        4 => &WALL_4,
        h => return Err(GenError::UnsupportedHeight(h)),
    };
    let mut coords: Vec<(u8, u8)> = Vec::new();
    let mut edges = Vec::new();
    for &(y, x0, x1) in table.rows {
        let start = coords.len();
        for x in x0..=x1 {
            coords.push((x, y));
        }
        for i in start + 1..coords.len() {
            edges.push((i - 1, i));
        }
    }
    let id = |x: u8, y: u8| coords.iter().position(|&c| c == (x, y)).expect("vertical endpoint exists");
    for &(x, y) in table.verticals {
        edges.push((id(x, y), id(x, y + 1)));
    }
    Ok((coords.len(), edges))
}

pub fn wall(height: usize) -> Result<Graph, GenError> {
    subdivided_wall(height, 0)
}

/// Wall with every edge replaced by a path through `k` new vertices, numbered after the originals.
pub fn subdivided_wall(height: usize, k: usize) -> Result<Graph, GenError> {
    let (n, edges) = wall_edges(height)?;
    let mut out = Vec::new();
    let mut next = n;
    for (u, v) in edges {
        let mut prev = u;
        for _ in 0..k {
            out.push((prev, next));
            prev = next;
            next += 1;
        }
        out.push((prev, v));
    }
    Ok(build(next, &out))
}

/// Clique on `0..c` complete to an independent set on `c..c + i`.
pub fn complete_split(c: usize, i: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..c {
        for v in (u + 1)..(c + i) {
            edges.push((u, v));
        }
    }
    build(c + i, &edges)
}

/// Random split graph: a uniformly sized clique prefix, each clique/independent pair joined with probability `p`.
pub fn random_split(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let c = r.gen_range(0..=n);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in (u + 1)..n {
            if v < c || r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, &edges)
}

/// Random co-bipartite chain graph: cliques `A` and `B` of the given sizes where each vertex of
/// `A` sees a prefix of `B` of random length. Vertex ids are shuffled.
pub fn random_cobipartite_chain(na: usize, nb: usize, seed: u64) -> (Graph, Vec<usize>, Vec<usize>) {
    use rand::seq::SliceRandom;
    let mut r = rng(seed);
    let n = na + nb;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let a: Vec<usize> = perm[..na].to_vec();
    let b: Vec<usize> = perm[na..].to_vec();
    let mut edges = Vec::new();
    for side in [&a, &b] {
        for i in 0..side.len() {
            for j in (i + 1)..side.len() {
                edges.push((side[i], side[j]));
            }
        }
    }
    for &u in &a {
        let len = r.gen_range(0..=nb);
        for &v in &b[..len] {
            edges.push((u, v));
        }
    }
    let mut a = a;
    let mut b = b;
    a.sort_unstable();
    b.sort_unstable();
    (build(n, &edges), a, b)
}

fn random_split_in_two<R: Rng>(r: &mut R, items: &[usize], both_nonempty: bool) -> (Vec<usize>, Vec<usize>) {
    loop {
        let (x, y): (Vec<usize>, Vec<usize>) = items.iter().partition(|_| r.gen_bool(0.5));
        if !both_nonempty || (!x.is_empty() && !y.is_empty()) {
            return (x, y);
        }
    }
}

fn clique_edges(vs: &[usize], edges: &mut Vec<(usize, usize)>) {
    for (k, &u) in vs.iter().enumerate() {
        for &v in &vs[k + 1..] {
            edges.push((u, v));
        }
    }
}

/// Each vertex of `a` sees a random prefix of `b` (in the given order).
fn chain_edges<R: Rng>(r: &mut R, a: &[usize], b: &[usize], edges: &mut Vec<(usize, usize)>) {
    for &u in a {
        let len = r.gen_range(0..=b.len());
        for &v in &b[..len] {
            edges.push((u, v));
        }
    }
}

fn grow_dnc<R: Rng>(r: &mut R, a: &[usize], b: &[usize], edges: &mut Vec<(usize, usize)>) {
    if b.len() <= 1 {
        chain_edges(r, a, b, edges);
        return;
    }
    if r.gen_bool(0.5) {
        let (b1, b2) = random_split_in_two(r, b, true);
        let (a1, a2) = random_split_in_two(r, a, false);
        grow_dnc(r, &a1, &b1, edges);
        grow_dnc(r, &a2, &b2, edges);
        return;
    }
    let k = r.gen_range(1..=b.len());
    let (b1, b2) = (b[..k].to_vec(), b[k..].to_vec());
    clique_edges(&b1, edges);
    if b2.is_empty() {
        chain_edges(r, a, &b1, edges);
        return;
    }
    for &u in &b1 {
        for &v in &b2 {
            edges.push((u, v));
        }
    }
    let mut an = Vec::new();
    let mut rest = Vec::new();
    for &u in a {
        match r.gen_range(0..3) {
            0 => an.push(u),
            1 => rest.push(u),
            _ => {}
        }
    }
    for &u in &an {
        for &v in &b1 {
            edges.push((u, v));
        }
    }
    chain_edges(r, &rest, &b1, edges);
    grow_dnc(r, &an, &b2, edges);
}

/// Random graph on `n` vertices split into a clique `A` and a set `B` meeting the four
/// divide-and-conquer conditions, grown by inverting that recursion. Ids are shuffled.
pub fn random_dnc_instance(n: usize, seed: u64) -> (Graph, Vec<usize>, Vec<usize>) {
    use rand::seq::SliceRandom;
    let mut r = rng(seed);
    let n = n.max(1);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let na = r.gen_range(0..n);
    let a = perm[..na].to_vec();
    let b = perm[na..].to_vec();
    let mut edges = Vec::new();
    clique_edges(&a, &mut edges);
    grow_dnc(&mut r, &a, &b, &mut edges);
    let mut a = a;
    let mut b = b;
    a.sort_unstable();
    b.sort_unstable();
    (build(n, &edges), a, b)
}

/// Graph a constructive atom grows from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Template {
    C5,
    C6,
    F1,
    F2,
    F3,
    Petersen,
}

impl Template {
    pub const ALL: [Template; 6] = [Template::C5, Template::C6, Template::F1, Template::F2, Template::F3, Template::Petersen];

    pub fn name(self) -> &'static str {
        match self {
            Template::C5 => "c5",
            Template::C6 => "c6",
            Template::F1 => "f1",
            Template::F2 => "f2",
            Template::F3 => "f3",
            Template::Petersen => "petersen",
        }
    }

    pub fn parse(s: &str) -> Option<Template> {
        Template::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(s))
    }

    pub fn graph(self) -> Graph {
        match self {
            Template::C5 => Graph::cycle(5),
            Template::C6 => Graph::cycle(6),
            Template::F1 => f1(),
            Template::F2 => f2(),
            Template::F3 => f3(),
            Template::Petersen => petersen(),
        }
    }

    /// Patterns the grown graph avoids besides C4 and P6, so that the template's case is the
    /// first one that applies.
    pub fn forbids(self) -> &'static [Pattern] {
        match self {
            Template::C5 => &[Pattern::F1, Pattern::Cycle(6), Pattern::F2],
            Template::C6 | Template::Petersen => &[Pattern::F1],
            Template::F2 => &[Pattern::F1, Pattern::Cycle(6)],
            Template::F1 | Template::F3 => &[],
        }
    }
}

const C4_P6: [Pattern; 2] = [Pattern::Cycle(4), Pattern::Path(6)];

fn propose<R: Rng>(r: &mut R, g: &Graph, base: usize) -> Vec<usize> {
    let n = g.n();
    let v = r.gen_range(0..n);
    let mut nbrs: Vec<usize> = match r.gen_range(0..10) {
        0..=2 => {
            let mut s = g.neighbors(v).to_vec();
            s.push(v);
            s
        }
        3..=6 => {
            let flip = 1.0 / (1 + r.gen_range(2..8)) as f64;
            (0..n).filter(|&w| g.has_edge(v, w) != r.gen_bool(flip)).collect()
        }
        _ => {
            let start = r.gen_range(0..base);
            let len = r.gen_range(1..=base);
            let p = r.gen_range(0.1..0.6);
            (0..n).filter(|&w| if w < base { (w + base - start) % base < len } else { r.gen_bool(p) }).collect()
        }
    };
    nbrs.sort_unstable();
    nbrs.dedup();
    nbrs
}

/// Grows a (C4, P6)-free atom on `n` vertices from `template`, also avoiding the template's
/// [`Template::forbids`] patterns. Each added vertex keeps the graph an atom; its neighbourhood
/// is a true twin, a perturbed copy of some neighbourhood, or a random arc of the base cycle
/// plus random other vertices.
pub fn grow_atom(template: Template, n: usize, seed: u64) -> Result<Graph, GenError> {
    let mut g = template.graph();
    if n > 60 || n < g.n() {
        return Err(GenError::BadSize(n));
    }
    let base = if template == Template::C6 || template == Template::Petersen { 6 } else { 5 };
    let mut patterns = C4_P6.to_vec();
    patterns.extend_from_slice(template.forbids());
    let mut r = rng(seed);
    let budget = 400 * n;
    let mut attempts = 0;
    while g.n() < n {
        if attempts == budget {
            return Err(GenError::BudgetExhausted { budget });
        }
        attempts += 1;
        let nbrs = propose(&mut r, &g, base);
        if nbrs.len() == g.n() && r.gen_bool(0.8) {
            continue;
        }
        let h = g.with_vertex(&nbrs);
        if search::violation_at(&h, &patterns, h.n() - 1).is_none() && atoms::is_atom(&h) {
            g = h;
        }
    }
    Ok(g)
}

/// Cycle types (bit `p - 1` for position `p`) that case 2 of the C5 analysis allows once the
/// cycle is rotated so that `S(4)` is the only 1-vertex class: `S(4)`, `S(1,2)`, `S(3,4)`,
/// `S(1,2,3)`, `S(2,3,4)`, `S(3,4,5)`, `S(4,5,1)` and `S5`.
pub const C5_CASE2_TYPES: [u8; 8] = [0b01000, 0b00011, 0b01100, 0b00111, 0b01110, 0b11100, 0b11001, 0b11111];

/// Grows a (C4, P6, F1, C6, F2)-free graph from an induced C5 on `0..5` whose added vertices
/// have cycle neighbourhoods drawn from `types`, then keeps the atom containing the cycle.
/// Intermediate graphs need not be atoms, so the result may have fewer than `n` vertices.
pub fn grow_c5_atom(n: usize, types: &[u8], seed: u64) -> Result<Graph, GenError> {
    if !(5..=60).contains(&n) || types.is_empty() {
        return Err(GenError::BadSize(n));
    }
    let mut patterns = C4_P6.to_vec();
    patterns.extend_from_slice(Template::C5.forbids());
    let mut r = rng(seed);
    let mut g = Graph::cycle(5);
    let budget = 400 * n;
    let mut attempts = 0;
    while g.n() < n && attempts < budget {
        attempts += 1;
        let mask = types[r.gen_range(0..types.len())];
        let p = r.gen_range(0.2..0.8);
        let nbrs: Vec<usize> = (0..g.n()).filter(|&w| if w < 5 { mask >> w & 1 == 1 } else { r.gen_bool(p) }).collect();
        let h = g.with_vertex(&nbrs);
        if search::violation_at(&h, &patterns, h.n() - 1).is_none() {
            g = h;
        }
    }
    let tree = atoms::decompose_atoms(&g);
    let best = tree.atoms.iter().find(|a| (0..5).all(|v| a.binary_search(&v).is_ok())).expect("a C5 lies inside one atom");
    let (h, _) = g.induced(best).expect("atom vertices are in range");
    assert!(search::is_free(&h, &patterns) && atoms::is_atom(&h), "generated graph failed verification");
    Ok(h)
}

/// Random graph with edge probability `p`, with edges of C4 and P6 copies toggled until none
/// is left, cut down to its largest atom. `None` when the repair budget runs out.
fn repaired_atom<R: Rng>(r: &mut R, n: usize) -> Option<Graph> {
    let p = r.gen_range(1.5..4.0) / n.max(2) as f64;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if r.gen_bool(p.min(1.0)) {
                g = g.with_edge_toggled(u, v);
            }
        }
    }
    for _ in 0..20 * n {
        let Some(e) = search::violation(&g, &C4_P6) else {
            let tree = atoms::decompose_atoms(&g);
            let best = tree.atoms.iter().max_by_key(|a| a.len())?;
            return Some(g.induced(best).expect("atom vertices are in range").0);
        };
        let k = e.map.len();
        let i = r.gen_range(0..k);
        let j = (i + r.gen_range(1..k)) % k;
        g = g.with_edge_toggled(e.map[i], e.map[j]);
    }
    None
}

/// A (C4, P6)-free atom with at most `n` vertices, verified before it is returned.
///
/// By seed modulo 3: repair a sparse random graph and keep its largest atom; grow an atom from
/// a template chosen by the seed; or grow around a C5 with arbitrary vertex types.
pub fn random_c4p6free_atom(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 || n > 60 {
        return Err(GenError::BadSize(n));
    }
    let mut r = rng(seed);
    let g = match seed % 3 {
        0 => {
            let budget = 50;
            (0..budget).find_map(|_| repaired_atom(&mut r, n)).ok_or(GenError::BudgetExhausted { budget })?
        }
        _ if n < 5 => Graph::complete(n),
        1 => {
            let fits: Vec<Template> = Template::ALL.into_iter().filter(|t| t.graph().n() <= n).collect();
            let t = fits[r.gen_range(0..fits.len())];
            let size = r.gen_range(t.graph().n()..=n);
            grow_atom(t, size, r.gen())?
        }
        _ => {
            let types: Vec<u8> = (1..32u8).filter(|_| r.gen_bool(0.5)).collect();
            let types = if types.is_empty() { alloc::vec![0b11111] } else { types };
            grow_c5_atom(r.gen_range(5..=n), &types, r.gen())?
        }
    };
    assert!(search::is_free(&g, &C4_P6) && atoms::is_atom(&g), "generated graph failed verification");
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::is_free;

    #[test]
    fn wall_sizes() {
        assert_eq!(wall(2).unwrap().n(), 16);
        assert_eq!(wall(3).unwrap().n(), 30);
        assert_eq!(wall(4).unwrap().n(), 48);
        assert_eq!(wall(5), Err(GenError::UnsupportedHeight(5)));
        assert_eq!(subdivided_wall(2, 0).unwrap(), wall(2).unwrap());
        for h in 2..=4 {
            let w = wall(h).unwrap();
            let s = subdivided_wall(h, 2).unwrap();
            assert_eq!(s.n(), w.n() + 2 * w.m());
            assert!((0..w.n()).all(|v| w.degree(v) <= 3));
        }
    }

    #[test]
    fn wall_golden_height_2() {
        let w = wall(2).unwrap();
        assert_eq!(w.m(), 19);
        assert_eq!(
            w.edges(),
            alloc::vec![
                (0, 1),
                (0, 6),
                (1, 2),
                (2, 3),
                (2, 8),
                (3, 4),
                (4, 10),
                (5, 6),
                (5, 11),
                (6, 7),
                (7, 8),
                (7, 13),
                (8, 9),
                (9, 10),
                (9, 15),
                (11, 12),
                (12, 13),
                (13, 14),
                (14, 15)
            ]
        );
    }

    #[test]
    fn walls_are_triangle_and_square_free() {
        for h in 2..=4 {
            let w = wall(h).unwrap();
            assert!(is_free(&w, &[Pattern::Cycle(3), Pattern::Cycle(4)]));
            assert!(is_free(&w.complement(), &[Pattern::ThreeP1, Pattern::TwoP2]));
        }
    }

    #[test]
    fn special_graphs() {
        let p = petersen();
        assert_eq!(p.m(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        let (h, _) = f3().induced(&[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(h, f1());
        assert!(crate::search::is_induced_copy(&f2(), &Graph::cycle(5), &[0, 1, 2, 3, 4]));
        assert!(is_free(&f1(), &[Pattern::Cycle(4), Pattern::Path(6)]));
        assert!(is_free(&f2(), &[Pattern::Cycle(4), Pattern::Path(6)]));
        assert_eq!(complete_split(1, 1), Graph::complete(2));
    }

    #[test]
    fn random_split_is_split() {
        for seed in 0..30 {
            let g = random_split(9, 0.5, seed);
            assert!(is_free(&g, &[Pattern::Cycle(4), Pattern::Cycle(5), Pattern::TwoP2]));
        }
    }

    #[test]
    fn grown_atoms_are_verified() {
        for (i, t) in Template::ALL.into_iter().enumerate() {
            let n = t.graph().n() + 6;
            let g = grow_atom(t, n, i as u64).unwrap();
            assert_eq!(g.n(), n);
            assert!(is_free(&g, &C4_P6) && is_free(&g, t.forbids()));
            assert!(atoms::is_atom(&g));
        }
        assert_eq!(grow_atom(Template::F1, 4, 0), Err(GenError::BadSize(4)));
    }

    #[test]
    fn c5_atoms_keep_the_cycle() {
        for seed in 0..10 {
            let g = grow_c5_atom(14, &C5_CASE2_TYPES, seed).unwrap();
            assert!(crate::search::is_induced_copy(&g, &Graph::cycle(5), &[0, 1, 2, 3, 4]));
            assert!(is_free(&g, Template::C5.forbids()));
        }
    }

    #[test]
    fn random_atoms_are_seeded() {
        for seed in 0..12 {
            let g = random_c4p6free_atom(12, seed).unwrap();
            assert!(g.n() <= 12);
            assert!(is_free(&g, &C4_P6) && atoms::is_atom(&g));
            assert_eq!(random_c4p6free_atom(12, seed).unwrap(), g);
        }
        assert_eq!(random_c4p6free_atom(61, 0), Err(GenError::BadSize(61)));
    }

    #[test]
    fn cobipartite_chain_has_nested_neighbourhoods() {
        let (g, a, b) = random_cobipartite_chain(5, 4, 3);
        assert!(g.is_clique(&a) && g.is_clique(&b));
        let nb = |v: usize| b.iter().filter(|&&w| g.has_edge(v, w)).count();
        for &u in &a {
            for &v in &a {
                let (su, sv) = (nb(u), nb(v));
                let nested = b.iter().all(|&w| !g.has_edge(if su <= sv { u } else { v }, w) || g.has_edge(if su <= sv { v } else { u }, w));
                assert!(nested);
            }
        }
    }
}
