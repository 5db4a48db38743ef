//! Induced-subgraph search against the fixed pattern library.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::graph::Graph;

/// The named graphs that appear as forbidden or special subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// Path on the given number of vertices, 2..=9.
    Path(u8),
    /// Cycle on the given number of vertices, 3..=6.
    Cycle(u8),
    F1,
    F2,
    F3,
    ThreeP3,
    P3PlusP6,
    TwoP5,
    Petersen,
    TwoP2,
    ThreeP1,
}

pub const C4: Pattern = Pattern::Cycle(4);
pub const C5: Pattern = Pattern::Cycle(5);
pub const C6: Pattern = Pattern::Cycle(6);
pub const P4: Pattern = Pattern::Path(4);
pub const P6: Pattern = Pattern::Path(6);

impl Pattern {
    /// The pattern graph. Vertex numbering is fixed and documented in `generators`.
    pub fn graph(self) -> Graph {
        match self {
            Pattern::Path(t) => {
                assert!((2..=9).contains(&t), "paths P2..P9 only");
                Graph::path(t as usize)
            }
            Pattern::Cycle(s) => {
                assert!((3..=6).contains(&s), "cycles C3..C6 only");
                Graph::cycle(s as usize)
            }
            Pattern::F1 => crate::generators::f1(),
            Pattern::F2 => crate::generators::f2(),
            Pattern::F3 => crate::generators::f3(),
            Pattern::Petersen => crate::generators::petersen(),
            Pattern::ThreeP3 => Graph::path(3).disjoint_union(&Graph::path(3)).disjoint_union(&Graph::path(3)),
            Pattern::P3PlusP6 => Graph::path(3).disjoint_union(&Graph::path(6)),
            Pattern::TwoP5 => Graph::path(5).disjoint_union(&Graph::path(5)),
            Pattern::TwoP2 => Graph::path(2).disjoint_union(&Graph::path(2)),
            Pattern::ThreeP1 => Graph::empty(3),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::Path(t) => t as usize,
            Pattern::Cycle(s) => s as usize,
            Pattern::F1 | Pattern::F2 => 8,
            Pattern::F3 | Pattern::ThreeP3 | Pattern::P3PlusP6 => 9,
            Pattern::TwoP5 | Pattern::Petersen => 10,
            Pattern::TwoP2 => 4,
            Pattern::ThreeP1 => 3,
        }
    }

    pub fn name(self) -> String {
        use alloc::format;
        match self {
            Pattern::Path(t) => format!("P{t}"),
            Pattern::Cycle(s) => format!("C{s}"),
            Pattern::F1 => "F1".into(),
            Pattern::F2 => "F2".into(),
            Pattern::F3 => "F3".into(),
            Pattern::ThreeP3 => "3P3".into(),
            Pattern::P3PlusP6 => "P3+P6".into(),
            Pattern::TwoP5 => "2P5".into(),
            Pattern::Petersen => "Petersen".into(),
            Pattern::TwoP2 => "2P2".into(),
            Pattern::ThreeP1 => "3P1".into(),
        }
    }

    /// Parses names such as `c4`, `P6`, `3p3`, `p3+p6`, `petersen` (case-insensitive).
    pub fn parse(s: &str) -> Option<Pattern> {
        let lower: String = s.trim().chars().map(|c| c.to_ascii_lowercase()).collect();
        let p = match lower.as_str() {
            "f1" => Pattern::F1,
            "f2" => Pattern::F2,
            "f3" => Pattern::F3,
            "3p3" => Pattern::ThreeP3,
            "p3+p6" => Pattern::P3PlusP6,
            "2p5" => Pattern::TwoP5,
            "petersen" => Pattern::Petersen,
            "2p2" => Pattern::TwoP2,
            "3p1" => Pattern::ThreeP1,
            other => {
                let (kind, num) = other.split_at(1.min(other.len()));
                let t: u8 = num.parse().ok()?;
                match kind {
                    "p" if (2..=9).contains(&t) => Pattern::Path(t),
                    "c" if (3..=6).contains(&t) => Pattern::Cycle(t),
                    _ => return None,
                }
            }
        };
        Some(p)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An induced copy of `pattern`: pattern vertex `i` maps to host vertex `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: Pattern,
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn verify(&self, host: &Graph) -> bool {
        is_induced_copy(host, &self.pattern.graph(), &self.map)
    }
}

/// Checks that `map` is injective and induces exactly `pat` in `host`.
pub fn is_induced_copy(host: &Graph, pat: &Graph, map: &[usize]) -> bool {
    if map.len() != pat.n() || map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let mut seen = Bits::new(host.n());
    for &v in map {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..pat.n()).all(|i| ((i + 1)..pat.n()).all(|j| pat.has_edge(i, j) == host.has_edge(map[i], map[j])))
}

/// Search restrictions: host vertices allowed, and an optional host vertex that must be used.
#[derive(Debug, Clone, Default)]
pub struct SearchScope<'a> {
    pub within: Option<&'a Bits>,
    pub anchor: Option<usize>,
}

struct Matcher<'a> {
    host: &'a Graph,
    pat: &'a Graph,
    order: Vec<usize>,
    constraints: Vec<Vec<(usize, bool)>>,
    map: Vec<usize>,
    used: Bits,
    allowed: Bits,
}

fn search_order(pat: &Graph, first: usize) -> Vec<usize> {
    let k = pat.n();
    let mut order = Vec::with_capacity(k);
    let mut placed = Bits::new(k);
    order.push(first);
    placed.insert(first);
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed.contains(p))
            .max_by_key(|&p| (pat.row(p).intersection_len(&placed), core::cmp::Reverse(p)))
            .expect("some vertex left");
        order.push(next);
        placed.insert(next);
    }
    order
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pat: &'a Graph, order: Vec<usize>, allowed: Bits) -> Self {
        let constraints = (0..order.len())
            .map(|d| (0..d).map(|e| (e, pat.has_edge(order[d], order[e]))).collect())
            .collect();
        Matcher {
            host,
            pat,
            map: alloc::vec![0; order.len()],
            order,
            constraints,
            used: Bits::new(host.n()),
            allowed,
        }
    }

    fn run<F: FnMut(&[usize]) -> bool>(&mut self, d: usize, visit: &mut F) -> bool {
        if d == self.order.len() {
            let mut by_pattern = alloc::vec![0; self.order.len()];
            for (depth, &p) in self.order.iter().enumerate() {
                by_pattern[p] = self.map[depth];
            }
            return visit(&by_pattern);
        }
        let mut cand = self.allowed.clone();
        cand.difference_with(&self.used);
        for &(e, adj) in &self.constraints[d] {
            let h = self.map[e];
            if adj {
                cand.intersect_with(self.host.row(h));
            } else {
                cand.difference_with(self.host.row(h));
            }
        }
        let need = self.pat.degree(self.order[d]);
        for v in cand.iter() {
            if self.host.degree(v) < need {
                continue;
            }
            self.map[d] = v;
            self.used.insert(v);
            let stop = self.run(d + 1, visit);
            self.used.remove(v);
            if stop {
                return true;
            }
        }
        false
    }
}

/// Calls `visit` on every induced copy of `pat` (as a pattern-indexed map) until it returns `true`.
/// With an anchor, a copy may be reported more than once.
pub fn for_each_induced<F: FnMut(&[usize]) -> bool>(host: &Graph, pat: &Graph, scope: &SearchScope<'_>, mut visit: F) -> bool {
    if pat.n() == 0 {
        return visit(&[]);
    }
    if pat.n() > host.n() {
        return false;
    }
    let allowed = match scope.within {
        Some(w) => w.clone(),
        None => host.vertex_set(),
    };
    match scope.anchor {
        None => {
            let mut m = Matcher::new(host, pat, search_order(pat, 0), allowed);
            m.run(0, &mut visit)
        }
        Some(a) => {
            if !allowed.contains(a) {
                return false;
            }
            for p in 0..pat.n() {
                if host.degree(a) < pat.degree(p) {
                    continue;
                }
                let mut m = Matcher::new(host, pat, search_order(pat, p), allowed.clone());
                m.map[0] = a;
                m.used.insert(a);
                if m.run(1, &mut visit) {
                    return true;
                }
            }
            false
        }
    }
}

pub fn find_induced_graph(host: &Graph, pat: &Graph, scope: &SearchScope<'_>) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced(host, pat, scope, |m| {
        found = Some(m.to_vec());
        true
    });
    found
}

pub fn find_induced(host: &Graph, pattern: Pattern) -> Option<Embedding> {
    find_induced_scoped(host, pattern, &SearchScope::default())
}

pub fn find_induced_scoped(host: &Graph, pattern: Pattern, scope: &SearchScope<'_>) -> Option<Embedding> {
    find_induced_graph(host, &pattern.graph(), scope).map(|map| Embedding { pattern, map })
}

/// First embedding of any listed pattern, trying patterns in order.
pub fn violation(host: &Graph, patterns: &[Pattern]) -> Option<Embedding> {
    patterns.iter().find_map(|&p| find_induced(host, p))
}

/// Like [`violation`], restricted to copies through `anchor`.
pub fn violation_at(host: &Graph, patterns: &[Pattern], anchor: usize) -> Option<Embedding> {
    let scope = SearchScope { within: None, anchor: Some(anchor) };
    patterns.iter().find_map(|&p| find_induced_scoped(host, p, &scope))
}

pub fn is_free(host: &Graph, patterns: &[Pattern]) -> bool {
    violation(host, patterns).is_none()
}
