//! Clique-width expressions: create `i(v)`, disjoint union `⊕`, join `ηi,j` and relabel `ρi→j`.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

use crate::bits::Bits;
use crate::graph::Graph;

pub type Label = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CwError {
    #[error("vertex {0} is created more than once")]
    DuplicateVertex(usize),
    #[error("join of label {0} with itself")]
    JoinSameLabel(Label),
    #[error("labels must be positive")]
    ZeroLabel,
    #[error("vertex {0} is not created in the expression")]
    VertexNotFound(usize),
    #[error("vertex {0} occurs in both expressions")]
    IdCollision(usize),
    #[error("label map is not injective on the labels in use")]
    NotInjective,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CwExpr {
    Create { v: usize, label: Label },
    Union(Box<CwExpr>, Box<CwExpr>),
    Join { i: Label, j: Label, child: Box<CwExpr> },
    Relabel { from: Label, to: Label, child: Box<CwExpr> },
}

impl CwExpr {
    pub fn create(v: usize, label: Label) -> CwExpr {
        assert!(label > 0, "labels must be positive");
        CwExpr::Create { v, label }
    }

    pub fn try_create(v: usize, label: Label) -> Result<CwExpr, CwError> {
        if label == 0 {
            return Err(CwError::ZeroLabel);
        }
        Ok(CwExpr::Create { v, label })
    }

    pub fn union(a: CwExpr, b: CwExpr) -> CwExpr {
        CwExpr::Union(Box::new(a), Box::new(b))
    }

    /// `ηi,j(child)`. Panics if `i == j`; see [`CwExpr::try_join`].
    pub fn join(i: Label, j: Label, child: CwExpr) -> CwExpr {
        Self::try_join(i, j, child).expect("join labels must differ")
    }

    pub fn try_join(i: Label, j: Label, child: CwExpr) -> Result<CwExpr, CwError> {
        if i == 0 || j == 0 {
            return Err(CwError::ZeroLabel);
        }
        if i == j {
            return Err(CwError::JoinSameLabel(i));
        }
        Ok(CwExpr::Join { i, j, child: Box::new(child) })
    }

    pub fn relabel(from: Label, to: Label, child: CwExpr) -> CwExpr {
        Self::try_relabel(from, to, child).expect("labels must be positive")
    }

    pub fn try_relabel(from: Label, to: Label, child: CwExpr) -> Result<CwExpr, CwError> {
        if from == 0 || to == 0 {
            return Err(CwError::ZeroLabel);
        }
        Ok(CwExpr::Relabel { from, to, child: Box::new(child) })
    }

    /// Union of a non-empty list, folded left.
    pub fn union_all<I: IntoIterator<Item = CwExpr>>(items: I) -> Option<CwExpr> {
        items.into_iter().reduce(CwExpr::union)
    }

    /// Every label mentioned anywhere in the expression.
    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        self.visit(&mut |e| match e {
            CwExpr::Create { label, .. } => {
                out.insert(*label);
            }
            CwExpr::Join { i, j, .. } => {
                out.insert(*i);
                out.insert(*j);
            }
            CwExpr::Relabel { from, to, .. } => {
                out.insert(*from);
                out.insert(*to);
            }
            CwExpr::Union(..) => {}
        });
        out
    }

    /// Number of distinct labels used.
    pub fn width(&self) -> usize {
        self.labels().len()
    }

    pub fn node_count(&self) -> usize {
        let mut c = 0;
        self.visit(&mut |_| c += 1);
        c
    }

    fn visit<F: FnMut(&CwExpr)>(&self, f: &mut F) {
        f(self);
        match self {
            CwExpr::Create { .. } => {}
            CwExpr::Union(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            CwExpr::Join { child, .. } | CwExpr::Relabel { child, .. } => child.visit(f),
        }
    }

    /// Created vertices in creation (left to right) order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let CwExpr::Create { v, .. } = e {
                out.push(*v);
            }
        });
        out
    }

    /// Final label of every vertex, without building edges.
    pub fn final_labels(&self) -> BTreeMap<usize, Label> {
        fn go(e: &CwExpr, out: &mut Vec<(usize, Label)>) {
            match e {
                CwExpr::Create { v, label } => out.push((*v, *label)),
                CwExpr::Union(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                CwExpr::Join { child, .. } => go(child, out),
                CwExpr::Relabel { from, to, child } => {
                    let start = out.len();
                    go(child, out);
                    for (_, l) in &mut out[start..] {
                        if *l == *from {
                            *l = *to;
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out.into_iter().collect()
    }

    /// Labels carried by at least one vertex at the root.
    pub fn root_labels(&self) -> BTreeSet<Label> {
        self.final_labels().values().copied().collect()
    }

    /// Applies `map` to every label. The map must be injective on the labels in use.
    pub fn rename_labels(&self, map: &BTreeMap<Label, Label>) -> Result<CwExpr, CwError> {
        let used = self.labels();
        let mut image = BTreeSet::new();
        for &l in &used {
            let t = *map.get(&l).unwrap_or(&l);
            if t == 0 {
                return Err(CwError::ZeroLabel);
            }
            if !image.insert(t) {
                return Err(CwError::NotInjective);
            }
        }
        let f = |l: Label| *map.get(&l).unwrap_or(&l);
        Ok(self.map_labels(&f))
    }

    fn map_labels(&self, f: &dyn Fn(Label) -> Label) -> CwExpr {
        match self {
            CwExpr::Create { v, label } => CwExpr::Create { v: *v, label: f(*label) },
            CwExpr::Union(a, b) => CwExpr::union(a.map_labels(f), b.map_labels(f)),
            CwExpr::Join { i, j, child } => CwExpr::Join { i: f(*i), j: f(*j), child: Box::new(child.map_labels(f)) },
            CwExpr::Relabel { from, to, child } => {
                CwExpr::Relabel { from: f(*from), to: f(*to), child: Box::new(child.map_labels(f)) }
            }
        }
    }

    /// Renames vertex ids through `map` (must be injective on the created vertices).
    pub fn rename_vertices(&self, map: &dyn Fn(usize) -> usize) -> CwExpr {
        match self {
            CwExpr::Create { v, label } => CwExpr::Create { v: map(*v), label: *label },
            CwExpr::Union(a, b) => CwExpr::union(a.rename_vertices(map), b.rename_vertices(map)),
            CwExpr::Join { i, j, child } => CwExpr::Join { i: *i, j: *j, child: Box::new(child.rename_vertices(map)) },
            CwExpr::Relabel { from, to, child } => {
                CwExpr::Relabel { from: *from, to: *to, child: Box::new(child.rename_vertices(map)) }
            }
        }
    }

    /// Removes every vertex not in `keep`. The result evaluates to the induced subgraph on the
    /// kept vertices with the same labels; `None` if nothing is kept.
    pub fn restrict(&self, keep: &dyn Fn(usize) -> bool) -> Option<CwExpr> {
        match self {
            CwExpr::Create { v, .. } => keep(*v).then(|| self.clone()),
            CwExpr::Union(a, b) => match (a.restrict(keep), b.restrict(keep)) {
                (Some(x), Some(y)) => Some(CwExpr::union(x, y)),
                (x, y) => x.or(y),
            },
            CwExpr::Join { i, j, child } => child.restrict(keep).map(|c| CwExpr::Join { i: *i, j: *j, child: Box::new(c) }),
            CwExpr::Relabel { from, to, child } => {
                child.restrict(keep).map(|c| CwExpr::Relabel { from: *from, to: *to, child: Box::new(c) })
            }
        }
    }

    /// Drops relabels and joins that cannot change the result: `ρi→i`, and operations on labels
    /// absent from the subexpression.
    pub fn normalize(&self) -> CwExpr {
        self.normalize_inner().0
    }

    fn normalize_inner(&self) -> (CwExpr, BTreeSet<Label>) {
        match self {
            CwExpr::Create { label, .. } => (self.clone(), BTreeSet::from([*label])),
            CwExpr::Union(a, b) => {
                let (x, mut lx) = a.normalize_inner();
                let (y, ly) = b.normalize_inner();
                lx.extend(ly);
                (CwExpr::union(x, y), lx)
            }
            CwExpr::Join { i, j, child } => {
                let (c, ls) = child.normalize_inner();
                if ls.contains(i) && ls.contains(j) {
                    (CwExpr::Join { i: *i, j: *j, child: Box::new(c) }, ls)
                } else {
                    (c, ls)
                }
            }
            CwExpr::Relabel { from, to, child } => {
                let (c, mut ls) = child.normalize_inner();
                if from != to && ls.contains(from) {
                    ls.remove(from);
                    ls.insert(*to);
                    (CwExpr::Relabel { from: *from, to: *to, child: Box::new(c) }, ls)
                } else {
                    (c, ls)
                }
            }
        }
    }
}

/// Result of evaluating an expression: vertices (sorted), their final labels, and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub vertices: Vec<usize>,
    pub labels: Vec<Label>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    pub fn label_of(&self, v: usize) -> Option<Label> {
        self.vertices.binary_search(&v).ok().map(|i| self.labels[i])
    }

    /// The graph on `0..n` if the vertex set is exactly that range.
    pub fn to_graph(&self) -> Option<Graph> {
        let n = self.vertices.len();
        if self.vertices.iter().enumerate().any(|(i, &v)| i != v) {
            return None;
        }
        Graph::from_edges(n, &self.edges).ok()
    }

    /// Compacts vertex ids in increasing order; returns the graph and the old id of each new vertex.
    pub fn to_compact_graph(&self) -> (Graph, Vec<usize>) {
        let index: BTreeMap<usize, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<_> = self.edges.iter().map(|(u, v)| (index[u], index[v])).collect();
        (Graph::from_edges(self.vertices.len(), &edges).expect("edges are on listed vertices"), self.vertices.clone())
    }
}

pub fn eval(e: &CwExpr) -> Result<LabeledGraph, CwError> {
    let verts = e.vertices();
    let cap = verts.iter().copied().max().map_or(0, |m| m + 1);
    let mut seen = Bits::new(cap);
    for &v in &verts {
        if seen.contains(v) {
            return Err(CwError::DuplicateVertex(v));
        }
        seen.insert(v);
    }
    let mut rows = vec![Bits::new(cap); cap];
    fn go(e: &CwExpr, rows: &mut [Bits]) -> Result<Vec<(usize, Label)>, CwError> {
        match e {
            CwExpr::Create { v, label } => {
                if *label == 0 {
                    return Err(CwError::ZeroLabel);
                }
                Ok(vec![(*v, *label)])
            }
            CwExpr::Union(a, b) => {
                let mut x = go(a, rows)?;
                x.extend(go(b, rows)?);
                Ok(x)
            }
            CwExpr::Join { i, j, child } => {
                if i == j {
                    return Err(CwError::JoinSameLabel(*i));
                }
                let cur = go(child, rows)?;
                let li: Vec<usize> = cur.iter().filter(|p| p.1 == *i).map(|p| p.0).collect();
                let lj: Vec<usize> = cur.iter().filter(|p| p.1 == *j).map(|p| p.0).collect();
                for &u in &li {
                    for &w in &lj {
                        rows[u].insert(w);
                        rows[w].insert(u);
                    }
                }
                Ok(cur)
            }
            CwExpr::Relabel { from, to, child } => {
                if *from == 0 || *to == 0 {
                    return Err(CwError::ZeroLabel);
                }
                let mut cur = go(child, rows)?;
                for p in &mut cur {
                    if p.1 == *from {
                        p.1 = *to;
                    }
                }
                Ok(cur)
            }
        }
    }
    let mut cur = go(e, &mut rows)?;
    cur.sort_unstable();
    let mut edges = Vec::new();
    for &(u, _) in &cur {
        for w in rows[u].iter() {
            if u < w {
                edges.push((u, w));
            }
        }
    }
    Ok(LabeledGraph {
        vertices: cur.iter().map(|p| p.0).collect(),
        labels: cur.iter().map(|p| p.1).collect(),
        edges,
    })
}

/// True iff the expression creates exactly `0..n` and produces exactly the edges of `g`.
pub fn validate(e: &CwExpr, g: &Graph) -> bool {
    match eval(e) {
        Ok(lg) => lg.vertices.len() == g.n() && lg.to_graph().is_some_and(|h| h == *g),
        Err(_) => false,
    }
}

/// True iff the expression builds the subgraph of `g` induced by the vertices it creates.
pub fn validate_induced(e: &CwExpr, g: &Graph) -> bool {
    let Ok(lg) = eval(e) else { return false };
    if lg.vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut expected = Vec::new();
    for (i, &u) in lg.vertices.iter().enumerate() {
        for &w in &lg.vertices[i + 1..] {
            if g.has_edge(u, w) {
                expected.push((u, w));
            }
        }
    }
    expected.sort_unstable();
    expected == lg.edges
}

/// Final labels are constant on every part and distinct across non-empty parts, and the parts
/// cover exactly the created vertices.
pub fn is_nice(e: &CwExpr, parts: &[&[usize]]) -> bool {
    let labels = e.final_labels();
    if labels.len() != e.vertices().len() {
        return false;
    }
    let mut covered = 0;
    let mut used = BTreeSet::new();
    for part in parts {
        let mut part_label = None;
        for v in *part {
            let Some(&l) = labels.get(v) else { return false };
            match part_label {
                None => part_label = Some(l),
                Some(p) if p != l => return false,
                _ => {}
            }
            covered += 1;
        }
        if let Some(l) = part_label {
            if !used.insert(l) {
                return false;
            }
        }
    }
    covered == labels.len()
}

/// Final label shared by all of `part`, if any.
pub fn part_label(e: &CwExpr, part: &[usize]) -> Option<Label> {
    let labels = e.final_labels();
    let first = *labels.get(part.first()?)?;
    part.iter().all(|v| labels.get(v) == Some(&first)).then_some(first)
}

/// Expression for a clique on `vs` with every vertex finally labelled `fin`, using `aux` as the
/// second label.
pub fn clique_expr_with(vs: &[usize], fin: Label, aux: Label) -> CwExpr {
    assert!(!vs.is_empty(), "clique expression needs a vertex");
    let mut e = CwExpr::create(vs[0], fin);
    for &v in &vs[1..] {
        e = CwExpr::relabel(aux, fin, CwExpr::join(fin, aux, CwExpr::union(e, CwExpr::create(v, aux))));
    }
    e
}

/// Clique on `vs` with labels `{1, 2}` (just `{1}` for one vertex), all vertices finally labelled 1.
pub fn clique_expr(vs: &[usize]) -> CwExpr {
    clique_expr_with(vs, 1, 2)
}

/// Expression for `g[vs]` giving vertex `vs[k]` the label `labels[k]` (labels pairwise distinct).
/// Adds vertices in order and joins each to its earlier neighbours.
pub fn unique_label_expr(g: &Graph, vs: &[usize], labels: &[Label]) -> CwExpr {
    assert_eq!(vs.len(), labels.len());
    assert!(!vs.is_empty());
    let mut e = CwExpr::create(vs[0], labels[0]);
    for k in 1..vs.len() {
        e = CwExpr::union(e, CwExpr::create(vs[k], labels[k]));
        for m in 0..k {
            if g.has_edge(vs[k], vs[m]) {
                e = CwExpr::join(labels[k], labels[m], e);
            }
        }
    }
    e
}

/// Replaces the creation of `h` in `tau` by `sigma` with all of sigma's final labels collapsed to
/// the label `h` had. Sigma's labels are first mapped into tau's label set where possible, so the
/// result uses at most `max(width(tau), width(sigma))` labels. `h` may itself be created in sigma.
pub fn substitute(tau: &CwExpr, h: usize, sigma: &CwExpr) -> Result<CwExpr, CwError> {
    let tau_vs = tau.vertices();
    if !tau_vs.contains(&h) {
        return Err(CwError::VertexNotFound(h));
    }
    let tau_set: BTreeSet<usize> = tau_vs.into_iter().collect();
    for v in sigma.vertices() {
        if v != h && tau_set.contains(&v) {
            return Err(CwError::IdCollision(v));
        }
    }
    let tl = tau.labels();
    let sl = sigma.labels();
    let mut free: Vec<Label> = tl.iter().copied().filter(|l| !sl.contains(l)).collect();
    free.reverse();
    let mut map = BTreeMap::new();
    for &l in &sl {
        if tl.contains(&l) {
            continue;
        }
        if let Some(t) = free.pop() {
            map.insert(l, t);
        }
    }
    let sigma = sigma.rename_labels(&map)?;
    fn go(e: &CwExpr, h: usize, sigma: &CwExpr, done: &mut bool) -> CwExpr {
        match e {
            CwExpr::Create { v, label } if *v == h && !*done => {
                *done = true;
                let mut s = sigma.clone();
                for l in sigma.root_labels() {
                    if l != *label {
                        s = CwExpr::relabel(l, *label, s);
                    }
                }
                s
            }
            CwExpr::Create { .. } => e.clone(),
            CwExpr::Union(a, b) => {
                let x = go(a, h, sigma, done);
                let y = go(b, h, sigma, done);
                CwExpr::union(x, y)
            }
            CwExpr::Join { i, j, child } => CwExpr::Join { i: *i, j: *j, child: Box::new(go(child, h, sigma, done)) },
            CwExpr::Relabel { from, to, child } => {
                CwExpr::Relabel { from: *from, to: *to, child: Box::new(go(child, h, sigma, done)) }
            }
        }
    }
    let mut done = false;
    Ok(go(tau, h, &sigma, &mut done))
}

/// Adds `v` as a true twin of `u`: `u` becomes the clique `{u, v}` inside the expression.
pub fn splice_twin(tau: &CwExpr, u: usize, v: usize) -> Result<CwExpr, CwError> {
    substitute(tau, u, &clique_expr(&[u, v]))
}

/// Adds `v` adjacent to every vertex of `tau`.
pub fn splice_universal(tau: &CwExpr, v: usize) -> Result<CwExpr, CwError> {
    if tau.vertices().contains(&v) {
        return Err(CwError::IdCollision(v));
    }
    let labels: Vec<Label> = tau.labels().into_iter().collect();
    let base = labels[0];
    let other = labels.get(1).copied().unwrap_or(if base == 1 { 2 } else { 1 });
    let mut e = tau.clone();
    for l in tau.root_labels() {
        if l != base {
            e = CwExpr::relabel(l, base, e);
        }
    }
    Ok(CwExpr::join(base, other, CwExpr::union(e, CwExpr::create(v, other))))
}

impl fmt::Display for CwExpr {
    /// Prefix form, for example `η3,2(3(3) ⊕ ρ3→2(2(1)))`. Unions nested inside unions are
    /// parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CwExpr::Create { v, label } => write!(f, "{label}({v})"),
            CwExpr::Union(a, b) => {
                for (k, side) in [a, b].into_iter().enumerate() {
                    if k == 1 {
                        f.write_str(" ⊕ ")?;
                    }
                    if matches!(**side, CwExpr::Union(..)) {
                        write!(f, "({side})")?;
                    } else {
                        write!(f, "{side}")?;
                    }
                }
                Ok(())
            }
            CwExpr::Join { i, j, child } => write!(f, "η{i},{j}({child})"),
            CwExpr::Relabel { from, to, child } => write!(f, "ρ{from}→{to}({child})"),
        }
    }
}

impl fmt::Debug for CwExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
