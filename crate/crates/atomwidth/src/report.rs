//! JSON views of library results.

use std::collections::BTreeMap;

use atomwidth_core::atoms::{AtomTree, CliqueCutset};
use atomwidth_core::builders::{AssemblyRecord, BuildError, BuildOutcome, StructureFault};
use atomwidth_core::colouring::ChiReport;
use atomwidth_core::hardness::{Equivalence, HardnessError, ListAssignment, ReductionInstance};
use atomwidth_core::structure::{C5Partition, PropertyReport};
use atomwidth_core::{Embedding, Graph, Pattern};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::expr;
use crate::formats::GraphJson;

pub fn graph(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::of(g)).expect("graph JSON serializes")
}

pub fn embedding(e: &Embedding) -> Value {
    json!({"pattern": e.pattern.name(), "map": e.map})
}

pub fn opt_embedding(e: Option<&Embedding>) -> Value {
    e.map_or(Value::Null, embedding)
}

pub fn freeness(patterns: &[Pattern], found: Option<&Embedding>) -> Value {
    let names: Vec<String> = patterns.iter().map(|p| p.name()).collect();
    json!({"patterns": names, "free": found.is_none(), "certificate": opt_embedding(found)})
}

pub fn cutset(c: &CliqueCutset) -> Value {
    json!({"cutset": c.cutset, "components": c.components})
}

pub fn atom_tree(t: &AtomTree) -> Value {
    let trace: Vec<Value> = t.trace.iter().map(|s| json!({"cutset": s.cutset, "parts": s.parts})).collect();
    json!({"atoms": t.atoms, "trace": trace})
}

pub fn assembly(a: &AssemblyRecord) -> Value {
    json!({"v0": a.v0, "pairs": a.pairs, "triples": a.triples, "bound": a.bound, "width": a.width})
}

pub fn build_outcome(o: &BuildOutcome) -> Value {
    json!({
        "case": o.case.name(),
        "width": o.width,
        "expr": expr::to_json(&o.expr),
        "text": o.expr.to_string(),
        "audit": o.audit,
        "assembly": o.assembly.as_ref().map_or(Value::Null, assembly),
    })
}

pub fn fault(f: &StructureFault) -> Value {
    json!({
        "claim": f.claim,
        "vertices": f.vertices,
        "certificate": opt_embedding(f.certificate.as_ref()),
        "cutset": f.cutset,
    })
}

pub fn build_error(e: &BuildError) -> Value {
    let detail = match e {
        BuildError::Forbidden(emb) => json!({"certificate": embedding(emb)}),
        BuildError::NotAtom(c) => cutset(c),
        BuildError::Fault(f) => fault(f),
        _ => json!({}),
    };
    json!({"error": e.to_string(), "detail": detail})
}

pub fn chi_report(r: &ChiReport) -> Value {
    let per_atom: Vec<Value> =
        r.per_atom.iter().map(|a| json!({"atom": a.atom, "case": a.case.name(), "width": a.width, "chi": a.chi})).collect();
    json!({"chi": r.chi, "per_atom": per_atom})
}

pub fn partition(p: &C5Partition, props: &PropertyReport) -> Value {
    let mut sets = BTreeMap::new();
    for (m, s) in p.sets.iter().enumerate() {
        if !s.is_empty() {
            let name: Vec<String> = (0..5).filter(|k| m >> k & 1 == 1).map(|k| (k + 1).to_string()).collect();
            sets.insert(format!("S({})", name.join(",")), s.clone());
        }
    }
    let violations: Vec<Value> = props
        .violations
        .iter()
        .map(|v| json!({"property": v.property, "i": v.i, "vertices": v.vertices, "certificate": opt_embedding(v.certificate.as_ref())}))
        .collect();
    let matrix: BTreeMap<String, bool> =
        props.checked.iter().map(|&k| (format!("P{k}"), props.violations.iter().all(|v| v.property != k))).collect();
    json!({"cycle": p.cycle, "sets": sets, "properties": matrix, "violations": violations})
}

fn keyed<T: serde::Serialize>(items: impl Iterator<Item = T>) -> BTreeMap<String, T> {
    items.enumerate().map(|(i, x)| (i.to_string(), x)).collect()
}

pub fn reduction(r: &ReductionInstance) -> Value {
    json!({
        "graph": graph(&r.graph),
        "split": {"C": r.split.clique, "I": r.split.independent},
        "lists": keyed(r.lists.lists().iter()),
        "palette": r.palette,
        "k": r.k,
        "gadget": graph(&r.gadget),
        "types": keyed(r.types.iter().map(|t| t.tag().to_string())),
    })
}

pub fn equivalence(e: &Equivalence) -> Value {
    json!({
        "list_colourable": e.list_colourable(),
        "gadget_colourable": e.gadget_colourable(),
        "holds": e.holds(),
        "list_witness": e.list_witness,
        "gadget_witness": e.gadget_witness,
    })
}

/// A split instance: a graph and per-vertex lists, given as an array or as an object keyed by
/// vertex id. A `gadget` field, when present, replaces the constructed gadget.
#[derive(Debug, Deserialize)]
pub struct InstanceInput {
    pub graph: GraphJson,
    pub lists: Lists,
    #[serde(default)]
    pub gadget: Option<GraphJson>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Lists {
    Array(Vec<Vec<u32>>),
    Keyed(BTreeMap<String, Vec<u32>>),
}

impl Lists {
    pub fn into_assignment(self, n: usize) -> Result<ListAssignment, String> {
        let v = match self {
            Lists::Array(v) => v,
            Lists::Keyed(m) => {
                let mut v = vec![None; n];
                for (k, l) in m {
                    let u: usize = k.parse().map_err(|_| format!("list key `{k}` is not a vertex id"))?;
                    let slot = v.get_mut(u).ok_or_else(|| format!("list key {u} out of range"))?;
                    *slot = Some(l);
                }
                v.into_iter().enumerate().map(|(u, l)| l.ok_or_else(|| format!("vertex {u} has no list"))).collect::<Result<_, _>>()?
            }
        };
        ListAssignment::new(v).map_err(|e: HardnessError| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use atomwidth_core::hardness;

    #[test]
    fn lists_in_both_shapes() {
        let a: Lists = serde_json::from_str("[[1,2],[3]]").unwrap();
        let b: Lists = serde_json::from_str("{\"1\":[3],\"0\":[2,1]}").unwrap();
        assert_eq!(a.into_assignment(2).unwrap(), b.into_assignment(2).unwrap());
        let c: Lists = serde_json::from_str("{\"0\":[1]}").unwrap();
        assert!(c.into_assignment(2).is_err());
    }

    #[test]
    fn reduction_json_shape() {
        let g = atomwidth_core::generators::complete_split(1, 2);
        let r = hardness::reduce(&g, &ListAssignment::new(vec![vec![1, 2], vec![2], vec![1]]).unwrap()).unwrap();
        let v = reduction(&r);
        assert_eq!(v["k"], 2);
        assert_eq!(v["split"]["C"], json!([0]));
        assert_eq!(v["types"]["2"], "i");
        assert_eq!(v["types"]["3"], "x");
        assert_eq!(v["gadget"]["n"], r.gadget.n());
    }
}
