//! Strong atoms containing C6 but no F1.
//!
//! A non-dominating induced C6 forces the Petersen graph. Otherwise the graph is a blow-up of a
//! skeleton on at most 13 vertices, built with one label per skeleton vertex.

use alloc::vec::Vec;

use super::{check_input, finish, unique_labels, BuildError, BuildOutcome, Built, Case, Ctx, StructureFault};
use crate::canon;
use crate::cwx;
use crate::generators;
use crate::graph::Graph;
use crate::search::{self, Pattern};

pub(crate) const CONTEXT: [Pattern; 3] = [Pattern::Cycle(4), Pattern::Path(6), Pattern::F1];

pub fn build_c6_expr(g: &Graph) -> Result<BuildOutcome, BuildError> {
    check_input(g, &[Pattern::F1], Some(Pattern::Cycle(6)))?;
    let mut ctx = Ctx::new(g, &CONTEXT);
    let built = build(&mut ctx)?;
    Ok(finish(&mut ctx, built)?)
}

pub(crate) fn build(ctx: &mut Ctx<'_>) -> Result<Built, StructureFault> {
    let g = ctx.g;
    let c = search::find_induced(g, Pattern::Cycle(6)).ok_or_else(|| ctx.fault("c6.find-cycle", Vec::new()))?.map;
    ctx.focus = c.clone();
    let mut covered = g.neighborhood_of_set(&g.set_of(&c));
    covered.union_with(&g.set_of(&c));
    let undominated: Vec<usize> = (0..g.n()).filter(|&v| !covered.contains(v)).collect();
    if !undominated.is_empty() {
        ctx.claim("c6.petersen", canon::is_isomorphic(g, &generators::petersen()), || undominated.clone())?;
        return Ok(Built { expr: unique_labels(g), case: Case::C6Petersen, assembly: None });
    }
    let tp = g.twin_partition();
    let k = tp.skeleton.n();
    ctx.claim("c6.skeleton-order", k <= 13, || tp.classes.iter().map(|cl| cl[0]).collect())?;
    let reps: Vec<usize> = tp.classes.iter().map(|cl| cl[0]).collect();
    let mut expr = unique_labels(&tp.skeleton).rename_vertices(&|v| reps[v]);
    for cl in tp.classes.iter().filter(|cl| cl.len() > 1) {
        expr = cwx::substitute(&expr, cl[0], &cwx::clique_expr(cl)).map_err(|_| ctx.fault("c6.substitute", cl.clone()))?;
    }
    Ok(Built { expr, case: Case::C6Blowup, assembly: None })
}
