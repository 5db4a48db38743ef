//! Strong atoms containing F1.
//!
//! With `S5` non-empty the graph is F3. Otherwise `C` plus four homogeneous pairs of cliques
//! `(X, S(4,5,1))`, `(Y, S(1,2,3))`, `(S(2,3), S(3,4,5))`, `(S(4,5), S(2,3,4))`, where `X` is the
//! part of `S(3,4)` with a neighbour in `S(4,5,1)`, give width at most 13.

use alloc::vec::Vec;

use super::{assemble, chain_expr, check_input, finish, minus, seeing, unique_labels, BuildError, BuildOutcome, Built, Case, Ctx, Part};
use crate::canon;
use crate::generators;
use crate::graph::Graph;
use crate::search::Pattern;
use crate::structure::{choose_c5, C5Objective};

pub(crate) const CONTEXT: [Pattern; 2] = [Pattern::Cycle(4), Pattern::Path(6)];

pub fn build_f1_expr(g: &Graph) -> Result<BuildOutcome, BuildError> {
    check_input(g, &[], Some(Pattern::F1))?;
    let mut ctx = Ctx::new(g, &CONTEXT);
    let built = build(&mut ctx)?;
    Ok(finish(&mut ctx, built)?)
}

pub(crate) fn build(ctx: &mut Ctx<'_>) -> Result<Built, super::StructureFault> {
    let g = ctx.g;
    let chosen = choose_c5(g, C5Objective::MaxS2WithF1).map_err(|_| ctx.fault("f1.choose-cycle", Vec::new()))?;
    let p = chosen.partition;
    ctx.focus = p.cycle.to_vec();
    ctx.focus.extend(chosen.extension.into_iter().flatten());
    ctx.empty("f1.s0-empty", p.s(&[]))?;
    if !p.s_j(5).is_empty() {
        ctx.claim("f1.is-f3", canon::is_isomorphic(g, &generators::f3()), || p.s_j(5))?;
        return Ok(Built { expr: unique_labels(g), case: Case::F1, assembly: None });
    }
    ctx.empty("f1.s1-empty", &p.s_j(1))?;
    ctx.empty("f1.s12-s51-empty", &p.union_of(&[&[1, 2], &[5, 1]]))?;
    ctx.empty("f1.s512-empty", p.s(&[5, 1, 2]))?;
    let x = seeing(g, p.s(&[3, 4]), p.s(&[4, 5, 1]));
    let y = minus(p.s(&[3, 4]), &x);
    ctx.anticomplete("f1.x-s123", &x, p.s(&[1, 2, 3]))?;
    let pairs_sets = [
        (x, p.s(&[4, 5, 1]).to_vec()),
        (y, p.s(&[1, 2, 3]).to_vec()),
        (p.s(&[2, 3]).to_vec(), p.s(&[3, 4, 5]).to_vec()),
        (p.s(&[4, 5]).to_vec(), p.s(&[2, 3, 4]).to_vec()),
    ];
    let mut pairs = Vec::new();
    for (a, b) in pairs_sets {
        let expr = if a.is_empty() && b.is_empty() { None } else { Some(ctx.sub("f1.pair-is-chain", chain_expr(g, &a, &b))?) };
        pairs.push(Part::new(alloc::vec![a, b], expr));
    }
    let asm = ctx.sub("f1.assemble", assemble(g, &p.cycle, &pairs, &[]))?;
    Ok(Built { expr: asm.expr, case: Case::F1, assembly: Some(asm.record) })
}
