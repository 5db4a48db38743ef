//! Strong atoms containing F2 but no C6 or F1.
//!
//! The cycle underlies an F2 and maximises `|S2|`. After reflecting so that `S1 = S(5)`, the
//! graph splits into `V0 = C ∪ S(5,1,2) ∪ S''(3,4,5) ∪ S(2,3,4) ∪ S(4,5)` of size at most 10
//! and the pairs `(S(2,3), X)` and `(S'(3,4,5), Y)`, where `X` is the part of `S(5)` seeing
//! `S(2,3)`, `Y = S(5) - X`, and `S'(3,4,5)` the part of `S(3,4,5)` seeing `Y`. Both pairs meet
//! the divide-and-conquer conditions, so the width is at most 14.

use alloc::vec::Vec;

use super::{assemble, check_input, dnc_expr, finish, minus, seeing, union, BuildError, BuildOutcome, Built, Case, Ctx, Part, StructureFault};
use crate::graph::Graph;
use crate::search::Pattern;
use crate::structure::{choose_c5, C5Objective};

pub(crate) const CONTEXT: [Pattern; 4] = [Pattern::Cycle(4), Pattern::Path(6), Pattern::Cycle(6), Pattern::F1];

pub fn build_f2_expr(g: &Graph) -> Result<BuildOutcome, BuildError> {
    check_input(g, &[Pattern::Cycle(6), Pattern::F1], Some(Pattern::F2))?;
    let mut ctx = Ctx::new(g, &CONTEXT);
    let built = build(&mut ctx)?;
    Ok(finish(&mut ctx, built)?)
}

pub(crate) fn build(ctx: &mut Ctx<'_>) -> Result<Built, StructureFault> {
    let g = ctx.g;
    let chosen = choose_c5(g, C5Objective::MaxS2WithF2).map_err(|_| ctx.fault("f2.choose-cycle", Vec::new()))?;
    let mut p = chosen.partition;
    ctx.focus = p.cycle.to_vec();
    ctx.focus.extend(chosen.extension.into_iter().flatten());
    ctx.empty("f2.s0-empty", p.s(&[]))?;
    ctx.empty("f2.s1-in-s2-s5", &p.union_of(&[&[1], &[3], &[4]]))?;
    ctx.claim("f2.s1-one-side", p.s(&[2]).is_empty() || p.s(&[5]).is_empty(), || p.union_of(&[&[2], &[5]]))?;
    if !p.s(&[2]).is_empty() {
        p = p.remap(g, |q| 2 - q);
    }
    ctx.empty("f2.s2-two-sides", &p.union_of(&[&[3, 4], &[1, 2], &[5, 1]]))?;
    ctx.empty("f2.s123-s451-empty", &p.union_of(&[&[1, 2, 3], &[4, 5, 1]]))?;
    ctx.at_most("f2.s45-single", p.s(&[4, 5]), 1)?;
    let s2 = p.union_of(&[&[2, 3], &[4, 5]]);
    ctx.complete("f2.s512-complete-s2", p.s(&[5, 1, 2]), &s2)?;
    let x = seeing(g, p.s(&[5]), p.s(&[2, 3]));
    let y = minus(p.s(&[5]), &x);
    ctx.anticomplete("f2.x-s345", &x, p.s(&[3, 4, 5]))?;
    ctx.complete("f2.x-s512", &x, p.s(&[5, 1, 2]))?;
    ctx.anticomplete("f2.x-y", &x, &y)?;
    ctx.empty("f2.s5-empty", &p.s_j(5))?;
    let yc = g.components_within(&g.set_of(&y));
    for comp in &yc {
        ctx.clique("f2.y-components-cliques", comp)?;
    }
    let s345_1 = seeing(g, p.s(&[3, 4, 5]), &y);
    let s345_2 = minus(p.s(&[3, 4, 5]), &s345_1);
    ctx.complete("f2.s345-s234", &s345_1, p.s(&[2, 3, 4]))?;
    ctx.anticomplete("f2.s345-x", &s345_1, p.s(&[4, 5]))?;
    ctx.at_most("f2.s512-small", p.s(&[5, 1, 2]), 2)?;
    ctx.at_most("f2.s345-rest-small", &s345_2, 1)?;
    ctx.at_most("f2.s234-small", p.s(&[2, 3, 4]), 1)?;
    let v0 = union(&[&p.cycle, p.s(&[5, 1, 2]), &s345_2, p.s(&[2, 3, 4]), p.s(&[4, 5])]);
    ctx.at_most("f2.v0-small", &v0, 10)?;
    let s23 = p.s(&[2, 3]).to_vec();
    let e1 = ctx.sub("f2.pair-x-dnc", dnc_expr(g, &s23, &x))?;
    let pairs = if y.is_empty() && s345_1.is_empty() {
        alloc::vec![Part::new(alloc::vec![s23, x], Some(e1))]
    } else {
        let e2 = ctx.sub("f2.pair-y-dnc", dnc_expr(g, &s345_1, &y))?;
        alloc::vec![Part::new(alloc::vec![s23, x], Some(e1)), Part::new(alloc::vec![s345_1, y], Some(e2))]
    };
    let asm = ctx.sub("f2.assemble", assemble(g, &v0, &pairs, &[]))?;
    Ok(Built { expr: asm.expr, case: Case::F2, assembly: Some(asm.record) })
}
