//! Strong atoms containing C5 but none of C6, F1 and F2.
//!
//! The cycle maximises `|S5|` and then minimises `|S3|`. Without 1-vertices the graph is the
//! cycle itself or `C` plus at most two vertices and two homogeneous pairs of cliques (width at
//! most 11). Otherwise four homogeneous pairs and one homogeneous triple surround a set `V0` of
//! at most 7 vertices (width at most 18).

use alloc::vec::Vec;

use super::{
    assemble, chain_expr, check_input, complete_to, dnc_expr, finish, minus, seeing, union, BuildError, BuildOutcome,
    Built, Case, Ctx, Part, StructureFault,
};
use crate::cwx::{self, clique_expr_with, CwExpr};
use crate::graph::Graph;
use crate::search::Pattern;
use crate::structure::{choose_c5, C5Objective, C5Partition};

pub(crate) const CONTEXT: [Pattern; 5] = [Pattern::Cycle(4), Pattern::Path(6), Pattern::Cycle(6), Pattern::F1, Pattern::F2];

pub fn build_c5_expr(g: &Graph) -> Result<BuildOutcome, BuildError> {
    check_input(g, &[Pattern::Cycle(6), Pattern::F1, Pattern::F2], Some(Pattern::Cycle(5)))?;
    let mut ctx = Ctx::new(g, &CONTEXT);
    let built = build(&mut ctx)?;
    Ok(finish(&mut ctx, built)?)
}

pub(crate) fn build(ctx: &mut Ctx<'_>) -> Result<Built, StructureFault> {
    let g = ctx.g;
    let p = choose_c5(g, C5Objective::MaxS5MinS3).map_err(|_| ctx.fault("c5.choose-cycle", Vec::new()))?.partition;
    ctx.focus = p.cycle.to_vec();
    ctx.empty("c5.s0-empty", p.s(&[]))?;
    for i in 1..=5i64 {
        ctx.complete("c5.s3-consecutive-complete", p.s(&[i - 1, i, i + 1]), p.s(&[i, i + 1, i + 2]))?;
    }
    for i in 1..=5i64 {
        let opposite = p.s(&[i - 2, i + 2]);
        let lonely: Vec<usize> = p.s(&[i]).iter().copied().filter(|&v| !g.row(v).intersects(&g.set_of(opposite))).collect();
        ctx.empty("c5.s1-sees-opposite", &lonely)?;
        let side = union(&[p.s(&[i - 2, i - 1, i]), p.s(&[i, i + 1, i + 2])]);
        ctx.anticomplete("c5.s1-misses-s3", p.s(&[i]), &side)?;
    }
    if p.s_j(1).is_empty() {
        case1(ctx, p)
    } else {
        case2(ctx, p)
    }
}

fn pair_chain(ctx: &mut Ctx<'_>, claim: &'static str, a: Vec<usize>, b: Vec<usize>) -> Result<Part, StructureFault> {
    let expr = if a.is_empty() && b.is_empty() { None } else { Some(ctx.sub(claim, chain_expr(ctx.g, &a, &b))?) };
    Ok(Part::new(alloc::vec![a, b], expr))
}

fn pair_dnc(ctx: &mut Ctx<'_>, claim: &'static str, a: Vec<usize>, b: Vec<usize>) -> Result<Part, StructureFault> {
    let expr = if a.is_empty() && b.is_empty() { None } else { Some(ctx.sub(claim, dnc_expr(ctx.g, &a, &b))?) };
    Ok(Part::new(alloc::vec![a, b], expr))
}

/// The induced 5-cycle `c[0], ..., c[4]` with four labels.
fn cycle_expr(c: &[usize; 5]) -> CwExpr {
    let e = CwExpr::join(1, 2, CwExpr::union(CwExpr::create(c[0], 1), CwExpr::create(c[1], 2)));
    let e = CwExpr::relabel(2, 4, CwExpr::join(2, 3, CwExpr::union(e, CwExpr::create(c[2], 3))));
    let e = CwExpr::relabel(3, 4, CwExpr::join(3, 2, CwExpr::union(e, CwExpr::create(c[3], 2))));
    CwExpr::join(3, 2, CwExpr::join(3, 1, CwExpr::union(e, CwExpr::create(c[4], 3))))
}

fn case1(ctx: &mut Ctx<'_>, mut p: C5Partition) -> Result<Built, StructureFault> {
    let g = ctx.g;
    ctx.empty("c5a.s5-empty", &p.s_j(5))?;
    let Some(i) = (1..=5i64).find(|&i| !p.s(&[i, i + 1]).is_empty()) else {
        ctx.empty("c5a.s3-empty", &p.s_j(3))?;
        return Ok(Built { expr: cycle_expr(&p.cycle), case: Case::C5Case1, assembly: None });
    };
    p = p.remap(g, |q| q + i - 3);
    if !seeing(g, p.s(&[3, 4]), p.s(&[4, 5, 1])).is_empty() {
        p = p.remap(g, |q| 7 - q);
    }
    ctx.clique("c5a.s34-clique", p.s(&[3, 4]))?;
    ctx.anticomplete("c5a.s34-misses-s451", p.s(&[3, 4]), p.s(&[4, 5, 1]))?;
    let unseen = minus(p.s(&[3, 4]), &seeing(g, p.s(&[3, 4]), p.s(&[1, 2, 3])));
    ctx.empty("c5a.s34-sees-s123", &unseen)?;
    ctx.empty("c5a.s51-empty", p.s(&[5, 1]))?;
    ctx.empty("c5a.s23-s45-empty", &p.union_of(&[&[2, 3], &[4, 5]]))?;
    ctx.complete("c5a.s34-complete-s345", p.s(&[3, 4]), p.s(&[3, 4, 5]))?;
    if !p.s(&[1, 2]).is_empty() {
        ctx.clique("c5a.s12-clique", p.s(&[1, 2]))?;
        ctx.anticomplete("c5a.s12-misses-s451", p.s(&[1, 2]), p.s(&[4, 5, 1]))?;
        let unseen = minus(p.s(&[1, 2]), &seeing(g, p.s(&[1, 2]), p.s(&[2, 3, 4])));
        ctx.empty("c5a.s12-sees-s234", &unseen)?;
        ctx.complete("c5a.s12-complete-s512", p.s(&[1, 2]), p.s(&[5, 1, 2]))?;
    }
    ctx.empty("c5a.s3-sides-empty", &p.union_of(&[&[5, 1, 2], &[3, 4, 5], &[4, 5, 1]]))?;
    let s234_1 = complete_to(g, p.s(&[2, 3, 4]), p.s(&[3, 4]));
    let s234_2 = minus(p.s(&[2, 3, 4]), &s234_1);
    let s123_1 = if p.s(&[1, 2]).is_empty() { p.s(&[1, 2, 3]).to_vec() } else { complete_to(g, p.s(&[1, 2, 3]), p.s(&[1, 2])) };
    let s123_2 = minus(p.s(&[1, 2, 3]), &s123_1);
    ctx.anticomplete("c5a.s234-rest-misses-s12", &s234_2, p.s(&[1, 2]))?;
    ctx.anticomplete("c5a.s123-rest-misses-s34", &s123_2, p.s(&[3, 4]))?;
    ctx.at_most("c5a.s234-rest-small", &s234_2, 1)?;
    ctx.at_most("c5a.s123-rest-small", &s123_2, 1)?;
    let v0 = union(&[&p.cycle, &s234_2, &s123_2]);
    let pairs = alloc::vec![
        pair_chain(ctx, "c5a.pair-s234-s12", s234_1, p.s(&[1, 2]).to_vec())?,
        pair_chain(ctx, "c5a.pair-s123-s34", s123_1, p.s(&[3, 4]).to_vec())?,
    ];
    let asm = ctx.sub("c5a.assemble", assemble(g, &v0, &pairs, &[]))?;
    Ok(Built { expr: asm.expr, case: Case::C5Case1, assembly: Some(asm.record) })
}

fn case2(ctx: &mut Ctx<'_>, mut p: C5Partition) -> Result<Built, StructureFault> {
    let g = ctx.g;
    let i = (1..=5i64).find(|&i| !p.s(&[i]).is_empty()).expect("case 2 has a 1-vertex");
    p = p.remap(g, |q| q + i - 4);
    ctx.empty("c5b.s1-is-s4", &p.union_of(&[&[1], &[2], &[3], &[5]]))?;
    if !p.s(&[4, 5]).is_empty() {
        p = p.remap(g, |q| 8 - q);
    }
    ctx.empty("c5b.s2-is-s12-s34", &p.union_of(&[&[2, 3], &[4, 5], &[5, 1]]))?;
    ctx.anticomplete("c5b.s34-misses-s451", p.s(&[3, 4]), p.s(&[4, 5, 1]))?;
    ctx.clique("c5b.s34-clique", p.s(&[3, 4]))?;
    let unseen = minus(p.s(&[3, 4]), &seeing(g, p.s(&[3, 4]), p.s(&[1, 2, 3])));
    ctx.empty("c5b.s34-sees-s123", &unseen)?;
    ctx.empty("c5b.s345-complete-part-empty", &complete_to(g, p.s(&[3, 4, 5]), p.s(&[3, 4])))?;
    ctx.at_most("c5b.s345-small", p.s(&[3, 4, 5]), 1)?;
    ctx.complete("c5b.s123-complete-s12", p.s(&[1, 2, 3]), p.s(&[1, 2]))?;
    ctx.empty("c5b.s512-empty", p.s(&[5, 1, 2]))?;
    let mut pairs = alloc::vec![pair_chain(ctx, "c5b.pair-s123-s34", p.s(&[1, 2, 3]).to_vec(), p.s(&[3, 4]).to_vec())?];

    let s12 = p.s(&[1, 2]).to_vec();
    let s4 = p.s(&[4]).to_vec();
    let s234 = p.s(&[2, 3, 4]).to_vec();
    let s451 = p.s(&[4, 5, 1]).to_vec();
    let x = seeing(g, &s12, &s4);
    let y = seeing(g, &s12, &union(&[&s234, &s451]));
    ctx.anticomplete("c5b.s12-one-side", &x, &union(&[&s234, &s451]))?;
    let z = minus(&minus(&s12, &x), &y);
    ctx.clique("c5b.x-clique", &x)?;
    ctx.complete("c5b.x-universal-in-s12", &x, &s12)?;
    ctx.complete("c5b.y-complete-z", &y, &z)?;
    ctx.complete("c5b.y-complete-s5", &y, &p.s_j(5))?;

    let mut v0 = union(&[&p.cycle, p.s(&[3, 4, 5])]);
    if seeing(g, &y, &s234).is_empty() {
        ctx.at_most("c5b.s234-small", &s234, 1)?;
        v0.extend(&s234);
        pairs.push(pair_chain(ctx, "c5b.pair-y-s451", y.clone(), s451)?);
    } else {
        ctx.anticomplete("c5b.y-misses-s451", &y, &s451)?;
        ctx.empty("c5b.s451-empty", &s451)?;
        if p.s(&[3, 4]).is_empty() {
            pairs.push(pair_chain(ctx, "c5b.pair-y-s234", y.clone(), s234)?);
        } else {
            let r = complete_to(g, &s234, p.s(&[3, 4]));
            let t = minus(&s234, &r);
            ctx.anticomplete("c5b.t-misses-y", &t, &y)?;
            ctx.at_most("c5b.t-small", &t, 1)?;
            v0.extend(&t);
            pairs.push(pair_chain(ctx, "c5b.pair-y-r", y.clone(), r)?);
        }
    }
    ctx.at_most("c5b.v0-small", &v0, 7)?;

    let s5 = p.s_j(5);
    ctx.empty("c5b.s5-misses-x", &complete_to(g, &s5, &x))?;
    ctx.empty("c5b.z-sees-s5", &minus(&z, &seeing(g, &z, &s5)))?;
    let x1 = seeing(g, &x, &s5);
    let x0 = minus(&x, &x1);
    let s5_3 = complete_to(g, &s5, &x1);
    let r5 = minus(&s5, &s5_3);
    let z1 = seeing(g, &z, &r5);
    let z2 = minus(&z, &z1);
    let nx0 = seeing(g, &s4, &x0);
    ctx.anticomplete("c5b.nx0-misses-x1", &nx0, &x1)?;
    for &u in &s5 {
        let nz: Vec<usize> = z.iter().copied().filter(|&w| g.has_edge(u, w)).collect();
        ctx.clique("c5b.s5-no-spread-in-z", &nz)?;
    }
    ctx.complete("c5b.z1-complete-z2", &z1, &z2)?;
    ctx.complete("c5b.z1-complete-s5-3", &z1, &s5_3)?;
    ctx.clique("c5b.z1-clique", &z1)?;
    pairs.push(pair_dnc(ctx, "c5b.pair-x0-nx0", x0, nx0.clone())?);
    pairs.push(pair_dnc(ctx, "c5b.pair-s5-z2", s5_3, z2)?);

    let xp = union(&[&x, &z1]);
    let sigma = triple_sigma(ctx, &s5, &xp, &s4)?;
    let kept = g.set_of(&union(&[&r5, &x1, &z1, &minus(&s4, &nx0)]));
    let sets = alloc::vec![r5, union(&[&x1, &z1]), minus(&s4, &nx0)];
    let triple = Part::new(sets, sigma.restrict(&|v| kept.contains(v)));
    let asm = ctx.sub("c5b.assemble", assemble(g, &v0, &pairs, &[triple]))?;
    Ok(Built { expr: asm.expr, case: Case::C5Case2, assembly: Some(asm.record) })
}

/// Nice 6-expression for `g[s5 ∪ xp ∪ s4]` with labels 6, 2 and 4, built piece by piece along
/// the nested neighbourhoods of `s5` in the clique `xp`.
fn triple_sigma(ctx: &mut Ctx<'_>, s5: &[usize], xp: &[usize], s4: &[usize]) -> Result<CwExpr, StructureFault> {
    let g = ctx.g;
    ctx.clique("c5b.triple-xp-clique", xp)?;
    let nbhd = |u: usize| -> Vec<usize> { xp.iter().copied().filter(|&w| g.has_edge(u, w)).collect() };
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut u0 = Vec::new();
    for &u in s5 {
        let n = nbhd(u);
        if n.is_empty() {
            u0.push(u);
        } else if let Some(gr) = groups.iter_mut().find(|gr| gr.0 == n) {
            gr.1.push(u);
        } else {
            groups.push((n, alloc::vec![u]));
        }
    }
    groups.sort_by_key(|gr| gr.0.len());
    for w in groups.windows(2) {
        let nested = w[0].0.iter().all(|v| w[1].0.contains(v));
        ctx.claim("c5b.triple-nested", nested, || alloc::vec![w[0].1[0], w[1].1[0]])?;
    }
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let mut prev: Vec<usize> = Vec::new();
    for gr in &groups {
        pieces.push(minus(&gr.0, &prev));
        prev = gr.0.clone();
    }
    pieces.push(minus(xp, &prev));
    let ms: Vec<Vec<usize>> = pieces.iter().map(|xi| seeing(g, s4, xi)).collect();
    let mut covered: Vec<usize> = Vec::new();
    for m in &ms {
        let repeated: Vec<usize> = m.iter().copied().filter(|v| covered.contains(v)).collect();
        ctx.empty("c5b.triple-pieces-disjoint", &repeated)?;
        covered.extend(m);
    }
    ctx.empty("c5b.triple-pieces-cover", &minus(s4, &covered))?;

    let mut acc: Option<CwExpr> = None;
    for (k, (xi, mi)) in pieces.iter().zip(&ms).enumerate() {
        if xi.is_empty() {
            continue;
        }
        let tau = ctx.sub("c5b.triple-piece-dnc", dnc_expr(g, xi, mi))?;
        let inner = match acc.take() {
            None => tau,
            Some(s) => CwExpr::relabel(1, 2, CwExpr::join(1, 2, CwExpr::union(s, CwExpr::relabel(2, 1, tau)))),
        };
        acc = Some(match groups.get(k) {
            Some(gr) => {
                let eps = clique_expr_with(&gr.1, 5, 6);
                let e = CwExpr::join(5, 4, CwExpr::join(5, 2, CwExpr::union(eps, inner)));
                CwExpr::relabel(5, 6, CwExpr::join(5, 6, e))
            }
            None => inner,
        });
    }
    if !u0.is_empty() {
        let eps = clique_expr_with(&u0, 5, 6);
        acc = Some(match acc {
            None => CwExpr::relabel(5, 6, eps),
            Some(s) => CwExpr::relabel(5, 6, CwExpr::join(5, 6, CwExpr::union(eps, s))),
        });
    }
    let sigma = acc.ok_or_else(|| ctx.fault("c5b.triple-nonempty", s5.to_vec()))?;
    ctx.claim("c5b.triple-valid", cwx::validate_induced(&sigma, g), || union(&[s5, xp, s4]))?;
    Ok(sigma)
}
