//! Laws of the type decompositions: the three-way split for one set and the
//! refined split for a nested pair, with uniqueness by exhaustive search.

use super::ctx::ModelCtx;
use super::{ensure, Law};
use crate::exocenter::ExoMap;
use crate::typetheory::{self, TdContext};

pub(super) fn laws() -> Vec<Law> {
    vec![
        Law { id: "decompos", group: "decomposition", summary: "the canonical triple is disjoint, joins to one, and carries the stated flags", run: decompos },
        Law { id: "decompos.uniqueness", group: "decomposition", summary: "no other disjoint triple carries the stated flags", run: decompos_uniqueness },
        Law { id: "tau", group: "decomposition", summary: "nested sets kill the upper-triangular interactions", run: tau },
        Law { id: "I-II-III", group: "decomposition", summary: "nested sets split the algebra into types one, two and three", run: i_ii_iii },
        Law { id: "I-II-III.uniqueness", group: "decomposition", summary: "the typed triple and its refinements are unique", run: i_ii_iii_uniqueness },
        Law { id: "I-II-III.refinements", group: "decomposition", summary: "the refined summands carry the stated formulas and flags", run: i_ii_iii_refinements },
    ]
}

fn canonical_triple(ctx: &ModelCtx, tctx: &TdContext) -> (ExoMap, ExoMap, ExoMap) {
    typetheory::fundamental_decomposition(&ctx.e, tctx)
}

fn decompos(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for (name, tctx) in &ctx.td {
        let (p1, p2, p3) = canonical_triple(ctx, tctx);
        ensure!(
            p1.meet(&p2).is_zero() && p1.meet(&p3).is_zero() && p2.meet(&p3).is_zero(),
            "[{name}] canonical triple not pairwise disjoint"
        );
        ensure!(
            p1.join(&p2, e).join(&p3, e).is_identity(),
            "[{name}] canonical triple does not join to one"
        );
        let f1 = tctx.classify(e, &p1);
        let f2 = tctx.classify(e, &p2);
        let f3 = tctx.classify(e, &p3);
        ensure!(f1.type_k, "[{name}] first part not typed");
        ensure!(
            f2.locally_type_k && f2.properly_non_k,
            "[{name}] second part not locally typed and properly untyped"
        );
        ensure!(f3.purely_non_k, "[{name}] third part not purely untyped");
    }
    Ok(())
}

fn decompos_uniqueness(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for (name, tctx) in &ctx.td {
        let canonical = canonical_triple(ctx, tctx);
        let flags: Vec<_> = ctx.gex.iter().map(|pi| tctx.classify(e, pi)).collect();
        let mut found = 0usize;
        for (i, a) in ctx.gex.iter().enumerate() {
            if !flags[i].type_k {
                continue;
            }
            for (j, b) in ctx.gex.iter().enumerate() {
                if !(flags[j].locally_type_k && flags[j].properly_non_k) {
                    continue;
                }
                if !a.meet(b).is_zero() {
                    continue;
                }
                for (k, c) in ctx.gex.iter().enumerate() {
                    if !flags[k].purely_non_k {
                        continue;
                    }
                    if !(a.meet(c).is_zero() && b.meet(c).is_zero()) {
                        continue;
                    }
                    if a.join(b, e).join(c, e).is_identity() {
                        found += 1;
                        ensure!(
                            (a.clone(), b.clone(), c.clone()) == canonical,
                            "[{name}] a different typed triple exists"
                        );
                    }
                }
            }
        }
        ensure!(found == 1, "[{name}] expected exactly one typed triple, found {found}");
    }
    Ok(())
}

type NamedCtx = (String, TdContext);

/// Nested pairs of named type-determining sets, smaller first.
fn nested_pairs(ctx: &ModelCtx) -> Vec<(&NamedCtx, &NamedCtx)> {
    let mut out = Vec::new();
    for k in &ctx.td {
        for f in &ctx.td {
            if k.1.k_set.is_subset(&f.1.k_set) {
                out.push((k, f));
            }
        }
    }
    out
}

fn tau(ctx: &ModelCtx) -> Result<(), String> {
    for ((kname, kctx), (fname, fctx)) in nested_pairs(ctx) {
        let (p1, p2, p3) = canonical_triple(ctx, kctx);
        let (x1, x2, x3) = canonical_triple(ctx, fctx);
        let pis = [&p1, &p2, &p3];
        let xis = [&x1, &x2, &x3];
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            ensure!(
                pis[i].meet(xis[j]).is_zero(),
                "[{kname}<={fname}] interaction ({i},{j}) is nonzero"
            );
        }
    }
    Ok(())
}

struct TypeFlagsIii {
    one: bool,
    two: bool,
    three: bool,
    one_f: bool,
    one_not_f: bool,
    two_f: bool,
    two_not_f: bool,
}

fn flags_iii(ctx: &ModelCtx, kctx: &TdContext, fctx: &TdContext, pi: &ExoMap) -> TypeFlagsIii {
    let e = &ctx.e;
    let in_theta = ctx.in_theta(pi);
    let gk = &kctx.gamma_k;
    let gf = &fctx.gamma_k;
    let gft = &fctx.gamma_k_tilde;
    let below = |bound: &ExoMap| pi.leq(bound, e);
    TypeFlagsIii {
        one: in_theta && below(gk),
        two: in_theta && below(&gf.meet(&gk.complement(e))),
        three: below(&gf.complement(e)),
        one_f: in_theta && below(&gk.meet(gft)),
        one_not_f: in_theta && below(&gk.meet(&gft.complement(e))),
        two_f: in_theta && below(&gft.meet(&gk.complement(e))),
        two_not_f: in_theta
            && below(&gf.meet(&gft.complement(e)).meet(&gk.complement(e))),
    }
}

fn i_ii_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for ((kname, kctx), (fname, fctx)) in nested_pairs(ctx) {
        let report = typetheory::type_i_ii_iii(e, &kctx.k_set, &fctx.k_set)
            .map_err(|err| format!("[{kname}<={fname}] {err}"))?;
        ensure!(
            report.pi_i == kctx.gamma_k
                && report.pi_ii == fctx.gamma_k.meet(&kctx.gamma_k.complement(e))
                && report.pi_iii == fctx.gamma_k.complement(e),
            "[{kname}<={fname}] typed triple differs from the formulas"
        );
        let parts = [&report.pi_i, &report.pi_ii, &report.pi_iii];
        for (i, a) in parts.iter().enumerate() {
            for b in parts.iter().skip(i + 1) {
                ensure!(a.meet(b).is_zero(), "[{kname}<={fname}] typed triple not disjoint");
            }
        }
        ensure!(
            report.pi_i.join(&report.pi_ii, e).join(&report.pi_iii, e).is_identity(),
            "[{kname}<={fname}] typed triple does not join to one"
        );
        let f_i = flags_iii(ctx, kctx, fctx, &report.pi_i);
        let f_ii = flags_iii(ctx, kctx, fctx, &report.pi_ii);
        let f_iii = flags_iii(ctx, kctx, fctx, &report.pi_iii);
        ensure!(
            f_i.one && f_ii.two && f_iii.three,
            "[{kname}<={fname}] typed triple misses its flags"
        );
    }
    Ok(())
}

fn i_ii_iii_uniqueness(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for ((kname, kctx), (fname, fctx)) in nested_pairs(ctx) {
        let canonical = (
            kctx.gamma_k.clone(),
            fctx.gamma_k.meet(&kctx.gamma_k.complement(e)),
            fctx.gamma_k.complement(e),
        );
        let flags: Vec<_> = ctx.gex.iter().map(|pi| flags_iii(ctx, kctx, fctx, pi)).collect();
        let mut found = 0usize;
        for (i, a) in ctx.gex.iter().enumerate() {
            if !flags[i].one {
                continue;
            }
            for (j, b) in ctx.gex.iter().enumerate() {
                if !flags[j].two || !a.meet(b).is_zero() {
                    continue;
                }
                for (k, c) in ctx.gex.iter().enumerate() {
                    if !flags[k].three
                        || !a.meet(c).is_zero()
                        || !b.meet(c).is_zero()
                        || !a.join(b, e).join(c, e).is_identity()
                    {
                        continue;
                    }
                    found += 1;
                    ensure!(
                        (a.clone(), b.clone(), c.clone()) == canonical,
                        "[{kname}<={fname}] a different typed triple exists"
                    );
                }
            }
        }
        ensure!(
            found == 1,
            "[{kname}<={fname}] expected exactly one typed triple, found {found}"
        );
        // refinement uniqueness within the first and second parts
        for (target, want_a, want_b, part) in [
            (&canonical.0, 3usize, 4usize, "one"),
            (&canonical.1, 5usize, 6usize, "two"),
        ] {
            let pick = |idx: usize, f: &TypeFlagsIii| match idx {
                3 => f.one_f,
                4 => f.one_not_f,
                5 => f.two_f,
                _ => f.two_not_f,
            };
            let mut found = 0usize;
            for (i, a) in ctx.gex.iter().enumerate() {
                if !pick(want_a, &flags[i]) {
                    continue;
                }
                for (j, b) in ctx.gex.iter().enumerate() {
                    if pick(want_b, &flags[j])
                        && a.meet(b).is_zero()
                        && a.join(b, e) == *target
                    {
                        found += 1;
                    }
                }
            }
            ensure!(
                found == 1,
                "[{kname}<={fname}] refinement of part {part} not unique ({found})"
            );
        }
    }
    Ok(())
}

fn i_ii_iii_refinements(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for ((kname, kctx), (fname, fctx)) in nested_pairs(ctx) {
        let report = typetheory::type_i_ii_iii(e, &kctx.k_set, &fctx.k_set)
            .map_err(|err| format!("[{kname}<={fname}] {err}"))?;
        let gk = &kctx.gamma_k;
        let gf = &fctx.gamma_k;
        let gft = &fctx.gamma_k_tilde;
        ensure!(
            report.pi_i_f == gk.meet(gft)
                && report.pi_i_not_f == gk.meet(&gft.complement(e))
                && report.pi_ii_f == gft.meet(&gk.complement(e))
                && report.pi_ii_not_f == gf.meet(&gft.complement(e)).meet(&gk.complement(e)),
            "[{kname}<={fname}] refinement formulas differ"
        );
        ensure!(
            report.pi_i_f.meet(&report.pi_i_not_f).is_zero()
                && report.pi_i_f.join(&report.pi_i_not_f, e) == report.pi_i,
            "[{kname}<={fname}] first part refinement does not split it"
        );
        ensure!(
            report.pi_ii_f.meet(&report.pi_ii_not_f).is_zero()
                && report.pi_ii_f.join(&report.pi_ii_not_f, e) == report.pi_ii,
            "[{kname}<={fname}] second part refinement does not split it"
        );
        for (m, ok) in [
            (&report.pi_i_f, flags_iii(ctx, kctx, fctx, &report.pi_i_f).one_f),
            (&report.pi_i_not_f, flags_iii(ctx, kctx, fctx, &report.pi_i_not_f).one_not_f),
            (&report.pi_ii_f, flags_iii(ctx, kctx, fctx, &report.pi_ii_f).two_f),
            (&report.pi_ii_not_f, flags_iii(ctx, kctx, fctx, &report.pi_ii_not_f).two_not_f),
        ] {
            let _ = m;
            ensure!(ok, "[{kname}<={fname}] a refined summand misses its flag");
        }
        // the canonical fundamental triple for the first set is recorded too
        let (p1, p2, p3) = canonical_triple(ctx, kctx);
        ensure!(
            report.pi1 == p1 && report.pi2 == p2 && report.pi3 == p3,
            "[{kname}<={fname}] recorded fundamental triple differs"
        );
    }
    Ok(())
}
