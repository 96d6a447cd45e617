//! Laws of central orthocompleteness: orthogonality through disjoint
//! summands, suprema of disjoint families, arbitrary products, and the
//! split into a part with top and a centerless part.

use itertools::Itertools;

use super::ctx::{self, ModelCtx};
use super::{ensure, Law};
use crate::algebra::Elem;
use crate::axioms;
use crate::center;
use crate::cover;
use crate::exocenter::{self, ExoMap};
use crate::set::ElementSet;

pub(super) fn laws() -> Vec<Law> {
    vec![
        Law { id: "co.i", group: "orthocompleteness", summary: "pairwise summand-orthogonality equals family orthogonality with sum = sup", run: co_i },
        Law { id: "co.ii", group: "orthocompleteness", summary: "summand-orthogonal families are orthogonal and sum to their supremum", run: co_ii },
        Law { id: "coce.i", group: "orthocompleteness", summary: "the four disjointness notions agree on central pairs", run: coce_i },
        Law { id: "coce.ii", group: "orthocompleteness", summary: "the four orthogonality notions agree on central families", run: coce_ii },
        Law { id: "COGPEA.co1", group: "orthocompleteness", summary: "every summand-orthogonal family is orthosummable", run: cogpea_co1 },
        Law { id: "COGPEA.co2", group: "orthocompleteness", summary: "summability with a companion passes to the orthosum", run: cogpea_co2 },
        Law { id: "COGPEApwisedisj.i", group: "orthocompleteness", summary: "summable picks from disjoint summands form orthogonal families", run: cogpeapwise_i },
        Law { id: "COGPEApwisedisj.ii", group: "orthocompleteness", summary: "those families sum to their suprema", run: cogpeapwise_ii },
        Law { id: "COGPEApwisedisj.iii", group: "orthocompleteness", summary: "the two family orthosums are summable with each other", run: cogpeapwise_iii },
        Law { id: "COGPEApwisedisj.iv", group: "orthocompleteness", summary: "the sum of orthosums is the orthosum of the pair sums", run: cogpeapwise_iv },
        Law { id: "DisjSup", group: "orthocompleteness", summary: "disjoint families have suprema computed pointwise", run: disjsup },
        Law { id: "completeboo", group: "orthocompleteness", summary: "every subset of the exocenter has a meet and a join", run: completeboo },
        Law { id: "arbpwisesup.sup", group: "orthocompleteness", summary: "arbitrary joins evaluate pointwise", run: arb_sup },
        Law { id: "arbpwisesup.inf", group: "orthocompleteness", summary: "arbitrary nonempty meets evaluate pointwise", run: arb_inf },
        Law { id: "arbCartProd", group: "orthocompleteness", summary: "a disjoint family factors its join summand as a product", run: arbcartprod },
        Law { id: "cop.i", group: "orthocompleteness", summary: "tuples below an orthogonal family are orthogonal", run: cop_i },
        Law { id: "cop.ii", group: "orthocompleteness", summary: "coordinates of tuple sums are recovered by the covers", run: cop_ii },
        Law { id: "cop.iii", group: "orthocompleteness", summary: "below the family supremum the maps act as meets with the parts", run: cop_iii },
        Law { id: "cop.iv", group: "orthocompleteness", summary: "the interval below the supremum is the product of the part intervals", run: cop_iv },
        Law { id: "COGPEAcenter.inf", group: "orthocompleteness", summary: "central families have central infima with the meet map", run: cogpeacenter_inf },
        Law { id: "COGPEAcenter.sup", group: "orthocompleteness", summary: "bounded central families have central suprema with the join map", run: cogpeacenter_sup },
        Law { id: "largestandboo.i", group: "orthocompleteness", summary: "the center has a largest element dominating it", run: largestandboo_i },
        Law { id: "largestandboo.ii", group: "orthocompleteness", summary: "the center is a complete Boolean algebra", run: largestandboo_ii },
        Law { id: "centerless.i", group: "orthocompleteness", summary: "the unit splits off the orthogonal set as the complement", run: centerless_i },
        Law { id: "centerless.ii", group: "orthocompleteness", summary: "the unit part carries the center; the rest is centerless", run: centerless_ii },
        Law { id: "centerless.iii", group: "orthocompleteness", summary: "a top part with centerless complement is the unit split", run: centerless_iii },
    ]
}

/// Exhaustive pair orthogonality through summands: some disjoint pair of
/// maps fixes the two elements.
fn pair_orth_table(ctx: &ModelCtx) -> Vec<Vec<bool>> {
    let n = ctx.n();
    let mut t = vec![vec![false; n]; n];
    for (x, row) in t.iter_mut().enumerate() {
        for (y, entry) in row.iter_mut().enumerate() {
            *entry = ctx.gex.iter().any(|pi| {
                pi.apply(x) == x
                    && ctx
                        .gex
                        .iter()
                        .any(|xi| xi.apply(y) == y && pi.meet(xi).is_zero())
            });
        }
    }
    t
}

/// Families quantified for the orthogonality laws: all subsets on small
/// carriers, size-limited subsets plus every cover-orthogonal family beyond.
fn family_pool(ctx: &ModelCtx) -> Vec<Vec<Elem>> {
    let mut pool: Vec<Vec<Elem>> = ctx::subsets(ctx.n());
    pool.extend(cover::orthogonal_families(&ctx.e, &ctx.covers));
    pool.sort();
    pool.dedup();
    pool
}

fn co_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let pairwise = pair_orth_table(ctx);
    for family in family_pool(ctx) {
        let pair_ok = family
            .iter()
            .enumerate()
            .all(|(i, &x)| family.iter().skip(i + 1).all(|&y| pairwise[x][y]));
        let family_ok = family.iter().enumerate().all(|(i, &x)| {
            family
                .iter()
                .skip(i + 1)
                .all(|&y| ctx.gamma(x).meet(ctx.gamma(y)).is_zero())
        });
        ensure!(
            pair_ok == family_ok,
            "pairwise and family orthogonality split on {family:?}"
        );
        if family_ok {
            let total = e.orthosum(&family);
            let sup = e.sup(&ElementSet::from_iter(e.order(), family.iter().copied()));
            ensure!(
                total.is_some() && total == sup,
                "orthogonal family {family:?} does not sum to its supremum"
            );
        }
    }
    Ok(())
}

fn co_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for family in cover::orthogonal_families(&ctx.e, &ctx.covers) {
        let total = e.orthosum(&family);
        let sup = e.sup(&ElementSet::from_iter(e.order(), family.iter().copied()));
        ensure!(total.is_some(), "summand-orthogonal family {family:?} not orthogonal");
        ensure!(sup.is_some(), "summand-orthogonal family {family:?} has no supremum");
        ensure!(total == sup, "orthosum differs from supremum on {family:?}");
    }
    Ok(())
}

fn coce_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let pairwise = pair_orth_table(ctx);
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            let b1 = pairwise[c][d];
            let b2 = ctx.pi_of(c).meet(ctx.pi_of(d)).is_zero();
            let b3 = e.perp(c, d);
            let b4 = e.meet(c, d) == Some(0);
            ensure!(
                b1 == b2 && b2 == b3 && b3 == b4,
                "central pair notions split at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn coce_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    let members: Vec<Elem> = ctx.center.gamma_set.iter().collect();
    ctx::visit_subsets(members.len(), (), &|_, _| (), &mut |family, _| {
        let picks: Vec<Elem> = family.iter().map(|&i| members[i]).collect();
        let gex_orth = picks.iter().enumerate().all(|(i, &x)| {
            picks
                .iter()
                .skip(i + 1)
                .all(|&y| ctx.gamma(x).meet(ctx.gamma(y)).is_zero())
        });
        let orthogonal = e.orthosum(&picks).is_some();
        let pairwise_orth = picks
            .iter()
            .enumerate()
            .all(|(i, &x)| picks.iter().skip(i + 1).all(|&y| e.perp(x, y)));
        let pairwise_disjoint = picks
            .iter()
            .enumerate()
            .all(|(i, &x)| picks.iter().skip(i + 1).all(|&y| e.meet(x, y) == Some(0)));
        ensure!(
            gex_orth == orthogonal && orthogonal == pairwise_orth && pairwise_orth == pairwise_disjoint,
            "central family notions split on {picks:?}"
        );
        Ok(())
    })
}

fn cogpea_co1(ctx: &ModelCtx) -> Result<(), String> {
    let cert = cover::is_cogpea(&ctx.e);
    ensure!(cert.holds, "orthocompleteness fails: {:?}", cert.failure);
    for family in cover::orthogonal_families(&ctx.e, &ctx.covers) {
        ensure!(
            ctx.e.orthosum(&family).is_some(),
            "family {family:?} is not orthosummable"
        );
    }
    Ok(())
}

fn cogpea_co2(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for family in cover::orthogonal_families(&ctx.e, &ctx.covers) {
        let total = e.orthosum(&family).ok_or("family not orthosummable")?;
        for x in e.elements() {
            if family.iter().all(|&f| e.oplus(x, f).is_some()) {
                ensure!(
                    e.oplus(x, total).is_some(),
                    "left companion {x} not summable with the orthosum of {family:?}"
                );
            }
            if family.iter().all(|&f| e.oplus(f, x).is_some()) {
                ensure!(
                    e.oplus(total, x).is_some(),
                    "right companion {x} not summable with the orthosum of {family:?}"
                );
            }
        }
    }
    Ok(())
}

/// Summable picks `(e_i, f_i)` from each summand of a disjoint family.
fn summand_picks(ctx: &ModelCtx, family: &[usize]) -> Vec<Vec<(Elem, Elem)>> {
    let e = &ctx.e;
    let per_summand: Vec<Vec<(Elem, Elem)>> = family
        .iter()
        .map(|&i| {
            let im: Vec<Elem> = ctx.gex[i].image().iter().collect();
            im.iter()
                .cartesian_product(im.iter())
                .filter(|&(&x, &y)| e.oplus(x, y).is_some())
                .map(|(&x, &y)| (x, y))
                .collect()
        })
        .collect();
    if per_summand.iter().any(|p| p.is_empty()) {
        return Vec::new();
    }
    per_summand
        .into_iter()
        .multi_cartesian_product()
        .collect()
}

fn for_each_pick(
    ctx: &ModelCtx,
    f: &mut impl FnMut(&[usize], &[Elem], &[Elem]) -> Result<(), String>,
) -> Result<(), String> {
    for family in ctx::disjoint_gex_families(ctx) {
        if family.is_empty() {
            continue;
        }
        for picks in summand_picks(ctx, &family) {
            let es: Vec<Elem> = picks.iter().map(|&(x, _)| x).collect();
            let fs: Vec<Elem> = picks.iter().map(|&(_, y)| y).collect();
            f(&family, &es, &fs)?;
        }
    }
    Ok(())
}

fn cover_disjoint(ctx: &ModelCtx, xs: &[Elem]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, &x)| xs.iter().skip(i + 1).all(|&y| ctx.gamma(x).meet(ctx.gamma(y)).is_zero()))
}

fn cogpeapwise_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    for_each_pick(ctx, &mut |_, es, fs| {
        let sums: Vec<Elem> = es
            .iter()
            .zip(fs)
            .map(|(&x, &y)| e.oplus(x, y).expect("picks are summable"))
            .collect();
        for family in [es, fs, &sums] {
            ensure!(cover_disjoint(ctx, family), "family {family:?} not summand-orthogonal");
            ensure!(e.orthosum(family).is_some(), "family {family:?} not orthosummable");
        }
        Ok(())
    })
}

fn cogpeapwise_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    for_each_pick(ctx, &mut |_, es, fs| {
        let sums: Vec<Elem> = es
            .iter()
            .zip(fs)
            .map(|(&x, &y)| e.oplus(x, y).expect("picks are summable"))
            .collect();
        for family in [es, fs, &sums] {
            let total = e.orthosum(family);
            let sup = e.sup(&ElementSet::from_iter(e.order(), family.iter().copied()));
            ensure!(total == sup && total.is_some(), "sum differs from sup on {family:?}");
        }
        Ok(())
    })
}

fn cogpeapwise_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    for_each_pick(ctx, &mut |_, es, fs| {
        let se = e.orthosum(es).expect("orthosummable");
        let sf = e.orthosum(fs).expect("orthosummable");
        ensure!(
            e.oplus(se, sf).is_some(),
            "orthosums of {es:?} and {fs:?} are not summable"
        );
        Ok(())
    })
}

fn cogpeapwise_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    for_each_pick(ctx, &mut |_, es, fs| {
        let se = e.orthosum(es).expect("orthosummable");
        let sf = e.orthosum(fs).expect("orthosummable");
        let sums: Vec<Elem> = es
            .iter()
            .zip(fs)
            .map(|(&x, &y)| e.oplus(x, y).expect("picks are summable"))
            .collect();
        let combined = e.oplus(se, sf);
        let total = e.orthosum(&sums);
        let sup = e.sup(&ElementSet::from_iter(e.order(), sums.iter().copied()));
        ensure!(
            combined == total && total == sup && combined.is_some(),
            "sum of orthosums differs on {es:?} / {fs:?}"
        );
        Ok(())
    })
}

fn disjsup(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for family in ctx::disjoint_gex_families(ctx) {
        let join = ctx.join_all(family.iter().map(|&i| &ctx.gex[i]));
        ensure!(ctx.in_gex(&join), "join of a disjoint family leaves the exocenter");
        for (k, pi) in ctx.gex.iter().enumerate() {
            if family.iter().all(|&i| ctx.gex[i].leq(pi, e)) {
                ensure!(join.leq(pi, e), "join is not least above the family at {k}");
            }
        }
        for x in e.elements() {
            let parts: Vec<Elem> = family.iter().map(|&i| ctx.gex[i].apply(x)).collect();
            let sup = e.sup(&ElementSet::from_iter(e.order(), parts.iter().copied()));
            let total = e.orthosum(&parts);
            ensure!(
                sup == Some(join.apply(x)) && total == Some(join.apply(x)),
                "pointwise disjoint supremum fails at {x}"
            );
        }
    }
    Ok(())
}

fn completeboo(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    let n = e.order();
    ctx::visit_subsets(
        ctx.gex.len(),
        (ExoMap::identity(n), ExoMap::zero(n)),
        &|(m, j), i| (m.meet(&ctx.gex[i]), j.join(&ctx.gex[i], e)),
        &mut |family, (m, j)| {
            ensure!(
                ctx.in_gex(m) && ctx.in_gex(j),
                "meet or join of {family:?} leaves the exocenter"
            );
            for pi in &ctx.gex {
                if family.iter().all(|&i| pi.leq(&ctx.gex[i], e)) {
                    ensure!(pi.leq(m, e), "meet not greatest below {family:?}");
                }
                if family.iter().all(|&i| ctx.gex[i].leq(pi, e)) {
                    ensure!(j.leq(pi, e), "join not least above {family:?}");
                }
            }
            Ok(())
        },
    )
}

fn arb_sup(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    ctx::visit_subsets(
        ctx.gex.len(),
        ExoMap::zero(e.order()),
        &|j, i| j.join(&ctx.gex[i], e),
        &mut |family, j| {
            for x in e.elements() {
                let vals =
                    ElementSet::from_iter(e.order(), family.iter().map(|&i| ctx.gex[i].apply(x)));
                let expected = if family.is_empty() { Some(0) } else { e.sup(&vals) };
                ensure!(
                    expected == Some(j.apply(x)),
                    "arbitrary join not pointwise at {x} for {family:?}"
                );
            }
            Ok(())
        },
    )
}

fn arb_inf(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    ctx::visit_subsets(
        ctx.gex.len(),
        ExoMap::identity(e.order()),
        &|m, i| m.meet(&ctx.gex[i]),
        &mut |family, m| {
            if family.is_empty() {
                return Ok(());
            }
            for x in e.elements() {
                let vals =
                    ElementSet::from_iter(e.order(), family.iter().map(|&i| ctx.gex[i].apply(x)));
                ensure!(
                    e.inf(&vals) == Some(m.apply(x)),
                    "arbitrary meet not pointwise at {x} for {family:?}"
                );
            }
            Ok(())
        },
    )
}

fn arbcartprod(ctx: &ModelCtx) -> Result<(), String> {
    for family in ctx::disjoint_gex_families(ctx) {
        let join = ctx.join_all(family.iter().map(|&i| &ctx.gex[i]));
        super::exo::check_product(ctx, &family, join.image())?;
    }
    Ok(())
}

fn cover_orth_families(ctx: &ModelCtx) -> Vec<Vec<Elem>> {
    cover::orthogonal_families(&ctx.e, &ctx.covers)
}

fn cop_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for ps in cover_orth_families(ctx) {
        let downs: Vec<Vec<Elem>> = ps.iter().map(|&p| e.down_set(p).iter().collect()).collect();
        for tuple in downs.into_iter().multi_cartesian_product() {
            for (k, &x) in tuple.iter().enumerate() {
                ensure!(
                    ctx.gamma(ps[k]).apply(x) == x,
                    "pick {x} below {} is not fixed by its cover",
                    ps[k]
                );
            }
            ensure!(cover_disjoint(ctx, &tuple), "tuple {tuple:?} not summand-orthogonal");
            ensure!(e.orthosum(&tuple).is_some(), "tuple {tuple:?} not orthosummable");
        }
    }
    Ok(())
}

fn cop_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for ps in cover_orth_families(ctx) {
        let p = e.orthosum(&ps).expect("orthogonal family sums");
        let downs: Vec<Vec<Elem>> = ps.iter().map(|&q| e.down_set(q).iter().collect()).collect();
        for tuple in downs.into_iter().multi_cartesian_product() {
            let total = e.orthosum(&tuple).expect("tuples are orthosummable");
            for (k, &x) in tuple.iter().enumerate() {
                ensure!(
                    ctx.gamma(ps[k]).apply(total) == x,
                    "coordinate {k} of {tuple:?} not recovered"
                );
            }
        }
        for (k, &q) in ps.iter().enumerate() {
            ensure!(ctx.gamma(ps[k]).apply(p) == q, "part {q} not recovered from the supremum");
        }
    }
    Ok(())
}

fn cop_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for ps in cover_orth_families(ctx) {
        let p = e.orthosum(&ps).expect("orthogonal family sums");
        for x in e.down_set(p).iter() {
            let mut parts = Vec::new();
            for &q in &ps {
                let v = ctx.gamma(q).apply(x);
                ensure!(
                    e.meet(x, q) == Some(v),
                    "map value differs from meet with part {q} at {x}"
                );
                parts.push(v);
            }
            let sup = e.sup(&ElementSet::from_iter(e.order(), parts.iter().copied()));
            ensure!(sup == Some(x), "parts of {x} do not rejoin it");
        }
    }
    Ok(())
}

fn cop_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for ps in cover_orth_families(ctx) {
        let p = e.orthosum(&ps).expect("orthogonal family sums");
        let downs: Vec<Vec<Elem>> = ps.iter().map(|&q| e.down_set(q).iter().collect()).collect();
        let tuples: Vec<Vec<Elem>> = downs.into_iter().multi_cartesian_product().collect();
        ensure!(
            tuples.len() == e.down_set(p).len(),
            "product size differs from the interval below {p}"
        );
        let mut seen = ElementSet::empty(e.order());
        let phi: Vec<Elem> =
            tuples.iter().map(|t| e.orthosum(t).expect("tuples sum")).collect();
        for (&v, t) in phi.iter().zip(&tuples) {
            ensure!(
                e.leq(v, p) && !seen.contains(v),
                "orthosum map not injective into the interval at {t:?}"
            );
            seen.insert(v);
        }
        // sums agree componentwise under the interval caps
        for (s, &vs) in tuples.iter().zip(&phi) {
            for (t, &vt) in tuples.iter().zip(&phi) {
                let comp: Option<Vec<Elem>> = s
                    .iter()
                    .zip(t)
                    .zip(&ps)
                    .map(|((&a, &b), &q)| {
                        e.oplus(a, b).filter(|&v| e.leq(v, q))
                    })
                    .collect();
                let ambient = e.oplus(vs, vt).filter(|&v| e.leq(v, p));
                match (comp, ambient) {
                    (Some(c), Some(v)) => {
                        ensure!(e.orthosum(&c) == Some(v), "interval sums differ at {s:?}+{t:?}");
                    }
                    (None, None) => {}
                    (c, v) => ensure!(false, "interval sum existence differs: {c:?} vs {v:?}"),
                }
            }
        }
    }
    Ok(())
}

fn cogpeacenter_inf(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    let members: Vec<Elem> = ctx.center.gamma_set.iter().collect();
    ctx::visit_subsets(members.len(), (), &|_, _| (), &mut |family, _| {
        if family.is_empty() {
            return Ok(());
        }
        let picks = ElementSet::from_iter(e.order(), family.iter().map(|&i| members[i]));
        let c = e.inf(&picks).ok_or(format!("central infimum missing for {{{picks}}}"))?;
        ensure!(ctx.center.gamma_set.contains(c), "infimum {c} not central");
        let m = ctx.meet_all(picks.iter().map(|x| ctx.pi_of(x)));
        ensure!(*ctx.pi_of(c) == m, "map of the infimum differs for {{{picks}}}");
        for d in ctx.center.gamma_set.iter() {
            if picks.iter().all(|x| e.leq(d, x)) {
                ensure!(e.leq(d, c), "infimum not greatest within the center");
            }
        }
        Ok(())
    })
}

fn cogpeacenter_sup(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    let members: Vec<Elem> = ctx.center.gamma_set.iter().collect();
    ctx::visit_subsets(members.len(), (), &|_, _| (), &mut |family, _| {
        if family.is_empty() {
            return Ok(());
        }
        let picks = ElementSet::from_iter(e.order(), family.iter().map(|&i| members[i]));
        if !e.elements().any(|b| picks.iter().all(|x| e.leq(x, b))) {
            return Ok(());
        }
        let d = e.sup(&picks).ok_or(format!("bounded central supremum missing for {{{picks}}}"))?;
        ensure!(ctx.center.gamma_set.contains(d), "supremum {d} not central");
        let j = ctx.join_all(picks.iter().map(|x| ctx.pi_of(x)));
        ensure!(*ctx.pi_of(d) == j, "map of the supremum differs for {{{picks}}}");
        for c in ctx.center.gamma_set.iter() {
            if picks.iter().all(|x| e.leq(x, c)) {
                ensure!(e.leq(d, c), "supremum not least within the center");
            }
        }
        Ok(())
    })
}

fn largestandboo_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let u = ctx.center.unit;
    ensure!(ctx.center.gamma_set.contains(u), "unit {u} not central");
    for c in ctx.center.gamma_set.iter() {
        ensure!(e.leq(c, u), "central {c} not below the unit {u}");
    }
    ensure!(
        ctx.center.gamma_set.is_subset(e.down_set(u)),
        "center not contained in the interval below the unit"
    );
    ensure!(
        *ctx.pi_of(u).image() == *e.down_set(u),
        "unit summand image is not the interval below the unit"
    );
    Ok(())
}

fn largestandboo_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    let u = ctx.center.unit;
    let members: Vec<Elem> = ctx.center.gamma_set.iter().collect();
    for c in &members {
        ensure!(
            members
                .iter()
                .any(|&x| e.meet(*c, x) == Some(0) && e.join(*c, x) == Some(u)),
            "no complement of {c} within the center"
        );
    }
    ctx::visit_subsets(members.len(), (), &|_, _| (), &mut |family, _| {
        let picks: Vec<Elem> = family.iter().map(|&i| members[i]).collect();
        let lb: Vec<Elem> = members
            .iter()
            .filter(|&&m| picks.iter().all(|&x| e.leq(m, x)))
            .copied()
            .collect();
        ensure!(
            lb.iter().any(|&g| lb.iter().all(|&m| e.leq(m, g))),
            "center subset {picks:?} lacks an internal meet"
        );
        let ub: Vec<Elem> = members
            .iter()
            .filter(|&&m| picks.iter().all(|&x| e.leq(x, m)))
            .copied()
            .collect();
        ensure!(
            ub.iter().any(|&m| ub.iter().all(|&other| e.leq(m, other))),
            "center subset {picks:?} lacks an internal join"
        );
        Ok(())
    })
}

fn centerless_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let u = ctx.center.unit;
    let prime = ctx.pi_of(u).complement(e);
    let orth = ElementSet::from_iter(e.order(), e.elements().filter(|&f| e.perp(f, u)));
    ensure!(*prime.image() == orth, "complement image is not the orthogonal set of the unit");
    let by_difference = ElementSet::from_iter(
        e.order(),
        e.elements()
            .map(|x| {
                let m = e.meet(u, x).ok_or(format!("meet with the unit missing at {x}"))?;
                e.ominus(x, m).ok_or(format!("difference to the unit meet missing at {x}"))
            })
            .collect::<Result<Vec<_>, String>>()?,
    );
    ensure!(
        by_difference == orth,
        "difference description of the complement differs"
    );
    Ok(())
}

fn centerless_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let u = ctx.center.unit;
    let pi = ctx.pi_of(u).clone();
    let (pea_part, carrier1) = exocenter::sub_algebra(e, pi.image());
    let mapped_center = ElementSet::from_iter(
        e.order(),
        center::central_elements(&pea_part).iter().map(|c| carrier1[c]),
    );
    ensure!(mapped_center == ctx.center.gamma_set, "unit part center differs from the center");
    let (rest, _) = exocenter::sub_algebra(e, pi.complement(e).image());
    let rest_center = center::central_elements(&rest);
    ensure!(rest_center.len() == 1, "residual part has nontrivial center");
    for tau in exocenter::exocenter(&rest) {
        if !tau.is_zero() {
            let (part, _) = exocenter::sub_algebra(&rest, tau.image());
            ensure!(
                axioms::top_of(&part).is_none(),
                "nonzero summand of the residual part has a top"
            );
        }
    }
    Ok(())
}

fn centerless_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let u = ctx.center.unit;
    for pi in &ctx.gex {
        let (h, _) = exocenter::sub_algebra(e, pi.image());
        let (k, _) = exocenter::sub_algebra(e, pi.complement(e).image());
        if axioms::top_of(&h).is_some() && center::central_elements(&k).len() == 1 {
            ensure!(
                pi == ctx.pi_of(u),
                "a top/centerless split that is not the unit split"
            );
        }
    }
    Ok(())
}
