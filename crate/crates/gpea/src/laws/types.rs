//! Laws of type-determining sets: the four closures, generated sets, the
//! distinguished covers, type predicates and the canonical generators.

use super::ctx::{self, ModelCtx};
use super::{ensure, Law};
use crate::algebra::Elem;
use crate::axioms;
use crate::exocenter::ExoMap;
use crate::set::ElementSet;
use crate::typetheory::{self, TdContext};

pub(super) fn laws() -> Vec<Law> {
    vec![
        Law { id: "QK.i", group: "type-sets", summary: "closure members decompose along orthogonal families, hereditarily", run: qk_i },
        Law { id: "QK.ii", group: "type-sets", summary: "the generated set is the least type-determining superset", run: qk_ii },
        Law { id: "QK.iii", group: "type-sets", summary: "the strongly generated set is the least strong superset", run: qk_iii },
        Law { id: "QK.iv", group: "type-sets", summary: "disjoint complements are strongly type-determining and downward stable", run: qk_iv },
        Law { id: "QK.v", group: "type-sets", summary: "complements ignore closure: K' = (gen K)'", run: qk_v },
        Law { id: "atoms.prime", group: "type-sets", summary: "the atom complement is the atom-free part", run: atoms_prime },
        Law { id: "atoms.dblprime", group: "type-sets", summary: "the double complement of the atoms is the atomic part", run: atoms_dblprime },
        Law { id: "centrTD", group: "type-sets", summary: "the center is type-determining", run: centrtd },
        Law { id: "TypeClass", group: "type-sets", summary: "interval classes closed under the class operations give TD sets", run: typeclass },
        Law { id: "kstar", group: "type-sets", summary: "a maximal orthogonal family realizes the largest cover of the set", run: kstar },
        Law { id: "gammasbK.i", group: "type-sets", summary: "the central cover sits below the full cover", run: gammask_i },
        Law { id: "gammasbK.ii", group: "type-sets", summary: "the set cover is the join of the member covers", run: gammask_ii },
        Law { id: "gammasbK.iii", group: "type-sets", summary: "the set cover is the least map whose image holds the set", run: gammask_iii },
        Law { id: "gammasbK.iv", group: "type-sets", summary: "the central cover is the join over the central members", run: gammask_iv },
        Law { id: "gammasbK.v", group: "type-sets", summary: "the central cover is least among covers holding the central part", run: gammask_v },
        Law { id: "TypeRemark.i", group: "type-sets", summary: "typed maps are locally typed", run: remark_i },
        Law { id: "TypeRemark.ii", group: "type-sets", summary: "purely untyped maps are properly untyped", run: remark_ii },
        Law { id: "TypeRemark.iii", group: "type-sets", summary: "typed and properly untyped forces zero", run: remark_iii },
        Law { id: "TypeRemark.iv", group: "type-sets", summary: "locally typed and purely untyped forces zero", run: remark_iv },
        Law { id: "TypeRemark.v", group: "type-sets", summary: "meets with covers preserve typedness", run: remark_v },
        Law { id: "TypeRemark.vi", group: "type-sets", summary: "meets preserve untypedness", run: remark_vi },
        Law { id: "TypeRemark.vii", group: "type-sets", summary: "joins preserve each shared flag", run: remark_vii },
        Law { id: "Type.i", group: "type-sets", summary: "typed maps are covers below the central cover", run: type_i },
        Law { id: "Type.ii", group: "type-sets", summary: "typed maps of strong sets have their image inside the set", run: type_ii },
        Law { id: "Type.iii", group: "type-sets", summary: "locally typed maps are covers below the set cover", run: type_iii },
        Law { id: "Type.iv", group: "type-sets", summary: "purely untyped summands meet the set only in zero", run: type_iv },
        Law { id: "Type.v", group: "type-sets", summary: "properly untyped summands avoid the central part", run: type_v },
        Law { id: "ksharp", group: "type-sets", summary: "the projected generator is faithful exactly on locally typed summands", run: ksharp },
        Law { id: "ksharp.cor", group: "type-sets", summary: "locally typed summands meet every overlapping cover summand in the set", run: ksharp_cor },
        Law { id: "type.lemma.i", group: "type-sets", summary: "the set cover is the unique locally-typed map with purely untyped complement", run: type_lemma_i },
        Law { id: "type.lemma.ii", group: "type-sets", summary: "the central cover is the unique typed map with properly untyped complement", run: type_lemma_ii },
    ]
}

fn qk_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for q_set in ctx.carrier_subsets() {
        let family_closure = ctx::closure_by_families(e, &ctx.covers, &q_set);
        let fixpoint = typetheory::closure_gamma(e, &q_set);
        let family_members = ElementSet::from_iter(e.order(), family_closure.iter().map(|&(t, _)| t));
        ensure!(
            family_members == fixpoint,
            "fixpoint and family closures differ on {{{q_set}}}"
        );
        for (q, family) in &family_closure {
            ensure!(e.orthosum(family) == Some(*q), "witness family does not sum to {q}");
            ensure!(
                e.sup(&ElementSet::from_iter(e.order(), family.iter().copied())) == Some(*q),
                "witness family supremum differs at {q}"
            );
            let down = typetheory::downset(e, &q_set);
            for x in e.down_set(*q).iter() {
                let mut parts = Vec::new();
                for &qi in family {
                    let m = e
                        .meet(x, qi)
                        .ok_or(format!("meet of {x} with family member {qi} missing"))?;
                    ensure!(down.contains(m), "part {m} escapes the down closure");
                    parts.push(m);
                }
                for (i, &a) in parts.iter().enumerate() {
                    for &b in parts.iter().skip(i + 1) {
                        ensure!(
                            ctx.gamma(a).meet(ctx.gamma(b)).is_zero(),
                            "parts of {x} not cover-orthogonal"
                        );
                    }
                }
                ensure!(e.orthosum(&parts) == Some(x), "parts of {x} do not resum");
                ensure!(
                    e.sup(&ElementSet::from_iter(e.order(), parts.iter().copied())) == Some(x),
                    "parts of {x} do not rejoin"
                );
            }
        }
    }
    Ok(())
}

/// Type-determining supersets to compare minimality against: every subset
/// on small carriers, the named family otherwise.
fn td_supersets(ctx: &ModelCtx, base: &ElementSet) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = ctx
        .carrier_subsets()
        .into_iter()
        .filter(|t| base.is_subset(t) && typetheory::is_td_with(&ctx.e, &ctx.covers, t))
        .collect();
    out.extend(ctx.td.iter().map(|(_, t)| t.k_set.clone()).filter(|t| base.is_subset(t)));
    out
}

fn qk_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for k in ctx.carrier_subsets() {
        let generated = typetheory::td_generated_with(e, &ctx.covers, &k);
        ensure!(
            typetheory::is_td_with(e, &ctx.covers, &generated),
            "generated set of {{{k}}} is not type-determining"
        );
        ensure!(k.is_subset(&generated), "generated set does not contain {{{k}}}");
        for t in td_supersets(ctx, &k) {
            ensure!(
                generated.is_subset(&t),
                "a smaller type-determining superset of {{{k}}} exists"
            );
        }
    }
    Ok(())
}

fn qk_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for k in ctx.carrier_subsets() {
        let generated = typetheory::std_generated_with(e, &ctx.covers, &k);
        ensure!(
            typetheory::is_std_with(e, &ctx.covers, &generated),
            "strongly generated set of {{{k}}} is not strong"
        );
        ensure!(k.is_subset(&generated), "strongly generated set does not contain {{{k}}}");
        for t in ctx
            .carrier_subsets()
            .into_iter()
            .filter(|t| k.is_subset(t) && typetheory::is_std_with(&ctx.e, &ctx.covers, t))
        {
            ensure!(
                generated.is_subset(&t),
                "a smaller strong superset of {{{k}}} exists"
            );
        }
    }
    Ok(())
}

fn qk_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for k in ctx.carrier_subsets() {
        let prime = typetheory::disjoint_complement(e, &k);
        let double = typetheory::disjoint_complement(e, &prime);
        ensure!(k.is_subset(&double), "{{{k}}} escapes its double complement");
        ensure!(
            typetheory::disjoint_complement(e, &double) == prime,
            "triple complement of {{{k}}} differs from the single one"
        );
        ensure!(
            typetheory::downset(e, &prime) == prime,
            "complement of {{{k}}} is not downward closed"
        );
        ensure!(
            typetheory::disjoint_complement(e, &typetheory::downset(e, &k)) == prime,
            "complement ignores the downward closure of {{{k}}}"
        );
        ensure!(
            typetheory::is_std_with(e, &ctx.covers, &prime),
            "complement of {{{k}}} is not strongly type-determining"
        );
    }
    Ok(())
}

fn qk_v(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for k in ctx.carrier_subsets() {
        let prime = typetheory::disjoint_complement(e, &k);
        let td_gen = typetheory::td_generated_with(e, &ctx.covers, &k);
        let std_gen = typetheory::std_generated_with(e, &ctx.covers, &k);
        ensure!(
            typetheory::disjoint_complement(e, &td_gen) == prime,
            "complement changed by the generated set of {{{k}}}"
        );
        ensure!(
            typetheory::disjoint_complement(e, &std_gen) == prime,
            "complement changed by the strongly generated set of {{{k}}}"
        );
    }
    Ok(())
}

fn atoms_prime(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let prime = typetheory::disjoint_complement(e, &ctx.atoms);
    let direct = ElementSet::from_iter(
        e.order(),
        e.elements().filter(|&x| !ctx.atoms.iter().any(|a| e.leq(a, x))),
    );
    ensure!(prime == direct, "atom complement differs from the atom-free part");
    ensure!(
        typetheory::is_std_with(e, &ctx.covers, &prime),
        "atom complement is not strongly type-determining"
    );
    Ok(())
}

fn atoms_dblprime(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let double = typetheory::double_complement(e, &ctx.atoms);
    let direct = ElementSet::from_iter(
        e.order(),
        e.elements().filter(|&p| p == 0 || ctx::is_atomic_below(e, p)),
    );
    ensure!(double == direct, "double complement differs from the atomic part");
    ensure!(
        typetheory::is_std_with(e, &ctx.covers, &double),
        "atomic part is not strongly type-determining"
    );
    Ok(())
}

fn centrtd(ctx: &ModelCtx) -> Result<(), String> {
    ensure!(
        typetheory::is_td_with(&ctx.e, &ctx.covers, &ctx.center.gamma_set),
        "the center is not type-determining"
    );
    Ok(())
}

fn typeclass(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    // commutative intervals: a strong class
    let commutative = typetheory::tdset_from_pea_class(e, axioms::is_commutative);
    ensure!(
        typetheory::is_td_with(e, &ctx.covers, &commutative),
        "commutative-interval set is not type-determining"
    );
    ensure!(
        typetheory::is_std_with(e, &ctx.covers, &commutative),
        "commutative-interval set is not strong"
    );
    // boolean intervals: a strong class
    let boolean = typetheory::tdset_from_pea_class(e, ctx::is_boolean_pea);
    ensure!(
        typetheory::is_td_with(e, &ctx.covers, &boolean),
        "boolean-interval set is not type-determining"
    );
    ensure!(
        typetheory::is_std_with(e, &ctx.covers, &boolean),
        "boolean-interval set is not strong"
    );
    // the class of everything
    let all = typetheory::tdset_from_pea_class(e, |_| true);
    ensure!(all == ElementSet::full(e.order()), "trivial class must give the carrier");
    ensure!(typetheory::is_td_with(e, &ctx.covers, &all), "the carrier is not type-determining");
    Ok(())
}

/// The interval of distinct covers below a bound, for the generator law.
fn theta_interval(ctx: &ModelCtx, bound: &ExoMap) -> Vec<ExoMap> {
    ctx.covers
        .theta
        .iter()
        .filter(|t| t.leq(bound, &ctx.e))
        .cloned()
        .collect()
}

fn kstar_half(
    ctx: &ModelCtx,
    name: &str,
    members: &ElementSet,
    star: Elem,
    gamma_set: &ExoMap,
) -> Result<(), String> {
    let e = &ctx.e;
    ensure!(members.contains(star), "[{name}] generator left the set");
    ensure!(ctx.gamma(star) == gamma_set, "[{name}] generator cover differs from the set cover");
    for k in members.iter() {
        ensure!(
            ctx.gamma(k).leq(gamma_set, e),
            "[{name}] member cover above the generator cover at {k}"
        );
    }
    let mut member_covers: Vec<_> = members.iter().map(|k| ctx.gamma(k).clone()).collect();
    let mut below_star: Vec<_> =
        e.down_set(star).iter().map(|x| ctx.gamma(x).clone()).collect();
    let mut interval = theta_interval(ctx, gamma_set);
    for v in [&mut member_covers, &mut below_star, &mut interval] {
        v.sort_by_key(|m| m.sort_key());
        v.dedup();
    }
    ensure!(
        member_covers == below_star && below_star == interval,
        "[{name}] the three descriptions of the cover interval differ"
    );
    // the interval is a boolean algebra: bounded, complemented sublattice
    for a in &interval {
        ensure!(
            interval.iter().any(|x| a.meet(x).is_zero() && a.join(x, e) == *gamma_set),
            "[{name}] no complement within the cover interval"
        );
        for b in &interval {
            ensure!(
                interval.contains(&a.meet(b)) && interval.contains(&a.join(b, e)),
                "[{name}] cover interval not a sublattice"
            );
        }
    }
    Ok(())
}

fn kstar(ctx: &ModelCtx) -> Result<(), String> {
    for (name, tctx) in &ctx.td {
        kstar_half(ctx, name, &tctx.k_set, tctx.k_star, &tctx.gamma_k)?;
        ensure!(
            typetheory::is_td_with(&ctx.e, &ctx.covers, &tctx.k_tilde_set),
            "[{name}] the central part is not type-determining"
        );
        kstar_half(ctx, name, &tctx.k_tilde_set, tctx.k_tilde, &tctx.gamma_k_tilde)?;
    }
    Ok(())
}

fn gammask_i(ctx: &ModelCtx) -> Result<(), String> {
    for (name, tctx) in &ctx.td {
        ensure!(
            tctx.gamma_k_tilde.leq(&tctx.gamma_k, &ctx.e),
            "[{name}] central cover not below the set cover"
        );
        ensure!(ctx.in_theta(&tctx.gamma_k), "[{name}] set cover is not a cover");
    }
    Ok(())
}

fn gammask_ii(ctx: &ModelCtx) -> Result<(), String> {
    for (name, tctx) in &ctx.td {
        let join = ctx.join_all(tctx.k_set.iter().map(|k| ctx.gamma(k)));
        ensure!(join == tctx.gamma_k, "[{name}] set cover is not the member join");
    }
    Ok(())
}

fn gammask_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for (name, tctx) in &ctx.td {
        ensure!(
            tctx.k_set.is_subset(tctx.gamma_k.image()),
            "[{name}] image of the set cover misses the set"
        );
        for pi in &ctx.gex {
            if tctx.k_set.is_subset(pi.image()) {
                ensure!(
                    tctx.gamma_k.leq(pi, e),
                    "[{name}] a smaller map holds the set"
                );
            }
        }
    }
    Ok(())
}

fn gammask_iv(ctx: &ModelCtx) -> Result<(), String> {
    for (name, tctx) in &ctx.td {
        let join = ctx.join_all(tctx.k_tilde_set.iter().map(|k| ctx.gamma(k)));
        ensure!(join == tctx.gamma_k_tilde, "[{name}] central cover is not the member join");
    }
    Ok(())
}

fn gammask_v(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for (name, tctx) in &ctx.td {
        ensure!(
            tctx.k_tilde_set.is_subset(tctx.gamma_k_tilde.image()),
            "[{name}] image of the central cover misses the central part"
        );
        for theta in &ctx.covers.theta {
            if tctx.k_tilde_set.is_subset(theta.image()) {
                ensure!(
                    tctx.gamma_k_tilde.leq(theta, e),
                    "[{name}] a smaller cover holds the central part"
                );
            }
        }
    }
    Ok(())
}

fn for_each_td(
    ctx: &ModelCtx,
    f: impl Fn(&str, &TdContext) -> Result<(), String>,
) -> Result<(), String> {
    for (name, tctx) in &ctx.td {
        f(name, tctx)?;
    }
    Ok(())
}

fn remark_i(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let flags = tctx.classify(&ctx.e, pi);
            ensure!(
                !flags.type_k || flags.locally_type_k,
                "[{name}] typed map is not locally typed"
            );
        }
        Ok(())
    })
}

fn remark_ii(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let flags = tctx.classify(&ctx.e, pi);
            ensure!(
                !flags.purely_non_k || flags.properly_non_k,
                "[{name}] purely untyped map is not properly untyped"
            );
        }
        Ok(())
    })
}

fn remark_iii(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let flags = tctx.classify(&ctx.e, pi);
            if flags.type_k && flags.properly_non_k {
                ensure!(pi.is_zero(), "[{name}] typed and properly untyped but nonzero");
            }
        }
        Ok(())
    })
}

fn remark_iv(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let flags = tctx.classify(&ctx.e, pi);
            if flags.locally_type_k && flags.purely_non_k {
                ensure!(pi.is_zero(), "[{name}] locally typed and purely untyped but nonzero");
            }
        }
        Ok(())
    })
}

fn remark_v(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let flags = tctx.classify(&ctx.e, pi);
            for xi in &ctx.covers.theta {
                let meet_flags = tctx.classify(&ctx.e, &pi.meet(xi));
                ensure!(
                    !flags.type_k || meet_flags.type_k,
                    "[{name}] meet with a cover loses typedness"
                );
                ensure!(
                    !flags.locally_type_k || meet_flags.locally_type_k,
                    "[{name}] meet with a cover loses local typedness"
                );
            }
        }
        Ok(())
    })
}

fn remark_vi(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let flags = tctx.classify(&ctx.e, pi);
            for xi in &ctx.gex {
                let meet_flags = tctx.classify(&ctx.e, &pi.meet(xi));
                ensure!(
                    !flags.purely_non_k || meet_flags.purely_non_k,
                    "[{name}] meet loses pure untypedness"
                );
                ensure!(
                    !flags.properly_non_k || meet_flags.properly_non_k,
                    "[{name}] meet loses proper untypedness"
                );
            }
        }
        Ok(())
    })
}

fn remark_vii(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let a = tctx.classify(&ctx.e, pi);
            for xi in &ctx.gex {
                let b = tctx.classify(&ctx.e, xi);
                let j = tctx.classify(&ctx.e, &pi.join(xi, &ctx.e));
                ensure!(!(a.type_k && b.type_k) || j.type_k, "[{name}] join loses typedness");
                ensure!(
                    !(a.locally_type_k && b.locally_type_k) || j.locally_type_k,
                    "[{name}] join loses local typedness"
                );
                ensure!(
                    !(a.purely_non_k && b.purely_non_k) || j.purely_non_k,
                    "[{name}] join loses pure untypedness"
                );
                ensure!(
                    !(a.properly_non_k && b.properly_non_k) || j.properly_non_k,
                    "[{name}] join loses proper untypedness"
                );
            }
        }
        Ok(())
    })
}

fn type_i(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let by_definition = tctx.k_tilde_set.iter().any(|k| ctx.gamma(k) == pi);
            let by_flags = tctx.classify(&ctx.e, pi).type_k;
            ensure!(by_definition == by_flags, "[{name}] typedness characterizations split");
        }
        Ok(())
    })
}

fn type_ii(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        if !typetheory::is_std_with(&ctx.e, &ctx.covers, &tctx.k_set) {
            return Ok(());
        }
        for pi in &ctx.gex {
            if tctx.classify(&ctx.e, pi).type_k {
                ensure!(
                    pi.image().is_subset(&tctx.k_set),
                    "[{name}] typed image escapes the strong set"
                );
            }
        }
        Ok(())
    })
}

fn type_iii(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            let by_definition = tctx.k_set.iter().any(|k| ctx.gamma(k) == pi);
            let by_flags = tctx.classify(&ctx.e, pi).locally_type_k;
            ensure!(by_definition == by_flags, "[{name}] local typedness characterizations split");
        }
        Ok(())
    })
}

fn type_iv(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            if tctx.classify(&ctx.e, pi).purely_non_k {
                let trace = tctx.k_set.intersect(pi.image());
                ensure!(
                    trace == ElementSet::singleton(ctx.n(), 0),
                    "[{name}] purely untyped summand meets the set"
                );
            }
        }
        Ok(())
    })
}

fn type_v(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            if tctx.classify(&ctx.e, pi).properly_non_k {
                let trace = tctx.k_tilde_set.intersect(pi.image());
                ensure!(
                    trace == ElementSet::singleton(ctx.n(), 0),
                    "[{name}] properly untyped summand meets the central part"
                );
            }
        }
        Ok(())
    })
}

fn ksharp(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for_each_td(ctx, |name, tctx| {
        for theta in &ctx.covers.theta {
            let sharp = theta.apply(tctx.k_star);
            ensure!(
                tctx.k_set.contains(sharp) && theta.image().contains(sharp),
                "[{name}] projected generator escapes"
            );
            let c1 = tctx.classify(e, theta).locally_type_k;
            let c2 = *ctx.gamma(sharp) == *theta;
            let c3 = ctx.covers.theta.iter().all(|xi| {
                if xi.meet(theta).is_zero() {
                    return true;
                }
                let v = xi.apply(sharp);
                v != 0 && tctx.k_set.contains(v) && xi.meet(theta).apply(v) == v
            });
            ensure!(
                c1 == c2 && c2 == c3,
                "[{name}] faithfulness equivalences split on a cover summand"
            );
        }
        Ok(())
    })
}

fn ksharp_cor(ctx: &ModelCtx) -> Result<(), String> {
    for_each_td(ctx, |name, tctx| {
        for pi in &ctx.gex {
            if !tctx.classify(&ctx.e, pi).locally_type_k {
                continue;
            }
            for xi in &ctx.covers.theta {
                if xi.meet(pi).is_zero() {
                    continue;
                }
                let composite = xi.meet(pi);
                ensure!(
                    tctx.k_set
                        .iter()
                        .any(|k| k != 0 && composite.apply(k) == k),
                    "[{name}] overlapping cover summand misses the set"
                );
            }
        }
        Ok(())
    })
}

fn type_lemma_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for_each_td(ctx, |name, tctx| {
        let witnesses: Vec<_> = ctx
            .covers
            .theta
            .iter()
            .filter(|theta| {
                tctx.classify(e, theta).locally_type_k
                    && tctx.classify(e, &theta.complement(e)).purely_non_k
            })
            .collect();
        ensure!(
            witnesses.len() == 1 && *witnesses[0] == tctx.gamma_k,
            "[{name}] locally-typed/purely-untyped split not unique"
        );
        Ok(())
    })
}

fn type_lemma_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for_each_td(ctx, |name, tctx| {
        let witnesses: Vec<_> = ctx
            .covers
            .theta
            .iter()
            .filter(|theta| {
                tctx.classify(e, theta).type_k
                    && tctx.classify(e, &theta.complement(e)).properly_non_k
            })
            .collect();
        ensure!(
            witnesses.len() == 1 && *witnesses[0] == tctx.gamma_k_tilde,
            "[{name}] typed/properly-untyped split not unique"
        );
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn atoms_of_the_diamond() {
        let d4 = construct::from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap();
        let ctx = ModelCtx::new("d4", d4);
        assert_eq!(ctx.atoms, ElementSet::from_iter(4, [1, 2]));
        assert!(atoms_prime(&ctx).is_ok());
        assert!(atoms_dblprime(&ctx).is_ok());
    }
}
