//! Laws of the center: characterizations of centrality, the induced summand
//! maps, the lattice structure, and restriction to summands and intervals.

use super::ctx::ModelCtx;
use super::{ensure, Law};
use crate::algebra::{Elem, SumTable};
use crate::axioms;
use crate::center;
use crate::construct;
use crate::exocenter::{self, ExoMap};
use crate::set::ElementSet;

pub(super) fn laws() -> Vec<Law> {
    vec![
        Law { id: "CentProp.i", group: "center", summary: "the central split of every element is unique and orthogonal", run: centprop_i },
        Law { id: "CentProp.ii", group: "center", summary: "either sum with a central element exists iff they are orthogonal", run: centprop_ii },
        Law { id: "CentProp.iii", group: "center", summary: "a defined sum with a central operand is orthogonal", run: centprop_iii },
        Law { id: "centr", group: "center", summary: "the three characterizations of centrality agree", run: centr },
        Law { id: "pic", group: "center", summary: "a map has interval image iff its image has a central top", run: pic },
        Law { id: "ceprop.i", group: "center", summary: "the summand map of c is meet with c", run: ceprop_i },
        Law { id: "ceprop.ii", group: "center", summary: "summand maps of central elements agree on their meet", run: ceprop_ii },
        Law { id: "ceprop.iii", group: "center", summary: "disjointness from c, complement membership and orthogonality agree", run: ceprop_iii },
        Law { id: "ceprop.iv", group: "center", summary: "central meets are central with the meet map", run: ceprop_iv },
        Law { id: "ceprop.v", group: "center", summary: "disjoint central pairs have disjoint maps and are orthogonal", run: ceprop_v },
        Law { id: "ceprop.vi", group: "center", summary: "orthogonal central sums are joins with the join map", run: ceprop_vi },
        Law { id: "ceprop.vii", group: "center", summary: "the summand map of c is the least map fixing c", run: ceprop_vii },
        Law { id: "ceprop.viii", group: "center", summary: "meet-with-h maps characterize central h", run: ceprop_viii },
        Law { id: "ceprop.ix", group: "center", summary: "centrality order matches map order", run: ceprop_ix },
        Law { id: "ceprop.x", group: "center", summary: "central differences are central with the relative-complement map", run: ceprop_x },
        Law { id: "ceprop.xi", group: "center", summary: "central joins always exist and carry the join map", run: ceprop_xi },
        Law { id: "centgea.i", group: "center", summary: "the central maps form a generalized Boolean sublattice", run: centgea_i },
        Law { id: "centgea.ii", group: "center", summary: "the center is a commutative lattice-ordered subalgebra", run: centgea_ii },
        Law { id: "centgea.iii", group: "center", summary: "c to its map is a lattice isomorphism", run: centgea_iii },
        Law { id: "centgea.iv", group: "center", summary: "the center is a generalized Boolean algebra", run: centgea_iv },
        Law { id: "centgea.v", group: "center", summary: "a top exists iff every exocenter map is central", run: centgea_v },
        Law { id: "mis.i", group: "center", summary: "restriction to a summand lands in its exocenter", run: mis_i },
        Law { id: "mis.ii", group: "center", summary: "summand exocenter maps lift along the projection", run: mis_ii },
        Law { id: "mis.iii", group: "center", summary: "restriction is a surjective Boolean homomorphism", run: mis_iii },
        Law { id: "mis.iv", group: "center", summary: "intervals below summand elements agree in the summand and ambient", run: mis_iv },
        Law { id: "mis.v", group: "center", summary: "maps send intervals onto the interval below the value", run: mis_v },
        Law { id: "mis.vi", group: "center", summary: "the center of a summand is the trace of the center", run: mis_vi },
        Law { id: "nova", group: "center", summary: "restriction to any interval lands in the interval's exocenter", run: nova },
    ]
}

fn centprop_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for a in e.elements() {
            let mut splits = Vec::new();
            for a1 in e.down_set(c).intersect(e.down_set(a)).iter() {
                let a2 = e.right_diff(a1, a).expect("a1 <= a");
                if e.oplus(a2, c).is_some() {
                    splits.push((a1, a2));
                }
            }
            ensure!(splits.len() == 1, "split of {a} by central {c} not unique: {splits:?}");
            let (a1, a2) = splits[0];
            ensure!(e.perp(a1, a2), "split of {a} by {c} not orthogonal");
        }
    }
    Ok(())
}

fn centprop_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for a in e.elements() {
            let left = e.oplus(a, c).is_some();
            let right = e.oplus(c, a).is_some();
            let perp = e.perp(a, c);
            ensure!(left == perp && right == perp, "sum/orthogonality mismatch at ({a},{c})");
        }
    }
    Ok(())
}

fn centprop_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for x in e.elements() {
        for y in e.elements() {
            if e.oplus(x, y).is_some()
                && (ctx.center.gamma_set.contains(x) || ctx.center.gamma_set.contains(y))
            {
                ensure!(e.perp(x, y), "sum with central operand not orthogonal at ({x},{y})");
            }
        }
    }
    Ok(())
}

fn centr(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in e.elements() {
        let r1 = center::is_central_by_definition(e, c);
        let r2 = axioms::central_ideal_complement(e, e.down_set(c)).is_some();
        let r3 = center::is_central_by_decomposition(e, c);
        ensure!(r1 == r2 && r2 == r3, "centrality routes split at {c}: {r1} {r2} {r3}");
    }
    Ok(())
}

fn pic(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let im = pi.image();
        let largest = im.iter().find(|&c| im.is_subset(e.down_set(c)));
        match largest {
            Some(c) => {
                ensure!(*im == *e.down_set(c), "image with top {c} is not the interval");
                ensure!(ctx.center.gamma_set.contains(c), "image top {c} not central");
                ensure!(pi == ctx.pi_of(c), "map is not the summand map of {c}");
                let orth = ElementSet::from_iter(
                    e.order(),
                    e.elements().filter(|&f| e.perp(f, c)),
                );
                ensure!(
                    *pi.complement(e).image() == orth,
                    "complement image differs from the orthogonal set of {c}"
                );
            }
            None => {
                for c in e.elements() {
                    ensure!(
                        *im != *e.down_set(c),
                        "interval image without a largest element at {c}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn ceprop_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        let pi = ctx.pi_of(c);
        for x in e.elements() {
            ensure!(e.meet(x, c) == Some(pi.apply(x)), "pi_c e != e ^ c at e={x} c={c}");
        }
    }
    Ok(())
}

fn ceprop_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            let m = e.meet(c, d);
            ensure!(
                Some(ctx.pi_of(c).apply(d)) == m && Some(ctx.pi_of(d).apply(c)) == m,
                "cross evaluation differs from meet at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn ceprop_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        let prime = ctx.pi_of(c).complement(e);
        for x in e.elements() {
            let b1 = e.meet(x, c) == Some(0);
            let b2 = prime.image().contains(x);
            let b3 = e.perp(x, c);
            ensure!(b1 == b2 && b2 == b3, "disjointness characterizations split at ({x},{c})");
        }
    }
    Ok(())
}

fn ceprop_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            let m = e.meet(c, d).ok_or(format!("central meet missing at ({c},{d})"))?;
            ensure!(ctx.center.gamma_set.contains(m), "central meet {m} not central");
            ensure!(
                *ctx.pi_of(m) == ctx.pi_of(c).meet(ctx.pi_of(d)),
                "map of meet differs at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn ceprop_v(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            let b1 = e.meet(c, d) == Some(0);
            let b2 = ctx.pi_of(c).meet(ctx.pi_of(d)).is_zero();
            let b3 = e.perp(c, d);
            ensure!(b1 == b2 && b2 == b3, "disjointness characterizations split at ({c},{d})");
        }
    }
    Ok(())
}

fn ceprop_vi(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            if !e.perp(c, d) {
                continue;
            }
            let s = e.oplus(c, d).expect("orthogonal sum exists");
            ensure!(e.join(c, d) == Some(s), "central sum differs from join at ({c},{d})");
            ensure!(ctx.center.gamma_set.contains(s), "central sum {s} not central");
            ensure!(
                *ctx.pi_of(s) == ctx.pi_of(c).join(ctx.pi_of(d), e),
                "map of sum is not the join of maps at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn ceprop_vii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        let pi = ctx.pi_of(c);
        ensure!(pi.apply(c) == c, "summand map does not fix {c}");
        for xi in &ctx.gex {
            if xi.apply(c) == c {
                ensure!(pi.leq(xi, e), "summand map of {c} not least among fixers");
            }
        }
    }
    Ok(())
}

fn ceprop_viii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        for h in e.elements() {
            let pointwise = e.elements().all(|x| e.meet(x, h) == Some(pi.apply(x)));
            let central = ctx.center.gamma_set.contains(h) && pi == ctx.pi_of(h);
            ensure!(pointwise == central, "meet-map characterization splits at h={h}");
        }
    }
    Ok(())
}

fn ceprop_ix(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            ensure!(
                e.leq(c, d) == ctx.pi_of(c).leq(ctx.pi_of(d), e),
                "order mismatch at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn ceprop_x(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            if !e.leq(c, d) {
                continue;
            }
            let diff = e.ominus(d, c).ok_or(format!("difference missing at {c}<={d}"))?;
            ensure!(ctx.center.gamma_set.contains(diff), "central difference {diff} not central");
            ensure!(
                *ctx.pi_of(diff) == ctx.pi_of(d).meet(&ctx.pi_of(c).complement(e)),
                "map of difference differs at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn ceprop_xi(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for c in ctx.center.gamma_set.iter() {
        for d in ctx.center.gamma_set.iter() {
            let j = e.join(c, d).ok_or(format!("central join missing at ({c},{d})"))?;
            ensure!(ctx.center.gamma_set.contains(j), "central join {j} not central");
            ensure!(
                *ctx.pi_of(j) == ctx.pi_of(c).join(ctx.pi_of(d), e),
                "map of join differs at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn central_maps(ctx: &ModelCtx) -> Vec<ExoMap> {
    ctx.center.pi_of.iter().map(|(_, m)| m.clone()).collect()
}

fn centgea_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let maps = central_maps(ctx);
    let contains = |m: &ExoMap| maps.contains(m);
    ensure!(contains(&ExoMap::zero(e.order())), "zero map missing");
    for a in &maps {
        for b in &maps {
            ensure!(contains(&a.meet(b)), "not closed under meet");
            ensure!(contains(&a.join(b, e)), "not closed under join");
            for c in &maps {
                let lhs = a.meet(&b.join(c, e));
                let rhs = a.meet(b).join(&a.meet(c), e);
                ensure!(lhs == rhs, "distributivity fails on central maps");
            }
            if a.leq(b, e) {
                ensure!(
                    maps.iter().any(|x| a.meet(x).is_zero() && a.join(x, e) == *b),
                    "no relative complement of a central map"
                );
            }
        }
    }
    Ok(())
}

fn centgea_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let gamma: Vec<Elem> = ctx.center.gamma_set.iter().collect();
    let pos = |x: Elem| gamma.binary_search(&x).map_err(|_| format!("sum leaves the center: {x}"));
    let mut sums = Vec::new();
    for (i, &c) in gamma.iter().enumerate() {
        for (j, &d) in gamma.iter().enumerate() {
            if let Some(s) = e.oplus(c, d) {
                ensure!(e.oplus(d, c) == Some(s), "center not commutative at ({c},{d})");
                if i != 0 && j != 0 {
                    sums.push((i, j, pos(s)?));
                }
            }
            ensure!(
                e.meet(c, d).is_some_and(|m| ctx.center.gamma_set.contains(m)),
                "central meet missing at ({c},{d})"
            );
            ensure!(
                e.join(c, d).is_some_and(|m| ctx.center.gamma_set.contains(m)),
                "central join missing at ({c},{d})"
            );
        }
    }
    let table = SumTable::from_sums(gamma.len(), &sums).map_err(|err| err.to_string())?;
    let report = axioms::check_gpea(&table);
    ensure!(report.is_empty(), "center restriction violates axioms: {report}");
    Ok(())
}

fn centgea_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let gamma: Vec<Elem> = ctx.center.gamma_set.iter().collect();
    for &c in &gamma {
        for &d in &gamma {
            if c != d {
                ensure!(ctx.pi_of(c) != ctx.pi_of(d), "map identifies {c} and {d}");
            }
            ensure!(
                e.leq(c, d) == ctx.pi_of(c).leq(ctx.pi_of(d), e),
                "not an order isomorphism at ({c},{d})"
            );
            let m = e.meet(c, d).expect("central meet");
            let j = e.join(c, d).expect("central join");
            ensure!(
                *ctx.pi_of(m) == ctx.pi_of(c).meet(ctx.pi_of(d))
                    && *ctx.pi_of(j) == ctx.pi_of(c).join(ctx.pi_of(d), e),
                "lattice operations not preserved at ({c},{d})"
            );
        }
    }
    Ok(())
}

fn centgea_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let gamma = &ctx.center.gamma_set;
    ensure!(gamma.contains(0), "center lacks zero");
    for a in gamma.iter() {
        for b in gamma.iter() {
            for c in gamma.iter() {
                let lhs = e.join(b, c).and_then(|x| e.meet(a, x));
                let rhs = e
                    .meet(a, b)
                    .zip(e.meet(a, c))
                    .and_then(|(x, y)| e.join(x, y));
                ensure!(lhs == rhs && lhs.is_some(), "center not distributive at ({a},{b},{c})");
            }
            if e.leq(a, b) {
                ensure!(
                    gamma
                        .iter()
                        .any(|x| e.meet(a, x) == Some(0) && e.join(a, x) == Some(b)),
                    "no relative complement of {a} inside [0,{b}]"
                );
            }
        }
    }
    Ok(())
}

fn centgea_v(ctx: &ModelCtx) -> Result<(), String> {
    let has_top = axioms::top_of(&ctx.e).is_some();
    let mut central: Vec<ExoMap> = central_maps(ctx);
    let mut gex = ctx.gex.clone();
    central.sort_by_key(|m| m.sort_key());
    gex.sort_by_key(|m| m.sort_key());
    ensure!(has_top == (central == gex), "top existence vs central maps mismatch");
    Ok(())
}

/// Restriction of an exocenter map to a summand, in summand coordinates.
fn restrict(carrier: &[Elem], xi: &ExoMap) -> Vec<Elem> {
    carrier
        .iter()
        .map(|&p| {
            carrier
                .binary_search(&xi.apply(p))
                .expect("a decreasing map stays inside the ideal")
        })
        .collect()
}

fn mis_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let (sub, carrier) = exocenter::sub_algebra(e, pi.image());
        let sub_gex = exocenter::exocenter(&sub);
        for xi in &ctx.gex {
            let values = restrict(&carrier, xi);
            ensure!(
                exocenter::is_exomap(&sub, &values),
                "restriction is not an exocenter map of the summand"
            );
            ensure!(
                sub_gex.iter().any(|m| m.values() == values),
                "restriction missing from the summand exocenter"
            );
        }
    }
    Ok(())
}

fn mis_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let (sub, carrier) = exocenter::sub_algebra(e, pi.image());
        for tau in exocenter::exocenter(&sub) {
            let lifted: Vec<Elem> = e
                .elements()
                .map(|x| {
                    let p = carrier.binary_search(&pi.apply(x)).expect("value in image");
                    carrier[tau.apply(p)]
                })
                .collect();
            ensure!(ctx.gex.iter().any(|m| m.values() == lifted), "lift leaves the exocenter");
        }
    }
    Ok(())
}

fn mis_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let (sub, carrier) = exocenter::sub_algebra(e, pi.image());
        let sub_gex = exocenter::exocenter(&sub);
        let mut restricted: Vec<Vec<Elem>> =
            ctx.gex.iter().map(|xi| restrict(&carrier, xi)).collect();
        restricted.sort();
        restricted.dedup();
        let mut all: Vec<Vec<Elem>> = sub_gex.iter().map(|m| m.values().to_vec()).collect();
        all.sort();
        ensure!(restricted == all, "restriction not surjective onto the summand exocenter");
        for xi in &ctx.gex {
            for rho in &ctx.gex {
                let lhs = restrict(&carrier, &xi.meet(rho));
                let rhs_xi = ExoMap::new(restrict(&carrier, xi));
                let rhs_rho = ExoMap::new(restrict(&carrier, rho));
                ensure!(
                    lhs == rhs_xi.meet(&rhs_rho).values(),
                    "restriction does not preserve meets"
                );
            }
            let lhs = restrict(&carrier, &xi.complement(e));
            let rhs = ExoMap::new(restrict(&carrier, xi)).complement(&sub);
            ensure!(lhs == rhs.values(), "restriction does not preserve complements");
        }
    }
    Ok(())
}

fn mis_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let (sub, carrier) = exocenter::sub_algebra(e, pi.image());
        for (p_sub, &p) in carrier.iter().enumerate() {
            let (sub_int, sub_carrier) = construct::interval_pea_embedded(&sub, p_sub);
            let (amb_int, amb_carrier) = construct::interval_pea_embedded(e, p);
            let mapped: Vec<Elem> = sub_carrier.iter().map(|&q| carrier[q]).collect();
            ensure!(mapped == amb_carrier, "interval carriers differ below {p}");
            ensure!(sub_int == amb_int, "interval structures differ below {p}");
        }
    }
    Ok(())
}

fn mis_v(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        for p in e.elements() {
            let image_of_interval =
                ElementSet::from_iter(e.order(), e.down_set(p).iter().map(|x| pi.apply(x)));
            ensure!(
                image_of_interval == *e.down_set(pi.apply(p)),
                "interval image differs from interval below the value at {p}"
            );
        }
    }
    Ok(())
}

fn mis_vi(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let (sub, carrier) = exocenter::sub_algebra(e, pi.image());
        let sub_center: ElementSet = ElementSet::from_iter(
            e.order(),
            center::central_elements(&sub).iter().map(|c| carrier[c]),
        );
        let trace = ctx.center.gamma_set.intersect(pi.image());
        ensure!(sub_center == trace, "summand center is not the center trace");
    }
    Ok(())
}

fn nova(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for k in e.elements() {
        let (interval, carrier) = construct::interval_pea_embedded(e, k);
        let interval_gex = exocenter::exocenter(&interval);
        for pi in &ctx.gex {
            let values: Vec<Elem> = carrier
                .iter()
                .map(|&p| carrier.binary_search(&pi.apply(p)).expect("value stays below k"))
                .collect();
            ensure!(
                exocenter::is_exomap(&interval, &values),
                "restriction to the interval below {k} fails the exocenter conditions"
            );
            ensure!(
                interval_gex.iter().any(|m| m.values() == values),
                "restriction missing from the interval exocenter below {k}"
            );
        }
    }
    Ok(())
}
