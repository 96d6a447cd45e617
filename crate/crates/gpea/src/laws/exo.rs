//! Laws of the exocenter: the Boolean algebra of summand maps, pointwise
//! formulas, and the correspondence with central ideals.

use itertools::Itertools;

use super::ctx::{self, ModelCtx};
use super::{ensure, Law};
use crate::algebra::Elem;
use crate::axioms;
use crate::exocenter::{self, ExoMap};
use crate::set::ElementSet;

pub(super) fn laws() -> Vec<Law> {
    vec![
        Law { id: "piprime", group: "exocenter", summary: "the complementary map is the shared difference and sums back to the argument", run: piprime },
        Law { id: "EXCprop.i", group: "exocenter", summary: "a map annihilates its complement's values", run: excprop_i },
        Law { id: "EXCprop.ii", group: "exocenter", summary: "complements stay in the exocenter and are involutive", run: excprop_ii },
        Law { id: "EXCprop.iii", group: "exocenter", summary: "anything below a value is fixed", run: excprop_iii },
        Law { id: "EXCprop.iv", group: "exocenter", summary: "pi e = e ^ pi f whenever e <= f", run: excprop_iv },
        Law { id: "EXCprop.v", group: "exocenter", summary: "the image is the fixed-point set and an ideal", run: excprop_v },
        Law { id: "EXCprop.vi", group: "exocenter", summary: "images are closed under existing suprema and infima", run: excprop_vi },
        Law { id: "EXCprop.vii", group: "exocenter", summary: "image and complement image are orthogonal with join sums", run: excprop_vii },
        Law { id: "EXCprop.viii", group: "exocenter", summary: "every element splits uniquely across image and complement image", run: excprop_viii },
        Law { id: "EXCprop.ix", group: "exocenter", summary: "a sum exists iff both coordinate sums exist", run: excprop_ix },
        Law { id: "EXCprop.x", group: "exocenter", summary: "the complement image is the disjointness set of the image", run: excprop_x },
        Law { id: "circ.i", group: "exocenter", summary: "composition commutes and stays in the exocenter", run: circ_i },
        Law { id: "circ.ii", group: "exocenter", summary: "the three order characterizations agree", run: circ_ii },
        Law { id: "boolalg", group: "exocenter", summary: "the exocenter is a Boolean algebra under composition and complement", run: boolalg },
        Law { id: "DisjointPiXi.i", group: "exocenter", summary: "disjoint maps have orthogonal images with join sums", run: disjointpixi_i },
        Law { id: "DisjointPiXi.ii", group: "exocenter", summary: "disjoint maps evaluate jointly: (pi v xi)e = pi e + xi e", run: disjointpixi_ii },
        Law { id: "FinitePwiseDisjointPi.i", group: "exocenter", summary: "picks from pairwise disjoint summands are orthogonal with sum = sup", run: finitepwise_i },
        Law { id: "FinitePwiseDisjointPi.ii", group: "exocenter", summary: "a disjoint join evaluates as the orthosum of the parts", run: finitepwise_ii },
        Law { id: "finitepointwise.inf", group: "exocenter", summary: "finite meets evaluate pointwise", run: finitepointwise_inf },
        Law { id: "finitepointwise.sup", group: "exocenter", summary: "finite joins evaluate pointwise", run: finitepointwise_sup },
        Law { id: "finitecartesianprod", group: "exocenter", summary: "a disjoint family with join 1 factors the algebra as a product", run: finitecartesianprod },
        Law { id: "CentId=piE", group: "exocenter", summary: "central ideals are exactly the exocenter images", run: centid_pie },
        Law { id: "piEnormal", group: "exocenter", summary: "every exocenter image is a normal ideal", run: pienormal },
        Law { id: "CIposet", group: "exocenter", summary: "map-to-image is an order isomorphism onto central ideals", run: ciposet },
        Law { id: "PtwisePi.sup", group: "exocenter", summary: "maps distribute over existing suprema", run: ptwisepi_sup },
        Law { id: "PtwisePi.inf", group: "exocenter", summary: "maps distribute over existing infima of nonempty families", run: ptwisepi_inf },
        Law { id: "PtwisePi.orthosum", group: "exocenter", summary: "maps distribute over orthosums", run: ptwisepi_orthosum },
    ]
}

fn piprime(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let prime = pi.complement(e);
        for x in e.elements() {
            let (p, q) = (pi.apply(x), prime.apply(x));
            ensure!(
                e.right_diff(p, x) == Some(q)
                    && e.left_diff(p, x) == Some(q)
                    && e.ominus(x, p) == Some(q),
                "complement is not the shared difference at {x}"
            );
            ensure!(e.perp(p, q), "value not orthogonal to complement value at {x}");
            ensure!(
                e.oplus(p, q) == Some(x) && e.oplus(q, p) == Some(x),
                "values do not sum back to {x}"
            );
        }
    }
    Ok(())
}

fn excprop_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let prime = pi.complement(e);
        for x in e.elements() {
            ensure!(
                pi.apply(prime.apply(x)) == 0 && prime.apply(pi.apply(x)) == 0,
                "annihilation fails at {x}"
            );
        }
    }
    Ok(())
}

fn excprop_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let prime = pi.complement(e);
        ensure!(exocenter::is_exomap(e, prime.values()), "complement is not an exocenter map");
        ensure!(ctx.in_gex(&prime), "complement missing from the enumeration");
        ensure!(prime.complement(e) == *pi, "complement is not involutive");
    }
    Ok(())
}

fn excprop_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        for x in e.elements() {
            for f in e.elements() {
                if e.leq(x, pi.apply(f)) {
                    ensure!(pi.apply(x) == x, "element {x} below a value is not fixed");
                }
            }
        }
    }
    Ok(())
}

fn excprop_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        for x in e.elements() {
            for f in e.elements() {
                if e.leq(x, f) {
                    ensure!(
                        e.meet(x, pi.apply(f)) == Some(pi.apply(x)),
                        "pi e != e ^ pi f at e={x} f={f}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn excprop_v(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let value_image = ElementSet::from_iter(e.order(), e.elements().map(|x| pi.apply(x)));
        ensure!(value_image == *pi.image(), "value image differs from fixed points");
        ensure!(axioms::is_ideal(e, pi.image()), "image is not an ideal");
    }
    Ok(())
}

fn excprop_vi(ctx: &ModelCtx) -> Result<(), String> {
    for pi in &ctx.gex {
        ensure!(
            exocenter::is_sup_inf_closed(&ctx.e, pi.image()),
            "image {{{}}} not closed under existing bounds",
            pi.image()
        );
    }
    Ok(())
}

fn excprop_vii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let prime = pi.complement(e);
        for x in pi.image().iter() {
            for y in prime.image().iter() {
                ensure!(e.perp(x, y), "images not orthogonal at ({x},{y})");
                ensure!(
                    e.oplus(x, y) == e.join(x, y),
                    "sum is not the join at ({x},{y})"
                );
                ensure!(e.meet(x, y) == Some(0), "meet nonzero at ({x},{y})");
            }
        }
    }
    Ok(())
}

fn excprop_viii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let prime = pi.complement(e);
        for x in e.elements() {
            let mut decomps = Vec::new();
            for a in pi.image().intersect(e.down_set(x)).iter() {
                let b = e.right_diff(a, x).expect("a <= x");
                if prime.image().contains(b) {
                    decomps.push((a, b));
                }
            }
            ensure!(
                decomps == vec![(pi.apply(x), prime.apply(x))],
                "decomposition of {x} not unique or wrong: {decomps:?}"
            );
        }
    }
    Ok(())
}

fn excprop_ix(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let prime = pi.complement(e);
        for x in e.elements() {
            for y in e.elements() {
                let whole = e.oplus(x, y).is_some();
                let parts = e.oplus(pi.apply(x), pi.apply(y)).is_some()
                    && e.oplus(prime.apply(x), prime.apply(y)).is_some();
                ensure!(whole == parts, "sum existence mismatch at ({x},{y})");
            }
        }
    }
    Ok(())
}

fn excprop_x(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        let prime = pi.complement(e);
        let disjointness = ElementSet::from_iter(
            e.order(),
            e.elements().filter(|&f| pi.image().iter().all(|x| e.meet(f, x) == Some(0))),
        );
        ensure!(
            disjointness == *prime.image(),
            "complement image is not the disjointness set"
        );
    }
    Ok(())
}

fn circ_i(ctx: &ModelCtx) -> Result<(), String> {
    for pi in &ctx.gex {
        for xi in &ctx.gex {
            let ab = pi.meet(xi);
            let ba = xi.meet(pi);
            ensure!(ab == ba, "composition does not commute");
            ensure!(ctx.in_gex(&ab), "composition leaves the exocenter");
        }
    }
    Ok(())
}

fn circ_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        for xi in &ctx.gex {
            let b1 = xi.meet(pi) == *xi;
            let b2 = xi.leq(pi, e);
            let b3 = xi.image().is_subset(pi.image());
            ensure!(b1 == b2 && b2 == b3, "order characterizations disagree");
        }
    }
    Ok(())
}

fn boolalg(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let gex = &ctx.gex;
    ensure!(gex.iter().any(|m| m.is_zero()), "zero map missing");
    ensure!(gex.iter().any(|m| m.is_identity()), "identity missing");
    let zero = ExoMap::zero(e.order());
    let one = ExoMap::identity(e.order());
    for pi in gex {
        let prime = pi.complement(e);
        ensure!(ctx.in_gex(&prime), "not closed under complement");
        ensure!(pi.meet(&prime) == zero, "pi ^ pi' != 0");
        ensure!(pi.join(&prime, e) == one, "pi v pi' != 1");
        ensure!(zero.leq(pi, e) && pi.leq(&one, e), "bounds fail");
    }
    for pi in gex {
        for xi in gex {
            let m = pi.meet(xi);
            let j = pi.join(xi, e);
            ensure!(ctx.in_gex(&m) && ctx.in_gex(&j), "not closed under meet/join");
            ensure!(m.leq(pi, e) && m.leq(xi, e), "meet not a lower bound");
            ensure!(pi.leq(&j, e) && xi.leq(&j, e), "join not an upper bound");
            for rho in gex {
                if rho.leq(pi, e) && rho.leq(xi, e) {
                    ensure!(rho.leq(&m, e), "meet not greatest");
                }
                if pi.leq(rho, e) && xi.leq(rho, e) {
                    ensure!(j.leq(rho, e), "join not least");
                }
            }
            // unique complements
            if m == zero && j == one {
                ensure!(*xi == pi.complement(e), "complement not unique");
            }
            if pi.leq(xi, e) && xi.leq(pi, e) {
                ensure!(pi == xi, "order not antisymmetric");
            }
        }
    }
    for pi in gex {
        for xi in gex {
            for rho in gex {
                let lhs = pi.meet(&xi.join(rho, e));
                let rhs = pi.meet(xi).join(&pi.meet(rho), e);
                ensure!(lhs == rhs, "distributivity fails");
            }
        }
    }
    Ok(())
}

fn disjoint_pairs(ctx: &ModelCtx) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..ctx.gex.len() {
        for j in 0..ctx.gex.len() {
            if ctx.gex[i].meet(&ctx.gex[j]).is_zero() {
                out.push((i, j));
            }
        }
    }
    out
}

fn disjointpixi_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for (i, j) in disjoint_pairs(ctx) {
        let (pi, xi) = (&ctx.gex[i], &ctx.gex[j]);
        let join = pi.join(xi, e);
        for x in pi.image().iter() {
            for y in xi.image().iter() {
                ensure!(e.perp(x, y), "images of disjoint maps not orthogonal");
                let sum = e.oplus(x, y);
                ensure!(sum == e.join(x, y), "sum is not the join");
                ensure!(
                    sum.is_some_and(|s| join.image().contains(s)),
                    "sum escapes the join image"
                );
                ensure!(e.meet(x, y) == Some(0), "nonzero meet across disjoint images");
            }
        }
    }
    Ok(())
}

fn disjointpixi_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for (i, j) in disjoint_pairs(ctx) {
        let (pi, xi) = (&ctx.gex[i], &ctx.gex[j]);
        let join = pi.join(xi, e);
        for x in e.elements() {
            let (p, q) = (pi.apply(x), xi.apply(x));
            ensure!(e.perp(p, q), "values not orthogonal at {x}");
            ensure!(
                Some(join.apply(x)) == e.oplus(p, q) && Some(join.apply(x)) == e.join(p, q),
                "(pi v xi)e mismatch at {x}"
            );
            ensure!(e.meet(p, q) == Some(0), "values not disjoint at {x}");
        }
    }
    Ok(())
}

fn finitepwise_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for family in ctx::disjoint_gex_families(ctx) {
        if family.is_empty() {
            continue;
        }
        let images: Vec<Vec<Elem>> =
            family.iter().map(|&i| ctx.gex[i].image().iter().collect()).collect();
        for picks in images.into_iter().multi_cartesian_product() {
            let total = e.orthosum(&picks);
            let sup = e.sup(&ElementSet::from_iter(e.order(), picks.iter().copied()));
            ensure!(
                total.is_some() && total == sup,
                "picks {picks:?} not orthogonal with sum = sup"
            );
        }
    }
    Ok(())
}

fn finitepwise_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for family in ctx::disjoint_gex_families(ctx) {
        if family.is_empty() {
            continue;
        }
        let join = ctx.join_all(family.iter().map(|&i| &ctx.gex[i]));
        for x in e.elements() {
            let parts: Vec<Elem> = family.iter().map(|&i| ctx.gex[i].apply(x)).collect();
            let total = e.orthosum(&parts);
            let sup = e.sup(&ElementSet::from_iter(e.order(), parts.iter().copied()));
            ensure!(
                total == Some(join.apply(x)) && sup == Some(join.apply(x)),
                "pointwise disjoint join fails at {x}"
            );
        }
    }
    Ok(())
}

fn finitepointwise_inf(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    let init = ExoMap::identity(e.order());
    ctx::visit_subsets(
        ctx.gex.len(),
        init,
        &|acc, i| acc.meet(&ctx.gex[i]),
        &mut |family, m| {
            if family.is_empty() {
                return Ok(());
            }
            for x in e.elements() {
                let vals = ElementSet::from_iter(
                    e.order(),
                    family.iter().map(|&i| ctx.gex[i].apply(x)),
                );
                ensure!(
                    e.inf(&vals) == Some(m.apply(x)),
                    "pointwise meet fails at {x} for {family:?}"
                );
            }
            Ok(())
        },
    )
}

fn finitepointwise_sup(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e.clone();
    let init = ExoMap::zero(e.order());
    ctx::visit_subsets(
        ctx.gex.len(),
        init,
        &|acc, i| acc.join(&ctx.gex[i], e),
        &mut |family, j| {
            if family.is_empty() {
                return Ok(());
            }
            for x in e.elements() {
                let vals = ElementSet::from_iter(
                    e.order(),
                    family.iter().map(|&i| ctx.gex[i].apply(x)),
                );
                ensure!(
                    e.sup(&vals) == Some(j.apply(x)),
                    "pointwise join fails at {x} for {family:?}"
                );
            }
            Ok(())
        },
    )
}

/// Shared check: a pairwise disjoint family whose join has image `target`
/// induces a product decomposition of that image via the orthosum map.
pub(super) fn check_product(ctx: &ModelCtx, family: &[usize], target: &ElementSet) -> Result<(), String> {
    let e = &ctx.e;
    let images: Vec<Vec<Elem>> =
        family.iter().map(|&i| ctx.gex[i].image().iter().collect()).collect();
    let tuples: Vec<Vec<Elem>> = if family.is_empty() {
        vec![vec![]]
    } else {
        images.iter().map(|v| v.iter().copied()).multi_cartesian_product().collect()
    };
    ensure!(tuples.len() == target.len(), "product size differs from image size");

    let mut seen = ElementSet::empty(e.order());
    let phi: Vec<Elem> = tuples
        .iter()
        .map(|t| e.orthosum(t).ok_or_else(|| format!("tuple {t:?} not orthosummable")))
        .collect::<Result<_, _>>()?;
    for (&v, t) in phi.iter().zip(&tuples) {
        ensure!(target.contains(v) && !seen.contains(v), "orthosum map not injective into image at {t:?}");
        seen.insert(v);
        // inverse formula: coordinates are recovered by the maps
        for (k, &i) in family.iter().enumerate() {
            ensure!(ctx.gex[i].apply(v) == t[k], "coordinate recovery fails at {t:?}");
        }
    }
    // morphism in both directions: componentwise sums match ambient sums
    for (s, &vs) in tuples.iter().zip(&phi) {
        for (t, &vt) in tuples.iter().zip(&phi) {
            let comp: Option<Vec<Elem>> = s
                .iter()
                .zip(t)
                .map(|(&a, &b)| e.oplus(a, b))
                .collect();
            match (comp, e.oplus(vs, vt)) {
                (Some(c), Some(v)) => {
                    ensure!(
                        e.orthosum(&c) == Some(v),
                        "sum image mismatch at {s:?}+{t:?}"
                    );
                }
                (None, None) => {}
                (c, v) => {
                    ensure!(false, "sum existence mismatch at {s:?}+{t:?}: {c:?} vs {v:?}")
                }
            }
        }
    }
    Ok(())
}

fn finitecartesianprod(ctx: &ModelCtx) -> Result<(), String> {
    let full = ElementSet::full(ctx.n());
    for family in ctx::disjoint_gex_families(ctx) {
        let join = ctx.join_all(family.iter().map(|&i| &ctx.gex[i]));
        if join.is_identity() {
            check_product(ctx, &family, &full)?;
        }
    }
    Ok(())
}

fn centid_pie(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let mut central: Vec<ElementSet> = exocenter::ideals(e)
        .into_iter()
        .filter(|s| axioms::central_ideal_complement(e, s).is_some())
        .collect();
    let mut images: Vec<ElementSet> = ctx.gex.iter().map(|m| m.image().clone()).collect();
    central.sort();
    images.sort();
    ensure!(central == images, "central ideals and images differ");
    Ok(())
}

fn pienormal(ctx: &ModelCtx) -> Result<(), String> {
    for pi in &ctx.gex {
        ensure!(
            axioms::is_normal_ideal(&ctx.e, pi.image()),
            "image {{{}}} not normal",
            pi.image()
        );
    }
    Ok(())
}

fn ciposet(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for (i, pi) in ctx.gex.iter().enumerate() {
        for (j, xi) in ctx.gex.iter().enumerate() {
            if i != j {
                ensure!(pi.image() != xi.image(), "distinct maps share an image");
            }
            ensure!(
                pi.leq(xi, e) == pi.image().is_subset(xi.image()),
                "order does not match inclusion"
            );
        }
        let pair = axioms::central_ideal_complement(e, pi.image())
            .ok_or("image is not a central ideal")?;
        ensure!(
            pair.s_prime == *pi.complement(e).image(),
            "complement image is not the complementary summand"
        );
    }
    Ok(())
}

/// Supremum distribution reduces to maximal families: see `oplusdist`.
fn ptwisepi_sup(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        for q in e.elements() {
            for x in e.down_set(q).iter() {
                ensure!(e.leq(pi.apply(x), pi.apply(q)), "not monotone at {x}<={q}");
            }
            for b in e.elements() {
                let t = ElementSet::from_iter(
                    e.order(),
                    e.down_set(q).iter().filter(|&x| e.leq(pi.apply(x), b)),
                );
                if e.sup(&t) == Some(q) {
                    ensure!(
                        e.leq(pi.apply(q), b),
                        "sup distribution fails at q={q} bound={b}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn ptwisepi_inf(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for pi in &ctx.gex {
        for q in e.elements() {
            for b in e.elements() {
                let t = ElementSet::from_iter(
                    e.order(),
                    e.up_set(q).iter().filter(|&x| e.leq(b, pi.apply(x))),
                );
                if !t.is_empty() && e.inf(&t) == Some(q) {
                    ensure!(
                        e.leq(b, pi.apply(q)),
                        "inf distribution fails at q={q} bound={b}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn ptwisepi_orthosum(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    let multisets = ctx::orthosummable_multisets(e);
    for pi in &ctx.gex {
        for family in &multisets {
            let total = e.orthosum(family).expect("family is orthosummable");
            let mapped: Vec<Elem> = family.iter().map(|&x| pi.apply(x)).collect();
            ensure!(
                e.orthosum(&mapped) == Some(pi.apply(total)),
                "orthosum distribution fails on {family:?}"
            );
        }
    }
    Ok(())
}
