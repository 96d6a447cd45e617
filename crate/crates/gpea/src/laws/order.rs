//! Laws of the partial order, differences and finite suprema.

use super::ctx::ModelCtx;
use super::{ensure, Law};
use crate::axioms;
use crate::construct;
use crate::exocenter;
use crate::set::ElementSet;

pub(super) fn laws() -> Vec<Law> {
    vec![
        Law {
            id: "SlashProps.i",
            group: "order",
            summary: "both differences of a <= b sit below b and invert each other",
            run: slashprops_i,
        },
        Law {
            id: "SlashProps.ii",
            group: "order",
            summary: "d <= a/b iff a+d <= b iff d <= b and a <= b\\d",
            run: slashprops_ii,
        },
        Law {
            id: "SlashProps.iii",
            group: "order",
            summary: "differences and order are stable under summing a fixed element",
            run: slashprops_iii,
        },
        Law {
            id: "SlashProps.iv",
            group: "order",
            summary: "differences along a <= b <= c compose: a/c = a/b + b/c",
            run: slashprops_iv,
        },
        Law {
            id: "oplusdist",
            group: "order",
            summary: "left and right sums distribute over existing suprema",
            run: oplusdist,
        },
        Law {
            id: "veeopluswedge",
            group: "order",
            summary: "orthogonal pairs with a join have a meet and e+f = (e v f)+(e ^ f)",
            run: veeopluswedge,
        },
        Law {
            id: "cancel.leq",
            group: "order",
            summary: "cancellation extends to the order: a+b <= a+c forces b <= c",
            run: cancel_leq,
        },
        Law {
            id: "interval",
            group: "order",
            summary: "every interval below an element is an algebra with that top",
            run: interval,
        },
        Law {
            id: "DirSumNormal",
            group: "order",
            summary: "central ideals and their complements are normal",
            run: dirsum_normal,
        },
    ]
}

fn slashprops_i(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for a in e.elements() {
        for b in e.elements() {
            if !e.leq(a, b) {
                continue;
            }
            let x = e.right_diff(a, b).ok_or(format!("a/b missing for {a}<={b}"))?;
            let y = e.left_diff(a, b).ok_or(format!("b\\a missing for {a}<={b}"))?;
            ensure!(e.leq(x, b) && e.leq(y, b), "difference above b at ({a},{b})");
            ensure!(e.right_diff(y, b) == Some(a), "(b\\a)/b != a at ({a},{b})");
            ensure!(e.left_diff(x, b) == Some(a), "b\\(a/b) != a at ({a},{b})");
        }
    }
    Ok(())
}

fn slashprops_ii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for a in e.elements() {
        for b in e.elements() {
            let x = match e.right_diff(a, b) {
                Some(x) => x,
                None => continue,
            };
            for d in e.elements() {
                let c1 = e.leq(d, x);
                let c2 = e.oplus(a, d).is_some_and(|ad| e.leq(ad, b));
                let c3 = e.leq(d, b) && e.left_diff(d, b).is_some_and(|bd| e.leq(a, bd));
                ensure!(c1 == c2 && c2 == c3, "chain broken at a={a} b={b} d={d}");
            }
        }
    }
    Ok(())
}

fn slashprops_iii(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for a in e.elements() {
        for b in e.elements() {
            if !e.leq(a, b) {
                continue;
            }
            for d in e.elements() {
                if let Some(bd) = e.oplus(b, d) {
                    let shifted = e.right_diff(a, b).and_then(|x| e.oplus(x, d));
                    ensure!(
                        e.right_diff(a, bd) == shifted && shifted.is_some(),
                        "a/(b+d) != (a/b)+d at a={a} b={b} d={d}"
                    );
                    let ad = e.oplus(a, d);
                    ensure!(
                        ad.is_some_and(|s| e.leq(s, bd)),
                        "a+d missing or above b+d at a={a} b={b} d={d}"
                    );
                }
                if let Some(db) = e.oplus(d, b) {
                    let shifted = e.left_diff(a, b).and_then(|y| e.oplus(d, y));
                    ensure!(
                        e.left_diff(a, db) == shifted && shifted.is_some(),
                        "(d+b)\\a != d+(b\\a) at a={a} b={b} d={d}"
                    );
                    let da = e.oplus(d, a);
                    ensure!(
                        da.is_some_and(|s| e.leq(s, db)),
                        "d+a missing or above d+b at a={a} b={b} d={d}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn slashprops_iv(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for a in e.elements() {
        for b in e.elements() {
            for c in e.elements() {
                if !(e.leq(a, b) && e.leq(b, c)) {
                    continue;
                }
                let right = e
                    .right_diff(a, b)
                    .zip(e.right_diff(b, c))
                    .and_then(|(x, y)| e.oplus(x, y));
                ensure!(
                    right.is_some() && right == e.right_diff(a, c),
                    "a/c != a/b + b/c at {a}<={b}<={c}"
                );
                let left = e
                    .left_diff(b, c)
                    .zip(e.left_diff(a, b))
                    .and_then(|(x, y)| e.oplus(x, y));
                ensure!(
                    left.is_some() && left == e.left_diff(a, c),
                    "c\\a != c\\b + b\\a at {a}<={b}<={c}"
                );
            }
        }
    }
    Ok(())
}

/// Quantification over all families with an existing supremum reduces to the
/// maximal candidate: a violating family below `f` with upper bound `b`
/// embeds into `T = {s <= f : e+s <= b}`, whose supremum is then forced to
/// be `f` as well.
fn oplusdist(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for x in e.elements() {
        for f in e.elements() {
            if let Some(xf) = e.oplus(x, f) {
                for s in e.down_set(f).iter() {
                    ensure!(
                        e.oplus(x, s).is_some_and(|v| e.leq(v, xf)),
                        "e+s missing or above e+f at e={x} f={f} s={s}"
                    );
                }
                for b in e.elements() {
                    let t = ElementSet::from_iter(
                        e.order(),
                        e.down_set(f)
                            .iter()
                            .filter(|&s| e.oplus(x, s).is_some_and(|v| e.leq(v, b))),
                    );
                    if !t.is_empty() && e.sup(&t) == Some(f) {
                        ensure!(e.leq(xf, b), "sup not attained: e={x} f={f} bound={b}");
                    }
                }
            }
            if let Some(fx) = e.oplus(f, x) {
                for s in e.down_set(f).iter() {
                    ensure!(
                        e.oplus(s, x).is_some_and(|v| e.leq(v, fx)),
                        "s+e missing or above f+e at e={x} f={f} s={s}"
                    );
                }
                for b in e.elements() {
                    let t = ElementSet::from_iter(
                        e.order(),
                        e.down_set(f)
                            .iter()
                            .filter(|&s| e.oplus(s, x).is_some_and(|v| e.leq(v, b))),
                    );
                    if !t.is_empty() && e.sup(&t) == Some(f) {
                        ensure!(e.leq(fx, b), "mirrored sup not attained: e={x} f={f} bound={b}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn veeopluswedge(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for x in e.elements() {
        for y in e.elements() {
            if !e.perp(x, y) {
                continue;
            }
            if let Some(j) = e.join(x, y) {
                let m = e.meet(x, y).ok_or(format!("meet missing for orthogonal {x},{y}"))?;
                ensure!(e.perp(j, m), "join not orthogonal to meet at ({x},{y})");
                ensure!(
                    e.oplus(x, y) == e.oplus(j, m) && e.oplus(x, y) == e.oplus(m, j),
                    "e+f != (e v f)+(e ^ f) at ({x},{y})"
                );
            }
        }
    }
    Ok(())
}

fn cancel_leq(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for a in e.elements() {
        for b in e.elements() {
            for c in e.elements() {
                if let (Some(ab), Some(ac)) = (e.oplus(a, b), e.oplus(a, c)) {
                    if e.leq(ab, ac) {
                        ensure!(e.leq(b, c), "left cancel fails at ({a},{b},{c})");
                    }
                }
                if let (Some(ba), Some(ca)) = (e.oplus(b, a), e.oplus(c, a)) {
                    if e.leq(ba, ca) {
                        ensure!(e.leq(b, c), "right cancel fails at ({a},{b},{c})");
                    }
                }
            }
        }
    }
    Ok(())
}

fn interval(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for u in e.elements() {
        let (sub, carrier) = construct::interval_pea_embedded(e, u);
        let top = axioms::top_of(&sub).map(|t| carrier[t]);
        ensure!(top == Some(u), "interval below {u} lacks top {u}, got {top:?}");
    }
    Ok(())
}

fn dirsum_normal(ctx: &ModelCtx) -> Result<(), String> {
    let e = &ctx.e;
    for s in exocenter::ideals(e) {
        if let Some(pair) = axioms::central_ideal_complement(e, &s) {
            ensure!(
                axioms::is_normal_ideal(e, &pair.s),
                "central ideal {{{}}} is not normal",
                pair.s
            );
            ensure!(
                axioms::is_normal_ideal(e, &pair.s_prime),
                "complement {{{}}} is not normal",
                pair.s_prime
            );
        }
    }
    Ok(())
}
