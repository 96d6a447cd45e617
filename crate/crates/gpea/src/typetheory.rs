//! Closure operators on subsets, type-determining sets, the distinguished
//! covers they induce, type predicates for summands, and the decompositions
//! built from them.

use thiserror::Error;

use crate::algebra::{Elem, FiniteGpea};
use crate::center;
use crate::construct;
use crate::cover::{self, CoverSystem};
use crate::exocenter::ExoMap;
use crate::set::ElementSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TypeError {
    #[error("the set {{{0}}} is not type-determining")]
    NotTd(ElementSet),
    #[error("the first set {{{0}}} is not contained in the second {{{1}}}")]
    NotNested(ElementSet, ElementSet),
    #[error("the map is not a cover (not in the cover family)")]
    NotACover,
}

/// Everything derived from a type-determining set: its central part, the
/// distinguished generators and the two induced covers.
#[derive(Debug, Clone)]
pub struct TdContext {
    pub k_set: ElementSet,
    /// The central members of `k_set`.
    pub k_tilde_set: ElementSet,
    /// Orthosum of a maximal cover-orthogonal family inside `k_set`; its
    /// cover equals `gamma_k`.
    pub k_star: Elem,
    pub k_tilde: Elem,
    pub gamma_k: ExoMap,
    pub gamma_k_tilde: ExoMap,
    covers: CoverSystem,
}

/// Position of an exocenter map relative to the two distinguished covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeFlags {
    pub type_k: bool,
    pub locally_type_k: bool,
    pub purely_non_k: bool,
    pub properly_non_k: bool,
}

/// The three-way decomposition for one set plus the refined six-way report
/// for a nested pair.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub pi1: ExoMap,
    pub pi2: ExoMap,
    pub pi3: ExoMap,
    pub pi_i: ExoMap,
    pub pi_ii: ExoMap,
    pub pi_iii: ExoMap,
    pub pi_i_f: ExoMap,
    pub pi_i_not_f: ExoMap,
    pub pi_ii_f: ExoMap,
    pub pi_ii_not_f: ExoMap,
    /// `tau[i][j]` is the meet of the i-th map for the first set with the
    /// j-th map for the second.
    pub tau: [[ExoMap; 3]; 3],
}

/// Closure under orthosums of cover-orthogonal families, as a binary
/// fixpoint: sums of cover-disjoint pairs already in the set are adjoined
/// until stable. Sound because the cover of such a sum is the join of the
/// covers. The empty set closes to `{0}`.
pub fn closure_gamma(e: &FiniteGpea, q: &ElementSet) -> ElementSet {
    let covers = cover::cover_system(e);
    closure_gamma_with(e, &covers, q)
}

pub(crate) fn closure_gamma_with(e: &FiniteGpea, covers: &CoverSystem, q: &ElementSet) -> ElementSet {
    let mut p = q.clone();
    p.insert(0);
    loop {
        let mut grew = false;
        let members: Vec<Elem> = p.iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i..] {
                if covers.gamma[x].meet(&covers.gamma[y]).is_zero() {
                    let v = e
                        .oplus(x, y)
                        .expect("cover-disjoint elements are orthogonal in a valid model");
                    if !p.contains(v) {
                        p.insert(v);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return p;
        }
    }
}

/// `{cover_e(q)}` over all elements and members of `q`.
pub fn gamma_image(e: &FiniteGpea, q: &ElementSet) -> ElementSet {
    let covers = cover::cover_system(e);
    gamma_image_with(e, &covers, q)
}

pub(crate) fn gamma_image_with(e: &FiniteGpea, covers: &CoverSystem, q: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(e.order());
    for x in e.elements() {
        for qq in q.iter() {
            out.insert(covers.gamma[x].apply(qq));
        }
    }
    out
}

/// Union of the intervals below members of `q`.
pub fn downset(e: &FiniteGpea, q: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(e.order());
    for qq in q.iter() {
        out = out.union(e.down_set(qq));
    }
    out
}

/// Elements disjoint from everything in `q`. The empty set maps to the whole
/// carrier.
pub fn disjoint_complement(e: &FiniteGpea, q: &ElementSet) -> ElementSet {
    ElementSet::from_iter(
        e.order(),
        e.elements().filter(|&x| q.iter().all(|qq| e.meet(x, qq) == Some(0))),
    )
}

/// `q''`: the double disjoint complement.
pub fn double_complement(e: &FiniteGpea, q: &ElementSet) -> ElementSet {
    disjoint_complement(e, &disjoint_complement(e, q))
}

/// Type-determining: closed under cover-orthogonal orthosums and under
/// cover images.
pub fn is_td(e: &FiniteGpea, k: &ElementSet) -> bool {
    let covers = cover::cover_system(e);
    is_td_with(e, &covers, k)
}

pub(crate) fn is_td_with(e: &FiniteGpea, covers: &CoverSystem, k: &ElementSet) -> bool {
    *k == closure_gamma_with(e, covers, k) && *k == gamma_image_with(e, covers, k)
}

/// Strongly type-determining: closed under cover-orthogonal orthosums and
/// downward.
pub fn is_std(e: &FiniteGpea, k: &ElementSet) -> bool {
    let covers = cover::cover_system(e);
    is_std_with(e, &covers, k)
}

pub(crate) fn is_std_with(e: &FiniteGpea, covers: &CoverSystem, k: &ElementSet) -> bool {
    *k == closure_gamma_with(e, covers, k) && *k == downset(e, k)
}

pub(crate) fn td_generated_with(e: &FiniteGpea, covers: &CoverSystem, k: &ElementSet) -> ElementSet {
    closure_gamma_with(e, covers, &gamma_image_with(e, covers, k))
}

pub(crate) fn std_generated_with(e: &FiniteGpea, covers: &CoverSystem, k: &ElementSet) -> ElementSet {
    closure_gamma_with(e, covers, &downset(e, k))
}

/// The least type-determining set containing `k`.
pub fn td_generated(e: &FiniteGpea, k: &ElementSet) -> ElementSet {
    let covers = cover::cover_system(e);
    closure_gamma_with(e, &covers, &gamma_image_with(e, &covers, k))
}

/// The least strongly type-determining set containing `k`.
pub fn std_generated(e: &FiniteGpea, k: &ElementSet) -> ElementSet {
    let covers = cover::cover_system(e);
    closure_gamma_with(e, &covers, &downset(e, k))
}

/// Elements whose interval algebra satisfies an isomorphism-invariant
/// predicate. For a predicate closed under summands, products and
/// isomorphism this yields a type-determining set, which callers can verify
/// a posteriori.
pub fn tdset_from_pea_class(
    e: &FiniteGpea,
    predicate: impl Fn(&FiniteGpea) -> bool,
) -> ElementSet {
    ElementSet::from_iter(
        e.order(),
        e.elements().filter(|&k| predicate(&construct::interval_pea(e, k))),
    )
}

/// Assemble the context for a type-determining set: its central part, the
/// greedy generators and both covers. Rejects sets that are not
/// type-determining.
pub fn td_context(e: &FiniteGpea, k: &ElementSet) -> Result<TdContext, TypeError> {
    let covers = cover::cover_system(e);
    if !is_td_with(e, &covers, k) {
        return Err(TypeError::NotTd(k.clone()));
    }
    let gamma_set = center::central_elements(e);
    let k_tilde_set = k.intersect(&gamma_set);

    let join_of_covers = |members: &ElementSet| -> ExoMap {
        members
            .iter()
            .map(|x| covers.gamma[x].clone())
            .fold(ExoMap::zero(e.order()), |acc, g| acc.join(&g, e))
    };
    let greedy_star = |members: &ElementSet| -> Elem {
        let mut family: Vec<Elem> = Vec::new();
        for x in members.iter() {
            if x == 0 {
                continue;
            }
            if family.iter().all(|&y| covers.gamma[x].meet(&covers.gamma[y]).is_zero()) {
                family.push(x);
            }
        }
        e.orthosum(&family).expect("a cover-orthogonal family is orthosummable")
    };

    let gamma_k = join_of_covers(k);
    let k_star = greedy_star(k);
    assert!(k.contains(k_star), "the orthosum of a family in a closed set stays inside");
    assert_eq!(covers.gamma[k_star], gamma_k, "the greedy generator must realize the join");

    let gamma_k_tilde = join_of_covers(&k_tilde_set);
    let k_tilde = greedy_star(&k_tilde_set);
    assert!(k_tilde_set.contains(k_tilde));
    assert_eq!(covers.gamma[k_tilde], gamma_k_tilde);

    Ok(TdContext {
        k_set: k.clone(),
        k_tilde_set,
        k_star,
        k_tilde,
        gamma_k,
        gamma_k_tilde,
        covers,
    })
}

impl TdContext {
    pub fn covers(&self) -> &CoverSystem {
        &self.covers
    }

    fn in_theta(&self, pi: &ExoMap) -> bool {
        self.covers.theta.contains(pi)
    }

    /// Classify an exocenter map against the two distinguished covers, using
    /// the cover-family membership characterizations.
    pub fn classify(&self, e: &FiniteGpea, pi: &ExoMap) -> TypeFlags {
        let in_theta = self.in_theta(pi);
        TypeFlags {
            type_k: in_theta && pi.leq(&self.gamma_k_tilde, e),
            locally_type_k: in_theta && pi.leq(&self.gamma_k, e),
            purely_non_k: pi.meet(&self.gamma_k).is_zero(),
            properly_non_k: pi.meet(&self.gamma_k_tilde).is_zero(),
        }
    }

    /// `pi k_star`, the canonical member of the set inside the summand.
    /// Only covers qualify.
    pub fn k_sharp(&self, pi: &ExoMap) -> Result<Elem, TypeError> {
        if !self.in_theta(pi) {
            return Err(TypeError::NotACover);
        }
        Ok(pi.apply(self.k_star))
    }
}

/// An element is faithful when its cover is the identity.
pub fn faithful(e: &FiniteGpea, f: Elem) -> bool {
    cover::exocentral_cover(e, f).is_identity()
}

/// The canonical disjoint triple with join 1: the summand of full type, the
/// locally-typed but properly untyped remainder, and the purely untyped
/// rest.
pub fn fundamental_decomposition(e: &FiniteGpea, ctx: &TdContext) -> (ExoMap, ExoMap, ExoMap) {
    let pi1 = ctx.gamma_k_tilde.clone();
    let pi2 = ctx.gamma_k.meet(&ctx.gamma_k_tilde.complement(e));
    let pi3 = ctx.gamma_k.complement(e);
    (pi1, pi2, pi3)
}

/// The refined decomposition for a nested pair of type-determining sets.
pub fn type_i_ii_iii(
    e: &FiniteGpea,
    k: &ElementSet,
    f: &ElementSet,
) -> Result<DecompositionReport, TypeError> {
    if !k.is_subset(f) {
        return Err(TypeError::NotNested(k.clone(), f.clone()));
    }
    let ctx_k = td_context(e, k)?;
    let ctx_f = td_context(e, f)?;

    let (pi1, pi2, pi3) = fundamental_decomposition(e, &ctx_k);
    let (xi1, xi2, xi3) = fundamental_decomposition(e, &ctx_f);
    let pis = [&pi1, &pi2, &pi3];
    let xis = [&xi1, &xi2, &xi3];
    let tau: [[ExoMap; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| pis[i].meet(xis[j])));
    // nesting kills the upper-triangular interactions
    assert!(tau[0][1].is_zero() && tau[0][2].is_zero() && tau[1][2].is_zero());

    let gk = &ctx_k.gamma_k;
    let gf = &ctx_f.gamma_k;
    let gft = &ctx_f.gamma_k_tilde;
    let not = |m: &ExoMap| m.complement(e);

    Ok(DecompositionReport {
        pi_i: gk.clone(),
        pi_ii: gf.meet(&not(gk)),
        pi_iii: not(gf),
        pi_i_f: gk.meet(gft),
        pi_i_not_f: gk.meet(&not(gft)),
        pi_ii_f: gft.meet(&not(gk)),
        pi_ii_not_f: gf.meet(&not(gft)).meet(&not(gk)),
        pi1,
        pi2,
        pi3,
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::from_sums;

    fn d4() -> FiniteGpea {
        from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap()
    }

    fn v3() -> FiniteGpea {
        from_sums(3, &[]).unwrap()
    }

    #[test]
    fn closures() {
        let e = d4();
        assert_eq!(closure_gamma(&e, &ElementSet::empty(4)), ElementSet::singleton(4, 0));
        assert_eq!(closure_gamma(&e, &ElementSet::from_iter(4, [1, 2])), ElementSet::full(4));
        let v = v3();
        assert_eq!(
            closure_gamma(&v, &ElementSet::from_iter(3, [1, 2])),
            ElementSet::full(3)
        );
        assert_eq!(gamma_image(&e, &ElementSet::singleton(4, 0)), ElementSet::singleton(4, 0));
        assert_eq!(disjoint_complement(&e, &ElementSet::empty(4)), ElementSet::full(4));
        assert_eq!(
            disjoint_complement(&e, &ElementSet::singleton(4, 1)),
            ElementSet::from_iter(4, [0, 2])
        );
    }

    #[test]
    fn td_predicates() {
        let e = d4();
        assert!(is_td(&e, &ElementSet::singleton(4, 0)));
        assert!(is_td(&e, &center::central_elements(&e)));
        assert!(!is_td(&e, &ElementSet::from_iter(4, [0, 1, 2])));
        assert_eq!(td_generated(&e, &ElementSet::singleton(4, 3)), ElementSet::full(4));
    }

    #[test]
    fn pea_class_sets() {
        let e = d4();
        let commutative = tdset_from_pea_class(&e, crate::axioms::is_commutative);
        assert_eq!(commutative, ElementSet::full(4));
        assert!(is_td(&e, &commutative));
        let everything = tdset_from_pea_class(&e, |_| true);
        assert_eq!(everything, ElementSet::full(4));
    }

    #[test]
    fn contexts_and_decompositions() {
        let e = d4();
        let ctx = td_context(&e, &ElementSet::full(4)).unwrap();
        assert!(ctx.gamma_k.is_identity());
        assert!(ctx.gamma_k_tilde.is_identity());
        assert_eq!(ctx.k_tilde_set, ElementSet::full(4));
        let (p1, p2, p3) = fundamental_decomposition(&e, &ctx);
        assert!(p1.is_identity() && p2.is_zero() && p3.is_zero());

        let v = v3();
        let ctx = td_context(&v, &ElementSet::full(3)).unwrap();
        assert!(ctx.gamma_k.is_identity());
        assert!(ctx.gamma_k_tilde.is_zero());
        assert_eq!(ctx.k_tilde_set, ElementSet::singleton(3, 0));
        let (p1, p2, p3) = fundamental_decomposition(&v, &ctx);
        assert!(p1.is_zero() && p2.is_identity() && p3.is_zero());

        let zero_ctx = td_context(&v, &ElementSet::singleton(3, 0)).unwrap();
        assert!(zero_ctx.gamma_k.is_zero());
        assert_eq!(zero_ctx.k_star, 0);
        let (p1, p2, p3) = fundamental_decomposition(&v, &zero_ctx);
        assert!(p1.is_zero() && p2.is_zero() && p3.is_identity());

        assert_eq!(
            td_context(&e, &ElementSet::from_iter(4, [0, 1, 2])).err(),
            Some(TypeError::NotTd(ElementSet::from_iter(4, [0, 1, 2])))
        );
    }

    #[test]
    fn classification() {
        let v = v3();
        let ctx = td_context(&v, &ElementSet::full(3)).unwrap();
        let zero_flags = ctx.classify(&v, &ExoMap::zero(3));
        assert!(
            zero_flags.type_k
                && zero_flags.locally_type_k
                && zero_flags.purely_non_k
                && zero_flags.properly_non_k
        );
        let id_flags = ctx.classify(&v, &ExoMap::identity(3));
        assert!(id_flags.locally_type_k && !id_flags.type_k);
        let complement_flags = ctx.classify(&v, &ctx.gamma_k.complement(&v));
        assert!(complement_flags.purely_non_k);
    }

    #[test]
    fn sharp_and_faithful() {
        let v = v3();
        assert!(faithful(&v, 1));
        assert!(!faithful(&d4(), 1));
        let ctx = td_context(&v, &ElementSet::full(3)).unwrap();
        assert_eq!(ctx.k_sharp(&ctx.gamma_k.clone()).unwrap(), ctx.k_star);
        // the complement of the identity is the zero map, which is a cover
        assert_eq!(ctx.k_sharp(&ExoMap::zero(3)).unwrap(), 0);
    }

    #[test]
    fn nested_decomposition() {
        let v = v3();
        let all = ElementSet::full(3);
        let zero = ElementSet::singleton(3, 0);
        let report = type_i_ii_iii(&v, &zero, &all).unwrap();
        assert!(report.pi_i.is_zero());
        assert!(report.pi_ii.is_identity());
        assert!(report.pi_iii.is_zero());
        assert!(report.pi_ii_not_f.is_identity());

        let same = type_i_ii_iii(&v, &all, &all).unwrap();
        assert!(same.pi_ii.is_zero());

        let degenerate = type_i_ii_iii(&v, &zero, &zero).unwrap();
        assert!(degenerate.pi_iii.is_identity());

        assert!(type_i_ii_iii(&v, &all, &zero).is_err());
    }
}
