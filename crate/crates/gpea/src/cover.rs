//! Exocentral covers: the least exocenter map fixing each element, the
//! induced hull system, orthogonality through disjoint covers, and the
//! central-orthocompleteness check that every finite model must pass.

use std::collections::BTreeSet;

use crate::algebra::{Elem, FiniteGpea};
use crate::exocenter::{self, ExoMap};

/// The family of covers, one per element, plus the set of distinct covers.
#[derive(Debug, Clone)]
pub struct CoverSystem {
    /// `gamma[e]` is the cover of `e`.
    pub gamma: Vec<ExoMap>,
    /// The distinct covers, ordered by image bitmask.
    pub theta: Vec<ExoMap>,
}

impl CoverSystem {
    pub fn cover(&self, e: Elem) -> &ExoMap {
        &self.gamma[e]
    }

    /// The covers as raw value tables, for the hull-system checker.
    pub fn as_value_tables(&self) -> Vec<Vec<Elem>> {
        self.gamma.iter().map(|g| g.values().to_vec()).collect()
    }
}

/// The least exocenter map fixing `e`: the meet of the fixing set.
///
/// Recomputed independently through summand images: the intersection of all
/// summand images containing `e` must be the image of the result, and must
/// itself be a summand. Divergence would be an implementation fault.
pub fn exocentral_cover(e: &FiniteGpea, x: Elem) -> ExoMap {
    let gex = exocenter::exocenter(e);
    cover_within(e, &gex, x)
}

fn cover_within(e: &FiniteGpea, gex: &[ExoMap], x: Elem) -> ExoMap {
    let mut acc = ExoMap::identity(e.order());
    for pi in gex {
        if pi.apply(x) == x {
            acc = acc.meet(pi);
        }
    }
    debug_assert_eq!(acc.apply(x), x, "the meet of the fixing set fixes the element");
    // independent route: smallest summand image containing the element
    let smallest_image = gex
        .iter()
        .filter(|pi| pi.image().contains(x))
        .map(|pi| pi.image().clone())
        .reduce(|a, b| a.intersect(&b))
        .expect("the identity fixes everything");
    debug_assert_eq!(
        &smallest_image,
        acc.image(),
        "cover image must be the least summand containing the element"
    );
    acc
}

/// All covers and the set of distinct ones.
pub fn cover_system(e: &FiniteGpea) -> CoverSystem {
    let gex = exocenter::exocenter(e);
    let gamma: Vec<ExoMap> = e.elements().map(|x| cover_within(e, &gex, x)).collect();
    let mut theta_set: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut theta = Vec::new();
    for g in &gamma {
        if theta_set.insert(g.sort_key()) {
            theta.push(g.clone());
        }
    }
    theta.sort_by_key(|m| m.sort_key());
    CoverSystem { gamma, theta }
}

/// A family is exocenter-orthogonal iff the covers of its members are
/// pairwise disjoint. Repeated nonzero entries force a self-disjoint nonzero
/// cover, so they always fail.
pub fn gex_orthogonal(e: &FiniteGpea, family: &[Elem]) -> bool {
    let covers = cover_system(e);
    gex_orthogonal_with(e, &covers, family)
}

fn gex_orthogonal_with(e: &FiniteGpea, covers: &CoverSystem, family: &[Elem]) -> bool {
    let _ = e;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let meet = covers.gamma[family[i]].meet(&covers.gamma[family[j]]);
            if !meet.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Evidence from the orthocompleteness check.
#[derive(Debug, Clone)]
pub struct CogpeaCertificate {
    pub holds: bool,
    /// Number of distinct orthogonal families inspected (as sets of distinct
    /// nonzero elements).
    pub families_checked: usize,
    /// The inclusion-maximal orthogonal families.
    pub maximal_families: Vec<Vec<Elem>>,
    /// A failing family and the reason, when `holds` is false.
    pub failure: Option<(Vec<Elem>, String)>,
}

/// Check both orthocompleteness conditions over every orthogonal family.
///
/// Families reduce to sets of distinct nonzero elements: a repeated nonzero
/// element would need a cover disjoint from itself, forcing the element to
/// be zero, and zero entries never change an orthosum. Every valid finite
/// model must pass; a failure is a defect, not a property of the input.
pub fn is_cogpea(e: &FiniteGpea) -> CogpeaCertificate {
    // the reduction itself, as an executable check
    let covers = cover_system(e);
    for x in e.elements() {
        if covers.gamma[x].is_zero() && x != 0 {
            return CogpeaCertificate {
                holds: false,
                families_checked: 0,
                maximal_families: vec![],
                failure: Some((vec![x], "nonzero element with zero cover".into())),
            };
        }
    }

    let families = orthogonal_families(e, &covers);

    let mut failure = None;
    'families: for family in &families {
        // CO1: orthogonal families are orthosummable
        let total = match e.orthosum(family) {
            Some(t) => t,
            None => {
                failure = Some((family.clone(), "family is not orthosummable".into()));
                break;
            }
        };
        // CO2: summability with a common companion passes to the orthosum,
        // on either side
        for x in e.elements() {
            if family.iter().all(|&f| e.oplus(x, f).is_some()) && e.oplus(x, total).is_none() {
                failure = Some((family.clone(), format!("left companion {x} fails CO2")));
                break 'families;
            }
            if family.iter().all(|&f| e.oplus(f, x).is_some()) && e.oplus(total, x).is_none() {
                failure = Some((family.clone(), format!("right companion {x} fails CO2")));
                break 'families;
            }
        }
    }

    let maximal_families = families
        .iter()
        .filter(|f| {
            !families.iter().any(|g| {
                g.len() > f.len() && f.iter().all(|x| g.contains(x))
            })
        })
        .cloned()
        .collect();

    CogpeaCertificate {
        holds: failure.is_none(),
        families_checked: families.len(),
        maximal_families,
        failure,
    }
}

/// Every nonempty set of distinct nonzero elements with pairwise disjoint
/// covers, in lexicographic order.
pub(crate) fn orthogonal_families(e: &FiniteGpea, covers: &CoverSystem) -> Vec<Vec<Elem>> {
    let mut families = Vec::new();
    let mut stack = Vec::new();
    collect_orthogonal(e, covers, 1, &mut stack, &mut families);
    families
}

fn collect_orthogonal(
    e: &FiniteGpea,
    covers: &CoverSystem,
    from: Elem,
    stack: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
) {
    if !stack.is_empty() {
        out.push(stack.clone());
    }
    for x in from..e.order() {
        if stack.iter().all(|&y| covers.gamma[x].meet(&covers.gamma[y]).is_zero()) {
            stack.push(x);
            collect_orthogonal(e, covers, x + 1, stack, out);
            stack.pop();
        }
    }
}

/// Hull-system conditions for an arbitrary assignment of self-maps:
/// the zero element gets the zero map, each map fixes its element, and
/// `eta_{eta_e f} = eta_e  compose  eta_f`.
pub fn is_hull_system(e: &FiniteGpea, eta: &[Vec<Elem>]) -> bool {
    let n = e.order();
    if eta.len() != n || eta.iter().any(|m| m.len() != n || m.iter().any(|&v| v >= n)) {
        return false;
    }
    if eta[0].iter().any(|&v| v != 0) {
        return false;
    }
    if (0..n).any(|x| eta[x][x] != x) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|f| {
            let lhs = &eta[eta[x][f]];
            (0..n).all(|g| lhs[g] == eta[x][eta[f][g]])
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center;
    use crate::construct::from_sums;

    fn d4() -> FiniteGpea {
        from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap()
    }

    fn v3() -> FiniteGpea {
        from_sums(3, &[]).unwrap()
    }

    #[test]
    fn covers_of_the_diamond() {
        let e = d4();
        assert!(exocentral_cover(&e, 0).is_zero());
        let pi1 = center::pi_c(&e, 1).unwrap();
        assert_eq!(exocentral_cover(&e, 1), pi1);
        let system = cover_system(&e);
        assert_eq!(system.theta.len(), 4);
    }

    #[test]
    fn covers_of_the_vee() {
        let v = v3();
        assert!(exocentral_cover(&v, 1).is_identity());
        assert!(exocentral_cover(&v, 2).is_identity());
        assert_eq!(cover_system(&v).theta.len(), 2);
    }

    #[test]
    fn orthogonality() {
        let e = d4();
        assert!(gex_orthogonal(&e, &[1]));
        assert!(gex_orthogonal(&e, &[1, 2]));
        assert!(!gex_orthogonal(&e, &[1, 3]));
        assert!(!gex_orthogonal(&v3(), &[1, 2]));
        // repeated nonzero entries always fail
        assert!(!gex_orthogonal(&e, &[1, 1]));
    }

    #[test]
    fn orthocompleteness_holds_with_certificate() {
        let cert = is_cogpea(&d4());
        assert!(cert.holds);
        assert_eq!(cert.families_checked, 4);
        assert_eq!(cert.maximal_families, vec![vec![1, 2], vec![3]]);
        assert!(is_cogpea(&v3()).holds);
    }

    #[test]
    fn hull_system_checks() {
        let e = d4();
        assert!(is_hull_system(&e, &cover_system(&e).as_value_tables()));
        // constant identity fails the zero condition on anything nontrivial
        let ident: Vec<Vec<Elem>> = (0..4).map(|_| (0..4).collect()).collect();
        assert!(!is_hull_system(&e, &ident));
        let e1 = crate::construct::chain(1).unwrap();
        assert!(is_hull_system(&e1, &[vec![0]]));
    }
}
