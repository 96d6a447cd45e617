//! Central elements, the summand maps they induce, the unit of the center,
//! and the split into a pseudoeffect part and a centerless part.

use thiserror::Error;

use crate::algebra::{Elem, FiniteGpea};
use crate::axioms;
use crate::exocenter::{self, ExoMap};
use crate::set::ElementSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CenterError {
    #[error("element {0} is not central")]
    NotCentral(Elem),
}

/// The center with its induced summand maps and unit.
#[derive(Debug, Clone)]
pub struct CenterData {
    pub gamma_set: ElementSet,
    /// `pi_of[i]` is the summand map of the i-th central element in
    /// ascending order.
    pub pi_of: Vec<(Elem, ExoMap)>,
    pub unit: Elem,
}

/// The four defining conditions of centrality for `c`, quantified over all
/// element pairs.
pub(crate) fn is_central_by_definition(e: &FiniteGpea, c: Elem) -> bool {
    // C1: every a splits as a1 + a2 with a1 <= c and a2 + c defined
    let c1 = e.elements().all(|a| {
        e.down_set(c).intersect(e.down_set(a)).iter().any(|a1| {
            let a2 = e.right_diff(a1, a).expect("a1 <= a");
            e.oplus(a2, c).is_some()
        })
    });
    // C2: a <= c and b + c defined force a orthogonal to b
    let c2 = e.down_set(c).iter().all(|a| {
        e.elements().all(|b| e.oplus(b, c).is_none() || e.perp(a, b))
    });
    // C3: sums of elements below c stay below c
    let c3 = e.down_set(c).iter().all(|a| {
        e.down_set(c).iter().all(|b| match e.oplus(a, b) {
            Some(v) => e.leq(v, c),
            None => true,
        })
    });
    // C4: a + c, b + c, a + b defined force a + b + c defined
    let c4 = e.elements().all(|a| {
        e.oplus(a, c).is_none()
            || e.elements().all(|b| {
                e.oplus(b, c).is_none()
                    || match e.oplus(a, b) {
                        Some(ab) => e.oplus(ab, c).is_some(),
                        None => true,
                    }
            })
    });
    c1 && c2 && c3 && c4
}

/// Does `E = E[0,c] (+) {f : f perp c}` hold as a direct sum? This is the
/// decomposition characterization of centrality, used as an independent
/// oracle against the definitional route.
pub(crate) fn is_central_by_decomposition(e: &FiniteGpea, c: Elem) -> bool {
    let n = e.order();
    let s = e.down_set(c).clone();
    let s_prime = ElementSet::from_iter(n, e.elements().filter(|&f| e.perp(f, c)));
    // orthogonality across the two parts
    for a in s.iter() {
        for b in s_prime.iter() {
            if !e.perp(a, b) {
                return false;
            }
        }
    }
    // unique coordinates for every element
    e.elements().all(|x| {
        let mut count = 0;
        for a1 in s.intersect(e.down_set(x)).iter() {
            let a2 = e.right_diff(a1, x).expect("a1 <= x");
            if s_prime.contains(a2) {
                count += 1;
            }
        }
        count == 1
    })
}

/// All central elements, by exhaustive quantification of the definition.
/// The decomposition characterization is recomputed as a tripwire; the two
/// can only diverge through an implementation fault.
pub fn central_elements(e: &FiniteGpea) -> ElementSet {
    let by_def =
        ElementSet::from_iter(e.order(), e.elements().filter(|&c| is_central_by_definition(e, c)));
    let by_split = ElementSet::from_iter(
        e.order(),
        e.elements().filter(|&c| is_central_by_decomposition(e, c)),
    );
    assert_eq!(
        by_def, by_split,
        "centrality routes disagree on {e:?}: definition {by_def:?} vs decomposition {by_split:?}"
    );
    by_def
}

/// The unique exocenter map with image `E[0,c]`, for central `c`.
pub fn pi_c(e: &FiniteGpea, c: Elem) -> Result<ExoMap, CenterError> {
    if !is_central_by_definition(e, c) {
        return Err(CenterError::NotCentral(c));
    }
    let pair = axioms::central_ideal_complement(e, e.down_set(c))
        .expect("the interval below a central element is a central ideal");
    Ok(ExoMap::new(pair.coords.iter().map(|&(a1, _)| a1).collect()))
}

/// The largest central element: the orthosum of a maximal pairwise-disjoint
/// family of nonzero central elements, greedily chosen in element order, and
/// cross-checked as the order maximum of the center.
pub fn center_unit(e: &FiniteGpea) -> Elem {
    let gamma = central_elements(e);
    let mut family: Vec<Elem> = Vec::new();
    for c in gamma.iter() {
        if c != 0 && family.iter().all(|&d| e.meet(c, d) == Some(0)) {
            family.push(c);
        }
    }
    let u = e.orthosum(&family).expect("a disjoint central family is orthosummable");
    debug_assert!(gamma.iter().all(|c| e.leq(c, u)), "unit must dominate the center");
    u
}

/// Split off the largest summand that is a pseudoeffect algebra: the
/// interval under the center's unit. The complementary part has trivial
/// center.
pub fn centerless_split(e: &FiniteGpea) -> (FiniteGpea, FiniteGpea) {
    let u = center_unit(e);
    let pi = pi_c(e, u).expect("the unit is central");
    let (pea_part, centerless_part, _) = exocenter::factor(e, &pi);
    (pea_part, centerless_part)
}

/// Full center data: the set, the maps, and the unit.
pub fn center_data(e: &FiniteGpea) -> CenterData {
    let gamma_set = central_elements(e);
    let pi_of = gamma_set
        .iter()
        .map(|c| (c, pi_c(e, c).expect("member of the center")))
        .collect();
    CenterData { gamma_set, pi_of, unit: center_unit(e) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::top_of;
    use crate::construct::{chain, direct_sum, from_sums, is_isomorphic};

    fn d4() -> FiniteGpea {
        from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap()
    }

    fn v3() -> FiniteGpea {
        from_sums(3, &[]).unwrap()
    }

    #[test]
    fn centers_of_small_models() {
        assert_eq!(central_elements(&d4()), ElementSet::full(4));
        assert_eq!(central_elements(&chain(3).unwrap()), ElementSet::from_iter(3, [0, 2]));
        assert_eq!(central_elements(&v3()), ElementSet::singleton(3, 0));
    }

    #[test]
    fn summand_maps() {
        let e = d4();
        assert!(pi_c(&e, 0).unwrap().is_zero());
        assert!(pi_c(&e, 3).unwrap().is_identity());
        assert_eq!(pi_c(&e, 1).unwrap().image(), &ElementSet::from_iter(4, [0, 1]));
        assert_eq!(pi_c(&v3(), 1), Err(CenterError::NotCentral(1)));
    }

    #[test]
    fn units() {
        assert_eq!(center_unit(&d4()), 3);
        assert_eq!(center_unit(&v3()), 0);
        let e3 = chain(3).unwrap();
        assert_eq!(Some(center_unit(&e3)), top_of(&e3));
    }

    #[test]
    fn splits() {
        let (pea, rest) = centerless_split(&d4());
        assert_eq!(pea.order(), 4);
        assert_eq!(rest.order(), 1);

        let (pea, rest) = centerless_split(&v3());
        assert_eq!(pea.order(), 1);
        assert!(is_isomorphic(&rest, &v3()).is_some());

        let (mix, _, _) = direct_sum(&chain(2).unwrap(), &v3());
        let (pea, rest) = centerless_split(&mix);
        assert!(is_isomorphic(&pea, &chain(2).unwrap()).is_some());
        assert!(is_isomorphic(&rest, &v3()).is_some());
        assert_eq!(central_elements(&rest).len(), 1);
    }
}
