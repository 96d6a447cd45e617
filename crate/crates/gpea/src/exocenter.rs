//! The exocenter: idempotent decreasing endomorphisms whose images are
//! exactly the direct summands. Enumeration goes through candidate summand
//! ideals rather than all maps, which the summand correspondence makes
//! complete.

use crate::algebra::{Elem, FiniteGpea};
use crate::axioms;
use crate::construct::{self, Morphism};
use crate::set::ElementSet;

/// An element-indexed map in the exocenter, with its fixed-point image.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExoMap {
    values: Vec<Elem>,
    image: ElementSet,
}

impl ExoMap {
    pub fn new(values: Vec<Elem>) -> Self {
        let n = values.len();
        let image = ElementSet::from_iter(n, (0..n).filter(|&e| values[e] == e));
        ExoMap { values, image }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect())
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.values[e]
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    /// The image, which for exocenter maps is also the fixed-point set.
    pub fn image(&self) -> &ElementSet {
        &self.image
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(e, &v)| e == v)
    }

    /// The complementary map `e -> (pi e)/e`.
    pub fn complement(&self, e: &FiniteGpea) -> ExoMap {
        let values = e
            .elements()
            .map(|x| {
                e.right_diff(self.values[x], x)
                    .expect("exocenter maps are decreasing, so the difference exists")
            })
            .collect();
        ExoMap::new(values)
    }

    /// Meet in the exocenter: composition (which commutes).
    pub fn meet(&self, other: &ExoMap) -> ExoMap {
        ExoMap::new(other.values.iter().map(|&v| self.values[v]).collect())
    }

    /// Join via De Morgan from meet and complement.
    pub fn join(&self, other: &ExoMap, e: &FiniteGpea) -> ExoMap {
        self.complement(e).meet(&other.complement(e)).complement(e)
    }

    /// The exocenter order, pointwise.
    pub fn leq(&self, other: &ExoMap, e: &FiniteGpea) -> bool {
        e.elements().all(|x| e.leq(self.values[x], other.values[x]))
    }

    /// Canonical sort key: the image bitmask.
    pub fn sort_key(&self) -> Vec<u64> {
        self.image.mask_key()
    }
}

/// Validate the four exocenter conditions on an arbitrary value table:
/// endomorphism, idempotent, decreasing, and the orthogonality condition
/// (`pi e = e` and `pi f = 0` force `e` orthogonal to `f`).
pub fn is_exomap(e: &FiniteGpea, values: &[Elem]) -> bool {
    let n = e.order();
    if values.len() != n || values.iter().any(|&v| v >= n) {
        return false;
    }
    let endo = e.elements().all(|a| {
        e.elements().all(|b| match e.oplus(a, b) {
            Some(v) => e.oplus(values[a], values[b]) == Some(values[v]),
            None => true,
        })
    });
    let idempotent = e.elements().all(|a| values[values[a]] == values[a]);
    let decreasing = e.elements().all(|a| e.leq(values[a], a));
    let orthogonality = e.elements().all(|a| {
        values[a] != a
            || e.elements().all(|b| values[b] != 0 || e.perp(a, b))
    });
    endo && idempotent && decreasing && orthogonality
}

/// All down-closed subsets of the carrier, in a deterministic order.
pub fn down_sets(e: &FiniteGpea) -> Vec<ElementSet> {
    let order = e.linear_extension();
    let n = e.order();
    let mut out = Vec::new();
    let mut current = ElementSet::empty(n);
    fn rec(
        e: &FiniteGpea,
        order: &[Elem],
        i: usize,
        current: &mut ElementSet,
        out: &mut Vec<ElementSet>,
    ) {
        if i == order.len() {
            out.push(current.clone());
            return;
        }
        let x = order[i];
        rec(e, order, i + 1, current, out);
        let strictly_below = e.down_set(x).difference(&ElementSet::singleton(e.order(), x));
        if strictly_below.is_subset(current) {
            current.insert(x);
            rec(e, order, i + 1, current, out);
            current.remove(x);
        }
    }
    rec(e, &order, 0, &mut current, &mut out);
    out.sort();
    out
}

/// All ideals: nonempty down-sets closed under defined sums.
pub fn ideals(e: &FiniteGpea) -> Vec<ElementSet> {
    down_sets(e).into_iter().filter(|s| axioms::is_ideal(e, s)).collect()
}

/// Is `s` closed under existing suprema and infima of its nonempty subsets?
///
/// Checked through the largest candidate family: a supremum `q` outside `s`
/// of some family inside `s` forces `sup(s & down(q)) = q`, so only those
/// maximal families need inspection.
pub fn is_sup_inf_closed(e: &FiniteGpea, s: &ElementSet) -> bool {
    for q in e.elements() {
        if s.contains(q) {
            continue;
        }
        let below = s.intersect(e.down_set(q));
        if !below.is_empty() && e.sup(&below) == Some(q) {
            return false;
        }
        let above = s.intersect(e.up_set(q));
        if !above.is_empty() && e.inf(&above) == Some(q) {
            return false;
        }
    }
    true
}

/// The full exocenter, deduplicated and ordered by image bitmask. Always
/// contains the zero map and the identity.
pub fn exocenter(e: &FiniteGpea) -> Vec<ExoMap> {
    let mut out: Vec<ExoMap> = Vec::new();
    for s in ideals(e) {
        if !is_sup_inf_closed(e, &s) {
            continue;
        }
        if let Some(pair) = axioms::central_ideal_complement(e, &s) {
            let values: Vec<Elem> = pair.coords.iter().map(|&(a1, _)| a1).collect();
            let map = ExoMap::new(values);
            debug_assert!(is_exomap(e, map.values()));
            debug_assert_eq!(*map.image(), s);
            out.push(map);
        }
    }
    out.sort_by_key(|m| m.sort_key());
    out.dedup();
    out
}

/// Split the algebra along a summand: both restricted algebras plus the
/// coordinate isomorphism onto their direct sum.
pub fn factor(e: &FiniteGpea, pi: &ExoMap) -> (FiniteGpea, FiniteGpea, Morphism) {
    let (part1, carrier1) = sub_algebra(e, pi.image());
    let pi_prime = pi.complement(e);
    let (part2, carrier2) = sub_algebra(e, pi_prime.image());
    let (total, _, _) = construct::direct_sum(&part1, &part2);
    let pos = |carrier: &[Elem], x: Elem| {
        carrier.binary_search(&x).expect("coordinate lies in the summand")
    };
    let map = e
        .elements()
        .map(|x| pos(&carrier1, pi.apply(x)) * part2.order() + pos(&carrier2, pi_prime.apply(x)))
        .collect();
    let morphism = Morphism { source: e.clone(), target: total, map };
    (part1, part2, morphism)
}

/// Restrict the structure to a sum-closed down-set (an ideal), relabelling
/// the carrier densely in ascending order.
pub fn sub_algebra(e: &FiniteGpea, s: &ElementSet) -> (FiniteGpea, Vec<Elem>) {
    let carrier: Vec<Elem> = s.iter().collect();
    let pos = |x: Elem| carrier.binary_search(&x).expect("element of the ideal");
    let mut sums = Vec::new();
    for (i, &a) in carrier.iter().enumerate() {
        for (j, &b) in carrier.iter().enumerate() {
            if i == 0 || j == 0 {
                continue;
            }
            if let Some(v) = e.oplus(a, b) {
                sums.push((i, j, pos(v)));
            }
        }
    }
    let sub = construct::from_sums(carrier.len(), &sums)
        .expect("an ideal restriction of a valid algebra validates");
    (sub, carrier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{chain, from_sums, is_isomorphic};

    fn d4() -> FiniteGpea {
        from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap()
    }

    #[test]
    fn identity_and_zero_are_exomaps() {
        let e = d4();
        assert!(is_exomap(&e, ExoMap::identity(4).values()));
        assert!(is_exomap(&e, ExoMap::zero(4).values()));
        // fixing {0,1} but collapsing 2 and 3 onto 1 is not decreasing
        assert!(!is_exomap(&e, &[0, 1, 1, 1]));
    }

    #[test]
    fn exocenter_sizes() {
        assert_eq!(exocenter(&chain(3).unwrap()).len(), 2);
        assert_eq!(exocenter(&d4()).len(), 4);
        let v3 = from_sums(3, &[]).unwrap();
        let gex = exocenter(&v3);
        assert_eq!(gex.len(), 2);
        assert!(gex[0].is_zero() && gex[1].is_identity());
    }

    #[test]
    fn boolean_operations() {
        let e = d4();
        let gex = exocenter(&e);
        let id = ExoMap::identity(4);
        for pi in &gex {
            assert_eq!(pi.meet(&id), *pi);
            assert_eq!(pi.complement(&e).complement(&e), *pi);
        }
        let proper: Vec<&ExoMap> =
            gex.iter().filter(|m| !m.is_zero() && !m.is_identity()).collect();
        assert_eq!(proper.len(), 2);
        assert!(proper[0].meet(proper[1]).is_zero());
        assert!(proper[0].join(proper[1], &e).is_identity());
    }

    #[test]
    fn factoring_the_diamond() {
        let e = d4();
        let gex = exocenter(&e);
        let pi = gex.iter().find(|m| m.image().len() == 2).unwrap();
        let (p1, p2, phi) = factor(&e, pi);
        assert!(is_isomorphic(&p1, &chain(2).unwrap()).is_some());
        assert!(is_isomorphic(&p2, &chain(2).unwrap()).is_some());
        assert!(phi.is_isomorphism());

        let (whole, trivial, id_morph) = factor(&e, &ExoMap::identity(4));
        assert_eq!(whole.order(), 4);
        assert_eq!(trivial.order(), 1);
        assert!(id_morph.is_isomorphism());
    }
}
