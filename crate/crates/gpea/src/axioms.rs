//! Validators: the five table axioms, top detection, commutativity, ideals,
//! normal ideals, and central ideals with their coordinate decompositions.

use std::fmt;

use crate::algebra::{Elem, FiniteGpea, SumTable};
use crate::set::ElementSet;

/// Axiom tags used in violation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// Associativity: `(a+b)+c` exists iff `a+(b+c)` exists, and they agree.
    Gpea1,
    /// Conjugacy: `a+b = d+a = b+e` for some `d`, `e`.
    Gpea2,
    /// Cancellation on either side.
    Gpea3,
    /// Positivity: `a+b = 0` only for `a = b = 0`.
    Gpea4,
    /// Zero element: `a+0 = 0+a = a`.
    Gpea5,
}

impl Axiom {
    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Gpea1 => "GPEA1",
            Axiom::Gpea2 => "GPEA2",
            Axiom::Gpea3 => "GPEA3",
            Axiom::Gpea4 => "GPEA4",
            Axiom::Gpea5 => "GPEA5",
        }
    }
}

/// One violated axiom instance with its witness elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.axiom.tag())?;
        for (i, e) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All violations found in a table, in a deterministic order: by axiom, then
/// lexicographically by witness. Empty iff the table is a valid instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// The lexicographically first witness for a given axiom, if violated.
    pub fn first_witness(&self, axiom: Axiom) -> Option<&[Elem]> {
        self.violations.iter().find(|v| v.axiom == axiom).map(|v| v.witness.as_slice())
    }

    fn push(&mut self, axiom: Axiom, witness: Vec<Elem>) {
        self.violations.push(Violation { axiom, witness });
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Check every instance of the five axioms on a raw table.
///
/// Witness tuples are emitted in lexicographic scan order, so the first
/// witness per axiom is minimal and reports diff cleanly across runs.
pub fn check_gpea(table: &SumTable) -> ViolationReport {
    let n = table.order();
    let t = |a: Elem, b: Elem| table.get(a, b);
    let mut report = ViolationReport::default();

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = t(a, b).and_then(|s| t(s, c));
                let rhs = t(b, c).and_then(|s| t(a, s));
                if lhs != rhs {
                    report.push(Axiom::Gpea1, vec![a, b, c]);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if let Some(s) = t(a, b) {
                let left = (0..n).any(|d| t(d, a) == Some(s));
                let right = (0..n).any(|e| t(b, e) == Some(s));
                if !left || !right {
                    report.push(Axiom::Gpea2, vec![a, b]);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                if t(a, b).is_some() && t(a, b) == t(a, c) {
                    report.push(Axiom::Gpea3, vec![a, b, c]);
                }
                if t(b, a).is_some() && t(b, a) == t(c, a) {
                    report.push(Axiom::Gpea3, vec![b, c, a]);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if t(a, b) == Some(0) && (a, b) != (0, 0) {
                report.push(Axiom::Gpea4, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        if t(a, 0) != Some(a) {
            report.push(Axiom::Gpea5, vec![a, 0]);
        }
        if t(0, a) != Some(a) {
            report.push(Axiom::Gpea5, vec![0, a]);
        }
    }

    report.violations.sort_by(|x, y| (x.axiom, &x.witness).cmp(&(y.axiom, &y.witness)));
    report
}

/// Greatest element under the derived order, if one exists. An algebra with a
/// top is exactly a pseudoeffect algebra.
pub fn top_of(e: &FiniteGpea) -> Option<Elem> {
    let all = ElementSet::full(e.order());
    e.elements().find(|&t| all.is_subset(e.down_set(t)))
}

/// True iff every defined sum is symmetric, i.e. the algebra is a
/// generalized effect algebra.
pub fn is_commutative(e: &FiniteGpea) -> bool {
    e.elements().all(|a| {
        e.elements().all(|b| match e.oplus(a, b) {
            Some(v) => e.oplus(b, a) == Some(v),
            None => true,
        })
    })
}

/// Down-closed (I1) and closed under defined sums (I2). Ideals are nonempty.
pub fn is_ideal(e: &FiniteGpea, s: &ElementSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let down_closed = s.iter().all(|a| e.down_set(a).is_subset(s));
    let sum_closed = s.iter().all(|a| {
        s.iter().all(|b| match e.oplus(a, b) {
            Some(v) => s.contains(v),
            None => true,
        })
    });
    down_closed && sum_closed
}

/// An ideal respecting conjugate translations: `a+x = y+a` puts `x` and `y`
/// in the ideal together.
pub fn is_normal_ideal(e: &FiniteGpea, s: &ElementSet) -> bool {
    if !is_ideal(e, s) {
        return false;
    }
    e.elements().all(|a| {
        e.elements().all(|x| match e.oplus(a, x) {
            // the unique y with y+a = a+x must sit in the ideal iff x does
            Some(v) => match e.left_diff(a, v) {
                Some(y) => s.contains(x) == s.contains(y),
                None => true,
            },
            None => true,
        })
    })
}

/// A central ideal together with its complementary summand and the induced
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandPair {
    pub s: ElementSet,
    pub s_prime: ElementSet,
    /// `coords[a] = (a1, a2)` with `a = a1 + a2`, `a1` in `s`, `a2` in `s_prime`.
    pub coords: Vec<(Elem, Elem)>,
}

/// Decide whether an ideal `s` is central (a direct summand).
///
/// The complement candidate is forced: it is the set of elements disjoint
/// from all of `s`. Returns the summand pair iff the orthogonality condition
/// and the unique-decomposition condition both hold.
pub fn central_ideal_complement(e: &FiniteGpea, s: &ElementSet) -> Option<SummandPair> {
    if !is_ideal(e, s) {
        return None;
    }
    let n = e.order();
    let s_prime =
        ElementSet::from_iter(n, e.elements().filter(|&f| s.iter().all(|x| e.meet(f, x) == Some(0))));

    for a in s.iter() {
        for b in s_prime.iter() {
            if !e.perp(a, b) {
                return None;
            }
        }
    }

    let mut coords = Vec::with_capacity(n);
    for x in e.elements() {
        let mut found = None;
        for a1 in s.intersect(e.down_set(x)).iter() {
            let a2 = e.right_diff(a1, x).expect("a1 <= x has a right difference");
            if s_prime.contains(a2) && found.replace((a1, a2)).is_some() {
                return None;
            }
        }
        coords.push(found?);
    }
    Some(SummandPair { s: s.clone(), s_prime, coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn valid_two_chain_has_empty_report() {
        let t = SumTable::from_sums(2, &[]).unwrap();
        assert!(check_gpea(&t).is_empty());
    }

    #[test]
    fn positivity_witness() {
        let t = SumTable::from_sums(2, &[(1, 1, 0)]).unwrap();
        let report = check_gpea(&t);
        assert_eq!(report.first_witness(Axiom::Gpea4), Some(&[1, 1][..]));
    }

    #[test]
    fn idempotent_nonzero_breaks_cancellation() {
        let t = SumTable::from_sums(2, &[(1, 1, 1)]).unwrap();
        let report = check_gpea(&t);
        assert!(report.first_witness(Axiom::Gpea3).is_some());
    }

    #[test]
    fn associativity_witness() {
        // 1+1=2 and 2+1=3 but 1+2 undefined breaks associativity at (1,1,1)
        let t = SumTable::from_sums(4, &[(1, 1, 2), (2, 1, 3)]).unwrap();
        let report = check_gpea(&t);
        assert_eq!(report.first_witness(Axiom::Gpea1), Some(&[1, 1, 1][..]));
    }

    #[test]
    fn conjugacy_witness() {
        // asymmetric 1+2=3 with no d, e such that d+1 = 2+e = 3
        let t = SumTable::from_sums(4, &[(1, 2, 3)]).unwrap();
        let report = check_gpea(&t);
        assert_eq!(report.first_witness(Axiom::Gpea2), Some(&[1, 2][..]));
    }

    #[test]
    fn top_detection() {
        let d4 = construct::from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap();
        assert_eq!(top_of(&d4), Some(3));
        let v3 = construct::from_sums(3, &[]).unwrap();
        assert_eq!(top_of(&v3), None);
        let e1 = construct::chain(1).unwrap();
        assert_eq!(top_of(&e1), Some(0));
    }

    #[test]
    fn ideals_on_the_diamond() {
        let d4 = construct::from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap();
        let zero = ElementSet::singleton(4, 0);
        assert!(is_ideal(&d4, &zero) && is_normal_ideal(&d4, &zero));
        let s = ElementSet::from_iter(4, [0, 1]);
        assert!(is_ideal(&d4, &s) && is_normal_ideal(&d4, &s));
        // {0, top} is not down-closed: 1 <= top is missing
        let bad = ElementSet::from_iter(4, [0, 3]);
        assert!(!is_ideal(&d4, &bad));
        assert!(!is_ideal(&d4, &ElementSet::empty(4)));
    }

    #[test]
    fn central_complement_on_diamond_and_vee() {
        let d4 = construct::from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap();
        let pair = central_ideal_complement(&d4, &ElementSet::from_iter(4, [0, 1])).unwrap();
        assert_eq!(pair.s_prime, ElementSet::from_iter(4, [0, 2]));
        assert_eq!(pair.coords[3], (1, 2));

        let zero = central_ideal_complement(&d4, &ElementSet::singleton(4, 0)).unwrap();
        assert_eq!(zero.s_prime, ElementSet::full(4));
        assert_eq!(zero.coords[2], (0, 2));

        // on the vee, {0,a} has disjoint complement {0,b} but a and b are
        // not orthogonal, so the ideal is not central
        let v3 = construct::from_sums(3, &[]).unwrap();
        assert!(central_ideal_complement(&v3, &ElementSet::from_iter(3, [0, 1])).is_none());
    }
}
