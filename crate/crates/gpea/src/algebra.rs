//! The finite algebra value: a validated partial-addition table together with
//! the derived order, differences, meets/joins and orthosum machinery.
//!
//! Elements are dense identifiers `0..n`, with `0` fixed as the zero element.
//! A [`FiniteGpea`] is immutable after construction; every derived relation is
//! precomputed once so later queries are table lookups.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::axioms;
use crate::set::ElementSet;

/// Element identifier within a fixed algebra.
pub type Elem = usize;

/// Errors for malformed raw tables (shape and range, not algebra axioms).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow { row: usize, got: usize, expected: usize },
    #[error("entry ({a},{b}) = {value} out of range 0..{n}")]
    EntryOutOfRange { a: Elem, b: Elem, value: Elem, n: usize },
    #[error("sum index out of range in ({a},{b}) -> {value}, carrier 0..{n}")]
    IndexOutOfRange { a: Elem, b: Elem, value: Elem, n: usize },
    #[error("conflicting entries for ({a},{b}): {first} vs {second}")]
    Conflict { a: Elem, b: Elem, first: Elem, second: Elem },
    #[error("entry ({a},0) or (0,{a}) must equal {a} (zero sums are implicit)")]
    ZeroSumDisagrees { a: Elem },
}

/// A raw partial-addition table: the input to the axiom checker.
///
/// Entries with either operand `0` are always present (filled on
/// construction); explicitly supplied ones must agree with them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SumTable {
    n: usize,
    cells: Vec<Option<Elem>>,
}

impl SumTable {
    /// Table with only the forced zero-element sums defined.
    pub fn zeros_only(n: usize) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::EmptyCarrier);
        }
        let mut cells = vec![None; n * n];
        for a in 0..n {
            cells[a * n] = Some(a);
            cells[a] = Some(a);
        }
        Ok(SumTable { n, cells })
    }

    /// Build from full rows; `rows[a][b]` is `a + b` when defined.
    pub fn from_rows(rows: Vec<Vec<Option<Elem>>>) -> Result<Self, TableError> {
        let n = rows.len();
        let mut table = Self::zeros_only(n)?;
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::RaggedRow { row: a, got: row.len(), expected: n });
            }
            for (b, &entry) in row.iter().enumerate() {
                if let Some(v) = entry {
                    table.define(a, b, v)?;
                }
            }
        }
        Ok(table)
    }

    /// Build from `(a, b, a+b)` triples; zero sums are implicit and explicit
    /// ones must agree.
    pub fn from_sums(n: usize, sums: &[(Elem, Elem, Elem)]) -> Result<Self, TableError> {
        let mut table = Self::zeros_only(n)?;
        for &(a, b, v) in sums {
            table.define(a, b, v)?;
        }
        Ok(table)
    }

    fn define(&mut self, a: Elem, b: Elem, v: Elem) -> Result<(), TableError> {
        let n = self.n;
        if a >= n || b >= n {
            return Err(TableError::IndexOutOfRange { a, b, value: v, n });
        }
        if v >= n {
            return Err(TableError::EntryOutOfRange { a, b, value: v, n });
        }
        if (a == 0 && v != b) || (b == 0 && v != a) {
            return Err(TableError::ZeroSumDisagrees { a: if a == 0 { b } else { a } });
        }
        match self.cells[a * n + b] {
            Some(old) if old != v => Err(TableError::Conflict { a, b, first: old, second: v }),
            _ => {
                self.cells[a * n + b] = Some(v);
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.cells[a * self.n + b]
    }

    /// Raw cell write for search code; skips the agreement checks.
    pub(crate) fn set_cell(&mut self, a: Elem, b: Elem, v: Option<Elem>) {
        self.cells[a * self.n + b] = v;
    }

    /// Defined entries `(a, b, a+b)` with both operands nonzero, row-major.
    pub fn nonzero_sums(&self) -> Vec<(Elem, Elem, Elem)> {
        let mut out = Vec::new();
        for a in 1..self.n {
            for b in 1..self.n {
                if let Some(v) = self.get(a, b) {
                    out.push((a, b, v));
                }
            }
        }
        out
    }
}

impl fmt::Debug for SumTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sum table on 0..{}", self.n)?;
        for a in 0..self.n {
            for b in 0..self.n {
                match self.get(a, b) {
                    Some(v) => write!(f, "{v:>3}")?,
                    None => write!(f, "  .")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A validated generalized pseudoeffect algebra on `0..n`.
///
/// Construction runs the axiom checker and fails with the violation report
/// otherwise. The partial order (`a <= b` iff `a + x = b` for some `x`), both
/// differences, and pairwise meets/joins are cached here.
#[derive(Clone)]
pub struct FiniteGpea {
    n: usize,
    sum: Vec<Option<Elem>>,
    leq: Vec<bool>,
    rdiff: Vec<Option<Elem>>,
    ldiff: Vec<Option<Elem>>,
    meet: Vec<Option<Elem>>,
    join: Vec<Option<Elem>>,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGpea {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sum == other.sum
    }
}
impl Eq for FiniteGpea {}

impl FiniteGpea {
    /// Validate a table and build the algebra with all derived caches.
    pub fn from_table(table: &SumTable) -> Result<Self, axioms::ViolationReport> {
        let report = axioms::check_gpea(table);
        if !report.is_empty() {
            return Err(report);
        }
        Ok(Self::from_checked(table))
    }

    pub(crate) fn from_checked(table: &SumTable) -> Self {
        let n = table.order();
        let sum: Vec<Option<Elem>> = (0..n * n).map(|i| table.get(i / n, i % n)).collect();

        let mut leq = vec![false; n * n];
        let mut rdiff = vec![None; n * n];
        let mut ldiff = vec![None; n * n];
        for a in 0..n {
            for x in 0..n {
                if let Some(b) = sum[a * n + x] {
                    // a+x=b, so a<=b with right witness x; uniqueness is
                    // cancellation, already validated.
                    leq[a * n + b] = true;
                    rdiff[a * n + b] = Some(x);
                    ldiff[x * n + b] = Some(a);
                }
            }
        }
        let down: Vec<ElementSet> =
            (0..n).map(|b| ElementSet::from_iter(n, (0..n).filter(|&a| leq[a * n + b]))).collect();
        let up: Vec<ElementSet> =
            (0..n).map(|a| ElementSet::from_iter(n, (0..n).filter(|&b| leq[a * n + b]))).collect();

        for a in 0..n {
            for b in 0..n {
                debug_assert!(
                    !(leq[a * n + b] && leq[b * n + a] && a != b),
                    "order is not antisymmetric at ({a},{b})"
                );
            }
        }

        let mut meet = vec![None; n * n];
        let mut join = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = greatest_of(&down[a].intersect(&down[b]), &down);
                join[a * n + b] = least_of(&up[a].intersect(&up[b]), &up);
            }
        }

        FiniteGpea { n, sum, leq, rdiff, ldiff, meet, join, down, up, labels: None }
    }

    /// Attach display names (one per element, all distinct).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, String> {
        if labels.len() != self.n {
            return Err(format!("expected {} labels, got {}", self.n, labels.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(format!("duplicate label {l:?}"));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, e: Elem) -> String {
        match &self.labels {
            Some(ls) => ls[e].clone(),
            None => e.to_string(),
        }
    }

    fn check_range(&self, e: Elem) {
        assert!(e < self.n, "element {e} out of range 0..{}", self.n);
    }

    /// The partial sum `a + b`, if defined.
    pub fn oplus(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.check_range(a);
        self.check_range(b);
        self.sum[a * self.n + b]
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.check_range(a);
        self.check_range(b);
        self.leq[a * self.n + b]
    }

    /// `a/b`: the unique `x` with `a + x = b`, defined when `a <= b`.
    pub fn right_diff(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.check_range(a);
        self.check_range(b);
        self.rdiff[a * self.n + b]
    }

    /// `b\a`: the unique `y` with `y + a = b`, defined when `a <= b`.
    pub fn left_diff(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.check_range(a);
        self.check_range(b);
        self.ldiff[a * self.n + b]
    }

    /// `b - a`, defined when both differences agree.
    pub fn ominus(&self, b: Elem, a: Elem) -> Option<Elem> {
        match (self.right_diff(a, b), self.left_diff(a, b)) {
            (Some(x), Some(y)) if x == y => Some(x),
            _ => None,
        }
    }

    /// Orthogonality: both sums exist and coincide.
    pub fn perp(&self, a: Elem, b: Elem) -> bool {
        match (self.oplus(a, b), self.oplus(b, a)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    pub fn down_set(&self, e: Elem) -> &ElementSet {
        self.check_range(e);
        &self.down[e]
    }

    pub fn up_set(&self, e: Elem) -> &ElementSet {
        self.check_range(e);
        &self.up[e]
    }

    /// Pairwise infimum, when the greatest lower bound exists.
    pub fn meet(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.check_range(a);
        self.check_range(b);
        self.meet[a * self.n + b]
    }

    /// Pairwise supremum, when the least upper bound exists.
    pub fn join(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.check_range(a);
        self.check_range(b);
        self.join[a * self.n + b]
    }

    /// Elements `a`, `b` are disjoint iff their only common lower bound is 0.
    pub fn disjoint(&self, a: Elem, b: Elem) -> bool {
        self.meet(a, b) == Some(0)
    }

    /// Least upper bound of a set, when it exists. The empty set has
    /// supremum 0.
    pub fn sup(&self, s: &ElementSet) -> Option<Elem> {
        let mut bounds = ElementSet::full(self.n);
        for e in s.iter() {
            bounds = bounds.intersect(&self.up[e]);
        }
        least_of(&bounds, &self.up)
    }

    /// Greatest lower bound of a set, when it exists. The empty set has an
    /// infimum only when the algebra has a top.
    pub fn inf(&self, s: &ElementSet) -> Option<Elem> {
        let mut bounds = ElementSet::full(self.n);
        for e in s.iter() {
            bounds = bounds.intersect(&self.down[e]);
        }
        greatest_of(&bounds, &self.down)
    }

    /// Orthosum of a finite family (a multiset, in any order).
    ///
    /// Defined iff the running sum of every arrangement of every subfamily
    /// exists and all arrangements agree; the value is then the common total,
    /// which is also the supremum of the partial orthosums. Empty family: 0.
    pub fn orthosum(&self, family: &[Elem]) -> Option<Elem> {
        let mut sorted: Vec<Elem> = family.to_vec();
        for &e in &sorted {
            self.check_range(e);
        }
        sorted.sort_unstable();
        let mut memo: HashMap<Vec<Elem>, Option<Elem>> = HashMap::new();
        self.orthosum_rec(&sorted, &mut memo)
    }

    fn orthosum_rec(&self, sorted: &[Elem], memo: &mut HashMap<Vec<Elem>, Option<Elem>>) -> Option<Elem> {
        if sorted.is_empty() {
            return Some(0);
        }
        if let Some(&v) = memo.get(sorted) {
            return v;
        }
        // Remove each possible last summand; all branches must be defined
        // and give the same total.
        let mut total: Option<Elem> = None;
        for i in 0..sorted.len() {
            if i > 0 && sorted[i] == sorted[i - 1] {
                continue;
            }
            let mut rest = sorted.to_vec();
            let last = rest.remove(i);
            let t = match self.orthosum_rec(&rest, memo).and_then(|v| self.oplus(v, last)) {
                Some(t) => t,
                None => {
                    memo.insert(sorted.to_vec(), None);
                    return None;
                }
            };
            match total {
                None => total = Some(t),
                Some(prev) if prev != t => {
                    memo.insert(sorted.to_vec(), None);
                    return None;
                }
                _ => {}
            }
        }
        memo.insert(sorted.to_vec(), total);
        total
    }

    /// The raw table backing this algebra.
    pub fn table(&self) -> SumTable {
        let rows: Vec<Vec<Option<Elem>>> =
            (0..self.n).map(|a| (0..self.n).map(|b| self.sum[a * self.n + b]).collect()).collect();
        SumTable::from_rows(rows).expect("a validated algebra round-trips through its table")
    }

    /// A linear extension of the order: every element appears after all
    /// elements strictly below it.
    pub fn linear_extension(&self) -> Vec<Elem> {
        let mut order: Vec<Elem> = self.elements().collect();
        order.sort_by_key(|&e| (self.down[e].len(), e));
        order
    }
}

/// Least element of `s` (an element of `s` below all others), if any.
fn least_of(s: &ElementSet, up: &[ElementSet]) -> Option<Elem> {
    s.iter().find(|&m| s.is_subset(&up[m]))
}

/// Greatest element of `s`, if any.
fn greatest_of(s: &ElementSet, down: &[ElementSet]) -> Option<Elem> {
    s.iter().find(|&m| s.is_subset(&down[m]))
}

impl fmt::Debug for FiniteGpea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGpea(n={}, sums=", self.n)?;
        let mut first = true;
        for a in 1..self.n {
            for b in 1..self.n {
                if let Some(v) = self.sum[a * self.n + b] {
                    if !first {
                        write!(f, " ")?;
                    }
                    write!(f, "{a}+{b}={v}")?;
                    first = false;
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn d4() -> FiniteGpea {
        construct::from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap()
    }

    fn v3() -> FiniteGpea {
        construct::from_sums(3, &[]).unwrap()
    }

    #[test]
    fn zero_sums_are_implicit() {
        let e = construct::chain(2).unwrap();
        for a in 0..2 {
            assert_eq!(e.oplus(a, 0), Some(a));
            assert_eq!(e.oplus(0, a), Some(a));
        }
        // positivity forces 1+1 to be undefined on the 2-chain
        assert_eq!(e.oplus(1, 1), None);
    }

    #[test]
    fn diamond_sum_and_differences() {
        let e = d4();
        assert_eq!(e.oplus(1, 2), Some(3));
        assert!(e.perp(1, 2));
        assert_eq!(e.right_diff(1, 3), Some(2));
        assert_eq!(e.left_diff(1, 3), Some(2));
        assert_eq!(e.ominus(3, 1), Some(2));
        assert_eq!(e.right_diff(0, 2), Some(2));
        assert_eq!(e.right_diff(2, 2), Some(0));
        assert_eq!(e.ominus(2, 0), Some(2));
        assert_eq!(e.ominus(2, 2), Some(0));
        assert_eq!(e.right_diff(3, 1), None);
    }

    #[test]
    fn sup_and_inf() {
        let e = d4();
        assert_eq!(e.sup(&ElementSet::from_iter(4, [1, 2])), Some(3));
        assert_eq!(e.inf(&ElementSet::from_iter(4, [1, 2])), Some(0));
        assert_eq!(e.sup(&ElementSet::singleton(4, 2)), Some(2));
        assert_eq!(e.sup(&ElementSet::empty(4)), Some(0));
        assert_eq!(e.inf(&ElementSet::empty(4)), Some(3));

        let v = v3();
        assert_eq!(v.sup(&ElementSet::from_iter(3, [1, 2])), None);
        assert_eq!(v.inf(&ElementSet::empty(3)), None);
        assert_eq!(v.meet(1, 2), Some(0));
        assert!(v.disjoint(1, 2));
    }

    #[test]
    fn orthosum_families() {
        let e = d4();
        assert_eq!(e.orthosum(&[]), Some(0));
        assert_eq!(e.orthosum(&[2]), Some(2));
        assert_eq!(e.orthosum(&[1, 2]), Some(3));
        assert_eq!(e.orthosum(&[2, 1]), Some(3));
        assert_eq!(e.orthosum(&[1, 1]), None);
        let c = construct::chain(4).unwrap();
        assert_eq!(c.orthosum(&[1, 1, 1]), Some(3));
        assert_eq!(c.orthosum(&[1, 2]), Some(3));
        assert_eq!(c.orthosum(&[2, 2]), None);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert_eq!(SumTable::from_sums(0, &[]), Err(TableError::EmptyCarrier));
        assert!(matches!(
            SumTable::from_sums(2, &[(1, 1, 5)]),
            Err(TableError::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            SumTable::from_sums(2, &[(1, 0, 0)]),
            Err(TableError::ZeroSumDisagrees { .. })
        ));
        assert!(matches!(
            SumTable::from_sums(4, &[(1, 2, 3), (1, 2, 2)]),
            Err(TableError::Conflict { .. })
        ));
    }
}
