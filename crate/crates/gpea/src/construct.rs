//! Builders and generators: interval algebras, direct sums, integer cone
//! intervals, isomorphism testing, and exhaustive enumeration of small
//! algebras up to isomorphism.

use thiserror::Error;

use crate::algebra::{Elem, FiniteGpea, SumTable, TableError};
use crate::axioms;
use crate::set::ElementSet;

/// Default cap on the enumeration order; exhaustive search is
/// superexponential in the order.
pub const DEFAULT_ORDER_CAP: usize = 5;

/// Default cap on the number of elements of a constructed cone interval.
pub const DEFAULT_SIZE_CAP: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("{size} elements exceed the size cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("table error: {0}")]
    Table(#[from] TableError),
    #[error("invalid table:\n{0}")]
    Invalid(axioms::ViolationReport),
}

/// A structure-preserving map between two algebras: defined sums map to
/// defined sums. Isomorphisms are additionally bijective with a morphism
/// inverse.
#[derive(Debug, Clone)]
pub struct Morphism {
    pub source: FiniteGpea,
    pub target: FiniteGpea,
    pub map: Vec<Elem>,
}

impl Morphism {
    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e]
    }

    /// Sum preservation: `a+b` defined implies `f(a)+f(b)` defined and equal
    /// to `f(a+b)`.
    pub fn is_morphism(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        self.map[0] == 0
            && s.elements().all(|a| {
                s.elements().all(|b| match s.oplus(a, b) {
                    Some(v) => t.oplus(self.map[a], self.map[b]) == Some(self.map[v]),
                    None => true,
                })
            })
    }

    /// Bijective, sum-preserving, and sum-reflecting.
    pub fn is_isomorphism(&self) -> bool {
        if self.source.order() != self.target.order() || !self.is_morphism() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let (s, t) = (&self.source, &self.target);
        s.elements().all(|a| {
            s.elements().all(|b| {
                s.oplus(a, b).is_some() == t.oplus(self.map[a], self.map[b]).is_some()
            })
        })
    }
}

/// Build an algebra directly from nonzero sum triples.
pub fn from_sums(n: usize, sums: &[(Elem, Elem, Elem)]) -> Result<FiniteGpea, ConstructError> {
    let table = SumTable::from_sums(n, sums)?;
    FiniteGpea::from_table(&table).map_err(ConstructError::Invalid)
}

/// The chain `0 < 1 < .. < len-1` with `i + j` defined when `i + j < len`.
pub fn chain(len: usize) -> Result<FiniteGpea, ConstructError> {
    let mut sums = Vec::new();
    for i in 1..len {
        for j in 1..len {
            if i + j < len {
                sums.push((i, j, i + j));
            }
        }
    }
    from_sums(len.max(1), &sums)
}

/// Restrict to the interval below `u`: carrier `{a : a <= u}` with the sum
/// defined when it exists and stays below `u`. The result has top `u`, so it
/// is a pseudoeffect algebra.
pub fn interval_pea(e: &FiniteGpea, u: Elem) -> FiniteGpea {
    interval_pea_embedded(e, u).0
}

/// Interval algebra plus the carrier map from new identifiers back to the
/// ambient elements (ascending, so 0 maps to 0).
pub fn interval_pea_embedded(e: &FiniteGpea, u: Elem) -> (FiniteGpea, Vec<Elem>) {
    let carrier: Vec<Elem> = e.down_set(u).iter().collect();
    let index_of = |x: Elem| carrier.binary_search(&x).expect("carrier element");
    let mut sums = Vec::new();
    for (i, &a) in carrier.iter().enumerate() {
        for (j, &b) in carrier.iter().enumerate() {
            if i == 0 || j == 0 {
                continue;
            }
            if let Some(v) = e.oplus(a, b) {
                if e.leq(v, u) {
                    sums.push((i, j, index_of(v)));
                }
            }
        }
    }
    let sub = from_sums(carrier.len(), &sums)
        .expect("an interval of a valid algebra validates");
    (sub, carrier)
}

/// Direct sum: carrier is the cartesian product with componentwise partial
/// sums. Returns the sum together with the two coordinate injections, whose
/// images are complementary central ideals.
pub fn direct_sum(e1: &FiniteGpea, e2: &FiniteGpea) -> (FiniteGpea, Morphism, Morphism) {
    let (n1, n2) = (e1.order(), e2.order());
    let idx = |a: Elem, b: Elem| a * n2 + b;
    let mut sums = Vec::new();
    for a1 in e1.elements() {
        for b1 in e2.elements() {
            for a2 in e1.elements() {
                for b2 in e2.elements() {
                    if (a1, b1) == (0, 0) || (a2, b2) == (0, 0) {
                        continue;
                    }
                    if let (Some(va), Some(vb)) = (e1.oplus(a1, a2), e2.oplus(b1, b2)) {
                        sums.push((idx(a1, b1), idx(a2, b2), idx(va, vb)));
                    }
                }
            }
        }
    }
    let total = from_sums(n1 * n2, &sums)
        .expect("a direct sum of valid algebras validates");
    let inj1 = Morphism {
        source: e1.clone(),
        target: total.clone(),
        map: e1.elements().map(|a| idx(a, 0)).collect(),
    };
    let inj2 = Morphism {
        source: e2.clone(),
        target: total.clone(),
        map: e2.elements().map(|b| idx(0, b)).collect(),
    };
    (total, inj1, inj2)
}

/// Integer vectors `0 <= x <= bound` under vector addition capped at the
/// bound: the interval `[0, bound]` in the positive cone of `Z^d`. A
/// commutative pseudoeffect algebra with top `bound`.
pub fn cone_interval(bound: &[usize], cap: usize) -> Result<FiniteGpea, ConstructError> {
    let size: usize = bound.iter().map(|&b| b + 1).product();
    if size > cap {
        return Err(ConstructError::SizeCapExceeded { size, cap });
    }
    let d = bound.len();
    let decode = |mut i: usize| -> Vec<usize> {
        let mut v = vec![0; d];
        for k in (0..d).rev() {
            v[k] = i % (bound[k] + 1);
            i /= bound[k] + 1;
        }
        v
    };
    let encode = |v: &[usize]| -> usize {
        v.iter().zip(bound).fold(0, |acc, (&x, &b)| acc * (b + 1) + x)
    };
    let mut sums = Vec::new();
    for i in 1..size {
        for j in 1..size {
            let (x, y) = (decode(i), decode(j));
            let z: Vec<usize> = x.iter().zip(&y).map(|(&a, &b)| a + b).collect();
            if z.iter().zip(bound).all(|(&c, &b)| c <= b) {
                sums.push((i, j, encode(&z)));
            }
        }
    }
    from_sums(size.max(1), &sums)
}

/// Order-and-degree invariant used to seed canonical relabeling and
/// isomorphism search: isomorphisms preserve it.
fn invariant(e: &FiniteGpea, x: Elem) -> (usize, usize, usize, usize) {
    let below = e.down_set(x).len();
    let above = e.up_set(x).len();
    let row = e.elements().filter(|&b| e.oplus(x, b).is_some()).count();
    let col = e.elements().filter(|&a| e.oplus(a, x).is_some()).count();
    (below, above, row, col)
}

fn flat_key(n: usize, get: impl Fn(Elem, Elem) -> Option<Elem>) -> Vec<u8> {
    let mut key = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            key.push(match get(a, b) {
                Some(v) => v as u8 + 1,
                None => 0,
            });
        }
    }
    key
}

/// Relabel by a permutation (which must fix 0): entry `(p(a), p(b)) = p(a+b)`.
pub fn relabel(e: &FiniteGpea, perm: &[Elem]) -> FiniteGpea {
    assert_eq!(perm[0], 0, "relabelings fix the zero element");
    let n = e.order();
    let mut sums = Vec::new();
    for a in 1..n {
        for b in 1..n {
            if let Some(v) = e.oplus(a, b) {
                sums.push((perm[a], perm[b], perm[v]));
            }
        }
    }
    from_sums(n, &sums).expect("relabeling a valid algebra validates")
}

/// Canonical form: the minimal flattened table over all relabelings that
/// respect the invariant classes. Isomorphic algebras agree on it.
pub fn canonical_key(e: &FiniteGpea) -> Vec<u8> {
    let n = e.order();
    // group nonzero elements into invariant classes; relabelings permute
    // within classes, with classes laid out in sorted invariant order
    let mut classes: Vec<(Elem, (usize, usize, usize, usize))> =
        (1..n).map(|x| (x, invariant(e, x))).collect();
    classes.sort_by_key(|&(x, inv)| (inv, x));
    let mut groups: Vec<Vec<Elem>> = Vec::new();
    for (x, inv) in classes {
        match groups.last_mut() {
            Some(g) if invariant(e, g[0]) == inv => g.push(x),
            _ => groups.push(vec![x]),
        }
    }

    let mut best: Option<Vec<u8>> = None;
    let mut perm = vec![0usize; n];
    let mut old_of = vec![0usize; n];
    permute_groups(&groups, 0, &mut Vec::new(), &mut |assignment| {
        // assignment lists old elements in new-label order 1..n
        for (new_minus_one, &old) in assignment.iter().enumerate() {
            perm[old] = new_minus_one + 1;
            old_of[new_minus_one + 1] = old;
        }
        let key = flat_key(n, |a, b| e.oplus(old_of[a], old_of[b]).map(|v| perm[v]));
        let better = match &best {
            None => true,
            Some(b) => key < *b,
        };
        if better {
            best = Some(key);
        }
    });
    best.unwrap_or_else(|| flat_key(n, |a, b| e.oplus(a, b)))
}

fn permute_groups(groups: &[Vec<Elem>], i: usize, acc: &mut Vec<Elem>, f: &mut impl FnMut(&[Elem])) {
    if i == groups.len() {
        f(acc);
        return;
    }
    let mut g = groups[i].clone();
    permute_all(&mut g, 0, &mut |p| {
        let len = acc.len();
        acc.extend_from_slice(p);
        permute_groups(groups, i + 1, acc, f);
        acc.truncate(len);
    });
}

fn permute_all(items: &mut [Elem], k: usize, f: &mut impl FnMut(&[Elem])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Rebuild an algebra from a canonical key.
fn from_key(n: usize, key: &[u8]) -> FiniteGpea {
    let mut sums = Vec::new();
    for a in 1..n {
        for b in 1..n {
            let v = key[a * n + b];
            if v != 0 {
                sums.push((a, b, v as usize - 1));
            }
        }
    }
    from_sums(n, &sums).expect("canonical keys come from valid algebras")
}

/// All valid algebras on `n` elements, one canonical representative per
/// isomorphism class, sorted by canonical key.
pub fn enumerate_gpeas(n: usize) -> Result<Vec<FiniteGpea>, ConstructError> {
    enumerate_gpeas_capped(n, DEFAULT_ORDER_CAP)
}

pub fn enumerate_gpeas_capped(n: usize, cap: usize) -> Result<Vec<FiniteGpea>, ConstructError> {
    if n > cap {
        return Err(ConstructError::OrderCapExceeded { order: n, cap });
    }
    if n == 0 {
        return Err(ConstructError::Table(TableError::EmptyCarrier));
    }
    let mut keys: Vec<Vec<u8>> = Vec::new();
    let mut table = SumTable::zeros_only(n).expect("n >= 1");
    let cells: Vec<(Elem, Elem)> =
        (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    search(n, &cells, 0, &mut table, &mut keys);
    keys.sort();
    keys.dedup();
    Ok(keys.into_iter().map(|k| from_key(n, &k)).collect())
}

fn search(n: usize, cells: &[(Elem, Elem)], i: usize, table: &mut SumTable, keys: &mut Vec<Vec<u8>>) {
    if i == cells.len() {
        if axioms::check_gpea(table).is_empty() {
            let e = FiniteGpea::from_checked(table);
            keys.push(canonical_key(&e));
        }
        return;
    }
    let (a, b) = cells[i];

    table.set_cell(a, b, None);
    if partial_ok(table, n, i) {
        search(n, cells, i + 1, table, keys);
    }
    for v in 1..n {
        // cancellation rules out repeats in a row or column, positivity and
        // cancellation with zero rule out 0, a and b themselves
        if v == a || v == b {
            continue;
        }
        let row_clash = (0..n).any(|y| y != b && table.get(a, y) == Some(v));
        let col_clash = (0..n).any(|x| x != a && table.get(x, b) == Some(v));
        if row_clash || col_clash {
            continue;
        }
        table.set_cell(a, b, Some(v));
        if partial_ok(table, n, i) {
            search(n, cells, i + 1, table, keys);
        }
    }
    table.set_cell(a, b, None);
}

/// Cell `(a, b)` is decided once the fill order has passed it; zero-operand
/// cells are fixed from the start. Fill order is row-major over `1..n`.
fn decided(n: usize, a: Elem, b: Elem, upto: usize) -> bool {
    a == 0 || b == 0 || (a - 1) * (n - 1) + (b - 1) <= upto
}

/// Associativity restricted to decided cells; three-valued, so undecided
/// lookups are skipped and the leaf check remains the authority.
fn partial_ok(table: &SumTable, n: usize, upto: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !decided(n, a, b, upto) || !decided(n, b, c, upto) {
                    continue;
                }
                let lhs = match table.get(a, b) {
                    Some(s) if decided(n, s, c, upto) => Some(table.get(s, c)),
                    Some(_) => None,
                    None => Some(None),
                };
                let rhs = match table.get(b, c) {
                    Some(s) if decided(n, a, s, upto) => Some(table.get(a, s)),
                    Some(_) => None,
                    None => Some(None),
                };
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Search for an isomorphism by backtracking over invariant-compatible
/// assignments.
pub fn is_isomorphic(e: &FiniteGpea, f: &FiniteGpea) -> Option<Morphism> {
    if e.order() != f.order() {
        return None;
    }
    let n = e.order();
    let inv_e: Vec<_> = (0..n).map(|x| invariant(e, x)).collect();
    let inv_f: Vec<_> = (0..n).map(|x| invariant(f, x)).collect();
    {
        let mut a = inv_e.clone();
        let mut b = inv_f.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    let mut map: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    map[0] = Some(0);
    used[0] = true;
    if assign(e, f, &inv_e, &inv_f, 1, &mut map, &mut used) {
        let map: Vec<Elem> = map.into_iter().map(|m| m.expect("total")).collect();
        let m = Morphism { source: e.clone(), target: f.clone(), map };
        debug_assert!(m.is_isomorphism());
        Some(m)
    } else {
        None
    }
}

fn assign(
    e: &FiniteGpea,
    f: &FiniteGpea,
    inv_e: &[(usize, usize, usize, usize)],
    inv_f: &[(usize, usize, usize, usize)],
    x: Elem,
    map: &mut Vec<Option<Elem>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = e.order();
    if x == n {
        return true;
    }
    for y in 1..n {
        if used[y] || inv_e[x] != inv_f[y] {
            continue;
        }
        map[x] = Some(y);
        used[y] = true;
        if consistent(e, f, map, x) && assign(e, f, inv_e, inv_f, x + 1, map, used) {
            return true;
        }
        map[x] = None;
        used[y] = false;
    }
    false
}

fn consistent(e: &FiniteGpea, f: &FiniteGpea, map: &[Option<Elem>], newest: Elem) -> bool {
    let decided: Vec<Elem> = (0..map.len()).filter(|&i| map[i].is_some()).collect();
    for &a in &decided {
        for &b in [newest].iter().chain(decided.iter()) {
            for (p, q) in [(a, b), (b, a)] {
                let (fp, fq) = (map[p].unwrap(), map[q].unwrap());
                match e.oplus(p, q) {
                    Some(v) => match f.oplus(fp, fq) {
                        Some(w) => {
                            if let Some(fv) = map[v] {
                                if fv != w {
                                    return false;
                                }
                            }
                        }
                        None => return false,
                    },
                    None => {
                        if f.oplus(fp, fq).is_some() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// All minimal nonzero elements.
pub fn atoms(e: &FiniteGpea) -> ElementSet {
    ElementSet::from_iter(
        e.order(),
        e.elements().filter(|&a| a != 0 && e.down_set(a).len() == 2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4() -> FiniteGpea {
        from_sums(4, &[(1, 2, 3), (2, 1, 3)]).unwrap()
    }

    #[test]
    fn chains_and_intervals() {
        let e1 = chain(1).unwrap();
        assert_eq!(e1.order(), 1);
        let d = d4();
        assert_eq!(interval_pea(&d, 0).order(), 1);
        let below_atom = interval_pea(&d, 1);
        assert!(is_isomorphic(&below_atom, &chain(2).unwrap()).is_some());
        // the whole interval of an algebra with top is the algebra itself
        let whole = interval_pea(&d, 3);
        assert!(is_isomorphic(&whole, &d).is_some());
    }

    #[test]
    fn direct_sums_and_cones() {
        let e2 = chain(2).unwrap();
        let (sum, inj1, inj2) = direct_sum(&e2, &e2);
        assert!(inj1.is_morphism() && inj2.is_morphism());
        assert!(is_isomorphic(&sum, &d4()).is_some());

        let (sum1e, _, _) = direct_sum(&chain(1).unwrap(), &d4());
        assert!(is_isomorphic(&sum1e, &d4()).is_some());

        assert!(is_isomorphic(&cone_interval(&[1], 64).unwrap(), &e2).is_some());
        assert!(is_isomorphic(&cone_interval(&[2], 64).unwrap(), &chain(3).unwrap()).is_some());
        assert!(is_isomorphic(&cone_interval(&[1, 1], 64).unwrap(), &d4()).is_some());
        assert!(matches!(
            cone_interval(&[100], 64),
            Err(ConstructError::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn no_isomorphism_across_sizes_or_shapes() {
        let e2 = chain(2).unwrap();
        let e3 = chain(3).unwrap();
        assert!(is_isomorphic(&e2, &e3).is_none());
        let v3 = from_sums(3, &[]).unwrap();
        assert!(is_isomorphic(&e3, &v3).is_none());
        let id = is_isomorphic(&e3, &e3).unwrap();
        assert_eq!(id.map, vec![0, 1, 2]);
    }

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        let v4 = from_sums(4, &[(1, 1, 3), (2, 2, 3)]);
        if let Ok(v4) = v4 {
            let k = canonical_key(&v4);
            assert_eq!(k, canonical_key(&relabel(&v4, &[0, 2, 1, 3])));
        }
        let d = d4();
        assert_eq!(canonical_key(&d), canonical_key(&relabel(&d, &[0, 2, 1, 3])));
    }

    #[test]
    fn enumeration_small_orders() {
        assert_eq!(enumerate_gpeas(1).unwrap().len(), 1);
        assert_eq!(enumerate_gpeas(2).unwrap().len(), 1);
        let threes = enumerate_gpeas(3).unwrap();
        // the 3-chain and the vee
        assert_eq!(threes.len(), 2);
        for m in &threes {
            assert!(axioms::check_gpea(&m.table()).is_empty());
        }
        assert!(matches!(
            enumerate_gpeas(99),
            Err(ConstructError::OrderCapExceeded { .. })
        ));
    }
}
