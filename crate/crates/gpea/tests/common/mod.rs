//! Helpers shared by the integration test binaries.

use gpea::algebra::SumTable;

/// Second implementation of the five table axioms: straight quantifier
/// scans over the raw table, no caches, no witness machinery. Kept
/// deliberately separate from the reporting checker.
pub fn naive_is_gpea(t: &SumTable) -> bool {
    let n = t.order();
    let defined = |a: usize, b: usize| t.get(a, b).is_some();
    let assoc = (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let left_exists = defined(a, b) && defined(t.get(a, b).unwrap(), c);
                let right_exists = defined(b, c) && defined(a, t.get(b, c).unwrap());
                if left_exists != right_exists {
                    return false;
                }
                if !left_exists {
                    return true;
                }
                t.get(t.get(a, b).unwrap(), c) == t.get(a, t.get(b, c).unwrap())
            })
        })
    });
    let conjugacy = (0..n).all(|a| {
        (0..n).all(|b| match t.get(a, b) {
            None => true,
            Some(s) => {
                (0..n).any(|d| t.get(d, a) == Some(s)) && (0..n).any(|e| t.get(b, e) == Some(s))
            }
        })
    });
    let cancellation = (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                (t.get(a, b).is_none() || t.get(a, b) != t.get(a, c) || b == c)
                    && (t.get(b, a).is_none() || t.get(b, a) != t.get(c, a) || b == c)
            })
        })
    });
    let positivity =
        (0..n).all(|a| (0..n).all(|b| t.get(a, b) != Some(0) || (a == 0 && b == 0)));
    let zero = (0..n).all(|a| t.get(a, 0) == Some(a) && t.get(0, a) == Some(a));
    assoc && conjugacy && cancellation && positivity && zero
}
