//! Property tests over the corpus: randomized relabelings, random families
//! and subsets against brute-force oracles.

use proptest::prelude::*;

use gpea::algebra::{Elem, FiniteGpea, SumTable};
use gpea::axioms;
use gpea::cli;
use gpea::construct;
use gpea::laws;
use gpea::set::ElementSet;

mod common;

fn corpus_model() -> impl Strategy<Value = FiniteGpea> {
    let corpus: Vec<FiniteGpea> = laws::acceptance_corpus()
        .into_iter()
        .map(|m| m.model)
        .filter(|m| m.order() <= 12)
        .collect();
    (0..corpus.len()).prop_map(move |i| corpus[i].clone())
}

/// A permutation of `1..n` extended with the fixed zero.
fn permutation(n: usize) -> impl Strategy<Value = Vec<Elem>> {
    Just((1..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |tail| {
        let mut perm = Vec::with_capacity(n);
        perm.push(0);
        perm.extend(tail);
        perm
    })
}

/// Left-to-right sum of one arrangement, the brute-force side of the
/// orthosum check.
fn arrangement_sum(e: &FiniteGpea, arrangement: &[Elem]) -> Option<Elem> {
    arrangement.iter().try_fold(0, |acc, &x| e.oplus(acc, x))
}

fn all_arrangement_sums(e: &FiniteGpea, family: &[Elem]) -> Option<Elem> {
    let mut items = family.to_vec();
    items.sort_unstable();
    let mut result: Option<Elem> = None;
    let mut any = false;
    // walk every permutation (small families only)
    fn rec(items: &mut Vec<Elem>, k: usize, out: &mut Vec<Vec<Elem>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut arrangements = Vec::new();
    rec(&mut items, 0, &mut arrangements);
    for arrangement in arrangements {
        let v = arrangement_sum(e, &arrangement)?;
        if any && result != Some(v) {
            return None;
        }
        result = Some(v);
        any = true;
    }
    result
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The memoized orthosum equals the brute-force scan over every
    /// arrangement.
    #[test]
    fn orthosum_matches_permutation_oracle(
        (e, family) in corpus_model().prop_flat_map(|e| {
            let n = e.order();
            (Just(e), proptest::collection::vec(0..n, 0..5))
        })
    ) {
        prop_assert_eq!(e.orthosum(&family), all_arrangement_sums(&e, &family));
    }

    /// Canonical keys are invariant under relabeling, and the relabeled
    /// model is isomorphic to the original.
    #[test]
    fn canonical_key_survives_relabeling(
        (e, perm) in corpus_model().prop_flat_map(|e| {
            let n = e.order();
            (Just(e), permutation(n))
        })
    ) {
        let relabeled = construct::relabel(&e, &perm);
        prop_assert_eq!(construct::canonical_key(&e), construct::canonical_key(&relabeled));
        prop_assert!(construct::is_isomorphic(&e, &relabeled).is_some());
    }

    /// The cached supremum is the least upper bound by definition, and the
    /// infimum the greatest lower bound.
    #[test]
    fn sup_and_inf_match_definitions(
        (e, mask) in corpus_model().prop_flat_map(|e| {
            let n = e.order();
            (Just(e), proptest::collection::vec(any::<bool>(), n))
        })
    ) {
        let s = ElementSet::from_iter(e.order(), mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i));
        let upper: Vec<Elem> =
            e.elements().filter(|&u| s.iter().all(|x| e.leq(x, u))).collect();
        let expected_sup = upper.iter().copied().find(|&u| upper.iter().all(|&v| e.leq(u, v)));
        prop_assert_eq!(e.sup(&s), expected_sup);
        let lower: Vec<Elem> =
            e.elements().filter(|&l| s.iter().all(|x| e.leq(l, x))).collect();
        let expected_inf = lower.iter().copied().find(|&l| lower.iter().all(|&v| e.leq(v, l)));
        prop_assert_eq!(e.inf(&s), expected_inf);
    }

    /// Serialization round-trips through the parser on every corpus model,
    /// with or without labels.
    #[test]
    fn serialization_round_trips(e in corpus_model(), with_labels in any::<bool>()) {
        let model = if with_labels {
            let labels: Vec<String> = (0..e.order()).map(|i| format!("x{i}")).collect();
            e.clone().with_labels(labels).unwrap()
        } else {
            e.clone()
        };
        let text = cli::serialize_model(&model);
        let parsed = cli::parse_model(&text).unwrap();
        prop_assert_eq!(cli::serialize_model(&parsed), text);
        prop_assert_eq!(&parsed, &model);
    }

    /// On random raw tables the reporting checker and the naive scan agree
    /// about validity.
    #[test]
    fn checker_matches_naive_oracle_on_random_tables(
        (n, cells) in (4usize..=5).prop_flat_map(|n| {
            let cell_count = (n - 1) * (n - 1);
            // bias toward sparse tables so valid ones show up regularly
            let cell = prop_oneof![3 => Just(0usize), 1 => 1..=n];
            (Just(n), proptest::collection::vec(cell, cell_count))
        })
    ) {
        let mut sums = Vec::new();
        let mut idx = 0;
        for a in 1..n {
            for b in 1..n {
                if cells[idx] > 0 {
                    sums.push((a, b, cells[idx] - 1));
                }
                idx += 1;
            }
        }
        let table = SumTable::from_sums(n, &sums).expect("values in range");
        prop_assert_eq!(axioms::check_gpea(&table).is_empty(), common::naive_is_gpea(&table));
    }

    /// Meets and joins agree with their definitions as greatest lower and
    /// least upper bounds of pairs.
    #[test]
    fn pairwise_meet_join_match_definitions(
        (e, a, b) in corpus_model().prop_flat_map(|e| {
            let n = e.order();
            (Just(e), 0..n, 0..n)
        })
    ) {
        let pair = ElementSet::from_iter(e.order(), [a, b]);
        prop_assert_eq!(e.meet(a, b), e.inf(&pair));
        prop_assert_eq!(e.join(a, b), e.sup(&pair));
    }
}
