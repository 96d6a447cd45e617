//! The standard model corpora the suite runs over: every isomorphism class
//! at small orders, plus a zoo of constructed examples capped at 24 elements
//! so that exhaustive quantification stays affordable.

use crate::algebra::FiniteGpea;
use crate::construct;

#[derive(Clone)]
pub struct CorpusModel {
    pub id: String,
    pub model: FiniteGpea,
}

fn entry(id: &str, model: FiniteGpea) -> CorpusModel {
    CorpusModel { id: id.to_string(), model }
}

/// One representative per isomorphism class for every order up to
/// `max_order`, named `enum<order>/<index>`.
pub fn enumerated_corpus(max_order: usize) -> Vec<CorpusModel> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (i, m) in construct::enumerate_gpeas(n).expect("order within cap").into_iter().enumerate()
        {
            out.push(entry(&format!("enum{n}/{i}"), m));
        }
    }
    out
}

/// Hand-picked constructions: chains, the diamond, the vee, cone intervals,
/// the smallest non-commutative model, and pairwise direct sums, all with at
/// most 24 elements.
pub fn constructed_corpus() -> Vec<CorpusModel> {
    let chain = |k: usize| construct::chain(k).expect("chains validate");
    let cone = |b: &[usize]| construct::cone_interval(b, 64).expect("small cones validate");
    let d4 = construct::from_sums(4, &[(1, 2, 3), (2, 1, 3)]).expect("diamond validates");
    let v3 = construct::from_sums(3, &[]).expect("vee validates");
    // the five-element algebra with a one-sided sum: 1+3 = 2+1 = 3+2 = 4
    let nc5 = construct::from_sums(5, &[(1, 3, 4), (2, 1, 4), (3, 2, 4)])
        .expect("the non-commutative five-element model validates");
    let sum = |a: &FiniteGpea, b: &FiniteGpea| construct::direct_sum(a, b).0;

    let mut out = Vec::new();
    for k in 1..=6 {
        out.push(entry(&format!("chain/{k}"), chain(k)));
    }
    out.push(entry("chain/24", chain(24)));
    out.push(entry("d4", d4.clone()));
    out.push(entry("v3", v3.clone()));
    out.push(entry("nc5", nc5.clone()));
    out.push(entry("cone/3x2", cone(&[2, 1])));
    out.push(entry("cone/3x3", cone(&[2, 2])));
    out.push(entry("cone/2x2x2", cone(&[1, 1, 1])));
    out.push(entry("cone/4x3", cone(&[3, 2])));
    out.push(entry("cone/3x3x2", cone(&[2, 2, 1])));
    out.push(entry("cone/2x2x2x2", cone(&[1, 1, 1, 1])));
    out.push(entry("cone/6x4", cone(&[5, 3])));
    out.push(entry("sum/e2+e3", sum(&chain(2), &chain(3))));
    out.push(entry("sum/e2+v3", sum(&chain(2), &v3)));
    out.push(entry("sum/e3+e3", sum(&chain(3), &chain(3))));
    out.push(entry("sum/v3+v3", sum(&v3, &v3)));
    out.push(entry("sum/d4+v3", sum(&d4, &v3)));
    out.push(entry("sum/d4+e3", sum(&d4, &chain(3))));
    out.push(entry("sum/d4+d4", sum(&d4, &d4)));
    out.push(entry("sum/v3+e4", sum(&v3, &chain(4))));
    out.push(entry("sum/nc5+e2", sum(&nc5, &chain(2))));
    out.push(entry("sum/nc5+v3", sum(&nc5, &v3)));
    out.push(entry("sum/nc5+d4", sum(&nc5, &d4)));
    out.push(entry("sum/e2+e2+e2", sum(&sum(&chain(2), &chain(2)), &chain(2))));
    out
}

/// The acceptance corpus: every class of order at most four plus the
/// constructed zoo.
pub fn acceptance_corpus() -> Vec<CorpusModel> {
    let mut out = enumerated_corpus(4);
    out.extend(constructed_corpus());
    out
}
