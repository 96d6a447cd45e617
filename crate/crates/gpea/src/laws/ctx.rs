//! Per-model context shared by all checks: the exocenter, covers, center and
//! the standard family of type-determining sets, computed once.

use crate::algebra::{Elem, FiniteGpea};
use crate::axioms;
use crate::center::{self, CenterData};
use crate::construct;
use crate::cover::{self, CoverSystem};
use crate::exocenter::{self, ExoMap};
use crate::set::ElementSet;
use crate::typetheory::{self, TdContext};

/// Exhaustive subset quantification is used up to this base-set size;
/// larger bases fall back to the documented deterministic sample.
pub const SUBSET_EXHAUSTION_LIMIT: usize = 16;

#[derive(Clone)]
pub struct ModelCtx {
    pub id: String,
    pub e: FiniteGpea,
    pub gex: Vec<ExoMap>,
    pub covers: CoverSystem,
    pub center: CenterData,
    pub atoms: ElementSet,
    /// Named type-determining sets with their contexts: the zero set, the
    /// center, the whole carrier, the generated closure of each singleton,
    /// and the commutative-interval set (deduplicated, first name wins).
    pub td: Vec<(String, TdContext)>,
}

impl ModelCtx {
    pub fn new(id: impl Into<String>, e: FiniteGpea) -> Self {
        let gex = exocenter::exocenter(&e);
        let covers = cover::cover_system(&e);
        let center = center::center_data(&e);
        let atoms = construct::atoms(&e);
        let td = td_family(&e, &covers, &center.gamma_set)
            .into_iter()
            .map(|(name, set)| {
                let ctx = typetheory::td_context(&e, &set)
                    .expect("members of the standard family are type-determining");
                (name, ctx)
            })
            .collect();
        ModelCtx { id: id.into(), e, gex, covers, center, atoms, td }
    }

    pub fn n(&self) -> usize {
        self.e.order()
    }

    pub fn find(&self, m: &ExoMap) -> Option<usize> {
        self.gex.iter().position(|g| g == m)
    }

    pub fn in_gex(&self, m: &ExoMap) -> bool {
        self.find(m).is_some()
    }

    pub fn gamma(&self, x: Elem) -> &ExoMap {
        &self.covers.gamma[x]
    }

    pub fn in_theta(&self, m: &ExoMap) -> bool {
        self.covers.theta.contains(m)
    }

    pub fn pi_of(&self, c: Elem) -> &ExoMap {
        &self
            .center
            .pi_of
            .iter()
            .find(|(d, _)| *d == c)
            .expect("central element has a summand map")
            .1
    }

    /// Join of a family of exocenter maps (empty family: the zero map).
    pub fn join_all<'a>(&self, maps: impl IntoIterator<Item = &'a ExoMap>) -> ExoMap {
        maps.into_iter().fold(ExoMap::zero(self.n()), |acc, m| acc.join(m, &self.e))
    }

    /// Meet of a family (empty family: the identity).
    pub fn meet_all<'a>(&self, maps: impl IntoIterator<Item = &'a ExoMap>) -> ExoMap {
        maps.into_iter().fold(ExoMap::identity(self.n()), |acc, m| acc.meet(m))
    }

    /// Subsets of the carrier to quantify set-valued laws over: everything
    /// when the model is small, otherwise the empty set, singletons,
    /// principal down-sets, the atoms, the center and the full carrier.
    pub fn carrier_subsets(&self) -> Vec<ElementSet> {
        let n = self.n();
        if n <= 5 {
            return (0..(1usize << n))
                .map(|mask| ElementSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1)))
                .collect();
        }
        let mut out = vec![ElementSet::empty(n)];
        out.extend((0..n).map(|x| ElementSet::singleton(n, x)));
        out.extend((0..n).map(|x| self.e.down_set(x).clone()));
        out.push(self.atoms.clone());
        out.push(self.center.gamma_set.clone());
        out.push(ElementSet::full(n));
        out.sort();
        out.dedup();
        out
    }
}

/// Subsets of an indexed base. Exhaustive (bitmask order) up to
/// [`SUBSET_EXHAUSTION_LIMIT`]; beyond that, all subsets of size at most
/// three, which keeps the family laws polynomial on large inputs.
pub fn subsets(base_len: usize) -> Vec<Vec<usize>> {
    if base_len <= SUBSET_EXHAUSTION_LIMIT {
        (0..(1usize << base_len))
            .map(|mask| (0..base_len).filter(|&i| mask >> i & 1 == 1).collect())
            .collect()
    } else {
        let mut out: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..base_len {
            out.push(vec![i]);
            for j in i + 1..base_len {
                out.push(vec![i, j]);
                for k in j + 1..base_len {
                    out.push(vec![i, j, k]);
                }
            }
        }
        out
    }
}

/// Visit subsets of `0..len` carrying an incrementally combined accumulator
/// (cheaper than refolding per subset). Exhaustive up to the limit, sizes at
/// most three beyond it. The empty subset is visited first with `init`.
pub fn visit_subsets<A: Clone>(
    len: usize,
    init: A,
    extend: &impl Fn(&A, usize) -> A,
    visit: &mut impl FnMut(&[usize], &A) -> Result<(), String>,
) -> Result<(), String> {
    fn rec<A: Clone>(
        len: usize,
        from: usize,
        stack: &mut Vec<usize>,
        acc: &A,
        extend: &impl Fn(&A, usize) -> A,
        visit: &mut impl FnMut(&[usize], &A) -> Result<(), String>,
    ) -> Result<(), String> {
        visit(stack, acc)?;
        for i in from..len {
            stack.push(i);
            let next = extend(acc, i);
            rec(len, i + 1, stack, &next, extend, visit)?;
            stack.pop();
        }
        Ok(())
    }
    if len <= SUBSET_EXHAUSTION_LIMIT {
        rec(len, 0, &mut Vec::new(), &init, extend, visit)
    } else {
        for set in subsets(len) {
            let acc = set.iter().fold(init.clone(), |a, &i| extend(&a, i));
            visit(&set, &acc)?;
        }
        Ok(())
    }
}

/// All pairwise-disjoint subsets of the exocenter, as index vectors
/// (including the empty family), found by disjointness-pruned search.
pub fn disjoint_gex_families(ctx: &ModelCtx) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut stack: Vec<usize> = Vec::new();
    fn rec(ctx: &ModelCtx, from: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in from..ctx.gex.len() {
            if stack.iter().all(|&j| ctx.gex[i].meet(&ctx.gex[j]).is_zero()) {
                stack.push(i);
                out.push(stack.clone());
                rec(ctx, i + 1, stack, out);
                stack.pop();
            }
        }
    }
    rec(ctx, 0, &mut stack, &mut out);
    out
}

/// Every orthosummable multiset of nonzero elements, as sorted vectors. The
/// search adds summands in nondecreasing order and prunes on the sorted
/// partial sum, which every orthosummable multiset must have defined.
pub fn orthosummable_multisets(e: &FiniteGpea) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut stack: Vec<Elem> = Vec::new();
    fn rec(e: &FiniteGpea, from: Elem, stack: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        for x in from..e.order() {
            stack.push(x);
            let mut partial = Some(0);
            for &y in stack.iter() {
                partial = partial.and_then(|p| e.oplus(p, y));
            }
            if partial.is_some() {
                if e.orthosum(stack).is_some() {
                    out.push(stack.clone());
                }
                rec(e, x, stack, out);
            }
            stack.pop();
        }
    }
    rec(e, 1, &mut stack, &mut out);
    out
}

/// Direct closure oracle: orthosums over all cover-orthogonal subsets of
/// `q`, each witnessed by its family. Independent of the fixpoint route.
pub fn closure_by_families(
    e: &FiniteGpea,
    covers: &CoverSystem,
    q: &ElementSet,
) -> Vec<(Elem, Vec<Elem>)> {
    let members: Vec<Elem> = q.iter().collect();
    let mut found: Vec<(Elem, Vec<Elem>)> = vec![(0, vec![])];
    let mut stack: Vec<Elem> = Vec::new();
    fn rec(
        e: &FiniteGpea,
        covers: &CoverSystem,
        members: &[Elem],
        from: usize,
        stack: &mut Vec<Elem>,
        found: &mut Vec<(Elem, Vec<Elem>)>,
    ) {
        for (i, &x) in members.iter().enumerate().skip(from) {
            if stack.iter().all(|&y| covers.gamma[x].meet(&covers.gamma[y]).is_zero()) {
                stack.push(x);
                let total = e
                    .orthosum(stack)
                    .expect("cover-orthogonal families are orthosummable");
                if !found.iter().any(|(t, _)| *t == total) {
                    found.push((total, stack.clone()));
                }
                rec(e, covers, members, i + 1, stack, found);
                stack.pop();
            }
        }
    }
    rec(e, covers, &members, 0, &mut stack, &mut found);
    found.sort();
    found
}

/// Lattice with top, distributive, complemented: the interval predicate for
/// the boolean type class.
pub fn is_boolean_pea(e: &FiniteGpea) -> bool {
    let top = match axioms::top_of(e) {
        Some(t) => t,
        None => return false,
    };
    let lattice = e
        .elements()
        .all(|a| e.elements().all(|b| e.meet(a, b).is_some() && e.join(a, b).is_some()));
    if !lattice {
        return false;
    }
    let distributive = e.elements().all(|a| {
        e.elements().all(|b| {
            e.elements().all(|c| {
                let lhs = e.join(b, c).and_then(|bc| e.meet(a, bc));
                let rhs = match (e.meet(a, b), e.meet(a, c)) {
                    (Some(x), Some(y)) => e.join(x, y),
                    _ => None,
                };
                lhs == rhs
            })
        })
    });
    let complemented = e
        .elements()
        .all(|a| e.elements().any(|b| e.meet(a, b) == Some(0) && e.join(a, b) == Some(top)));
    distributive && complemented
}

/// Every nonzero element of the interval below `p` dominates an atom.
pub fn is_atomic_below(e: &FiniteGpea, p: Elem) -> bool {
    let atoms = construct::atoms(e);
    e.down_set(p)
        .iter()
        .all(|x| x == 0 || atoms.iter().any(|a| e.leq(a, x)))
}

fn td_family(e: &FiniteGpea, covers: &CoverSystem, gamma_set: &ElementSet) -> Vec<(String, ElementSet)> {
    let n = e.order();
    let mut out: Vec<(String, ElementSet)> = Vec::new();
    let push = |name: String, set: ElementSet, out: &mut Vec<(String, ElementSet)>| {
        if !out.iter().any(|(_, s)| *s == set) {
            out.push((name, set));
        }
    };
    push("zero".into(), ElementSet::singleton(n, 0), &mut out);
    push("center".into(), gamma_set.clone(), &mut out);
    push("all".into(), ElementSet::full(n), &mut out);
    for x in 1..n {
        let gen = typetheory::td_generated_with(e, covers, &ElementSet::singleton(n, x));
        push(format!("gen:{x}"), gen, &mut out);
    }
    push(
        "commutative".into(),
        typetheory::tdset_from_pea_class(e, axioms::is_commutative),
        &mut out,
    );
    out
}
