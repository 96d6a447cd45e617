//! The executable law suite: one named check per supported universally
//! quantified statement, runnable over any model or the standard corpora.
//!
//! Each law quantifies exhaustively at the model's scale. Statements about
//! arbitrary index families are instantiated over all subsets where that is
//! affordable and over a documented deterministic reduction otherwise; the
//! reduction arguments live in `docs/laws.md` next to the registry manifest.

mod cent;
mod corpus;
mod covers;
mod ctx;
mod decomp;
mod exo;
mod order;
mod ortho;
mod types;

pub use corpus::{acceptance_corpus, constructed_corpus, enumerated_corpus, CorpusModel};
pub use ctx::{is_boolean_pea, ModelCtx};

use crate::algebra::FiniteGpea;

/// Early-return failure with a formatted witness.
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}
pub(crate) use ensure;

/// One registered law: a stable identifier, its group, a one-line statement
/// and the checking function. A check returns a witness description on
/// failure.
#[derive(Clone, Copy)]
pub struct Law {
    pub id: &'static str,
    pub group: &'static str,
    pub summary: &'static str,
    pub run: fn(&ModelCtx) -> Result<(), String>,
}

/// Outcome of one law on one model; failures carry a re-checkable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub law: String,
    pub model: String,
    pub pass: bool,
    pub witness: Option<String>,
}

/// The full registry, in stable order: order laws first, then exocenter,
/// center, orthocompleteness, covers, type-determining sets, decomposition.
pub fn registry() -> Vec<Law> {
    let mut out = Vec::new();
    out.extend(order::laws());
    out.extend(exo::laws());
    out.extend(cent::laws());
    out.extend(ortho::laws());
    out.extend(covers::laws());
    out.extend(types::laws());
    out.extend(decomp::laws());
    out
}

pub fn law_ids() -> Vec<&'static str> {
    registry().iter().map(|l| l.id).collect()
}

/// Run a selection of laws (all when `selection` is `None`) on one model.
/// Unknown identifiers are reported as an error.
pub fn verify_laws(
    e: &FiniteGpea,
    model_id: &str,
    selection: Option<&[String]>,
) -> Result<Vec<LawResult>, String> {
    let ctx = ModelCtx::new(model_id, e.clone());
    verify_laws_on(&ctx, selection)
}

/// Run laws against a prepared context.
pub fn verify_laws_on(ctx: &ModelCtx, selection: Option<&[String]>) -> Result<Vec<LawResult>, String> {
    verify_laws_within(ctx, selection, None)
}

/// Like [`verify_laws_on`], with an optional per-law wall-clock limit. A law
/// exceeding the limit is reported as a failure with a timeout witness; its
/// worker is abandoned rather than interrupted.
pub fn verify_laws_within(
    ctx: &ModelCtx,
    selection: Option<&[String]>,
    per_law_timeout: Option<std::time::Duration>,
) -> Result<Vec<LawResult>, String> {
    let registry = registry();
    let selected: Vec<Law> = match selection {
        None => registry,
        Some(ids) => {
            let mut picked = Vec::new();
            for id in ids {
                match registry.iter().find(|l| l.id == *id) {
                    Some(law) => picked.push(*law),
                    None => return Err(format!("unknown law id: {id}")),
                }
            }
            picked
        }
    };
    match per_law_timeout {
        None => Ok(selected
            .into_iter()
            .map(|law| {
                let outcome = (law.run)(ctx);
                LawResult {
                    law: law.id.to_string(),
                    model: ctx.id.clone(),
                    pass: outcome.is_ok(),
                    witness: outcome.err(),
                }
            })
            .collect()),
        Some(limit) => {
            let shared = std::sync::Arc::new(ctx.clone());
            Ok(selected
                .into_iter()
                .map(|law| {
                    let (tx, rx) = std::sync::mpsc::channel();
                    let worker_ctx = shared.clone();
                    std::thread::spawn(move || {
                        let _ = tx.send((law.run)(&worker_ctx));
                    });
                    let outcome = match rx.recv_timeout(limit) {
                        Ok(result) => result,
                        Err(_) => Err(format!("timed out after {limit:?}")),
                    };
                    LawResult {
                        law: law.id.to_string(),
                        model: ctx.id.clone(),
                        pass: outcome.is_ok(),
                        witness: outcome.err(),
                    }
                })
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids = law_ids();
        let total = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), total, "duplicate law identifiers");
    }

    #[test]
    fn unknown_law_is_rejected() {
        let e = crate::construct::chain(2).unwrap();
        assert!(verify_laws(&e, "chain/2", Some(&["no-such-law".to_string()])).is_err());
    }

    #[test]
    fn trivial_model_passes_everything() {
        let e = crate::construct::chain(1).unwrap();
        let results = verify_laws(&e, "chain/1", None).unwrap();
        for r in &results {
            assert!(r.pass, "{} failed on the trivial model: {:?}", r.law, r.witness);
        }
    }

    /// The checked-in manifest lists exactly the registered identifiers.
    #[test]
    fn registry_matches_docs_manifest() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/docs/laws.md");
        let text = std::fs::read_to_string(path).expect("docs/laws.md present");
        let mut documented: Vec<String> = text
            .lines()
            .filter_map(|l| {
                let l = l.trim();
                l.strip_prefix("| `")?.split('`').next().map(str::to_string)
            })
            .collect();
        let mut ids: Vec<String> = law_ids().iter().map(|s| s.to_string()).collect();
        documented.sort();
        ids.sort();
        documented.dedup();
        assert_eq!(documented, ids, "docs/laws.md and the registry disagree");
    }
}
