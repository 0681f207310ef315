//! Catalog verification and report generation.
//!
//! A catalog lists `(G, phi, f)` triples. Each entry is resolved, its
//! hypotheses checked, and when they hold the Fitting-height and index bounds
//! are asserted along with the auxiliary checks. Hypothesis failures are a
//! separate outcome from bound violations.

pub mod catalog;
pub mod report;
pub mod search;
pub mod verify;

use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::automorphism::AutomorphismError;
use crate::constructions::ConstructionError;
use crate::group::GroupError;

pub use catalog::{AutSpec, Catalog, CatalogEntry, Expectation, ExpectedOutcome, GroupSpec, Identity, IdentitySpec, Resolved};
pub use report::{Format, Report};
pub use search::{identity_search, SearchLimits, SearchResult};
pub use verify::{Check, CheckStatus, Outcome, VerificationRecord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed catalog: {0}")]
    Catalog(String),
    #[error("cannot resolve entry: {0}")]
    Resolution(String),
    #[error("entry {label:?}: {source}")]
    Entry {
        label: String,
        #[source]
        source: Box<HarnessError>,
    },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Automorphism(#[from] AutomorphismError),
}

/// Resolves and verifies one entry, then compares it with its expectation.
pub fn verify_entry(entry: &CatalogEntry, base_dir: &Path) -> Result<VerificationRecord, HarnessError> {
    let resolved = entry.resolve(base_dir).map_err(|e| HarnessError::Entry {
        label: entry.label.clone(),
        source: Box::new(e),
    })?;
    let mut record = verify::verify_resolved(&entry.label, &resolved);
    record.expectation_failures = verify::expectation_failures(&record, &entry.expect);
    Ok(record)
}

/// Verifies every entry concurrently; records keep catalog order.
pub fn run_catalog(catalog: &Catalog, base_dir: &Path) -> Result<Report, HarnessError> {
    let records = catalog
        .entries
        .par_iter()
        .map(|e| verify_entry(e, base_dir))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report { records })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(json: &str) -> CatalogEntry {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn c7_pipeline() {
        let e = entry(
            r#"{"label": "c7", "group": {"kind": "stock", "name": "C7"},
                "automorphism": {"kind": "power_map", "k": 2},
                "identity": {"kind": "ordered", "coeffs": [-2, 1]}}"#,
        );
        let r = verify_entry(&e, Path::new(".")).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        let inv = r.invariants.as_ref().unwrap();
        assert_eq!((inv.m, inv.d, inv.radical_order, inv.h_radical), (1, 1, 7, 1));
        assert_eq!(inv.h_centraliser, Some(0));
        let b = r.bounds.as_ref().unwrap();
        assert_eq!(b.b1_d_hc, Some(10));
        assert_eq!(b.b2_d_m.exact().map(|v| v.to_string()), Some("1".into()));
        assert!(r.verdicts.iter().all(|c| c.status == CheckStatus::Pass));
        let status = |name: &str| r.addenda.iter().find(|c| c.name == name).unwrap().status;
        assert_eq!(status("corollary"), CheckStatus::Pass);
        assert_eq!(status("turull"), CheckStatus::Pass);
        assert_eq!(status("section bounds"), CheckStatus::Pass);
        assert_eq!(status("rowley"), CheckStatus::Pass);
        assert!(r.ok());
    }

    #[test]
    fn constant_identity_rejected() {
        let e = entry(
            r#"{"label": "a5sq", "group": {"kind": "shift_power", "base": {"kind": "stock", "name": "A5"}, "n": 2},
                "automorphism": {"kind": "builtin"},
                "identity": {"kind": "ordered", "coeffs": [60]},
                "expect": {"outcome": "hypothesis_failure", "reason_contains": "not primitive (content 60)"}}"#,
        );
        let r = verify_entry(&e, Path::new(".")).unwrap();
        assert_eq!(r.outcome, Outcome::HypothesisFailure);
        assert!(r.hypotheses.identity_satisfied);
        assert!(r.verdicts.is_empty());
        assert!(r.ok(), "{:?}", r.expectation_failures);
    }

    #[test]
    fn wrong_expectation_is_reported() {
        let e = entry(
            r#"{"label": "c7", "group": {"kind": "stock", "name": "C7"},
                "automorphism": {"kind": "power_map", "k": 2},
                "identity": {"kind": "ordered", "coeffs": [-2, 1]},
                "expect": {"m": 2}}"#,
        );
        let r = verify_entry(&e, Path::new(".")).unwrap();
        assert!(!r.ok());
        assert_eq!(r.expectation_failures, vec!["m: expected 2, got Some(1)".to_string()]);
    }
}
