//! Congruence families, their verification by coefficient scans, and the
//! quadratic-form checks behind them.

pub mod catalog;
pub mod forms;
pub mod scan;
pub mod tables;

pub use catalog::{admissible_j, family_claims, CatalogError, CongruenceClaim, FamilyParams, Provenance};
pub use scan::{Outcome, ScanError, ScanResult, Verifier, DEFAULT_MAX_TRUNCATION};
