//! The classification logic: the projection gate, fast-path decisions for
//! every named family, table instantiation, exhaustive small-`n` searches,
//! and fast/oracle cross-validation.

mod enumerate;
mod families;
mod gate;
mod table1;

pub use enumerate::{
    cross_validate, enumerate_strong_gelfand, known_families, Budgets, ClassificationReport,
    Counts, CrossValidationReport, CrossValidationRow, Method, ReportRow,
};
pub use families::{family_decision, FamilyDecision, Verdict};
pub use gate::{classify_gamma, gamma_gate, GateOutcome};
pub use table1::{instantiate_table1, table1_candidates};
