//! Identity auditor over modular datasets.
//!
//! Sections: `S̃² = C̃`, the product rule in the span of the `φ_{P_A}`, the
//! Verlinde-like formula, Hopf-link values, `M^1` against the Cartan matrix,
//! and rank bookkeeping. Failures carry exact witnesses; rescaling is a
//! separate diagnostic and never alters the verdicts.

mod checks;
mod dataset;
mod datasets;

pub use checks::{
    full_audit, hopf_link_check, hopf_link_value, hopf_link_value_with_reference, m1_cartan_check,
    product_rule_check, rank_check, rescale_solver, s_squared_check, solve_b_multiplier, verlinde_check,
    AuditReport, Rescaling, Section, Summary, Verdict, Witness,
};
pub use dataset::{Fusion, HopfExpectation, ModularDataSet};
pub use datasets::{sf_dataset_with_fusion, sf_printed_dataset, synthetic_modular_dataset, toric_code_dataset};
