//! Straightening of chain tableaux into quasi-sorted form, and the quadratic
//! presentation of the multi-Rees algebra built on it.

pub mod confluence;
pub mod pairs;
pub mod pf;
pub mod rees;

pub use confluence::{check_tableau, confluence_harness, random_tableau, ConfluenceFailure, TableauBounds};
pub use pairs::{
    is_quasi_sorted_pair, is_quasi_sorted_tableau, is_sorted_pair, newtype_site, newtype_step, order_pair,
    plucker_step, reduce_pair, reduce_tableau, step_pair, LSet, MoveKind, NewTypeSite, Reduction, Strategy, TraceStep,
    STEP_CAP,
};
pub use pf::{canonical_placement, pf_labeling, PFTable};
pub use rees::{
    is_quasi_sorted_monomial, normal_pair, psi, rees_quadrics, rees_variable_site, verify_standard_monomials, PsiImage,
    ReesVar, RelationKind, RewriteRelation, StandardMonomialStats,
};
