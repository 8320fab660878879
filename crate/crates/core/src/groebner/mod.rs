//! Buchberger's algorithm over the rationals and the verification drivers.

pub mod buchberger;

pub use buchberger::{
    buchberger, interreduce, is_groebner_exhaustive, is_groebner_pruned, normal_form, s_polynomial, top_reduce,
    BuchbergerConfig, Budget, GbVerdict, GroebnerBasis, RunStats,
};

pub mod verify;

pub use verify::{
    chain_tuples, it_generators, products_of_shape, symbolic_power_exponents, symbolic_power_generators,
    verify_minors_gb, verify_primary_decomposition, verify_secant, verify_symbolic_power,
};

pub mod join;

pub use join::{contained_in, join_ideal, join_many, secant, symbolic_power_by_join, IdealPresentation};

pub mod standard;

pub use standard::{factor_to_shape, standard_rep_gamma_check, standard_representation, StandardTerm};
