//! Monomial ideals attached to c-chains.

pub mod graph;
pub mod monomial_ideal;
pub mod primes;
pub mod quotients;

pub use graph::{verify_perfect_graph, CGraph, SubgraphTables, BRUTE_FORCE_LIMIT};
pub use monomial_ideal::MonomialIdeal;
pub use primes::{
    enumerate_ar, gamma_oracle, in_prime_power_intersection, j_product, jt_generators, order_in_prime,
    prime_power_oracle, shape_prime_oracle, socle_inequality_holds, symbolic_membership, FacetPrime,
    MembershipCertificate, PrimeWitness,
};
pub use quotients::{
    certify_order, linear_quotients_certify, omega_generators, sigma_compare, verify_linear_quotients,
    LinearQuotientCertificate, LinearQuotientFailure, LinearQuotientStep,
};
