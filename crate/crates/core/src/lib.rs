//! Exact arithmetic for pairs of isogenous elliptic curves over Q and
//! quadratic fields: curve models and invariants, prime-ideal arithmetic,
//! local reduction data, parameterised isogenous families, and the
//! machinery for deciding when two isogenous curves share a conductor and
//! minimal discriminant.

pub mod arith;
pub mod curve;
pub mod error;
pub mod families;
pub mod ideals;
pub mod localdata;
pub mod numeric;
pub mod poly;
pub mod resfield;
pub mod twinscan;
pub mod verify;

pub use curve::{is_isomorphic, Invariants, Transformation, WeierstrassModel};
pub use error::{Error, Result};
pub use families::{
    equal_j_case, family_curve, family_disc, family_j, family_polys, fricke_swap_check,
    kernel_identity_check, singular_t_factors, special_j_isogeny_count, special_j_pair,
    EqualJCase, FamilyPolys, FAMILY_PRIMES,
};
pub use ideals::{
    factor_principal_ideal, principal_generator_of_power, split_prime, valuation,
    IdealBasis, IdealFactorization, PrimeIdeal, SplitKind,
};
pub use localdata::{
    conductor_ideal, conductor_norm, isogenous_valuation_check, kodaira_from_mod12,
    local_data_all, minimal_discriminant_ideal, minimal_discriminant_value, tate_local,
    KodairaSymbol, LocalData, ReductionType,
};
pub use numeric::{nth_power_root, units_of, Field, FieldElem, QuadField, Rat};
pub use poly::Poly;
pub use resfield::{ResElem, ResField};
pub use twinscan::{
    classify_pair, enumerate_imag_quad, enumerate_over_q, family_twin_criterion,
    special_pair_criterion, CandidateSource, CriterionOutcome, TwinCandidate, TwinStatus,
    TwinVerdict, VerdictReason,
};
pub use verify::{
    tables, verify_all, verify_section, CellDiff, DiffReport, SectionReport, ALL_SECTIONS,
    TABLES_JSON, TABLES_SCHEMA,
};
