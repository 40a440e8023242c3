//! Exact computation of unit-weighted zero-sum invariants of Z_n.
//!
//! The library decides weighted zero-sum subsequence existence, computes
//! the weighted Davenport and Gao constants by symmetry-reduced exhaustive
//! search, enumerates extremal sequences up to unit equivalence, and checks
//! the enumerated catalogs against constructive structural predictions for
//! the characterized modulus families (odd n, two-powers, and 2^r times an
//! odd prime).

pub mod bitset;
pub mod catalog;
pub mod classifier;
pub mod crt;
pub mod engine;
pub mod error;
pub mod residue;
pub mod search;
pub mod sequence;
pub mod solver;
pub mod suites;

pub use catalog::{
    are_equivalent, canonicalize, enumerate_davenport_extremal, enumerate_gao_extremal,
    CanonicalProfile, CatalogClass, ConstantKind, ExtremalCatalog,
};
pub use classifier::{
    classify, predicted_gao_extremal, squarefree_davenport_witness, structural_audit_2rp,
    verify_theorem, FormKind, FormTag, StructuralAudit, TheoremFamily, TheoremVerdict,
    TwoPowerPattern,
};
pub use crt::crt_equivalent_check;
pub use engine::{
    find_zero_sum_subsequence, find_zero_sum_subsequence_of_length, has_zero_sum_subsequence,
    has_zero_sum_subsequence_of_length, lift_check, reachable_sums, FeasibilityTable,
    WitnessSelection,
};
pub use error::{Error, Result};
pub use residue::{
    factorize, factorize_with_limit, gcd, orbit_of, units, Modulus, WeightKind, WeightSet,
    DEFAULT_MODULUS_LIMIT,
};
pub use sequence::ResidueSequence;
pub use solver::{
    constants_record, davenport_constant, gao_constant, verify_identities, Budget,
    ConstantsRecord, DavenportResult, GaoResult, IdentityReport, SearchStats,
};
