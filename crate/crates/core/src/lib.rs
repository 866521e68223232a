//! Exact commutative algebra for generic linkage.
//!
//! Polynomial rings over `QQ` or `Fp`, Gröbner bases of ideals and modules,
//! ideal operations, minimal free resolutions, Newton polyhedra and
//! multiplier ideals of monomial ideals, and generic links with the
//! numerical checks that accompany them.

pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linkage;
pub mod monideal;
pub mod monomial;
pub mod multiplier;
pub mod parse;
pub mod poly;
pub mod polyhedron;
pub mod resolution;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{buchberger, normal_form, GroebnerBasis, ModuleOrder, Vector};
pub use hilbert::HilbertSeries;
pub use ideal::{Degree, Ideal};
pub use monideal::MonomialIdeal;
pub use monomial::{compare_monomials, Monomial, MonomialOrder};
pub use parse::{parse_ring_file, ParsedFile, RingFile};
pub use poly::{Polynomial, Ring};
pub use multiplier::{
    ein_criterion, is_log_canonical, lct, multiplier_ideal, nonlc_locus, nonlc_locus_affine,
    projective_lct, projective_multiplier_ideal, EinOutcome, NonLcLocus,
};
pub use polyhedron::{newton_polyhedron, Facet, NewtonPolyhedron};
pub use resolution::{
    canonical_module, minimal_free_resolution, regularity, BettiTable, GradedMatrix,
    GradedModulePresentation, Resolution,
};
pub use linkage::{
    check_cm_equivalence, check_degree_additivity, check_gr_candidate, check_omega_betti,
    check_omega_formula, check_regularity_bound, generic_link, generic_link_with, link_sequence,
    lct_monotonicity_check, rationality_criterion, run_link_checks, verify_geometric_linkage,
    Annotations, CheckOutcome, CheckStatus, LinkResult, SequenceStep, Situation,
};
