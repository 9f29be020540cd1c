//! Finite-field toolkit: GF(p^n) construction and arithmetic, Frobenius
//! automorphisms and the Galois correspondence, plus the supporting number
//! theory in Z/nZ (CRT, unit group structure, totient).

pub mod arith;
pub mod error;
pub mod field;
pub mod galois;
pub mod linalg;
pub mod poly;
pub mod zmod;

pub use error::{Error, Result};
pub use field::{
    combine_generators, element_order_mult, eval_in_field, field_iso, fixed_subfield, frobenius,
    min_poly, mult_generator, poly_roots, roots_of_unity, subfield_lattice, FieldElement, FieldIso,
    FieldSpec, MinimalPoly, SubfieldDescriptor, DEFAULT_SCAN_LIMIT,
};
pub use galois::{
    all_automorphisms, correspondence_table, fixed_field, galois_group,
    is_cyclic_by_subgroup_counts, quotient_action_check, stabilizer, subgroups, Automorphism,
    ClauseCheck, CorrespondenceEntry, GaloisGroup, QuotientActionReport, SubgroupDescriptor,
};
pub use linalg::ZpMatrix;
pub use poly::PrimePoly;
pub use zmod::{
    crt_solve, element_order, find_unit_generator, power_divisibility, totient,
    unit_group_structure, CrtSystem, GroupStructure, ZmodElement,
};
