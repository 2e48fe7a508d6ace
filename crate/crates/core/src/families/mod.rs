//! Generators for the concrete constructions.

mod bdm;
mod crm;
mod voltage;

pub use bdm::{
    automorphism_permutation, bd_digraph, bdm, bdm_arc, bdm_canonical, bdm_star, bdm_star_arc,
    bdm_star_in_neighbour, canonical_m, canonical_n, named_automorphism, parse_pattern,
    path_endpoint_formula, pattern_alternating, pattern_u_shortcut, pattern_v_shortcut,
    u_endpoint, v_endpoint, walk_pattern, BdmVertex, EndpointKind, NamedAutomorphism, Step,
};
pub use crm::{cdrm, crm, crm_optimal, max_distance_row, CdrmConvention, CrmCase, CrmParams};
pub use voltage::{lift, Dart, DartKind, VoltageBaseGraph};
