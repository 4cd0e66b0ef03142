//! Circulant graphs `C_n(R)`, Adam's and Type-2 isomorphisms, the `np³`
//! families of Type-2 isomorphic graphs and a brute-force isomorphism oracle.

pub mod error;
pub mod families;
pub mod oracle;
pub mod orbits;
pub mod text;
pub mod transforms;
pub mod zmod;

pub use error::{Error, Result};
pub use families::{
    annexure_blocks, annexure_listing, complement_params, extended_family_all, extended_family_set,
    family_all, family_base_jump, family_set, is_self_complementary, verify_family, AnnexureBlock,
    ExtendedParams, FamilyParams, FamilyReport,
};
pub use oracle::{
    brute_force_isomorphic, verify_certificate, witness_to_certificate, IsoCertificate,
    OracleOutcome, OracleResult, DEFAULT_ORACLE_BUDGET,
};
pub use orbits::{
    adams_orbit, apply_path, ci_scan, classify_pair, composite_search, type2_group, v_orbit,
    AdamsOrbit, CiReport, IsoVerdict, SearchBudget, Step, Type2Group,
};
pub use text::{parse_graph, parse_graph_detailed, render_full, render_graph};
pub use transforms::{
    adams_image, adams_witness, is_symmetric, theta_graph, theta_image, theta_residue, theta_set,
    theta_set_period, theta_table, RowClass, ThetaImage, ThetaParams, ThetaTable,
};
pub use zmod::{
    expand_full, gcd_profile, periodic_cycle_length, reflexive_reduce, spectrum_invariant, units,
    CirculantGraph, FullConnectionSet, JumpSet, Modulus,
};
