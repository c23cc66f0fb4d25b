//! Graded local cohomology, Matlis duality and Cohen-Macaulayfication for
//! finitely generated graded modules over `S = F_p[x_1, ..., x_n]`.
//!
//! Artinian modules are handled through their Matlis duals, local cohomology
//! through graded local duality `H^i_m(M)^∨ = Ext^{n-i}_S(M, S(-n))`.

pub mod cmfication;
pub mod complex;
pub mod duality;
pub mod error;
pub mod field;
pub mod free;
pub mod groebner;
pub mod invariants;
pub mod iso;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod par;
pub mod poly;

pub use cmfication::{
    canonical_module_check, check_goto_cmfication, check_uniqueness, cmfication_candidate, goto_vanishing_pattern,
    hom_into_gorenstein, two_planes_example, CanonicalCheck, CmficationReport, Condition, GotoPattern, GotoReport,
    TwoPlanes, Uniqueness,
};
pub use complex::{
    complex_homology, free_resolution, koszul_complex, pd, BettiTable, Complex, HilbertNumerator, Resolution, Variant,
};
pub use duality::{
    artinian_dual_of, find_sop, is_co_cm, is_coregular, is_regular_sequence, koszul_homology_artinian,
    local_homology_top, noetherian_dim, noetherian_dual_of, top_local_cohomology, top_local_homology, width,
    ArtinianRep, LocalHomologyTop, Sop,
};
pub use error::{Error, Result};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use free::{FreeElement, FreeMap, FreeModule};
pub use groebner::{groebner_basis, normal_form, syzygies, GroebnerBasis};
pub use ideal::Ideal;
pub use iso::{degree_zero_homs, is_isomorphic, DegreeZeroHoms, IsoAnswer};
pub use invariants::{
    depth, ext_module, invariants, is_cohen_macaulay, is_finite_length, krull_dim, matlis_dual_finite, resolve,
    InvariantReport,
};
pub use module::{
    annihilator, cokernel, cokernel_with_projection, direct_sum, hilbert_function, hom_module, image, kernel,
    minimalize, present, FPModule, ModuleMap,
};
pub use monomial::{grevlex_cmp, Monomial};
pub use poly::{Polynomial, Ring};
