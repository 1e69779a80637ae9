//! The modular group and its relatives acting on the upper half-plane,
//! modular forms, covolume conditions and the orbit witness.

mod bounds;
mod forms;
mod moebius;
mod orbit;
mod signature;
mod witness;

pub use bounds::{check_corollary1, check_modular_group, check_theorem2, weight_threshold, BoundReport, Verdict};
pub use forms::{
    delta_cusp_form, eisenstein, eval_form, eval_form_with_tolerance, AutomorphicForm, Eisenstein, FormPencil,
    QExpansion, EVAL_TOLERANCE,
};
pub use moebius::{in_fundamental_domain, moebius_apply, reduce_to_fundamental, MoebiusElement};
pub use orbit::{orbit, GroupKind, OrbitPoint, POINT_TOLERANCE};
pub use signature::{
    dim_hol, fundamental_area, poincare_zero_count, poincare_zero_count_exact, GroupSignature, Order, PiMultiple,
};
pub use witness::{
    incompleteness_witness, modular_orbit, witness_function, DiscPartial, WitnessConfig, WitnessReport,
};
