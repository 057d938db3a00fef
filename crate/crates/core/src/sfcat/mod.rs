//! The symplectic fermion category `SF(h, β)` for `N = ½ dim h`.
//!
//! Sector 0 consists of graded `Λ(h)`-modules, sector 1 of super vector spaces.
//! Projective covers: `P_1 = Λ`, `P_{Π1} = ΠΛ`, `P_T = T`, `P_{ΠT} = ΠT`.

mod fusion;
mod lambda;
mod modular;
mod object;
mod phi;
mod trace;

pub use fusion::{decompose_projective, multiplicity, projective_covers, sf_fusion, sf_fusion_closed_form, FusionTable, IRR};
pub use lambda::{default_beta_sq_inv, lambda_algebra, LambdaAlgebra, MAX_N};
pub use modular::{cartan_from_composition_series, radical_layers, sf_cartan, sf_modular_data, SFModularData};
pub use object::{sf_hom_basis, sf_tensor, sf_tensor_capped, SFObject};
pub use phi::{sf_check_trace_vs_tg, sf_phi_table, PhiTable, TraceVsTg};
pub use trace::{right_multiplication, sf_modified_trace, sf_modified_trace_with};
