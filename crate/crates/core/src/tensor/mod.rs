//! Exact sparse tensors at a fixed rank: Johnson images of abelian cycles,
//! the wedge expansion, contraction maps, group actions, and brute-force
//! oracles.

mod checks;
mod comult;
mod element;
mod freegroup;
mod group;
mod kernel;
mod linalg;
mod plan;
mod uvec;

pub use checks::{
    apply_f, apply_f_to_tensor, hwv_check, hwv_vector, io_contraction_checks, io_wheel_coefficient,
    is_standard_relabeling, lem_connected, lem_contraction_computation, pair_part_contraction,
    standard_relabelings, traceless_generator_check, wedge_target, CheckRow,
};
pub use comult::{comultiply_check, f_total, ComultiplyReport};
pub use element::{Block, Index, Signature, TensorElement, Variance};
pub use freegroup::{free_auto_check_commute, invert, reduce, FreeAut, Word};
pub use group::{apply_group, product, Generator, GroupOp};
pub use kernel::{kernel_generator_checks, IdentityRow, KernelReport};
pub use linalg::{
    e_pq, in_joint_kernel, kernel_dim, kernel_dim_formula, span_closure_dim, Echelon, DEFAULT_BUDGET,
};
pub use plan::{
    c_plan, c_wheel_plan, chunk_plan, m_slots, trace_contract, trace_embed, trace_self_test, tree_projection, Chunk,
    ContractionPlan,
};
pub use uvec::{
    abelian_cycle_chain, abelian_cycle_tuple, io_embed, iota_expand, iota_sum, magnus_image, min_rank_for_cycle,
    ChainFactor, MagnusGen, UStarVector, UVector, WedgeChain,
};
