//! Quasi-split tropical graphs, discrepancy cones and the cone condition.

mod cone_condition;
mod format;
mod qsplit;

pub use cone_condition::{
    cone_condition, evaluate_scaling, genericity_family, is_split_graph, iterative_split_check, ConeConditionVerdict,
    ScalingVerdict, SplitVerdict,
};
pub use format::{qsplit_from_json, toric_input_from_json, ToricInput};
pub use qsplit::{
    discrepancy, index_shift, is_rigid_split, relative_position_cone, DeformationSpace, Discrepancy, QuasiSplitGraph,
    RelativeCone,
};
