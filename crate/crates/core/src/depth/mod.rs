//! Tree-depth, SC-depth, BSC-depth and tree-models.

pub mod shrub;
pub mod treedepth;
pub mod treemodel;

pub use shrub::{
    bsc_depth, eval_bsc, eval_sc, sc_depth, BscDecomposition, BscNode, BscSolver, ScDecomposition, ScNode,
    ScSolver, SHRUB_SEARCH_LIMIT,
};
pub use treedepth::{tree_depth, verify_td, TdViolation, TreeDepthDecomposition, TREE_DEPTH_LIMIT};
pub use treemodel::{eval_tree_model, find_tree_model, SignatureEntry, TreeModel, TreeShape};
