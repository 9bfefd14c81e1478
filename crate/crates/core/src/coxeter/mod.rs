//! Exact Weyl-group engine for the simply-laced types A and D.

mod group;
mod index_set;
pub mod oracle;
mod root_system;

pub use group::{WeylElement, WeylGroup, Word};
pub use index_set::IndexSet;
pub use root_system::{
    cartan_matrix, group_order_formula, is_supported, positive_root_count, positive_roots,
    DiagramType,
};
