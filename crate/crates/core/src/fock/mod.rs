//! Depth-truncated Fock spaces and the sparse linear algebra on them.

mod operator;
mod serial;
mod space;
mod tensor;
mod vector;

pub use operator::{ColumnBuilder, Operator};
pub use serial::CooEntry;
pub use space::{Factor, FockSpace, TensorSpace};
pub use tensor::{flip, leg_embed, permute_legs, slice_left, slice_right, tensor_op, tensor_op_on_columns, RankOnePairs};
pub use vector::Vector;
