//! Class functions with cyclotomic values and character tables.

mod classfn;
mod table;

pub use classfn::ClassFunction;
pub use table::{CharTable, TableReport};
