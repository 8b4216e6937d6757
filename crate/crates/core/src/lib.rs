pub mod automata;
pub mod bs;
pub mod columns;
pub mod compile;
pub mod decisions;
pub mod error;
pub mod group;
pub mod hardness;
pub mod oracle;
pub mod pe;
pub mod pe_regular;
pub mod succinct;

pub use error::{Error, Result};
