pub mod chromatic;
pub mod error;
pub mod graph;
pub mod limits;
pub mod ncsym;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
