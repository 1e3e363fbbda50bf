pub mod blocks;
pub mod cli;
pub mod error;
pub mod extensions;
pub mod factors;
pub mod group;
pub mod lattice;
pub mod products;
pub mod semisimple;

pub use error::{Error, Result};
