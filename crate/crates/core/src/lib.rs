//! Local contact algebras, regular closed sets of finite spaces, and the
//! duality machinery connecting them, computed exactly at finite scale and on
//! a rational-interval model of the real line.

pub mod algebra;
pub mod cli;
pub mod contact;
pub mod duality;
pub mod error;
pub mod harness;
pub mod json;
pub mod morphisms;
pub mod topology;

pub use error::{Error, Result};
