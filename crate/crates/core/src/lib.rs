#![allow(clippy::needless_range_loop)]

pub mod check;
pub mod connect;
pub mod contact;
pub mod curv;
pub mod error;
pub mod exactalg;
pub mod fixture;
pub mod homog;
pub mod liealg;
pub mod linalg;
pub mod par;
pub mod params;
pub mod suite;
pub mod sweep;
pub mod tensor;

pub use error::{Error, Result};
