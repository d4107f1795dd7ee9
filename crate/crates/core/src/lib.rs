//! Relativistic operator families for spin-1/2 particles and the circulation
//! of Laguerre-Gauss electron vortex beams.

pub mod algebra;
pub mod commands;
pub mod config;
pub mod error;
pub mod field;
pub mod kernels;
pub mod observables;
pub mod output;
pub mod position;
pub mod verify;
pub mod wavepacket;

pub use error::{Error, Result};
