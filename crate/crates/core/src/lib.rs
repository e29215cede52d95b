#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod algebra;
pub mod coeff;
pub mod lie;
pub mod spectral;
