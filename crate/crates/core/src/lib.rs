pub mod cli;
pub mod cylfn;
pub mod error;
pub mod levinson;
pub mod observables;
pub mod potentials;
pub mod radial;
pub mod spectrum;
