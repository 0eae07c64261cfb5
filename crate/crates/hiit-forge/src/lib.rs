pub mod checker;
pub mod cli;
pub mod core;
pub mod diag;
pub mod emit;
pub mod name;
pub mod surface;
pub mod target;
pub mod translate;
