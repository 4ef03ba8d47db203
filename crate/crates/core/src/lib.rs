pub mod catalog;
pub mod cli;
pub mod cover;
pub mod discharge;
pub mod graph;
pub mod hunt;
pub mod report;
pub mod rotation;
pub mod solver;
