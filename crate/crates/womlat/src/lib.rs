//! Workbench for weakly orthomodular and dually weakly orthomodular
//! lattices: finite lattices with operation tables, the D-, W- and Sasaki
//! implications with their correspondence theorems, residuated groupoid
//! constructions, generalized measures, a small term language for checking
//! arbitrary identities, and exhaustive enumeration of small models.

pub mod algebra;
pub mod fixtures;
pub mod implication;
pub mod io;
pub mod lattice;
pub mod measures;
pub mod residuation;
pub mod search;
pub mod term;
pub mod workbench;
