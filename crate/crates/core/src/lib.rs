//! Workbench for propositional stable-model semantics built around two
//! positive dependency graphs: the strictly positive graph (`sp`) and the
//! positive nonnegated graph (`pnn`).
//!
//! * [`formula`]: syntax, parsing and occurrence analysis;
//! * [`semantics`]: reducts and exhaustive model enumeration;
//! * [`depgraph`]: graph construction, cycles, components and loops;
//! * [`loopformulas`]: NES and loop formulas;
//! * [`splitting`]: splitting conditions and their verification;
//! * [`fuzz`]: seeded refutation search for the properties above.
//!
//! Enumeration is exhaustive and exponential in the number of atoms; it is
//! meant as ground truth for small theories. With the default `parallel`
//! feature the subset sweeps and fuzz batches run on rayon.

pub mod depgraph;
pub mod error;
pub mod exec;
pub mod formula;
pub mod fuzz;
pub mod loopformulas;
pub mod semantics;
pub mod splitting;

pub use depgraph::{DepGraph, GraphKind};
pub use error::{Error, Result};
pub use exec::Exec;
pub use formula::{parse_formula, parse_theory, Atom, Formula, Theory};
pub use semantics::{Enumerator, Interpretation, ModelReport};
