//! Gray codes for the regions of supersolvable hyperplane arrangements.
//!
//! The crate enumerates the regions of a central arrangement exactly, builds
//! its graph of regions and poset of regions, and produces Hamiltonian cycles
//! in the region graph and Hamiltonian paths in the cover graphs of lattice
//! quotients. The zigzag construction works for any arrangement equipped with
//! a supersolvable chain; specialised loopless generators cover the classic
//! families (binary reflected Gray code, plain changes, signed permutations).
//!
//! Modules:
//!
//! * [`arrangement`]: exact arrangements, sign vectors, region graphs, chains
//! * [`lattice`]: posets, lattices, congruences and quotients
//! * [`zigzag`]: Hamiltonian cycles and quotient paths, listing verification
//! * [`families`]: coordinate / type A / type B builders and generators
//! * [`graphic`]: (signed) graphs, elimination orderings, acyclic orientations
//! * [`triangulation`]: symmetric triangulations and pattern-avoiding signed
//!   permutations
//! * [`cli`]: the command-line front end

pub mod arrangement;
pub mod cli;
pub mod error;
pub mod families;
pub mod graphic;
pub mod lattice;
pub mod triangulation;
pub mod zigzag;

pub use error::{Error, Result};
