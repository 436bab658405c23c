//! Exact enumeration of staircase words on the extended path graph
//! `P_{n,L}`: words over `1..=k` in which any two letters at distance at
//! most `L` differ by at most one.
//!
//! Counting goes through a brute-force oracle and a suffix-automaton
//! transfer matrix; generating functions come from series reconstruction,
//! a Chebyshev closed form, a kernel-method assembly through the root
//! `t1`, and an explicit solve of the kernel linear system.

pub mod chebyshev;
pub mod error;
pub mod exactnum;
pub mod genfun;
pub mod kernel;
pub mod staircase;
pub mod verify;

pub use error::{Error, Result};
