//! Exact combinatorics of toric g-polynomials of simple polytopes: lattice
//! words, permutations and Foata–Strehl trees, parking functions and parking
//! trees, compatible Dyck words, polynomial transforms, and chordal nestohedra.

pub mod compat;
pub mod error;
pub mod limits;
pub mod nestohedra;
pub mod parking;
pub mod perms;
pub mod polyvec;
pub mod words;

pub use error::{Error, Result};
pub use limits::Limits;
