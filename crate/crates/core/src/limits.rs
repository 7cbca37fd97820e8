//! Capacity bounds for the exhaustive enumerations.
//!
//! Every bound lives here so callers (the CLI in particular) can raise them in
//! one place. The defaults keep each enumeration at desk scale.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all parking trees on `n + 1` vertices are generated
    /// (`(7!)^2` is about 25.4 million trees).
    pub parking_trees: usize,
    /// Largest dimension `n` for which the B-permutations in `S_{n+1}` are listed.
    pub b_permutations: usize,
    /// Largest dimension for the direct (parking tree) toric g route.
    pub direct_route: usize,
    /// Largest dimension for the formula routes (gamma and h).
    pub formula_routes: usize,
    /// Largest `n` for brute force over all functions `[n] -> [n]`.
    pub all_functions: usize,
    /// Largest semilength for listing Dyck words.
    pub dyck_words: usize,
    /// Largest `n` for the exhaustive verification suites over words, sparse
    /// set pairs and polynomial families.
    pub verify_suites: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            parking_trees: 7,
            b_permutations: 7,
            direct_route: 6,
            formula_routes: 12,
            all_functions: 7,
            dyck_words: 15,
            verify_suites: 8,
        }
    }
}

impl Limits {
    /// Bounds large enough that nothing short of memory or patience stops a run.
    pub fn unbounded() -> Self {
        Limits {
            parking_trees: usize::MAX,
            b_permutations: usize::MAX,
            direct_route: usize::MAX,
            formula_routes: usize::MAX,
            all_functions: usize::MAX,
            dyck_words: usize::MAX,
            verify_suites: usize::MAX,
        }
    }

    pub fn check(what: &'static str, n: usize, limit: usize) -> Result<()> {
        if n > limit {
            Err(Error::Capacity { what, n, limit })
        } else {
            Ok(())
        }
    }
}
