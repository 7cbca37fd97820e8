//! γ- and h-vectors of the cube, associahedron, cyclohedron and permutahedron.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::poly::IntPoly;
use super::transforms::{h_to_gamma, toric_g_from_gamma};
use crate::error::{Error, Result};
use crate::words::{binomial, catalan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cube,
    Associahedron,
    Cyclohedron,
    Permutahedron,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Cube,
        Family::Associahedron,
        Family::Cyclohedron,
        Family::Permutahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cube => "cube",
            Family::Associahedron => "associahedron",
            Family::Cyclohedron => "cyclohedron",
            Family::Permutahedron => "permutahedron",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                Error::parse(
                    s,
                    "expected cube, associahedron, cyclohedron or permutahedron",
                )
            })
    }
}

/// The γ-vector `γ_0..γ_{⌊n/2⌋}` of the `n`-dimensional member of `family`.
pub fn gamma_family(family: Family, n: usize) -> Vec<BigInt> {
    let (ni, half) = (n as i64, n / 2);
    match family {
        Family::Cube => {
            let h: Vec<BigInt> = (0..=ni).map(|i| binomial(ni, i)).collect();
            h_to_gamma(&h).expect("binomial rows are palindromic")
        }
        Family::Associahedron => (0..=half)
            .map(|j| catalan(j as u32) * binomial(ni, 2 * j as i64))
            .collect(),
        Family::Cyclohedron => (0..=half)
            .map(|j| binomial(2 * j as i64, j as i64) * binomial(ni, 2 * j as i64))
            .collect(),
        Family::Permutahedron => {
            let mut gamma = vec![BigInt::from(1)];
            for m in 2..=n as i64 {
                let mut next = vec![BigInt::from(0); m as usize / 2 + 1];
                for (j, slot) in next.iter_mut().enumerate() {
                    let ji = j as i64;
                    if let Some(g) = gamma.get(j) {
                        *slot += g * (ji + 1);
                    }
                    if j >= 1 {
                        if let Some(g) = gamma.get(j - 1) {
                            *slot += g * (2 * m + 2 - 4 * ji);
                        }
                    }
                }
                gamma = next;
            }
            gamma.truncate(half + 1);
            gamma
        }
    }
}

/// The h-vector from the family's own counting formula, independent of γ:
/// binomials, Narayana numbers, squared binomials and Eulerian numbers.
pub fn h_family(family: Family, n: usize) -> Vec<BigInt> {
    let ni = n as i64;
    match family {
        Family::Cube => (0..=ni).map(|i| binomial(ni, i)).collect(),
        Family::Associahedron => (0..=ni)
            .map(|i| binomial(ni + 1, i) * binomial(ni + 1, i + 1) / (ni + 1))
            .collect(),
        Family::Cyclohedron => (0..=ni).map(|i| binomial(ni, i).pow(2)).collect(),
        Family::Permutahedron => {
            let mut row = vec![BigInt::from(1)];
            for m in 2..=n + 1 {
                let mut next = vec![BigInt::from(0); m];
                for (k, slot) in next.iter_mut().enumerate() {
                    if k < row.len() {
                        *slot += &row[k] * (k + 1);
                    }
                    if k >= 1 {
                        *slot += &row[k - 1] * (m - k);
                    }
                }
                row = next;
            }
            row
        }
    }
}

/// Toric g-polynomial of the `n`-dimensional member of `family`, via its γ-vector.
pub fn toric_g_family(family: Family, n: usize) -> IntPoly {
    toric_g_from_gamma(n, &gamma_family(family, n))
}
