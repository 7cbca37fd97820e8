//! Permutations, their ascent/descent statistics, pattern tests, and the
//! Krattenthaler bijection between 123-avoiding permutations and Dyck words.

mod fs_tree;
mod plane;

pub use fs_tree::{restricted_orbit, right_adjusted_rep, FsTree};
pub use plane::{enumerate_increasing_012, enumerate_increasing_plane, PlaneTree};

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::words::Word;

/// A permutation of `[n]`, stored as the images `π(1), ..., π(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let i = x as usize;
            if i == 0 || i > n {
                return Err(Error::OutOfRange {
                    what: "permutation entry",
                    value: x.into(),
                    bound: format!("1..={n}"),
                });
            }
            if seen[i] {
                return Err(Error::structural(format!("{x} appears twice")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub(crate) fn from_vec_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation(images)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `π(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn ascents(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.at(i) < self.at(i + 1))
            .collect()
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .collect()
    }

    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn asc_des(&self) -> AscDes {
        AscDes::of(self)
    }

    pub fn has_final_descent(&self) -> bool {
        let n = self.len();
        n >= 2 && self.0[n - 2] > self.0[n - 1]
    }

    pub fn has_double_descent(&self) -> bool {
        self.0.windows(3).any(|w| w[0] > w[1] && w[1] > w[2])
    }

    /// Positions (1-based) of the left-to-right minima.
    pub fn left_to_right_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = u32::MAX;
        for (i, &x) in self.0.iter().enumerate() {
            if x < min {
                min = x;
                out.push(i + 1);
            }
        }
        out
    }

    pub fn is_123_avoiding(&self) -> bool {
        is_123_avoiding_fast(&self.0)
    }

    pub fn is_312_avoiding(&self) -> bool {
        let p = &self.0;
        let n = p.len();
        // For each middle position, a 312 exists iff some larger value precedes
        // it and some value between the two follows it.
        for j in 0..n {
            let later_max_below = |bound: u32| p[j + 1..].iter().any(|&z| z > p[j] && z < bound);
            if p[..j].iter().any(|&x| x > p[j] && later_max_below(x)) {
                return false;
            }
        }
        true
    }
}

/// O(n³) scan for a triple `i < j < k` with `p[i] < p[j] < p[k]`.
pub fn is_123_avoiding_naive(p: &[u32]) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            if p[i] >= p[j] {
                continue;
            }
            for k in j + 1..n {
                if p[j] < p[k] {
                    return false;
                }
            }
        }
    }
    true
}

/// A permutation avoids 123 iff its entries that are not left-to-right minima decrease.
fn is_123_avoiding_fast(p: &[u32]) -> bool {
    let mut min = u32::MAX;
    let mut last_other = u32::MAX;
    for &x in p {
        if x < min {
            min = x;
        } else {
            if x > last_other {
                return false;
            }
            last_other = x;
        }
    }
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

/// Parses whitespace or comma separated integers, optionally in parentheses.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<u32>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|e| Error::parse(s, format!("{t:?}: {e}")))
        })
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_int_list(s)?)
    }
}

/// Index sets (1-based, sorted) of the ascent/descent classification.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AscDes {
    pub ascents: Vec<usize>,
    pub descents: Vec<usize>,
    pub peaks: Vec<usize>,
    pub valleys: Vec<usize>,
    pub double_ascents: Vec<usize>,
    pub double_descents: Vec<usize>,
}

impl AscDes {
    fn of(p: &Permutation) -> Self {
        let mut out = AscDes {
            ascents: p.ascents(),
            descents: p.descents(),
            ..AscDes::default()
        };
        for i in 2..p.len() {
            let (a, b, c) = (p.at(i - 1), p.at(i), p.at(i + 1));
            match (a < b, b < c) {
                (true, false) => out.peaks.push(i),
                (false, true) => out.valleys.push(i),
                (false, false) => out.double_descents.push(i),
                (true, true) => out.double_ascents.push(i),
            }
        }
        out
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(Permutation::from_vec_unchecked)
}

/// All 123-avoiding permutations of `[n]` in lexicographic order.
pub fn enumerate_123_avoiding(n: usize) -> Vec<Permutation> {
    fn extend(
        n: usize,
        prefix: &mut Vec<u32>,
        used: &mut [bool],
        min: u32,
        last_other: u32,
        out: &mut Vec<Permutation>,
    ) {
        if prefix.len() == n {
            out.push(Permutation(prefix.clone()));
            return;
        }
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            let (next_min, next_other) = if v < min {
                (v, last_other)
            } else if v < last_other {
                (min, v)
            } else {
                continue;
            };
            used[v as usize] = true;
            prefix.push(v);
            extend(n, prefix, used, next_min, next_other, out);
            prefix.pop();
            used[v as usize] = false;
        }
    }
    let mut out = Vec::new();
    extend(
        n,
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        u32::MAX,
        u32::MAX,
        &mut out,
    );
    out
}

/// Krattenthaler's Dyck word of a 123-avoiding permutation.
///
/// The up steps are labeled `n` down to `1`. Each left-to-right minimum `m`
/// closes a run of up steps at the one labeled `m` and is followed by one
/// down step for itself and one for each entry before the next minimum.
pub fn krattenthaler(p: &Permutation) -> Result<Word> {
    if !p.is_123_avoiding() {
        return Err(Error::precondition(format!("{p} contains the pattern 123")));
    }
    let n = p.len();
    let minima = p.left_to_right_minima();
    let mut w = Word::empty();
    let mut ups = 0usize;
    for (k, &pos) in minima.iter().enumerate() {
        let m = p.at(pos) as usize;
        while ups < n + 1 - m {
            w.push_up();
            ups += 1;
        }
        let next = minima.get(k + 1).copied().unwrap_or(n + 1);
        for _ in pos..next {
            w.push_down();
        }
    }
    Ok(w)
}

/// Inverse of [`krattenthaler`].
pub fn krattenthaler_inverse(w: &Word) -> Result<Permutation> {
    if !w.is_dyck() {
        return Err(Error::structural(format!("{w} is not a Dyck word")));
    }
    let n = w.semilength();
    // (left-to-right minimum, length of its down run)
    let mut runs: Vec<(u32, usize)> = Vec::new();
    let mut ups = 0usize;
    let mut i = 0;
    while i < w.len() {
        if !w.is_down(i) {
            ups += 1;
            i += 1;
            continue;
        }
        let start = i;
        while i < w.len() && w.is_down(i) {
            i += 1;
        }
        runs.push(((n + 1 - ups) as u32, i - start));
    }
    let mut is_min = vec![false; n + 1];
    for &(m, _) in &runs {
        is_min[m as usize] = true;
    }
    let mut others = (1..=n as u32).rev().filter(|&v| !is_min[v as usize]);
    let mut images = Vec::with_capacity(n);
    for &(m, len) in &runs {
        images.push(m);
        for _ in 1..len {
            images.push(
                others
                    .next()
                    .expect("down steps match the remaining entries"),
            );
        }
    }
    let p = Permutation::new(images)?;
    if krattenthaler(&p).ok().as_ref() != Some(w) {
        return Err(Error::structural(format!(
            "{w} does not encode a 123-avoiding permutation"
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{catalan, enumerate_words, WordClass};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn asc_des_examples() {
        let id = perm("1 2 3").asc_des();
        assert_eq!(id.ascents, [1, 2]);
        assert!(id.descents.is_empty());
        assert_eq!(perm("7 10 5 9 8 2 6 1 4 3").ascents(), [1, 3, 6, 8]);
        assert_eq!(perm("2 1").descents(), [1]);
        let c = perm("2 3 1 4").asc_des();
        assert_eq!(c.peaks, [2]);
        assert_eq!(c.valleys, [3]);
        let d = perm("3 2 1").asc_des();
        assert_eq!(d.double_descents, [2]);
    }

    #[test]
    fn pattern_checks() {
        assert!(perm("3 2 1").is_123_avoiding());
        assert!(perm("7 10 5 9 8 2 6 1 4 3").is_123_avoiding());
        assert!(!perm("1 3 2 4").is_123_avoiding());
        assert!(!perm("3 1 2").is_312_avoiding());
        assert!(perm("2 3 1").is_312_avoiding());
        for n in 0..=8 {
            for p in all_permutations(n) {
                assert_eq!(
                    p.is_123_avoiding(),
                    is_123_avoiding_naive(p.images()),
                    "{p}"
                );
            }
        }
    }

    #[test]
    fn enumeration_matches_filter() {
        for n in 0..=7 {
            let filtered: Vec<Permutation> = all_permutations(n)
                .filter(|p| is_123_avoiding_naive(p.images()))
                .collect();
            assert_eq!(enumerate_123_avoiding(n), filtered);
            assert_eq!(catalan(n as u32), filtered.len().into());
        }
        assert_eq!(enumerate_123_avoiding(8).len(), 1430);
    }

    #[test]
    fn krattenthaler_examples() {
        let fig = perm("7 10 5 9 8 2 6 1 4 3");
        let w = krattenthaler(&fig).unwrap();
        assert_eq!(w, "U^4 D^2 U^2 D^3 U^3 D^2 U D^3".parse().unwrap());
        assert_eq!(krattenthaler_inverse(&w).unwrap(), fig);
        assert_eq!(krattenthaler(&perm("1")).unwrap().to_string(), "UD");
        assert_eq!(krattenthaler(&perm("3 2 1")).unwrap().to_string(), "UDUDUD");
        assert!(krattenthaler(&perm("1 2 3")).is_err());
    }

    #[test]
    fn krattenthaler_is_a_bijection() {
        let uud: Word = "UUD".parse().unwrap();
        let udd: Word = "UDD".parse().unwrap();
        for n in 0..=8 {
            let mut images: Vec<Word> = Vec::new();
            for p in enumerate_123_avoiding(n) {
                let w = krattenthaler(&p).unwrap();
                assert!(w.is_dyck());
                assert_eq!(krattenthaler_inverse(&w).unwrap(), p);
                assert_eq!(p.inverse().ascents().len(), w.factor_count(&uud), "{p}");
                assert_eq!(p.ascents().len(), w.factor_count(&udd), "{p}");
                images.push(w);
            }
            images.sort();
            let all: Vec<Word> = enumerate_words(WordClass::Dyck(n)).collect();
            assert_eq!(images, all);
        }
    }
}
