//! Lattice-path words over `{U, D}` (and `{U, D, H}` for Motzkin words),
//! the counting sequences attached to them, and the Dyck to Łukasiewicz and
//! Dyck to Motzkin correspondences.
//!
//! A [`Word`] is packed into a `u64`: bit `i` is set when letter `i` is `D`.
//! Words therefore have at most [`Word::MAX_LEN`] letters, which is far beyond
//! anything an exhaustive enumeration can reach.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    U,
    D,
    H,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::U => 'U',
            Letter::D => 'D',
            Letter::H => 'H',
        }
    }

    fn step(self) -> i32 {
        match self {
            Letter::U => 1,
            Letter::D => -1,
            Letter::H => 0,
        }
    }
}

// ---------------------------------------------------------------------------
// Counting sequences
// ---------------------------------------------------------------------------

/// `binom(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigInt {
    let n = i64::from(n);
    binomial(2 * n, n) / (n + 1)
}

/// The Motzkin number `M_n = sum_j binom(n, 2j) C_j`.
pub fn motzkin(n: u32) -> BigInt {
    (0..=n / 2)
        .map(|j| binomial(n.into(), 2 * i64::from(j)) * catalan(j))
        .sum()
}

/// Entry `C(n, k) = binom(n, k) - binom(n, k - 1)` of the Catalan triangle:
/// the number of paths with `n` steps from height 0 to height `n - 2k` that
/// never go below the axis. Zero outside `0 <= k <= n / 2`.
pub fn catalan_triangle(n: u32, k: i64) -> BigInt {
    let n = i64::from(n);
    if k < 0 || 2 * k > n {
        return BigInt::zero();
    }
    binomial(n, k) - binomial(n, k - 1)
}

// ---------------------------------------------------------------------------
// Packed {U, D} words
// ---------------------------------------------------------------------------

/// A word over `{U, D}`, packed one bit per letter (`U = 0`, `D = 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u64,
    len: u8,
}

#[inline]
fn low_mask(i: usize) -> u64 {
    if i >= 64 {
        u64::MAX
    } else {
        (1u64 << i) - 1
    }
}

impl Word {
    pub const MAX_LEN: usize = 64;

    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from raw bits; bit `i` set means letter `i` is `D`.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > Self::MAX_LEN {
            return Err(Error::structural(format!(
                "word length {len} exceeds {}",
                Self::MAX_LEN
            )));
        }
        Ok(Word {
            bits: bits & low_mask(len),
            len: len as u8,
        })
    }

    pub fn from_letters(letters: &[Letter]) -> Result<Self> {
        let mut w = Word::empty();
        for &l in letters {
            match l {
                Letter::U => w.try_push(false)?,
                Letter::D => w.try_push(true)?,
                Letter::H => {
                    return Err(Error::structural("letter H is not allowed in a {U,D} word"))
                }
            }
        }
        Ok(w)
    }

    /// `U^{q_1} D U^{q_2} D ... U^{q_r} D`.
    pub fn from_blocks(blocks: &[usize]) -> Result<Self> {
        let mut w = Word::empty();
        for &q in blocks {
            for _ in 0..q {
                w.try_push(false)?;
            }
            w.try_push(true)?;
        }
        Ok(w)
    }

    fn try_push(&mut self, down: bool) -> Result<()> {
        if self.len() >= Self::MAX_LEN {
            return Err(Error::structural("word is full"));
        }
        if down {
            self.bits |= 1u64 << self.len;
        }
        self.len += 1;
        Ok(())
    }

    pub fn push_up(&mut self) {
        self.try_push(false).expect("word length overflow");
    }

    pub fn push_down(&mut self) {
        self.try_push(true).expect("word length overflow");
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_down(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        self.bits >> i & 1 == 1
    }

    pub fn letter(&self, i: usize) -> Letter {
        if self.is_down(i) {
            Letter::D
        } else {
            Letter::U
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn downs(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn ups(&self) -> usize {
        self.len() - self.downs()
    }

    /// Final height `#U - #D`.
    pub fn height(&self) -> i32 {
        self.ups() as i32 - self.downs() as i32
    }

    /// Height reached after the first `i` letters.
    pub fn height_before(&self, i: usize) -> i32 {
        let downs = (self.bits & low_mask(i)).count_ones() as i32;
        i as i32 - 2 * downs
    }

    pub fn is_balanced(&self) -> bool {
        self.height() == 0
    }

    pub fn never_negative(&self) -> bool {
        let mut h = 0i32;
        for i in 0..self.len() {
            h += if self.is_down(i) { -1 } else { 1 };
            if h < 0 {
                return false;
            }
        }
        true
    }

    pub fn is_dyck(&self) -> bool {
        self.is_balanced() && self.never_negative()
    }

    pub fn semilength(&self) -> usize {
        self.len() / 2
    }

    /// Positions (0-based) of the `U` letters; entry `k - 1` is the position of `U_k`.
    pub fn up_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_down(i)).collect()
    }

    /// Positions (0-based) of the `D` letters; entry `k - 1` is the position of `D_k`.
    pub fn down_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_down(i)).collect()
    }

    /// Occurrences of `factor` as a contiguous subword, overlaps included.
    pub fn factor_count(&self, factor: &Word) -> usize {
        factor_count(self, factor)
    }

    /// The word with letters at the positions flagged in `drop` removed.
    pub fn without_positions(&self, drop: &[bool]) -> Word {
        let mut out = Word::empty();
        for i in 0..self.len() {
            if !drop[i] {
                let _ = out.try_push(self.is_down(i));
            }
        }
        out
    }

    /// The word with `insert` spliced in before position `at`.
    pub fn splice(&self, at: usize, insert: &Word) -> Result<Word> {
        let mut out = Word::empty();
        for i in 0..at {
            out.try_push(self.is_down(i))?;
        }
        for i in 0..insert.len() {
            out.try_push(insert.is_down(i))?;
        }
        for i in at..self.len() {
            out.try_push(self.is_down(i))?;
        }
        Ok(out)
    }

    pub fn reversed(&self) -> Word {
        let mut out = Word::empty();
        for i in (0..self.len()).rev() {
            let _ = out.try_push(self.is_down(i));
        }
        out
    }

    /// Run-length rendering such as `U^4 D^2 U D^3`.
    pub fn run_length(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let d = self.is_down(i);
            let mut j = i;
            while j < self.len() && self.is_down(j) == d {
                j += 1;
            }
            let c = if d { 'D' } else { 'U' };
            if j - i == 1 {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{c}^{}", j - i));
            }
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Lexicographic order with `U < D`; a proper prefix sorts first.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len().min(other.len());
        let diff = (self.bits ^ other.bits) & low_mask(common);
        if diff == 0 {
            return self.len.cmp(&other.len);
        }
        let i = diff.trailing_zeros() as usize;
        if self.is_down(i) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parses letters with optional exponents: `UUDD`, `U^2 D^2` and `U2D2` are the same word.
fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        let letter = match c {
            'U' | 'u' => Letter::U,
            'D' | 'd' => Letter::D,
            'H' | 'h' => Letter::H,
            c if c.is_whitespace() || c == ',' => continue,
            other => return Err(Error::parse(s, format!("unexpected character {other:?}"))),
        };
        if chars.peek() == Some(&'^') {
            chars.next();
        }
        let mut digits = String::new();
        while let Some(&d) = chars.peek() {
            if d.is_ascii_digit() {
                digits.push(d);
                chars.next();
            } else {
                break;
            }
        }
        let count = if digits.is_empty() {
            1
        } else {
            digits
                .parse::<usize>()
                .map_err(|e| Error::parse(s, e.to_string()))?
        };
        out.extend(std::iter::repeat_n(letter, count));
    }
    Ok(out)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        Word::from_letters(&letters).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// Occurrences of `factor` in `w`, overlapping occurrences counted separately.
pub fn factor_count(w: &Word, factor: &Word) -> usize {
    let k = factor.len();
    assert!(k > 0, "factor must be nonempty");
    if k > w.len() {
        return 0;
    }
    let mask = low_mask(k);
    (0..=w.len() - k)
        .filter(|&i| (w.bits >> i) & mask == factor.bits)
        .count()
}

/// The `q_i` of `w = U^{q_1} D ... U^{q_r} D`, or `None` when `w` does not end in `D`.
pub fn down_blocks(w: &Word) -> Option<Vec<usize>> {
    if !w.is_empty() && !w.is_down(w.len() - 1) {
        return None;
    }
    let mut blocks = Vec::with_capacity(w.downs());
    let mut run = 0;
    for i in 0..w.len() {
        if w.is_down(i) {
            blocks.push(run);
            run = 0;
        } else {
            run += 1;
        }
    }
    Some(blocks)
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordClass {
    /// Dyck words of the given semilength.
    Dyck(usize),
    /// All words with equally many `U` and `D`, of the given semilength.
    Balanced(usize),
    /// Words of `steps` letters ending at `height` that never go below 0.
    Nonneg { steps: usize, height: usize },
}

impl WordClass {
    fn shape(self) -> (usize, i32, bool) {
        match self {
            WordClass::Dyck(n) => (2 * n, 0, true),
            WordClass::Balanced(n) => (2 * n, 0, false),
            WordClass::Nonneg { steps, height } => (steps, height as i32, true),
        }
    }

    /// The number of words in the class.
    pub fn count(self) -> BigInt {
        match self {
            WordClass::Dyck(n) => catalan(n as u32),
            WordClass::Balanced(n) => binomial(2 * n as i64, n as i64),
            WordClass::Nonneg { steps, height } => {
                if height > steps || (steps - height) % 2 == 1 {
                    BigInt::zero()
                } else {
                    catalan_triangle(steps as u32, ((steps - height) / 2) as i64)
                }
            }
        }
    }
}

/// Lexicographic (`U < D`) stream of all words of a [`WordClass`].
#[derive(Debug, Clone)]
pub struct WordStream {
    len: usize,
    target: i32,
    nonneg: bool,
    next: Option<Word>,
}

impl WordStream {
    fn new(class: WordClass) -> Self {
        let (len, target, nonneg) = class.shape();
        assert!(
            len <= Word::MAX_LEN,
            "word length {len} exceeds {}",
            Word::MAX_LEN
        );
        let first = Self::completion(Word::empty(), 0, len, target);
        WordStream {
            len,
            target,
            nonneg,
            next: first,
        }
    }

    /// Lexicographically smallest extension of `prefix` (at height `h`) by
    /// `rem` letters to final height `target`: all available `U` first.
    fn completion(prefix: Word, h: i32, rem: usize, target: i32) -> Option<Word> {
        let diff = target - h;
        if diff.unsigned_abs() as usize > rem || (rem as i32 - diff) % 2 != 0 {
            return None;
        }
        let ups = ((rem as i32 + diff) / 2) as usize;
        let start = prefix.len();
        let len = start + rem;
        let downs_mask = low_mask(len) & !low_mask(start + ups);
        Some(Word {
            bits: prefix.bits | downs_mask,
            len: len as u8,
        })
    }

    fn successor(&self, w: &Word) -> Option<Word> {
        for i in (0..self.len).rev() {
            if w.is_down(i) {
                continue;
            }
            let h = w.height_before(i) - 1;
            if self.nonneg && h < 0 {
                continue;
            }
            let prefix = Word {
                bits: (w.bits & low_mask(i)) | (1u64 << i),
                len: (i + 1) as u8,
            };
            if let Some(next) = Self::completion(prefix, h, self.len - i - 1, self.target) {
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for WordStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next?;
        self.next = self.successor(&current);
        Some(current)
    }
}

pub fn enumerate_words(class: WordClass) -> WordStream {
    WordStream::new(class)
}

// ---------------------------------------------------------------------------
// Łukasiewicz words
// ---------------------------------------------------------------------------

/// A word `f_{q_1} ... f_{q_m}` over letters of weight `q - 1`, stored as the `q_i`.
/// Every proper prefix has nonnegative weight and the total weight is -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LukasiewiczWord {
    letters: Vec<usize>,
}

impl LukasiewiczWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let mut weight = 0i64;
        for (k, &q) in letters.iter().enumerate() {
            weight += q as i64 - 1;
            let last = k + 1 == letters.len();
            if !last && weight < 0 {
                return Err(Error::structural(format!(
                    "prefix of length {} has negative weight",
                    k + 1
                )));
            }
        }
        if weight != -1 {
            return Err(Error::structural(format!(
                "total weight is {weight}, expected -1"
            )));
        }
        Ok(LukasiewiczWord { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Weights of the prefixes of length `1..=len`.
    pub fn prefix_weights(&self) -> Vec<i64> {
        self.letters
            .iter()
            .scan(0i64, |w, &q| {
                *w += q as i64 - 1;
                Some(*w)
            })
            .collect()
    }
}

impl fmt::Display for LukasiewiczWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|q| format!("f{q}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `U^{q_1} D ... U^{q_n} D` maps to `f_{q_1} ... f_{q_n} f_0`.
pub fn dyck_to_lukasiewicz(w: &Word) -> Result<LukasiewiczWord> {
    if !w.is_dyck() {
        return Err(Error::structural(format!("{w} is not a Dyck word")));
    }
    let mut q = down_blocks(w).expect("nonempty Dyck words end in D");
    q.push(0);
    LukasiewiczWord::new(q)
}

pub fn lukasiewicz_to_dyck(l: &LukasiewiczWord) -> Result<Word> {
    let (last, body) = l
        .letters
        .split_last()
        .ok_or_else(|| Error::structural("empty Łukasiewicz word"))?;
    debug_assert_eq!(*last, 0, "the total weight forces a final f_0");
    let w = Word::from_blocks(body)?;
    debug_assert!(w.is_dyck());
    Ok(w)
}

// ---------------------------------------------------------------------------
// Motzkin words
// ---------------------------------------------------------------------------

/// A word over `{U, D, H}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MotzkinWord(pub Vec<Letter>);

impl MotzkinWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Ends at height 0 and never dips below it.
    pub fn is_motzkin_path(&self) -> bool {
        let mut h = 0;
        for l in &self.0 {
            h += l.step();
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    /// The word with every `D` deleted.
    pub fn without_downs(&self) -> MotzkinWord {
        MotzkinWord(self.0.iter().copied().filter(|&l| l != Letter::D).collect())
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s).map(MotzkinWord)
    }
}

/// Rewrites `UUD -> U`, the remaining `UD -> H` and the remaining `D -> D`.
///
/// Accepts balanced `UUU`-avoiding words that end in `D` (every `UUU`-avoiding
/// Dyck word qualifies). Each `UU` factor of the input becomes one `U` of the output.
pub fn dyck_to_motzkin(w: &Word) -> Result<MotzkinWord> {
    if !w.is_balanced() {
        return Err(Error::structural(format!("{w} is not balanced")));
    }
    let blocks =
        down_blocks(w).ok_or_else(|| Error::structural(format!("{w} does not end with D")))?;
    blocks
        .into_iter()
        .map(|q| match q {
            0 => Ok(Letter::D),
            1 => Ok(Letter::H),
            2 => Ok(Letter::U),
            _ => Err(Error::structural(format!("{w} contains UUU"))),
        })
        .collect::<Result<Vec<_>>>()
        .map(MotzkinWord)
}

/// Inverse of [`dyck_to_motzkin`]: `U -> UUD`, `H -> UD`, `D -> D`.
pub fn motzkin_to_dyck(m: &MotzkinWord) -> Result<Word> {
    let blocks: Vec<usize> =
        m.0.iter()
            .map(|l| match l {
                Letter::U => 2,
                Letter::H => 1,
                Letter::D => 0,
            })
            .collect();
    let w = Word::from_blocks(&blocks)?;
    if !w.is_balanced() {
        return Err(Error::structural(format!(
            "{m} has unequal numbers of U and D"
        )));
    }
    Ok(w)
}

// ---------------------------------------------------------------------------
// Sparse sets
// ---------------------------------------------------------------------------

/// A set of positive integers with no two consecutive elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SparseSet(Vec<u32>);

impl SparseSet {
    pub fn new(mut elems: Vec<u32>) -> Result<Self> {
        elems.sort_unstable();
        for pair in elems.windows(2) {
            if pair[1] == pair[0] {
                return Err(Error::precondition(format!("{} repeated", pair[0])));
            }
            if pair[1] == pair[0] + 1 {
                return Err(Error::precondition(format!(
                    "{} and {} are consecutive",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(SparseSet(elems))
    }

    pub fn empty() -> Self {
        SparseSet(Vec::new())
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn is_subset_of(&self, other: &SparseSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub(crate) fn without(&self, x: u32) -> SparseSet {
        SparseSet(self.0.iter().copied().filter(|&y| y != x).collect())
    }
}

impl fmt::Display for SparseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All sparse subsets of `[lo, hi]`, ordered by their bitmask over the interval.
pub fn sparse_subsets(lo: u32, hi: u32) -> Vec<SparseSet> {
    if hi < lo {
        return vec![SparseSet::empty()];
    }
    let width = hi - lo + 1;
    assert!(width < 32, "interval too wide");
    (0u32..1 << width)
        .filter(|m| m & (m >> 1) == 0)
        .map(|m| {
            SparseSet(
                (0..width)
                    .filter(|&i| m >> i & 1 == 1)
                    .map(|i| lo + i)
                    .collect(),
            )
        })
        .collect()
}
