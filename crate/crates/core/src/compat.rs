//! `(A, B)`-compatible words, the compression bijection onto shorter Dyck
//! words and its inverse, and noncrossing partitions with their fillers.
//!
//! Letters carry positional labels: the `k`-th `U` from the left is `U_k` and
//! the `k`-th `D` is `D_k`. Labels are always recomputed from the current word.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perms::parse_int_list;
use crate::words::{enumerate_words, SparseSet, Word, WordClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordKind {
    Dyck,
    Balanced,
}

fn check_sets(n: usize, a: &SparseSet, b: &SparseSet) -> Result<()> {
    for (name, set) in [("A", a), ("B", b)] {
        if let Some(x) = set.elements().iter().find(|&&x| x == 0 || x as usize >= n) {
            return Err(Error::precondition(format!(
                "{name} = {set} is not a subset of [{}] (offending element {x})",
                n.saturating_sub(1)
            )));
        }
    }
    Ok(())
}

/// Where `U_a U_{a+1} D` starts, if it is a factor of `w`.
fn uud_at(w: &Word, ups: &[usize], a: u32) -> Option<usize> {
    let a = a as usize;
    let (p, q) = (ups[a - 1], ups[a]);
    (q == p + 1 && q + 1 < w.len() && w.is_down(q + 1)).then_some(p)
}

/// Where `U D_b D_{b+1}` starts, if it is a factor of `w`.
fn udd_at(w: &Word, downs: &[usize], b: u32) -> Option<usize> {
    let b = b as usize;
    let (p, q) = (downs[b - 1], downs[b]);
    (q == p + 1 && p > 0 && !w.is_down(p - 1)).then(|| p - 1)
}

/// Every `U_a U_{a+1} D` (`a` in `A`) and `U D_b D_{b+1}` (`b` in `B`) is a factor.
pub fn is_compatible(w: &Word, a: &SparseSet, b: &SparseSet) -> Result<bool> {
    let n = w.len() / 2;
    check_sets(n, a, b)?;
    if w.len() % 2 == 1 || w.ups() != n {
        return Err(Error::structural(format!("{w} is not balanced")));
    }
    let ups = w.up_positions();
    let downs = w.down_positions();
    Ok(a.elements().iter().all(|&x| uud_at(w, &ups, x).is_some())
        && b.elements().iter().all(|&y| udd_at(w, &downs, y).is_some()))
}

/// The compression map: delete each `U_a U_{a+1} D_b D_{b+1}`, then shrink each
/// remaining `U_a U_{a+1} D` to `U`, then each remaining `U D_b D_{b+1}` to `D`.
pub fn compress(w: &Word, a: &SparseSet, b: &SparseSet) -> Result<Word> {
    if !is_compatible(w, a, b)? {
        return Err(Error::precondition(format!(
            "{w} is not ({a}, {b})-compatible"
        )));
    }
    let ups = w.up_positions();
    let downs = w.down_positions();
    let mut drop = vec![false; w.len()];
    let b_starts: BTreeSet<usize> = b
        .elements()
        .iter()
        .map(|&y| udd_at(w, &downs, y).expect("checked"))
        .collect();
    let mut absorbed = BTreeSet::new();
    for &x in a.elements() {
        let p = uud_at(w, &ups, x).expect("checked");
        if b_starts.contains(&(p + 1)) {
            drop[p..p + 4].fill(true);
            absorbed.insert(p + 1);
        } else {
            drop[p + 1] = true;
            drop[p + 2] = true;
        }
    }
    for &p in b_starts.difference(&absorbed) {
        drop[p] = true;
        drop[p + 1] = true;
    }
    Ok(w.without_positions(&drop))
}

/// Position of the `k`-th letter of a kind: `-1` for `k = 0`, the word length
/// when the letter does not exist.
fn letter_pos(positions: &[usize], len: usize, k: u32) -> isize {
    match k as usize {
        0 => -1,
        k if k <= positions.len() => positions[k - 1] as isize,
        _ => len as isize,
    }
}

/// The inverse of [`compress`]: rebuilds the `(A, B)`-compatible word of
/// semilength `n` from a word of semilength `n - |A| - |B|`, treating the
/// smallest elements of `A` and `B` first.
pub fn expand(w: &Word, n: usize, a: &SparseSet, b: &SparseSet) -> Result<Word> {
    check_sets(n, a, b)?;
    let target = n
        .checked_sub(a.len() + b.len())
        .ok_or_else(|| Error::precondition("|A| + |B| exceeds n"))?;
    if w.len() != 2 * target || !w.is_balanced() {
        return Err(Error::precondition(format!(
            "{w} must be balanced of semilength {target}"
        )));
    }
    Ok(expand_rec(*w, a, b))
}

fn expand_rec(w: Word, a: &SparseSet, b: &SparseSet) -> Word {
    let ud: Word = Word::from_bits(0b10, 2).expect("two letters");
    let uudd: Word = Word::from_bits(0b1100, 4).expect("four letters");
    let ups = w.up_positions();
    let downs = w.down_positions();
    let len = w.len();
    // U_a -> U_a U_{a+1} D: insert UD right after U_a.
    let grow_up = |x: u32| {
        let p = ups[x as usize - 1];
        w.splice(p + 1, &ud).expect("length within bounds")
    };
    // D_b -> U D_b D_{b+1}: insert UD right before D_b.
    let grow_down = |y: u32| {
        let p = downs[y as usize - 1];
        w.splice(p, &ud).expect("length within bounds")
    };
    match (a.min(), b.min()) {
        (None, None) => w,
        (Some(x), None) => expand_rec(grow_up(x), &a.without(x), b),
        (None, Some(y)) => expand_rec(grow_down(y), a, &b.without(y)),
        (Some(x), Some(y)) => {
            let u_prev = letter_pos(&ups, len, x - 1);
            let u_cur = letter_pos(&ups, len, x);
            let d_prev = letter_pos(&downs, len, y - 1);
            let d_cur = letter_pos(&downs, len, y);
            if u_cur < d_prev {
                expand_rec(grow_up(x), &a.without(x), b)
            } else if d_cur < u_prev {
                expand_rec(grow_down(y), a, &b.without(y))
            } else {
                let at = (u_prev.max(d_prev) + 1).min(len as isize) as usize;
                let v = w.splice(at, &uudd).expect("length within bounds");
                expand_rec(v, &a.without(x), &b.without(y))
            }
        }
    }
}

/// All `(A, B)`-compatible words of semilength `n`, by filtering.
pub fn compatible_words(
    n: usize,
    a: &SparseSet,
    b: &SparseSet,
    kind: WordKind,
) -> Result<Vec<Word>> {
    check_sets(n, a, b)?;
    let class = match kind {
        WordKind::Dyck => WordClass::Dyck(n),
        WordKind::Balanced => WordClass::Balanced(n),
    };
    let mut out = Vec::new();
    for w in enumerate_words(class) {
        if is_compatible(&w, a, b)? {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn count_compatible(n: usize, a: &SparseSet, b: &SparseSet, kind: WordKind) -> Result<usize> {
    compatible_words(n, a, b, kind).map(|v| v.len())
}

// ---------------------------------------------------------------------------
// Noncrossing partitions
// ---------------------------------------------------------------------------

/// A noncrossing set partition of `[n]`; blocks sorted internally and by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl NoncrossingPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n + 1];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::structural("empty block"));
            }
            b.sort_unstable();
        }
        blocks.sort();
        for (k, b) in blocks.iter().enumerate() {
            for &x in b {
                if x == 0 || x as usize > n {
                    return Err(Error::OutOfRange {
                        what: "partition element",
                        value: x.into(),
                        bound: format!("1..={n}"),
                    });
                }
                if owner[x as usize] != usize::MAX {
                    return Err(Error::structural(format!("{x} lies in two blocks")));
                }
                owner[x as usize] = k;
            }
        }
        if let Some(x) = (1..=n).find(|&x| owner[x] == usize::MAX) {
            return Err(Error::structural(format!("{x} lies in no block")));
        }
        // a < b < c < d with a, c in one block and b, d in another is a crossing.
        for a in 1..=n {
            for b in a + 1..=n {
                if owner[b] == owner[a] {
                    continue;
                }
                for c in b + 1..=n {
                    if owner[c] != owner[a] {
                        continue;
                    }
                    if (c + 1..=n).any(|d| owner[d] == owner[b]) {
                        return Err(Error::structural(format!("blocks of {a} and {b} cross")));
                    }
                }
            }
        }
        Ok(NoncrossingPartition { n, blocks })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn nonsingleton_blocks(&self) -> Vec<&Vec<u32>> {
        self.blocks.iter().filter(|b| b.len() >= 2).collect()
    }

    fn owners(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                owner[x as usize] = k;
            }
        }
        owner
    }

    /// Elements `2 <= i <= n` that are the largest of their block with `i - 1`
    /// in the same block, or singletons whose predecessor is not the largest of its block.
    pub fn fillers(&self) -> SparseSet {
        let owner = self.owners();
        let is_max = |x: usize| *self.blocks[owner[x]].last().unwrap() as usize == x;
        let out = (2..=self.n)
            .filter(|&i| {
                let block = &self.blocks[owner[i]];
                let closing = is_max(i) && owner[i - 1] == owner[i];
                let singleton = block.len() == 1 && !is_max(i - 1);
                closing || singleton
            })
            .map(|i| i as u32)
            .collect();
        SparseSet::new(out).expect("filler sets are sparse")
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.iter().join(",")).collect();
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for NoncrossingPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .filter(|t| !t.trim().is_empty())
            .map(parse_int_list)
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        NoncrossingPartition::new(n, blocks).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// Labels the `D` steps `1..n` from right to left, gives each `U` the label
/// of its matching `D`, and reads the blocks off the maximal runs of `U`s.
pub fn dyck_to_nc(w: &Word) -> Result<NoncrossingPartition> {
    if !w.is_dyck() {
        return Err(Error::structural(format!("{w} is not a Dyck word")));
    }
    let n = w.semilength();
    let mut label = vec![0u32; w.len()];
    let mut next = 1;
    for i in (0..w.len()).rev() {
        if w.is_down(i) {
            label[i] = next;
            next += 1;
        }
    }
    let mut stack = Vec::new();
    for i in 0..w.len() {
        if w.is_down(i) {
            let u = stack.pop().expect("Dyck word");
            label[u] = label[i];
        } else {
            stack.push(i);
        }
    }
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < w.len() {
        if w.is_down(i) {
            i += 1;
            continue;
        }
        let mut block = Vec::new();
        while i < w.len() && !w.is_down(i) {
            block.push(label[i]);
            i += 1;
        }
        blocks.push(block);
    }
    NoncrossingPartition::new(n, blocks)
}

/// Inverse of [`dyck_to_nc`]. Read right to left, the word lists `D_1, D_2, ...`
/// and the run of `U`s for a block comes right after the `D` of its largest element.
pub fn nc_to_dyck(p: &NoncrossingPartition) -> Word {
    let mut reversed: Vec<bool> = Vec::with_capacity(2 * p.n);
    let owner = p.owners();
    for i in 1..=p.n {
        reversed.push(true);
        let block = &p.blocks[owner[i]];
        if *block.last().unwrap() as usize == i {
            reversed.extend(std::iter::repeat_n(false, block.len()));
        }
    }
    let mut w = Word::empty();
    for &down in reversed.iter().rev() {
        if down {
            w.push_down();
        } else {
            w.push_up();
        }
    }
    w
}

/// All noncrossing partitions of `[n]`, in the order of their Dyck words.
pub fn enumerate_nc_partitions(n: usize) -> Vec<NoncrossingPartition> {
    enumerate_words(WordClass::Dyck(n))
        .map(|w| dyck_to_nc(&w).expect("Dyck word"))
        .collect()
}

/// The number of `k`-element families of subsets of `[n]` with at least two
/// elements each that occur as the nonsingleton blocks of a noncrossing partition.
pub fn nc_complex_faces(n: usize, k: usize) -> usize {
    let faces: BTreeSet<Vec<Vec<u32>>> = enumerate_nc_partitions(n)
        .into_iter()
        .map(|p| {
            p.nonsingleton_blocks()
                .into_iter()
                .cloned()
                .collect::<Vec<_>>()
        })
        .filter(|f| f.len() == k)
        .collect();
    faces.len()
}
