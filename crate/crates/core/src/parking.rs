//! Functions `[n] -> [n]`, parking functions, the Garsia–Haiman bijection,
//! and parking trees with their depth-first and breadth-first labelings.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perms::{enumerate_increasing_plane, parse_int_list, Permutation, PlaneTree};
use crate::words::{down_blocks, dyck_to_lukasiewicz, Letter, MotzkinWord, SparseSet, Word};

/// A function `f: [n] -> [n]`, stored as `f(1), ..., f(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteFunction(Vec<u32>);

impl FiniteFunction {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if let Some(&v) = values.iter().find(|&&v| v == 0 || v as usize > n) {
            return Err(Error::OutOfRange {
                what: "function value",
                value: v.into(),
                bound: format!("1..={n}"),
            });
        }
        Ok(FiniteFunction(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// `f(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Fiber sizes `q_i = |f^{-1}(i)|` for `i = 1..=n`.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut q = vec![0; self.len()];
        for &v in &self.0 {
            q[v as usize - 1] += 1;
        }
        q
    }

    /// `|f^{-1}([k])| >= k` for every `k`.
    pub fn is_parking(&self) -> bool {
        let mut total = 0;
        self.fiber_sizes().iter().enumerate().all(|(k, &q)| {
            total += q;
            total > k
        })
    }

    /// No `i < j < k` with `f(i) <= f(j) <= f(k)`.
    pub fn is_123_avoiding(&self) -> bool {
        fn_is_123_avoiding(&self.0)
    }

    /// Number of weak ascents `f(i) <= f(i + 1)`.
    pub fn ascents(&self) -> usize {
        fn_ascents(&self.0)
    }
}

/// Weak 123-avoidance: some middle entry has a weakly smaller entry before it
/// and a weakly larger entry after it iff the pattern occurs.
pub fn fn_is_123_avoiding(f: &[u32]) -> bool {
    let n = f.len();
    if n < 3 {
        return true;
    }
    let mut suffix_max = vec![0u32; n];
    for j in (0..n - 1).rev() {
        suffix_max[j] = suffix_max[j + 1].max(f[j + 1]);
    }
    let mut prefix_min = f[0];
    for j in 1..n - 1 {
        if prefix_min <= f[j] && f[j] <= suffix_max[j] {
            return false;
        }
        prefix_min = prefix_min.min(f[j]);
    }
    true
}

pub fn fn_ascents(f: &[u32]) -> usize {
    f.windows(2).filter(|w| w[0] <= w[1]).count()
}

impl fmt::Display for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl FromStr for FiniteFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FiniteFunction::new(parse_int_list(s)?)
    }
}

/// All functions `[n] -> [n]` in lexicographic order.
pub fn all_functions(n: usize) -> impl Iterator<Item = FiniteFunction> {
    let first = (n > 0).then(|| vec![1u32; n]);
    let mut next = if n == 0 { Some(Vec::new()) } else { first };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = n;
        while i > 0 {
            i -= 1;
            if (succ[i] as usize) < n {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(FiniteFunction(current))
    })
}

/// All 123-avoiding functions `[n] -> [n]` (optionally only the parking
/// functions) in lexicographic order, by depth-first search with pruning.
pub fn enumerate_123_avoiding_functions(
    n: usize,
    parking_only: bool,
    limits: &Limits,
) -> Result<Vec<FiniteFunction>> {
    Limits::check("123-avoiding functions", n, limits.all_functions)?;
    // `threshold` is the least value that already has a weakly smaller entry
    // before it; any later value at or above it completes a 123.
    fn extend(
        n: usize,
        parking_only: bool,
        prefix: &mut Vec<u32>,
        min: u32,
        threshold: u32,
        out: &mut Vec<FiniteFunction>,
    ) {
        if prefix.len() == n {
            let f = FiniteFunction(prefix.clone());
            if !parking_only || f.is_parking() {
                out.push(f);
            }
            return;
        }
        for v in 1..=n as u32 {
            if v >= threshold {
                break;
            }
            let next_threshold = if v >= min {
                threshold.min(v)
            } else {
                threshold
            };
            prefix.push(v);
            extend(n, parking_only, prefix, min.min(v), next_threshold, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(
        n,
        parking_only,
        &mut Vec::with_capacity(n),
        u32::MAX,
        u32::MAX,
        &mut out,
    );
    Ok(out)
}

// ---------------------------------------------------------------------------
// Garsia–Haiman
// ---------------------------------------------------------------------------

/// A permutation together with a balanced word `U^{q_1} D ... U^{q_n} D`
/// whose descents all fall on block boundaries `q_1, q_1 + q_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GhPair {
    pub perm: Permutation,
    pub word: Word,
}

impl GhPair {
    pub fn new(perm: Permutation, word: Word) -> Result<Self> {
        let blocks = down_blocks(&word)
            .filter(|_| word.is_balanced())
            .ok_or_else(|| Error::structural(format!("{word} is not balanced ending in D")))?;
        if blocks.len() != perm.len() {
            return Err(Error::structural(format!(
                "{word} has semilength {} but the permutation has length {}",
                blocks.len(),
                perm.len()
            )));
        }
        let mut start = 0;
        for q in blocks {
            let block = &perm.images()[start..start + q];
            if block.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::precondition(format!(
                    "{perm} has a descent inside a block of {word}"
                )));
            }
            start += q;
        }
        Ok(GhPair { perm, word })
    }
}

/// `f` maps to the fibers `f^{-1}(1), f^{-1}(2), ...` concatenated (each
/// increasing) and the word `U^{q_1} D ... U^{q_n} D` of fiber sizes.
pub fn garsia_haiman(f: &FiniteFunction) -> GhPair {
    let q = f.fiber_sizes();
    let mut fibers: Vec<Vec<u32>> = vec![Vec::new(); f.len()];
    for (i, &v) in f.values().iter().enumerate() {
        fibers[v as usize - 1].push(i as u32 + 1);
    }
    let perm = Permutation::from_vec_unchecked(fibers.concat());
    let word = Word::from_blocks(&q).expect("word length within bounds");
    GhPair { perm, word }
}

pub fn garsia_haiman_inverse(pair: &GhPair) -> FiniteFunction {
    let blocks = down_blocks(&pair.word).expect("validated on construction");
    let mut values = vec![0u32; pair.perm.len()];
    let mut images = pair.perm.images().iter();
    for (i, q) in blocks.into_iter().enumerate() {
        for &x in images.by_ref().take(q) {
            values[x as usize - 1] = i as u32 + 1;
        }
    }
    FiniteFunction(values)
}

// ---------------------------------------------------------------------------
// Parking trees
// ---------------------------------------------------------------------------

/// A plane tree on `[n + 1]` with increasing vertex labels and edge labels
/// `[n]` increasing among siblings. The edge into vertex `v` carries `edge[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParkingTree {
    tree: PlaneTree,
    edge: Vec<u32>,
}

impl ParkingTree {
    /// `edge[v - 1]` labels the edge into vertex `v`; the root's entry is ignored.
    pub fn new(tree: PlaneTree, edge: Vec<u32>) -> Result<Self> {
        let size = tree.vertex_count();
        if edge.len() != size {
            return Err(Error::structural(format!(
                "{} edge labels for {size} vertices",
                edge.len()
            )));
        }
        let mut labels = vec![0u32; size + 1];
        labels[1..].copy_from_slice(&edge);
        labels[1] = 0;
        let mut seen = vec![false; size];
        for &e in &labels[2..] {
            if e == 0 || e as usize >= size || seen[e as usize] {
                return Err(Error::structural(format!(
                    "edge labels must be a bijection onto [{}]",
                    size - 1
                )));
            }
            seen[e as usize] = true;
        }
        for v in tree.vertices() {
            let kids = tree.children(v);
            if kids
                .windows(2)
                .any(|w| labels[w[0] as usize] > labels[w[1] as usize])
            {
                return Err(Error::structural(format!(
                    "edge labels below vertex {v} do not increase left to right"
                )));
            }
        }
        Ok(ParkingTree { tree, edge: labels })
    }

    /// Labels the edges of `tree` so that it encodes `f`; the children of
    /// `v` receive the fiber `f^{-1}(v)` in increasing order.
    pub fn from_tree_and_function(tree: PlaneTree, f: &[u32]) -> Result<Self> {
        let size = tree.vertex_count();
        if f.len() + 1 != size {
            return Err(Error::structural(
                "function length must be vertex count minus one",
            ));
        }
        let mut fibers: Vec<Vec<u32>> = vec![Vec::new(); size + 1];
        for (i, &v) in f.iter().enumerate() {
            if v == 0 || v as usize > size {
                return Err(Error::UnknownLabel(v));
            }
            fibers[v as usize].push(i as u32 + 1);
        }
        let mut edge = vec![0u32; size + 1];
        for v in tree.vertices() {
            let kids = tree.children(v);
            if kids.len() != fibers[v as usize].len() {
                return Err(Error::structural(format!(
                    "vertex {v} has {} children but its fiber has {} elements",
                    kids.len(),
                    fibers[v as usize].len()
                )));
            }
            for (&c, &e) in kids.iter().zip(&fibers[v as usize]) {
                edge[c as usize] = e;
            }
        }
        Ok(ParkingTree { tree, edge })
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn n(&self) -> usize {
        self.tree.vertex_count() - 1
    }

    /// The label of the edge into vertex `v` (`None` for the root).
    pub fn edge_label(&self, v: u32) -> Option<u32> {
        (v > 1).then(|| self.edge[v as usize])
    }

    /// `f(i)` is the parent vertex of the edge labeled `i`.
    pub fn to_function(&self) -> FiniteFunction {
        let mut values = vec![0u32; self.n()];
        for v in self.tree.vertices() {
            for &c in self.tree.children(v) {
                values[self.edge[c as usize] as usize - 1] = v;
            }
        }
        FiniteFunction(values)
    }

    /// Edge labels grouped by parent label, left to right within a group.
    pub fn edge_perm(&self) -> Permutation {
        let images = self
            .tree
            .vertices()
            .flat_map(|v| self.tree.children(v).iter().map(|&c| self.edge[c as usize]))
            .collect();
        Permutation::from_vec_unchecked(images)
    }

    /// At most two children everywhere and a 123-avoiding edge permutation.
    pub fn is_123_parking_tree(&self) -> bool {
        self.tree.is_012() && self.edge_perm().is_123_avoiding()
    }
}

/// Renders `(v=1 [e=7 (v=2)] [e=10 (v=3 ...)])`.
impl fmt::Display for ParkingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &ParkingTree, v: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "(v={v}")?;
            for &c in t.tree.children(v) {
                write!(f, " [e={} ", t.edge[c as usize])?;
                go(t, c, f)?;
                write!(f, "]")?;
            }
            write!(f, ")")
        }
        go(self, 1, f)
    }
}

struct TreeParser<'a> {
    src: &'a str,
    rest: &'a str,
}

impl<'a> TreeParser<'a> {
    fn err(&self, reason: &str) -> Error {
        let at = self.src.len() - self.rest.len();
        Error::parse(self.src, format!("{reason} at byte {at}"))
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        match self.rest.strip_prefix(token) {
            Some(r) => {
                self.rest = r;
                Ok(())
            }
            None => Err(self.err(&format!("expected {token:?}"))),
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest.len());
        let (digits, rest) = self.rest.split_at(end);
        let value = digits.parse().map_err(|_| self.err("expected a number"))?;
        self.rest = rest;
        Ok(value)
    }

    /// Parses `(v=X [e=Y (...)] ...)`, recording children and edge labels.
    fn vertex(&mut self, nodes: &mut Vec<(u32, Vec<u32>, u32)>, edge: u32) -> Result<u32> {
        self.expect("(")?;
        self.expect("v=")?;
        let v = self.number()?;
        let idx = nodes.len();
        nodes.push((v, Vec::new(), edge));
        loop {
            self.skip_ws();
            if self.rest.starts_with(')') {
                self.rest = &self.rest[1..];
                return Ok(v);
            }
            self.expect("[")?;
            self.expect("e=")?;
            let e = self.number()?;
            let c = self.vertex(nodes, e)?;
            nodes[idx].1.push(c);
            self.expect("]")?;
        }
    }
}

impl FromStr for ParkingTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = TreeParser { src: s, rest: s };
        let mut nodes = Vec::new();
        p.vertex(&mut nodes, 0)?;
        p.skip_ws();
        if !p.rest.is_empty() {
            return Err(p.err("trailing input"));
        }
        let size = nodes.len();
        let mut children = vec![Vec::new(); size];
        let mut edge = vec![0u32; size];
        for (v, kids, e) in nodes {
            if v == 0 || v as usize > size {
                return Err(Error::parse(
                    s,
                    format!("vertex label {v} outside 1..={size}"),
                ));
            }
            children[v as usize - 1] = kids;
            edge[v as usize - 1] = e;
        }
        let tree = PlaneTree::new(children).map_err(|e| Error::parse(s, e.to_string()))?;
        ParkingTree::new(tree, edge).map_err(|e| Error::parse(s, e.to_string()))
    }
}

fn lukasiewicz_letters(f: &FiniteFunction) -> Result<Vec<usize>> {
    let gh = garsia_haiman(f);
    if !gh.word.is_dyck() {
        return Err(Error::precondition(format!(
            "{f} is not a parking function"
        )));
    }
    Ok(dyck_to_lukasiewicz(&gh.word)?.letters().to_vec())
}

/// The parking tree of `f` whose vertices are labeled in depth-first order.
pub fn dfs_tree(f: &FiniteFunction) -> Result<ParkingTree> {
    let q = lukasiewicz_letters(f)?;
    let size = q.len();
    let mut children = vec![Vec::new(); size];
    // Each stack entry is a vertex with its number of still unlabeled children.
    let mut stack: Vec<(usize, usize)> = vec![(1, q[0])];
    for v in 2..=size {
        while let Some(&(_, 0)) = stack.last() {
            stack.pop();
        }
        let top = stack
            .last_mut()
            .expect("a Łukasiewicz word never runs dry early");
        top.1 -= 1;
        children[top.0 - 1].push(v as u32);
        stack.push((v, q[v - 1]));
    }
    ParkingTree::from_tree_and_function(PlaneTree::new(children)?, f.values())
}

/// The parking tree of `f` whose vertices are labeled in breadth-first order.
pub fn bfs_tree(f: &FiniteFunction) -> Result<ParkingTree> {
    let q = lukasiewicz_letters(f)?;
    let size = q.len();
    let mut children = vec![Vec::new(); size];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::from([(1, q[0])]);
    for v in 2..=size {
        while let Some(&(_, 0)) = queue.front() {
            queue.pop_front();
        }
        let front = queue
            .front_mut()
            .expect("a Łukasiewicz word never runs dry early");
        front.1 -= 1;
        children[front.0 - 1].push(v as u32);
        queue.push_back((v, q[v - 1]));
    }
    ParkingTree::from_tree_and_function(PlaneTree::new(children)?, f.values())
}

/// Sibling type of a vertex-labeled 0-1-2 tree: with edges labeled by the
/// identity edge permutation, the `b` such that edges `b` and `b + 1` share a parent.
pub fn sibling_type(t: &PlaneTree) -> Result<SparseSet> {
    if !t.is_012() {
        return Err(Error::structural("a vertex has more than two children"));
    }
    let mut b = 1u32;
    let mut out = Vec::new();
    for q in t.child_counts() {
        if q == 2 {
            out.push(b);
        }
        b += q as u32;
    }
    SparseSet::new(out)
}

/// `x_i` is `U`, `D` or `H` as vertex `i` is a fork, a leaf, or has one child, `i` in `[n]`.
pub fn tree_motzkin_word(t: &PlaneTree) -> Result<MotzkinWord> {
    let n = t.vertex_count() - 1;
    t.child_counts()[..n]
        .iter()
        .map(|&q| match q {
            0 => Ok(Letter::D),
            1 => Ok(Letter::H),
            2 => Ok(Letter::U),
            _ => Err(Error::structural("a vertex has more than two children")),
        })
        .collect::<Result<Vec<_>>>()
        .map(MotzkinWord)
}

/// Rearranges `v` into the next larger arrangement in lexicographic order;
/// repeated values are handled, so starting from the sorted multiset this
/// lists each distinct arrangement once.
pub fn next_arrangement(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The sorted multiset of parents: vertex `v` repeated once per child.
pub(crate) fn sorted_parents(t: &PlaneTree) -> Vec<u32> {
    t.vertices()
        .flat_map(|v| std::iter::repeat_n(v, t.child_count(v)))
        .collect()
}

/// Calls `visit(tree, f)` for every parking tree on `n + 1` vertices, where
/// `f` is the encoded function (equivalently, the edge labeling).
///
/// Order: vertex-labeled trees as produced by
/// [`enumerate_increasing_plane`], then encoded functions lexicographically.
pub fn for_each_parking_tree<F>(n: usize, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(&PlaneTree, &[u32]),
{
    Limits::check("parking trees", n, limits.parking_trees)?;
    for t in enumerate_increasing_plane(n + 1) {
        // Positions of each parent value in f are free; enumerate arrangements
        // of the multiset of parents.
        let mut f = sorted_parents(&t);
        loop {
            visit(&t, &f);
            if !next_arrangement(&mut f) {
                break;
            }
        }
    }
    Ok(())
}

pub fn enumerate_parking_trees(n: usize, limits: &Limits) -> Result<Vec<ParkingTree>> {
    let mut out = Vec::new();
    for_each_parking_tree(n, limits, |t, f| {
        out.push(ParkingTree::from_tree_and_function(t.clone(), f).expect("fibers match children"));
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::krattenthaler;

    const FIG_F: &str = "7 5 10 7 3 6 1 4 3 1";
    fn func(s: &str) -> FiniteFunction {
        s.parse().unwrap()
    }

    fn naive_123(f: &[u32]) -> bool {
        let n = f.len();
        !(0..n).any(|i| (i + 1..n).any(|j| f[i] <= f[j] && (j + 1..n).any(|k| f[j] <= f[k])))
    }

    fn structure(t: &ParkingTree) -> Vec<(u32, Vec<u32>)> {
        t.tree()
            .vertices()
            .filter(|&v| t.tree().child_count(v) > 0)
            .map(|v| (v, t.tree().children(v).to_vec()))
            .collect()
    }

    #[test]
    fn parking_examples() {
        assert!(func("1 1 1").is_parking());
        assert!(!func("2 2").is_parking());
        assert!(func(FIG_F).is_parking());
        let f = func("3 2 1");
        assert!(f.is_123_avoiding());
        assert_eq!(f.ascents(), 0);
        let f = func("1 1");
        assert!(f.is_123_avoiding());
        assert_eq!(f.ascents(), 1);
        assert!(func(FIG_F).is_123_avoiding());
        assert!(!func("1 1 1").is_123_avoiding());
        assert!(FiniteFunction::new(vec![3, 1]).is_err());
    }

    #[test]
    fn fast_123_check_matches_naive() {
        for n in 0..=6 {
            for f in all_functions(n) {
                assert_eq!(f.is_123_avoiding(), naive_123(f.values()), "{f}");
            }
        }
    }

    #[test]
    fn pruned_enumeration_matches_filter() {
        let limits = Limits::default();
        for n in 0..=6 {
            for parking in [false, true] {
                let filtered: Vec<FiniteFunction> = all_functions(n)
                    .filter(|f| naive_123(f.values()) && (!parking || f.is_parking()))
                    .collect();
                assert_eq!(
                    enumerate_123_avoiding_functions(n, parking, &limits).unwrap(),
                    filtered
                );
            }
        }
        assert_eq!(
            enumerate_123_avoiding_functions(3, true, &limits)
                .unwrap()
                .len(),
            11
        );
    }

    #[test]
    fn garsia_haiman_examples() {
        let gh = garsia_haiman(&func(FIG_F));
        assert_eq!(gh.perm, "7 10 5 9 8 2 6 1 4 3".parse().unwrap());
        assert_eq!(gh.word, "U2D2U2DUDUDUDU2D3UD".parse().unwrap());
        let gh = garsia_haiman(&func("1 2 3 4"));
        assert_eq!(gh.perm, Permutation::identity(4));
        assert_eq!(gh.word.to_string(), "UDUDUDUD");
        let gh = garsia_haiman(&func("1 1"));
        assert_eq!(gh.perm.to_string(), "1 2");
        assert_eq!(gh.word.to_string(), "UUDD");
        assert!(GhPair::new("2 1".parse().unwrap(), "UUDD".parse().unwrap()).is_err());
        assert!(GhPair::new("2 1".parse().unwrap(), "UDUD".parse().unwrap()).is_ok());
    }

    #[test]
    fn garsia_haiman_round_trip() {
        for n in 0..=6 {
            for f in all_functions(n) {
                let gh = garsia_haiman(&f);
                let rebuilt = GhPair::new(gh.perm.clone(), gh.word).unwrap();
                assert_eq!(garsia_haiman_inverse(&rebuilt), f);
                assert_eq!(f.is_parking(), gh.word.is_dyck(), "{f}");
                assert_eq!(f.is_123_avoiding(), gh.perm.is_123_avoiding(), "{f}");
            }
        }
    }

    #[test]
    fn figure_trees() {
        let f = func(FIG_F);
        let dfs = dfs_tree(&f).unwrap();
        assert_eq!(
            structure(&dfs),
            [
                (1, vec![2, 3]),
                (3, vec![4, 10]),
                (4, vec![5]),
                (5, vec![6]),
                (6, vec![7]),
                (7, vec![8, 9]),
                (10, vec![11])
            ]
        );
        assert_eq!((dfs.edge_label(2), dfs.edge_label(3)), (Some(7), Some(10)));
        assert_eq!((dfs.edge_label(4), dfs.edge_label(10)), (Some(5), Some(9)));
        let bfs = bfs_tree(&f).unwrap();
        assert_eq!(
            structure(&bfs),
            [
                (1, vec![2, 3]),
                (3, vec![4, 5]),
                (4, vec![6]),
                (5, vec![7]),
                (6, vec![8]),
                (7, vec![9, 10]),
                (10, vec![11])
            ]
        );
        for t in [&dfs, &bfs] {
            assert_eq!(t.to_function(), f);
            assert_eq!(t.edge_perm(), "7 10 5 9 8 2 6 1 4 3".parse().unwrap());
            assert!(t.is_123_parking_tree());
        }
        assert!(dfs_tree(&func("2 2")).is_err());
    }

    #[test]
    fn serialization_round_trip() {
        let f = func(FIG_F);
        let dfs = dfs_tree(&f).unwrap();
        let text = dfs.to_string();
        let parsed: ParkingTree = text.parse().unwrap();
        assert_eq!(parsed, dfs);
        let bfs = bfs_tree(&f).unwrap();
        assert_eq!(bfs.to_string().parse::<ParkingTree>().unwrap(), bfs);
        assert!("(v=1 [e=1 (v=2)".parse::<ParkingTree>().is_err());
        assert!("(v=1 [e=2 (v=2)] [e=1 (v=3)])"
            .parse::<ParkingTree>()
            .is_err());
        assert!("(v=2 [e=1 (v=1)])".parse::<ParkingTree>().is_err());
        let single: ParkingTree = "(v=1 [e=1 (v=2)])".parse().unwrap();
        assert_eq!(single.to_function(), func("1"));
        assert_eq!(single.edge_perm(), Permutation::identity(1));
        let star: ParkingTree = "(v=1 [e=1 (v=2)] [e=2 (v=3)])".parse().unwrap();
        assert_eq!(star.edge_perm().to_string(), "1 2");
    }

    #[test]
    fn small_trees() {
        let f = func("1");
        assert_eq!(dfs_tree(&f).unwrap(), bfs_tree(&f).unwrap());
        let triple: ParkingTree = "(v=1 [e=1 (v=2)] [e=2 (v=3)] [e=3 (v=4)])".parse().unwrap();
        assert!(!triple.is_123_parking_tree());
    }

    #[test]
    fn dfs_and_bfs_trees_invert_and_are_injective() {
        for n in 1..=6 {
            let mut dfs_seen = std::collections::HashSet::new();
            let mut bfs_seen = std::collections::HashSet::new();
            for f in all_functions(n).filter(FiniteFunction::is_parking) {
                let d = dfs_tree(&f).unwrap();
                let b = bfs_tree(&f).unwrap();
                assert_eq!(d.to_function(), f);
                assert_eq!(b.to_function(), f);
                assert_eq!(d.edge_perm(), garsia_haiman(&f).perm);
                assert_eq!(d.is_123_parking_tree(), f.is_123_avoiding(), "{f}");
                assert!(dfs_seen.insert(d));
                assert!(bfs_seen.insert(b));
            }
        }
    }

    #[test]
    fn bfs_levels_stay_nonnegative() {
        for n in 1..=6 {
            for f in all_functions(n).filter(FiniteFunction::is_parking) {
                let letters = lukasiewicz_letters(&f).unwrap();
                let bfs = bfs_tree(&f).unwrap();
                // After visiting vertices 1..=i, the labeled ones are exactly 1..=labeled.
                let mut labeled = 1i64;
                for i in 1..=n {
                    labeled += letters[i - 1] as i64;
                    let max_child = (1..=i as u32)
                        .flat_map(|v| bfs.tree().children(v).iter().copied())
                        .max()
                        .unwrap_or(1);
                    assert_eq!(i64::from(max_child.max(1)), labeled);
                    let level = labeled - i as i64 - 1;
                    assert!(level >= 0, "{f} at {i}");
                    if i == n {
                        assert_eq!(level, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn parking_tree_counts() {
        let limits = Limits::default();
        let mut factorial = 1usize;
        for n in 0..=5 {
            if n > 0 {
                factorial *= n;
            }
            let mut count = 0;
            for_each_parking_tree(n, &limits, |t, f| {
                let pt = ParkingTree::from_tree_and_function(t.clone(), f).unwrap();
                assert!(pt.to_function().is_parking());
                assert_eq!(pt.edge_perm(), garsia_haiman(&pt.to_function()).perm);
                count += 1;
            })
            .unwrap();
            assert_eq!(count, factorial * factorial);
        }
        assert_eq!(enumerate_parking_trees(3, &limits).unwrap().len(), 36);
        assert!(matches!(
            enumerate_parking_trees(8, &limits),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn sibling_types_and_motzkin_words() {
        let path = PlaneTree::new(vec![vec![2], vec![3], vec![]]).unwrap();
        assert!(sibling_type(&path).unwrap().is_empty());
        assert_eq!(tree_motzkin_word(&path).unwrap().to_string(), "HH");
        let cherry = PlaneTree::new(vec![vec![2, 3], vec![], vec![]]).unwrap();
        assert_eq!(sibling_type(&cherry).unwrap().elements(), [1]);
        assert_eq!(tree_motzkin_word(&cherry).unwrap().to_string(), "UD");
        let edge = PlaneTree::new(vec![vec![2], vec![]]).unwrap();
        assert_eq!(tree_motzkin_word(&edge).unwrap().to_string(), "H");
    }

    #[test]
    fn compatibility_criterion_and_ascent_transfer() {
        let uu: Word = "UU".parse().unwrap();
        let uud: Word = "UUD".parse().unwrap();
        for n in 1..=6 {
            for f in all_functions(n).filter(|f| f.is_parking() && f.is_123_avoiding()) {
                let gh = garsia_haiman(&f);
                let w = krattenthaler(&gh.perm).unwrap();
                let ups = gh.word.up_positions();
                let kd = w.down_positions();
                for i in 1..n {
                    if ups[i] == ups[i - 1] + 1 {
                        // U_i U_{i+1} in v: expect U D_i D_{i+1} in w.
                        let (a, b) = (kd[i - 1], kd[i]);
                        assert!(b == a + 1 && a > 0 && !w.is_down(a - 1), "{f} at {i}");
                    }
                }
                assert_eq!(f.ascents(), w.factor_count(&uud), "{f}");
                let _ = gh.word.factor_count(&uu);
            }
        }
    }

    #[test]
    fn arrangements() {
        let mut v = vec![1, 1, 2];
        let mut all = vec![v.clone()];
        while next_arrangement(&mut v) {
            all.push(v.clone());
        }
        assert_eq!(all, [vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
