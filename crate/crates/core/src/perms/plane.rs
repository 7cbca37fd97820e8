//! Rooted plane trees with increasing vertex labels `1..=N` (root `1`).

use std::fmt;

use super::fs_tree::FsTree;
use crate::error::{Error, Result};

/// Children lists indexed by vertex label; index `0` is unused.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    children: Vec<Vec<u32>>,
}

impl PlaneTree {
    /// `children[v - 1]` lists the children of vertex `v` left to right.
    pub fn new(children: Vec<Vec<u32>>) -> Result<Self> {
        let n = children.len();
        if n == 0 {
            return Err(Error::structural("a tree has at least one vertex"));
        }
        let mut has_parent = vec![false; n + 1];
        for (i, kids) in children.iter().enumerate() {
            let v = i as u32 + 1;
            for &c in kids {
                if c as usize > n || c <= v {
                    return Err(Error::structural(format!(
                        "child {c} of {v} breaks the increasing labeling on [{n}]"
                    )));
                }
                if has_parent[c as usize] {
                    return Err(Error::structural(format!("{c} has two parents")));
                }
                has_parent[c as usize] = true;
            }
        }
        if let Some(v) = (2..=n).find(|&v| !has_parent[v]) {
            return Err(Error::structural(format!("vertex {v} has no parent")));
        }
        let mut all = vec![Vec::new()];
        all.extend(children);
        Ok(PlaneTree { children: all })
    }

    pub fn single() -> Self {
        PlaneTree {
            children: vec![Vec::new(), Vec::new()],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len() - 1
    }

    pub fn children(&self, v: u32) -> &[u32] {
        &self.children[v as usize]
    }

    pub fn child_count(&self, v: u32) -> usize {
        self.children[v as usize].len()
    }

    /// `parent[v]` for each label, `0` for the root and the unused slot.
    pub fn parents(&self) -> Vec<u32> {
        let mut parent = vec![0; self.children.len()];
        for (v, kids) in self.children.iter().enumerate() {
            for &c in kids {
                parent[c as usize] = v as u32;
            }
        }
        parent
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.vertex_count() as u32
    }

    pub fn is_012(&self) -> bool {
        self.children.iter().all(|k| k.len() <= 2)
    }

    pub fn forks(&self) -> usize {
        self.children.iter().filter(|k| k.len() == 2).count()
    }

    pub fn leaves(&self) -> usize {
        self.children[1..].iter().filter(|k| k.is_empty()).count()
    }

    /// Children counts `q_1, ..., q_N`.
    pub fn child_counts(&self) -> Vec<usize> {
        self.children[1..].iter().map(Vec::len).collect()
    }

    /// The right-adjusted Foata–Strehl tree of a 0-1-2 tree: of two children
    /// the first is the left child; an only child goes to the right slot.
    pub fn to_fs_tree(&self) -> Result<FsTree> {
        if !self.is_012() {
            return Err(Error::structural("a vertex has more than two children"));
        }
        let n = self.vertex_count();
        let mut left = vec![0; n + 1];
        let mut right = vec![0; n + 1];
        for v in 1..=n {
            match self.children[v][..] {
                [] => {}
                [c] => right[v] = c,
                [a, b] => {
                    left[v] = a;
                    right[v] = b;
                }
                _ => unreachable!(),
            }
        }
        Ok(FsTree::from_slots(1, left, right))
    }

    /// Forgets the left/right distinction of only children.
    pub fn from_fs_tree(t: &FsTree) -> PlaneTree {
        let n = t.size();
        let mut children = vec![Vec::new(); n + 1];
        for x in 1..=n as u32 {
            children[x as usize].extend(t.left(x));
            children[x as usize].extend(t.right(x));
        }
        PlaneTree { children }
    }

    fn with_leaf(&self, parent: u32, slot: usize) -> PlaneTree {
        let mut t = self.clone();
        let new = t.children.len() as u32;
        t.children.push(Vec::new());
        t.children[parent as usize].insert(slot, new);
        t
    }
}

/// Renders `(1 (2) (3 (4)))`.
impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &PlaneTree, v: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "({v}")?;
            for &c in t.children(v) {
                write!(f, " ")?;
                go(t, c, f)?;
            }
            write!(f, ")")
        }
        go(self, 1, f)
    }
}

fn grow(vertices: usize, max_children: usize) -> Vec<PlaneTree> {
    if vertices == 0 {
        return Vec::new();
    }
    let mut level = vec![PlaneTree::single()];
    for _ in 1..vertices {
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let k = t.child_count(v);
                if k < max_children {
                    for slot in 0..=k {
                        next.push(t.with_leaf(v, slot));
                    }
                }
            }
        }
        level = next;
    }
    level
}

/// All increasing plane trees on `vertices` vertices, built by attaching the
/// largest label as a leaf in every slot, ordered by (parent label, slot).
pub fn enumerate_increasing_plane(vertices: usize) -> Vec<PlaneTree> {
    grow(vertices, usize::MAX)
}

/// As [`enumerate_increasing_plane`], restricted to at most two children per vertex.
pub fn enumerate_increasing_012(vertices: usize) -> Vec<PlaneTree> {
    grow(vertices, 2)
}
