//! Foata–Strehl trees: binary increasing trees with explicit left/right slots.

use std::collections::BTreeSet;
use std::fmt;

use super::Permutation;
use crate::error::{Error, Result};

/// The Foata–Strehl tree of a permutation of `[n]`. Slots hold child labels,
/// `0` for an empty slot; index `0` of each slot vector is unused.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FsTree {
    root: u32,
    left: Vec<u32>,
    right: Vec<u32>,
}

impl FsTree {
    /// Minimum at the root, the entries before it form the left subtree and the
    /// entries after it the right subtree. Built with the usual stack sweep.
    pub fn of(p: &Permutation) -> FsTree {
        let n = p.len();
        let mut left = vec![0u32; n + 1];
        let mut right = vec![0u32; n + 1];
        let mut stack: Vec<u32> = Vec::with_capacity(n);
        for &x in p.images() {
            let mut last = 0;
            while let Some(&top) = stack.last() {
                if top > x {
                    last = stack.pop().unwrap();
                } else {
                    break;
                }
            }
            left[x as usize] = last;
            if let Some(&top) = stack.last() {
                right[top as usize] = x;
            }
            stack.push(x);
        }
        FsTree {
            root: stack.first().copied().unwrap_or(0),
            left,
            right,
        }
    }

    pub fn size(&self) -> usize {
        self.left.len() - 1
    }

    pub fn root(&self) -> Option<u32> {
        (self.root != 0).then_some(self.root)
    }

    pub fn left(&self, x: u32) -> Option<u32> {
        let c = self.left[x as usize];
        (c != 0).then_some(c)
    }

    pub fn right(&self, x: u32) -> Option<u32> {
        let c = self.right[x as usize];
        (c != 0).then_some(c)
    }

    pub fn child_count(&self, x: u32) -> usize {
        usize::from(self.left[x as usize] != 0) + usize::from(self.right[x as usize] != 0)
    }

    /// The permutation read off by inorder traversal.
    pub fn inorder(&self) -> Permutation {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = Vec::new();
        let mut cur = self.root;
        while cur != 0 || !stack.is_empty() {
            while cur != 0 {
                stack.push(cur);
                cur = self.left[cur as usize];
            }
            let x = stack.pop().unwrap();
            out.push(x);
            cur = self.right[x as usize];
        }
        Permutation::from_vec_unchecked(out)
    }

    fn check_label(&self, x: u32) -> Result<()> {
        if x == 0 || x as usize > self.size() {
            Err(Error::UnknownLabel(x))
        } else {
            Ok(())
        }
    }

    /// Exchanges the left and right subtrees of vertex `x`.
    pub fn phi(&self, x: u32) -> Result<FsTree> {
        self.check_label(x)?;
        let mut t = self.clone();
        std::mem::swap(&mut t.left[x as usize], &mut t.right[x as usize]);
        Ok(t)
    }

    /// [`FsTree::phi`] when `x` has exactly one child, the identity otherwise.
    pub fn psi(&self, x: u32) -> Result<FsTree> {
        self.check_label(x)?;
        if self.child_count(x) == 1 {
            self.phi(x)
        } else {
            Ok(self.clone())
        }
    }

    /// No vertex has an only child in the left slot.
    pub fn is_right_adjusted(&self) -> bool {
        (1..=self.size()).all(|x| !(self.left[x] != 0 && self.right[x] == 0))
    }

    /// Moves every only child into the right slot.
    pub fn right_adjusted(&self) -> FsTree {
        let mut t = self.clone();
        for x in 1..=self.size() {
            if t.right[x] == 0 {
                t.right[x] = t.left[x];
                t.left[x] = 0;
            }
        }
        t
    }

    /// Labels of vertices with exactly one child.
    pub fn one_child_vertices(&self) -> Vec<u32> {
        (1..=self.size() as u32)
            .filter(|&x| self.child_count(x) == 1)
            .collect()
    }

    pub(crate) fn from_slots(root: u32, left: Vec<u32>, right: Vec<u32>) -> FsTree {
        FsTree { root, left, right }
    }
}

/// Renders `(x L:(…) R:(…))`, omitting empty slots.
impl fmt::Display for FsTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &FsTree, x: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "({x}")?;
            if let Some(l) = t.left(x) {
                write!(f, " L:")?;
                go(t, l, f)?;
            }
            if let Some(r) = t.right(x) {
                write!(f, " R:")?;
                go(t, r, f)?;
            }
            write!(f, ")")
        }
        match self.root() {
            Some(r) => go(self, r, f),
            None => write!(f, "()"),
        }
    }
}

/// The representative of `p`'s restricted Foata–Strehl orbit whose tree is right-adjusted.
pub fn right_adjusted_rep(p: &Permutation) -> Permutation {
    FsTree::of(p).right_adjusted().inorder()
}

/// The orbit of `p` under the restricted action, as a set.
pub fn restricted_orbit(p: &Permutation) -> BTreeSet<Permutation> {
    let t = FsTree::of(p);
    let movable = t.one_child_vertices();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << movable.len() {
        let mut s = t.clone();
        for (k, &x) in movable.iter().enumerate() {
            if mask >> k & 1 == 1 {
                s = s.phi(x).expect("label taken from the tree");
            }
        }
        out.insert(s.inorder());
    }
    out
}
