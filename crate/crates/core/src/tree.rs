//! Rooted binary trees of carets and reduced tree pair diagrams.
//!
//! A [`Tree`] is either a leaf or a caret with two subtrees. Carets are
//! numbered in infix order from zero and leaves left to right from zero.
//! Trees are immutable and share structure through [`Arc`], so cloning is
//! cheap and values can be sent across threads.
//!
//! A [`TreePair`] is always stored reduced: no leaf index `n` has a caret
//! with exposed leaves `n, n + 1` in both trees. The pair of two bare
//! leaves is the identity.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Tree(Option<Arc<Caret>>);

#[derive(PartialEq, Eq, Hash)]
struct Caret {
    left: Tree,
    right: Tree,
    carets: usize,
}

impl Tree {
    pub fn leaf() -> Self {
        Tree(None)
    }

    pub fn caret(left: Tree, right: Tree) -> Self {
        let carets = 1 + left.caret_count() + right.caret_count();
        Tree(Some(Arc::new(Caret { left, right, carets })))
    }

    pub fn is_leaf(&self) -> bool {
        self.0.is_none()
    }

    pub fn caret_count(&self) -> usize {
        self.0.as_ref().map_or(0, |c| c.carets)
    }

    pub fn leaf_count(&self) -> usize {
        self.caret_count() + 1
    }

    /// Left and right subtrees of the root caret, or `None` for a leaf.
    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        self.0.as_deref().map(|c| (&c.left, &c.right))
    }

    pub fn left(&self) -> Option<&Tree> {
        self.children().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Tree> {
        self.children().map(|(_, r)| r)
    }

    /// Infix number of the root caret, i.e. the caret count of its left subtree.
    pub fn root_number(&self) -> Option<usize> {
        self.left().map(Tree::caret_count)
    }

    /// A right spine (right vine) with `carets` carets.
    pub fn right_vine(carets: usize) -> Self {
        (0..carets).fold(Tree::leaf(), |acc, _| Tree::caret(Tree::leaf(), acc))
    }

    /// A left spine (left vine) with `carets` carets.
    pub fn left_vine(carets: usize) -> Self {
        (0..carets).fold(Tree::leaf(), |acc, _| Tree::caret(acc, Tree::leaf()))
    }

    /// Preorder bitstring: `1` for a caret followed by its left then right
    /// encodings, `0` for a leaf.
    pub fn encode(&self) -> String {
        let mut out = String::with_capacity(2 * self.caret_count() + 1);
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut String) {
        match self.children() {
            None => out.push('0'),
            Some((l, r)) => {
                out.push('1');
                l.encode_into(out);
                r.encode_into(out);
            }
        }
    }

    pub fn decode(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::TreeSyntax {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let bytes = input.as_bytes();
        if bytes.is_empty() {
            return Err(err("empty input"));
        }
        // Explicit stack instead of recursion so deep vines cannot overflow.
        enum Frame {
            Open,
            HasLeft(Tree),
        }
        let mut stack: Vec<Frame> = Vec::new();
        for (pos, &b) in bytes.iter().enumerate() {
            let mut done = match b {
                b'1' => {
                    stack.push(Frame::Open);
                    continue;
                }
                b'0' => Tree::leaf(),
                _ => return Err(err(&format!("unexpected character at offset {pos}"))),
            };
            loop {
                match stack.pop() {
                    None => {
                        if pos + 1 != bytes.len() {
                            return Err(err(&format!("trailing input at offset {}", pos + 1)));
                        }
                        return Ok(done);
                    }
                    Some(Frame::Open) => {
                        stack.push(Frame::HasLeft(done));
                        break;
                    }
                    Some(Frame::HasLeft(left)) => done = Tree::caret(left, done),
                }
            }
        }
        Err(err("input ends before the tree is complete"))
    }

    /// Leaf indices `n` at which a caret has the two exposed leaves `n, n + 1`.
    pub fn exposed_carets(&self) -> Vec<usize> {
        fn go(t: &Tree, next_leaf: &mut usize, out: &mut Vec<usize>) {
            match t.children() {
                None => *next_leaf += 1,
                Some((l, r)) if l.is_leaf() && r.is_leaf() => {
                    out.push(*next_leaf);
                    *next_leaf += 2;
                }
                Some((l, r)) => {
                    go(l, next_leaf, out);
                    go(r, next_leaf, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut 0, &mut out);
        out
    }

    /// Replaces each exposed caret whose left leaf index lies in `at` by a
    /// single leaf. Indices refer to the numbering before any removal.
    pub fn collapse(&self, at: &BTreeSet<usize>) -> Tree {
        fn go(t: &Tree, next_leaf: &mut usize, at: &BTreeSet<usize>) -> Tree {
            match t.children() {
                None => {
                    *next_leaf += 1;
                    t.clone()
                }
                Some((l, r)) if l.is_leaf() && r.is_leaf() && at.contains(next_leaf) => {
                    *next_leaf += 2;
                    Tree::leaf()
                }
                Some((l, r)) => {
                    let nl = go(l, next_leaf, at);
                    let nr = go(r, next_leaf, at);
                    if &nl == l && &nr == r {
                        t.clone()
                    } else {
                        Tree::caret(nl, nr)
                    }
                }
            }
        }
        if at.is_empty() {
            return self.clone();
        }
        go(self, &mut 0, at)
    }

    /// Replaces leaf `i` by `grafts[i]`, left to right.
    ///
    /// Panics if `grafts.len() != self.leaf_count()`.
    pub fn graft(&self, grafts: &[Tree]) -> Tree {
        assert_eq!(grafts.len(), self.leaf_count(), "one graft per leaf");
        fn go(t: &Tree, grafts: &mut std::slice::Iter<'_, Tree>) -> Tree {
            match t.children() {
                None => grafts.next().expect("graft count checked").clone(),
                Some((l, r)) => {
                    let nl = go(l, grafts);
                    let nr = go(r, grafts);
                    Tree::caret(nl, nr)
                }
            }
        }
        if grafts.iter().all(Tree::is_leaf) {
            return self.clone();
        }
        go(self, &mut grafts.iter())
    }

    /// All trees with exactly `carets` carets, in a fixed order.
    pub fn enumerate(carets: usize) -> Vec<Tree> {
        let mut by_size: Vec<Vec<Tree>> = vec![vec![Tree::leaf()]];
        for n in 1..=carets {
            let mut trees = Vec::new();
            for left in 0..n {
                for l in &by_size[left] {
                    for r in &by_size[n - 1 - left] {
                        trees.push(Tree::caret(l.clone(), r.clone()));
                    }
                }
            }
            by_size.push(trees);
        }
        by_size.swap_remove(carets)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.encode())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tree::decode(s)
    }
}

/// Reduced tree pair diagram `(T-, T+)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TreePair {
    neg: Tree,
    pos: Tree,
}

impl TreePair {
    pub fn identity() -> Self {
        TreePair::default()
    }

    /// Reduces an arbitrary pair with matching leaf counts.
    pub fn reduce(neg: Tree, pos: Tree) -> Result<Self> {
        check_leaves(&neg, &pos)?;
        let (mut neg, mut pos) = (neg, pos);
        loop {
            let common = common_exposed(&neg, &pos);
            if common.is_empty() {
                return Ok(TreePair { neg, pos });
            }
            neg = neg.collapse(&common);
            pos = pos.collapse(&common);
        }
    }

    /// Accepts a pair only if it is already reduced.
    pub fn from_reduced(neg: Tree, pos: Tree) -> Result<Self> {
        check_leaves(&neg, &pos)?;
        match common_exposed(&neg, &pos).into_iter().next() {
            Some(leaf) => Err(Error::Unreduced { leaf }),
            None => Ok(TreePair { neg, pos }),
        }
    }

    pub fn neg(&self) -> &Tree {
        &self.neg
    }

    pub fn pos(&self) -> &Tree {
        &self.pos
    }

    pub fn into_trees(self) -> (Tree, Tree) {
        (self.neg, self.pos)
    }

    /// Carets per tree; both trees of a pair have the same count.
    pub fn caret_count(&self) -> usize {
        self.neg.caret_count()
    }

    pub fn is_identity(&self) -> bool {
        self.neg.is_leaf()
    }

    /// Swaps the two trees.
    pub fn inverse(&self) -> Self {
        TreePair {
            neg: self.pos.clone(),
            pos: self.neg.clone(),
        }
    }

    /// Canonical text form `NEG:POS`.
    pub fn encode(&self) -> String {
        format!("{}:{}", self.neg.encode(), self.pos.encode())
    }

    /// Parses `NEG:POS` and reduces the result.
    pub fn decode(input: &str) -> Result<Self> {
        let (neg, pos) = input.split_once(':').ok_or_else(|| Error::TreeSyntax {
            input: input.to_string(),
            reason: "missing ':' separator".to_string(),
        })?;
        TreePair::reduce(Tree::decode(neg.trim())?, Tree::decode(pos.trim())?)
    }
}

fn check_leaves(neg: &Tree, pos: &Tree) -> Result<()> {
    if neg.leaf_count() != pos.leaf_count() {
        return Err(Error::LeafMismatch {
            neg: neg.leaf_count(),
            pos: pos.leaf_count(),
        });
    }
    Ok(())
}

/// Leaf indices where both trees have an exposed caret.
pub fn common_exposed(neg: &Tree, pos: &Tree) -> BTreeSet<usize> {
    let a = neg.exposed_carets();
    let b: BTreeSet<usize> = pos.exposed_carets().into_iter().collect();
    a.into_iter().filter(|n| b.contains(n)).collect()
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.neg, self.pos)
    }
}

impl fmt::Debug for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreePair({self})")
    }
}

impl FromStr for TreePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TreePair::decode(s)
    }
}

impl Serialize for TreePair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.encode())
    }
}

impl<'de> Deserialize<'de> for TreePair {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        TreePair::decode(&s).map_err(serde::de::Error::custom)
    }
}
