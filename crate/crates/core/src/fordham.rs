//! Fordham's caret classification and exact word length over `{x0, x1}`.
//!
//! Each caret of a tree gets one of seven types depending on where it sits:
//! on the left spine (`L0`, `LL`), on the right spine below the root (`RI`,
//! `R0`, `RNI`) or in the interior (`I0`, `IR`). Pairing the types of the
//! carets with equal infix number in the two trees of a reduced diagram and
//! summing the table weights gives the word length.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::tree::{Tree, TreePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaretType {
    L0,
    LL,
    I0,
    IR,
    RI,
    R0,
    RNI,
}

impl CaretType {
    pub const ALL: [CaretType; 7] = [
        CaretType::L0,
        CaretType::LL,
        CaretType::I0,
        CaretType::IR,
        CaretType::RI,
        CaretType::R0,
        CaretType::RNI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaretType::L0 => "L0",
            CaretType::LL => "LL",
            CaretType::I0 => "I0",
            CaretType::IR => "IR",
            CaretType::RI => "RI",
            CaretType::R0 => "R0",
            CaretType::RNI => "RNI",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for CaretType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const X: i8 = -1;

/// Rows and columns follow the `CaretType` declaration order
/// (L0, LL, I0, IR, RI, R0, RNI). `X` marks pairings that cannot occur:
/// caret 0 is `L0` in every nonempty tree and no other caret is.
#[rustfmt::skip]
const WEIGHTS: [[i8; 7]; 7] = [
    //        L0  LL  I0  IR  RI  R0  RNI
    /* L0  */ [0,  X,  X,  X,  X,  X,  X],
    /* LL  */ [X,  2,  2,  2,  1,  1,  1],
    /* I0  */ [X,  2,  2,  4,  3,  1,  1],
    /* IR  */ [X,  2,  4,  4,  3,  3,  3],
    /* RI  */ [X,  1,  3,  3,  2,  2,  2],
    /* R0  */ [X,  1,  1,  3,  2,  0,  2],
    /* RNI */ [X,  1,  1,  3,  2,  2,  2],
];

/// Weight of a caret-type pairing, or `None` for pairings of `L0` with
/// anything other than `L0`.
pub fn weight(a: CaretType, b: CaretType) -> Option<u32> {
    let w = WEIGHTS[a.index()][b.index()];
    (w >= 0).then_some(w as u32)
}

/// Caret types indexed by infix number. A bare leaf yields an empty vector.
pub fn classify(tree: &Tree) -> Vec<CaretType> {
    #[derive(Clone, Copy)]
    enum Place {
        Left,
        Right,
        Interior { has_right_child: bool },
    }

    fn walk(t: &Tree, on_left: bool, on_right: bool, out: &mut Vec<Place>) {
        let Some((l, r)) = t.children() else { return };
        walk(l, on_left, false, out);
        out.push(if on_left {
            Place::Left
        } else if on_right {
            Place::Right
        } else {
            Place::Interior {
                has_right_child: !r.is_leaf(),
            }
        });
        walk(r, false, on_right, out);
    }

    let mut places = Vec::with_capacity(tree.caret_count());
    walk(tree, true, true, &mut places);

    let is_interior = |p: &Place| matches!(p, Place::Interior { .. });
    // interior_after[k]: some caret numbered > k is interior
    let mut interior_after = vec![false; places.len()];
    let mut seen = false;
    for k in (0..places.len()).rev() {
        interior_after[k] = seen;
        seen |= is_interior(&places[k]);
    }

    places
        .iter()
        .enumerate()
        .map(|(k, place)| match *place {
            Place::Left if k == 0 => CaretType::L0,
            Place::Left => CaretType::LL,
            Place::Interior { has_right_child: false } => CaretType::I0,
            Place::Interior { has_right_child: true } => CaretType::IR,
            Place::Right => {
                if places.get(k + 1).is_some_and(is_interior) {
                    CaretType::RI
                } else if !interior_after[k] {
                    CaretType::R0
                } else {
                    CaretType::RNI
                }
            }
        })
        .collect()
}

/// Paired caret types `(type in T-, type in T+)` by infix number.
pub fn type_pairs(w: &TreePair) -> Vec<(CaretType, CaretType)> {
    classify(w.neg()).into_iter().zip(classify(w.pos())).collect()
}

/// Word length of `w` with respect to `{x0, x1}`.
pub fn length(w: &TreePair) -> u32 {
    type_pairs(w)
        .into_iter()
        .map(|(a, b)| weight(a, b).expect("caret 0 is L0 in both trees, no other caret is"))
        .sum()
}

/// A caret-type pairing that differs between two diagrams with the same
/// caret count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairChange {
    pub caret: usize,
    pub before: (CaretType, CaretType),
    pub after: (CaretType, CaretType),
}

/// Positions whose caret-type pair differs between `before` and `after`.
/// Returns `None` if the caret counts differ.
pub fn pair_changes(before: &TreePair, after: &TreePair) -> Option<Vec<PairChange>> {
    if before.caret_count() != after.caret_count() {
        return None;
    }
    Some(
        type_pairs(before)
            .into_iter()
            .zip(type_pairs(after))
            .enumerate()
            .filter(|(_, (b, a))| b != a)
            .map(|(caret, (before, after))| PairChange { caret, before, after })
            .collect(),
    )
}

/// Length of an arbitrary pair of trees; fails unless the pair is reduced.
pub fn length_of_trees(neg: &Tree, pos: &Tree) -> Result<u32> {
    let w = TreePair::from_reduced(neg.clone(), pos.clone())?;
    Ok(length(&w))
}

#[cfg(test)]
mod tests {
    use super::CaretType::*;
    use super::*;
    use crate::error::Error;

    fn types(s: &str) -> Vec<CaretType> {
        classify(&Tree::decode(s).unwrap())
    }

    #[test]
    fn spine_shapes() {
        assert_eq!(types("0"), vec![]);
        assert_eq!(types("100"), vec![L0]);
        assert_eq!(types("11000"), vec![L0, LL]);
        assert_eq!(types("10100"), vec![L0, R0]);
        assert_eq!(types("1011000"), vec![L0, I0, R0]);
        assert_eq!(types("1010100"), vec![L0, R0, R0]);
    }

    #[test]
    fn right_caret_subtypes() {
        // (L, ((L,L), (L, ((L,L), L)))): right carets 2, 3, 5 with interiors 1, 4
        let t = Tree::caret(
            Tree::leaf(),
            Tree::caret(
                Tree::caret(Tree::leaf(), Tree::leaf()),
                Tree::caret(
                    Tree::leaf(),
                    Tree::caret(Tree::caret(Tree::leaf(), Tree::leaf()), Tree::leaf()),
                ),
            ),
        );
        assert_eq!(classify(&t), vec![L0, I0, RNI, RI, I0, R0]);
    }

    #[test]
    fn interior_with_right_child() {
        // (L, ((L,(L,L)), L))
        assert_eq!(types("101101000"), vec![L0, IR, I0, R0]);
    }

    #[test]
    fn root_without_left_child_is_l0() {
        assert_eq!(types("1011000")[0], L0);
        assert_eq!(types("1100100"), vec![L0, LL, R0]);
    }

    #[test]
    fn published_weights() {
        assert_eq!(weight(R0, R0), Some(0));
        assert_eq!(weight(IR, IR), Some(4));
        assert_eq!(weight(RI, I0), Some(3));
        assert_eq!(weight(L0, L0), Some(0));
        assert_eq!(weight(L0, LL), None);
    }

    #[test]
    fn weight_table_is_symmetric() {
        for a in CaretType::ALL {
            for b in CaretType::ALL {
                assert_eq!(weight(a, b), weight(b, a), "{a} {b}");
            }
        }
    }

    #[test]
    fn generator_lengths() {
        let x0 = TreePair::decode("10100:11000").unwrap();
        let x1 = TreePair::decode("1010100:1011000").unwrap();
        assert_eq!(length(&TreePair::identity()), 0);
        assert_eq!(length(&x0), 1);
        assert_eq!(length(&x1), 1);
    }

    #[test]
    fn unreduced_trees_are_rejected() {
        let t = Tree::decode("100").unwrap();
        assert_eq!(length_of_trees(&t, &t), Err(Error::Unreduced { leaf: 0 }));
    }
}
