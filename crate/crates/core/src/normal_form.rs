//! Normal forms in the infinite presentation `x_i^-1 x_j x_i = x_{j+1}` (i < j).
//!
//! Every element has a unique expression
//! `x_{i1}^{r1} ... x_{ik}^{rk} x_{jl}^{-sl} ... x_{j1}^{-s1}` with strictly
//! increasing indices in each part, provided that whenever `x_i` occurs in
//! both parts so does `x_{i+1}` or `x_{i+1}^-1`.
//!
//! The two parts are read off the trees by leaf exponents: the exponent of
//! leaf `n` counts the carets off the right spine whose leftmost leaf is `n`.
//! `T+` carries the positive part and `T-` the negative part.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{evaluate, parse_power, GenWord, Generator};
use crate::tree::{Tree, TreePair};

/// One factor `x_index^exponent` of a normal form part.
pub type Power = (u32, u32);

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    positive: Vec<Power>,
    negative: Vec<Power>,
}

impl NormalForm {
    /// Both parts are given with ascending indices and positive exponents.
    /// The negative part `[(j1, s1), ...]` stands for `... x_{j1}^{-s1}`.
    pub fn new(positive: Vec<Power>, negative: Vec<Power>) -> Result<Self> {
        for (name, part) in [("positive", &positive), ("negative", &negative)] {
            if part.iter().any(|&(_, e)| e == 0) {
                return Err(Error::NormalForm(format!("zero exponent in {name} part")));
            }
            if part.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(Error::NormalForm(format!(
                    "indices of the {name} part are not strictly increasing"
                )));
            }
        }
        Ok(NormalForm { positive, negative })
    }

    pub fn identity() -> Self {
        NormalForm::default()
    }

    pub fn positive(&self) -> &[Power] {
        &self.positive
    }

    pub fn negative(&self) -> &[Power] {
        &self.negative
    }

    pub fn is_identity(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    /// Uniqueness condition: an index present in both parts needs its
    /// successor in at least one part.
    pub fn is_unique(&self) -> bool {
        let has = |part: &[Power], i: u32| part.iter().any(|&(j, _)| j == i);
        self.positive.iter().all(|&(i, _)| {
            !has(&self.negative, i) || has(&self.positive, i + 1) || has(&self.negative, i + 1)
        })
    }

    /// Applies `x_i u x_i^-1 = u'` cancellations (where `u` only involves
    /// indices above `i + 1` and `u'` has them lowered by one) until the
    /// uniqueness condition holds.
    pub fn normalized(&self) -> NormalForm {
        let (mut pos, mut neg) = (dense(&self.positive), dense(&self.negative));
        let at = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
        'outer: loop {
            let len = pos.len().max(neg.len());
            for i in 0..len {
                if at(&pos, i) > 0 && at(&neg, i) > 0 && at(&pos, i + 1) == 0 && at(&neg, i + 1) == 0 {
                    pos[i] -= 1;
                    neg[i] -= 1;
                    for v in [&mut pos, &mut neg] {
                        if v.len() > i + 1 {
                            v.remove(i + 1);
                        }
                    }
                    continue 'outer;
                }
            }
            break;
        }
        NormalForm {
            positive: sparse(&pos),
            negative: sparse(&neg),
        }
    }

    /// Evaluates the normal form as a product of generator diagrams, with
    /// each `x_n` expanded to `x0^-(n-1) x1 x0^(n-1)`.
    pub fn to_pair(&self) -> TreePair {
        evaluate(&self.to_genword())
    }

    /// Reads the leaf exponents of `w` and normalizes them.
    pub fn from_pair(w: &TreePair) -> NormalForm {
        NormalForm {
            positive: sparse(&leaf_exponents(w.pos())),
            negative: sparse(&leaf_exponents(w.neg())),
        }
        .normalized()
    }

    /// The (usually non-geodesic) word obtained by substituting
    /// `x_n = x0^-(n-1) x1 x0^(n-1)`, freely reduced.
    pub fn to_genword(&self) -> GenWord {
        let factors = self
            .positive
            .iter()
            .map(|&(i, r)| (i, i64::from(r)))
            .chain(self.negative.iter().rev().map(|&(j, s)| (j, -i64::from(s))));
        factors
            .fold(GenWord::empty(), |w, (index, exp)| w.concat(&expand(index, exp)))
            .freely_reduced()
    }
}

/// `x_index^exp` over `{x0, x1}`.
fn expand(index: u32, exp: i64) -> GenWord {
    if index == 0 {
        return GenWord::power(Generator::X0, exp);
    }
    let shift = i64::from(index - 1);
    GenWord::power(Generator::X0, -shift)
        .concat(&GenWord::power(Generator::X1, exp))
        .concat(&GenWord::power(Generator::X0, shift))
}

fn dense(part: &[Power]) -> Vec<u32> {
    let mut v = vec![0; part.last().map_or(0, |&(i, _)| i as usize + 1)];
    for &(i, e) in part {
        v[i as usize] = e;
    }
    v
}

fn sparse(v: &[u32]) -> Vec<Power> {
    v.iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| (i as u32, e))
        .collect()
}

/// Leaf exponents of `tree`, one per leaf.
pub fn leaf_exponents(tree: &Tree) -> Vec<u32> {
    fn go(t: &Tree, on_right_spine: bool, next_leaf: &mut usize, out: &mut [u32]) {
        let Some((l, r)) = t.children() else {
            *next_leaf += 1;
            return;
        };
        if !on_right_spine {
            out[*next_leaf] += 1;
        }
        go(l, false, next_leaf, out);
        go(r, on_right_spine, next_leaf, out);
    }
    let mut out = vec![0; tree.leaf_count()];
    go(tree, true, &mut 0, &mut out);
    out
}

/// Rebuilds a tree with `leaves` leaves from its leaf exponents. Returns
/// `None` if no such tree exists.
pub fn tree_from_exponents(exponents: &[u32], leaves: usize) -> Option<Tree> {
    if leaves == 0 || exponents.len() > leaves {
        return None;
    }
    let at = |i: usize| exponents.get(i).copied().unwrap_or(0);

    // Subtree hanging off the right spine whose leftmost leaf is `start`:
    // every caret in it counts towards the exponent of its leftmost leaf.
    fn block(at: &dyn Fn(usize) -> u32, start: usize, first: u32, limit: usize) -> Option<(Tree, usize)> {
        if first == 0 {
            return Some((Tree::leaf(), start + 1));
        }
        let (left, next) = block(at, start, first - 1, limit)?;
        if next >= limit {
            return None;
        }
        let (right, end) = block(at, next, at(next), limit)?;
        Some((Tree::caret(left, right), end))
    }

    // the last leaf closes the right spine and cannot carry an exponent
    if at(leaves - 1) != 0 {
        return None;
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    while start < leaves - 1 {
        let (t, end) = block(&at, start, at(start), leaves - 1)?;
        blocks.push(t);
        start = end;
    }
    Some(
        blocks
            .into_iter()
            .rev()
            .fold(Tree::leaf(), |spine, left| Tree::caret(left, spine)),
    )
}

/// Builds the reduced pair for a normal form directly from leaf exponents,
/// without multiplying generator diagrams.
pub fn pair_from_exponents(nf: &NormalForm) -> TreePair {
    let (pos, neg) = (dense(&nf.positive), dense(&nf.negative));
    let total: u32 = pos.iter().chain(&neg).sum();
    let leaves = pos.len().max(neg.len()) + total as usize + 1;
    let t_pos = tree_from_exponents(&pos, leaves).expect("enough leaves for the positive part");
    let t_neg = tree_from_exponents(&neg, leaves).expect("enough leaves for the negative part");
    TreePair::reduce(t_neg, t_pos).expect("same leaf count")
}

impl fmt::Display for NormalForm {
    /// `x0^2 x1 x5 x4^-1 x0^-2`; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        let factors = self
            .positive
            .iter()
            .map(|&(i, e)| (i, i64::from(e)))
            .chain(self.negative.iter().rev().map(|&(j, s)| (j, -i64::from(s))));
        let mut sep = "";
        for (i, e) in factors {
            if e == 1 {
                write!(f, "{sep}x{i}")?;
            } else {
                write!(f, "{sep}x{i}^{e}")?;
            }
            sep = " ";
        }
        Ok(())
    }
}

/// A word in the infinite generating set `{x_n}`: a product of `x<n>^<e>`
/// factors, in any order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct XWord(pub Vec<(u32, i64)>);

impl XWord {
    pub fn evaluate(&self) -> TreePair {
        let word = self
            .0
            .iter()
            .fold(GenWord::empty(), |w, &(index, exp)| w.concat(&expand(index, exp)));
        evaluate(&word.freely_reduced())
    }
}

impl FromStr for XWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for token in s.split_whitespace() {
            if token == "e" {
                continue;
            }
            let (i, e) = parse_power(token, "x<n> with an optional ^<signed int> exponent")?;
            if e != 0 {
                factors.push((i, e));
            }
        }
        Ok(XWord(factors))
    }
}

impl FromStr for NormalForm {
    type Err = Error;

    /// Parses any product of `x<n>^<e>` factors and returns the normal form
    /// of the element it represents.
    fn from_str(s: &str) -> Result<Self> {
        Ok(NormalForm::from_pair(&s.parse::<XWord>()?.evaluate()))
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fordham::length;
    use crate::group::{generator_pair, Generator::*};

    fn nf(pos: &[Power], neg: &[Power]) -> NormalForm {
        NormalForm::new(pos.to_vec(), neg.to_vec()).unwrap()
    }

    #[test]
    fn identity() {
        assert!(NormalForm::identity().to_pair().is_identity());
        assert_eq!(NormalForm::from_pair(&TreePair::identity()), NormalForm::identity());
        assert_eq!(NormalForm::identity().to_string(), "e");
    }

    #[test]
    fn generators() {
        assert_eq!(nf(&[(1, 1)], &[]).to_pair(), generator_pair(X1));
        assert_eq!(NormalForm::from_pair(&generator_pair(X0)), nf(&[(0, 1)], &[]));
        assert_eq!(NormalForm::from_pair(&generator_pair(X0Inv)), nf(&[], &[(0, 1)]));
        assert_eq!(NormalForm::from_pair(&generator_pair(X1Inv)).to_string(), "x1^-1");
    }

    #[test]
    fn x2_has_four_carets() {
        assert_eq!(nf(&[(2, 1)], &[]).to_pair().caret_count(), 4);
    }

    #[test]
    fn genword_expansion() {
        assert_eq!(nf(&[(1, 1)], &[]).to_genword().to_string(), "x1");
        assert_eq!(nf(&[(2, 1)], &[]).to_genword().letters(), &[X0Inv, X1, X0]);
    }

    #[test]
    fn validation() {
        assert!(NormalForm::new(vec![(2, 1), (1, 1)], vec![]).is_err());
        assert!(NormalForm::new(vec![(1, 0)], vec![]).is_err());
        assert!(NormalForm::new(vec![], vec![(3, 1), (3, 2)]).is_err());
    }

    #[test]
    fn uniqueness_condition() {
        assert!(!nf(&[(1, 1)], &[(1, 1)]).is_unique());
        assert!(nf(&[(1, 1), (2, 1)], &[(1, 1)]).is_unique());
        assert!(nf(&[(1, 1)], &[(1, 1), (2, 3)]).is_unique());
        assert_eq!(nf(&[(1, 1)], &[(1, 1)]).normalized(), NormalForm::identity());
        // x1 x3 x1^-1 = x2
        assert_eq!(nf(&[(1, 1), (3, 1)], &[(1, 1)]).normalized(), nf(&[(2, 1)], &[]));
    }

    #[test]
    fn seesaw_one_one_text() {
        let w: NormalForm = "x1 x5 x4^-1 x2^-1 x0^-1".parse().unwrap();
        assert_eq!(w.to_string(), "x1 x5 x4^-1 x2^-1 x0^-1");
        assert!(w.to_genword().len() as u32 >= length(&w.to_pair()));
    }

    #[test]
    fn text_rewrites_to_normal_form() {
        let w: NormalForm = "x0^-1 x1 x0".parse().unwrap();
        assert_eq!(w.to_string(), "x2");
        let w: NormalForm = "x3 x0^-1 x0".parse().unwrap();
        assert_eq!(w.to_string(), "x3");
        assert!("x0 y1".parse::<NormalForm>().is_err());
    }

    #[test]
    fn exponents_round_trip_on_small_trees() {
        for n in 0..=7 {
            for t in Tree::enumerate(n) {
                let e = leaf_exponents(&t);
                assert_eq!(tree_from_exponents(&e, t.leaf_count()), Some(t));
            }
        }
    }

    #[test]
    fn exponents_need_enough_leaves() {
        assert_eq!(tree_from_exponents(&[1], 1), None);
        assert_eq!(tree_from_exponents(&[0, 1], 2), None);
        assert_eq!(tree_from_exponents(&[1], 3).map(|t| t.encode()), Some("11000".into()));
    }
}
