//! Group operations on reduced tree pair diagrams.
//!
//! Pairs are oriented so that right multiplication by a generator acts on
//! the negative tree: when the generator's shape condition holds on `T-`,
//! `w * g` is `w` with a subtree rearrangement applied to `T-` and `T+` left
//! untouched. Products are formed by refining `w.neg` against `v.pos`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tree::{Tree, TreePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X0,
    X0Inv,
    X1,
    X1Inv,
}

impl Generator {
    /// Default tie-break order.
    pub const ALL: [Generator; 4] = [
        Generator::X0,
        Generator::X0Inv,
        Generator::X1,
        Generator::X1Inv,
    ];

    pub fn inverse(self) -> Self {
        match self {
            Generator::X0 => Generator::X0Inv,
            Generator::X0Inv => Generator::X0,
            Generator::X1 => Generator::X1Inv,
            Generator::X1Inv => Generator::X1,
        }
    }

    /// Index of the underlying generator: 0 for `x0^±1`, 1 for `x1^±1`.
    pub fn index(self) -> u32 {
        match self {
            Generator::X0 | Generator::X0Inv => 0,
            Generator::X1 | Generator::X1Inv => 1,
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Generator::X0Inv | Generator::X1Inv)
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::X0 => "x0",
            Generator::X0Inv => "x0^-1",
            Generator::X1 => "x1",
            Generator::X1Inv => "x1^-1",
        }
    }

    fn from_index(index: u32, inverse: bool) -> Option<Self> {
        match (index, inverse) {
            (0, false) => Some(Generator::X0),
            (0, true) => Some(Generator::X0Inv),
            (1, false) => Some(Generator::X1),
            (1, true) => Some(Generator::X1Inv),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "x0" | "x0^1" | "X0" => Ok(Generator::X0),
            "x0^-1" | "X0inv" | "x0inv" => Ok(Generator::X0Inv),
            "x1" | "x1^1" | "X1" => Ok(Generator::X1),
            "x1^-1" | "X1inv" | "x1inv" => Ok(Generator::X1Inv),
            other => Err(Error::WordSyntax {
                token: other.to_string(),
                expected: "one of x0, x0^-1, x1, x1^-1",
            }),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parses one `x<n>` token with an optional `^<signed int>` exponent.
pub(crate) fn parse_power(token: &str, expected: &'static str) -> Result<(u32, i64)> {
    let err = || Error::WordSyntax {
        token: token.to_string(),
        expected,
    };
    let rest = token.strip_prefix('x').ok_or_else(err)?;
    let (index, exponent) = match rest.split_once('^') {
        Some((i, e)) => (i, e.parse::<i64>().map_err(|_| err())?),
        None => (rest, 1),
    };
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    Ok((index.parse::<u32>().map_err(|_| err())?, exponent))
}

/// A word over `{x0, x0^-1, x1, x1^-1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GenWord(pub Vec<Generator>);

impl GenWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        GenWord(letters)
    }

    pub fn empty() -> Self {
        GenWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    /// `g^n` for a signed exponent.
    pub fn power(g: Generator, n: i64) -> Self {
        let letter = if n < 0 { g.inverse() } else { g };
        GenWord(vec![letter; n.unsigned_abs() as usize])
    }

    pub fn concat(&self, other: &GenWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GenWord(v)
    }

    /// The word for the inverse element: reversed, each letter inverted.
    pub fn inverse(&self) -> Self {
        GenWord(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// Cancels adjacent `g g^-1` pairs until none remain.
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<Generator> = Vec::with_capacity(self.0.len());
        for &g in &self.0 {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        GenWord(out)
    }

    pub fn evaluate(&self) -> TreePair {
        evaluate(self)
    }
}

impl fmt::Display for GenWord {
    /// Run-length form, e.g. `x0^2 x1 x0^-3`. The empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let run = self.0[i..].iter().take_while(|&&h| h == g).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let exp = if g.is_inverse() { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "x{}", g.index())?;
            } else {
                write!(f, "x{}^{}", g.index(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for GenWord {
    type Err = Error;

    /// Whitespace-separated `x0` / `x1` tokens with optional `^<signed int>`
    /// exponents. `e` or an empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        const EXPECTED: &str = "x0 or x1 with an optional ^<signed int> exponent";
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            if token == "e" {
                continue;
            }
            let (index, exp) = parse_power(token, EXPECTED)?;
            let g = Generator::from_index(index, false).ok_or_else(|| Error::WordSyntax {
                token: token.to_string(),
                expected: EXPECTED,
            })?;
            letters.extend(GenWord::power(g, exp).0);
        }
        Ok(GenWord(letters))
    }
}

impl Serialize for GenWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reduced diagram of a single generator.
pub fn generator_pair(g: Generator) -> TreePair {
    let l = Tree::leaf;
    let c = Tree::caret;
    // x0 = ((L,(L,L)), ((L,L),L)) read as (T-, T+); x1 lowers the same
    // pattern one level down the right spine.
    let x0 = (c(l(), c(l(), l())), c(c(l(), l()), l()));
    let x1 = (
        c(l(), c(l(), c(l(), l()))),
        c(l(), c(c(l(), l()), l())),
    );
    let (neg, pos) = match g {
        Generator::X0 => (x0.0, x0.1),
        Generator::X0Inv => (x0.1, x0.0),
        Generator::X1 => (x1.0, x1.1),
        Generator::X1Inv => (x1.1, x1.0),
    };
    TreePair::from_reduced(neg, pos).expect("generator diagrams are reduced")
}

/// Minimal common refinement of `a` and `b`. Returns, for every leaf of `a`
/// (resp. `b`), the subtree the refinement hangs below that leaf.
fn refine(a: &Tree, b: &Tree, ga: &mut Vec<Tree>, gb: &mut Vec<Tree>) {
    match (a.children(), b.children()) {
        (None, None) => {
            ga.push(Tree::leaf());
            gb.push(Tree::leaf());
        }
        (None, Some(_)) => {
            ga.push(b.clone());
            gb.extend(std::iter::repeat_n(Tree::leaf(), b.leaf_count()));
        }
        (Some(_), None) => {
            ga.extend(std::iter::repeat_n(Tree::leaf(), a.leaf_count()));
            gb.push(a.clone());
        }
        (Some((al, ar)), Some((bl, br))) => {
            refine(al, bl, ga, gb);
            refine(ar, br, ga, gb);
        }
    }
}

/// The product `w * v`.
pub fn multiply(w: &TreePair, v: &TreePair) -> TreePair {
    if w.is_identity() {
        return v.clone();
    }
    if v.is_identity() {
        return w.clone();
    }
    let mut gw = Vec::with_capacity(w.neg().leaf_count());
    let mut gv = Vec::with_capacity(v.pos().leaf_count());
    refine(w.neg(), v.pos(), &mut gw, &mut gv);
    let pos = w.pos().graft(&gw);
    let neg = v.neg().graft(&gv);
    TreePair::reduce(neg, pos).expect("refined trees have equal leaf counts")
}

pub fn inverse(w: &TreePair) -> TreePair {
    w.inverse()
}

/// Shape condition on `T-` under which right multiplication by `g` is a
/// pure rearrangement of `T-`.
pub fn condition_holds(w: &TreePair, g: Generator) -> bool {
    let neg = w.neg();
    let nonempty = |t: Option<&Tree>| t.is_some_and(|t| !t.is_leaf());
    match g {
        Generator::X0 => nonempty(neg.left()),
        Generator::X0Inv => nonempty(neg.right()),
        Generator::X1 => nonempty(neg.right().and_then(Tree::left)),
        Generator::X1Inv => nonempty(neg.right().and_then(Tree::right)),
    }
}

/// Subtree rearrangement of a negative tree induced by `g`, or `None` when
/// the tree lacks the required shape.
///
/// ```text
/// x0:  ((A,B),C)       -> (A,(B,C))
/// x1:  (A,((B,C),D))   -> (A,(B,(C,D)))
/// ```
/// and the inverses undo these.
pub fn rotate(t: &Tree, g: Generator) -> Option<Tree> {
    let c = |l: &Tree, r: &Tree| Tree::caret(l.clone(), r.clone());
    match g {
        Generator::X0 => {
            let (l, cc) = t.children()?;
            let (a, b) = l.children()?;
            Some(c(a, &c(b, cc)))
        }
        Generator::X0Inv => {
            let (a, r) = t.children()?;
            let (b, cc) = r.children()?;
            Some(c(&c(a, b), cc))
        }
        Generator::X1 => {
            let (a, r) = t.children()?;
            let (rl, d) = r.children()?;
            let (b, cc) = rl.children()?;
            Some(c(a, &c(b, &c(cc, d))))
        }
        Generator::X1Inv => {
            let (a, r) = t.children()?;
            let (b, rr) = r.children()?;
            let (cc, d) = rr.children()?;
            Some(c(a, &c(&c(b, cc), d)))
        }
    }
}

/// `w * g`, using the rearrangement of `T-` when the shape condition holds
/// and general multiplication otherwise.
pub fn right_multiply_generator(w: &TreePair, g: Generator) -> TreePair {
    match rotate(w.neg(), g) {
        Some(neg) => TreePair::reduce(neg, w.pos().clone())
            .expect("rotation preserves the leaf count"),
        None => multiply(w, &generator_pair(g)),
    }
}

/// Left-to-right product of the letters of `word`.
pub fn evaluate(word: &GenWord) -> TreePair {
    word.0
        .iter()
        .fold(TreePair::identity(), |acc, &g| right_multiply_generator(&acc, g))
}

/// Words of the two defining relators `[x0 x1^-1, x0^-1 x1 x0]` and
/// `[x0 x1^-1, x0^-2 x1 x0^2]`, with `[a, b] = a^-1 b^-1 a b`.
pub fn relators() -> [GenWord; 2] {
    use Generator::*;
    let a = GenWord::new(vec![X0, X1Inv]);
    let commutator = |b: GenWord| {
        a.inverse()
            .concat(&b.inverse())
            .concat(&a)
            .concat(&b)
            .freely_reduced()
    };
    [
        commutator(GenWord::new(vec![X0Inv, X1, X0])),
        commutator(GenWord::new(vec![X0Inv, X0Inv, X1, X0, X0])),
    ]
}
