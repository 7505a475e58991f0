//! Seesaw elements: both `g` and `g^-1` shorten `w`, and once a direction is
//! chosen only that generator keeps shortening for `k` steps.
//!
//! The family `S(l, m)` has normal form
//! `x0^(m-1) x1 x_{m+2l+2} x_{m+2l+1}^-1 x_{m+2l-1}^-1 ... x_{m+3}^-1 x_{m+1}^-1 x0^-m`
//! and is seesaw with respect to `x0`; `m` bounds the descent along `x0` and
//! `l` the descent along `x0^-1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fordham::length;
use crate::group::{right_multiply_generator, Generator};
use crate::normal_form::NormalForm;
use crate::tree::TreePair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeesawParams {
    l: u32,
    m: u32,
}

impl SeesawParams {
    pub fn new(l: u32, m: u32) -> Result<Self> {
        if l == 0 || m == 0 {
            return Err(Error::SeesawParams { l, m });
        }
        Ok(SeesawParams { l, m })
    }

    /// `S(k, k)`: swing `k` in both directions.
    pub fn symmetric(k: u32) -> Result<Self> {
        SeesawParams::new(k, k)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

pub fn seesaw_normal_form(params: SeesawParams) -> NormalForm {
    let SeesawParams { l, m } = params;
    let mut positive = Vec::new();
    if m > 1 {
        positive.push((0, m - 1));
    }
    positive.push((1, 1));
    positive.push((m + 2 * l + 2, 1));
    let negative = std::iter::once((0, m))
        .chain((0..=l).map(|i| (m + 1 + 2 * i, 1)))
        .collect();
    NormalForm::new(positive, negative).expect("indices are increasing")
}

pub fn seesaw_word(params: SeesawParams) -> TreePair {
    seesaw_normal_form(params).to_pair()
}

/// Generators `g` (in `Generator::ALL` order) with `|w g| = |w| - 1`.
pub fn reducing_generators(w: &TreePair) -> Vec<Generator> {
    let len = length(w);
    Generator::ALL
        .into_iter()
        .filter(|&g| length(&right_multiply_generator(w, g)) + 1 == len)
        .collect()
}

/// `w g^offset` with its length and reducing generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwingStep {
    pub offset: i64,
    pub length: u32,
    pub reducers: Vec<Generator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwingReport {
    pub element: TreePair,
    pub generator: Generator,
    pub target: u32,
    /// Largest `j <= target` for which all three clauses hold with swing `j`;
    /// 0 when the balance clause fails.
    pub swing: u32,
    /// Whether `g` and `g^-1` both shorten `w` and nothing else does.
    pub balanced: bool,
    /// Depth to which the descent clause holds along `g`.
    pub forward_depth: u32,
    /// Depth to which the descent clause holds along `g^-1`.
    pub backward_depth: u32,
    /// Steps for offsets `-target..=target`, ascending.
    pub steps: Vec<SwingStep>,
    pub violation: Option<String>,
}

/// Descent depth along `g` starting from `w`, at most `k`, plus the first
/// violation if the depth falls short of `k`.
fn descent_depth(w: &TreePair, g: Generator, k: u32) -> (u32, Option<String>) {
    let mut cur = w.clone();
    let mut cur_len = length(&cur);
    for step in 1..=k {
        if step >= 2 {
            // only g may shorten w g^(step-1)
            for h in Generator::ALL.into_iter().filter(|&h| h != g) {
                let len = length(&right_multiply_generator(&cur, h));
                if len < cur_len {
                    return (
                        step - 1,
                        Some(format!("{h} shortens w {g}^{} ({cur_len} -> {len})", step - 1)),
                    );
                }
            }
        }
        let next = right_multiply_generator(&cur, g);
        let next_len = length(&next);
        if next_len + 1 != cur_len {
            return (
                step - 1,
                Some(format!("|w {g}^{step}| = {next_len}, expected {}", cur_len as i64 - 1)),
            );
        }
        cur = next;
        cur_len = next_len;
    }
    (k, None)
}

/// Checks whether `w` is a seesaw element of swing `k` with respect to `g`.
pub fn verify_swing(w: &TreePair, g: Generator, k: u32) -> SwingReport {
    let len = length(w);
    let mut violation = None;

    let mut balanced = true;
    for h in Generator::ALL {
        let h_len = length(&right_multiply_generator(w, h));
        let ok = if h.index() == g.index() {
            h_len + 1 == len
        } else {
            h_len == len + 1
        };
        if !ok && balanced {
            balanced = false;
            violation = Some(format!("|w {h}| = {h_len} with |w| = {len}"));
        }
    }

    let (forward_depth, fwd_violation) = descent_depth(w, g, k);
    let (backward_depth, bwd_violation) = descent_depth(w, g.inverse(), k);
    violation = violation.or(fwd_violation).or(bwd_violation);

    let swing = if balanced {
        forward_depth.min(backward_depth)
    } else {
        0
    };

    let mut steps = Vec::with_capacity(2 * k as usize + 1);
    for (dir, sign) in [(g, 1i64), (g.inverse(), -1)] {
        let mut cur = w.clone();
        for s in 0..=i64::from(k) {
            if s > 0 {
                cur = right_multiply_generator(&cur, dir);
            } else if sign < 0 {
                continue;
            }
            steps.push(SwingStep {
                offset: sign * s,
                length: length(&cur),
                reducers: reducing_generators(&cur),
            });
        }
    }
    steps.sort_by_key(|s| s.offset);

    SwingReport {
        element: w.clone(),
        generator: g,
        target: k,
        swing,
        balanced,
        forward_depth,
        backward_depth,
        steps,
        violation,
    }
}
