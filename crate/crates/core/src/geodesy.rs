//! Cayley graph of `F` over `{x0, x1}`: breadth-first balls, distances,
//! greedy geodesics and synchronous distance between paths.

use std::collections::HashMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fordham::length;
use crate::group::{multiply, right_multiply_generator, GenWord, Generator};
use crate::seesaw::{seesaw_word, SeesawParams};
use crate::tree::TreePair;

pub const DEFAULT_MAX_RADIUS: u32 = 12;
pub const DEFAULT_CAPACITY: usize = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallLimits {
    pub max_radius: u32,
    /// Maximum number of stored elements.
    pub capacity: usize,
}

impl Default for BallLimits {
    fn default() -> Self {
        BallLimits {
            max_radius: DEFAULT_MAX_RADIUS,
            capacity: DEFAULT_CAPACITY,
        }
    }
}

/// Every element within distance `radius` of the identity, keyed by its
/// `NEG:POS` encoding.
#[derive(Debug, Clone)]
pub struct Ball {
    radius: u32,
    distances: HashMap<String, u32>,
    sphere_sizes: Vec<usize>,
}

impl Ball {
    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    /// `sphere_sizes()[r]` is the number of elements at distance exactly `r`.
    pub fn sphere_sizes(&self) -> &[usize] {
        &self.sphere_sizes
    }

    pub fn distance_of(&self, w: &TreePair) -> Option<u32> {
        self.distances.get(&w.encode()).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.distances.iter().map(|(k, &d)| (k.as_str(), d))
    }

    /// Elements decoded back into pairs, in unspecified order.
    pub fn elements(&self) -> impl ParallelIterator<Item = (TreePair, u32)> + '_ {
        self.distances.par_iter().map(|(k, &d)| {
            (TreePair::decode(k).expect("ball keys are valid encodings"), d)
        })
    }

    /// One `<NEG:POS> <distance>` line per element, sorted lexicographically.
    pub fn dump<W: Write>(&self, mut out: W) -> io::Result<()> {
        let mut lines: Vec<(&String, &u32)> = self.distances.iter().collect();
        lines.sort_unstable();
        for (key, d) in lines {
            writeln!(out, "{key} {d}")?;
        }
        Ok(())
    }
}

pub fn bfs_ball(radius: u32) -> Result<Ball> {
    bfs_ball_with(radius, BallLimits::default())
}

/// Breadth-first enumeration of the ball of the given radius. Frontier
/// expansion runs in parallel; insertion order is fixed, so the result does
/// not depend on scheduling.
pub fn bfs_ball_with(radius: u32, limits: BallLimits) -> Result<Ball> {
    if radius > limits.max_radius {
        return Err(Error::RadiusLimit {
            radius,
            max: limits.max_radius,
        });
    }
    let identity = TreePair::identity();
    let mut distances = HashMap::new();
    distances.insert(identity.encode(), 0);
    let mut sphere_sizes = vec![1];
    let mut frontier = vec![identity];

    for d in 1..=radius {
        let candidates: Vec<(String, TreePair)> = frontier
            .par_iter()
            .flat_map_iter(|w| {
                Generator::ALL.into_iter().map(move |g| {
                    let v = right_multiply_generator(w, g);
                    (v.encode(), v)
                })
            })
            .collect();
        let mut next = Vec::new();
        for (key, v) in candidates {
            if distances.contains_key(&key) {
                continue;
            }
            if distances.len() >= limits.capacity {
                return Err(Error::Capacity {
                    capacity: limits.capacity,
                    radius: d,
                });
            }
            distances.insert(key, d);
            next.push(v);
        }
        sphere_sizes.push(next.len());
        frontier = next;
    }

    Ok(Ball {
        radius,
        distances,
        sphere_sizes,
    })
}

/// Word-metric distance `|u^-1 v|`.
pub fn distance(u: &TreePair, v: &TreePair) -> u32 {
    length(&multiply(&u.inverse(), v))
}

/// Priority order used to pick among several length-reducing generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TieBreak([Generator; 4]);

impl Default for TieBreak {
    fn default() -> Self {
        TieBreak(Generator::ALL)
    }
}

impl TieBreak {
    pub fn new(order: [Generator; 4]) -> Option<Self> {
        let distinct = Generator::ALL.iter().all(|g| order.contains(g));
        distinct.then_some(TieBreak(order))
    }

    /// Default order with `g` moved to the front.
    pub fn prefer(g: Generator) -> Self {
        let mut order = [g; 4];
        let rest = Generator::ALL.into_iter().filter(|&h| h != g);
        for (slot, h) in order[1..].iter_mut().zip(rest) {
            *slot = h;
        }
        TieBreak(order)
    }

    pub fn order(&self) -> &[Generator; 4] {
        &self.0
    }
}

/// Descends from `w` to the identity, each step taking the first generator
/// in `tie_break` order that shortens the current element, and returns the
/// geodesic word for `w` (the inverted, reversed descent).
pub fn greedy_geodesic(w: &TreePair, tie_break: TieBreak) -> GenWord {
    let mut cur = w.clone();
    let mut cur_len = length(&cur);
    let mut descent = GenWord::empty();
    while cur_len > 0 {
        let (g, next) = tie_break
            .0
            .iter()
            .find_map(|&g| {
                let next = right_multiply_generator(&cur, g);
                (length(&next) + 1 == cur_len).then_some((g, next))
            })
            .expect("every nontrivial element has a length-reducing generator");
        descent.push(g);
        cur = next;
        cur_len -= 1;
    }
    descent.inverse()
}

/// A path from the identity, viewed as the eventually constant map
/// `i -> g_1 ... g_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    word: GenWord,
    points: Vec<TreePair>,
}

impl Path {
    pub fn new(word: GenWord) -> Self {
        let mut points = Vec::with_capacity(word.len() + 1);
        let mut cur = TreePair::identity();
        points.push(cur.clone());
        for &g in word.letters() {
            cur = right_multiply_generator(&cur, g);
            points.push(cur.clone());
        }
        Path { word, points }
    }

    pub fn word(&self) -> &GenWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn end(&self) -> &TreePair {
        self.points.last().expect("path contains the identity")
    }

    /// The point reached after `i` steps, or the endpoint if `i` exceeds the length.
    pub fn at(&self, i: usize) -> &TreePair {
        &self.points[i.min(self.points.len() - 1)]
    }
}

/// `max_i d(p(i), q(i))` over all `i` up to the longer path's length.
pub fn synchronous_distance(p: &Path, q: &Path) -> u32 {
    let n = p.len().max(q.len());
    (0..=n)
        .into_par_iter()
        .map(|i| distance(p.at(i), q.at(i)))
        .max()
        .unwrap_or(0)
}

/// Two geodesics to adjacent endpoints around the seesaw element
/// `w = S(s, s)`: `gamma` reaches `w` through `w x0`, `eta` reaches
/// `w x0^-1` descending along `x0^-1`.
#[derive(Debug, Clone, Serialize)]
pub struct FellowTravellerDemo {
    pub s: u32,
    pub element: TreePair,
    pub length: u32,
    pub gamma: GenWord,
    pub eta: GenWord,
    pub gamma_is_geodesic: bool,
    pub eta_is_geodesic: bool,
    pub gamma_passes_w_x0: bool,
    pub endpoint_distance: u32,
    /// Step at which the paths sit at `w x0^s` and `w x0^-s`.
    pub divergence_depth: usize,
    /// `d(gamma(depth), eta(depth))`, a lower bound on the synchronous distance.
    pub gap: u32,
    /// Exact synchronous distance between `gamma` and `eta`.
    pub synchronous_distance: u32,
}

pub fn fellow_traveller_demo(s: u32) -> Result<FellowTravellerDemo> {
    let w = seesaw_word(SeesawParams::symmetric(s)?);
    let len = length(&w);
    let w_x0_inv = right_multiply_generator(&w, Generator::X0Inv);
    let w_x0 = right_multiply_generator(&w, Generator::X0);

    let gamma = Path::new(greedy_geodesic(&w, TieBreak::prefer(Generator::X0)));
    let eta = Path::new(greedy_geodesic(&w_x0_inv, TieBreak::prefer(Generator::X0Inv)));

    // gamma ends in x0^-s and eta in x0^(s-1), so both paths are s steps
    // short of their ends at the same index
    let depth = (len as usize).saturating_sub(s as usize);
    let gap = distance(gamma.at(depth), eta.at(depth));

    Ok(FellowTravellerDemo {
        s,
        length: len,
        gamma_is_geodesic: gamma.len() == len as usize && gamma.end() == &w,
        eta_is_geodesic: eta.len() == length(&w_x0_inv) as usize && eta.end() == &w_x0_inv,
        gamma_passes_w_x0: !gamma.is_empty() && gamma.at(gamma.len() - 1) == &w_x0,
        endpoint_distance: distance(gamma.end(), eta.end()),
        divergence_depth: depth,
        gap,
        synchronous_distance: synchronous_distance(&gamma, &eta),
        gamma: gamma.word,
        eta: eta.word,
        element: w,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{evaluate, generator_pair, Generator::*};

    #[test]
    fn small_balls() {
        let b = bfs_ball(1).unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(b.sphere_sizes(), &[1, 4]);
        assert_eq!(bfs_ball(0).unwrap().len(), 1);
    }

    #[test]
    fn limits_are_enforced() {
        let limits = BallLimits {
            max_radius: 12,
            capacity: 10,
        };
        assert_eq!(
            bfs_ball_with(2, limits).unwrap_err(),
            Error::Capacity {
                capacity: 10,
                radius: 2
            }
        );
        assert!(matches!(bfs_ball(13), Err(Error::RadiusLimit { .. })));
    }

    #[test]
    fn distances() {
        let w = evaluate(&"x0 x1^-1 x0".parse().unwrap());
        assert_eq!(distance(&w, &w), 0);
        assert_eq!(distance(&TreePair::identity(), &generator_pair(X1)), 1);
    }

    #[test]
    fn tie_break_orders() {
        assert_eq!(TieBreak::default().order(), &[X0, X0Inv, X1, X1Inv]);
        assert_eq!(TieBreak::prefer(X1).order(), &[X1, X0, X0Inv, X1Inv]);
        assert!(TieBreak::new([X0, X0, X1, X1Inv]).is_none());
    }

    #[test]
    fn geodesic_of_identity_is_empty() {
        assert!(greedy_geodesic(&TreePair::identity(), TieBreak::default()).is_empty());
    }

    #[test]
    fn geodesic_of_cube() {
        let w = evaluate(&GenWord::power(X0, 3));
        let word = greedy_geodesic(&w, TieBreak::default());
        assert_eq!(word.len(), 3);
        assert_eq!(evaluate(&word), w);
    }

    #[test]
    fn paths_are_eventually_constant() {
        let p = Path::new("x0 x1".parse().unwrap());
        assert_eq!(p.at(0), &TreePair::identity());
        assert_eq!(p.at(7), p.end());
        assert_eq!(synchronous_distance(&p, &p), 0);
        let q = Path::new("x0".parse().unwrap());
        assert_eq!(synchronous_distance(&q, &p), 1);
    }

    #[test]
    fn dump_is_sorted() {
        let mut out = Vec::new();
        bfs_ball(1).unwrap().dump(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines.windows(2).all(|w| w[0] < w[1]));
        assert!(lines.contains(&"0:0 0"));
        assert!(lines.contains(&"10100:11000 1"));
    }
}
