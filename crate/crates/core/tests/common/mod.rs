#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thompson_core::normal_form::NormalForm;
use thompson_core::{evaluate, GenWord, Generator, TreePair};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut StdRng, max_len: usize) -> GenWord {
    let n = rng.gen_range(0..=max_len);
    GenWord::new((0..n).map(|_| Generator::ALL[rng.gen_range(0..4)]).collect())
}

pub fn random_element(rng: &mut StdRng, max_len: usize) -> TreePair {
    evaluate(&random_word(rng, max_len))
}

/// A normal form with indices at most `max_index` and exponents at most
/// `max_exp`, repaired to satisfy the uniqueness condition.
pub fn random_normal_form(rng: &mut StdRng, max_index: u32, max_exp: u32) -> NormalForm {
    let part = |rng: &mut StdRng| {
        let mut v = Vec::new();
        for i in 0..=max_index {
            if rng.gen_bool(0.3) {
                v.push((i, rng.gen_range(1..=max_exp)));
            }
        }
        v
    };
    let positive = part(rng);
    let negative = part(rng);
    NormalForm::new(positive, negative)
        .expect("increasing indices")
        .normalized()
}
