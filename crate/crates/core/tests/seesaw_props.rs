use thompson_core::fordham::{pair_changes, CaretType::*, PairChange};
use thompson_core::geodesy::bfs_ball;
use thompson_core::group::condition_holds;
use thompson_core::seesaw::seesaw_normal_form;
use thompson_core::Generator::*;
use thompson_core::{
    classify, length, reducing_generators, right_multiply_generator, seesaw_word, verify_swing, Generator,
    SeesawParams, TreePair,
};

fn s(l: u32, m: u32) -> TreePair {
    seesaw_word(SeesawParams::new(l, m).unwrap())
}

fn power(w: &TreePair, g: Generator, n: u32) -> TreePair {
    (0..n).fold(w.clone(), |acc, _| right_multiply_generator(&acc, g))
}

#[test]
fn unit_descent_in_both_directions() {
    for l in 1..=7 {
        for m in 2..=7 {
            let w = s(l, m);
            let len = length(&w);
            for k in 0..=m {
                assert_eq!(length(&power(&w, X0, k)), len - k, "S({l},{m}) x0^{k}");
            }
            for k in 0..=l {
                assert_eq!(length(&power(&w, X0Inv, k)), len - k, "S({l},{m}) x0^-{k}");
            }
        }
    }
}

#[test]
fn only_the_chosen_direction_reduces_midway() {
    for l in 1..=7 {
        for m in 2..=7 {
            let w = s(l, m);
            assert_eq!(reducing_generators(&w), vec![X0, X0Inv], "S({l},{m})");
            for k in 1..l.min(m) {
                assert_eq!(reducing_generators(&power(&w, X0, k)), vec![X0]);
                assert_eq!(reducing_generators(&power(&w, X0Inv, k)), vec![X0Inv]);
            }
        }
    }
}

#[test]
fn x0_grows_when_m_is_one() {
    for l in 1..=5 {
        let w = s(l, 1);
        assert_eq!(length(&right_multiply_generator(&w, X0)), length(&w) + 1, "S({l},1)");
        assert_eq!(reducing_generators(&w), vec![X0Inv]);
        // caret 1 of T+ is interior, not on the left spine
        assert_eq!(classify(w.pos())[1], I0);
    }
}

#[test]
fn caret_type_transitions() {
    for l in 2..=6 {
        for m in 2..=6 {
            let w = s(l, m);
            let m = m as usize;
            assert_eq!(w.neg().root_number(), Some(m));
            assert_eq!(classify(w.neg())[m], LL);
            assert_eq!(classify(w.pos())[m], LL);
            let expect = [
                (X0, m, (LL, LL), (RI, LL)),
                (X0Inv, m + 2, (RI, RNI), (LL, RNI)),
                (X1, m + 1, (I0, RNI), (RNI, RNI)),
                (X1Inv, m + 2, (RI, RNI), (IR, RNI)),
            ];
            for (g, caret, before, after) in expect {
                assert!(condition_holds(&w, g));
                let v = right_multiply_generator(&w, g);
                assert_eq!(
                    pair_changes(&w, &v).unwrap(),
                    vec![PairChange { caret, before, after }],
                    "S({l},{m}) {g}"
                );
            }
        }
    }
}

#[test]
fn asymmetric_depths() {
    let r = verify_swing(&s(5, 2), X0, 5);
    assert!(r.balanced);
    assert_eq!((r.forward_depth, r.backward_depth), (2, 5));
    assert_eq!(r.swing, 2);
    let r = verify_swing(&s(2, 3), X0, 3);
    assert_eq!((r.forward_depth, r.backward_depth), (3, 2));
}

#[test]
fn swing_grows_with_k() {
    for k in 2..=12 {
        let r = verify_swing(&s(k, k), X0, k);
        assert_eq!(r.swing, k, "{:?}", r.violation);
        assert_eq!(r.steps.len(), 2 * k as usize + 1);
    }
}

#[test]
fn normal_forms_use_large_indices() {
    let nf = seesaw_normal_form(SeesawParams::symmetric(32).unwrap());
    assert_eq!(nf.positive().last(), Some(&(98, 1)));
    assert_eq!(thompson_core::NormalForm::from_pair(&nf.to_pair()), nf);
}

/// Small members checked against raw breadth-first distances.
#[test]
fn bfs_agrees_on_small_members() {
    let ball = bfs_ball(10).unwrap();
    let mut checked = 0;
    for (l, m) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let w = s(l, m);
        let mut around = vec![w.clone()];
        around.extend(Generator::ALL.map(|g| right_multiply_generator(&w, g)));
        for k in 1..=l.max(m) {
            around.push(power(&w, X0, k));
            around.push(power(&w, X0Inv, k));
        }
        for v in around {
            if let Some(d) = ball.distance_of(&v) {
                assert_eq!(d, length(&v), "{v}");
                checked += 1;
            }
        }
    }
    let w = s(1, 1);
    assert_eq!(ball.distance_of(&w), Some(9));
    assert_eq!(ball.distance_of(&right_multiply_generator(&w, X0)), Some(10));
    assert!(checked >= 5);
}
