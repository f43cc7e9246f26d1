//! Ball enumeration against counting distinct actions on a deep tree level.

use std::collections::HashSet;

use grigorchuk::stabilizers::ElementBall;
use grigorchuk::{GroupElement, OmegaSequence, Ray, Word};

fn reduced_words(max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let last_is_a = w.letters().last().is_some_and(|l| l.is_a());
            let options: &[char] = match (w.is_empty(), last_is_a) {
                (true, _) => &['a', 'b', 'c', 'd'],
                (false, true) => &['b', 'c', 'd'],
                (false, false) => &['a'],
            };
            for c in options {
                let mut s = w.to_string();
                if s == "1" {
                    s.clear();
                }
                s.push(*c);
                next.push(s.parse().unwrap());
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn distinct_actions(omega: &OmegaSequence, max_len: usize, level: usize) -> usize {
    let rays: Vec<Ray> = (0u32..1 << level)
        .map(|n| Ray::from_digits((0..level).map(|i| n >> i & 1 == 1)))
        .collect();
    let mut seen = HashSet::new();
    for w in reduced_words(max_len) {
        let g = GroupElement::new(omega.clone(), w);
        let image: Vec<Ray> = rays.iter().map(|x| g.apply(x)).collect();
        seen.insert(image);
    }
    seen.len()
}

#[test]
fn ball_sizes_match_distinct_actions() {
    for omega in [":012", ":01", "2:01"] {
        let omega: OmegaSequence = omega.parse().unwrap();
        for max_len in [3, 5, 7] {
            let ball = ElementBall::enumerate(&omega, max_len).unwrap();
            assert_eq!(ball.len(), distinct_actions(&omega, max_len, 12), "{omega} {max_len}");
        }
    }
}

#[test]
fn sphere_sizes_sum_to_ball() {
    let omega: OmegaSequence = ":012".parse().unwrap();
    let ball = ElementBall::enumerate(&omega, 8).unwrap();
    assert_eq!(ball.sphere_sizes().iter().sum::<usize>(), ball.len());
    assert_eq!(&ball.sphere_sizes()[..3], &[1, 4, 6]);
}
