//! The Schreier graph `Γ_ω` of the orbit of `0^∞`, a two-ended line, and its
//! halves `Γ₊` (0^∞ and everything to its right) and `Γ̃₊ = Γ₊ ∖ {0^∞}`.
//!
//! Vertices are rays with finitely many 1s. The graph is never materialised
//! globally; balls are built on demand.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::element::apply_letter;
use crate::omega::OmegaSequence;
use crate::ray::Ray;
use crate::word::Letter;

/// An edge `source → label(source)`. Generators are involutions, so the
/// reverse edge carries the same label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct LabelledEdge {
    pub source: Ray,
    pub target: Ray,
    pub label: Letter,
}

impl LabelledEdge {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// `x ∈ Γ₊`: `x = 0^∞`, or the last 1 of `x` sits at an odd position.
pub fn in_gamma_plus(x: &Ray) -> bool {
    x.is_zero() || x.len() % 2 == 1
}

/// `x ∈ Γ̃₊`.
pub fn in_gamma_plus_tilde(x: &Ray) -> bool {
    !x.is_zero() && in_gamma_plus(x)
}

pub fn prepend(bit: bool, x: &Ray) -> Ray {
    x.prepend(bit)
}

/// The four labelled edges at `x`, loops included.
pub fn neighbors(omega: &OmegaSequence, x: &Ray) -> Vec<LabelledEdge> {
    Letter::ALL
        .into_iter()
        .map(|label| LabelledEdge { source: x.clone(), target: apply_letter(omega, label, x), label })
        .collect()
}

/// BFS distances from `center` up to `radius`.
pub fn ball_with_distances(omega: &OmegaSequence, center: &Ray, radius: usize) -> BTreeMap<Ray, usize> {
    let mut dist = BTreeMap::from([(center.clone(), 0)]);
    let mut queue = VecDeque::from([center.clone()]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if d == radius {
            continue;
        }
        for e in neighbors(omega, &x) {
            if !dist.contains_key(&e.target) {
                dist.insert(e.target.clone(), d + 1);
                queue.push_back(e.target);
            }
        }
    }
    dist
}

pub fn ball(omega: &OmegaSequence, center: &Ray, radius: usize) -> BTreeSet<Ray> {
    ball_with_distances(omega, center, radius).into_keys().collect()
}

/// Labelled edges of the subgraph induced on the ball of radius `radius`
/// around `0^∞`, each unordered edge listed once with `source <= target`.
pub fn ball_edges(omega: &OmegaSequence, radius: usize) -> (BTreeSet<Ray>, BTreeSet<LabelledEdge>) {
    let vertices = ball(omega, &Ray::zero(), radius);
    let edges = vertices
        .iter()
        .flat_map(|x| neighbors(omega, x))
        .filter(|e| vertices.contains(&e.target))
        .map(|e| {
            if e.source <= e.target {
                e
            } else {
                LabelledEdge { source: e.target, target: e.source, label: e.label }
            }
        })
        .collect();
    (vertices, edges)
}

/// The radius-`radius` ball with labels forgotten: multiplicity of every
/// unordered vertex pair (loops included).
pub fn unlabelled_ball(omega: &OmegaSequence, radius: usize) -> BTreeMap<(Ray, Ray), usize> {
    let (_, edges) = ball_edges(omega, radius);
    let mut out = BTreeMap::new();
    for e in edges {
        *out.entry((e.source, e.target)).or_insert(0) += 1;
    }
    out
}

/// Signed distance from `0^∞` along the line `Γ`: positive on `Γ₊`.
///
/// Walks the line from `0^∞` on the side containing `x`; every vertex other
/// than the walk's current one has exactly two distinct neighbours.
pub fn line_coordinate(omega: &OmegaSequence, x: &Ray) -> i64 {
    if x.is_zero() {
        return 0;
    }
    let right = in_gamma_plus(x);
    let mut prev = Ray::zero();
    let mut cur: Ray = if right { "1" } else { "01" }.parse().unwrap();
    // the level-n Schreier graph is a path on 2^n vertices
    let limit = 1u64 << (x.len() + 1).min(62);
    let mut steps = 1u64;
    while &cur != x {
        assert!(steps <= limit, "line walk from 0^inf did not reach {x}");
        let next = neighbors(omega, &cur)
            .into_iter()
            .map(|e| e.target)
            .find(|t| *t != prev && *t != cur)
            .expect("every vertex of the line has two neighbours");
        prev = std::mem::replace(&mut cur, next);
        steps += 1;
    }
    if right {
        steps as i64
    } else {
        -(steps as i64)
    }
}

/// One bullet of the prefix lemma, as a predicate on `x`.
#[derive(Debug, Clone, Copy)]
pub struct PrefixBullet {
    pub name: &'static str,
    pub implication_only: bool,
    lhs: fn(&Ray) -> bool,
    rhs: fn(&Ray) -> bool,
}

impl PrefixBullet {
    pub fn holds(&self, x: &Ray) -> bool {
        let (l, r) = ((self.lhs)(x), (self.rhs)(x));
        if self.implication_only {
            !l || r
        } else {
            l == r
        }
    }
}

fn p(x: &Ray) -> bool {
    in_gamma_plus(x)
}

fn t(x: &Ray) -> bool {
    in_gamma_plus_tilde(x)
}

/// How the sets `Γ₊`, `Γ̃₊` and their complements behave under prepending a digit.
pub const PREFIX_BULLETS: [PrefixBullet; 7] = [
    PrefixBullet { name: "x in G+ <=> 0x in ~G+^c", implication_only: false, lhs: p, rhs: |x| !t(&x.prepend(false)) },
    PrefixBullet { name: "x in G+^c <=> 0x in ~G+", implication_only: false, lhs: |x| !p(x), rhs: |x| t(&x.prepend(false)) },
    PrefixBullet { name: "x in G+^c => 1x in ~G+", implication_only: true, lhs: |x| !p(x), rhs: |x| t(&x.prepend(true)) },
    PrefixBullet { name: "x in ~G+ <=> 0x in G+^c", implication_only: false, lhs: t, rhs: |x| !p(&x.prepend(false)) },
    PrefixBullet { name: "x in ~G+ <=> 1x in ~G+^c", implication_only: false, lhs: t, rhs: |x| !t(&x.prepend(true)) },
    PrefixBullet { name: "x in ~G+^c <=> 0x in G+", implication_only: false, lhs: |x| !t(x), rhs: |x| p(&x.prepend(false)) },
    PrefixBullet { name: "x in ~G+^c <=> 1x in ~G+", implication_only: false, lhs: |x| !t(x), rhs: |x| t(&x.prepend(true)) },
];

/// Every `(bullet, x)` failing the prefix lemma over rays with at most `depth` digits.
pub fn prefix_lemma_violations(depth: usize) -> Vec<(&'static str, Ray)> {
    Ray::all_with_digits_up_to(depth)
        .into_iter()
        .flat_map(|x| {
            PREFIX_BULLETS
                .iter()
                .filter(|b| !b.holds(&x))
                .map(|b| (b.name, x.clone()))
                .collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(s: &str) -> OmegaSequence {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Ray {
        s.parse().unwrap()
    }

    fn target(omega: &str, x: &str, label: Letter) -> Ray {
        neighbors(&om(omega), &r(x)).into_iter().find(|e| e.label == label).unwrap().target
    }

    #[test]
    fn membership_examples() {
        assert!(in_gamma_plus(&r("0inf")));
        assert!(in_gamma_plus(&r("1")));
        assert!(!in_gamma_plus(&r("11")));
        assert!(!in_gamma_plus_tilde(&r("0inf")));
        assert!(in_gamma_plus_tilde(&r("1")));
        assert!(in_gamma_plus_tilde(&r("101")));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(target(":012", "", Letter::A), r("1"));
        assert_eq!(target(":012", "", Letter::B), r("01"));
        assert_eq!(target(":012", "", Letter::C), r("01"));
        assert_eq!(target(":012", "", Letter::D), r(""));
        assert_eq!(target(":01", "11", Letter::D), r("11"));
        assert_eq!(target(":012", "1", Letter::C), r("1"));
    }

    #[test]
    fn ball_examples() {
        assert_eq!(ball(&om(":012"), &Ray::zero(), 0), BTreeSet::from([Ray::zero()]));
        assert_eq!(ball(&om(":012"), &Ray::zero(), 1), BTreeSet::from([r(""), r("1"), r("01")]));
        for omega in [":012", ":01", "2:01", ":0"] {
            for radius in 0..=40 {
                assert_eq!(ball(&om(omega), &Ray::zero(), radius).len(), 2 * radius + 1);
            }
        }
    }

    #[test]
    fn line_coordinate_examples() {
        let w = om(":012");
        assert_eq!(line_coordinate(&w, &r("")), 0);
        assert_eq!(line_coordinate(&w, &r("1")), 1);
        assert_eq!(line_coordinate(&w, &r("11")), -2);
        assert_eq!(line_coordinate(&w, &r("01")), -1);
        assert_eq!(line_coordinate(&w, &r("101")), 2);
        assert_eq!(line_coordinate(&w, &r("1101")), -3);
    }

    #[test]
    fn line_coordinate_matches_bfs_distance() {
        for omega in [":012", ":01"] {
            let w = om(omega);
            for (x, d) in ball_with_distances(&w, &Ray::zero(), 30) {
                let c = line_coordinate(&w, &x);
                assert_eq!(c.unsigned_abs() as usize, d);
                assert_eq!(c >= 0, in_gamma_plus(&x));
            }
        }
    }

    #[test]
    fn every_vertex_has_four_labelled_edges() {
        for x in Ray::all_with_digits_up_to(8) {
            let edges = neighbors(&om(":012"), &x);
            assert_eq!(edges.len(), 4);
            let labels: BTreeSet<_> = edges.iter().map(|e| e.label).collect();
            assert_eq!(labels.len(), 4);
        }
    }

    #[test]
    fn prefix_lemma_holds_to_depth_12() {
        assert!(prefix_lemma_violations(12).is_empty());
    }

    #[test]
    fn prefix_third_bullet_is_strict_implication() {
        // 0^inf is in G+ yet 1·0^inf is in ~G+, so the converse fails
        let b = &PREFIX_BULLETS[2];
        assert!(b.implication_only);
        assert!(t(&Ray::zero().prepend(true)) && p(&Ray::zero()));
    }

    #[test]
    fn unlabelled_balls_agree() {
        let reference = unlabelled_ball(&om(":012"), 20);
        for omega in [":01", ":02", ":12", "2:01"] {
            assert_eq!(unlabelled_ball(&om(omega), 20), reference, "{omega}");
        }
    }
}
