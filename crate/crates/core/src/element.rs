//! Elements of `G_ω` as canonical words, their action on rays and their
//! wreath recursion.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::omega::OmegaSequence;
use crate::ray::Ray;
use crate::word::{Letter, Word};

/// An element of `G_ω` given by a canonical word.
///
/// `PartialEq` compares words, which is finer than equality in the group;
/// use [`crate::WordSolver::equal`] for the latter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    omega: OmegaSequence,
    word: Word,
}

/// Wreath recursion `g = π(g₀, g₁)`: apply `g₀`, `g₁` on the two subtrees,
/// then swap the subtrees iff `swap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub swap: bool,
    pub left: GroupElement,
    pub right: GroupElement,
}

impl GroupElement {
    pub fn new(omega: OmegaSequence, word: Word) -> Self {
        Self { omega, word }
    }

    pub fn identity(omega: &OmegaSequence) -> Self {
        Self::new(omega.clone(), Word::identity())
    }

    pub fn generator(omega: &OmegaSequence, x: Letter) -> Self {
        Self::new(omega.clone(), Word::letter(x))
    }

    pub fn parse_word(omega: &OmegaSequence, word: &str) -> Result<Self> {
        Ok(Self::new(omega.clone(), word.parse()?))
    }

    pub fn omega(&self) -> &OmegaSequence {
        &self.omega
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Length of the canonical word.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.omega.clone(), self.word.inverse())
    }

    /// `self · other`, applying `other` first.
    pub fn mul(&self, other: &GroupElement) -> Result<Self> {
        self.check_same_omega(other)?;
        Ok(Self::new(self.omega.clone(), self.word.mul(&other.word)))
    }

    pub fn mul_letter(&self, x: Letter) -> Self {
        let mut word = self.word.clone();
        word.push(x);
        Self::new(self.omega.clone(), word)
    }

    pub(crate) fn check_same_omega(&self, other: &GroupElement) -> Result<()> {
        if self.omega != other.omega {
            return Err(Error::OmegaMismatch {
                left: self.omega.to_string(),
                right: other.omega.to_string(),
            });
        }
        Ok(())
    }

    /// Image of a ray. Letters act right to left.
    pub fn apply(&self, ray: &Ray) -> Ray {
        self.word
            .letters()
            .iter()
            .rev()
            .fold(ray.clone(), |r, &x| apply_letter(&self.omega, x, &r))
    }

    /// Whether `g` fixes both vertices of the first level.
    pub fn stabilizes_level1(&self) -> bool {
        self.word.count_a().is_multiple_of(2)
    }

    pub fn decompose(&self) -> Decomposition {
        let shifted = self.omega.shift();
        let mut swap = false;
        let mut left = Word::identity();
        let mut right = Word::identity();
        for &x in self.word.letters() {
            if x.is_a() {
                swap = !swap;
                std::mem::swap(&mut left, &mut right);
            } else {
                if let Some(p) = self.omega.passive_letter(x) {
                    left.push(p);
                }
                right.push(x);
            }
        }
        Decomposition {
            swap,
            left: GroupElement::new(shifted.clone(), left),
            right: GroupElement::new(shifted, right),
        }
    }

    /// The restriction `g_v` at the tree vertex `v`, an element of `G_{σ^{|v|}ω}`.
    pub fn restriction(&self, vertex: &[bool]) -> GroupElement {
        vertex.iter().fold(self.clone(), |g, &bit| {
            let d = g.decompose();
            if bit {
                d.right
            } else {
                d.left
            }
        })
    }

    /// Image of the finite tree vertex `v` (a binary string).
    pub fn apply_vertex(&self, vertex: &[bool]) -> Vec<bool> {
        let mut out = Vec::with_capacity(vertex.len());
        let mut g = self.clone();
        for &bit in vertex {
            let d = g.decompose();
            out.push(bit ^ d.swap);
            g = if bit { d.right } else { d.left };
        }
        out
    }
}

/// Action of one generator on a ray.
///
/// `a` flips the first digit; `b`, `c`, `d` skip the leading 1s, and at the
/// first 0 (depth `i`) flip the next digit unless `ω_{i+1}` selects them.
pub(crate) fn apply_letter(omega: &OmegaSequence, x: Letter, ray: &Ray) -> Ray {
    match x.symbol() {
        None => ray.flip(0),
        Some(symbol) => {
            let first_zero = ray.digits().iter().position(|&b| !b).unwrap_or(ray.len());
            if omega.at(first_zero + 1) == symbol {
                ray.clone()
            } else {
                ray.flip(first_zero + 1)
            }
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.omega, self.word)
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Parses `omega|word`, e.g. `:012|adad`.
    fn from_str(s: &str) -> Result<Self> {
        let (omega, word) = s.split_once('|').ok_or_else(|| Error::InvalidWord(s.to_string()))?;
        Ok(Self::new(omega.parse()?, word.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn om(s: &str) -> OmegaSequence {
        s.parse().unwrap()
    }

    fn el(omega: &str, word: &str) -> GroupElement {
        GroupElement::parse_word(&om(omega), word).unwrap()
    }

    fn r(s: &str) -> Ray {
        s.parse().unwrap()
    }

    #[test]
    fn apply_examples() {
        for omega in [":012", ":01", "2:01"] {
            assert_eq!(el(omega, "a").apply(&Ray::zero()), r("1"));
        }
        assert_eq!(el(":012", "b").apply(&Ray::zero()), r("01"));
        assert_eq!(el(":012", "d").apply(&r("101")), r("1"));
    }

    #[test]
    fn d_sends_1010_to_10_when_omega2_is_not_0() {
        for omega in [":012", ":01", ":02", ":12", "2:01", ":21", ":20"] {
            let w = om(omega);
            let expected = if w.at(2) != 0 { r("1") } else { r("101") };
            assert_eq!(GroupElement::generator(&w, Letter::D).apply(&r("101")), expected, "{omega}");
        }
    }

    #[test]
    fn level1_examples() {
        assert!(el(":012", "b").stabilizes_level1());
        assert!(!el(":012", "a").stabilizes_level1());
        assert!(el(":012", "abab").stabilizes_level1());
    }

    #[test]
    fn decompose_examples() {
        let d = el(":012", "b").decompose();
        assert!(!d.swap);
        assert_eq!(d.left, el(":120", "a"));
        assert_eq!(d.right, el(":120", "b"));

        let d = el(":012", "a").decompose();
        assert!(d.swap);
        assert!(d.left.is_empty() && d.right.is_empty());

        let d = el(":012", "d").decompose();
        assert_eq!((d.swap, d.left, d.right), (false, el(":120", ""), el(":120", "d")));

        let d = el(":012", "aba").decompose();
        assert_eq!((d.swap, d.left, d.right), (false, el(":120", "b"), el(":120", "a")));
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(el(":012", "b").restriction(&[true]), el(":120", "b"));
        assert_eq!(el(":012", "b").restriction(&[false]), el(":120", "a"));
        assert_eq!(el(":012", "abc").restriction(&[]), el(":012", "abc"));
    }

    #[test]
    fn element_text_round_trip() {
        let g: GroupElement = ":012|adad".parse().unwrap();
        assert_eq!(g, el(":012", "adad"));
        assert_eq!(g.to_string(), ":012|adad");
        assert!(":012|adx".parse::<GroupElement>().is_err());
        assert!(el(":012", "a").mul(&el(":01", "a")).is_err());
    }

    fn arb_omega() -> impl Strategy<Value = OmegaSequence> {
        (prop::collection::vec(0u8..3, 0..3), prop::collection::vec(0u8..3, 1..4))
            .prop_map(|(pre, period)| OmegaSequence::new(pre, period).unwrap())
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..16).prop_map(Word::reduce)
    }

    fn arb_ray() -> impl Strategy<Value = Ray> {
        prop::collection::vec(any::<bool>(), 0..14).prop_map(Ray::from_digits)
    }

    proptest! {
        #[test]
        fn letters_are_involutions(w in arb_omega(), x in prop::sample::select(Letter::ALL.to_vec()), ray in arb_ray()) {
            let g = GroupElement::generator(&w, x);
            prop_assert_eq!(g.apply(&g.apply(&ray)), ray);
        }

        #[test]
        fn action_is_a_homomorphism(w in arb_omega(), g in arb_word(), h in arb_word(), ray in arb_ray()) {
            let (g, h) = (GroupElement::new(w.clone(), g), GroupElement::new(w, h));
            let gh = g.mul(&h).unwrap();
            prop_assert_eq!(gh.apply(&ray), g.apply(&h.apply(&ray)));
        }

        #[test]
        fn decomposition_reproduces_the_action(w in arb_omega(), g in arb_word(), ray in arb_ray()) {
            let g = GroupElement::new(w, g);
            let d = g.decompose();
            let (head, tail) = (ray.digit(0), ray.suffix(1));
            let image_tail = if head { d.right.apply(&tail) } else { d.left.apply(&tail) };
            prop_assert_eq!(g.apply(&ray), image_tail.prepend(head ^ d.swap));
        }

        #[test]
        fn parity_of_last_one_is_preserved(w in arb_omega(), x in prop::sample::select(Letter::ALL.to_vec()), ray in arb_ray()) {
            prop_assume!(ray.len() > 1);
            let image = GroupElement::generator(&w, x).apply(&ray);
            prop_assert_eq!(image.len() % 2, ray.len() % 2);
        }

        #[test]
        fn contraction_bound(w in arb_omega(), g in arb_word()) {
            // an even number of `a` letters fixes the first level
            let g = if g.count_a() % 2 == 1 { g.mul(&Word::letter(Letter::A)) } else { g };
            let g = GroupElement::new(w, g);
            prop_assume!(g.len() >= 2);
            let d = g.decompose();
            prop_assert!(2 * d.left.len() <= g.len() + 1);
            prop_assert!(2 * d.right.len() <= g.len() + 1);
        }
    }
}
