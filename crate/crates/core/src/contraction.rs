//! Word problem for `G_ω` by contraction: restrictions of a level-1
//! stabilising element of length `l` have length at most `(l + 1) / 2`, so
//! recursing on the wreath decomposition terminates.

use std::collections::HashMap;
use std::fmt;

use crate::element::GroupElement;
use crate::error::Result;
use crate::omega::OmegaSequence;
use crate::word::{Letter, Word};

/// Interned handle of a [`CanonicalKey`]. Handles from the same solver are
/// equal iff the keys are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyId(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum KeyNode {
    Identity,
    Letter(Letter),
    Node { swap: bool, left: KeyId, right: KeyId },
}

/// Tree-shaped normal form of an element: the identity, a single letter of
/// `{b, c, d}`, or `(swap, key(g₀), key(g₁))`.
///
/// For repetition-free `ω` two elements of `G_ω` are equal iff their keys are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CanonicalKey {
    Identity,
    Letter(Letter),
    Node { swap: bool, left: Box<CanonicalKey>, right: Box<CanonicalKey> },
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalKey::Identity => write!(f, "1"),
            CanonicalKey::Letter(x) => write!(f, "{x}"),
            CanonicalKey::Node { swap, left, right } => {
                write!(f, "{}({left},{right})", if *swap { "a" } else { "" })
            }
        }
    }
}

const IDENTITY: KeyId = KeyId(0);

/// Memoising solver for the word problem. Tables are local to one solver,
/// which is typically one enumeration session.
#[derive(Debug)]
pub struct WordSolver {
    nodes: Vec<KeyNode>,
    index: HashMap<KeyNode, KeyId>,
    keys: HashMap<(OmegaSequence, Word), KeyId>,
    trivial: HashMap<(OmegaSequence, Word), bool>,
}

impl Default for WordSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl WordSolver {
    pub fn new() -> Self {
        let mut solver = Self {
            nodes: Vec::new(),
            index: HashMap::new(),
            keys: HashMap::new(),
            trivial: HashMap::new(),
        };
        solver.intern(KeyNode::Identity);
        solver
    }

    fn intern(&mut self, node: KeyNode) -> KeyId {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = KeyId(self.nodes.len() as u32);
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    fn a_key(&mut self) -> KeyId {
        self.intern(KeyNode::Node { swap: true, left: IDENTITY, right: IDENTITY })
    }

    pub fn identity_key(&self) -> KeyId {
        IDENTITY
    }

    /// Whether `g` acts trivially on the tree. Exact for every `ω`.
    pub fn is_trivial(&mut self, g: &GroupElement) -> bool {
        let word = g.word();
        match word.letters() {
            [] => return true,
            [Letter::A] => return false,
            [x] => return g.omega().is_constant(x.symbol().unwrap()),
            _ => {}
        }
        if !g.stabilizes_level1() {
            return false;
        }
        let memo_key = (g.omega().clone(), word.clone());
        if let Some(&t) = self.trivial.get(&memo_key) {
            return t;
        }
        let d = g.decompose();
        let t = self.is_trivial(&d.left) && self.is_trivial(&d.right);
        self.trivial.insert(memo_key, t);
        t
    }

    /// `g = h` in `G_ω`, decided as `g h⁻¹ = 1`.
    pub fn equal(&mut self, g: &GroupElement, h: &GroupElement) -> Result<bool> {
        let quotient = g.mul(&h.inverse())?;
        Ok(self.is_trivial(&quotient))
    }

    /// Interned canonical key. A complete invariant only when `g.omega()` is
    /// repetition-free; enumeration entry points enforce that.
    pub fn canonical_key(&mut self, g: &GroupElement) -> KeyId {
        match g.word().letters() {
            [] => return IDENTITY,
            [Letter::A] => return self.a_key(),
            [x] => return self.intern(KeyNode::Letter(*x)),
            _ => {}
        }
        let memo_key = (g.omega().clone(), g.word().clone());
        if let Some(&id) = self.keys.get(&memo_key) {
            return id;
        }
        let d = g.decompose();
        let left = self.canonical_key(&d.left);
        let right = self.canonical_key(&d.right);
        let id = self.normalize(g.omega(), d.swap, left, right);
        self.keys.insert(memo_key, id);
        id
    }

    /// Maps `(swap, left, right)` to the key of a shorter element when the
    /// triple is the decomposition of the identity or of a letter.
    fn normalize(&mut self, omega: &OmegaSequence, swap: bool, left: KeyId, right: KeyId) -> KeyId {
        if !swap {
            if left == IDENTITY && right == IDENTITY {
                return IDENTITY;
            }
            if let KeyNode::Letter(x) = self.nodes[right.0 as usize] {
                let passive = match omega.passive_letter(x) {
                    None => IDENTITY,
                    Some(_) => self.a_key(),
                };
                if left == passive {
                    return right;
                }
            }
        }
        self.intern(KeyNode::Node { swap, left, right })
    }

    pub fn expand(&self, id: KeyId) -> CanonicalKey {
        match self.nodes[id.0 as usize] {
            KeyNode::Identity => CanonicalKey::Identity,
            KeyNode::Letter(x) => CanonicalKey::Letter(x),
            KeyNode::Node { swap, left, right } => CanonicalKey::Node {
                swap,
                left: Box::new(self.expand(left)),
                right: Box::new(self.expand(right)),
            },
        }
    }

    /// Order of `g`, searched up to `limit`.
    pub fn order(&mut self, g: &GroupElement, limit: usize) -> Option<usize> {
        let mut power = GroupElement::identity(g.omega());
        for k in 1..=limit {
            power = power.mul(g).expect("same omega");
            if self.is_trivial(&power) {
                return Some(k);
            }
        }
        None
    }
}
