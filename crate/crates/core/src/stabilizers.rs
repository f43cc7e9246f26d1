//! Ball enumeration in `G_ω` and ball-restricted stabilizers.
//!
//! Every statement here is verified on the finite ball of elements of word
//! length at most `max_len`; results are reported as such.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::contraction::{KeyId, WordSolver};
use crate::cube::{commensuration_delta, CubeVertex};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::gamma::{ball, in_gamma_plus, in_gamma_plus_tilde};
use crate::omega::OmegaSequence;
use crate::ray::Ray;
use crate::word::{Letter, Word};

/// An element of a ball together with its word length (distance from the
/// identity in the Cayley graph on `{a, b, c, d}`).
#[derive(Debug, Clone)]
pub struct BallElement {
    pub element: GroupElement,
    pub length: usize,
    pub key: KeyId,
}

/// All elements of `G_ω` of length at most `max_len`, each listed once, in
/// BFS order. Owns the solver whose keys index it.
#[derive(Debug)]
pub struct ElementBall {
    omega: OmegaSequence,
    max_len: usize,
    elements: Vec<BallElement>,
    index: HashMap<KeyId, usize>,
    solver: WordSolver,
}

pub fn require_repetition_free(omega: &OmegaSequence) -> Result<()> {
    if omega.is_repetition_free() {
        Ok(())
    } else {
        Err(Error::NotRepetitionFree(omega.to_string()))
    }
}

pub fn enumerate_ball(omega: &OmegaSequence, max_len: usize) -> Result<ElementBall> {
    ElementBall::enumerate(omega, max_len)
}

impl ElementBall {
    pub fn enumerate(omega: &OmegaSequence, max_len: usize) -> Result<Self> {
        require_repetition_free(omega)?;
        let mut solver = WordSolver::new();
        let identity = GroupElement::identity(omega);
        let key = solver.canonical_key(&identity);
        let mut elements = vec![BallElement { element: identity, length: 0, key }];
        let mut index = HashMap::from([(key, 0)]);
        let mut layer = 0..1;
        for length in 1..=max_len {
            let start = elements.len();
            for i in layer.clone() {
                for x in Letter::ALL {
                    let g = elements[i].element.mul_letter(x);
                    if g.len() < length {
                        // shorter canonical word: already enumerated
                        continue;
                    }
                    let key = solver.canonical_key(&g);
                    if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(key) {
                        slot.insert(elements.len());
                        elements.push(BallElement { element: g, length, key });
                    }
                }
            }
            layer = start..elements.len();
        }
        Ok(Self { omega: omega.clone(), max_len, elements, index, solver })
    }

    pub fn omega(&self) -> &OmegaSequence {
        &self.omega
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn elements(&self) -> &[BallElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Sphere sizes: number of elements of each length.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_len + 1];
        for e in &self.elements {
            sizes[e.length] += 1;
        }
        sizes
    }

    pub fn solver(&mut self) -> &mut WordSolver {
        &mut self.solver
    }

    pub fn key(&mut self, g: &GroupElement) -> KeyId {
        self.solver.canonical_key(g)
    }

    /// Position of `g` in the ball, if its length is at most `max_len`.
    pub fn index_of(&mut self, g: &GroupElement) -> Option<usize> {
        let key = self.solver.canonical_key(g);
        self.index.get(&key).copied()
    }

    /// Word length of `g`, if it lies in the ball.
    pub fn length_of(&mut self, g: &GroupElement) -> Option<usize> {
        self.index_of(g).map(|i| self.elements[i].length)
    }

    /// Ball elements stabilising `target`, as a table.
    pub fn stabilizer(&mut self, target: &StabilizerTarget) -> SmallGroupTable {
        let members: Vec<GroupElement> = self
            .elements
            .iter()
            .filter(|e| target.is_stabilized_by(&e.element))
            .map(|e| e.element.clone())
            .collect();
        SmallGroupTable::build(members, &mut self.solver)
    }
}

/// What a stabilizer is taken of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerTarget {
    GammaPlus,
    GammaPlusTilde,
    Vertex(CubeVertex),
}

impl StabilizerTarget {
    pub fn is_stabilized_by(&self, g: &GroupElement) -> bool {
        match self {
            StabilizerTarget::GammaPlus => stabilizes_gamma_plus(g),
            StabilizerTarget::GammaPlusTilde => stabilizes_gamma_plus_tilde(g),
            StabilizerTarget::Vertex(v) => v.act(g) == *v,
        }
    }
}

impl fmt::Display for StabilizerTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilizerTarget::GammaPlus => write!(f, "G+"),
            StabilizerTarget::GammaPlusTilde => write!(f, "~G+"),
            StabilizerTarget::Vertex(v) => write!(f, "vertex {v}"),
        }
    }
}

/// `gΓ₊ = Γ₊`.
pub fn stabilizes_gamma_plus(g: &GroupElement) -> bool {
    commensuration_delta(g).is_empty()
}

/// `gΓ̃₊ = Γ̃₊`; the scan radius is one more than for `Γ₊` because of the
/// excluded point `0^∞`.
pub fn stabilizes_gamma_plus_tilde(g: &GroupElement) -> bool {
    let inverse = g.inverse();
    ball(g.omega(), &Ray::zero(), g.len() + 1)
        .iter()
        .all(|x| in_gamma_plus_tilde(x) == in_gamma_plus_tilde(&inverse.apply(x)))
}

/// Isomorphism types distinguished among groups of order at most 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum GroupType {
    Trivial,
    Z2,
    Z2xZ2,
    Z4,
    D8,
    Other(usize),
    /// The ball-restricted set is not closed under products.
    NotClosed(usize),
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::Trivial => write!(f, "trivial"),
            GroupType::Z2 => write!(f, "Z2"),
            GroupType::Z2xZ2 => write!(f, "Z2xZ2"),
            GroupType::Z4 => write!(f, "Z4"),
            GroupType::D8 => write!(f, "D8"),
            GroupType::Other(n) => write!(f, "other({n})"),
            GroupType::NotClosed(n) => write!(f, "not-closed({n})"),
        }
    }
}

/// A finite set of elements with its multiplication table, when the set is
/// closed under products.
#[derive(Debug, Clone)]
pub struct SmallGroupTable {
    elements: Vec<GroupElement>,
    table: Option<Vec<Vec<usize>>>,
    group_type: GroupType,
}

impl SmallGroupTable {
    pub fn build(elements: Vec<GroupElement>, solver: &mut WordSolver) -> Self {
        let keys: Vec<KeyId> = elements.iter().map(|g| solver.canonical_key(g)).collect();
        let position: HashMap<KeyId, usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n);
        for g in &elements {
            let row: Option<Vec<usize>> = elements
                .iter()
                .map(|h| position.get(&solver.canonical_key(&g.mul(h).expect("same omega"))).copied())
                .collect();
            match row {
                Some(row) => table.push(row),
                None => {
                    return Self { elements, table: None, group_type: GroupType::NotClosed(n) };
                }
            }
        }
        match position.get(&solver.identity_key()).copied() {
            Some(e) if is_group(&table, e) => {
                let group_type = recognize(&table, e);
                Self { elements, table: Some(table), group_type }
            }
            _ => Self { elements, table: None, group_type: GroupType::NotClosed(n) },
        }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn table(&self) -> Option<&[Vec<usize>]> {
        self.table.as_deref()
    }

    pub fn group_type(&self) -> GroupType {
        self.group_type
    }

    /// Orders of the elements, in table order.
    pub fn element_orders(&self) -> Option<Vec<usize>> {
        let table = self.table.as_ref()?;
        let e = identity_index(table)?;
        Some((0..table.len()).map(|i| element_order(table, e, i)).collect())
    }

    pub fn is_abelian(&self) -> Option<bool> {
        let t = self.table.as_ref()?;
        Some((0..t.len()).all(|i| (0..t.len()).all(|j| t[i][j] == t[j][i])))
    }

    pub fn words(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.word().to_string()).collect()
    }
}

fn identity_index(table: &[Vec<usize>]) -> Option<usize> {
    (0..table.len()).find(|&e| (0..table.len()).all(|i| table[e][i] == i && table[i][e] == i))
}

fn is_group(table: &[Vec<usize>], e: usize) -> bool {
    let n = table.len();
    let identity_ok = (0..n).all(|i| table[e][i] == i && table[i][e] == i);
    let inverses_ok = (0..n).all(|i| table[i].contains(&e));
    // associativity: exhaustive for small tables, spot-checked otherwise
    let mut triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if n <= 64 {
        Box::new((0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))))
    } else {
        Box::new((0..4096).map(move |s: usize| (s * 7919 % n, s * 104729 % n, s * 1299709 % n)))
    };
    identity_ok && inverses_ok && triples.all(|(i, j, k)| table[table[i][j]][k] == table[i][table[j][k]])
}

fn element_order(table: &[Vec<usize>], e: usize, i: usize) -> usize {
    let mut power = i;
    let mut k = 1;
    while power != e {
        power = table[power][i];
        k += 1;
    }
    k
}

fn recognize(table: &[Vec<usize>], e: usize) -> GroupType {
    let n = table.len();
    let orders: Vec<usize> = (0..n).map(|i| element_order(table, e, i)).collect();
    let count = |k| orders.iter().filter(|&&o| o == k).count();
    let abelian = (0..n).all(|i| (0..n).all(|j| table[i][j] == table[j][i]));
    match n {
        1 => GroupType::Trivial,
        2 => GroupType::Z2,
        4 if count(4) > 0 => GroupType::Z4,
        4 => GroupType::Z2xZ2,
        8 if !abelian && count(4) == 2 && count(2) == 5 => GroupType::D8,
        _ => GroupType::Other(n),
    }
}

/// Ball-restricted stabilizer, enumerating the ball first.
pub fn stabilizer_in_ball(
    omega: &OmegaSequence,
    target: &StabilizerTarget,
    max_len: usize,
) -> Result<SmallGroupTable> {
    Ok(ElementBall::enumerate(omega, max_len)?.stabilizer(target))
}

/// The vertex `χ_Λ` with `Λ = ⋃_{h ∈ H} hΓ₊`, fixed by every element of the
/// finite subgroup `H`.
pub fn fixed_vertex_for_subgroup(subgroup: &[GroupElement]) -> Result<CubeVertex> {
    let first = subgroup.first().ok_or_else(|| Error::NotASubgroup("empty set".into()))?;
    let mut solver = WordSolver::new();
    let contains = |solver: &mut WordSolver, g: &GroupElement| -> Result<bool> {
        for h in subgroup {
            if solver.equal(g, h)? {
                return Ok(true);
            }
        }
        Ok(false)
    };
    if !contains(&mut solver, &GroupElement::identity(first.omega()))? {
        return Err(Error::NotASubgroup("identity missing".into()));
    }
    for g in subgroup {
        if !contains(&mut solver, &g.inverse())? {
            return Err(Error::NotASubgroup(format!("inverse of {} missing", g.word())));
        }
        for h in subgroup {
            if !contains(&mut solver, &g.mul(h)?)? {
                return Err(Error::NotASubgroup(format!("product {}·{} missing", g.word(), h.word())));
            }
        }
    }
    // outside the union of the commensuration deltas every hΓ₊ agrees with Γ₊
    let candidates: std::collections::BTreeSet<Ray> = subgroup.iter().flat_map(commensuration_delta).collect();
    let inverses: Vec<GroupElement> = subgroup.iter().map(GroupElement::inverse).collect();
    let delta = candidates.into_iter().filter(|x| {
        let in_lambda = inverses.iter().any(|h_inv| in_gamma_plus(&h_inv.apply(x)));
        in_lambda != in_gamma_plus(x)
    });
    let v = CubeVertex::from_delta(delta);
    debug_assert!(subgroup.iter().all(|h| v.act(h) == v));
    Ok(v)
}

/// The subgroup generated by `generators`, closed under products until no new
/// element appears or `limit` elements are collected.
pub fn generate_subgroup(generators: &[GroupElement], limit: usize) -> Result<Vec<GroupElement>> {
    let first = generators.first().ok_or_else(|| Error::NotASubgroup("no generators".into()))?;
    require_repetition_free(first.omega())?;
    let mut solver = WordSolver::new();
    let identity = GroupElement::identity(first.omega());
    let mut seen = HashSet::from([solver.canonical_key(&identity)]);
    let mut out = vec![identity];
    let mut i = 0;
    while i < out.len() {
        for s in generators {
            let g = out[i].mul(s)?;
            let key = solver.canonical_key(&g);
            if seen.insert(key) {
                if out.len() == limit {
                    return Err(Error::NotASubgroup(format!("more than {limit} elements")));
                }
                out.push(g);
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Outcome of the stabilizer-size bound `|stab(v)| ≤ 8·4·4ⁿ` on a ball.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BoundReport {
    pub depth: usize,
    pub order: usize,
    pub bound: u128,
    pub holds: bool,
}

pub fn stabilizer_bound_check(ball: &mut ElementBall, v: &CubeVertex) -> BoundReport {
    let depth = v.even_prefix_depth();
    let order = ball.elements().iter().filter(|e| v.act(&e.element) == *v).count();
    let bound = 32u128.saturating_mul(4u128.saturating_pow(depth as u32));
    BoundReport { depth, order, bound, holds: (order as u128) <= bound }
}

/// One implication of the restriction lemma, checked on a ball.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ClauseReport {
    pub clause: &'static str,
    /// Number of ball elements satisfying the hypothesis.
    pub applicable: usize,
    /// Words of the elements violating the conclusion.
    pub violations: Vec<String>,
}

struct Membership {
    level1: bool,
    plus: bool,
    tilde: bool,
}

fn membership(g: &GroupElement) -> Membership {
    Membership {
        level1: g.stabilizes_level1(),
        plus: stabilizes_gamma_plus(g),
        tilde: stabilizes_gamma_plus_tilde(g),
    }
}

type Clause = (&'static str, fn(&Membership) -> bool, fn(&Membership, &Membership) -> bool);

const RESTRICTION_CLAUSES: [Clause; 9] = [
    ("1: level1 & stab(G+) => g0 in stab(~G+)", |g| g.level1 && g.plus, |l, _| l.tilde),
    ("1: level1 & stab(G+) => g1 in stab(~G+)", |g| g.level1 && g.plus, |_, r| r.tilde),
    ("2: level1 & stab(~G+) => g0 in stab(G+)", |g| g.level1 && g.tilde, |l, _| l.plus),
    ("2: level1 & stab(~G+) => g1 in stab(G+)", |g| g.level1 && g.tilde, |_, r| r.plus),
    ("2: level1 & stab(~G+) => g1 in stab(~G+)", |g| g.level1 && g.tilde, |_, r| r.tilde),
    ("3: swap & stab(~G+) => g0 in stab(G+)", |g| !g.level1 && g.tilde, |l, _| l.plus),
    ("3: swap & stab(~G+) => g0 in stab(~G+)", |g| !g.level1 && g.tilde, |l, _| l.tilde),
    ("3: swap & stab(~G+) => g1 in stab(G+)", |g| !g.level1 && g.tilde, |_, r| r.plus),
    ("3: swap & stab(~G+) => g1 in stab(~G+)", |g| !g.level1 && g.tilde, |_, r| r.tilde),
];

/// Checks, for every ball element, how the first-level restrictions of
/// elements of `stab(Γ₊)` and `stab(Γ̃₊)` sit in the corresponding
/// stabilizers over `σω`. One report per implication.
pub fn verify_restriction_lemma(ball: &ElementBall) -> Vec<ClauseReport> {
    let mut reports: Vec<ClauseReport> = RESTRICTION_CLAUSES
        .iter()
        .map(|(clause, _, _)| ClauseReport { clause, applicable: 0, violations: Vec::new() })
        .collect();
    for e in ball.elements() {
        let g = membership(&e.element);
        if !(g.plus || g.tilde) {
            continue;
        }
        let d = e.element.decompose();
        let (left, right) = (membership(&d.left), membership(&d.right));
        for (report, (_, hypothesis, conclusion)) in reports.iter_mut().zip(&RESTRICTION_CLAUSES) {
            if hypothesis(&g) {
                report.applicable += 1;
                if !conclusion(&left, &right) {
                    report.violations.push(e.element.word().to_string());
                }
            }
        }
    }
    reports
}

/// A ball element in `stab(1)` whose restriction is longer than `(l + 1) / 2`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ContractionViolation {
    pub word: String,
    pub length: usize,
    pub restriction: String,
    /// Word length of the restriction, `None` if beyond the searched radius.
    pub restriction_length: Option<usize>,
}

/// Checks `l(gᵢ) ≤ (l(g) + 1) / 2` with word lengths measured in `G_ω` and
/// `G_{σω}` respectively. Returns the number of checked elements and the violations.
pub fn verify_reduction_lemma(ball: &ElementBall) -> Result<(usize, Vec<ContractionViolation>)> {
    let mut shifted = ElementBall::enumerate(&ball.omega().shift(), ball.max_len().div_ceil(2))?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for e in ball.elements().iter().filter(|e| e.element.stabilizes_level1()) {
        checked += 1;
        let bound = e.length.div_ceil(2);
        let d = e.element.decompose();
        for part in [d.left, d.right] {
            let restriction_length = shifted.length_of(&part);
            if restriction_length.is_none_or(|l| l > bound) {
                violations.push(ContractionViolation {
                    word: e.element.word().to_string(),
                    length: e.length,
                    restriction: part.word().to_string(),
                    restriction_length,
                });
            }
        }
    }
    Ok((checked, violations))
}

/// The three witness vertices `v₀`, `v₀ + δ_{0^∞}` and
/// `v₀ + δ_{0^∞} + δ_{1010^∞}` used to detect non-trivial elements.
pub fn faithfulness_witnesses() -> [CubeVertex; 3] {
    let v0 = CubeVertex::base();
    let zero = Ray::zero();
    let x: Ray = "101".parse().expect("valid ray");
    [v0.clone(), v0.flip(&zero), v0.flip(&zero).flip(&x)]
}

/// Non-trivial ball elements fixing all three witness vertices.
pub fn faithfulness_exceptions(ball: &ElementBall) -> Vec<Word> {
    let witnesses = faithfulness_witnesses();
    ball.elements()
        .iter()
        .skip(1)
        .filter(|e| witnesses.iter().all(|v| v.act(&e.element) == *v))
        .map(|e| e.element.word().clone())
        .collect()
}

/// One row of an orbit growth table.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GrowthRow {
    pub length: usize,
    pub max_distance: usize,
    pub witness_word: String,
}

/// For each `L ≤ max_len`, the largest `d(v, gv)` over elements of length at most `L`.
pub fn orbit_growth(omega: &OmegaSequence, v: &CubeVertex, max_len: usize) -> Result<Vec<GrowthRow>> {
    let ball = ElementBall::enumerate(omega, max_len)?;
    Ok(orbit_growth_in(&ball, v))
}

pub fn orbit_growth_in(ball: &ElementBall, v: &CubeVertex) -> Vec<GrowthRow> {
    let mut best_by_length: BTreeMap<usize, (usize, &GroupElement)> = BTreeMap::new();
    for e in ball.elements() {
        let d = v.distance(&v.act(&e.element));
        let slot = best_by_length.entry(e.length).or_insert((d, &e.element));
        if d > slot.0 {
            *slot = (d, &e.element);
        }
    }
    let mut rows = Vec::with_capacity(ball.max_len() + 1);
    let mut running = (0, "1".to_string());
    for length in 0..=ball.max_len() {
        if let Some(&(d, g)) = best_by_length.get(&length) {
            if d > running.0 {
                running = (d, g.word().to_string());
            }
        }
        rows.push(GrowthRow { length, max_distance: running.0, witness_word: running.1.clone() });
    }
    rows
}
