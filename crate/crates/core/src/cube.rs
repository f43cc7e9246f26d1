//! The cube complex `𝒳`: vertices are colourings of `V(Γ)` at finite
//! Hamming distance from the indicator of `Γ₊`, edges join colourings that
//! differ at one vertex of `Γ`, and cubes are spanned by sets of such flips.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::gamma::{ball, in_gamma_plus};
use crate::ray::Ray;

/// Default cap on the dimension of cubes whose vertices are materialised.
pub const DEFAULT_DIMENSION_CAP: usize = 20;

/// A vertex `v` of `𝒳`, stored as the finite set `supp(v) Δ Γ₊`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeVertex {
    delta: BTreeSet<Ray>,
}

impl CubeVertex {
    /// `v₀ = χ_{Γ₊}`.
    pub fn base() -> Self {
        Self::default()
    }

    pub fn from_delta<I: IntoIterator<Item = Ray>>(delta: I) -> Self {
        Self { delta: delta.into_iter().collect() }
    }

    pub fn delta(&self) -> &BTreeSet<Ray> {
        &self.delta
    }

    pub fn is_base(&self) -> bool {
        self.delta.is_empty()
    }

    /// `v(x) ∈ {0, 1}`.
    pub fn color(&self, x: &Ray) -> bool {
        in_gamma_plus(x) ^ self.delta.contains(x)
    }

    /// `v + δ_x`.
    pub fn flip(&self, x: &Ray) -> Self {
        let mut delta = self.delta.clone();
        if !delta.remove(x) {
            delta.insert(x.clone());
        }
        Self { delta }
    }

    /// Combinatorial distance: the number of coordinates where the colourings differ.
    pub fn distance(&self, other: &CubeVertex) -> usize {
        self.delta.symmetric_difference(&other.delta).count()
    }

    /// `(gv)(x) = v(g⁻¹x)`.
    pub fn act(&self, g: &GroupElement) -> Self {
        let moved: BTreeSet<Ray> = self.delta.iter().map(|x| g.apply(x)).collect();
        let delta = commensuration_delta(g).symmetric_difference(&moved).cloned().collect();
        Self { delta }
    }

    /// Smallest even `n` such that every ray of the delta has at most `n` digits.
    pub fn even_prefix_depth(&self) -> usize {
        let n = self.delta.iter().map(Ray::len).max().unwrap_or(0);
        n + n % 2
    }
}

impl fmt::Display for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.delta.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.delta.iter().map(Ray::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for CubeVertex {
    type Err = Error;

    /// `∅` (or `v0`, or the empty string) for the base vertex, otherwise comma
    /// separated rays such as `0inf,01`. Repeated rays cancel.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "v0" {
            return Ok(Self::base());
        }
        s.split(',').try_fold(Self::base(), |v, part| {
            let x: Ray = part.trim().parse().map_err(|_| Error::InvalidVertex(s.to_string()))?;
            Ok(v.flip(&x))
        })
    }
}

impl serde::Serialize for CubeVertex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `Γ₊ Δ gΓ₊ = { x : x ∈ Γ₊ xor g⁻¹x ∈ Γ₊ }`.
///
/// Each generator moves a vertex at most one step along `Γ`, and `Γ₊` is a
/// half-line ending at `0^∞`, so only the ball of radius `l(g)` can change.
pub fn commensuration_delta(g: &GroupElement) -> BTreeSet<Ray> {
    commensuration_delta_within(g, g.len())
}

/// The same set, scanned over an explicit radius.
pub fn commensuration_delta_within(g: &GroupElement, radius: usize) -> BTreeSet<Ray> {
    let inverse = g.inverse();
    ball(g.omega(), &Ray::zero(), radius)
        .into_iter()
        .filter(|x| in_gamma_plus(x) != in_gamma_plus(&inverse.apply(x)))
        .collect()
}

/// The cube `𝒞(v, x₁, …, xₙ)`, stored with the base vertex normalised to the
/// member whose delta avoids every label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cube {
    base: CubeVertex,
    labels: BTreeSet<Ray>,
}

impl Cube {
    pub fn new(base: &CubeVertex, labels: Vec<Ray>) -> Result<Self> {
        let set: BTreeSet<Ray> = labels.iter().cloned().collect();
        if set.len() != labels.len() {
            return Err(Error::DuplicateLabels);
        }
        let delta = base.delta.difference(&set).cloned().collect();
        Ok(Self { base: CubeVertex { delta }, labels: set })
    }

    pub fn base(&self) -> &CubeVertex {
        &self.base
    }

    pub fn labels(&self) -> &BTreeSet<Ray> {
        &self.labels
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> Result<BTreeSet<CubeVertex>> {
        self.vertices_capped(DEFAULT_DIMENSION_CAP)
    }

    /// All `2ⁿ` vertices; fails when `n` exceeds `cap`.
    pub fn vertices_capped(&self, cap: usize) -> Result<BTreeSet<CubeVertex>> {
        let n = self.dimension();
        if n > cap {
            return Err(Error::DimensionCap { dimension: n, cap });
        }
        let labels: Vec<&Ray> = self.labels.iter().collect();
        Ok((0u64..1 << n)
            .map(|mask| {
                labels
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(self.base.clone(), |v, (_, x)| v.flip(x))
            })
            .collect())
    }

    pub fn act(&self, g: &GroupElement) -> Self {
        let labels = self.labels.iter().map(|x| g.apply(x)).collect();
        Self::new(&self.base.act(g), labels).expect("group elements act bijectively on labels")
    }
}

/// The hyperplane `𝔥ₓ`: all edges of `𝒳` labelled by `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub label: Ray,
}

impl Hyperplane {
    pub fn new(label: Ray) -> Self {
        Self { label }
    }

    pub fn half_space(&self, side: bool) -> HalfSpace {
        HalfSpace { label: self.label.clone(), side }
    }

    /// `g𝔥ₓ = 𝔥_{gx}`.
    pub fn act(&self, g: &GroupElement) -> Self {
        Self { label: g.apply(&self.label) }
    }

    /// Whether the edge `{v, w}` crosses this hyperplane.
    pub fn crosses_edge(&self, v: &CubeVertex, w: &CubeVertex) -> bool {
        v.distance(w) == 1 && v.color(&self.label) != w.color(&self.label)
    }
}

/// `𝔥ₓ^side = { v : v(x) = side }`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub label: Ray,
    pub side: bool,
}

impl HalfSpace {
    pub fn contains(&self, v: &CubeVertex) -> bool {
        v.color(&self.label) == self.side
    }

    pub fn act(&self, g: &GroupElement) -> Self {
        Self { label: g.apply(&self.label), side: self.side }
    }
}

/// Hyperplanes separating `v` from `w`; their number is `distance(v, w)`.
pub fn separating_hyperplanes(v: &CubeVertex, w: &CubeVertex) -> BTreeSet<Hyperplane> {
    v.delta.symmetric_difference(&w.delta).cloned().map(Hyperplane::new).collect()
}

/// The hyperplane dual to an edge, or `None` if `v` and `w` are not adjacent.
pub fn edge_hyperplane(v: &CubeVertex, w: &CubeVertex) -> Option<Hyperplane> {
    let mut diff = v.delta.symmetric_difference(&w.delta);
    match (diff.next(), diff.next()) {
        (Some(x), None) => Some(Hyperplane::new(x.clone())),
        _ => None,
    }
}
