//! Points of the boundary of the binary tree with finitely many 1s.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The ray `digits · 0^∞`, stored without trailing zeros. The empty ray is `0^∞`.
///
/// Ordering is shortlex on the digit string.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ray(Vec<bool>);

impl Ray {
    pub fn zero() -> Self {
        Ray(Vec::new())
    }

    /// Builds a ray from arbitrary digits, dropping trailing zeros.
    pub fn from_digits<I: IntoIterator<Item = bool>>(digits: I) -> Self {
        let mut v: Vec<bool> = digits.into_iter().collect();
        while v.last() == Some(&false) {
            v.pop();
        }
        Ray(v)
    }

    /// Every ray whose digit string has exactly `len` digits before `0^∞` starts
    /// (all `x ∈ {0,1}^len` read as `x0^∞`, deduplicated).
    pub fn all_with_digits_up_to(max_len: usize) -> Vec<Ray> {
        let mut out = vec![Ray::zero()];
        for len in 1..=max_len {
            for bits in 0u64..(1 << (len - 1)) {
                let mut digits: Vec<bool> = (0..len - 1).map(|i| bits >> i & 1 == 1).collect();
                digits.push(true);
                out.push(Ray(digits));
            }
        }
        out
    }

    pub fn digits(&self) -> &[bool] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of stored digits, i.e. the position of the last 1 (0 for `0^∞`).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digit(&self, i: usize) -> bool {
        self.0.get(i).copied().unwrap_or(false)
    }

    /// `bit · self`.
    pub fn prepend(&self, bit: bool) -> Ray {
        if self.is_zero() && !bit {
            return Ray::zero();
        }
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(bit);
        v.extend_from_slice(&self.0);
        Ray(v)
    }

    /// Flips digit `i` (0-indexed) and re-canonicalises.
    pub fn flip(&self, i: usize) -> Ray {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, false);
        }
        v[i] = !v[i];
        Ray::from_digits(v)
    }

    /// Drops the first `n` digits.
    pub fn suffix(&self, n: usize) -> Ray {
        Ray(self.0.get(n..).unwrap_or_default().to_vec())
    }

    /// Short text form used by the graph exports: the digits, or `0^inf`.
    pub fn dot_label(&self) -> String {
        if self.is_zero() {
            "0^inf".to_string()
        } else {
            self.to_string()
        }
    }
}

impl Ord for Ray {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Ray {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0inf");
        }
        self.0.iter().try_for_each(|&b| write!(f, "{}", if b { '1' } else { '0' }))
    }
}

impl FromStr for Ray {
    type Err = Error;

    /// Accepts `0inf`, `0^inf`, `0^∞`, the empty string, or a binary string
    /// optionally followed by one of those suffixes (`10^inf`, `1010inf`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = ["0^inf", "0^∞", "0inf"]
            .iter()
            .find_map(|suffix| s.strip_suffix(suffix))
            .unwrap_or(s);
        body.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidRay(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Ray::from_digits)
    }
}

impl serde::Serialize for Ray {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Ray {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_strips_trailing_zeros() {
        assert_eq!(r("0100"), r("01"));
        assert_eq!(r("000"), Ray::zero());
        assert_eq!(r("0inf"), Ray::zero());
        assert_eq!(r("10^inf"), r("1"));
        assert_eq!(r("1010inf"), r("101"));
        assert_eq!(r(""), Ray::zero());
        assert!("012".parse::<Ray>().is_err());
    }

    #[test]
    fn prepend_examples() {
        assert_eq!(r("1").prepend(false), r("01"));
        assert_eq!(Ray::zero().prepend(true), r("1"));
        assert_eq!(Ray::zero().prepend(false), Ray::zero());
    }

    #[test]
    fn display() {
        assert_eq!(Ray::zero().to_string(), "0inf");
        assert_eq!(r("101").to_string(), "101");
        assert_eq!(Ray::zero().dot_label(), "0^inf");
    }

    #[test]
    fn enumeration_counts() {
        let rays = Ray::all_with_digits_up_to(12);
        assert_eq!(rays.len(), 1 << 12);
        let mut sorted = rays.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), rays.len());
        assert!(rays.iter().all(|x| x.digits().last() != Some(&false)));
    }
}
