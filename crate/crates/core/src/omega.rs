//! Eventually periodic sequences over `{0, 1, 2}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::Letter;

/// An eventually periodic sequence `ω = preperiod · period^∞` over `{0, 1, 2}`.
///
/// Values are kept in a normal form (primitive period, shortest preperiod), so
/// that derived equality and hashing coincide with equality of sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaSequence {
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

impl OmegaSequence {
    pub fn new(preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        let shown = format!("{}:{}", digits(&preperiod), digits(&period));
        if period.is_empty() {
            return Err(Error::InvalidOmega { input: shown, reason: "period is empty" });
        }
        if preperiod.iter().chain(&period).any(|&s| s > 2) {
            return Err(Error::InvalidOmega { input: shown, reason: "symbols must be 0, 1 or 2" });
        }
        Ok(Self::normalized(preperiod, period))
    }

    /// The purely periodic sequence `period^∞`.
    pub fn periodic(period: &[u8]) -> Result<Self> {
        Self::new(Vec::new(), period.to_vec())
    }

    fn normalized(mut preperiod: Vec<u8>, mut period: Vec<u8>) -> Self {
        let n = period.len();
        if let Some(p) = (1..=n).find(|&p| n.is_multiple_of(p) && (p..n).all(|i| period[i] == period[i - p])) {
            period.truncate(p);
        }
        while preperiod.last() == period.last() && !preperiod.is_empty() {
            preperiod.pop();
            period.rotate_right(1);
        }
        Self { preperiod, period }
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    /// `ω_i`, 1-indexed.
    pub fn at(&self, i: usize) -> u8 {
        assert!(i >= 1, "omega is indexed from 1");
        let k = i - 1;
        if k < self.preperiod.len() {
            self.preperiod[k]
        } else {
            self.period[(k - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The shift `σω`, with `(σω)_i = ω_{i+1}`.
    pub fn shift(&self) -> Self {
        if self.preperiod.is_empty() {
            let mut period = self.period.clone();
            period.rotate_left(1);
            Self { preperiod: Vec::new(), period }
        } else {
            Self { preperiod: self.preperiod[1..].to_vec(), period: self.period.clone() }
        }
    }

    pub fn shift_by(&self, n: usize) -> Self {
        let mut out = self.clone();
        let n = if n > self.preperiod.len() {
            self.preperiod.len() + (n - self.preperiod.len()) % self.period.len()
        } else {
            n
        };
        for _ in 0..n {
            out = out.shift();
        }
        out
    }

    /// Whether `ω_i ≠ ω_{i+1}` for every `i`.
    pub fn is_repetition_free(&self) -> bool {
        let horizon = self.preperiod.len() + 2 * self.period.len();
        (1..=horizon).all(|i| self.at(i) != self.at(i + 1))
    }

    /// `u_{ω,n}`: the letter among `b, c, d` that fixes `1^n 0^∞`
    /// (`b` if `ω_n = 2`, `c` if `ω_n = 1`, `d` if `ω_n = 0`).
    pub fn u_generator(&self, n: usize) -> Letter {
        Letter::from_symbol(self.at(n))
    }

    /// First-level left restriction `I_ω^i` of `gen ∈ {b, c, d}`: `None` for the
    /// identity, `Some(Letter::A)` otherwise.
    pub fn passive_letter(&self, gen: Letter) -> Option<Letter> {
        let symbol = gen.symbol().expect("passive_letter takes b, c or d");
        (self.at(1) != symbol).then_some(Letter::A)
    }

    /// Whether `ω` is the constant sequence `s^∞`.
    pub fn is_constant(&self, symbol: u8) -> bool {
        self.preperiod.is_empty() && self.period == [symbol]
    }
}

fn digits(symbols: &[u8]) -> String {
    symbols.iter().map(|s| char::from(b'0' + s.min(&9))).collect()
}

impl fmt::Display for OmegaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", digits(&self.preperiod), digits(&self.period))
    }
}

impl FromStr for OmegaSequence {
    type Err = Error;

    /// Parses `pre:period`, e.g. `:012` for `(012)^∞` or `2:01` for `2(01)^∞`.
    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason| Error::InvalidOmega { input: s.to_string(), reason };
        let (pre, period) = s.split_once(':').ok_or_else(|| invalid("expected `pre:period`"))?;
        let parse = |part: &str| -> Result<Vec<u8>> {
            part.chars()
                .map(|c| match c {
                    '0'..='2' => Ok(c as u8 - b'0'),
                    _ => Err(invalid("symbols must be 0, 1 or 2")),
                })
                .collect()
        };
        let (pre, period) = (parse(pre)?, parse(period)?);
        if period.is_empty() {
            return Err(invalid("period is empty"));
        }
        Ok(Self::normalized(pre, period))
    }
}

impl serde::Serialize for OmegaSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
