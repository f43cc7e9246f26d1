//! Generator letters and canonical words in the free product `ℤ/2 * (ℤ/2 × ℤ/2)`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    /// The letter among `b, c, d` associated with an omega symbol: 2 ↦ b, 1 ↦ c, 0 ↦ d.
    pub fn from_symbol(symbol: u8) -> Letter {
        match symbol {
            2 => Letter::B,
            1 => Letter::C,
            0 => Letter::D,
            _ => panic!("omega symbol out of range: {symbol}"),
        }
    }

    /// Inverse of [`Letter::from_symbol`]; `None` for `a`.
    pub fn symbol(self) -> Option<u8> {
        match self {
            Letter::A => None,
            Letter::B => Some(2),
            Letter::C => Some(1),
            Letter::D => Some(0),
        }
    }

    pub fn is_a(self) -> bool {
        self == Letter::A
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }

    /// Product of two distinct letters of `{b, c, d}`: the third one.
    fn klein_product(self, other: Letter) -> Letter {
        debug_assert!(!self.is_a() && !other.is_a() && self != other);
        match (self, other) {
            (Letter::B, Letter::C) | (Letter::C, Letter::B) => Letter::D,
            (Letter::C, Letter::D) | (Letter::D, Letter::C) => Letter::B,
            _ => Letter::C,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A word over `{a, b, c, d}` in canonical form: `a` alternates with single
/// letters of `{b, c, d}`.
///
/// Products are read right to left: `gh` applies `h` first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: Letter) -> Self {
        Word(vec![x])
    }

    /// Reduces an arbitrary letter sequence with `xx → ε` and `xy → z` for
    /// `{x, y, z} = {b, c, d}`.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out = Word::identity();
        for x in letters {
            out.push(x);
        }
        out
    }

    /// Right-multiplies by a letter, keeping the word canonical.
    pub fn push(&mut self, x: Letter) {
        match self.0.last().copied() {
            Some(top) if top == x => {
                self.0.pop();
            }
            Some(top) if !top.is_a() && !x.is_a() => {
                let z = top.klein_product(x);
                *self.0.last_mut().unwrap() = z;
            }
            _ => self.0.push(x),
        }
    }

    /// Left-multiplies by a letter.
    pub fn push_front(&mut self, x: Letter) {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(x);
        letters.extend_from_slice(&self.0);
        *self = Word::reduce(letters);
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &x in &other.0 {
            out.push(x);
        }
        out
    }

    /// Inverse; every generator is an involution, so this is the reversal.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_a(&self) -> usize {
        self.0.iter().filter(|x| x.is_a()).count()
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut out = Word::identity();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        self.0.iter().try_for_each(|x| write!(f, "{x}"))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts a string over `{a, b, c, d}`; the empty string and `1` denote the identity.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "1" {
            return Ok(Word::identity());
        }
        s.chars()
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::InvalidWord(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::reduce)
    }
}

impl From<Letter> for Word {
    fn from(x: Letter) -> Self {
        Word::letter(x)
    }
}
