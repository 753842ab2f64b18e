//! Words over the two-letter generator alphabet.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::Mat2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// The generator whose transformation maps positives into `(0, 1)`.
    A,
    /// The generator whose transformation maps positives into `(1, ∞)`.
    B,
}

/// How letters are rendered. `LR` uses the Calkin-Wilf names (`L` for A,
/// `R` for B).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Alphabet {
    #[default]
    AB,
    LR,
}

impl Alphabet {
    pub fn symbol(self, letter: Letter) -> char {
        match (self, letter) {
            (Alphabet::AB, Letter::A) => 'A',
            (Alphabet::AB, Letter::B) => 'B',
            (Alphabet::LR, Letter::A) => 'L',
            (Alphabet::LR, Letter::B) => 'R',
        }
    }
}

/// Text used for the empty word.
pub const EMPTY_WORD: &str = "e";

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
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

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Left-to-right product, `A` ↦ `a` and `B` ↦ `b`; the empty word gives
    /// the identity.
    pub fn product(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        self.0
            .iter()
            .fold(Mat2::identity(), |acc, letter| match letter {
                Letter::A => &acc * a,
                Letter::B => &acc * b,
            })
    }

    /// The word of length `len` whose letters are the bits of `index`, most
    /// significant first, with `A = 0`. Enumerating `index` in `0..2^len`
    /// visits words in lexicographic order.
    pub fn from_index(index: u64, len: usize) -> Word {
        Word(
            (0..len)
                .rev()
                .map(|bit| {
                    if index >> bit & 1 == 0 {
                        Letter::A
                    } else {
                        Letter::B
                    }
                })
                .collect(),
        )
    }

    /// Run-length groups, e.g. `AAAB` → `[(A, 3), (B, 1)]`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &letter in &self.0 {
            match runs.last_mut() {
                Some((last, count)) if *last == letter => *count += 1,
                _ => runs.push((letter, 1)),
            }
        }
        runs
    }

    pub fn render(&self, alphabet: Alphabet, powers: bool) -> String {
        if self.is_empty() {
            return EMPTY_WORD.to_owned();
        }
        if powers {
            self.runs()
                .iter()
                .map(|&(letter, n)| format!("{}^{}", alphabet.symbol(letter), n))
                .collect::<Vec<_>>()
                .join(" ")
        } else {
            self.0.iter().map(|&l| alphabet.symbol(l)).collect()
        }
    }

    /// Parses `ABA`, `A B A`, `A^3 B^2` or `e`. With `allow_lr`, `L` and `R`
    /// are accepted as aliases of `A` and `B`.
    pub fn parse_with(s: &str, allow_lr: bool) -> Result<Word> {
        let text = s.trim();
        if text == EMPTY_WORD {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                c if c.is_whitespace() => continue,
                'A' => Letter::A,
                'B' => Letter::B,
                'L' if allow_lr => Letter::A,
                'R' if allow_lr => Letter::B,
                other => return Err(Error::parse("word", other.to_string())),
            };
            let mut count = 1usize;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                    digits.push(d);
                    chars.next();
                }
                count = digits
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::parse("word", format!("{c}^{digits}")))?;
            }
            letters.extend(std::iter::repeat_n(letter, count));
        }
        if letters.is_empty() {
            return Err(Error::parse("word", text));
        }
        Ok(Word(letters))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Alphabet::AB, false))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse_with(s, false)
    }
}
