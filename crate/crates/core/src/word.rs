//! Letters, alphabets and words.
//!
//! Letters are whitespace-free tokens rather than characters, since the
//! generated instances use composite symbols such as `v_1^2` or `#_3^1`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Index of a letter inside its alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub type Word = Vec<Letter>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlphabetError {
    #[error("duplicate letter `{0}`")]
    Duplicate(String),
    #[error("invalid letter `{0}`: tokens must be non-empty and free of whitespace")]
    InvalidToken(String),
}

/// An ordered set of tokens; the position of a token is its [`Letter`] id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: BTreeMap<String, Letter>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an alphabet from distinct tokens, keeping their order.
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self, AlphabetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Self::new();
        for tok in tokens {
            let tok = tok.into();
            if alphabet.get(&tok).is_some() {
                return Err(AlphabetError::Duplicate(tok));
            }
            alphabet.insert(tok)?;
        }
        Ok(alphabet)
    }

    /// Returns the letter for `token`, adding it if it is new.
    pub fn insert(&mut self, token: impl Into<String>) -> Result<Letter, AlphabetError> {
        let token = token.into();
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(AlphabetError::InvalidToken(token));
        }
        if let Some(&letter) = self.index.get(&token) {
            return Ok(letter);
        }
        let letter = Letter(self.names.len() as u32);
        self.index.insert(token.clone(), letter);
        self.names.push(token);
        Ok(letter)
    }

    pub fn get(&self, token: &str) -> Option<Letter> {
        self.index.get(token).copied()
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.index()]
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.names.len()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len() as u32).map(Letter)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks up every token, failing on the first unknown one.
    pub fn word<'a, I>(&self, tokens: I) -> Result<Word, &'a str>
    where
        I: IntoIterator<Item = &'a str>,
    {
        tokens.into_iter().map(|tok| self.get(tok).ok_or(tok)).collect()
    }

    /// Renders a word as space-separated tokens.
    pub fn display<'a>(&'a self, word: &'a [Letter]) -> DisplayWord<'a> {
        DisplayWord { alphabet: self, word }
    }
}

pub struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a [Letter],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &letter) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(letter))?;
        }
        Ok(())
    }
}
