//! Substitutions, match witnesses and their direct verification.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::instance::Instance;
use crate::word::{Letter, Word};

/// A partial map from pattern letters to text words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    images: BTreeMap<Letter, Word>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, letter: Letter, image: Word) -> Option<Word> {
        self.images.insert(letter, image)
    }

    pub fn get(&self, letter: Letter) -> Option<&[Letter]> {
        self.images.get(&letter).map(Vec::as_slice)
    }

    pub fn remove(&mut self, letter: Letter) -> Option<Word> {
        self.images.remove(&letter)
    }

    /// Images in letter order.
    pub fn iter(&self) -> impl Iterator<Item = (Letter, &[Letter])> {
        self.images.iter().map(|(l, w)| (*l, w.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Dense view indexed by letter id.
    pub fn to_dense(&self, alphabet_len: usize) -> Vec<Option<&[Letter]>> {
        let mut out = alloc::vec![None; alphabet_len];
        for (l, w) in self.iter() {
            if l.index() < alphabet_len {
                out[l.index()] = Some(w);
            }
        }
        out
    }

    /// First pair of distinct letters from `domain` sharing an image.
    pub fn injectivity_clash(&self, domain: impl Iterator<Item = Letter>) -> Option<(Letter, Letter)> {
        let mut seen: BTreeMap<&[Letter], Letter> = BTreeMap::new();
        for l in domain {
            if let Some(img) = self.get(l) {
                if let Some(&other) = seen.get(img) {
                    return Some((other, l));
                }
                seen.insert(img, l);
            }
        }
        None
    }
}

impl FromIterator<(Letter, Word)> for Substitution {
    fn from_iter<T: IntoIterator<Item = (Letter, Word)>>(iter: T) -> Self {
        Substitution {
            images: iter.into_iter().collect(),
        }
    }
}

/// A substitution plus the wildcarded pattern positions and their images.
///
/// Positions are 1-based. Every wildcarded position carries its own wildcard
/// symbol, so the number of wildcards is the number of positions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchWitness {
    pub substitution: Substitution,
    pub wildcards: BTreeMap<usize, Word>,
}

impl MatchWitness {
    pub fn new(substitution: Substitution) -> Self {
        MatchWitness {
            substitution,
            wildcards: BTreeMap::new(),
        }
    }

    pub fn wildcard_count(&self) -> usize {
        self.wildcards.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("no image for pattern letter {letter:?} at position {position}")]
    MissingImage { letter: Letter, position: usize },
    #[error("wildcard position {0} is outside the pattern")]
    BadPosition(usize),
}

/// Concatenates wildcard images (at wildcarded positions) and letter images
/// (elsewhere) in pattern order.
pub fn apply_witness(instance: &Instance, witness: &MatchWitness) -> Result<Word, WitnessError> {
    let m = instance.pattern().len();
    if let Some(&pos) = witness.wildcards.keys().find(|&&p| p == 0 || p > m) {
        return Err(WitnessError::BadPosition(pos));
    }
    let mut out = Vec::with_capacity(instance.text().len());
    for (i, &letter) in instance.pattern().iter().enumerate() {
        let position = i + 1;
        let image = match witness.wildcards.get(&position) {
            Some(w) => w.as_slice(),
            None => witness
                .substitution
                .get(letter)
                .ok_or(WitnessError::MissingImage { letter, position })?,
        };
        out.extend_from_slice(image);
    }
    Ok(out)
}

/// The first constraint a witness breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingImage {
        letter: Letter,
        position: usize,
    },
    BadPosition(usize),
    /// The produced word first differs from the text at this 0-based offset.
    ConcatenationMismatch {
        offset: usize,
    },
    BudgetExceeded {
        used: usize,
        budget: usize,
    },
    LetterImageTooLong {
        letter: Letter,
        len: usize,
    },
    WildcardImageTooLong {
        position: usize,
        len: usize,
    },
    NotInjective {
        first: Letter,
        second: Letter,
    },
    /// Strict mode only: a wildcard image equals another image.
    WildcardImageShared {
        position: usize,
    },
    EmptyLetterImage {
        letter: Letter,
    },
    EmptyWildcardImage {
        position: usize,
    },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::MissingImage { letter, position } => {
                write!(f, "missing image for letter {} at position {position}", letter.0)
            }
            Violation::BadPosition(p) => write!(f, "wildcard position {p} outside pattern"),
            Violation::ConcatenationMismatch { offset } => {
                write!(f, "concatenation mismatch at text offset {offset}")
            }
            Violation::BudgetExceeded { used, budget } => {
                write!(f, "budget exceeded: {used} wildcards used, {budget} allowed")
            }
            Violation::LetterImageTooLong { letter, len } => {
                write!(f, "image of letter {} has length {len} above the bound", letter.0)
            }
            Violation::WildcardImageTooLong { position, len } => {
                write!(f, "wildcard at position {position} has length {len} above the bound")
            }
            Violation::NotInjective { first, second } => {
                write!(
                    f,
                    "injectivity violated: letters {} and {} share an image",
                    first.0, second.0
                )
            }
            Violation::WildcardImageShared { position } => {
                write!(
                    f,
                    "injectivity violated: wildcard at position {position} repeats an image"
                )
            }
            Violation::EmptyLetterImage { letter } => {
                write!(f, "empty image for letter {}", letter.0)
            }
            Violation::EmptyWildcardImage { position } => {
                write!(f, "empty wildcard image at position {position}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Extend GPM injectivity to wildcard images.
    pub strict_injectivity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub violation: Option<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn verify_witness(instance: &Instance, witness: &MatchWitness) -> VerificationReport {
    verify_witness_with(instance, witness, VerifyOptions::default())
}

pub fn verify_witness_with(instance: &Instance, witness: &MatchWitness, options: VerifyOptions) -> VerificationReport {
    VerificationReport {
        violation: first_violation(instance, witness, options),
    }
}

fn first_violation(instance: &Instance, witness: &MatchWitness, options: VerifyOptions) -> Option<Violation> {
    let produced = match apply_witness(instance, witness) {
        Ok(w) => w,
        Err(WitnessError::MissingImage { letter, position }) => {
            return Some(Violation::MissingImage { letter, position })
        }
        Err(WitnessError::BadPosition(p)) => return Some(Violation::BadPosition(p)),
    };
    let text = instance.text();
    if produced != text {
        let offset = produced
            .iter()
            .zip(text)
            .position(|(a, b)| a != b)
            .unwrap_or(produced.len().min(text.len()));
        return Some(Violation::ConcatenationMismatch { offset });
    }

    let bounds = instance.bounds();
    if witness.wildcard_count() > bounds.wildcard_budget {
        return Some(Violation::BudgetExceeded {
            used: witness.wildcard_count(),
            budget: bounds.wildcard_budget,
        });
    }

    let used = instance.pattern_letters();
    for &l in &used {
        if let Some(img) = witness.substitution.get(l) {
            if !bounds.max_letter_len.admits(img.len()) {
                return Some(Violation::LetterImageTooLong {
                    letter: l,
                    len: img.len(),
                });
            }
        }
    }
    for (&position, img) in &witness.wildcards {
        if !bounds.max_wildcard_len.admits(img.len()) {
            return Some(Violation::WildcardImageTooLong {
                position,
                len: img.len(),
            });
        }
    }

    if instance.variant().is_injective() {
        let mut domain = used.clone();
        domain.sort();
        if let Some((first, second)) = witness.substitution.injectivity_clash(domain.into_iter()) {
            return Some(Violation::NotInjective { first, second });
        }
        if options.strict_injectivity {
            let mut seen: Vec<&[Letter]> = used.iter().filter_map(|&l| witness.substitution.get(l)).collect();
            for (&position, img) in &witness.wildcards {
                if seen.contains(&img.as_slice()) {
                    return Some(Violation::WildcardImageShared { position });
                }
                seen.push(img);
            }
        }
    }

    for &l in &used {
        if witness.substitution.get(l).is_some_and(<[Letter]>::is_empty) {
            return Some(Violation::EmptyLetterImage { letter: l });
        }
    }
    if !instance.variant().empty_wildcards {
        if let Some((&position, _)) = witness.wildcards.iter().find(|(_, w)| w.is_empty()) {
            return Some(Violation::EmptyWildcardImage { position });
        }
    }
    None
}
