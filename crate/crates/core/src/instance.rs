//! Problem instances and the seven structural parameters.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::word::{Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    /// Generalized function matching: any substitution.
    Gfm,
    /// Generalized parameterized matching: the substitution must be injective.
    Gpm,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Gfm => "gfm",
            ProblemKind::Gpm => "gpm",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variant {
    pub kind: ProblemKind,
    /// Wildcards may be mapped to the empty string.
    pub empty_wildcards: bool,
}

impl Variant {
    pub const GFM: Variant = Variant {
        kind: ProblemKind::Gfm,
        empty_wildcards: false,
    };
    pub const GPM: Variant = Variant {
        kind: ProblemKind::Gpm,
        empty_wildcards: false,
    };

    pub fn is_injective(self) -> bool {
        self.kind == ProblemKind::Gpm
    }

    /// Shortest text segment a wildcard may cover.
    pub fn min_wildcard_len(self) -> usize {
        if self.empty_wildcards {
            0
        } else {
            1
        }
    }
}

/// A length bound that may be absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Finite(usize),
    Unbounded,
}

impl Bound {
    pub fn finite(self) -> Option<usize> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Unbounded => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    pub fn admits(self, len: usize) -> bool {
        match self {
            Bound::Finite(max) => len <= max,
            Bound::Unbounded => true,
        }
    }

    /// `min(self, cap)`.
    pub fn cap(self, cap: usize) -> usize {
        match self {
            Bound::Finite(v) => v.min(cap),
            Bound::Unbounded => cap,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Unbounded => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bounds {
    /// Longest image of a pattern letter (`L`).
    pub max_letter_len: Bound,
    /// Longest image of a wildcard (`W`).
    pub max_wildcard_len: Bound,
    /// Number of wildcards allowed (`q`).
    pub wildcard_budget: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_letter_len: Bound::Unbounded,
            max_wildcard_len: Bound::Unbounded,
            wildcard_budget: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("text is empty")]
    EmptyText,
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("text letter {0} is outside the text alphabet")]
    TextLetter(u32),
    #[error("pattern letter {0} is outside the pattern alphabet")]
    PatternLetter(u32),
    #[error("a length bound of 0 admits no image")]
    ZeroBound,
}

/// A Max-GFM / Max-GPM instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    text: Word,
    pattern: Word,
    sigma_t: Alphabet,
    sigma_p: Alphabet,
    variant: Variant,
    bounds: Bounds,
}

impl Instance {
    pub fn new(
        sigma_t: Alphabet,
        sigma_p: Alphabet,
        text: Word,
        pattern: Word,
        variant: Variant,
        bounds: Bounds,
    ) -> Result<Self, InstanceError> {
        if text.is_empty() {
            return Err(InstanceError::EmptyText);
        }
        if pattern.is_empty() {
            return Err(InstanceError::EmptyPattern);
        }
        if let Some(l) = text.iter().find(|l| !sigma_t.contains(**l)) {
            return Err(InstanceError::TextLetter(l.0));
        }
        if let Some(l) = pattern.iter().find(|l| !sigma_p.contains(**l)) {
            return Err(InstanceError::PatternLetter(l.0));
        }
        if bounds.max_letter_len == Bound::Finite(0) {
            return Err(InstanceError::ZeroBound);
        }
        if bounds.max_wildcard_len == Bound::Finite(0) && !variant.empty_wildcards {
            return Err(InstanceError::ZeroBound);
        }
        Ok(Instance {
            text,
            pattern,
            sigma_t,
            sigma_p,
            variant,
            bounds,
        })
    }

    /// Builds an instance from token lists, inferring both alphabets in
    /// order of first appearance.
    pub fn from_tokens(
        text: &[&str],
        pattern: &[&str],
        variant: Variant,
        bounds: Bounds,
    ) -> Result<Self, InstanceError> {
        let mut sigma_t = Alphabet::new();
        let mut sigma_p = Alphabet::new();
        let text: Word = text
            .iter()
            .map(|t| sigma_t.insert(*t).map_err(|_| InstanceError::TextLetter(0)))
            .collect::<Result<_, _>>()?;
        let pattern: Word = pattern
            .iter()
            .map(|t| sigma_p.insert(*t).map_err(|_| InstanceError::PatternLetter(0)))
            .collect::<Result<_, _>>()?;
        Instance::new(sigma_t, sigma_p, text, pattern, variant, bounds)
    }

    pub fn text(&self) -> &[Letter] {
        &self.text
    }

    pub fn pattern(&self) -> &[Letter] {
        &self.pattern
    }

    pub fn sigma_t(&self) -> &Alphabet {
        &self.sigma_t
    }

    pub fn sigma_p(&self) -> &Alphabet {
        &self.sigma_p
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn budget(&self) -> usize {
        self.bounds.wildcard_budget
    }

    pub fn with_budget(&self, budget: usize) -> Instance {
        let mut out = self.clone();
        out.bounds.wildcard_budget = budget;
        out
    }

    pub fn with_bounds(&self, bounds: Bounds) -> Instance {
        let mut out = self.clone();
        out.bounds = bounds;
        out
    }

    pub fn with_variant(&self, variant: Variant) -> Instance {
        let mut out = self.clone();
        out.variant = variant;
        out
    }

    /// Pattern letters that occur in the pattern, ordered by first occurrence.
    pub fn pattern_letters(&self) -> Vec<Letter> {
        let mut seen = vec![false; self.sigma_p.len()];
        let mut out = Vec::new();
        for &l in &self.pattern {
            if !seen[l.index()] {
                seen[l.index()] = true;
                out.push(l);
            }
        }
        out
    }

    /// Number of occurrences of every pattern letter, indexed by letter id.
    pub fn pattern_counts(&self) -> Vec<usize> {
        counts(&self.pattern, self.sigma_p.len())
    }

    pub fn display_text(&self) -> String {
        use alloc::string::ToString;
        self.sigma_t.display(&self.text).to_string()
    }

    pub fn display_pattern(&self) -> String {
        use alloc::string::ToString;
        self.sigma_p.display(&self.pattern).to_string()
    }

    /// Measures the seven parameters.
    pub fn parameters(&self) -> InstanceParameters {
        measure_parameters(self)
    }
}

fn counts(word: &[Letter], size: usize) -> Vec<usize> {
    let mut out = vec![0usize; size];
    for &l in word {
        out[l.index()] += 1;
    }
    out
}

/// The seven parameters of an instance.
///
/// `occ_*` is the largest number of occurrences of one letter, `size_*` the
/// number of distinct letters that actually occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceParameters {
    pub occ_t: usize,
    pub size_t: usize,
    pub occ_p: usize,
    pub size_p: usize,
    pub max_letter_len: Bound,
    pub wildcards: usize,
    pub max_wildcard_len: Bound,
}

pub fn measure_parameters(instance: &Instance) -> InstanceParameters {
    let ct = counts(&instance.text, instance.sigma_t.len());
    let cp = counts(&instance.pattern, instance.sigma_p.len());
    InstanceParameters {
        occ_t: ct.iter().copied().max().unwrap_or(0),
        size_t: ct.iter().filter(|&&c| c > 0).count(),
        occ_p: cp.iter().copied().max().unwrap_or(0),
        size_p: cp.iter().filter(|&&c| c > 0).count(),
        max_letter_len: instance.bounds.max_letter_len,
        wildcards: instance.bounds.wildcard_budget,
        max_wildcard_len: instance.bounds.max_wildcard_len,
    }
}
