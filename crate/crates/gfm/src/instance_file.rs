//! The instance format.
//!
//! ```text
//! variant gfm|gpm                 (default gfm)
//! allow_empty_wildcard 0|1        (default 0)
//! wildcards <q>                   (default 0)
//! max_letter_len <int>|inf        (default inf)
//! max_wildcard_len <int>|inf      (default inf)
//! text <tok> <tok> ...
//! pattern <tok> <tok> ...
//! sigma_t <tok> ...               (optional, else inferred)
//! sigma_p <tok> ...               (optional, else inferred)
//! ```

use std::fmt::Write as _;

use gfm_core::{Alphabet, Bound, Bounds, Instance, InstanceError, ProblemKind, Variant, Word};

use crate::{entries, ParseError};

const KEYS: [&str; 9] = [
    "variant",
    "allow_empty_wildcard",
    "wildcards",
    "max_letter_len",
    "max_wildcard_len",
    "text",
    "pattern",
    "sigma_t",
    "sigma_p",
];

fn single<'a>(line: usize, key: &str, values: &[&'a str]) -> Result<&'a str, ParseError> {
    match values {
        [v] => Ok(v),
        [] => Err(ParseError::at(line, format!("`{key}` needs a value"))),
        _ => Err(ParseError::at(
            line,
            format!("`{key}` takes one value, got {}", values.len()),
        )),
    }
}

fn number(line: usize, key: &str, v: &str) -> Result<usize, ParseError> {
    if v.starts_with('-') {
        return Err(ParseError::at(line, format!("`{key}` must not be negative, got {v}")));
    }
    v.parse()
        .map_err(|_| ParseError::at(line, format!("`{key}` expects a non-negative integer, got `{v}`")))
}

fn bound(line: usize, key: &str, v: &str) -> Result<Bound, ParseError> {
    if v == "inf" {
        Ok(Bound::Unbounded)
    } else {
        number(line, key, v).map(Bound::Finite)
    }
}

fn alphabet(line: usize, tokens: &[&str]) -> Result<Alphabet, ParseError> {
    Alphabet::from_tokens(tokens.iter().copied()).map_err(|e| ParseError::at(line, e.to_string()))
}

/// Reads an instance. Alphabets are taken from `sigma_t`/`sigma_p` when
/// present and otherwise inferred in order of first appearance.
pub fn parse_instance(src: &str) -> Result<Instance, ParseError> {
    let mut seen: [Option<usize>; KEYS.len()] = [None; KEYS.len()];
    let mut kind = ProblemKind::Gfm;
    let mut empty_wildcards = false;
    let mut bounds = Bounds::default();
    let mut text: Option<(usize, Vec<&str>)> = None;
    let mut pattern: Option<(usize, Vec<&str>)> = None;
    let mut sigma_t: Option<(usize, Vec<&str>)> = None;
    let mut sigma_p: Option<(usize, Vec<&str>)> = None;

    for (line, key, values) in entries(src) {
        let Some(k) = KEYS.iter().position(|&k| k == key) else {
            return Err(ParseError::at(line, format!("unknown key `{key}`")));
        };
        if let Some(first) = seen[k] {
            return Err(ParseError::at(line, format!("`{key}` already given on line {first}")));
        }
        seen[k] = Some(line);
        match key {
            "variant" => {
                kind = match single(line, key, &values)? {
                    "gfm" => ProblemKind::Gfm,
                    "gpm" => ProblemKind::Gpm,
                    v => return Err(ParseError::at(line, format!("variant must be gfm or gpm, got `{v}`"))),
                }
            }
            "allow_empty_wildcard" => {
                empty_wildcards = match single(line, key, &values)? {
                    "0" => false,
                    "1" => true,
                    v => {
                        return Err(ParseError::at(
                            line,
                            format!("allow_empty_wildcard must be 0 or 1, got `{v}`"),
                        ))
                    }
                }
            }
            "wildcards" => bounds.wildcard_budget = number(line, key, single(line, key, &values)?)?,
            "max_letter_len" => bounds.max_letter_len = bound(line, key, single(line, key, &values)?)?,
            "max_wildcard_len" => bounds.max_wildcard_len = bound(line, key, single(line, key, &values)?)?,
            "text" => text = Some((line, values)),
            "pattern" => pattern = Some((line, values)),
            "sigma_t" => sigma_t = Some((line, values)),
            _ => sigma_p = Some((line, values)),
        }
    }

    let (text_line, text) = text.ok_or_else(|| ParseError::eof("missing `text` line"))?;
    let (pattern_line, pattern) = pattern.ok_or_else(|| ParseError::eof("missing `pattern` line"))?;
    if text.is_empty() {
        return Err(ParseError::at(text_line, "text is empty"));
    }
    if pattern.is_empty() {
        return Err(ParseError::at(pattern_line, "pattern is empty"));
    }

    let t_declared = sigma_t.is_some();
    let mut st = match &sigma_t {
        Some((line, tokens)) => alphabet(*line, tokens)?,
        None => Alphabet::new(),
    };
    let mut sp = match &sigma_p {
        Some((line, tokens)) => alphabet(*line, tokens)?,
        None => Alphabet::new(),
    };
    let text_word = word(&mut st, t_declared, &text, text_line, |tok| {
        format!("text token `{tok}` is not in sigma_t")
    })?;
    let pattern_word = word(&mut sp, sigma_p.is_some(), &pattern, pattern_line, |tok| {
        if st.get(tok).is_some() {
            format!("pattern token `{tok}` is declared in sigma_t only")
        } else {
            format!("pattern token `{tok}` is not in sigma_p")
        }
    })?;

    let variant = Variant { kind, empty_wildcards };
    Instance::new(st, sp, text_word, pattern_word, variant, bounds).map_err(|e| {
        let line = match e {
            InstanceError::ZeroBound => seen[3].or(seen[4]),
            InstanceError::EmptyText | InstanceError::TextLetter(_) => Some(text_line),
            InstanceError::EmptyPattern | InstanceError::PatternLetter(_) => Some(pattern_line),
        };
        ParseError {
            line,
            message: e.to_string(),
        }
    })
}

fn word(
    alphabet: &mut Alphabet,
    declared: bool,
    tokens: &[&str],
    line: usize,
    undeclared: impl Fn(&str) -> String,
) -> Result<Word, ParseError> {
    tokens
        .iter()
        .map(|&tok| match alphabet.get(tok) {
            Some(l) => Ok(l),
            None if declared => Err(ParseError::at(line, undeclared(tok))),
            None => alphabet.insert(tok).map_err(|e| ParseError::at(line, e.to_string())),
        })
        .collect()
}

/// Writes an instance with explicit alphabets, so that parsing the output
/// gives back an equal instance.
pub fn serialize_instance(instance: &Instance) -> String {
    let variant = instance.variant();
    let bounds = instance.bounds();
    let mut out = String::new();
    let _ = writeln!(out, "variant {}", variant.kind.name());
    let _ = writeln!(out, "allow_empty_wildcard {}", u8::from(variant.empty_wildcards));
    let _ = writeln!(out, "wildcards {}", bounds.wildcard_budget);
    let _ = writeln!(out, "max_letter_len {}", bound_str(bounds.max_letter_len));
    let _ = writeln!(out, "max_wildcard_len {}", bound_str(bounds.max_wildcard_len));
    let _ = writeln!(out, "sigma_t {}", instance.sigma_t().names().join(" "));
    let _ = writeln!(out, "sigma_p {}", instance.sigma_p().names().join(" "));
    let _ = writeln!(out, "text {}", instance.display_text());
    let _ = writeln!(out, "pattern {}", instance.display_pattern());
    out
}

fn bound_str(b: Bound) -> String {
    match b {
        Bound::Finite(v) => v.to_string(),
        Bound::Unbounded => "inf".into(),
    }
}
