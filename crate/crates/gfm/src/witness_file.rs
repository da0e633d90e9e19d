//! The witness format: `MATCH` followed by `map` and `wild` lines, or the
//! single line `NOMATCH`.
//!
//! ```text
//! MATCH
//! map <letter> <tok> <tok> ...
//! wild <1-based position> <tok> ...
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use gfm_core::{Alphabet, Instance, MatchWitness, Substitution, Word};

use crate::{entries, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessFile {
    Match(MatchWitness),
    NoMatch,
}

/// Canonical form: `map` lines by letter id, `wild` lines by position.
pub fn write_witness(instance: &Instance, witness: Option<&MatchWitness>) -> String {
    let Some(w) = witness else {
        return "NOMATCH\n".into();
    };
    let (st, sp) = (instance.sigma_t(), instance.sigma_p());
    let mut out = String::from("MATCH\n");
    let mut maps: Vec<_> = w.substitution.iter().collect();
    maps.sort_by_key(|(l, _)| l.0);
    for (letter, image) in maps {
        let _ = writeln!(out, "map {}{}", sp.name(letter), tokens(st, image));
    }
    for (pos, image) in &w.wildcards {
        let _ = writeln!(out, "wild {pos}{}", tokens(st, image));
    }
    out
}

fn tokens(st: &Alphabet, image: &[gfm_core::Letter]) -> String {
    image.iter().map(|&l| format!(" {}", st.name(l))).collect()
}

/// Reads a witness against `instance`, resolving letters by name.
pub fn parse_witness(instance: &Instance, src: &str) -> Result<WitnessFile, ParseError> {
    let mut lines = entries(src);
    let Some((line, head, rest)) = lines.next() else {
        return Err(ParseError::eof("expected MATCH or NOMATCH"));
    };
    if !rest.is_empty() {
        return Err(ParseError::at(line, format!("unexpected tokens after {head}")));
    }
    match head {
        "NOMATCH" => {
            if let Some((line, ..)) = lines.next() {
                return Err(ParseError::at(line, "nothing may follow NOMATCH"));
            }
            return Ok(WitnessFile::NoMatch);
        }
        "MATCH" => {}
        other => {
            return Err(ParseError::at(
                line,
                format!("expected MATCH or NOMATCH, got `{other}`"),
            ))
        }
    }

    let (st, sp) = (instance.sigma_t(), instance.sigma_p());
    let m = instance.pattern().len();
    let mut substitution = Substitution::new();
    let mut wildcards = BTreeMap::new();
    for (line, key, values) in lines {
        let Some((&head, image)) = values.split_first() else {
            return Err(ParseError::at(line, format!("`{key}` needs an argument")));
        };
        let image: Word = st
            .word(image.iter().copied())
            .map_err(|tok| ParseError::at(line, format!("`{tok}` is not a text letter")))?;
        match key {
            "map" => {
                let letter = sp
                    .get(head)
                    .ok_or_else(|| ParseError::at(line, format!("`{head}` is not a pattern letter")))?;
                if image.is_empty() {
                    return Err(ParseError::at(line, format!("empty image for `{head}`")));
                }
                if substitution.insert(letter, image).is_some() {
                    return Err(ParseError::at(line, format!("`{head}` is mapped twice")));
                }
            }
            "wild" => {
                let pos: usize = head.parse().ok().filter(|p| (1..=m).contains(p)).ok_or_else(|| {
                    ParseError::at(line, format!("wildcard position must be in 1..={m}, got `{head}`"))
                })?;
                if image.is_empty() && !instance.variant().empty_wildcards {
                    return Err(ParseError::at(
                        line,
                        "empty wildcard image, but empty wildcards are not allowed",
                    ));
                }
                if wildcards.insert(pos, image).is_some() {
                    return Err(ParseError::at(line, format!("position {pos} is wildcarded twice")));
                }
            }
            _ => return Err(ParseError::at(line, format!("unknown key `{key}`"))),
        }
    }
    Ok(WitnessFile::Match(MatchWitness {
        substitution,
        wildcards,
    }))
}
