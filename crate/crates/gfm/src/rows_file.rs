//! Complexity rows: `row <fpt|w1|paranp> <gfm|gpm|both> <param>[,<param>...] <citation>`
//! with parameter names `occt,sigt,occp,sigp,maxfp,numq,maxfq`. The citation
//! is the rest of the line and may be empty.

use std::fmt::Write as _;

use gfm_core::classifier::{Applicability, ComplexityRow, Param, ParameterSet, Status};

use crate::{entries, ParseError};

pub fn parse_rows(src: &str) -> Result<Vec<ComplexityRow>, ParseError> {
    let mut rows = Vec::new();
    for (line, key, values) in entries(src) {
        if key != "row" {
            return Err(ParseError::at(line, format!("unknown key `{key}`")));
        }
        let [status, applies, params, citation @ ..] = values.as_slice() else {
            return Err(ParseError::at(
                line,
                "`row` needs a status, a problem and a parameter list",
            ));
        };
        let status = Status::from_name(status)
            .ok_or_else(|| ParseError::at(line, format!("status must be fpt, w1 or paranp, got `{status}`")))?;
        let applies_to = Applicability::from_name(applies)
            .ok_or_else(|| ParseError::at(line, format!("problem must be gfm, gpm or both, got `{applies}`")))?;
        let params = params
            .split(',')
            .map(|p| Param::from_name(p).ok_or_else(|| ParseError::at(line, format!("unknown parameter `{p}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(ComplexityRow {
            params: ParameterSet::of(&params),
            status,
            applies_to,
            source: citation.join(" "),
        });
    }
    Ok(rows)
}

pub fn write_rows(rows: &[ComplexityRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let params: Vec<_> = r.params.params().map(Param::name).collect();
        let _ = write!(
            out,
            "row {} {} {}",
            r.status.name(),
            r.applies_to.name(),
            params.join(",")
        );
        if !r.source.is_empty() {
            let _ = write!(out, " {}", r.source);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gfm_core::classifier::builtin_rows;

    #[test]
    fn builtin_rows_round_trip() {
        let rows = builtin_rows();
        assert_eq!(parse_rows(&write_rows(&rows)).unwrap(), rows);
    }

    #[test]
    fn one_row() {
        let rows = parse_rows("# table\nrow fpt both occt,sigt text is short\n").unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].params, ParameterSet::of(&[Param::OccT, Param::SigT]));
        assert_eq!(rows[0].source, "text is short");
    }

    #[test]
    fn errors() {
        for src in [
            "row fpt both\n",
            "row easy both occt\n",
            "row fpt neither occt\n",
            "row fpt both occt,size\n",
            "col fpt both occt\n",
        ] {
            assert_eq!(parse_rows(src).unwrap_err().line, Some(1), "{src:?}");
        }
    }
}
