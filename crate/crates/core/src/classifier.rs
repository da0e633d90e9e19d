//! Coverage check over the lattice of the seven parameters.
//!
//! A row says that the problem is tractable (or hard) when parameterized by
//! its parameter set. Tractability is inherited by supersets and hardness by
//! subsets, so a subset `C` of parameters is settled if some tractable row
//! is contained in `C` or some hard row contains `C`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::instance::ProblemKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    /// Largest number of occurrences of a text letter.
    OccT,
    /// Number of distinct text letters.
    SigT,
    /// Largest number of occurrences of a pattern letter.
    OccP,
    /// Number of distinct pattern letters.
    SigP,
    /// Longest letter image.
    MaxFp,
    /// Number of wildcards.
    NumQ,
    /// Longest wildcard image.
    MaxFq,
}

impl Param {
    pub const ALL: [Param; 7] = [
        Param::OccT,
        Param::SigT,
        Param::OccP,
        Param::SigP,
        Param::MaxFp,
        Param::NumQ,
        Param::MaxFq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::OccT => "occt",
            Param::SigT => "sigt",
            Param::OccP => "occp",
            Param::SigP => "sigp",
            Param::MaxFp => "maxfp",
            Param::NumQ => "numq",
            Param::MaxFq => "maxfq",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Param::OccT => "#Σ_t",
            Param::SigT => "|Σ_t|",
            Param::OccP => "#Σ_p",
            Param::SigP => "|Σ_p|",
            Param::MaxFp => "max|f(p_i)|",
            Param::NumQ => "#?",
            Param::MaxFq => "max|f(?)|",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == name)
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

/// A subset of the seven parameters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParameterSet(u8);

impl ParameterSet {
    pub const EMPTY: ParameterSet = ParameterSet(0);
    pub const FULL: ParameterSet = ParameterSet(0x7f);

    pub fn from_bits(bits: u8) -> Option<ParameterSet> {
        (bits <= 0x7f).then_some(ParameterSet(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn of(params: &[Param]) -> ParameterSet {
        ParameterSet(params.iter().fold(0, |acc, p| acc | p.bit()))
    }

    pub fn with(self, p: Param) -> ParameterSet {
        ParameterSet(self.0 | p.bit())
    }

    pub fn without(self, p: Param) -> ParameterSet {
        ParameterSet(self.0 & !p.bit())
    }

    pub fn contains(self, p: Param) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn is_subset(self, other: ParameterSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn params(self) -> impl Iterator<Item = Param> {
        Param::ALL.into_iter().filter(move |&p| self.contains(p))
    }

    /// All 128 subsets, in increasing bit order.
    pub fn all() -> impl Iterator<Item = ParameterSet> {
        (0..=0x7f).map(ParameterSet)
    }
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.params().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(p.name())?;
        }
        f.write_str("}")
    }
}

/// Complexity status; hardness statuses order by strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Fpt,
    W1Hard,
    ParaNpHard,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Fpt => "fpt",
            Status::W1Hard => "w1",
            Status::ParaNpHard => "paranp",
        }
    }

    pub fn from_name(name: &str) -> Option<Status> {
        [Status::Fpt, Status::W1Hard, Status::ParaNpHard]
            .into_iter()
            .find(|s| s.name() == name)
    }

    pub fn is_hard(self) -> bool {
        self != Status::Fpt
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Fpt => "FPT",
            Status::W1Hard => "W[1]-hard",
            Status::ParaNpHard => "para-NP-hard",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Applicability {
    Both,
    GfmOnly,
    GpmOnly,
}

impl Applicability {
    pub fn name(self) -> &'static str {
        match self {
            Applicability::Both => "both",
            Applicability::GfmOnly => "gfm",
            Applicability::GpmOnly => "gpm",
        }
    }

    pub fn from_name(name: &str) -> Option<Applicability> {
        [Applicability::Both, Applicability::GfmOnly, Applicability::GpmOnly]
            .into_iter()
            .find(|a| a.name() == name)
    }

    pub fn applies(self, problem: ProblemKind) -> bool {
        matches!(
            (self, problem),
            (Applicability::Both, _)
                | (Applicability::GfmOnly, ProblemKind::Gfm)
                | (Applicability::GpmOnly, ProblemKind::Gpm)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityRow {
    pub params: ParameterSet,
    pub status: Status,
    pub applies_to: Applicability,
    pub source: String,
}

impl ComplexityRow {
    pub fn new(params: &[Param], status: Status, applies_to: Applicability, source: &str) -> Self {
        ComplexityRow {
            params: ParameterSet::of(params),
            status,
            applies_to,
            source: source.into(),
        }
    }
}

/// The known results for both problems.
pub fn builtin_rows() -> Vec<ComplexityRow> {
    use Applicability::*;
    use Param::*;
    use Status::*;
    alloc::vec![
        ComplexityRow::new(&[OccT, SigT], Fpt, Both, "text length bounded by #Σ_t·|Σ_t|"),
        ComplexityRow::new(&[SigT, SigP, MaxFp], Fpt, Both, "substitution enumeration"),
        ComplexityRow::new(&[SigT, MaxFp], Fpt, GpmOnly, "injectivity bounds |Σ_p|"),
        ComplexityRow::new(&[OccP, SigP, MaxFp, MaxFq], Fpt, Both, "#Σ_p·|Σ_p| bounds #?"),
        ComplexityRow::new(&[SigP, MaxFp, NumQ, MaxFq], Fpt, Both, "anchored candidates"),
        ComplexityRow::new(&[OccT, OccP, SigP, MaxFp, NumQ], W1Hard, Both, "reduction mobile2"),
        ComplexityRow::new(&[OccT, OccP, SigP, NumQ, MaxFq], W1Hard, Both, "reduction mobile1"),
        ComplexityRow::new(&[OccT, OccP, MaxFp, NumQ, MaxFq], W1Hard, Both, "reduction occtmax"),
        ComplexityRow::new(&[SigT, OccP, SigP, NumQ, MaxFq], W1Hard, Both, "external result"),
        ComplexityRow::new(&[OccP, SigP, MaxFp, NumQ], W1Hard, Both, "reduction qmarksize"),
        ComplexityRow::new(&[SigP, MaxFp, MaxFq], W1Hard, Both, "reduction qmark"),
        ComplexityRow::new(&[SigT, OccP, MaxFp, NumQ, MaxFq], ParaNpHard, Both, "external result"),
        ComplexityRow::new(&[SigT, OccP, MaxFp], ParaNpHard, GfmOnly, "external result"),
        ComplexityRow::new(&[OccP, MaxFp], ParaNpHard, GpmOnly, "external result"),
    ]
}

/// How one parameter subset is settled by a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Some tractable row (by index) is a subset.
    Fpt {
        row: usize,
    },
    /// Some hard row is a superset; `row` is the first one of the strongest
    /// status.
    Hard {
        status: Status,
        row: usize,
    },
    Uncovered,
    Conflict {
        fpt_row: usize,
        hard_row: usize,
    },
}

impl Classification {
    pub fn status(self) -> Option<Status> {
        match self {
            Classification::Fpt { .. } => Some(Status::Fpt),
            Classification::Hard { status, .. } => Some(status),
            _ => None,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Fpt { .. } => f.write_str("FPT"),
            Classification::Hard { status, .. } => write!(f, "{status}"),
            Classification::Uncovered => f.write_str("uncovered"),
            Classification::Conflict { .. } => f.write_str("conflict"),
        }
    }
}

pub fn classify(rows: &[ComplexityRow], c: ParameterSet, problem: ProblemKind) -> Classification {
    let applicable = || {
        rows.iter()
            .enumerate()
            .filter(move |(_, r)| r.applies_to.applies(problem))
    };
    let fpt = applicable().find(|(_, r)| r.status == Status::Fpt && r.params.is_subset(c));
    let hard = applicable()
        .filter(|(_, r)| r.status.is_hard() && c.is_subset(r.params))
        .fold(None::<(usize, Status)>, |best, (i, r)| match best {
            Some((_, s)) if s >= r.status => best,
            _ => Some((i, r.status)),
        });
    match (fpt, hard) {
        (Some((f, _)), Some((h, _))) => Classification::Conflict {
            fpt_row: f,
            hard_row: h,
        },
        (Some((row, _)), None) => Classification::Fpt { row },
        (None, Some((row, status))) => Classification::Hard { status, row },
        (None, None) => Classification::Uncovered,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub problem: ProblemKind,
    /// One entry per subset, in increasing bit order.
    pub entries: Vec<(ParameterSet, Classification)>,
    pub uncovered: Vec<ParameterSet>,
    pub conflicts: Vec<ParameterSet>,
}

impl ClassificationReport {
    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty() && self.conflicts.is_empty()
    }

    pub fn covered(&self) -> usize {
        self.entries.len() - self.uncovered.len() - self.conflicts.len()
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|(_, c)| c.status() == Some(status)).count()
    }
}

/// Classifies all 128 subsets.
pub fn check_completeness(rows: &[ComplexityRow], problem: ProblemKind) -> ClassificationReport {
    let entries: Vec<(ParameterSet, Classification)> =
        ParameterSet::all().map(|c| (c, classify(rows, c, problem))).collect();
    let pick = |want: fn(&Classification) -> bool| {
        entries
            .iter()
            .filter(|(_, cl)| want(cl))
            .map(|(c, _)| *c)
            .collect::<Vec<_>>()
    };
    let uncovered = pick(|c| matches!(c, Classification::Uncovered));
    let conflicts = pick(|c| matches!(c, Classification::Conflict { .. }));
    ClassificationReport {
        problem,
        entries,
        uncovered,
        conflicts,
    }
}
