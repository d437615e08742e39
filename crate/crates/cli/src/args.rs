use clap::{Args, Parser, Subcommand, ValueEnum};

use ellfm_core::rational::{self, Rational};
use ellfm_core::{ChernCharacter, DivisorClass, SEquivalencePart, Side};

#[derive(Debug, Parser)]
#[command(name = "ellfm", version, about = "Exact Fourier-Mukai invariants on elliptic surfaces")]
pub struct Cli {
    /// Genus of the base curve.
    #[arg(long, global = true, default_value_t = 0)]
    pub genus: u32,

    /// Weierstrass degree e = -H^2.
    #[arg(long, global = true, default_value_t = 0)]
    pub e: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "X")]
    X,
    #[value(name = "Xhat")]
    Xhat,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::X => Side::X,
            SideArg::Xhat => Side::Xhat,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chern character of the transform, inverse transform or WIT1 transform.
    Transform {
        #[arg(long, conflicts_with = "wit1")]
        inverse: bool,
        #[arg(long)]
        wit1: bool,
        #[command(flatten)]
        chern: ChernSpec,
    },
    /// Invariants of the cover nΘ + kμ̂ and of a rank-one degree-r sheaf on it.
    Cover {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        r: String,
    },
    /// Slope with respect to aH + bμ.
    Slope {
        #[command(flatten)]
        chern: ChernSpec,
        #[command(flatten)]
        pol: PolarizationSpec,
    },
    /// Threshold b0 over a candidate box |c'|, |d'| <= BOX.
    Threshold {
        #[command(flatten)]
        chern: ChernSpec,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long = "box")]
        bound: u32,
    },
    /// Candidates in a box that strictly destabilize.
    Scan {
        #[command(flatten)]
        chern: ChernSpec,
        #[command(flatten)]
        pol: PolarizationSpec,
        #[arg(long = "box")]
        bound: u32,
    },
    /// Fitting cycle and symmetric-product point of an S-equivalence class.
    Fitting {
        /// ID:MULT or ID:MULT:singular; repeatable.
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
    },
    /// Recompute the unstable transform of p̂*ω² ⊗ O_{2Θ}; requires genus 0.
    VerifyRemark,
    /// Relative Todd class.
    Todd,
}

#[derive(Debug, Args)]
pub struct ChernSpec {
    #[arg(long, allow_negative_numbers = true)]
    pub rank: i64,
    /// SECTION,FIBRE coefficients of c1 (e.g. 2,-1/2).
    #[arg(long, allow_hyphen_values = true)]
    pub c1: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub ch2: String,
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,
}

#[derive(Debug, Args)]
pub struct PolarizationSpec {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

/// A flag value that failed to parse, with a 1-based column inside the value.
#[derive(Debug)]
pub struct ParseFailure {
    pub flag: String,
    pub value: String,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} '{}': column {}: {}", self.flag, self.value, self.column, self.message)?;
        write!(f, "\n  {}\n  {}^", self.value, " ".repeat(self.column.saturating_sub(1)))
    }
}

pub fn parse_rational(flag: &str, value: &str) -> Result<Rational, ParseFailure> {
    rational::parse(value).map_err(|e| ParseFailure {
        flag: flag.to_owned(),
        value: value.to_owned(),
        column: e.column,
        message: e.message.to_owned(),
    })
}

/// `a,b` as a pair of rationals.
pub fn parse_pair(flag: &str, value: &str) -> Result<(Rational, Rational), ParseFailure> {
    let Some((first, second)) = value.split_once(',') else {
        return Err(ParseFailure {
            flag: flag.to_owned(),
            value: value.to_owned(),
            column: value.len() + 1,
            message: "expected two comma-separated numbers".to_owned(),
        });
    };
    let offset = first.len() + 1;
    let shift = |mut e: ParseFailure, by: usize| {
        e.column += by;
        e.value = value.to_owned();
        e
    };
    let a = parse_rational(flag, first).map_err(|e| shift(e, 0))?;
    let b = parse_rational(flag, second).map_err(|e| shift(e, offset))?;
    Ok((a, b))
}

impl ChernSpec {
    pub fn to_chern(&self, default_side: Side) -> Result<ChernCharacter, ParseFailure> {
        let side = self.side.map_or(default_side, Side::from);
        let (section, fibre) = parse_pair("--c1", &self.c1)?;
        let ch2 = parse_rational("--ch2", &self.ch2)?;
        Ok(ChernCharacter::new(rational::int(self.rank), DivisorClass::new(side, section, fibre), ch2))
    }
}

pub fn parse_part(value: &str) -> Result<SEquivalencePart, ParseFailure> {
    let fail = |column: usize, message: &str| ParseFailure {
        flag: "--part".to_owned(),
        value: value.to_owned(),
        column,
        message: message.to_owned(),
    };
    let fields: Vec<&str> = value.split(':').collect();
    if fields.len() < 2 || fields.len() > 3 {
        return Err(fail(1, "expected ID:MULT or ID:MULT:singular"));
    }
    if fields[0].is_empty() {
        return Err(fail(1, "empty point id"));
    }
    let mult_col = fields[0].len() + 2;
    let multiplicity: u32 = fields[1]
        .parse()
        .map_err(|_| fail(mult_col, "multiplicity must be a positive integer"))?;
    let singular = match fields.get(2) {
        None => false,
        Some(&"singular") | Some(&"s") => true,
        Some(_) => return Err(fail(mult_col + fields[1].len() + 1, "expected 'singular'")),
    };
    Ok(SEquivalencePart::new(fields[0], multiplicity, singular))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_columns_point_into_the_whole_value() {
        let err = parse_pair("--c1", "2,1/0").unwrap_err();
        assert_eq!(err.column, 5);
        assert_eq!(err.message, "zero denominator");
        let err = parse_pair("--c1", "x,1").unwrap_err();
        assert_eq!(err.column, 1);
        assert!(parse_pair("--c1", "3").is_err());
        assert_eq!(parse_pair("--c1", "-1/2,4").unwrap(), (rational::q(-1, 2), rational::int(4)));
    }

    #[test]
    fn parts() {
        let p = parse_part("xi0:2:singular").unwrap();
        assert_eq!((p.point.0.as_str(), p.multiplicity, p.singular), ("xi0", 2, true));
        assert!(!parse_part("a:1").unwrap().singular);
        assert_eq!(parse_part("a:x").unwrap_err().column, 3);
        assert_eq!(parse_part("a:1:bogus").unwrap_err().column, 5);
        assert!(parse_part("a").is_err());
    }
}
