//! Function ingestion and rendering: the truth-table file format and the ANF
//! expression grammar.
//!
//! Truth-table files: a header line `n m`, then `2^n` whitespace-separated
//! decimal values in index order (`x_1` is the low bit of the index). Lines
//! whose first non-blank character is `#` are comments.
//!
//! ANF expressions: `+`-separated terms; a term is an optional decimal
//! coefficient and variables `x1..xn` joined by `*` (e.g. `2*x1*x2 + x3 + 1`).
//! Coefficients are reduced mod `2^m`; repeated monomials accumulate mod
//! `2^m`, so `x1 + x1` is `2*x1`, not zero.

use cibool::bf::{FunctionError, GeneralizedAnf, GeneralizedFunction, MAX_INPUTS, MAX_OUTPUTS};
use sha2::{Digest, Sha256};
use thiserror::Error;

/// Parse failures, with the line/entry that caused them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected header \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: `{token}` is not a valid header number")]
    BadHeaderNumber { line: usize, token: String },
    #[error("line {line}, entry {index}: `{token}` is not a decimal value")]
    BadValue {
        line: usize,
        index: usize,
        token: String,
    },
    #[error("line {line}, entry {index}: value {value} out of range (max {max} for m = {m})")]
    ValueOutOfRange {
        line: usize,
        index: usize,
        value: u64,
        max: u32,
        m: u32,
    },
    #[error("expected {expected} values, got {got}")]
    WrongValueCount { expected: usize, got: usize },
    #[error("empty ANF expression")]
    EmptyExpression,
    #[error("term {index}: empty term")]
    EmptyTerm { index: usize },
    #[error("term {index}: empty factor in `{term}`")]
    EmptyFactor { index: usize, term: String },
    #[error("term {index}: unknown variable `{token}` (expected x1..x{n})")]
    UnknownVariable { index: usize, token: String, n: u32 },
    #[error("term {index}: `{token}` is neither a coefficient nor a variable")]
    BadFactor { index: usize, token: String },
    #[error(transparent)]
    Function(#[from] FunctionError),
}

fn check_header_ranges(n: u32, m: u32) -> Result<(), ParseError> {
    if !(1..=MAX_INPUTS).contains(&n) {
        return Err(FunctionError::InputCountOutOfRange { n }.into());
    }
    if !(1..=MAX_OUTPUTS).contains(&m) {
        return Err(FunctionError::OutputCountOutOfRange { m }.into());
    }
    Ok(())
}

/// Parses the truth-table file format.
pub fn parse_truth_table(text: &str) -> Result<GeneralizedFunction, ParseError> {
    let mut header: Option<(u32, u32)> = None;
    let mut values: Vec<u16> = Vec::new();
    let mut last_line = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let tokens: Vec<&str> = content.split_whitespace().collect();
                if tokens.len() != 2 {
                    return Err(ParseError::MalformedHeader { line });
                }
                let parse = |token: &str| {
                    token
                        .parse::<u32>()
                        .map_err(|_| ParseError::BadHeaderNumber {
                            line,
                            token: token.to_string(),
                        })
                };
                let n = parse(tokens[0])?;
                let m = parse(tokens[1])?;
                check_header_ranges(n, m)?;
                header = Some((n, m));
                values.reserve(1usize << n);
            }
            Some((_, m)) => {
                for token in content.split_whitespace() {
                    let index = values.len();
                    let value: u64 = token.parse().map_err(|_| ParseError::BadValue {
                        line,
                        index,
                        token: token.to_string(),
                    })?;
                    let max = (1u32 << m) - 1;
                    if value > max as u64 {
                        return Err(ParseError::ValueOutOfRange {
                            line,
                            index,
                            value,
                            max,
                            m,
                        });
                    }
                    values.push(value as u16);
                }
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MalformedHeader {
        line: last_line + 1,
    })?;
    let expected = 1usize << n;
    if values.len() != expected {
        return Err(ParseError::WrongValueCount {
            expected,
            got: values.len(),
        });
    }
    Ok(GeneralizedFunction::new(n, m, values)?)
}

/// Renders a function in the truth-table file format; reparsing is identity.
pub fn render_truth_table(g: &GeneralizedFunction) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for chunk in g.values().chunks(32) {
        let line: Vec<String> = chunk.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// SHA-256 digest of the canonical truth-table rendering; the content
/// identity used in reports.
pub fn digest(g: &GeneralizedFunction) -> String {
    let mut hasher = Sha256::new();
    hasher.update(render_truth_table(g).as_bytes());
    format!("sha256:{:x}", hasher.finalize())
}

/// Parses an ANF expression and evaluates it mod `2^m` at all `2^n` points.
pub fn parse_anf(text: &str, n: u32, m: u32) -> Result<GeneralizedFunction, ParseError> {
    check_header_ranges(n, m)?;
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseError::EmptyExpression);
    }
    let modulus = 1u64 << m;
    let mut terms: Vec<(u32, u64)> = Vec::new();
    for (ti, term) in trimmed.split('+').enumerate() {
        let index = ti + 1;
        let term = term.trim();
        if term.is_empty() {
            return Err(ParseError::EmptyTerm { index });
        }
        let mut coeff = 1u64;
        let mut mask = 0u32;
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(ParseError::EmptyFactor {
                    index,
                    term: term.to_string(),
                });
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let var: u32 = rest.parse().map_err(|_| ParseError::UnknownVariable {
                    index,
                    token: factor.to_string(),
                    n,
                })?;
                if var == 0 || var > n {
                    return Err(ParseError::UnknownVariable {
                        index,
                        token: factor.to_string(),
                        n,
                    });
                }
                mask |= 1 << (var - 1);
            } else if factor.bytes().all(|b| b.is_ascii_digit()) {
                // Fold the decimal digits mod 2^m so literals of any length work.
                let c = factor
                    .bytes()
                    .fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % modulus);
                coeff = coeff * c % modulus;
            } else {
                return Err(ParseError::BadFactor {
                    index,
                    token: factor.to_string(),
                });
            }
        }
        terms.push((mask, coeff));
    }
    let anf = GeneralizedAnf::new(n, m, terms)?;
    Ok(anf.to_function())
}

/// Renders an ANF in the expression grammar: terms ordered by descending
/// degree then ascending monomial mask, unit coefficients elided.
pub fn render_anf(anf: &GeneralizedAnf) -> String {
    let mut terms: Vec<(u32, u16)> = anf.coefficients().iter().map(|(&k, &c)| (k, c)).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by(|a, b| b.0.count_ones().cmp(&a.0.count_ones()).then(a.0.cmp(&b.0)));
    let rendered: Vec<String> = terms
        .iter()
        .map(|&(mask, coeff)| {
            let vars: Vec<String> = (0..32)
                .filter(|b| (mask >> b) & 1 == 1)
                .map(|b| format!("x{}", b + 1))
                .collect();
            if vars.is_empty() {
                coeff.to_string()
            } else if coeff == 1 {
                vars.join("*")
            } else {
                format!("{}*{}", coeff, vars.join("*"))
            }
        })
        .collect();
    rendered.join(" + ")
}
