//! The ideal file format.
//!
//! ```text
//! ring 3
//! powers 2 2 2
//! gens
//! x1*x2
//! x2^2*x3
//! ```
//!
//! `ring` is mandatory and comes first, `powers` is optional, and `gens`
//! introduces one monomial per line (possibly none).  Variables are named
//! `x1..xn`; a monomial is `x<k>^<e>` factors joined by `*`, with `1` for
//! the unit monomial.  Blank lines and `#` comments are ignored.
//! Serialization is canonical: generators minimal and lex-descending.

use std::fmt;

use lexpow::{Monomial, MonomialIdeal, PowerSequence};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

#[derive(Debug)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub powers: Option<PowerSequence>,
    /// Non-fatal notes, e.g. the input generators were not minimal.
    pub warnings: Vec<String>,
}

/// Parse one monomial; `lineno` and the column of each factor feed error
/// positions.
fn parse_monomial(text: &str, nvars: usize, lineno: usize) -> Result<Monomial, ParseError> {
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(Monomial::one(nvars));
    }
    let mut exps = vec![0u32; nvars];
    let mut offset = 0usize;
    for factor in text.split('*') {
        let column = offset + (factor.len() - factor.trim_start().len()) + 1;
        let piece = factor.trim();
        offset += factor.len() + 1;
        if piece.is_empty() {
            return err(lineno, column, "empty factor");
        }
        let Some(rest) = piece.strip_prefix('x') else {
            return err(lineno, column, format!("expected a variable, found {piece:?}"));
        };
        let (var_text, exp_text) = match rest.split_once('^') {
            Some((v, e)) => (v, Some(e)),
            None => (rest, None),
        };
        let var: usize = match var_text.parse() {
            Ok(v) => v,
            Err(_) => return err(lineno, column, format!("bad variable index {var_text:?}")),
        };
        if var == 0 || var > nvars {
            return err(
                lineno,
                column,
                format!("unknown variable x{var} (ring has {nvars} variables)"),
            );
        }
        let exp: u32 = match exp_text {
            None => 1,
            Some(e) => match e.parse() {
                Ok(v) => v,
                Err(_) => {
                    return err(
                        lineno,
                        column,
                        format!("bad exponent {e:?} (must be a nonnegative integer)"),
                    )
                }
            },
        };
        exps[var - 1] += exp;
    }
    Ok(Monomial::new(exps))
}

pub fn parse_ideal(text: &str) -> Result<ParsedIdeal, ParseError> {
    #[derive(PartialEq)]
    enum State {
        Ring,
        AfterRing,
        Gens,
    }
    let mut state = State::Ring;
    let mut nvars = 0usize;
    let mut powers: Option<PowerSequence> = None;
    let mut gens: Vec<Monomial> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match state {
            State::Ring => {
                let Some(count) = line.strip_prefix("ring ") else {
                    return err(lineno, 1, "expected `ring <n>` as the first directive");
                };
                nvars = match count.trim().parse() {
                    Ok(v) => v,
                    Err(_) => return err(lineno, 6, format!("bad ring size {count:?}")),
                };
                state = State::AfterRing;
            }
            State::AfterRing => {
                if let Some(list) = line.strip_prefix("powers ") {
                    let mut exps = Vec::new();
                    let mut column = 8;
                    for tok in list.split_whitespace() {
                        let e: u32 = match tok.parse() {
                            Ok(v) => v,
                            Err(_) => return err(lineno, column, format!("bad power {tok:?}")),
                        };
                        if e < 2 {
                            return err(lineno, column, "powers must be at least 2");
                        }
                        exps.push(e);
                        column += tok.len() + 1;
                    }
                    if exps.len() > nvars {
                        return err(lineno, 8, "more powers than ring variables");
                    }
                    if !exps.windows(2).all(|w| w[0] <= w[1]) {
                        return err(lineno, 8, "powers must be nondecreasing");
                    }
                    powers = Some(PowerSequence::new(nvars, exps));
                } else if line == "gens" {
                    state = State::Gens;
                } else {
                    return err(lineno, 1, "expected `powers ...` or `gens`");
                }
            }
            State::Gens => {
                gens.push(parse_monomial(raw, nvars, lineno)?);
            }
        }
    }
    if state == State::Ring {
        return err(text.lines().count().max(1), 1, "missing `ring <n>` directive");
    }
    if state == State::AfterRing {
        return err(text.lines().count().max(1), 1, "missing `gens` section");
    }

    let raw_count = gens.len();
    let ideal = MonomialIdeal::new(nvars, gens);
    let mut warnings = Vec::new();
    if ideal.gens().len() != raw_count {
        warnings.push(format!(
            "input generators were not minimal: {} listed, {} kept",
            raw_count,
            ideal.gens().len()
        ));
    }
    Ok(ParsedIdeal { ideal, powers, warnings })
}

/// Canonical serialization; `parse(serialize(i, p))` reproduces `(i, p)`
/// exactly and without warnings.
pub fn serialize_ideal(ideal: &MonomialIdeal, powers: Option<&PowerSequence>) -> String {
    let mut out = format!("ring {}\n", ideal.nvars());
    if let Some(p) = powers {
        if p.rank() > 0 {
            out.push_str("powers");
            for e in p.exponents() {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
    }
    out.push_str("gens\n");
    for g in ideal.gens() {
        out.push_str(&format!("{g}\n"));
    }
    out
}
