//! Line-oriented parser for Hilbert data files.
//!
//! One entry per line, `#` starts a comment, blank lines are skipped:
//!
//! ```text
//! dim 2
//! pcan 5 5/2 5/2        # coefficients, lowest degree first
//! plin 5 -5/2 5/2
//! q 0
//! pg 4
//! plin-valid-from 2
//! ```
//!
//! Coefficients are exact rationals (`a/b` or plain integers).  Every key is
//! required exactly once.  Syntax problems carry the offending line number;
//! semantic problems (degree or leading-coefficient mismatches, non-integer
//! values) come back as the library's own errors.

use genus_gaps_core::exact::{Rat, RationalPoly};
use genus_gaps_core::nfold::HilbertData;
use genus_gaps_core::{Error as CoreError, Int};
use num_traits::Zero;

#[derive(Debug)]
pub enum HilbertError {
    Syntax { line: usize, msg: String },
    Data(CoreError),
}

fn syntax(line: usize, msg: impl Into<String>) -> HilbertError {
    HilbertError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_rat(token: &str) -> Option<Rat> {
    match token.split_once('/') {
        None => token.parse::<Int>().ok().map(Rat::from_integer),
        Some((numer, denom)) => {
            let numer = numer.parse::<Int>().ok()?;
            let denom = denom.parse::<Int>().ok()?;
            if denom.is_zero() {
                None
            } else {
                Some(Rat::new(numer, denom))
            }
        }
    }
}

fn parse_coeffs(line_no: usize, key: &str, tokens: &[&str]) -> Result<RationalPoly, HilbertError> {
    if tokens.is_empty() {
        return Err(syntax(line_no, format!("'{key}' needs coefficients")));
    }
    let mut coeffs = Vec::with_capacity(tokens.len());
    for token in tokens {
        let c = parse_rat(token).ok_or_else(|| {
            syntax(
                line_no,
                format!("expected a rational like 5/2 or -3, got '{token}'"),
            )
        })?;
        coeffs.push(c);
    }
    Ok(RationalPoly::new(coeffs))
}

pub fn parse_str(text: &str) -> Result<HilbertData, HilbertError> {
    let mut dim: Option<(usize, usize)> = None;
    let mut p_can: Option<(usize, RationalPoly)> = None;
    let mut p_lin: Option<(usize, RationalPoly)> = None;
    let mut q: Option<(usize, Int)> = None;
    let mut pg: Option<(usize, Int)> = None;
    let mut valid_from: Option<(usize, Int)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let key = tokens.next().expect("non-empty line has a first token");
        let rest: Vec<&str> = tokens.collect();
        let single = |what: &str| -> Result<&str, HilbertError> {
            match rest.as_slice() {
                [value] => Ok(value),
                _ => Err(syntax(line_no, format!("'{key}' needs exactly one {what}"))),
            }
        };
        match key {
            "dim" => {
                if dim.is_some() {
                    return Err(syntax(line_no, "duplicate 'dim'"));
                }
                let value: usize = single("integer")?
                    .parse()
                    .map_err(|_| syntax(line_no, "expected a small positive integer"))?;
                dim = Some((line_no, value));
            }
            "pcan" => {
                if p_can.is_some() {
                    return Err(syntax(line_no, "duplicate 'pcan'"));
                }
                p_can = Some((line_no, parse_coeffs(line_no, key, &rest)?));
            }
            "plin" => {
                if p_lin.is_some() {
                    return Err(syntax(line_no, "duplicate 'plin'"));
                }
                p_lin = Some((line_no, parse_coeffs(line_no, key, &rest)?));
            }
            "q" | "pg" | "plin-valid-from" => {
                let slot = match key {
                    "q" => &mut q,
                    "pg" => &mut pg,
                    _ => &mut valid_from,
                };
                if slot.is_some() {
                    return Err(syntax(line_no, format!("duplicate '{key}'")));
                }
                let value: Int = single("integer")?
                    .parse()
                    .map_err(|_| syntax(line_no, "expected an integer"))?;
                *slot = Some((line_no, value));
            }
            other => {
                return Err(syntax(
                    line_no,
                    format!(
                        "unknown key '{other}' (expected dim, pcan, plin, q, pg, or plin-valid-from)"
                    ),
                ));
            }
        }
    }

    fn require(name: &'static str) -> impl FnOnce() -> HilbertError {
        move || syntax(0, format!("missing '{name}' line"))
    }
    let (_, dim) = dim.ok_or_else(require("dim"))?;
    let (_, p_can) = p_can.ok_or_else(require("pcan"))?;
    let (_, p_lin) = p_lin.ok_or_else(require("plin"))?;
    let (_, q) = q.ok_or_else(require("q"))?;
    let (_, pg) = pg.ok_or_else(require("pg"))?;
    let (_, valid_from) = valid_from.ok_or_else(require("plin-valid-from"))?;

    HilbertData::new(dim, p_can, p_lin, q, pg, valid_from).map_err(HilbertError::Data)
}
