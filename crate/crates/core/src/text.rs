//! Plain-text and JSON encodings of linear combinations of basis elements.
//!
//! Plain form: `1/2 h[13/2] - 1/6 h[123]`. JSON form:
//! `{"basis":"h","terms":[{"index":"13/2","coeff":"1/2"}]}`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};

/// Writes `c₁ b[i₁] ± c₂ b[i₂] …`, or `0` for the empty sum.
pub fn write_terms<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    letter: &str,
    terms: impl Iterator<Item = (&'a K, &'a Q)>,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let abs = c.abs();
        let sep = match (first, c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        if abs.is_one() {
            write!(f, "{}{}[{}]", sep, letter, key)?;
        } else {
            write!(f, "{}{} {}[{}]", sep, format_q(&abs), letter, key)?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// One parsed term: basis letter, raw index text, coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub basis: String,
    pub index: String,
    /// Byte offset of the index text in the input.
    pub index_pos: usize,
    pub coeff: Q,
}

/// Parses `1/2 h[13/2] - 1/6 h[123] + h[1/2/3]`. A lone `0` is the empty sum.
pub fn parse_terms(input: &str) -> Result<Vec<RawTerm>> {
    let bytes = input.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let skip_ws = |p: &mut usize| {
        while *p < bytes.len() && bytes[*p].is_ascii_whitespace() {
            *p += 1;
        }
    };
    skip_ws(&mut pos);
    if input[pos..].trim() == "0" {
        return Ok(out);
    }
    let mut first = true;
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(Error::parse(input, pos, "expected '+' or '-' between terms"));
        }
        let coeff_start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let mut coeff = if pos > coeff_start {
            parse_q(&input[coeff_start..pos]).map_err(|_| Error::parse(input, coeff_start, "bad coefficient"))?
        } else {
            Q::one()
        };
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
            skip_ws(&mut pos);
        }
        let letter_start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphabetic() || bytes[pos] == b'_') {
            pos += 1;
        }
        if pos == letter_start {
            return Err(Error::parse(input, pos, "expected a basis letter"));
        }
        let basis = input[letter_start..pos].to_string();
        if pos >= bytes.len() || bytes[pos] != b'[' {
            return Err(Error::parse(input, pos, "expected '['"));
        }
        pos += 1;
        let index_pos = pos;
        let close = input[pos..]
            .find(']')
            .ok_or_else(|| Error::parse(input, pos, "missing ']'"))?;
        let index = input[pos..pos + close].trim().to_string();
        pos += close + 1;
        if negative {
            coeff = -coeff;
        }
        out.push(RawTerm {
            basis,
            index,
            index_pos,
            coeff,
        });
        first = false;
        skip_ws(&mut pos);
    }
    if out.is_empty() {
        return Err(Error::parse(input, 0, "empty expression"));
    }
    Ok(out)
}

/// Rewrites a parse error raised on an index so its position refers to the
/// whole expression.
pub fn relocate(err: Error, input: &str, offset: usize) -> Error {
    match err {
        Error::Parse {
            position, message, ..
        } => Error::parse(input, offset + position, message),
        other => Error::parse(input, offset, other.to_string()),
    }
}

pub fn terms_to_json<'a, K: fmt::Display + 'a>(
    letter: &str,
    terms: impl Iterator<Item = (&'a K, &'a Q)>,
) -> Value {
    let ts: Vec<Value> = terms
        .map(|(k, c)| json!({"index": k.to_string(), "coeff": format_q(c)}))
        .collect();
    json!({"basis": letter, "terms": ts})
}

/// Returns the basis letter and `(index, coeff)` pairs.
pub fn terms_from_json(v: &Value) -> Result<(String, Vec<(String, Q)>)> {
    let bad = |m: &str| Error::invalid(format!("malformed expression JSON: {}", m));
    let basis = v["basis"].as_str().ok_or_else(|| bad("missing basis"))?.to_string();
    let mut out = Vec::new();
    for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
        let index = t["index"].as_str().ok_or_else(|| bad("missing index"))?;
        let coeff = parse_q(t["coeff"].as_str().ok_or_else(|| bad("missing coeff"))?)?;
        if !coeff.is_zero() {
            out.push((index.to_string(), coeff));
        }
    }
    Ok((basis, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    #[test]
    fn parses_signed_fractional_terms() {
        let t = parse_terms("1/2 h[13/2] - 1/6 h[123]").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].basis, "h");
        assert_eq!(t[0].index, "13/2");
        assert_eq!(t[0].coeff, q_frac(1, 2));
        assert_eq!(t[1].coeff, q_frac(-1, 6));
        let u = parse_terms("-h[1] + 3*e[12]").unwrap();
        assert_eq!(u[0].coeff, q(-1));
        assert_eq!(u[1].coeff, q(3));
        assert!(parse_terms("0").unwrap().is_empty());
    }

    #[test]
    fn reports_positions() {
        match parse_terms("h[1] h[2]") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{:?}", other),
        }
        assert!(parse_terms("h[12").is_err());
        assert!(parse_terms("2 [12]").is_err());
    }
}
