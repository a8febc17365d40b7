//! Parsers for the textual literals accepted on the command line.
//!
//! Rationals are written `p`, `p/q` or as finite decimals (`-0.25`); points
//! are comma-separated rationals; lexicographic scalars are `a:b`; words are
//! comma-separated one-based letters.

use num_traits::Zero;

use crate::model_space::Point;
use crate::scalar::{Lex, Rational};
use crate::Error;

const MAX_DIGITS: usize = 30;

fn parse_integer(text: &str) -> Result<i128, Error> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("`{text}` is not an integer")));
    }
    if digits.len() > MAX_DIGITS {
        return Err(Error::Parse(format!("`{text}` has too many digits")));
    }
    text.parse()
        .map_err(|_| Error::Parse(format!("`{text}` is out of range")))
}

/// Parses one exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_integer(num.trim())?;
        let den = parse_integer(den.trim())?;
        if den == 0 {
            return Err(Error::Parse(format!("`{text}` has a zero denominator")));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("`{text}` is not a decimal")));
        }
        if int_digits.len() + frac.len() > MAX_DIGITS {
            return Err(Error::Parse(format!("`{text}` has too many digits")));
        }
        let int_part = if int_digits.is_empty() {
            if int.len() > 1 {
                return Err(Error::Parse(format!("`{text}` is not a decimal")));
            }
            0
        } else {
            parse_integer(int)?.abs()
        };
        // At most MAX_DIGITS digits in total, so the scaled value fits.
        let scale = 10i128.pow(frac.len() as u32);
        let frac_value: i128 = frac
            .parse()
            .map_err(|_| Error::Parse(format!("`{text}` is not a decimal")))?;
        let magnitude = Rational::new(int_part * scale + frac_value, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    Ok(Rational::from_integer(parse_integer(text)?))
}

/// Parses `a:b` as a lexicographic pair, or a single rational `a` as `(a, 0)`.
pub fn parse_lex(text: &str) -> Result<Lex, Error> {
    match text.split_once(':') {
        Some((a, b)) => Ok(Lex(parse_rational(a)?, parse_rational(b)?)),
        None => Ok(Lex(parse_rational(text)?, Rational::zero())),
    }
}

fn split_list(text: &str) -> Vec<&str> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Vec::new();
    }
    inner.split(',').collect()
}

/// Parses a comma-separated list of rationals into a point.
pub fn parse_point(text: &str) -> Result<Point<Rational>, Error> {
    let coords = split_list(text)
        .into_iter()
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    if coords.is_empty() {
        return Err(Error::Parse("empty point literal".into()));
    }
    Ok(Point::new(coords))
}

/// Parses a comma-separated list of lexicographic scalars into a point.
pub fn parse_lex_point(text: &str) -> Result<Point<Lex>, Error> {
    let coords = split_list(text)
        .into_iter()
        .map(parse_lex)
        .collect::<Result<Vec<_>, _>>()?;
    if coords.is_empty() {
        return Err(Error::Parse("empty point literal".into()));
    }
    Ok(Point::new(coords))
}

/// Parses a one-based word such as `1,2,1` into zero-based letters.
pub fn parse_word(text: &str) -> Result<Vec<usize>, Error> {
    split_list(text)
        .into_iter()
        .map(|s| {
            let s = s.trim();
            match s.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n - 1),
                _ => Err(Error::BadWord(format!("`{s}` is not a positive letter"))),
            }
        })
        .collect()
}
