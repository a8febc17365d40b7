//! JSON encoding of exact values.
//!
//! A rational is a `[numerator, denominator]` pair of integers, a
//! lexicographic scalar is a pair of rationals, and a point is an array of
//! scalars. Every report emitted by the command line carries
//! `schema_version`.

use serde_json::{json, Value};

use crate::model_space::Point;
use crate::scalar::{Lex, Rational, Scalar};
use crate::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self, Error>;
}

fn int_from_json(value: &Value) -> Result<i128, Error> {
    if let Some(n) = value.as_i64() {
        return Ok(n as i128);
    }
    // Integers beyond i64 travel as strings.
    value
        .as_str()
        .and_then(|s| s.parse::<i128>().ok())
        .ok_or_else(|| Error::Parse(format!("{value} is not an integer")))
}

fn int_to_json(n: i128) -> Value {
    match i64::try_from(n) {
        Ok(small) => json!(small),
        Err(_) => json!(n.to_string()),
    }
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        json!([int_to_json(*self.numer()), int_to_json(*self.denom())])
    }

    fn from_json(value: &Value) -> Result<Self, Error> {
        match value.as_array().map(Vec::as_slice) {
            Some([n, d]) => {
                let (n, d) = (int_from_json(n)?, int_from_json(d)?);
                if d == 0 {
                    return Err(Error::Parse("zero denominator".into()));
                }
                if n == i128::MIN || d == i128::MIN {
                    return Err(Error::Parse("integer out of range".into()));
                }
                Ok(Rational::new(n, d))
            }
            _ => Err(Error::Parse(format!(
                "{value} is not a [numerator, denominator] pair"
            ))),
        }
    }
}

impl JsonScalar for Lex {
    fn to_json(&self) -> Value {
        json!([self.0.to_json(), self.1.to_json()])
    }

    fn from_json(value: &Value) -> Result<Self, Error> {
        match value.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(Lex(Rational::from_json(a)?, Rational::from_json(b)?)),
            _ => Err(Error::Parse(format!("{value} is not a lexicographic pair"))),
        }
    }
}

pub fn point_to_json<S: JsonScalar>(p: &Point<S>) -> Value {
    Value::Array(p.coords().iter().map(JsonScalar::to_json).collect())
}

pub fn point_from_json<S: JsonScalar>(value: &Value) -> Result<Point<S>, Error> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{value} is not an array")))?;
    Ok(Point::new(
        items.iter().map(S::from_json).collect::<Result<Vec<_>, _>>()?,
    ))
}

/// Decodes a point from JSON text.
pub fn decode_point<S: JsonScalar>(text: &str) -> Result<Point<S>, Error> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    point_from_json(&value)
}

pub fn points_to_json<'a, S: JsonScalar>(points: impl IntoIterator<Item = &'a Point<S>>) -> Value {
    Value::Array(points.into_iter().map(point_to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};
    use proptest::prelude::*;

    #[test]
    fn documented_shapes() {
        let p = Point::new(vec![q(1, 2), qi(-3)]);
        assert_eq!(point_to_json(&p).to_string(), "[[1,2],[-3,1]]");
        let l = Point::new(vec![Lex(qi(1), q(-1, 3))]);
        assert_eq!(point_to_json(&l).to_string(), "[[[1,1],[-1,3]]]");
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode_point::<Rational>("[[1,0]]").is_err());
        assert!(decode_point::<Rational>("[[1]]").is_err());
        assert!(decode_point::<Rational>("{}").is_err());
        assert!(decode_point::<Lex>("[[1,2]]").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(coords in prop::collection::vec((-10_000i128..10_000, 1i128..500, -50i128..50, 1i128..50), 1..4)) {
            let p: Point<Lex> = Point::new(coords.iter().map(|&(a, b, c, d)| Lex(q(a, b), q(c, d))).collect());
            let text = point_to_json(&p).to_string();
            prop_assert_eq!(decode_point::<Lex>(&text).unwrap(), p);
        }
    }
}
