//! Input parsing: bundle specifications, flags and Néron-Severi classes.

use std::fmt;
use std::str::FromStr;

use grassnef::scalar::{format_rational, parse_rational};
use grassnef::{BigInt, FieldContext, HnType, Rational, SplittingType};
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

/// Arbitrary-precision integer carried through JSON as a number when it fits
/// in 64 bits and as a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl From<i64> for JsonInt {
    fn from(v: i64) -> Self {
        JsonInt(BigInt::from(v))
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                BigInt::from_str(v.trim())
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("not an integer: {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

/// A rational written as `"p/q"` (or `"p"`), always reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalText(pub Rational);

impl From<Rational> for RationalText {
    fn from(q: Rational) -> Self {
        RationalText(q)
    }
}

impl fmt::Display for RationalText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RationalText;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational \"p/q\" or an integer")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RationalText, E> {
                Ok(RationalText(Rational::from_integer(BigInt::from(v))))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RationalText, E> {
                Ok(RationalText(Rational::from_integer(BigInt::from(v))))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<RationalText, E> {
                parse_rational(v)
                    .map(RationalText)
                    .ok_or_else(|| E::custom(format!("not a rational: {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(rename = "char")]
    pub characteristic: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius_steps: Option<u32>,
}

/// A bundle as given on the command line: HN pieces or a splitting type on
/// the projective line, plus the characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces: Option<Vec<(JsonInt, JsonInt)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<Vec<JsonInt>>,
    #[serde(default)]
    pub field: FieldSpec,
}

impl BundleSpec {
    pub fn resolve(&self) -> Result<(HnType<BigInt>, FieldContext), CliError> {
        let ctx = match self.field {
            FieldSpec {
                characteristic: 0,
                frobenius_steps: None | Some(0),
            } => FieldContext::CharZero,
            FieldSpec {
                characteristic: 0,
                frobenius_steps: Some(_),
            } => {
                return Err(CliError::Parse {
                    message: "frobenius_steps needs a positive characteristic".into(),
                    line: None,
                    column: None,
                })
            }
            FieldSpec {
                characteristic,
                frobenius_steps,
            } => FieldContext::char_p(characteristic, frobenius_steps.unwrap_or(0))?,
        };
        let h = match (&self.pieces, &self.splitting) {
            (Some(pieces), None) => {
                let mut list = Vec::with_capacity(pieces.len());
                for (rank, degree) in pieces {
                    let rank = rank.0.to_i64().unwrap_or(i64::MAX);
                    list.push((rank, degree.0.clone()));
                }
                HnType::new(list)?
            }
            (None, Some(degrees)) => {
                let st = SplittingType::new(degrees.iter().map(|d| d.0.clone()).collect())?;
                HnType::from_splitting_type(&st)
            }
            _ => {
                return Err(CliError::Parse {
                    message: "bundle spec needs exactly one of \"pieces\" or \"splitting\"".into(),
                    line: None,
                    column: None,
                })
            }
        };
        Ok((h, ctx))
    }
}

fn json_error(e: serde_json::Error) -> CliError {
    CliError::Parse {
        message: e.to_string(),
        line: Some(e.line()),
        column: Some(e.column()),
    }
}

/// Parse a JSON bundle specification into a validated HN type and context.
pub fn parse_bundle_spec(text: &str) -> Result<(HnType<BigInt>, FieldContext), CliError> {
    read_bundle_spec(text)?.resolve()
}

pub fn read_bundle_spec(text: &str) -> Result<BundleSpec, CliError> {
    serde_json::from_str(text).map_err(json_error)
}

/// `--flag 1,2,4`
pub fn parse_flag_dims(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| CliError::Parse {
                message: format!("bad flag dimension {t:?}"),
                line: None,
                column: None,
            })
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ClassInput {
    Flat(Vec<RationalText>),
    Gr { x: RationalText, y: RationalText },
    Flag { x: Vec<RationalText>, y: RationalText },
}

/// A class as coordinates with the fiber coefficient last.
///
/// Accepts `[x.., y]` or `{"x": .., "y": ..}`; entries are integers or
/// `"p/q"` strings.
pub fn parse_class(text: &str) -> Result<Vec<Rational>, CliError> {
    let parsed: ClassInput = serde_json::from_str(text).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => CliError::Parse {
            message: "class must be [x.., y] or {\"x\": .., \"y\": ..} with integer or \"p/q\" entries"
                .into(),
            line: None,
            column: None,
        },
        _ => json_error(e),
    })?;
    Ok(match parsed {
        ClassInput::Flat(v) => v.into_iter().map(|q| q.0).collect(),
        ClassInput::Gr { x, y } => vec![x.0, y.0],
        ClassInput::Flag { x, y } => x.into_iter().map(|q| q.0).chain(std::iter::once(y.0)).collect(),
    })
}
