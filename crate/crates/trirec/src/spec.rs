//! Coefficient spec documents.
//!
//! ```json
//! {"type": "table", "values": ["2", "3/4", "-5"], "start_index": 1}
//! {"type": "constant", "value": "1"}
//! {"type": "rational_function", "num": ["0", "1"], "den": ["1"]}
//! ```
//!
//! Rationals are strings `"p/q"` or `"p"`. Polynomial coefficients are in
//! ascending degree. `constant` and `rational_function` accept an optional
//! `"domain": [lo, hi]`, defaulting to [`DEFAULT_DOMAIN`].

use serde::{Deserialize, Serialize};
use trirec_core::{parse_rational, render_rational, CoefficientSequence, Rational, RationalParseError, Source};

/// Domain used by `constant` and `rational_function` specs without one.
pub const DEFAULT_DOMAIN: (i64, i64) = (1, 10_000);

/// Serialized form of a coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", try_from = "RawSpec")]
pub enum CoefficientSpec {
    /// Explicit values.
    Table {
        /// Rational literals.
        values: Vec<String>,
        /// Index of the first value.
        start_index: i64,
    },
    /// One value over the whole domain.
    Constant {
        /// Rational literal.
        value: String,
        /// Inclusive `[lo, hi]`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<(i64, i64)>,
    },
    /// `num(n) / den(n)`.
    RationalFunction {
        /// Numerator coefficients, ascending degree.
        num: Vec<String>,
        /// Denominator coefficients, ascending degree.
        den: Vec<String>,
        /// Inclusive `[lo, hi]`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<(i64, i64)>,
    },
}

// Flat mirror of the spec so that the JSON reader keeps line and column
// information for errors inside fields.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    #[serde(rename = "type")]
    kind: Kind,
    values: Option<Vec<String>>,
    start_index: Option<i64>,
    value: Option<String>,
    num: Option<Vec<String>>,
    den: Option<Vec<String>>,
    domain: Option<(i64, i64)>,
}

#[derive(Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Kind {
    Table,
    Constant,
    RationalFunction,
}

impl TryFrom<RawSpec> for CoefficientSpec {
    type Error = String;

    fn try_from(raw: RawSpec) -> Result<Self, String> {
        let RawSpec { kind, values, start_index, value, num, den, domain } = raw;
        let reject = |name: &str, present: bool| if present { Err(format!("unexpected field `{name}`")) } else { Ok(()) };
        let need = |name: &str| format!("missing field `{name}`");
        match kind {
            Kind::Table => {
                reject("value", value.is_some())?;
                reject("num", num.is_some())?;
                reject("den", den.is_some())?;
                reject("domain", domain.is_some())?;
                Ok(Self::Table { values: values.ok_or_else(|| need("values"))?, start_index: start_index.unwrap_or(1) })
            }
            Kind::Constant => {
                reject("values", values.is_some())?;
                reject("start_index", start_index.is_some())?;
                reject("num", num.is_some())?;
                reject("den", den.is_some())?;
                Ok(Self::Constant { value: value.ok_or_else(|| need("value"))?, domain })
            }
            Kind::RationalFunction => {
                reject("values", values.is_some())?;
                reject("start_index", start_index.is_some())?;
                reject("value", value.is_some())?;
                Ok(Self::RationalFunction {
                    num: num.ok_or_else(|| need("num"))?,
                    den: den.ok_or_else(|| need("den"))?,
                    domain,
                })
            }
        }
    }
}

/// Why a spec document was rejected.
#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    /// Malformed JSON or wrong shape.
    #[error("parse error at line {line}, column {column}: {message}")]
    Json {
        /// 1-based line.
        line: usize,
        /// 1-based column.
        column: usize,
        /// Description from the JSON reader.
        message: String,
    },
    /// A rational literal is malformed.
    #[error("parse error in {field}: {literal:?}: {source}")]
    Rational {
        /// Which field held the literal.
        field: String,
        /// The literal itself.
        literal: String,
        /// Offset and reason.
        source: RationalParseError,
    },
    /// The document parsed but describes an invalid sequence.
    #[error(transparent)]
    Invalid(#[from] trirec_core::Error),
}

fn rational(field: impl Into<String>, literal: &str) -> Result<Rational, SpecError> {
    parse_rational(literal).map_err(|source| SpecError::Rational {
        field: field.into(),
        literal: literal.to_owned(),
        source,
    })
}

fn rationals(field: &str, literals: &[String]) -> Result<Vec<Rational>, SpecError> {
    literals.iter().enumerate().map(|(i, l)| rational(format!("{field}[{i}]"), l)).collect()
}

impl CoefficientSpec {
    /// Builds the sequence, validating every literal.
    pub fn build(&self) -> Result<CoefficientSequence<Rational>, SpecError> {
        Ok(match self {
            Self::Table { values, start_index } => CoefficientSequence::table(rationals("values", values)?, *start_index),
            Self::Constant { value, domain } => {
                let (lo, hi) = domain.unwrap_or(DEFAULT_DOMAIN);
                CoefficientSequence::constant(rational("value", value)?, lo, hi)
            }
            Self::RationalFunction { num, den, domain } => {
                let (lo, hi) = domain.unwrap_or(DEFAULT_DOMAIN);
                CoefficientSequence::rational_function(rationals("num", num)?, rationals("den", den)?, lo, hi)?
            }
        })
    }

    /// Table spec for explicit values starting at index 1.
    pub fn from_values(values: &[Rational]) -> Self {
        Self::Table { values: values.iter().map(render_rational).collect(), start_index: 1 }
    }

    /// Spec reproducing an unshifted sequence.
    pub fn from_sequence(seq: &CoefficientSequence<Rational>) -> Self {
        let (lo, hi) = seq.domain();
        let lits = |v: &[Rational]| v.iter().map(render_rational).collect();
        match seq.source() {
            Source::Table(values) => Self::Table { values: lits(values), start_index: lo },
            Source::Constant(value) => Self::Constant { value: render_rational(value), domain: Some((lo, hi)) },
            Source::RationalFunction { num, den } => Self::RationalFunction { num: lits(num), den: lits(den), domain: Some((lo, hi)) },
        }
    }

    /// JSON text of the spec.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

/// Parses a UTF-8 JSON spec document into a sequence.
pub fn parse_coefficient_spec(text: &str) -> Result<CoefficientSequence<Rational>, SpecError> {
    let spec: CoefficientSpec = serde_json::from_str(text).map_err(|e| SpecError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    spec.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn constant_spec() {
        let d = parse_coefficient_spec(r#"{"type":"constant","value":"1"}"#).unwrap();
        assert_eq!(d.domain(), DEFAULT_DOMAIN);
        assert_eq!(d.coeff_at(17).unwrap(), q(1));
        let d = parse_coefficient_spec(r#"{"type":"constant","value":"-2/3","domain":[0,4]}"#).unwrap();
        assert_eq!(d.domain(), (0, 4));
    }

    #[test]
    fn table_spec() {
        let d = parse_coefficient_spec(r#"{"type":"table","values":["2","3","5"]}"#).unwrap();
        assert_eq!(d.domain(), (1, 3));
        assert_eq!(d.coeff_at(3).unwrap(), q(5));
        let d = parse_coefficient_spec(r#"{"type":"table","values":["7"],"start_index":-2}"#).unwrap();
        assert_eq!(d.coeff_at(-2).unwrap(), q(7));
    }

    #[test]
    fn rational_function_spec() {
        let d = parse_coefficient_spec(r#"{"type":"rational_function","num":["0","1"],"den":["1"]}"#).unwrap();
        assert_eq!(d.coeff_at(4).unwrap(), q(4));
        let err = parse_coefficient_spec(r#"{"type":"rational_function","num":["1"],"den":["-2","1"],"domain":[1,5]}"#).unwrap_err();
        assert!(matches!(err, SpecError::Invalid(trirec_core::Error::ZeroDenominator { index: 2 })));
    }

    #[test]
    fn malformed_rational() {
        let err = parse_coefficient_spec(r#"{"type":"constant","value":"1/0"}"#).unwrap_err();
        match err {
            SpecError::Rational { field, source, .. } => {
                assert_eq!(field, "value");
                assert_eq!(source.position(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_coefficient_spec(r#"{"type":"table","values":["1","x"]}"#).unwrap_err();
        assert!(matches!(err, SpecError::Rational { ref field, .. } if field == "values[1]"));
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_coefficient_spec("{\"type\":\"table\",\n \"values\": [1]}").unwrap_err();
        assert!(matches!(err, SpecError::Json { line: 2, .. }), "{err:?}");
        assert!(matches!(parse_coefficient_spec(r#"{"type":"matrix"}"#), Err(SpecError::Json { .. })));
        assert!(matches!(parse_coefficient_spec(r#"{"type":"constant","value":"1","extra":2}"#), Err(SpecError::Json { .. })));
        assert!(matches!(parse_coefficient_spec(r#"{"type":"constant","values":["1"]}"#), Err(SpecError::Json { .. })));
        assert!(matches!(parse_coefficient_spec(r#"{"type":"table"}"#), Err(SpecError::Json { .. })));
    }

    #[test]
    fn spec_round_trip() {
        let seqs = [
            CoefficientSequence::table(vec![q(1), Rational::new(3.into(), 4.into())], 0),
            CoefficientSequence::constant(q(-3), 2, 9),
            CoefficientSequence::rational_function(vec![q(1)], vec![q(1), q(1)], 1, 6).unwrap(),
        ];
        for seq in seqs {
            let text = CoefficientSpec::from_sequence(&seq).to_json();
            assert_eq!(parse_coefficient_spec(&text).unwrap(), seq);
        }
    }
}
