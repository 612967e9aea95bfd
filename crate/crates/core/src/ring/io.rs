//! JSON formats for presentations and ideal specifications.
//!
//! Rings serialize as
//! `{"name":..,"scalar":{"kind":..,"modulus":..},"rank":..,"one":[..],"table":[[[..]]]}`
//! with every scalar written as a decimal string (rationals as `"p/q"`).
//! The writer is canonical: fixed key order and no whitespace.

use serde::{Deserialize, Serialize};

use super::{RingPresentation, Side};
use crate::error::{Error, Result};
use crate::exactalg::{Integers, IntegersMod, Rationals, ScalarSpec, Scalars};

/// A presentation over any of the supported scalar kinds.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRing {
    Integer(RingPresentation<Integers>),
    Modular(RingPresentation<IntegersMod>),
    Rational(RingPresentation<Rationals>),
}

impl AnyRing {
    pub fn name(&self) -> &str {
        match self {
            AnyRing::Integer(r) => r.name(),
            AnyRing::Modular(r) => r.name(),
            AnyRing::Rational(r) => r.name(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            AnyRing::Integer(r) => r.rank(),
            AnyRing::Modular(r) => r.rank(),
            AnyRing::Rational(r) => r.rank(),
        }
    }

    pub fn spec(&self) -> ScalarSpec {
        match self {
            AnyRing::Integer(r) => r.scalars().spec(),
            AnyRing::Modular(r) => r.scalars().spec(),
            AnyRing::Rational(r) => r.scalars().spec(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyRing::Integer(r) => to_json(r),
            AnyRing::Modular(r) => to_json(r),
            AnyRing::Rational(r) => to_json(r),
        }
    }
}

impl From<RingPresentation<Integers>> for AnyRing {
    fn from(r: RingPresentation<Integers>) -> Self {
        AnyRing::Integer(r)
    }
}

impl From<RingPresentation<IntegersMod>> for AnyRing {
    fn from(r: RingPresentation<IntegersMod>) -> Self {
        AnyRing::Modular(r)
    }
}

impl From<RingPresentation<Rationals>> for AnyRing {
    fn from(r: RingPresentation<Rationals>) -> Self {
        AnyRing::Rational(r)
    }
}

/// A scalar as it may appear in input: a decimal string or a plain JSON integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Text(String),
    Int(i64),
}

impl RawScalar {
    fn text(&self) -> String {
        match self {
            RawScalar::Text(s) => s.clone(),
            RawScalar::Int(v) => v.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarJson {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingIn {
    name: String,
    scalar: ScalarJson,
    rank: usize,
    one: Vec<RawScalar>,
    table: Vec<Vec<Vec<RawScalar>>>,
}

#[derive(Serialize)]
struct RingOut<'a> {
    name: &'a str,
    scalar: ScalarJson,
    rank: usize,
    one: Vec<String>,
    table: Vec<Vec<Vec<String>>>,
}

pub fn scalar_json(spec: ScalarSpec) -> (String, Option<u64>) {
    match spec {
        ScalarSpec::Integer => ("integer".into(), None),
        ScalarSpec::IntegerMod(m) => ("integer-mod-m".into(), Some(m)),
        ScalarSpec::Rational => ("rational".into(), None),
    }
}

/// Canonical compact serialization.
pub fn to_json<S: Scalars>(r: &RingPresentation<S>) -> String {
    let s = r.scalars();
    let fmt = |v: &[S::Elem]| v.iter().map(|x| s.format(x)).collect::<Vec<_>>();
    let n = r.rank();
    let (kind, modulus) = scalar_json(s.spec());
    let out = RingOut {
        name: r.name(),
        scalar: ScalarJson { kind, modulus },
        rank: n,
        one: fmt(r.one()),
        table: (0..n)
            .map(|i| (0..n).map(|j| fmt(r.product_of_basis(i, j))).collect())
            .collect(),
    };
    serde_json::to_string(&out).expect("serializable")
}

fn parse_spec(s: &ScalarJson) -> Result<ScalarSpec> {
    match (s.kind.as_str(), s.modulus) {
        ("integer", None) => Ok(ScalarSpec::Integer),
        ("rational", None) => Ok(ScalarSpec::Rational),
        ("integer-mod-m", Some(m)) if m >= 2 => Ok(ScalarSpec::IntegerMod(m)),
        ("integer-mod-m", Some(m)) => Err(Error::Format {
            field: "scalar.modulus".into(),
            message: format!("modulus must be at least 2, got {m}"),
        }),
        ("integer-mod-m", None) => Err(Error::Format {
            field: "scalar.modulus".into(),
            message: "missing for kind integer-mod-m".into(),
        }),
        ("integer" | "rational", Some(_)) => Err(Error::Format {
            field: "scalar.modulus".into(),
            message: format!("not allowed for kind {}", s.kind),
        }),
        (other, _) => Err(Error::Format {
            field: "scalar.kind".into(),
            message: format!("unknown kind {other:?}; expected integer, integer-mod-m or rational"),
        }),
    }
}

fn parse_vec<S: Scalars>(s: &S, raw: &[RawScalar], field: &str) -> Result<Vec<S::Elem>> {
    raw.iter()
        .enumerate()
        .map(|(k, v)| {
            s.parse(&v.text()).ok_or_else(|| Error::Format {
                field: format!("{field}[{k}]"),
                message: format!("cannot parse {:?} as a {} scalar", v.text(), s.spec()),
            })
        })
        .collect()
}

fn build<S: Scalars>(s: S, raw: &RingIn) -> Result<RingPresentation<S>> {
    let n = raw.rank;
    if raw.one.len() != n {
        return Err(Error::Format {
            field: "one".into(),
            message: format!("expected {n} coordinates, found {}", raw.one.len()),
        });
    }
    let one = parse_vec(&s, &raw.one, "one")?;
    let mut table = Vec::with_capacity(n);
    for (i, row) in raw.table.iter().enumerate() {
        let mut cells = Vec::with_capacity(row.len());
        for (j, cell) in row.iter().enumerate() {
            cells.push(parse_vec(&s, cell, &format!("table[{i}][{j}]"))?);
        }
        table.push(cells);
    }
    RingPresentation::new(raw.name.clone(), s, one, table)
}

/// Parses a ring document. Syntax errors carry line and column; semantic
/// errors name the offending field path.
pub fn from_json(text: &str) -> Result<AnyRing> {
    let raw: RingIn = serde_json::from_str(text)?;
    Ok(match parse_spec(&raw.scalar)? {
        ScalarSpec::Integer => AnyRing::Integer(build(Integers, &raw)?),
        ScalarSpec::Rational => AnyRing::Rational(build(Rationals, &raw)?),
        ScalarSpec::IntegerMod(m) => AnyRing::Modular(build(IntegersMod::new(m)?, &raw)?),
    })
}

/// A side plus generators, before it is attached to a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec {
    pub side: Side,
    pub generators: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealIn {
    side: Side,
    generators: Vec<Vec<RawScalar>>,
}

pub fn ideal_spec_from_json(text: &str) -> Result<IdealSpec> {
    let raw: IdealIn = serde_json::from_str(text)?;
    Ok(IdealSpec {
        side: raw.side,
        generators: raw
            .generators
            .iter()
            .map(|g| g.iter().map(RawScalar::text).collect())
            .collect(),
    })
}

impl IdealSpec {
    /// Generator coordinates in the scalars of `ring`.
    pub fn generators_in<S: Scalars>(&self, ring: &RingPresentation<S>) -> Result<Vec<Vec<S::Elem>>> {
        let s = ring.scalars();
        self.generators
            .iter()
            .enumerate()
            .map(|(k, g)| {
                if g.len() != ring.rank() {
                    return Err(Error::Format {
                        field: format!("generators[{k}]"),
                        message: format!("expected {} coordinates, found {}", ring.rank(), g.len()),
                    });
                }
                g.iter()
                    .enumerate()
                    .map(|(c, v)| {
                        s.parse(v).ok_or_else(|| Error::Format {
                            field: format!("generators[{k}][{c}]"),
                            message: format!("cannot parse {v:?} as a {} scalar", s.spec()),
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DUAL: &str = r#"{"name":"d","scalar":{"kind":"integer"},"rank":2,"one":["1","0"],"table":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]]}"#;

    #[test]
    fn round_trip_is_byte_identical() {
        let r = from_json(DUAL).unwrap();
        assert_eq!(r.to_json(), DUAL);
    }

    #[test]
    fn modular_entries_are_reduced() {
        let text = r#"{"name":"m","scalar":{"kind":"integer-mod-m","modulus":3},"rank":1,"one":[4],"table":[[["-2"]]]}"#;
        let AnyRing::Modular(r) = from_json(text).unwrap() else {
            panic!("expected modular ring")
        };
        assert_eq!(r.one(), &[1]);
        assert_eq!(r.product_of_basis(0, 0), &[1]);
    }

    #[test]
    fn field_paths_in_errors() {
        let bad = DUAL.replace(r#"[["0","1"],["0","0"]]]"#, r#"[["0","1"],["0","x"]]]"#);
        match from_json(&bad) {
            Err(Error::Format { field, .. }) => assert_eq!(field, "table[1][1][1]"),
            other => panic!("unexpected {other:?}"),
        }
        let bad = DUAL.replace("\"integer\"", "\"complex\"");
        assert!(matches!(from_json(&bad), Err(Error::Format { field, .. }) if field == "scalar.kind"));
        assert!(matches!(from_json("{\"name\": 3"), Err(Error::Json(_))));
    }

    #[test]
    fn ideal_spec_parses() {
        let spec = ideal_spec_from_json(r#"{"side":"two-sided","generators":[["0",1]]}"#).unwrap();
        assert_eq!(spec.side, Side::TwoSided);
        let AnyRing::Integer(r) = from_json(DUAL).unwrap() else {
            panic!()
        };
        assert_eq!(spec.generators_in(&r).unwrap(), vec![RingPresentation::coords_from_i64(&[0, 1])]);
    }
}
