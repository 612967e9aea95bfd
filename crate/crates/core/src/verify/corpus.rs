//! The registry of rings the report runs over.

use std::path::Path;

use serde::Deserialize;

use crate::constructions::{Family, FamilySpec};
use crate::error::{Error, Result};
use crate::exactalg::ScalarSpec;
use crate::ring::io::{from_json, AnyRing};

/// Properties a corpus ring is expected to have; cross-checked at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tags {
    pub centrally_essential: bool,
    pub commutative: bool,
    pub finite: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub ring: AnyRing,
    /// Set when the ring was built from a named family.
    pub origin: Option<FamilySpec>,
    pub expected: Tags,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

fn tags(centrally_essential: bool, commutative: bool, finite: bool) -> Tags {
    Tags {
        centrally_essential,
        commutative,
        finite,
    }
}

impl CorpusEntry {
    pub fn from_family(spec: FamilySpec, expected: Tags) -> Result<Self> {
        Ok(CorpusEntry {
            ring: spec.build()?,
            origin: Some(spec),
            expected,
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryIn {
    family: Option<String>,
    n: Option<usize>,
    scalar: Option<String>,
    file: Option<String>,
    expect: Tags,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusIn {
    rings: Vec<EntryIn>,
}

impl Corpus {
    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.ring.name().to_string()).collect()
    }

    /// The built-in corpus: the generalized matrix rings over `Z` for
    /// orders 7 to 12 and their small quotients, Grassmann algebras, matrix
    /// rings as negative controls, and commutative positive controls.
    pub fn default_corpus() -> Result<Self> {
        use Family::*;
        use ScalarSpec::{Integer as Z, IntegerMod as Zm, Rational as Q};
        let mut specs = Vec::new();
        for n in 7..=12 {
            specs.push((CeMatrix, n, Z, tags(true, false, false)));
        }
        specs.extend([
            (CeMatrix, 7, Q, tags(true, false, false)),
            (CeMatrix, 7, Zm(2), tags(true, false, true)),
            (CeMatrix, 7, Zm(3), tags(true, false, true)),
            (Grassmann, 3, Zm(3), tags(true, false, true)),
            (Grassmann, 3, Zm(2), tags(true, true, true)),
            (FullMatrix, 2, Zm(2), tags(false, false, true)),
            (FullMatrix, 2, Zm(3), tags(false, false, true)),
            (Triangular, 2, Zm(2), tags(false, false, true)),
            (Triangular, 2, Zm(3), tags(false, false, true)),
            (Truncated, 3, Z, tags(true, true, false)),
            (Cyclic, 2, Z, tags(true, true, false)),
            (Truncated, 3, Zm(2), tags(true, true, true)),
            (Truncated, 2, Zm(3), tags(true, true, true)),
            (Product, 2, Zm(2), tags(true, true, true)),
            (Cyclic, 3, Zm(2), tags(true, true, true)),
        ]);
        let entries = specs
            .into_iter()
            .map(|(f, n, s, t)| CorpusEntry::from_family(FamilySpec::new(f, n, s), t))
            .collect::<Result<_>>()?;
        Ok(Corpus { entries })
    }

    /// Reads `{"rings": [...]}` where each entry is either
    /// `{"family", "n", "scalar", "expect"}` or `{"file", "expect"}`; file
    /// paths are resolved against `base`.
    pub fn from_json(text: &str, base: &Path) -> Result<Self> {
        let raw: CorpusIn = serde_json::from_str(text)?;
        let mut entries = Vec::new();
        for (k, e) in raw.rings.into_iter().enumerate() {
            let field = |name: &str, message: String| Error::Format {
                field: format!("rings[{k}].{name}"),
                message,
            };
            let entry = match (&e.family, &e.file) {
                (Some(fam), None) => {
                    let family = Family::parse(fam).ok_or_else(|| field("family", format!("unknown family {fam:?}")))?;
                    let n = e.n.ok_or_else(|| field("n", "missing".into()))?;
                    let scalar: ScalarSpec = e
                        .scalar
                        .as_deref()
                        .unwrap_or("int")
                        .parse()
                        .map_err(|err: Error| field("scalar", err.to_string()))?;
                    CorpusEntry::from_family(FamilySpec::new(family, n, scalar), e.expect)?
                }
                (None, Some(file)) => {
                    let text = std::fs::read_to_string(base.join(file))?;
                    CorpusEntry {
                        ring: from_json(&text)?,
                        origin: None,
                        expected: e.expect,
                    }
                }
                _ => return Err(field("family", "give exactly one of family or file".into())),
            };
            entries.push(entry);
        }
        Ok(Corpus { entries })
    }
}
