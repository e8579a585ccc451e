//! Input documents: rings, endomorphisms and ideals, plus the table form
//! used when emitting rings.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use hyperring_core::ideals::generate_hyperideal;
use hyperring_core::ring::{validate_structure, RawRing};
use hyperring_core::{make_zn_multiplier_ring, ElementSet, Endomorphism, HyperRing, Identity};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    ZnMultiplier {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        modulus: usize,
        multipliers: Vec<usize>,
    },
    Table {
        name: String,
        order: usize,
        zero: usize,
        add: Vec<Vec<usize>>,
        neg: Vec<usize>,
        hyp: Vec<Vec<ElementSet>>,
        #[serde(default)]
        identity: Option<Identity>,
    },
}

impl RingSpec {
    /// Table form of a validated ring.
    pub fn table(ring: &HyperRing) -> Self {
        let raw = ring.to_raw();
        RingSpec::Table {
            name: raw.name,
            order: raw.order,
            zero: raw.zero,
            add: raw.add,
            neg: raw.neg,
            hyp: raw.hyp,
            identity: raw.identity,
        }
    }

    pub fn build(&self) -> Result<HyperRing, CliError> {
        match self {
            RingSpec::ZnMultiplier {
                name,
                modulus,
                multipliers,
            } => {
                let ring = make_zn_multiplier_ring(*modulus, multipliers)?;
                Ok(match name {
                    Some(n) => ring.with_name(n.clone()),
                    None => ring,
                })
            }
            RingSpec::Table {
                name,
                order,
                zero,
                add,
                neg,
                hyp,
                identity,
            } => Ok(validate_structure(&RawRing {
                name: name.clone(),
                order: *order,
                zero: *zero,
                add: add.clone(),
                neg: neg.clone(),
                hyp: hyp.clone(),
                identity: *identity,
            })?),
        }
    }

    /// Same layout as the report records: one top-level field per line,
    /// one table row per line.
    pub fn emit(&self) -> String {
        let value = serde_json::to_value(self).expect("ring specs serialize");
        crate::output::render_json(&value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EndoSpec {
    Scale { factor: usize },
    Map { image: Vec<usize> },
    Identity,
    Zero,
}

impl EndoSpec {
    pub fn build(&self, ring: &Arc<HyperRing>) -> Result<Endomorphism, CliError> {
        let map = match self {
            EndoSpec::Scale { factor } => {
                return Ok(Endomorphism::multiple(ring.clone(), *factor)?)
            }
            EndoSpec::Identity => return Ok(Endomorphism::identity(ring.clone())),
            EndoSpec::Zero => vec![ring.zero(); ring.order()],
            EndoSpec::Map { image } => image.clone(),
        };
        if map.len() != ring.order() {
            return Err(CliError::Parse(format!(
                "map has {} entries, ring has order {}",
                map.len(),
                ring.order()
            )));
        }
        if let Some(x) = map.iter().find(|&&x| x >= ring.order()) {
            return Err(CliError::Parse(format!("map value {x} outside carrier")));
        }
        Ok(Endomorphism::endo(ring.clone(), map)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    Elements(Vec<usize>),
    Generators(Vec<usize>),
}

impl IdealSpec {
    /// The described subset. Generators are closed up to a hyperideal;
    /// explicit elements are taken as given.
    pub fn build(&self, ring: &Arc<HyperRing>) -> Result<ElementSet, CliError> {
        let (IdealSpec::Elements(v) | IdealSpec::Generators(v)) = self;
        if let Some(x) = v.iter().find(|&&x| x >= ring.order()) {
            return Err(CliError::Parse(format!("element {x} outside carrier")));
        }
        let set: ElementSet = v.iter().copied().collect();
        match self {
            IdealSpec::Elements(_) => Ok(set),
            IdealSpec::Generators(_) => Ok(generate_hyperideal(ring, &set)?.elements().clone()),
        }
    }
}

/// `{"elements": [..]}` or `{"generators": [..]}`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealDoc {
    elements: Option<Vec<usize>>,
    generators: Option<Vec<usize>>,
}

fn read_source(arg: &str) -> Result<String, CliError> {
    fs::read_to_string(Path::new(arg)).map_err(|e| CliError::Parse(format!("{arg}: {e}")))
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

fn numbers(list: &str) -> Result<Vec<usize>, CliError> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("not a number: {t:?}")))
        })
        .collect()
}

/// A file path, inline JSON, or `zn:N:a,b,..`.
pub fn parse_ring(arg: &str) -> Result<RingSpec, CliError> {
    if let Some(rest) = arg.strip_prefix("zn:") {
        let (n, a) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Parse(format!("expected zn:N:A, got {arg:?}")))?;
        let modulus = n
            .parse()
            .map_err(|_| CliError::Parse(format!("bad modulus {n:?}")))?;
        return Ok(RingSpec::ZnMultiplier {
            name: None,
            modulus,
            multipliers: numbers(a)?,
        });
    }
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_source(arg)?
    };
    from_json(&text, "ring")
}

/// Inline JSON, `scale:K`, `map:a,b,..`, `id`, `zero` or a file path.
pub fn parse_endo(arg: &str) -> Result<EndoSpec, CliError> {
    if let Some(k) = arg.strip_prefix("scale:") {
        let factor = k
            .parse()
            .map_err(|_| CliError::Parse(format!("bad factor {k:?}")))?;
        return Ok(EndoSpec::Scale { factor });
    }
    if let Some(list) = arg.strip_prefix("map:") {
        return Ok(EndoSpec::Map {
            image: numbers(list)?,
        });
    }
    match arg {
        "id" => return Ok(EndoSpec::Identity),
        "zero" => return Ok(EndoSpec::Zero),
        _ => {}
    }
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_source(arg)?
    };
    from_json(&text, "endomorphism")
}

/// Inline JSON, `gen:a,b,..`, a bare element list `a,b,..` or a file path.
pub fn parse_ideal(arg: &str) -> Result<IdealSpec, CliError> {
    if let Some(list) = arg.strip_prefix("gen:") {
        return Ok(IdealSpec::Generators(numbers(list)?));
    }
    if arg
        .chars()
        .all(|c| c.is_ascii_digit() || c == ',' || c == ' ')
    {
        return Ok(IdealSpec::Elements(numbers(arg)?));
    }
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_source(arg)?
    };
    let doc: IdealDoc = from_json(&text, "ideal")?;
    match (doc.elements, doc.generators) {
        (Some(e), None) => Ok(IdealSpec::Elements(e)),
        (None, Some(g)) => Ok(IdealSpec::Generators(g)),
        _ => Err(CliError::Parse(
            "ideal needs exactly one of `elements` or `generators`".into(),
        )),
    }
}

/// Rings plus factor pairs for products.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    #[serde(default)]
    pub rings: Vec<RingSpec>,
    #[serde(default)]
    pub products: Vec<(RingSpec, RingSpec)>,
}

/// A blank file is an empty corpus.
pub fn parse_corpus(path: &str) -> Result<CorpusSpec, CliError> {
    let text = read_source(path)?;
    if text.trim().is_empty() {
        return Ok(CorpusSpec::default());
    }
    from_json(&text, "corpus")
}
