//! Named diagrams: `name<TAB>PD[...]` per line, `#` comments.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use crate::diagram::Diagram;
use crate::error::{DiagramError, SkeinError};
use crate::skein::SkeinEngine;

const SHIPPED: &str = include_str!("../data/census.tsv");

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("cannot read census file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected `name<TAB>PD[...]`")]
    Format { line: usize },
    #[error("line {line}: duplicate entry `{name}`")]
    Duplicate { line: usize, name: String },
    #[error("line {line}: invalid entry `{name}`")]
    Invalid { line: usize, name: String, source: DiagramError },
    #[error("entry `{name}`: Conway polynomial has constant term {constant}, expected 1")]
    NotAKnotInvariant { name: String, constant: i64 },
    #[error("cannot evaluate entry `{name}`")]
    Skein { name: String, source: SkeinError },
}

/// Ordered name -> diagram table.
#[derive(Clone, Debug, Default)]
pub struct Census {
    entries: BTreeMap<String, Diagram>,
    order: Vec<String>,
}

impl Census {
    /// The census compiled into the crate.
    pub fn shipped() -> Census {
        Census::parse(SHIPPED).expect("shipped census is valid")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Census, CensusError> {
        Census::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Census, CensusError> {
        let mut census = Census::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (name, code) = trimmed.split_once('\t').ok_or(CensusError::Format { line })?;
            let name = name.trim();
            if name.is_empty() {
                return Err(CensusError::Format { line });
            }
            let d: Diagram =
                code.parse().map_err(|source| CensusError::Invalid { line, name: name.to_string(), source })?;
            census.insert_at(line, name, d)?;
        }
        Ok(census)
    }

    fn insert_at(&mut self, line: usize, name: &str, d: Diagram) -> Result<(), CensusError> {
        if self.entries.contains_key(name) {
            return Err(CensusError::Duplicate { line, name: name.to_string() });
        }
        self.entries.insert(name.to_string(), d);
        self.order.push(name.to_string());
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Diagram> {
        self.entries.get(name)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Entries in file order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Diagram)> + '_ {
        self.order.iter().map(|n| (n.as_str(), &self.entries[n]))
    }

    /// Checks that every knot has Conway constant term 1.
    pub fn validate(&self, engine: &SkeinEngine) -> Result<(), CensusError> {
        for (name, d) in self.iter().filter(|(_, d)| d.is_knot()) {
            let c = engine.conway(d).map_err(|source| CensusError::Skein { name: name.to_string(), source })?;
            let constant = c.coefficient_i64(0, 0);
            if constant != 1 {
                return Err(CensusError::NotAKnotInvariant { name: name.to_string(), constant });
            }
        }
        Ok(())
    }
}
