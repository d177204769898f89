//! Invariant engines behind a common trait, selectable by name.

use crate::bracket::{normalized_bracket_with, stuck_bracket_with, BracketConfig};
use crate::diagram::StuckDiagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::skein::{rigid_homflypt_with, SkeinConfig};

pub trait Invariant: Send + Sync {
    fn name(&self) -> &'static str;
    fn evaluate(&self, d: &StuckDiagram) -> Result<LaurentPoly>;
}

pub struct RigidHomflypt(pub SkeinConfig);

impl Invariant for RigidHomflypt {
    fn name(&self) -> &'static str {
        "homflypt"
    }

    fn evaluate(&self, d: &StuckDiagram) -> Result<LaurentPoly> {
        rigid_homflypt_with(d, &self.0)
    }
}

pub struct StuckBracket(pub BracketConfig);

impl Invariant for StuckBracket {
    fn name(&self) -> &'static str {
        "bracket"
    }

    fn evaluate(&self, d: &StuckDiagram) -> Result<LaurentPoly> {
        stuck_bracket_with(d, &self.0)
    }
}

pub struct NormalizedBracket(pub BracketConfig);

impl Invariant for NormalizedBracket {
    fn name(&self) -> &'static str {
        "bracket-normalized"
    }

    fn evaluate(&self, d: &StuckDiagram) -> Result<LaurentPoly> {
        normalized_bracket_with(d, &self.0)
    }
}

pub struct Registry {
    engines: Vec<Box<dyn Invariant>>,
}

impl Registry {
    pub fn new() -> Self {
        Registry { engines: Vec::new() }
    }

    /// All built-in engines with the given limits.
    pub fn standard(skein: SkeinConfig, bracket: BracketConfig) -> Self {
        let mut r = Registry::new();
        r.register(Box::new(RigidHomflypt(skein)));
        r.register(Box::new(StuckBracket(bracket.clone())));
        r.register(Box::new(NormalizedBracket(bracket)));
        r
    }

    /// Adds an engine, replacing any with the same name.
    pub fn register(&mut self, engine: Box<dyn Invariant>) {
        self.engines.retain(|e| e.name() != engine.name());
        self.engines.push(engine);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Invariant> {
        self.engines
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownEntry(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.engines.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Invariant> {
        self.engines.iter().map(|e| e.as_ref())
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::standard(SkeinConfig::default(), BracketConfig::default())
    }
}
