//! Finite presentations `⟨a_1, …, a_n | R_1, …, R_m⟩` and their presentation
//! complexes.

mod complex;
mod parse;
mod schreier;
mod word;

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};

pub use complex::{complex_summary, normalize_presentation, ComplexSummary, Normalization};
pub use parse::{parse_presentation, MAX_EXPONENT, MAX_TOTAL_LETTERS};
pub use schreier::{reidemeister_schreier, SchreierRewrite};
pub use word::{fox_derivative, FoxTerm, FreeWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<FreeWord>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let mut seen = HashSet::new();
        for name in &generator_names {
            if !is_identifier(name) {
                return Err(Error::Inconsistent(format!("`{name}` is not an identifier")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let n = generator_names.len();
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator().filter(|&g| g >= n) {
                return Err(Error::Inconsistent(format!(
                    "relator {i} uses generator index {g} but there are only {n} generators"
                )));
            }
        }
        Ok(Presentation {
            generator_names,
            relators,
        })
    }

    /// Generators named `x1, …, xn`.
    pub fn with_default_names(n: usize, relators: Vec<FreeWord>) -> Result<Self> {
        Presentation::new((1..=n).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn n_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// `n - m` for this presentation (a witness, not the group invariant).
    pub fn deficiency(&self) -> i64 {
        self.generator_names.len() as i64 - self.relators.len() as i64
    }

    /// Text form accepted by [`parse_presentation`].
    pub fn render(&self) -> String {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.render(&self.generator_names))
            .collect();
        format!("< {} | {} >", self.generator_names.join(", "), rels.join(", "))
    }
}
