//! Variable context: the ordered list of variable names shared by every
//! monomial and ideal in one computation.

use crate::error::IdealError;
use crate::monomial::Monomial;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    /// Builds a context from ordered variable names. Names must be distinct,
    /// nonempty identifiers so that rendered ideals parse back unchanged.
    pub fn new<I, S>(names: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(IdealError::Parameter("context needs at least one variable".into()));
        }
        for name in &names {
            if !valid_name(name) {
                return Err(IdealError::Parameter(format!("invalid variable name {name:?}")));
            }
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(IdealError::Parameter(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Self { names })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renders a monomial as `x^2*y`, with `1` for the unit monomial.
    pub fn render(&self, monomial: &Monomial) -> String {
        debug_assert_eq!(monomial.arity(), self.arity());
        let mut parts = Vec::new();
        for (i, &e) in monomial.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
