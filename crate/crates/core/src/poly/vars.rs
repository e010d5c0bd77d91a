use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered, duplicate-free list of variable names.
///
/// The order is fixed at creation and decides the monomial order. Tables are
/// cheap to clone and compare equal when their names agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable(Arc<[String]>);

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (k, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(PolyError::BadVariableName(n.clone()));
            }
            if !n.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
                return Err(PolyError::BadVariableName(n.clone()));
            }
            if names[..k].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarTable(names.into()))
    }

    /// Table from names known to be valid; panics otherwise.
    pub fn of(names: &[&str]) -> Self {
        Self::new(names).expect("valid variable table")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, k: usize) -> &str {
        &self.0[k]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarTable{:?}", &self.0[..])
    }
}
