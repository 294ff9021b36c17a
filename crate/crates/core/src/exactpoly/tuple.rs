use super::poly::Poly;
use serde::{Deserialize, Serialize};
use std::fmt;

/// An `r`-tuple of polynomials; the rank is the length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyTuple {
    entries: Vec<Poly>,
}

impl PolyTuple {
    pub fn new(entries: Vec<Poly>) -> Self {
        PolyTuple { entries }
    }

    /// `(1, …, 1)` of length `rank`.
    pub fn ones(rank: usize) -> Self {
        PolyTuple::new(vec![Poly::one(); rank])
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly> {
        self.entries
    }

    /// Entry `i` in 1-based indexing, with `y_0 = y_{r+1} = 1`.
    pub fn get(&self, i: usize) -> Poly {
        if i == 0 || i > self.entries.len() {
            Poly::one()
        } else {
            self.entries[i - 1].clone()
        }
    }

    /// Replaces entry `i` (1-based).
    pub fn with_entry(&self, i: usize, p: Poly) -> Self {
        let mut entries = self.entries.clone();
        entries[i - 1] = p;
        PolyTuple { entries }
    }

    /// Degrees of the entries; `None` marks a zero entry.
    pub fn degrees(&self) -> Vec<Option<usize>> {
        self.entries.iter().map(Poly::degree).collect()
    }
}

impl fmt::Display for PolyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
