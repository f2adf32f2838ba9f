//! Shadows: diagrams with over/under and sign information erased.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::diagram::{rotate_to_least, LinkDiagram};

/// The underlying curve of a diagram, as cyclic sequences of crossing ids.
///
/// The stored rotation follows the diagram it came from, so move sites that
/// index into the diagram also index into its universe. Equality and
/// hashing ignore rotation.
#[derive(Clone, Debug)]
pub struct Universe {
    components: Vec<Vec<u32>>,
}

impl Universe {
    pub fn from_components(components: Vec<Vec<u32>>) -> Self {
        Universe { components }
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Same universe with each component at its least rotation.
    pub fn canonical(&self) -> Universe {
        Universe {
            components: self.components.iter().cloned().map(rotate_to_least).collect(),
        }
    }
}

/// Erases role and sign from every pass.
pub fn universe(d: &LinkDiagram) -> Universe {
    Universe {
        components: d
            .components()
            .iter()
            .map(|c| c.iter().map(|p| p.crossing).collect())
            .collect(),
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.canonical().components == other.canonical().components
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().components.hash(state);
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            if comp.is_empty() {
                f.write_str("@")?;
            }
            for (j, id) in comp.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{id}")?;
            }
        }
        Ok(())
    }
}
