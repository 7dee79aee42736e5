//! Representation theory of `Sp(2g)`: weights, characters, irreducible
//! characters by Freudenthal's formula, decomposition by peeling, and the
//! Chevalley action on explicit modules.

mod action;
mod irreducible;
mod weight;

pub use action::{
    submodule_decomposition, weight_components, ActionTable, SpGenerator, SpModule, Submodule,
};
pub use irreducible::{decompose, dominant_multiplicities, irreducible_character, weyl_dim};
pub use weight::{Character, Decomposition, Summand, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpRepError {
    #[error("partition has {parts} parts but the rank is {g}")]
    TooManyParts { parts: usize, g: usize },
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<u32>),
    #[error("not a module character: {0}")]
    NotACharacter(String),
    #[error("module {0} has no registered sp action")]
    UnregisteredModule(String),
}
