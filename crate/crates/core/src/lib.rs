//! Tournaments: modular decomposition, lexicographic constructions, group
//! tournaments and finite truncations of inverse systems.

pub mod census;
pub mod classifier;
pub mod construct;
pub mod error;
pub mod format;
pub mod grouptour;
pub mod iso;
pub mod modular;
pub mod profinite;
pub mod quotient;
pub mod tournament;
pub mod vertex_set;

pub use classifier::{certificate, classifier, reassemble, ClassifierTree};
pub use error::{Error, Result};
pub use modular::BaseKind;
pub use quotient::QuotientMap;
pub use tournament::Tournament;
pub use vertex_set::VertexSet;
