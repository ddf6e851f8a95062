pub mod chartable;
pub mod error;
pub mod exactla;
pub mod galois;
pub mod monodromy;
pub mod perm;
pub mod permgroup;
pub mod rhprym;
pub mod specio;
pub mod verify;
pub mod weyl;

pub use chartable::{CharacterTable, FixedDimMatrix};
pub use error::{Error, Result};
pub use galois::GaloisGroup;
pub use monodromy::{BranchTuple, Oracle};
pub use perm::Permutation;
pub use permgroup::PermGroup;
pub use rhprym::{CoverSpec, Diagnostic, DimensionReport, RamificationSpec};
pub use specio::{GroupSource, SpecDocument};
pub use weyl::{ReflectionSplit, WeylGroup, WeylType};
