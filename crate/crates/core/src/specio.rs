//! JSON form of a cover: a group (generators or a Weyl type), the base
//! genus, and branch-point counts keyed by an inertia generator.
//!
//! ```json
//! { "group": {"generators": ["(0 1)", "(0 1 2)"]},
//!   "base_genus": 0,
//!   "ramification": [{"inertia_generator": "(0 1)", "count": 4},
//!                    {"inertia_generator": "(0 1 2)", "count": 1}] }
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::GaloisGroup;
use crate::perm::Permutation;
use crate::rhprym::{CoverSpec, RamificationSpec};
use crate::weyl::{WeylGroup, WeylType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSource {
    Generators(Vec<String>),
    Weyl {
        #[serde(rename = "type")]
        kind: WeylType,
        rank: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamificationEntry {
    pub inertia_generator: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub group: GroupSource,
    pub base_genus: u64,
    #[serde(default)]
    pub ramification: Vec<RamificationEntry>,
}

/// A group built from a [`GroupSource`], keeping the Weyl metadata when
/// there is one.
#[derive(Debug, Clone)]
pub enum ResolvedGroup {
    Plain(Arc<GaloisGroup>),
    Weyl(Box<WeylGroup>),
}

impl ResolvedGroup {
    pub fn galois(&self) -> &Arc<GaloisGroup> {
        match self {
            Self::Plain(g) => g,
            Self::Weyl(w) => w.galois(),
        }
    }

    pub fn weyl(&self) -> Option<&WeylGroup> {
        match self {
            Self::Plain(_) => None,
            Self::Weyl(w) => Some(w),
        }
    }
}

impl GroupSource {
    pub fn resolve(&self, cap: usize) -> Result<ResolvedGroup> {
        match self {
            Self::Generators(gens) => {
                let gens = gens
                    .iter()
                    .map(|s| s.parse::<Permutation>())
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ResolvedGroup::Plain(Arc::new(GaloisGroup::from_generators(&gens, cap)?)))
            }
            Self::Weyl { kind, rank } => Ok(ResolvedGroup::Weyl(Box::new(WeylGroup::new(*kind, *rank, cap)?))),
        }
    }
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec documents serialize")
    }

    /// Resolves every inertia generator to its cyclic class; repeated
    /// classes add up.
    pub fn to_spec(&self, group: &Arc<GaloisGroup>) -> Result<CoverSpec> {
        let mut ram = RamificationSpec::new();
        for entry in &self.ramification {
            let perm: Permutation = entry.inertia_generator.parse()?;
            ram.add(group.cyclic_class_of(&perm)?, entry.count);
        }
        CoverSpec::new(group.clone(), self.base_genus, ram)
    }

    /// Writes `spec` back out, naming each class by its chosen generator.
    pub fn from_spec(group: GroupSource, spec: &CoverSpec) -> Self {
        let g = spec.group();
        let ramification = spec
            .ramification()
            .iter()
            .filter(|&(_, count)| count > 0)
            .map(|(k, count)| RamificationEntry {
                inertia_generator: g.group().element(g.cyclic_classes()[k].generator).to_string(),
                count,
            })
            .collect();
        Self {
            group,
            base_genus: spec.base_genus(),
            ramification,
        }
    }
}
