//! JSON file formats for groups, multipliers and exported irreps.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cocycle::Multiplier;
use crate::decompose::{IrrepSet, ManifestEntry};
use crate::group::FiniteGroup;
use crate::rep::RepJson;
use crate::Error;

/// `{"cayley": [[...]]}` or `{"permutations": [[...]]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cayley: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<Vec<usize>>>,
}

/// `{"root_order": N, "exponents": [[...]]}`, `α(x,y) = exp(2πi a[x][y] / N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub root_order: u64,
    pub exponents: Vec<Vec<i64>>,
}

impl GroupFile {
    pub fn from_cayley(g: &FiniteGroup) -> Self {
        Self {
            cayley: Some(g.cayley_table()),
            permutations: None,
        }
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup, Error> {
        match (&self.cayley, &self.permutations) {
            (Some(table), None) => {
                if table.len() > max_order {
                    return Err(Error::GroupTooLarge {
                        order: table.len(),
                        max: max_order,
                    });
                }
                Ok(FiniteGroup::from_cayley_table(table)?)
            }
            (None, Some(gens)) => Ok(FiniteGroup::from_permutation_generators_capped(
                gens, max_order,
            )?),
            _ => Err(Error::Parse(
                "group file needs exactly one of \"cayley\" or \"permutations\"".into(),
            )),
        }
    }
}

impl CocycleFile {
    pub fn from_multiplier(m: &Multiplier) -> Self {
        Self {
            root_order: m.root_order(),
            exponents: m
                .exponent_table()
                .into_iter()
                .map(|row| row.into_iter().map(|a| a as i64).collect())
                .collect(),
        }
    }

    pub fn build(&self, group: Arc<FiniteGroup>) -> Result<Multiplier, Error> {
        Ok(Multiplier::new(group, self.root_order, &self.exponents)?)
    }
}

pub fn parse_group(text: &str, max_order: usize) -> Result<FiniteGroup, Error> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.build(max_order)
}

pub fn parse_cocycle(text: &str, group: Arc<FiniteGroup>) -> Result<Multiplier, Error> {
    let file: CocycleFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.build(group)
}

/// Irrep export: manifest plus one matrix set per irrep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrepsFile {
    pub manifest: Vec<ManifestEntry>,
    pub irreps: Vec<RepJson>,
}

impl From<&IrrepSet> for IrrepsFile {
    fn from(set: &IrrepSet) -> Self {
        Self {
            manifest: set.manifest(),
            irreps: set.irreps.iter().map(|e| e.rep.to_json()).collect(),
        }
    }
}
