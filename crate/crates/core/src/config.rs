//! Family configuration files.
//!
//! A file lists the groups of a finite family in order:
//!
//! ```json
//! {"groups": [{"name": "integers"}, {"name": "free", "params": {"rank": 2}}]}
//! ```
//!
//! The same structure is accepted as TOML (`[[groups]]` tables). The format
//! is chosen by file extension, with JSON as the fallback.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{make_zoo_group, Family};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupEntry {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyConfig {
    pub groups: Vec<GroupEntry>,
}

impl FamilyConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_toml(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        match path.extension().and_then(|x| x.to_str()) {
            Some("toml") => Self::from_toml(&text),
            _ => Self::from_json(&text),
        }
    }

    pub fn build(&self) -> Result<Family> {
        if self.groups.is_empty() {
            return Err(Error::Config("a family needs at least one group".into()));
        }
        let groups = self
            .groups
            .iter()
            .map(|g| make_zoo_group(&g.name, &g.params))
            .collect::<Result<Vec<_>>>()?;
        Ok(Family::finite(groups))
    }
}

pub fn load_family(path: &Path) -> Result<Family> {
    FamilyConfig::load(path)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_toml_agree() {
        let j = FamilyConfig::from_json(
            r#"{"groups": [{"name": "Z"}, {"name": "free", "params": {"rank": 2}}]}"#,
        )
        .unwrap();
        let t = FamilyConfig::from_toml(
            "[[groups]]\nname = \"Z\"\n\n[[groups]]\nname = \"free\"\nparams = { rank = 2 }\n",
        )
        .unwrap();
        assert_eq!(j, t);
        let fam = j.build().unwrap();
        assert_eq!(fam.generator_total(), Some(3));
    }

    #[test]
    fn rejects_bad_input() {
        let unknown = FamilyConfig::from_json(r#"{"groups": [{"name": "monster"}]}"#).unwrap();
        assert!(matches!(unknown.build(), Err(Error::UnknownGroup(_))));
        assert!(FamilyConfig::from_json(r#"{"groups": [{"nme": "Z"}]}"#).is_err());
        assert!(FamilyConfig::from_json(r#"{"groups": []}"#)
            .unwrap()
            .build()
            .is_err());
        let bad = FamilyConfig::from_json(r#"{"groups": [{"name": "free"}]}"#).unwrap();
        assert!(matches!(bad.build(), Err(Error::InvalidParams { .. })));
    }
}
