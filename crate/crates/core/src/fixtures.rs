//! Fixture files: group generators with character tables, and linear-section
//! scenarios. One TOML layout with a `schema_version` header throughout.
//!
//! The shipped fixtures are compiled in; a directory given on the command
//! line takes precedence and is read from disk.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

const EMBEDDED: &[(&str, &str)] = &[
    ("a5", include_str!("../fixtures/a5.toml")),
    ("c3wr", include_str!("../fixtures/c3wr.toml")),
    ("c9c6", include_str!("../fixtures/c9c6.toml")),
    ("dic12", include_str!("../fixtures/dic12.toml")),
    ("s3", include_str!("../fixtures/s3.toml")),
    ("s5", include_str!("../fixtures/s5.toml")),
    ("scenarios/a5_quintic", include_str!("../fixtures/scenarios/a5_quintic.toml")),
    ("scenarios/c3wr_fourfold", include_str!("../fixtures/scenarios/c3wr_fourfold.toml")),
    ("scenarios/c9c6_fourfold", include_str!("../fixtures/scenarios/c9c6_fourfold.toml")),
    ("scenarios/s5_dp5", include_str!("../fixtures/scenarios/s5_dp5.toml")),
];

#[derive(Clone, Debug, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub perm: Option<String>,
    pub matrix: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ClassSpec {
    pub rep: String,
    pub size: usize,
    pub order: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CharacterSpec {
    pub label: String,
    pub values: Vec<String>,
}

/// A group given by explicit generators, plus its character table.
#[derive(Clone, Debug, Deserialize)]
pub struct GroupFixture {
    pub schema_version: u32,
    pub name: String,
    /// Isomorphism-type label; metadata only.
    pub label: String,
    pub kind: String,
    pub degree: Option<usize>,
    pub expected_order: usize,
    pub conductor: u32,
    #[serde(default)]
    pub notes: String,
    pub generators: Vec<GeneratorSpec>,
    pub classes: Vec<ClassSpec>,
    pub characters: Vec<CharacterSpec>,
}

/// A linear-section scenario: a representation `W` from a fixture table and
/// a choice of summands of `Wedge^2 W`.
#[derive(Clone, Debug, Deserialize)]
pub struct ScenarioFixture {
    pub schema_version: u32,
    pub name: String,
    pub group: String,
    pub representation: String,
    pub chosen: Vec<String>,
    pub expect: String,
    pub expect_dim: Option<i64>,
}

/// Text of one fixture with its SHA-256 digest.
#[derive(Clone, Debug)]
pub struct FixtureText {
    pub name: String,
    pub text: String,
    pub digest: String,
}

pub fn digest_of(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Where fixtures are read from.
#[derive(Clone, Debug, Default)]
pub struct FixtureSource {
    dir: Option<PathBuf>,
}

impl FixtureSource {
    pub fn embedded() -> Self {
        FixtureSource { dir: None }
    }

    pub fn directory(dir: impl AsRef<Path>) -> Self {
        FixtureSource { dir: Some(dir.as_ref().to_path_buf()) }
    }

    /// Loads `name` (e.g. `s5` or `scenarios/s5_dp5`), without extension.
    pub fn load(&self, name: &str) -> Result<FixtureText> {
        let text = match &self.dir {
            Some(dir) => {
                let path = dir.join(format!("{name}.toml"));
                std::fs::read_to_string(&path)
                    .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?
            }
            None => EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, t)| t.to_string())
                .ok_or_else(|| Error::Fixture(format!("no embedded fixture named {name:?}")))?,
        };
        Ok(FixtureText { name: name.to_string(), digest: digest_of(&text), text })
    }

    /// Names of the group fixtures available from this source.
    pub fn group_names(&self) -> Result<Vec<String>> {
        self.names_in("")
    }

    pub fn scenario_names(&self) -> Result<Vec<String>> {
        self.names_in("scenarios")
    }

    fn names_in(&self, sub: &str) -> Result<Vec<String>> {
        let mut names: Vec<String> = match &self.dir {
            Some(dir) => {
                let d = if sub.is_empty() { dir.clone() } else { dir.join(sub) };
                let mut out = Vec::new();
                for entry in std::fs::read_dir(&d)
                    .map_err(|e| Error::Fixture(format!("{}: {e}", d.display())))?
                {
                    let p = entry?.path();
                    if p.extension().is_some_and(|x| x == "toml") {
                        let stem = p.file_stem().unwrap().to_string_lossy().to_string();
                        out.push(if sub.is_empty() { stem } else { format!("{sub}/{stem}") });
                    }
                }
                out
            }
            None => EMBEDDED
                .iter()
                .map(|(n, _)| n.to_string())
                .filter(|n| match n.rsplit_once('/') {
                    Some((dir, _)) => dir == sub,
                    None => sub.is_empty(),
                })
                .collect(),
        };
        names.sort();
        Ok(names)
    }

    pub fn group(&self, name: &str) -> Result<(GroupFixture, FixtureText)> {
        let text = self.load(name)?;
        let fx: GroupFixture = parse_versioned(&text)?;
        Ok((fx, text))
    }

    pub fn scenario(&self, name: &str) -> Result<(ScenarioFixture, FixtureText)> {
        let text = self.load(name)?;
        let fx: ScenarioFixture = parse_versioned(&text)?;
        Ok((fx, text))
    }
}

/// Parses a fixture from its text, checking the schema version.
pub fn parse_versioned<T: for<'de> Deserialize<'de>>(text: &FixtureText) -> Result<T> {
    #[derive(Deserialize)]
    struct Header {
        schema_version: u32,
    }
    let header: Header = toml::from_str(&text.text)
        .map_err(|e| Error::Fixture(format!("{}: {e}", text.name)))?;
    if header.schema_version != SCHEMA_VERSION {
        return Err(Error::Fixture(format!(
            "{}: unsupported schema version {}",
            text.name, header.schema_version
        )));
    }
    toml::from_str(&text.text).map_err(|e| Error::Fixture(format!("{}: {e}", text.name)))
}

/// Records which fixtures a computation consumed, by digest.
#[derive(Clone, Debug, Default)]
pub struct Provenance {
    digests: BTreeMap<String, String>,
}

impl Provenance {
    pub fn record(&mut self, text: &FixtureText) {
        self.digests.insert(text.name.clone(), text.digest.clone());
    }

    pub fn digests(&self) -> &BTreeMap<String, String> {
        &self.digests
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        let src = FixtureSource::embedded();
        let groups = src.group_names().unwrap();
        assert_eq!(groups, vec!["a5", "c3wr", "c9c6", "dic12", "s3", "s5"]);
        for g in &groups {
            let (fx, text) = src.group(g).unwrap();
            assert_eq!(fx.classes.len(), fx.characters.len());
            assert_eq!(text.digest.len(), 64);
        }
        for s in src.scenario_names().unwrap() {
            src.scenario(&s).unwrap();
        }
    }

    #[test]
    fn schema_version_is_checked() {
        let text = FixtureText {
            name: "x".into(),
            text: "schema_version = 2\n".into(),
            digest: String::new(),
        };
        let r: Result<ScenarioFixture> = parse_versioned(&text);
        assert!(matches!(r, Err(Error::Fixture(_))));
    }

    #[test]
    fn missing_fixture() {
        assert!(FixtureSource::embedded().load("nope").is_err());
        assert!(FixtureSource::directory("/nonexistent").load("s5").is_err());
    }
}
