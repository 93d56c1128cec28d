use std::collections::HashSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::matcher::{compile_rule, dedup_key, Match, Matcher};
use super::pattern::PatternSpec;
use super::term::Term;
use crate::corpus_io::Sentence;

const DEFAULT_CATALOG: &str = include_str!("../../data/default_catalog.tsv");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: expected 5 or 6 tab-separated fields, found {found}")]
    BadRecord { line: usize, found: usize },
    #[error("rule {rule}: unknown {field} {value:?}")]
    UnknownToken {
        rule: String,
        field: &'static str,
        value: String,
    },
    #[error("rule {rule}: class {class} does not belong to family {family}")]
    ClassFamilyMismatch {
        rule: String,
        class: RuleClass,
        family: Family,
    },
    #[error("rule {rule}: {reason}")]
    BadPattern { rule: String, reason: String },
    #[error("duplicate rule id {0:?}")]
    DuplicateId(String),
    #[error("unknown rule id {0:?}")]
    UnknownRule(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleKind {
    TopDown,
    BottomUp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Definition,
    Hyponym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleClass {
    DefinitionStarting,
    Definitor,
    DefinitorFollowing,
    GenusStructure,
    CompleteDefinition,
    HyponymCore,
    HyponymStructure,
    SynonymousStructure,
}

impl RuleClass {
    pub fn family(self) -> Family {
        match self {
            RuleClass::HyponymCore | RuleClass::HyponymStructure => Family::Hyponym,
            _ => Family::Definition,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RuleClass::DefinitionStarting => "definition-starting",
            RuleClass::Definitor => "definitor",
            RuleClass::DefinitorFollowing => "definitor-following",
            RuleClass::GenusStructure => "genus-structure",
            RuleClass::CompleteDefinition => "complete-definition",
            RuleClass::HyponymCore => "hyponym-core",
            RuleClass::HyponymStructure => "hyponym-structure",
            RuleClass::SynonymousStructure => "synonymous-structure",
        }
    }
}

impl FromStr for RuleClass {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s.to_ascii_lowercase().replace(['_', ' '], "-").as_str() {
            "definition-starting" => RuleClass::DefinitionStarting,
            "definitor" => RuleClass::Definitor,
            "definitor-following" => RuleClass::DefinitorFollowing,
            "genus-structure" => RuleClass::GenusStructure,
            "complete-definition" => RuleClass::CompleteDefinition,
            "hyponym-core" => RuleClass::HyponymCore,
            "hyponym-structure" => RuleClass::HyponymStructure,
            "synonymous-structure" => RuleClass::SynonymousStructure,
            _ => return Err(()),
        })
    }
}

impl FromStr for Family {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "definition" => Ok(Family::Definition),
            "hyponym" => Ok(Family::Hyponym),
            _ => Err(()),
        }
    }
}

impl FromStr for RuleKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s.to_ascii_lowercase().replace(['_', ' '], "-").as_str() {
            "top-down" => Ok(RuleKind::TopDown),
            "bottom-up" => Ok(RuleKind::BottomUp),
            _ => Err(()),
        }
    }
}

impl fmt::Display for RuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Definition => "Definition",
            Family::Hyponym => "Hyponym",
        })
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleKind::TopDown => "top-down",
            RuleKind::BottomUp => "bottom-up",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: String,
    pub kind: RuleKind,
    pub family: Family,
    pub class: RuleClass,
    pub pattern: PatternSpec,
    pub enabled: bool,
}

/// An ordered set of rules with unique ids.
#[derive(Debug, Clone, Default)]
pub struct RuleCatalog {
    rules: Vec<Rule>,
    matchers: Vec<Matcher>,
    warnings: Vec<String>,
    checksum: String,
}

fn parse_field<T: FromStr>(rule: &str, field: &'static str, value: &str) -> Result<T, CatalogError> {
    value.trim().parse().map_err(|_| CatalogError::UnknownToken {
        rule: rule.to_string(),
        field,
        value: value.trim().to_string(),
    })
}

impl RuleCatalog {
    pub fn from_rules(rules: Vec<Rule>) -> Result<Self, CatalogError> {
        let mut seen = HashSet::new();
        for r in &rules {
            if !seen.insert(r.id.as_str()) {
                return Err(CatalogError::DuplicateId(r.id.clone()));
            }
            if r.class.family() != r.family {
                return Err(CatalogError::ClassFamilyMismatch {
                    rule: r.id.clone(),
                    class: r.class,
                    family: r.family,
                });
            }
        }
        let matchers = rules.iter().map(compile_rule).collect();
        Ok(RuleCatalog {
            rules,
            matchers,
            warnings: Vec::new(),
            checksum: String::new(),
        })
    }

    /// Parses the tab-separated catalog format
    /// (`id kind family class pattern [enabled]`, `#` comments, optional header).
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let mut rules = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.strip_suffix('\r').unwrap_or(line);
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields[0].trim() == "id" {
                continue;
            }
            if !(5..=6).contains(&fields.len()) {
                return Err(CatalogError::BadRecord {
                    line: i + 1,
                    found: fields.len(),
                });
            }
            let id = fields[0].trim().to_string();
            let kind = parse_field(&id, "kind", fields[1])?;
            let family = parse_field(&id, "family", fields[2])?;
            let class = parse_field(&id, "class", fields[3])?;
            let pattern = PatternSpec::parse(fields[4]).map_err(|reason| CatalogError::BadPattern {
                rule: id.clone(),
                reason,
            })?;
            let enabled = match fields.get(5).map(|s| s.trim().to_ascii_lowercase()) {
                None => true,
                Some(v) if v.is_empty() || v == "true" || v == "1" || v == "yes" => true,
                Some(v) if v == "false" || v == "0" || v == "no" => false,
                Some(v) => {
                    return Err(CatalogError::UnknownToken {
                        rule: id,
                        field: "enabled",
                        value: v,
                    })
                }
            };
            rules.push(Rule {
                id,
                kind,
                family,
                class,
                pattern,
                enabled,
            });
        }
        let mut catalog = Self::from_rules(rules)?;
        if catalog.rules.is_empty() {
            catalog.warnings.push("rule catalog is empty".into());
        }
        catalog.checksum = crate::sha256_hex(text.as_bytes());
        Ok(catalog)
    }

    /// The catalog shipped with the crate.
    pub fn default_catalog() -> Self {
        Self::parse(DEFAULT_CATALOG).expect("shipped catalog is valid")
    }

    pub fn default_catalog_text() -> &'static str {
        DEFAULT_CATALOG
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn get(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// SHA-256 of the catalog source text (empty for catalogs built in code).
    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    pub fn set_enabled(&mut self, id: &str, enabled: bool) -> Result<(), CatalogError> {
        let rule = self
            .rules
            .iter_mut()
            .find(|r| r.id == id)
            .ok_or_else(|| CatalogError::UnknownRule(id.to_string()))?;
        rule.enabled = enabled;
        Ok(())
    }

    /// A copy where exactly the named rules are enabled.
    pub fn only<S: AsRef<str>>(&self, ids: &[S]) -> Result<Self, CatalogError> {
        for id in ids {
            if self.get(id.as_ref()).is_none() {
                return Err(CatalogError::UnknownRule(id.as_ref().to_string()));
            }
        }
        let mut out = self.clone();
        for r in &mut out.rules {
            r.enabled = ids.iter().any(|id| id.as_ref() == r.id);
        }
        Ok(out)
    }

    pub fn enabled_matchers(&self) -> impl Iterator<Item = &Matcher> {
        self.rules
            .iter()
            .zip(&self.matchers)
            .filter(|(r, _)| r.enabled)
            .map(|(_, m)| m)
    }

    /// Every match of every enabled rule, in catalog order.
    pub fn all_matches(&self, sentence: &Sentence, term: &Term) -> Vec<Match> {
        self.enabled_matchers()
            .flat_map(|m| m.match_sentence(sentence, term))
            .collect()
    }

    /// Runs every enabled rule over `sentence`.
    ///
    /// Matches are returned in catalog order; within a class, a match whose
    /// key span repeats an earlier one is dropped.
    pub fn match_sentence(&self, sentence: &Sentence, term: &Term) -> Vec<Match> {
        let mut seen = HashSet::new();
        self.all_matches(sentence, term)
            .into_iter()
            .filter(|hit| seen.insert((hit.class, dedup_key(hit))))
            .collect()
    }
}

pub fn load_rule_catalog(path: impl AsRef<Path>) -> Result<RuleCatalog, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    RuleCatalog::parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_covers_both_families() {
        let c = RuleCatalog::default_catalog();
        assert!(c.len() >= 10);
        assert!(c.rules().iter().any(|r| r.family == Family::Definition));
        assert!(c.rules().iter().any(|r| r.family == Family::Hyponym));
        let classes: HashSet<RuleClass> = c.rules().iter().map(|r| r.class).collect();
        assert_eq!(classes.len(), 8);
        assert!(c.warnings().is_empty());
        assert_eq!(c.checksum().len(), 64);
    }

    #[test]
    fn empty_file_warns() {
        let c = RuleCatalog::parse("# nothing here\n").unwrap();
        assert!(c.is_empty());
        assert_eq!(c.warnings().len(), 1);
    }

    #[test]
    fn class_must_fit_family() {
        let err = RuleCatalog::parse("r1\tbottom-up\tHyponym\tdefinitor\t<TERM> be\n").unwrap_err();
        assert!(matches!(err, CatalogError::ClassFamilyMismatch { rule, .. } if rule == "r1"));
    }

    #[test]
    fn unknown_tokens_name_the_rule() {
        let err = RuleCatalog::parse("r9\tsideways\tDefinition\tdefinitor\t<TERM> be\n").unwrap_err();
        assert!(matches!(err, CatalogError::UnknownToken { rule, field: "kind", .. } if rule == "r9"));
        let err = RuleCatalog::parse("r9\ttop-down\tDefinition\tgenus\t<TERM> be\n").unwrap_err();
        assert!(matches!(err, CatalogError::UnknownToken { field: "class", .. }));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let text = "a\ttop-down\tDefinition\tdefinitor\t<TERM> be\na\ttop-down\tDefinition\tdefinitor\t<TERM> refer to\n";
        assert!(matches!(RuleCatalog::parse(text), Err(CatalogError::DuplicateId(id)) if id == "a"));
    }

    #[test]
    fn only_enables_named_rules() {
        let c = RuleCatalog::default_catalog().only(&["def-be"]).unwrap();
        assert_eq!(c.enabled_matchers().count(), 1);
        assert!(RuleCatalog::default_catalog().only(&["nope"]).is_err());
    }
}
