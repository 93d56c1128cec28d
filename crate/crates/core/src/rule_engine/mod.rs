//! Rule catalog, pattern compilation and sentence matching.

mod catalog;
mod matcher;
mod pattern;
mod term;

pub use catalog::{load_rule_catalog, CatalogError, Family, Rule, RuleCatalog, RuleClass, RuleKind};
pub use matcher::{compile_rule, list_extent, list_items, literal_len, word_matches, Match, Matcher, Spans, ARTICLES};
pub use pattern::{PatternElement, PatternSpec, MAX_REPEAT};
pub use term::{EmptyTerm, Term};
