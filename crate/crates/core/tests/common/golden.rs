//! Published rows reproduced by the fixture corpora.

pub const AI_TERM: &str = "artificial intelligence";
pub const DS_TERM: &str = "data science";

pub const AI_GENERA: [(&str, &str); 5] = [
    ("2-s2.0-85054690028", "branch of computer science"),
    ("2-s2.0-85046415420", "ability of a computer"),
    ("2-s2.0-85055517085", "science"),
    ("2-s2.0-85051252856", "branch of computer science"),
    ("2-s2.0-85045918452", "study of intelligent machines"),
];

pub const ABILITY_ROW: &str = "2-s2.0-85046415420";
pub const ABILITY_FEATURES: [&str; 5] = ["perform", "function", "reason", "typical", "human mind"];

/// Row whose published features read "robot machines"; the head noun is kept.
pub const DIVERGENT_ROW: &str = "2-s2.0-85045918452";

pub const AI_PAIRS: [(&str, &str, &str); 11] = [
    ("85048852027", "computer vision", "application"),
    ("85048852027", "image recognition", "application"),
    ("85048852027", "machine translator", "application"),
    ("85055695501", "medical diagnostics", "application"),
    ("85055695501", "autonomous vehicles", "application"),
    ("85055695501", "conversational agents", "application"),
    ("84934923322", "bayesian", "technique"),
    ("84934923322", "fuzzy logic", "technique"),
    ("84934923322", "artificial bee colony algorithm", "technique"),
    ("84929072533", "natural language comprehension", "technology"),
    ("85046720779", "supervised learning", "technology"),
];

pub const DS_PAIRS: [(&str, &str, &str); 5] = [
    ("85045124637", "data overfit", "task"),
    ("85046953082", "lexical analysis", "task"),
    ("85046953082", "predictive modeling", "task"),
    ("85049357068", "autoencoding", "methodology"),
    ("85049357068", "text mining", "methodology"),
];

pub fn has(pairs: &[(String, String, String)], doc: &str, hypo: &str, hyper: &str) -> bool {
    pairs.iter().any(|(d, a, b)| d.ends_with(doc) && a == hypo && b == hyper)
}
