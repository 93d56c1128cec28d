//! Text normalization and matching-oriented tokenization.

const ABBREVIATIONS: [&str; 3] = ["e.g.", "i.e.", "etc."];

fn is_abbreviation_skeleton(skeleton: &str) -> bool {
    matches!(skeleton, "eg" | "ie" | "etc")
}

fn normalize_word(word: &str) -> String {
    let chars: Vec<char> = word.to_lowercase().chars().collect();
    let mut out = String::with_capacity(chars.len());
    let alnum = |i: usize| chars.get(i).is_some_and(|c| c.is_alphanumeric());
    let digit = |i: usize| chars.get(i).is_some_and(|c| c.is_ascii_digit());
    for (i, &c) in chars.iter().enumerate() {
        let inner_hyphen = i > 0 && c == '-' && alnum(i - 1) && alnum(i + 1);
        let decimal_point = i > 0 && c == '.' && digit(i - 1) && digit(i + 1);
        if c.is_alphanumeric() || inner_hyphen || decimal_point {
            out.push(c);
        }
    }
    if out.is_empty() {
        return out;
    }
    let last_alnum = chars.iter().rposition(|c| c.is_alphanumeric()).unwrap_or(0);
    let ends_with_period = chars[last_alnum + 1..].contains(&'.');
    let skeleton: String = out.chars().filter(|c| c.is_alphanumeric()).collect();
    if ends_with_period && !(chars.contains(&'.') && is_abbreviation_skeleton(&skeleton)) {
        out.push('.');
    }
    out
}

/// Lowercases, removes punctuation other than intra-word hyphens, decimal
/// points and word-final periods, and collapses whitespace.
///
/// Abbreviations (`e.g.`, `i.e.`, `etc.`) lose their periods entirely.
pub fn normalize_text(raw: &str) -> String {
    raw.split_whitespace()
        .map(normalize_word)
        .filter(|w| !w.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Key used to join extracted sentences with gold labels.
pub fn fingerprint(raw: &str) -> String {
    let mut n = normalize_text(raw);
    while n.ends_with('.') {
        n.pop();
    }
    n
}

fn is_kept_punct(c: char) -> bool {
    matches!(c, ',' | ';' | ':' | '.' | '!' | '?')
}

/// Splits raw text into lowercased word and punctuation tokens.
///
/// Brackets and quotes are dropped (so `(AI)` becomes `ai`), clause
/// punctuation is split off into its own token, and word-internal
/// characters (`state-of-the-art`, `4.0`) are left alone.
pub fn tokenize(raw: &str) -> Vec<String> {
    let mut out = Vec::new();
    for word in raw.split_whitespace() {
        let lower = word.to_lowercase();
        let chars: Vec<char> = lower.chars().collect();
        let Some(first) = chars.iter().position(|c| c.is_alphanumeric()) else {
            out.extend(chars.iter().filter(|c| is_kept_punct(**c)).map(|c| c.to_string()));
            continue;
        };
        let rest: String = chars[first..].iter().collect();
        if let Some(abbr) = ABBREVIATIONS.iter().find(|a| rest.starts_with(**a)) {
            out.push((*abbr).to_string());
            out.extend(
                rest[abbr.len()..]
                    .chars()
                    .filter(|c| is_kept_punct(*c) && *c != '.')
                    .map(|c| c.to_string()),
            );
            continue;
        }
        let last = chars.iter().rposition(|c| c.is_alphanumeric()).unwrap_or(first);
        let core: String = chars[first..=last]
            .iter()
            .filter(|c| !matches!(c, '(' | ')' | '[' | ']' | '{' | '}' | '"' | '“' | '”'))
            .collect();
        out.push(core);
        out.extend(
            chars[last + 1..]
                .iter()
                .filter(|c| is_kept_punct(**c))
                .map(|c| c.to_string()),
        );
    }
    out
}
