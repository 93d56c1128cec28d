use std::fmt;

use crate::corpus_io::Upos;

pub const MAX_REPEAT: u8 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternElement {
    /// A word sequence. Each word matches a token's surface or lemma.
    Literal(Vec<String>),
    /// The target term, bound at match time.
    Definiendum,
    Pos { upos: Upos, min: u8, max: u8 },
    /// Any non-punctuation words.
    Wildcard { min: u8, max: u8 },
    /// `a`, `an` or `the`.
    Article,
    /// Zero-width anchor at the first token.
    SentenceStart,
}

impl PatternElement {
    pub fn is_literal(&self) -> bool {
        matches!(self, PatternElement::Literal(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSpec {
    pub elements: Vec<PatternElement>,
}

fn parse_bounds(s: &str) -> Result<(u8, u8), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("bounds {s:?} must be min,max"))?;
    let min: u8 = a.trim().parse().map_err(|_| format!("bad minimum {a:?}"))?;
    let max: u8 = b.trim().parse().map_err(|_| format!("bad maximum {b:?}"))?;
    if min > max || max > MAX_REPEAT {
        return Err(format!("bounds {min},{max} must satisfy 0 <= min <= max <= {MAX_REPEAT}"));
    }
    Ok((min, max))
}

impl PatternSpec {
    /// Parses the space-separated element mini-language:
    /// `<TERM>`, `<W:min,max>`, `<POS:UPOS:min,max>`, `<ART>`, `<BOS>`, or a literal word.
    pub fn parse(pattern: &str) -> Result<Self, String> {
        let mut elements: Vec<PatternElement> = Vec::new();
        for item in pattern.split_whitespace() {
            let element = if let Some(inner) = item.strip_prefix('<').and_then(|s| s.strip_suffix('>')) {
                let mut parts = inner.splitn(2, ':');
                match (parts.next().unwrap_or(""), parts.next()) {
                    ("TERM", None) => PatternElement::Definiendum,
                    ("ART", None) => PatternElement::Article,
                    ("BOS", None) => PatternElement::SentenceStart,
                    ("W", Some(b)) => {
                        let (min, max) = parse_bounds(b)?;
                        PatternElement::Wildcard { min, max }
                    }
                    ("POS", Some(rest)) => {
                        let (tag, b) = rest
                            .split_once(':')
                            .ok_or_else(|| format!("{item:?}: expected <POS:TAG:min,max>"))?;
                        let upos = Upos::parse(tag).ok_or_else(|| format!("unknown UPOS tag {tag:?}"))?;
                        let (min, max) = parse_bounds(b)?;
                        PatternElement::Pos { upos, min, max }
                    }
                    _ => return Err(format!("unknown pattern element {item:?}")),
                }
            } else {
                let word = item.to_lowercase();
                if let Some(PatternElement::Literal(words)) = elements.last_mut() {
                    words.push(word);
                    continue;
                }
                PatternElement::Literal(vec![word])
            };
            elements.push(element);
        }
        if elements.is_empty() {
            return Err("empty pattern".into());
        }
        Ok(PatternSpec { elements })
    }

    pub fn has_definiendum(&self) -> bool {
        self.elements.contains(&PatternElement::Definiendum)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|e| match e {
                PatternElement::Literal(words) => words.join(" "),
                PatternElement::Definiendum => "<TERM>".into(),
                PatternElement::Pos { upos, min, max } => format!("<POS:{upos}:{min},{max}>"),
                PatternElement::Wildcard { min, max } => format!("<W:{min},{max}>"),
                PatternElement::Article => "<ART>".into(),
                PatternElement::SentenceStart => "<BOS>".into(),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_table_rules() {
        let p = PatternSpec::parse("<TERM> <W:0,1> such as").unwrap();
        assert_eq!(
            p.elements,
            vec![
                PatternElement::Definiendum,
                PatternElement::Wildcard { min: 0, max: 1 },
                PatternElement::Literal(vec!["such".into(), "as".into()]),
            ]
        );
        let p = PatternSpec::parse("<ART> <POS:NOUN:1,3>").unwrap();
        assert_eq!(p.to_string(), "<ART> <POS:NOUN:1,3>");
    }

    #[test]
    fn rejects_bad_bounds_and_tags() {
        assert!(PatternSpec::parse("<W:2,1>").is_err());
        assert!(PatternSpec::parse("<W:0,6>").is_err());
        assert!(PatternSpec::parse("<POS:NOPE:1,1>").is_err());
        assert!(PatternSpec::parse("<FOO>").is_err());
        assert!(PatternSpec::parse("   ").is_err());
    }

    #[test]
    fn display_round_trips() {
        for src in ["<BOS> <ART> <TERM> be <ART>", "<TERM> be defined as", "be one of the"] {
            assert_eq!(PatternSpec::parse(src).unwrap().to_string(), src);
        }
    }
}
