const NO_SPLIT: [&str; 3] = ["e.g.", "i.e.", "etc."];

/// Splits an abstract into sentences.
///
/// A boundary is a `.`, `!` or `?` followed by whitespace and an uppercase
/// letter, or by the end of the text. A period closing `e.g.`, `i.e.` or
/// `etc.` is never a boundary.
pub fn segment_sentences(abstract_text: &str) -> Vec<String> {
    let chars: Vec<(usize, char)> = abstract_text.char_indices().collect();
    let mut sentences = Vec::new();
    let mut start = 0usize;

    for (pos, &(byte, c)) in chars.iter().enumerate() {
        if !matches!(c, '.' | '!' | '?') {
            continue;
        }
        let end = byte + c.len_utf8();
        if c == '.' {
            let word_start = abstract_text[..byte]
                .rfind(char::is_whitespace)
                .map(|i| i + 1)
                .unwrap_or(0);
            let word = abstract_text[word_start..end].to_lowercase();
            let word = word.trim_start_matches(|ch: char| !ch.is_alphanumeric());
            if NO_SPLIT.contains(&word) {
                continue;
            }
        }
        let rest = &chars[pos + 1..];
        let boundary = match rest.iter().position(|(_, ch)| !ch.is_whitespace()) {
            None => true,
            Some(0) => false,
            Some(k) => rest[k].1.is_uppercase(),
        };
        if boundary {
            let s = abstract_text[start..end].trim();
            if !s.is_empty() {
                sentences.push(s.to_string());
            }
            start = end;
        }
    }
    let tail = abstract_text[start..].trim();
    if !tail.is_empty() {
        sentences.push(tail.to_string());
    }
    sentences
}
