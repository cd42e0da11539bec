//! Deterministic tokenizer: lowercased alphabetic runs, minimum length,
//! stop-word removal.
//!
//! Anything fancier (lemmatization, POS filtering) is expected to happen
//! outside this crate; pre-tokenized input can be ingested directly via
//! [`crate::corpus::ingest_pretokenized`].

use std::collections::HashSet;

#[derive(Debug, Clone)]
pub struct TokenizeConfig {
    pub lowercase: bool,
    pub min_token_len: usize,
    pub stopwords: HashSet<String>,
}

impl Default for TokenizeConfig {
    fn default() -> Self {
        TokenizeConfig {
            lowercase: true,
            min_token_len: 2,
            stopwords: HashSet::new(),
        }
    }
}

impl TokenizeConfig {
    pub fn with_stopwords<I, S>(mut self, words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.stopwords.extend(words.into_iter().map(Into::into));
        self
    }
}

/// Split `text` into maximal alphabetic runs, lowercase them, and keep runs
/// of at least `min_token_len` characters that are not stop words.
pub fn tokenize(text: &str, config: &TokenizeConfig) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut flush = |current: &mut String, out: &mut Vec<String>| {
        if !current.is_empty() {
            if current.chars().count() >= config.min_token_len && !config.stopwords.contains(current.as_str())
            {
                out.push(std::mem::take(current));
            } else {
                current.clear();
            }
        }
    };
    for ch in text.chars() {
        if ch.is_alphabetic() {
            if config.lowercase {
                // Lowercasing may expand to sequences containing combining
                // marks (e.g. U+0130); keep only alphabetic chars so output
                // tokens re-tokenize to themselves.
                current.extend(ch.to_lowercase().filter(|c| c.is_alphabetic()));
            } else {
                current.push(ch);
            }
        } else {
            flush(&mut current, &mut out);
        }
    }
    flush(&mut current, &mut out);
    out
}
