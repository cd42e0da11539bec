//! Document ingestion, vocabulary construction, and corpus statistics.
//!
//! A [`Corpus`] is an immutable set of tokenized, id-encoded documents plus a
//! dense [`Vocabulary`]. Two ingestion paths are provided:
//!
//! - [`ingest_jsonl`]: one JSON object per line with configurable text/label
//!   field names, tokenized by [`tokenize::tokenize`];
//! - [`ingest_pretokenized`]: one document per line, tokens space-separated,
//!   with an optional leading `label<TAB>`, for corpora preprocessed by
//!   external tooling.
//!
//! Both apply the same per-label cap, longest-first selection, and
//! minimum-document-frequency pruning.

pub mod stats;
pub mod tokenize;
pub mod windows;

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::util::fnv1a64;

pub use stats::{compute_stats, CorpusStats};
pub use tokenize::{tokenize, TokenizeConfig};
pub use windows::{extract_windows, ContextWindows};

/// Bijective word <-> dense id map. Ids are assigned in first-appearance
/// order, so corpus construction is deterministic.
#[derive(Debug, Clone, Default)]
pub struct Vocabulary {
    word_to_id: HashMap<String, u32>,
    id_to_word: Vec<String>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, word: &str) -> u32 {
        if let Some(&id) = self.word_to_id.get(word) {
            return id;
        }
        let id = self.id_to_word.len() as u32;
        self.word_to_id.insert(word.to_string(), id);
        self.id_to_word.push(word.to_string());
        id
    }

    pub fn id(&self, word: &str) -> Option<u32> {
        self.word_to_id.get(word).copied()
    }

    pub fn word(&self, id: u32) -> &str {
        &self.id_to_word[id as usize]
    }

    pub fn len(&self) -> usize {
        self.id_to_word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.id_to_word.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.id_to_word.iter().map(String::as_str)
    }

    /// Stable fingerprint of the word list in id order. Lets downstream
    /// artifacts detect vocabulary mismatches without carrying the word list.
    pub fn hash64(&self) -> u64 {
        let mut bytes = Vec::new();
        for w in &self.id_to_word {
            bytes.extend_from_slice(w.as_bytes());
            bytes.push(0);
        }
        fnv1a64(&bytes)
    }
}

#[derive(Debug, Clone)]
pub struct Document {
    pub id: String,
    pub label: Option<String>,
    pub tokens: Vec<u32>,
    /// Character count of the original text; drives longest-first selection.
    pub raw_length: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub docs: Vec<Document>,
    pub vocab: Vocabulary,
}

impl Corpus {
    /// Build a corpus directly from string-token documents. No cap, no
    /// pruning; documents with zero tokens are rejected.
    pub fn from_token_docs<S: AsRef<str>>(docs: Vec<(Option<String>, Vec<S>)>) -> Result<Corpus> {
        let mut vocab = Vocabulary::new();
        let mut out = Vec::with_capacity(docs.len());
        for (i, (label, toks)) in docs.into_iter().enumerate() {
            if toks.is_empty() {
                return Err(Error::InvalidParam(format!("document {i} has no tokens")));
            }
            let raw_length = toks.iter().map(|t| t.as_ref().chars().count()).sum::<usize>()
                + toks.len().saturating_sub(1);
            let tokens = toks.iter().map(|t| vocab.intern(t.as_ref())).collect();
            out.push(Document {
                id: format!("d{i:06}"),
                label,
                tokens,
                raw_length,
            });
        }
        if out.is_empty() {
            return Err(Error::EmptyIngest { reason: None });
        }
        Ok(Corpus { docs: out, vocab })
    }

    pub fn n_docs(&self) -> usize {
        self.docs.len()
    }

    pub fn total_tokens(&self) -> u64 {
        self.docs.iter().map(|d| d.tokens.len() as u64).sum()
    }

    /// Distinct labels in first-appearance order replaced by sorted order for
    /// stable class indexing.
    pub fn label_set(&self) -> Vec<String> {
        let mut labels: Vec<String> = Vec::new();
        for d in &self.docs {
            if let Some(l) = &d.label {
                if !labels.iter().any(|x| x == l) {
                    labels.push(l.clone());
                }
            }
        }
        labels.sort();
        labels
    }

    /// Per-document class indices into `label_set()`. Documents without a
    /// label are rejected.
    pub fn class_labels(&self) -> Result<(Vec<usize>, Vec<String>)> {
        let classes = self.label_set();
        let mut ids = Vec::with_capacity(self.docs.len());
        for d in &self.docs {
            let l = d.label.as_ref().ok_or_else(|| {
                Error::InvalidParam(format!("document {} has no label", d.id))
            })?;
            let idx = classes.binary_search(l).map_err(|_| {
                Error::InvalidParam(format!("label {l} missing from label set"))
            })?;
            ids.push(idx);
        }
        Ok((ids, classes))
    }

    /// Stable fingerprint over document token sequences; used to recognize a
    /// model's own training corpus.
    pub fn fingerprint(&self) -> u64 {
        let mut bytes = Vec::new();
        for d in &self.docs {
            for &t in &d.tokens {
                bytes.extend_from_slice(&t.to_le_bytes());
            }
            bytes.extend_from_slice(&u32::MAX.to_le_bytes());
        }
        fnv1a64(&bytes)
    }

    /// Re-encode this corpus against `target` vocabulary by word string.
    /// Tokens missing from `target` are dropped; documents left empty are
    /// dropped. Labels and raw lengths are kept.
    pub fn remap_to(&self, target: &Vocabulary) -> Corpus {
        let mut docs = Vec::with_capacity(self.docs.len());
        for d in &self.docs {
            let tokens: Vec<u32> = d
                .tokens
                .iter()
                .filter_map(|&t| target.id(self.vocab.word(t)))
                .collect();
            if tokens.is_empty() {
                continue;
            }
            docs.push(Document {
                id: d.id.clone(),
                label: d.label.clone(),
                tokens,
                raw_length: d.raw_length,
            });
        }
        Corpus {
            docs,
            vocab: target.clone(),
        }
    }
}

/// Ingestion options shared by both input formats.
#[derive(Debug, Clone)]
pub struct IngestConfig {
    pub text_field: String,
    pub label_field: Option<String>,
    /// Maximum documents to retain per label.
    pub per_label_cap: usize,
    /// Keep the longest documents by raw character count instead of the
    /// first seen.
    pub length_rank: bool,
    pub tokenizer: TokenizeConfig,
    /// Words appearing in fewer than this many documents are pruned from the
    /// vocabulary after selection.
    pub min_df: u64,
}

impl Default for IngestConfig {
    fn default() -> Self {
        IngestConfig {
            text_field: "text".into(),
            label_field: Some("label".into()),
            per_label_cap: 1000,
            length_rank: true,
            tokenizer: TokenizeConfig::default(),
            min_df: 5,
        }
    }
}

/// Counters reported alongside an ingested corpus.
#[derive(Debug, Clone, Default)]
pub struct IngestReport {
    pub records_read: usize,
    pub malformed_skipped: usize,
    pub dropped_empty: usize,
    pub pruned_words: usize,
    pub retained_docs: usize,
}

struct RawRecord {
    stream_index: usize,
    label: Option<String>,
    text_or_tokens: TextOrTokens,
    raw_length: usize,
}

enum TextOrTokens {
    Text(String),
    Tokens(Vec<String>),
}

/// Ingest line-delimited JSON records.
pub fn ingest_jsonl<R: BufRead>(reader: R, cfg: &IngestConfig) -> Result<(Corpus, IngestReport)> {
    if cfg.per_label_cap == 0 {
        return Err(Error::InvalidParam("per_label_cap must be >= 1".into()));
    }
    let mut report = IngestReport::default();
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<jsonl input>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        report.records_read += 1;
        let value: serde_json::Value = match serde_json::from_str(&line) {
            Ok(v) => v,
            Err(_) => {
                report.malformed_skipped += 1;
                continue;
            }
        };
        let text = match value.get(&cfg.text_field).and_then(|v| v.as_str()) {
            Some(t) => t.to_string(),
            None => {
                report.malformed_skipped += 1;
                continue;
            }
        };
        let label = cfg
            .label_field
            .as_ref()
            .and_then(|f| value.get(f))
            .and_then(|v| v.as_str())
            .map(sanitize_label);
        records.push(RawRecord {
            stream_index: i,
            label,
            raw_length: text.chars().count(),
            text_or_tokens: TextOrTokens::Text(text),
        });
    }
    build_corpus(records, cfg, report)
}

/// Ingest pre-tokenized documents: one per line, tokens space-separated,
/// optional leading `label<TAB>`. Tokens are taken verbatim (no tokenizer).
pub fn ingest_pretokenized<R: BufRead>(
    reader: R,
    cfg: &IngestConfig,
) -> Result<(Corpus, IngestReport)> {
    if cfg.per_label_cap == 0 {
        return Err(Error::InvalidParam("per_label_cap must be >= 1".into()));
    }
    let mut report = IngestReport::default();
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<token input>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        report.records_read += 1;
        let (label, body) = match line.split_once('\t') {
            Some((l, rest)) => (Some(sanitize_label(l)), rest),
            None => (None, line.as_str()),
        };
        let tokens: Vec<String> = body.split_whitespace().map(str::to_string).collect();
        records.push(RawRecord {
            stream_index: i,
            label,
            raw_length: body.chars().count(),
            text_or_tokens: TextOrTokens::Tokens(tokens),
        });
    }
    build_corpus(records, cfg, report)
}

fn sanitize_label(raw: &str) -> String {
    raw.chars()
        .map(|c| if c.is_control() { ' ' } else { c })
        .collect::<String>()
        .trim()
        .to_string()
}

fn build_corpus(
    records: Vec<RawRecord>,
    cfg: &IngestConfig,
    mut report: IngestReport,
) -> Result<(Corpus, IngestReport)> {
    if records.is_empty() {
        return Err(Error::EmptyIngest {
            reason: Some("input stream yielded no records".into()),
        });
    }

    // Group by label, apply the per-label cap, restore stream order.
    let mut by_label: Vec<(Option<String>, Vec<RawRecord>)> = Vec::new();
    for rec in records {
        match by_label.iter_mut().find(|(l, _)| *l == rec.label) {
            Some((_, v)) => v.push(rec),
            None => by_label.push((rec.label.clone(), vec![rec])),
        }
    }
    let mut selected: Vec<RawRecord> = Vec::new();
    for (_, mut group) in by_label {
        if cfg.length_rank {
            // Stable sort: ties keep stream order.
            group.sort_by(|a, b| b.raw_length.cmp(&a.raw_length));
        }
        group.truncate(cfg.per_label_cap);
        selected.extend(group);
    }
    selected.sort_by_key(|r| r.stream_index);

    // Tokenize and encode.
    let mut vocab = Vocabulary::new();
    let mut docs: Vec<Document> = Vec::with_capacity(selected.len());
    for rec in selected {
        let tokens: Vec<u32> = match &rec.text_or_tokens {
            TextOrTokens::Text(t) => tokenize(t, &cfg.tokenizer)
                .iter()
                .map(|w| vocab.intern(w))
                .collect(),
            TextOrTokens::Tokens(ts) => ts.iter().map(|w| vocab.intern(w)).collect(),
        };
        if tokens.is_empty() {
            report.dropped_empty += 1;
            continue;
        }
        docs.push(Document {
            id: format!("d{:06}", rec.stream_index),
            label: rec.label,
            tokens,
            raw_length: rec.raw_length,
        });
    }
    if docs.is_empty() {
        return Err(Error::EmptyIngest {
            reason: Some("no documents survived tokenization".into()),
        });
    }

    // Prune rare words (df < min_df) and re-encode densely.
    let corpus = if cfg.min_df > 1 {
        let mut df = vec![0u64; vocab.len()];
        for d in &docs {
            let mut seen: Vec<u32> = d.tokens.clone();
            seen.sort_unstable();
            seen.dedup();
            for t in seen {
                df[t as usize] += 1;
            }
        }
        let mut new_vocab = Vocabulary::new();
        let mut remap: Vec<Option<u32>> = vec![None; vocab.len()];
        for old_id in 0..vocab.len() as u32 {
            if df[old_id as usize] >= cfg.min_df {
                remap[old_id as usize] = Some(new_vocab.intern(vocab.word(old_id)));
            }
        }
        report.pruned_words = vocab.len() - new_vocab.len();
        let mut kept = Vec::with_capacity(docs.len());
        for mut d in docs {
            d.tokens = d
                .tokens
                .iter()
                .filter_map(|&t| remap[t as usize])
                .collect();
            if d.tokens.is_empty() {
                report.dropped_empty += 1;
            } else {
                kept.push(d);
            }
        }
        if kept.is_empty() {
            return Err(Error::EmptyIngest {
                reason: Some(format!("all documents emptied by min_df = {}", cfg.min_df)),
            });
        }
        Corpus {
            docs: kept,
            vocab: new_vocab,
        }
    } else {
        Corpus { docs, vocab }
    };

    report.retained_docs = corpus.docs.len();
    Ok((corpus, report))
}

// ---------------------------------------------------------------------------
// Corpus archive: vocabulary.tsv (id<TAB>word), stats.tsv (word, df, cf),
// documents.tsv (id<TAB>label<TAB>space-separated token ids).
// ---------------------------------------------------------------------------

pub const VOCAB_FILE: &str = "vocabulary.tsv";
pub const STATS_FILE: &str = "stats.tsv";
pub const DOCS_FILE: &str = "documents.tsv";

pub fn save_archive(corpus: &Corpus, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;

    let vocab_path = dir.join(VOCAB_FILE);
    let mut out = String::new();
    for id in 0..corpus.vocab.len() as u32 {
        out.push_str(&format!("{id}\t{}\n", corpus.vocab.word(id)));
    }
    std::fs::write(&vocab_path, out).map_err(|e| Error::io(&vocab_path, e))?;

    let stats = compute_stats(corpus)?;
    let stats_path = dir.join(STATS_FILE);
    let mut out = String::from("word\tdf\tcf\n");
    for id in 0..corpus.vocab.len() as u32 {
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            corpus.vocab.word(id),
            stats.df(id),
            stats.cf(id)
        ));
    }
    std::fs::write(&stats_path, out).map_err(|e| Error::io(&stats_path, e))?;

    let docs_path = dir.join(DOCS_FILE);
    let file = std::fs::File::create(&docs_path).map_err(|e| Error::io(&docs_path, e))?;
    let mut w = std::io::BufWriter::new(file);
    for d in &corpus.docs {
        let ids: Vec<String> = d.tokens.iter().map(|t| t.to_string()).collect();
        writeln!(
            w,
            "{}\t{}\t{}\t{}",
            d.id,
            d.label.as_deref().unwrap_or(""),
            d.raw_length,
            ids.join(" ")
        )
        .map_err(|e| Error::io(&docs_path, e))?;
    }
    w.flush().map_err(|e| Error::io(&docs_path, e))?;
    Ok(())
}

pub fn load_archive(dir: &Path) -> Result<Corpus> {
    let vocab_path = dir.join(VOCAB_FILE);
    if !vocab_path.is_file() {
        return Err(Error::MissingArtifact(vocab_path));
    }
    let mut vocab = Vocabulary::new();
    let file = std::fs::File::open(&vocab_path).map_err(|e| Error::io(&vocab_path, e))?;
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(&vocab_path, e))?;
        if line.is_empty() {
            continue;
        }
        let (id_str, word) = line.split_once('\t').ok_or_else(|| Error::Parse {
            path: vocab_path.clone(),
            line: lineno + 1,
            msg: "expected id<TAB>word".into(),
        })?;
        let id: u32 = id_str.parse().map_err(|_| Error::Parse {
            path: vocab_path.clone(),
            line: lineno + 1,
            msg: format!("bad id {id_str:?}"),
        })?;
        let got = vocab.intern(word);
        if got != id {
            return Err(Error::Parse {
                path: vocab_path.clone(),
                line: lineno + 1,
                msg: format!("non-dense id: expected {got}, file says {id}"),
            });
        }
    }

    let docs_path = dir.join(DOCS_FILE);
    if !docs_path.is_file() {
        return Err(Error::MissingArtifact(docs_path));
    }
    let file = std::fs::File::open(&docs_path).map_err(|e| Error::io(&docs_path, e))?;
    let mut docs = Vec::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(&docs_path, e))?;
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: String| Error::Parse {
            path: docs_path.clone(),
            line: lineno + 1,
            msg,
        };
        let mut fields = line.splitn(4, '\t');
        let id = fields
            .next()
            .ok_or_else(|| parse_err("missing id".into()))?
            .to_string();
        let label = match fields.next() {
            Some("") => None,
            Some(l) => Some(l.to_string()),
            None => return Err(parse_err("missing label field".into())),
        };
        let raw_length: usize = fields
            .next()
            .ok_or_else(|| parse_err("missing raw_length".into()))?
            .parse()
            .map_err(|_| parse_err("bad raw_length".into()))?;
        let toks = fields
            .next()
            .ok_or_else(|| parse_err("missing tokens".into()))?;
        let mut tokens = Vec::new();
        for t in toks.split_whitespace() {
            let tid: u32 = t
                .parse()
                .map_err(|_| parse_err(format!("bad token id {t:?}")))?;
            if tid as usize >= vocab.len() {
                return Err(parse_err(format!("token id {tid} out of vocabulary")));
            }
            tokens.push(tid);
        }
        if tokens.is_empty() {
            return Err(parse_err("document has no tokens".into()));
        }
        docs.push(Document {
            id,
            label,
            tokens,
            raw_length,
        });
    }
    if docs.is_empty() {
        return Err(Error::EmptyIngest {
            reason: Some(format!("empty archive at {}", dir.display())),
        });
    }
    Ok(Corpus { docs, vocab })
}

/// Parse a stats TSV written by [`save_archive`] back into id-indexed counts.
/// Mostly useful for round-trip checks; [`compute_stats`] is authoritative.
pub fn load_stats_tsv(dir: &Path, vocab: &Vocabulary) -> Result<CorpusStats> {
    stats::read_stats_tsv(&dir.join(STATS_FILE), vocab)
}

#[derive(Deserialize)]
struct StopwordFile(Vec<String>);

/// Read a stop-word list: one word per line, `#` comments allowed, or a JSON
/// array of strings.
pub fn load_stopwords(path: &Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let StopwordFile(words) =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse {
                path: path.to_path_buf(),
                line: 0,
                msg: e.to_string(),
            })?;
        return Ok(words);
    }
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn jsonl(lines: &[&str]) -> Cursor<String> {
        Cursor::new(lines.join("\n"))
    }

    fn no_prune() -> IngestConfig {
        IngestConfig {
            min_df: 1,
            ..Default::default()
        }
    }

    #[test]
    fn cap_keeps_longest_per_label() {
        let mut lines = Vec::new();
        // label a: lengths 4, 8, 6; label b: lengths 10, 2
        for (label, text) in [
            ("a", "cats dogs"),
            ("a", "elephant giraffe tiger"),
            ("a", "lions zebra"),
            ("b", "porcupine wolverine badger"),
            ("b", "ox"),
        ] {
            lines.push(format!("{{\"text\": \"{text}\", \"label\": \"{label}\"}}"));
        }
        let refs: Vec<&str> = lines.iter().map(String::as_str).collect();
        let cfg = IngestConfig {
            per_label_cap: 2,
            length_rank: true,
            ..no_prune()
        };
        let (corpus, report) = ingest_jsonl(jsonl(&refs), &cfg).unwrap();
        assert_eq!(report.retained_docs, 4); // "ox" alone survives for b? no: cap 2, b has 2 docs, but "ox" has 1 token of len 2 -> kept
        let labels: Vec<_> = corpus.docs.iter().map(|d| d.label.clone().unwrap()).collect();
        assert_eq!(labels.iter().filter(|l| *l == "a").count(), 2);
        // the shortest "a" doc ("cats dogs", length 9) must be the one dropped
        assert!(corpus
            .docs
            .iter()
            .filter(|d| d.label.as_deref() == Some("a"))
            .all(|d| d.raw_length > 9));
    }

    #[test]
    fn cap_exceeding_supply_keeps_all() {
        let lines = [
            r#"{"text": "alpha beta", "label": "x"}"#,
            r#"{"text": "gamma delta", "label": "x"}"#,
            r#"{"text": "epsilon zeta", "label": "x"}"#,
        ];
        let cfg = IngestConfig {
            per_label_cap: 5,
            ..no_prune()
        };
        let (corpus, _) = ingest_jsonl(jsonl(&lines), &cfg).unwrap();
        assert_eq!(corpus.n_docs(), 3);
    }

    #[test]
    fn empty_stream_is_fatal() {
        let err = ingest_jsonl(jsonl(&[]), &no_prune()).unwrap_err();
        assert!(matches!(err, Error::EmptyIngest { .. }));
    }

    #[test]
    fn malformed_records_are_counted_not_fatal() {
        let lines = [
            r#"{"text": "alpha beta", "label": "x"}"#,
            r#"{"oops": true}"#,
            "not json at all",
            r#"{"text": "gamma delta", "label": "x"}"#,
        ];
        let (corpus, report) = ingest_jsonl(jsonl(&lines), &no_prune()).unwrap();
        assert_eq!(corpus.n_docs(), 2);
        assert_eq!(report.malformed_skipped, 2);
    }

    #[test]
    fn min_df_prunes_and_drops_emptied_docs() {
        let lines = [
            r#"{"text": "shared rare", "label": "x"}"#,
            r#"{"text": "shared words", "label": "x"}"#,
            r#"{"text": "shared again", "label": "x"}"#,
        ];
        let cfg = IngestConfig {
            min_df: 2,
            ..Default::default()
        };
        let (corpus, report) = ingest_jsonl(jsonl(&lines), &cfg).unwrap();
        // only "shared" has df >= 2
        assert_eq!(corpus.vocab.len(), 1);
        assert_eq!(corpus.vocab.word(0), "shared");
        assert_eq!(corpus.n_docs(), 3);
        assert_eq!(report.pruned_words, 3);
    }

    #[test]
    fn pretokenized_with_labels() {
        let input = Cursor::new("pos\tgood great fine\nneg\tbad awful\nplain tokens here\n");
        let (corpus, _) = ingest_pretokenized(input, &no_prune()).unwrap();
        assert_eq!(corpus.n_docs(), 3);
        assert_eq!(corpus.docs[0].label.as_deref(), Some("pos"));
        assert_eq!(corpus.docs[2].label, None);
        assert_eq!(corpus.docs[1].tokens.len(), 2);
    }

    #[test]
    fn archive_round_trip() {
        let lines = [
            r#"{"text": "alpha beta alpha", "label": "x"}"#,
            r#"{"text": "beta gamma", "label": "y"}"#,
        ];
        let (corpus, _) = ingest_jsonl(jsonl(&lines), &no_prune()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        save_archive(&corpus, dir.path()).unwrap();
        let back = load_archive(dir.path()).unwrap();
        assert_eq!(back.n_docs(), corpus.n_docs());
        assert_eq!(back.vocab.len(), corpus.vocab.len());
        assert_eq!(back.fingerprint(), corpus.fingerprint());
        assert_eq!(back.vocab.hash64(), corpus.vocab.hash64());
        let stats = load_stats_tsv(dir.path(), &back.vocab).unwrap();
        let fresh = compute_stats(&back).unwrap();
        assert_eq!(stats.df_vec(), fresh.df_vec());
        assert_eq!(stats.cf_vec(), fresh.cf_vec());
    }

    #[test]
    fn remap_drops_oov_tokens_and_empty_docs() {
        let a = Corpus::from_token_docs(vec![
            (None, vec!["x", "y"]),
            (None, vec!["z", "z"]),
        ])
        .unwrap();
        let b = Corpus::from_token_docs(vec![(None, vec!["y", "w"])]).unwrap();
        let remapped = a.remap_to(&b.vocab);
        assert_eq!(remapped.docs.len(), 1); // [x,y] -> [y]; [z,z] -> dropped
        assert_eq!(remapped.docs[0].tokens, vec![b.vocab.id("y").unwrap()]);
    }
}
