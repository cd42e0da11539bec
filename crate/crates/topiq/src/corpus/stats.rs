//! Corpus frequency statistics: document frequency, collection frequency,
//! document count, token count.

use std::io::BufRead;
use std::path::Path;

use crate::corpus::{Corpus, Vocabulary};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusStats {
    n_docs: usize,
    total_tokens: u64,
    df: Vec<u64>,
    cf: Vec<u64>,
}

impl CorpusStats {
    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    pub fn vocab_size(&self) -> usize {
        self.df.len()
    }

    /// Number of documents containing word `w`.
    pub fn df(&self, w: u32) -> u64 {
        self.df[w as usize]
    }

    /// Total occurrences of word `w` across the corpus.
    pub fn cf(&self, w: u32) -> u64 {
        self.cf[w as usize]
    }

    pub fn df_vec(&self) -> &[u64] {
        &self.df
    }

    pub fn cf_vec(&self) -> &[u64] {
        &self.cf
    }

    pub fn from_raw(n_docs: usize, df: Vec<u64>, cf: Vec<u64>) -> Self {
        assert_eq!(df.len(), cf.len());
        let total_tokens = cf.iter().sum();
        CorpusStats {
            n_docs,
            total_tokens,
            df,
            cf,
        }
    }
}

/// Single pass over the corpus; df counts a word once per document.
pub fn compute_stats(corpus: &Corpus) -> Result<CorpusStats> {
    if corpus.docs.is_empty() {
        return Err(Error::InvalidParam("corpus is empty".into()));
    }
    let v = corpus.vocab.len();
    let mut df = vec![0u64; v];
    let mut cf = vec![0u64; v];
    let mut total_tokens = 0u64;
    let mut seen: Vec<u32> = Vec::new();
    for doc in &corpus.docs {
        total_tokens += doc.tokens.len() as u64;
        for &t in &doc.tokens {
            cf[t as usize] += 1;
        }
        seen.clear();
        seen.extend_from_slice(&doc.tokens);
        seen.sort_unstable();
        seen.dedup();
        for &t in &seen {
            df[t as usize] += 1;
        }
    }
    Ok(CorpusStats {
        n_docs: corpus.docs.len(),
        total_tokens,
        df,
        cf,
    })
}

pub(crate) fn read_stats_tsv(path: &Path, vocab: &Vocabulary) -> Result<CorpusStats> {
    if !path.is_file() {
        return Err(Error::MissingArtifact(path.to_path_buf()));
    }
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut df = vec![0u64; vocab.len()];
    let mut cf = vec![0u64; vocab.len()];
    let mut n_docs = 0u64;
    for (lineno, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if lineno == 0 || line.is_empty() {
            continue; // header
        }
        let parse_err = |msg: String| Error::Parse {
            path: path.to_path_buf(),
            line: lineno + 1,
            msg,
        };
        let mut fields = line.split('\t');
        let word = fields.next().ok_or_else(|| parse_err("missing word".into()))?;
        let id = vocab
            .id(word)
            .ok_or_else(|| parse_err(format!("word {word:?} not in vocabulary")))?;
        let d: u64 = fields
            .next()
            .ok_or_else(|| parse_err("missing df".into()))?
            .parse()
            .map_err(|_| parse_err("bad df".into()))?;
        let c: u64 = fields
            .next()
            .ok_or_else(|| parse_err("missing cf".into()))?
            .parse()
            .map_err(|_| parse_err("bad cf".into()))?;
        df[id as usize] = d;
        cf[id as usize] = c;
        n_docs = n_docs.max(d);
    }
    // n_docs is not stored in the TSV; callers that need it should use
    // compute_stats. Here we keep the max df as a lower bound.
    Ok(CorpusStats {
        n_docs: n_docs as usize,
        total_tokens: cf.iter().sum(),
        df,
        cf,
    })
}
