//! Sliding context windows and their support counts.
//!
//! A window is a contiguous run of `n` tokens inside a single document;
//! windows never span document boundaries. Counting is set-valued per
//! window:
//!
//! - membership(w): number of windows containing `w` at least once;
//! - ordered(l, r): number of windows in which some occurrence of `l`
//!   precedes some occurrence of `r` (each window counted at most once per
//!   pair; self pairs count when a word repeats inside a window).

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::Corpus;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct ContextWindows {
    n: usize,
    vocab_size: usize,
    window_count: u64,
    membership: Vec<u64>,
    pairs: HashMap<u64, u64>,
    /// For each left word, the sorted distinct right words it precedes.
    successors: Vec<Vec<u32>>,
    /// For each right word, the sorted distinct left words preceding it.
    predecessors: Vec<Vec<u32>>,
}

fn pair_key(left: u32, right: u32) -> u64 {
    ((left as u64) << 32) | right as u64
}

/// Enumerate all `n`-token windows of `corpus` and accumulate support counts.
/// Documents shorter than `n` contribute no windows.
pub fn extract_windows(corpus: &Corpus, n: usize) -> Result<ContextWindows> {
    if n < 2 {
        return Err(Error::InvalidParam(format!(
            "window length must be >= 2, got {n}"
        )));
    }
    let vocab_size = corpus.vocab.len();
    let mut membership = vec![0u64; vocab_size];
    let mut pairs: HashMap<u64, u64> = HashMap::new();
    let mut window_count = 0u64;
    let mut seen_words: Vec<u32> = Vec::with_capacity(n);
    let mut seen_pairs: Vec<u64> = Vec::with_capacity(n * (n - 1) / 2 + n);
    for doc in &corpus.docs {
        if doc.tokens.len() < n {
            continue;
        }
        for window in doc.tokens.windows(n) {
            window_count += 1;
            seen_words.clear();
            for &w in window {
                if !seen_words.contains(&w) {
                    seen_words.push(w);
                    membership[w as usize] += 1;
                }
            }
            seen_pairs.clear();
            for i in 0..n {
                for j in (i + 1)..n {
                    let key = pair_key(window[i], window[j]);
                    if !seen_pairs.contains(&key) {
                        seen_pairs.push(key);
                        *pairs.entry(key).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    Ok(ContextWindows::from_counts(
        n,
        vocab_size,
        window_count,
        membership,
        pairs,
    ))
}

impl ContextWindows {
    fn from_counts(
        n: usize,
        vocab_size: usize,
        window_count: u64,
        membership: Vec<u64>,
        pairs: HashMap<u64, u64>,
    ) -> Self {
        let mut successors: Vec<Vec<u32>> = vec![Vec::new(); vocab_size];
        let mut predecessors: Vec<Vec<u32>> = vec![Vec::new(); vocab_size];
        for &key in pairs.keys() {
            let left = (key >> 32) as u32;
            let right = (key & 0xffff_ffff) as u32;
            successors[left as usize].push(right);
            predecessors[right as usize].push(left);
        }
        for list in successors.iter_mut().chain(predecessors.iter_mut()) {
            list.sort_unstable();
        }
        ContextWindows {
            n,
            vocab_size,
            window_count,
            membership,
            pairs,
            successors,
            predecessors,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    pub fn window_count(&self) -> u64 {
        self.window_count
    }

    pub fn membership(&self, w: u32) -> u64 {
        self.membership.get(w as usize).copied().unwrap_or(0)
    }

    pub fn ordered_count(&self, left: u32, right: u32) -> u64 {
        self.pairs.get(&pair_key(left, right)).copied().unwrap_or(0)
    }

    /// Fraction of windows containing `w`.
    pub fn support(&self, w: u32) -> f64 {
        if self.window_count == 0 {
            return 0.0;
        }
        self.membership(w) as f64 / self.window_count as f64
    }

    /// Fraction of windows where `left` precedes `right`.
    pub fn rule_support(&self, left: u32, right: u32) -> f64 {
        if self.window_count == 0 {
            return 0.0;
        }
        self.ordered_count(left, right) as f64 / self.window_count as f64
    }

    /// Distinct words that `w` precedes in at least one window.
    pub fn successors(&self, w: u32) -> &[u32] {
        self.successors
            .get(w as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Distinct words preceding `w` in at least one window.
    pub fn predecessors(&self, w: u32) -> &[u32] {
        self.predecessors
            .get(w as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Words sharing at least one window with `w`, in sorted order.
    pub fn co_windowed(&self, w: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .successors(w)
            .iter()
            .chain(self.predecessors(w).iter())
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

// ---------------------------------------------------------------------------
// Archive: windows.json (shape), membership.tsv, pairs.tsv.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct WindowsHeader {
    n: usize,
    vocab_size: usize,
    window_count: u64,
}

pub const HEADER_FILE: &str = "windows.json";
pub const MEMBERSHIP_FILE: &str = "membership.tsv";
pub const PAIRS_FILE: &str = "pairs.tsv";

pub fn save_archive(w: &ContextWindows, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let header = WindowsHeader {
        n: w.n,
        vocab_size: w.vocab_size,
        window_count: w.window_count,
    };
    let header_path = dir.join(HEADER_FILE);
    std::fs::write(
        &header_path,
        serde_json::to_string_pretty(&header).expect("serialize header"),
    )
    .map_err(|e| Error::io(&header_path, e))?;

    let mem_path = dir.join(MEMBERSHIP_FILE);
    let mut out = String::new();
    for (id, count) in w.membership.iter().enumerate() {
        out.push_str(&format!("{id}\t{count}\n"));
    }
    std::fs::write(&mem_path, out).map_err(|e| Error::io(&mem_path, e))?;

    let pairs_path = dir.join(PAIRS_FILE);
    let mut keys: Vec<u64> = w.pairs.keys().copied().collect();
    keys.sort_unstable();
    let file = std::fs::File::create(&pairs_path).map_err(|e| Error::io(&pairs_path, e))?;
    let mut buf = std::io::BufWriter::new(file);
    for key in keys {
        let left = (key >> 32) as u32;
        let right = (key & 0xffff_ffff) as u32;
        writeln!(buf, "{left}\t{right}\t{}", w.pairs[&key]).map_err(|e| Error::io(&pairs_path, e))?;
    }
    buf.flush().map_err(|e| Error::io(&pairs_path, e))?;
    Ok(())
}

pub fn load_archive(dir: &Path) -> Result<ContextWindows> {
    let header_path = dir.join(HEADER_FILE);
    if !header_path.is_file() {
        return Err(Error::MissingArtifact(header_path));
    }
    let text = std::fs::read_to_string(&header_path).map_err(|e| Error::io(&header_path, e))?;
    let header: WindowsHeader = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: header_path.clone(),
        line: 0,
        msg: e.to_string(),
    })?;

    let mem_path = dir.join(MEMBERSHIP_FILE);
    if !mem_path.is_file() {
        return Err(Error::MissingArtifact(mem_path));
    }
    let mut membership = vec![0u64; header.vocab_size];
    let file = std::fs::File::open(&mem_path).map_err(|e| Error::io(&mem_path, e))?;
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(&mem_path, e))?;
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: &str| Error::Parse {
            path: mem_path.clone(),
            line: lineno + 1,
            msg: msg.to_string(),
        };
        let (id, count) = line.split_once('\t').ok_or_else(|| parse_err("expected id<TAB>count"))?;
        let id: usize = id.parse().map_err(|_| parse_err("bad id"))?;
        if id >= header.vocab_size {
            return Err(parse_err("id out of range"));
        }
        membership[id] = count.parse().map_err(|_| parse_err("bad count"))?;
    }

    let pairs_path = dir.join(PAIRS_FILE);
    if !pairs_path.is_file() {
        return Err(Error::MissingArtifact(pairs_path));
    }
    let mut pairs = HashMap::new();
    let file = std::fs::File::open(&pairs_path).map_err(|e| Error::io(&pairs_path, e))?;
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(&pairs_path, e))?;
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: &str| Error::Parse {
            path: pairs_path.clone(),
            line: lineno + 1,
            msg: msg.to_string(),
        };
        let mut fields = line.split('\t');
        let left: u32 = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| parse_err("bad left id"))?;
        let right: u32 = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| parse_err("bad right id"))?;
        let count: u64 = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| parse_err("bad count"))?;
        pairs.insert(pair_key(left, right), count);
    }
    Ok(ContextWindows::from_counts(
        header.n,
        header.vocab_size,
        header.window_count,
        membership,
        pairs,
    ))
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Brute-force window enumeration, kept independent of the incremental
    //! counting above. Test code only.

    use super::*;

    pub struct NaiveWindows {
        pub window_count: u64,
        pub membership: HashMap<u32, u64>,
        pub ordered: HashMap<(u32, u32), u64>,
    }

    pub fn enumerate(corpus: &Corpus, n: usize) -> NaiveWindows {
        let mut all_windows: Vec<Vec<u32>> = Vec::new();
        for doc in &corpus.docs {
            if doc.tokens.len() >= n {
                for i in 0..=(doc.tokens.len() - n) {
                    all_windows.push(doc.tokens[i..i + n].to_vec());
                }
            }
        }
        let mut membership: HashMap<u32, u64> = HashMap::new();
        let mut ordered: HashMap<(u32, u32), u64> = HashMap::new();
        for window in &all_windows {
            let mut words: Vec<u32> = window.clone();
            words.sort_unstable();
            words.dedup();
            for w in words {
                *membership.entry(w).or_insert(0) += 1;
            }
            let mut pairs_here: Vec<(u32, u32)> = Vec::new();
            for i in 0..window.len() {
                for j in (i + 1)..window.len() {
                    pairs_here.push((window[i], window[j]));
                }
            }
            pairs_here.sort_unstable();
            pairs_here.dedup();
            for p in pairs_here {
                *ordered.entry(p).or_insert(0) += 1;
            }
        }
        NaiveWindows {
            window_count: all_windows.len() as u64,
            membership,
            ordered,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn corpus_of(docs: Vec<Vec<&str>>) -> Corpus {
        Corpus::from_token_docs(docs.into_iter().map(|d| (None, d)).collect()).unwrap()
    }

    #[test]
    fn hand_enumerated_example() {
        let c = corpus_of(vec![vec!["a", "b", "a", "c"]]);
        let w = extract_windows(&c, 2).unwrap();
        let a = c.vocab.id("a").unwrap();
        let b = c.vocab.id("b").unwrap();
        let cc = c.vocab.id("c").unwrap();
        assert_eq!(w.window_count(), 3);
        assert_eq!(w.membership(a), 3);
        assert_eq!(w.membership(b), 2);
        assert_eq!(w.membership(cc), 1);
        assert_eq!(w.ordered_count(a, b), 1);
        assert_eq!(w.ordered_count(b, a), 1);
        assert_eq!(w.ordered_count(a, cc), 1);
        assert_eq!(w.ordered_count(cc, a), 0);
    }

    #[test]
    fn short_document_contributes_nothing() {
        let c = corpus_of(vec![vec!["a"]]);
        let w = extract_windows(&c, 5).unwrap();
        assert_eq!(w.window_count(), 0);
        assert_eq!(w.membership(0), 0);
    }

    #[test]
    fn repeated_word_self_pair() {
        let c = corpus_of(vec![vec!["a", "a"]]);
        let w = extract_windows(&c, 2).unwrap();
        assert_eq!(w.window_count(), 1);
        assert_eq!(w.membership(0), 1);
        assert_eq!(w.ordered_count(0, 0), 1);
    }

    #[test]
    fn n_below_two_rejected() {
        let c = corpus_of(vec![vec!["a", "b"]]);
        assert!(extract_windows(&c, 1).is_err());
    }

    #[test]
    fn matches_oracle_on_random_corpora() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let alphabet = ["a", "b", "c", "d", "e", "f"];
        for _ in 0..300 {
            let n_docs = rng.gen_range(1..=4);
            let docs: Vec<Vec<&str>> = (0..n_docs)
                .map(|_| {
                    let len = rng.gen_range(1..=12);
                    (0..len)
                        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
                        .collect()
                })
                .collect();
            let c = corpus_of(docs);
            for n in [2usize, 3, 5] {
                let fast = extract_windows(&c, n).unwrap();
                let slow = oracle::enumerate(&c, n);
                assert_eq!(fast.window_count(), slow.window_count);
                // window count identity
                let expected: u64 = c
                    .docs
                    .iter()
                    .map(|d| d.tokens.len().saturating_sub(n - 1) as u64)
                    .sum();
                assert_eq!(fast.window_count(), expected);
                for w in 0..c.vocab.len() as u32 {
                    assert_eq!(
                        fast.membership(w),
                        slow.membership.get(&w).copied().unwrap_or(0)
                    );
                    assert!(fast.membership(w) <= fast.window_count());
                    for w2 in 0..c.vocab.len() as u32 {
                        let fast_count = fast.ordered_count(w, w2);
                        assert_eq!(
                            fast_count,
                            slow.ordered.get(&(w, w2)).copied().unwrap_or(0)
                        );
                        assert!(fast_count <= fast.membership(w).min(fast.membership(w2)));
                    }
                }
            }
        }
    }

    #[test]
    fn archive_round_trip() {
        let c = corpus_of(vec![vec!["a", "b", "a", "c", "b"], vec!["c", "c", "a"]]);
        let w = extract_windows(&c, 3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        save_archive(&w, dir.path()).unwrap();
        let back = load_archive(dir.path()).unwrap();
        assert_eq!(back.n(), w.n());
        assert_eq!(back.window_count(), w.window_count());
        for i in 0..c.vocab.len() as u32 {
            assert_eq!(back.membership(i), w.membership(i));
            assert_eq!(back.successors(i), w.successors(i));
            for j in 0..c.vocab.len() as u32 {
                assert_eq!(back.ordered_count(i, j), w.ordered_count(i, j));
            }
        }
    }
}
