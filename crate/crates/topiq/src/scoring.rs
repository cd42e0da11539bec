//! Keyword-property scores for topic quality.
//!
//! Four word/topic properties are combined here:
//!
//! - residual IDF ([`ridf`]): observed IDF minus the IDF expected under a
//!   Poisson occurrence model with the word's mean rate. Positive values
//!   mark bursty, domain-specific words; words whose document spread matches
//!   their total frequency score near zero.
//! - association lift ([`pal_pair`], [`pal_word`]): ordered rule support
//!   inside fixed-length context windows, normalized by the root of the
//!   summed single-word supports. A word's score is its maximum over
//!   candidate partners.
//! - embedding coherence ([`coherence`]): mean pairwise cosine similarity of
//!   a topic's top words, each pair weighted by the larger of the two
//!   residual-IDF values; [`baseline_coherence`] is the unweighted variant.
//! - specificity ([`score_topic`]): coherence multiplied by the sum of the
//!   top words' lift scores.
//!
//! All functions are pure; batch scoring is parallel across topics with
//! order-independent results.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{ContextWindows, CorpusStats, Vocabulary};
use crate::embeddings::{cosine, EmbeddingTable};
use crate::error::{Error, Result};
use crate::lda::TopicTopWords;

/// Which window order counts as the rule direction for lift scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleDirection {
    /// Support of windows where the first argument precedes the second.
    #[default]
    LeftThenRight,
    /// Flipped reading: support of windows where the second argument
    /// precedes the first.
    RightThenLeft,
}

/// Per-word scores as exported in the word-level TSV.
#[derive(Debug, Clone, PartialEq)]
pub struct WordScores {
    pub word: u32,
    pub ridf: f64,
    pub pal: f64,
}

/// Per-topic score bundle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicScore {
    pub topic_id: usize,
    pub coh: f64,
    pub pal_sum: f64,
    pub specificity: f64,
    pub baseline_coh: f64,
    pub gm: f64,
    pub mean_ridf: f64,
}

/// Residual IDF from raw counts: `-log2(df/n) + log2(1 - e^(-cf/n))`.
pub fn ridf(df: u64, cf: u64, n_docs: usize) -> f64 {
    let n = n_docs as f64;
    let idf = -(df as f64 / n).log2();
    let expected_idf = -(1.0 - (-(cf as f64) / n).exp()).log2();
    idf - expected_idf
}

/// Residual IDF of a word present in `stats`.
pub fn ridf_word(word: u32, stats: &CorpusStats) -> Result<f64> {
    if (word as usize) >= stats.vocab_size() || stats.df(word) == 0 {
        return Err(Error::UnknownWord(format!("word id {word}")));
    }
    Ok(ridf(stats.df(word), stats.cf(word), stats.n_docs()))
}

/// Lift of the ordered pair `(left, right)` under the given direction.
/// Returns 0 when no window contains either word.
pub fn pal_pair_directed(
    windows: &ContextWindows,
    left: u32,
    right: u32,
    direction: RuleDirection,
) -> f64 {
    let support_sum = windows.support(left) + windows.support(right);
    if support_sum <= 0.0 {
        return 0.0;
    }
    let rule = match direction {
        RuleDirection::LeftThenRight => windows.rule_support(left, right),
        RuleDirection::RightThenLeft => windows.rule_support(right, left),
    };
    rule / support_sum.sqrt()
}

/// Lift of `(left, right)` with the default left-precedes-right rule.
pub fn pal_pair(windows: &ContextWindows, left: u32, right: u32) -> f64 {
    pal_pair_directed(windows, left, right, RuleDirection::LeftThenRight)
}

/// Max lift of `word` over an explicit candidate set (the word itself is
/// skipped).
pub fn pal_word_among(
    windows: &ContextWindows,
    word: u32,
    candidates: &[u32],
    direction: RuleDirection,
) -> f64 {
    let mut best = 0.0f64;
    for &other in candidates {
        if other == word {
            continue;
        }
        best = best.max(pal_pair_directed(windows, word, other, direction));
    }
    best
}

/// Max lift of `word` over all words sharing a window with it. Equals the
/// max over the full vocabulary since the lift of never-co-windowed pairs
/// is 0. Returns 0 for words appearing in no window.
pub fn pal_word(windows: &ContextWindows, word: u32, direction: RuleDirection) -> f64 {
    let partners = match direction {
        RuleDirection::LeftThenRight => windows.successors(word),
        RuleDirection::RightThenLeft => windows.predecessors(word),
    };
    pal_word_among(windows, word, partners, direction)
}

/// Weighted coherence of a word set given one vector and one residual-IDF
/// value per word (`None` marks out-of-vocabulary words, whose pairs
/// contribute similarity 0 while keeping the denominator fixed).
///
/// The sum runs over ordered pairs `(i, j != i)` weighted by
/// `max(ridf_i, ridf_j)`, divided by `2 * C(K, 2) = K(K-1)`, i.e. a weighted
/// mean over pairs.
pub fn coherence(vectors: &[Option<&[f64]>], ridfs: &[f64]) -> Result<f64> {
    let k = vectors.len();
    if k < 2 {
        return Err(Error::InvalidParam(format!(
            "coherence needs at least 2 words, got {k}"
        )));
    }
    if ridfs.len() != k {
        return Err(Error::InvalidParam(
            "one residual-IDF value per word required".into(),
        ));
    }
    let mut sum = 0.0;
    for i in 0..k {
        for j in (i + 1)..k {
            let weight = ridfs[i].max(ridfs[j]);
            let sim = pair_cosine(vectors[i], vectors[j])?;
            // each unordered pair appears twice in the ordered sum
            sum += 2.0 * weight * sim;
        }
    }
    Ok(sum / (k * (k - 1)) as f64)
}

/// Unweighted mean pairwise cosine over unordered pairs; out-of-vocabulary
/// pairs contribute 0.
pub fn baseline_coherence(vectors: &[Option<&[f64]>]) -> Result<f64> {
    let k = vectors.len();
    if k < 2 {
        return Err(Error::InvalidParam(format!(
            "coherence needs at least 2 words, got {k}"
        )));
    }
    let mut sum = 0.0;
    for i in 0..k {
        for j in (i + 1)..k {
            sum += pair_cosine(vectors[i], vectors[j])?;
        }
    }
    Ok(sum / (k * (k - 1) / 2) as f64)
}

fn pair_cosine(u: Option<&[f64]>, v: Option<&[f64]>) -> Result<f64> {
    match (u, v) {
        (Some(u), Some(v)) => cosine(u, v),
        _ => Ok(0.0),
    }
}

/// Geometric mean of (mean residual IDF, lift sum, coherence), with negative
/// factors clamped to 0 so the cube root stays real.
pub fn geometric_mean_score(mean_ridf: f64, pal_sum: f64, coh: f64) -> f64 {
    let product = mean_ridf.max(0.0) * pal_sum.max(0.0) * coh.max(0.0);
    product.cbrt()
}

/// Everything needed to score a topic's word list.
pub struct ScoringContext<'a> {
    pub vocab: &'a Vocabulary,
    pub stats: &'a CorpusStats,
    pub windows: &'a ContextWindows,
    pub embeddings: &'a EmbeddingTable,
    pub direction: RuleDirection,
}

impl<'a> ScoringContext<'a> {
    fn vector_of(&self, word: u32) -> Option<&'a [f64]> {
        self.embeddings.get(self.vocab.word(word))
    }
}

/// Score one topic from its top-word list.
pub fn score_topic(topic_id: usize, words: &[u32], ctx: &ScoringContext) -> Result<TopicScore> {
    if words.len() < 2 {
        return Err(Error::InvalidParam(format!(
            "topic {topic_id} has fewer than 2 top words"
        )));
    }
    let ridfs: Vec<f64> = words
        .iter()
        .map(|&w| ridf_word(w, ctx.stats))
        .collect::<Result<_>>()?;
    let vectors: Vec<Option<&[f64]>> = words.iter().map(|&w| ctx.vector_of(w)).collect();
    let coh = coherence(&vectors, &ridfs)?;
    let baseline_coh = baseline_coherence(&vectors)?;
    let pal_sum: f64 = words
        .iter()
        .map(|&w| pal_word(ctx.windows, w, ctx.direction))
        .sum();
    let mean_ridf = ridfs.iter().sum::<f64>() / ridfs.len() as f64;
    Ok(TopicScore {
        topic_id,
        coh,
        pal_sum,
        specificity: coh * pal_sum,
        baseline_coh,
        gm: geometric_mean_score(mean_ridf, pal_sum, coh),
        mean_ridf,
    })
}

/// Score every topic; parallel across topics, output in topic order.
pub fn score_topics(top_lists: &[TopicTopWords], ctx: &ScoringContext) -> Result<Vec<TopicScore>> {
    top_lists
        .par_iter()
        .map(|top| {
            let words: Vec<u32> = top.entries.iter().map(|&(w, _)| w).collect();
            score_topic(top.topic_id, &words, ctx)
        })
        .collect()
}

/// Word-level scores for the whole vocabulary, for the word-score export.
pub fn word_scores(
    stats: &CorpusStats,
    windows: &ContextWindows,
    direction: RuleDirection,
) -> Vec<WordScores> {
    (0..stats.vocab_size() as u32)
        .into_par_iter()
        .map(|w| WordScores {
            word: w,
            ridf: ridf(stats.df(w), stats.cf(w), stats.n_docs()),
            pal: pal_word(windows, w, direction),
        })
        .collect()
}
