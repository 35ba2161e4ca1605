//! Seeded corpus generators for exercising the verifier at desk scale.
//!
//! All generators are deterministic for a given seed, so expected values can
//! be frozen in tests. The disjoint and alias generators construct corpora
//! that satisfy the disjoint-vocabulary and alias hypotheses by construction,
//! which is what turns the corresponding hypothesis checks into exact ones.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::{Corpus, TokenizerConfig};

/// The three-document worked example used across the test suites.
pub fn toy_corpus() -> Corpus {
    Corpus::from_records(
        vec![
            ("d1".to_string(), "a b c".to_string()),
            ("d2".to_string(), "b c d".to_string()),
            ("d3".to_string(), "a d".to_string()),
        ],
        TokenizerConfig::default(),
    )
    .expect("toy corpus is well-formed")
}

fn sample_len(rng: &mut ChaCha8Rng, len_range: &RangeInclusive<usize>) -> usize {
    rng.random_range(*len_range.start()..=*len_range.end())
}

/// A corpus of `docs` documents with tokens drawn uniformly from a vocabulary
/// of `vocab` words ("w0000", "w0001", ...).
pub fn uniform_corpus(
    docs: usize,
    vocab: usize,
    len_range: RangeInclusive<usize>,
    seed: u64,
) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<String> = (0..vocab).map(|i| format!("w{i:04}")).collect();
    let records = (0..docs)
        .map(|d| {
            let len = sample_len(&mut rng, &len_range);
            let text = (0..len)
                .map(|_| words[rng.random_range(0..words.len())].as_str())
                .collect::<Vec<_>>()
                .join(" ");
            (format!("d{d:05}"), text)
        })
        .collect::<Vec<_>>();
    Corpus::from_records(records, TokenizerConfig::default()).expect("generated ids are unique")
}

/// Two halves with disjoint vocabularies in disjoint document sets: "a…" docs
/// use only "aw…" words, "b…" docs only "bw…" words. Every cross-vocabulary
/// pair therefore has an empty doubleton and an additive union.
pub fn disjoint_corpus(
    docs_per_side: usize,
    vocab_per_side: usize,
    len_range: RangeInclusive<usize>,
    seed: u64,
) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(docs_per_side * 2);
    for (prefix, word_prefix) in [("a", "aw"), ("b", "bw")] {
        for d in 0..docs_per_side {
            let len = sample_len(&mut rng, &len_range);
            let text = (0..len)
                .map(|_| format!("{word_prefix}{:03}", rng.random_range(0..vocab_per_side)))
                .collect::<Vec<_>>()
                .join(" ");
            records.push((format!("{prefix}{d:05}"), text));
        }
    }
    Corpus::from_records(records, TokenizerConfig::default()).expect("generated ids are unique")
}

/// A corpus where the two alias terms are always co-placed: every document
/// contains either both aliases or neither, so their singleton events are
/// identical sets. Filler tokens come from "f…" words.
pub fn alias_corpus(
    docs: usize,
    alias_a: &str,
    alias_b: &str,
    filler_vocab: usize,
    len_range: RangeInclusive<usize>,
    seed: u64,
) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let records = (0..docs)
        .map(|d| {
            let len = sample_len(&mut rng, &len_range);
            let mut tokens: Vec<String> = (0..len)
                .map(|_| format!("f{:03}", rng.random_range(0..filler_vocab)))
                .collect();
            if rng.random_bool(0.5) {
                let at = rng.random_range(0..=tokens.len());
                tokens.insert(at, alias_a.to_string());
                let at = rng.random_range(0..=tokens.len());
                tokens.insert(at, alias_b.to_string());
            }
            (format!("d{d:05}"), tokens.join(" "))
        })
        .collect::<Vec<_>>();
    Corpus::from_records(records, TokenizerConfig::default()).expect("generated ids are unique")
}
