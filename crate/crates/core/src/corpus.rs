//! Corpus ingestion: tokenization, query terms, documents and the vocabulary.
//!
//! Normalization is deliberately minimal: split on Unicode whitespace, strip
//! leading/trailing non-alphanumeric characters from each token, and case-fold
//! when the config asks for it. No stemming, no stop words — words are opaque
//! units, and anything smarter would silently change event-space semantics.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("term has no words after normalization")]
    EmptyTerm,
    #[error("duplicate document id {0:?}")]
    DuplicateDocumentId(String),
    #[error("unreadable source {path}: {source}")]
    UnreadableSource {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed record at line {line}: {message}")]
    MalformedRecord { line: usize, message: String },
}

/// Normalization settings shared by document ingestion and query parsing.
///
/// Queries must be parsed with the same config the index was built with,
/// otherwise hit counts silently disagree; the index file stores its config
/// so the CLI can guarantee this.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizerConfig {
    pub lowercase: bool,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        TokenizerConfig { lowercase: true }
    }
}

/// Split `text` into normalized word tokens.
///
/// Empty input yields an empty sequence; tokens that normalize to nothing
/// (pure punctuation) are dropped. Idempotent on its own joined output.
pub fn tokenize(text: &str, config: &TokenizerConfig) -> Vec<String> {
    text.split_whitespace()
        .filter_map(|raw| {
            let word = if config.lowercase {
                raw.to_lowercase()
            } else {
                raw.to_string()
            };
            let trimmed = word.trim_matches(|c: char| !c.is_alphanumeric());
            if trimmed.is_empty() {
                None
            } else {
                Some(trimmed.to_string())
            }
        })
        .collect()
}

/// A query unit: an ordered sequence of one or more normalized words.
///
/// The canonical ordering (and `Display` form) is the words joined by single
/// spaces, compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    words: Vec<String>,
}

impl Term {
    /// Parse a raw string into a term using the given normalization.
    pub fn parse(raw: &str, config: &TokenizerConfig) -> Result<Term, CorpusError> {
        let words = tokenize(raw, config);
        if words.is_empty() {
            return Err(CorpusError::EmptyTerm);
        }
        Ok(Term { words })
    }

    /// Build a term from already-normalized words.
    ///
    /// Words must be non-empty and whitespace-free (the tokenizer guarantees
    /// this for its own output).
    pub fn from_words<I, S>(words: I) -> Result<Term, CorpusError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let words: Vec<String> = words.into_iter().map(Into::into).collect();
        if words.is_empty() || words.iter().any(|w| w.is_empty() || w.contains(char::is_whitespace))
        {
            return Err(CorpusError::EmptyTerm);
        }
        Ok(Term { words })
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    /// Number of words, |t|.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// The canonical query string: words joined by single spaces.
    pub fn as_query(&self) -> String {
        self.words.join(" ")
    }

    /// True iff `other`'s words appear as a contiguous subsequence of ours.
    pub fn contains_subterm(&self, other: &Term) -> bool {
        let k = other.words.len();
        k <= self.words.len() && self.words.windows(k).any(|win| win == other.words.as_slice())
    }

    /// All strictly shorter contiguous subterms, in (start, length) order.
    pub fn proper_contiguous_subterms(&self) -> Vec<Term> {
        let n = self.words.len();
        let mut out = Vec::new();
        for len in 1..n {
            for start in 0..=(n - len) {
                out.push(Term {
                    words: self.words[start..start + len].to_vec(),
                });
            }
        }
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_query())
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Canonical ordering is defined on the joined string, not the word
        // vector; the two differ for words containing control characters.
        self.as_query().cmp(&other.as_query())
    }
}

/// One "web page": an identifier plus its normalized token sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub tokens: Vec<String>,
}

impl Document {
    pub fn token_count(&self) -> usize {
        self.tokens.len()
    }
}

/// Dense word→index map over everything seen at ingestion, indices 1..=K.
#[derive(Debug, Clone, Default)]
pub struct Vocabulary {
    word_to_index: BTreeMap<String, u32>,
}

impl Vocabulary {
    fn build(documents: &[Document]) -> Vocabulary {
        let mut word_to_index = BTreeMap::new();
        let mut next = 1u32;
        for doc in documents {
            for token in &doc.tokens {
                if !word_to_index.contains_key(token) {
                    word_to_index.insert(token.clone(), next);
                    next += 1;
                }
            }
        }
        Vocabulary { word_to_index }
    }

    /// K, the vocabulary size.
    pub fn size(&self) -> usize {
        self.word_to_index.len()
    }

    /// The membership indicator: 1 iff the word was seen during ingestion.
    pub fn contains(&self, word: &str) -> bool {
        self.word_to_index.contains_key(word)
    }

    /// 1-based dense index of a word, if seen.
    pub fn index_of(&self, word: &str) -> Option<u32> {
        self.word_to_index.get(word).copied()
    }

    /// Words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.word_to_index.keys().map(String::as_str)
    }
}

#[derive(Serialize, Deserialize)]
struct Record {
    id: String,
    text: String,
}

/// An ingested document collection, ordered lexicographically by id.
#[derive(Debug, Clone)]
pub struct Corpus {
    documents: Vec<Document>,
    vocabulary: Vocabulary,
    config: TokenizerConfig,
}

impl Corpus {
    /// Build a corpus from (id, text) records. Ids must be unique; documents
    /// are sorted by id so the result is deterministic for a given input.
    pub fn from_records<I>(records: I, config: TokenizerConfig) -> Result<Corpus, CorpusError>
    where
        I: IntoIterator<Item = (String, String)>,
    {
        let mut seen = HashSet::new();
        let mut documents = Vec::new();
        for (id, text) in records {
            if !seen.insert(id.clone()) {
                return Err(CorpusError::DuplicateDocumentId(id));
            }
            let tokens = tokenize(&text, &config);
            documents.push(Document { id, tokens });
        }
        documents.sort_by(|a, b| a.id.cmp(&b.id));
        let vocabulary = Vocabulary::build(&documents);
        Ok(Corpus {
            documents,
            vocabulary,
            config,
        })
    }

    /// Ingest from a path: a directory of `.txt` files (id = file stem) or a
    /// line-delimited record file with string fields "id" and "text".
    pub fn ingest(path: &Path, config: TokenizerConfig) -> Result<Corpus, CorpusError> {
        let meta = fs::metadata(path).map_err(|e| CorpusError::UnreadableSource {
            path: path.display().to_string(),
            source: e,
        })?;
        if meta.is_dir() {
            Corpus::ingest_dir(path, config)
        } else {
            Corpus::ingest_jsonl(path, config)
        }
    }

    /// Ingest every `.txt` file in a directory (non-recursive).
    pub fn ingest_dir(dir: &Path, config: TokenizerConfig) -> Result<Corpus, CorpusError> {
        let unreadable = |e: std::io::Error| CorpusError::UnreadableSource {
            path: dir.display().to_string(),
            source: e,
        };
        let mut records = Vec::new();
        for entry in fs::read_dir(dir).map_err(unreadable)? {
            let entry = entry.map_err(unreadable)?;
            let path = entry.path();
            if !path.is_file() || path.extension().map(|e| e != "txt").unwrap_or(true) {
                continue;
            }
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let text = fs::read_to_string(&path).map_err(|e| CorpusError::UnreadableSource {
                path: path.display().to_string(),
                source: e,
            })?;
            records.push((id, text));
        }
        Corpus::from_records(records, config)
    }

    /// Ingest a line-delimited record stream: one JSON map per line with
    /// string fields "id" and "text". Blank lines are skipped.
    pub fn ingest_jsonl(path: &Path, config: TokenizerConfig) -> Result<Corpus, CorpusError> {
        let file = fs::File::open(path).map_err(|e| CorpusError::UnreadableSource {
            path: path.display().to_string(),
            source: e,
        })?;
        let mut records = Vec::new();
        for (lineno, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| CorpusError::UnreadableSource {
                path: path.display().to_string(),
                source: e,
            })?;
            if line.trim().is_empty() {
                continue;
            }
            let record: Record =
                serde_json::from_str(&line).map_err(|e| CorpusError::MalformedRecord {
                    line: lineno + 1,
                    message: e.to_string(),
                })?;
            records.push((record.id, record.text));
        }
        Corpus::from_records(records, config)
    }

    /// Serialize back to the record-stream format (normalized text).
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for doc in &self.documents {
            let record = Record {
                id: doc.id.clone(),
                text: doc.tokens.join(" "),
            };
            out.push_str(&serde_json::to_string(&record).expect("record serializes"));
            out.push('\n');
        }
        out
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    pub fn config(&self) -> &TokenizerConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}
