//! The universe of indexed documents as a positional inverted index, and the
//! singleton / doubleton / proximity event spaces evaluated over it.
//!
//! Two occurrence semantics are supported. Under `phrase` a multi-word term
//! occurs in a document iff its words appear contiguously in order; under
//! `bag` it occurs iff each word appears somewhere. Phrase is the default:
//! it is what makes subterm containment and positional proximity well-defined.
//!
//! Every query path reduces to sorted-list merges over the postings; the
//! linear-scan oracle [`brute_force_doubleton_count`] deliberately avoids the
//! postings entirely so the two routes can be checked against each other.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::num::NonZeroU32;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{Corpus, Term, TokenizerConfig};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("unknown document {0:?}")]
    UnknownDocument(String),
    #[error("proximity requires an index built with phrase semantics")]
    BagSemanticsUnsupported,
    #[error("pair members must be distinct terms")]
    PairMembersEqual,
    #[error("pair references a term not in the catalog")]
    TermNotCataloged,
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("corrupt index at line {line}: {message}")]
    CorruptIndex { line: usize, message: String },
}

/// Term-occurrence semantics an index is built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Phrase,
    Bag,
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semantics::Phrase => write!(f, "phrase"),
            Semantics::Bag => write!(f, "bag"),
        }
    }
}

/// Internal document handle: position in the id-sorted document table.
pub type DocId = u32;

#[derive(Debug, Clone)]
pub(crate) struct DocEntry {
    pub(crate) id: String,
    pub(crate) len: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct Posting {
    pub(crate) doc: DocId,
    pub(crate) positions: Vec<u32>,
}

/// A set of documents (`Ω_x` or `Ω_x∩Ω_y`) with its cardinality.
///
/// Holds internal ids sorted ascending, which — because the document table is
/// sorted — is also lexicographic order of the string ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventSpace {
    docs: Vec<DocId>,
}

impl EventSpace {
    pub fn empty() -> EventSpace {
        EventSpace { docs: Vec::new() }
    }

    pub(crate) fn from_sorted(docs: Vec<DocId>) -> EventSpace {
        debug_assert!(docs.windows(2).all(|w| w[0] < w[1]));
        EventSpace { docs }
    }

    /// |Ω_x|, the hit count.
    pub fn cardinality(&self) -> u64 {
        self.docs.len() as u64
    }

    pub fn docs(&self) -> &[DocId] {
        &self.docs
    }

    pub fn contains(&self, doc: DocId) -> bool {
        self.docs.binary_search(&doc).is_ok()
    }

    pub fn is_subset_of(&self, other: &EventSpace) -> bool {
        self.docs.iter().all(|d| other.contains(*d))
    }

    pub fn intersect(&self, other: &EventSpace) -> EventSpace {
        EventSpace::from_sorted(intersect_sorted(&self.docs, &other.docs))
    }

    /// Resolve internal ids back to document identifiers.
    pub fn resolve<'a>(&self, index: &'a Index) -> Vec<&'a str> {
        self.docs.iter().map(|&d| index.doc_id_str(d)).collect()
    }
}

fn intersect_sorted(a: &[DocId], b: &[DocId]) -> Vec<DocId> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// The universe Ω: a positional inverted index over an ingested corpus.
///
/// Immutable after build; queries never mutate, so shared concurrent reads
/// are safe.
#[derive(Debug, Clone)]
pub struct Index {
    pub(crate) postings: BTreeMap<String, Vec<Posting>>,
    pub(crate) docs: Vec<DocEntry>,
    doc_lookup: HashMap<String, DocId>,
    semantics: Semantics,
    config: TokenizerConfig,
}

/// Build the index for a corpus. Documents keep their corpus order (sorted by
/// id), every token occurrence is recorded with its 0-based position.
pub fn build_index(corpus: &Corpus, semantics: Semantics) -> Index {
    let docs: Vec<DocEntry> = corpus
        .documents()
        .iter()
        .map(|d| DocEntry {
            id: d.id.clone(),
            len: d.tokens.len() as u32,
        })
        .collect();
    let mut map: HashMap<String, Vec<Posting>> = HashMap::new();
    for (doc, document) in corpus.documents().iter().enumerate() {
        let doc = doc as DocId;
        for (pos, token) in document.tokens.iter().enumerate() {
            let list = map.entry(token.clone()).or_default();
            match list.last_mut() {
                Some(last) if last.doc == doc => last.positions.push(pos as u32),
                _ => list.push(Posting {
                    doc,
                    positions: vec![pos as u32],
                }),
            }
        }
    }
    let doc_lookup = docs
        .iter()
        .enumerate()
        .map(|(i, d)| (d.id.clone(), i as DocId))
        .collect();
    Index {
        postings: map.into_iter().collect(),
        docs,
        doc_lookup,
        semantics,
        config: *corpus.config(),
    }
}

impl Index {
    /// |Ω|: the number of indexed documents.
    pub fn universe_size(&self) -> u64 {
        self.docs.len() as u64
    }

    /// Number of distinct indexed words.
    pub fn word_count(&self) -> usize {
        self.postings.len()
    }

    /// Total (word, document) posting entries.
    pub fn total_postings(&self) -> usize {
        self.postings.values().map(Vec::len).sum()
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn config(&self) -> &TokenizerConfig {
        &self.config
    }

    /// Indexed words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.postings.keys().map(String::as_str)
    }

    pub fn doc_id_str(&self, doc: DocId) -> &str {
        &self.docs[doc as usize].id
    }

    pub fn doc_len(&self, doc: DocId) -> u32 {
        self.docs[doc as usize].len
    }

    /// Longest document length, 0 on an empty index.
    pub fn max_doc_len(&self) -> u32 {
        self.docs.iter().map(|d| d.len).max().unwrap_or(0)
    }

    /// (id, token_count) pairs in table order; used for corpus/index checks.
    pub fn doc_table(&self) -> impl Iterator<Item = (&str, u32)> {
        self.docs.iter().map(|d| (d.id.as_str(), d.len))
    }

    fn positions_in(&self, word: &str, doc: DocId) -> Option<&[u32]> {
        let list = self.postings.get(word)?;
        let at = list.binary_search_by_key(&doc, |p| p.doc).ok()?;
        Some(&list[at].positions)
    }

    fn word_docs(&self, word: &str) -> Vec<DocId> {
        self.postings
            .get(word)
            .map(|list| list.iter().map(|p| p.doc).collect())
            .unwrap_or_default()
    }

    /// Start positions of the term's occurrences in one document under
    /// phrase semantics.
    fn occurrence_starts(&self, term: &Term, doc: DocId) -> Vec<u32> {
        let mut lists: Vec<&[u32]> = Vec::with_capacity(term.size());
        for word in term.words() {
            match self.positions_in(word, doc) {
                Some(positions) => lists.push(positions),
                None => return Vec::new(),
            }
        }
        lists[0]
            .iter()
            .copied()
            .filter(|&start| {
                lists.iter().enumerate().skip(1).all(|(offset, positions)| {
                    start
                        .checked_add(offset as u32)
                        .map(|p| positions.binary_search(&p).is_ok())
                        .unwrap_or(false)
                })
            })
            .collect()
    }

    /// Per-page truth indicator: does the term occur in this document?
    pub fn occurs_in(&self, term: &Term, doc_id: &str) -> Result<bool, EngineError> {
        let doc = *self
            .doc_lookup
            .get(doc_id)
            .ok_or_else(|| EngineError::UnknownDocument(doc_id.to_string()))?;
        Ok(match self.semantics {
            Semantics::Bag => term
                .words()
                .iter()
                .all(|w| self.positions_in(w, doc).is_some()),
            Semantics::Phrase => !self.occurrence_starts(term, doc).is_empty(),
        })
    }

    /// Ω_x: the documents containing an occurrence of the term. Unknown
    /// words simply yield an empty event space.
    pub fn singleton(&self, term: &Term) -> EventSpace {
        match self.semantics {
            Semantics::Bag => {
                let unique: BTreeSet<&String> = term.words().iter().collect();
                let mut docs: Option<Vec<DocId>> = None;
                for word in unique {
                    let list = self.word_docs(word);
                    docs = Some(match docs {
                        None => list,
                        Some(acc) => intersect_sorted(&acc, &list),
                    });
                    if docs.as_ref().map(Vec::is_empty).unwrap_or(false) {
                        break;
                    }
                }
                EventSpace::from_sorted(docs.unwrap_or_default())
            }
            Semantics::Phrase => {
                if term.size() == 1 {
                    return EventSpace::from_sorted(self.word_docs(&term.words()[0]));
                }
                let mut candidates: Option<Vec<DocId>> = None;
                for word in term.words() {
                    let list = self.word_docs(word);
                    candidates = Some(match candidates {
                        None => list,
                        Some(acc) => intersect_sorted(&acc, &list),
                    });
                    if candidates.as_ref().map(Vec::is_empty).unwrap_or(false) {
                        break;
                    }
                }
                let docs = candidates
                    .unwrap_or_default()
                    .into_iter()
                    .filter(|&doc| !self.occurrence_starts(term, doc).is_empty())
                    .collect();
                EventSpace::from_sorted(docs)
            }
        }
    }

    /// Ω_x∩Ω_y: the documents where both terms occur. With tx = ty this
    /// degenerates to the singleton.
    pub fn doubleton(&self, tx: &Term, ty: &Term) -> EventSpace {
        self.singleton(tx).intersect(&self.singleton(ty))
    }

    /// |Ω_x∪Ω_y| by inclusion–exclusion over the event cardinalities.
    pub fn union_cardinality(&self, tx: &Term, ty: &Term) -> u64 {
        let nx = self.singleton(tx).cardinality();
        let ny = self.singleton(ty).cardinality();
        let nxy = self.doubleton(tx, ty).cardinality();
        nx + ny - nxy
    }

    /// The proximity-restricted co-occurrence event: documents where some
    /// occurrence of `tx` and some occurrence of `ty` start within `window`
    /// token positions of each other. Always a subset of the doubleton.
    pub fn proximity(
        &self,
        tx: &Term,
        ty: &Term,
        window: NonZeroU32,
    ) -> Result<EventSpace, EngineError> {
        if self.semantics != Semantics::Phrase {
            return Err(EngineError::BagSemanticsUnsupported);
        }
        let both = self.doubleton(tx, ty);
        let w = window.get();
        let docs = both
            .docs()
            .iter()
            .copied()
            .filter(|&doc| {
                let sx = self.occurrence_starts(tx, doc);
                let sy = self.occurrence_starts(ty, doc);
                min_gap_within(&sx, &sy, w)
            })
            .collect();
        Ok(EventSpace::from_sorted(docs))
    }
}

/// True iff some pair of start positions from the two sorted lists lies
/// within `window` of each other.
fn min_gap_within(a: &[u32], b: &[u32], window: u32) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i].abs_diff(b[j]) <= window {
            return true;
        }
        if a[i] < b[j] {
            i += 1;
        } else {
            j += 1;
        }
    }
    false
}

fn tokens_contain(tokens: &[String], term: &Term, semantics: Semantics) -> bool {
    match semantics {
        Semantics::Bag => term
            .words()
            .iter()
            .all(|w| tokens.iter().any(|t| t == w)),
        Semantics::Phrase => {
            let k = term.size();
            k <= tokens.len()
                && tokens
                    .windows(k)
                    .any(|win| win.iter().zip(term.words()).all(|(a, b)| a == b))
        }
    }
}

/// The per-page indicator summed over the whole corpus: scans every document
/// linearly and counts those containing both terms. This is the independent
/// oracle for the doubleton cardinality; it must never touch the postings.
pub fn brute_force_doubleton_count(
    corpus: &Corpus,
    tx: &Term,
    ty: &Term,
    semantics: Semantics,
) -> u64 {
    corpus
        .documents()
        .iter()
        .filter(|d| {
            tokens_contain(&d.tokens, tx, semantics) && tokens_contain(&d.tokens, ty, semantics)
        })
        .count() as u64
}

/// Shared words of two terms (set intersection of their word sets).
pub fn word_overlap(tx: &Term, ty: &Term) -> BTreeSet<String> {
    let xs: BTreeSet<&String> = tx.words().iter().collect();
    ty.words()
        .iter()
        .filter(|w| xs.contains(w))
        .map(|w| w.to_string())
        .collect()
}

/// The terms and unordered term pairs known to a verification session.
/// Pair members must be distinct catalogued terms.
#[derive(Debug, Clone, Default)]
pub struct TermCatalog {
    terms: BTreeSet<Term>,
    pairs: BTreeSet<(Term, Term)>,
}

impl TermCatalog {
    pub fn new() -> TermCatalog {
        TermCatalog::default()
    }

    /// Returns false if the term was already present.
    pub fn add_term(&mut self, term: Term) -> bool {
        self.terms.insert(term)
    }

    /// Record an unordered pair of distinct catalogued terms.
    pub fn add_pair(&mut self, a: &Term, b: &Term) -> Result<bool, EngineError> {
        if a == b {
            return Err(EngineError::PairMembersEqual);
        }
        if !self.terms.contains(a) || !self.terms.contains(b) {
            return Err(EngineError::TermNotCataloged);
        }
        let pair = if a < b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        Ok(self.pairs.insert(pair))
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter()
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(Term, Term)> {
        self.pairs.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

// ---------------------------------------------------------------------------
// Index file format: line-delimited JSON. Line 1 is the header, then one
// record per document (table order), then one record per word (sorted).
// Files round-trip bit-exactly; loading validates every structural invariant
// so corruption is caught before queries run.
// ---------------------------------------------------------------------------

const FORMAT_NAME: &str = "sse-index";
const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    semantics: Semantics,
    lowercase: bool,
    doc_count: u64,
}

#[derive(Serialize, Deserialize)]
struct DocLine {
    doc: String,
    len: u32,
}

#[derive(Serialize, Deserialize)]
struct WordLine {
    word: String,
    post: Vec<(String, Vec<u32>)>,
}

impl Index {
    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        let header = Header {
            format: FORMAT_NAME.to_string(),
            version: FORMAT_VERSION,
            semantics: self.semantics,
            lowercase: self.config.lowercase,
            doc_count: self.docs.len() as u64,
        };
        writeln!(out, "{}", serde_json::to_string(&header)?)?;
        for entry in &self.docs {
            let line = DocLine {
                doc: entry.id.clone(),
                len: entry.len,
            };
            writeln!(out, "{}", serde_json::to_string(&line)?)?;
        }
        for (word, postings) in &self.postings {
            let line = WordLine {
                word: word.clone(),
                post: postings
                    .iter()
                    .map(|p| (self.docs[p.doc as usize].id.clone(), p.positions.clone()))
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&line)?)?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("in-memory write");
        buf
    }

    pub fn save(&self, path: &Path) -> Result<(), EngineError> {
        let mut file = fs::File::create(path)?;
        self.write_to(&mut file)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Index, EngineError> {
        let file = fs::File::open(path)?;
        Index::read_from(BufReader::new(file))
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Index, EngineError> {
        Index::read_from(BufReader::new(bytes))
    }

    pub fn read_from<R: BufRead>(reader: R) -> Result<Index, EngineError> {
        let corrupt = |line: usize, message: String| EngineError::CorruptIndex { line, message };
        let mut lines = reader.lines().enumerate();

        let (_, header_line) = lines
            .next()
            .ok_or_else(|| corrupt(1, "empty file".to_string()))?;
        let header: Header = serde_json::from_str(&header_line?)
            .map_err(|e| corrupt(1, format!("bad header: {e}")))?;
        if header.format != FORMAT_NAME {
            return Err(corrupt(1, format!("unknown format {:?}", header.format)));
        }
        if header.version != FORMAT_VERSION {
            return Err(corrupt(1, format!("unsupported version {}", header.version)));
        }

        let mut docs = Vec::with_capacity(header.doc_count as usize);
        for _ in 0..header.doc_count {
            let (lineno, line) = lines
                .next()
                .ok_or_else(|| corrupt(docs.len() + 2, "missing document record".to_string()))?;
            let record: DocLine = serde_json::from_str(&line?)
                .map_err(|e| corrupt(lineno + 1, format!("bad document record: {e}")))?;
            if let Some(prev) = docs.last() {
                let prev: &DocEntry = prev;
                if prev.id >= record.doc {
                    return Err(corrupt(
                        lineno + 1,
                        format!("document ids not strictly ascending at {:?}", record.doc),
                    ));
                }
            }
            docs.push(DocEntry {
                id: record.doc,
                len: record.len,
            });
        }
        let doc_lookup: HashMap<String, DocId> = docs
            .iter()
            .enumerate()
            .map(|(i, d)| (d.id.clone(), i as DocId))
            .collect();

        let mut postings: BTreeMap<String, Vec<Posting>> = BTreeMap::new();
        let mut prev_word: Option<String> = None;
        for (lineno, line) in lines {
            let record: WordLine = serde_json::from_str(&line?)
                .map_err(|e| corrupt(lineno + 1, format!("bad word record: {e}")))?;
            if let Some(prev) = &prev_word {
                if *prev >= record.word {
                    return Err(corrupt(
                        lineno + 1,
                        format!("words not strictly ascending at {:?}", record.word),
                    ));
                }
            }
            if record.post.is_empty() {
                return Err(corrupt(
                    lineno + 1,
                    format!("word {:?} has no postings", record.word),
                ));
            }
            let mut list = Vec::with_capacity(record.post.len());
            for (doc_id, positions) in &record.post {
                let doc = *doc_lookup.get(doc_id).ok_or_else(|| {
                    corrupt(lineno + 1, format!("posting references unknown document {doc_id:?}"))
                })?;
                if let Some(prev) = list.last() {
                    let prev: &Posting = prev;
                    if prev.doc >= doc {
                        return Err(corrupt(
                            lineno + 1,
                            format!("posting documents not sorted for {:?}", record.word),
                        ));
                    }
                }
                if positions.is_empty() || positions.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(corrupt(
                        lineno + 1,
                        format!("positions not strictly ascending for {:?}", record.word),
                    ));
                }
                let len = docs[doc as usize].len;
                if positions.iter().any(|&p| p >= len) {
                    return Err(corrupt(
                        lineno + 1,
                        format!("position beyond document length for {:?}", record.word),
                    ));
                }
                list.push(Posting {
                    doc,
                    positions: positions.clone(),
                });
            }
            prev_word = Some(record.word.clone());
            postings.insert(record.word, list);
        }

        Ok(Index {
            postings,
            docs,
            doc_lookup,
            semantics: header.semantics,
            config: TokenizerConfig {
                lowercase: header.lowercase,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> TokenizerConfig {
        TokenizerConfig::default()
    }

    fn toy() -> Corpus {
        Corpus::from_records(
            vec![
                ("d1".to_string(), "a b c".to_string()),
                ("d2".to_string(), "b c d".to_string()),
                ("d3".to_string(), "a d".to_string()),
            ],
            cfg(),
        )
        .unwrap()
    }

    fn term(raw: &str) -> Term {
        Term::parse(raw, &cfg()).unwrap()
    }

    fn event_ids(index: &Index, space: &EventSpace) -> Vec<String> {
        space.resolve(index).iter().map(|s| s.to_string()).collect()
    }

    fn w(n: u32) -> NonZeroU32 {
        NonZeroU32::new(n).unwrap()
    }

    #[test]
    fn build_records_positions() {
        let index = build_index(&toy(), Semantics::Phrase);
        assert_eq!(index.universe_size(), 3);
        let a = index.postings.get("a").unwrap();
        let resolved: Vec<(&str, &[u32])> = a
            .iter()
            .map(|p| (index.doc_id_str(p.doc), p.positions.as_slice()))
            .collect();
        assert_eq!(resolved, vec![("d1", &[0][..]), ("d3", &[0][..])]);
        assert_eq!(index.total_postings(), 8);
        assert_eq!(index.word_count(), 4);
    }

    #[test]
    fn build_empty_corpus() {
        let corpus = Corpus::from_records(Vec::new(), cfg()).unwrap();
        let index = build_index(&corpus, Semantics::Phrase);
        assert_eq!(index.universe_size(), 0);
        assert_eq!(index.word_count(), 0);
    }

    #[test]
    fn build_repeated_word_positions() {
        let corpus =
            Corpus::from_records(vec![("d1".to_string(), "a a".to_string())], cfg()).unwrap();
        let index = build_index(&corpus, Semantics::Phrase);
        let a = index.postings.get("a").unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].positions, [0, 1]);
    }

    #[test]
    fn occurs_in_phrase_vs_bag() {
        let phrase = build_index(&toy(), Semantics::Phrase);
        let bag = build_index(&toy(), Semantics::Bag);
        assert!(phrase.occurs_in(&term("b c"), "d1").unwrap());
        assert!(!phrase.occurs_in(&term("c b"), "d1").unwrap());
        assert!(bag.occurs_in(&term("c b"), "d1").unwrap());
    }

    #[test]
    fn occurs_in_out_of_vocabulary_word() {
        let index = build_index(&toy(), Semantics::Phrase);
        assert!(!index.occurs_in(&term("a zzz"), "d1").unwrap());
    }

    #[test]
    fn occurs_in_unknown_document() {
        let index = build_index(&toy(), Semantics::Phrase);
        assert!(matches!(
            index.occurs_in(&term("a"), "nope"),
            Err(EngineError::UnknownDocument(_))
        ));
    }

    #[test]
    fn singleton_events() {
        let index = build_index(&toy(), Semantics::Phrase);
        let a = index.singleton(&term("a"));
        assert_eq!(event_ids(&index, &a), ["d1", "d3"]);
        assert_eq!(a.cardinality(), 2);

        let bc = index.singleton(&term("b c"));
        assert_eq!(event_ids(&index, &bc), ["d1", "d2"]);

        let unseen = index.singleton(&term("zzz"));
        assert_eq!(unseen.cardinality(), 0);
    }

    #[test]
    fn doubleton_events() {
        let index = build_index(&toy(), Semantics::Phrase);
        let ad = index.doubleton(&term("a"), &term("d"));
        assert_eq!(event_ids(&index, &ad), ["d3"]);

        // Degenerate pair: intersection with self is the singleton.
        let aa = index.doubleton(&term("a"), &term("a"));
        assert_eq!(event_ids(&index, &aa), ["d1", "d3"]);

        let empty = index.doubleton(&term("a"), &term("zzz"));
        assert_eq!(empty.cardinality(), 0);
    }

    #[test]
    fn union_cardinalities() {
        let index = build_index(&toy(), Semantics::Phrase);
        assert_eq!(index.union_cardinality(&term("a"), &term("d")), 3);
        assert_eq!(index.union_cardinality(&term("a"), &term("a")), 2);
        assert_eq!(index.union_cardinality(&term("b"), &term("c")), 2);
    }

    #[test]
    fn proximity_window_boundaries() {
        let index = build_index(&toy(), Semantics::Phrase);
        let near = index.proximity(&term("a"), &term("c"), w(1)).unwrap();
        assert_eq!(near.cardinality(), 0);
        let wider = index.proximity(&term("a"), &term("c"), w(2)).unwrap();
        assert_eq!(event_ids(&index, &wider), ["d1"]);
    }

    #[test]
    fn proximity_whole_document_equals_doubleton() {
        let index = build_index(&toy(), Semantics::Phrase);
        let len = index.max_doc_len();
        let whole = index
            .proximity(&term("a"), &term("d"), w(len))
            .unwrap();
        assert_eq!(whole, index.doubleton(&term("a"), &term("d")));
    }

    #[test]
    fn proximity_rejects_bag_semantics() {
        let index = build_index(&toy(), Semantics::Bag);
        assert!(matches!(
            index.proximity(&term("a"), &term("d"), w(1)),
            Err(EngineError::BagSemanticsUnsupported)
        ));
    }

    #[test]
    fn brute_force_counts() {
        let corpus = toy();
        assert_eq!(
            brute_force_doubleton_count(&corpus, &term("a"), &term("d"), Semantics::Phrase),
            1
        );
        assert_eq!(
            brute_force_doubleton_count(&corpus, &term("b"), &term("c"), Semantics::Phrase),
            2
        );
        let empty = Corpus::from_records(Vec::new(), cfg()).unwrap();
        assert_eq!(
            brute_force_doubleton_count(&empty, &term("a"), &term("d"), Semantics::Phrase),
            0
        );
    }

    #[test]
    fn word_overlap_cases() {
        let shared = word_overlap(&term("b c"), &term("c d"));
        assert_eq!(shared.into_iter().collect::<Vec<_>>(), ["c"]);
        assert!(word_overlap(&term("a"), &term("d")).is_empty());
        let full = word_overlap(&term("a b"), &term("a b"));
        assert_eq!(full.into_iter().collect::<Vec<_>>(), ["a", "b"]);
    }

    #[test]
    fn term_catalog_invariants() {
        let mut catalog = TermCatalog::new();
        assert!(catalog.add_term(term("a")));
        assert!(!catalog.add_term(term("a")));
        catalog.add_term(term("b"));
        assert!(catalog.add_pair(&term("b"), &term("a")).unwrap());
        assert!(!catalog.add_pair(&term("a"), &term("b")).unwrap());
        assert_eq!(catalog.pair_count(), 1);
        assert!(matches!(
            catalog.add_pair(&term("a"), &term("a")),
            Err(EngineError::PairMembersEqual)
        ));
        assert!(matches!(
            catalog.add_pair(&term("a"), &term("zzz")),
            Err(EngineError::TermNotCataloged)
        ));
    }

    #[test]
    fn serialization_round_trips_bit_exactly() {
        let index = build_index(&toy(), Semantics::Phrase);
        let bytes = index.to_bytes();
        let loaded = Index::from_bytes(&bytes).unwrap();
        assert_eq!(loaded.to_bytes(), bytes);
        assert_eq!(loaded.universe_size(), 3);
        assert_eq!(
            loaded.singleton(&term("b c")).cardinality(),
            index.singleton(&term("b c")).cardinality()
        );
    }

    #[test]
    fn rebuild_is_byte_identical() {
        let a = build_index(&toy(), Semantics::Phrase).to_bytes();
        let b = build_index(&toy(), Semantics::Phrase).to_bytes();
        assert_eq!(a, b);
    }

    #[test]
    fn header_line_matches_format() {
        let index = build_index(&toy(), Semantics::Phrase);
        let bytes = index.to_bytes();
        let first = bytes.split(|&b| b == b'\n').next().unwrap();
        assert_eq!(
            std::str::from_utf8(first).unwrap(),
            "{\"format\":\"sse-index\",\"version\":1,\"semantics\":\"phrase\",\"lowercase\":true,\"doc_count\":3}"
        );
    }

    #[test]
    fn load_rejects_truncated_file() {
        let index = build_index(&toy(), Semantics::Phrase);
        let bytes = index.to_bytes();
        let cut = &bytes[..bytes.len() - 10];
        assert!(matches!(
            Index::from_bytes(cut),
            Err(EngineError::CorruptIndex { .. })
        ));
    }

    #[test]
    fn load_rejects_bad_version_and_format() {
        let bad_version = "{\"format\":\"sse-index\",\"version\":9,\"semantics\":\"phrase\",\"lowercase\":true,\"doc_count\":0}\n";
        assert!(matches!(
            Index::from_bytes(bad_version.as_bytes()),
            Err(EngineError::CorruptIndex { line: 1, .. })
        ));
        let bad_format = "{\"format\":\"other\",\"version\":1,\"semantics\":\"phrase\",\"lowercase\":true,\"doc_count\":0}\n";
        assert!(matches!(
            Index::from_bytes(bad_format.as_bytes()),
            Err(EngineError::CorruptIndex { line: 1, .. })
        ));
    }

    #[test]
    fn load_rejects_position_beyond_length() {
        let text = "{\"format\":\"sse-index\",\"version\":1,\"semantics\":\"phrase\",\"lowercase\":true,\"doc_count\":1}\n\
                    {\"doc\":\"d1\",\"len\":2}\n\
                    {\"word\":\"a\",\"post\":[[\"d1\",[0,5]]]}\n";
        assert!(matches!(
            Index::from_bytes(text.as_bytes()),
            Err(EngineError::CorruptIndex { line: 3, .. })
        ));
    }

    #[test]
    fn load_rejects_unsorted_words() {
        let text = "{\"format\":\"sse-index\",\"version\":1,\"semantics\":\"phrase\",\"lowercase\":true,\"doc_count\":1}\n\
                    {\"doc\":\"d1\",\"len\":2}\n\
                    {\"word\":\"b\",\"post\":[[\"d1\",[0]]]}\n\
                    {\"word\":\"a\",\"post\":[[\"d1\",[1]]]}\n";
        assert!(matches!(
            Index::from_bytes(text.as_bytes()),
            Err(EngineError::CorruptIndex { line: 4, .. })
        ));
    }

    #[test]
    fn load_rejects_unknown_posting_document() {
        let text = "{\"format\":\"sse-index\",\"version\":1,\"semantics\":\"phrase\",\"lowercase\":true,\"doc_count\":1}\n\
                    {\"doc\":\"d1\",\"len\":2}\n\
                    {\"word\":\"a\",\"post\":[[\"ghost\",[0]]]}\n";
        assert!(matches!(
            Index::from_bytes(text.as_bytes()),
            Err(EngineError::CorruptIndex { line: 3, .. })
        ));
    }
}
