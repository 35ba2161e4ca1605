//! Executable checks over an index: cardinality bounds, the oracle identity,
//! proximity nesting, similarity axioms, the contraposition identity, and the
//! subterm/disjoint/alias hypotheses.
//!
//! Checks come in two classes. Invariant-class checks must hold on every
//! corpus and fail the suite on any violation. Hypothesis-class checks record
//! how often a model assumption holds; they never fail the suite, but on
//! corpora constructed to satisfy their hypotheses the recorded violation
//! count must be zero.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::corpus::{Corpus, Term};
use crate::engine::{
    brute_force_doubleton_count, word_overlap, EngineError, Index, Semantics, TermCatalog,
};
use crate::similarity::jaccard;

use std::num::NonZeroU32;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("corpus and index do not match: {0}")]
    CorpusIndexMismatch(String),
    #[error("pair ({tx:?}, {ty:?}) is not a strict contiguous subterm pair")]
    NotASubterm { tx: String, ty: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisReport,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::HypothesisReport => write!(f, "hypothesis-report"),
        }
    }
}

/// A violating input with the observed values that condemned it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub term_x: String,
    pub term_y: String,
    pub detail: String,
}

/// Outcome of one check over a pair set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pairs_tested: u64,
    pub violations: u64,
    pub witnesses: Vec<Witness>,
    pub verdict: Verdict,
    /// Auxiliary counts (hypothesis rates, recorded literal readings).
    pub recorded: BTreeMap<String, u64>,
}

/// Witness accumulator: counts every violation, keeps the first five
/// distinct witnesses in canonical pair order.
#[derive(Default)]
struct ViolationLog {
    violations: u64,
    witnesses: Vec<Witness>,
}

impl ViolationLog {
    fn record(&mut self, tx: &Term, ty: &Term, detail: String) {
        self.violations += 1;
        let (a, b) = if tx <= ty { (tx, ty) } else { (ty, tx) };
        self.witnesses.push(Witness {
            term_x: a.as_query(),
            term_y: b.as_query(),
            detail,
        });
    }

    fn finish(mut self) -> (u64, Vec<Witness>) {
        self.witnesses.sort();
        self.witnesses.dedup();
        self.witnesses.truncate(5);
        (self.violations, self.witnesses)
    }
}

impl CheckResult {
    fn invariant(name: &str, pairs_tested: u64, log: ViolationLog) -> CheckResult {
        Self::invariant_with(name, pairs_tested, log, BTreeMap::new())
    }

    fn invariant_with(
        name: &str,
        pairs_tested: u64,
        log: ViolationLog,
        recorded: BTreeMap<String, u64>,
    ) -> CheckResult {
        let (violations, witnesses) = log.finish();
        CheckResult {
            name: name.to_string(),
            pairs_tested,
            violations,
            witnesses,
            verdict: if violations == 0 {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            recorded,
        }
    }

    fn hypothesis(
        name: &str,
        pairs_tested: u64,
        log: ViolationLog,
        recorded: BTreeMap<String, u64>,
    ) -> CheckResult {
        let (violations, witnesses) = log.finish();
        CheckResult {
            name: name.to_string(),
            pairs_tested,
            violations,
            witnesses,
            verdict: Verdict::HypothesisReport,
            recorded,
        }
    }
}

/// Bounds of the doubleton theorem: |Ω_x∩Ω_y| ≤ min(|Ω_x|,|Ω_y|) and every
/// singleton is bounded by |Ω|. Invariant-class.
pub fn check_theorem1(index: &Index, pairs: &[(Term, Term)]) -> CheckResult {
    let omega = index.universe_size();
    let mut log = ViolationLog::default();
    for (tx, ty) in pairs {
        let nx = index.singleton(tx).cardinality();
        let ny = index.singleton(ty).cardinality();
        let nxy = index.doubleton(tx, ty).cardinality();
        if nxy > nx.min(ny) || nx > omega || ny > omega {
            log.record(
                tx,
                ty,
                format!("nxy={nxy} nx={nx} ny={ny} omega={omega}"),
            );
        }
    }
    CheckResult::invariant("theorem1_bounds", pairs.len() as u64, log)
}

fn ensure_corpus_matches(index: &Index, corpus: &Corpus) -> Result<(), VerifierError> {
    if corpus.config() != index.config() {
        return Err(VerifierError::CorpusIndexMismatch(
            "tokenizer configs differ".to_string(),
        ));
    }
    if corpus.len() as u64 != index.universe_size() {
        return Err(VerifierError::CorpusIndexMismatch(format!(
            "document counts differ: corpus {} vs index {}",
            corpus.len(),
            index.universe_size()
        )));
    }
    for (doc, (id, len)) in corpus.documents().iter().zip(index.doc_table()) {
        if doc.id != id || doc.token_count() as u32 != len {
            return Err(VerifierError::CorpusIndexMismatch(format!(
                "document table differs at {:?}",
                doc.id
            )));
        }
    }
    Ok(())
}

/// The indicator-sum identity: indexed doubleton cardinality must equal the
/// linear-scan per-page indicator sum, exactly. Invariant-class.
pub fn check_oracle_equivalence(
    index: &Index,
    corpus: &Corpus,
    pairs: &[(Term, Term)],
) -> Result<CheckResult, VerifierError> {
    ensure_corpus_matches(index, corpus)?;
    let semantics = index.semantics();
    let mut log = ViolationLog::default();
    for (tx, ty) in pairs {
        let indexed = index.doubleton(tx, ty).cardinality();
        let scanned = brute_force_doubleton_count(corpus, tx, ty, semantics);
        if indexed != scanned {
            log.record(tx, ty, format!("indexed={indexed} scanned={scanned}"));
        }
    }
    Ok(CheckResult::invariant(
        "oracle_equivalence",
        pairs.len() as u64,
        log,
    ))
}

/// Proximity events must nest with the window and stay inside the doubleton.
/// Invariant-class; requires phrase semantics.
pub fn check_proximity_subset(
    index: &Index,
    pairs: &[(Term, Term)],
    windows: &[NonZeroU32],
) -> Result<CheckResult, VerifierError> {
    let mut ladder: Vec<NonZeroU32> = windows.to_vec();
    ladder.sort();
    ladder.dedup();
    let mut log = ViolationLog::default();
    for (tx, ty) in pairs {
        let doubleton = index.doubleton(tx, ty);
        let mut previous: Option<crate::engine::EventSpace> = None;
        for &window in &ladder {
            let event = index.proximity(tx, ty, window)?;
            if !event.is_subset_of(&doubleton) {
                log.record(
                    tx,
                    ty,
                    format!("window {window}: proximity exceeds doubleton"),
                );
            }
            if let Some(prev) = &previous {
                if !prev.is_subset_of(&event) {
                    log.record(tx, ty, format!("window {window}: not monotone"));
                }
            }
            previous = Some(event);
        }
    }
    Ok(CheckResult::invariant(
        "proximity_subset",
        pairs.len() as u64,
        log,
    ))
}

/// The similarity axioms, checked with exact rational arithmetic: range,
/// symmetry, self-dominance, and the equality-iff-equal-events condition.
/// Invariant-class.
pub fn check_similarity_axioms(index: &Index, pairs: &[(Term, Term)]) -> CheckResult {
    let mut log = ViolationLog::default();
    for (tx, ty) in pairs {
        let sxy = jaccard(index, tx, ty);
        let syx = jaccard(index, ty, tx);
        let sxx = jaccard(index, tx, tx);
        let (num, den) = sxy.as_ratio();
        if num > den {
            log.record(tx, ty, format!("value {num}/{den} above 1"));
        }
        if !sxy.eq_exact(&syx) {
            log.record(tx, ty, "asymmetric".to_string());
        }
        if sxy.cmp_exact(&sxx) == std::cmp::Ordering::Greater {
            log.record(tx, ty, "self-dominance violated".to_string());
        }
        let events_equal = index.singleton(tx) == index.singleton(ty);
        if sxy.eq_exact(&sxx) != events_equal {
            log.record(
                tx,
                ty,
                format!("equality/event-set mismatch (events_equal={events_equal})"),
            );
        }
    }
    CheckResult::invariant("similarity_axioms", pairs.len() as u64, log)
}

/// The contraposition identity: the right-hand side of the doubleton sum
/// question exceeds the left by exactly |Ω_x| + |Ω_y|, with equality iff both
/// singletons are empty. Invariant-class.
pub fn check_problem1_contraposition(index: &Index, pairs: &[(Term, Term)]) -> CheckResult {
    let mut log = ViolationLog::default();
    for (tx, ty) in pairs {
        let nx = index.singleton(tx).cardinality();
        let ny = index.singleton(ty).cardinality();
        let lhs = index.doubleton(tx, ty).cardinality();
        let nxx = index.doubleton(tx, tx).cardinality();
        let nyy = index.doubleton(ty, ty).cardinality();
        let rhs = lhs + nxx + nyy;
        if rhs - lhs != nx + ny {
            log.record(
                tx,
                ty,
                format!("rhs-lhs={} expected {}", rhs - lhs, nx + ny),
            );
        }
        if (lhs == rhs) != (nx == 0 && ny == 0) {
            log.record(tx, ty, format!("equality case mismatch nx={nx} ny={ny}"));
        }
    }
    CheckResult::invariant("problem1_contraposition", pairs.len() as u64, log)
}

/// Subterm containment: for (tx, ty) with ty a strict contiguous subterm of
/// tx under phrase semantics, Ω_x ⊆ Ω_y and the union collapses to Ω_y.
/// Invariant-class; additionally records whether the literal cardinality
/// reading |Ω_x| = |Ω_x|+|Ω_y| (i.e. |Ω_y| = 0) holds per pair.
pub fn check_lemma1_subterm(
    index: &Index,
    pairs: &[(Term, Term)],
) -> Result<CheckResult, VerifierError> {
    let mut log = ViolationLog::default();
    let mut literal_holds = 0u64;
    let mut literal_fails = 0u64;
    for (tx, ty) in pairs {
        if ty.size() >= tx.size() || !tx.contains_subterm(ty) {
            return Err(VerifierError::NotASubterm {
                tx: tx.as_query(),
                ty: ty.as_query(),
            });
        }
        let ex = index.singleton(tx);
        let ey = index.singleton(ty);
        let ny = ey.cardinality();
        if !ex.is_subset_of(&ey) {
            log.record(tx, ty, "containment violated".to_string());
        }
        if index.union_cardinality(tx, ty) != ny {
            log.record(tx, ty, format!("union != |Ω_y|={ny}"));
        }
        if ny == 0 {
            literal_holds += 1;
        } else {
            literal_fails += 1;
        }
    }
    let mut recorded = BTreeMap::new();
    recorded.insert("literal_holds".to_string(), literal_holds);
    recorded.insert("literal_fails".to_string(), literal_fails);
    Ok(CheckResult::invariant_with(
        "lemma1_subterm",
        pairs.len() as u64,
        log,
        recorded,
    ))
}

/// Word-disjoint pairs: records how often the doubleton is empty and the
/// union cardinality additive. Hypothesis-class — never fails the suite; the
/// recorded violation count must be zero only on corpora constructed to keep
/// disjoint vocabularies in disjoint documents.
pub fn check_lemma2_disjoint(index: &Index, pairs: &[(Term, Term)]) -> CheckResult {
    let mut log = ViolationLog::default();
    let mut tested = 0u64;
    let mut empty_doubleton = 0u64;
    let mut additive_union = 0u64;
    for (tx, ty) in pairs {
        if tx == ty || !word_overlap(tx, ty).is_empty() {
            continue;
        }
        tested += 1;
        let nx = index.singleton(tx).cardinality();
        let ny = index.singleton(ty).cardinality();
        let nxy = index.doubleton(tx, ty).cardinality();
        if nxy == 0 {
            empty_doubleton += 1;
        } else {
            log.record(tx, ty, format!("doubleton nonempty ({nxy})"));
        }
        if index.union_cardinality(tx, ty) == nx + ny {
            additive_union += 1;
        }
    }
    let mut recorded = BTreeMap::new();
    recorded.insert("empty_doubleton".to_string(), empty_doubleton);
    recorded.insert("additive_union".to_string(), additive_union);
    CheckResult::hypothesis("lemma2_disjoint", tested, log, recorded)
}

/// Alias hypothesis: for word-disjoint pairs that do co-occur, records
/// whether the singleton cardinalities — and the event sets themselves —
/// coincide. Hypothesis-class; exact on alias-constructed corpora.
pub fn check_lemma3_alias(index: &Index, pairs: &[(Term, Term)]) -> CheckResult {
    let mut log = ViolationLog::default();
    let mut tested = 0u64;
    let mut cardinality_equal = 0u64;
    let mut sets_equal = 0u64;
    for (tx, ty) in pairs {
        if tx == ty || !word_overlap(tx, ty).is_empty() {
            continue;
        }
        let ex = index.singleton(tx);
        let ey = index.singleton(ty);
        if ex.intersect(&ey).cardinality() == 0 {
            continue;
        }
        tested += 1;
        if ex.cardinality() == ey.cardinality() {
            cardinality_equal += 1;
        } else {
            log.record(
                tx,
                ty,
                format!("|Ω_x|={} vs |Ω_z|={}", ex.cardinality(), ey.cardinality()),
            );
        }
        if ex == ey {
            sets_equal += 1;
        }
    }
    let mut recorded = BTreeMap::new();
    recorded.insert("cardinality_equal".to_string(), cardinality_equal);
    recorded.insert("sets_equal".to_string(), sets_equal);
    CheckResult::hypothesis("lemma3_alias", tested, log, recorded)
}

/// A full verification run over an index/corpus pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format: String,
    pub version: u32,
    pub index_fingerprint: String,
    pub seed: u64,
    pub pair_budget: u64,
    pub term_pool: u64,
    pub distinct_pairs: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// True iff every invariant-class check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The self-describing structured form (one JSON map).
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Human-readable summary table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<24} {:>8} {:>10}  {:<17} recorded\n",
            "check", "pairs", "violations", "verdict"
        ));
        for check in &self.checks {
            let recorded = check
                .recorded
                .iter()
                .map(|(k, v)| format!("{k}={v}/{}", check.pairs_tested))
                .collect::<Vec<_>>()
                .join(" ");
            let row = format!(
                "{:<24} {:>8} {:>10}  {:<17} {}",
                check.name, check.pairs_tested, check.violations, check.verdict, recorded
            );
            out.push_str(row.trim_end());
            out.push('\n');
        }
        out.push_str(&format!(
            "invariant-class checks: {}\n",
            if self.passed() { "all passed" } else { "FAILED" }
        ));
        out
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// The term pool a suite samples from: every indexed word as a single-word
/// term, plus any supplied terms, in canonical order.
pub fn term_pool(index: &Index, extra_terms: &[Term]) -> Vec<Term> {
    let mut pool: BTreeSet<Term> = index
        .words()
        .map(|w| Term::from_words([w]).expect("indexed words are valid"))
        .collect();
    pool.extend(extra_terms.iter().cloned());
    pool.into_iter().collect()
}

/// Draw `budget` term pairs uniformly (with replacement, degenerate pairs
/// included) from the pool; deterministic for a given seed.
pub fn sample_pairs(pool: &[Term], seed: u64, budget: u64) -> Vec<(Term, Term)> {
    if pool.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..budget)
        .map(|_| {
            let i = rng.random_range(0..pool.len());
            let j = rng.random_range(0..pool.len());
            (pool[i].clone(), pool[j].clone())
        })
        .collect()
}

/// (term, strict contiguous subterm) pairs derived from the pool's
/// multi-word terms, capped at `cap`.
pub fn subterm_pairs(pool: &[Term], cap: u64) -> Vec<(Term, Term)> {
    let mut out = Vec::new();
    'outer: for term in pool {
        if term.size() < 2 {
            continue;
        }
        for sub in term.proper_contiguous_subterms() {
            out.push((term.clone(), sub));
            if out.len() as u64 >= cap {
                break 'outer;
            }
        }
    }
    out
}

/// Window ladder used by the suite's proximity check: powers of two up to 16
/// plus a whole-document window.
fn suite_windows(index: &Index) -> Vec<NonZeroU32> {
    let whole = index.max_doc_len().max(1);
    let mut windows: Vec<u32> = vec![1, 2, 4, 8, 16, whole];
    windows.sort_unstable();
    windows.dedup();
    windows
        .into_iter()
        .map(|w| NonZeroU32::new(w).expect("windows are positive"))
        .collect()
}

/// Run every check with a deterministic sampled pair set and assemble the
/// report. The report is a pure function of (index bytes, seed, budget,
/// supplied terms).
pub fn run_suite(
    index: &Index,
    corpus: &Corpus,
    extra_terms: &[Term],
    seed: u64,
    budget: u64,
) -> Result<VerificationReport, VerifierError> {
    ensure_corpus_matches(index, corpus)?;
    let pool = term_pool(index, extra_terms);
    let pairs = sample_pairs(&pool, seed, budget);

    // The session catalog: S and the distinct unordered pairs actually drawn.
    let mut catalog = TermCatalog::new();
    for term in &pool {
        catalog.add_term(term.clone());
    }
    for (tx, ty) in &pairs {
        if tx != ty {
            catalog.add_pair(tx, ty).expect("sampled terms are catalogued");
        }
    }

    let mut checks = vec![
        check_theorem1(index, &pairs),
        check_oracle_equivalence(index, corpus, &pairs)?,
        check_similarity_axioms(index, &pairs),
        check_problem1_contraposition(index, &pairs),
        check_lemma2_disjoint(index, &pairs),
        check_lemma3_alias(index, &pairs),
        check_lemma1_subterm(index, &subterm_pairs(&pool, budget))?,
    ];
    if index.semantics() == Semantics::Phrase {
        checks.push(check_proximity_subset(index, &pairs, &suite_windows(index))?);
    } else {
        // Positional distance is undefined on a bag index; emit the check as
        // vacuous rather than failing the whole suite.
        let mut recorded = BTreeMap::new();
        recorded.insert("skipped_bag_semantics".to_string(), 1);
        checks.push(CheckResult {
            name: "proximity_subset".to_string(),
            pairs_tested: 0,
            violations: 0,
            witnesses: Vec::new(),
            verdict: Verdict::Pass,
            recorded,
        });
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));

    Ok(VerificationReport {
        format: "sse-report".to_string(),
        version: 1,
        index_fingerprint: sha256_hex(&index.to_bytes()),
        seed,
        pair_budget: budget,
        term_pool: pool.len() as u64,
        distinct_pairs: catalog.pair_count() as u64,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::TokenizerConfig;
    use crate::engine::build_index;

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

    fn all_word_pairs() -> Vec<(Term, Term)> {
        let words = ["a", "b", "c", "d"];
        let mut pairs = Vec::new();
        for i in 0..words.len() {
            for j in (i + 1)..words.len() {
                pairs.push((term(words[i]), term(words[j])));
            }
        }
        pairs
    }

    #[test]
    fn theorem1_passes_on_toy_pairs() {
        let index = build_index(&toy(), Semantics::Phrase);
        let result = check_theorem1(&index, &all_word_pairs());
        assert_eq!(result.pairs_tested, 6);
        assert_eq!(result.violations, 0);
        assert_eq!(result.verdict, Verdict::Pass);
    }

    #[test]
    fn theorem1_counts_degenerate_pair() {
        let index = build_index(&toy(), Semantics::Phrase);
        let result = check_theorem1(&index, &[(term("a"), term("a"))]);
        assert_eq!(result.pairs_tested, 1);
        assert_eq!(result.violations, 0);
    }

    #[test]
    fn theorem1_vacuous_on_empty_index() {
        let corpus = Corpus::from_records(Vec::new(), cfg()).unwrap();
        let index = build_index(&corpus, Semantics::Phrase);
        let result = check_theorem1(&index, &[]);
        assert_eq!(result.pairs_tested, 0);
        assert_eq!(result.verdict, Verdict::Pass);
    }

    #[test]
    fn oracle_equivalence_passes_on_toy() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Phrase);
        let result = check_oracle_equivalence(&index, &corpus, &all_word_pairs()).unwrap();
        assert_eq!(result.violations, 0);
    }

    #[test]
    fn oracle_equivalence_catches_corrupted_posting() {
        let corpus = toy();
        let mut index = build_index(&corpus, Semantics::Phrase);
        // Fault injection: drop d3 from the postings of "a".
        index.postings.get_mut("a").unwrap().pop();
        let result = check_oracle_equivalence(&index, &corpus, &[(term("a"), term("a"))]).unwrap();
        assert_eq!(result.violations, 1);
        assert_eq!(result.verdict, Verdict::Fail);
        assert_eq!(result.witnesses.len(), 1);
        assert_eq!(result.witnesses[0].term_x, "a");
    }

    #[test]
    fn oracle_equivalence_rejects_mismatched_corpus() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Phrase);
        let other = Corpus::from_records(
            vec![("d1".to_string(), "a b c d e".to_string())],
            cfg(),
        )
        .unwrap();
        assert!(matches!(
            check_oracle_equivalence(&index, &other, &[]),
            Err(VerifierError::CorpusIndexMismatch(_))
        ));
    }

    #[test]
    fn proximity_check_passes_on_toy_windows() {
        let index = build_index(&toy(), Semantics::Phrase);
        let windows: Vec<NonZeroU32> =
            [1, 2, 3].iter().map(|&w| NonZeroU32::new(w).unwrap()).collect();
        let result = check_proximity_subset(&index, &all_word_pairs(), &windows).unwrap();
        assert_eq!(result.violations, 0);
    }

    #[test]
    fn proximity_check_rejects_bag_index() {
        let index = build_index(&toy(), Semantics::Bag);
        let windows = [NonZeroU32::new(1).unwrap()];
        assert!(matches!(
            check_proximity_subset(&index, &all_word_pairs(), &windows),
            Err(VerifierError::Engine(EngineError::BagSemanticsUnsupported))
        ));
    }

    #[test]
    fn similarity_axioms_pass_on_toy() {
        let index = build_index(&toy(), Semantics::Phrase);
        let mut pairs = all_word_pairs();
        pairs.push((term("b"), term("c"))); // the equality case Ω_b = Ω_c
        pairs.push((term("a"), term("zzz"))); // one empty event
        let result = check_similarity_axioms(&index, &pairs);
        assert_eq!(result.violations, 0);
    }

    #[test]
    fn problem1_contraposition_worked_example() {
        let index = build_index(&toy(), Semantics::Phrase);
        let lhs = index.doubleton(&term("a"), &term("d")).cardinality();
        let rhs = lhs
            + index.doubleton(&term("a"), &term("a")).cardinality()
            + index.doubleton(&term("d"), &term("d")).cardinality();
        assert_eq!(lhs, 1);
        assert_eq!(rhs, 5);
        assert_eq!(rhs - lhs, 4);

        let result = check_problem1_contraposition(
            &index,
            &[
                (term("a"), term("d")),
                (term("b"), term("c")),
                (term("zz1"), term("zz2")),
            ],
        );
        assert_eq!(result.violations, 0);
    }

    #[test]
    fn lemma1_subterm_containment_and_literal_reading() {
        let index = build_index(&toy(), Semantics::Phrase);
        let pairs = vec![
            (term("a b"), term("a")),
            (term("b c"), term("b")),
        ];
        let result = check_lemma1_subterm(&index, &pairs).unwrap();
        assert_eq!(result.violations, 0);
        assert_eq!(result.recorded["literal_holds"], 0);
        assert_eq!(result.recorded["literal_fails"], 2);
    }

    #[test]
    fn lemma1_rejects_non_subterm_pairs() {
        let index = build_index(&toy(), Semantics::Phrase);
        let equal = vec![(term("a"), term("a"))];
        assert!(matches!(
            check_lemma1_subterm(&index, &equal),
            Err(VerifierError::NotASubterm { .. })
        ));
        let unrelated = vec![(term("a b"), term("c"))];
        assert!(matches!(
            check_lemma1_subterm(&index, &unrelated),
            Err(VerifierError::NotASubterm { .. })
        ));
    }

    #[test]
    fn lemma2_records_hypothesis_rate_without_failing() {
        let index = build_index(&toy(), Semantics::Phrase);
        let result = check_lemma2_disjoint(&index, &[(term("a"), term("d"))]);
        assert_eq!(result.pairs_tested, 1);
        assert_eq!(result.violations, 1); // doubleton {d3} is nonempty
        assert_eq!(result.verdict, Verdict::HypothesisReport);
        assert_eq!(result.recorded["empty_doubleton"], 0);
        assert_eq!(result.recorded["additive_union"], 0);
    }

    #[test]
    fn witnesses_are_capped_at_five_in_canonical_order() {
        let index = build_index(&toy(), Semantics::Phrase);
        // All six distinct word pairs are word-disjoint and co-occur
        // somewhere in the toy corpus, so each one is a hypothesis violation.
        let result = check_lemma2_disjoint(&index, &all_word_pairs());
        assert_eq!(result.violations, 6);
        assert_eq!(result.witnesses.len(), 5);
        let mut sorted = result.witnesses.clone();
        sorted.sort();
        assert_eq!(result.witnesses, sorted);
    }

    #[test]
    fn lemma2_skips_overlapping_pairs() {
        let index = build_index(&toy(), Semantics::Phrase);
        let result = check_lemma2_disjoint(&index, &[(term("a b"), term("b c"))]);
        assert_eq!(result.pairs_tested, 0);
    }

    #[test]
    fn lemma3_records_equality_on_toy_pair() {
        let index = build_index(&toy(), Semantics::Phrase);
        let result = check_lemma3_alias(&index, &[(term("a"), term("d"))]);
        assert_eq!(result.pairs_tested, 1);
        assert_eq!(result.violations, 0); // |Ω_a| = |Ω_d| = 2
        assert_eq!(result.recorded["cardinality_equal"], 1);
        assert_eq!(result.recorded["sets_equal"], 0); // {d1,d3} != {d2,d3}
    }

    #[test]
    fn lemma3_excludes_empty_doubleton_pairs() {
        let index = build_index(&toy(), Semantics::Phrase);
        let result = check_lemma3_alias(&index, &[(term("a"), term("zzz"))]);
        assert_eq!(result.pairs_tested, 0);
    }

    #[test]
    fn run_suite_toy_invariants_pass() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Phrase);
        let report = run_suite(&index, &corpus, &[], 0, 50).unwrap();
        assert_eq!(report.checks.len(), 8);
        assert!(report.passed());
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(names, sorted);
    }

    #[test]
    fn run_suite_is_deterministic() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Phrase);
        let a = run_suite(&index, &corpus, &[], 7, 100).unwrap().to_json();
        let b = run_suite(&index, &corpus, &[], 7, 100).unwrap().to_json();
        assert_eq!(a, b);
        let c = run_suite(&index, &corpus, &[], 8, 100).unwrap().to_json();
        assert_ne!(a, c);
    }

    #[test]
    fn run_suite_on_bag_index_skips_proximity() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Bag);
        let report = run_suite(&index, &corpus, &[], 0, 50).unwrap();
        assert!(report.passed());
        let proximity = report.check("proximity_subset").unwrap();
        assert_eq!(proximity.pairs_tested, 0);
        assert_eq!(proximity.recorded["skipped_bag_semantics"], 1);
    }

    #[test]
    fn run_suite_budget_zero_is_vacuous() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Phrase);
        let report = run_suite(&index, &corpus, &[], 0, 0).unwrap();
        assert!(report.passed());
        assert!(report.checks.iter().all(|c| c.pairs_tested == 0));
    }

    #[test]
    fn run_suite_rejects_mismatch() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Phrase);
        let other = Corpus::from_records(
            vec![("dx".to_string(), "a".to_string())],
            cfg(),
        )
        .unwrap();
        assert!(matches!(
            run_suite(&index, &other, &[], 0, 10),
            Err(VerifierError::CorpusIndexMismatch(_))
        ));
    }

    #[test]
    fn run_suite_supplied_terms_enable_lemma1() {
        let corpus = toy();
        let index = build_index(&corpus, Semantics::Phrase);
        let report = run_suite(&index, &corpus, &[term("b c")], 0, 20).unwrap();
        let lemma1 = report.check("lemma1_subterm").unwrap();
        assert_eq!(lemma1.pairs_tested, 2); // "b" and "c" under "b c"
        assert_eq!(lemma1.violations, 0);
    }
}
