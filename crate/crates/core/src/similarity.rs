//! Hit-count similarity over event spaces, and thresholded co-occurrence
//! networks extracted from pairwise similarities.
//!
//! Only the Jaccard coefficient is implemented. Empty events need a
//! convention the formula does not give: when both event spaces are empty
//! the value is 1.0 (the spaces are equal, so the similarity axioms' equality
//! case stays literally true); when exactly one is empty it is 0.0. All
//! comparisons that feed the verifier go through exact rational arithmetic
//! on the integer cardinalities — floating point only appears when a value
//! is printed.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::Term;
use crate::engine::Index;

#[derive(Debug, Error)]
pub enum SimilarityError {
    #[error("duplicate term {0:?}")]
    DuplicateTerm(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Jaccard,
}

/// A similarity value carrying the event cardinalities it was computed from.
#[derive(Debug, Clone, Copy)]
pub struct SimilarityValue {
    pub measure: Measure,
    pub nx: u64,
    pub ny: u64,
    pub nxy: u64,
}

impl SimilarityValue {
    /// The value as an exact ratio (numerator, denominator).
    pub fn as_ratio(&self) -> (u64, u64) {
        if self.nx == 0 && self.ny == 0 {
            (1, 1)
        } else {
            (self.nxy, self.nx + self.ny - self.nxy)
        }
    }

    /// The value in [0,1] for presentation.
    pub fn value(&self) -> f64 {
        let (num, den) = self.as_ratio();
        if den == 0 {
            0.0
        } else {
            num as f64 / den as f64
        }
    }

    /// Exact rational comparison, no floating point.
    pub fn cmp_exact(&self, other: &SimilarityValue) -> Ordering {
        let (an, ad) = self.as_ratio();
        let (bn, bd) = other.as_ratio();
        (an as u128 * bd as u128).cmp(&(bn as u128 * ad as u128))
    }

    pub fn eq_exact(&self, other: &SimilarityValue) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }

    pub fn is_exactly_one(&self) -> bool {
        let (num, den) = self.as_ratio();
        num == den
    }
}

/// The Jaccard coefficient |Ω_x∩Ω_y| / (|Ω_x|+|Ω_y|−|Ω_x∩Ω_y|) from the
/// index's hit counts.
pub fn jaccard(index: &Index, tx: &Term, ty: &Term) -> SimilarityValue {
    let nx = index.singleton(tx).cardinality();
    let ny = index.singleton(ty).cardinality();
    let nxy = index.doubleton(tx, ty).cardinality();
    SimilarityValue {
        measure: Measure::Jaccard,
        nx,
        ny,
        nxy,
    }
}

/// A symmetric pairwise similarity matrix in input term order.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix {
    terms: Vec<Term>,
    cells: Vec<Vec<SimilarityValue>>,
}

impl SimilarityMatrix {
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn get(&self, i: usize, j: usize) -> &SimilarityValue {
        &self.cells[i][j]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Comma-separated table: first row and column carry the term strings,
    /// values printed with 6 decimal digits.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.terms.iter().map(|t| t.as_query()));
        writer.write_record(&header).expect("csv write");
        for (i, term) in self.terms.iter().enumerate() {
            let mut row = vec![term.as_query()];
            row.extend(self.cells[i].iter().map(|v| format!("{:.6}", v.value())));
            writer.write_record(&row).expect("csv write");
        }
        String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
    }
}

/// All pairwise similarities for a term list. Terms must be distinct after
/// normalization. Each unordered pair is computed once and mirrored.
pub fn pairwise_matrix(
    index: &Index,
    terms: &[Term],
) -> Result<SimilarityMatrix, SimilarityError> {
    for (i, term) in terms.iter().enumerate() {
        if terms[..i].contains(term) {
            return Err(SimilarityError::DuplicateTerm(term.as_query()));
        }
    }
    let n = terms.len();
    let placeholder = SimilarityValue {
        measure: Measure::Jaccard,
        nx: 0,
        ny: 0,
        nxy: 0,
    };
    let mut cells = vec![vec![placeholder; n]; n];
    for i in 0..n {
        for j in i..n {
            let value = jaccard(index, &terms[i], &terms[j]);
            cells[i][j] = value;
            cells[j][i] = SimilarityValue {
                measure: value.measure,
                nx: value.ny,
                ny: value.nx,
                nxy: value.nxy,
            };
        }
    }
    Ok(SimilarityMatrix {
        terms: terms.to_vec(),
        cells,
    })
}

/// An undirected similarity edge; `term_a < term_b` canonically.
#[derive(Debug, Clone)]
pub struct NetworkEdge {
    pub term_a: Term,
    pub term_b: Term,
    pub weight: SimilarityValue,
}

/// Edges for every unordered pair of distinct terms whose Jaccard value is
/// at least `threshold`, sorted by descending weight then canonical term
/// order. Duplicate input terms are collapsed; self-pairs are excluded.
pub fn extract_network(index: &Index, terms: &[Term], threshold: f64) -> Vec<NetworkEdge> {
    let mut unique: Vec<Term> = Vec::new();
    for term in terms {
        if !unique.contains(term) {
            unique.push(term.clone());
        }
    }
    let mut edges = Vec::new();
    for i in 0..unique.len() {
        for j in (i + 1)..unique.len() {
            let (a, b) = if unique[i] < unique[j] {
                (unique[i].clone(), unique[j].clone())
            } else {
                (unique[j].clone(), unique[i].clone())
            };
            let weight = jaccard(index, &a, &b);
            if weight.value() >= threshold {
                edges.push(NetworkEdge {
                    term_a: a,
                    term_b: b,
                    weight,
                });
            }
        }
    }
    edges.sort_by(|x, y| {
        y.weight
            .cmp_exact(&x.weight)
            .then_with(|| x.term_a.cmp(&y.term_a))
            .then_with(|| x.term_b.cmp(&y.term_b))
    });
    edges
}

/// Comma-separated edge rows `term_a,term_b,weight` with a header line.
pub fn edges_to_csv(edges: &[NetworkEdge]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["term_a", "term_b", "weight"])
        .expect("csv write");
    for edge in edges {
        writer
            .write_record([
                edge.term_a.as_query(),
                edge.term_b.as_query(),
                format!("{:.6}", edge.weight.value()),
            ])
            .expect("csv write");
    }
    String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
}
