//! Exhaustive enumeration of small left Bol loops and their classification
//! up to isomorphism and isotopy.

mod table;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::SearchError;
use crate::loops::{canonical_form, is_isomorphic, LoopTable, Property};

pub use table::PartialTable;

/// Largest order accepted by [`enumerate_bol`].
pub const MAX_SEARCH_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub nonassociative_only: bool,
    /// Keep only tables whose first non-unit row is the lexicographically
    /// least among its conjugates by permutations fixing 0 and 1. Every
    /// isomorphism class keeps at least one representative.
    pub symmetry_breaking: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            nonassociative_only: false,
            symmetry_breaking: true,
        }
    }
}

/// Tables found below one choice of row 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSummary {
    pub first_row: Vec<usize>,
    pub found: usize,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Completed tables in lexicographic (row-major) order.
    pub tables: Vec<LoopTable>,
    pub partitions: Vec<PartitionSummary>,
    /// Search nodes visited, summed over partitions.
    pub nodes: u64,
}

/// All normalized left Bol loop tables of order `n`.
///
/// Partitions by row 1 run on the current rayon pool; the result does not
/// depend on the number of workers.
pub fn enumerate_bol(n: usize, options: SearchOptions) -> Result<SearchOutcome, SearchError> {
    if n == 0 || n > MAX_SEARCH_ORDER {
        return Err(SearchError::OrderTooLarge(n));
    }
    if n <= 2 {
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x ^ y).collect()).collect();
        let l = LoopTable::from_rows(&rows, false).expect("Z_1 and Z_2 are loops");
        let keep = !options.nonassociative_only;
        return Ok(SearchOutcome {
            tables: if keep { vec![l] } else { Vec::new() },
            partitions: Vec::new(),
            nodes: 1,
        });
    }
    let root = PartialTable::new(n);
    let mut first_rows = root.first_row_candidates();
    if options.symmetry_breaking {
        first_rows.retain(|row| table::is_conjugacy_leader(row));
    }
    let results: Vec<(Vec<LoopTable>, u64)> = first_rows
        .par_iter()
        .map(|row| {
            let mut t = root.clone();
            let mut found = Vec::new();
            let mut nodes = 0u64;
            if t.assign_row(1, row) {
                t.complete(&mut nodes, &mut |done: &PartialTable| {
                    let l = done.to_loop();
                    if !options.nonassociative_only || !l.is(Property::Associative) {
                        found.push(l);
                    }
                });
            }
            (found, nodes)
        })
        .collect();
    let mut outcome = SearchOutcome {
        tables: Vec::new(),
        partitions: Vec::new(),
        nodes: 0,
    };
    for (row, (tables, nodes)) in first_rows.into_iter().zip(results) {
        outcome.partitions.push(PartitionSummary {
            first_row: row,
            found: tables.len(),
        });
        outcome.tables.extend(tables);
        outcome.nodes += nodes;
    }
    Ok(outcome)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Isomorphism,
    Isotopy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub order: usize,
    pub total_found: usize,
    pub nonassociative_count: usize,
    /// Canonical forms, sorted.
    #[serde(skip)]
    pub isomorphism_classes: Vec<LoopTable>,
    /// One canonical representative per isotopy class (the least canonical
    /// form in the class), sorted. Empty unless isotopy was requested.
    #[serde(skip)]
    pub isotopy_classes: Vec<LoopTable>,
    pub isomorphism_class_count: usize,
    pub isotopy_class_count: Option<usize>,
}

/// Groups tables into isomorphism classes by canonical form and, for
/// [`Relation::Isotopy`], merges classes whose representatives are
/// isotopic.
pub fn classify(
    tables: &[LoopTable],
    relation: Relation,
) -> Result<ClassificationResult, SearchError> {
    let order = tables.first().map_or(0, |t| t.order());
    if tables.iter().any(|t| t.order() != order) {
        return Err(SearchError::MixedOrders);
    }
    let mut canon: Vec<LoopTable> = tables.par_iter().map(canonical_form).collect();
    canon.sort();
    canon.dedup();
    let nonassociative_count = tables
        .iter()
        .filter(|t| !t.is(Property::Associative))
        .count();
    let isotopy_classes = match relation {
        Relation::Isomorphism => Vec::new(),
        Relation::Isotopy => isotopy_representatives(&canon),
    };
    Ok(ClassificationResult {
        order,
        total_found: tables.len(),
        nonassociative_count,
        isomorphism_class_count: canon.len(),
        isotopy_class_count: (relation == Relation::Isotopy).then_some(isotopy_classes.len()),
        isomorphism_classes: canon,
        isotopy_classes,
    })
}

/// `canon` is sorted and duplicate-free. Each class is closed under
/// principal isotopes, so the orbit of a representative covers its class.
fn isotopy_representatives(canon: &[LoopTable]) -> Vec<LoopTable> {
    let mut class_of: Vec<Option<usize>> = vec![None; canon.len()];
    let mut reps = Vec::new();
    for i in 0..canon.len() {
        if class_of[i].is_some() {
            continue;
        }
        let id = reps.len();
        reps.push(canon[i].clone());
        class_of[i] = Some(id);
        let n = canon[i].order();
        let isotopes: Vec<LoopTable> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| canonical_form(&canon[i].principal_isotope(a, b)))
            .collect();
        for iso in isotopes {
            if let Ok(j) = canon.binary_search(&iso) {
                class_of[j] = Some(id);
            }
        }
    }
    reps
}

/// `true` iff some table in `tables` is isomorphic to `l`.
pub fn contains_up_to_isomorphism(tables: &[LoopTable], l: &LoopTable) -> bool {
    tables.iter().any(|t| is_isomorphic(t, l).is_some())
}
