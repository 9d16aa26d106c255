use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("table is empty or not square")]
    NotSquare,
    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    BadEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("value {value} repeats in {line} {index}")]
    NotLatin {
        line: &'static str,
        index: usize,
        value: usize,
    },
    #[error("no two-sided identity element")]
    NoUnit,
    #[error("identity is element {0}, not 0")]
    UnitNotZero(usize),
    #[error("unknown builtin loop {0:?}")]
    UnknownName(String),
    #[error("loop order {0} is too large (maximum {max})", max = crate::loops::MAX_ORDER)]
    OrderTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("image sequence is not a permutation")]
    NotAPermutation,
    #[error("permutations of degree {expected} and {found} mixed")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("subgroup is not contained in the group")]
    NotSubset,
    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("order {requested} is not a divisor of the group order {order}")]
    BadOrder { requested: usize, order: usize },
    #[error("group of order {0} exceeds the subgroup enumeration limit")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("loop order {0} is too large for brute-force collineation enumeration")]
    OrderTooLarge(usize),
    #[error("loop is not a left Bol loop")]
    NotBol,
    #[error("structure claims are only stated for the builtin loops B1 and B2")]
    UnsupportedLoop,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search order {0} is outside 1..=8")]
    OrderTooLarge(usize),
    #[error("tables of different orders cannot be classified together")]
    MixedOrders,
}

/// Location-annotated error from the loop text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}
