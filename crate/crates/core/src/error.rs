use thiserror::Error;

/// Everything that can go wrong while building or checking an algebraic object.
///
/// Variants that report a failed law carry the first witness found in the
/// module's deterministic scan order.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table is empty")]
    EmptyTable,
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not a Latin square: {line} {index} repeats element {element}")]
    NotLatinSquare { line: &'static str, index: usize, element: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("identity element is {found}, but elements must be labelled with the identity at 0")]
    IdentityNotZero { found: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generators {generators:?} do not generate the group")]
    BadGenerators { generators: Vec<usize> },
    #[error("order {order} exceeds the configured bound {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },
    #[error("operands belong to different carriers")]
    CarrierMismatch,
    #[error("subgroup is not regular: {reason}")]
    NotRegular { reason: String },
    #[error("projection to the group is not bijective")]
    ProjectionNotBijective,
    #[error("set is not a subgroup: {reason}")]
    NotSubgroup { reason: String },
    #[error("not a skew brace: {witness}")]
    NotABrace { witness: String },
    #[error("map is not an automorphism: {reason}")]
    NotAutomorphism { reason: String },
    #[error("map is not a homomorphism: {witness}")]
    NotHomomorphism { witness: String },
    #[error("lambda is not a homomorphism on the additive group: {witness}")]
    NotLambdaHomomorphic { witness: String },
    #[error("image of lambda cannot be computed for this carrier")]
    ImageNotFinite,
    #[error("this check needs a finite carrier")]
    InfiniteCarrier,
    #[error("kernel membership of lambda is not decidable for this carrier")]
    UndecidableKernel,
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: i64 },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("phi is not admissible: row {row} sums to {sum}, expected 1")]
    NotValidPhi { row: usize, sum: i64 },
    #[error("rank {rank} is not supported here (need at least {min})")]
    BadRank { rank: usize, min: usize },
    #[error("generator x{generator} is mapped to a word of logarithm {log}, expected 1")]
    NotLogPreserving { generator: usize, log: i64 },
    #[error("{word} is not in the commutator subgroup of {subgroup}")]
    NotInCommutator { word: String, subgroup: String },
    #[error("unknown generator x{generator} (rank is {rank})")]
    UnknownGenerator { generator: usize, rank: usize },
    #[error("subgroup does not have index 2 (index {index})")]
    NotIndexTwo { index: usize },
    #[error("group is not abelian: {a}*{b} != {b}*{a}")]
    NotAbelian { a: usize, b: usize },
    #[error("series has nonzero constant term {constant}; the ideal needs 0")]
    NonZeroConstant { constant: String },
    #[error("series parameters differ: {left} vs {right}")]
    CapMismatch { left: String, right: String },
    #[error("unsupported factorization family: {family}")]
    UnsupportedFamily { family: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
