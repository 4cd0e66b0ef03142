use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 3, got {0}")]
    InvalidModulus(u64),

    #[error("jump {value} is congruent to 0 modulo {n}")]
    ZeroJump { value: u64, n: u64 },

    #[error("connection set is empty")]
    EmptyJumpSet,

    #[error("jumps {jumps:?} are not a canonical jump set modulo {n}")]
    NotCanonical { n: u64, jumps: Vec<u64> },

    #[error("residue set modulo {n} is not closed under negation")]
    NotSymmetric { n: u64 },

    #[error("{a} is not a unit modulo {n}")]
    NotAUnit { a: u64, n: u64 },

    #[error("gcd({n}, {r}) = 1, theta needs a jump sharing a factor with the order")]
    InvalidR { r: u64, n: u64 },

    #[error("no jump of {graph} is a multiple of gcd(n, r) = {m}")]
    NoMultipleOfM { graph: String, m: u64 },

    #[error("type-2 group of {graph} w.r.t. r = {r} is not closed: {detail}")]
    ClosureViolation {
        graph: String,
        r: u64,
        detail: String,
    },

    #[error("graphs have different orders {left} and {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("family index {i} outside 1..={p}")]
    BadIndex { i: u64, p: u64 },

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("degenerate family set: {0}")]
    DegenerateSet(String),

    #[error("gcd of multiples {0:?} is not 1")]
    GcdNotOne(Vec<u64>),

    #[error("theorem check `{check}` failed: {detail}")]
    TheoremViolation { check: String, detail: String },

    #[error("{candidates} candidate jump sets exceed the budget of {budget}")]
    BudgetExceeded { candidates: u64, budget: u64 },

    #[error("permutation is not a bijection on 0..{n}")]
    NotABijection { n: u64 },

    #[error("verdict carries no isomorphism witness")]
    NotAWitnessVerdict,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
