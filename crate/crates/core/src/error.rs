use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("coordinate {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid bit character {0:?}")]
    BadBitChar(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("operators act on different mode counts ({left} vs {right})")]
    ModeMismatch { left: usize, right: usize },
    #[error("Majorana index c{index} outside c1..c{max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("cannot parse operator {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("mode {index} outside 1..={modes}")]
    ModeOutOfRange { index: usize, modes: usize },
    #[error("states live on different mode counts ({left} vs {right})")]
    ModeMismatch { left: usize, right: usize },
    #[error("at most {max} modes are supported, got {modes}")]
    TooManyModes { modes: usize, max: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("state has {got} qubits but {expected} were expected")]
    QubitMismatch { expected: usize, got: usize },
    #[error("qubit index {index} outside 1..={n}")]
    QubitOutOfRange { index: usize, n: usize },
    #[error("unknown {kind} {value:?}")]
    UnknownName { kind: &'static str, value: String },
    #[error("amplitude count {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("invalid occupancy label {0:?}")]
    BadLabel(String),
    #[error(transparent)]
    Fock(#[from] FockError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("Hastings family needs l >= 3, got {0}")]
    InvalidFamilyParameter(usize),
    #[error("need n >= 1 embedded qubits")]
    NoQubits,
    #[error("code is invalid: {0}")]
    Invalid(String),
    #[error("supplied basis does not span the codespace: {0}")]
    BasisMismatch(String),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum E8Error {
    #[error("vector is not an E8 root")]
    NotARoot,
}
