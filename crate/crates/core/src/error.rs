//! Crate-wide error type with stable machine-readable codes.

use std::fmt;

/// Every failure mode in the crate, one variant per condition.
///
/// The CLI maps variants to stable string codes via [`Error::code`], so
/// variant names are part of the output contract and must not be renamed
/// casually.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A proposed minimal polynomial has a nontrivial factor over the rationals.
    ReducibleMinimalPolynomial(String),
    /// Order at infinity requested for the zero function.
    ZeroArgument,
    /// Series arithmetic lost every retained term.
    PrecisionUnderflow,
    /// An irreducible factor of degree >= 2 needs a new algebraic extension
    /// while one is already active.
    UnsupportedFieldSplit(String),
    /// Operator is not monic with vanishing subleading coefficient.
    NotNormalized,
    /// A coefficient does not vanish at infinity.
    CoefficientNotVanishing(usize),
    /// Right division requires a monic divisor.
    NonMonicDivisor,
    /// Pseudo-differential inverse needs an invertible leading coefficient.
    NonUnitLeadingCoefficient,
    /// A pseudo-differential computation ran out of retained tail depth.
    DepthExhausted,
    /// The wave-operator recursion demanded the antiderivative of x^-1.
    IntegrationObstruction { dpower: i64 },
    /// A coefficient with an unknown tail cannot be transposed at finite depth.
    UnsupportedCoefficient,
    /// A Bessel wave-coefficient recursion denominator vanished.
    ResonantBeta { index: usize },
    /// A kernel basis element is not annihilated by the operator power.
    NotInKernel { index: usize },
    /// The kernel span is not closed under the shift ln x -> ln x + 1.
    MonodromyNotClosed { index: usize },
    /// Wronskian of the proposed kernel basis vanishes.
    ZeroWronskian,
    /// Log-free certification of a Wronskian quotient failed.
    LogResidue { coefficient: usize },
    /// Claimed right factor leaves a nonzero remainder.
    NotARightFactor,
    /// An operator product is not a perfect power of a differential operator.
    NotAPerfectPower,
    /// A kernel-solution recursion denominator vanished below the minimal root.
    ResonanceBelowMinimal { step: usize },
    /// Darboux factorisation left a nonzero remainder.
    NonzeroRemainder,
    /// A Darboux step broke the cyclic-support invariance of the operator.
    InvarianceLost,
    /// Rational reconstruction of a series failed at the given degree bound.
    ReconstructionFailed { degree_bound: i64 },
    /// Conjugated operator kept pseudo-differential tail terms beyond the
    /// expected order.
    TailNotVanishing { dpower: i64 },
    /// A bispectral residual is nonzero; carries the first offending bidegree.
    ResidualNonzero { xexp: i64, zexp: i64 },
    /// No string number within the search bound.
    NoStringNumber { bound: u32 },
    /// A string identity failed at iteration i.
    IdentityFailed { i: u32 },
    /// Darboux reduction exceeded the step budget.
    StepLimitExceeded { steps: u32 },
    /// Reduction terminated with a nonzero string number; carries codes of the
    /// diagnostics gathered on the offending operator.
    NonzeroStringNumberAtTermination { string_number: Option<u32> },
    /// The zero operator where a nonzero one is required.
    ZeroOperator,
    /// Parse failure at a byte position.
    SyntaxError { position: usize, message: String },
    /// Unknown symbol in an operator or kernel expression.
    UnknownSymbol { position: usize, symbol: String },
    /// A (rho, sigma) profile was requested for coefficients growing at
    /// infinity, outside the supported class.
    CoefficientGrowsAtInfinity,
}

impl Error {
    /// Stable machine-readable code for the CLI and JSON documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ReducibleMinimalPolynomial(_) => "ReducibleMinimalPolynomial",
            Error::ZeroArgument => "ZeroArgument",
            Error::PrecisionUnderflow => "PrecisionUnderflow",
            Error::UnsupportedFieldSplit(_) => "UnsupportedFieldSplit",
            Error::NotNormalized => "NotNormalized",
            Error::CoefficientNotVanishing(_) => "CoefficientNotVanishing",
            Error::NonMonicDivisor => "NonMonicDivisor",
            Error::NonUnitLeadingCoefficient => "NonUnitLeadingCoefficient",
            Error::DepthExhausted => "DepthExhausted",
            Error::IntegrationObstruction { .. } => "IntegrationObstruction",
            Error::UnsupportedCoefficient => "UnsupportedCoefficient",
            Error::ResonantBeta { .. } => "ResonantBeta",
            Error::NotInKernel { .. } => "NotInKernel",
            Error::MonodromyNotClosed { .. } => "MonodromyNotClosed",
            Error::ZeroWronskian => "ZeroWronskian",
            Error::LogResidue { .. } => "LogResidue",
            Error::NotARightFactor => "NotARightFactor",
            Error::NotAPerfectPower => "NotAPerfectPower",
            Error::ResonanceBelowMinimal { .. } => "ResonanceBelowMinimal",
            Error::NonzeroRemainder => "NonzeroRemainder",
            Error::InvarianceLost => "InvarianceLost",
            Error::ReconstructionFailed { .. } => "ReconstructionFailed",
            Error::TailNotVanishing { .. } => "TailNotVanishing",
            Error::ResidualNonzero { .. } => "ResidualNonzero",
            Error::NoStringNumber { .. } => "NoStringNumber",
            Error::IdentityFailed { .. } => "IdentityFailed",
            Error::StepLimitExceeded { .. } => "StepLimitExceeded",
            Error::NonzeroStringNumberAtTermination { .. } => {
                "NonzeroStringNumberAtTermination"
            }
            Error::ZeroOperator => "ZeroOperator",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::UnknownSymbol { .. } => "UnknownSymbol",
            Error::CoefficientGrowsAtInfinity => "CoefficientGrowsAtInfinity",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ReducibleMinimalPolynomial(factor) => {
                write!(f, "minimal polynomial is reducible (factor {factor})")
            }
            Error::ZeroArgument => write!(f, "order at infinity of the zero function"),
            Error::PrecisionUnderflow => write!(f, "series precision underflow"),
            Error::UnsupportedFieldSplit(what) => {
                write!(f, "would need a second algebraic extension: {what}")
            }
            Error::NotNormalized => {
                write!(f, "operator is not monic with vanishing subleading coefficient")
            }
            Error::CoefficientNotVanishing(k) => {
                write!(f, "coefficient of d^{k} does not vanish at infinity")
            }
            Error::NonMonicDivisor => write!(f, "right division needs a monic divisor"),
            Error::NonUnitLeadingCoefficient => {
                write!(f, "leading coefficient is not invertible")
            }
            Error::DepthExhausted => write!(f, "pseudo-differential depth exhausted"),
            Error::IntegrationObstruction { dpower } => {
                write!(f, "wave recursion hit a log term at d^{dpower}")
            }
            Error::UnsupportedCoefficient => {
                write!(f, "coefficient tail cannot be transposed at finite depth")
            }
            Error::ResonantBeta { index } => {
                write!(f, "wave-coefficient recursion denominator vanished at k={index}")
            }
            Error::NotInKernel { index } => {
                write!(f, "basis element {index} is not in the kernel")
            }
            Error::MonodromyNotClosed { index } => {
                write!(f, "kernel span not closed under log shift (element {index})")
            }
            Error::ZeroWronskian => write!(f, "kernel basis has zero Wronskian"),
            Error::LogResidue { coefficient } => {
                write!(f, "log residue in Wronskian quotient coefficient {coefficient}")
            }
            Error::NotARightFactor => write!(f, "not an exact right factor"),
            Error::NotAPerfectPower => write!(f, "not a perfect operator power"),
            Error::ResonanceBelowMinimal { step } => {
                write!(f, "kernel recursion denominator vanished at step {step}")
            }
            Error::NonzeroRemainder => write!(f, "factorisation remainder is nonzero"),
            Error::InvarianceLost => write!(f, "cyclic invariance lost after Darboux step"),
            Error::ReconstructionFailed { degree_bound } => {
                write!(f, "rational reconstruction failed at degree bound {degree_bound}")
            }
            Error::TailNotVanishing { dpower } => {
                write!(f, "pseudo-differential tail survives at d^{dpower}")
            }
            Error::ResidualNonzero { xexp, zexp } => {
                write!(f, "nonzero residual at bidegree (x^{xexp}, z^{zexp})")
            }
            Error::NoStringNumber { bound } => {
                write!(f, "no string number up to n = {bound}")
            }
            Error::IdentityFailed { i } => write!(f, "string identity failed at i = {i}"),
            Error::StepLimitExceeded { steps } => {
                write!(f, "Darboux reduction exceeded {steps} steps")
            }
            Error::NonzeroStringNumberAtTermination { string_number } => match string_number {
                Some(n) => write!(f, "reduction terminated with string number {n} != 0"),
                None => write!(f, "reduction terminated without a string number"),
            },
            Error::ZeroOperator => write!(f, "zero operator"),
            Error::SyntaxError { position, message } => {
                write!(f, "syntax error at byte {position}: {message}")
            }
            Error::UnknownSymbol { position, symbol } => {
                write!(f, "unknown symbol `{symbol}` at byte {position}")
            }
            Error::CoefficientGrowsAtInfinity => {
                write!(f, "coefficient grows at infinity; profile undefined")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
