use core::fmt;

/// Failures reported by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    SlotOutOfRange {
        slot: usize,
        len: usize,
    },
    /// Monic normalization or leading data requested for the zero polynomial.
    ZeroPolynomial,
    /// Leading module monomial requested for the zero module element.
    ZeroModuleElement,
    EmptyInput,
    /// Input generator `index` is zero.
    ZeroGenerator {
        index: usize,
    },
    /// Input generators `first` and `second` coincide up to a scalar.
    DuplicateGenerator {
        first: usize,
        second: usize,
    },
    /// A monomial was expected to belong to the set it is partitioned against.
    NotInSet,
    /// The input is not a Groebner basis: an S-polynomial has a nonzero remainder.
    NotGroebner {
        i: usize,
        j: usize,
    },
    /// A non-multiplicative prolongation has no involutive standard representation.
    NotInvolutive {
        element: usize,
        var: usize,
    },
    /// Completion did not finish within the iteration budget.
    IterationCap {
        limit: usize,
    },
    /// The quasi-stable driver exhausted its budget of elementary changes.
    ChangeCap {
        limit: usize,
    },
    NotHomogeneous {
        index: usize,
    },
    /// Element `index` of a claimed syzygy set does not evaluate to zero.
    NotSyzygy {
        index: usize,
    },
    ZeroCoefficient,
    /// A registered polynomial kept a nonzero remainder against the final basis.
    Unreduced {
        slot: usize,
    },
    /// An elementary change was requested for a passing verdict.
    VerdictPassed,
    Cancelled,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {} variables, found {}", expected, found)
            }
            Error::SlotOutOfRange { slot, len } => {
                write!(f, "module slot {} out of range (rank {})", slot, len)
            }
            Error::ZeroPolynomial => f.write_str("operation undefined for the zero polynomial"),
            Error::ZeroModuleElement => f.write_str("operation undefined for the zero module element"),
            Error::EmptyInput => f.write_str("empty generating set"),
            Error::ZeroGenerator { index } => write!(f, "generator {} is zero", index + 1),
            Error::DuplicateGenerator { first, second } => {
                write!(f, "generators {} and {} are scalar multiples of each other", first + 1, second + 1)
            }
            Error::NotInSet => f.write_str("monomial is not an element of the given set"),
            Error::NotGroebner { i, j } => {
                write!(f, "not a Groebner basis: S-polynomial of {} and {} does not reduce to zero", i + 1, j + 1)
            }
            Error::NotInvolutive { element, var } => write!(
                f,
                "not an involutive basis: prolongation of element {} by variable {} is irreducible",
                element + 1,
                var + 1
            ),
            Error::IterationCap { limit } => {
                write!(f, "completion did not terminate within {} iterations", limit)
            }
            Error::ChangeCap { limit } => {
                write!(f, "no quasi-stable position found within {} elementary changes", limit)
            }
            Error::NotHomogeneous { index } => write!(f, "generator {} is not homogeneous", index + 1),
            Error::NotSyzygy { index } => write!(f, "element {} of the syzygy set is not a syzygy", index + 1),
            Error::ZeroCoefficient => f.write_str("coefficient must be nonzero"),
            Error::Unreduced { slot } => {
                write!(f, "intermediate generator {} does not reduce to zero against the final basis", slot + 1)
            }
            Error::VerdictPassed => f.write_str("no elementary change for a passing test verdict"),
            Error::Cancelled => f.write_str("computation cancelled"),
        }
    }
}

impl core::error::Error for Error {}
