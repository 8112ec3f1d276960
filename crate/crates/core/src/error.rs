//! Error type shared by all modules.
//!
//! Two families of failure are kept apart on purpose: ordinary errors
//! (bad input, numerical breakdown, I/O) and *hypothesis failures*, where
//! the toolkit correctly detects that the geometric premises of the
//! continuation machinery do not hold for the given data. The CLI maps
//! the latter to a distinct exit code so batch scripts can tell science
//! from bugs.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The set cannot supply the requested number of measure-rich,
    /// separated slices. A legitimate outcome, not a bug.
    #[error("insufficient measure: found {found} of {wanted} admissible slice nodes (separation {separation}, target slice measure {target})")]
    InsufficientMeasure {
        wanted: usize,
        found: usize,
        separation: f64,
        target: f64,
    },

    /// Interpolation nodes must be pairwise distinct.
    #[error("duplicate interpolation nodes at indices {0} and {1}")]
    DuplicateNodes(usize, usize),

    /// Measure parameters live in (0, 1].
    #[error("invalid measure parameter {0}; expected 0 < p <= 1")]
    InvalidMeasure(f64),

    /// The gauge bisection never found a feasible scale below the cap,
    /// i.e. the vector is not reachable from the cone's distinguished ray.
    #[error("cone gauge unbounded: no lambda <= {cap} with lambda*one - x in the cone")]
    Unbounded { cap: f64 },

    /// The wedge induced by a cone has measure below the configured floor.
    #[error("degenerate cone: induced wedge measure {measure:.3e} below floor {floor:.3e}")]
    DegenerateCone { measure: f64, floor: f64 },

    /// Four-part decomposition requires cone norm < 1/8.
    #[error("cone norm {norm} too large for four-part decomposition (requires < 1/8)")]
    NormTooLarge { norm: f64 },

    /// An oracle probe landed outside the declared domain.
    #[error("domain violation: probe point outside the declared domain ({context})")]
    DomainViolation { context: String },

    /// The per-degree direction systems are numerically degenerate.
    #[error("ill-conditioned ray system: condition estimate {cond:.3e} exceeds {limit:.3e}")]
    IllConditioned { cond: f64, limit: f64 },

    /// No level in the doubling schedule captures half the samples:
    /// the partial sums blow up on most of the wedge.
    #[error("no finite N0: at N = {max_n} only fraction {fraction:.3} of samples have bounded partial sums")]
    NoFiniteN0 { max_n: f64, fraction: f64 },

    /// The configured overlap neighbourhood around the origin is empty.
    #[error("overlap measure 0: the two wedges meet only at the origin")]
    ZeroOverlap,

    /// Starlike spot-check failed: some x in the set has t*x outside it.
    #[error("set is not starlike with respect to the origin ({violations} of {checked} spot checks failed)")]
    NotStarlike { violations: usize, checked: usize },

    /// Malformed cone specification.
    #[error("invalid cone: {0}")]
    InvalidCone(String),

    /// Catch-all for malformed arguments.
    #[error("bad input: {0}")]
    BadInput(String),
}

impl Error {
    /// True for outcomes that mean "the theorem's premises fail here",
    /// as opposed to crashes or malformed input.
    pub fn is_hypothesis_failure(&self) -> bool {
        matches!(
            self,
            Error::InsufficientMeasure { .. }
                | Error::NoFiniteN0 { .. }
                | Error::ZeroOverlap
                | Error::DegenerateCone { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
