use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radius must be positive (got {0})")]
    NonPositiveRadius(f64),
    #[error("radius must be non-negative (got {0})")]
    NegativeRadius(f64),
    #[error("invalid potential parameters: {0}")]
    InvalidParams(String),
    #[error("no interior minimum for alpha = {alpha}: requires alpha < 0 or alpha > 1 together with A > 0")]
    NoMinimum { alpha: f64 },
    #[error("Wei-Dong coefficients undefined: {0}")]
    SchemeUndefined(String),
    #[error("state is not bound")]
    Unbound,
    #[error("gamma-function argument must be positive (got {0})")]
    NonPositiveGammaArgument(f64),
    #[error("hypergeometric series hit a pole of 1/(c)_k at term k = {k}")]
    HypergeometricPole { k: u32 },
    #[error("cannot parse spectroscopic label {0:?}")]
    InvalidLabel(String),
    #[error("invalid solver configuration: {0}")]
    SolverConfig(String),
    #[error("no eigenvalue found in bracket [{e_lo}, {e_hi}]")]
    NoEigenvalue { e_lo: f64, e_hi: f64 },
    #[error("bracket could not be adjusted to enclose a state with {target_nodes} nodes (node counts {found_lo}..{found_hi})")]
    BracketAdjustment {
        target_nodes: u32,
        found_lo: u32,
        found_hi: u32,
    },
    #[error("unknown molecule {name:?}; known molecules: {}", known.join(", "))]
    UnknownMolecule { name: String, known: Vec<String> },
    #[error("molecule registry: {0}")]
    MoleculeData(String),
}
