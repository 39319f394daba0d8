//! Error type shared across the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Spectral setup needs at least 4 points and an even count.
    BadGridSize { n: usize },
    /// A quantity that must be strictly positive was not.
    NonPositive { name: &'static str, value: f64 },
    /// Sample array length does not match the grid.
    LengthMismatch { expected: usize, got: usize },
    /// A Fourier-multiplier symbol is singular (or non-finite) at a grid mode.
    /// `kappa` names the offending wavenumber, `denom` the near-zero denominator.
    SingularSymbol { kappa: f64, denom: f64 },
    /// Requested wavenumber is not one of the grid's discrete modes.
    OffGridWavenumber { kappa: f64 },
    /// Packet width unresolvable or wrapping on this grid.
    UnresolvedSigma { sigma: f64, dx: f64, length: f64 },
    /// w must be timelike or null with w0 > 0 (both light-cone components >= 0).
    SpacelikeW { w0: f64, w1: f64 },
    /// Exponential-family covector u violates u_l u^l = -1/lambda^2.
    InvalidFamily { norm: f64, required: f64 },
    /// Matrices fail the Clifford anticommutation relation.
    NonCliffordGamma { residual: f64 },
    /// Mode is off the mass shell (omega != dispersion(kappa)).
    OffShellMode { kappa: f64, omega: f64 },
    /// Too few points for a fit or sweep.
    TooFewPoints { needed: usize, got: usize },
    /// Command line / configuration problem.
    Config(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadGridSize { n } => {
                write!(f, "grid size n={n} unusable: need even n >= 4")
            }
            Error::NonPositive { name, value } => {
                write!(f, "{name} must be positive, got {value}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "field length {got} does not match grid size {expected}")
            }
            Error::SingularSymbol { kappa, denom } => {
                write!(
                    f,
                    "multiplier symbol singular at grid mode kappa = {kappa:.12} (denominator {denom:.3e})"
                )
            }
            Error::OffGridWavenumber { kappa } => {
                write!(f, "kappa = {kappa} is not a grid wavenumber")
            }
            Error::UnresolvedSigma { sigma, dx, length } => {
                write!(
                    f,
                    "packet width sigma = {sigma} outside resolvable range [{}, {}]",
                    4.0 * dx,
                    length / 8.0
                )
            }
            Error::SpacelikeW { w0, w1 } => {
                write!(f, "w = ({w0}, {w1}) is not timelike/null with w0 > 0")
            }
            Error::InvalidFamily { norm, required } => {
                write!(
                    f,
                    "u_l u^l = {norm:.12} but the exponential family needs {required:.12}"
                )
            }
            Error::NonCliffordGamma { residual } => {
                write!(f, "matrices violate the Clifford relation (residual {residual:.3e})")
            }
            Error::OffShellMode { kappa, omega } => {
                write!(f, "(kappa, omega) = ({kappa}, {omega}) is off the mass shell")
            }
            Error::TooFewPoints { needed, got } => {
                write!(f, "need at least {needed} points, got {got}")
            }
            Error::Config(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
