use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mass must be positive and finite, got {0}")]
    NonPositiveMass(f64),

    #[error("spinor index {index} out of range 1..={max}")]
    SpinorIndex { index: usize, max: usize },

    #[error("spin amplitudes not normalized: |a|^2 + |b|^2 = {0}")]
    Unnormalized(f64),

    #[error("invalid beam parameters: {0}")]
    InvalidParams(String),

    #[error("packet does not fit the momentum grid: boundary/peak = {ratio:.3e} (limit {limit:.1e})")]
    PacketTouchesBoundary { ratio: f64, limit: f64 },

    #[error("field aliasing: boundary/peak = {ratio:.3e} exceeds {limit:.1e}")]
    Aliasing { ratio: f64, limit: f64 },

    #[error("grid under-resolved: pi/dx = {nyquist:.4} < required {required:.4}")]
    UnderResolved { nyquist: f64, required: f64 },

    #[error("closed form is singular on the beam axis (rho = 0)")]
    OnAxis,

    #[error("radius {rho} is outside the physical vortex region ({lo}, {hi})")]
    OutsidePhysicalRegion { rho: f64, lo: f64, hi: f64 },

    #[error("point ({x}, {y}) lies outside the sampled grid or in a zero-density cell")]
    PathOutsideGrid { x: f64, y: f64 },

    #[error("at least {min} nodes required, got {got}")]
    TooFewNodes { got: usize, min: usize },

    #[error("field representation mismatch: expected {expected}")]
    Representation { expected: &'static str },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
