//! Error types shared across the core library.

use thiserror::Error;

/// Errors raised by assembly construction, modeling, simulation and control.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid module parameters: {reason}")]
    InvalidParams { reason: String },

    #[error("connection graph is not a spanning tree: {reason}")]
    NonTreeGraph { reason: String },

    #[error("connector {connector} of module {module} used more than once")]
    ConnectorReuse { module: usize, connector: usize },

    #[error("edge references module {module} outside 1..={count}")]
    UnknownModule { module: usize, count: usize },

    #[error("connector id {connector} outside 1..=4")]
    InvalidConnector { connector: usize },

    #[error("mounting twist {beta} outside [0, 2*pi)")]
    BetaOutOfRange { beta: f64 },

    #[error("matrix is not skew-symmetric (asymmetry {asymmetry:.3e})")]
    NonSkewInput { asymmetry: f64 },

    #[error("configuration matrix row rank {rank} is below four; assemblies that cannot track at least four degrees of freedom are out of scope")]
    UnderactuatedBeyondScope { rank: usize },

    #[error("allocation system is ill-conditioned (condition number {condition:.3e})")]
    IllConditioned { condition: f64 },

    #[error("allocation requires at least four active rotors, got {active}")]
    TooFewRotors { active: usize },

    #[error("all battery voltages are zero")]
    DeadBatteries,

    #[error("desired thrust magnitude {magnitude:.3e} below threshold; orientation undefined")]
    DegenerateThrust { magnitude: f64 },

    #[error("simulation state is not finite")]
    NonFiniteState,

    #[error("time step {dt} outside (0, {max}]")]
    InvalidTimeStep { dt: f64, max: f64 },

    #[error("rotor ({module}, {rotor}) is already inactive")]
    RotorAlreadyRemoved { module: usize, rotor: usize },
}
