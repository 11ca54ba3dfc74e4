use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExpError {
    #[error(transparent)]
    Model(#[from] corrmath::Error),
    #[error(transparent)]
    Sim(#[from] hetnet_sim::SimError),
    #[error("unknown figure preset '{0}' (expected fig2..fig6)")]
    UnknownPreset(String),
    #[error("invalid sweep spec: {0}")]
    InvalidSpec(String),
    #[error("comparison requires the '{0}' column in every row")]
    MissingColumn(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, ExpError>;
