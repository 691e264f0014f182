use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad graph, unknown link, bad parameter).
    #[error("invalid input: {0}")]
    Input(String),

    /// An enumeration or search exceeded its configured cap.
    #[error("resource guard exceeded: {what} (cap {cap})")]
    Resource { what: &'static str, cap: usize },

    /// A result was requested that no available certificate supports.
    #[error("unavailable: {0}")]
    Unavailable(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
