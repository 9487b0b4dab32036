use std::fmt::Display;

/// Exit status paired with the error that caused it.
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

pub const INPUT: u8 = 1;
pub const REFUSAL: u8 = 2;
pub const INTERNAL: u8 = 3;

impl Failure {
    pub fn input(msg: impl Display) -> Self {
        Failure {
            code: INPUT,
            error: anyhow::anyhow!("{msg}"),
        }
    }

    pub fn internal(msg: impl Display) -> Self {
        Failure {
            code: INTERNAL,
            error: anyhow::anyhow!("{msg}"),
        }
    }
}

impl From<sep_core::Error> for Failure {
    fn from(error: sep_core::Error) -> Self {
        let code = if error.is_refusal() { REFUSAL } else { INPUT };
        Failure {
            code,
            error: error.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(error: std::io::Error) -> Self {
        Failure {
            code: INPUT,
            error: error.into(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(error: csv::Error) -> Self {
        Failure {
            code: INPUT,
            error: error.into(),
        }
    }
}

/// Node budget for the facet search, from `SEP_NODE_BUDGET` when set.
pub fn node_budget() -> Result<u64, Failure> {
    match std::env::var("SEP_NODE_BUDGET") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::input(format!(
                "SEP_NODE_BUDGET must be a positive integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(sep_core::facet::DEFAULT_NODE_BUDGET),
    }
}

/// The given seed, or a fresh one announced on stderr so the run can be repeated.
pub fn seed_or_fresh(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let nanos = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0);
        let seed = nanos ^ (std::process::id() as u64).rotate_left(32);
        eprintln!("seed: {seed}");
        seed
    })
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&std::path::Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
