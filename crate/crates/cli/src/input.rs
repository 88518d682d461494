use std::path::Path;

use coeff_core::Error;
use serde_json::{json, Value};

/// An input error together with the file it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub source: String,
    pub error: Error,
}

impl Failure {
    pub fn flag(name: &str, error: Error) -> Failure {
        Failure { source: name.to_string(), error }
    }

    pub fn to_json(&self) -> Value {
        let (kind, pointer, message) = match &self.error {
            Error::Input { pointer, message } => ("input", pointer.clone(), message.clone()),
            Error::UnknownKey(k) => ("unknown-key", String::new(), format!("unknown basis key {k}")),
            Error::ModuleMismatch(m) => ("module-mismatch", String::new(), m.clone()),
            Error::Unsupported(m) => ("unsupported", String::new(), m.clone()),
        };
        json!({"source": self.source, "kind": kind, "pointer": pointer, "message": message})
    }
}

pub trait InFile<T> {
    fn in_file(self, path: &Path) -> Result<T, Failure>;
}

impl<T> InFile<T> for Result<T, Error> {
    fn in_file(self, path: &Path) -> Result<T, Failure> {
        self.map_err(|error| Failure { source: path.display().to_string(), error })
    }
}

pub fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        source: path.display().to_string(),
        error: Error::input("", format!("cannot read: {e}")),
    })
}

/// Errors that concern the configuration rather than one file.
pub fn config<T>(r: Result<T, Error>) -> Result<T, Failure> {
    r.map_err(|error| Failure { source: "config".into(), error })
}
