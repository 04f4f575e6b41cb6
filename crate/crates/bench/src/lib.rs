//! Shared helpers for the benchmarks: loading corpus problems by name.

use std::path::PathBuf;

use sigbasis::{parse_problem, Problem};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load(name: &str) -> Problem {
    let path = corpus_dir().join(format!("{name}.ideal"));
    let src = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_problem(&src).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
