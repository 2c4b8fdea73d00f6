#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hosvd3"));
    c.env_remove("HOSVD3_TOL");
    c
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

/// `(golden file, arguments)`; data file names are resolved by [`golden_args`].
pub const GOLDEN_RUNS: [(&str, &[&str]); 7] = [
    ("ghz.decompose.json", &["decompose", "@ghz.json"]),
    ("rect.decompose.json", &["decompose", "@rect.json"]),
    ("ghz.classify.json", &["classify", "@ghz.json"]),
    ("w.classify.json", &["classify", "@w.json"]),
    ("c_ab.classify.json", &["classify", "@c_ab.json"]),
    ("mesh_r3.csv", &["mesh", "--resolution", "3"]),
    ("sample_n8_s42.csv", &["sample", "--count", "8", "--seed", "42"]),
];

pub fn golden_args(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => data(f).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect()
}

/// Stdout of one golden run.
pub fn golden_output(args: &[&str]) -> Vec<u8> {
    let out = bin().args(golden_args(args)).output().expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}
