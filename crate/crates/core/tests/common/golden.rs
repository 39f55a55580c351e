//! Stored command line transcripts.
//!
//! `golden/NAME.cmd` holds one command line (without the program name);
//! `golden/NAME.out` holds the transcript. `UPDATE_GOLDEN=1` rewrites the
//! transcripts.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn transcript(bin: &str, line: &str) -> String {
    let args = shell_words::split(line).expect("golden command line");
    let out = Command::new(bin).args(&args).output().expect("run binary");
    let mut t = format!("$ sl2free {line}\nexit: {}\n", out.status.code().unwrap_or(-1));
    t.push_str("--- stdout\n");
    t.push_str(&String::from_utf8_lossy(&out.stdout));
    t.push_str("--- stderr\n");
    t.push_str(&String::from_utf8_lossy(&out.stderr));
    t
}

/// Runs every case; returns the names of mismatching ones.
pub fn check_all(bin: &str) -> (usize, Vec<String>) {
    let update = std::env::var("UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    let mut cases: Vec<PathBuf> = fs::read_dir(dir())
        .expect("golden dir")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "cmd"))
        .collect();
    cases.sort();
    let mut bad = Vec::new();
    for cmd in &cases {
        let line = fs::read_to_string(cmd).expect("read cmd");
        let got = transcript(bin, line.trim());
        let out = cmd.with_extension("out");
        if update {
            fs::write(&out, &got).expect("write golden");
            continue;
        }
        if fs::read_to_string(&out).ok().as_deref() != Some(got.as_str()) {
            bad.push(cmd.file_stem().unwrap().to_string_lossy().into_owned());
        }
    }
    (cases.len(), bad)
}
