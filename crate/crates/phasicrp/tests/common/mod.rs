#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_phasicrp"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn phasicrp")
}

pub fn run_ok(args: &[&str]) -> Output {
    let out = run(args);
    assert!(
        out.status.success(),
        "phasicrp {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

/// Relative path → file bytes, for every file under `root`.
pub fn tree(root: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    fn walk(root: &Path, dir: &Path, acc: &mut BTreeMap<PathBuf, Vec<u8>>) {
        for entry in fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                walk(root, &path, acc);
            } else {
                let rel = path.strip_prefix(root).unwrap().to_owned();
                acc.insert(rel, fs::read(&path).unwrap());
            }
        }
    }
    let mut acc = BTreeMap::new();
    walk(root, root, &mut acc);
    acc
}

pub fn synth(seed: u64, duration_s: u32, out: &Path) {
    run_ok(&[
        "synth",
        "--seed",
        &seed.to_string(),
        "--duration-s",
        &duration_s.to_string(),
        "--classes",
        "0.5:90,1.5:180",
        "--noise",
        "0.1",
        "--out",
        out.to_str().unwrap(),
    ]);
}

/// `phasicrp encode` over `sessions`; returns stderr.
pub fn encode(sessions: &[PathBuf], mode: &str, jobs: usize, out: &Path) -> String {
    let mut args: Vec<String> = vec!["encode".into()];
    for s in sessions {
        args.push("--session".into());
        args.push(s.to_str().unwrap().into());
    }
    args.extend(["--mode", mode, "--jobs"].map(String::from));
    args.push(jobs.to_string());
    args.push("--out".into());
    args.push(out.to_str().unwrap().into());
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    String::from_utf8(run_ok(&refs).stderr).unwrap()
}
