//! Replays every session under `tests/sessions` and compares the transcript
//! with the stored `.out` file. Set `LOCHOM_BLESS=1` to rewrite the files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use lochom_cli::{run_text, Config};

fn sessions() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/sessions");
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "lhcm"))
        .collect();
    files.sort();
    files
}

fn expected_path(session: &Path) -> PathBuf {
    session.with_extension("out")
}

#[test]
fn transcripts_match_and_repeat() {
    let bless = std::env::var_os("LOCHOM_BLESS").is_some();
    let files = sessions();
    assert!(files.len() >= 5);
    for file in files {
        let text = fs::read_to_string(&file).unwrap();
        let first = run_text(&text, &Config::default()).unwrap();
        let second = run_text(&text, &Config::default()).unwrap();
        assert_eq!(first, second, "{} is not deterministic", file.display());
        if bless {
            fs::write(expected_path(&file), &first.text).unwrap();
        }
        let expected = fs::read_to_string(expected_path(&file)).unwrap();
        assert_eq!(first.text, expected, "{} transcript changed", file.display());
    }
}

#[test]
fn binary_output_and_exit_codes() {
    for file in sessions() {
        let out = Command::new(env!("CARGO_BIN_EXE_lochom")).arg("run").arg(&file).output().unwrap();
        let expected = fs::read_to_string(expected_path(&file)).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
        let failed = expected.lines().last().is_some_and(|l| l.starts_with("error"));
        assert_eq!(out.status.code(), Some(if failed { 1 } else { 0 }), "{}", file.display());
    }
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("lochom-parse-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.lhcm");
    fs::write(&file, "ring 32003 x1 x2 x3 x4\nideal I = x1 + x2*x3\ninvariants I\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lochom")).arg("run").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2, column 11"), "{err}");
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seed_flag_is_accepted() {
    let file = sessions().into_iter().find(|p| p.ends_with("duality.lhcm")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lochom"))
        .args(["run", "--seed", "7", "--max-degree", "3"])
        .arg(&file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
