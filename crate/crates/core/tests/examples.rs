//! Every example runs to completion. `cargo test` builds the example
//! binaries next to the test executable's directory.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str, args: &[&str]) -> String {
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let path: PathBuf = deps.parent().unwrap().join("examples").join(name);
    let out = Command::new(&path)
        .args(args)
        .output()
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn macaulay() {
    let out = example("macaulay", &[]);
    assert!(out.contains("length of R/(x^4, y^4) = 5"));
    assert!(out.contains("Cohen-Macaulay: false"));
}

#[test]
fn hilbert_polynomial() {
    assert!(example("hilbert_polynomial", &[]).contains("e = 6, C = 5, N = 2"));
}

#[test]
fn fourgen_basis() {
    assert!(example("fourgen_basis", &[]).contains("basis size 21 (upper bound attained: true)"));
}

#[test]
fn curve_p3() {
    assert!(example("curve_p3", &["23", "2", "18"]).contains("basis of size 41 over |H| = 23"));
}

#[test]
fn construct_ring() {
    let out = example("construct_ring", &[]);
    assert!(out.contains("C = 3, N = 1: 7 generators, read back (e, C, N) = (6, 3, 1)"));
    assert!(out.contains("C = 2, N = 2: no ring has this data"));
}

#[test]
fn batch_curves() {
    let out = example("batch_curves", &["7"]);
    assert_eq!(out.lines().count(), 1 + (3..=7).map(|n| (n - 1) * (n - 2) / 2).sum::<usize>());
}

#[test]
fn gsw_witness() {
    assert!(example("gsw_witness", &[]).contains("not CM, witness x^2y^2"));
}
