//! Oracles and fixture helpers shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use plurican::arrangements::LabeledArrangement;
use plurican::scalar::ExactScalar;
use plurican::torsion::{FiniteAbelianGroup, GroupElement};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn load_arrangement(name: &str) -> LabeledArrangement {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture readable");
    LabeledArrangement::from_json_str(&text).expect("fixture parses")
}

/// `|{x : d x = 0}|` by listing every element.
pub fn brute_tor(g: &FiniteAbelianGroup, d: u64) -> u64 {
    g.elements().filter(|x| g.scale(d, x).is_zero()).count() as u64
}

/// Whether `a = d x` for some `x`, by listing every element.
pub fn brute_divisible(g: &FiniteAbelianGroup, a: &GroupElement, d: u64) -> bool {
    g.elements().any(|x| &g.scale(d, &x) == a)
}

/// 3x3 determinant by cofactor expansion, written out independently of the
/// library's cross-product route.
pub fn det3(m: &[[ExactScalar; 3]; 3]) -> ExactScalar {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let a = &m[0][0] * &minor(1, 2, 1, 2);
    let b = &m[0][1] * &minor(1, 2, 0, 2);
    let c = &m[0][2] * &minor(1, 2, 0, 1);
    &(&a - &b) + &c
}

/// Turns a flat list of nine `(a, b)` integer pairs into a matrix of `a + b ω`.
pub fn matrix_from_pairs(entries: &[(i64, i64)]) -> [[ExactScalar; 3]; 3] {
    let s = |i: usize| {
        let (a, b) = entries[i];
        &ExactScalar::from_int(a) + &(&ExactScalar::from_int(b) * &ExactScalar::omega())
    };
    [[s(0), s(1), s(2)], [s(3), s(4), s(5)], [s(6), s(7), s(8)]]
}

/// One invocation of every command and recipe, used by the determinism checks.
pub fn cli_invocations() -> Vec<Vec<String>> {
    let f = |name: &str| fixture(name).to_string_lossy().into_owned();
    let cases: Vec<Vec<String>> = vec![
        vec!["verify-lemma-ev".into()],
        vec!["invariants".into(), "--surface".into(), "campedelli".into(), "--d".into(), "2".into(), "--m".into(), "1".into()],
        vec!["invariants".into(), "--pa".into(), "37".into(), "--k2".into(), "333".into(), "--d".into(), "2".into(), "--m".into(), "3".into()],
        vec!["components".into(), "--group".into(), "2,2,2".into(), "--d".into(), "2".into()],
        vec!["components".into(), "--group".into(), "5,5,5,5,5,5".into(), "--d".into(), "2".into(), "--m".into(), "3".into()],
        vec!["components".into(), "--group".into(), "2,2".into(), "--d".into(), "2".into(), "--aut".into(), f("aut_swap_z2xz2.json")],
        vec!["check-arrangement".into(), f("campedelli_generic.json")],
        vec!["check-arrangement".into(), f("campedelli_zero_sum_triple.json")],
        vec!["check-arrangement".into(), f("extension_type_two.json"), "--mode".into(), "extension".into()],
        vec!["incidences".into(), f("dual_hesse.json")],
        vec!["catalog".into()],
        vec!["reproduce".into(), "camp1-moduli".into()],
        vec!["reproduce".into(), "cplus".into(), "--d".into(), "2".into(), "--m".into(), "3".into()],
        vec!["reproduce".into(), "campedelli-cover".into()],
        vec!["reproduce".into(), "burniat-cover".into()],
        vec!["reproduce".into(), "mlp-cover".into()],
        vec!["reproduce".into(), "lemma-ev".into()],
    ];
    cases
}

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

pub fn run_bin(args: &[String]) -> Run {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_plurican"))
        .args(args)
        .output()
        .expect("binary runs");
    Run { code: out.status.code().unwrap_or(-1), stdout: out.stdout, stderr: out.stderr }
}
