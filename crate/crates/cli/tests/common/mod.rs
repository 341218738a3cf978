//! Golden CLI cases shared by the test suites.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

macro_rules! cases {
    ($($name:literal => [$($arg:literal),* $(,)?]),* $(,)?) => {
        &[$(Case { name: $name, args: &[$($arg),*] }),*]
    };
}

pub const CASES: &[Case] = cases![
    "delta-path-partition" => ["delta", "--graph", "inputs/path3.json", "--partition", "{a,b|c}"],
    "delta-path" => ["delta", "--graph", "inputs/path3.json"],
    "delta-triangle" => ["delta", "--graph", "inputs/triangle.json"],
    "coproduct-path" => ["coproduct", "--graph", "inputs/path3.json"],
    "coproduct-path-split" => ["coproduct", "--graph", "inputs/path3.json", "--split", "b;a,c"],
    "coproduct-triangle-split" => ["coproduct", "--graph", "inputs/triangle.json", "--split", "b;a,c"],
    "coproduct-prime-ab-c" => ["coproduct", "--graph", "inputs/edge_ab_c.json", "--split", "a,b;c"],
    "coproduct-prime-c-ab" => ["coproduct", "--graph", "inputs/edge_ab_c.json", "--split", "c;a,b"],
    "coproduct-prime-zero" => ["coproduct", "--graph", "inputs/edge_ab_c.json", "--split", "a,c;b"],
    "delta-prime-edge" => ["delta-prime", "--graph", "inputs/edge_ab_c.json"],
    "delta-prime-path" => ["delta-prime", "--graph", "inputs/path3.json"],
    "product-edge-vertex" => ["product", "--graph", "inputs/edge_ab.json", "--with", "inputs/vertex_c.json"],
    "qsh-k" => ["qsh", "--V", "k", "--left", "x", "--right", "x"],
    "qsh-k-cube" => ["qsh", "--V", "k", "--left", "x^2", "--right", "x"],
    "qsh-qsym" => ["qsh", "--left", "[1,2]", "--right", "[3]"],
    "qsh-free" => ["qsh", "--V", "free:2", "--left", "[(1,0)]", "--right", "[(0,1)]"],
    "delta-t-qsym" => ["delta-t", "--left", "[1,2,3]"],
    "deconcat-qsym" => ["delta-t", "--left", "[1,2,3]", "--cut"],
    "fock-coproduct-edge" => ["fock-coproduct", "--graph", "inputs/edge_v1v2.json", "--V", "free:3"],
    "fock-coproduct-edge-k" => ["fock-coproduct", "--graph", "inputs/edge_ab.json"],
    "fock-coproduct-path" => ["fock-coproduct", "--graph", "inputs/path_v123.json", "--V", "free:3"],
    "fock-coproduct-triangle" => ["fock-coproduct", "--graph", "inputs/triangle_v123.json", "--V", "free:3"],
    "fock-delta-edge" => ["fock-delta", "--graph", "inputs/edge_v1v2.json", "--V", "free:3"],
    "fock-delta-path" => ["fock-delta", "--graph", "inputs/path_v123.json", "--V", "free:3"],
    "fock-delta-triangle" => ["fock-delta", "--graph", "inputs/triangle_v123.json", "--V", "free:3"],
    "fock-delta-triangle-k" => ["fock-delta", "--graph", "inputs/triangle.json"],
    "fock-delta-edge-json" => ["fock-delta", "--graph", "inputs/edge_v1v2.json", "--format", "json"],
    "pi-merged" => ["pi", "--graph", "inputs/merged_decorated.json", "--V", "free:2"],
    "rho-edge" => ["rho", "--graph", "inputs/edge_v1v2.json"],
    "realize-kx-cube" => ["realize-kx", "--left", "x^3"],
    "comp-qsh" => ["comp-qsh", "--left", "({a,b},{c})", "--right", "({d},{e})"],
    "comp-delta" => ["comp-delta", "--left", "({a},{b},{c})"],
    "comp-deconcat" => ["comp-delta", "--left", "({a},{b},{c})", "--cut"],
    "verify-comp" => ["verify", "--suite", "comp", "--max-n", "3"],
    "verify-species-json" => ["verify", "--suite", "species", "--max-n", "2", "--format", "json"],
    "verify-no-connectivity" => ["verify", "--suite", "species", "--max-n", "3", "--mutate", "no-connectivity"],
    "verify-no-block-filter" => ["verify", "--suite", "species", "--max-n", "2", "--mutate", "no-block-filter"],
    "error-malformed" => ["delta", "--graph", "inputs/malformed.json"],
    "error-bound" => ["delta", "--graph", "inputs/path3.json", "--max-n", "2"],
    "error-partition" => ["delta", "--graph", "inputs/path3.json", "--partition", "{a,b|c"],
    "error-wrong-preset" => ["fock-delta", "--graph", "inputs/edge_v1v2.json", "--V", "qsym"],
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Exit status, stdout and stderr in one deterministic transcript.
pub fn run_case(case: &Case) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_species-hopf"))
        .args(case.args)
        .current_dir(golden_dir())
        .env_remove("SPECIES_HOPF_MAXN")
        .output()
        .expect("binary runs");
    format!(
        "$ species-hopf {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        case.args.join(" "),
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

pub fn expected_path(case: &Case) -> PathBuf {
    golden_dir().join(format!("{}.out", case.name))
}
