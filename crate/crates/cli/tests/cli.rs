use std::process::{Command, Output};

use sturmkit::trees::{addresses_to_depth, sturm_number_at};
use sturmkit::{BigInt, BinaryMorphism, Representative};

fn sturmkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturmkit"))
        .args(args)
        .output()
        .unwrap()
}

fn sturmkit_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturmkit"))
        .args(args)
        .env(key, value)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

const GOLDEN: &str = "(3-1*sqrt(5))/2";

#[test]
fn word_prefix() {
    let out = sturmkit(&["word", "--alpha", GOLDEN, "--rho", GOLDEN, "--len", "7"]);
    assert_eq!(stdout(&out), "0100101");
    let out = sturmkit(&["word", "--alpha", GOLDEN, "--rho", "0", "--len", "6", "--ceiling"]);
    assert_eq!(stdout(&out), "101001");
    let out = sturmkit(&[
        "word", "--alpha", GOLDEN, "--rho", GOLDEN, "--len", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["word"], "010");
    assert_eq!(v["representative"], "floor");
}

#[test]
fn tree_formats() {
    let out = sturmkit(&["tree", "--kind", "kepler", "--depth", "1", "--format", "json"]);
    assert_eq!(stdout(&out), r#"{"":"1/2","0":"1/3","1":"2/3"}"#);
    let out = sturmkit(&["tree", "--kind", "phi", "--depth", "1", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph phi {"), "{dot}");
    assert!(dot.contains(r#""L" -> "1";"#), "{dot}");
    let out = sturmkit(&["tree", "--kind", "sturm", "--depth", "2"]);
    assert_eq!(stdout(&out).lines().count(), 7);
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&sturmkit(&["cf", "--x", "(0+1*sqrt(2))/1"])), "[1; (2)]");
    assert_eq!(stdout(&sturmkit(&["locate", "--fraction", "4/7"])), "011");
    assert_eq!(stdout(&sturmkit(&["locate", "--fraction", "1/2"])), "L");
    assert_eq!(
        stdout(&sturmkit(&["fix", "--morphism", "0->01,1->0", "--len", "8"])),
        "01001010"
    );
    assert_eq!(
        stdout(&sturmkit(&[
            "check",
            "--morphism",
            "0->01,1->0",
            "--alpha",
            GOLDEN,
            "--rho",
            GOLDEN
        ])),
        "true"
    );
    assert_eq!(
        stdout(&sturmkit(&["invariant", "--alpha", GOLDEN, "--rho", "0"])),
        "true"
    );
    assert_eq!(
        stdout(&sturmkit(&["conjugate-psi", "--word", "psi1,psi3,psi1"])),
        "0->00101,1->01"
    );
    let sturm = stdout(&sturmkit(&["sturm", "--alpha", GOLDEN]));
    assert!(sturm.contains("sturm: true"), "{sturm}");
    let dec = stdout(&sturmkit(&[
        "decompose",
        "--morphism",
        "0->001,1->01",
        "--set",
        "{psi3,psi8}",
    ]));
    assert!(dec.contains("word: psi3,psi8"), "{dec}");
    let loz = stdout(&sturmkit(&[
        "lozenge",
        "--alpha",
        GOLDEN,
        "--rho",
        "(-1+1*sqrt(5))/2",
        "--len",
        "16",
    ]));
    assert!(loz.contains("index: 1"), "{loz}");
    assert!(loz.contains("floor: 1001001010010010"), "{loz}");
}

#[test]
fn solve_reports_the_fixed_point() {
    let out = sturmkit(&["solve", "--word", "psi1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["alpha"], GOLDEN);
    assert_eq!(v["rho"], GOLDEN);
    assert_eq!(v["representative"], "floor");
}

#[test]
fn find_examples() {
    let out = sturmkit(&[
        "find",
        "--alpha",
        GOLDEN,
        "--rho-kind",
        "zero",
        "--max-depth",
        "8",
    ]);
    let text = stdout(&out);
    assert!(text.contains("generator_word: psi3,psi8"), "{text}");
    assert!(text.contains("morphism: 0->001,1->01"), "{text}");
}

#[test]
fn exit_codes() {
    let not_found = sturmkit(&[
        "find",
        "--alpha",
        "(-1+1*sqrt(13))/6",
        "--rho-kind",
        "zero",
        "--max-depth",
        "3",
    ]);
    assert_eq!(code(&not_found), 3);
    assert!(!not_found.stderr.is_empty());

    for args in [
        &["find", "--alpha", "(5-1*sqrt(5))/10"][..],
        &["word", "--alpha", "junk", "--rho", "0", "--len", "3"],
        &[
            "word", "--alpha", GOLDEN, "--rho", "0", "--len", "3", "--format", "dot",
        ],
        &["locate", "--fraction", "2/4"],
        &["solve", "--word", "psi8"],
        &["fix", "--morphism", "0->1,1->0", "--len", "4"],
        &["tree", "--kind", "kepler", "--depth", "17"],
        &["conjugate-psi", "--morphism", "0->01,1->0"],
        &["nonsense"],
        &[],
    ] {
        let out = sturmkit(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn depth_cap_from_environment() {
    let args = ["tree", "--kind", "kepler", "--depth", "4"];
    assert_eq!(code(&sturmkit_env(&args, "STURMKIT_DEPTH_CAP", "3")), 2);
    assert_eq!(code(&sturmkit_env(&args, "STURMKIT_DEPTH_CAP", "junk")), 2);
    assert_eq!(code(&sturmkit_env(&args, "STURMKIT_DEPTH_CAP", "4")), 0);
    let deep = ["tree", "--kind", "kepler", "--depth", "17", "--format", "json"];
    assert_eq!(code(&sturmkit_env(&deep, "STURMKIT_DEPTH_CAP", "17")), 0);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tree", "--kind", "m38", "--depth", "4", "--format", "json"][..],
        &[
            "find",
            "--alpha",
            "(-1+1*sqrt(13))/6",
            "--rho-kind",
            "zero",
            "--format",
            "json",
        ],
        &["solve", "--word", "psi3,psi8,psi8", "--format", "json"],
    ] {
        assert_eq!(sturmkit(args).stdout, sturmkit(args).stdout, "{args:?}");
    }
}

/// Every tree node off the left edge, down to length 5, gets a verified
/// fixer for its characteristic word.
#[test]
fn find_round_trips_tree_addresses() {
    let mut checked = 0;
    for addr in addresses_to_depth(5).unwrap().filter(|a| !a.is_left_edge()) {
        let alpha = sturm_number_at::<BigInt>(&addr).unwrap().unwrap();
        let a = alpha.to_string();
        let out = sturmkit(&["find", "--alpha", &a, "--rho-kind", "alpha", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let sigma: BinaryMorphism = v["morphism"].as_str().unwrap().parse().unwrap();
        assert!(
            sigma
                .is_fixed_by(&alpha, &alpha, 300, Representative::Floor)
                .unwrap(),
            "{addr}"
        );
        assert!(v["depth"].as_u64().unwrap() <= addr.level() as u64, "{addr}: {v}");
        checked += 1;
    }
    assert_eq!(checked, 57);
}
