use std::path::PathBuf;
use std::process::Command;

use chain_core::{parse_elem, Bounds, Chain};
use clap::Parser;
use decompose::{group_representation, RepTree};
use lexchain::{eval, load_spec, run, Cli, Value};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn lexchain(args: &[&str]) -> (Result<(), i32>, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("lexchain").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let r = run(&cli, &mut out, &mut err).map_err(|e| e.exit_code());
    (r, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn eval_on(spec: &str, expr: &str) -> String {
    let (r, out, _) = lexchain(&["eval", "-f", &fixture(spec), "-e", expr]);
    assert_eq!(r, Ok(()), "{expr}");
    out.trim_end().to_string()
}

#[test]
fn eval_reproduces_example_values() {
    assert_eq!(eval_on("A.alg", "comp (0, T)"), "(-1, T)");
    assert_eq!(eval_on("A.alg", "mul (-1, T) (-1, T)"), "(-2, T)");
    assert_eq!(eval_on("A.alg", "mul (comp (0, T)) (comp (0, T))"), "(-2, T)");
    assert_eq!(eval_on("B.alg", "comp (0, T)"), "(0, B)");
    assert_eq!(eval_on("B.alg", "mul (0,B) (0,B)"), "(0, B)");
    assert_eq!(eval_on("A.alg", "tau unit"), eval_on("A.alg", "unit"));
}

#[test]
fn eval_covers_the_grammar() {
    let a = load_spec(std::path::Path::new(&fixture("A.alg"))).unwrap();
    assert_eq!(eval(&a, "le (0, T) (1, 1/2)").unwrap(), Value::Bool(true));
    assert_eq!(eval(&a, "idems").unwrap().to_string(), "[(0, 0), (0, T)]");
    assert_eq!(eval(&a, "(tau (0, 1/2))").unwrap().to_string(), "(0, 0)");
    assert_eq!(eval(&a, "res (0, T) (0, T)").unwrap().to_string(), "(0, T)");
    assert_eq!(eval(&a, "down (up (0, T))").unwrap().to_string(), "(0, T)");
    let z = plex::parse_algebra("Z").unwrap();
    assert_eq!(eval(&z, "up 3").unwrap().to_string(), "4");
    assert_eq!(eval(&z, "down (comp 3)").unwrap().to_string(), "-4");
    for bad in ["", "mul (0, T)", "comp (le (0,T) (0,T))", "comp (0, T) extra", "comp (0, X)", "mul (0, T) (1, 2, 3)"] {
        assert!(eval(&a, bad).is_err(), "{bad}");
    }
}

#[test]
fn build_and_exit_codes() {
    let (r, out, _) = lexchain(&["build", "-f", &fixture("G.alg")]);
    assert_eq!(r, Ok(()));
    assert!(out.starts_with("SLII(Z, Q, graphH(1/2))\n"));
    let bad = std::env::temp_dir().join("lexchain-bad-spec.alg");
    std::fs::write(&bad, "II(Q, Q)").unwrap();
    let (r, _, _) = lexchain(&["build", "-f", bad.to_str().unwrap()]);
    assert_eq!(r, Err(2));
    std::fs::write(&bad, "II(Z, Q").unwrap();
    assert_eq!(lexchain(&["build", "-f", bad.to_str().unwrap()]).0, Err(1));
    assert_eq!(lexchain(&["build", "-f", "/nonexistent/x.alg"]).0, Err(1));
    assert_eq!(lexchain(&["eval", "-f", &fixture("A.alg"), "-e", "comp (0, X)"]).0, Err(1));
}

#[test]
fn check_all_on_a_passes() {
    let (r, out, err) =
        lexchain(&["check", "-f", &fixture("A.alg"), "--laws", "all", "--budget", "300", "--seed", "7"]);
    assert_eq!(r, Ok(()), "{out}");
    assert!(out.lines().all(|l| l.starts_with("LAW ") && l.contains(" PASS ")), "{out}");
    assert!(err.contains("skipped table3"));
    assert!(err.contains("skipped prop9.2"));
    let ids: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    let order: Vec<&str> = lawcheck::ALL_LAWS.iter().copied().filter(|id| ids.contains(id)).collect();
    assert_eq!(ids, order);
}

#[test]
fn check_output_is_deterministic() {
    let args = [
        "check",
        "-f",
        &fixture("B.alg"),
        "--laws",
        "table1,eq2.3",
        "--budget",
        "150",
        "--seed",
        "3",
        "--format",
        "tsv",
    ];
    let (r1, o1, _) = lexchain(&args);
    let (r2, o2, _) = lexchain(&args);
    assert_eq!((r1, &o1), (r2, &o2));
    assert!(o1.starts_with("law\tcell\tcount\tfailures\tstatus\n"));
    assert!(o1.contains("\ntable1\tv*w\t150\t0\tPASS\n"));
}

#[test]
fn check_errors() {
    assert_eq!(lexchain(&["check", "-f", &fixture("A.alg"), "--laws", "table3"]).0, Err(2));
    assert_eq!(lexchain(&["check", "-f", &fixture("A.alg"), "--laws", "nope"]).0, Err(1));
    let z = std::env::temp_dir().join("lexchain-z.alg");
    std::fs::write(&z, "Z").unwrap();
    let (r, out, err) = lexchain(&["check", "-f", z.to_str().unwrap(), "--budget", "100"]);
    assert_eq!(r, Ok(()));
    assert!(out.contains("LAW thm2.4 PASS"));
    assert!(err.contains("skipped remark11.4"));
}

#[test]
fn represent_and_rebuild_round_trip() {
    let (r, out, _) = lexchain(&["represent", "-f", &fixture("E.alg")]);
    assert_eq!(r, Ok(()));
    let blocks: Vec<&str> = out.lines().collect();
    assert_eq!(blocks.len(), 3);
    assert_eq!(blocks[0], "base: Z");
    assert!(blocks[1].contains("iota=II") && blocks[1].contains("G=Q"));
    assert!(blocks[2].contains("iota=I ") && blocks[2].contains("G=Q"));
    let tree = std::env::temp_dir().join("lexchain-e.rep");
    std::fs::write(&tree, &out).unwrap();
    let (r, rebuilt, _) = lexchain(&["rebuild", "-f", tree.to_str().unwrap()]);
    assert_eq!(r, Ok(()));
    let spec = std::env::temp_dir().join("lexchain-e-rebuilt.alg");
    std::fs::write(&spec, &rebuilt).unwrap();
    let (_, again, _) = lexchain(&["represent", "-f", spec.to_str().unwrap()]);
    assert_eq!(again, out);
}

#[test]
fn decompose_reports_the_step() {
    let (r, out, _) = lexchain(&["decompose", "-f", &fixture("A.alg")]);
    assert_eq!(r, Ok(()));
    assert_eq!(out, "u: (0, T)\nnot u: (-1, T)\nbranch: NonIdem\n");
    let (_, out, _) = lexchain(&["decompose", "-f", &fixture("B.alg")]);
    assert!(out.ends_with("branch: Idem\n"));
    let (_, out, _) = lexchain(&["decompose", "-f", &fixture("A.alg"), "-e", "(0, T)"]);
    assert_eq!(out, "class: TopC\nphi: (0, T)\n");
}

#[test]
fn embed_lex_prints_the_target() {
    let (r, out, _) = lexchain(&["embed-lex", "-f", &fixture("A.alg"), "--budget", "500"]);
    assert_eq!(r, Ok(()));
    assert!(out.starts_with("target: Z lex Q^TB\nLAW embed-lex PASS samples="), "{out}");
    let (_, out, _) = lexchain(&["embed-lex", "-f", &fixture("E.alg"), "--budget", "200"]);
    assert!(out.starts_with("target: Z lex Q^TB lex Q^TB\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lexchain");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["eval", "-f", &fixture("A.alg"), "-e", "comp (0, T)"]), Some(0));
    assert_eq!(code(&["eval", "-f", &fixture("A.alg"), "-e", "comp"]), Some(1));
    assert_eq!(code(&["decompose", "-f", &fixture("A.alg"), "-e", "(0)"]), Some(1));
    assert_eq!(code(&["check", "-f", &fixture("B.alg"), "--laws", "table4"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    let out = Command::new(bin).args(["eval", "-f", &fixture("B.alg"), "-e", "mul (0,B) (0,B)"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(0, B)\n");
}

#[test]
fn spec_printing_round_trips() {
    for f in ["A.alg", "B.alg", "C.alg", "G.alg", "E.alg", "III.alg", "IV.alg"] {
        let a = load_spec(std::path::Path::new(&fixture(f))).unwrap();
        let printed = a.to_string();
        assert_eq!(plex::parse_algebra(&printed).unwrap().to_string(), printed, "{f}");
        let t = group_representation(&a).unwrap();
        assert_eq!(RepTree::parse(&t.to_string()).unwrap(), t, "{f}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn literal_printing_round_trips(seed in any::<u64>(), which in 0usize..7) {
        let f = ["A.alg", "B.alg", "C.alg", "G.alg", "E.alg", "III.alg", "IV.alg"][which];
        let a = load_spec(std::path::Path::new(&fixture(f))).unwrap();
        let x = a.sample(&mut ChaCha8Rng::seed_from_u64(seed), &Bounds::default());
        let back = parse_elem(&a, &x.to_string()).unwrap();
        prop_assert_eq!(back.to_string(), x.to_string());
        prop_assert_eq!(back, x);
    }
}
