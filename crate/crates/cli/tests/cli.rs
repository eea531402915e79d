use cli::commands::{CatalogEntry, HktSummary, KtSummary, QktSummary, Table2Summary, VerifySummary};
use cli::{run, Envelope};
use proptest::prelude::*;
use qkt::Table3Row;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn call(args: &[&str]) -> (u8, String, String) {
    let argv: Vec<String> = std::iter::once("cosets").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Parse the JSON output, check it re-emits byte for byte, return the data.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> (u8, Envelope<T>) {
    let (code, out, err) = call(args);
    assert!(err.is_empty(), "{err}");
    let env: Envelope<T> = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&env).unwrap() + "\n", out);
    (code, env)
}

#[test]
fn table2_e8_has_the_e7_row() {
    let (code, env) = round_trip::<Table2Summary>(&["table2", "--algebra", "E8", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(env.command, "table2");
    assert!(env.passed && env.data.unmatched.is_empty());
    assert!(env.data.rows.iter().any(|r| r.k == "E7" && r.m == 1 && r.d == 116));
}

#[test]
fn e8_colouring_reports_d4_a1() {
    let (code, env) = round_trip::<KtSummary>(&["decompose-kt", "--algebra", "E8", "--colour", "2,3,4,5,8", "--json"]);
    assert_eq!(code, 0);
    assert_eq!((env.data.k.as_str(), env.data.dim_m, env.data.h1.len()), ("D4+A1", 217, 3));
    assert!(env.data.note.is_some() && env.data.checks.is_empty());
    // the six-node list colours one node too many
    let (_, env) = round_trip::<KtSummary>(&["decompose-kt", "--algebra", "E8", "--colour", "2,3,4,5,7,8", "--json"]);
    assert_eq!((env.data.k.as_str(), env.data.dim_m), ("D4+A2", 212));
}

#[test]
fn even_kt_cosets_are_verified() {
    let (code, env) = round_trip::<KtSummary>(&["decompose-kt", "--algebra", "A3", "--colour", "2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(env.data.k, "A1");
    assert!(env.data.passed && env.data.checks.iter().any(|c| c.name == "nijenhuis"));
    let (code, env) = round_trip::<KtSummary>(&[
        "decompose-kt",
        "--algebra",
        "A2+u1",
        "--k-u1",
        "0,0,1",
        "--seed-lambda",
        "2,-1",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!((env.data.k.as_str(), env.data.dim_m), ("u1", 8));
    assert_eq!(env.data.k_u1, vec![vec!["0", "0", "1"]]);
}

#[test]
fn a1_hkt_needs_one_u1() {
    let (code, env) = round_trip::<HktSummary>(&["decompose-hkt", "--algebra", "A1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!((env.data.levels.len(), env.data.extra_u1, env.data.dim_m), (1, 1, 4));
}

#[test]
fn a4_levels_in_text() {
    let (code, out, _) = call(&["decompose-hkt", "--algebra", "A4"]);
    assert_eq!(code, 0);
    assert!(out.contains("(3,1,-1,-3)") && out.contains("1/15"));
    assert!(out.contains("(0,1,-1,0)") && out.contains("1/3"));
}

#[test]
fn stop_level_keeps_the_rest_in_k() {
    let (code, env) = round_trip::<HktSummary>(&["decompose-hkt", "--algebra", "A4", "--stop-level", "1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(env.data.levels.len(), 1);
    assert_eq!(env.data.k, "A2");
}

#[test]
fn table3_rows() {
    let (code, env) = round_trip::<Vec<Table3Row>>(&["table3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(env.data.len(), 6);
    for r in &env.data {
        assert!(r.verified && !r.checks.is_empty());
        assert!(r.quotient_dim.is_none_or(|d| d == 4));
    }
}

#[test]
fn qkt_of_a4_and_of_a_product() {
    let (code, env) = round_trip::<QktSummary>(&["qkt", "--algebra", "A4", "--json"]);
    assert_eq!(code, 0);
    let d = env.data;
    assert_eq!((d.qkt.as_deref(), d.dim, d.rotated), (Some("SU(5)/U(2)"), Some(20), true));
    assert!(d.dh.unwrap().four_zero);
    let (code, env) = round_trip::<QktSummary>(&["qkt", "--algebra", "A1+u1^5", "--json"]);
    assert_eq!(code, 0);
    assert!(env.data.qkt.is_none() && env.data.reason.is_some());
}

#[test]
fn verify_both_structures() {
    let (code, env) = round_trip::<VerifySummary>(&["verify", "--algebra", "A2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(env.data.quotient.as_deref(), Some("CP²"));
    assert!(env.data.checks.iter().any(|c| c.name.starts_with("jacobi[")));
    let (code, env) = round_trip::<VerifySummary>(&["verify", "--algebra", "G2", "--colour", "1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(env.data.structure, "kt");
}

#[test]
fn catalog_numbering() {
    let (code, env) = round_trip::<Vec<CatalogEntry>>(&["catalog", "--max-rank", "3", "--json"]);
    assert_eq!(code, 0);
    let names: Vec<String> = env.data.iter().map(|e| e.algebra.to_string()).collect();
    assert_eq!(names, ["A1", "A2", "A3", "B3", "C2", "C3", "G2"]);
    let (_, out, _) = call(&["catalog", "--algebra", "E8"]);
    assert!(out.contains("(2,3,4,6,5,4,3,2)") && out.contains("2-4"));
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        &["frobnicate"][..],
        &["decompose-kt"],
        &["decompose-kt", "--algebra", "Z3"],
        &["decompose-kt", "--algebra", "A3", "--colour", "4"],
        &["decompose-kt", "--algebra", "A2", "--seed-lambda", "1"],
        &["decompose-hkt", "--algebra", "A2", "--k-u1", "1,0"],
        &["table2", "--colour", "1"],
        &["table3", "--algebra", "A2"],
        &["catalog", "--max-rank", "x"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let args = ["qkt", "--algebra", "C2+u1", "--json"];
    assert_eq!(call(&args), call(&args));
    let args = ["decompose-kt", "--algebra", "B3", "--colour", "1"];
    assert_eq!(call(&args), call(&args));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kt_json_round_trips(ty in prop::sample::select(vec!["A2", "C2", "G2", "A3", "B3", "C3"]), mask in 0u32..8) {
        let rank = ty[1..].parse::<u32>().unwrap();
        let nodes: Vec<String> = (0..rank).filter(|i| mask & (1 << i) != 0).map(|i| (i + 1).to_string()).collect();
        let colour = nodes.join(",");
        for extra in ["0", "1"] {
            let (code, env) =
                round_trip::<KtSummary>(&["decompose-kt", "--algebra", ty, "--colour", &colour, "--extra-u1", extra, "--json"]);
            prop_assert_eq!(code, 0);
            prop_assert!(env.passed);
            prop_assert_eq!(env.data.checks.is_empty(), env.data.dim_m % 2 == 1);
        }
    }
}
