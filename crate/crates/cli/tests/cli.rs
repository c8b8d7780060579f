use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_instability-lab"));
    cmd.env_remove("INSTABILITY_LAB_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

fn single(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let mut lines = json_lines(&out);
    assert_eq!(lines.len(), 1, "{:?}", String::from_utf8_lossy(&out.stdout));
    (out.status.code().unwrap(), lines.remove(0))
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_inseparable_form() {
    let (code, v) = single(&[
        "binary-form",
        "analyze",
        "--p",
        "5",
        "--coeffs",
        "1,0,0,0,0,-s",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert!(v["version"]
        .as_str()
        .unwrap()
        .starts_with("instability-lab/"));
    assert_eq!(v["payload_sha256"].as_str().unwrap().len(), 64);
    let r = &v["result"];
    assert_eq!(r["status"], "unstable");
    assert_eq!(r["T"], 5);
    assert_eq!(r["nu"]["m"], 5);
    assert_eq!(r["nu"]["normsq"], 2);
    assert_eq!(r["dominant_root"], "[s^(1/5):1]");
    assert_eq!(r["field_exponent"], 1);
    assert_eq!(r["certificate"]["checked"], true);
    assert_eq!(r["one_ps"]["exponents"], serde_json::json!([1, -1]));
}

#[test]
fn analyze_accepts_json_arrays_and_reports_semistable() {
    let (code, v) = single(&[
        "binary-form",
        "analyze",
        "--p",
        "5",
        "--coeffs",
        r#"[1, 0, 0, 0, "1"]"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["status"], "semistable");
    assert_eq!(v["result"]["dominant_root"], Value::Null);
    assert_eq!(v["result"]["T"], 1);
}

#[test]
fn zero_form_is_a_validation_error() {
    let (code, v) = single(&["binary-form", "analyze", "--p", "5", "--coeffs", "0,0,0"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "validation");
}

#[test]
fn parse_errors_carry_positions() {
    let (code, v) = single(&["binary-form", "analyze", "--p", "5", "--coeffs", "1,s+*2"]);
    assert_eq!(code, 2);
    let msg = v["error"]["message"].as_str().unwrap();
    assert!(
        msg.contains("coefficient 1") && msg.contains("position"),
        "{msg}"
    );
}

#[test]
fn kempf_example() {
    let (code, v) = single(&["kempf", "--n", "3", "--weights", "[[3,-1,-2],[-1,3,-2]]"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["lambda"], serde_json::json!([1, 1, -2]));
    assert_eq!(r["m"], 6);
    assert_eq!(r["normsq"], 6);
    assert_eq!(r["q"], serde_json::json!(["1", "1", "-2"]));
    assert_eq!(r["certificate"]["checked"], true);
    assert_eq!(r["parabolic"]["blocks"], serde_json::json!([2, 1]));
}

#[test]
fn kempf_semistable_state() {
    let (code, v) = single(&["kempf", "--n", "2", "--weights", "[[1,-1],[-1,1]]"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["status"], "semistable");
    assert_eq!(v["result"]["lambda"], Value::Null);
}

#[test]
fn kempf_bad_json_reports_column() {
    let (code, v) = single(&["kempf", "--n", "2", "--weights", "[[1,-1],[2,"]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("column"));
}

#[test]
fn ep_worked_example() {
    let (code, v) = single(&[
        "ep",
        "tensor",
        "--n",
        "2",
        "--m",
        "2",
        "--v",
        "[[ [1,1],1 ],[ [1,2],1 ]]",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["polynomials"],
        serde_json::json!([
            "G11^2 + G11*G21",
            "G11*G12 + G11*G22",
            "G11*G12 + G12*G21",
            "G12^2 + G12*G22"
        ])
    );
}

#[test]
fn ep_rejects_out_of_range_words() {
    let (code, _) = single(&["ep", "tensor", "--n", "2", "--m", "2", "--v", "[[[1,3],1]]"]);
    assert_eq!(code, 2);
}

#[test]
fn bounds_table() {
    let cases: [(&[&str], u64, u64); 4] = [
        (
            &["--rep", "tensor", "--n", "2", "--m", "2", "--p", "5"],
            8,
            2,
        ),
        (
            &["--rep", "wedge", "--n", "2", "--m", "2", "--p", "5"],
            24,
            2,
        ),
        (&["--rep", "jh", "--n", "2", "--d", "2", "--p", "5"], 24, 2),
        (&["--rep", "symmetric", "--N", "7", "--p", "2"], 7, 2),
    ];
    for (args, n_raw, t) in cases {
        let mut full = vec!["bounds"];
        full.extend_from_slice(args);
        let (code, v) = single(&full);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["N_raw"], n_raw, "{args:?}");
        assert_eq!(v["result"]["t"], t, "{args:?}");
    }
}

#[test]
fn non_prime_is_rejected() {
    let (code, v) = single(&[
        "bounds", "--rep", "tensor", "--n", "2", "--m", "2", "--p", "6",
    ]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("not a prime"));
}

#[test]
fn bundle_operations() {
    let (code, v) = single(&["bundle", "--degrees", "3,1,1,0", "--op", "hn"]);
    assert_eq!(code, 0);
    let blocks = v["result"]["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 3);
    assert_eq!(blocks[1]["multiplicity"], 2);
    assert_eq!(
        v["result"]["slope"],
        serde_json::json!({ "num": 5, "den": 4 })
    );

    let (code, v) = single(&[
        "bundle",
        "--degrees",
        "3,1,1,0",
        "--op",
        "frob",
        "--p",
        "3",
        "--t",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["pullback"]["instability_degree"], 27);

    let (code, v) = single(&[
        "bundle",
        "--degrees",
        "-1,2",
        "--op",
        "tensor",
        "--with",
        "1,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["induced"]["degrees"],
        serde_json::json!([3, 3, 0, 0])
    );

    let (code, _) = single(&["bundle", "--degrees", "1,2", "--op", "frob"]);
    assert_eq!(code, 2);
}

#[test]
fn huge_integers_stay_exact() {
    let (code, v) = single(&[
        "bundle",
        "--degrees",
        "1,0",
        "--op",
        "frob",
        "--p",
        "7",
        "--t",
        "40",
    ]);
    assert_eq!(code, 0);
    let line = v["result"]["pullback"]["degrees"][0].to_string();
    assert_eq!(line, "6366805760909027985741435139224001");
}

#[test]
fn batch_preserves_order_and_isolates_failures() {
    let file = temp_file(concat!(
        r#"{"subcommand":"bounds","payload":{"rep":"tensor","n":2,"m":2,"p":5}}"#,
        "\n",
        "not json\n",
        r#"{"subcommand":"kempf","payload":{"n":2,"weights":[[2,-2]]}}"#,
        "\n",
        "\n",
        r#"{"subcommand":"nope","payload":{}}"#,
        "\n",
        r#"{"subcommand":"bundle","payload":{"degrees":[2,0],"op":"instability"}}"#,
        "\n",
    ));
    let out = run(&["batch", "--file", file.path().to_str().unwrap()]);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 6);
    let status: Vec<&str> = lines
        .iter()
        .map(|l| l["status"].as_str().unwrap())
        .collect();
    assert_eq!(status, ["ok", "error", "ok", "error", "error", "ok"]);
    assert_eq!(lines[0]["result"]["N_raw"], 8);
    assert_eq!(lines[2]["result"]["lambda"], serde_json::json!([1, -1]));
    assert_eq!(lines[5]["result"]["instability_degree"], 2);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn batch_and_single_shot_hash_alike() {
    let (_, single_shot) = single(&[
        "bounds", "--rep", "wedge", "--n", "2", "--m", "2", "--p", "5",
    ]);
    let file = temp_file(r#"{"subcommand":"bounds","payload":{"p":5,"m":2,"n":2,"rep":"wedge"}}"#);
    let out = run(&["batch", "--file", file.path().to_str().unwrap()]);
    let batch = &json_lines(&out)[0];
    assert_eq!(batch["payload_sha256"], single_shot["payload_sha256"]);
    assert_eq!(batch["result"], single_shot["result"]);
}

#[test]
fn corpus_file_one_line_per_form() {
    let file = temp_file(concat!(
        "[1,0,0,0,0,\"-s\"]\n",
        "{\"p\":3,\"coeffs\":[1,0,0]}\n",
        "[0,0]\n",
    ));
    let out = run(&[
        "binary-form",
        "analyze",
        "--p",
        "5",
        "--file",
        file.path().to_str().unwrap(),
    ]);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["result"]["field_exponent"], 1);
    assert_eq!(lines[1]["result"]["T"], 2);
    assert_eq!(lines[2]["status"], "error");
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let lines: String = (1..=12)
        .map(|k| format!("{{\"subcommand\":\"kempf\",\"payload\":{{\"n\":3,\"weights\":[[{k},-1,{}],[0,2,-2]]}}}}\n", 1 - k))
        .collect();
    let file = temp_file(&lines);
    let path = file.path().to_str().unwrap();
    let first = run(&["batch", "--file", path]);
    let again = run(&["batch", "--file", path]);
    let one_thread = bin()
        .env("INSTABILITY_LAB_THREADS", "1")
        .args(["batch", "--file", path])
        .output()
        .unwrap();
    assert_eq!(first.stdout, again.stdout);
    assert_eq!(first.stdout, one_thread.stdout);
    assert_eq!(json_lines(&first).len(), 12);
}

#[test]
fn bad_thread_count_is_a_validation_error() {
    let out = bin()
        .env("INSTABILITY_LAB_THREADS", "zero")
        .args([
            "bounds", "--rep", "tensor", "--n", "2", "--m", "2", "--p", "5",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format() {
    let out = run(&[
        "--format", "text", "bounds", "--rep", "tensor", "--n", "2", "--m", "2", "--p", "5",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("bounds ok"));
    assert!(text.contains("N_raw: 8\n") && text.contains("t: 2\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["bounds", "--rep", "cubic", "--p", "5"]).status.code(),
        Some(2)
    );
}
