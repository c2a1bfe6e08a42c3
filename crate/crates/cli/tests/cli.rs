use std::path::Path;
use std::process::{Command, Output};

fn hit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hit"))
        .args(args)
        .env_remove("HC_THREADS")
        .output()
        .expect("spawn hit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn census_writes_report_with_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = hit(&[
        "census",
        "reducible",
        "--field",
        "Q",
        "--poly",
        "Y^2 - T",
        "--box",
        "100",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&out);
    assert_eq!(v["report"]["count"], 11);
    assert_eq!(v["config"]["poly"], "Y^2 - T");
    assert_eq!(v["versions"]["schema"], "census-v1");
}

#[test]
fn bound_hit01_example() {
    let o = hit(&[
        "bound",
        "--theorem",
        "hit01",
        "--dY",
        "2",
        "--dT",
        "1",
        "--H",
        "1",
        "--B",
        "10000",
        "--field",
        "Q",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let log2 = v["kernel"]["log2"].as_f64().unwrap();
    assert!((log2 - (76.0 + 10000f64.log2() / 2.0)).abs() < 1e-9);
    assert!(stdout(&hit(&[
        "bound",
        "--theorem",
        "hit01",
        "--dY",
        "2",
        "--dT",
        "1",
        "--H",
        "1",
        "--B",
        "10000"
    ]))
    .contains("82.644"));
}

#[test]
fn factor_over_fqu() {
    let o = hit(&["factor", "--field", "FqU:q=3", "--poly", "Y^2 - u^2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(Y - u)(Y + u)");
}

#[test]
fn factor_reports_unit_and_multiplicity() {
    assert_eq!(
        stdout(&hit(&["factor", "--poly", "2*Y^2 - 4*T*Y + 2*T^2"])).trim(),
        "2*(Y - T)^2"
    );
    assert_eq!(
        stdout(&hit(&["factor", "--poly", "Y^2 - T"])).trim(),
        "(Y^2 - T)"
    );
}

#[test]
fn exit_codes() {
    let o = hit(&["census", "reducible", "--poly", "Y^2 - T^2", "--box", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("reducible") && stderr(&o).contains("Y"));
    assert_eq!(
        hit(&[
            "census",
            "reducible",
            "--poly",
            "Y^2 - T",
            "--box",
            "10",
            "--bogus"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        hit(&["parse", "--field", "FqU:q=6", "--poly", "Y"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hit(&["parse", "--poly", "Y^^2"]).status.code(), Some(2));
    assert_eq!(
        hit(&[
            "construct",
            "resolvent",
            "--poly",
            "Y^2 - T",
            "--m",
            "2",
            "--j",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        hit(&[
            "bound",
            "--theorem",
            "hit3",
            "--dY",
            "2",
            "--dT",
            "1",
            "--H",
            "1",
            "--B",
            "100"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        hit(&[
            "bound",
            "--theorem",
            "nope",
            "--dY",
            "2",
            "--dT",
            "1",
            "--H",
            "1",
            "--B",
            "100"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn shards_merge_to_the_full_report() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let base = ["census", "galois", "--poly", "Y^3 - T", "--box", "200"];
    let full = p("full.json");
    assert!(hit(&[&base[..], &["--out", &full]].concat())
        .status
        .success());
    let mut shards = vec![];
    for i in 0..3 {
        let s = p(&format!("s{i}.json"));
        let o = hit(&[
            &base[..],
            &["--shards", "3", "--shard", &i.to_string(), "--out", &s],
        ]
        .concat());
        assert!(o.status.success(), "{}", stderr(&o));
        shards.push(s);
    }
    shards.reverse();
    let merged = p("merged.json");
    let mut args = vec!["merge"];
    args.extend(shards.iter().map(|s| s.as_str()));
    args.extend(["--out", &merged]);
    let o = hit(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        std::fs::read(&full).unwrap(),
        std::fs::read(&merged).unwrap()
    );
    // two of three shards do not make a box
    let o = hit(&["merge", &shards[0], &shards[1]]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn replay_reproduces_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let rs = r.to_str().unwrap();
    let o = hit(&[
        "census",
        "introots",
        "--field",
        "FqU:q=3",
        "--poly",
        "Y^2 - u*T",
        "--box",
        "3^3",
        "--out",
        rs,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = hit(&["replay", rs]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&r).unwrap();
    let count = json(&r)["report"]["count"].as_u64().unwrap();
    let tampered = text.replacen(
        &format!("\"count\": {count}"),
        &format!("\"count\": {}", count + 1),
        1,
    );
    assert_ne!(tampered, text);
    std::fs::write(&r, tampered).unwrap();
    let o = hit(&["replay", rs]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("mismatch"));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = [
        "census",
        "reducible",
        "--poly",
        "Y^3 - T*Y - T",
        "--box",
        "300",
    ];
    let one = Command::new(env!("CARGO_BIN_EXE_hit"))
        .args(args)
        .env("HC_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_hit"))
        .args(args)
        .env("HC_THREADS", "4")
        .output()
        .unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn csv_witness_table() {
    let o = hit(&[
        "census",
        "reducible",
        "--poly",
        "Y^2 - T",
        "--box",
        "10",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "index,t,class,degenerate,roots");
    assert_eq!(lines.len(), 1 + 4);
    assert!(lines.contains(&"7,4,1+1,false,"));
}

#[test]
fn verify_and_construct() {
    let o = hit(&["verify", "galois", "--poly", "Y^2 - T", "--box", "100"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("verify: count 11 <= kernel hilbert35"));
    let o = hit(&["construct", "monicize", "--poly", "T*Y^2 + Y + 1"]);
    assert_eq!(stdout(&o).trim(), "Y^2 + Y + T");
    // pair sums of the roots of Y^4 - T: 0, 0 and (+-1 +- i) T^(1/4)
    let o = hit(&[
        "construct",
        "resolvent",
        "--poly",
        "Y^4 - T",
        "--m",
        "2",
        "--j",
        "1",
    ]);
    assert_eq!(stdout(&o).trim(), "Y^6 + 4*T*Y^2");
    let o = hit(&["construct", "shift", "--poly", "Y^2 - T", "--e", "1"]);
    assert_eq!(stdout(&o).trim(), "Y^2 + 2*T*Y + T^2 - T");
    let o = hit(&["galois", "--poly", "Y^3 - T", "--t", "8"]);
    assert!(stdout(&o).contains("G = S3") && stdout(&o).contains("exceptional"));
}

#[test]
fn height_and_parse() {
    let o = hit(&["height", "--poly", "Y^2/2 - 3*T"]);
    assert!(stdout(&o).contains("H(F)     = 6"));
    let o = hit(&["parse", "--field", "FqU:q=5", "--poly", "Y*u^2 + T*Y*3 - 1"]);
    let canon = stdout(&o);
    let again = hit(&["parse", "--field", "FqU:q=5", "--poly", canon.trim()]);
    assert_eq!(stdout(&again), canon);
}
