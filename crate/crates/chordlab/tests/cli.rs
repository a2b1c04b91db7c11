use std::fs;
use std::process::{Command, Output};

fn chordlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordlab"))
        .args(args)
        .env_remove("CHORDLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = chordlab(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn poly_prints_m3() {
    assert_eq!(
        stdout(&["poly", "--name", "Mn", "--n", "3"]),
        "s^3*t^3 + 6*s*t^2*x*y + 4*t*x^2*y + 4*t*x*y^2\n"
    );
}

#[test]
fn poly_prints_other_families() {
    assert_eq!(stdout(&["poly", "--name", "NCA", "--n", "2"]), "x + y + z\n");
    assert_eq!(stdout(&["poly", "--name", "dBn", "--n", "2"]), "x^2 + 4*x\n");
    assert_eq!(stdout(&["poly", "--name", "Qn", "--n", "1"]), "x*y*z\n");
    assert_eq!(stdout(&["poly", "--name", "Anxy", "--n", "2"]), "x + y\n");
}

#[test]
fn poly_emits_gamma_table_json() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["poly", "--name", "gamma", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(v["family"], "gamma");
    assert_eq!(v["n"], 3);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(
        (entries[0]["i"].as_u64(), entries[0]["c"].as_str()),
        (Some(0), Some("1"))
    );
    assert_eq!(
        (entries[1]["i"].as_u64(), entries[1]["c"].as_str()),
        (Some(1), Some("2"))
    );
}

#[test]
fn grammar_iterates_from_a_rule_file() {
    let dir = tempfile::tempdir().unwrap();
    let rules = dir.path().join("dumont.g");
    fs::write(&rules, "# descent grammar\na -> a*b\n\nb -> a*b\n").unwrap();
    let out = stdout(&[
        "grammar",
        "--rules",
        rules.to_str().unwrap(),
        "--seed",
        "a",
        "--iterations",
        "2",
    ]);
    assert_eq!(out, "a^2*b + a*b^2\n");
}

#[test]
fn grammar_parse_errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let rules = dir.path().join("bad.g");
    fs::write(&rules, "a -> a*b\nb -> b +\n").unwrap();
    let out = chordlab(&[
        "grammar",
        "--rules",
        rules.to_str().unwrap(),
        "--seed",
        "a",
        "--iterations",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.g") && err.contains("2:9"), "{err}");
}

#[test]
fn csv_headers_follow_the_schemas() {
    let cases = [
        (
            "matchings",
            "n,rank,arcs,fixb,elblock,olblock,esblock,osblock,cr,ne,al,lne,lcr,nal,lrp,rrp,trace",
        ),
        ("mwords", "n,rank,word,lne,lcr,nal,rrp,lrp,inv,coinv,rank_stat"),
        ("perms", "n,rank,oneline,exc,drop,fix,cyc,asc,des,inv,cda,dd"),
        ("derangements", "n,rank,oneline,exc,drop,fix,cyc,asc,des,inv,cda,dd"),
        ("signed", "n,rank,oneline,exc,fix,cyc,wexc,single"),
        ("stirling", "n,rank,word,asc,plat,des"),
        ("trees012", "n,rank,tree,leaves,deg1,deg2,deg3"),
        ("trees0123", "n,rank,tree,leaves,deg1,deg2,deg3"),
    ];
    for (family, header) in cases {
        let out = stdout(&["enumerate", "--family", family, "--n", "2"]);
        assert_eq!(out.lines().next(), Some(header), "{family}");
    }
}

#[test]
fn matching_rows_in_standard_form() {
    let out = stdout(&["enumerate", "--family", "matchings", "--n", "2"]);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let arcs: Vec<&str> = rows.iter().map(|r| &r[2]).collect();
    assert_eq!(arcs, ["(1,2)(3,4)", "(1,3)(2,4)", "(2,3)(1,4)"]);
    // (1,2)(3,4): two fixed blocks, one alignment, trace indices 1 and 3
    assert_eq!((&rows[0][3], &rows[0][10], &rows[0][16]), ("2", "1", "2"));
}

#[test]
fn output_is_independent_of_jobs() {
    let one = stdout(&["enumerate", "--family", "matchings", "--n", "5", "--jobs", "1"]);
    let four = stdout(&["enumerate", "--family", "matchings", "--n", "5", "--jobs", "4"]);
    assert_eq!(one, four);
    let args = [
        "verify",
        "--checks",
        "M-MAIN,Q-SYM,A-EGF",
        "--max-n",
        "4",
        "--egf-order",
        "5",
        "--no-timings",
    ];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let three = stdout(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(one, three);
}

#[test]
fn verify_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let table = stdout(&[
        "verify",
        "--checks",
        "NCA-RECU",
        "--max-n",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(table.contains("NCA-RECU") && table.contains("PASS"), "{table}");
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let r = &v["results"][0];
    assert_eq!(r["id"], "NCA-RECU");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["max_n"], 4);
    assert_eq!(r["per_n"].as_array().unwrap().len(), 4);
    assert!(r["witness"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(
        chordlab(&["verify", "--checks", "NO-SUCH-CHECK"]).status.code(),
        Some(2)
    );
    assert_eq!(
        chordlab(&["verify", "--checks", "M-MAIN", "--max-n", "11"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        chordlab(&["enumerate", "--family", "signed", "--n", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(chordlab(&["poly", "--name", "Zn", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        chordlab(&[
            "grammar",
            "--rules",
            "/nonexistent/rules.g",
            "--seed",
            "a",
            "--iterations",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        chordlab(&["verify", "--checks", "GOLDEN", "--no-timings"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn jobs_default_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_chordlab"))
        .args(["verify", "--checks", "Q-SYM", "--max-n", "3", "--no-timings"])
        .env("CHORDLAB_JOBS", "0x")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
