use std::process::{Command, Output};

fn steinberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steinberg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn multiplicities_json() {
    let o = steinberg(&["verify", "multiplicities", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["tool"], "steinberg");
    let entries = doc["entries"].as_array().unwrap();
    let mut values: Vec<&str> = entries.iter().map(|e| e["actual"].as_str().unwrap()).collect();
    values.sort();
    assert_eq!(values, ["16", "3", "3", "8"]);
    assert!(entries.iter().all(|e| e["status"] == "pass"));
    assert_eq!(doc["summary"]["pass"], 4);
}

#[test]
fn chi_prints_the_grothendieck_class() {
    let o = steinberg(&["compute", "chi", "--rep", "wedge^2(b)*b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2[V(1,1)] + [V(0,0)]");
    let o = steinberg(&["compute", "chi", "--rep", "b ⊗ b"]);
    assert_eq!(stdout(&o).trim(), "-[V(0,0)]");
}

#[test]
fn compute_commands() {
    let o = steinberg(&["compute", "psupp", "--rep", "wedge^2(b)*b", "--i", "1", "--l", "5"]);
    assert_eq!(stdout(&o).trim(), "{(0,0)^10}");
    let o = steinberg(&["compute", "hilbert", "--case", "n2", "--degree-bound", "3"]);
    assert_eq!(stdout(&o).trim(), "[1, 6, 15, 28]");
    let dir = std::env::temp_dir().join(format!("steinberg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.txt");
    std::fs::write(&path, "2 4 4\n-6 6 12\n10 -4 -16\n").unwrap();
    let o = steinberg(&["compute", "snf", "--file", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["result"], "[2, 6, 12]");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn failing_checks_exit_one() {
    let o = steinberg(&["verify", "bwb-tables", "--l", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["summary"]["fail"], 2);
}

#[test]
fn usage_errors_exit_two() {
    let cases: [(&[&str], &str); 7] = [
        (
            &["verify", "ideal", "--case", "n3-z", "--char", "0", "--degree-bound", "3", "--degree-bound"],
            "--degree-bound",
        ),
        (&["verify", "ideal", "--case", "n3-z", "--degree-bound", "3", "--degree-bound", "4"], "--degree-bound"),
        (&["verify", "ideal", "--case", "n9"], "n9"),
        (&["verify", "ideal", "--case", "n2", "--char", "3"], "--char 3"),
        (&["verify", "span", "--char", "6"], "'6'"),
        (&["compute", "chi", "--rep", "wedge^2(b"], "wedge^2(b"),
        (&["verify", "classgroup", "--frobnicate"], "--frobnicate"),
    ];
    for (args, token) in cases {
        let o = steinberg(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(token), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let o = steinberg(&["verify", "ideal", "--case", "n2", "--symbolic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--symbolic"));
}

#[test]
fn markdown_lists_every_entry() {
    let o = steinberg(&["verify", "classgroup"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# steinberg verify classgroup"));
    assert!(text.contains("| classgroup.kernel | pass |"));
    assert!(text.contains("| classgroup.self-dual.rho | pass |"));
}

#[test]
fn seed_is_reported() {
    let run = |seed: &str| {
        let o = steinberg(&[
            "verify",
            "ideal",
            "--case",
            "n3-x",
            "--char",
            "5",
            "--seed",
            seed,
            "--trials",
            "20",
            "--format",
            "json",
            "--deterministic",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap()
    };
    let doc = run("42");
    assert_eq!(doc["seed"], 42);
    assert!(doc["entries"].as_array().unwrap().iter().all(|e| e["elapsed_ms"] == 0));
}

#[test]
fn data_dir_override() {
    let dir = std::env::temp_dir().join(format!("steinberg-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("multiplicities.txt"), "L1 (1,0) 4\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_steinberg"))
        .args(["verify", "multiplicities", "--format", "json"])
        .env("STEINBERG_DATA_DIR", &dir)
        .output()
        .unwrap();
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["entries"][0]["expected"], "4");
    assert_eq!(doc["entries"][0]["actual"], "3");
}
