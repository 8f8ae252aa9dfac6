use std::path::PathBuf;
use std::process::Command;

use logperm::sampling::real_matrix;
use logperm::{alpha_constant, Instance};
use logperm_cli::{instance_digest, strip_wall_time, InstanceFile};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("logperm-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn write_instance(name: &str, instance: &Instance) -> PathBuf {
    scratch(name, &InstanceFile::from_instance(instance).to_json())
}

struct Run {
    code: i32,
    json: Value,
    stdout: String,
    stderr: String,
}

fn logperm(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_logperm"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        json: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stdout,
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn arg(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn exact_values() {
    let j3 = scratch(
        "j3.json",
        r#"{"kind":"matrix","n":3,"entries":[[1,1,1],[1,1,1],[1,1,1]]}"#,
    );
    let r = logperm(&["exact", arg(&j3)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["results"]["value"][0], 6.0);
    assert!((r.json["results"]["log"][0].as_f64().unwrap() - 6f64.ln()).abs() < 1e-15);

    let zero = scratch(
        "zero.json",
        r#"{"kind":"matrix","n":2,"entries":[[[0.5,0.5],[0.5,-0.5]],[[0.5,-0.5],[0.5,0.5]]]}"#,
    );
    let r = logperm(&["exact", arg(&zero)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["results"]["log"], "undefined");

    let t = scratch(
        "t.json",
        r#"{"kind":"tensor","d":3,"n":2,"entries":[[[1,1],[1,1]],[[1,1],[1,1]]]}"#,
    );
    let r = logperm(&["exact", arg(&t)]);
    assert_eq!(r.json["results"]["value"][0], 4.0);
}

#[test]
fn digest_survives_round_trip() {
    let bare = r#"{"kind":"symmetric","two_n":2,"entries":[[1,0.5],[0.5,1]]}"#;
    let pairs = r#"{"entries":[[[1,0],[0.5,0]],[[0.5,0],[1,0]]],"two_n":2,"kind":"symmetric"}"#;
    let a = InstanceFile::parse(bare).unwrap().to_instance().unwrap();
    let b = InstanceFile::parse(pairs).unwrap().to_instance().unwrap();
    assert_eq!(instance_digest(&a), instance_digest(&b));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m: Instance = real_matrix(&mut rng, 4, 0.2, 1.0).into();
    let text = InstanceFile::from_instance(&m).to_json();
    let back = InstanceFile::parse(&text).unwrap().to_instance().unwrap();
    assert_eq!(back, m);
    assert_eq!(instance_digest(&back), instance_digest(&m));

    let path = write_instance("rt.json", &m);
    let r = logperm(&["exact", arg(&path)]);
    assert_eq!(r.json["instance_digest"], instance_digest(&m).as_str());
}

#[test]
fn exit_codes() {
    let bad = scratch("bad.json", r#"{"kind":"matrix","n":2,"entries":[[1,1]]}"#);
    assert_eq!(logperm(&["exact", arg(&bad)]).code, 1);
    assert_eq!(logperm(&["exact", "/nonexistent/file.json"]).code, 1);
    assert_eq!(logperm(&["no-such-command"]).code, 1);

    let asym = scratch(
        "asym.json",
        r#"{"kind":"symmetric","two_n":2,"entries":[[1,2],[3,1]]}"#,
    );
    assert_eq!(logperm(&["exact", arg(&asym)]).code, 1);

    let big: Instance = logperm::ComplexMatrix::ones(15).into();
    let big = write_instance("big.json", &big);
    let r = logperm(&["exact", arg(&big)]);
    assert_eq!(r.code, 3, "{}", r.stderr);

    let outside = scratch(
        "outside.json",
        r#"{"kind":"matrix","n":2,"entries":[[1,1],[1,1.6]]}"#,
    );
    let r = logperm(&[
        "approx",
        arg(&outside),
        "--method",
        "disc",
        "--eta",
        "0.4",
        "--epsilon",
        "1e-3",
    ]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("entry (2, 2)"), "{}", r.stderr);

    let sym = scratch(
        "sym.json",
        r#"{"kind":"symmetric","two_n":2,"entries":[[1,1],[1,1]]}"#,
    );
    assert_eq!(
        logperm(&[
            "check-region",
            arg(&sym),
            "--region",
            "disc-per",
            "--eta",
            "0.5"
        ])
        .code,
        1
    );

    let r = logperm(&["approx", arg(&sym), "--method", "disc", "--epsilon", "0.1"]);
    assert_eq!(r.code, 1);
}

#[test]
fn region_checks() {
    let ones = scratch(
        "ones.json",
        r#"{"kind":"matrix","n":3,"entries":[[1,1,1],[1,1,1],[1,1,1]]}"#,
    );
    for region in [
        "disc-per",
        "strip-per",
        "l1-per",
        "disc-tensor",
        "strip-tensor",
        "l1-tensor",
    ] {
        let r = logperm(&[
            "check-region",
            arg(&ones),
            "--region",
            region,
            "--eta",
            "0.01",
        ]);
        assert_eq!(r.code, 0, "{region}: {}", r.stderr);
        assert_eq!(r.json["results"]["inside"], true);
    }

    let spike = scratch(
        "spike.json",
        r#"{"kind":"matrix","n":2,"entries":[[1,1],[1.6,1]]}"#,
    );
    let r = logperm(&[
        "check-region",
        arg(&spike),
        "--region",
        "disc-per",
        "--eta",
        "0.5",
    ]);
    assert_eq!(r.code, 2);
    assert_eq!(
        r.json["results"]["worst"]["entry"],
        serde_json::json!([1, 0])
    );
    assert_eq!(r.json["results"]["worst_described"], "entry (2, 1)");

    let hole = scratch(
        "hole.json",
        r#"{"kind":"matrix","n":4,"entries":[[1,1,1,1],[1,1,0,1],[1,1,1,1],[1,1,1,1]]}"#,
    );
    let eta = (alpha_constant() / 4.0).to_string();
    let r = logperm(&[
        "check-region",
        arg(&hole),
        "--region",
        "l1-per",
        "--eta",
        &eta,
    ]);
    assert_eq!(r.code, 2);
    assert_eq!(r.json["results"]["worst_value"], 1.0);
    assert!((r.json["results"]["bound"].as_f64().unwrap() - alpha_constant()).abs() < 1e-12);
}

#[test]
fn approximations_verify() {
    let j = scratch(
        "j5.json",
        r#"{"kind":"matrix","n":5,"entries":[[1,1,1,1,1],[1,1,1,1,1],[1,1,1,1,1],[1,1,1,1,1],[1,1,1,1,1]]}"#,
    );
    let r = logperm(&[
        "approx",
        arg(&j),
        "--method",
        "disc",
        "--eta",
        "0.4",
        "--epsilon",
        "1e-3",
        "--verify",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.json["results"]["approx"]["log_value"][0]
            .as_f64()
            .unwrap(),
        120f64.ln()
    );
    assert_eq!(r.json["results"]["verification"]["realized_error"], 0.0);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let a = write_instance("a7.json", &real_matrix(&mut rng, 7, 0.6, 1.0).into());
    let r = logperm(&[
        "approx",
        arg(&a),
        "--method",
        "disc",
        "--eta",
        "0.4",
        "--epsilon",
        "1e-3",
        "--verify",
    ]);
    assert_eq!(r.code, 0);
    assert!(
        r.json["results"]["verification"]["realized_error"]
            .as_f64()
            .unwrap()
            <= 1e-3
    );

    let s = write_instance("s6.json", &real_matrix(&mut rng, 6, 0.5, 1.0).into());
    let r = logperm(&[
        "approx",
        arg(&s),
        "--method",
        "strip",
        "--delta",
        "0.5",
        "--epsilon",
        "0.1",
        "--verify",
    ]);
    assert_eq!(r.code, 0);
    assert!(
        r.json["results"]["verification"]["realized_error"]
            .as_f64()
            .unwrap()
            <= 0.1
    );

    let out = scratch(
        "far.json",
        r#"{"kind":"matrix","n":2,"entries":[[1,1],[1,1.6]]}"#,
    );
    let r = logperm(&[
        "approx",
        arg(&out),
        "--method",
        "disc",
        "--eta",
        "0.4",
        "--epsilon",
        "1e-3",
        "--force",
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("WARNING"));
    assert!(r.json["results"]["approx"]["error_bound"].is_null());
}

#[test]
fn benchmark_is_reproducible() {
    let first = logperm(&["benchmark", "--suite", "small", "--seed", "5"]);
    let second = logperm(&["benchmark", "--suite", "small", "--seed", "5"]);
    assert_eq!(first.code, 0, "{}", first.stderr);
    let a = serde_json::to_string(&strip_wall_time(&first.json)).unwrap();
    let b = serde_json::to_string(&strip_wall_time(&second.json)).unwrap();
    assert_eq!(a, b);
    assert_eq!(first.json["seed"], 5);

    let rows = first.json["results"]["rows"].as_array().unwrap();
    for row in rows {
        assert!(row["realized_error"].as_f64().unwrap() <= row["bound"].as_f64().unwrap());
    }
    // Within each family the degree grows as epsilon shrinks.
    for pair in rows.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        if x["family"] == y["family"] && x["n"] == y["n"] && x["pipeline"] == y["pipeline"] {
            if y["epsilon"].as_f64() < x["epsilon"].as_f64() {
                assert!(y["degree"].as_u64() >= x["degree"].as_u64());
            }
        }
    }

    let text = logperm(&["--format", "text", "benchmark", "--seed", "5"]);
    assert!(text.stdout.starts_with("family"));
}
