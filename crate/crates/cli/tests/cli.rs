use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn domdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("domdim-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn five_vertex_example_summary() {
    let o = domdim(&["paper-example"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("dominant dimension: 1"));
    assert!(text.contains("nakayama: false"));
    assert!(text.contains("qf2 (right): false"));
    assert!(text.contains("minimal faithful projective-injective (right): {1, 3}"));
    assert!(text.contains("base algebra: K x K"));
    assert!(text.contains("double centraliser: false"));

    let json: serde_json::Value = serde_json::from_slice(&domdim(&["paper-example", "--json"]).stdout).unwrap();
    assert_eq!(json["domdim"], "1");
    assert_eq!(json["base_algebra_dim"], 2);
}

#[test]
fn commands_on_a_file() {
    let dir = scratch("file");
    let path = dir.join("a.txt");
    fs::write(&path, stdout(&domdim(&["paper-example", "--show-file"]))).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&domdim(&["domdim", p])).trim(), "1");
    assert_eq!(stdout(&domdim(&["domdim", p, "--field", "gf2"])).trim(), "1");
    assert_eq!(stdout(&domdim(&["qf2", p, "--side", "right"])).trim(), "false");
    assert_eq!(stdout(&domdim(&["nakayama", p])).trim(), "nakayama: false");
    assert!(stdout(&domdim(&["dc", p])).contains("holds: false"));
    assert!(stdout(&domdim(&["base", p])).contains("f supported on vertices {4, 5}"));
    let core = stdout(&domdim(&["coresolve", p, "--terms", "2"]));
    assert!(core.contains("I_0: dims (3,6,3,3,3), projective"));
    assert!(core.contains("I_1: dims (3,3,3,0,0), not projective"));
    fs::write(dir.join("c.txt"), "vertices: 2\narrows: a 1 2; b 2 1\nrelations: b a\n").unwrap();
    let c = dir.join("c.txt");
    let out = stdout(&domdim(&["nakayama", c.to_str().unwrap()]));
    assert!(out.contains("kupisch: cyclic:3,2"), "{out}");
    assert_eq!(stdout(&domdim(&["domdim", c.to_str().unwrap()])).trim(), "2");
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn endomorphism_command() {
    let o = domdim(&["endo", "--kupisch", "cyclic:2", "--summands", "P1 + I1/s"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("kupisch: cyclic:3,2"));
    assert!(text.contains("dominant dimension: 2"));
    let bad = domdim(&["endo", "--kupisch", "cyclic:2", "--summands", "P1 P1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(domdim(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(domdim(&["domdim", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(domdim(&["--help"]).status.code(), Some(0));

    let dir = scratch("bad");
    let path = dir.join("bad.txt");
    fs::write(&path, "vertices: 2\narrows: a 1 2\nrelations: a z\n").unwrap();
    let o = domdim(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    fs::remove_dir_all(&dir).unwrap();

    let o = domdim(&["verify", "main-theorem"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = scratch("verify");
    let run = |name: &str| {
        let path = dir.join(name);
        let o = domdim(&[
            "verify",
            "cross-checks",
            "--max-vertices",
            "2",
            "--max-arrows",
            "2",
            "--max-rel-len",
            "3",
            "--seedless",
            "--csv",
            "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        (
            fs::read_to_string(&path).unwrap(),
            fs::read_to_string(path.with_extension("csv")).unwrap(),
        )
    };
    let (a, csv) = run("a.json");
    let (b, _) = run("b.json");
    assert_eq!(a, b);
    assert!(!a.contains("wall_time_ms"));
    assert!(csv.contains("cross-checks,algebras,65"));
    assert!(!dir.join("a.json.partial").exists());

    let y = domdim(&["verify", "yamagata", "--max-n", "2", "--max-c", "3"]);
    assert_eq!(y.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&y.stdout).unwrap();
    assert_eq!(json["passed"], true);
    assert!(json["wall_time_ms"].is_u64());
    fs::remove_dir_all(&dir).unwrap();
}
