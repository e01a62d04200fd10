use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn binomap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binomap"))
        .args(args)
        .env_remove("BINOMAP_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        Fixture {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p: PathBuf = self.dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }

    fn minors(&self, n: usize) -> String {
        let sys = binomap::adjacent_minors(2, n).unwrap();
        self.file(&format!("m{n}.txt"), &binomap::serialize_system(&sys))
    }
}

#[test]
fn solve_prints_two_maps_for_2x3() {
    let fx = Fixture::new();
    let out = binomap(&["solve", &fx.minors(3)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("2 component(s)"), "{text}");
    assert_eq!(text.matches("(dim 4)").count(), 2);
}

#[test]
fn solve_json_follows_schema() {
    let fx = Fixture::new();
    let out = binomap(&["solve", "--json", "--pure-dim", &fx.minors(4)]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 3);
    assert!(v["stats"].is_object());
    let maps = v["maps"].as_array().unwrap();
    assert_eq!(maps.len(), 3);
    for m in maps {
        let d = m["dim"].as_u64().unwrap() as usize;
        assert_eq!(d, 5);
        assert!(m["zero"].is_array() && m["free"].is_array());
        let coeff = m["coeff"].as_object().unwrap();
        let exps = m["exponents"].as_object().unwrap();
        assert_eq!(coeff.len(), 8);
        assert_eq!(exps.len(), 8);
        for (name, c) in coeff {
            assert_eq!(c.as_array().unwrap().len(), 2, "{name}");
            let e = exps[name].as_array().unwrap();
            assert_eq!(e.len(), d);
            assert!(e.iter().all(Value::is_i64));
        }
    }
}

#[test]
fn solve_exit_codes() {
    let fx = Fixture::new();
    assert_eq!(binomap(&["solve", &fx.file("e.txt", "")]).status.code(), Some(1));
    assert_eq!(
        binomap(&["solve", &fx.file("bad.txt", "x*y - ;")]).status.code(),
        Some(1)
    );
    assert_eq!(binomap(&["solve", "/nonexistent/file"]).status.code(), Some(1));
    let out = binomap(&["solve", &fx.file("mono.txt", "x*y;")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("binomial"));
    let cube = fx.file("cube.txt", "x^3 - 2;");
    assert_eq!(
        binomap(&["solve", "--branch-limit", "2", &cube]).status.code(),
        Some(3)
    );
    assert!(binomap(&["solve", &cube]).status.success());
}

#[test]
fn usage_errors_do_not_collide_with_solver_codes() {
    let out = binomap(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(binomap(&["--help"]).status.success());
}

#[test]
fn bench_csv() {
    let out = binomap(&["bench", "--min-n", "3", "--max-n", "6", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,maps,expected,seconds");
    let maps: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(maps, ["2", "3", "5", "8"]);
    for l in &lines[1..] {
        let f: Vec<&str> = l.split(',').collect();
        assert_eq!(f.len(), 4);
        assert_eq!(f[1], f[2]);
        assert!(f[3].parse::<f64>().unwrap() >= 0.0);
    }
}

#[test]
fn bench_single_row_and_bad_range() {
    let out = binomap(&["bench", "--min-n", "3", "--max-n", "3", "--csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);
    assert!(!binomap(&["bench", "--min-n", "2", "--max-n", "3"]).status.success());
    assert!(!binomap(&["bench", "--min-n", "5", "--max-n", "4"]).status.success());
}

#[test]
fn incidence_table() {
    let fx = Fixture::new();
    let out = binomap(&["incidence", &fx.minors(3)]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "        | x11 x12 x13 x21 x22 x23",
            "x11*x22 |   1   0   0   0   1   0",
            "x12*x21 |   0   1   0   1   0   0",
            "x12*x23 |   0   1   0   0   0   1",
            "x13*x22 |   0   0   1   0   1   0",
        ]
    );
}

#[test]
fn enumerate_covers_with_size_bound() {
    let fx = Fixture::new();
    let out = binomap(&["enumerate", "--covers-only", "--max-size", "2", &fx.minors(3)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x12 x22\n");
}

#[test]
fn enumerate_consistent_default() {
    let fx = Fixture::new();
    let out = binomap(&["enumerate", &fx.file("xy.txt", "x - y;")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{}\nx y\n");
    let out = binomap(&["enumerate", "--covers-only", &fx.file("xy2.txt", "x - y;")]);
    assert_eq!(stdout(&out), "x y\n");
}

#[test]
fn enumerate_json() {
    let fx = Fixture::new();
    let out = binomap(&["enumerate", "--pure-dim", "--json", &fx.minors(5)]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["selections"][0], serde_json::json!([]));
}

#[test]
fn thread_count_does_not_change_output() {
    let fx = Fixture::new();
    let path = fx.minors(7);
    let one = binomap(&["--threads", "1", "solve", "--json", &path]);
    let four = binomap(&["solve", "--json", &path, "--threads", "4"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_binomap"))
        .args(["solve", "--json", &path])
        .env("BINOMAP_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
    assert_eq!(binomap(&["--threads", "0", "solve", &path]).status.code(), Some(64));
}
