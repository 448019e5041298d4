use std::f64::consts::PI;
use std::process::{Command, Output};

use serde_json::Value;

fn cwidth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwidth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Data rows of a CSV with a schema comment and a header.
fn rows(csv: &str) -> Vec<Vec<f64>> {
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("# schema: "));
    lines.next().unwrap();
    lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn construct_regular_triangle() {
    let out = cwidth(&[
        "construct",
        "--shape",
        r#"{"type":"reuleaux-regular","n":3}"#,
    ]);
    assert!(out.status.success());
    let s = &json(&out)["summary"];
    assert!((s["perimeter"].as_f64().unwrap() - PI).abs() < 1e-12);
    assert!((s["inradius"].as_f64().unwrap() - (1.0 - 3f64.sqrt() / 3.0)).abs() < 1e-12);
}

#[test]
fn construct_random_is_constant_width_and_deterministic() {
    let a = cwidth(&["construct", "--shape", "random:7:42"]);
    let b = cwidth(&["construct", "--shape", "random:7:42"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a)["summary"]["width_deviation"].as_f64().unwrap() < 1e-8);
}

#[test]
fn empty_intersection_exits_2() {
    let out = cwidth(&["construct", "--shape", "disk:0.4:0,0;1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty-intersection"));
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(
        cwidth(&["construct", "--shape", "regular:4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cwidth(&["construct", "--shape", "{oops"]).status.code(),
        Some(2)
    );
    assert_eq!(cwidth(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(
        cwidth(&["sweep", "--shape", "triangle", "--t-max", "0.9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn sweep_triangle_area_decreases() {
    let out = cwidth(&[
        "sweep", "--shape", "triangle", "--t-min", "0", "--t-max", "0.42", "--steps", "50",
    ]);
    assert!(out.status.success());
    let data = rows(&stdout(&out));
    assert_eq!(data.len(), 50);
    assert!((data[0][2] - (PI - 3f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!(data
        .windows(2)
        .all(|w| w[1][2] < w[0][2] && w[1][1] < w[0][1]));
    assert!(data.last().unwrap()[2] < 1e-3);
}

#[test]
fn sweep_pentagon_keeps_five_arcs() {
    let out = cwidth(&[
        "sweep",
        "--shape",
        "regular:5",
        "--t-max",
        "0.45",
        "--steps",
        "30",
    ]);
    assert!(rows(&stdout(&out)).iter().all(|r| r[3] == 5.0));
}

#[test]
fn sweep_heptagon_arc_count_drops() {
    let data = rows(&stdout(&cwidth(&[
        "sweep",
        "--shape",
        "random:7:1",
        "--steps",
        "200",
    ])));
    let counts: Vec<f64> = data[..data.len() - 1].iter().map(|r| r[3]).collect();
    assert!(counts.windows(2).all(|w| w[1] <= w[0]));
    assert!(counts.last().unwrap() < &counts[0]);
}

#[test]
fn render_writes_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.svg");
    let out = cwidth(&[
        "render",
        "--shape",
        "triangle",
        "--t",
        "0.1,0.2",
        "--t",
        "0.3,0.4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<path").count(), 5);
    let empty = stdout(&cwidth(&["render", "--shape", "triangle"]));
    assert_eq!(empty.matches("<path").count(), 1);
}

#[test]
fn cheeger_values() {
    let disk = json(&cwidth(&["cheeger", "--shape", "disk:0.5:0,0"]));
    assert!((disk["h"].as_f64().unwrap() - 4.0).abs() < 1e-10);
    let r = json(&cwidth(&["cheeger", "--shape", "triangle"]));
    assert!(r["residual"].as_f64().unwrap() <= 1e-10);
    let other = json(&cwidth(&["cheeger", "--shape", "random:9:2"]));
    assert!(other["h"].as_f64().unwrap() <= r["h"].as_f64().unwrap());
}

#[test]
fn verify_campaigns() {
    let perim = cwidth(&["verify", "perim"]);
    assert_eq!(perim.status.code(), Some(0));
    assert_eq!(json(&perim)["schema"], "cwidth.report/1");

    let area = json(&cwidth(&["verify", "area", "--shape", "triangle"]));
    assert!(area["worst_margin"].as_f64().unwrap().abs() < 1e-12);

    let cheeger = cwidth(&[
        "verify",
        "cheeger",
        "--shapes",
        "50",
        "--seed",
        "7",
        "--workers",
        "4",
    ]);
    assert_eq!(cheeger.status.code(), Some(0));
    let report = json(&cheeger);
    assert_eq!(report["max_h"], report["reference_h"]);
}

#[test]
fn verify_failure_exits_1() {
    // A thin lens has far less area than R.
    let out = cwidth(&["verify", "area", "--shape", "disk:1:0,0;1.9,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!json(&out)["counterexamples"].as_array().unwrap().is_empty());
}
