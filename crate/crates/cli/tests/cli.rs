use radii_atlas::diagram::{classify, f_map, DiagramPoint, CLASSIFY_TOL};
use radii_atlas::families::{construct, FamilySpec};
use radii_atlas::geometry::ArcPolygon;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radii-atlas")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn radii_of_the_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("eqt.json");
    assert!(run(&["family", "eqt", "--out", path_str(&body)]).status.success());
    let o = run(&["radii", "--body", path_str(&body), "--oracle", "64"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r"], 0.5);
    assert_eq!(v["w"], 1.5);
    assert_eq!(v["D"], 1.73205080757);
    assert_eq!(v["R"], 1.0);
    assert_eq!(v["certificates"]["check"]["valid"], true);
    assert_eq!(v["oracle"]["samples"], 3);
}

#[test]
fn family_files_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("b.json");
    let svg = dir.path().join("b.svg");
    let spec = "bpen:r=0.70,gamma=1.00";
    let o = run(&["family", spec, "--out", path_str(&json), "--render", path_str(&svg)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("expected"));

    let picture = std::fs::read_to_string(&svg).unwrap();
    for class in ["inball", "circumball", "width", "diameter"] {
        assert!(picture.contains(&format!("class=\"{class}\"")), "missing {class}");
    }

    let back = ArcPolygon::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let direct = construct(&spec.parse::<FamilySpec>().unwrap()).unwrap();
    for k in 0..720 {
        let t = k as f64 * std::f64::consts::TAU / 720.0;
        let gap = (back.support_value(t).unwrap() - direct.support_value(t).unwrap()).abs();
        assert!(gap <= 1e-12, "θ = {t}: {gap:e}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["radii", "--body", "/nonexistent/body.json"]).status.code(), Some(2));
    assert_eq!(run(&["diagram", "check", "0.9", "0.9", "0.9"]).status.code(), Some(1));
    assert_eq!(run(&["diagram", "check", "0.6", "0.75", "0.95"]).status.code(), Some(0));
    assert_eq!(run(&["family", "nosuch:r=1"]).status.code(), Some(1));
    assert_eq!(run(&["diagram", "witness", "0.9", "0.9", "0.9", "--out", "/tmp/never.json"]).status.code(), Some(1));
    assert_ne!(run(&["verify", "--level", "medium"]).status.code(), Some(0));
}

#[test]
fn classification_tolerance_from_env() {
    let near = ["diagram", "classify", "0.5", "0.75", "0.8660256"];
    let o = run(&near);
    assert_eq!(stdout(&o).trim(), "vertex:EquilateralTriangle");
    let strict = Command::new(env!("CARGO_BIN_EXE_radii-atlas"))
        .args(near)
        .env("RADII_ATLAS_TOL", "1e-12")
        .output()
        .unwrap();
    assert_ne!(stdout(&strict).trim(), "vertex:EquilateralTriangle");
}

#[test]
fn sample_labels_survive_a_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("mesh.csv");
    assert!(run(&["--jobs", "1", "diagram", "sample", "--resolution", "4", "--out", path_str(&csv)]).status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,z,label,family,params"));
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let p = DiagramPoint::new(f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap());
        assert_eq!(classify(&p, CLASSIFY_TOL).to_string(), f[3], "{line}");
        rows += 1;
    }
    assert!(rows > 100);
}

#[test]
fn witness_lands_on_target() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    assert!(run(&["diagram", "witness", "0.55", "0.74", "0.9", "--out", path_str(&out)]).status.success());
    let body = ArcPolygon::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let p = f_map(&body).unwrap();
    assert!(p.dist_inf(&DiagramPoint::new(0.55, 0.74, 0.9)) <= 1e-6);
}

#[test]
fn project2d_membership() {
    assert!(run(&["project2d", "0.5", "1.7320508075688772"]).status.success());
    assert_eq!(run(&["project2d", "0.9", "1.8"]).status.code(), Some(1));
    assert!(run(&["project2d", "1", "3.6", "--R", "2"]).status.success());
}
