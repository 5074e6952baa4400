use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use wonderkit::series::{rearrange, StopRule};
use wonderkit::Mesh;

fn wonderkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wonderkit"))
        .args(args)
        .env_remove("WONDERKIT_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = wonderkit(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Checks that every element is closed in order. Enough for the flat,
/// attribute-quoted documents the exporter writes.
fn assert_balanced_xml(svg: &str) {
    assert!(svg.starts_with("<?xml version=\"1.0\""));
    let mut stack: Vec<String> = Vec::new();
    let mut rest = svg;
    while let Some(open) = rest.find('<') {
        let close = rest[open..].find('>').expect("unterminated tag") + open;
        let tag = &rest[open + 1..close];
        rest = &rest[close + 1..];
        if tag.starts_with('?') {
            continue;
        }
        if let Some(name) = tag.strip_prefix('/') {
            assert_eq!(
                stack.pop().as_deref(),
                Some(name.trim()),
                "mismatched </{name}>"
            );
        } else if !tag.ends_with('/') {
            let name = tag.split_whitespace().next().unwrap();
            stack.push(name.to_string());
        }
    }
    assert!(stack.is_empty(), "unclosed elements {stack:?}");
}

#[test]
fn rope_prints_two_pi() {
    assert_eq!(stdout_of(&["rope", "--height", "1"]), "6.28318530718\n");
    assert_eq!(
        stdout_of(&["rope", "--height", "1", "--radius", "1"]),
        stdout_of(&["rope", "--height", "1", "--radius", "6.371e6"])
    );
}

#[test]
fn enumerate_lists_five_solids_with_face_counts_last() {
    let out = stdout_of(&["poly", "enumerate"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].ends_with(",F"));
    let faces: Vec<u32> = lines[1..]
        .iter()
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(faces, [4, 6, 8, 12, 20]);
}

#[test]
fn tiling_depth_zero_has_one_tile() {
    let svg = stdout_of(&["tiling", "generate", "-n", "7", "-k", "3", "--depth", "0"]);
    assert_balanced_xml(&svg);
    assert_eq!(svg.matches("<path").count(), 1);
    assert_eq!(svg.matches("<circle").count(), 1);

    let svg = stdout_of(&["tiling", "generate", "-n", "7", "-k", "3", "--depth", "1"]);
    assert_eq!(svg.matches("<path").count(), 8);
}

#[test]
fn tiling_csv_areas_match() {
    let csv = stdout_of(&[
        "tiling", "generate", "-n", "5", "-k", "4", "--depth", "2", "--format", "csv",
    ]);
    let expected = 3.0 * std::f64::consts::PI - std::f64::consts::TAU * 5.0 / 4.0;
    for line in csv.lines().skip(1) {
        let area: f64 = line.split(',').nth(4).unwrap().parse().unwrap();
        assert!((area - expected).abs() < 1e-9, "{line}");
    }
}

#[test]
fn cube_off_header_and_round_trip() {
    let off = stdout_of(&["poly", "build", "-p", "4", "-q", "3"]);
    assert!(off.starts_with("OFF\n8 6 12\n"));
    let mesh = Mesh::parse_off(&off).unwrap();
    assert_eq!(
        (mesh.vertex_count(), mesh.edge_count(), mesh.face_count()),
        (8, 12, 6)
    );
    assert_eq!(mesh.euler_characteristic().unwrap(), 2);

    for (p, q) in [(3, 3), (3, 4), (5, 3), (3, 5)] {
        let off = stdout_of(&["poly", "build", "-p", &p.to_string(), "-q", &q.to_string()]);
        let mesh = Mesh::parse_off(&off).unwrap();
        assert_eq!(mesh.euler_characteristic().unwrap(), 2, "{{{p},{q}}}");
    }
}

#[test]
fn cuboctahedron_report() {
    let csv = stdout_of(&["poly", "cuboct", "--format", "csv"]);
    let rows: Vec<Vec<&str>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 2);
    for row in &rows {
        assert_eq!(&row[1..7], ["12", "24", "14", "2", "8", "6"]);
        assert!(row[7].parse::<f64>().unwrap() <= 1e-9);
    }
    let off = stdout_of(&["poly", "cuboct", "--from", "octahedron"]);
    assert!(off.starts_with("OFF\n12 14 24\n"));
}

#[test]
fn rearrange_csv_has_one_row_per_term() {
    let csv = stdout_of(&[
        "series",
        "rearrange",
        "--target",
        "1.5",
        "--tolerance",
        "1e-2",
    ]);
    let trace = rearrange(1.5, StopRule::Tolerance(1e-2)).unwrap();
    assert_eq!(csv.lines().count(), trace.len() + 1);
    assert!(!csv.contains('\r'));

    let csv = stdout_of(&["series", "rearrange", "--target", "-2", "--terms", "500"]);
    assert_eq!(csv.lines().count(), 501);
}

#[test]
fn series_values() {
    assert_eq!(stdout_of(&["series", "harmonic", "--terms", "1"]), "1\n");
    assert_eq!(stdout_of(&["series", "harmonic", "--terms", "2"]), "1.5\n");
    assert_eq!(
        stdout_of(&["series", "alternating", "--terms", "2"]),
        "0.5\n"
    );
    let csv = stdout_of(&["series", "harmonic", "--dyadic", "10"]);
    for line in csv.lines().skip(1) {
        let cells: Vec<f64> = line
            .split(',')
            .filter(|c| !c.is_empty())
            .map(|c| c.parse().unwrap())
            .collect();
        assert!(cells[2] >= cells[3], "{line}");
    }
}

#[test]
fn shell_solve_reports_closed_form() {
    let csv = stdout_of(&["shell", "solve", "--ratio", "0.5"]);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let alpha: f64 = row[1].parse().unwrap();
    let expected = (std::f64::consts::TAU / 3f64.ln()).atan().to_degrees();
    assert!((alpha - expected).abs() < 1e-9);
    assert!(row[3].starts_with("68.75388"));
}

#[test]
fn shell_mesh_is_closed() {
    let off = stdout_of(&[
        "shell",
        "mesh",
        "--turns",
        "2",
        "--samples-per-turn",
        "16",
        "--ring-samples",
        "8",
    ]);
    let mesh = Mesh::parse_off(&off).unwrap();
    assert_eq!(mesh.euler_characteristic().unwrap(), 2);
}

#[test]
fn belt_and_links() {
    for n in 0..=4 {
        let expected = if n % 2 == 0 { "1\n" } else { "-1\n" };
        assert_eq!(
            stdout_of(&["belt", "--twists", &n.to_string(), "--axis", "1,-2,0.5"]),
            expected
        );
    }
    let csv = stdout_of(&["link", "--config", "borromean"]);
    for line in csv.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!((cells[1], cells[2]), ("0", "0"), "{line}");
    }
    let csv = stdout_of(&["link", "--config", "hopf"]);
    let cells: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(cells[1].parse::<i64>().unwrap().abs(), 1);
    assert_eq!(cells[1], cells[2]);
}

#[test]
fn drawings_are_well_formed() {
    let cases: &[&[&str]] = &[
        &["width", "reuleaux", "-n", "5", "--format", "svg"],
        &["spiral"],
        &["spiral", "--kind", "archimedean", "-a", "0", "-b", "0.1"],
        &["spiral", "--kind", "reciprocal"],
        &["web"],
        &["helix", "project"],
        &["helix", "project", "--left"],
        &["tiling", "genus", "-p", "2", "--format", "svg"],
        &["yinyang"],
    ];
    for args in cases {
        let svg = stdout_of(args);
        assert_balanced_xml(&svg);
        assert!(svg.contains("version=\"1.1\""), "{args:?}");
        assert!(!svg.contains("NaN") && !svg.contains("inf"), "{args:?}");
    }
}

#[test]
fn helix_projection_is_a_reciprocal_spiral() {
    let csv = stdout_of(&[
        "helix",
        "project",
        "--pitch",
        "0.5",
        "--radius",
        "2",
        "--format",
        "csv",
        "--samples",
        "50",
    ]);
    for line in csv.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let rho = v[1].hypot(v[2]);
        // ρ·t = d·R/c = 4
        assert!((rho * v[0] - 4.0).abs() < 1e-9, "{line}");
    }
}

#[test]
fn precision_variable_changes_digits() {
    let out = Command::new(env!("CARGO_BIN_EXE_wonderkit"))
        .args(["rope"])
        .env("WONDERKIT_PRECISION", "4")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "6.283\n");

    let out = Command::new(env!("CARGO_BIN_EXE_wonderkit"))
        .args(["rope"])
        .env("WONDERKIT_PRECISION", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let out = wonderkit(&["rope", "--heigth", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage:"));
    assert!(out.stdout.is_empty());

    assert_eq!(wonderkit(&[]).status.code(), Some(2));
    assert_eq!(
        wonderkit(&["tiling", "generate", "-n", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        wonderkit(&["shell", "solve", "--ratio", "cos"])
            .status
            .code(),
        Some(2)
    );

    let out = wonderkit(&["shell", "solve"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(
        wonderkit(&["tiling", "generate", "-n", "2", "-k", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wonderkit(&["poly", "build", "-p", "6", "-q", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wonderkit(&["width", "reuleaux", "-n", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(
        wonderkit(&["rope", "--radius", "-1"]).status.code(),
        Some(1)
    );

    let out = wonderkit(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("tiling"));
}

#[test]
fn output_file_needs_force_to_replace() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.off");
    let p = path.to_str().unwrap();

    let out = wonderkit(&["poly", "build", "-p", "4", "-q", "3", "-o", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = fs::read_to_string(&path).unwrap();
    assert!(first.starts_with("OFF\n8 6 12\n"));

    let out = wonderkit(&["poly", "build", "-p", "3", "-q", "3", "-o", p]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
    assert_eq!(fs::read_to_string(&path).unwrap(), first);

    let out = wonderkit(&["poly", "build", "-p", "3", "-q", "3", "-o", p, "--force"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(fs::read_to_string(&path)
        .unwrap()
        .starts_with("OFF\n4 4 6\n"));

    let missing = dir.path().join("no/such/dir/x.svg");
    let out = wonderkit(&["yinyang", "-o", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("x.svg"));
    assert!(!Path::new(&missing).exists());
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["link", "--config", "borromean"][..],
        &["tiling", "generate", "-n", "4", "-k", "5", "--depth", "2"],
        &["belt", "--twists", "3", "--format", "csv"],
    ] {
        assert_eq!(stdout_of(args), stdout_of(args), "{args:?}");
    }
}
