//! Acceptance gate: one PASS/FAIL line per criterion, each with its own
//! runtime limit. Exits non-zero if anything fails.

use std::f64::consts::{LN_2, PI, TAU};
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, Zero};
use wonderkit::hyperbolic::{
    classify_tiling, generate_tiling, genus_polygon, hyp_distance, DiscPoint, TilingGeometry,
};
use wonderkit::planar::{reuleaux, rope_extra_around};
use wonderkit::polyhedra::{
    build_platonic, cuboctahedron_from_cube, cuboctahedron_from_octahedron, enumerate_regular,
    similarity_residual,
};
use wonderkit::series::{
    alternating_partial, divergence_certificate, rearrange, RearrangementTrace, StopRule,
};
use wonderkit::space::{solve_touching_angle, SpaceError, TubeRatio};
use wonderkit::topology::{
    borromean_rings, full_twists, full_twists_about, hopf_link, lift_path, linking_number,
    linking_number_gauss,
};
use wonderkit::Vec3;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    check: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_wonderkit"))
        .args(args)
        .env_remove("WONDERKIT_PRECISION")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn rope() -> Outcome {
    let printed = cli(&["rope", "--height", "1"])?;
    ensure(printed == b"6.28318530718\n", || {
        format!("printed {:?}", String::from_utf8_lossy(&printed))
    })?;
    let small = rope_extra_around(1.0, 1.0).map_err(|e| e.to_string())?;
    let earth = rope_extra_around(6.371e6, 1.0).map_err(|e| e.to_string())?;
    ensure((small - TAU).abs() <= 1e-12, || format!("extra {small}"))?;
    ensure(small.to_bits() == earth.to_bits(), || {
        format!("{small} vs {earth}")
    })?;
    Ok(format!(
        "extra = {small}, same bits for R = 1 and R = 6.371e6"
    ))
}

fn constant_width() -> Outcome {
    let mut worst_spread: f64 = 0.0;
    let mut worst_perimeter: f64 = 0.0;
    for n in [3, 5, 7, 9] {
        for w in [1.0, 2.5] {
            let body = reuleaux(n, w).map_err(|e| e.to_string())?;
            let (lo, hi) = body.width_extremes(3600);
            ensure(hi - lo <= 1e-9 * w, || {
                format!("n = {n}, w = {w}: spread {}", hi - lo)
            })?;
            // the support-function integral, not the arc-length sum
            let perimeter = body.cauchy_perimeter();
            ensure((perimeter - PI * w).abs() <= 1e-6, || {
                format!("n = {n}, w = {w}: perimeter {perimeter}")
            })?;
            worst_spread = worst_spread.max((hi - lo) / w);
            worst_perimeter = worst_perimeter.max((perimeter - PI * w).abs());
        }
    }
    Ok(format!(
        "max relative spread {worst_spread:.2e}, max perimeter error {worst_perimeter:.2e}"
    ))
}

fn harmonic() -> Outcome {
    let mut min_margin = f64::INFINITY;
    for m in 0..=20u32 {
        let cert = divergence_certificate(m).map_err(|e| e.to_string())?;
        let bound = 1.0 + m as f64 / 2.0;
        ensure(cert.partial_sum >= bound, || {
            format!("S(2^{m}) = {} < {bound}", cert.partial_sum)
        })?;
        ensure(cert.block_sums.len() == m as usize, || {
            format!("m = {m}: {} blocks", cert.block_sums.len())
        })?;
        for (k, &b) in cert.block_sums.iter().enumerate() {
            ensure(b >= 0.5, || format!("m = {m}: block {} sums to {b}", k + 1))?;
        }
        min_margin = min_margin.min(cert.partial_sum - bound);
    }
    Ok(format!("m = 0..=20, smallest margin {min_margin:.3e}"))
}

/// Greedy rearrangement in exact arithmetic.
fn greedy_oracle(target: BigRational, terms: usize) -> Vec<u64> {
    let mut sum = BigRational::zero();
    let (mut odd, mut even) = (1u64, 2u64);
    let mut up = true;
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        if up && sum > target {
            up = false;
        } else if !up && sum < target {
            up = true;
        }
        let d = if up {
            odd += 2;
            odd - 2
        } else {
            even += 2;
            even - 2
        };
        let term = BigRational::new(BigInt::from(1), BigInt::from(d));
        if up {
            sum += term;
        } else {
            sum -= term;
        }
        out.push(d);
    }
    out
}

/// Odd and even denominators each form an initial run 1, 3, 5, ... and 2, 4, 6, ...
fn uses_each_term_once_in_order(trace: &RearrangementTrace) -> bool {
    let (mut odd, mut even) = (1u64, 2u64);
    trace.steps.iter().all(|s| {
        let next = if s.denominator % 2 == 1 {
            &mut odd
        } else {
            &mut even
        };
        let ok = s.denominator == *next;
        *next += 2;
        ok
    })
}

fn rearrangement() -> Outcome {
    let mut summary = Vec::new();
    for target in [-2.0, 0.0, 0.5, 1.5, 3.0] {
        let trace = rearrange(target, StopRule::Tolerance(1e-3))
            .map_err(|e| format!("S = {target}: {e}"))?;
        ensure(uses_each_term_once_in_order(&trace), || {
            format!("S = {target}: not a permutation prefix")
        })?;
        ensure(trace.len() <= 10_000_000, || {
            format!("S = {target}: {} terms", trace.len())
        })?;
        for &i in &trace.switches {
            let step = &trace.steps[i];
            ensure((step.partial_sum - target).abs() <= step.term.abs(), || {
                format!(
                    "S = {target}: switch at step {} misses by more than its term",
                    i + 1
                )
            })?;
        }
        let bound = trace
            .crossing_bound()
            .ok_or_else(|| format!("S = {target}: no crossing"))?;
        ensure(bound <= 1e-3, || {
            format!("S = {target}: final bound {bound}")
        })?;
        summary.push(format!("{target}: {} terms", trace.len()));
    }
    for (target, exact) in [
        (1.5, BigRational::new(3.into(), 2.into())),
        (0.0, BigRational::zero()),
    ] {
        let expected = greedy_oracle(exact, 400);
        let trace = rearrange(target, StopRule::MaxTerms(400)).map_err(|e| e.to_string())?;
        let got: Vec<u64> = trace.denominators().collect();
        ensure(got == expected, || {
            let at = got
                .iter()
                .zip(&expected)
                .position(|(a, b)| a != b)
                .unwrap_or(got.len().min(expected.len()));
            format!(
                "S = {target}: prefix differs from the exact greedy order at term {}",
                at + 1
            )
        })?;
    }
    Ok(format!("{}; 400-term prefixes match", summary.join(", ")))
}

fn alternating() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in [10u64, 1_000, 1_000_000] {
        let s = alternating_partial(n).map_err(|e| e.to_string())?;
        let err = (s - LN_2).abs();
        let bound = 1.0 / (n + 1) as f64;
        ensure(err <= bound, || format!("N = {n}: error {err} > {bound}"))?;
        worst = worst.max(err / bound);
    }
    Ok(format!("error / bound at most {worst:.3}"))
}

fn tilings() -> Outcome {
    let mut euclidean = Vec::new();
    for n in 3..=50u32 {
        for k in 3..=50u32 {
            let g = classify_tiling(n, k).map_err(|e| e.to_string())?;
            let expected = match (n - 2) * (k - 2) {
                x if x < 4 => TilingGeometry::Spherical,
                4 => TilingGeometry::Euclidean,
                _ => TilingGeometry::Hyperbolic,
            };
            ensure(g == expected, || format!("{{{n},{k}}} classified {g}"))?;
            if g == TilingGeometry::Euclidean {
                euclidean.push((n, k));
            }
        }
    }
    ensure(euclidean == [(3, 6), (4, 4), (6, 3)], || {
        format!("euclidean pairs {euclidean:?}")
    })?;

    let depth1 = generate_tiling(7, 3, 1).map_err(|e| e.to_string())?;
    ensure(depth1.len() == 8, || {
        format!("depth 1 has {} tiles", depth1.len())
    })?;

    let tiling = generate_tiling(7, 3, 3).map_err(|e| e.to_string())?;
    let expected_area = 5.0 * PI - TAU * 7.0 / 3.0;
    let mut area_err: f64 = 0.0;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for tile in &tiling.tiles {
        area_err = area_err.max((tile.polygon.area() - expected_area).abs());
        for s in tile.polygon.side_lengths() {
            lo = lo.min(s);
            hi = hi.max(s);
        }
    }
    ensure(area_err <= 1e-6, || format!("area error {area_err}"))?;
    ensure(hi - lo <= 1e-9, || format!("side spread {}", hi - lo))?;
    Ok(format!(
        "euclidean only {{3,6}} {{4,4}} {{6,3}}; {{7,3}} depth 3 has {} tiles, area error {area_err:.1e}, side spread {:.1e}",
        tiling.len(),
        hi - lo
    ))
}

fn genus() -> Outcome {
    let mut details = Vec::new();
    for p in [2u32, 3] {
        let g = genus_polygon(p).map_err(|e| e.to_string())?;
        let poly = &g.polygon.polygon;
        ensure(poly.len() == 4 * p as usize, || {
            format!("p = {p}: {} sides", poly.len())
        })?;
        let sum = poly.angle_sum();
        ensure((sum - TAU).abs() <= 1e-9, || {
            format!("p = {p}: angle sum {sum}")
        })?;
        let r = hyp_distance(DiscPoint::ORIGIN, poly.vertices()[0]);
        let cot = 1.0 / (PI / (4 * p) as f64).tan();
        ensure((r.cosh() - cot * cot).abs() <= 1e-9, || {
            format!("p = {p}: cosh R = {} vs {}", r.cosh(), cot * cot)
        })?;
        details.push(format!(
            "p = {p}: angle sum error {:.1e}",
            (sum - TAU).abs()
        ));
    }
    Ok(details.join(", "))
}

fn polyhedra() -> Outcome {
    let solids = enumerate_regular();
    let faces: Vec<u32> = solids.iter().map(|s| s.faces).collect();
    ensure(faces == [4, 6, 8, 12, 20], || {
        format!("face counts {faces:?}")
    })?;
    for s in &solids {
        let mesh = build_platonic(s.pair).map_err(|e| e.to_string())?;
        let chi = mesh.euler_characteristic().map_err(|e| e.to_string())?;
        ensure(chi == 2, || format!("{}: chi = {chi}", s.name))?;
    }
    let (a, b) = (cuboctahedron_from_cube(), cuboctahedron_from_octahedron());
    for m in [&a, &b] {
        let counts = (m.vertex_count(), m.edge_count(), m.face_count());
        ensure(counts == (12, 24, 14), || {
            format!("cuboctahedron V, E, F = {counts:?}")
        })?;
        let hist = m.face_histogram();
        ensure(
            hist.get(&3) == Some(&8) && hist.get(&4) == Some(&6) && hist.len() == 2,
            || format!("faces by size {hist:?}"),
        )?;
    }
    let residual = similarity_residual(a.vertices(), b.vertices());
    ensure(residual <= 1e-9, || format!("residual {residual}"))?;
    Ok(format!(
        "F = {faces:?}, cuboctahedron residual {residual:.1e}"
    ))
}

fn belt() -> Outcome {
    let tilted = Vec3::new(1.0, 2.0, 3.0).normalized();
    for n in 0..=6u32 {
        let expected = if n % 2 == 0 { 1 } else { -1 };
        let base = full_twists(n);
        let paths = [
            ("z", base.clone()),
            ("z refined", base.refined()),
            ("z refined twice", base.refined().refined()),
            ("x", full_twists_about(n, Vec3::X, 16 * n as usize + 16)),
            ("tilted", full_twists_about(n, tilted, 24 * n as usize + 8)),
        ];
        for (label, path) in paths {
            let lift = lift_path(&path).map_err(|e| format!("n = {n}, {label}: {e}"))?;
            ensure(lift.endpoint.sign() == expected, || {
                format!("n = {n}, {label}: endpoint {}", lift.endpoint.sign())
            })?;
        }
    }
    Ok("endpoint (-1)^n for n = 0..=6 on every path".into())
}

fn links() -> Outcome {
    let rings = borromean_rings(128).map_err(|e| e.to_string())?;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let crossing = linking_number(&rings[i], &rings[j]).map_err(|e| e.to_string())?;
        let gauss = linking_number_gauss(&rings[i], &rings[j]).map_err(|e| e.to_string())?;
        ensure(
            crossing.linking_number == 0 && gauss.linking_number == 0,
            || {
                format!(
                    "pair {i}-{j}: {} / {}",
                    crossing.linking_number, gauss.linking_number
                )
            },
        )?;
    }
    let [a, b] = hopf_link(128).map_err(|e| e.to_string())?;
    let crossing = linking_number(&a, &b)
        .map_err(|e| e.to_string())?
        .linking_number;
    let gauss = linking_number_gauss(&a, &b).map_err(|e| e.to_string())?;
    ensure(
        crossing.abs() == 1 && gauss.linking_number == crossing,
        || format!("hopf: {crossing} / {}", gauss.linking_number),
    )?;
    Ok(format!(
        "borromean pairs 0 by both methods; hopf {crossing} (gauss {:.6})",
        gauss.raw
    ))
}

fn shell_solver() -> Outcome {
    match solve_touching_angle(&TubeRatio::InverseSin) {
        Err(SpaceError::NoRoot { .. }) => {}
        other => return Err(format!("1/sin alpha gave {other:?}")),
    }
    let report = solve_touching_angle(&TubeRatio::Constant(0.5)).map_err(|e| e.to_string())?;
    let expected = (TAU / 3f64.ln()).atan();
    let err = (report.alpha.radians() - expected).abs();
    ensure(
        err <= 1e-9 && (report.alpha.degrees() - expected.to_degrees()).abs() <= 1e-9,
        || {
            format!(
                "alpha {} vs {}",
                report.alpha.degrees(),
                expected.to_degrees()
            )
        },
    )?;
    Ok(format!(
        "1/sin: no root; c = 0.5: alpha = {:.10} deg, deviation from half golden angle ({:.4} deg) = {:+.4} deg (reported only)",
        report.alpha.degrees(),
        report.half_golden.degrees(),
        report.deviation.degrees()
    ))
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("rope.txt", &["rope", "--height", "1"]),
    ("harmonic.csv", &["series", "harmonic", "--dyadic", "12"]),
    (
        "alternating.txt",
        &["series", "alternating", "--terms", "1000"],
    ),
    ("rearrange.csv", &["series", "rearrange", "--target", "1.5"]),
    (
        "rearrange_negative.csv",
        &[
            "series",
            "rearrange",
            "--target",
            "-2",
            "--tolerance",
            "1e-2",
        ],
    ),
    ("reuleaux.csv", &["width", "reuleaux", "-n", "5"]),
    (
        "reuleaux.svg",
        &["width", "reuleaux", "-n", "3", "--format", "svg"],
    ),
    ("spiral.svg", &["spiral"]),
    (
        "spiral.csv",
        &["spiral", "--kind", "archimedean", "--format", "csv"],
    ),
    ("web.svg", &["web"]),
    ("helix.svg", &["helix", "project"]),
    (
        "helix.csv",
        &["helix", "project", "--left", "--format", "csv"],
    ),
    ("shell_solve.csv", &["shell", "solve", "--ratio", "0.5"]),
    ("shell.off", &["shell", "mesh"]),
    (
        "shell_radial.off",
        &["shell", "mesh", "--section", "radial"],
    ),
    (
        "classify.txt",
        &["tiling", "classify", "-n", "7", "-k", "3"],
    ),
    (
        "tiling.svg",
        &["tiling", "generate", "-n", "7", "-k", "3", "--depth", "3"],
    ),
    (
        "tiling.csv",
        &[
            "tiling", "generate", "-n", "4", "-k", "5", "--format", "csv",
        ],
    ),
    ("genus.csv", &["tiling", "genus", "-p", "3"]),
    (
        "genus.svg",
        &["tiling", "genus", "-p", "2", "--format", "svg"],
    ),
    ("enumerate.csv", &["poly", "enumerate"]),
    ("icosahedron.off", &["poly", "build", "-p", "3", "-q", "5"]),
    (
        "dodecahedron.csv",
        &["poly", "build", "-p", "5", "-q", "3", "--format", "csv"],
    ),
    ("cuboct.off", &["poly", "cuboct"]),
    ("cuboct.csv", &["poly", "cuboct", "--format", "csv"]),
    ("belt.txt", &["belt", "--twists", "5"]),
    (
        "belt.csv",
        &[
            "belt", "--twists", "2", "--axis", "1,1,1", "--format", "csv",
        ],
    ),
    ("borromean.csv", &["link"]),
    ("hopf.csv", &["link", "--config", "hopf"]),
    ("yinyang.svg", &["yinyang"]),
];

fn determinism() -> Outcome {
    let dirs = [
        tempfile::tempdir().map_err(|e| e.to_string())?,
        tempfile::tempdir().map_err(|e| e.to_string())?,
    ];
    for dir in &dirs {
        for (name, args) in GOLDEN {
            let path = dir.path().join(name);
            let mut full: Vec<&str> = args.to_vec();
            let p = path.to_str().ok_or("non-UTF-8 temp path")?;
            full.extend(["-o", p]);
            cli(&full)?;
        }
    }
    let mut bytes = 0;
    for (name, _) in GOLDEN {
        let a = fs::read(dirs[0].path().join(name)).map_err(|e| e.to_string())?;
        let b = fs::read(dirs[1].path().join(name)).map_err(|e| e.to_string())?;
        ensure(!a.is_empty(), || format!("{name} is empty"))?;
        ensure(a == b, || format!("{name} differs between runs"))?;
        bytes += a.len();
    }
    Ok(format!(
        "{} files, {bytes} bytes, identical across two runs",
        GOLDEN.len()
    ))
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "rope",
            limit: Duration::from_secs(1),
            check: rope,
        },
        Criterion {
            id: 2,
            name: "constant width",
            limit: Duration::from_secs(5),
            check: constant_width,
        },
        Criterion {
            id: 3,
            name: "harmonic divergence",
            limit: Duration::from_secs(10),
            check: harmonic,
        },
        Criterion {
            id: 4,
            name: "rearrangement",
            limit: Duration::from_secs(30),
            check: rearrangement,
        },
        Criterion {
            id: 5,
            name: "alternating series",
            limit: Duration::from_secs(5),
            check: alternating,
        },
        Criterion {
            id: 6,
            name: "tilings",
            limit: Duration::from_secs(30),
            check: tilings,
        },
        Criterion {
            id: 7,
            name: "genus polygon",
            limit: Duration::from_secs(1),
            check: genus,
        },
        Criterion {
            id: 8,
            name: "polyhedra",
            limit: Duration::from_secs(5),
            check: polyhedra,
        },
        Criterion {
            id: 9,
            name: "belt trick",
            limit: Duration::from_secs(5),
            check: belt,
        },
        Criterion {
            id: 10,
            name: "linking numbers",
            limit: Duration::from_secs(10),
            check: links,
        },
        Criterion {
            id: 11,
            name: "shell solver",
            limit: Duration::from_secs(1),
            check: shell_solver,
        },
        Criterion {
            id: 12,
            name: "determinism",
            limit: Duration::from_secs(60),
            check: determinism,
        },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; too slow")),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failures += 1;
        }
        println!(
            "{status} {:>2} {:<20} [{:.3} s / {} s] {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
