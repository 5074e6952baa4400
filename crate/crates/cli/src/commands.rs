use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::io::Write;

use anyhow::{bail, Context, Result};
use wonderkit::export::{csv_table, tiling_svg, Svg};
use wonderkit::hyperbolic::{classify_tiling, generate_tiling_with_cap, genus_polygon};
use wonderkit::planar::{reuleaux, rope_extra_around, spider_web_with_angle, yin_yang, PlaneCurve};
use wonderkit::polyhedra::{
    build_platonic, cuboctahedron_from_cube, cuboctahedron_from_octahedron, enumerate_regular,
    similarity_residual, PolyhedronReport, SchlafliPair,
};
use wonderkit::series::{
    alternating_partial, divergence_certificate, harmonic_partial, rearrange, StopRule,
};
use wonderkit::space::{
    project_from_axis, shell_surface, solve_touching_angle, Handedness, Helix, SectionPlane,
    ShellParams,
};
use wonderkit::topology::{
    borromean_rings, full_twists_about, hopf_link, lift_path, link_report, min_distance,
};
use wonderkit::{Angle, Mesh, NumberFormat, RenderStyle, Vec2};

use crate::*;

const INK: &str = "#000000";
const FAINT: &str = "#999999";

pub(crate) fn execute(cmd: &Command, fmt: NumberFormat, stderr: &mut dyn Write) -> Result<String> {
    let style = RenderStyle {
        number_format: fmt,
        ..RenderStyle::default()
    };
    let num = |x: f64| fmt.format(x);
    match cmd {
        Command::Series(SeriesCommand::Harmonic(args)) => match args.dyadic {
            Some(m) => harmonic_dyadic(m, &num),
            None => Ok(format!("{}\n", num(harmonic_partial(args.terms)?))),
        },
        Command::Series(SeriesCommand::Alternating(args)) => {
            Ok(format!("{}\n", num(alternating_partial(args.terms)?)))
        }
        Command::Series(SeriesCommand::Rearrange(args)) => {
            let stop = match args.terms {
                Some(n) => StopRule::MaxTerms(n),
                None => StopRule::Tolerance(args.tolerance),
            };
            let trace = rearrange(args.target, stop)?;
            if !trace.complete {
                let _ = writeln!(
                    stderr,
                    "warning: stopped before reaching the requested tolerance"
                );
            }
            Ok(trace.to_csv(num))
        }
        Command::Width(WidthCommand::Reuleaux(args)) => reuleaux_cmd(args, &style),
        Command::Rope(args) => Ok(format!(
            "{}\n",
            num(rope_extra_around(args.radius, args.height)?)
        )),
        Command::Spiral(args) => spiral_cmd(args, &style),
        Command::Web(args) => web_cmd(args, &style),
        Command::Helix(HelixCommand::Project(args)) => helix_cmd(args, &style),
        Command::Shell(ShellCommand::Solve(args)) => {
            let report = solve_touching_angle(&args.ratio)?;
            let row = vec![
                args.ratio.to_string(),
                num(report.alpha.degrees()),
                num(report.tube_ratio),
                num(report.half_golden.degrees()),
                num(report.deviation.degrees()),
            ];
            Ok(csv_table(
                &[
                    "ratio",
                    "alpha_deg",
                    "tube_ratio",
                    "half_golden_deg",
                    "deviation_deg",
                ],
                &[row],
            ))
        }
        Command::Shell(ShellCommand::Mesh(args)) => {
            let mut params = ShellParams::new(Angle::from_degrees(args.alpha))
                .with_tube_ratio(args.ratio.clone())
                .with_section(match args.section {
                    Section::Normal => SectionPlane::Normal,
                    Section::Radial => SectionPlane::Radial,
                });
            params.turns = args.turns;
            params.samples_per_turn = args.samples_per_turn;
            params.ring_samples = args.ring_samples;
            let shell = shell_surface(&params)?;
            if shell.self_intersecting {
                let _ = writeln!(
                    stderr,
                    "warning: whorls overlap (gap {})",
                    num(shell.whorl_gap)
                );
            }
            Ok(shell.mesh.to_off(num))
        }
        Command::Tiling(TilingCommand::Classify(p)) => {
            Ok(format!("{}\n", classify_tiling(p.n, p.k)?))
        }
        Command::Tiling(TilingCommand::Generate(args)) => tiling_cmd(args, &style),
        Command::Tiling(TilingCommand::Genus(args)) => genus_cmd(args, &style),
        Command::Poly(PolyCommand::Enumerate) => {
            let rows: Vec<Vec<String>> = enumerate_regular()
                .iter()
                .map(|r| {
                    vec![
                        r.pair.p().to_string(),
                        r.pair.q().to_string(),
                        r.name.to_string(),
                        r.vertices.to_string(),
                        r.edges.to_string(),
                        r.faces.to_string(),
                    ]
                })
                .collect();
            Ok(csv_table(&["p", "q", "name", "V", "E", "F"], &rows))
        }
        Command::Poly(PolyCommand::Build(args)) => {
            let pair = SchlafliPair::new(args.p, args.q)?;
            let mesh = build_platonic(pair)?;
            match args.format {
                MeshFormat::Off => Ok(mesh.to_off(num)),
                MeshFormat::Csv => report_csv(&[(pair.to_string(), &mesh)]),
            }
        }
        Command::Poly(PolyCommand::Cuboct(args)) => cuboct_cmd(args, &num),
        Command::Belt(args) => {
            let steps = args.steps.unwrap_or(16 * args.twists as usize + 16);
            if steps < 2 {
                bail!("a rotation path needs at least 2 steps");
            }
            let lift = lift_path(&full_twists_about(args.twists, args.axis, steps))?;
            match args.format {
                BeltFormat::Text => Ok(format!("{}\n", lift.endpoint.sign())),
                BeltFormat::Csv => Ok(lift.to_csv(num)),
            }
        }
        Command::Link(args) => link_cmd(args, &num),
        Command::Yinyang(args) => yinyang_cmd(args, &style),
    }
}

fn harmonic_dyadic(m: u32, num: &dyn Fn(f64) -> String) -> Result<String> {
    let mut rows = Vec::new();
    for j in 0..=m {
        let cert = divergence_certificate(j)?;
        let min_block = cert
            .block_sums
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        rows.push(vec![
            j.to_string(),
            cert.terms().to_string(),
            num(cert.partial_sum),
            num(cert.bound),
            if cert.block_sums.is_empty() {
                String::new()
            } else {
                num(min_block)
            },
        ]);
    }
    Ok(csv_table(
        &["m", "terms", "partial_sum", "bound", "min_block"],
        &rows,
    ))
}

fn reuleaux_cmd(args: &ReuleauxArgs, style: &RenderStyle) -> Result<String> {
    let body = reuleaux(args.n, args.width)?;
    let num = |x: f64| style.number_format.format(x);
    match args.format {
        DataFormat::Csv => {
            if args.directions == 0 {
                bail!("at least one direction is needed");
            }
            let (lo, hi) = body.width_extremes(args.directions);
            let row = vec![
                args.n.to_string(),
                num(args.width),
                num(lo),
                num(hi),
                num(hi - lo),
                num(body.perimeter()),
                num(std::f64::consts::PI * args.width),
            ];
            Ok(csv_table(
                &[
                    "n",
                    "width",
                    "min_width",
                    "max_width",
                    "spread",
                    "perimeter",
                    "pi_width",
                ],
                &[row],
            ))
        }
        DataFormat::Svg => {
            let points = body.to_curve()?.with_resolution(style.samples).sample();
            let mut svg = Svg::fitted(&points, *style);
            svg.polyline(&points, true, INK);
            Ok(svg.finish())
        }
    }
}

fn curve_csv(curve: &PlaneCurve, num: &dyn Fn(f64) -> String) -> Result<String> {
    let (t0, t1) = curve.range();
    let n = curve.resolution();
    let mut out = String::from("t,x,y,curvature,tangent_radial_deg\n");
    for i in 0..=n {
        let t = t0 + (t1 - t0) * i as f64 / n as f64;
        let p = curve.point(t);
        let kappa = curve.curvature(t)?;
        let psi = curve.tangent_radial_angle(t)?;
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            num(t),
            num(p.x),
            num(p.y),
            num(kappa),
            num(psi.degrees())
        );
    }
    Ok(out)
}

fn curve_svg(curve: &PlaneCurve, style: &RenderStyle) -> String {
    let points = curve.sample();
    let mut svg = Svg::fitted(&points, *style);
    svg.polyline(&points, false, INK);
    svg.finish()
}

fn spiral_cmd(args: &SpiralArgs, style: &RenderStyle) -> Result<String> {
    if !(args.turns > 0.0 && args.turns.is_finite()) {
        bail!("turns must be positive, got {}", args.turns);
    }
    if args.samples == 0 {
        bail!("at least one sample is needed");
    }
    let start = args.start.unwrap_or(match args.kind {
        SpiralKind::Reciprocal => 0.5,
        _ => 0.0,
    });
    let end = start + args.turns * TAU;
    let curve = match args.kind {
        SpiralKind::Log => PlaneCurve::logarithmic(args.a, args.b)?.with_range(start, end)?,
        SpiralKind::Archimedean => {
            PlaneCurve::archimedean(args.a, args.b).with_range(start, end)?
        }
        SpiralKind::Reciprocal => {
            if start <= 0.0 {
                bail!("the reciprocal spiral needs a positive start angle, got {start}");
            }
            PlaneCurve::reciprocal(args.a, false, start, end)?
        }
    }
    .with_resolution(args.samples);
    match args.format {
        DataFormat::Csv => curve_csv(&curve, &|x| style.number_format.format(x)),
        DataFormat::Svg => Ok(curve_svg(&curve, style)),
    }
}

fn web_cmd(args: &WebArgs, style: &RenderStyle) -> Result<String> {
    let web = spider_web_with_angle(
        args.radials,
        args.rings,
        args.frame,
        Angle::from_degrees(args.scaffold_angle),
    )?;
    let mut svg = Svg::fitted(web.anchors.iter().chain(web.frame.iter()), *style);
    for t in &web.y_threads {
        svg.segment(t.from, t.to, INK);
    }
    svg.polyline(&web.frame, true, INK);
    for t in &web.radials {
        svg.segment(t.from, t.to, INK);
    }
    svg.polyline(&web.scaffold.sample(), false, FAINT);
    svg.polyline(&web.capture.sample(), false, INK);
    Ok(svg.finish())
}

fn helix_cmd(args: &ProjectArgs, style: &RenderStyle) -> Result<String> {
    let hand = if args.left {
        Handedness::Left
    } else {
        Handedness::Right
    };
    let helix = Helix::new(args.radius, args.pitch, hand)?;
    if args.samples == 0 {
        bail!("at least one sample is needed");
    }
    let curve = project_from_axis(&helix, args.distance, args.t_min, args.t_max)?
        .with_resolution(args.samples);
    match args.format {
        DataFormat::Csv => curve_csv(&curve, &|x| style.number_format.format(x)),
        DataFormat::Svg => Ok(curve_svg(&curve, style)),
    }
}

fn tiling_cmd(args: &GenerateArgs, style: &RenderStyle) -> Result<String> {
    let tiling = generate_tiling_with_cap(args.pair.n, args.pair.k, args.depth, args.max_tiles)?;
    match args.format {
        DataFormat::Svg => Ok(tiling_svg(&tiling, style)),
        DataFormat::Csv => {
            let num = |x: f64| style.number_format.format(x);
            let rows: Vec<Vec<String>> = tiling
                .tiles
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let sides = t.polygon.side_lengths();
                    let lo = sides.iter().copied().fold(f64::INFINITY, f64::min);
                    let hi = sides.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                    vec![
                        i.to_string(),
                        t.generation.to_string(),
                        num(t.center.x()),
                        num(t.center.y()),
                        num(t.polygon.area()),
                        num(lo),
                        num(hi),
                    ]
                })
                .collect();
            Ok(csv_table(
                &[
                    "tile",
                    "generation",
                    "center_x",
                    "center_y",
                    "area",
                    "min_side",
                    "max_side",
                ],
                &rows,
            ))
        }
    }
}

fn genus_cmd(args: &GenusArgs, style: &RenderStyle) -> Result<String> {
    let g = genus_polygon(args.p)?;
    let poly = &g.polygon.polygon;
    match args.format {
        DataFormat::Csv => {
            let num = |x: f64| style.number_format.format(x);
            let corner = poly.interior_angles().first().copied().unwrap_or(0.0);
            let row = vec![
                g.genus.to_string(),
                poly.len().to_string(),
                num(corner.to_degrees()),
                num(poly.angle_sum()),
                num(g.polygon.circumradius),
                num(g.polygon.circumradius.cosh()),
                g.word_string(),
            ];
            Ok(csv_table(
                &[
                    "genus",
                    "sides",
                    "corner_deg",
                    "angle_sum",
                    "circumradius",
                    "cosh_circumradius",
                    "word",
                ],
                &[row],
            ))
        }
        DataFormat::Svg => {
            let tile = wonderkit::hyperbolic::Tile {
                polygon: poly.clone(),
                center: wonderkit::hyperbolic::DiscPoint::ORIGIN,
                generation: 0,
            };
            Ok(wonderkit::export::tiles_svg(&[tile], style))
        }
    }
}

fn report_csv(meshes: &[(String, &Mesh)]) -> Result<String> {
    let mut out = format!("{}\n", PolyhedronReport::CSV_HEADER);
    for (name, mesh) in meshes {
        let report = PolyhedronReport::of(name.clone(), mesh)?;
        out.push_str(&report.csv_row());
        out.push('\n');
    }
    Ok(out)
}

fn cuboct_cmd(args: &CuboctArgs, num: &dyn Fn(f64) -> String) -> Result<String> {
    let from_cube = cuboctahedron_from_cube();
    let from_oct = cuboctahedron_from_octahedron();
    match args.format {
        MeshFormat::Off => Ok(match args.from {
            CuboctSource::Cube => from_cube.to_off(num),
            CuboctSource::Octahedron => from_oct.to_off(num),
        }),
        MeshFormat::Csv => {
            let residual = similarity_residual(from_cube.vertices(), from_oct.vertices());
            let mut rows = Vec::new();
            for (name, mesh) in [("cube", &from_cube), ("octahedron", &from_oct)] {
                let r = PolyhedronReport::of(name, mesh)?;
                let count = |k: usize| r.face_histogram.get(&k).copied().unwrap_or(0).to_string();
                rows.push(vec![
                    r.name.clone(),
                    r.vertices.to_string(),
                    r.edges.to_string(),
                    r.faces.to_string(),
                    r.euler_characteristic.to_string(),
                    count(3),
                    count(4),
                    num(residual),
                ]);
            }
            Ok(csv_table(
                &[
                    "source",
                    "V",
                    "E",
                    "F",
                    "chi",
                    "triangles",
                    "squares",
                    "residual",
                ],
                &rows,
            ))
        }
    }
}

fn link_cmd(args: &LinkArgs, num: &dyn Fn(f64) -> String) -> Result<String> {
    let components = match args.config {
        LinkConfig::Borromean => borromean_rings(args.samples)?.to_vec(),
        LinkConfig::Hopf => hopf_link(args.samples)?.to_vec(),
    };
    let mut rows = Vec::new();
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            let (a, b) = (&components[i], &components[j]);
            let report = link_report(a, b).with_context(|| format!("components {i} and {j}"))?;
            rows.push(vec![
                format!("{i}-{j}"),
                report.crossings.linking_number.to_string(),
                report.gauss.linking_number.to_string(),
                num(report.gauss.raw),
                num(min_distance(a, b)),
            ]);
        }
    }
    Ok(csv_table(
        &["pair", "crossings", "gauss", "gauss_raw", "min_distance"],
        &rows,
    ))
}

fn yinyang_cmd(args: &YinYangArgs, style: &RenderStyle) -> Result<String> {
    let figure = yin_yang(args.radius)?;
    if args.samples == 0 {
        bail!("at least one sample is needed");
    }
    match args.format {
        DataFormat::Csv => {
            let num = |x: f64| style.number_format.format(x);
            let row = vec![
                num(args.radius),
                num(figure.divider_length()),
                num(std::f64::consts::PI * args.radius),
            ];
            Ok(csv_table(
                &["radius", "divider_length", "half_circumference"],
                &[row],
            ))
        }
        DataFormat::Svg => {
            let r = args.radius;
            let mut svg = Svg::new([-1.05 * r, -1.05 * r, 2.1 * r, 2.1 * r], *style);
            svg.circle(Vec2::ZERO, r, INK);
            let divider = figure
                .divider
                .clone()
                .with_resolution(2 * args.samples)
                .sample();
            svg.polyline(&divider, false, INK);
            for side in [-1.0, 1.0] {
                svg.circle(Vec2::new(side * r / 2.0, 0.0), r / 8.0, INK);
            }
            Ok(svg.finish())
        }
    }
}
