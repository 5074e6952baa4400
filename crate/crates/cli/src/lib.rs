//! Command-line front end. Every subcommand renders its result into a string
//! which goes to stdout, or to the file named by `-o`.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use wonderkit::export::{write_output, ExportError, DEFAULT_DIGITS, MAX_DIGITS};
use wonderkit::space::TubeRatio;
use wonderkit::{NumberFormat, Vec3};

/// Overrides the number of significant digits in every numeric output.
pub const PRECISION_ENV: &str = "WONDERKIT_PRECISION";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wonderkit",
    version,
    about = "Compute, check and draw classic mathematical curiosities"
)]
pub struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Replace the output file if it already exists.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Harmonic and alternating harmonic series.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Curves of constant width.
    #[command(subcommand)]
    Width(WidthCommand),
    /// Extra rope needed to lift a rope around a sphere.
    Rope(RopeArgs),
    /// Sample or draw a spiral.
    Spiral(SpiralArgs),
    /// Draw an orb web.
    Web(WebArgs),
    /// Helices seen from their axis.
    #[command(subcommand)]
    Helix(HelixCommand),
    /// Spiral shells.
    #[command(subcommand)]
    Shell(ShellCommand),
    /// Tilings of the Poincaré disc.
    #[command(subcommand)]
    Tiling(TilingCommand),
    /// Regular polyhedra and the cuboctahedron.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Lift n full twists to unit quaternions.
    Belt(BeltArgs),
    /// Pairwise linking numbers of a link.
    Link(LinkArgs),
    /// Draw the yin-yang figure.
    Yinyang(YinYangArgs),
}

#[derive(Debug, Subcommand)]
pub enum SeriesCommand {
    /// Partial sum of 1 + 1/2 + 1/3 + ..., or its dyadic lower bounds.
    Harmonic(HarmonicArgs),
    /// Partial sum of 1 − 1/2 + 1/3 − ...
    Alternating(AlternatingArgs),
    /// Greedy rearrangement of the alternating series towards a target.
    Rearrange(RearrangeArgs),
}

#[derive(Debug, Args)]
pub struct HarmonicArgs {
    /// Number of terms.
    #[arg(long, default_value_t = 1000, conflicts_with = "dyadic")]
    pub terms: u64,
    /// Print S(2^m) against 1 + m/2 for m = 0..=M as CSV.
    #[arg(long, value_name = "M")]
    pub dyadic: Option<u32>,
}

#[derive(Debug, Args)]
pub struct AlternatingArgs {
    #[arg(long, default_value_t = 1000)]
    pub terms: u64,
}

#[derive(Debug, Args)]
pub struct RearrangeArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub target: f64,
    /// Stop after this many terms.
    #[arg(long, conflicts_with = "tolerance")]
    pub terms: Option<u64>,
    /// Stop at the first crossing whose term is at most this.
    #[arg(long, default_value_t = 1e-3)]
    pub tolerance: f64,
}

#[derive(Debug, Subcommand)]
pub enum WidthCommand {
    /// Reuleaux polygon widths and perimeter, or its outline.
    Reuleaux(ReuleauxArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct ReuleauxArgs {
    /// Number of vertices (odd, at least 3).
    #[arg(short, long, default_value_t = 3)]
    pub n: usize,
    #[arg(short, long, default_value_t = 1.0)]
    pub width: f64,
    #[arg(long, default_value_t = 3600)]
    pub directions: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
    pub format: DataFormat,
}

#[derive(Debug, Args)]
pub struct RopeArgs {
    /// Height of the lifted rope above the surface.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub height: f64,
    /// Sphere radius.
    #[arg(long, default_value_t = 6.371e6, allow_negative_numbers = true)]
    pub radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpiralKind {
    /// r = a·e^(bθ)
    Log,
    /// r = a + bθ
    Archimedean,
    /// r = a/θ
    Reciprocal,
}

#[derive(Debug, Args)]
pub struct SpiralArgs {
    #[arg(long, value_enum, default_value_t = SpiralKind::Log)]
    pub kind: SpiralKind,
    #[arg(short, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Growth rate; ignored by the reciprocal spiral.
    #[arg(short, default_value_t = 0.2, allow_negative_numbers = true)]
    pub b: f64,
    /// Polar angle where sampling starts [default: 0, or 0.5 for reciprocal].
    #[arg(long, allow_negative_numbers = true)]
    pub start: Option<f64>,
    #[arg(long, default_value_t = 3.0)]
    pub turns: f64,
    #[arg(long, default_value_t = 720)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Svg)]
    pub format: DataFormat,
}

#[derive(Debug, Args)]
pub struct WebArgs {
    #[arg(long, default_value_t = 24)]
    pub radials: usize,
    /// Turns of the capture spiral.
    #[arg(long, default_value_t = 12)]
    pub rings: usize,
    /// Circumradius of the frame polygon.
    #[arg(long, default_value_t = 1.0)]
    pub frame: f64,
    /// Angle between the scaffold spiral and the radials, in degrees.
    #[arg(long, default_value_t = wonderkit::planar::SCAFFOLD_ANGLE_DEGREES)]
    pub scaffold_angle: f64,
}

#[derive(Debug, Subcommand)]
pub enum HelixCommand {
    /// Project a helix onto a plane perpendicular to its axis, from an eye on the axis.
    Project(ProjectArgs),
}

#[derive(Debug, Args)]
pub struct ProjectArgs {
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Rise per radian.
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    pub pitch: f64,
    /// Distance from the eye to the image plane.
    #[arg(long, default_value_t = 1.0)]
    pub distance: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub t_min: f64,
    #[arg(long, default_value_t = 30.0, allow_negative_numbers = true)]
    pub t_max: f64,
    /// Left-handed helix.
    #[arg(long)]
    pub left: bool,
    #[arg(long, default_value_t = 720)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Svg)]
    pub format: DataFormat,
}

#[derive(Debug, Subcommand)]
pub enum ShellCommand {
    /// Find the spiral angle at which successive whorls just touch.
    Solve(SolveArgs),
    /// Tube around a logarithmic spiral, as OFF.
    Mesh(ShellMeshArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Tube radius over spiral radius: `inverse-sin`, `sin`, or a constant.
    #[arg(long, default_value = "inverse-sin", value_parser = parse_ratio)]
    pub ratio: TubeRatio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Section {
    Normal,
    Radial,
}

#[derive(Debug, Args)]
pub struct ShellMeshArgs {
    /// Spiral angle in degrees.
    #[arg(long, default_value_t = 80.0)]
    pub alpha: f64,
    #[arg(long, default_value = "0.5", value_parser = parse_ratio)]
    pub ratio: TubeRatio,
    #[arg(long, default_value_t = 3)]
    pub turns: u32,
    #[arg(long, default_value_t = 64)]
    pub samples_per_turn: usize,
    #[arg(long, default_value_t = 24)]
    pub ring_samples: usize,
    #[arg(long, value_enum, default_value_t = Section::Normal)]
    pub section: Section,
}

#[derive(Debug, Subcommand)]
pub enum TilingCommand {
    /// Spherical, Euclidean or hyperbolic.
    Classify(PairArgs),
    /// Reflect the central {n,k} polygon outwards, generation by generation.
    Generate(GenerateArgs),
    /// The regular 4p-gon whose side pairing gives a genus-p surface.
    Genus(GenusArgs),
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Sides per polygon.
    #[arg(short)]
    pub n: u32,
    /// Polygons per vertex.
    #[arg(short)]
    pub k: u32,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
    #[arg(long, default_value_t = wonderkit::hyperbolic::DEFAULT_TILE_CAP)]
    pub max_tiles: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Svg)]
    pub format: DataFormat,
}

#[derive(Debug, Args)]
pub struct GenusArgs {
    #[arg(short, long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
    pub format: DataFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeshFormat {
    Off,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum PolyCommand {
    /// Every {p,q} with V − E + F = 2, as CSV.
    Enumerate,
    /// Build a Platonic solid.
    Build(BuildArgs),
    /// Cuboctahedron by cutting the corners of a cube or an octahedron.
    Cuboct(CuboctArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// Sides per face.
    #[arg(short)]
    pub p: u32,
    /// Faces per vertex.
    #[arg(short)]
    pub q: u32,
    #[arg(long, value_enum, default_value_t = MeshFormat::Off)]
    pub format: MeshFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CuboctSource {
    Cube,
    Octahedron,
}

#[derive(Debug, Args)]
pub struct CuboctArgs {
    #[arg(long, value_enum, default_value_t = CuboctSource::Cube)]
    pub from: CuboctSource,
    /// `csv` reports both constructions and how far apart they are.
    #[arg(long, value_enum, default_value_t = MeshFormat::Off)]
    pub format: MeshFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BeltFormat {
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct BeltArgs {
    /// Number of full turns.
    #[arg(long, default_value_t = 1)]
    pub twists: u32,
    /// Rotation axis as `x,y,z`.
    #[arg(long, default_value = "0,0,1", value_parser = parse_axis)]
    pub axis: Vec3,
    /// Path samples [default: 16 per twist plus 16].
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, value_enum, default_value_t = BeltFormat::Text)]
    pub format: BeltFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LinkConfig {
    Borromean,
    Hopf,
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    #[arg(long, value_enum, default_value_t = LinkConfig::Borromean)]
    pub config: LinkConfig,
    /// Vertices per component.
    #[arg(long, default_value_t = wonderkit::topology::DEFAULT_RING_SAMPLES)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct YinYangArgs {
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Points per semicircle.
    #[arg(long, default_value_t = 180)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = DataFormat::Svg)]
    pub format: DataFormat,
}

fn parse_ratio(s: &str) -> Result<TubeRatio, String> {
    match s {
        "inverse-sin" => Ok(TubeRatio::InverseSin),
        "sin" => Ok(TubeRatio::Sin),
        _ => match s.parse::<f64>() {
            Ok(c) if c > 0.0 && c < 1.0 => Ok(TubeRatio::Constant(c)),
            Ok(c) => Err(format!("a constant ratio must lie in (0, 1), got {c}")),
            Err(_) => Err(format!(
                "expected `inverse-sin`, `sin` or a number, got `{s}`"
            )),
        },
    }
}

fn parse_axis(s: &str) -> Result<Vec3, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad axis `{s}`: {e}"))?;
    match parts.as_slice() {
        [x, y, z] if (x * x + y * y + z * z) > 0.0 && parts.iter().all(|v| v.is_finite()) => {
            Ok(Vec3::new(*x, *y, *z))
        }
        [_, _, _] => Err("axis must be a finite non-zero vector".into()),
        _ => Err(format!("expected three comma-separated numbers, got `{s}`")),
    }
}

/// Digit count from the value of `WONDERKIT_PRECISION`, if set.
pub fn parse_precision(value: Option<&str>) -> Result<NumberFormat, String> {
    let digits = match value {
        None => DEFAULT_DIGITS,
        Some(v) => v.trim().parse::<usize>().map_err(|_| {
            format!("{PRECISION_ENV} must be an integer from 1 to {MAX_DIGITS}, got `{v}`")
        })?,
    };
    NumberFormat::new(digits).map_err(|e| format!("{PRECISION_ENV}: {e}"))
}

/// Run with the process environment and standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let precision = std::env::var(PRECISION_ENV).ok();
    run_with(
        argv,
        precision.as_deref(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

pub fn run_with<I, T>(
    argv: I,
    precision: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let fmt = match parse_precision(precision) {
        Ok(fmt) => fmt,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}\n\n{}", Cli::command().render_usage());
            return EXIT_USAGE;
        }
    };

    let text = match commands::execute(&cli.command, fmt, stderr) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            return EXIT_DOMAIN;
        }
    };
    let written = match &cli.output {
        Some(path) => write_output(path, &text, cli.force),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| ExportError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if matches!(e, ExportError::Exists(_)) {
                let _ = writeln!(stderr, "pass --force to replace it");
            }
            EXIT_DOMAIN
        }
    }
}
