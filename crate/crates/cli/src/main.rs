/// `println!` that tolerates a closed stdout, e.g. when piped into `head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

mod error;
mod svg;

use clap::{Parser, Subcommand, ValueEnum};
use error::{read, write, CliError};
use radii_atlas::acceptance::{self, Level};
use radii_atlas::diagram::{
    check_2d_projection, classify, f_map, fmt12, sample_boundary, synthesize_witness, DiagramError, DiagramPoint,
    Ineq, CLASSIFY_TOL,
};
use radii_atlas::families::{construct, expected_radii, min_max_companions, FamilySpec};
use radii_atlas::geometry::{ArcPolygon, Point};
use radii_atlas::oracle::{brute_radii, sample_boundary_points};
use radii_atlas::radii::{compute_radii, verify_certificates};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "radii-atlas", version, about = "Radii of planar convex bodies and the (r, w, D, R) diagram")]
struct Cli {
    /// Worker threads for sampling and verification (default: logical cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Radii and optimality certificates of a body given as JSON.
    Radii {
        #[arg(long)]
        body: PathBuf,
        /// Also run the brute-force point-cloud oracle with N boundary samples.
        #[arg(long, value_name = "N")]
        oracle: Option<usize>,
    },
    /// Builds a named family member, e.g. `bpen:r=0.7,gamma=1.0`.
    Family {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_name = "FILE.svg")]
        render: Option<PathBuf>,
        /// Also build the minimal and maximal bodies with the same radii.
        #[arg(long)]
        companions: bool,
        /// Rotation in radians applied after construction.
        #[arg(long, default_value_t = 0.0)]
        rotate: f64,
        /// Translation applied after the rotation.
        #[arg(long, num_args = 2, value_names = ["DX", "DY"], allow_negative_numbers = true)]
        translate: Option<Vec<f64>>,
        #[command(flatten)]
        colors: Colors,
    },
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Checks a point against the planar (r, D, R) diagram.
    Project2d {
        r: f64,
        #[arg(allow_negative_numbers = true)]
        d: f64,
        #[arg(long = "R", default_value_t = 1.0)]
        big_r: f64,
    },
    /// Runs the acceptance suite.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Full)]
        level: LevelArg,
        #[arg(long, default_value_t = acceptance::Config::default().seed)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum DiagramCmd {
    /// Diagram coordinates and skeleton label of a body.
    Map {
        #[arg(long)]
        body: PathBuf,
    },
    /// Slacks of the nine inequalities at a point; exits 1 if the point is outside.
    Check { x: f64, y: f64, z: f64 },
    Classify {
        x: f64,
        y: f64,
        z: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Samples the boundary surface into a CSV mesh.
    Sample {
        #[arg(long, default_value_t = 16)]
        resolution: usize,
        #[arg(long, value_name = "FILE.csv")]
        out: PathBuf,
        /// Also write the triangulation as Wavefront OBJ.
        #[arg(long, value_name = "FILE.obj")]
        obj: Option<PathBuf>,
    },
    /// Builds a body whose diagram coordinates are (X, Y, Z).
    Witness {
        x: f64,
        y: f64,
        z: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Smoke,
    Full,
}

#[derive(clap::Args, Debug)]
struct Colors {
    #[arg(long, default_value = "green")]
    inball_color: String,
    #[arg(long, default_value = "blue")]
    circumball_color: String,
    #[arg(long, default_value = "orange")]
    width_color: String,
    #[arg(long, default_value = "red")]
    diameter_color: String,
}

/// Rounds every number in `v` to 12 significant digits.
fn round12(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => fmt12(x).parse::<f64>().map_or(Value::Number(n), |y| json!(y)),
            _ => Value::Number(n),
        },
        Value::Array(a) => Value::Array(a.into_iter().map(round12).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round12(v))).collect()),
        other => other,
    }
}

fn print_json(v: Value) {
    say!("{}", serde_json::to_string_pretty(&round12(v)).expect("json values serialize"));
}

fn load_body(path: &Path) -> Result<ArcPolygon, CliError> {
    ArcPolygon::from_json(&read(path)?).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn env_tol() -> Result<f64, CliError> {
    match std::env::var("RADII_ATLAS_TOL") {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| *t >= 0.0 && t.is_finite())
            .ok_or_else(|| CliError::Domain(format!("RADII_ATLAS_TOL must be a nonnegative number, got `{s}`"))),
        Err(_) => Ok(CLASSIFY_TOL),
    }
}

fn point_json(p: Point) -> Value {
    json!([p.x, p.y])
}

fn radii_json(body: &ArcPolygon) -> Result<Value, CliError> {
    let report = compute_radii(body).map_err(CliError::domain)?;
    let t = &report.radii;
    let check = verify_certificates(body, t, report.in_cert.as_ref(), &report.circ_cert);
    Ok(json!({
        "r": t.inradius,
        "w": t.width,
        "D": t.diameter,
        "R": t.circumradius,
        "incenter": point_json(t.incenter),
        "circumcenter": point_json(t.circumcenter),
        "width_direction": t.width_dir.theta(),
        "diameter_pair": [point_json(t.diam_pair.0), point_json(t.diam_pair.1)],
        "certificates": {
            "inball": report.in_cert,
            "circumball": report.circ_cert,
            "check": check,
        },
    }))
}

fn cmd_radii(body: &Path, oracle: Option<usize>) -> Result<(), CliError> {
    let k = load_body(body)?;
    let mut out = radii_json(&k)?;
    if let Some(n) = oracle {
        let cloud = sample_boundary_points(&k, n).map_err(CliError::domain)?;
        let t = brute_radii(&cloud).map_err(CliError::domain)?;
        out["oracle"] = json!({
            "samples": cloud.points.len(),
            "sagitta": cloud.sagitta,
            "r": t.inradius, "w": t.width, "D": t.diameter, "R": t.circumradius,
        });
    }
    print_json(out);
    Ok(())
}

fn cmd_family(
    spec: &str,
    out: Option<&Path>,
    render: Option<&Path>,
    companions: bool,
    rotate: f64,
    translate: Option<&[f64]>,
    colors: &Colors,
) -> Result<(), CliError> {
    let spec: FamilySpec = spec.parse().map_err(CliError::domain)?;
    spec.validate().map_err(CliError::domain)?;
    let shift = translate.map_or(Point::ORIGIN, |v| Point::new(v[0], v[1]));
    let place = |k: ArcPolygon| -> Result<ArcPolygon, CliError> {
        k.rotate(rotate).and_then(|k| k.translate(shift)).map_err(CliError::domain)
    };
    let body = place(construct(&spec).map_err(CliError::domain)?)?;
    let report = compute_radii(&body).map_err(CliError::domain)?;
    let expected = expected_radii(&spec).map_err(CliError::domain)?;

    say!("{spec}");
    say!("{:<4} {:>20} {:>20} {:>10}", "", "expected", "computed", "gap");
    for (name, e, c) in ["r", "w", "D", "R"]
        .into_iter()
        .zip(expected.values())
        .zip(report.radii.values())
        .map(|((n, e), c)| (n, e, c))
    {
        match e {
            Some(e) => say!("{name:<4} {:>20} {:>20} {:>10.1e}", fmt12(e), fmt12(c), (e - c).abs()),
            None => say!("{name:<4} {:>20} {:>20} {:>10}", "-", fmt12(c), "-"),
        }
    }

    if let Some(path) = out {
        write(path, &body.to_json())?;
    }
    if let Some(path) = render {
        let style = svg::Style {
            inball: colors.inball_color.clone(),
            circumball: colors.circumball_color.clone(),
            width: colors.width_color.clone(),
            diameter: colors.diameter_color.clone(),
            ..svg::Style::default()
        };
        write(path, &svg::render(&body, &report.radii, &style).map_err(CliError::Domain)?)?;
    }
    if companions {
        let c = min_max_companions(&spec).map_err(CliError::domain)?;
        if let Some(note) = &c.note {
            say!("companions: {note}");
        }
        for (tag, k) in [("min", c.min), ("max", c.max)] {
            let Some(k) = k else { continue };
            let k = place(k)?;
            let t = compute_radii(&k).map_err(CliError::domain)?.radii;
            say!(
                "{tag} companion: r={} w={} D={} R={} area={}",
                fmt12(t.inradius),
                fmt12(t.width),
                fmt12(t.diameter),
                fmt12(t.circumradius),
                fmt12(k.area())
            );
            if let Some(path) = out {
                write(&path.with_extension(format!("{tag}.json")), &k.to_json())?;
            }
        }
    }
    Ok(())
}

fn slack_json(p: &DiagramPoint) -> Value {
    let s = p.slacks();
    let mut m = serde_json::Map::new();
    for ineq in Ineq::ALL {
        m.insert(ineq.to_string(), json!(s.slacks.get(ineq)));
    }
    json!({ "slacks": m, "chain_ok": s.chain_ok })
}

fn cmd_diagram(cmd: &DiagramCmd) -> Result<(), CliError> {
    match cmd {
        DiagramCmd::Map { body } => {
            let tol = env_tol()?;
            let p = f_map(&load_body(body)?).map_err(CliError::domain)?;
            let mut v = slack_json(&p);
            v["point"] = json!(p.as_array());
            v["label"] = json!(classify(&p, tol).to_string());
            print_json(v);
        }
        DiagramCmd::Check { x, y, z } => {
            let p = DiagramPoint::new(*x, *y, *z);
            let violated = p.slacks().slacks.violated(radii_atlas::diagram::MEMBER_TOL);
            let mut v = slack_json(&p);
            v["member"] = json!(violated.is_empty());
            print_json(v);
            if !violated.is_empty() {
                let names: Vec<String> = violated.iter().map(|i| i.to_string()).collect();
                return Err(CliError::Domain(format!("point violates {}", names.join(", "))));
            }
        }
        DiagramCmd::Classify { x, y, z, tol } => {
            let tol = match tol {
                Some(t) if *t >= 0.0 => *t,
                Some(t) => return Err(CliError::Domain(format!("--tol must be nonnegative, got {t}"))),
                None => env_tol()?,
            };
            say!("{}", classify(&DiagramPoint::new(*x, *y, *z), tol));
        }
        DiagramCmd::Sample { resolution, out, obj } => {
            if *resolution < 2 {
                return Err(CliError::Domain("--resolution must be at least 2".into()));
            }
            let mesh = sample_boundary(*resolution).map_err(CliError::domain)?;
            write(out, &mesh.to_csv())?;
            if let Some(path) = obj {
                write(path, &mesh.to_obj())?;
            }
            say!("{} points, {} triangles", mesh.points.len(), mesh.triangles.len());
        }
        DiagramCmd::Witness { x, y, z, out } => {
            let target = DiagramPoint::new(*x, *y, *z);
            let body = synthesize_witness(&target, 1e-6).map_err(|e| match e {
                DiagramError::NonMember(..) | DiagramError::Unsupported(..) => CliError::domain(e),
                other => CliError::Domain(format!("witness synthesis failed: {other}")),
            })?;
            let p = f_map(&body).map_err(CliError::domain)?;
            write(out, &body.to_json())?;
            print_json(json!({ "target": target.as_array(), "achieved": p.as_array(), "error": p.dist_inf(&target) }));
        }
    }
    Ok(())
}

fn cmd_project2d(r: f64, d: f64, big_r: f64) -> Result<(), CliError> {
    if !(big_r > 0.0) {
        return Err(CliError::Domain(format!("--R must be positive, got {big_r}")));
    }
    let s = check_2d_projection(r, d, big_r);
    let member = s.iter().all(|&x| x >= -1e-9);
    print_json(json!({
        "D<=2R": s[0], "r+R<=D": s[1], "sqrt3R<=D": s[2], "r>=r_min(D)": s[3], "member": member,
    }));
    if member {
        Ok(())
    } else {
        Err(CliError::Domain("point lies outside the (r, D, R) diagram".into()))
    }
}

fn cmd_verify(level: LevelArg, seed: u64) -> Result<(), CliError> {
    let level = match level {
        LevelArg::Smoke => Level::Smoke,
        LevelArg::Full => Level::Full,
    };
    let outcomes = acceptance::run(acceptance::Config { level, seed }, |o| say!("{}", o.line()));
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id.to_string()).collect();
    say!("{} of {} criteria passed", outcomes.len() - failed.len(), outcomes.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Domain(format!("failed criteria: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(CliError::Domain("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(CliError::domain)?;
    }
    match &cli.command {
        Command::Radii { body, oracle } => cmd_radii(body, *oracle),
        Command::Family { spec, out, render, companions, rotate, translate, colors } => cmd_family(
            spec,
            out.as_deref(),
            render.as_deref(),
            *companions,
            *rotate,
            translate.as_deref(),
            colors,
        ),
        Command::Diagram(cmd) => cmd_diagram(cmd),
        Command::Project2d { r, d, big_r } => cmd_project2d(*r, *d, *big_r),
        Command::Verify { level, seed } => cmd_verify(*level, *seed),
    }
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
