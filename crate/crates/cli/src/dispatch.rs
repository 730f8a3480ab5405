//! Command-line dispatch: argument parsing, handlers, report assembly,
//! and exit codes (0 success, 2 precondition or parse failure, 1 internal
//! failure).

use std::fmt;
use std::fmt::Write as _;
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use stargeo::algebra::CycloField;
use stargeo::classify::{
    build_case1, build_collinear, build_extremal, build_fermat, case1_frame,
    classify_three, component_table, configuration_at, seeded_case1_params,
    seeded_intermediate_params, ComponentKind, ComponentLabel, ExtremalCase,
};
use stargeo::configspace::{dim_report, extend_candidates, is_suited, restriction_dim};
use stargeo::geometry::{Hyperplane, Hypersurface, ProjPoint};
use stargeo::starpoint::{is_star_point, polar_hypersurface, star_points_on_line, star_via_polar};

use crate::battery::run_battery;
use crate::text::{self, TextError};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Anything a command handler can fail with.
#[derive(Debug)]
pub enum CliError {
    Text(TextError),
    Core(stargeo::Error),
    Io { path: String, message: String },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Text(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<TextError> for CliError {
    fn from(e: TextError) -> Self {
        match e {
            TextError::Core(core) => CliError::Core(core),
            other => CliError::Text(other),
        }
    }
}

impl From<stargeo::Error> for CliError {
    fn from(e: stargeo::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(stargeo::Error::Assertion(_)) => 1,
            CliError::Text(TextError::Triple {
                source: stargeo::Error::Assertion(_),
                ..
            }) => 1,
            _ => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            _ if self.exit_code() == 1 => "internal",
            CliError::Text(TextError::Syntax { .. }) => "parse",
            CliError::Text(_) => "input",
            CliError::Core(_) => "precondition",
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
        }
    }
}

// ---------------------------------------------------------------------------
// Command grammar
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "stargeo",
    version,
    about = "Exact star-point computations on smooth projective hypersurfaces"
)]
struct Cli {
    /// Emit a structured JSON report instead of the human summary.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for generated members and randomized witnesses (default 0, or
    /// the STARGEO_SEED environment variable).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cyclotomic conductor n: inline scalars live in Q(zeta_n).
    #[arg(long, global = true)]
    field: Option<u32>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Star-point tests against a polynomial file
    Star {
        #[command(subcommand)]
        sub: StarCmd,
    },
    /// Enumerate the star points of the degree-d diagonal hypersurface in P^N
    Fermat { d: u32, n: usize },
    /// Linear systems attached to a configuration file
    Config {
        #[command(subcommand)]
        sub: ConfigCmd,
    },
    /// Classify a three-triple configuration file into its component
    Classify3 { file: String },
    /// Tabulate the three-point components for degree d in P^N
    Components { d: u32, n: usize },
    /// Construct certified members of the implemented families
    Build {
        #[command(subcommand)]
        sub: BuildCmd,
    },
    /// Run the full check battery
    Selftest,
}

#[derive(Subcommand)]
enum StarCmd {
    /// Test whether a point of the hypersurface is a star point
    Check { file: String, point: String },
    /// Census of star points along a line (two points joined by ';')
    Line { file: String, line: String },
    /// Polar-hypersurface star test at a point
    Polar { file: String, point: String },
}

#[derive(Subcommand)]
enum ConfigCmd {
    /// Projective dimension of the attached linear system
    Dim { file: String },
    /// Search for a smooth suited member through the configuration
    Suited { file: String },
    /// Dimension of the system restricted to a hyperplane (a linear form)
    Restrict { file: String, plane: String },
    /// Cones extending the configuration in a new plane at a new vertex
    Extend {
        file: String,
        plane: String,
        point: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    /// Independent tangent planes X3, X4, X5
    Indep,
    /// Dependent tangent planes X3, X4, X4 - X3
    Dep,
}

#[derive(Subcommand)]
enum BuildCmd {
    /// The diagonal member with its full star-point set
    Fermat { d: u32, n: usize },
    /// A member with d collinear star points on a fixed line
    Collinear {
        d: u32,
        #[arg(default_value_t = 3)]
        n: usize,
    },
    /// A one-parameter member for a root of unity t (t^d = 1 or t^(d-1) = 1)
    Case1 { d: u32, n: usize, t: String },
    /// A member with one mutually incident pair among three star points
    Intermediate { d: u32, n: usize },
    /// A fully incident member with independent or dependent tangent planes
    Extremal { d: u32, n: usize, case: CaseArg },
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// What a handler produces: a human rendering, a JSON payload, and an
/// exit code (almost always 0; `selftest` reports failures through it).
struct Outcome {
    human: String,
    json: Value,
    code: i32,
}

fn ok(human: String, json: Value) -> Result<Outcome, CliError> {
    Ok(Outcome {
        human,
        json,
        code: 0,
    })
}

/// Parses `argv` (including the program name), runs the command, and
/// returns `(exit code, stdout, stderr)`.
pub fn run(argv: &[String]) -> (i32, String, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                    (0, rendered, String::new())
                }
                _ => (2, String::new(), rendered),
            };
        }
    };
    let seed = match resolve_seed(cli.seed) {
        Ok(s) => s,
        Err(msg) => return (2, String::new(), format!("error: {msg}\n")),
    };
    let command_echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    let started = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| dispatch(&cli, seed)));
    let elapsed_ms = started.elapsed().as_millis();
    match outcome {
        Ok(Ok(out)) => {
            if cli.json {
                (out.code, render_json(&command_echo, seed, out.json), String::new())
            } else {
                let mut human = out.human;
                if !human.ends_with('\n') {
                    human.push('\n');
                }
                let _ = writeln!(human, "elapsed: {elapsed_ms}ms");
                (out.code, human, String::new())
            }
        }
        Ok(Err(e)) => {
            let payload = json!({
                "error": { "kind": e.kind(), "message": e.to_string() },
            });
            let stdout = if cli.json {
                render_json(&command_echo, seed, payload)
            } else {
                String::new()
            };
            (e.exit_code(), stdout, format!("error: {e}\n"))
        }
        Err(panic_payload) => {
            let msg = panic_message(&panic_payload);
            let payload = json!({
                "error": { "kind": "internal", "message": msg },
            });
            let stdout = if cli.json {
                render_json(&command_echo, seed, payload)
            } else {
                String::new()
            };
            (1, stdout, format!("internal error: {msg}\n"))
        }
    }
}

fn panic_message(payload: &(dyn std::any::Any + Send)) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        String::from("unexpected panic")
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("STARGEO_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("STARGEO_SEED is not an unsigned integer: '{text}'")),
        Err(_) => Ok(0),
    }
}

fn render_json(command: &[String], seed: u64, payload: Value) -> String {
    let mut map = Map::new();
    map.insert(String::from("schema"), json!(1));
    map.insert(String::from("command"), json!(command));
    map.insert(String::from("seed"), json!(seed));
    if let Value::Object(fields) = payload {
        for (k, v) in fields {
            map.insert(k, v);
        }
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(map))
        .expect("reports serialize");
    out.push('\n');
    out
}

fn dispatch(cli: &Cli, seed: u64) -> Result<Outcome, CliError> {
    match &cli.cmd {
        Cmd::Star { sub } => match sub {
            StarCmd::Check { file, point } => star_check(cli, file, point),
            StarCmd::Line { file, line } => star_line(cli, file, line),
            StarCmd::Polar { file, point } => star_polar(cli, file, point),
        },
        Cmd::Fermat { d, n } => fermat_cmd(*d, *n),
        Cmd::Config { sub } => match sub {
            ConfigCmd::Dim { file } => config_dim(cli, file),
            ConfigCmd::Suited { file } => config_suited(cli, file),
            ConfigCmd::Restrict { file, plane } => config_restrict(cli, file, plane),
            ConfigCmd::Extend { file, plane, point } => config_extend(cli, file, plane, point),
        },
        Cmd::Classify3 { file } => classify3_cmd(cli, file),
        Cmd::Components { d, n } => components_cmd(*d, *n),
        Cmd::Build { sub } => match sub {
            BuildCmd::Fermat { d, n } => build_fermat_cmd(*d, *n),
            BuildCmd::Collinear { d, n } => build_collinear_cmd(*d, *n),
            BuildCmd::Case1 { d, n, t } => build_case1_cmd(cli, *d, *n, t, seed),
            BuildCmd::Intermediate { d, n } => build_intermediate_cmd(*d, *n, seed),
            BuildCmd::Extremal { d, n, case } => build_extremal_cmd(*d, *n, *case, seed),
        },
        Cmd::Selftest => selftest_cmd(seed),
    }
}

// ---------------------------------------------------------------------------
// Shared input loading
// ---------------------------------------------------------------------------

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

/// Loads a polynomial file into a hypersurface.  The variable count falls
/// back from the `vars` header to `expected_vars` (for example the length
/// of a point given alongside) to the largest index used in the file; the
/// conductor falls back from `--field` to the `field` header to 1.
fn load_hypersurface(
    path: &str,
    field_flag: Option<u32>,
    expected_vars: Option<usize>,
    extra_texts: &[&str],
) -> Result<(CycloField, Hypersurface), CliError> {
    let raw = read_file(path)?;
    let pf = text::split_poly_file(&raw)?;
    let mut texts: Vec<&str> = vec![&pf.body];
    texts.extend_from_slice(extra_texts);
    let conductor = text::resolve_conductor(field_flag, pf.conductor, &texts)?;
    let field = CycloField::new(conductor)?;
    let nvars = pf
        .vars
        .or(expected_vars)
        .or_else(|| text::infer_vars(&pf.body))
        .ok_or_else(|| CliError::Usage(String::from("cannot infer the variable count")))?;
    if let (Some(declared), Some(expected)) = (pf.vars, expected_vars) {
        if declared != expected {
            return Err(CliError::Usage(format!(
                "the file declares {declared} variables but the given coordinates need {expected}"
            )));
        }
    }
    let form = text::parse_form(&field, nvars, &pf.body)?;
    let x = Hypersurface::new(form)?;
    Ok((field, x))
}

fn coordinate_count(point_text: &str) -> usize {
    point_text.split(':').count()
}

fn verdict_json(v: &stargeo::starpoint::StarVerdict, degree: usize) -> Value {
    json!({
        "isStar": v.is_star,
        "multiplicity": v.multiplicity,
        "degree": degree,
        "tangent": v.tangent.linear_form().to_text(),
        "chartPivot": v.tangent.pivot_index(),
        "coneEquation": v.cone_equation.to_text(),
        "goodCone": v.good_cone.to_string(),
    })
}

fn kv(out: &mut String, key: &str, value: impl fmt::Display) {
    let _ = writeln!(out, "{key}: {value}");
}

// ---------------------------------------------------------------------------
// star ...
// ---------------------------------------------------------------------------

fn star_check(cli: &Cli, file: &str, point_text: &str) -> Result<Outcome, CliError> {
    let nvars = coordinate_count(point_text);
    let (field, x) = load_hypersurface(file, cli.field, Some(nvars), &[point_text])?;
    let p = text::parse_point(&field, point_text)?;
    let v = is_star_point(&x, &p)?;
    let mut human = String::new();
    kv(&mut human, "point", text::point_to_text(&p));
    kv(&mut human, "isStar", v.is_star);
    kv(
        &mut human,
        "multiplicity",
        format!("{} (degree {})", v.multiplicity, x.degree()),
    );
    kv(&mut human, "tangent", v.tangent.linear_form().to_text());
    kv(
        &mut human,
        "coneEquation",
        format!(
            "{} (chart without X{})",
            v.cone_equation.to_text(),
            v.tangent.pivot_index()
        ),
    );
    kv(&mut human, "goodCone", &v.good_cone);
    let degree = x.degree();
    let payload = json!({
        "point": text::point_to_text(&p),
        "verdict": verdict_json(&v, degree),
    });
    ok(human, payload)
}

fn star_line(cli: &Cli, file: &str, line_text: &str) -> Result<Outcome, CliError> {
    let first = line_text.split(';').next().unwrap_or(line_text);
    let nvars = coordinate_count(first);
    let (field, x) = load_hypersurface(file, cli.field, Some(nvars), &[line_text])?;
    let l = text::parse_line(&field, line_text)?;
    let report = star_points_on_line(&x, &l);
    let mut human = String::new();
    kv(&mut human, "line", text::line_to_text(&l));
    kv(&mut human, "lineInX", report.line_in_x);
    if report.line_in_x {
        kv(
            &mut human,
            "note",
            "the line lies inside the hypersurface; test candidate points individually",
        );
    }
    let mut rows = Vec::new();
    let mut stars = 0usize;
    for i in &report.intersections {
        let is_star = i.verdict.as_ref().map(|v| v.is_star);
        if is_star == Some(true) {
            stars += 1;
        }
        let _ = writeln!(
            human,
            "  point {}  multiplicity {}  isStar {}",
            text::point_to_text(&i.point),
            i.multiplicity,
            match is_star {
                Some(b) => b.to_string(),
                None => String::from("undetermined"),
            }
        );
        rows.push(json!({
            "point": text::point_to_text(&i.point),
            "multiplicity": i.multiplicity,
            "isStar": is_star,
        }));
    }
    kv(&mut human, "starCount", stars);
    if let Some(deg) = report.unresolved_degree {
        kv(
            &mut human,
            "unresolvedFactorDegree",
            format!("{deg} (roots outside the session field)"),
        );
    }
    let payload = json!({
        "line": text::line_to_text(&l),
        "lineInX": report.line_in_x,
        "intersections": rows,
        "starCount": stars,
        "unresolvedFactorDegree": report.unresolved_degree,
    });
    ok(human, payload)
}

fn star_polar(cli: &Cli, file: &str, point_text: &str) -> Result<Outcome, CliError> {
    let nvars = coordinate_count(point_text);
    let (field, x) = load_hypersurface(file, cli.field, Some(nvars), &[point_text])?;
    let p = text::parse_point(&field, point_text)?;
    let polar = polar_hypersurface(&x, &p)?;
    let via = star_via_polar(&x, &p)?;
    let direct = is_star_point(&x, &p)?;
    let mut human = String::new();
    kv(&mut human, "point", text::point_to_text(&p));
    kv(&mut human, "polar", polar.equation().to_text());
    kv(&mut human, "tangentInsidePolar", via);
    kv(&mut human, "isStar", direct.is_star);
    kv(&mut human, "agree", via == direct.is_star);
    let payload = json!({
        "point": text::point_to_text(&p),
        "polar": polar.equation().to_text(),
        "tangentInsidePolar": via,
        "isStar": direct.is_star,
        "agree": via == direct.is_star,
    });
    ok(human, payload)
}

// ---------------------------------------------------------------------------
// fermat / components / classify3
// ---------------------------------------------------------------------------

fn fermat_cmd(d: u32, n: usize) -> Result<Outcome, CliError> {
    let (x, points) = build_fermat(d, n)?;
    let mut human = String::new();
    kv(&mut human, "equation", x.equation().to_text());
    kv(&mut human, "conductor", x.field().conductor());
    kv(&mut human, "starPoints", points.len());
    let mut rows = Vec::new();
    for p in &points {
        let v = is_star_point(&x, p)?;
        let _ = writeln!(
            human,
            "  {}  tangent {}",
            text::point_to_text(p),
            v.tangent.linear_form().to_text()
        );
        rows.push(json!({
            "point": text::point_to_text(p),
            "tangent": v.tangent.linear_form().to_text(),
            "multiplicity": v.multiplicity,
            "goodCone": v.good_cone.to_string(),
        }));
    }
    let payload = json!({
        "equation": x.equation().to_text(),
        "conductor": x.field().conductor(),
        "count": points.len(),
        "points": rows,
    });
    ok(human, payload)
}

fn label_json(label: &ComponentLabel) -> Value {
    let (t, order) = match &label.kind {
        ComponentKind::Vt { t, order } => (Some(text::scalar_to_text(t)), Some(*order)),
        _ => (None, None),
    };
    json!({
        "kind": label.kind.name(),
        "t": t,
        "order": order,
        "dimension": label.dimension,
        "expectedDimension": label.expected_dimension,
        "isExpected": label.is_expected,
    })
}

fn label_human(out: &mut String, label: &ComponentLabel) {
    match &label.kind {
        ComponentKind::Vt { t, order } => {
            kv(out, "component", format!("Vt(t = {}, order {})", text::scalar_to_text(t), order));
        }
        other => kv(out, "component", other.name()),
    }
    kv(out, "dimension", label.dimension);
    kv(out, "expectedDimension", label.expected_dimension);
    kv(out, "isExpected", label.is_expected);
}

fn classify3_cmd(cli: &Cli, file: &str) -> Result<Outcome, CliError> {
    let raw = read_file(file)?;
    let (header, config) = text::parse_config(&raw, cli.field)?;
    let label = classify_three(&config)?;
    let mut human = String::new();
    kv(
        &mut human,
        "session",
        format!(
            "degree {} in P^{} over conductor {}",
            header.degree, header.ambient, header.conductor
        ),
    );
    label_human(&mut human, &label);
    let payload = json!({
        "ambient": header.ambient,
        "degree": header.degree,
        "conductor": header.conductor,
        "label": label_json(&label),
    });
    ok(human, payload)
}

fn components_cmd(d: u32, n: usize) -> Result<Outcome, CliError> {
    let table = component_table(d, n)?;
    let mut human = String::new();
    let _ = writeln!(
        human,
        "{} components for degree {} in P^{}",
        table.len(),
        d,
        n
    );
    let _ = writeln!(
        human,
        "{:<14} {:<16} {:>5} {:>5} {:>9} {}",
        "kind", "t", "order", "dim", "expected", "flag"
    );
    let mut rows = Vec::new();
    for label in &table {
        let (t_text, order_text) = match &label.kind {
            ComponentKind::Vt { t, order } => {
                (text::scalar_to_text(t), order.to_string())
            }
            _ => (String::from("-"), String::from("-")),
        };
        let _ = writeln!(
            human,
            "{:<14} {:<16} {:>5} {:>5} {:>9} {}",
            label.kind.name(),
            t_text,
            order_text,
            label.dimension,
            label.expected_dimension,
            if label.is_expected { "*" } else { "" }
        );
        rows.push(label_json(label));
    }
    kv(
        &mut human,
        "note",
        "dimensions per closed formula; irreducibility is not checked",
    );
    let payload = json!({
        "degree": d,
        "ambient": n,
        "count": table.len(),
        "components": rows,
        "note": "dimensions per closed formula; irreducibility is not checked",
    });
    ok(human, payload)
}

// ---------------------------------------------------------------------------
// config ...
// ---------------------------------------------------------------------------

fn load_config(
    cli: &Cli,
    file: &str,
) -> Result<(text::SessionHeader, stargeo::configspace::Configuration), CliError> {
    let raw = read_file(file)?;
    Ok(text::parse_config(&raw, cli.field)?)
}

fn config_summary(human: &mut String, header: &text::SessionHeader, triples: usize) {
    kv(
        human,
        "session",
        format!(
            "degree {} in P^{} over conductor {}, {} triples",
            header.degree, header.ambient, header.conductor, triples
        ),
    );
}

fn config_dim(cli: &Cli, file: &str) -> Result<Outcome, CliError> {
    let (header, config) = load_config(cli, file)?;
    let report = dim_report(&config);
    // Ordered pairs (i, j), 1-based, with vertex i on the plane of triple j.
    let mut incident: Vec<(usize, usize)> = Vec::new();
    for i in 0..config.len() {
        for j in 0..config.len() {
            if i != j && config.incidence(i, j) {
                incident.push((i + 1, j + 1));
            }
        }
    }
    let mut human = String::new();
    config_summary(&mut human, &header, config.len());
    kv(&mut human, "generalPosition", config.general_position());
    if !incident.is_empty() {
        let listed: Vec<String> = incident
            .iter()
            .map(|(i, j)| format!("vertex {i} on plane {j}"))
            .collect();
        kv(&mut human, "incidence", listed.join(", "));
    }
    kv(&mut human, "projectiveDim", report.projective_dim);
    kv(&mut human, "suitedValue", report.expected);
    kv(&mut human, "matches", report.matches);
    let payload = json!({
        "triples": config.len(),
        "generalPosition": config.general_position(),
        "incidence": incident
            .iter()
            .map(|(i, j)| json!({ "vertex": i, "plane": j }))
            .collect::<Vec<_>>(),
        "projectiveDim": report.projective_dim,
        "suitedValue": report.expected,
        "matches": report.matches,
    });
    ok(human, payload)
}

fn config_suited(cli: &Cli, file: &str) -> Result<Outcome, CliError> {
    let (header, config) = load_config(cli, file)?;
    let report = is_suited(&config)?;
    let mut human = String::new();
    config_summary(&mut human, &header, config.len());
    kv(&mut human, "suited", report.suited);
    if let Some(w) = &report.witness {
        kv(&mut human, "witness", w.to_text());
    }
    kv(&mut human, "witnessSeed", report.seed);
    let payload = json!({
        "triples": config.len(),
        "suited": report.suited,
        "witness": report.witness.as_ref().map(|w| w.to_text()),
        "witnessSeed": report.seed,
    });
    ok(human, payload)
}

fn config_restrict(cli: &Cli, file: &str, plane_text: &str) -> Result<Outcome, CliError> {
    let (header, config) = load_config(cli, file)?;
    let field = config.field().clone();
    let plane = text::parse_hyperplane(&field, header.ambient + 1, plane_text)?;
    let report = restriction_dim(&config, &plane)?;
    let mut human = String::new();
    config_summary(&mut human, &header, config.len());
    kv(&mut human, "plane", plane.linear_form().to_text());
    kv(&mut human, "restrictionDim", report.dim);
    kv(&mut human, "suitedValue", report.expected);
    kv(&mut human, "matches", report.matches);
    kv(&mut human, "containsProductSystem", report.contains_product_system);
    let payload = json!({
        "plane": plane.linear_form().to_text(),
        "restrictionDim": report.dim,
        "suitedValue": report.expected,
        "matches": report.matches,
        "containsProductSystem": report.contains_product_system,
    });
    ok(human, payload)
}

fn config_extend(
    cli: &Cli,
    file: &str,
    plane_text: &str,
    point_text: &str,
) -> Result<Outcome, CliError> {
    let (header, config) = load_config(cli, file)?;
    let field = config.field().clone();
    let plane = text::parse_hyperplane(&field, header.ambient + 1, plane_text)?;
    let point = text::parse_point(&field, point_text)?;
    let candidates = extend_candidates(&config, &plane, &point)?;
    let mut human = String::new();
    config_summary(&mut human, &header, config.len());
    kv(&mut human, "plane", plane.linear_form().to_text());
    kv(&mut human, "vertex", text::point_to_text(&point));
    kv(&mut human, "candidates", candidates.len());
    let mut rows = Vec::new();
    for c in &candidates {
        let _ = writeln!(human, "  {}  [{}]", c.form.to_text(), c.verdict);
        rows.push(json!({
            "cone": c.form.to_text(),
            "verdict": c.verdict.to_string(),
        }));
    }
    if candidates.is_empty() {
        kv(
            &mut human,
            "note",
            "no cone in the plane extends the configuration at this vertex",
        );
    }
    let payload = json!({
        "plane": plane.linear_form().to_text(),
        "vertex": text::point_to_text(&point),
        "chartPivot": plane.pivot_index(),
        "candidates": rows,
    });
    ok(human, payload)
}

// ---------------------------------------------------------------------------
// build ...
// ---------------------------------------------------------------------------

fn member_rows(
    human: &mut String,
    x: &Hypersurface,
    points: &[ProjPoint],
    planes: &[Hyperplane],
) -> Result<Vec<Value>, CliError> {
    let mut rows = Vec::new();
    for (p, h) in points.iter().zip(planes.iter()) {
        let v = is_star_point(x, p)?;
        if !v.is_star || v.tangent != *h {
            return Err(CliError::Core(stargeo::Error::Assertion(String::from(
                "a constructed member lost a prescribed star point",
            ))));
        }
        let _ = writeln!(
            human,
            "  star {}  tangent {}",
            text::point_to_text(p),
            h.linear_form().to_text()
        );
        rows.push(json!({
            "point": text::point_to_text(p),
            "tangent": h.linear_form().to_text(),
            "goodCone": v.good_cone.to_string(),
        }));
    }
    Ok(rows)
}

fn build_fermat_cmd(d: u32, n: usize) -> Result<Outcome, CliError> {
    let (x, points) = build_fermat(d, n)?;
    let planes: Vec<Hyperplane> = points
        .iter()
        .map(|p| is_star_point(&x, p).map(|v| v.tangent))
        .collect::<Result<_, _>>()?;
    let mut human = String::new();
    kv(&mut human, "equation", x.equation().to_text());
    kv(&mut human, "conductor", x.field().conductor());
    kv(&mut human, "starPoints", points.len());
    let rows = member_rows(&mut human, &x, &points, &planes)?;
    let payload = json!({
        "equation": x.equation().to_text(),
        "conductor": x.field().conductor(),
        "points": rows,
    });
    ok(human, payload)
}

fn build_collinear_cmd(d: u32, n: usize) -> Result<Outcome, CliError> {
    if n != 3 {
        return Err(CliError::Usage(String::from(
            "collinear members are built in P^3",
        )));
    }
    let field = CycloField::new(1)?;
    let (line, points, planes, c1) = crate::battery::collinear_frame(&field, d);
    let x = build_collinear(d, n, &line, &points, &planes, &c1)?;
    let mut human = String::new();
    kv(&mut human, "equation", x.equation().to_text());
    kv(&mut human, "line", text::line_to_text(&line));
    let rows = member_rows(&mut human, &x, &points, &planes)?;
    let payload = json!({
        "equation": x.equation().to_text(),
        "line": text::line_to_text(&line),
        "points": rows,
    });
    ok(human, payload)
}

fn build_case1_cmd(
    cli: &Cli,
    d: u32,
    n: usize,
    t_text: &str,
    seed: u64,
) -> Result<Outcome, CliError> {
    if d < 3 {
        return Err(CliError::Core(stargeo::Error::WrongDegree {
            expected: 3,
            found: d as usize,
        }));
    }
    let default_conductor = d * (d - 1);
    let conductor = match cli.field {
        Some(n0) => n0,
        None if text::uses_root_literal(t_text) => default_conductor,
        None => 1,
    };
    let field = CycloField::new(conductor)?;
    let t = text::parse_scalar(&field, t_text)?;
    let order = t
        .multiplicative_order(d.max(2))
        .ok_or(stargeo::Error::NotRootOfUnity)?;
    let mut last = CliError::Core(stargeo::Error::NotRootOfUnity);
    for attempt in 0..8u64 {
        let stream = seed.wrapping_add(attempt);
        let (a, g012) = seeded_case1_params(&field, d, n, order, stream);
        let x = match build_case1(d, n, &t, &a, &g012) {
            Ok(x) => x,
            Err(e) => return Err(CliError::Core(e)),
        };
        let (points, planes) = case1_frame(&t, n)?;
        let config = match configuration_at(&x, &points) {
            Ok(c) => c,
            Err(e) => {
                last = CliError::Core(e);
                continue;
            }
        };
        let label = classify_three(&config)?;
        let mut human = String::new();
        kv(&mut human, "equation", x.equation().to_text());
        kv(&mut human, "t", text::scalar_to_text(&t));
        kv(&mut human, "order", order);
        kv(&mut human, "conductor", conductor);
        kv(&mut human, "memberSeed", stream);
        let rows = member_rows(&mut human, &x, &points, &planes)?;
        label_human(&mut human, &label);
        let payload = json!({
            "equation": x.equation().to_text(),
            "t": text::scalar_to_text(&t),
            "order": order,
            "conductor": conductor,
            "memberSeed": stream,
            "points": rows,
            "label": label_json(&label),
        });
        return ok(human, payload);
    }
    Err(last)
}

fn build_intermediate_cmd(d: u32, n: usize, seed: u64) -> Result<Outcome, CliError> {
    let field = CycloField::new(1)?;
    let mut last = CliError::Core(stargeo::Error::NotSuited);
    for attempt in 0..8u64 {
        let stream = seed.wrapping_add(attempt);
        let (b, g013) = seeded_intermediate_params(&field, d, n, stream);
        let report = match stargeo::classify::build_intermediate(d, n, &b, &g013) {
            Ok(r) => r,
            Err(e) => {
                last = CliError::Core(e);
                continue;
            }
        };
        let config = match configuration_at(&report.hypersurface, &report.points) {
            Ok(c) => c,
            Err(e) => {
                last = CliError::Core(e);
                continue;
            }
        };
        let label = classify_three(&config)?;
        let mut human = String::new();
        kv(&mut human, "equation", report.hypersurface.equation().to_text());
        kv(&mut human, "memberSeed", stream);
        kv(&mut human, "familyDimension", report.dimension);
        kv(&mut human, "fiberDim", report.fiber_dim);
        let rows = member_rows(&mut human, &report.hypersurface, &report.points, &report.planes)?;
        label_human(&mut human, &label);
        let payload = json!({
            "equation": report.hypersurface.equation().to_text(),
            "memberSeed": stream,
            "familyDimension": report.dimension,
            "fiberDim": report.fiber_dim,
            "points": rows,
            "label": label_json(&label),
        });
        return ok(human, payload);
    }
    Err(last)
}

fn build_extremal_cmd(d: u32, n: usize, case: CaseArg, seed: u64) -> Result<Outcome, CliError> {
    let case = match case {
        CaseArg::Indep => ExtremalCase::Indep,
        CaseArg::Dep => ExtremalCase::Dep,
    };
    let report = build_extremal(d, n, case, seed)?;
    let config = configuration_at(&report.hypersurface, &report.points)?;
    let label = classify_three(&config)?;
    let mut human = String::new();
    kv(&mut human, "equation", report.hypersurface.equation().to_text());
    kv(
        &mut human,
        "case",
        match report.case {
            ExtremalCase::Indep => "independent tangent planes",
            ExtremalCase::Dep => "dependent tangent planes",
        },
    );
    kv(&mut human, "dimIndep", report.dim_indep);
    kv(&mut human, "dimDep", report.dim_dep);
    kv(&mut human, "offsetFormulaHolds", report.relation_holds);
    let rows = member_rows(&mut human, &report.hypersurface, &report.points, &report.planes)?;
    label_human(&mut human, &label);
    let payload = json!({
        "equation": report.hypersurface.equation().to_text(),
        "case": match report.case {
            ExtremalCase::Indep => "indep",
            ExtremalCase::Dep => "dep",
        },
        "dimIndep": report.dim_indep,
        "dimDep": report.dim_dep,
        "offsetFormulaHolds": report.relation_holds,
        "points": rows,
        "label": label_json(&label),
    });
    ok(human, payload)
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

fn selftest_cmd(seed: u64) -> Result<Outcome, CliError> {
    let items = run_battery(seed);
    let mut human = String::new();
    let mut rows = Vec::new();
    let mut failed = 0usize;
    for item in &items {
        if !item.pass {
            failed += 1;
        }
        let _ = writeln!(
            human,
            "{}  {:<24} {}",
            if item.pass { "ok  " } else { "FAIL" },
            item.name,
            item.detail
        );
        rows.push(json!({
            "name": item.name,
            "pass": item.pass,
            "detail": item.detail,
        }));
    }
    let _ = writeln!(human, "passed {}/{}", items.len() - failed, items.len());
    let payload = json!({
        "checks": rows,
        "passed": items.len() - failed,
        "failed": failed,
    });
    Ok(Outcome {
        human,
        json: payload,
        code: if failed == 0 { 0 } else { 1 },
    })
}

// ---------------------------------------------------------------------------
// helpers shared with the battery
// ---------------------------------------------------------------------------

/// Re-exported so integration tests can drive commands in-process.
pub fn run_from_strs(args: &[&str]) -> (i32, String, String) {
    let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    run(&owned)
}
