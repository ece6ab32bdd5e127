//! Job runner behind the `maxsurf` binary, and the mesh export formats.
//!
//! A [`JobConfig`] names a command, a datum (catalog entry or JSON file) and
//! the numeric knobs. [`run`] executes it with the pure library and returns a
//! self-describing JSON report that embeds the fully resolved configuration.
//! Exit codes: 0 on success or a passed check, 2 when a theorem check fails,
//! 1 on any input or numerical error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::duality::{check_commutation, dual, flat, sharp};
use crate::error::{Error, Result};
use crate::graph_pde::{cell_gradient, dualize, load_field, save_field, GraphKind, GridSpec, ScalarField};
use crate::lorentz::{Ambient, Tangent3};
use crate::verify::{
    krust_inequality_check, krust_pipeline, krust_pipeline_immersion, projection_report, random_directions,
    random_disk_points, resample_graph, rotation_identity_check, sample_conjugate, sample_surface,
    spacelike_mesh_check, triangulate_disk, ParamMesh, SurfaceMesh, Verdict, LEE_MESH_N,
};
use crate::weierstrass::catalog::lookup;
use crate::weierstrass::{
    build_isotropic_maximal, conjugate_curve, immerse, projection_identities, DatumKind, Immersion, IsotropicCurve,
    WeierstrassData, ISOTROPY_TOL,
};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MESH_N: usize = 64;
pub const DEFAULT_GRID_H: f64 = 0.02;
pub const DEFAULT_SAMPLES: usize = 50;
pub const DEFAULT_CURL_THRESHOLD: f64 = 1e-2;

/// Identity checks sample parameters inside this fraction of the domain radius.
const SAMPLE_FRACTION: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Sample the maximal surface `X` on the disk mesh.
    Generate,
    /// Sample the conjugate surface `X*` on the disk mesh.
    Conjugate,
    /// Apply the flat/sharp duality to an isotropic curve.
    DualizeCurve,
    /// Dualize a gridded graph through its rotated normalized gradient.
    DualizeGraph,
    /// Certify that the conjugate of a convex maximal graph is a graph.
    VerifyKrust,
    /// Check the conjugation, projection, rotation and duality identities.
    Identities,
    /// Write a mesh as a Wavefront OBJ file.
    Export,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Generate => "generate",
            Command::Conjugate => "conjugate",
            Command::DualizeCurve => "dualize-curve",
            Command::DualizeGraph => "dualize-graph",
            Command::VerifyKrust => "verify-krust",
            Command::Identities => "identities",
            Command::Export => "export",
        }
    }
}

/// A fully described job. Every knob has a default, and the resolved values
/// are echoed in the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JobConfig {
    pub command: Option<Command>,
    /// Name of a built-in datum, e.g. `plane-r0.5`.
    pub catalog: Option<String>,
    /// Path to a `WeierstrassData` JSON file.
    pub datum: Option<PathBuf>,
    /// Command input: a mesh JSON (`export`), a field stem (`dualize-graph`)
    /// or an isotropic-curve JSON (`dualize-curve`).
    pub input: Option<PathBuf>,
    /// Directory receiving `report.json` and the artifacts.
    pub out: Option<PathBuf>,
    /// Kind of the input graph for `dualize-graph`.
    pub kind: GraphKind,
    /// Run `verify-krust` on the Euclidean sharp-dual instead.
    pub dual: bool,
    pub tol: f64,
    pub mesh_n: usize,
    pub grid_h: f64,
    pub seed: u64,
    pub samples: usize,
    pub steps: usize,
    pub curl_threshold: f64,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            command: None,
            catalog: None,
            datum: None,
            input: None,
            out: None,
            kind: GraphKind::Maximal,
            dual: false,
            tol: DEFAULT_TOL,
            mesh_n: DEFAULT_MESH_N,
            grid_h: DEFAULT_GRID_H,
            seed: 0,
            samples: DEFAULT_SAMPLES,
            steps: crate::verify::DEFAULT_STEPS,
            curl_threshold: DEFAULT_CURL_THRESHOLD,
        }
    }
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!(
                    "{name} must be positive and finite, got {v}"
                )))
            }
        };
        positive("tol", self.tol)?;
        positive("grid_h", self.grid_h)?;
        positive("curl_threshold", self.curl_threshold)?;
        if self.mesh_n == 0 || self.samples == 0 || self.steps < 2 {
            return Err(Error::InvalidInput(
                "mesh_n and samples must be >= 1, steps >= 2".into(),
            ));
        }
        if self.command.is_none() {
            return Err(Error::InvalidInput("no command given".into()));
        }
        Ok(())
    }

    /// Resolves the datum from `catalog` or `datum`; exactly one is allowed.
    pub fn load_datum(&self) -> Result<(String, WeierstrassData)> {
        match (&self.catalog, &self.datum) {
            (Some(name), None) => Ok((name.clone(), lookup(name)?)),
            (None, Some(path)) => Ok((
                path.display().to_string(),
                serde_json::from_str(&fs::read_to_string(path)?)?,
            )),
            (Some(_), Some(_)) => Err(Error::InvalidInput(
                "give either a catalog name or a datum file, not both".into(),
            )),
            (None, None) => Err(Error::InvalidInput("a datum is required (--catalog or --datum)".into())),
        }
    }
}

/// Result of a job: the JSON report and whether a theorem check failed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub failed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.failed {
            2
        } else {
            0
        }
    }
}

/// Serializable surface mesh: parameter vertices, positions, triangles and
/// the boundary cycle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshFile {
    pub ambient: Ambient,
    pub params: Vec<[f64; 2]>,
    pub positions: Vec<[f64; 3]>,
    pub triangles: Vec<[usize; 3]>,
    pub boundary: Vec<usize>,
}

impl MeshFile {
    pub fn from_surface(mesh: &SurfaceMesh) -> Self {
        MeshFile {
            ambient: mesh.ambient(),
            params: mesh.param().vertices().iter().map(|w| [w.re, w.im]).collect(),
            positions: mesh.positions().iter().map(|p| p.x).collect(),
            triangles: mesh.param().triangles().to_vec(),
            boundary: mesh.param().boundary().to_vec(),
        }
    }

    pub fn to_surface(&self) -> Result<SurfaceMesh> {
        let param = ParamMesh::new(
            self.params.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
            self.triangles.clone(),
            self.boundary.clone(),
        )?;
        let positions = self.positions.iter().map(|&x| Tangent3::new(x, self.ambient)).collect();
        SurfaceMesh::new(param, positions, self.ambient)
    }
}

/// Wavefront OBJ: `v x y z` lines, then 1-based `f i j k` lines. The third
/// coordinate is written unchanged in either ambient space.
pub fn write_obj<W: Write>(mesh: &SurfaceMesh, mut w: W) -> Result<()> {
    for p in mesh.positions() {
        writeln!(w, "v {:?} {:?} {:?}", p.x[0], p.x[1], p.x[2])?;
    }
    for t in mesh.param().triangles() {
        writeln!(w, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
    }
    Ok(())
}

/// The boundary polygon of a mesh as CSV rows `x1,x2,x3`.
pub fn write_boundary_csv<W: Write>(mesh: &SurfaceMesh, w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["x1", "x2", "x3"])?;
    for &k in mesh.param().boundary() {
        let p = mesh.positions()[k];
        out.serialize((p.x[0], p.x[1], p.x[2]))?;
    }
    out.flush()?;
    Ok(())
}

/// Collects artifacts and writes them only when an output directory is set.
struct Artifacts<'a> {
    dir: Option<&'a Path>,
    written: Vec<String>,
}

impl<'a> Artifacts<'a> {
    fn new(dir: Option<&'a Path>) -> Result<Self> {
        if let Some(d) = dir {
            fs::create_dir_all(d)?;
        }
        Ok(Artifacts {
            dir,
            written: Vec::new(),
        })
    }

    fn file(&mut self, name: &str, write: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
        if let Some(d) = self.dir {
            let mut buf = Vec::new();
            write(&mut buf)?;
            fs::write(d.join(name), buf)?;
            self.written.push(name.to_string());
        }
        Ok(())
    }

    fn mesh(&mut self, stem: &str, mesh: &SurfaceMesh) -> Result<()> {
        self.file(&format!("{stem}.json"), |b| {
            Ok(serde_json::to_writer_pretty(b, &MeshFile::from_surface(mesh))?)
        })?;
        self.file(&format!("{stem}.obj"), |b| write_obj(mesh, b))?;
        self.file(&format!("{stem}_boundary.csv"), |b| write_boundary_csv(mesh, b))
    }

    fn field(&mut self, stem: &str, field: &ScalarField) -> Result<()> {
        if let Some(d) = self.dir {
            save_field(field, &d.join(stem))?;
            self.written.push(format!("{stem}.csv"));
            self.written.push(format!("{stem}.json"));
        }
        Ok(())
    }
}

/// Executes a job and writes its artifacts (and `report.json`) to `out`.
pub fn run(config: &JobConfig) -> Result<Outcome> {
    config.validate()?;
    let command = config.command.expect("validated");
    let mut artifacts = Artifacts::new(config.out.as_deref())?;
    let (result, failed) = match command {
        Command::Generate => (run_generate(config, &mut artifacts, false)?, false),
        Command::Conjugate => (run_generate(config, &mut artifacts, true)?, false),
        Command::DualizeCurve => (run_dualize_curve(config, &mut artifacts)?, false),
        Command::DualizeGraph => (run_dualize_graph(config, &mut artifacts)?, false),
        Command::VerifyKrust => run_verify_krust(config)?,
        Command::Identities => run_identities(config)?,
        Command::Export => (run_export(config, &mut artifacts)?, false),
    };
    let mut report = json!({
        "command": command.name(),
        "config": config,
        "result": result,
        "artifacts": artifacts.written,
    });
    if let Some(d) = config.out.as_deref() {
        report["artifacts"]
            .as_array_mut()
            .expect("array")
            .push(json!("report.json"));
        fs::write(d.join("report.json"), serde_json::to_string_pretty(&report)?)?;
    }
    Ok(Outcome { report, failed })
}

fn sampled(config: &JobConfig, conjugate: bool) -> Result<(String, WeierstrassData, SurfaceMesh)> {
    let (name, data) = config.load_datum()?;
    let im = Immersion::from_data(&data)?;
    let mesh = triangulate_disk(data.domain_radius(), config.mesh_n)?;
    let surface = if conjugate {
        sample_conjugate(&im, &mesh, config.tol)?
    } else {
        sample_surface(&im, &mesh, config.tol)?
    };
    Ok((name, data, surface))
}

fn run_generate(config: &JobConfig, artifacts: &mut Artifacts, conjugate: bool) -> Result<Value> {
    let (name, _, surface) = sampled(config, conjugate)?;
    artifacts.mesh(if conjugate { "conjugate" } else { "surface" }, &surface)?;
    Ok(json!({
        "datum": name,
        "surface": if conjugate { "conjugate" } else { "maximal" },
        "vertices": surface.positions().len(),
        "triangles": surface.param().triangles().len(),
        "graph": projection_report(&surface)?,
        "spacelike": spacelike_mesh_check(&surface)?,
    }))
}

fn run_dualize_curve(config: &JobConfig, artifacts: &mut Artifacts) -> Result<Value> {
    let (source, im) = match &config.input {
        Some(path) => {
            let curve: IsotropicCurve = serde_json::from_str(&fs::read_to_string(path)?)?;
            let base = Tangent3::zero(curve.ambient());
            (
                path.display().to_string(),
                Immersion::new(curve, Complex64::new(0.0, 0.0), base)?,
            )
        }
        None => {
            let (name, data) = config.load_datum()?;
            (name, Immersion::from_data(&data)?)
        }
    };
    let curve = im.curve();
    let d = dual(curve);
    let back = match d.ambient() {
        Ambient::Lorentzian => sharp(&d)?,
        Ambient::Euclidean => flat(&d)?,
    };
    let dual_im = im.with_curve(d.clone())?;
    let mesh = triangulate_disk(im.domain_radius(), config.mesh_n)?;
    let surface = sample_surface(&dual_im, &mesh, config.tol)?;
    artifacts.file("dual_curve.json", |b| Ok(serde_json::to_writer_pretty(b, &d)?))?;
    artifacts.mesh("dual_surface", &surface)?;
    Ok(json!({
        "source": source,
        "source_ambient": curve.ambient(),
        "dual_ambient": d.ambient(),
        "isotropy_residual": d.isotropy_residual()?,
        "involution_discrepancy": back.coeff_discrepancy(curve),
        "commutation_discrepancy": check_commutation(curve),
        "dual_surface_graph": projection_report(&surface)?,
    }))
}

fn run_dualize_graph(config: &JobConfig, artifacts: &mut Artifacts) -> Result<Value> {
    let (source, f, kind) = match &config.input {
        Some(stem) => (stem.display().to_string(), load_field(stem)?, config.kind),
        None => {
            let (name, data) = config.load_datum()?;
            let im = Immersion::from_data(&data)?;
            let mesh = triangulate_disk(data.domain_radius(), LEE_MESH_N)?;
            let surface = sample_surface(&im, &mesh, config.tol * 1e-3)?;
            let grid = covering_grid(&surface, config.grid_h)?;
            let f = resample_graph(&im, &surface, grid, config.tol)?;
            artifacts.field("graph", &f)?;
            (name, f, GraphKind::Maximal)
        }
    };
    let d = dualize(&f, kind, config.curl_threshold)?;
    artifacts.field("dual", &d.field)?;
    Ok(json!({
        "source": source,
        "input_kind": kind,
        "dual_kind": d.kind,
        "input_nodes": f.count(),
        "dual_nodes": d.field.count(),
        "grid_h": f.grid().spacing,
        "max_curl": d.max_curl,
        "max_input_slope": cell_gradient(&f)?.max_norm(),
        "max_dual_slope": d.max_slope,
    }))
}

fn covering_grid(surface: &SurfaceMesh, h: f64) -> Result<GridSpec> {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in surface.positions() {
        for k in 0..2 {
            lo[k] = lo[k].min(p.x[k]);
            hi[k] = hi[k].max(p.x[k]);
        }
    }
    GridSpec::covering(lo[0], hi[0], lo[1], hi[1], h)
}

fn run_verify_krust(config: &JobConfig) -> Result<(Value, bool)> {
    let (name, data) = config.load_datum()?;
    let report = if config.dual {
        if data.kind() != DatumKind::MaximalGraph {
            return Err(Error::InvalidInput("a maximal-graph datum is required".into()));
        }
        let im = Immersion::from_data(&data)?;
        krust_pipeline_immersion(&im.with_curve(sharp(im.curve())?)?, config.mesh_n, config.tol)?
    } else {
        krust_pipeline(&data, config.mesh_n, config.tol)?
    };
    let value = json!({
        "datum": name,
        "surface": if config.dual { "euclidean-sharp-dual" } else { "maximal" },
        "verdict": report.verdict,
        "report": report,
    });
    Ok((value, report.verdict == Verdict::Fail))
}

/// One identity check: `value` compared with `threshold` by `relation`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub relation: &'static str,
    pub threshold: f64,
    pub pass: bool,
}

impl Check {
    fn below(name: &'static str, value: f64, threshold: f64) -> Self {
        Check {
            name,
            value,
            relation: "<",
            threshold,
            pass: value < threshold,
        }
    }

    fn at_most(name: &'static str, value: f64, threshold: f64) -> Self {
        Check {
            name,
            value,
            relation: "<=",
            threshold,
            pass: value <= threshold,
        }
    }

    fn above(name: &'static str, value: f64, threshold: f64) -> Self {
        Check {
            name,
            value,
            relation: ">",
            threshold,
            pass: value > threshold,
        }
    }
}

/// Randomized identity checks on one datum, reproducible from `seed`.
pub fn identity_checks(
    data: &WeierstrassData,
    samples: usize,
    steps: usize,
    seed: u64,
    tol: f64,
) -> Result<Vec<Check>> {
    let im = Immersion::from_data(data)?;
    let curve = build_isotropic_maximal(data)?;
    let radius = SAMPLE_FRACTION * data.domain_radius();
    let points = random_disk_points(seed, radius, samples);
    let dirs = random_directions(seed.wrapping_add(1), samples);

    let mut checks = vec![Check::below("isotropy", curve.isotropy_residual()?, ISOTROPY_TOL)];

    let twice = conjugate_curve(&conjugate_curve(&curve));
    checks.push(Check::at_most(
        "double-conjugate-curve",
        twice.coeff_discrepancy(&curve.scale(Complex64::new(-1.0, 0.0))),
        0.0,
    ));
    let twice_im = im.with_curve(twice)?;
    let base = data.base_value();
    let mut worst = 0.0_f64;
    for &w in &points {
        let x = immerse(&im, w, tol)?;
        let xss = immerse(&twice_im, w, tol)?;
        let expected = base + (base - x);
        worst = worst.max((xss - expected).coord_norm());
    }
    checks.push(Check::below("double-conjugate-surface", worst, 2e-10));

    let mut worst = 0.0_f64;
    for &w in &points {
        worst = worst.max(projection_identities(data, w, tol)?.max_discrepancy());
    }
    checks.push(Check::below("projection-identities", worst, 1e-8));

    let mut worst = 0.0_f64;
    for (&w, &dir) in points.iter().zip(&dirs) {
        worst = worst.max(rotation_identity_check(&im, data, w, dir)?);
    }
    checks.push(Check::below("rotation-identity", worst, 1e-8));

    checks.push(Check::at_most("duality-commutation", check_commutation(&curve), 1e-15));
    let euclid = sharp(&curve)?;
    checks.push(Check::at_most(
        "duality-involution",
        flat(&euclid)?.coeff_discrepancy(&curve),
        0.0,
    ));

    if data.kind() == DatumKind::MaximalGraph {
        let w1 = random_disk_points(seed.wrapping_add(2), radius, samples);
        let w2 = random_disk_points(seed.wrapping_add(3), radius, samples);
        let pairs = w1
            .par_iter()
            .zip(&w2)
            .map(|(&a, &b)| krust_inequality_check(data, a, b, steps, tol))
            .collect::<Result<Vec<_>>>()?;
        let min_lhs = pairs.iter().map(|p| p.lhs).fold(f64::INFINITY, f64::min);
        let worst_rel = pairs
            .iter()
            .map(|p| (p.lhs - p.integral).abs() / p.lhs.abs())
            .fold(0.0, f64::max);
        checks.push(Check::above("krust-inequality-lhs", min_lhs, 0.0));
        checks.push(Check::below("krust-inequality-relative", worst_rel, 1e-2));
    }
    Ok(checks)
}

fn run_identities(config: &JobConfig) -> Result<(Value, bool)> {
    let (name, data) = config.load_datum()?;
    let checks = identity_checks(&data, config.samples, config.steps, config.seed, config.tol)?;
    let failed = checks.iter().any(|c| !c.pass);
    Ok((json!({ "datum": name, "checks": checks, "all_pass": !failed }), failed))
}

fn run_export(config: &JobConfig, artifacts: &mut Artifacts) -> Result<Value> {
    if config.out.is_none() {
        return Err(Error::InvalidInput(
            "export requires an output directory (--out)".into(),
        ));
    }
    let (source, mesh) = match &config.input {
        Some(path) => {
            let file: MeshFile = serde_json::from_str(&fs::read_to_string(path)?)?;
            (path.display().to_string(), file.to_surface()?)
        }
        None => {
            let (name, _, surface) = sampled(config, false)?;
            (name, surface)
        }
    };
    artifacts.file("mesh.obj", |b| write_obj(&mesh, b))?;
    Ok(json!({
        "source": source,
        "vertices": mesh.positions().len(),
        "faces": mesh.param().triangles().len(),
    }))
}

fn parse_kind(s: &str) -> std::result::Result<GraphKind, String> {
    match s {
        "minimal" => Ok(GraphKind::Minimal),
        "maximal" => Ok(GraphKind::Maximal),
        _ => Err(format!("expected `minimal` or `maximal`, got `{s}`")),
    }
}

/// Command-line flags; any flag given overrides the `--config` file.
#[derive(Debug, Parser)]
#[command(
    name = "maxsurf",
    version,
    about = "Maximal and minimal surfaces: generation, duality and graph certification"
)]
struct Args {
    #[arg(value_enum)]
    command: Option<Command>,
    /// JSON job configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in datum name (e.g. plane-r0.5).
    #[arg(long)]
    catalog: Option<String>,
    /// WeierstrassData JSON file.
    #[arg(long)]
    datum: Option<PathBuf>,
    /// Command input file or field stem.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Input graph kind for dualize-graph: minimal or maximal.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<GraphKind>,
    /// verify-krust on the Euclidean sharp-dual.
    #[arg(long)]
    dual: bool,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    mesh_n: Option<usize>,
    #[arg(long)]
    grid_h: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    curl_threshold: Option<f64>,
    /// Report errors as JSON on standard error.
    #[arg(long)]
    json: bool,
}

impl Args {
    fn into_config(self) -> Result<JobConfig> {
        let mut c = match &self.config {
            Some(path) => JobConfig::load(path)?,
            None => JobConfig::default(),
        };
        macro_rules! overlay {
            ($($field:ident),*) => { $( if let Some(v) = self.$field { c.$field = v.into(); } )* };
        }
        overlay!(catalog, datum, input, out, command);
        overlay!(kind, tol, mesh_n, grid_h, seed, samples, steps, curl_threshold);
        c.dual |= self.dual;
        Ok(c)
    }
}

/// Parses arguments, runs the job, prints the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let json_errors = args.json;
    match args.into_config().and_then(|c| run(&c)) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
            // A closed pipe on stdout is not an error of the job itself.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            outcome.exit_code()
        }
        Err(e) => {
            if json_errors {
                eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            1
        }
    }
}
