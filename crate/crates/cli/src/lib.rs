//! Command implementations behind the `quatspin` binary.
//!
//! Each command renders its output into a `String` so it can be tested without
//! spawning a process; failures carry the exit code the binary should use.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use quatspin_core::figures::{self, FigureKind};
use quatspin_core::{dirac, gspinor, qspinor, stereo, verify};
use quatspin_core::{AlgebraTag, DiracSpinor4, GSpinor, Multivector, PlanePoint, Signature};

/// Residual allowed between the fidelity routes before `prob` refuses to print.
pub const FIDELITY_ROUTE_TOL: f64 = 1e-10;
/// Round-trip residual allowed by `dirac`.
pub const DIRAC_ROUND_TRIP_TOL: f64 = 1e-12;
/// `â² = 1` check applied to `project` output.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "quatspin", version, about = "Clifford-algebra spinor toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every module's seeded invariant suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        /// Replace every declared tolerance with this value.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print the signed-blade multiplication table of Cl(p,q).
    Table {
        #[arg(long, value_parser = parse_signature)]
        signature: (usize, usize),
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Lift a chart point onto the sphere or hyperboloid.
    Project {
        #[arg(value_enum)]
        geometry: Geometry,
        #[arg(long, value_parser = parse_point3, allow_hyphen_values = true)]
        point: [f64; 3],
        #[arg(long, value_enum, default_value_t = RecordFormat::Kv)]
        format: RecordFormat,
    },
    /// Transition quantity between the states at two chart points.
    Prob {
        #[arg(value_enum)]
        geometry: Geometry,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a: ChartPoint,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b: ChartPoint,
        /// Compute through the quaternion-spinor picture (hyperboloid only).
        #[arg(long)]
        quaternion: bool,
    },
    /// Write curve data for a projection figure as CSV.
    Figure {
        #[arg(value_parser = parse_figure)]
        name: FigureKind,
        #[arg(long, default_value_t = 101)]
        samples: usize,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Map a 4-component complex column (8 reals) to quaternion spinor form.
    Dirac {
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        components: Vec<f64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RecordFormat {
    /// `key=value` lines.
    Kv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Geometry {
    Sphere,
    Hyper,
}

/// A failed command: message plus process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<quatspin_core::Error> for Failure {
    fn from(e: quatspin_core::Error) -> Self {
        Failure::domain(e.to_string())
    }
}

/// Standard output text and the exit code to finish with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn parse_reals(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| {
            let v: f64 = t.trim().parse().map_err(|_| format!("`{t}` is not a number"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("`{t}` is not finite"))
            }
        })
        .collect()
}

fn parse_point3(s: &str) -> Result<[f64; 3], String> {
    let v = parse_reals(s)?;
    v.try_into()
        .map_err(|v: Vec<f64>| format!("expected 3 comma-separated reals, got {}", v.len()))
}

/// Two or three chart coordinates given as `x1,x2[,x3]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartPoint(pub Vec<f64>);

fn parse_point(s: &str) -> Result<ChartPoint, String> {
    let v = parse_reals(s)?;
    if (2..=3).contains(&v.len()) {
        Ok(ChartPoint(v))
    } else {
        Err(format!("expected 2 or 3 comma-separated reals, got {}", v.len()))
    }
}

fn parse_signature(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("signature `{s}` is not of the form p,q"))?;
    let p: usize = p.trim().parse().map_err(|_| format!("bad p in `{s}`"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("bad q in `{s}`"))?;
    if p + q > quatspin_core::ga::MAX_DIM {
        return Err(format!(
            "p + q = {} exceeds the supported maximum {}",
            p + q,
            quatspin_core::ga::MAX_DIM
        ));
    }
    Ok((p, q))
}

fn parse_figure(s: &str) -> Result<FigureKind, String> {
    s.parse::<FigureKind>().map_err(|e| e.to_string())
}

/// Runs one parsed command.
pub fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Verify { seed, cases, tol } => cmd_verify(*seed, *cases as usize, *tol),
        Command::Table { signature, format } => cmd_table(*signature, *format).map(Outcome::ok),
        Command::Project {
            geometry,
            point,
            format,
        } => cmd_project(*geometry, *point, *format).map(Outcome::ok),
        Command::Prob {
            geometry,
            a,
            b,
            quaternion,
        } => cmd_prob(*geometry, &a.0, &b.0, *quaternion).map(Outcome::ok),
        Command::Figure { name, samples, out } => cmd_figure(*name, *samples, out).map(Outcome::ok),
        Command::Dirac { components } => cmd_dirac(components).map(Outcome::ok),
    }
}

pub fn cmd_verify(seed: u64, cases: usize, tol: Option<f64>) -> Result<Outcome, Failure> {
    if cases == 0 {
        return Err(Failure::usage("--cases must be at least 1"));
    }
    if let Some(t) = tol {
        if !(t.is_finite() && t >= 0.0) {
            return Err(Failure::usage("--tol must be a finite non-negative number"));
        }
    }
    let report = verify::run(seed, cases, tol);
    Ok(Outcome {
        stdout: report.render(),
        code: if report.passed() { 0 } else { 1 },
    })
}

fn signed_name(sig: &Signature, sign: i8, mask: usize) -> String {
    let s = if sign < 0 { '-' } else { '+' };
    format!("{s}{}", sig.blade_name(mask))
}

pub fn cmd_table((p, q): (usize, usize), format: TableFormat) -> Result<String, Failure> {
    let sig = Signature::new(p, q).map_err(|e| Failure::usage(e.to_string()))?;
    let names: Vec<String> = (0..sig.size()).map(|m| sig.blade_name(m)).collect();
    let rows: Vec<Vec<String>> = (0..sig.size())
        .map(|a| {
            (0..sig.size())
                .map(|b| {
                    let (sign, mask) = sig.blade_product(a, b);
                    signed_name(&sig, sign, mask)
                })
                .collect()
        })
        .collect();
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec![String::new()];
            header.extend(names.iter().cloned());
            w.write_record(&header).map_err(csv_failure)?;
            for (name, row) in names.iter().zip(&rows) {
                let mut record = vec![name.clone()];
                record.extend(row.iter().cloned());
                w.write_record(&record).map_err(csv_failure)?;
            }
            finish_csv(w)
        }
        TableFormat::Json => Ok(json!({
            "signature": format!("{p},{q}"),
            "blades": names,
            "table": rows,
        })
        .to_string()
            + "\n"),
    }
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure::domain(format!("csv: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, Failure> {
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::domain(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Failure::domain(e.to_string()))
}

/// Ordered key/value record, printed as `key=value` lines or one JSON object.
struct Record(Vec<(&'static str, serde_json::Value)>);

impl Record {
    fn render(&self, format: RecordFormat) -> String {
        match format {
            RecordFormat::Kv => {
                let mut out = String::new();
                for (k, v) in &self.0 {
                    match v {
                        serde_json::Value::String(s) => writeln!(out, "{k}={s}").unwrap(),
                        other => writeln!(out, "{k}={other}").unwrap(),
                    }
                }
                out
            }
            RecordFormat::Json => {
                let map: serde_json::Map<String, serde_json::Value> =
                    self.0.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
                serde_json::Value::Object(map).to_string() + "\n"
            }
        }
    }
}

fn joined(v: &[f64]) -> String {
    // adding 0.0 folds -0 into 0
    v.iter().map(|c| (c + 0.0).to_string()).collect::<Vec<_>>().join(",")
}

pub fn cmd_project(geometry: Geometry, point: [f64; 3], format: RecordFormat) -> Result<String, Failure> {
    let x = PlanePoint::new(point);
    let r2 = x.norm_sq();
    let mut rec = vec![
        ("geometry", json!(format!("{geometry:?}").to_lowercase())),
        ("x_m", json!(joined(&point))),
    ];
    let (a, metric_sign) = match geometry {
        Geometry::Sphere => {
            let lifted = stereo::lift_sphere(&x);
            let rotor = stereo::sphere_rotor(&x);
            let a = lifted.components();
            rec.extend([
                ("a_hat", json!(joined(&a))),
                ("theta", json!(rotor.theta)),
                ("cos_theta", json!(rotor.cos_theta)),
                ("sin_theta", json!(rotor.sin_theta)),
                ("rotor", json!(rotor.rotor.display_with(0.0))),
                ("metric_factor", json!(4.0 / (1.0 + r2).powi(2))),
            ]);
            (a, 1.0)
        }
        Geometry::Hyper => {
            let lifted = stereo::lift_hyper(&x)?;
            let boost = stereo::hyper_boost(&x)?;
            let a = lifted.components();
            rec.extend([
                ("a_hat", json!(joined(&a))),
                ("phi", json!(boost.phi)),
                ("cosh_phi", json!(boost.cosh_phi)),
                ("sinh_phi", json!(boost.sinh_phi)),
                ("rotor", json!(boost.rotor.display_with(0.0))),
                ("metric_factor", json!(-4.0 / (1.0 - r2).powi(2))),
            ]);
            (a, -1.0)
        }
    };
    let sq = a[0] * a[0] + metric_sign * (a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
    let residual = (sq - 1.0).abs() / a[0].abs().max(1.0).powi(2);
    if residual > UNIT_TOL {
        return Err(Failure::domain(format!(
            "lifted point fails the unit check: |â²-1| = {residual:e}"
        )));
    }
    rec.push(("unit_residual", json!(residual)));
    Ok(Record(rec).render(format))
}

fn plane_xy(v: &[f64], which: &str) -> Result<[f64; 2], Failure> {
    match v {
        [x1, x2] => Ok([*x1, *x2]),
        [x1, x2, x3] if *x3 == 0.0 => Ok([*x1, *x2]),
        _ => Err(Failure::usage(format!(
            "--{which}: spinor states live on a 2-dimensional chart, the third coordinate must be 0"
        ))),
    }
}

pub fn cmd_prob(geometry: Geometry, a: &[f64], b: &[f64], quaternion: bool) -> Result<String, Failure> {
    let xa = plane_xy(a, "a")?;
    let xb = plane_xy(b, "b")?;
    if quaternion && geometry == Geometry::Sphere {
        return Err(Failure::usage(
            "--quaternion applies to the hyperboloid only; quaternion spinors reduce from G1,2",
        ));
    }
    let tag = match geometry {
        Geometry::Sphere => AlgebraTag::Pauli3,
        Geometry::Hyper => AlgebraTag::Minkowski12,
    };
    let sa = GSpinor::from_plane(tag, xa)?;
    let sb = GSpinor::from_plane(tag, xb)?;
    let label = match geometry {
        Geometry::Sphere => "Bloch sphere probability (0..1)",
        Geometry::Hyper => "Bloch hyperboloid quantity (≥1)",
    };
    let mut out = String::new();
    writeln!(out, "geometry={}", format!("{geometry:?}").to_lowercase()).unwrap();
    writeln!(out, "algebra={tag}").unwrap();
    writeln!(out, "a={}", joined(&xa)).unwrap();
    writeln!(out, "b={}", joined(&xb)).unwrap();
    writeln!(out, "label={label}").unwrap();
    let (value, closed, residual) = if quaternion {
        let qa = qspinor::from_gspinor(&sa)?;
        let qb = qspinor::from_gspinor(&sb)?;
        let r = qspinor::fidelity_q_routes(&qa, &qb)?;
        writeln!(out, "route=quaternion").unwrap();
        writeln!(out, "braket_chain={}", r.chain).unwrap();
        writeln!(out, "circ_form={}", r.circ_form).unwrap();
        (r.chain, r.circ_form, (r.chain - r.circ_form).abs().max(r.chain_nonscalar))
    } else {
        let r = gspinor::fidelity_routes(&sa, &sb)?;
        writeln!(out, "route=geometric").unwrap();
        writeln!(out, "braket_chain={}", r.chain).unwrap();
        writeln!(out, "dot_form={}", r.dot_form).unwrap();
        writeln!(out, "distance_form={}", r.distance_form).unwrap();
        (r.chain, r.distance_form, r.spread())
    };
    writeln!(out, "route_residual={residual:e}").unwrap();
    if residual > FIDELITY_ROUTE_TOL {
        return Err(Failure::domain(format!(
            "fidelity routes disagree by {residual:e} (closed form {closed})"
        )));
    }
    writeln!(out, "value={value}").unwrap();
    Ok(out)
}

pub fn figure_csv(data: &figures::FigureData) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&data.columns).map_err(csv_failure)?;
    for row in &data.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| c.map(|v| v.to_string()).unwrap_or_default())
            .collect();
        w.write_record(&cells).map_err(csv_failure)?;
    }
    finish_csv(w)
}

pub fn cmd_figure(kind: FigureKind, samples: usize, out: &Path) -> Result<String, Failure> {
    if samples < 2 {
        return Err(Failure::usage("--samples must be at least 2"));
    }
    let data = figures::generate(kind, samples)?;
    let csv = figure_csv(&data)?;
    std::fs::write(out, csv)
        .map_err(|e| Failure::domain(format!("cannot write {}: {e}", out.display())))?;
    Ok(format!(
        "figure={kind}\nrows={}\ncolumns={}\nmax_unit_residual={:e}\nout={}\n",
        data.rows.len(),
        data.columns.join(","),
        data.max_unit_residual(),
        out.display()
    ))
}

fn quat_text(q: quatspin_core::Quaternion) -> String {
    joined(&q.to_array())
}

pub fn cmd_dirac(components: &[f64]) -> Result<String, Failure> {
    if components.len() != 8 {
        return Err(Failure::usage(format!(
            "dirac takes exactly 8 reals (re, im of four components), got {}",
            components.len()
        )));
    }
    let phi = DiracSpinor4::from_reals(components).map_err(|e| Failure::usage(e.to_string()))?;
    let psi = dirac::dirac_to_qspinor(&phi);
    let geometric = dirac::dirac_to_geometric(&phi);
    let recovered = dirac::geometric_to_qspinor(&geometric)?;
    let back = dirac::qspinor_to_dirac(&recovered);
    let residual = back
        .max_abs_diff(&phi)
        .max(dirac::qspinor_to_geometric(&psi).max_abs_diff(&geometric));
    if residual > DIRAC_ROUND_TRIP_TOL {
        return Err(Failure::domain(format!("round trip residual {residual:e}")));
    }
    let expansion: Multivector = dirac::expansion_coefficient(&phi);
    let mut out = String::new();
    writeln!(out, "phi={}", joined(&phi.to_reals())).unwrap();
    writeln!(out, "q0={}", quat_text(psi.q0)).unwrap();
    writeln!(out, "q1={}", quat_text(psi.q1)).unwrap();
    writeln!(out, "expansion={}", expansion.display_with(0.0)).unwrap();
    writeln!(out, "norm_sq={}", phi.norm_sq()).unwrap();
    writeln!(out, "round_trip_residual={residual:e}").unwrap();
    Ok(out)
}
