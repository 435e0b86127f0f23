//! `etransform`: evaluate E-functions, run discrete transforms on lattice
//! data, interpolate, split by center characters and run the self-checks.
//!
//! Exit codes: 0 success, 1 usage, 2 data error, 3 verification failure.
//! `ETRANSFORM_THREADS` sets the worker count.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;

use etransform::algebra::{center, central_split_grid};
use etransform::io::{table_csv, table_json, GridFile, Row, SpectrumFile};
use etransform::orbitfunc::eval_generic;
use etransform::transform_cont::{forward_continuous, FundamentalDomain, Truncation};
use etransform::transform_disc::{build_grid, build_label_set, forward_discrete, interpolate, interpolate_on_grid};
use etransform::verify::{self, VerifyOptions};
use etransform::weyl::congruence_class;
use etransform::{DomainPoint, GroupId, OrbitFunctionKind, QuadratureSpec, Weight};

#[derive(Parser)]
#[command(name = "etransform", version, about = "E-function transforms on A1xA1, A2, C2 and G2")]
struct Cli {
    #[command(flatten)]
    job: JobArgs,

    #[command(subcommand)]
    command: Command,
}

/// Settings shared by all commands. A config file given with --config
/// overrides them.
#[derive(Args, Clone, Debug)]
struct JobArgs {
    /// A1xA1, A2, C2 or G2
    #[arg(long, global = true)]
    group: Option<String>,
    /// Grid parameter for discrete operations
    #[arg(long = "m", short = 'M', global = true)]
    m: Option<i64>,
    /// Truncation radius for continuous operations
    #[arg(long, global = true, default_value_t = 4.0)]
    radius: f64,
    /// Gauss–Legendre nodes per direction
    #[arg(long, global = true, default_value_t = 64)]
    order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Points per direction of dense evaluation tables
    #[arg(long, global = true, default_value_t = 32)]
    res: usize,
    /// key=value file (group, m, radius, order, format, res)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate one orbit function over the fundamental domain
    Eval {
        /// E, Xi, C or Omega
        #[arg(long, default_value = "E")]
        kind: String,
        /// a,b
        #[arg(long, allow_hyphen_values = true)]
        label: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write grid data sampled from a sum of orbit functions
    Sample {
        #[arg(long, default_value = "Xi")]
        kind: String,
        /// a,b (repeatable; no labels gives the constant 1)
        #[arg(long, allow_hyphen_values = true)]
        label: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Discrete transform of a grid data file into a spectrum file
    Transform {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a spectrum file over the fundamental domain
    Interpolate {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Continuous expansion coefficients of one orbit function
    Project {
        #[arg(long, default_value = "E")]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        label: String,
    },
    /// Run the self-checks and print a JSON report
    Verify {
        #[arg(long, default_value_t = 2)]
        m_min: i64,
        #[arg(long, default_value_t = 6)]
        m_max: i64,
        #[arg(long, default_value_t = 20_250_101)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Split grid data into center-character components
    Split {
        input: PathBuf,
        /// Directory for the component files
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Data(String),
    Verify,
}

impl From<etransform::Error> for Failure {
    fn from(e: etransform::Error) -> Self {
        match e {
            etransform::Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

type Out<T> = std::result::Result<T, Failure>;

fn apply_config(job: &mut JobArgs) -> Out<()> {
    let Some(path) = job.config.clone() else { return Ok(()) };
    let text = fs::read_to_string(&path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Failure::Usage(format!("{}:{}: {what}", path.display(), n + 1));
        let (k, v) = line.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        let (k, v) = (k.trim(), v.trim());
        match k.to_ascii_lowercase().as_str() {
            "group" => job.group = Some(v.to_string()),
            "m" => job.m = Some(v.parse().map_err(|_| bad("m must be an integer"))?),
            "radius" => job.radius = v.parse().map_err(|_| bad("radius must be a number"))?,
            "order" => job.order = v.parse().map_err(|_| bad("order must be an integer"))?,
            "res" => job.res = v.parse().map_err(|_| bad("res must be an integer"))?,
            "format" => {
                job.format = Format::from_str(v, true).map_err(|_| bad("format must be csv or json"))?;
            }
            _ => return Err(bad(&format!("unknown key '{k}'"))),
        }
    }
    Ok(())
}

fn validate(job: &JobArgs) -> Out<()> {
    if job.m.is_some_and(|m| m < 1) {
        return Err(Failure::Usage("M must be at least 1".into()));
    }
    if job.order < 2 {
        return Err(Failure::Usage("quadrature order must be at least 2".into()));
    }
    if job.res < 2 {
        return Err(Failure::Usage("resolution must be at least 2".into()));
    }
    if job.radius.is_nan() || job.radius < 0.0 {
        return Err(Failure::Usage("radius must be non-negative".into()));
    }
    Ok(())
}

fn group(job: &JobArgs) -> Out<GroupId> {
    let g = job.group.as_deref().ok_or_else(|| Failure::Usage("--group is required".into()))?;
    g.parse().map_err(|e: etransform::Error| Failure::Usage(e.to_string()))
}

fn m_value(job: &JobArgs) -> Out<i64> {
    job.m.ok_or_else(|| Failure::Usage("--m is required".into()))
}

fn kind(s: &str) -> Out<OrbitFunctionKind> {
    s.parse().map_err(|e: etransform::Error| Failure::Usage(e.to_string()))
}

fn label(g: GroupId, s: &str) -> Out<Weight> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Failure::Usage(format!("label '{s}' is not of the form a,b"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let a = parts[0].parse().map_err(|_| bad())?;
    let b = parts[1].parse().map_err(|_| bad())?;
    Ok(Weight::new(g, a, b))
}

fn read(path: &Path) -> Out<String> {
    fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Out<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Data(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Rows over the res×res parametrization of F^e, row-major.
fn dense<F: Fn(&DomainPoint<f64>) -> Complex<f64> + Sync>(g: GroupId, res: usize, f: F) -> Vec<Row> {
    use rayon::prelude::*;
    let dom = FundamentalDomain::new(g);
    let step = 1.0 / (res - 1) as f64;
    (0..res * res)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / res, k % res);
            let (p, _) = dom.map(i as f64 * step, j as f64 * step);
            Row { x: p[0], y: p[1], value: f(&DomainPoint::new(g, p[0], p[1])) }
        })
        .collect()
}

fn table(job: &JobArgs, rows: &[Row]) -> Out<String> {
    Ok(match job.format {
        Format::Csv => table_csv(rows)?,
        Format::Json => table_json(rows)?,
    })
}

fn check_group(job: &JobArgs, file_group: GroupId, file_m: i64) -> Out<()> {
    if let Some(g) = job.group.as_deref() {
        let g: GroupId = g.parse().map_err(|e: etransform::Error| Failure::Usage(e.to_string()))?;
        if g != file_group {
            return Err(Failure::Data(format!("file holds {file_group} data, --group says {g}")));
        }
    }
    if let Some(m) = job.m {
        if m != file_m {
            return Err(Failure::Data(format!("file has M={file_m}, --m says {m}")));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Out<()> {
    let mut job = cli.job;
    apply_config(&mut job)?;
    validate(&job)?;
    match cli.command {
        Command::Eval { kind: k, label: l, output } => {
            let g = group(&job)?;
            let (k, l) = (kind(&k)?, label(g, &l)?);
            let rows = dense(g, job.res, |p| eval_generic(k, &l, p));
            emit(output.as_deref(), &table(&job, &rows)?)
        }
        Command::Sample { kind: k, label: ls, output } => {
            let g = group(&job)?;
            let k = kind(&k)?;
            let labels = ls.iter().map(|s| label(g, s)).collect::<Out<Vec<_>>>()?;
            let grid = build_grid(g, m_value(&job)?)?;
            let values = grid.sample(|p| {
                if labels.is_empty() {
                    Complex::new(1.0, 0.0)
                } else {
                    labels.iter().map(|l| eval_generic(k, l, p)).sum()
                }
            });
            emit(output.as_deref(), &GridFile::from_grid(&grid, &values)?.to_json()?)
        }
        Command::Transform { input, output } => {
            let file = GridFile::from_json(&read(&input)?)?;
            check_group(&job, file.group, file.m)?;
            let grid = build_grid(file.group, file.m)?;
            let values = file.values_on(&grid)?;
            let inconsistency = grid.inconsistency(&values);
            if inconsistency > 1e-9 {
                eprintln!("warning: values at identified torus points differ by up to {inconsistency:.3e}");
            }
            let labels = build_label_set(file.group, file.m)?;
            let spectrum = forward_discrete(&grid, &labels, &values)?;
            let back = interpolate_on_grid(&spectrum, &grid);
            let residual = back.iter().zip(&values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            emit(output.as_deref(), &SpectrumFile::from_spectrum(&spectrum).to_json()?)?;
            eprintln!("residual {residual:.3e}");
            Ok(())
        }
        Command::Interpolate { input, output } => {
            let spectrum = SpectrumFile::from_json(&read(&input)?)?.to_spectrum()?;
            check_group(&job, spectrum.group, spectrum.m)?;
            let rows = dense(spectrum.group, job.res, |p| interpolate(&spectrum, p));
            emit(output.as_deref(), &table(&job, &rows)?)
        }
        Command::Project { kind: k, label: l } => {
            let g = group(&job)?;
            let (k, l) = (kind(&k)?, label(g, &l)?);
            let quad = QuadratureSpec::new(job.order);
            let sp = forward_continuous(g, |x: [f64; 2]| eval_generic(k, &l, &DomainPoint::new(g, x[0], x[1])), &Truncation::Radius(job.radius), &quad)?;
            let entries: Vec<serde_json::Value> = sp
                .entries
                .iter()
                .filter(|(_, c)| c.norm() > 1e-12)
                .map(|(w, c)| serde_json::json!({"label": w.coords, "coeff": [c.re, c.im]}))
                .collect();
            let out = serde_json::json!({
                "group": g.name(),
                "truncation": sp.truncation,
                "norm_deviation": sp.norm_deviation,
                "coefficients": entries,
            });
            emit(None, &format!("{}\n", serde_json::to_string_pretty(&out).expect("json")))
        }
        Command::Verify { m_min, m_max, seed, output } => {
            if m_min < 1 || m_max < m_min {
                return Err(Failure::Usage(format!("bad M range {m_min}..{m_max}")));
            }
            let groups = match job.group.as_deref() {
                Some(_) => vec![group(&job)?],
                None => GroupId::ALL.to_vec(),
            };
            let m_values = match job.m {
                Some(m) => vec![m],
                None => (m_min..=m_max).collect(),
            };
            let report = verify::run(&VerifyOptions { groups, m_values: Some(m_values), seed });
            for c in &report.criteria {
                eprintln!("{}", c.line());
            }
            emit(output.as_deref(), &format!("{}\n", report.to_json()))?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
        Command::Split { input, out_dir } => {
            let file = GridFile::from_json(&read(&input)?)?;
            check_group(&job, file.group, file.m)?;
            let grid = build_grid(file.group, file.m)?;
            let values = file.values_on(&grid)?;
            let parts = central_split_grid(&grid, &values)?;
            if center(file.group).len() == 1 {
                eprintln!("note: the center of {} is trivial; writing the input unchanged", file.group);
            }
            fs::create_dir_all(&out_dir).map_err(|e| Failure::Data(format!("{}: {e}", out_dir.display())))?;
            let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("data");
            let labels = build_label_set(file.group, file.m)?;
            for (j, part) in parts.iter().enumerate() {
                let path = out_dir.join(format!("{stem}_f{j}.json"));
                emit(Some(&path), &GridFile::from_grid(&grid, part)?.to_json()?)?;
                // share of the component's spectrum carried by foreign classes
                let sp = forward_discrete(&grid, &labels, part)?;
                let (mut own, mut foreign) = (0.0, 0.0);
                for ((l, d), n) in sp.entries.iter().zip(&labels.norms) {
                    let e = d.norm_sqr() * num_traits::ToPrimitive::to_f64(n).unwrap_or(0.0);
                    if congruence_class(l) == j || parts.len() == 1 {
                        own += e;
                    } else {
                        foreign += e;
                    }
                }
                let purity = if own + foreign > 0.0 { (foreign / (own + foreign)).sqrt() } else { 0.0 };
                println!("{} purity residual {purity:.3e}", path.display());
            }
            Ok(())
        }
    }
}

fn init_threads() -> Out<()> {
    if let Ok(v) = std::env::var("ETRANSFORM_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| Failure::Usage(format!("ETRANSFORM_THREADS='{v}' is not a count")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match init_threads().and_then(|_| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Data(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => ExitCode::from(3),
    }
}
