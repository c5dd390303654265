use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ci_bundles::bundle::{bundle_report, check_parameters, component_report, Example};
use ci_bundles::cayley_bacharach::{
    build_grid_scheme, cayley_bacharach_check, h0_ideal_points, h1_ideal_points, scalar_from_json, PointSet,
};
use ci_bundles::fano::{
    bott_line_count, example42_lines, example46_check, fermat_lines, fermat_planes_p5, normal_bundle_splitting,
    FanoReport, FanoSummary, FermatHost,
};
use ci_bundles::hilbert::{cb_deficiency, ideal_sheaf_cohomology, structure_sheaf_cohomology, CIType};
use ci_bundles::primes::resolve_field;
use ci_bundles::report::{run_examples_all, Format, RunConfig};
use ci_bundles::{Error, LinearSubspace, MultiPoly, PrimeField};

#[derive(Parser, Debug)]
#[command(name = "ci-bundles", version, about = "Rank-2 bundles on complete intersection surfaces from linear spaces on special hypersurfaces")]
struct Cli {
    /// Prime for finite-field computations: a number or "auto".
    #[arg(long, global = true, default_value = "auto")]
    prime: String,
    /// Seed for every randomized choice.
    #[arg(long, global = true, env = "CI_BUNDLES_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology of O_X(m) or of the ideal sheaf I_X(m) for a complete intersection X.
    Cohomology(CohomologyArgs),
    /// Cayley-Bacharach property of a point set in degree m.
    Cb(CbArgs),
    /// Linear spaces on special hypersurfaces.
    #[command(subcommand)]
    Fano(FanoCommand),
    /// Chern classes, cohomology and ext^1 of the rank-2 bundle E on X.
    Bundle(BundleArgs),
    /// The worked-example suite.
    #[command(subcommand)]
    Examples(ExamplesCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sheaf {
    Structure,
    Ideal,
}

#[derive(Args, Debug)]
struct CohomologyArgs {
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Degrees of the hypersurfaces, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    #[arg(long, allow_hyphen_values = true)]
    twist: i64,
    #[arg(long, value_enum, default_value_t = Sheaf::Structure)]
    sheaf: Sheaf,
}

#[derive(Args, Debug)]
struct CbArgs {
    /// Grid type: the points are cut out by unions of random hyperplanes of these degrees.
    #[arg(long, value_delimiter = ',', required_unless_present = "points")]
    grid: Option<Vec<u32>>,
    /// Ambient dimension of the grid.
    #[arg(long, required_unless_present = "points")]
    ambient: Option<usize>,
    /// JSON list of points (numbers or "a/b" strings) instead of a grid.
    #[arg(long, conflicts_with_all = ["grid", "ambient"])]
    points: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Host {
    Surface,
    Threefold,
}

#[derive(Subcommand, Debug)]
enum FanoCommand {
    /// The 3d^2 lines on z0^d - z1^d + z2^d - z3^d, on the surface or on the threefold z0^d - z1^d + z2^d - z3^d + z4 g.
    LinesFermat {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Host::Surface)]
        host: Host,
    },
    /// The 15d^3 planes on the Fermat fourfold in P^5, with h^0 of their normal bundles.
    PlanesFermat {
        #[arg(long)]
        d: u32,
    },
    /// Splitting type of the normal bundle of a line on a hypersurface.
    Splitting {
        /// File with the equation, e.g. "z0^3 - z1^3 + z2^3 - z3^3".
        #[arg(long)]
        hypersurface: PathBuf,
        /// JSON file {"basis": [[..], [..]]} with two spanning vectors.
        #[arg(long)]
        line: PathBuf,
    },
    /// Lines on a general hypersurface of degree 2n - 3 in P^n by torus localization.
    Bott {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: u32,
    },
    /// Cones of lines on g(z0, z1) + h(z2, z3, z4) = 0 and the rank of the conditions for other lines.
    Example46 {
        #[arg(long)]
        d: u32,
    },
}

#[derive(Args, Debug)]
struct BundleArgs {
    #[arg(long)]
    n: usize,
    /// d_1 < d_2 <= ... <= d_{n-2}, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    /// Also report moduli components for one of: quintic, fermat4, spinor, fermat5, cone46.
    #[arg(long)]
    example: Option<String>,
}

#[derive(Subcommand, Debug)]
enum ExamplesCommand {
    /// Every anchored count with its computed value; exits 1 if any differs.
    RunAll {
        /// Restrict to one example.
        #[arg(long)]
        only: Option<String>,
        /// Override d_1 for the Fermat and cone examples.
        #[arg(long)]
        d1: Option<u32>,
    },
}

/// Outcome of a subcommand: the document and whether every anchor passed.
struct Output {
    json: Value,
    text: String,
    pass: bool,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn parse_prime(text: &str) -> Result<Option<u64>, Error> {
    if text == "auto" {
        return Ok(None);
    }
    text.parse().map(Some).map_err(|_| usage(format!("--prime must be a number or \"auto\", got {text:?}")))
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, Error> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn fano_output(r: &FanoReport<PrimeField>, field: &PrimeField, what: &str) -> Output {
    let s = FanoSummary::from(r);
    let text = format!(
        "{} {what} over F_{} ({} distinct), all contained: {}, isolated: {}, splittings: {}\n",
        s.count,
        field.modulus(),
        s.distinct,
        s.all_contained,
        s.isolated,
        if s.splittings.is_empty() { "-".to_string() } else { s.splittings.join(" ") }
    );
    let mut json = r.to_json();
    json["prime"] = json!(field.modulus());
    Output { json, text, pass: true }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let prime = parse_prime(&cli.prime)?;
    let seed = cli.seed;
    match &cli.command {
        Command::Cohomology(a) => {
            let ci = CIType::new(a.n, &a.degrees)?;
            let table = match a.sheaf {
                Sheaf::Structure => structure_sheaf_cohomology(&ci, a.twist)?,
                Sheaf::Ideal => ideal_sheaf_cohomology(&ci, a.twist)?,
            };
            let mut json = table.to_json(&ci);
            json["sheaf"] = json!(match a.sheaf {
                Sheaf::Structure => "structure",
                Sheaf::Ideal => "ideal",
            });
            let h: Vec<String> = table.h.iter().map(|x| x.to_string()).collect();
            let text = format!("h = [{}], chi = {}\n", h.join(", "), table.euler);
            Ok(Output { json, text, pass: true })
        }
        Command::Cb(a) => {
            let field = resolve_field(prime, &[])?;
            let (z, ci) = match (&a.points, &a.grid, a.ambient) {
                (Some(path), _, _) => (PointSet::from_json(&field, &read_json(path)?)?, None),
                (None, Some(grid), Some(n)) => {
                    let z = build_grid_scheme(&field, n, grid, seed)?;
                    let ci = z.ci_type();
                    (z, ci)
                }
                _ => return Err(usage("give --grid with --ambient, or --points")),
            };
            let outcome = cayley_bacharach_check(&z, a.m);
            let (h0, h1) = (h0_ideal_points(&z, a.m), h1_ideal_points(&z, a.m));
            let closed = ci.as_ref().map(|c| cb_deficiency(c, a.m)).transpose()?;
            if let Some(c) = closed {
                if c != h1 {
                    return Err(Error::InternalInconsistency(format!("h1 = {h1} by ranks, {c} in closed form")));
                }
            }
            let json = json!({
                "points": z.len(), "ambient": z.ambient_dim(), "m": a.m, "prime": field.modulus(),
                "holds": outcome.holds, "witness": outcome.witness, "h0": h0 as i64, "h1": h1 as i64,
            });
            let mut text = format!("holds: {}\n", outcome.holds);
            if let Some(w) = outcome.witness {
                text.push_str(&format!("witness: point {w}\n"));
            }
            text.push_str(&format!("h0(I_Z({m})) = {h0}, h1(I_Z({m})) = {h1}\n", m = a.m));
            Ok(Output { json, text, pass: true })
        }
        Command::Fano(f) => run_fano(f, prime, seed),
        Command::Bundle(a) => {
            let p = check_parameters(a.n, &a.degrees)?;
            let components = match &a.example {
                Some(name) => {
                    let ex: Example = name.parse()?;
                    let field = resolve_field(prime, &ex.root_orders(p.d1()))?;
                    vec![component_report(ex, &a.degrees, &field, seed)?]
                }
                None => Vec::new(),
            };
            let r = bundle_report(&p, components)?;
            let c = &r.cohomology;
            let pass = r.ext1 == 1 && c.h0 == 3 + p.delta as i128 && c.h1 == 0;
            let mut text = format!(
                "rank 2, c1 = H, c2 = {}, chi = {}\nh = [{}, {}, {}], ext1 = {}\n",
                r.chern.c2, c.chi, c.h0, c.h1, c.h2, r.ext1
            );
            for comp in &r.components {
                text.push_str(&format!("{}: {} components of dimension {}\n", comp.example, comp.count, comp.dim));
            }
            for h in r.hypotheses.iter().filter(|h| !h.holds) {
                text.push_str(&format!("note: {} does not hold\n", h.name));
            }
            Ok(Output { json: r.to_json(), text, pass })
        }
        Command::Examples(ExamplesCommand::RunAll { only, d1 }) => {
            let only = only.as_deref().map(str::parse::<Example>).transpose()?;
            let config = RunConfig {
                prime,
                seed,
                format: match cli.format {
                    OutFormat::Text => Format::Text,
                    OutFormat::Json => Format::Json,
                },
                only,
                d1: *d1,
            };
            let r = run_examples_all(&config)?;
            Ok(Output { json: r.to_json(&config), text: r.to_text(), pass: r.all_pass() })
        }
    }
}

fn run_fano(cmd: &FanoCommand, prime: Option<u64>, seed: u64) -> Result<Output, Error> {
    match cmd {
        FanoCommand::LinesFermat { d, host } => {
            let field = resolve_field(prime, &[*d as u64])?;
            match host {
                Host::Surface => Ok(fano_output(&fermat_lines(&field, *d, &FermatHost::Surface)?, &field, "lines")),
                Host::Threefold => {
                    let run = example42_lines(&field, *d, seed)?;
                    let mut out = fano_output(&run.report, &field, "lines");
                    out.json["g"] = json!(run.g.to_string());
                    out.json["redraws"] = json!(run.redraws);
                    Ok(out)
                }
            }
        }
        FanoCommand::PlanesFermat { d } => {
            let field = resolve_field(prime, &[*d as u64])?;
            Ok(fano_output(&fermat_planes_p5(&field, *d)?, &field, "planes"))
        }
        FanoCommand::Splitting { hypersurface, line } => {
            let field = resolve_field(prime, &[])?;
            let spec = read_json(line)?;
            let basis = spec
                .get("basis")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("line file needs a \"basis\" list".into()))?;
            let vectors = basis
                .iter()
                .map(|v| {
                    v.as_array()
                        .ok_or_else(|| Error::Parse("basis entries must be lists".into()))?
                        .iter()
                        .map(|c| scalar_from_json(&field, c))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let l = LinearSubspace::new(&field, vectors)?;
            let f = MultiPoly::parse(&field, l.ambient_dim() + 1, read(hypersurface)?.trim())?;
            let s = normal_bundle_splitting(&f, &l)?;
            let mut json = s.to_json();
            json["h0"] = json!(s.h0());
            json["prime"] = json!(field.modulus());
            Ok(Output { text: format!("N = {s}, h0(N) = {}\n", s.h0()), json, pass: true })
        }
        FanoCommand::Bott { n, deg } => {
            let b = bott_line_count(*n, *deg, seed)?;
            let json = json!({ "n": n, "d": deg, "count": b.count.to_string(), "weights": b.weights });
            Ok(Output { text: format!("{}\n", b.count), json, pass: true })
        }
        FanoCommand::Example46 { d } => {
            let field = resolve_field(prime, &[])?;
            let r = example46_check(&field, *d, seed)?;
            let mut text = format!(
                "{} vertices, {} cone families verified ({} rulings each)\ncondition ranks: m1 = {}, m2 = {} (dim U = {})\n",
                r.vertices.len(),
                r.families_verified,
                r.rulings_per_family,
                r.rank_m1,
                r.rank_m2,
                r.dim_u
            );
            for w in &r.warnings {
                text.push_str(&format!("warning: {w}\n"));
            }
            let mut json = serde_json::to_value(&r).expect("plain data serializes");
            json["prime"] = json!(field.modulus());
            Ok(Output { json, text, pass: true })
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InternalInconsistency(_) => 3,
        Error::RetriesExhausted { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                OutFormat::Json => serde_json::to_string_pretty(&out.json).expect("valid JSON") + "\n",
                OutFormat::Text => out.text,
            };
            // stdout may be a closed pipe.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
