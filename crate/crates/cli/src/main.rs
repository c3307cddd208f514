//! `nodalcount`: universal node polynomials, their specializations, and a
//! cross-check against plane-curve counts.
//!
//! Exit codes: 0 success, 1 validation failure or internal error, 2 usage
//! error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use nodal_core::blowup::q_poly;
use nodal_core::chern::{chern_pp, x_class};
use nodal_core::engine::{compute_universal, EngineConfig, UniversalResult};
use nodal_core::oracle::SeveriOracle;
use nodal_core::ring::MonomialJson;
use nodal_core::scalar::{parse_rational, rational_to_string};
use nodal_core::specialize::{
    count, goettsche_poly, in_validity_range, plane_validity_threshold, quadpoint_count, severi_poly,
    SurfaceSpec,
};
use nodal_core::{Error, Poly, Rational, R_MAX};

const CACHE_ENV: &str = "NODALCOUNT_CACHE";

#[derive(Parser)]
#[command(name = "nodalcount", version, about = "Universal node polynomials and plane-curve validation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print b_1..b_R, a_1..a_R and the R-node polynomial.
    Universal {
        #[arg(long, value_parser = node_count)]
        r: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare plane-curve counts with the Caporaso-Harris oracle.
    Validate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
        dmax: u32,
        #[arg(long, value_parser = node_count)]
        rmax: usize,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Tabulate Q(i;a,b,c) for 2 <= i <= imax.
    Qtable {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..=16))]
        imax: u32,
        #[arg(long, default_value_t = 3)]
        amax: u16,
        #[arg(long, default_value_t = 2)]
        bmax: u16,
        #[arg(long, default_value_t = 1)]
        cmax: u16,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chern classes of the principal parts bundle P^{i-1}(D) and the class x_i.
    Chern {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        i: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The R-node polynomial for plane curves, as a polynomial in the degree d.
    Severi {
        #[arg(long, value_parser = node_count)]
        r: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The R-node polynomial in L^2, LK, K^2, c2.
    Goettsche {
        #[arg(long, value_parser = node_count)]
        r: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Number of R-nodal curves on a surface, or on the plane with --d.
    Count {
        #[arg(long, value_parser = node_count)]
        r: usize,
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Number of members of a generic 8-dimensional subsystem with a quadruple point.
    Quadpoint {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Plane-curve counts from the Caporaso-Harris recursion.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=64))]
        r: u32,
        /// Count irreducible curves only.
        #[arg(long)]
        irreducible: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct EngineArgs {
    /// Drop the quadruple-point correction from b_8.
    #[arg(long)]
    no_correction: bool,
    /// Value of the correction constant, as an integer or num/den.
    #[arg(long = "C", value_parser = rational_arg, allow_hyphen_values = true)]
    correction: Option<Rational>,
}

impl EngineArgs {
    fn config(&self, r_max: usize) -> Result<EngineConfig, Error> {
        let mut config = EngineConfig::new(r_max)?;
        if let Some(c) = &self.correction {
            config = config.with_correction(c.clone());
        }
        if self.no_correction {
            config = config.without_correction();
        }
        Ok(config)
    }
}

#[derive(Args)]
#[group(required = true, multiple = true)]
struct SurfaceArgs {
    /// Plane curves of degree d.
    #[arg(long, conflicts_with_all = ["l2", "lk", "k2", "c2"], allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long = "L2", requires_all = ["lk", "k2", "c2"], allow_hyphen_values = true)]
    l2: Option<i64>,
    #[arg(long = "LK", requires_all = ["l2", "k2", "c2"], allow_hyphen_values = true)]
    lk: Option<i64>,
    #[arg(long = "K2", requires_all = ["l2", "lk", "c2"], allow_hyphen_values = true)]
    k2: Option<i64>,
    #[arg(long = "c2", requires_all = ["l2", "lk", "k2"], allow_hyphen_values = true)]
    c2: Option<i64>,
}

impl SurfaceArgs {
    fn spec(&self) -> SurfaceSpec<Rational> {
        match (self.d, self.l2, self.lk, self.k2, self.c2) {
            (Some(d), ..) => SurfaceSpec::plane(d),
            (None, Some(l2), Some(lk), Some(k2), Some(c2)) => SurfaceSpec::numeric(l2, lk, k2, c2),
            _ => unreachable!("clap enforces either --d or all four intersection numbers"),
        }
    }
}

fn node_count(s: &str) -> Result<usize, String> {
    let r: usize = s.parse().map_err(|_| format!("`{s}` is not a node count"))?;
    if (1..=R_MAX).contains(&r) {
        Ok(r)
    } else {
        Err(format!("node count must be in 1..={R_MAX}"))
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number num/den"))
}

enum Outcome {
    Success,
    Mismatch,
}

struct Entry {
    name: String,
    label: String,
    text: String,
    latex: String,
    json: Value,
}

/// Named polynomials, printed as `name = ...` lines, a LaTeX `align*` block,
/// or one JSON object.
struct Listing {
    meta: Map<String, Value>,
    entries: Vec<Entry>,
}

impl Listing {
    fn new() -> Self {
        Listing { meta: Map::new(), entries: Vec::new() }
    }

    fn meta(mut self, key: &str, value: Value) -> Self {
        self.meta.insert(key.to_string(), value);
        self
    }

    /// `name` is the JSON key and text label, `label` the LaTeX label.
    fn push<M: MonomialJson>(&mut self, name: String, label: String, p: &Poly<M, Rational>) {
        self.entries.push(Entry {
            name,
            label,
            text: p.to_text(),
            latex: p.to_latex(),
            json: p.to_json(),
        });
    }

    fn print(self, format: Format) {
        match format {
            Format::Text => {
                for e in &self.entries {
                    println!("{} = {}", e.name, e.text);
                }
            }
            Format::Latex => {
                println!("\\begin{{align*}}");
                let n = self.entries.len();
                for (k, e) in self.entries.iter().enumerate() {
                    let end = if k + 1 < n { " \\\\" } else { "" };
                    println!("{} &= {}{end}", e.label, e.latex);
                }
                println!("\\end{{align*}}");
            }
            Format::Json => {
                let mut obj = self.meta;
                for e in self.entries {
                    obj.insert(e.name, e.json);
                }
                print_json(&Value::Object(obj));
            }
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("JSON values serialize"));
}

fn config_meta(config: &EngineConfig) -> Value {
    json!({
        "correction": rational_to_string(&config.correction),
        "correction_enabled": config.correction_enabled,
    })
}

fn universal_listing(res: &UniversalResult) -> Listing {
    let r = res.r_max();
    let mut out = Listing::new()
        .meta("r", json!(r))
        .meta("engine", config_meta(&res.config));
    for (s, b) in res.b.iter().enumerate() {
        out.push(format!("b_{}", s + 1), format!("b_{{{}}}", s + 1), b);
    }
    for (s, a) in res.a.iter().enumerate() {
        out.push(format!("a_{}", s + 1), format!("a_{{{}}}", s + 1), a);
    }
    out.push(format!("N_{r}"), format!("N_{{{r}}}"), res.node_poly());
    out
}

fn run_universal(r: usize, engine: &EngineArgs, format: Format) -> Result<Outcome, Error> {
    let res = compute_universal(&engine.config(r)?)?;
    universal_listing(&res).print(format);
    Ok(Outcome::Success)
}

fn load_oracle() -> Result<(SeveriOracle, Option<PathBuf>), Error> {
    match std::env::var_os(CACHE_ENV) {
        Some(path) if !path.is_empty() => {
            let path = PathBuf::from(path);
            Ok((SeveriOracle::load(&path)?, Some(path)))
        }
        _ => Ok((SeveriOracle::new(), None)),
    }
}

fn store_oracle(oracle: &SeveriOracle, path: Option<PathBuf>, loaded: usize) -> Result<(), Error> {
    match path {
        Some(path) if oracle.cache_len() != loaded => oracle.save(&path),
        _ => Ok(()),
    }
}

fn run_validate(dmax: u32, rmax: usize, engine: &EngineArgs) -> Result<Outcome, Error> {
    let res = compute_universal(&engine.config(rmax)?)?;
    let cells: Vec<(i64, usize)> = (1..=rmax)
        .flat_map(|r| (plane_validity_threshold(r)..=dmax as i64).map(move |d| (d, r)))
        .collect();

    let (mut oracle, path) = load_oracle()?;
    let loaded = oracle.cache_len();
    let truth: Vec<BigInt> = cells
        .iter()
        .map(|&(d, r)| oracle.assemble_reducible(d as u32, r as u32))
        .collect::<Result<_, _>>()?;
    store_oracle(&oracle, path, loaded)?;

    let engine_counts: Vec<BigInt> = cells
        .par_iter()
        .map(|&(d, r)| count(res.node_poly_for(r)?, &SurfaceSpec::plane(d)))
        .collect::<Result<_, _>>()?;

    let mut failures = 0;
    for ((&(d, r), ours), theirs) in cells.iter().zip(&engine_counts).zip(&truth) {
        if ours == theirs {
            println!("({d},{r}): {ours} = {theirs} PASS");
            continue;
        }
        failures += 1;
        let gap = ours - theirs;
        print!("({d},{r}): {ours} != {theirs} FAIL (engine - oracle = {gap}");
        if r == 8 {
            // The correction enters the count as 7! C / 8! per quadruple point.
            let quad = quadpoint_count(&SurfaceSpec::plane(d));
            print!(", quadruple-point count {quad}");
            if !quad.is_zero() {
                let implied = &res.config.effective_correction() - Rational::from_integer(gap * 8) / &quad;
                print!(", matching correction C = {implied}");
            }
        }
        println!(")");
    }
    println!("{} cells, {} PASS, {failures} FAIL", cells.len(), cells.len() - failures);
    Ok(if failures == 0 { Outcome::Success } else { Outcome::Mismatch })
}

fn run_qtable(imax: u32, amax: u16, bmax: u16, cmax: u16, format: Format) -> Result<Outcome, Error> {
    let mut out = Listing::new();
    for i in 2..=imax {
        for a in 0..=amax {
            for b in 0..=bmax {
                for c in 0..=cmax {
                    out.push(
                        format!("Q({i};{a},{b},{c})"),
                        format!("Q({i};{a},{b},{c})"),
                        &q_poly(i, a, b, c),
                    );
                }
            }
        }
    }
    out.print(format);
    Ok(Outcome::Success)
}

fn run_chern(i: u32, format: Format) -> Result<Outcome, Error> {
    let mut out = Listing::new().meta("i", json!(i));
    for (k, c) in chern_pp(i).components().iter().enumerate() {
        out.push(format!("c_{k}"), format!("c_{{{k}}}"), c);
    }
    if i >= 2 {
        out.push(format!("x_{i}"), format!("x_{{{i}}}"), &x_class(i)?);
    }
    out.print(format);
    Ok(Outcome::Success)
}

fn run_severi(r: usize, engine: &EngineArgs, format: Format) -> Result<Outcome, Error> {
    let res = compute_universal(&engine.config(r)?)?;
    let mut out = Listing::new()
        .meta("r", json!(r))
        .meta("engine", config_meta(&res.config))
        .meta("valid_from_degree", json!(plane_validity_threshold(r)));
    out.push(format!("N_{r}(d)"), format!("N_{{{r}}}(d)"), &severi_poly(res.node_poly()));
    out.print(format);
    Ok(Outcome::Success)
}

fn run_goettsche(r: usize, engine: &EngineArgs, format: Format) -> Result<Outcome, Error> {
    let res = compute_universal(&engine.config(r)?)?;
    let mut out = Listing::new().meta("r", json!(r)).meta("engine", config_meta(&res.config));
    out.push(format!("T_{r}"), format!("T_{{{r}}}"), &goettsche_poly(res.node_poly()));
    out.print(format);
    Ok(Outcome::Success)
}

fn print_number(name: &str, value: &str, note: Option<&str>, format: Format) {
    match format {
        Format::Text => match note {
            Some(n) => println!("{name} = {value} ({n})"),
            None => println!("{name} = {value}"),
        },
        Format::Latex => println!("{name} = {value}"),
        Format::Json => {
            let mut obj = Map::new();
            obj.insert(name.to_string(), json!(value));
            if let Some(n) = note {
                obj.insert("note".to_string(), json!(n));
            }
            print_json(&Value::Object(obj));
        }
    }
}

fn run_count(r: usize, surface: &SurfaceArgs, engine: &EngineArgs, format: Format) -> Result<Outcome, Error> {
    let res = compute_universal(&engine.config(r)?)?;
    let n = count(res.node_poly(), &surface.spec())?;
    let note = match surface.d {
        Some(d) if !in_validity_range(d, r) => Some("outside validity range"),
        _ => None,
    };
    print_number("count", &n.to_string(), note, format);
    Ok(Outcome::Success)
}

fn run_quadpoint(surface: &SurfaceArgs, format: Format) -> Result<Outcome, Error> {
    let q = quadpoint_count(&surface.spec());
    print_number("quadpoint", &q.to_string(), None, format);
    Ok(Outcome::Success)
}

fn run_oracle(d: u32, r: u32, irreducible: bool) -> Result<Outcome, Error> {
    let (mut oracle, path) = load_oracle()?;
    let loaded = oracle.cache_len();
    let n = if irreducible {
        oracle.ch_irreducible(d, r)?
    } else {
        oracle.assemble_reducible(d, r)?
    };
    store_oracle(&oracle, path, loaded)?;
    println!("{n}");
    Ok(Outcome::Success)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Universal { r, engine, format } => run_universal(r, &engine, format),
        Command::Validate { dmax, rmax, engine } => run_validate(dmax, rmax, &engine),
        Command::Qtable { imax, amax, bmax, cmax, format } => run_qtable(imax, amax, bmax, cmax, format),
        Command::Chern { i, format } => run_chern(i, format),
        Command::Severi { r, engine, format } => run_severi(r, &engine, format),
        Command::Goettsche { r, engine, format } => run_goettsche(r, &engine, format),
        Command::Count { r, surface, engine, format } => run_count(r, &surface, &engine, format),
        Command::Quadpoint { surface, format } => run_quadpoint(&surface, format),
        Command::Oracle { d, r, irreducible } => run_oracle(d, r, irreducible),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e @ (Error::NodeCountOutOfRange(_) | Error::UnsupportedLocus(_) | Error::NodesOutOfRange { .. } | Error::ZeroDegree)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
