//! `ptchain` — membership checks, scans and horizon tracing for the
//! PT-symmetric chain Hamiltonians H⁽ᴺ⁾, N = 2…11.
//!
//! Exit codes follow the verdict contract: 0 inside (or plain success),
//! 1 outside, 2 boundary band, 64 usage error, 65 data/config error,
//! 70 internal inconsistency (criteria/oracle mismatch or a failed exact
//! certificate).

mod output;
mod scan;

use clap::{Args, Parser, Subcommand};
use num::rational::BigRational;
use output::{num, text, OutFormat, Table};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scan::{ScanConfig, ScanMode};
use serde_json::Value;
use std::path::PathBuf;

use ptchain::ratio::{parse_rational, rational_to_f64};
use ptchain::{
    assess, boundary_bisect, char_poly_from_squares, dep_solve_n6, eep_point, oracle,
    to_secular_form, Assessment, CouplingVector, DomainState, Verdict,
};

mod exit_code {
    pub const INSIDE: i32 = 0;
    pub const OUTSIDE: i32 = 1;
    pub const BOUNDARY: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const INTERNAL: i32 = 70;
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn data(message: impl Into<String>) -> Self {
        CliError { code: exit_code::DATA, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError { code: exit_code::INTERNAL, message: message.into() }
    }
}

impl From<ptchain::Error> for CliError {
    fn from(e: ptchain::Error) -> Self {
        let code = match e {
            ptchain::Error::Inconsistency(_) => exit_code::INTERNAL,
            _ => exit_code::DATA,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::data(format!("i/o error: {e}"))
    }
}

type CliResult = Result<i32, CliError>;

#[derive(Parser)]
#[command(name = "ptchain", version, about = "Physical domains of PT-symmetric chain models")]
struct Cli {
    /// Boundary-band width for the floating criteria [default: 1e-9]
    #[arg(long, global = true)]
    epsilon: Option<f64>,

    /// Output format for tabular commands [default: csv]
    #[arg(long, global = true, value_parser = ["csv", "json"])]
    format: Option<String>,

    /// Output path (stdout when omitted)
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for randomized campaigns [default: 0]
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for scans (all cores when omitted)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

impl Cli {
    fn epsilon(&self) -> f64 {
        self.epsilon.unwrap_or(ptchain::DEFAULT_EPSILON)
    }

    fn format(&self) -> &str {
        self.format.as_deref().unwrap_or("csv")
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }
}

#[derive(Args)]
struct PointArgs {
    /// Matrix dimension N (2..=11)
    #[arg(short = 'N', long = "dimension", visible_alias = "dim")]
    n: usize,

    /// Couplings g1,...,gJ as decimal floats
    #[arg(short, long, value_delimiter = ',', allow_hyphen_values = true)]
    g: Option<Vec<f64>>,

    /// Exact rational squares g1²,...,gJ² (e.g. "5,8,9" or "5/2,8,9")
    #[arg(long, value_delimiter = ',')]
    exact: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one coupling point (exit code carries the verdict)
    Check {
        #[command(flatten)]
        point: PointArgs,
        /// Also print the numeric spectrum
        #[arg(long)]
        spectrum: bool,
    },
    /// Scan a coupling grid or ray set and emit one record per point
    Scan {
        /// JSON config file mirroring the scan configuration
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(short = 'N', long = "dimension")]
        n: Option<usize>,
        /// Grid axis min:max:steps (once for all couplings, or once per coupling)
        #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
        grid: Vec<scan::GridAxis>,
        /// Ray d1,...,dJ:steps (repeatable)
        #[arg(long, value_parser = parse_ray, allow_hyphen_values = true)]
        ray: Vec<scan::RaySpec>,
        /// criteria | oracle | both
        #[arg(long)]
        mode: Option<String>,
        /// Add min-root-gap / min-root spectrum summary columns
        #[arg(long)]
        spectrum: bool,
    },
    /// Trace the observability horizon along rays from the origin
    Boundary {
        #[arg(short = 'N', long = "dimension")]
        n: usize,
        /// Number of random rays in the positive orthant
        #[arg(long, default_value_t = 0)]
        rays: usize,
        /// Explicit ray direction d1,...,dJ (repeatable)
        #[arg(long = "ray", value_parser = parse_direction, allow_hyphen_values = true)]
        ray_list: Vec<Vec<f64>>,
        /// Bisection tolerance on the radius
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Report extreme exceptional points and their exact certificates
    Eep {
        #[arg(short = 'N', long = "dimension")]
        n: Option<usize>,
        /// All dimensions 2..=11
        #[arg(long)]
        all: bool,
    },
    /// Sweep the N = 6 double-exceptional-point curve
    Dep {
        /// Sweep range for c² as lo:hi:steps (squared-coupling units)
        #[arg(long = "c-range", value_parser = parse_axis)]
        c_range: scan::GridAxis,
    },
    /// Print the numeric spectrum at one coupling point
    Spectrum {
        #[command(flatten)]
        point: PointArgs,
    },
    /// Randomized criteria-vs-oracle agreement run (exit 70 on mismatch)
    Verify {
        #[arg(short = 'N', long = "dimension")]
        n: Option<usize>,
        /// Check all dimensions 2..=11
        #[arg(long)]
        all: bool,
        /// Random points per dimension
        #[arg(long, default_value_t = 1000)]
        points: usize,
    },
}

fn parse_axis(s: &str) -> Result<scan::GridAxis, String> {
    let parts: Vec<&str> = s.trim().split(':').map(str::trim).collect();
    if parts.len() != 3 {
        return Err("expected min:max:steps".into());
    }
    let min: f64 = parts[0].parse().map_err(|_| "bad min")?;
    let max: f64 = parts[1].parse().map_err(|_| "bad max")?;
    let steps: usize = parts[2].parse().map_err(|_| "bad steps")?;
    Ok(scan::GridAxis { min, max, steps })
}

fn parse_direction(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("bad component '{p}'")))
        .collect()
}

fn parse_ray(s: &str) -> Result<scan::RaySpec, String> {
    let (dir, steps) = s.rsplit_once(':').ok_or("expected d1,...,dJ:steps")?;
    Ok(scan::RaySpec {
        direction: parse_direction(dir)?,
        steps: steps.parse().map_err(|_| "bad steps")?,
    })
}

fn out_format(name: &str) -> OutFormat {
    match name {
        "json" => OutFormat::Json,
        _ => OutFormat::Csv,
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => exit_code::USAGE,
            };
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn execute(cli: Cli) -> CliResult {
    match cli.command {
        Command::Check { ref point, spectrum } => cmd_check(&cli, point, spectrum),
        Command::Scan { .. } => cmd_scan(&cli),
        Command::Boundary { .. } => cmd_boundary(&cli),
        Command::Eep { n, all } => cmd_eep(&cli, n, all),
        Command::Dep { ref c_range } => cmd_dep(&cli, *c_range),
        Command::Spectrum { ref point } => cmd_spectrum(&cli, point),
        Command::Verify { n, all, points } => cmd_verify(&cli, n, all, points),
    }
}

// ---------------------------------------------------------------------------
// point resolution shared by check/spectrum
// ---------------------------------------------------------------------------

struct ResolvedPoint {
    n: usize,
    couplings: Vec<f64>,
    squares: Vec<BigRational>,
    exact: bool,
}

fn resolve_point(point: &PointArgs) -> Result<ResolvedPoint, CliError> {
    let j = point.n / 2;
    // exact squares win when both are given; the decimals are then display-only
    if let Some(words) = &point.exact {
        if words.len() != j {
            return Err(CliError::data(format!(
                "N = {} needs {j} squared couplings, got {}",
                point.n,
                words.len()
            )));
        }
        let mut squares = Vec::with_capacity(j);
        for w in words {
            let r = parse_rational(w)
                .ok_or_else(|| CliError::data(format!("cannot parse rational '{w}'")))?;
            if r < BigRational::from_integer(0.into()) {
                return Err(CliError::data(format!("squared coupling '{w}' is negative")));
            }
            squares.push(r);
        }
        let couplings = squares.iter().map(|r| rational_to_f64(r).sqrt()).collect();
        // dimension check happens in the char-poly builder
        char_poly_from_squares(point.n, &squares)?;
        return Ok(ResolvedPoint { n: point.n, couplings, squares, exact: true });
    }
    match &point.g {
        Some(g) => {
            let c = CouplingVector::new(point.n, g.clone())?;
            Ok(ResolvedPoint {
                n: point.n,
                couplings: g.clone(),
                squares: c.coupling_squares(),
                exact: false,
            })
        }
        None => Err(CliError {
            code: exit_code::USAGE,
            message: "give couplings with -g or squared couplings with --exact".into(),
        }),
    }
}

fn verdict_code(state: DomainState) -> i32 {
    match state {
        DomainState::Inside => exit_code::INSIDE,
        DomainState::Outside => exit_code::OUTSIDE,
        DomainState::BoundaryBand => exit_code::BOUNDARY,
    }
}

fn state_name(state: DomainState) -> &'static str {
    match state {
        DomainState::Inside => "inside",
        DomainState::Outside => "outside",
        DomainState::BoundaryBand => "boundary",
    }
}

fn verdict_json(v: &Verdict) -> Value {
    serde_json::json!({
        "state": state_name(v.state),
        "witness": v.witness,
        "margin": v.margin,
    })
}

fn assessment_json(a: &Assessment) -> Value {
    let aux = a.aux.map(|aux| {
        serde_json::json!({
            "B": aux.b, "q": aux.q, "C": aux.c, "D": aux.d, "G": aux.g,
        })
    });
    serde_json::json!({
        "verdict": verdict_json(&a.verdict),
        "aux": aux,
        "oracle_fallback": a.oracle_fallback,
        "side_condition_binding": a.side_condition_binding,
    })
}

fn spectrum_json(rep: &oracle::SpectrumReport) -> Value {
    let pair = |z: &num::complex::Complex64| serde_json::json!([z.re, z.im]);
    serde_json::json!({
        "s_roots": rep.s_roots.iter().map(pair).collect::<Vec<_>>(),
        "energies": rep.energies.iter().map(pair).collect::<Vec<_>>(),
        "classification": rep.classification.to_string(),
        "degeneracy_pattern": rep.degeneracy_pattern,
        "min_s_gap": rep.min_s_gap(),
        "min_s_root": rep.min_s_magnitude(),
    })
}

fn print_spectrum_human(rep: &oracle::SpectrumReport) {
    let fmt = |z: &num::complex::Complex64| {
        if z.im == 0.0 {
            format!("{}", z.re)
        } else {
            format!("{}{:+}i", z.re, z.im)
        }
    };
    println!("s-roots:   {}", rep.s_roots.iter().map(&fmt).collect::<Vec<_>>().join(", "));
    println!("energies:  {}", rep.energies.iter().map(&fmt).collect::<Vec<_>>().join(", "));
    println!(
        "spectrum:  {} (degeneracy pattern {:?}, min s-gap {:.3e}, min |s| {:.3e})",
        rep.classification,
        rep.degeneracy_pattern,
        rep.min_s_gap(),
        rep.min_s_magnitude()
    );
}

// ---------------------------------------------------------------------------
// check / spectrum
// ---------------------------------------------------------------------------

fn cmd_check(cli: &Cli, point: &PointArgs, spectrum: bool) -> CliResult {
    let p = resolve_point(point)?;
    let form = to_secular_form(&char_poly_from_squares(p.n, &p.squares)?, p.n)?;
    let a = assess(&form, cli.epsilon())?;
    // exact inputs get the exact adjudication; the criteria verdict is
    // reported alongside for comparison
    let exact_verdict =
        if p.exact { Some(oracle::oracle_verdict_form(&form)?) } else { None };
    let decisive = exact_verdict.as_ref().map(|v| v.state).unwrap_or(a.verdict.state);

    let report = spectrum.then(|| oracle::numeric_spectrum_form(&form, p.n)).transpose()?;

    if cli.format() == "json" {
        let mut obj = serde_json::json!({
            "n": p.n,
            "couplings": p.couplings,
            "exact_input": p.exact,
            "criteria": assessment_json(&a),
            "oracle": exact_verdict.as_ref().map(verdict_json),
            "verdict": state_name(decisive),
        });
        if let Some(rep) = &report {
            obj["spectrum"] = spectrum_json(rep);
        }
        println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
    } else {
        println!(
            "N = {}, J = {}, couplings = [{}]{}",
            p.n,
            p.n / 2,
            p.couplings.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "),
            if p.exact { " (squares given exactly)" } else { "" }
        );
        println!(
            "criteria:  {} (witness: {}, margin: {:e}{}{})",
            state_name(a.verdict.state),
            a.verdict.witness.unwrap_or("-"),
            a.verdict.margin,
            if a.oracle_fallback { ", via exact oracle fallback" } else { "" },
            if a.side_condition_binding { ", side condition binding" } else { "" },
        );
        if let Some(aux) = a.aux {
            let show = |v: Option<f64>| v.map(|x| format!("{x:.6e}")).unwrap_or_else(|| "-".into());
            println!(
                "aux:       B = {:.6e}, q = {}, C = {}, D = {}, G = {}",
                aux.b,
                show(aux.q),
                show(aux.c),
                show(aux.d),
                show(aux.g)
            );
        }
        if let Some(v) = &exact_verdict {
            println!(
                "oracle:    {} (witness: {})",
                state_name(v.state),
                v.witness.unwrap_or("-")
            );
        }
        if let Some(rep) = &report {
            print_spectrum_human(rep);
        }
    }
    Ok(verdict_code(decisive))
}

fn cmd_spectrum(cli: &Cli, point: &PointArgs) -> CliResult {
    let p = resolve_point(point)?;
    let form = to_secular_form(&char_poly_from_squares(p.n, &p.squares)?, p.n)?;
    let rep = oracle::numeric_spectrum_form(&form, p.n)?;
    if cli.format() == "json" {
        println!(
            "{}",
            serde_json::to_string_pretty(&spectrum_json(&rep)).expect("serializable")
        );
    } else {
        print_spectrum_human(&rep);
    }
    Ok(exit_code::INSIDE)
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

fn cmd_scan(cli: &Cli) -> CliResult {
    let Command::Scan { config, n, grid, ray, mode, spectrum } = &cli.command else {
        unreachable!()
    };
    let mut cfg: ScanConfig = match config {
        Some(path) => {
            let bytes = std::fs::read(path)?;
            serde_json::from_slice(&bytes)
                .map_err(|e| CliError::data(format!("bad config {}: {e}", path.display())))?
        }
        None => ScanConfig {
            n: 0,
            grid: Vec::new(),
            rays: Vec::new(),
            mode: ScanMode::Criteria,
            epsilon: cli.epsilon(),
            output: None,
            format: cli.format().to_string(),
            seed: cli.seed(),
            threads: None,
            spectrum: false,
        },
    };
    // flags override file values
    if let Some(n) = n {
        cfg.n = *n;
    }
    if !grid.is_empty() {
        cfg.grid = grid.clone();
        cfg.rays.clear();
    }
    if !ray.is_empty() {
        cfg.rays = ray.clone();
        cfg.grid.clear();
    }
    if let Some(m) = mode {
        cfg.mode = match m.as_str() {
            "criteria" => ScanMode::Criteria,
            "oracle" => ScanMode::Oracle,
            "both" => ScanMode::Both,
            other => return Err(CliError::data(format!("unknown mode '{other}'"))),
        };
    }
    if *spectrum {
        cfg.spectrum = true;
    }
    if cli.output.is_some() {
        cfg.output = cli.output.clone();
    }
    if let Some(eps) = cli.epsilon {
        cfg.epsilon = eps;
    }
    if let Some(fmt) = &cli.format {
        cfg.format = fmt.clone();
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    cfg.validate().map_err(CliError::data)?;
    if cli.threads.is_none() {
        if let Some(t) = cfg.threads {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }

    let outcome = scan::run_scan(&cfg)?;
    outcome
        .table
        .write(cfg.out_format().map_err(CliError::data)?, cfg.output.as_deref())?;
    if outcome.mismatches > 0 {
        return Err(CliError::internal(format!(
            "{} criteria/oracle mismatches outside the epsilon band",
            outcome.mismatches
        )));
    }
    Ok(exit_code::INSIDE)
}

// ---------------------------------------------------------------------------
// boundary
// ---------------------------------------------------------------------------

fn cmd_boundary(cli: &Cli) -> CliResult {
    let Command::Boundary { n, rays, ray_list, tol } = &cli.command else { unreachable!() };
    let j = n / 2;
    let mut directions: Vec<Vec<f64>> = ray_list.clone();
    if *rays > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed());
        for _ in 0..*rays {
            let d: Vec<f64> = (0..j).map(|_| rng.random_range(0.0..1.0)).collect();
            if d.iter().map(|x| x * x).sum::<f64>() > 0.0 {
                directions.push(d);
            }
        }
    }
    if directions.is_empty() {
        return Err(CliError::data("no rays given (use --ray or --rays)"));
    }

    let mut header: Vec<String> = vec!["ray".into()];
    header.extend((1..=j).map(|k| format!("d{k}")));
    header.extend((1..=j).map(|k| format!("g{k}")));
    header.extend(["radius", "min_s_gap", "min_s_root", "error"].map(String::from));
    let mut table = Table::new(header);

    for (idx, d) in directions.iter().enumerate() {
        let mut row: Vec<Value> = vec![Value::from(idx)];
        row.extend(d.iter().map(|&x| num(x)));
        match boundary_bisect(*n, d, *tol) {
            Ok(point) => {
                row.extend(point.couplings.couplings().iter().map(|&x| num(x)));
                row.push(num(point.radius));
                row.push(num(point.min_s_gap));
                row.push(num(point.min_s_magnitude));
                row.push(text(""));
            }
            Err(e) => {
                // recorded, not fatal: some rays may never leave the domain box
                row.extend(std::iter::repeat_n(Value::Null, j));
                row.push(Value::Null);
                row.push(Value::Null);
                row.push(Value::Null);
                row.push(text(e.to_string()));
            }
        }
        table.push(row);
    }
    table.write(out_format(cli.format()), cli.output.as_deref())?;
    Ok(exit_code::INSIDE)
}

// ---------------------------------------------------------------------------
// eep / dep
// ---------------------------------------------------------------------------

fn cmd_eep(cli: &Cli, n: Option<usize>, all: bool) -> CliResult {
    let dims: Vec<usize> = if all {
        (2..=11).collect()
    } else {
        vec![n.ok_or_else(|| CliError::data("give -N or --all"))?]
    };
    let mut header: Vec<String> = vec!["n".into(), "j".into()];
    header.extend(["couplings", "squares", "literal_values", "certified"].map(String::from));
    let mut table = Table::new(header);
    for dim in dims {
        let p = eep_point(dim)?; // exact vanishing certified inside
        let squares: Vec<String> =
            p.coupling_squares_exact().iter().map(|r| r.to_string()).collect();
        table.push(vec![
            Value::from(dim),
            Value::from(dim / 2),
            text(p.couplings().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")),
            text(squares.join(" ")),
            text(
                p.literal_couplings()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            Value::from(true),
        ]);
    }
    table.write(out_format(cli.format()), cli.output.as_deref())?;
    Ok(exit_code::INSIDE)
}

fn cmd_dep(cli: &Cli, c_range: scan::GridAxis) -> CliResult {
    if c_range.steps < 1 || c_range.min > c_range.max || c_range.min < 0.0 {
        return Err(CliError::data("bad c-range (need 0 <= lo <= hi, steps >= 1)"));
    }
    let mut header: Vec<String> = vec!["c_squared".into()];
    header.extend(
        [
            "c", "b", "a", "z", "valid", "degeneracy", "fei_residual", "second_residual",
            "unequal_margin",
        ]
        .map(String::from),
    );
    let mut table = Table::new(header);
    let mut valid = 0usize;
    for i in 0..c_range.steps {
        let c2 = c_range.value(i);
        let c = c2.sqrt();
        if c <= 0.0 {
            continue;
        }
        match dep_solve_n6(c)? {
            Some(p) => {
                valid += 1;
                let [fei, second, unequal] = p.invariant_residuals();
                let rep = oracle::numeric_spectrum(&p.coupling_vector())?;
                let pattern = rep
                    .degeneracy_pattern
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join("+");
                table.push(vec![
                    num(c2),
                    num(p.c),
                    num(p.b),
                    num(p.a),
                    num(p.z),
                    Value::from(true),
                    text(pattern),
                    num(fei),
                    num(second),
                    num(unequal),
                ]);
            }
            None => {
                table.push(vec![
                    num(c2),
                    num(c),
                    Value::Null,
                    Value::Null,
                    Value::Null,
                    Value::from(false),
                    Value::Null,
                    Value::Null,
                    Value::Null,
                    Value::Null,
                ]);
            }
        }
    }
    table.write(out_format(cli.format()), cli.output.as_deref())?;
    eprintln!("{valid} valid DEP points of {} sweep points", c_range.steps);
    Ok(exit_code::INSIDE)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn verify_dimension(
    n: usize,
    points: usize,
    epsilon: f64,
    rng: &mut ChaCha8Rng,
) -> Result<(usize, usize), CliError> {
    let j = n / 2;
    let mut banded = 0usize;
    let mut mismatches = 0usize;
    for _ in 0..points {
        let squares: Vec<BigRational> = (1..=j)
            .map(|k| {
                let hi = 1200 * ((n - k) * k) as i64;
                BigRational::new(rng.random_range(0..=hi).into(), 1000.into())
            })
            .collect();
        let form = to_secular_form(&char_poly_from_squares(n, &squares)?, n)?;
        let ours = assess(&form, epsilon)?;
        let exact = oracle::oracle_verdict_form(&form)?;
        if ours.verdict.state == DomainState::BoundaryBand
            || exact.state == DomainState::BoundaryBand
        {
            banded += 1;
        } else if ours.verdict.state != exact.state {
            mismatches += 1;
            eprintln!(
                "mismatch at N={n}: criteria {} vs oracle {} for g² = [{}]",
                state_name(ours.verdict.state),
                state_name(exact.state),
                squares.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
            );
        }
    }
    Ok((banded, mismatches))
}

fn cmd_verify(cli: &Cli, n: Option<usize>, all: bool, points: usize) -> CliResult {
    let dims: Vec<usize> = if all {
        (2..=11).collect()
    } else {
        vec![n.ok_or_else(|| CliError::data("give -N or --all"))?]
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed());
    let mut total_mismatches = 0usize;
    for dim in dims {
        let (banded, mismatches) = verify_dimension(dim, points, cli.epsilon(), &mut rng)?;
        println!(
            "N={dim}: {points} points, {banded} in the epsilon band, {mismatches} mismatches"
        );
        total_mismatches += mismatches;
    }
    if total_mismatches > 0 {
        return Err(CliError::internal(format!(
            "{total_mismatches} criteria/oracle mismatches"
        )));
    }
    Ok(exit_code::INSIDE)
}
