//! Command-line surface over the qdense library: exact formula evaluation,
//! bound reports as JSON, brute-force censuses, figure data as CSV, and the
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error (clap),
//! 3 precondition violation, 4 census budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use qdense::bounds::{
    cc_bounds, cc_bounds_lmax, cone_bounds, decomposition_rhs, duality_densities,
    generic_density_bounds, mrd_density_upper_m, mrd_density_upper_q, prior_bounds,
    special_basis_bound, tingley_lower, BoundReport, Extent, IntersectionProfile, PriorValue,
};
use qdense::exact::{parse_rational, rat, to_decimal, ExactInt, ExactRational};
use qdense::gf::{field_make, FieldSpec, Subspace};
use qdense::interval::RealInterval;
use qdense::oracle::{
    count_common_complements, count_distinguishing_cone, count_distinguishing_functionals,
    count_intersecting_both, dual_code, intersection_profile, mrd_census, split_code,
    theta_census, Budget, ConeSpec, FamilySpec, MatrixCode, OracleError,
};
use qdense::qfunc::{ball_size, euler_phi_interval, nu, pi_q_interval, qbinom, tau_linear, theta};
use qdense::verify::{run_suite, SuiteLevel};
use qdense::{DomainError, DomainResult};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "qdense",
    version,
    about = "Exact counts, bounds, and exhaustive censuses for common complements \
             of subspace families and rank-metric code densities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a closed formula exactly
    #[command(subcommand)]
    Compute(ComputeCmd),
    /// Evaluate a bound and print the report as JSON
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Run a brute-force census and print the counts as JSON
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Emit the data behind a figure as CSV
    Figure {
        which: FigureKind,
        /// Comma-separated field sizes, e.g. 2,3,4,5
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<u64>,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and print its report as JSON
    Verify { level: LevelKind },
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureKind {
    Fig1,
    Fig2,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelKind {
    Smoke,
    Full,
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// Gaussian binomial: b-dimensional subspaces of F_q^a
    Qbinom {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        q: u64,
    },
    /// k-subspaces meeting both members of a pair of (N-k)-subspaces whose
    /// intersection has dimension l
    Nu {
        #[arg(long = "N")]
        n_amb: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        q: u64,
    },
    /// Ordered pairs of u-subspaces of F_q^n meeting in dimension i
    Theta {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        u: u64,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        q: u64,
    },
    /// r-tuples of functionals on F_q^N jointly injective on a k-subspace
    Tau {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        k: u64,
        #[arg(long = "N")]
        n_amb: u64,
        #[arg(long)]
        q: u64,
    },
    /// Rank-metric ball: n x m matrices over F_q of rank at most r
    Ball {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        q: u64,
    },
    /// Interval enclosure of pi(q) = 1 / phi(1/q)
    Pi {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "1e-9")]
        eps: String,
        #[arg(long, default_value_t = 12)]
        places: usize,
    },
    /// Interval enclosure of the Euler function phi(1/q)
    Phi {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "1e-9")]
        eps: String,
        #[arg(long, default_value_t = 12)]
        places: usize,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Common-complement sandwich from a measured intersection profile
    Cc {
        /// JSON file {"s": int, "N": int, "k": int, "counts": {"l": count}}
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// Worst-case sandwich from a cap on pairwise intersection dimensions
    CcLmax {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        lmax: u64,
        #[arg(long = "N")]
        n_amb: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        q: u64,
    },
    /// Sandwich on k-subspaces meeting a scalar-closed cone of known size
    Cone {
        /// Cone cardinality including zero, as an integer
        #[arg(long)]
        size: String,
        #[arg(long = "N")]
        n_amb: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        q: u64,
    },
    /// MRD density upper bound at fixed parameters
    MrdQ {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        q: u64,
    },
    /// Density sandwich for dimension-k codes of minimum distance >= d
    Generic {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        q: u64,
    },
    /// Enclosure of the m -> infinity limsup of the MRD density bound
    MrdM {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "1e-9")]
        eps: String,
    },
    /// Previously published bounds applicable to the requested regime
    Prior {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        /// Number of columns, or "inf" for the m -> infinity regime
        #[arg(long)]
        m: String,
        /// Field size, or "inf" for the q -> infinity regime
        #[arg(long)]
        q: String,
        #[arg(long, default_value = "1e-9")]
        eps: String,
    },
    /// Inclusion-exclusion lower bound on common complements of s spaces
    Tingley {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        q: u64,
    },
    /// Density relations across shapes: decomposition, duality, special basis
    #[command(name = "section7")]
    Section7 {
        #[arg(long)]
        relation: Relation,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        q: u64,
        /// Density of the d x m top factor (decomposition)
        #[arg(long)]
        delta_top: Option<String>,
        /// Density of the (n-1) x m remainder factor (decomposition)
        #[arg(long)]
        delta_rest: Option<String>,
        /// Census count at (n x m, m(n-d+1), d) (duality)
        #[arg(long)]
        count_primal: Option<String>,
        /// Census count at (n x m, m(d-1), n-d+2) (duality)
        #[arg(long)]
        count_dual: Option<String>,
        /// Density of 2 x m distance-2 codes (special-basis)
        #[arg(long)]
        delta_2m: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Decomposition,
    Duality,
    SpecialBasis,
}

#[derive(clap::Args)]
struct OracleOpts {
    /// Worker threads for the shard-parallel census
    #[arg(long)]
    threads: Option<NonZeroUsize>,
    /// Cap on enumerated subspaces/tuples; overrides QDENSE_BUDGET
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Census of common complements of a family
    Cc {
        /// JSON file {"q","p","e","N","members":[[rows]]}
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Census of k-subspaces avoiding / meeting the union of a family
    Cone {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Census of MRD codes, counted two independent ways
    Mrd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Exhaustive count behind the pair-intersection formula
    Nu {
        #[arg(long = "N")]
        n_amb: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Exhaustive pair census behind the intersection-distribution formula
    Theta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Exhaustive functional-tuple count over the union of a family
    Tau {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Trace-form dual of a matrix code
    Dual {
        /// JSON file {"q","p","e","n","m","rows":[[flat n*m rows]]}
        #[arg(long)]
        code: PathBuf,
    },
    /// Top-row split of an MRD code into two smaller MRD factors
    Split {
        #[arg(long)]
        code: PathBuf,
    },
    /// Pairwise intersection profile of a family
    Profile {
        #[arg(long)]
        family: PathBuf,
    },
}

enum CliError {
    Precondition(String),
    Budget(String),
    Verification,
}

impl From<DomainError> for CliError {
    fn from(e: DomainError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Domain(d) => CliError::Precondition(d.to_string()),
            OracleError::Budget(b) => CliError::Budget(b.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification) => ExitCode::from(1),
        Err(CliError::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Compute(c) => compute(c),
        Cmd::Bound(b) => bound(b),
        Cmd::Oracle(o) => oracle(o),
        Cmd::Figure { which, q_list, out } => figure(which, &q_list, out.as_deref()),
        Cmd::Verify { level } => verify(level),
    }
}

fn precondition(msg: impl Into<String>) -> CliError {
    CliError::Precondition(msg.into())
}

fn parse_eps(s: &str) -> Result<ExactRational, CliError> {
    match parse_rational(s) {
        Some(e) if e > rat(0, 1) => Ok(e),
        _ => Err(precondition(format!("eps must be a positive rational, got '{s}'"))),
    }
}

fn parse_int(s: &str, what: &str) -> Result<ExactInt, CliError> {
    ExactInt::from_str(s).map_err(|_| precondition(format!("{what} must be an integer, got '{s}'")))
}

fn parse_rat_flag(s: Option<&str>, what: &str) -> Result<ExactRational, CliError> {
    let s = s.ok_or_else(|| precondition(format!("--{what} is required for this relation")))?;
    parse_rational(s).map_err_none(format!("--{what} must be a rational, got '{s}'"))
}

trait MapErrNone<T> {
    fn map_err_none(self, msg: String) -> Result<T, CliError>;
}

impl<T> MapErrNone<T> for Option<T> {
    fn map_err_none(self, msg: String) -> Result<T, CliError> {
        self.ok_or(CliError::Precondition(msg))
    }
}

fn field_of_order(q: u64) -> Result<FieldSpec, CliError> {
    if q < 2 {
        return Err(precondition(format!("field order must be at least 2, got {q}")));
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let mut e = 0u32;
    let mut t = q;
    while t % p == 0 {
        t /= p;
        e += 1;
    }
    if t != 1 {
        return Err(precondition(format!("{q} is not a prime power")));
    }
    field_make(p, e).map_err(|e| precondition(e.to_string()))
}

fn interval_json(iv: &RealInterval, places: usize) -> Value {
    json!({
        "lo": format!("{}/{}", iv.lo().numer(), iv.lo().denom()),
        "hi": format!("{}/{}", iv.hi().numer(), iv.hi().denom()),
        "decimal": iv.to_decimal(places),
    })
}

fn compute(cmd: ComputeCmd) -> Result<(), CliError> {
    let line = match cmd {
        ComputeCmd::Qbinom { a, b, q } => {
            if q < 2 {
                return Err(precondition(format!("need q >= 2, got {q}")));
            }
            qbinom(a, b, q).to_string()
        }
        ComputeCmd::Nu { n_amb, k, l, q } => nu(n_amb, k, l, q)?.to_string(),
        ComputeCmd::Theta { n, u, i, q } => theta(n, u, i, q)?.to_string(),
        ComputeCmd::Tau { r, k, n_amb, q } => tau_linear(r, k, n_amb, q)?.to_string(),
        ComputeCmd::Ball { n, m, r, q } => ball_size(n, m, r, q)?.to_string(),
        ComputeCmd::Pi { q, eps, places } => {
            let iv = pi_q_interval(q, &parse_eps(&eps)?)?;
            interval_json(&iv, places).to_string()
        }
        ComputeCmd::Phi { q, eps, places } => {
            let iv = euler_phi_interval(q, &parse_eps(&eps)?)?;
            interval_json(&iv, places).to_string()
        }
    };
    println!("{line}");
    Ok(())
}

fn read_profile(path: &std::path::Path) -> Result<IntersectionProfile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| precondition(format!("cannot read {}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| precondition(format!("bad profile JSON: {e}")))?;
    let field_u64 = |name: &str| -> Result<u64, CliError> {
        doc.get(name)
            .and_then(Value::as_u64)
            .map_err_none(format!("profile field '{name}' must be a nonnegative integer"))
    };
    let s = field_u64("s")?;
    let n_amb = field_u64("N")?;
    let k = field_u64("k")?;
    let raw = doc
        .get("counts")
        .and_then(Value::as_object)
        .map_err_none("profile field 'counts' must be an object".into())?;
    let mut counts = BTreeMap::new();
    for (key, val) in raw {
        let l: u64 = key
            .parse()
            .map_err(|_| precondition(format!("counts key '{key}' is not an integer")))?;
        let c = match val {
            Value::Number(n) => parse_int(&n.to_string(), "count")?,
            Value::String(s) => parse_int(s, "count")?,
            _ => return Err(precondition(format!("count at l = {l} must be an integer"))),
        };
        counts.insert(l, c);
    }
    Ok(IntersectionProfile::new(s, n_amb, k, counts)?)
}

fn read_family(path: &std::path::Path) -> Result<FamilySpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| precondition(format!("cannot read {}: {e}", path.display())))?;
    Ok(FamilySpec::from_json(&text)?)
}

fn read_code(path: &std::path::Path) -> Result<MatrixCode, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| precondition(format!("cannot read {}: {e}", path.display())))?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| precondition(format!("bad code JSON: {e}")))?;
    let get = |name: &str| -> Result<u64, CliError> {
        doc.get(name)
            .and_then(Value::as_u64)
            .map_err_none(format!("code field '{name}' must be a nonnegative integer"))
    };
    let (q, p, e) = (get("q")?, get("p")?, get("e")? as u32);
    let field = field_make(p, e).map_err(|e| precondition(e.to_string()))?;
    if field.q() != q {
        return Err(precondition(format!("q = {q} does not match p^e = {}", field.q())));
    }
    let (n, m) = (get("n")? as usize, get("m")? as usize);
    let rows: Vec<Vec<u16>> = doc
        .get("rows")
        .and_then(Value::as_array)
        .map_err_none("code field 'rows' must be an array of flat rows".into())?
        .iter()
        .map(|row| {
            row.as_array()
                .map_err_none("each code row must be an array".into())?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .filter(|&v| v < q)
                        .map(|v| v as u16)
                        .map_err_none(format!("code entries must be integers below q = {q}"))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    Ok(MatrixCode::from_flat_rows(&field, n, m, &rows)?)
}

fn print_report(report: &BoundReport) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    Ok(())
}

fn upper_only_report(subject: &str, params: Value, upper: ExactRational) -> BoundReport {
    let mut report = BoundReport::new(subject, params);
    report.upper = Some(upper);
    report
}

fn bound(cmd: BoundCmd) -> Result<(), CliError> {
    match cmd {
        BoundCmd::Cc { profile, q } => {
            let profile = read_profile(&profile)?;
            print_report(&cc_bounds(&profile, q)?)
        }
        BoundCmd::CcLmax { s, lmax, n_amb, k, q } => {
            print_report(&cc_bounds_lmax(s, lmax, n_amb, k, q)?)
        }
        BoundCmd::Cone { size, n_amb, k, q } => {
            let size = parse_int(&size, "cone size")?;
            print_report(&cone_bounds(&size, n_amb, k, q)?)
        }
        BoundCmd::MrdQ { n, m, d, q } => {
            let value = mrd_density_upper_q(n, m, d, q)?;
            print_report(&upper_only_report(
                "mrd-density-upper",
                json!({"n": n, "m": m, "d": d, "q": q}),
                value,
            ))
        }
        BoundCmd::Generic { n, m, k, d, q } => {
            print_report(&generic_density_bounds(n, m, k, d, q)?)
        }
        BoundCmd::MrdM { n, d, q, eps } => {
            let iv = mrd_density_upper_m(n, d, q, &parse_eps(&eps)?)?;
            let report = BoundReport::new(
                "mrd-density-upper-m-limit",
                json!({"n": n, "d": d, "q": q, "eps": eps}),
            )
            .with_bounds(iv.lo().clone(), iv.hi().clone())
            .note("interval enclosure of the m -> infinity limsup bound");
            print_report(&report)
        }
        BoundCmd::Prior { n, d, m, q, eps } => {
            let eps = parse_eps(&eps)?;
            let parse_extent = |s: &str, what: &str| -> Result<Extent, CliError> {
                if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinite") {
                    Ok(Extent::Infinite)
                } else {
                    s.parse::<u64>()
                        .map(Extent::Finite)
                        .map_err(|_| precondition(format!("--{what} must be an integer or 'inf'")))
                }
            };
            let m_ext = parse_extent(&m, "m")?;
            let q_ext = parse_extent(&q, "q")?;
            let params = json!({"n": n, "m": m, "d": d, "q": q});
            let reports: Vec<Value> = prior_bounds(n, m_ext, d, q_ext, &eps)?
                .into_iter()
                .map(|b| {
                    let report = match b.value {
                        PriorValue::Exact(v) => BoundReport::new(b.label, params.clone())
                            .with_bounds(v.clone(), v),
                        PriorValue::Interval(iv) => BoundReport::new(b.label, params.clone())
                            .with_bounds(iv.lo().clone(), iv.hi().clone())
                            .note("interval enclosure"),
                    };
                    report.to_json()
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"bounds": reports})).unwrap()
            );
            Ok(())
        }
        BoundCmd::Tingley { s, q } => {
            let value = tingley_lower(s, q)?;
            let mut report =
                BoundReport::new("common-complement-lower-classical", json!({"s": s, "q": q}));
            report.lower = Some(qdense::exact::rat_int(&value));
            print_report(&report)
        }
        BoundCmd::Section7 {
            relation,
            n,
            m,
            d,
            q,
            delta_top,
            delta_rest,
            count_primal,
            count_dual,
            delta_2m,
        } => {
            let params = json!({"n": n, "m": m, "d": d, "q": q});
            let report = match relation {
                Relation::Decomposition => {
                    let top = parse_rat_flag(delta_top.as_deref(), "delta-top")?;
                    let rest = parse_rat_flag(delta_rest.as_deref(), "delta-rest")?;
                    let rhs = decomposition_rhs(n, m, d, q, &top, &rest)?;
                    upper_only_report("decomposition-upper", params, rhs)
                        .note("product bound from splitting off the top d rows")
                }
                Relation::Duality => {
                    let primal = parse_int(
                        count_primal
                            .as_deref()
                            .map_err_none("--count-primal is required for duality".into())?,
                        "--count-primal",
                    )?;
                    let dual = parse_int(
                        count_dual
                            .as_deref()
                            .map_err_none("--count-dual is required for duality".into())?,
                        "--count-dual",
                    )?;
                    let (dp, dd, agree) = duality_densities(n, m, d, q, &primal, &dual)?;
                    BoundReport::new("duality-densities", params)
                        .with_bounds(dp.clone(), dp)
                        .note(format!(
                            "dual-side density {}, agreement: {agree}",
                            to_decimal(&dd, 12)
                        ))
                }
                Relation::SpecialBasis => {
                    let d2m = parse_rat_flag(delta_2m.as_deref(), "delta-2m")?;
                    let rhs = special_basis_bound(n, m, d, q, &d2m)?;
                    upper_only_report("special-basis-upper", params, rhs)
                        .note("iterated two-row decomposition bound")
                }
            };
            print_report(&report)
        }
    }
}

fn install_threads(opts: &OracleOpts) -> Result<Budget, CliError> {
    if let Some(t) = opts.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t.get())
            .build_global()
            .map_err(|e| precondition(format!("cannot set thread count: {e}")))?;
    }
    Ok(Budget::with_override(opts.budget))
}

fn census_json(subject: &str, params: Value, counts: Value, shards: usize, ms: u128) -> Value {
    json!({
        "subject": subject,
        "params": params,
        "counts": counts,
        "shards": shards,
        "elapsed_ms": ms as u64,
    })
}

fn oracle(cmd: OracleCmd) -> Result<(), CliError> {
    let out = match cmd {
        OracleCmd::Cc { family, k, opts } => {
            let budget = install_threads(&opts)?;
            let fam = read_family(&family)?;
            let census = count_common_complements(&fam, k, &budget)?;
            census_json(
                "common-complement-census",
                json!({"family": fam.to_json(), "k": k}),
                json!({
                    "complements": census.complements.to_string(),
                    "intersecting": census.intersecting.to_string(),
                    "total": census.total.to_string(),
                }),
                census.shards,
                census.elapsed_ms,
            )
        }
        OracleCmd::Cone { family, k, opts } => {
            let budget = install_threads(&opts)?;
            let fam = read_family(&family)?;
            let cone = ConeSpec::UnionOfMembers(fam.members());
            let census =
                count_distinguishing_cone(&cone, fam.field(), fam.ambient(), k, &budget)?;
            census_json(
                "cone-census",
                json!({"family": fam.to_json(), "k": k}),
                json!({
                    "distinguishing": census.distinguishing.to_string(),
                    "meeting": census.meeting.to_string(),
                    "total": census.total.to_string(),
                }),
                census.shards,
                census.elapsed_ms,
            )
        }
        OracleCmd::Mrd { n, m, d, q, opts } => {
            let budget = install_threads(&opts)?;
            let field = field_of_order(q)?;
            let census = mrd_census(n, m, d, &field, &budget)?;
            census_json(
                "mrd-census",
                json!({"n": n, "m": m, "d": d, "q": q}),
                json!({
                    "count": census.count.to_string(),
                    "total": census.total.to_string(),
                    "density": format!("{}/{}", census.density.numer(), census.density.denom()),
                    "density_decimal": to_decimal(&census.density, 12),
                }),
                census.shards,
                census.elapsed_ms,
            )
        }
        OracleCmd::Nu { n_amb, k, l, q, opts } => {
            let budget = install_threads(&opts)?;
            let field = field_of_order(q)?;
            if k == 0 || k >= n_amb {
                return Err(precondition(format!(
                    "need 1 <= k <= N-1, got N = {n_amb}, k = {k}"
                )));
            }
            let (a, b) = canonical_pair(&field, n_amb, n_amb - k, l)?;
            let count = count_intersecting_both(&a, &b, k, &budget)?;
            let formula = nu(n_amb as u64, k as u64, l as u64, q)?;
            json!({
                "subject": "pair-intersection-census",
                "params": {"N": n_amb, "k": k, "l": l, "q": q},
                "counts": {"intersecting_both": count.to_string(), "closed_form": formula.to_string()},
                "agree": count == formula,
            })
        }
        OracleCmd::Theta { n, u, q, opts } => {
            let budget = install_threads(&opts)?;
            let field = field_of_order(q)?;
            let counts = theta_census(&field, n, u, &budget)?;
            let by_dim: serde_json::Map<String, Value> = counts
                .iter()
                .map(|(l, c)| (l.to_string(), Value::String(c.to_string())))
                .collect();
            json!({
                "subject": "pair-census-by-intersection-dimension",
                "params": {"n": n, "u": u, "q": q},
                "counts": by_dim,
            })
        }
        OracleCmd::Tau { family, r, opts } => {
            let budget = install_threads(&opts)?;
            let fam = read_family(&family)?;
            let mut points: Vec<Vec<u16>> = Vec::new();
            for member in fam.members() {
                member.for_each_vector(|v| points.push(v.to_vec()));
            }
            let count = count_distinguishing_functionals(
                fam.field(),
                fam.ambient(),
                &points,
                r,
                &budget,
            )?;
            json!({
                "subject": "distinguishing-functional-census",
                "params": {"family": fam.to_json(), "r": r},
                "counts": {"distinguishing_tuples": count.to_string()},
            })
        }
        OracleCmd::Dual { code } => {
            let code = read_code(&code)?;
            let dual = dual_code(&code);
            let (n, m) = code.shape();
            json!({
                "subject": "trace-form-dual",
                "params": {"n": n, "m": m, "q": code.field().q()},
                "primal": {"dim": code.dim(), "min_distance": min_dist_json(&code)},
                "dual": {
                    "dim": dual.dim(),
                    "min_distance": min_dist_json(&dual),
                    "rows": basis_rows_json(&dual),
                },
            })
        }
        OracleCmd::Split { code } => {
            let code = read_code(&code)?;
            let split = split_code(&code)?;
            let (n, m) = code.shape();
            json!({
                "subject": "top-row-split",
                "params": {"n": n, "m": m, "q": code.field().q()},
                "c1": factor_json(&split.c1),
                "c2": factor_json(&split.c2),
            })
        }
        OracleCmd::Profile { family } => {
            let fam = read_family(&family)?;
            let profile = intersection_profile(&fam)?;
            let counts: serde_json::Map<String, Value> = profile
                .counts()
                .iter()
                .map(|(l, c)| (l.to_string(), Value::String(c.to_string())))
                .collect();
            // same shape `bound cc --profile` accepts
            json!({
                "s": profile.s(),
                "N": profile.ambient(),
                "k": profile.codim(),
                "counts": counts,
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(())
}

fn min_dist_json(code: &MatrixCode) -> Value {
    match code.min_distance() {
        Ok(d) => json!(d),
        Err(_) => Value::Null,
    }
}

fn factor_json(code: &MatrixCode) -> Value {
    let (n, m) = code.shape();
    json!({
        "n": n,
        "m": m,
        "dim": code.dim(),
        "min_distance": min_dist_json(code),
        "rows": basis_rows_json(code),
    })
}

fn basis_rows_json(code: &MatrixCode) -> Value {
    json!(code.space().basis_rows().collect::<Vec<_>>())
}

/// Two d-subspaces of F_q^N in standard position with intersection
/// dimension l.
fn canonical_pair(
    field: &FieldSpec,
    n: usize,
    dim: usize,
    l: usize,
) -> DomainResult<(Subspace, Subspace)> {
    let err = |msg: String| Err(DomainError::new("canonical_pair", msg));
    if dim == 0 || dim > n {
        return err(format!("member dimension {dim} out of range for N = {n}"));
    }
    if l > dim || 2 * dim - l > n {
        return err(format!(
            "no pair of {dim}-subspaces of F_q^{n} meets in dimension {l}"
        ));
    }
    let unit = |i: usize| {
        let mut v = vec![0u16; n];
        v[i] = 1;
        v
    };
    let a_rows: Vec<Vec<u16>> = (0..dim).map(unit).collect();
    let b_rows: Vec<Vec<u16>> =
        (0..l).map(unit).chain((0..dim - l).map(|i| unit(dim + i))).collect();
    Ok((Subspace::span(field, n, &a_rows), Subspace::span(field, n, &b_rows)))
}

fn figure(which: FigureKind, q_list: &[u64], out: Option<&std::path::Path>) -> Result<(), CliError> {
    if q_list.is_empty() {
        return Err(precondition("--q-list needs at least one field size"));
    }
    let mut csv = String::new();
    match which {
        FigureKind::Fig1 => {
            csv.push_str("q,bound_mrd_q,bound_generic\n");
            for &q in q_list {
                let red = mrd_density_upper_q(3, 5, 3, q)?;
                let report = generic_density_bounds(3, 5, 5, 3, q)?;
                let blue = report.upper.as_ref().expect("generic bound always has an upper");
                csv.push_str(&format!(
                    "{q},{},{}\n",
                    to_decimal(&red, 12),
                    to_decimal(blue, 12)
                ));
            }
        }
        FigureKind::Fig2 => {
            // eps well under the rendered precision so 12-place output is stable
            let eps = parse_rational("1e-15").unwrap();
            csv.push_str("q,bound_prior_m,bound_mrd_m\n");
            for &q in q_list {
                let red = mrd_density_upper_m(3, 3, q, &eps)?;
                let priors = prior_bounds(3, Extent::Infinite, 3, Extent::Finite(q), &eps)?;
                let blue = priors
                    .into_iter()
                    .find_map(|b| match (b.label, b.value) {
                        ("euler-power", PriorValue::Interval(iv)) => Some(iv),
                        _ => None,
                    })
                    .expect("euler-power bound present in the m-limit regime");
                csv.push_str(&format!("{q},{},{}\n", blue.to_decimal(12), red.to_decimal(12)));
            }
        }
    }
    match out {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| precondition(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn verify(level: LevelKind) -> Result<(), CliError> {
    let level = match level {
        LevelKind::Smoke => SuiteLevel::Smoke,
        LevelKind::Full => SuiteLevel::Full,
    };
    let report = run_suite(level);
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    if report.pass() {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}
