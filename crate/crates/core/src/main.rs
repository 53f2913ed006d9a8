use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nonarch::absval::{abs_eval, check_q_subadditive, equivalence_exponent, is_archimedean, ArchimedeanVerdict, EquivExponent};
use nonarch::chain::{self, Threshold};
use nonarch::lr::{self, FiniteVec, Key, NormedSpace};
use nonarch::measure::{self, AtomicSpace, FAMeasure, IntervalSet, SimpleFn};
use nonarch::rational::parse_rational;
use nonarch::{AbsoluteValue, DistMatrix, Exponent, MaxExponent, PadicApprox, Rational, Scalar};

#[derive(Parser)]
#[command(name = "nonarch", version, about = "Exact computations with absolute values, ultrametrics, ℓ^r spaces and simple functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Absolute values on the rationals
    #[command(subcommand)]
    Absval(AbsvalCmd),
    /// p-adic integers at finite precision
    #[command(subcommand)]
    Padic(PadicCmd),
    /// Distance-matrix audits
    #[command(subcommand)]
    Metric(MetricCmd),
    /// Chains, partitions and ultrametrics
    #[command(subcommand)]
    Chain(ChainCmd),
    /// ℓ^r norms of finitely supported vectors
    #[command(subcommand)]
    Lr(LrCmd),
    /// Simple functions on [0, 1)
    #[command(subcommand)]
    Measure(MeasureCmd),
}

#[derive(Subcommand)]
enum AbsvalCmd {
    /// Evaluate |x|
    Eval {
        #[arg(long = "abs")]
        absval: String,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
    /// Archimedean test and q-subadditivity on sample pairs (`x y` per line)
    Audit {
        #[arg(long = "abs")]
        absval: String,
        #[arg(long, default_value = "1")]
        q: String,
        #[arg(long, default_value_t = 100)]
        n_max: u64,
        input: Option<PathBuf>,
    },
    /// Find a with |x|_2 = |x|_1^a on comma-separated samples
    Equiv {
        #[arg(long)]
        abs1: String,
        #[arg(long)]
        abs2: String,
        #[arg(long, allow_hyphen_values = true)]
        samples: String,
    },
}

#[derive(Args)]
struct PadicParams {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    prec: u32,
}

#[derive(Subcommand)]
enum PadicCmd {
    /// Residue and digits of a rational
    Embed {
        #[command(flatten)]
        params: PadicParams,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
    /// Ring operations: add, sub, mul, div, neg, inv
    Arith {
        #[command(flatten)]
        params: PadicParams,
        #[arg(long)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Geometric series 1 + x + ... + x^n and its limit 1/(1 - x)
    Geom {
        #[command(flatten)]
        params: PadicParams,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Base-p digits, least significant first
    Digits {
        #[command(flatten)]
        params: PadicParams,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
}

#[derive(Args)]
struct MatrixInput {
    /// Distance-matrix file (standard input if absent)
    input: Option<PathBuf>,
    /// Read entries as binary floats instead of exact rationals
    #[arg(long)]
    float: bool,
}

#[derive(Subcommand)]
enum MetricCmd {
    /// List triples violating the q-triangle inequality (q = inf: ultrametric)
    Verify {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long, default_value = "1")]
        q: String,
        /// Also list triples whose two largest sides differ
        #[arg(long)]
        isoceles: bool,
    },
    /// Largest q for which the matrix is a q-metric
    Maxq {
        #[command(flatten)]
        m: MatrixInput,
    },
    /// Entrywise d^a
    Power {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Subcommand)]
enum ChainCmd {
    /// η-chain components, one block per line
    Partition {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long)]
        eta: String,
    },
    /// Subdominant ultrametric
    Subdominant {
        #[command(flatten)]
        m: MatrixInput,
    },
    /// Minimal a-length chain between two points, or the a-length of a given chain
    Length {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        /// Comma-separated labels
        #[arg(long)]
        chain: Option<String>,
        #[arg(long, default_value = "1")]
        a: String,
    },
    /// Largest threshold whose component of x stays inside B(x, r)
    Profile {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long)]
        x: String,
        #[arg(long)]
        r: String,
    },
    /// Round an ultrametric up to integer powers of a base
    Quantize {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long, default_value = "2")]
        base: String,
    },
}

#[derive(Args)]
struct SpaceArgs {
    /// trivial, real or padic:P, optionally raised to ^E
    #[arg(long = "abs", default_value = "real")]
    absval: String,
}

#[derive(Subcommand)]
enum LrCmd {
    /// ‖f‖_r and its r-th power
    Norm {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        r: String,
        input: Option<PathBuf>,
    },
    /// Keys carrying all but ε of the r-th power mass
    Tail {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        r: String,
        #[arg(long)]
        eps: String,
        input: Option<PathBuf>,
    },
    /// Certificate that an η-chain from 0 reaches norm L
    Erdos {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long)]
        eta: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        r: String,
        /// Print the endpoint of the chain as a vector file
        #[arg(long)]
        emit: bool,
    },
    /// Mass of g outside A(ε) for f on the sphere of radius ‖f‖_r
    Sphere {
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        r: String,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        g: PathBuf,
        input: Option<PathBuf>,
    },
}

#[derive(Args)]
struct MeasureArgs {
    /// Distribution-function file (`t F(t)` per line); Lebesgue if absent
    #[arg(long)]
    measure: Option<PathBuf>,
}

#[derive(Subcommand)]
enum MeasureCmd {
    /// ∫ f dμ for a nonnegative real simple function
    Integrate {
        #[command(flatten)]
        mu: MeasureArgs,
        input: Option<PathBuf>,
    },
    /// ‖f‖_{L^r}
    Norm {
        #[command(flatten)]
        mu: MeasureArgs,
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        r: String,
        input: Option<PathBuf>,
    },
    /// μ(A △ B) for sets written `[a,b) [c,d) ...`
    Dmu {
        #[command(flatten)]
        mu: MeasureArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Cut a set into pieces of measure below ε, one per line
    Decompose {
        #[command(flatten)]
        mu: MeasureArgs,
        #[arg(long)]
        set: String,
        #[arg(long)]
        eps: String,
    },
    /// ‖f_t2 - f_t1‖^r against μ([t1, t2)) ‖f‖_∞^r
    Path {
        #[command(flatten)]
        mu: MeasureArgs,
        #[command(flatten)]
        s: SpaceArgs,
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        #[arg(long, default_value = "1")]
        r: String,
        input: Option<PathBuf>,
    },
    /// Both sides of ∫ f∘φ dμ = ∫ f dν for atoms `label weight point`
    Push {
        #[arg(long)]
        atoms: PathBuf,
        input: Option<PathBuf>,
    },
}

enum Failure {
    Domain(String),
    Parse(String),
}

impl From<nonarch::Error> for Failure {
    fn from(e: nonarch::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<nonarch::ParseError> for Failure {
    fn from(e: nonarch::ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn parse_err(m: impl Into<String>) -> Failure {
    Failure::Parse(m.into())
}

fn rational(s: &str) -> Result<Rational, Failure> {
    parse_rational(s).ok_or_else(|| parse_err(format!("not a rational number: `{s}`")))
}

fn exponent(s: &str) -> Result<Exponent, Failure> {
    Exponent::parse(s).ok_or_else(|| parse_err(format!("not a positive exponent: `{s}`")))
}

fn finite_exponent(s: &str) -> Result<Rational, Failure> {
    match exponent(s)? {
        Exponent::Finite(r) => Ok(r),
        Exponent::Infinite => Err(parse_err("a finite exponent is required")),
    }
}

fn absval(s: &str) -> Result<AbsoluteValue, Failure> {
    AbsoluteValue::parse(s).ok_or_else(|| parse_err(format!("unknown absolute value `{s}`")))
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| parse_err(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| parse_err(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_file(p: &PathBuf) -> Result<String, Failure> {
    read_input(&Some(p.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Absval(c) => run_absval(c),
        Command::Padic(c) => run_padic(c),
        Command::Metric(c) => with_matrix(c),
        Command::Chain(c) => with_chain_matrix(c),
        Command::Lr(c) => run_lr(c),
        Command::Measure(c) => run_measure(c),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(m)) => {
            eprintln!("parse error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run_absval(c: AbsvalCmd) -> Out {
    match c {
        AbsvalCmd::Eval { absval: a, value } => {
            let v = absval(&a)?;
            let x = rational(&value)?;
            Ok(format!("|{x}|={}\n", abs_eval(&v, &x)))
        }
        AbsvalCmd::Audit { absval: a, q, n_max, input } => {
            let v = absval(&a)?;
            let q = finite_exponent(&q)?;
            let mut out = match is_archimedean(&v, n_max) {
                ArchimedeanVerdict::Archimedean(n) => format!("archimedean witness n={n}\n"),
                ArchimedeanVerdict::NonArchimedeanUpTo(n) => format!("non-archimedean up to n={n}\n"),
            };
            let samples = match input {
                Some(_) => parse_pairs(&read_input(&input)?)?,
                None => Vec::new(),
            };
            let bad = check_q_subadditive(&v, &samples, &q);
            writeln!(out, "violations={}", bad.len()).unwrap();
            for (x, y) in bad {
                writeln!(out, "{x} {y}").unwrap();
            }
            Ok(out)
        }
        AbsvalCmd::Equiv { abs1, abs2, samples } => {
            let (v1, v2) = (absval(&abs1)?, absval(&abs2)?);
            let xs = samples.split(',').map(|s| rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
            Ok(match equivalence_exponent(&v1, &v2, &xs)? {
                Some(EquivExponent::Exact(a)) => format!("a={a}\n"),
                Some(EquivExponent::Approx(a)) => format!("a~{a}\n"),
                None => "not equivalent on these samples\n".to_string(),
            })
        }
    }
}

fn parse_pairs(text: &str) -> Result<Vec<(Rational, Rational)>, Failure> {
    let mut v = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 2 {
            return Err(parse_err(format!("line {}: expected `x y`", ln + 1)));
        }
        v.push((rational(f[0])?, rational(f[1])?));
    }
    Ok(v)
}

fn padic_line(x: &PadicApprox) -> String {
    let digits: Vec<String> = x.digits().iter().map(ToString::to_string).collect();
    format!("residue={} digits={}\n", x.residue(), digits.join(","))
}

fn run_padic(c: PadicCmd) -> Out {
    match c {
        PadicCmd::Embed { params, value } => {
            let x = PadicApprox::from_rational(&rational(&value)?, params.p, params.prec)?;
            Ok(padic_line(&x))
        }
        PadicCmd::Digits { params, value } => {
            let x = PadicApprox::from_rational(&rational(&value)?, params.p, params.prec)?;
            let digits: Vec<String> = x.digits().iter().map(ToString::to_string).collect();
            Ok(digits.join(",") + "\n")
        }
        PadicCmd::Arith { params, op, a, b } => {
            let embed = |s: &str| -> Result<PadicApprox, Failure> {
                Ok(PadicApprox::from_rational(&rational(s)?, params.p, params.prec)?)
            };
            let x = embed(&a)?;
            let y = || -> Result<PadicApprox, Failure> {
                embed(b.as_deref().ok_or_else(|| parse_err(format!("`{op}` needs --b")))?)
            };
            let r = match op.as_str() {
                "add" => x.add(&y()?)?,
                "sub" => x.sub(&y()?)?,
                "mul" => x.mul(&y()?)?,
                "div" => x.mul(&y()?.invert()?)?,
                "neg" => x.neg(),
                "inv" => x.invert()?,
                other => return Err(parse_err(format!("unknown operation `{other}`"))),
            };
            Ok(padic_line(&r))
        }
        PadicCmd::Geom { params, value, n } => {
            let x = PadicApprox::from_rational(&rational(&value)?, params.p, params.prec)?;
            let limit = x.geometric_limit()?;
            let mut out = format!("limit {}", padic_line(&limit));
            if let Some(n) = n {
                let sum = x.geometric_sum(n)?;
                write!(out, "sum {}", padic_line(&sum)).unwrap();
                writeln!(out, "distance={}", limit.distance(&sum)?).unwrap();
            }
            Ok(out)
        }
    }
}

fn matrix_input(c: &MetricCmd) -> &MatrixInput {
    match c {
        MetricCmd::Verify { m, .. } | MetricCmd::Maxq { m } | MetricCmd::Power { m, .. } => m,
    }
}

fn with_matrix(c: MetricCmd) -> Out {
    let m = matrix_input(&c);
    let text = read_input(&m.input)?;
    if m.float {
        run_metric(DistMatrix::<f64>::parse(&text)?, c)
    } else {
        run_metric(DistMatrix::<Rational>::parse(&text)?, c)
    }
}

fn triple_lines<T: Scalar>(d: &DistMatrix<T>, triples: &[(usize, usize, usize)]) -> String {
    triples
        .iter()
        .map(|&(x, y, z)| format!("{} {} {}\n", d.label(x), d.label(y), d.label(z)))
        .collect()
}

/// Fixed ten decimals with trailing zeros trimmed.
fn format_q(q: f64) -> String {
    let s = format!("{q:.10}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn run_metric<T: Scalar>(d: DistMatrix<T>, c: MetricCmd) -> Out {
    match c {
        MetricCmd::Verify { q, isoceles, .. } => {
            let bad = match exponent(&q)? {
                Exponent::Infinite => d.verify_ultrametric(),
                Exponent::Finite(q) => d.verify_qmetric(&q),
            };
            let mut out = format!("violations={}\n{}", bad.len(), triple_lines(&d, &bad));
            if isoceles {
                let iso = d.isoceles_audit();
                write!(out, "non-isoceles={}\n{}", iso.len(), triple_lines(&d, &iso)).unwrap();
            }
            Ok(out)
        }
        MetricCmd::Maxq { .. } => Ok(match d.max_metric_exponent() {
            MaxExponent::Finite(q) => format!("q*={}\n", format_q(q)),
            MaxExponent::Ultrametric => "q*=inf (ultrametric)\n".to_string(),
            MaxExponent::OutOfRange { below: true } => format!("q*<{}\n", nonarch::metric::QSTAR_LO),
            MaxExponent::OutOfRange { below: false } => format!("q*>{}\n", nonarch::metric::QSTAR_HI),
        }),
        MetricCmd::Power { a, .. } => Ok(d.power_transform(&finite_exponent(&a)?)?.to_text()),
    }
}

fn chain_input(c: &ChainCmd) -> &MatrixInput {
    match c {
        ChainCmd::Partition { m, .. }
        | ChainCmd::Subdominant { m }
        | ChainCmd::Length { m, .. }
        | ChainCmd::Profile { m, .. }
        | ChainCmd::Quantize { m, .. } => m,
    }
}

fn with_chain_matrix(c: ChainCmd) -> Out {
    let m = chain_input(&c);
    let text = read_input(&m.input)?;
    if m.float {
        run_chain(DistMatrix::<f64>::parse(&text)?, c)
    } else {
        run_chain(DistMatrix::<Rational>::parse(&text)?, c)
    }
}

fn scalar<T: Scalar>(s: &str) -> Result<T, Failure> {
    T::parse_scalar(s).ok_or_else(|| parse_err(format!("not a number: `{s}`")))
}

fn run_chain<T: Scalar>(d: DistMatrix<T>, c: ChainCmd) -> Out {
    match c {
        ChainCmd::Partition { eta, .. } => Ok(chain::eta_partition(&d, &scalar(&eta)?).to_text(&d)),
        ChainCmd::Subdominant { .. } => Ok(chain::subdominant_ultrametric(&d).to_text()),
        ChainCmd::Length { from, to, chain: given, a, .. } => {
            let a = exponent(&a)?;
            let (len, path) = match (given, from, to) {
                (Some(g), None, None) => {
                    let path = chain::Chain::parse(&g)?;
                    (chain::chain_a_length(&d, &path, &a)?, path)
                }
                (None, Some(x), Some(y)) => match &a {
                    Exponent::Finite(a) => chain::min_a_length(&d, &x, &y, a)?,
                    Exponent::Infinite => return Err(parse_err("minimal chains need a finite --a")),
                },
                _ => return Err(parse_err("give either --chain or both --from and --to")),
            };
            let value = match &len.exact {
                Some(v) => v.to_string(),
                None => format!("~{}", len.approx),
            };
            Ok(format!("length={value} chain={path}\n"))
        }
        ChainCmd::Profile { x, r, .. } => Ok(match chain::zero_dim_profile(&d, &x, &scalar(&r)?)? {
            Some(Threshold::Finite(t)) => format!("eta*={t}\n"),
            Some(Threshold::Infinite) => "eta*=inf\n".to_string(),
            None => "eta*=none\n".to_string(),
        }),
        ChainCmd::Quantize { base, .. } => Ok(chain::quantize_metric(&d, &rational(&base)?)?.to_text()),
    }
}

fn vector_input(path: &Option<PathBuf>) -> Result<FiniteVec, Failure> {
    Ok(FiniteVec::parse(&read_input(path)?, None)?)
}

fn space_for(s: &SpaceArgs, dim: usize) -> Result<NormedSpace, Failure> {
    Ok(NormedSpace::new(absval(&s.absval)?, dim)?)
}

fn run_lr(c: LrCmd) -> Out {
    match c {
        LrCmd::Norm { s, r, input } => {
            let f = vector_input(&input)?;
            let space = space_for(&s, f.dim())?;
            let n = lr::lr_norm(&space, &f, &exponent(&r)?);
            Ok(format!("norm={} power={}\n", n.value, n.power_sum))
        }
        LrCmd::Tail { s, r, eps, input } => {
            let f = vector_input(&input)?;
            let space = space_for(&s, f.dim())?;
            let keys = lr::tail_support(&space, &f, &rational(&eps)?, &finite_exponent(&r)?)?;
            Ok(keys.iter().map(|k| format!("{k}\n")).collect())
        }
        LrCmd::Erdos { s, dim, eta, target, r, emit } => {
            let space = space_for(&s, dim)?;
            let cert = lr::unboundedness_certificate(&space, &rational(&eta)?, &rational(&target)?, &finite_exponent(&r)?)?;
            if emit {
                return Ok(cert.element(cert.length).to_text());
            }
            let v: Vec<String> = cert.v_eta.iter().map(ToString::to_string).collect();
            Ok(format!(
                "v_eta={} step={} length={} endpoint_power={} verified={}\n",
                v.join(","),
                cert.step_norm,
                cert.length,
                cert.power_norm_at(cert.length),
                cert.verify()
            ))
        }
        LrCmd::Sphere { s, r, eps, g, input } => {
            let f = vector_input(&input)?;
            let g = FiniteVec::parse(&read_file(&g)?, Some(f.dim()))?;
            let space = space_for(&s, f.dim())?;
            let r = finite_exponent(&r)?;
            let t = lr::lr_norm(&space, &f, &Exponent::Finite(r.clone())).value;
            let res = lr::sphere_tail_bound(&space, &f, &g, &t, &rational(&eps)?, &r)?;
            let head: Vec<String> = res.head.iter().map(Key::to_string).collect();
            Ok(format!(
                "A={} tail={} bound={} holds={}\n",
                head.join(","),
                res.tail,
                res.bound,
                res.holds
            ))
        }
    }
}

fn measure_of(m: &MeasureArgs) -> Result<FAMeasure, Failure> {
    match &m.measure {
        Some(p) => Ok(FAMeasure::parse(&read_file(p)?)?),
        None => Ok(FAMeasure::lebesgue()),
    }
}

fn simple_input(path: &Option<PathBuf>) -> Result<SimpleFn, Failure> {
    Ok(SimpleFn::parse(&read_input(path)?, None)?)
}

fn interval_set(s: &str) -> Result<IntervalSet, Failure> {
    IntervalSet::parse(s).map_err(parse_err)
}

fn run_measure(c: MeasureCmd) -> Out {
    match c {
        MeasureCmd::Integrate { mu, input } => {
            let f = simple_input(&input)?;
            Ok(format!("integral={}\n", measure::integrate_simple(&measure_of(&mu)?, &f)?))
        }
        MeasureCmd::Norm { mu, s, r, input } => {
            let f = simple_input(&input)?;
            let space = space_for(&s, f.dim())?;
            let n = measure::lr_norm_simple(&measure_of(&mu)?, &f, &exponent(&r)?, &space);
            Ok(format!("norm={} power={}\n", n.value, n.power_sum))
        }
        MeasureCmd::Dmu { mu, a, b } => {
            let d = measure::sym_diff_metric(&measure_of(&mu)?, &interval_set(&a)?, &interval_set(&b)?);
            Ok(format!("d={d}\n"))
        }
        MeasureCmd::Decompose { mu, set, eps } => {
            let pieces = measure::chain_decompose(&measure_of(&mu)?, &interval_set(&set)?, &rational(&eps)?)?;
            Ok(pieces.iter().map(|p| format!("{p}\n")).collect())
        }
        MeasureCmd::Path { mu, s, t1, t2, r, input } => {
            let f = simple_input(&input)?;
            let space = space_for(&s, f.dim())?;
            let m = measure::path_modulus(
                &measure_of(&mu)?,
                &f,
                &rational(&t1)?,
                &rational(&t2)?,
                &finite_exponent(&r)?,
                &space,
            )?;
            Ok(format!("difference={} bound={} holds={}\n", m.difference, m.bound, m.holds))
        }
        MeasureCmd::Push { atoms, input } => {
            let f = simple_input(&input)?;
            let (space, phi) = parse_atoms(&read_file(&atoms)?)?;
            let (lhs, rhs) = measure::pushforward_check(&space, &phi, &f)?;
            Ok(format!("lhs={lhs} rhs={rhs} equal={}\n", lhs == rhs))
        }
    }
}

fn parse_atoms(text: &str) -> Result<(AtomicSpace, BTreeMap<String, Rational>), Failure> {
    let mut atoms = Vec::new();
    let mut phi = BTreeMap::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(parse_err(format!("line {}: expected `label weight point`", ln + 1)));
        }
        atoms.push((f[0].to_string(), rational(f[1])?));
        phi.insert(f[0].to_string(), rational(f[2])?);
    }
    Ok((AtomicSpace::new(atoms)?, phi))
}
