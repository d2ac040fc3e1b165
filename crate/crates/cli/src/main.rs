use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spanfactor::graph6;
use spanfactor::verify::{
    perturbation_suite, report_emit, verify_with, GraphSource, ReportFormat, TheoremId, TheoremSpec,
    VerificationReport, VerifyOptions,
};
use spanfactor::{
    clique_number, clique_threshold_1f, clique_threshold_kf, count_cliques, format_sig, has_k_factor,
    has_one_factor, has_spanning_k_tree_with_budget, has_spanning_tree_leaf_deg_with_budget,
    kaneko_check_with_budget, l_closure, phi, psi, quotient_rho, spectral_radius, spectral_threshold_1f,
    spectral_threshold_1f_printed, spectral_threshold_kf, ClosureIndex, Error, Family, Graph, KanekoVerdict,
    SearchBudget, ThresholdQuery, DEFAULT_TOL,
};

#[derive(Parser)]
#[command(name = "spanfactor", version, about = "Closures, factors and constrained spanning trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the l-closure of each input graph.
    Closure {
        /// An integer, `1f`, `kf:<k>` or `ktree:<k>,<m>`.
        #[arg(long)]
        l: String,
        #[command(flatten)]
        input: Input,
    },
    /// Decide a property for each input graph, one JSON line per graph.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Spectral radius of each input graph, or of `K_a ∨ (K_b + I_c)`.
    Spectral {
        #[arg(long, value_enum, default_value = "power")]
        method: Method,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        input: Input,
    },
    /// Number of r-cliques of each input graph, or the clique number without `--r`.
    Cliques {
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Emit a member of a named family as graph6.
    Gen(FamilyArgs),
    /// Evaluate a threshold formula.
    Threshold {
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        params: Params,
    },
    /// Check a statement over a graph stream and print the report.
    Verify {
        /// One of T13i, T13ii, C15i, C15ii, C18i, C18ii, T110, T113, EQ-T12,
        /// EQ-T19, EQ-T111, BND-L27, BND-L33, FACT21.
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        params: Params,
        /// `exhaustive`, `random:<count>:<p>`, `file:<path>`, or `file:-` for stdin.
        #[arg(long, default_value = "exhaustive")]
        source: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Radius-one perturbation checks around an extremal family member.
    Perturb {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct Input {
    /// graph6 file, one graph per line; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    delta: usize,
    #[arg(long, default_value_t = 0)]
    q: usize,
    #[arg(long, default_value_t = 0)]
    s: usize,
}

impl From<Params> for ThresholdQuery {
    fn from(p: Params) -> Self {
        ThresholdQuery { n: p.n, r: p.r, k: p.k, m: p.m, delta: p.delta, q: p.q, s: p.s }
    }
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    delta: usize,
    #[arg(long, default_value_t = 0)]
    a: usize,
    #[arg(long, default_value_t = 0)]
    b: usize,
    #[arg(long, default_value_t = 0)]
    c: usize,
    #[arg(long, default_value_t = 0)]
    s: usize,
    #[arg(long, default_value_t = 0)]
    p: usize,
    #[arg(long, default_value_t = 0)]
    t: usize,
}

impl FamilyArgs {
    fn family(&self) -> Family {
        let FamilyArgs { n, m, k, delta, a, b, c, s, p, t, .. } = *self;
        match self.family {
            FamilyName::Ex1fa => Family::Ex1fA { n, delta },
            FamilyName::Ex1fb => Family::Ex1fB { n, delta },
            FamilyName::Exktree => Family::ExKTree { n, m, k },
            FamilyName::Exleaf => Family::ExLeaf { n, delta, k },
            FamilyName::Exfan => Family::ExFan { n, k },
            FamilyName::Gen3 => Family::Gen3 { a, b, c },
            FamilyName::Joinreg => Family::JoinReg { s, b, p, t },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    #[value(name = "1-factor")]
    OneFactor,
    #[value(name = "k-factor")]
    KFactor,
    #[value(name = "k-tree")]
    KTree,
    #[value(name = "leaf-degree")]
    LeafDegree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Power,
    Quotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Ex1fa,
    Ex1fb,
    Exktree,
    Exleaf,
    Exfan,
    Gen3,
    Joinreg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Phi,
    Psi,
    Clique1f,
    Cliquekf,
    Spec1f,
    #[value(name = "spec1f-printed")]
    Spec1fPrinted,
    Speckf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

/// Failures that map to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<io::Error> for UsageError {
    fn from(e: io::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn budget(nodes: Option<u64>) -> SearchBudget {
    nodes.map_or_else(SearchBudget::default, SearchBudget::nodes)
}

fn read_graphs(reader: impl BufRead) -> CliResult<Vec<Graph>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(graph6::decode(line)?);
    }
    Ok(out)
}

fn load(input: &Input) -> CliResult<Vec<Graph>> {
    match &input.input {
        Some(path) => {
            let file = fs::File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            read_graphs(io::BufReader::new(file))
        }
        None => read_graphs(io::stdin().lock()),
    }
}

fn parse_closure_index(spec: &str, n: usize) -> CliResult<ClosureIndex> {
    let bad = || usage(format!("invalid closure index {spec:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if spec == "1f" {
        Ok(ClosureIndex::one_factor(n))
    } else if let Some(k) = spec.strip_prefix("kf:") {
        Ok(ClosureIndex::k_factor(n, num(k)?))
    } else if let Some(rest) = spec.strip_prefix("ktree:") {
        let (k, m) = rest.split_once(',').ok_or_else(bad)?;
        Ok(ClosureIndex::spanning_k_tree(n, num(k)?, num(m)?))
    } else {
        Ok(ClosureIndex(num(spec)?))
    }
}

fn answer(yes: bool) -> &'static str {
    if yes {
        "yes"
    } else {
        "no"
    }
}

fn check_one(g: &Graph, property: Property, k: usize, budget: SearchBudget) -> CliResult<Value> {
    let code = graph6::encode(g);
    let tree_result = |r: spanfactor::Result<Option<spanfactor::TreeCertificate>>| -> CliResult<Value> {
        Ok(match r {
            Ok(Some(t)) => json!({ "graph6": code, "answer": "yes", "certificate": t.edges() }),
            Ok(None) | Err(Error::Disconnected) => json!({ "graph6": code, "answer": "no" }),
            Err(Error::BudgetExceeded(_)) => json!({ "graph6": code, "answer": "budget" }),
            Err(e) => return Err(e.into()),
        })
    };
    match property {
        Property::OneFactor => Ok(match has_one_factor(g) {
            Some(m) => json!({ "graph6": code, "answer": "yes", "certificate": m.edges() }),
            None => json!({ "graph6": code, "answer": "no" }),
        }),
        Property::KFactor => Ok(match has_k_factor(g, k) {
            Some(f) => json!({ "graph6": code, "answer": "yes", "certificate": f.edges() }),
            None => json!({ "graph6": code, "answer": answer(false) }),
        }),
        Property::KTree => tree_result(has_spanning_k_tree_with_budget(g, k, budget)),
        Property::LeafDegree => {
            let mut v = tree_result(has_spanning_tree_leaf_deg_with_budget(g, k, budget))?;
            if v["answer"] == "no" && g.is_connected() {
                if let Ok(KanekoVerdict::Violated(cert)) = kaneko_check_with_budget(g, k, budget) {
                    v["violator"] = json!(cert.s.iter().collect::<Vec<_>>());
                }
            }
            Ok(v)
        }
    }
}

fn parse_source(source: &str, n: usize, seed: u64) -> CliResult<GraphSource> {
    if source == "exhaustive" {
        return Ok(GraphSource::Exhaustive);
    }
    if let Some(rest) = source.strip_prefix("random:") {
        let (count, p) = rest.split_once(':').ok_or_else(|| usage("expected random:<count>:<p>"))?;
        let count = count.parse().map_err(|_| usage(format!("invalid sample count {count:?}")))?;
        let p: f64 = p.parse().map_err(|_| usage(format!("invalid edge probability {p:?}")))?;
        return Ok(GraphSource::Random { count, p, seed });
    }
    if let Some(path) = source.strip_prefix("file:") {
        let graphs = if path == "-" {
            read_graphs(io::stdin().lock())?
        } else {
            load(&Input { input: Some(PathBuf::from(path)) })?
        };
        if let Some(g) = graphs.iter().find(|g| g.n() != n) {
            return Err(usage(format!("input graph {} has {} vertices, expected {n}", graph6::encode(g), g.n())));
        }
        return Ok(GraphSource::Graphs { label: source.to_string(), graphs });
    }
    Err(usage(format!("unknown source {source:?}")))
}

fn emit(out: &mut impl Write, report: &VerificationReport, format: Format) -> CliResult<()> {
    out.write_all(&report_emit(report, format.into()))?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<u8> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::Closure { l, input } => {
            for g in load(&input)? {
                let index = parse_closure_index(&l, g.n())?;
                writeln!(out, "{}", graph6::encode(&l_closure(&g, index)))?;
            }
        }
        Command::Check { property, k, budget: nodes, input } => {
            for g in load(&input)? {
                let line = check_one(&g, property, k, budget(nodes))?;
                writeln!(out, "{line}")?;
            }
        }
        Command::Spectral { method: Method::Quotient, a, b, c, .. } => {
            let (Some(a), Some(b), Some(c)) = (a, b, c) else {
                return Err(usage("--method quotient needs --a, --b and --c"));
            };
            writeln!(out, "{}", format_sig(quotient_rho(a, b, c)?.rho))?;
        }
        Command::Spectral { method: Method::Power, tol, input, .. } => {
            for g in load(&input)? {
                writeln!(out, "{}", format_sig(spectral_radius(&g, tol)?))?;
            }
        }
        Command::Cliques { r, input } => {
            for g in load(&input)? {
                match r {
                    Some(r) => writeln!(out, "{}", count_cliques(&g, r))?,
                    None => writeln!(out, "{}", clique_number(&g))?,
                }
            }
        }
        Command::Gen(args) => {
            writeln!(out, "{}", graph6::encode(&args.family().build()?))?;
        }
        Command::Threshold { which, params: p } => {
            let text = match which {
                Which::Phi => phi(p.n, p.r, p.q)?.to_string(),
                Which::Psi => psi(p.n, p.r, p.k, p.q)?.to_string(),
                Which::Clique1f => clique_threshold_1f(p.n, p.r, p.delta)?.value.to_string(),
                Which::Cliquekf => clique_threshold_kf(p.n, p.r, p.k, p.delta)?.value.to_string(),
                Which::Spec1f => format_sig(spectral_threshold_1f(p.n, p.delta)?),
                Which::Spec1fPrinted => format_sig(spectral_threshold_1f_printed(p.n, p.delta)?),
                Which::Speckf => format_sig(spectral_threshold_kf(p.n, p.k, p.delta)?),
            };
            writeln!(out, "{text}")?;
        }
        Command::Verify { theorem, params, source, seed, format, budget: nodes } => {
            let id: TheoremId = theorem.parse()?;
            let spec = TheoremSpec::new(id, params.into())?;
            let source = parse_source(&source, params.n, seed)?;
            let report = verify_with(&spec, &source, VerifyOptions { budget: budget(nodes) })?;
            emit(&mut out, &report, format)?;
            out.flush()?;
            return Ok(report.exit_code() as u8);
        }
        Command::Perturb { family, format, budget: nodes } => {
            let report = perturbation_suite(&family.family(), budget(nodes))?;
            emit(&mut out, &report, format)?;
            out.flush()?;
            return Ok(report.exit_code() as u8);
        }
    }
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("spanfactor: {msg}");
            ExitCode::from(2)
        }
    }
}
