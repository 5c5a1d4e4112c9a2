mod output;
mod table;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use turan_core::arith::{fraction_string, to_f64};
use turan_core::constructions::{self, best_of, ConstructionReport};
use turan_core::formulas::{self, BoundResult, StarTuranOracle};
use turan_core::io::{parse_hypergraph, write_hypergraph};
use turan_core::patterns::{contains_berge, contains_expansion, contains_sub, star_forest};
use turan_core::search::{ex_exact, ex_exact_linear, DEFAULT_BUDGET};
use turan_core::{Error, ForbiddenFamily, Graph, Hypergraph, Mode, SearchOptions, StarForestSpec};

use output::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "turan", version, about = "Turán numbers of star forests in uniform hypergraphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// File receiving the hypergraph (construct, exact) or the table.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an extremal construction and report its size.
    Construct(ConstructArgs),
    /// Look for a copy of a star forest in a hypergraph file.
    Detect(DetectArgs),
    /// Compute a Turán number by exhaustive search.
    Exact(ExactArgs),
    /// Evaluate a closed-form bound.
    Formula(FormulaArgs),
    /// Sweep n and tabulate witnesses, bounds and exact values.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    Expansion,
    Linear,
    BergeRegular,
    BergeBlock,
    Lattice,
    Regular,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: usize,
    #[arg(long, value_parser = parse_spec)]
    degrees: Option<StarForestSpec>,
    /// Star index; every index is tried when absent.
    #[arg(long)]
    i: Option<usize>,
    /// Split index for the regular Berge witness.
    #[arg(long)]
    s: Option<usize>,
    /// Lattice dimension, or vertex degree for `regular`.
    #[arg(long)]
    d: Option<usize>,
    /// Run the containment deciders on the result.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct DetectArgs {
    file: PathBuf,
    /// `star:L`, `forest:D1,D2,...` or `matching:K`.
    #[arg(long, value_parser = parse_pattern)]
    pattern: StarForestSpec,
    #[arg(long, value_parser = parse_mode, default_value = "berge")]
    mode: Mode,
    /// Uniformity for expansion mode; read from the file when absent.
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, env = "TURAN_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Disable symmetry pruning.
    #[arg(long)]
    no_iso: bool,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions { budget: self.budget, iso_pruning: !self.no_iso, threads: self.threads.max(1) }
    }
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, value_parser = parse_spec)]
    degrees: StarForestSpec,
    #[arg(long, value_parser = parse_mode, default_value = "berge")]
    mode: Mode,
    /// Restrict to linear hypergraphs.
    #[arg(long)]
    linear: bool,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulaKind {
    Llp,
    Erdos,
    Expansion,
    Linear,
    BergeLarge,
    BergeSmall,
    BergeStar,
    FixedPair,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    GraphExact,
    FixedPair,
    Zero,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(value_enum)]
    kind: FormulaKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, value_parser = parse_spec)]
    degrees: Option<StarForestSpec>,
    /// Matching size for `erdos`.
    #[arg(long)]
    k: Option<usize>,
    /// Star size for `berge-star`.
    #[arg(long)]
    l: Option<usize>,
    /// Star term for `expansion`; exact for graphs, fixed pair otherwise.
    #[arg(long, value_enum)]
    oracle: Option<OracleKind>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, value_parser = parse_spec)]
    degrees: StarForestSpec,
    #[arg(long = "from")]
    from: usize,
    #[arg(long = "to")]
    to: usize,
    #[arg(long, value_parser = parse_mode, default_value = "expansion")]
    mode: Mode,
    #[arg(long)]
    linear: bool,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Budget(String),
}

impl Failure {
    pub fn io(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_spec(s: &str) -> Result<StarForestSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_pattern(s: &str) -> Result<StarForestSpec, String> {
    let (kind, arg) = s.split_once(':').ok_or_else(|| format!("pattern {s:?} is not KIND:ARGS"))?;
    let count = || arg.parse::<usize>().map_err(|_| format!("bad count {arg:?}"));
    let spec = match kind {
        "star" => StarForestSpec::new(vec![count()?]),
        "matching" => StarForestSpec::matching(count()?),
        "forest" => arg.parse(),
        other => return Err(format!("unknown pattern kind {other:?}")),
    };
    spec.map_err(|e| e.to_string())
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

fn fraction_json(b: &BoundResult) -> Value {
    serde_json::to_value(b).expect("bound results serialize")
}

fn report_text(rep: &ConstructionReport) -> String {
    let mut s = format!(
        "kind: {:?}\nn: {}\nr: {}\ndegrees: {}\nindex: {}\nedges: {}\nclaimed: {}\nformula term: {}\n",
        rep.kind,
        rep.n,
        rep.r,
        rep.spec,
        rep.index,
        rep.edges,
        rep.claimed_count,
        fraction_string(&rep.formula_term),
    );
    if let Some(p) = rep.packed_in_a {
        s += &format!("packed in A: {p}\n");
    }
    if let Some(f) = rep.verified_free {
        s += &format!("verified free: {f}\n");
    }
    s
}

fn construct(args: &ConstructArgs) -> Result<(Report, Hypergraph), Failure> {
    let r = args.r;
    let simple = |name: &str, h: Hypergraph, extra: Value| {
        let mut v = json!({ "kind": name, "n": h.n(), "r": r, "edges": h.num_edges() });
        if let (Value::Object(m), Value::Object(x)) = (&mut v, extra) {
            m.extend(x);
        }
        let text = format!("kind: {name}\nn: {}\nedges: {}\n", h.n(), h.num_edges());
        (Report::new(v, text), h)
    };
    match args.kind {
        ConstructKind::Lattice => {
            let (h, col) = Hypergraph::lattice(r, require(args.d, "d")?)?;
            let colors = json!({ "colors": col.colors(), "linear": h.is_linear() });
            return Ok(simple("lattice", h, colors));
        }
        ConstructKind::Regular => {
            let h = constructions::regular_uniform(require(args.n, "n")?, r, require(args.d, "d")?)?;
            return Ok(simple("regular", h, json!({})));
        }
        _ => {}
    }
    let n = require(args.n, "n")?;
    let spec = require(args.degrees.clone(), "degrees")?;
    let build = |idx: usize| match args.kind {
        ConstructKind::Expansion => constructions::expansion_witness(n, r, &spec, idx),
        ConstructKind::Linear => constructions::linear_witness(n, r, &spec, idx),
        ConstructKind::BergeRegular => constructions::berge_regular_witness(n, r, &spec, idx),
        ConstructKind::BergeBlock => constructions::berge_block_witness(n, r, &spec, idx),
        ConstructKind::Lattice | ConstructKind::Regular => unreachable!(),
    };
    let chosen = match args.kind {
        ConstructKind::BergeRegular => args.s,
        _ => args.i,
    };
    let mut rep = match chosen {
        Some(idx) => build(idx)?,
        None => {
            let range = match args.kind {
                ConstructKind::BergeRegular => 1..spec.k(),
                _ => 1..spec.k() + 1,
            };
            let attempts: Vec<_> = range.map(build).collect();
            match best_of(attempts.iter().cloned()) {
                Some(rep) => rep,
                None => {
                    let first = attempts.into_iter().find_map(Result::err);
                    return Err(first.map_or_else(|| Failure::Usage("no admissible index".into()), Failure::from));
                }
            }
        }
    };
    if args.verify {
        rep.verify()?;
    }
    let value = serde_json::to_value(&rep).expect("reports serialize");
    let text = report_text(&rep);
    Ok((Report::new(value, text), rep.hypergraph))
}

fn detect(args: &DetectArgs) -> Result<(Report, bool), Failure> {
    let text = fs::read_to_string(&args.file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.file.display())))?;
    let h = parse_hypergraph(&text)?;
    let f: Graph = star_forest(&args.pattern);
    let witness = match args.mode {
        Mode::Berge => contains_berge(&h, &f).map(|w| w.report(&f)),
        Mode::Expansion => {
            let r = match args.r.or_else(|| h.uniformity()) {
                Some(r) => r,
                None if h.num_edges() == 0 => 2,
                None => return Err(Failure::Usage("hypergraph is not uniform; pass --r".into())),
            };
            contains_expansion(&h, &f, r)?.map(|w| w.report(&f))
        }
        Mode::Sub => contains_sub(&h, f.as_hypergraph()).map(|w| w.report(f.as_hypergraph())),
    };
    let found = witness.is_some();
    let value = json!({
        "found": found,
        "mode": args.mode.to_string(),
        "pattern": args.pattern.to_string(),
        "witness": witness,
    });
    let mut text = format!("{}\n", if found { "found" } else { "absent" });
    if let Some(w) = &witness {
        for (u, v) in &w.vertex_map {
            text += &format!("vertex {u} -> {v}\n");
        }
        for (e, j) in &w.edge_map {
            text += &format!("edge {e:?} -> {:?}\n", h.edge(*j));
        }
    }
    Ok((Report::new(value, text), found))
}

fn exact(args: &ExactArgs) -> Result<(Report, Hypergraph), Failure> {
    let family = ForbiddenFamily::star_forest(&args.degrees, args.mode, args.r)?;
    let run = if args.linear { ex_exact_linear } else { ex_exact };
    let res = run(args.n, &family, &args.search.options())?;
    let mut value = serde_json::to_value(&res).expect("search results serialize");
    if let Value::Object(m) = &mut value {
        m.insert("n".into(), json!(args.n));
        m.insert("r".into(), json!(args.r));
        m.insert("degrees".into(), json!(args.degrees.to_string()));
        m.insert("mode".into(), json!(args.mode.to_string()));
        m.insert("linear".into(), json!(args.linear));
    }
    let text = format!("{}\n", res.value);
    Ok((Report::new(value, text), res.witness))
}

fn bound_text(b: &BoundResult) -> String {
    let mut s = format!("{}\nargmax: {}\n", fraction_string(&b.value), b.argmax);
    for t in &b.terms {
        s += &format!("  {:?} {}: {}\n", t.branch, t.index, fraction_string(&t.value));
    }
    s
}

fn formula(args: &FormulaArgs) -> Result<Report, Failure> {
    let (n, r) = (args.n, args.r);
    let spec = || require(args.degrees.clone(), "degrees");
    let scalar = |name: &str, v: turan_core::Rational| {
        let value = json!({ "formula": name, "value": fraction_string(&v), "decimal": to_f64(&v) });
        Report::new(value, format!("{}\n", fraction_string(&v)))
    };
    let bound = |b: BoundResult| Report::new(fraction_json(&b), bound_text(&b));
    Ok(match args.kind {
        FormulaKind::Llp => bound(formulas::ex_llp(n, &spec()?)?),
        FormulaKind::Erdos => {
            scalar("erdos", formulas::ex_erdos_matching(n, r, require(args.k, "k")?)?.into())
        }
        FormulaKind::Expansion => {
            let oracle = match args.oracle {
                Some(OracleKind::GraphExact) => StarTuranOracle::GraphExact,
                Some(OracleKind::FixedPair) => StarTuranOracle::FixedPair,
                Some(OracleKind::Zero) => StarTuranOracle::Zero,
                None if r == 2 => StarTuranOracle::GraphExact,
                None => StarTuranOracle::FixedPair,
            };
            bound(formulas::ex_expansion_rhs(n, r, &spec()?, &oracle)?)
        }
        FormulaKind::Linear => bound(formulas::ex_linear_rhs(n, r, &spec()?)?),
        FormulaKind::BergeLarge => bound(formulas::ex_berge_large_r_rhs(n, r, &spec()?)?),
        FormulaKind::BergeSmall => bound(formulas::ex_berge_small_r_rhs(n, r, &spec()?)?),
        FormulaKind::BergeStar => scalar("berge-star", formulas::ex_berge_star(n, r, require(args.l, "l")?)?),
        FormulaKind::FixedPair => scalar("fixed-pair", formulas::fixed_pair_count(n, r)?.into()),
    })
}

fn sweep(args: &TableArgs, format: Format) -> Result<String, Failure> {
    let sweep = table::Sweep {
        r: args.r,
        spec: args.degrees.clone(),
        mode: args.mode,
        linear: args.linear,
        opts: args.search.options(),
    };
    let rows = (args.from..=args.to).map(|n| sweep.row(n)).collect::<Result<Vec<_>, _>>()?;
    if format == Format::Json {
        let v = json!({
            "schema": 1,
            "r": args.r,
            "degrees": args.degrees.to_string(),
            "mode": args.mode.to_string(),
            "linear": args.linear,
            "rows": rows,
        });
        return Ok(serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n");
    }
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(table::COLUMNS).map_err(Failure::io)?;
    for row in &rows {
        w.serialize(row).map_err(Failure::io)?;
    }
    output::finish_csv(w)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let emit = |rep: &Report| output::print(&rep.render(cli.format)?);
    match &cli.command {
        Command::Construct(args) => {
            let (rep, h) = construct(args)?;
            match &cli.out {
                Some(path) => output::write_file(path, &write_hypergraph(&h))?,
                None if cli.format == Format::Text => {
                    output::print(&rep.text)?;
                    output::print(&write_hypergraph(&h))?;
                    return Ok(0);
                }
                None => {}
            }
            let mut rep = rep;
            if cli.out.is_none() {
                rep.fields.insert("hypergraph".into(), json!(write_hypergraph(&h)));
            }
            emit(&rep)?;
            Ok(0)
        }
        Command::Detect(args) => {
            let (rep, found) = detect(args)?;
            emit(&rep)?;
            Ok(if found { 0 } else { 1 })
        }
        Command::Exact(args) => {
            let (mut rep, witness) = exact(args)?;
            if let Some(path) = &cli.out {
                output::write_file(path, &write_hypergraph(&witness))?;
            } else if cli.format == Format::Text {
                rep.text += &write_hypergraph(&witness);
            }
            emit(&rep)?;
            Ok(0)
        }
        Command::Formula(args) => {
            emit(&formula(args)?)?;
            Ok(0)
        }
        Command::Table(args) => {
            let s = sweep(args, cli.format)?;
            match &cli.out {
                Some(path) => output::write_file(path, &s)?,
                None => output::print(&s)?,
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let (Failure::Usage(msg) | Failure::Budget(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
