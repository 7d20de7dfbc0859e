//! `confring` — exact computations in the graded ring of a multigraph.
//!
//! Every subcommand reads a graph in the plain-text format (`vertices: n`
//! header, then `id: tail head` lines) and reports either a human-readable
//! table or JSON. JSON output is deterministic: the same invocation yields
//! byte-identical bytes, and every document validates against the schema
//! files shipped in `schemas/`.
//!
//! Exit status: 0 when all requested work succeeded and every requested
//! check passed; 1 when a check failed; 2 for unusable input (bad flags,
//! unreadable or malformed files); 3 for an internal inconsistency (two
//! supposedly-equal computations disagree — the report carries the witness).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, Sign};
use rayon::prelude::*;

use confring::arnold::{arnold_class, betti_table, nbc_basis, normal_form};
use confring::morphism::{run_check, CheckKind, CheckReport};
use confring::poincare::{chromatic_crosscheck, delcon_tree, poincare, DelconNode};
use confring::{Element, EdgeId, Monomial, Multigraph, Parity};

#[derive(Parser)]
#[command(
    name = "confring",
    version,
    about = "Exact graded-ring computations for a multigraph",
    long_about = "Exact computations in the graded ring attached to a multigraph: one \
                  generator per edge, one relation per circuit. Ranks and torsion come \
                  from integer Smith normal form; an independent deletion-contraction \
                  recursion and several exactness checks keep the two routes honest."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Free rank and torsion of every weight, from exact presentations.
    Betti {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        regime: RegimeArgs,
        /// Restrict the report to weights A..B (inclusive; a single K works).
        #[arg(long, value_parser = parse_weight_range, value_name = "A..B")]
        weights: Option<WeightRange>,
    },
    /// Rank polynomial by memoized deletion-contraction.
    Poincare {
        #[command(flatten)]
        io: IoArgs,
        /// Ambient dimension (>= 2); only annotates degrees, the polynomial
        /// itself is parity-independent.
        #[arg(long)]
        r: Option<u64>,
        /// Cross-check the coefficients against the chromatic polynomial
        /// (simple graphs only).
        #[arg(long)]
        chromatic: bool,
    },
    /// Validated no-broken-circuit monomial basis, weight by weight.
    Basis {
        #[command(flatten)]
        io: IoArgs,
        /// Ambient dimension (>= 2); adds true degrees k(r-1) to the report.
        #[arg(long)]
        r: Option<u64>,
        /// Edge order for the broken-circuit construction, e.g. e2,e0,e1
        /// (default: ascending edge ids).
        #[arg(long, value_name = "E,E,...")]
        order: Option<String>,
        /// Restrict the report to weights A..B (inclusive).
        #[arg(long, value_parser = parse_weight_range, value_name = "A..B")]
        weights: Option<WeightRange>,
    },
    /// Normal form of a homogeneous element in the NBC basis.
    Reduce {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        regime: RegimeArgs,
        /// The element, in the serialization format: signed terms like
        /// `+1·e0e2 -2·e1e3` (a plain `*` may stand in for the `·`).
        #[arg(long, allow_hyphen_values = true, value_name = "ELEMENT")]
        element: String,
        /// Edge order for the basis (default: ascending edge ids).
        #[arg(long, value_name = "E,E,...")]
        order: Option<String>,
    },
    /// Arnold classes of all circuits: the ideal's generators.
    Arnold {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        regime: RegimeArgs,
    },
    /// Exactness checks for deletion-contraction, over all edges and weights.
    Check {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        regime: RegimeArgs,
        /// Comma-separated subset of ses,middle,pullback,gsurj,commute, or
        /// `all` (the default).
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        checks: Vec<String>,
        /// Shorthand for --checks all.
        #[arg(long)]
        all: bool,
        /// Restrict checks to weights A..B (inclusive).
        #[arg(long, value_parser = parse_weight_range, value_name = "A..B")]
        weights: Option<WeightRange>,
        /// Seed for the randomized multiplicativity check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Deletion-contraction recursion trace with cache statistics.
    DelconTree {
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(Args)]
struct IoArgs {
    /// Graph file: `vertices: n` header, then `id: tail head` lines.
    #[arg(long, value_name = "PATH")]
    graph: PathBuf,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Parity regime: exactly one of `--parity` and `--r`. The ring only sees
/// the parity of `r`, but a concrete `r` additionally fixes the degree step
/// `r - 1` for reporting.
#[derive(Args)]
struct RegimeArgs {
    /// Generator parity: even r (anticommuting) or odd r (commuting).
    #[arg(long, value_enum, conflicts_with = "r")]
    parity: Option<ParityOpt>,
    /// Ambient dimension (>= 2); its parity picks the regime and degrees are
    /// also reported as k(r-1).
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ParityOpt {
    Even,
    Odd,
}

impl From<ParityOpt> for Parity {
    fn from(p: ParityOpt) -> Parity {
        match p {
            ParityOpt::Even => Parity::Even,
            ParityOpt::Odd => Parity::Odd,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug)]
struct WeightRange {
    lo: usize,
    hi: usize,
}

fn parse_weight_range(s: &str) -> Result<WeightRange, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad weight {t:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => WeightRange {
            lo: parse(a)?,
            hi: parse(b)?,
        },
        None => {
            let k = parse(s)?;
            WeightRange { lo: k, hi: k }
        }
    };
    if range.lo > range.hi {
        return Err(format!("empty weight range {}..{}", range.lo, range.hi));
    }
    Ok(range)
}

/// A terminal failure: message to stderr, status as the exit code.
#[derive(Debug)]
struct Failure {
    status: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            status: 2,
            message: message.into(),
        }
    }

    fn inconsistent(message: impl Into<String>) -> Failure {
        Failure {
            status: 3,
            message: message.into(),
        }
    }
}

impl From<confring::Error> for Failure {
    fn from(e: confring::Error) -> Failure {
        match &e {
            confring::Error::Inconsistency(_) | confring::Error::BasisValidation { .. } => {
                Failure::inconsistent(e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Betti {
            io,
            regime,
            weights,
        } => cmd_betti(&io, &regime, weights),
        Command::Poincare { io, r, chromatic } => cmd_poincare(&io, r, chromatic),
        Command::Basis {
            io,
            r,
            order,
            weights,
        } => cmd_basis(&io, r, order.as_deref(), weights),
        Command::Reduce {
            io,
            regime,
            element,
            order,
        } => cmd_reduce(&io, &regime, &element, order.as_deref()),
        Command::Arnold { io, regime } => cmd_arnold(&io, &regime),
        Command::Check {
            io,
            regime,
            checks,
            all,
            weights,
            seed,
        } => cmd_check(&io, &regime, &checks, all, weights, seed),
        Command::DelconTree { io } => cmd_delcon_tree(&io),
    }
}

fn load_graph(io: &IoArgs) -> Result<Multigraph, Failure> {
    let text = std::fs::read_to_string(&io.graph)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", io.graph.display())))?;
    Ok(Multigraph::parse_text(&text)?)
}

fn resolve_regime(regime: &RegimeArgs) -> Result<(Parity, Option<u64>), Failure> {
    match (regime.parity, regime.r) {
        (Some(p), None) => Ok((p.into(), None)),
        (None, Some(r)) => {
            validate_r(r)?;
            let parity = if r % 2 == 0 { Parity::Even } else { Parity::Odd };
            Ok((parity, Some(r)))
        }
        (None, None) => Err(Failure::usage(
            "no parity regime: pass --parity even|odd or --r <int>",
        )),
        (Some(_), Some(_)) => Err(Failure::usage("--parity and --r are mutually exclusive")),
    }
}

fn validate_r(r: u64) -> Result<(), Failure> {
    if r >= 2 {
        Ok(())
    } else {
        Err(Failure::usage("--r must be at least 2"))
    }
}

/// Clamp a requested weight window to the graph's weight range `0..=m`.
fn clamp_range(range: Option<WeightRange>, m: usize) -> Result<(usize, usize), Failure> {
    match range {
        None => Ok((0, m)),
        Some(WeightRange { lo, hi }) => {
            if lo > m {
                return Err(Failure::usage(format!(
                    "weight range {lo}..{hi} is empty: weights run 0..={m}"
                )));
            }
            Ok((lo, hi.min(m)))
        }
    }
}

/// `--order e2,e0,e1` (the `e` prefixes are optional); default ascending ids.
fn parse_order(arg: Option<&str>, g: &Multigraph) -> Result<Vec<EdgeId>, Failure> {
    let Some(s) = arg else {
        return Ok(g.edge_ids());
    };
    s.split(',')
        .map(|tok| {
            let t = tok.trim();
            let digits = t.strip_prefix('e').unwrap_or(t);
            digits
                .parse::<u32>()
                .map(EdgeId)
                .map_err(|_| Failure::usage(format!("bad edge {t:?} in --order")))
        })
        .collect()
}

fn emit(format: Format, text: &str, json: &serde_json::Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(json).expect("report serializes")
            );
        }
    }
}

fn json_int(x: &BigInt) -> serde_json::Value {
    use std::str::FromStr;
    serde_json::Value::Number(serde_json::Number::from_str(&x.to_string()).expect("integer"))
}

fn bracket(v: &[BigInt]) -> String {
    let inner: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("[{}]", inner.join(", "))
}

// ---------------------------------------------------------------- betti --

fn cmd_betti(
    io: &IoArgs,
    regime: &RegimeArgs,
    range: Option<WeightRange>,
) -> Result<ExitCode, Failure> {
    let g = load_graph(io)?;
    let (parity, r) = resolve_regime(regime)?;
    let (lo, hi) = clamp_range(range, g.edge_count())?;
    let table = betti_table(&g, parity);
    let weights: Vec<usize> = (lo..=hi).collect();

    let mut json = table.to_json();
    let obj = json.as_object_mut().expect("table is an object");
    if range.is_some() {
        // The library arrays cover all weights; cut the requested window.
        for key in ["ranks", "torsion"] {
            let full = obj[key].as_array().expect("array").clone();
            obj.insert(key.into(), serde_json::Value::Array(full[lo..=hi].to_vec()));
        }
    }
    obj.insert("weights".into(), serde_json::json!(weights));
    if let Some(r) = r {
        let degrees: Vec<u64> = weights.iter().map(|&k| k as u64 * (r - 1)).collect();
        obj.insert("r".into(), serde_json::json!(r));
        obj.insert("degrees".into(), serde_json::json!(degrees));
    }

    let mut text = format!("graph {}  parity {}", table.graph_key, parity.name());
    if let Some(r) = r {
        write!(text, "  r {r} (degree step {})", r - 1).expect("write to string");
    }
    text.push('\n');
    text.push_str(if r.is_some() {
        "weight  degree  rank  torsion\n"
    } else {
        "weight  rank  torsion\n"
    });
    for row in &table.rows[lo..=hi] {
        let torsion = if row.torsion.is_empty() {
            "-".to_string()
        } else {
            let ds: Vec<String> = row.torsion.iter().map(BigInt::to_string).collect();
            ds.join(" ")
        };
        match r {
            Some(r) => {
                let degree = row.weight as u64 * (r - 1);
                writeln!(
                    text,
                    "{:>6}  {:>6}  {:>4}  {}",
                    row.weight, degree, row.rank, torsion
                )
            }
            None => writeln!(text, "{:>6}  {:>4}  {}", row.weight, row.rank, torsion),
        }
        .expect("write to string");
    }

    emit(io.format, &text, &json);
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------- poincare --

fn cmd_poincare(io: &IoArgs, r: Option<u64>, chromatic: bool) -> Result<ExitCode, Failure> {
    let g = load_graph(io)?;
    if let Some(r) = r {
        validate_r(r)?;
    }
    let p = poincare(&g);

    let mut json = serde_json::json!({
        "graph": g.canonical_form().to_hex(),
        "polynomial": p.to_json(),
    });
    let obj = json.as_object_mut().expect("object");
    if let Some(r) = r {
        obj.insert("r".into(), serde_json::json!(r));
    }

    let mut text = format!("P(q) = {p}\n");
    if let Some(r) = r {
        writeln!(text, "q stands for degree step r-1 = {}", r - 1).expect("write to string");
    }

    if !chromatic {
        emit(io.format, &text, &json);
        return Ok(ExitCode::SUCCESS);
    }

    let report = chromatic_crosscheck(&g)?;
    obj.insert("chromatic".into(), report.to_json());
    writeln!(text, "chromatic coefficients {}", bracket(&report.chromatic))
        .expect("write to string");
    writeln!(text, "signed reversal        {}", bracket(&report.expected))
        .expect("write to string");
    writeln!(text, "computed ranks         {}", bracket(&report.ranks)).expect("write to string");
    writeln!(
        text,
        "chromatic cross-check: {}",
        if report.matches { "match" } else { "MISMATCH" }
    )
    .expect("write to string");
    emit(io.format, &text, &json);

    if report.matches {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure::inconsistent(format!(
            "ranks disagree with the chromatic polynomial: expected {}, computed {}",
            bracket(&report.expected),
            bracket(&report.ranks)
        )))
    }
}

// ---------------------------------------------------------------- basis --

fn cmd_basis(
    io: &IoArgs,
    r: Option<u64>,
    order_arg: Option<&str>,
    range: Option<WeightRange>,
) -> Result<ExitCode, Failure> {
    let g = load_graph(io)?;
    if let Some(r) = r {
        validate_r(r)?;
    }
    let order = parse_order(order_arg, &g)?;
    let basis = nbc_basis(&g, &order)?;
    let (lo, hi) = clamp_range(range, g.edge_count())?;

    let mut total = 0usize;
    let mut weight_objs = Vec::new();
    let mut text = format!(
        "graph {}  order {}\n",
        g.canonical_form().to_hex(),
        order
            .iter()
            .map(EdgeId::to_string)
            .collect::<Vec<_>>()
            .join(" < ")
    );
    for k in lo..=hi {
        let monomials = &basis.by_weight[k];
        total += monomials.len();
        let names: Vec<String> = monomials.iter().map(Monomial::to_string).collect();
        let mut entry = serde_json::json!({ "weight": k, "monomials": names });
        if let Some(r) = r {
            entry
                .as_object_mut()
                .expect("object")
                .insert("degree".into(), serde_json::json!(k as u64 * (r - 1)));
        }
        weight_objs.push(entry);
        let listing = if monomials.is_empty() {
            "(none)".to_string()
        } else {
            names.join(" ")
        };
        match r {
            Some(r) => writeln!(text, "weight {k} (degree {}): {listing}", k as u64 * (r - 1)),
            None => writeln!(text, "weight {k}: {listing}"),
        }
        .expect("write to string");
    }
    writeln!(text, "total {total}").expect("write to string");

    let order_ids: Vec<u32> = order.iter().map(|e| e.0).collect();
    let mut json = serde_json::json!({
        "graph": g.canonical_form().to_hex(),
        "order": order_ids,
        "weights": weight_objs,
        "total": total,
    });
    if let Some(r) = r {
        json.as_object_mut()
            .expect("object")
            .insert("r".into(), serde_json::json!(r));
    }

    emit(io.format, &text, &json);
    Ok(ExitCode::SUCCESS)
}

// --------------------------------------------------------------- reduce --

fn cmd_reduce(
    io: &IoArgs,
    regime: &RegimeArgs,
    element_arg: &str,
    order_arg: Option<&str>,
) -> Result<ExitCode, Failure> {
    let g = load_graph(io)?;
    let (parity, r) = resolve_regime(regime)?;
    // `*` is a keyboard-friendly stand-in for the interpunct.
    let x = Element::parse(&element_arg.replace('*', "·"))?;
    let order = parse_order(order_arg, &g)?;
    let coords = normal_form(&x, &g, parity, &order)?;
    let weight = if x.is_zero() {
        None
    } else {
        x.homogeneous_weight()
    };
    let basis: Vec<Monomial> = match weight {
        Some(k) => nbc_basis(&g, &order)?.by_weight[k].clone(),
        None => Vec::new(),
    };
    let reduced = render_combination(&coords, &basis);

    let order_ids: Vec<u32> = order.iter().map(|e| e.0).collect();
    let basis_names: Vec<String> = basis.iter().map(Monomial::to_string).collect();
    let mut json = serde_json::json!({
        "graph": g.canonical_form().to_hex(),
        "parity": parity.name(),
        "element": x.to_string(),
        "weight": weight,
        "order": order_ids,
        "basis": basis_names,
        "coordinates": coords.iter().map(json_int).collect::<Vec<_>>(),
        "normal_form": reduced,
    });
    if let Some(r) = r {
        json.as_object_mut()
            .expect("object")
            .insert("r".into(), serde_json::json!(r));
    }

    let mut text = format!("element {x}\n");
    match weight {
        Some(k) => {
            match r {
                Some(r) => writeln!(text, "weight {k} (degree {})", k as u64 * (r - 1)),
                None => writeln!(text, "weight {k}"),
            }
            .expect("write to string");
            writeln!(text, "basis [{}]", basis_names.join(", ")).expect("write to string");
            writeln!(text, "coordinates {}", bracket(&coords)).expect("write to string");
        }
        None => text.push_str("the zero element\n"),
    }
    writeln!(text, "normal form {reduced}").expect("write to string");

    emit(io.format, &text, &json);
    Ok(ExitCode::SUCCESS)
}

/// `Σ coords[i] · basis[i]` in the element serialization format.
fn render_combination(coords: &[BigInt], basis: &[Monomial]) -> String {
    let mut out = String::new();
    for (c, m) in coords.iter().zip(basis) {
        if c.sign() == Sign::NoSign {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        let sign = if c.sign() == Sign::Minus { '-' } else { '+' };
        write!(out, "{sign}{}·{m}", c.magnitude()).expect("write to string");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// --------------------------------------------------------------- arnold --

fn cmd_arnold(io: &IoArgs, regime: &RegimeArgs) -> Result<ExitCode, Failure> {
    let g = load_graph(io)?;
    let (parity, _) = resolve_regime(regime)?;
    let circuits = g.circuits();

    let mut classes = Vec::new();
    let mut text = format!(
        "graph {}  parity {}  {} circuit{}\n",
        g.canonical_form().to_hex(),
        parity.name(),
        circuits.len(),
        if circuits.len() == 1 { "" } else { "s" }
    );
    for w in &circuits {
        let class = arnold_class(w, parity);
        let edges: Vec<u32> = w.edges().iter().map(|e| e.0).collect();
        let vertices: Vec<u32> = w.vertices().iter().map(|v| v.0).collect();
        classes.push(serde_json::json!({
            "edges": edges,
            "vertices": vertices,
            "signs": w.signs(),
            "element": class.element.to_string(),
        }));
        let edge_names: Vec<String> = w.edges().iter().map(EdgeId::to_string).collect();
        writeln!(text, "A[{}] = {}", edge_names.join(" "), class.element).expect("write to string");
    }

    let json = serde_json::json!({
        "graph": g.canonical_form().to_hex(),
        "parity": parity.name(),
        "classes": classes,
    });
    emit(io.format, &text, &json);
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- check --

fn resolve_checks(tokens: &[String], all: bool) -> Result<Vec<CheckKind>, Failure> {
    let wants_all = all || tokens.iter().any(|t| t == "all");
    if wants_all {
        // Mixing `all` with single names is probably a typo'd selection.
        if tokens.iter().any(|t| t != "all") {
            return Err(Failure::usage(
                "`all` cannot be combined with individual check names",
            ));
        }
        return Ok(CheckKind::all().to_vec());
    }
    if tokens.is_empty() {
        return Ok(CheckKind::all().to_vec());
    }
    let mut kinds = Vec::new();
    for t in tokens {
        let kind = CheckKind::parse(t).ok_or_else(|| {
            Failure::usage(format!(
                "unknown check {t:?}: expected ses, middle, pullback, gsurj, commute, or all"
            ))
        })?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

fn cmd_check(
    io: &IoArgs,
    regime: &RegimeArgs,
    checks: &[String],
    all: bool,
    range: Option<WeightRange>,
    seed: u64,
) -> Result<ExitCode, Failure> {
    let g = load_graph(io)?;
    let (parity, _) = resolve_regime(regime)?;
    let kinds = resolve_checks(checks, all)?;
    let (lo, hi) = clamp_range(range, g.edge_count())?;
    let edges: Vec<EdgeId> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| e.id)
        .collect();

    // Edges in parallel, assembly in edge order. Each edge offsets the seed
    // so the randomized check sees different elements per edge while the
    // whole run stays reproducible.
    let per_edge: Vec<Vec<CheckReport>> = edges
        .par_iter()
        .map(|&a| {
            let mut out = Vec::new();
            for &kind in &kinds {
                let reports = run_check(&g, a, parity, kind, seed.wrapping_add(u64::from(a.0)))?;
                out.extend(reports.into_iter().filter(|r| (lo..=hi).contains(&r.weight)));
            }
            Ok(out)
        })
        .collect::<Result<_, confring::Error>>()?;
    let reports: Vec<CheckReport> = per_edge.into_iter().flatten().collect();
    let failures = reports.iter().filter(|r| !r.pass).count();

    let mut text = format!(
        "graph {}  parity {}  seed {seed}\n",
        g.canonical_form().to_hex(),
        parity.name()
    );
    for r in &reports {
        text.push_str(&r.render_text());
        text.push('\n');
    }
    if reports.is_empty() {
        text.push_str("nothing to check: no contractible edge\n");
    } else if failures == 0 {
        writeln!(
            text,
            "{} identities on {} edge{}: all pass",
            reports.len(),
            edges.len(),
            if edges.len() == 1 { "" } else { "s" }
        )
        .expect("write to string");
    } else {
        writeln!(text, "{failures} of {} identities FAILED", reports.len())
            .expect("write to string");
    }

    let json = serde_json::json!({
        "graph": g.canonical_form().to_hex(),
        "parity": parity.name(),
        "seed": seed,
        "checks": kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
        "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
    });
    emit(io.format, &text, &json);
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------- delcon-tree --

fn cmd_delcon_tree(io: &IoArgs) -> Result<ExitCode, Failure> {
    let g = load_graph(io)?;
    let tree = delcon_tree(&g);

    let mut text = format!(
        "P(q) = {}\ncache: {} misses, {} hits\n",
        tree.polynomial, tree.cache_misses, tree.cache_hits
    );
    render_node(&tree.root, 0, "", &mut text);

    emit(io.format, &text, &tree.to_json());
    Ok(ExitCode::SUCCESS)
}

fn render_node(node: &DelconNode, depth: usize, role: &str, out: &mut String) {
    let indent = "  ".repeat(depth);
    let short = |key: &str| key[..key.len().min(10)].to_string();
    match node {
        DelconNode::Loop { graph } => {
            writeln!(out, "{indent}{role}loop [{}] -> 0", short(graph))
        }
        DelconNode::Edgeless { graph } => {
            writeln!(out, "{indent}{role}edgeless [{}] -> 1", short(graph))
        }
        DelconNode::Memo { graph } => {
            writeln!(out, "{indent}{role}memo [{}]", short(graph))
        }
        DelconNode::Simplified { graph, child } => {
            writeln!(out, "{indent}{role}parallel classes [{}]", short(graph))
                .expect("write to string");
            render_node(child, depth + 1, "simplified: ", out);
            Ok(())
        }
        DelconNode::Split {
            graph,
            edge,
            deleted,
            contracted,
        } => {
            writeln!(out, "{indent}{role}split {edge} [{}]", short(graph))
                .expect("write to string");
            render_node(deleted, depth + 1, "deleted: ", out);
            render_node(contracted, depth + 1, "contracted: ", out);
            Ok(())
        }
    }
    .expect("write to string");
}
