//! Command-line driver. Exit status: 0 success, 1 a check or sign condition
//! failed, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::budget::Budget;
use crate::decomp::{graph_decomposition, open_decomposition, order_decomposition, stapledon_pair};
use crate::ehrhart::{open_numerator, LatticePolytope};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::{
    enumerate_labeled_graphs, enumerate_labeled_posets, random_graphs, random_posets, verify_each, Check,
    HarnessConfig, Instance, Status, DEFAULT_MAX_SIZE,
};
use crate::polynomial::{series_numerator, IntPolynomial};
use crate::poset::Poset;

#[derive(Parser, Debug)]
#[command(name = "hstar-decomp", version, about = "Ehrhart h*-vectors, chromatic numerators and their symmetric decompositions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for random corpora.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Largest brute-force search space (maps, lattice points, colorings).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Largest size accepted for exhaustive corpora.
    #[arg(long, default_value_t = DEFAULT_MAX_SIZE, global = true)]
    pub max_size: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic polynomial and its series numerator h_G.
    Chromatic { graph: PathBuf },
    /// h*-polynomial of a polytope file or of the order polytope of a poset file.
    Hstar { file: PathBuf },
    /// Symmetric decomposition with sign verdicts.
    Decompose(DecomposeArgs),
    /// Run checks over exhaustive or random corpora.
    Verify(VerifyArgs),
    /// Print seeded random instances.
    Random(RandomArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecomposeKind {
    Stapledon,
    Open,
    Order,
    Graph,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(value_enum)]
    pub kind: DecomposeKind,
    /// Polytope file (stapledon, open), poset file (order) or graph file (graph).
    pub file: Option<PathBuf>,
    /// h* coefficients, ascending, instead of a file.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "dim", conflicts_with = "file")]
    pub hstar: Option<Vec<BigInt>>,
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// All labeled posets on D elements.
    #[arg(long, value_name = "D")]
    pub posets: Vec<usize>,
    /// All labeled graphs on D vertices.
    #[arg(long, value_name = "D")]
    pub graphs: Vec<usize>,
    /// COUNT random graphs on D vertices.
    #[arg(long, value_name = "D:COUNT", value_parser = parse_pair)]
    pub random_graphs: Vec<(usize, usize)>,
    /// COUNT random posets on D elements.
    #[arg(long, value_name = "D:COUNT", value_parser = parse_pair)]
    pub random_posets: Vec<(usize, usize)>,
    /// Polytope files.
    #[arg(long, value_name = "FILE")]
    pub polytope: Vec<PathBuf>,
    /// Comma-separated check names; all applicable checks by default.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<Check>,
    /// Negate the leading coefficient of every base polynomial; failures are expected.
    #[arg(long)]
    pub mutate_selftest: bool,
    /// Relation probability for random posets.
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub poset_prob: f64,
    /// Per-input wall-clock limit in seconds; later checks are skipped.
    #[arg(long)]
    pub time_limit: Option<f64>,
    #[arg(long)]
    pub timing: bool,
    /// Include witnesses for passing checks.
    #[arg(long)]
    pub all_witnesses: bool,
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[arg(value_enum)]
    pub kind: RandomKind,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub poset_prob: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    Poset,
    Graph,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected D:COUNT, found `{s}`"))?;
    let parse = |x: &str| x.parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn budget(cli: &Cli) -> Budget {
    cli.budget.map_or_else(Budget::default, Budget::with_max_work)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Chromatic { graph } => chromatic(cli, &load_graph(graph)?, out),
        Command::Hstar { file } => hstar(cli, file, out),
        Command::Decompose(args) => decompose(cli, args, out),
        Command::Verify(args) => verify(cli, args, out),
        Command::Random(args) => random(cli, args, out),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

fn load_poset(path: &Path) -> Result<Poset> {
    Poset::parse(&read(path)?)
}

fn list(p: &IntPolynomial, len: usize) -> String {
    format!("[{}]", p.to_decimal_strings(len).join(", "))
}

fn emit(out: &mut dyn Write, line: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{line}")?;
    Ok(())
}

fn chromatic(cli: &Cli, g: &Graph, out: &mut dyn Write) -> Result<i32> {
    let d = g.len();
    let chi = g
        .chromatic_polynomial()
        .to_integer()
        .ok_or_else(|| Error::Internal("chromatic polynomial has a non-integer coefficient".into()))?;
    let h = series_numerator(&g.chromatic_polynomial(), d)?;
    match cli.format {
        Format::Text => {
            emit(out, format!("chi = {}", list(&chi, d + 1)))?;
            emit(out, format!("h_G = {}", list(&h, d + 1)))?;
        }
        Format::JsonLines => emit(
            out,
            json!({"d": d, "chi": chi.to_decimal_strings(d + 1), "h_G": h.to_decimal_strings(d + 1)}),
        )?,
    }
    Ok(0)
}

/// Poset files start with a `p` header; anything else is a polytope file.
fn load_polytope(path: &Path) -> Result<LatticePolytope> {
    let text = read(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'));
    if first.is_some_and(|l| l.split_whitespace().next() == Some("p")) {
        Ok(LatticePolytope::Order(Poset::parse(&text)?))
    } else {
        LatticePolytope::parse(&text, path.parent())
    }
}

fn hstar(cli: &Cli, path: &Path, out: &mut dyn Write) -> Result<i32> {
    let poly = load_polytope(path)?;
    let d = poly.dim();
    let b = budget(cli);
    let ehrhart = poly.ehrhart_polynomial(&b)?;
    let h = poly.h_star(&b)?;
    let h_open = open_numerator(&h, d)?;
    let ehr = ehrhart.to_strings(d + 1);
    match cli.format {
        Format::Text => {
            emit(out, format!("d = {d}"))?;
            emit(out, format!("ehrhart = [{}]", ehr.join(", ")))?;
            emit(out, format!("h_star = {}", list(&h, d + 1)))?;
            emit(out, format!("h_open = {}", list(&h_open, d + 2)))?;
        }
        Format::JsonLines => emit(
            out,
            json!({
                "d": d,
                "ehrhart": ehr,
                "h_star": h.to_decimal_strings(d + 1),
                "h_open": h_open.to_decimal_strings(d + 2),
            }),
        )?,
    }
    Ok(0)
}

/// One named polynomial of a decomposition, printed densely.
struct Part<'a>(&'static str, &'a IntPolynomial);

fn report_decomposition(
    cli: &Cli,
    out: &mut dyn Write,
    kind: &str,
    params: &[(&str, usize)],
    parts: &[Part<'_>],
    symmetric: bool,
    signs: bool,
) -> Result<i32> {
    let verdict = if signs { Status::Pass } else { Status::Fail };
    match cli.format {
        Format::Text => {
            emit(out, format!("kind = {kind}"))?;
            for (name, v) in params {
                emit(out, format!("{name} = {v}"))?;
            }
            for Part(name, p) in parts {
                emit(out, format!("{name} = {}", list(p, 0)))?;
            }
            emit(out, format!("symmetric = {}", if symmetric { "yes" } else { "no" }))?;
            emit(out, format!("verdict = {verdict}"))?;
        }
        Format::JsonLines => {
            let mut obj = serde_json::Map::new();
            obj.insert("kind".into(), json!(kind));
            for (name, v) in params {
                obj.insert((*name).into(), json!(v));
            }
            for Part(name, p) in parts {
                obj.insert((*name).into(), json!(p.to_decimal_strings(0)));
            }
            obj.insert("symmetric".into(), json!(symmetric));
            obj.insert("verdict".into(), json!(verdict));
            emit(out, serde_json::Value::Object(obj))?;
        }
    }
    Ok(if signs && symmetric { 0 } else { 1 })
}

fn decompose(cli: &Cli, args: &DecomposeArgs, out: &mut dyn Write) -> Result<i32> {
    let b = budget(cli);
    // h* and d from `--hstar/--dim` or from the input file.
    let hstar_input = |file_kind: &str| -> Result<(IntPolynomial, usize)> {
        if let (Some(h), Some(d)) = (&args.hstar, args.dim) {
            return Ok((IntPolynomial::new(h.clone()), d));
        }
        let path = args
            .file
            .as_ref()
            .ok_or_else(|| Error::Dimension(format!("give a {file_kind} file or --hstar with --dim")))?;
        let poly = load_polytope(path)?;
        Ok((poly.h_star(&b)?, poly.dim()))
    };
    match args.kind {
        DecomposeKind::Stapledon => {
            let (h, d) = hstar_input("polytope")?;
            let dec = stapledon_pair(&h, d, false)?;
            let params = [("d", dec.d), ("s", dec.s), ("l", dec.l)];
            let parts = [Part("a_star", &dec.a), Part("b_star", &dec.b)];
            report_decomposition(cli, out, "stapledon", &params, &parts, dec.is_symmetric(), dec.is_nonnegative())
        }
        DecomposeKind::Open => {
            let (h, d) = hstar_input("polytope")?;
            let dec = open_decomposition(&h, d)?;
            let h_open = dec.numerator();
            let parts = [Part("h_open", &h_open), Part("a_P", &dec.a), Part("b_P", &dec.b)];
            report_decomposition(cli, out, "open", &[("d", d)], &parts, dec.is_symmetric(), dec.signs_hold())
        }
        DecomposeKind::Order => {
            let (h, d) = if let (Some(h), Some(d)) = (&args.hstar, args.dim) {
                (IntPolynomial::new(h.clone()), d)
            } else {
                let path = args
                    .file
                    .as_ref()
                    .ok_or_else(|| Error::Dimension("give a poset file or --hstar with --dim".into()))?;
                let p = load_poset(path)?;
                (p.descent_h_star(), p.len())
            };
            let dec = order_decomposition(&h, d)?;
            let h_open = dec.numerator();
            let parts = [Part("h_open", &h_open), Part("a_Pi", &dec.a), Part("b_Pi", &dec.b)];
            report_decomposition(cli, out, "order", &[("d", d)], &parts, dec.is_symmetric(), dec.signs_hold())
        }
        DecomposeKind::Graph => {
            let path = args
                .file
                .as_ref()
                .ok_or_else(|| Error::Dimension("the graph decomposition needs a graph file".into()))?;
            let g = load_graph(path)?;
            let dec = graph_decomposition(&g)?;
            let params = [("d", dec.d), ("acyclic_orientations", dec.acyclic_orientations)];
            let parts = [Part("h_G", &dec.numerator), Part("a", &dec.a), Part("b", &dec.b)];
            report_decomposition(cli, out, "graph", &params, &parts, dec.is_symmetric(), dec.signs_hold())
        }
    }
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut instances = Vec::new();
    for &d in &args.posets {
        instances.extend(enumerate_labeled_posets(d, cli.max_size)?.map(Instance::Poset));
    }
    for &d in &args.graphs {
        instances.extend(enumerate_labeled_graphs(d, cli.max_size)?.map(Instance::Graph));
    }
    for &(d, count) in &args.random_posets {
        instances.extend(random_posets(d, count, cli.seed, args.poset_prob).map(Instance::Poset));
    }
    for &(d, count) in &args.random_graphs {
        instances.extend(random_graphs(d, count, cli.seed).map(Instance::Graph));
    }
    for path in &args.polytope {
        let polytope = load_polytope(path)?;
        instances.push(Instance::Polytope {
            label: path.display().to_string(),
            polytope,
        });
    }
    if instances.is_empty() {
        return Err(Error::Dimension(
            "no inputs: use --posets, --graphs, --random-posets, --random-graphs or --polytope".into(),
        ));
    }
    if !(0.0..=1.0).contains(&args.poset_prob) {
        return Err(Error::Dimension(format!("--poset-prob {} is not a probability", args.poset_prob)));
    }
    let checks: Vec<Check> = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks.clone()
    };
    let config = HarnessConfig {
        budget: budget(cli),
        time_limit: args.time_limit.map(Duration::from_secs_f64),
        mutate: args.mutate_selftest,
        timing: args.timing,
        all_witnesses: args.all_witnesses,
    };
    let mut io_error = None;
    let summary = verify_each(&instances, &checks, &config, |report| {
        let result = match cli.format {
            Format::JsonLines => serde_json::to_string(&report)
                .map_err(|e| Error::Internal(e.to_string()))
                .and_then(|line| emit(out, line)),
            Format::Text => (|| {
                for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
                    emit(
                        out,
                        format!("FAIL #{} {} {}: {}", report.index, report.kind, c.check, c.detail.as_deref().unwrap_or("")),
                    )?;
                    for (name, coeffs) in &c.witnesses {
                        emit(out, format!("  {name} = [{}]", coeffs.join(", ")))?;
                    }
                    for line in report.input.lines() {
                        emit(out, format!("  | {line}"))?;
                    }
                }
                Ok(())
            })(),
        };
        if let Err(e) = result {
            io_error.get_or_insert(e);
        }
    });
    if let Some(e) = io_error {
        return Err(e);
    }
    match cli.format {
        Format::Text => emit(out, &summary)?,
        Format::JsonLines => emit(out, json!({ "summary": summary }))?,
    }
    Ok(if summary.failed > 0 { 1 } else { 0 })
}

fn random(cli: &Cli, args: &RandomArgs, out: &mut dyn Write) -> Result<i32> {
    if !(0.0..=1.0).contains(&args.poset_prob) {
        return Err(Error::Dimension(format!("--poset-prob {} is not a probability", args.poset_prob)));
    }
    let instances: Vec<Instance> = match args.kind {
        RandomKind::Graph => random_graphs(args.dim, args.count, cli.seed).map(Instance::Graph).collect(),
        RandomKind::Poset => random_posets(args.dim, args.count, cli.seed, args.poset_prob)
            .map(Instance::Poset)
            .collect(),
    };
    for (i, inst) in instances.iter().enumerate() {
        match cli.format {
            Format::Text => {
                if i > 0 {
                    emit(out, "")?;
                }
                write!(out, "{}", inst.to_text())?;
            }
            Format::JsonLines => emit(out, json!({"kind": inst.kind().name(), "input": inst.to_text()}))?,
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hstar-decomp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn stapledon_from_flags() {
        let (code, out, _) = run_str(&["decompose", "stapledon", "--hstar", "1,3", "--dim", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("a_star = [1, 4, 1]"), "{out}");
        assert!(out.contains("b_star = [2]"), "{out}");
        assert!(out.contains("l = 2"), "{out}");
    }

    #[test]
    fn negative_stapledon_exits_one() {
        let (code, out, _) = run_str(&["decompose", "stapledon", "--hstar", "1,-1", "--dim", "1"]);
        assert_eq!(code, 1);
        assert!(out.contains("verdict = FAIL"));
    }

    #[test]
    fn verify_summary() {
        let (code, out, _) = run_str(&["verify", "--posets", "3", "--checks", "thm1.2,conj6.2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "19 inputs, 0 failures");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["verify", "--bogus"]).0, 2);
        assert_eq!(run_str(&["verify", "--checks", "thm9", "--posets", "2"]).0, 2);
        assert_eq!(run_str(&["verify"]).0, 2);
        assert_eq!(run_str(&["verify", "--posets", "9"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
