//! The `tqnet` batch front end.
//!
//! Exit codes: 0 success, 1 validation failure, 2 parse/IO/usage error,
//! 3 divergence (closure failed to converge or oracle-check mismatch).

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Count, FromWeight, Length, Semiring};
use crate::centrality::{between_time_ex, temp_between, CentralityError};
use crate::exec::Exec;
use crate::netio::random::{random_network, RandomParams};
use crate::netio::{export_results, parse_network, parse_network_unvalidated, Export, Format, NetError, TemporalNetwork};
use crate::oracle::{oracle_check, CheckReport, JourneyRecord, Oracle};
use crate::time::Time;
use crate::traveling::TravelFun;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DIVERGED: i32 = 3;

/// Networks larger than this need `--force` for enumeration.
const ORACLE_NODE_LIMIT: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "tqnet", version, about = "Temporal network analysis with temporal quantities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format: json or csv.
    #[arg(long, default_value = "json", value_parser = parse_format)]
    pub format: Format,
    /// Write results here instead of stdout (replaced atomically).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Disable data parallelism.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct Query {
    #[arg(long)]
    pub from: Option<String>,
    #[arg(long)]
    pub to: Option<String>,
    /// Evaluate at this begin time (requires --from and --to).
    #[arg(long)]
    pub begin: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SemiringKind {
    Combinatorial,
    ShortestPath,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the consistency condition and latency positivity.
    Validate { network: PathBuf },
    /// Foremost arrival functions T(u, v, t).
    FirstArrival {
        network: PathBuf,
        #[command(flatten)]
        query: Query,
        #[command(flatten)]
        output: Output,
    },
    /// Closure over a traveling semiring.
    Closure {
        network: PathBuf,
        #[arg(long, value_enum, default_value = "combinatorial")]
        semiring: SemiringKind,
        #[command(flatten)]
        query: Query,
        #[command(flatten)]
        output: Output,
    },
    /// Time-dependent first-arrival betweenness.
    Betweenness {
        network: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// First-arrival betweenness with exclusion.
    BetweennessEx {
        network: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// List every journey between two nodes.
    Journeys {
        network: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Defaults to the lifetime start.
        #[arg(long)]
        begin: Option<i64>,
        #[arg(long)]
        max_hops: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Compare closures with brute-force enumeration.
    OracleCheck {
        network: Option<PathBuf>,
        /// Also check this many random networks.
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate even on networks with more than 8 nodes.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: NetError| e.to_string())
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Display) -> Self {
        Failure { code, message: message.to_string() }
    }
}

impl From<NetError> for Failure {
    fn from(e: NetError) -> Self {
        let code = match e {
            NetError::Validation(_) | NetError::Latency(_) | NetError::Weight { .. } => EXIT_INVALID,
            _ => EXIT_INPUT,
        };
        let message = match &e {
            NetError::Validation(v) => {
                std::iter::once(e.to_string()).chain(v.iter().map(|x| format!("  {x}"))).collect::<Vec<_>>().join("\n")
            }
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

impl From<CentralityError> for Failure {
    fn from(e: CentralityError) -> Self {
        match e {
            CentralityError::Invalid(v) => NetError::Validation(v).into(),
            CentralityError::Diverged(d) => Failure::new(EXIT_DIVERGED, d),
        }
    }
}

impl From<crate::algebra::ClosureDiverged> for Failure {
    fn from(e: crate::algebra::ClosureDiverged) -> Self {
        Failure::new(EXIT_DIVERGED, e)
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("tqnet: {}", f.message);
            f.code
        }
    }
}

pub fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { network } => {
            let net = parse_network_unvalidated(&read(&network)?)?;
            let violations = net.validate();
            if violations.is_empty() {
                println!("OK");
                Ok(())
            } else {
                for v in &violations {
                    println!("{v}");
                }
                Err(Failure::new(EXIT_INVALID, format!("{} violation(s)", violations.len())))
            }
        }
        Command::FirstArrival { network, query, output } => {
            let net = load(&network)?;
            let m = net.first_arrival_matrix()?.closure(exec(&output))?;
            match pair(&net, &query)? {
                None => emit(&m, &output),
                Some((u, v)) => match query.begin {
                    None => emit(m.get(u, v), &output),
                    Some(t) => emit(
                        &PointResult {
                            from: &m.labels()[u],
                            to: &m.labels()[v],
                            begin: t,
                            arrival: m.get(u, v).evaluate(Time::new(t)),
                            value: None::<Count>,
                        },
                        &output,
                    ),
                },
            }
        }
        Command::Closure { network, semiring, query, output } => {
            let net = load(&network)?;
            match semiring {
                SemiringKind::Combinatorial => closure::<Count>(&net, &query, &output),
                SemiringKind::ShortestPath => closure::<Length>(&net, &query, &output),
            }
        }
        Command::Betweenness { network, output } => {
            let net = load(&network)?;
            emit(&temp_between(&net, exec(&output))?, &output)
        }
        Command::BetweennessEx { network, output } => {
            let net = load(&network)?;
            emit(&between_time_ex(&net, exec(&output))?, &output)
        }
        Command::Journeys { network, from, to, begin, max_hops, output } => {
            let net = load(&network)?;
            let u = node(&net, &from)?;
            let v = node(&net, &to)?;
            let oracle = Oracle::new(&net);
            let begin = begin.unwrap_or(net.lifetime().start);
            let records: Vec<JourneyRecord> =
                oracle.enumerate_journeys(u, v, begin, max_hops).iter().map(|j| JourneyRecord::new(&oracle, j)).collect();
            emit(records.as_slice(), &output)
        }
        Command::OracleCheck { network, trials, seed, force, output } => {
            if network.is_none() && trials == 0 {
                return Err(Failure::new(EXIT_INPUT, "oracle-check needs a network or --trials"));
            }
            let mut report = CheckReport::default();
            if let Some(path) = network {
                let net = load(&path)?;
                if net.node_count() > ORACLE_NODE_LIMIT && !force {
                    return Err(Failure::new(
                        EXIT_INPUT,
                        format!("{} nodes exceeds the enumeration limit of {ORACLE_NODE_LIMIT}; pass --force", net.node_count()),
                    ));
                }
                report.merge(oracle_check(&net, exec(&output))?);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let net = random_network(&mut rng, &RandomParams::default());
                report.merge(oracle_check(&net, exec(&output))?);
            }
            emit(&report, &output)?;
            eprintln!(
                "tqnet: {} network(s), {} comparisons, {} mismatches, {} warnings",
                report.networks,
                report.comparisons,
                report.mismatches.len(),
                report.warnings.len()
            );
            if report.mismatches.is_empty() {
                Ok(())
            } else {
                Err(Failure::new(EXIT_DIVERGED, "closure and enumeration disagree"))
            }
        }
    }
}

fn closure<A>(net: &TemporalNetwork, query: &Query, output: &Output) -> Result<(), Failure>
where
    A: FromWeight + crate::matrix::Closure + Serialize + Display,
    TravelFun<A>: crate::matrix::Closure,
{
    let m = net.travel_matrix::<A>()?.closure(exec(output))?;
    match pair(net, query)? {
        None => emit(&m, output),
        Some((u, v)) => match query.begin {
            None => emit(&Entry(m.get(u, v)), output),
            Some(t) => {
                let g = m.get(u, v).evaluate(Time::new(t));
                let value = (!g.time.is_infinite()).then_some(g.value);
                emit(&PointResult { from: &m.labels()[u], to: &m.labels()[v], begin: t, arrival: g.time, value }, output)
            }
        },
    }
}

fn exec(output: &Output) -> Exec {
    if output.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<TemporalNetwork, Failure> {
    Ok(parse_network(&read(path)?)?)
}

fn node(net: &TemporalNetwork, id: &str) -> Result<usize, Failure> {
    net.node_index(id).ok_or_else(|| NetError::UnknownNode(id.to_string()).into())
}

fn pair(net: &TemporalNetwork, q: &Query) -> Result<Option<(usize, usize)>, Failure> {
    match (&q.from, &q.to) {
        (Some(u), Some(v)) => Ok(Some((node(net, u)?, node(net, v)?))),
        (None, None) if q.begin.is_none() => Ok(None),
        _ => Err(Failure::new(EXIT_INPUT, "--from and --to go together (and --begin needs both)")),
    }
}

/// Writes to `--out` via a sibling temporary file and a rename, so a failed
/// run never leaves a partial file behind.
fn emit<R: Export + ?Sized>(result: &R, output: &Output) -> Result<(), Failure> {
    let bytes = export_results(result, output.format);
    let io = |e: std::io::Error| Failure::new(EXIT_INPUT, e);
    match &output.out {
        None => std::io::stdout().lock().write_all(&bytes).map_err(io),
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(format!(".tmp{}", std::process::id()));
            let tmp = PathBuf::from(tmp);
            std::fs::write(&tmp, &bytes).and_then(|()| std::fs::rename(&tmp, path)).map_err(|e| {
                let _ = std::fs::remove_file(&tmp);
                Failure::new(EXIT_INPUT, format!("{}: {e}", path.display()))
            })
        }
    }
}

/// One traveling function: `start,end,arrival,value`.
struct Entry<'a, A: Semiring>(&'a TravelFun<A>);

impl<A: Semiring + Serialize + Display> Export for Entry<'_, A> {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["start", "end", "arrival", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        match self.0 {
            TravelFun::Zero => Vec::new(),
            TravelFun::Identity(a) => vec![vec![String::new(), String::new(), "identity".into(), a.to_string()]],
            TravelFun::Steps(b) => {
                b.triples().map(|(s, e, g)| vec![s.to_string(), e.to_string(), g.time.to_string(), g.value.to_string()]).collect()
            }
        }
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self.0).expect("serializable")
    }
}

#[derive(Serialize)]
struct PointResult<'a, A> {
    from: &'a str,
    to: &'a str,
    begin: i64,
    arrival: Time,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<A>,
}

impl<A: Serialize + Display> Export for PointResult<'_, A> {
    fn csv_header(&self) -> Vec<&'static str> {
        if self.value.is_some() {
            vec!["from", "to", "begin", "arrival", "value"]
        } else {
            vec!["from", "to", "begin", "arrival"]
        }
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut row = vec![self.from.to_string(), self.to.to_string(), self.begin.to_string(), self.arrival.to_string()];
        row.extend(self.value.as_ref().map(|v| v.to_string()));
        vec![row]
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `kind,from,to,begin,detail`: hard mismatches first, then warnings.
impl Export for CheckReport {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["kind", "from", "to", "begin", "detail"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mismatches = self.mismatches.iter().map(|m| {
            vec![
                "mismatch".into(),
                m.from.clone(),
                m.to.clone(),
                m.begin.to_string(),
                format!("{}: closure {} oracle {}", m.what, m.closure, m.oracle),
            ]
        });
        let warnings = self.warnings.iter().map(|w| {
            vec![
                "warning".into(),
                w.from.clone(),
                w.to.clone(),
                w.begin.to_string(),
                format!("foremost {} ubiquitous {} chained {}", w.counts.foremost, w.counts.ubiquitous, w.counts.chained),
            ]
        });
        mismatches.chain(warnings).collect()
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}
