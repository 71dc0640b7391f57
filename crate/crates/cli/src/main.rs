use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use alphacrit::enumerate::{connected_corpus, enumerate_connected};
use alphacrit::graph6::read_graph6;
use alphacrit::prooflab::{
    cube_uniqueness_check, find_strengthening_witness, sweep, ClaimId, ClaimReport, Summary, Verdict,
};
use alphacrit::{
    alpha, contains_tok4, critical_edges, find_tok4, is_alpha_critical, rho_tilde, to_graph6, CoverFamily, Graph,
    Tok4Certificate,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "alphacrit", version, about = "Stable sets, critical edges and totally odd K4-subdivisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graph6 lines from a file or standard input.
    Analyze(AnalyzeArgs),
    /// Run proof checks over a corpus; one JSON report per line.
    Verify {
        /// Claim ids: theorem1 theorem2 lemma1 claim2 claim3 eq1_consistency case1 case2 cube witness.
        #[arg(required = true)]
        claims: Vec<String>,
        #[command(flatten)]
        source: Source,
    },
    /// Search a corpus for a triangle where exactly two vertex deletions keep a subdivision.
    Witness {
        #[command(flatten)]
        source: Source,
    },
    /// Print the connected graphs on N vertices, one graph6 code per line.
    Enumerate {
        n: usize,
        #[arg(long)]
        alpha_critical: bool,
        #[arg(long)]
        tok4_free: bool,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// graph6 file; standard input when omitted.
    path: Option<PathBuf>,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    alpha: bool,
    #[arg(long)]
    critical: bool,
    #[arg(long)]
    tok4: bool,
    #[arg(long)]
    cover: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Connected graphs on 1..=N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(Serialize)]
struct AnalysisRecord {
    graph6: String,
    n: usize,
    m: usize,
    alpha: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_critical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    critical_edge_count: Option<usize>,
    /// Outer `None`: not requested. Inner `None`: searched, none exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    tok4: Option<Option<Tok4Certificate>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_tilde_times_2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover: Option<CoverFamily>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn analyze_one(g: &Graph, args: &AnalyzeArgs) -> AnalysisRecord {
    let mut rec = AnalysisRecord {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        alpha: alpha(g),
        alpha_critical: None,
        critical_edge_count: None,
        tok4: None,
        rho_tilde_times_2: None,
        cover: None,
        error: None,
    };
    if args.all || args.critical {
        let ec = critical_edges(g);
        rec.alpha_critical = Some(ec.len() == g.m());
        rec.critical_edge_count = Some(ec.len());
    }
    if args.all || args.tok4 {
        rec.tok4 = Some(find_tok4(g));
    }
    if args.all || args.cover {
        match rho_tilde(g) {
            Ok((cost, family)) => {
                rec.rho_tilde_times_2 = Some(cost);
                rec.cover = Some(family);
            }
            Err(e) => rec.error = Some(e.to_string()),
        }
    }
    rec
}

fn print_json(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn open_input(path: Option<&PathBuf>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut code = 0;
    for item in read_graph6(open_input(args.path.as_ref())?)? {
        match item {
            Ok(g) => {
                let rec = analyze_one(&g, &args);
                if rec.error.is_some() {
                    code = code.max(EXIT_FAIL);
                }
                print_json(&mut out, &rec)?;
            }
            Err(e) => {
                eprintln!("error: {e}");
                code = EXIT_PARSE;
            }
        }
    }
    Ok(code)
}

/// The corpus and the largest order it is meant to cover.
fn load_corpus(source: &Source) -> Result<(Vec<Graph>, usize), Failure> {
    if let Some(n) = source.enumerate {
        let corpus = connected_corpus(n).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok((corpus, n));
    }
    let path = source.file.as_ref().expect("clap enforces one source");
    let mut corpus = Vec::new();
    for item in read_graph6(open_input(Some(path))?)? {
        corpus.push(item.map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?);
    }
    let bound = corpus.iter().map(Graph::n).max().unwrap_or(0);
    Ok((corpus, bound))
}

fn witness_report(corpus: &[Graph], bound: usize) -> (Option<ClaimReport>, serde_json::Value) {
    match find_strengthening_witness(corpus) {
        Some(w) => {
            let value = serde_json::to_value(&w).expect("witness serializes");
            let report = ClaimReport::new(ClaimId::Witness, &w.graph, Verdict::Pass, Some(value.clone()));
            (Some(report), value)
        }
        None => (None, json!({ "result": "none in range", "bound": bound })),
    }
}

fn cmd_verify(claims: Vec<String>, source: Source) -> Result<u8, Failure> {
    let claims = claims
        .iter()
        .map(|c| c.parse::<ClaimId>().map_err(|e| Failure::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let (corpus, bound) = load_corpus(&source)?;
    let per_graph: Vec<ClaimId> = claims.iter().copied().filter(|c| c.is_per_graph()).collect();
    let mut reports = sweep(&per_graph, &corpus);
    if claims.contains(&ClaimId::Cube) {
        reports.push(cube_uniqueness_check(&corpus));
    }
    if claims.contains(&ClaimId::Witness) {
        match witness_report(&corpus, bound) {
            (Some(r), _) => reports.push(r),
            (None, none) => reports.push(ClaimReport {
                claim: ClaimId::Witness,
                graph6: String::new(),
                verdict: Verdict::Inapplicable,
                witness: Some(none),
            }),
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in &reports {
        print_json(&mut out, r)?;
    }
    let s = Summary::of(&reports);
    eprintln!("summary: pass={} fail={} inapplicable={}", s.pass, s.fail, s.inapplicable);
    Ok(if s.fail > 0 { EXIT_FAIL } else { 0 })
}

fn cmd_witness(source: Source) -> Result<u8, Failure> {
    let (corpus, bound) = load_corpus(&source)?;
    let (_, value) = witness_report(&corpus, bound);
    print_json(&mut io::stdout().lock(), &value)?;
    Ok(0)
}

fn cmd_enumerate(n: usize, alpha_critical: bool, tok4_free: bool) -> Result<u8, Failure> {
    let graphs = enumerate_connected(n).map_err(|e| Failure::Usage(e.to_string()))?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in graphs {
        if (alpha_critical && !is_alpha_critical(&g)) || (tok4_free && contains_tok4(&g)) {
            continue;
        }
        writeln!(out, "{}", to_graph6(&g))?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify { claims, source } => cmd_verify(claims, source),
        Command::Witness { source } => cmd_witness(source),
        Command::Enumerate { n, alpha_critical, tok4_free } => cmd_enumerate(n, alpha_critical, tok4_free),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alphacrit::cover::COVER_MAX_N;

    #[test]
    fn cover_limit_is_reported_per_record() {
        let args = AnalyzeArgs { path: None, all: false, alpha: false, critical: false, tok4: false, cover: true };
        let rec = analyze_one(&Graph::cycle(COVER_MAX_N + 2), &args);
        assert!(rec.error.is_some());
        assert_eq!(rec.alpha, (COVER_MAX_N + 2) / 2);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
