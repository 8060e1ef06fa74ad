//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 clean run, 1 input errors (unparsable graph6, disconnected
//! graphs, unreadable files), 2 requests beyond a capability bound, 3 a
//! catalogue that disagrees with its reference fixture, 4 flagged results
//! (excluded graphs for `check`, formula exceptions for `distance`,
//! counterexamples for `conjectures`).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::biclique::biclique_graph;
use crate::conjecture::{check_all, ConjectureFinding, ConjectureId, FindingVerdict, TwinReading};
use crate::distance::{find_witnesses, verify_distance_formula};
use crate::error::{Error, Result};
use crate::graph::{read_graph6_lines, write_graph6, Graph};
use crate::obstruction::classify;
use crate::recognition::{
    build_catalogue, classify_graph, compare_with_reference, entry_to_json, read_catalogue, write_catalogue,
    CatalogueEntry, Classification, PreimageIndex, DEFAULT_MAX_H_ORDER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAPABILITY: i32 = 2;
pub const EXIT_FIXTURE_MISMATCH: i32 = 3;
pub const EXIT_FLAGGED: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    CompleteSubgraph,
    MaximalClique,
    Equal,
}

impl From<Reading> for TwinReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::CompleteSubgraph => TwinReading::CompleteSubgraph,
            Reading::MaximalClique => TwinReading::MaximalClique,
            Reading::Equal => TwinReading::Equal,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "biclique-lab",
    version,
    about = "Bicliques, biclique graphs and their recognition"
)]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for parallel searches.
    #[arg(long, global = true, env = "BICLIQUE_LAB_WORKERS")]
    pub workers: Option<usize>,

    /// Treat warnings as errors.
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// graph6 file, one graph per line; `-` or absent reads stdin.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the bicliques of each graph and its biclique graph.
    Bicliques(Input),
    /// Print the biclique graph of each graph.
    Kb(Input),
    /// Compare biclique distances with distances in the biclique graph.
    Distance(Input),
    /// Run the necessary conditions on each graph.
    Check {
        #[command(flatten)]
        input: Input,
        /// Flag graphs that pass every check instead of those that fail one.
        #[arg(long)]
        invert: bool,
    },
    /// Search for a preimage of each graph, falling back to the checks.
    Recognize {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_MAX_H_ORDER)]
        max_h_order: usize,
    },
    /// Classify every connected graph up to an order and persist the result.
    Catalogue {
        #[arg(long, default_value_t = 6)]
        max_g_order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_H_ORDER)]
        max_h_order: usize,
        /// Directory receiving one JSON-lines file per order.
        #[arg(long, default_value = "catalogue")]
        out: PathBuf,
        /// graph6 list of the expected biclique graphs.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Scan the biclique graphs of a catalogue for counterexamples.
    Conjectures {
        /// Catalogue directory or JSON-lines file.
        catalogue: PathBuf,
        /// Largest number of twins tried.
        #[arg(long, default_value_t = 4)]
        i_max: usize,
        #[arg(long, value_enum, default_value_t = Reading::CompleteSubgraph)]
        reading: Reading,
        /// Findings file (JSON lines).
        #[arg(long, default_value = "findings.jsonl")]
        out: PathBuf,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capability { .. } => EXIT_CAPABILITY,
        _ => EXIT_INPUT,
    }
}

/// Tracks the worst exit status seen while streaming.
struct Status {
    code: i32,
}

impl Status {
    fn raise(&mut self, code: i32) {
        // capability and fixture problems outrank input errors, which
        // outrank flagged results
        let rank = |c: i32| match c {
            EXIT_OK => 0,
            EXIT_FLAGGED => 1,
            EXIT_INPUT => 2,
            _ => 3,
        };
        if rank(code) > rank(self.code) {
            self.code = code;
        }
    }
}

fn open_input<'a>(input: &Input, stdin: &'a mut dyn BufRead) -> Result<Box<dyn BufRead + 'a>> {
    match &input.input {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => Ok(Box::new(stdin)),
    }
}

/// Streams graphs to `f`, reporting bad lines on `err` and continuing.
fn for_each_graph(
    input: &Input,
    stdin: &mut dyn BufRead,
    err: &mut dyn Write,
    status: &mut Status,
    mut f: impl FnMut(usize, &Graph) -> Result<()>,
) -> Result<()> {
    let reader = open_input(input, stdin)?;
    for line in read_graph6_lines(reader) {
        let line = line?;
        let result = line.graph.and_then(|g| f(line.line, &g));
        if let Err(e) = result {
            writeln!(err, "line {}: {e}", line.line)?;
            status.raise(exit_code(&e));
        }
    }
    Ok(())
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn vertex_list(v: impl IntoIterator<Item = usize>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_bicliques(cli: &Cli, input: &Input, io: &mut Io, status: &mut Status) -> Result<()> {
    let format = cli.format.unwrap_or(Format::Tsv);
    for_each_graph(input, io.stdin, io.err, status, |line, g| {
        let (kb, fam) = biclique_graph(g)?;
        match format {
            Format::Json => json_line(
                io.out,
                &json!({
                    "schema": "biclique-lab/bicliques/v1",
                    "line": line,
                    "graph6": write_graph6(g),
                    "bicliques": fam.bicliques(),
                    "kb": write_graph6(&kb),
                }),
            ),
            _ => {
                writeln!(io.out, "# {}", write_graph6(g))?;
                for (i, b) in fam.bicliques().iter().enumerate() {
                    writeln!(io.out, "{i}\t{}\t{}", vertex_list(b.vertices()), b.display())?;
                }
                writeln!(io.out, "kb\t{}", write_graph6(&kb))?;
                Ok(())
            }
        }
    })
}

fn cmd_kb(cli: &Cli, input: &Input, io: &mut Io, status: &mut Status) -> Result<()> {
    let format = cli.format.unwrap_or(Format::Graph6);
    for_each_graph(input, io.stdin, io.err, status, |line, g| {
        let (kb, fam) = biclique_graph(g)?;
        let legend: Vec<Vec<usize>> = fam.bicliques().iter().map(|b| b.vertices().to_vec()).collect();
        match format {
            Format::Graph6 => writeln!(io.out, "{}", write_graph6(&kb)).map_err(Error::from),
            Format::Tsv => {
                let legend: Vec<String> = legend.iter().map(|b| vertex_list(b.iter().copied())).collect();
                writeln!(io.out, "{}\t{}", write_graph6(&kb), legend.join(",")).map_err(Error::from)
            }
            Format::Json => json_line(
                io.out,
                &json!({
                    "schema": "biclique-lab/kb/v1",
                    "line": line,
                    "graph6": write_graph6(g),
                    "kb": write_graph6(&kb),
                    "legend": legend,
                }),
            ),
        }
    })
}

fn cmd_distance(cli: &Cli, input: &Input, io: &mut Io, status: &mut Status) -> Result<()> {
    let format = cli.format.unwrap_or(Format::Tsv);
    let mut failures = Vec::new();
    for_each_graph(input, io.stdin, io.err, status, |line, g| {
        let reports = verify_distance_formula(g)?;
        let fam = crate::biclique::enumerate_bicliques(g)?;
        if format != Format::Json {
            writeln!(io.out, "# {}", write_graph6(g))?;
            writeln!(io.out, "i\tj\td_g\td_kb\tformula\twitnesses")?;
        }
        for r in &reports {
            let witnesses = if r.d_g > 0 {
                Some(find_witnesses(&fam, r.b_index, r.b_prime_index)?.witnesses.len())
            } else {
                None
            };
            if !r.holds() {
                failures.push((line, r.b_index, r.b_prime_index));
            }
            if format == Format::Json {
                json_line(
                    io.out,
                    &json!({
                        "schema": "biclique-lab/distance/v1",
                        "line": line,
                        "graph6": write_graph6(g),
                        "report": r,
                        "witnesses": witnesses,
                    }),
                )?;
            } else {
                let w = witnesses.map_or("-".to_string(), |w| w.to_string());
                writeln!(
                    io.out,
                    "{}\t{}\t{}\t{}\t{}\t{w}",
                    r.b_index, r.b_prime_index, r.d_g, r.d_kb, r.formula_value
                )?;
            }
        }
        Ok(())
    })?;
    for (line, i, j) in &failures {
        writeln!(io.err, "line {line}: formula fails for bicliques {i} and {j}")?;
        status.raise(EXIT_FLAGGED);
    }
    Ok(())
}

fn cmd_check(cli: &Cli, input: &Input, invert: bool, io: &mut Io, status: &mut Status) -> Result<()> {
    let format = cli.format.unwrap_or(Format::Json);
    let mut flagged = false;
    for_each_graph(input, io.stdin, io.err, status, |line, g| {
        let report = classify(g)?;
        flagged |= report.excluded != invert;
        match format {
            Format::Json => json_line(
                io.out,
                &json!({
                    "schema": "biclique-lab/obstruction-report/v1",
                    "line": line,
                    "graph6": write_graph6(g),
                    "report": report,
                }),
            ),
            Format::Tsv => {
                let failed: Vec<&str> = report.failed_checks().iter().map(|c| c.as_str()).collect();
                writeln!(
                    io.out,
                    "{}\t{}\t{}",
                    write_graph6(g),
                    if report.excluded { "excluded" } else { "passes" },
                    failed.join(",")
                )
                .map_err(Error::from)
            }
            // graph6 output acts as a filter: only graphs passing every check
            // (or, inverted, failing one) are echoed
            Format::Graph6 => {
                if report.excluded == invert {
                    writeln!(io.out, "{}", write_graph6(g))?;
                }
                Ok(())
            }
        }
    })?;
    if flagged {
        status.raise(EXIT_FLAGGED);
    }
    Ok(())
}

fn entry_tsv(e: &CatalogueEntry) -> String {
    let evidence = match &e.classification {
        Classification::BicliqueGraph { preimage } => write_graph6(preimage),
        Classification::NotBicliqueGraph { obstruction } => obstruction.kind().as_str().to_string(),
        Classification::UnknownWithinBound => format!("searched up to {}", e.max_h_order),
    };
    format!("{}\t{}\t{evidence}", write_graph6(&e.graph), e.classification.label())
}

fn cmd_recognize(cli: &Cli, input: &Input, max_h_order: usize, io: &mut Io, status: &mut Status) -> Result<()> {
    let format = cli.format.unwrap_or(Format::Tsv);
    // indexes are rebuilt only when a larger graph arrives
    let mut index: Option<PreimageIndex> = None;
    for_each_graph(input, io.stdin, io.err, status, |_, g| {
        if index.as_ref().is_none_or(|ix| ix.max_g_order() < g.order()) {
            index = Some(io.pool.install(|| PreimageIndex::build(g.order(), max_h_order))?);
        }
        let ix = index.as_ref().expect("just built");
        let entry = io.pool.install(|| classify_graph(g, ix))?;
        match format {
            Format::Json => writeln!(io.out, "{}", entry_to_json(&entry)).map_err(Error::from),
            _ => writeln!(io.out, "{}", entry_tsv(&entry)).map_err(Error::from),
        }
    })
}

fn read_fixture(path: &Path) -> Result<Vec<Graph>> {
    let reader = BufReader::new(File::open(path)?);
    read_graph6_lines(reader)
        .map(|l| {
            l.and_then(|l| {
                l.graph.map_err(|e| Error::Graph6 {
                    offset: 0,
                    reason: format!("{}:{}: {e}", path.display(), l.line),
                })
            })
        })
        .collect()
}

fn cmd_catalogue(
    cli: &Cli,
    max_g_order: usize,
    max_h_order: usize,
    out_dir: &Path,
    fixture: Option<&Path>,
    io: &mut Io,
    status: &mut Status,
) -> Result<()> {
    let catalogue = io.pool.install(|| build_catalogue(max_g_order, max_h_order))?;
    let unverified: Vec<&CatalogueEntry> = catalogue
        .entries
        .iter()
        .filter(|e| !crate::recognition::verify_entry(e))
        .collect();
    if let Some(e) = unverified.first() {
        return Err(Error::Inconsistent(format!("evidence for {} does not verify", e.graph)));
    }
    write_catalogue(out_dir, &catalogue)?;
    let summary = catalogue.summary();
    let format = cli.format.unwrap_or(Format::Tsv);

    let comparison = match fixture {
        Some(path) if path.exists() => Some(compare_with_reference(&catalogue, &read_fixture(path)?)?),
        Some(path) => {
            writeln!(
                io.err,
                "warning: fixture {} not found; comparison skipped",
                path.display()
            )?;
            if cli.strict {
                status.raise(EXIT_FIXTURE_MISMATCH);
            }
            None
        }
        None if max_g_order == 6 => {
            writeln!(io.err, "warning: no --fixture given; comparison skipped")?;
            if cli.strict {
                status.raise(EXIT_FIXTURE_MISMATCH);
            }
            None
        }
        None => None,
    };

    let g6 = |gs: &[Graph]| gs.iter().map(write_graph6).collect::<Vec<_>>();
    if format == Format::Json {
        let cmp = comparison.as_ref().map(|c| {
            json!({
                "matches": c.matches(),
                "classified_negative": g6(&c.classified_negative),
                "lacking_preimage": g6(&c.lacking_preimage),
                "out_of_range": g6(&c.out_of_range),
                "unexpected": g6(&c.unexpected),
                "duplicates": g6(&c.duplicates),
            })
        });
        json_line(
            io.out,
            &json!({
                "schema": "biclique-lab/catalogue-summary/v1",
                "max_g_order": max_g_order,
                "max_h_order": max_h_order,
                "orders": summary,
                "comparison": cmp,
            }),
        )?;
    } else {
        writeln!(io.out, "order\tgraphs\tpositive\tnegative\tunknown")?;
        for s in &summary {
            writeln!(
                io.out,
                "{}\t{}\t{}\t{}\t{}",
                s.order, s.graphs, s.positive, s.negative, s.unknown
            )?;
        }
        if let Some(c) = &comparison {
            writeln!(io.out, "fixture\t{}", if c.matches() { "match" } else { "mismatch" })?;
            for (label, gs) in [
                ("lacking_preimage", &c.lacking_preimage),
                ("classified_negative", &c.classified_negative),
                ("out_of_range", &c.out_of_range),
                ("unexpected", &c.unexpected),
                ("duplicates", &c.duplicates),
            ] {
                if !gs.is_empty() {
                    writeln!(io.out, "{label}\t{}", g6(gs).join(" "))?;
                }
            }
        }
    }
    if comparison.is_some_and(|c| !c.matches()) {
        status.raise(EXIT_FIXTURE_MISMATCH);
    }
    Ok(())
}

fn cmd_conjectures(
    cli: &Cli,
    catalogue: &Path,
    i_max: usize,
    reading: TwinReading,
    out_path: &Path,
    io: &mut Io,
    status: &mut Status,
) -> Result<()> {
    let entries = read_catalogue(catalogue)?;
    let mut out = io::BufWriter::new(File::create(out_path)?);
    let per_graph: Vec<Vec<ConjectureFinding>> = io.pool.install(|| {
        entries
            .par_iter()
            .filter_map(|e| match &e.classification {
                Classification::BicliqueGraph { preimage } => Some(check_all(&e.graph, i_max, reading, Some(preimage))),
                _ => None,
            })
            .collect::<Result<_>>()
    })?;
    let findings: Vec<ConjectureFinding> = per_graph.into_iter().flatten().collect();
    for f in &findings {
        json_line(&mut out, f)?;
    }
    out.flush()?;

    let tally =
        |id: ConjectureId, v: FindingVerdict| findings.iter().filter(|f| f.conjecture == id && f.verdict == v).count();
    let rows: Vec<_> = ConjectureId::ALL
        .iter()
        .map(|&id| {
            (
                id,
                tally(id, FindingVerdict::Consistent),
                tally(id, FindingVerdict::Counterexample),
                tally(id, FindingVerdict::NotApplicable),
            )
        })
        .collect();
    if cli.format == Some(Format::Json) {
        let rows: Vec<_> = rows
            .iter()
            .map(|(id, c, x, n)| json!({"conjecture": id, "consistent": c, "counterexamples": x, "not_applicable": n}))
            .collect();
        json_line(
            io.out,
            &json!({"schema": "biclique-lab/conjecture-summary/v1", "rows": rows}),
        )?;
    } else {
        writeln!(io.out, "conjecture\tconsistent\tcounterexamples\tnot_applicable")?;
        for (id, c, x, n) in &rows {
            writeln!(io.out, "{}\t{c}\t{x}\t{n}", id.as_str())?;
        }
    }
    if findings.iter().any(ConjectureFinding::is_counterexample) {
        status.raise(EXIT_FLAGGED);
    }
    Ok(())
}

struct Io<'a> {
    pool: rayon::ThreadPool,
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

fn dispatch(cli: &Cli, io: &mut Io, status: &mut Status) -> Result<()> {
    match &cli.command {
        Command::Bicliques(input) => cmd_bicliques(cli, input, io, status),
        Command::Kb(input) => cmd_kb(cli, input, io, status),
        Command::Distance(input) => cmd_distance(cli, input, io, status),
        Command::Check { input, invert } => cmd_check(cli, input, *invert, io, status),
        Command::Recognize { input, max_h_order } => cmd_recognize(cli, input, *max_h_order, io, status),
        Command::Catalogue {
            max_g_order,
            max_h_order,
            out,
            fixture,
        } => cmd_catalogue(cli, *max_g_order, *max_h_order, out, fixture.as_deref(), io, status),
        Command::Conjectures {
            catalogue,
            i_max,
            reading,
            out,
        } => cmd_conjectures(cli, catalogue, *i_max, (*reading).into(), out, io, status),
    }
}

fn default_workers(command: &Command) -> Option<usize> {
    match command {
        Command::Catalogue { .. } | Command::Conjectures { .. } => None,
        _ => Some(1),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let workers = cli.workers.or_else(|| default_workers(&cli.command));
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        builder = builder.num_threads(n.max(1));
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let mut status = Status { code: EXIT_OK };
    let mut io = Io { pool, stdin, out, err };
    let result = dispatch(&cli, &mut io, &mut status);
    if let Err(e) = result {
        let _ = writeln!(io.err, "error: {e}");
        status.raise(exit_code(&e));
    }
    let _ = io.out.flush();
    status.code
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    run(std::env::args_os(), &mut stdin, &mut out, &mut err)
}
