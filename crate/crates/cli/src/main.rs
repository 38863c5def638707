//! `kfcrit`: spectral radius, k-factor-criticality, thresholds and sweeps
//! from the command line.
//!
//! Exit status: 0 on success, 1 when a counterexample turns up, 2 on any
//! usage or input error (with a one-line diagnostic on stderr).

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use kfcrit_core::criticality::{Certificate, CertificateKind, CriticalityVerdict};
use kfcrit_core::families::{extremal_for, threshold};
use kfcrit_core::format::{decode_graph6, encode_graph6, parse_edge_list};
use kfcrit_core::report::{records_to_csv, sig10, ReportDocument};
use kfcrit_core::spectral::{spectral_radius, COMPUTE_TOLERANCE};
use kfcrit_core::verify::{
    analyze_graph, run_sweep, run_sweep_stream, ExtremalFacts, SweepConfig, Witness, DEFAULT_MARGIN,
};
use kfcrit_core::Graph;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "kfcrit", version, about = "Spectral radius conditions for k-factor-critical graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius of a graph.
    Radius {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide k-factor-criticality by definition and by Favaron's criterion.
    Critical {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Spectral threshold for order n and parameter k.
    Threshold {
        #[command(flatten)]
        order: OrderParams,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The graph attaining the threshold, as graph6.
    Extremal {
        #[command(flatten)]
        order: OrderParams,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every eligible graph of order n against the threshold.
    Sweep {
        #[command(flatten)]
        order: OrderParams,
        /// Read graphs from a graph6 file (`-` for stdin) instead of the
        /// built-in enumeration.
        #[arg(long, value_name = "PATH")]
        graph6_file: Option<PathBuf>,
        /// Slack for the strict comparison rho > threshold.
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: f64,
        #[arg(long, value_enum, default_value_t = SweepFormat::Text)]
        format: SweepFormat,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Confirm that the extremal graph attains the threshold and is not
    /// k-factor-critical.
    Sharpness {
        #[command(flatten)]
        order: OrderParams,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file (`n <count>` line, then `u v` per edge; `-` for stdin).
    #[arg(long, value_name = "PATH")]
    edges_file: Option<PathBuf>,
}

#[derive(Args)]
struct OrderParams {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Text,
    Json,
    Csv,
}

type CliResult = Result<ExitCode, String>;

fn read_source(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

impl GraphInput {
    fn load(&self) -> Result<Graph, String> {
        let g = match (&self.graph6, &self.edges_file) {
            (Some(text), None) => decode_graph6(text).map_err(|e| e.to_string())?,
            (None, Some(path)) => parse_edge_list(&read_source(path)?).map_err(|e| e.to_string())?,
            _ => return Err("give exactly one of --graph6 or --edges-file".into()),
        };
        if g.order() == 0 {
            return Err("graphs of order 0 are not accepted".into());
        }
        Ok(g)
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| format!("stdout: {e}"))
        }
    }
}

fn json<T: Serialize>(payload: T) -> String {
    let mut text = ReportDocument::new(payload).to_json();
    text.push('\n');
    text
}

/// Aligned `key  value` lines.
fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn set_text(c: &Certificate) -> String {
    let items: Vec<String> = c.witness.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn certificate_text(c: &Certificate) -> String {
    match c.kind {
        CertificateKind::ViolatingSet => {
            format!("D = {}, o(G - D) = {}", set_text(c), c.odd_components.unwrap_or_default())
        }
        CertificateKind::UnmatchedRemoval => format!("Q = {}, G - Q has no perfect matching", set_text(c)),
    }
}

fn verdict_text(v: &CriticalityVerdict) -> String {
    match &v.certificate {
        None => "critical".into(),
        Some(c) => format!("not critical ({})", certificate_text(c)),
    }
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        None => "-".into(),
        Some(w) => format!("{}  rho {}", w.graph6, sig10(w.rho)),
    }
}

fn radius(input: &GraphInput, format: Format) -> CliResult {
    let g = input.load()?;
    let rho = spectral_radius(&g, COMPUTE_TOLERANCE).map_err(|e| e.to_string())?;
    let graph6 = encode_graph6(&g).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Text => table(&[("n", g.order().to_string()), ("edges", g.edge_count().to_string()), ("rho", sig10(rho))]),
        Format::Json => {
            #[derive(Serialize)]
            struct Radius {
                graph6: String,
                n: usize,
                edges: usize,
                rho: f64,
            }
            json(Radius { graph6, n: g.order(), edges: g.edge_count(), rho })
        }
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn critical(input: &GraphInput, k: usize, format: Format) -> CliResult {
    let g = input.load()?;
    let a = analyze_graph(&g, Some(k)).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Json => json(&a),
        Format::Text => {
            let mut rows = vec![
                ("graph6", a.graph6.clone()),
                ("n", a.n.to_string()),
                ("rho", sig10(a.rho)),
                ("kappa", a.kappa.to_string()),
                ("k", k.to_string()),
            ];
            if let Some(t) = &a.threshold {
                rows.push(("threshold", format!("{} ({})", sig10(t.value), t.regime)));
            }
            rows.push(("definition", a.by_definition.as_ref().map(verdict_text).unwrap_or_default()));
            rows.push(("favaron", a.by_favaron.as_ref().map(verdict_text).unwrap_or_default()));
            table(&rows)
        }
    };
    emit(&text, None)?;
    // the two deciders disagreeing would refute their equivalence
    Ok(if a.agree() == Some(false) { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn threshold_cmd(order: &OrderParams, format: Format) -> CliResult {
    let t = threshold(order.n, order.k).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Json => json(&t),
        Format::Text => table(&[
            ("n", t.n.to_string()),
            ("k", t.k.to_string()),
            ("regime", t.regime.to_string()),
            ("threshold", sig10(t.value)),
            ("polynomial", t.defining_polynomial.to_string()),
        ]),
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn extremal(order: &OrderParams, format: Format) -> CliResult {
    let fam = extremal_for(order.n, order.k).map_err(|e| e.to_string())?;
    let graph6 = encode_graph6(&fam.graph).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Text => format!("{graph6}\n"),
        Format::Json => {
            #[derive(Serialize)]
            struct Extremal {
                name: String,
                graph6: String,
                n: usize,
                blocks: Vec<Vec<usize>>,
                edges: Vec<(usize, usize)>,
            }
            json(Extremal {
                name: fam.name.clone(),
                graph6,
                n: fam.graph.order(),
                blocks: fam.partition.blocks().iter().map(|b| b.to_vec()).collect(),
                edges: fam.graph.edges().collect(),
            })
        }
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn sweep(
    order: &OrderParams,
    graph6_file: Option<&Path>,
    margin: f64,
    format: SweepFormat,
    output: Option<&Path>,
) -> CliResult {
    let outcome = match graph6_file {
        None => run_sweep(&SweepConfig { margin, ..SweepConfig::builtin(order.n, order.k) }),
        Some(path) => {
            let text = read_source(path)?;
            run_sweep_stream(&SweepConfig { margin, ..SweepConfig::stream(order.n, order.k) }, &text)
        }
    }
    .map_err(|e| e.to_string())?;
    let r = &outcome.report;
    let text = match format {
        SweepFormat::Json => json(r),
        SweepFormat::Csv => records_to_csv(&outcome.records),
        SweepFormat::Text => {
            let mut s = table(&[
                ("n", r.config.n.to_string()),
                ("k", r.config.k.to_string()),
                ("threshold", format!("{} ({})", sig10(r.threshold.value), r.threshold.regime)),
                ("scanned", r.totals.scanned.to_string()),
                ("hypotheses hold", r.totals.hypothesis_passed.to_string()),
                ("above threshold", r.totals.above_threshold.to_string()),
                ("at threshold", r.totals.at_threshold.to_string()),
                ("critical above", r.totals.critical.to_string()),
                ("counterexamples", r.counterexamples.len().to_string()),
                ("closest above", witness_text(&r.closest_above)),
                ("closest below", witness_text(&r.closest_below)),
                ("sharp witness", witness_text(&r.sharp_witness)),
                ("stream issues", r.stream_issues.len().to_string()),
                ("theorem holds", if r.theorem_holds { "yes" } else { "no" }.to_string()),
            ]);
            for w in &r.counterexamples {
                s.push_str(&format!("counterexample {}  rho {}\n", w.graph6, sig10(w.rho)));
            }
            for issue in &r.stream_issues {
                s.push_str(&format!("line {}: {}\n", issue.line, issue.message));
            }
            s
        }
    };
    emit(&text, output)?;
    Ok(ExitCode::from(sweep_exit_code(r.counterexamples.len())))
}

fn facts_rows(prefix: &str, f: &ExtremalFacts) -> Vec<(String, String)> {
    vec![
        (format!("{prefix}graph"), format!("{}  {}", f.name, f.graph6)),
        (format!("{prefix}rho"), sig10(f.rho)),
        (format!("{prefix}reference"), sig10(f.reference)),
        (format!("{prefix}kappa"), f.connectivity.to_string()),
        (
            format!("{prefix}certificate"),
            f.certificate.as_ref().map(certificate_text).unwrap_or_else(|| "none".into()),
        ),
    ]
}

fn sharpness(order: &OrderParams, format: Format) -> CliResult {
    let rec = kfcrit_core::verify::verify_sharpness(order.n, order.k).map_err(|e| e.to_string())?;
    let text = match format {
        Format::Json => json(&rec),
        Format::Text => {
            let mut rows = vec![
                ("n".to_string(), rec.n.to_string()),
                ("k".to_string(), rec.k.to_string()),
                ("regime".to_string(), rec.regime.to_string()),
                ("threshold".to_string(), sig10(rec.threshold)),
            ];
            rows.extend(facts_rows("", &rec.extremal));
            if let Some(c) = &rec.companion {
                rows.extend(facts_rows("companion ", c));
            }
            rows.push(("confirmed".to_string(), if rec.confirmed() { "yes" } else { "no" }.to_string()));
            let borrowed: Vec<(&str, String)> = rows.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
            let mut s = table(&borrowed);
            for f in &rec.findings {
                s.push_str(&format!("finding: {f}\n"));
            }
            s
        }
    };
    emit(&text, None)?;
    Ok(if rec.confirmed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Radius { input, format } => radius(input, *format),
        Command::Critical { input, k, format } => critical(input, *k, *format),
        Command::Threshold { order, format } => threshold_cmd(order, *format),
        Command::Extremal { order, format } => extremal(order, *format),
        Command::Sweep { order, graph6_file, margin, format, output } => {
            sweep(order, graph6_file.as_deref(), *margin, *format, output.as_deref())
        }
        Command::Sharpness { order, format } => sharpness(order, *format),
    }
}

/// First line of a clap diagnostic, with any indented continuation (such as
/// the list of missing arguments) folded onto it.
fn one_line(rendered: &str) -> String {
    let mut lines = rendered.lines();
    let mut head = lines.next().unwrap_or("error: invalid usage").to_string();
    if head.ends_with(':') {
        let items: Vec<&str> = lines.take_while(|l| l.starts_with(' ')).map(str::trim).collect();
        head = format!("{head} {}", items.join(", "));
    }
    head
}

fn sweep_exit_code(counterexamples: usize) -> u8 {
    u8::from(counterexamples > 0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            eprintln!("error: missing subcommand (radius, critical, threshold, extremal, sweep, sharpness); see --help");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("{}", one_line(&e.render().to_string()));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
