use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use log::info;
use sha2::{Digest, Sha256};

use abcgg_core::io::{parse_edge_list, write_edge_list};
use abcgg_core::{
    abc_gg, enumerate_bicyclic, format_sig, lemma35_extremal, run_suite, table_rows, theorem_bound, write_reports_csv,
    write_table_csv, FamilySpec, Suite, SuiteOptions, TableName,
};

/// Graovac-Ghorbani index calculator and bicyclic extremal checks.
#[derive(Parser)]
#[command(name = "abcgg", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Index of the graph in an edge-list file, with the per-edge table.
    Compute { file: PathBuf },
    /// Build a family graph from its text spec, e.g. "B 4 1 1 1" or "S 3 3 m=1 n=1".
    Family {
        spec: String,
        /// Write the edge list here instead of stdout.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Maximum index over bicyclic graphs of order n and its maximiser.
    Bound { n: usize },
    /// All bicyclic graphs of order n up to isomorphism.
    Enumerate {
        n: usize,
        /// Write one edge-list file per class plus manifest.csv into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        /// lemma21, lemma22, lemma31..lemma38, theorem39 or closedforms.
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also write the reports as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Closed form against direct computation as CSV (lemma35 or theorem_vs_s33).
    Table {
        name: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    VerificationFailed,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Compute { file } => compute(&file),
        Cmd::Family { spec, output } => family(&spec, output.as_deref()),
        Cmd::Bound { n } => bound(n),
        Cmd::Enumerate { n, emit } => enumerate(n, emit.as_deref()),
        Cmd::Verify { suite, max_n, trials, seed, csv } => {
            verify(&suite, SuiteOptions { max_n, trials, seed }, csv.as_deref())
        }
        Cmd::Table { name, from, to, output } => table(&name, from, to, output.as_deref()),
    }
}

fn compute(file: &Path) -> Result<Outcome> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let g = parse_edge_list(&text).with_context(|| format!("parsing {}", file.display()))?;
    let report = abc_gg(&g)?;
    let mut out = io::stdout().lock();
    writeln!(out, "n = {}, m = {}", g.order(), g.size())?;
    writeln!(out, "ABC_GG = {:.4}", report.total)?;
    writeln!(out, "{:>5} {:>5} {:>5} {:>5} {:>8}", "u", "v", "n_u", "n_v", "term")?;
    for e in &report.per_edge {
        writeln!(out, "{:>5} {:>5} {:>5} {:>5} {:>8.4}", e.u, e.v, e.n_u, e.n_v, e.term)?;
    }
    Ok(Outcome::Ok)
}

fn family(spec: &str, output: Option<&Path>) -> Result<Outcome> {
    let spec: FamilySpec = spec.parse()?;
    let g = spec.build()?;
    let total = abc_gg(&g)?.total;
    let header = format!("# {spec}\n# n={} m={} index={:.4}\n", g.order(), g.size(), total);
    match output {
        Some(path) => {
            fs::write(path, format!("{header}{}", write_edge_list(&g)))
                .with_context(|| format!("writing {}", path.display()))?;
            print!("{header}");
        }
        None => print!("{header}{}", write_edge_list(&g)),
    }
    Ok(Outcome::Ok)
}

fn bound(n: usize) -> Result<Outcome> {
    let b = theorem_bound(n)?;
    let fam = b.family.expect("theorem bound names its maximiser");
    println!("n={n} bound={:.4} attained by {fam}", b.value);
    if n >= 6 {
        let s = lemma35_extremal(n)?;
        println!("best shared-vertex graph {} = {:.4}", s.family.expect("named family"), s.value);
    }
    Ok(Outcome::Ok)
}

fn enumerate(n: usize, emit: Option<&Path>) -> Result<Outcome> {
    if n < 4 {
        bail!("bicyclic graphs need n >= 4, got {n}");
    }
    let t = Instant::now();
    let records = enumerate_bicyclic(n);
    info!("enumerated {} classes in {:?}", records.len(), t.elapsed());
    let best = records.iter().max_by(|a, b| a.index_value.total_cmp(&b.index_value)).expect("n >= 4 has classes");
    println!("n={n} classes={}", records.len());
    println!("max index {:.4} at edges {:?}", best.index_value, best.graph.edges().collect::<Vec<_>>());
    if let Some(dir) = emit {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let mut manifest = csv::Writer::from_path(dir.join("manifest.csv"))?;
        manifest.write_record(["hash", "n", "pendant_count", "index"])?;
        for rec in &records {
            let hash = hex(&Sha256::digest(rec.canonical.as_bytes()));
            fs::write(dir.join(format!("{hash}.txt")), write_edge_list(&rec.graph))?;
            manifest.write_record([hash, n.to_string(), rec.pendant_count.to_string(), format_sig(rec.index_value)])?;
        }
        manifest.flush()?;
        println!("wrote {} graphs to {}", records.len(), dir.display());
    }
    Ok(Outcome::Ok)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn verify(name: &str, opts: SuiteOptions, csv_path: Option<&Path>) -> Result<Outcome> {
    let suite: Suite = name.parse()?;
    let max_n = opts.max_n.unwrap_or_else(|| suite.default_max_n());
    let t = Instant::now();
    let reports = run_suite(suite, &opts)?;
    info!("suite {suite} took {:?}", t.elapsed());

    let mut out = io::stdout().lock();
    write!(out, "# suite={suite} max_n={max_n}")?;
    if suite.is_randomized() {
        write!(out, " trials={} seed={}", opts.trials, opts.seed)?;
    }
    writeln!(out)?;
    for r in &reports {
        let wit: Vec<String> = r.witnesses.iter().map(|(k, v)| format!("{k}={}", fmt4(*v))).collect();
        writeln!(
            out,
            "{} {} margin={} [{}]",
            r.status.to_string().to_uppercase(),
            r.claim_id,
            fmt4(r.margin),
            wit.join(", ")
        )?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "# {} claims, {} failed", reports.len(), failed)?;

    if let Some(path) = csv_path {
        let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_reports_csv(&reports, file)?;
    }
    Ok(if failed == 0 { Outcome::Ok } else { Outcome::VerificationFailed })
}

/// Four decimals, falling back to scientific notation for tiny magnitudes.
fn fmt4(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{x:.0}")
    } else if x != 0.0 && x.is_finite() && x.abs() < 1e-3 {
        format!("{x:.3e}")
    } else {
        format!("{x:.4}")
    }
}

fn table(name: &str, from: usize, to: usize, output: Option<&Path>) -> Result<Outcome> {
    let name: TableName = name.parse()?;
    let rows = table_rows(name, from, to)?;
    match output {
        Some(path) => {
            let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_table_csv(&rows, file)?;
        }
        None => write_table_csv(&rows, io::stdout().lock())?,
    }
    Ok(Outcome::Ok)
}
