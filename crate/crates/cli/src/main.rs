use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use srgclique::bounds::{edge_regular_report, full_report, BoundsReport, ConjectureReading, Threshold};
use srgclique::catalog::{self, emit, Filter, OutputFormat, ScanConfig};
use srgclique::graph::{self, delta3_report, is_edge_regular, is_strongly_regular, max_clique};
use srgclique::identities::{cases, random_point_crosscheck, verify_identity};
use srgclique::srg::{parse_ints, FeasibilityLevel};
use srgclique::{EdgeRegularParams, Error, SrgParams};

#[derive(Parser)]
#[command(name = "srgclique", version, about = "Clique-number bounds for strongly regular graph parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Gap,
    Thm,
    Thm51,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadingArg {
    Literal,
    Floor,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds for one tuple: "v k lambda" (edge-regular) or "v k lambda mu".
    Bounds {
        #[arg(required = true, num_args = 1..)]
        params: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Bounds for every feasible tuple up to --max-v.
    Scan {
        #[arg(long)]
        max_v: i64,
        /// counting, integrality, krein or absolute-bound
        #[arg(long, default_value = "absolute-bound")]
        level: String,
        #[arg(long, value_enum)]
        filter: Option<FilterArg>,
        #[arg(long = "type", value_enum)]
        type_tag: Option<TypeArg>,
        /// Keep one member (2k < v) of each complementary pair.
        #[arg(long)]
        pairs: bool,
        /// Keep tuples known to have no graph.
        #[arg(long)]
        include_nonexistent: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Print how often the improvement theorems apply, on stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Check every polynomial identity symbolically and at random points.
    VerifyIdentities {
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Build the Paley graph on a prime p = 1 mod 4.
    Paley {
        p: u64,
        #[arg(long)]
        clique: bool,
        /// Print the graph in graph6 form.
        #[arg(long)]
        graph6: bool,
    },
    /// Maximum clique of a graph given as an edge list or graph6 file.
    Maxclique { file: PathBuf },
    /// Bounds for the distance-3 graph of the Fano line graph.
    Delta3,
    /// Tuples where cab < -k/s but lambda + 1 > -k/s.
    Conjecture {
        #[arg(long)]
        max_v: i64,
        #[arg(long, default_value = "absolute-bound")]
        level: String,
        #[arg(long, value_enum, default_value = "literal")]
        reading: ReadingArg,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && io::stdout().is_terminal()
}

fn threshold_text(t: &Threshold) -> String {
    format!("{t} ~ {:.6}", t.to_f64())
}

fn opt(x: Option<i64>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

fn print_report(r: &BoundsReport) {
    let p = &r.params;
    match r.mu {
        Some(mu) => println!("parameters     ({}, {}, {}, {mu})", p.v, p.k, p.lambda),
        None => println!("parameters     {p} (edge-regular)"),
    }
    if let Some(t) = r.type_tag {
        println!("type           {t}");
    }
    println!(
        "cab            {}  (C({}, {}) = {})",
        r.cab, r.cab_witness.b, r.cab_witness.c_plus_1, r.cab_witness.value
    );
    println!("trivial        {}", r.trivial);
    if r.mu.is_some() {
        println!("delsarte       {}", opt(r.delsarte));
        println!("hoffman        {}", opt(r.hoffman_complement));
        println!("thm21          {}", r.thm21_applies);
        println!("thm22          {}", r.thm22_applies);
        if let Some(t) = &r.thm_threshold {
            println!("threshold      {}", threshold_text(t));
        }
        println!("improved       {}", opt(r.improved_bound));
        if let Some(b) = r.thm51 {
            println!("thm51          {b}");
        }
    }
}

fn bounds(params: &[String], json: bool) -> Result<(), Error> {
    let nums = parse_ints(&params.join(" "))?;
    let report = match nums[..] {
        [v, k, l] => edge_regular_report(&EdgeRegularParams::new(v, k, l)?),
        [v, k, l, m] => full_report(&SrgParams::new(v, k, l, m)?)?,
        _ => return Err(Error::Parse(format!("expected 3 or 4 integers, got {}", nums.len()))),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));
    } else {
        print_report(&report);
    }
    Ok(())
}

fn write_output(out: Option<&PathBuf>, f: impl FnOnce(&mut dyn Write, bool) -> io::Result<()>) -> Result<(), Error> {
    let io_err = |e: io::Error| Error::Resource(format!("output: {e}"));
    match out {
        Some(path) => {
            let mut buf = Vec::new();
            f(&mut buf, false).map_err(io_err)?;
            fs::write(path, buf).map_err(io_err)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock, use_color()).map_err(io_err)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn scan(
    max_v: i64,
    level: &str,
    filter: Option<FilterArg>,
    type_tag: Option<TypeArg>,
    pairs: bool,
    include_nonexistent: bool,
    format: FormatArg,
    out: Option<PathBuf>,
    threads: usize,
    stats: bool,
) -> Result<(), Error> {
    let mut cfg = ScanConfig::new(max_v);
    cfg.level = level.parse::<FeasibilityLevel>()?;
    cfg.filter = match filter {
        None => Filter::All,
        Some(FilterArg::Gap) => Filter::Gap,
        Some(FilterArg::Thm) => Filter::Thm,
        Some(FilterArg::Thm51) => Filter::Thm51,
    };
    cfg.type_i = type_tag.map(|t| matches!(t, TypeArg::I));
    cfg.pairs = pairs;
    cfg.include_nonexistent = include_nonexistent;
    cfg.threads = threads;
    let outcome = catalog::scan_compare(&cfg)?;
    write_output(out.as_ref(), |w, color| emit(&outcome.records, format.into(), color, w))?;
    if stats {
        let s = &outcome.stats;
        eprintln!("tuples scanned               {}", s.tuples);
        eprintln!(
            "thm21 over primitive type I  {}/{} = {:.4}",
            s.thm21,
            s.primitive_type_i,
            s.thm21_fraction()
        );
        eprintln!(
            "thm22 over primitive type II {}/{} = {:.4}",
            s.thm22,
            s.primitive_type_ii,
            s.thm22_fraction()
        );
        eprintln!(
            "pairs with a theorem         {}/{} = {:.4}",
            s.pairs_with_thm,
            s.pairs,
            s.pair_fraction()
        );
    }
    Ok(())
}

fn verify_identities(json: bool, trials: usize, seed: u64) -> Result<bool, Error> {
    let mut rows = Vec::new();
    for case in cases() {
        let v = verify_identity(&case)?;
        let random = random_point_crosscheck(&case, trials, seed)?;
        rows.push((v, random));
    }
    let ok = rows.iter().all(|(v, r)| v.passed && *r);
    if json {
        let items: Vec<_> = rows
            .iter()
            .map(|(v, r)| {
                serde_json::json!({
                    "id": v.id,
                    "name": v.name,
                    "parameterization": v.parameterization,
                    "degree": v.degree,
                    "passed": v.passed,
                    "random_points_agree": r,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&items).expect("serializable"));
    } else {
        for (v, r) in &rows {
            let status = if v.passed && *r { "PASS" } else { "FAIL" };
            println!(
                "{:>2}  {:<36} {:<10} degree {:>2}  {status}",
                v.id, v.name, v.parameterization, v.degree
            );
        }
    }
    Ok(ok)
}

fn paley(p: u64, clique: bool, graph6: bool) -> Result<(), Error> {
    let g = graph::paley(p)?;
    match is_strongly_regular(&g) {
        Some(params) => println!("paley({p}) is strongly regular {params}"),
        None => return Err(Error::Invariant(format!("paley({p}) is not strongly regular"))),
    }
    if clique {
        let c = max_clique(&g)?;
        println!("clique number {}  witness {:?}", c.size, c.witness);
    }
    if graph6 {
        println!("{}", graph::to_graph6(&g)?);
    }
    Ok(())
}

fn maxclique(file: &PathBuf) -> Result<(), Error> {
    let text = fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    let g = graph::parse_graph(&text)?;
    let c = max_clique(&g)?;
    println!("vertices {}  edges {}", g.n(), g.edge_count());
    println!("clique number {}  witness {:?}", c.size, c.witness);
    if let Some(p) = is_edge_regular(&g) {
        let cab = srgclique::bounds::cab(&p).0;
        println!("edge-regular {p}  cab {cab}");
        if (c.size as i64) > cab {
            return Err(Error::Invariant(format!("clique number {} exceeds cab {cab}", c.size)));
        }
    }
    Ok(())
}

fn delta3() -> Result<(), Error> {
    let r = delta3_report()?;
    println!("parameters        {} (edge-regular)", r.params);
    println!("strongly regular  {}", r.strongly_regular);
    println!("cab               {}", r.cab);
    println!("delsarte          {}  (least eigenvalue -sqrt(8))", r.delsarte);
    println!("hoffman           {}  (complement least eigenvalue -1 - sqrt(8))", r.hoffman);
    println!("clique number     {}  witness {:?}", r.clique.size, r.clique.witness);
    Ok(())
}

fn conjecture(max_v: i64, level: &str, reading: ReadingArg, format: FormatArg) -> Result<(), Error> {
    let mut cfg = ScanConfig::new(max_v);
    cfg.level = level.parse()?;
    let reading = match reading {
        ReadingArg::Literal => ConjectureReading::Literal,
        ReadingArg::Floor => ConjectureReading::Floor,
    };
    let found = catalog::conjecture_scan(&cfg, reading)?;
    write_output(None, |w, color| emit(&found, format.into(), color, w))?;
    eprintln!("{} counterexample(s) up to v = {max_v}", found.len());
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Bounds { params, json } => bounds(&params, json).map(|_| true),
        Command::Scan {
            max_v,
            level,
            filter,
            type_tag,
            pairs,
            include_nonexistent,
            format,
            out,
            threads,
            stats,
        } => scan(max_v, &level, filter, type_tag, pairs, include_nonexistent, format, out, threads, stats)
            .map(|_| true),
        Command::VerifyIdentities { json, trials, seed } => verify_identities(json, trials, seed),
        Command::Paley { p, clique, graph6 } => paley(p, clique, graph6).map(|_| true),
        Command::Maxclique { file } => maxclique(&file).map(|_| true),
        Command::Delta3 => delta3().map(|_| true),
        Command::Conjecture {
            max_v,
            level,
            reading,
            format,
        } => conjecture(max_v, &level, reading, format).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::Invariant(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
