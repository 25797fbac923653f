use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use birack_core::census::{
    census, census_file_name, census_index, find_distinguishing_pairs, representative_records, DEFAULT_ORDER_CAP,
};
use birack_core::invariants::{counting_invariant, enhancement_report};
use birack_core::labeling::{brute_force_labelings, DEFAULT_BRUTE_FORCE_CAP};
use birack_core::library::corpus;
use birack_core::{Birack, BirackTable, Diagram, Permutation};
use clap::{Parser, Subcommand, ValueEnum};

/// Involutory virtual biracks: axiom checks, counting invariants and the
/// symmetric enhancement.
#[derive(Parser)]
#[command(name = "birack", version)]
struct Cli {
    /// Overrides search limits: the largest census order, or the
    /// n^(#semiarcs) bound for brute-force labeling.
    #[arg(long, global = true)]
    cap: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and print the kink map and characteristic.
    Check { table: PathBuf },
    /// List the good involutions of a table.
    Involutions { table: PathBuf },
    /// Print the counting invariant of a diagram.
    Invariant {
        table: PathBuf,
        diagram: PathBuf,
        /// Count labelings by exhaustive assignment instead of propagation.
        #[arg(long)]
        brute_force: bool,
    },
    /// Print the per-framing report and the enhanced invariant.
    Enhance {
        table: PathBuf,
        diagram: PathBuf,
        /// Good involution in cycle notation, "()" for the identity.
        #[arg(long)]
        rho: String,
        /// Also list every labeling, grouped by class.
        #[arg(short, long)]
        verbose: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write every table of order n to a directory.
    Census {
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for diagrams with equal counting invariant and different
    /// enhancement, over one table per isomorphism class of order <= n.
    Distinguish {
        n: usize,
        /// Directory of .vlink files; the builtin corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Number of witnesses to print; 0 prints all.
        #[arg(long, default_value_t = 20)]
        limit: usize,
        /// Print the operation table of each witness.
        #[arg(short, long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

/// Failure with a chosen exit status.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn input(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_table(path: &Path) -> Result<BirackTable> {
    let text = input(path)?;
    BirackTable::parse_matrix(&text).with_context(|| format!("{}", path.display()))
}

fn load_birack(path: &Path) -> Result<Birack> {
    let table = load_table(path)?;
    Birack::verify(table).map_err(|report| {
        let mut msg = format!("{} fails the axioms", path.display());
        for v in &report.violations {
            let _ = write!(msg, "\n  {v}");
        }
        Exit(1, msg).into()
    })
}

fn load_diagram(path: &Path) -> Result<Diagram> {
    let d = Diagram::parse(&input(path)?).with_context(|| format!("{}", path.display()))?;
    if d.name().is_empty() {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        return Ok(d.with_name(stem));
    }
    Ok(d)
}

fn load_corpus(dir: &Path) -> Result<Vec<Diagram>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "vlink"))
        .collect();
    paths.sort();
    paths.iter().map(|p| load_diagram(p)).collect()
}

fn order_cap(cap: Option<u128>) -> usize {
    cap.map_or(DEFAULT_ORDER_CAP, |c| c.min(usize::MAX as u128) as usize)
}

fn check(path: &Path) -> Result<String> {
    let table = load_table(path)?;
    let report = table.check_axioms();
    let mut out = String::new();
    if report.passed() {
        let b = Birack::verify(table).expect("axioms passed");
        writeln!(out, "PASS  pi={}  N={}", b.kink(), b.characteristic())?;
        return Ok(out);
    }
    match table.kink_map() {
        Ok(pi) => writeln!(out, "FAIL  pi={pi}  N={}", pi.order())?,
        Err(_) => writeln!(out, "FAIL  pi=none")?,
    }
    for v in &report.violations {
        writeln!(out, "  {v}")?;
    }
    print!("{out}");
    Err(Exit(1, String::new()).into())
}

fn involutions(path: &Path) -> Result<String> {
    let b = load_birack(path)?;
    let mut out = String::new();
    for r in b.enumerate_good_involutions() {
        writeln!(out, "{r}")?;
    }
    Ok(out)
}

fn invariant(table: &Path, diagram: &Path, brute_force: bool, cap: Option<u128>) -> Result<String> {
    let b = load_birack(table)?;
    let d = load_diagram(diagram)?;
    let phi_z = if brute_force {
        let cap = cap.unwrap_or(DEFAULT_BRUTE_FORCE_CAP);
        let mut total = 0;
        for fd in birack_core::invariants::framing_tile(&d, &b).values() {
            total += brute_force_labelings(fd, &b, cap)?.len() as u64;
        }
        total
    } else {
        counting_invariant(&d, &b)
    };
    Ok(format!("Phi_Z = {phi_z}\n"))
}

fn enhance(table: &Path, diagram: &Path, rho: &str, verbose: bool, format: Format) -> Result<String> {
    let b = load_birack(table)?;
    let d = load_diagram(diagram)?;
    let r = Permutation::parse_cycles(rho, b.order()).with_context(|| format!("--rho {rho:?}"))?;
    if !b.is_good_involution(&r)? {
        bail!(Exit(1, format!("{r} is not a good involution of {}", table.display())));
    }
    let report = enhancement_report(&d, &b, &r)?;
    if let Format::Kv = format {
        return Ok(report.to_key_value());
    }
    if !verbose {
        return Ok(report.to_text());
    }
    let mut out = String::new();
    for e in &report.entries {
        writeln!(out, "w={} : {} ({} labelings)", e.framing, e.contribution(), e.count())?;
        for (k, class) in e.partition.classes.iter().enumerate() {
            writeln!(out, "  class {}", k + 1)?;
            for l in class {
                let labels: Vec<String> = e
                    .diagram
                    .semiarcs()
                    .iter()
                    .zip(l.values())
                    .map(|(s, v)| format!("{s}={}", v + 1))
                    .collect();
                writeln!(out, "    {}", labels.join(" "))?;
            }
        }
    }
    writeln!(out, "Phi_Z = {}", report.phi_z())?;
    writeln!(out, "Phi_rho = {}", report.phi_rho())?;
    Ok(out)
}

fn write_census(n: usize, dir: &Path, cap: Option<u128>) -> Result<String> {
    let records = census(n, order_cap(cap))?;
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    for (i, r) in records.iter().enumerate() {
        let path = dir.join(census_file_name(i));
        fs::write(&path, r.table.to_matrix_string()).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let index = dir.join("index");
    fs::write(&index, census_index(&records)).with_context(|| format!("cannot write {}", index.display()))?;
    Ok(format!(
        "{} tables of order {n} written to {}\n",
        records.len(),
        dir.display()
    ))
}

fn distinguish(n: usize, dir: Option<&Path>, limit: usize, verbose: bool, cap: Option<u128>) -> Result<String> {
    let diagrams = match dir {
        Some(dir) => load_corpus(dir)?,
        None => corpus(),
    };
    let records = representative_records(n, order_cap(cap))?;
    let pairs = find_distinguishing_pairs(&records, &diagrams);
    let shown = if limit == 0 {
        pairs.len()
    } else {
        limit.min(pairs.len())
    };
    let mut out = String::new();
    for p in &pairs[..shown] {
        let t = &records[p.record].table;
        writeln!(
            out,
            "table {} (order {}, N={})  rho={}  {} vs {}  Phi_Z={}  Phi_rho: {} | {}",
            p.record,
            t.order(),
            t.characteristic(),
            p.rho,
            diagrams[p.first].name(),
            diagrams[p.second].name(),
            p.phi_z,
            p.first_phi_rho,
            p.second_phi_rho
        )?;
        if verbose {
            for line in t.to_matrix_string().lines() {
                writeln!(out, "  {line}")?;
            }
        }
    }
    writeln!(
        out,
        "{} distinguishing pairs ({} shown) over {} tables and {} diagrams",
        pairs.len(),
        shown,
        records.len(),
        diagrams.len()
    )?;
    Ok(out)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Check { table } => check(&table),
        Command::Involutions { table } => involutions(&table),
        Command::Invariant {
            table,
            diagram,
            brute_force,
        } => invariant(&table, &diagram, brute_force, cli.cap),
        Command::Enhance {
            table,
            diagram,
            rho,
            verbose,
            format,
        } => enhance(&table, &diagram, &rho, verbose, format),
        Command::Census { n, out } => write_census(n, &out, cli.cap),
        Command::Distinguish {
            n,
            corpus,
            limit,
            verbose,
        } => distinguish(n, corpus.as_deref(), limit, verbose, cli.cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let status = e.downcast_ref::<Exit>().map_or(2, |x| x.0);
            let msg = format!("{e:#}");
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(status)
        }
    }
}
