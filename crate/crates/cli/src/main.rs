use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hecke_workbench::harness::{cache, export, Suite, SuiteConfig, VerificationReport};
use hecke_workbench::{
    AffineWeylGroup, Cocharacter, Coefficients, GenericQ, IwahoriHecke, PrimeField, PRESETS,
};

/// Extended affine Weyl groups and mod-p Iwahori-Hecke algebras.
///
/// Hecke products use T_s^2 = q + (q-1) T_s, so T_s^2 = -T_s at q = 0.
#[derive(Parser)]
#[command(name = "workbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root data presets.
    Datum {
        #[command(subcommand)]
        command: DatumCommand,
    },
    /// The admissible set Adm(mu).
    Adm {
        #[arg(long)]
        group: String,
        /// Dominant cocharacter, e.g. `1,0`.
        #[arg(long, allow_hyphen_values = true)]
        mu: Cocharacter,
        /// Print the strata of A(mu) with their dimensions.
        #[arg(long)]
        report: bool,
        #[arg(long)]
        json: bool,
    },
    /// Multiply two Hecke algebra elements, e.g. `--lhs "T[s0] + T[e]"`.
    Mul(MulArgs),
    /// Run verification suites. Exit code 0 iff every case passes.
    Verify(VerifyArgs),
    /// Write a table as JSON or CSV.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum DatumCommand {
    /// List preset labels.
    List,
    /// Show a preset's root datum.
    Describe {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct MulArgs {
    #[arg(long)]
    group: String,
    /// Work over F_p; without it coefficients are polynomials in q.
    #[arg(long)]
    p: Option<u64>,
    /// Image of q in F_p.
    #[arg(long, default_value_t = 0)]
    q: u64,
    /// Permit p = 2.
    #[arg(long)]
    allow_p2: bool,
    #[arg(long, allow_hyphen_values = true)]
    lhs: String,
    #[arg(long, allow_hyphen_values = true)]
    rhs: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Central,
    Bernstein,
    Monoidal,
    Coxeter,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    suite: SuiteArg,
    /// A preset label, or `all`.
    #[arg(long)]
    group: String,
    /// Height bound (length bound for `coxeter`); defaults per suite.
    #[arg(long)]
    height: Option<i64>,
    #[arg(long, value_delimiter = ',', default_value = "3,5")]
    primes: Vec<u64>,
    #[arg(long)]
    allow_p2: bool,
    /// Neither read nor write the on-disk cache.
    #[arg(long)]
    no_cache: bool,
    /// Print full reports as JSON.
    #[arg(long)]
    json: bool,
    /// Also write the JSON reports to this file.
    #[arg(long)]
    report_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    AdmSizes,
    Strata,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct ExportArgs {
    table: TableArg,
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Cocharacter for `strata`.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<Cocharacter>,
    /// Height bound for `adm-sizes` and `matrix`.
    #[arg(long)]
    height: Option<i64>,
    /// Prime for `matrix`.
    #[arg(long, default_value_t = 3)]
    p: u64,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn group(label: &str) -> Result<AffineWeylGroup> {
    Ok(AffineWeylGroup::preset(label)?)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Datum { command: DatumCommand::List } => {
            for p in PRESETS {
                println!("{p}");
            }
        }
        Command::Datum { command: DatumCommand::Describe { group: label, json } } => {
            describe(&group(&label)?, json)?;
        }
        Command::Adm { group: label, mu, report, json } => adm(&group(&label)?, &mu, report, json)?,
        Command::Mul(args) => mul(&args)?,
        Command::Verify(args) => return verify(&args),
        Command::Export(args) => export_table(&args)?,
    }
    Ok(true)
}

fn describe(g: &AffineWeylGroup, json: bool) -> Result<()> {
    let d = g.datum();
    if json {
        println!("{}", serde_json::to_string_pretty(d)?);
        return Ok(());
    }
    let fmt = |v: &[i64]| Cocharacter::new(v.iter().copied()).to_string();
    println!("group           {}", d.name);
    println!("rank            {}", d.rank);
    println!("simple roots    {}", d.simple_roots.iter().map(|a| fmt(a)).collect::<Vec<_>>().join(" "));
    println!("simple coroots  {}", d.simple_coroots.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
    println!("positive roots  {}", d.positive_roots.len());
    println!("highest root    {}", fmt(&d.highest_root));
    println!("2rho            {}", fmt(&d.two_rho));
    println!("|W|             {}", g.weyl_group().len());
    match (&d.omega_generator, g.omega_generator()) {
        (Some(c), Some(pi)) => println!(
            "Omega           Z, generated by pi = {} (length-zero part of t_{c})",
            serde_json::to_string(pi)?
        ),
        _ => println!("Omega           trivial"),
    }
    Ok(())
}

fn adm(g: &AffineWeylGroup, mu: &Cocharacter, report: bool, json: bool) -> Result<()> {
    if report {
        let rows = g.a_mu_report(mu)?;
        if json {
            println!("{}", serde_json::to_string_pretty(&rows)?);
        } else {
            println!("{:<28} dim", "stratum");
            for r in rows {
                println!("{:<28} {}", r.element, r.length);
            }
        }
        return Ok(());
    }
    let set = g.admissible_set(mu)?;
    if json {
        let v: Vec<String> = set.iter().map(|x| g.format_element(x)).collect();
        println!("{}", serde_json::json!({ "mu": mu, "size": set.len(), "elements": v }));
    } else {
        println!("|Adm({mu})| = {}", set.len());
        let mut rows: Vec<(usize, String)> = set.iter().map(|x| (g.length(x), g.format_element(x))).collect();
        rows.sort();
        for (_, text) in rows {
            println!("{text}");
        }
    }
    Ok(())
}

fn mul(args: &MulArgs) -> Result<()> {
    let g = group(&args.group)?;
    match args.p {
        None => print_product(&IwahoriHecke::new(&g, GenericQ), args),
        Some(p) => {
            let f = if args.allow_p2 {
                PrimeField::allowing_p2(p, args.q)?
            } else {
                PrimeField::with_q_image(p, args.q)?
            };
            print_product(&IwahoriHecke::new(&g, f), args)
        }
    }
}

fn print_product<R: Coefficients>(h: &IwahoriHecke<'_, R>, args: &MulArgs) -> Result<()> {
    let a = h.parse(&args.lhs).context("--lhs")?;
    let b = h.parse(&args.rhs).context("--rhs")?;
    let c = h.mul(&a, &b)?;
    if args.json {
        println!("{}", h.to_json(&c));
    } else {
        println!("{}", h.format(&c));
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<bool> {
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::Central => vec![Suite::Central],
        SuiteArg::Bernstein => vec![Suite::Bernstein],
        SuiteArg::Monoidal => vec![Suite::Monoidal],
        SuiteArg::Coxeter => vec![Suite::Coxeter],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let labels: Vec<&str> = if args.group == "all" { PRESETS.to_vec() } else { vec![args.group.as_str()] };
    if args.primes.is_empty() {
        bail!("--primes is empty");
    }
    let config = SuiteConfig { bound: args.height, primes: args.primes.clone(), allow_p2: args.allow_p2 };
    let dir = cache::cache_dir();
    let mut reports: Vec<VerificationReport> = Vec::new();
    for label in labels {
        let mut g = group(label)?;
        if args.no_cache {
            g.disable_memo();
        } else {
            cache::load(&g, &dir).with_context(|| format!("reading cache in {}", dir.display()))?;
        }
        for s in &suites {
            let r = s.run(&g, &config)?;
            if !args.json {
                println!("{}", r.summary());
                for f in r.failures() {
                    let payload = f.counterexample.as_ref().map(|v| v.to_string()).unwrap_or_default();
                    println!("  FAIL {} {payload}", f.case);
                }
            }
            reports.push(r);
        }
        if !args.no_cache {
            if let Err(e) = cache::save(&g, &dir) {
                eprintln!("warning: could not write cache in {}: {e}", dir.display());
            }
        }
    }
    let all_passed = reports.iter().all(|r| r.passed);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    }
    if let Some(path) = &args.report_file {
        std::fs::write(path, serde_json::to_string_pretty(&reports)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if !args.json {
        println!("{}", if all_passed { "all verifications passed" } else { "verification FAILED" });
    }
    Ok(all_passed)
}

fn export_table(args: &ExportArgs) -> Result<()> {
    let g = group(&args.group)?;
    let height = args.height.unwrap_or_else(|| hecke_workbench::harness::default_height(g.datum()));
    let table = match args.table {
        TableArg::AdmSizes => export::adm_sizes(&g, height)?,
        TableArg::Strata => {
            let Some(mu) = &args.mu else { bail!("`strata` needs --mu") };
            export::strata(&g, mu)?
        }
        TableArg::Matrix => export::satake_matrix(&g, PrimeField::new(args.p)?, height)?,
    };
    let format = match args.format {
        FormatArg::Json => export::Format::Json,
        FormatArg::Csv => export::Format::Csv,
    };
    match &args.out {
        Some(path) => table.write(format, path)?,
        None => print!("{}", table.render(format)?),
    }
    Ok(())
}
