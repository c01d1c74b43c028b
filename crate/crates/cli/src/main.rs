//! kschur: exact k-Schur Murnaghan-Nakayama computations from the shell.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure.

mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use kschur_core::characters::{chi_table, chi_tilde_table, conjecture_experiment};
use kschur_core::cores::{bounded_from_core, core_from_bounded, k_conjugate, BoundedPartition};
use kschur_core::kschur::{apply, k_pieri, k_ribbons, mn_ribbons, mn_words, KSchurExpansion};
use kschur_core::ncsf;
use kschur_core::partition::{Partition, SkewShape};

#[derive(Parser)]
#[command(
    name = "kschur",
    about = "Exact k-Schur function calculator: cores, nilCoxeter words, Murnaghan-Nakayama expansions, character tables",
    long_about = "Exact k-Schur function calculator.\n\n\
        Partitions are comma-separated weakly decreasing positive integers, e.g. \"3,2,1,1\"; \
        the empty string is the empty partition. Words are JSON arrays of residues in [0,k], \
        leftmost letter first; under the action on partitions the rightmost letter acts first, \
        so the leftmost letter acts last.\n\n\
        The environment variable KSCHUR_THREADS caps the parallelism of the verify suites."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MnForm {
    Ribbons,
    Words,
    Algebra,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NcsfForm {
    H,
    E,
    P,
    S,
}

#[derive(Subcommand)]
enum Command {
    /// Map a k-bounded partition to its (k+1)-core, back, and its k-conjugate
    Core(CoreArgs),
    /// Print h_r, e_r, p_r or a hook Schur function as signed reduced words
    Ncsf(NcsfArgs),
    /// Expand h_r · s_λ^(k) by the k-Pieri rule
    Pieri(StepArgs),
    /// Expand p_r · s_λ^(k) by the Murnaghan-Nakayama rule
    Mn(MnArgs),
    /// List the k-ribbons of size r over a base partition
    Ribbons(StepArgs),
    /// Print the character table χ (or χ̃ with --dual) over the k-bounded partitions of n
    Chi(ChiArgs),
    /// Run a verification suite; exits 2 on any mismatch
    Verify(VerifyArgs),
    /// Re-run the ribbon-condition experiment and report discrepancies
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct CoreArgs {
    #[arg(long)]
    k: usize,
    /// k-bounded partition, e.g. "3,2,1,1" (alias: --mu)
    #[arg(long, visible_alias = "mu", default_value = "")]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct NcsfArgs {
    #[arg(long)]
    k: usize,
    /// Which family: h, e, p, or s (hook Schur)
    #[arg(long, value_enum, default_value_t = NcsfForm::P)]
    form: NcsfForm,
    #[arg(long)]
    r: usize,
    /// Leg length of the hook for --form s: the function s_(r-i,1^i)
    #[arg(long, default_value_t = 0)]
    i: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct StepArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value = "")]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct MnArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value = "")]
    lambda: String,
    /// Computation route; all three produce the same expansion
    #[arg(long, value_enum, default_value_t = MnForm::Ribbons)]
    form: MnForm,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ChiArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: u32,
    /// Print the dual table χ̃ instead of χ
    #[arg(long)]
    dual: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: tables, equivalence, braid, bijection, orthogonality, ncsf
    #[arg(long)]
    suite: String,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are not usage errors.
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn parse_bounded(text: &str, k: usize, flag: &str) -> Result<BoundedPartition, String> {
    if k == 0 {
        return Err("--k must be at least 1".into());
    }
    let shape = Partition::parse(text).map_err(|e| format!("{flag}: {e}"))?;
    if shape.first_part() as usize > k {
        return Err(format!("{flag}: partition \"{shape}\" is not {k}-bounded"));
    }
    Ok(BoundedPartition::new(shape, k))
}

fn check_r(r: usize, k: usize) -> Result<(), String> {
    if r < 1 || r > k {
        return Err(format!("--r: must satisfy 1 <= r <= k, got r={r}, k={k}"));
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Core(args) => {
            let lambda = parse_bounded(&args.lambda, args.k, "--lambda")?;
            let core = core_from_bounded(&lambda);
            let bounded = bounded_from_core(&core);
            let conj = k_conjugate(&lambda);
            match args.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "core": output::partition_json(core.shape()),
                        "bounded": output::partition_json(bounded.shape()),
                        "k_conjugate": output::partition_json(conj.shape()),
                    })
                ),
                _ => {
                    println!("core:        {}", core.shape());
                    println!("bounded:     {}", bounded.shape());
                    println!("k-conjugate: {}", conj.shape());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ncsf(args) => {
            let k = args.k;
            if k == 0 {
                return Err("--k must be at least 1".into());
            }
            let element = match args.form {
                NcsfForm::H => {
                    check_r(args.r, k)?;
                    ncsf::h(args.r, k)
                }
                NcsfForm::E => {
                    check_r(args.r, k)?;
                    ncsf::e(args.r, k)
                }
                NcsfForm::P => {
                    check_r(args.r, k)?;
                    ncsf::p(args.r, k)
                }
                NcsfForm::S => {
                    check_r(args.r, k)?;
                    if args.i >= args.r {
                        return Err(format!(
                            "--i: hook leg must satisfy 0 <= i < r, got i={}, r={}",
                            args.i, args.r
                        ));
                    }
                    ncsf::hook_schur(args.r, args.i, k)
                }
            };
            output::print_algebra_element(&element, args.format == Format::Json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Pieri(args) => {
            check_r(args.r, args.k)?;
            let lambda = parse_bounded(&args.lambda, args.k, "--lambda")?;
            let terms = k_pieri(args.r, &lambda);
            match args.format {
                Format::Json => {
                    let arr: Vec<serde_json::Value> = terms
                        .iter()
                        .map(|mu| output::partition_json(mu.shape()))
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "k": args.k, "r": args.r,
                            "lambda": output::partition_json(lambda.shape()),
                            "terms": arr,
                        })
                    );
                }
                _ => {
                    for mu in &terms {
                        println!("{}", mu.shape());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mn(args) => {
            check_r(args.r, args.k)?;
            let lambda = parse_bounded(&args.lambda, args.k, "--lambda")?;
            let expansion = match args.form {
                MnForm::Ribbons => mn_ribbons(args.r, &lambda),
                MnForm::Words => mn_words(args.r, &lambda),
                MnForm::Algebra => apply(&ncsf::p(args.r, args.k), &lambda),
            };
            let rows = expansion_rows(&expansion, lambda.shape());
            output::print_mn_rows(&rows, args.format == Format::Json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Ribbons(args) => {
            check_r(args.r, args.k)?;
            let lambda = parse_bounded(&args.lambda, args.k, "--lambda")?;
            let ribbons = k_ribbons(&lambda, args.r);
            match args.format {
                Format::Json => {
                    let arr: Vec<serde_json::Value> = ribbons
                        .iter()
                        .map(|rib| {
                            serde_json::json!({
                                "partition": output::partition_json(rib.outer.shape()),
                                "height": rib.height,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(arr));
                }
                _ => {
                    for rib in &ribbons {
                        println!("{}  height {}", rib.outer.shape(), rib.height);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chi(args) => {
            if args.k == 0 {
                return Err("--k must be at least 1".into());
            }
            if args.n == 0 {
                return Err("--n must be at least 1".into());
            }
            let table = if args.dual {
                chi_tilde_table(args.k, args.n)
            } else {
                chi_table(args.k, args.n)
            };
            match args.format {
                Format::Json => output::print_table_json(&table),
                Format::Csv => output::print_table_csv(&table),
                Format::Text => output::print_table_text(&table, args.dual),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            verify::configure_threads();
            let report = verify::run_suite(&args.suite, args.k_max, args.n_max)?;
            let ok = verify::print_report(&report, args.format == Format::Json);
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Conjecture(args) => {
            if args.k_max == 0 {
                return Err("--k-max must be at least 1".into());
            }
            let report = conjecture_experiment(args.k_max, args.n_max);
            if args.format == Format::Json {
                let discrepancies: Vec<serde_json::Value> = report
                    .discrepancies
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "k": d.k, "r": d.r,
                            "inner": output::partition_json(&d.inner),
                            "outer": output::partition_json(&d.outer),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "k_max": report.k_max,
                        "n_max": report.n_max,
                        "accepted_without_condition": report.accepted_without_condition,
                        "discrepancies": discrepancies,
                    })
                );
            } else {
                println!(
                    "ribbon condition experiment: k <= {}, |lambda| <= {}",
                    report.k_max, report.n_max
                );
                println!(
                    "candidates accepted without condition (2): {}",
                    report.accepted_without_condition
                );
                if report.discrepancies.is_empty() {
                    println!("discrepancies: none (condition (2) never decided acceptance)");
                } else {
                    println!("discrepancies: {}", report.discrepancies.len());
                    for d in &report.discrepancies {
                        println!("  k={} r={} inner={} outer={}", d.k, d.r, d.inner, d.outer);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Signed expansion terms with heights, in table order.
fn expansion_rows(
    expansion: &KSchurExpansion,
    base: &Partition,
) -> Vec<(Partition, BigInt, u32)> {
    let mut rows: Vec<(Partition, BigInt, u32)> = expansion
        .terms()
        .map(|(shape, coeff)| {
            let skew = SkewShape::new(shape.clone(), base.clone())
                .expect("every MN term contains the base");
            (shape.clone(), coeff.clone(), skew.height())
        })
        .collect();
    rows.sort_by(|a, b| kschur_core::partition::table_cmp(&a.0, &b.0));
    rows
}
