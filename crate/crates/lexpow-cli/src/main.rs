//! Command-line workbench over the `lexpow` library.
//!
//! Exit codes: 0 success (and verification pass), 2 verification failure,
//! 1 usage or runtime error.

mod format;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use lexpow::walk::default_cap;
use lexpow::{
    betti_table, borelify_plus_p, hilbert_function, lexify, lexify_mod_p, lpp_verify,
    polarize, Field, FuzzConfig, LppOptions, MonomialIdeal, PowerSequence, ShiftSpec,
    WalkOptions,
};

use format::{parse_ideal, serialize_ideal, ParsedIdeal};

#[derive(Parser)]
#[command(
    name = "lexpow",
    version,
    about = "Monomial ideal workbench: Hilbert functions, Betti numbers, \
             shifting, compression, and lex-plus-powers verification"
)]
struct Cli {
    /// Emit machine-readable JSON (results and errors).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degreewise Hilbert function of the ideal in a file.
    Hilbert {
        file: PathBuf,
        /// Top degree; defaults to generator degrees + powers + 2.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Graded (and optionally multigraded) Betti table.
    Betti {
        file: PathBuf,
        /// Field characteristic: 0 or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
        /// Also list multigraded entries.
        #[arg(long)]
        multigraded: bool,
        /// Report for the quotient S/I instead of the ideal.
        #[arg(long)]
        quotient: bool,
    },
    /// The lex ideal (or lex-plus-powers ideal) with the same Hilbert
    /// function; prints an ideal file.
    Lexify {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
        /// Lexify modulo the file's power sequence (adds the powers to the
        /// ideal first).
        #[arg(long)]
        mod_powers: bool,
    },
    /// Apply the (a,b,t)-shift; prints an ideal file.
    Shift {
        file: PathBuf,
        /// First variable of the pair, e.g. x1 (before b in lex order).
        #[arg(short)]
        a: String,
        /// Second variable of the pair, e.g. x2.
        #[arg(short)]
        b: String,
        /// Shift level t.
        #[arg(short, default_value_t = 0)]
        t: u32,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Replace every slice by a lex ideal of k[A]; prints an ideal file.
    Compress {
        file: PathBuf,
        /// Comma-separated variable subset, e.g. -A x1,x3.
        #[arg(short = 'A', value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Polarize one variable; prints an ideal file in the enlarged ring.
    Polarize {
        file: PathBuf,
        /// The variable to polarize, e.g. x2.
        #[arg(short)]
        b: String,
    },
    /// Walk the ideal to a Borel-plus-powers ideal; prints an ideal file.
    Borelify {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
        /// Verify Betti dominance on every walk step (slow).
        #[arg(long)]
        check_betti: bool,
        /// Write the full step trace as JSON to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Verify the lex-plus-powers inequality on the ideal; exit code 2 on
    /// a failed verdict.
    Verify {
        file: PathBuf,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
        #[arg(long)]
        cap: Option<u32>,
        /// Also run the Borelification walk with per-step Betti dominance
        /// checks and write its trace as JSON to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Deterministic fuzz campaign; prints a JSON report.
    Fuzz {
        /// Ambient variable count.
        #[arg(long)]
        n: usize,
        /// Comma-separated pure-power degrees, e.g. 2,2,2.
        #[arg(long, value_delimiter = ',')]
        powers: Vec<u32>,
        /// Number of samples.
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_extra_gens: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Comma-separated characteristics to verify in, e.g. 0,2.
        #[arg(long = "char", value_delimiter = ',', default_values_t = [0u32])]
        characteristics: Vec<u32>,
        /// Worker thread bound.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            // clap's own exit code conventions differ; usage problems are 1.
            return ExitCode::from(if informational { 0 } else { 1 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if json {
                println!("{}", serde_json::json!({ "error": format!("{e:#}") }));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
    }
}

fn read_ideal_file(path: &Path) -> anyhow::Result<ParsedIdeal> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let parsed = parse_ideal(&text)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed)
}

/// Parse `x<k>` into a 0-based variable index.
fn parse_var(name: &str, n: usize) -> anyhow::Result<usize> {
    let idx: usize = name
        .strip_prefix('x')
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| anyhow!("bad variable name {name:?}, expected x1..x{n}"))?;
    if idx == 0 || idx > n {
        bail!("unknown variable {name} (ring has {n} variables)");
    }
    Ok(idx - 1)
}

fn powers_or_empty(parsed: &ParsedIdeal) -> PowerSequence {
    parsed
        .powers
        .clone()
        .unwrap_or_else(|| PowerSequence::empty(parsed.ideal.nvars()))
}

/// The ideal a plus-powers command operates on: file generators plus the
/// declared pure powers.
fn with_powers(parsed: &ParsedIdeal) -> MonomialIdeal {
    match &parsed.powers {
        Some(p) => parsed.ideal.sum(&p.to_ideal()),
        None => parsed.ideal.clone(),
    }
}

fn effective_cap(cap: Option<u32>, ideal: &MonomialIdeal, p: &PowerSequence) -> u32 {
    cap.unwrap_or_else(|| default_cap(ideal, p))
}

fn write_json_file(path: &Path, value: &impl serde::Serialize) -> anyhow::Result<()> {
    let mut f = std::fs::File::create(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    serde_json::to_writer_pretty(&mut f, value)?;
    writeln!(f)?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Hilbert { file, cap } => {
            let parsed = read_ideal_file(&file)?;
            let p = powers_or_empty(&parsed);
            let cap = effective_cap(cap, &parsed.ideal, &p);
            let hf = hilbert_function(&parsed.ideal, cap);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "ring": parsed.ideal.nvars(),
                        "cap": cap,
                        "values": hf.values(),
                    })
                );
            } else {
                println!("degree\tdim");
                for (d, v) in hf.values().iter().enumerate() {
                    println!("{d}\t{v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Betti { file, characteristic, multigraded, quotient } => {
            let parsed = read_ideal_file(&file)?;
            let field = Field::new(characteristic);
            let (graded, multi) = betti_table(&parsed.ideal, field);
            let table = if quotient {
                graded.to_quotient(parsed.ideal.is_unit())
            } else {
                graded
            };
            // Keep the multigraded rows in the requested convention too:
            // shift the homological index and account for S itself.
            let multi_rows = |multi: &lexpow::MultigradedBettiTable| {
                let mut rows = multi.sorted_rows();
                if quotient {
                    for row in &mut rows {
                        row.0 += 1;
                    }
                    if !parsed.ideal.is_unit() {
                        rows.insert(0, (0, lexpow::Monomial::one(parsed.ideal.nvars()), 1));
                    } else {
                        rows.clear();
                    }
                }
                rows
            };
            if cli.json {
                let entries: Vec<_> = table
                    .iter()
                    .map(|(i, j, b)| serde_json::json!({"i": i, "j": j, "b": b}))
                    .collect();
                let mut obj = serde_json::json!({
                    "convention": if quotient { "quotient" } else { "ideal" },
                    "char": characteristic,
                    "entries": entries,
                });
                if multigraded {
                    let rows: Vec<_> = multi_rows(&multi)
                        .into_iter()
                        .map(|(i, m, b)| {
                            serde_json::json!({"i": i, "m": m.to_string(), "b": b})
                        })
                        .collect();
                    obj["multigraded"] = serde_json::Value::Array(rows);
                }
                println!("{obj}");
            } else {
                println!(
                    "convention: {}, char: {characteristic}",
                    if quotient { "quotient" } else { "ideal" }
                );
                print!("{table}");
                if multigraded {
                    println!("multigraded:");
                    for (i, m, b) in multi_rows(&multi) {
                        println!("b[{i}, {m}] = {b}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Lexify { file, cap, mod_powers } => {
            let parsed = read_ideal_file(&file)?;
            let p = powers_or_empty(&parsed);
            let target = if mod_powers { with_powers(&parsed) } else { parsed.ideal.clone() };
            let pinned = cap.is_some();
            let mut cap = effective_cap(cap, &target, &p);
            // The printed ideal must be the whole lexification, not a
            // truncation: grow an automatic cap until its generators stay
            // clear of the top margin; a pinned cap that truncates errors.
            let lex = loop {
                let hf = hilbert_function(&target, cap);
                let lex = if mod_powers {
                    lexify_mod_p(&hf, &p)?
                } else {
                    lexify(&hf, target.nvars())?
                };
                if lex.max_gen_degree() + 2 <= cap {
                    break lex;
                }
                if pinned {
                    bail!(
                        "lexification still has generators at degree {} (cap {cap}); \
                         raise --cap",
                        lex.max_gen_degree()
                    );
                }
                cap += (cap / 2).max(4);
            };
            print!("{}", serialize_ideal(&lex, parsed.powers.as_ref()));
            eprintln!("cap: {cap}");
            Ok(ExitCode::SUCCESS)
        }

        Command::Shift { file, a, b, t, cap } => {
            let parsed = read_ideal_file(&file)?;
            let n = parsed.ideal.nvars();
            let spec = ShiftSpec::new(parse_var(&a, n)?, parse_var(&b, n)?, t);
            let p = powers_or_empty(&parsed);
            // Level-t shifts move membership across t degrees of b, so the
            // default cap gets matching headroom.
            let cap = cap.unwrap_or_else(|| default_cap(&parsed.ideal, &p) + t);
            let shifted = lexpow::shift(&parsed.ideal, spec, cap)?;
            print!("{}", serialize_ideal(&shifted, parsed.powers.as_ref()));
            eprintln!("cap: {cap}");
            Ok(ExitCode::SUCCESS)
        }

        Command::Compress { file, vars, cap } => {
            let parsed = read_ideal_file(&file)?;
            let n = parsed.ideal.nvars();
            let subset: Vec<usize> = vars
                .iter()
                .map(|v| parse_var(v, n))
                .collect::<anyhow::Result<_>>()?;
            if subset.is_empty() {
                bail!("-A requires at least one variable");
            }
            let p = powers_or_empty(&parsed);
            let cap = effective_cap(cap, &parsed.ideal, &p);
            let compressed = lexpow::compress(&parsed.ideal, &subset, cap)?;
            print!("{}", serialize_ideal(&compressed, parsed.powers.as_ref()));
            eprintln!("cap: {cap}");
            Ok(ExitCode::SUCCESS)
        }

        Command::Polarize { file, b } => {
            let parsed = read_ideal_file(&file)?;
            let var = parse_var(&b, parsed.ideal.nvars())?;
            let polarized = polarize(&parsed.ideal, var);
            // The power sequence does not transport to the enlarged ring.
            print!("{}", serialize_ideal(&polarized, None));
            Ok(ExitCode::SUCCESS)
        }

        Command::Borelify { file, cap, check_betti, trace } => {
            let parsed = read_ideal_file(&file)?;
            let p = powers_or_empty(&parsed);
            let ideal = with_powers(&parsed);
            // None lets the walk grow the cap when a transform needs room.
            let options = WalkOptions { cap, check_betti, ..Default::default() };
            let (borel, walk_trace) = borelify_plus_p(&ideal, &p, &options)?;
            print!("{}", serialize_ideal(&borel, parsed.powers.as_ref()));
            eprintln!(
                "cap: {}, steps: {}",
                walk_trace.cap, walk_trace.step_count
            );
            if let Some(path) = trace {
                write_json_file(&path, &walk_trace)?;
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { file, characteristic, cap, trace } => {
            let parsed = read_ideal_file(&file)?;
            let p = powers_or_empty(&parsed);
            let ideal = with_powers(&parsed);
            let options = LppOptions {
                field: Field::new(characteristic),
                cap,
                with_walk: trace.is_some(),
                walk_check_betti: trace.is_some(),
                ..Default::default()
            };
            let report = lpp_verify(&ideal, &p, &options)?;
            if let (Some(path), Some(walk)) = (&trace, &report.walk) {
                write_json_file(path, walk)?;
            }
            if cli.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("ring {}, char {}, cap {}", report.ring, report.characteristic, report.cap);
                println!("input:      {:?}", report.input);
                println!("lex-plus-P: {:?}", report.lex_plus_p);
                println!("hilbert functions equal: {}", report.hf_equal);
                println!("betti dominance:         {}", report.betti_dominates);
                println!(
                    "cancellation certificate: {}",
                    if report.cancellation.is_feasible() { "feasible" } else { "infeasible" }
                );
                println!("{}", if report.pass { "PASS" } else { "FAIL" });
            }
            if report.pass {
                Ok(ExitCode::SUCCESS)
            } else {
                // A failed verdict contradicts a theorem: counterexample
                // candidate, almost surely an implementation bug.
                if !cli.json {
                    eprintln!("verification failed; full state is in the report (--json)");
                }
                Ok(ExitCode::from(2))
            }
        }

        Command::Fuzz {
            n,
            powers,
            samples,
            seed,
            max_extra_gens,
            max_degree,
            characteristics,
            jobs,
        } => {
            let config = FuzzConfig {
                n,
                powers,
                samples,
                max_extra_gens,
                max_degree,
                characteristics,
                check_transforms: true,
            };
            let report = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .context("cannot build worker pool")?
                    .install(|| lexpow::fuzz_campaign(&config, seed)),
                None => lexpow::fuzz_campaign(&config, seed),
            };
            for failure in &report.failures {
                let path = format!("fuzz_failure_{}.ideal", failure.index);
                let mut content = format!(
                    "# fuzz failure: seed {}, sample {}\n",
                    report.seed, failure.index
                );
                for check in &failure.failed_checks {
                    content.push_str(&format!("# failed: {check}\n"));
                }
                content.push_str(&serialize_ideal(
                    &failure.ideal,
                    Some(&config.power_sequence()),
                ));
                std::fs::write(&path, content)
                    .with_context(|| format!("cannot write reproducer {path}"))?;
                eprintln!("wrote reproducer {path}");
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
