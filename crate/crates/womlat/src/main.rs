//! Command-line entry point: load `.lat` files, check properties, evaluate
//! terms and formulas, derive implication/product tables, verify the
//! correspondence and residuation results, search enumerated models, work
//! with measures, and export DOT.
//!
//! Exit codes: 0 = property holds / success, 1 = property fails (the
//! counterexample is printed), 2 = usage, parse, or validation error.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use womlat::algebra::{BinaryOpTable, CheckReport, OpTag, UnaryAlgebra};
use womlat::fixtures;
use womlat::implication;
use womlat::io::{measure_to_text, parse_measure, to_dot, LatFile};
use womlat::measures;
use womlat::residuation;
use womlat::search::{self, PropertyConstraints};
use womlat::term::{self, EvalContext};
use womlat::workbench;

#[derive(Parser)]
#[command(name = "womlat", version, about = "Finite-lattice workbench for weakly orthomodular structures", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a built-in property of the file's unary algebra.
    Check {
        file: PathBuf,
        /// wom|dwom|dnl|wdnl|comp|ortho|om|demorgan|antitone|involution|lemma-bounds
        #[arg(long)]
        prop: String,
        #[arg(long)]
        json: bool,
    },
    /// Check an arbitrary identity or quasi-identity from the term language.
    Holds {
        file: PathBuf,
        #[arg(short = 'f', long = "formula")]
        formula: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a term under an explicit assignment.
    Eval {
        file: PathBuf,
        #[arg(short = 'e', long = "expr")]
        expr: String,
        /// Comma-separated bindings, e.g. x=a,y=b
        #[arg(long)]
        assign: Option<String>,
    },
    /// Derive an implication or product table from the file's unary table.
    Derive {
        file: PathBuf,
        /// d|w|sasaki|product
        #[arg(long = "impl")]
        kind: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one of the built-in theorem verifications.
    Verify {
        file: PathBuf,
        /// d-bijection|family-bijection|w-bijection|sasaki|half-adjunction|
        /// weak-dnl-residuation|residuation|converse|measures|d-properties|w-properties
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate unary algebras matching property constraints.
    Search {
        /// Restrict the search to the lattice in this file.
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Search all lattices with up to this many elements.
        #[arg(long = "all-n")]
        all_n: Option<usize>,
        /// Constraints like wom,+dwom,-dnl
        #[arg(long)]
        want: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check a measure against the file's algebra, or emit a witness measure.
    Measure {
        file: PathBuf,
        /// Measure file (`label: p/q` lines).
        #[arg(long = "s")]
        measure: Option<PathBuf>,
        /// s1|s2|conditions|proposition
        #[arg(long)]
        check: Option<String>,
        /// filter:<element> or ideal:<element>
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the Hasse diagram as DOT.
    Dot { file: PathBuf },
    /// List or emit the built-in example algebras.
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCmd,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    List,
    Emit { name: String },
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (e.g. `womlat dot | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<ExitCode, Box<dyn Error>>;

fn load(path: &Path) -> Result<LatFile, Box<dyn Error>> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(LatFile::parse(&text)?)
}

fn need_algebra(file: &LatFile, path: &Path) -> Result<UnaryAlgebra, Box<dyn Error>> {
    file.algebra().ok_or_else(|| {
        format!("{} has no [unary '] table, which this command needs", path.display()).into()
    })
}

fn emit_report(report: &CheckReport, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string(report).expect("reports serialize"));
    } else {
        println!("property: {}", report.property);
        println!("holds: {}", report.holds);
        if let Some(witness) = &report.witness {
            let rendered: Vec<String> =
                witness.iter().map(|(v, e)| format!("{v}={e}")).collect();
            println!("witness: {}", rendered.join(","));
        }
        println!("detail: {}", report.detail);
    }
    if report.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.cmd {
        Cmd::Check { file, prop, json } => {
            let lat = load(&file)?;
            let report = workbench::check_property(&lat, &prop)?;
            Ok(emit_report(&report, json))
        }
        Cmd::Holds { file, formula, json } => {
            let lat = load(&file)?;
            let parsed = term::parse_formula(&formula)?;
            let ctx = EvalContext {
                lattice: &lat.lattice,
                comp: lat.comp.as_deref(),
                arrow: lat.arrow.as_deref(),
                prod: lat.prod.as_deref(),
            };
            let report = term::holds(&parsed, &ctx)?;
            Ok(emit_report(&report, json))
        }
        Cmd::Eval { file, expr, assign } => {
            let lat = load(&file)?;
            let parsed = term::parse_term(&expr)?;
            let ctx = EvalContext {
                lattice: &lat.lattice,
                comp: lat.comp.as_deref(),
                arrow: lat.arrow.as_deref(),
                prod: lat.prod.as_deref(),
            };
            let mut vars = Vec::new();
            let mut vals = Vec::new();
            if let Some(assign) = assign {
                for binding in assign.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (var, label) = binding
                        .split_once('=')
                        .ok_or_else(|| format!("binding `{binding}` is not of the form x=a"))?;
                    let id = lat
                        .lattice
                        .element(label.trim())
                        .ok_or_else(|| format!("unknown element label `{}`", label.trim()))?;
                    vars.push(var.trim().to_string());
                    vals.push(id);
                }
            }
            let result = parsed.eval(&ctx, &vars, &vals)?;
            println!("{}", lat.lattice.name(result));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Derive { file, kind, out } => {
            let lat = load(&file)?;
            let a = need_algebra(&lat, &file)?;
            let table: BinaryOpTable = match kind.as_str() {
                "d" => implication::d_implication_from_complement(&a)?,
                "w" => implication::w_implication_from_complement(&a)?,
                "sasaki" => implication::sasaki_implication(&a),
                "product" => residuation::sasaki_product(&a),
                other => return Err(format!("unknown derivation `{other}`").into()),
            };
            let mut doc = LatFile::from_algebra(&a);
            match table.tag() {
                OpTag::Product => doc.prod = Some(table.entries().to_vec()),
                _ => doc.arrow = Some(table.entries().to_vec()),
            }
            let text = doc.to_text();
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { file, theorem, json } => {
            let lat = load(&file)?;
            let report = workbench::verify_theorem(&lat, &theorem)?;
            Ok(emit_report(&report, json))
        }
        Cmd::Search { lattice, all_n, want, limit } => {
            let want = PropertyConstraints::parse(&want)?;
            let limit = limit.unwrap_or(usize::MAX);
            let mut hits = 0usize;
            fn print_hit(hits: &mut usize, a: &UnaryAlgebra) {
                *hits += 1;
                println!("# hit {hits}");
                print!("{}", LatFile::from_algebra(a).to_text());
                println!();
            }
            match (lattice, all_n) {
                (Some(path), None) => {
                    let lat = load(&path)?;
                    for a in search::enumerate_unary(&lat.lattice, &want)? {
                        if hits >= limit {
                            break;
                        }
                        print_hit(&mut hits, &a);
                    }
                }
                (None, Some(max_n)) => {
                    'outer: for n in 1..=max_n {
                        for l in search::enumerate_lattices(n)? {
                            let l = Arc::new(l);
                            for a in search::enumerate_unary(&l, &want)? {
                                if hits >= limit {
                                    break 'outer;
                                }
                                print_hit(&mut hits, &a);
                            }
                        }
                    }
                }
                _ => return Err("pass exactly one of --lattice <file> or --all-n <k>".into()),
            }
            if hits == 0 {
                println!("no algebra matches {want} in the searched range");
                Ok(ExitCode::from(1))
            } else {
                println!("found {hits} algebra(s) matching {want}");
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Measure { file, measure, check, witness, json } => {
            let lat = load(&file)?;
            match (measure, witness) {
                (Some(mpath), None) => {
                    let a = need_algebra(&lat, &file)?;
                    let text = fs::read_to_string(&mpath)
                        .map_err(|e| format!("cannot read {}: {e}", mpath.display()))?;
                    let s = parse_measure(&text, &lat.lattice)?;
                    let kind = check.ok_or("pass --check <s1|s2|conditions|proposition>")?;
                    match kind.as_str() {
                        "s1" => Ok(emit_report(&measures::in_s1(&a, &s), json)),
                        "s2" => Ok(emit_report(&measures::in_s2(&a, &s), json)),
                        "conditions" => {
                            let flags = measures::check_conditions(&a, &s)?;
                            let mut ok = true;
                            for report in flags.reports() {
                                let code = emit_report(report, json);
                                ok &= code == ExitCode::SUCCESS;
                            }
                            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
                        }
                        "proposition" => {
                            Ok(emit_report(&measures::verify_conditions_proposition(&a, &s)?, json))
                        }
                        other => Err(format!("unknown measure check `{other}`").into()),
                    }
                }
                (None, Some(spec)) => {
                    let (kind, label) = spec
                        .split_once(':')
                        .ok_or("witness spec must be filter:<element> or ideal:<element>")?;
                    let x = lat
                        .lattice
                        .element(label.trim())
                        .ok_or_else(|| format!("unknown element label `{}`", label.trim()))?;
                    let s = match kind {
                        "filter" => measures::witness_measure_filter(&lat.lattice, x),
                        "ideal" => measures::witness_measure_ideal(&lat.lattice, x),
                        other => return Err(format!("unknown witness kind `{other}`").into()),
                    };
                    print!("{}", measure_to_text(&s, &lat.lattice));
                    Ok(ExitCode::SUCCESS)
                }
                _ => Err("pass exactly one of --s <file> (with --check) or --witness <spec>".into()),
            }
        }
        Cmd::Dot { file } => {
            let lat = load(&file)?;
            print!("{}", to_dot(&lat.lattice));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fixtures { cmd } => match cmd {
            FixturesCmd::List => {
                for name in fixtures::fixture_names() {
                    println!("{name}");
                }
                Ok(ExitCode::SUCCESS)
            }
            FixturesCmd::Emit { name } => {
                let a = fixtures::fixture(&name)?;
                print!("{}", LatFile::from_algebra(&a).to_text());
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

