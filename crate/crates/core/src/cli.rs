//! Command-line surface. [`dispatch`] is the whole program minus process I/O,
//! so it can be driven from tests.

use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adversaries::{named_instance, parse_family_range, play_theorem1, play_theorem4, FamilyId, GameTranscript};
use crate::algorithms::{run_online, SchedulerId};
use crate::error::Error;
use crate::harness::{emit_csv, emit_report_csv, run_family_sweep, verify_bound, ExperimentRow};
use crate::model::{parse_instance_text, Instance};
use crate::oracle::{competitive_ratio, opt_lower_bound, optimal_makespan};
use crate::rational::{parse_list, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lookahead", about = "Semi-online scheduling with k-lookahead")]
struct Cli {
    /// Print a version banner before the output.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one scheduler on one instance and compare with the optimum.
    Simulate {
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        source: SourceArgs,
        /// Print every decision with the window it was made on.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        csv: Option<String>,
    },
    /// Optimal offline makespan of an instance.
    Oracle {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Exhaustively check a ratio bound over all small instances.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value = "1,2,3")]
        values: String,
        #[arg(long)]
        bound: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        csv: Option<String>,
    },
    /// Play an adaptive lower-bound adversary against a scheduler.
    Adversary {
        /// theorem1 (two machines) or theorem4 (three machines)
        #[arg(long)]
        game: String,
        #[command(flatten)]
        run: RunArgs,
        /// Total number of jobs (theorem1).
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Length of the leading jobs (theorem1).
        #[arg(long, default_value = "1")]
        x: String,
    },
    /// Write a named or random instance in the instance text format.
    Generate {
        #[arg(long, conflicts_with = "random")]
        family: Option<String>,
        /// Uniform random instance over --values with --n jobs.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value = "1,2,3")]
        values: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<String>,
    },
    /// Run a scheduler over a parameterised family, e.g. theorem2:n=4..20.
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        family: String,
        #[arg(long)]
        csv: Option<String>,
    },
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    alg: String,
    /// Machine count; defaults to 2 for ls and 2la1, 3 for 3la1.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

impl RunArgs {
    fn resolve(&self) -> Result<(SchedulerId, usize, usize), Error> {
        let id: SchedulerId = self.alg.parse()?;
        let m = self.m.unwrap_or(match id {
            SchedulerId::ThreeLa1 => 3,
            _ => 2,
        });
        id.build(m)?;
        Ok((id, m, self.k))
    }
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Instance file (one processing time per line).
    #[arg(long)]
    instance: Option<String>,
    /// Named family such as fig1 or theorem2:n=6.
    #[arg(long)]
    family: Option<String>,
    /// Inline comma-separated processing times.
    #[arg(long)]
    values: Option<String>,
}

impl SourceArgs {
    fn load(&self) -> Result<(Instance, String), Failure> {
        match (&self.instance, &self.family, &self.values) {
            (Some(path), None, None) => {
                let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
                let inst = parse_instance_text(&text)?;
                Ok((inst, path.clone()))
            }
            (None, Some(f), None) => {
                let id: FamilyId = f.parse()?;
                Ok((named_instance(&id)?, id.to_string()))
            }
            (None, None, Some(v)) => {
                let values = parse_list(v).map_err(|e| Failure::Usage(e.to_string()))?;
                let inst = Instance::new(values)?;
                let inline = inst.inline();
                Ok((inst, inline))
            }
            _ => Err(Failure::Usage(
                "give exactly one of --instance, --family, --values".into(),
            )),
        }
    }
}

enum Failure {
    Usage(String),
    Module(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Module(e)
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `args` (including the program name in position 0).
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = String::new();
    if cli.verbose {
        let _ = writeln!(out, "lookahead {}", env!("CARGO_PKG_VERSION"));
    }
    match execute(cli.command, &mut out) {
        Ok(code) => Outcome { code, stdout: out, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: out,
            stderr: format!("error: {msg}\n\nUsage: lookahead <simulate|oracle|verify|adversary|generate|sweep> [OPTIONS]\nRun `lookahead help` for details.\n"),
        },
        Err(Failure::Module(e)) => {
            let mut stderr = format!("error: {e}\n");
            if let Error::CapacityExceeded { instance: Some(i), .. } = &e {
                let _ = writeln!(stderr, "instance: {i}");
            }
            let code = EXIT_USAGE;
            Outcome { code, stdout: out, stderr }
        }
    }
}

fn write_file(path: &str, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational, Failure> {
    text.parse()
        .map_err(|_| Failure::Usage(format!("{flag}: expected an integer or a fraction, got {text:?}")))
}

fn print_row(out: &mut String, row: &ExperimentRow) {
    let _ = writeln!(out, "scheduler: {}", row.scheduler);
    let _ = writeln!(out, "instance: {}", row.instance);
    let _ = writeln!(out, "m: {}  k: {}", row.m, row.k);
    let _ = writeln!(out, "makespan: {}", row.alg_makespan);
    let _ = writeln!(out, "opt: {}", row.opt_makespan);
    let _ = writeln!(out, "ratio: {} (~{:.6})", row.ratio, row.ratio.to_f64());
}

fn print_transcript(out: &mut String, t: &GameTranscript) {
    for (w, machine) in t.revealed.iter().zip(&t.decisions) {
        let future: Vec<_> = w.future.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "J{} p={} sees [{}] -> M{}", w.index, w.current, future.join(","), machine);
    }
    let _ = writeln!(out, "instance: {}", t.final_instance);
    if let Some(label) = &t.label {
        let _ = writeln!(out, "branch: {label}");
    }
    if t.degenerate {
        let _ = writeln!(out, "degenerate: final value clamped");
    }
    let _ = writeln!(out, "makespan: {}", t.alg_makespan);
    let _ = writeln!(out, "opt: {}", t.opt_makespan);
    let _ = writeln!(out, "ratio: {} (~{:.6})", t.ratio, t.ratio.to_f64());
}

fn execute(command: Command, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Simulate { run, source, trace, csv } => {
            let (id, m, k) = run.resolve().map_err(|e| Failure::Usage(e.to_string()))?;
            let (instance, descriptor) = source.load()?;
            let policy = id.build(m)?;
            let (schedule, decisions) = run_online(policy.as_ref(), &instance, k)?;
            let opt = optimal_makespan(&instance, m)?;
            let row = ExperimentRow {
                scheduler: id,
                instance: descriptor,
                m,
                k,
                alg_makespan: schedule.makespan().clone(),
                ratio: competitive_ratio(schedule.makespan(), &opt.makespan)?,
                opt_makespan: opt.makespan,
            };
            if trace {
                out.push_str(&decisions.to_string());
            }
            let loads: Vec<_> = schedule.loads().iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "loads: ({})", loads.join(", "));
            print_row(out, &row);
            if let Some(path) = csv {
                write_file(&path, &emit_csv(&[row]))?;
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { m, source } => {
            let (instance, descriptor) = source.load()?;
            let opt = optimal_makespan(&instance, m)?;
            let witness: Vec<_> = opt.witness.iter().map(|j| format!("M{j}")).collect();
            let _ = writeln!(out, "instance: {descriptor}");
            let _ = writeln!(out, "m: {m}");
            let _ = writeln!(out, "opt: {}", opt.makespan);
            let _ = writeln!(out, "lower bound: {}", opt_lower_bound(&instance, m));
            let _ = writeln!(out, "witness: {}", witness.join(" "));
            Ok(EXIT_OK)
        }
        Command::Verify { run, nmax, values, bound, jobs, csv } => {
            let (id, m, k) = run.resolve().map_err(|e| Failure::Usage(e.to_string()))?;
            let values = parse_list(&values).map_err(|e| Failure::Usage(e.to_string()))?;
            let bound = parse_rational(&bound, "--bound")?;
            let report = verify_bound(id, m, k, nmax, &values, &bound, jobs)?;
            out.push_str(&report.to_string());
            if let Some(path) = csv {
                write_file(&path, &emit_report_csv(&report)?)?;
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Adversary { game, run, n, x } => {
            let (id, m, k) = run.resolve().map_err(|e| Failure::Usage(e.to_string()))?;
            let policy = id.build(m)?;
            let transcript = match game.as_str() {
                "theorem1" => play_theorem1(policy.as_ref(), n, k, parse_rational(&x, "--x")?)?,
                "theorem4" => {
                    if k != 1 {
                        return Err(Failure::Usage("theorem4 is played with --k 1".into()));
                    }
                    play_theorem4(policy.as_ref())?
                }
                other => return Err(Failure::Usage(format!("unknown game {other:?}; use theorem1 or theorem4"))),
            };
            print_transcript(out, &transcript);
            Ok(EXIT_OK)
        }
        Command::Generate { family, random, n, values, seed, out: path } => {
            let instance = if random {
                let values = parse_list(&values).map_err(|e| Failure::Usage(e.to_string()))?;
                if values.is_empty() || n == 0 {
                    return Err(Failure::Usage("--random needs --n >= 1 and non-empty --values".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let times = (0..n).map(|_| values[rng.gen_range(0..values.len())].clone()).collect();
                Instance::new(times)?
            } else {
                let family = family.ok_or_else(|| Failure::Usage("give --family or --random".into()))?;
                named_instance(&family.parse()?)?
            };
            let text = instance.to_text();
            match path {
                Some(p) => write_file(&p, &text)?,
                None => out.push_str(&text),
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { run, family, csv } => {
            let (id, m, k) = run.resolve().map_err(|e| Failure::Usage(e.to_string()))?;
            let families = parse_family_range(&family)?;
            let rows = run_family_sweep(id, &families, m, k)?;
            for r in &rows {
                let _ = writeln!(out, "{r}");
            }
            if let Some(path) = csv {
                write_file(&path, &emit_csv(&rows))?;
            }
            Ok(EXIT_OK)
        }
    }
}
