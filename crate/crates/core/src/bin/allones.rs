use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use allones::bench::{self, BenchConfig};
use allones::check::Limits;
use allones::io::{self, gen};
use allones::report::SolveReport;
use allones::{simulate_presses, BitVector, Instance};

const EXIT_USAGE: u8 = 1;
const EXIT_NEGATIVE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "allones", version, about = "Minimum generalized all-ones solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file (`-` reads stdin). Exit 2 when infeasible.
    Solve {
        file: String,
        /// Compute the exact optimum when the corank is at most this.
        #[arg(long, default_value_t = 20)]
        exact_limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        output: Format,
    },
    /// Simulate a press vector: a 0/1 string of length n or comma-separated vertex indices.
    Verify { file: String, press: String },
    /// Emit an instance file: path N | cycle N | complete N | grid W H | gnp N P | tree N.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Make each switch σ-type with this probability.
        #[arg(long)]
        sigma_fraction: Option<f64>,
        /// Turn each lamp on initially with this probability.
        #[arg(long)]
        on_fraction: Option<f64>,
    },
    /// Run the seeded random corpus and check every guarantee. Exit 3 on violations.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "8,10,12")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = allones::exact::PRESS_LIMIT)]
        press_limit: usize,
        #[arg(long, default_value_t = allones::exact::NULL_SPACE_LIMIT)]
        exact_limit: usize,
        /// Leave wall-clock timings out of the report.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        output: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load(path: &str) -> Result<Instance, String> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    io::parse(&text).map_err(|e| format!("{path}: {e}"))
}

fn parse_press(arg: &str, n: usize) -> Result<BitVector, String> {
    let arg = arg.trim();
    if arg.len() == n && arg.chars().all(|c| c == '0' || c == '1') {
        return Ok(arg.chars().map(|c| c == '1').collect());
    }
    let mut v = BitVector::zeros(n);
    for field in arg.split(',').map(str::trim).filter(|f| !f.is_empty()) {
        let i: usize = field.parse().map_err(|_| format!("invalid vertex `{field}` in press vector"))?;
        if i >= n {
            return Err(format!("vertex {i} out of range for {n} vertices"));
        }
        v.set(i, true);
    }
    Ok(v)
}

fn param<T: std::str::FromStr>(params: &[String], k: usize, what: &str) -> Result<T, String> {
    let raw = params.get(k).ok_or_else(|| format!("missing parameter {what}"))?;
    raw.parse().map_err(|_| format!("invalid {what} `{raw}`"))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Solve { file, exact_limit, output } => {
            let inst = load(&file)?;
            let report = bench::with_thread_cap(|| SolveReport::build(&inst, exact_limit));
            match output {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(if report.feasible { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NEGATIVE) })
        }
        Command::Verify { file, press } => {
            let inst = load(&file)?;
            let press = parse_press(&press, inst.n())?;
            let state = simulate_presses(&inst, &press);
            if state.is_all_ones() {
                println!("ALL ON");
                Ok(ExitCode::SUCCESS)
            } else {
                let off: Vec<String> = state.complement().ones_iter().map(|i| i.to_string()).collect();
                println!("OFF: {}", off.join(" "));
                Ok(ExitCode::from(EXIT_NEGATIVE))
            }
        }
        Command::Gen { family, params, seed, sigma_fraction, on_fraction } => {
            let inst = match family.as_str() {
                "path" => gen::path(param(&params, 0, "N")?),
                "cycle" => gen::cycle(param(&params, 0, "N")?),
                "complete" => gen::complete(param(&params, 0, "N")?),
                "grid" => gen::grid(param(&params, 0, "W")?, param(&params, 1, "H")?),
                "gnp" => {
                    let p: f64 = param(&params, 1, "P")?;
                    if !(0.0..=1.0).contains(&p) {
                        return Err(format!("edge probability {p} outside [0, 1]"));
                    }
                    gen::random_gnp(param(&params, 0, "N")?, p, seed)
                }
                "tree" => gen::random_tree(param(&params, 0, "N")?, seed),
                other => return Err(format!("unknown family `{other}`")),
            };
            let inst = if sigma_fraction.is_some() || on_fraction.is_some() {
                let sp = sigma_fraction.unwrap_or(0.0);
                let op = on_fraction.unwrap_or(0.0);
                if !(0.0..=1.0).contains(&sp) || !(0.0..=1.0).contains(&op) {
                    return Err("fractions must lie in [0, 1]".into());
                }
                gen::randomize_labels(inst, sp, op, seed.wrapping_add(1))
            } else {
                inst
            };
            print!("{}", io::render(&inst));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { sizes, trials, seed, press_limit, exact_limit, no_timing, output } => {
            let config = BenchConfig {
                sizes,
                trials,
                seed,
                limits: Limits { press: press_limit, null_space: exact_limit },
                timing: !no_timing,
            };
            let report = bench::run(&config);
            match output {
                Format::Json => println!("{}", serde_json::to_string(&report).expect("report serializes")),
                Format::Text => print!("{}", render_bench(&report)),
            }
            Ok(if report.total_violations == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATION) })
        }
    }
}

fn render_bench(report: &bench::BenchReport) -> String {
    let mut out = format!("seed {} trials {}\n", report.seed, report.trials);
    for s in &report.sizes {
        out += &format!("n={:<5} instances={} feasible={} oracle={} violations={}", s.n, s.instances, s.feasible, s.oracle_checked, s.violations);
        if let Some(r) = &s.ratio {
            out += &format!(" sol/opt: optimal {}/{} mean {:.4} p90 {:.4} max {:.4}", r.optimal, r.count, r.mean, r.p90, r.max);
        }
        if let Some(t) = &s.timing {
            out += &format!(" solve us: p50 {:.1} p90 {:.1} p99 {:.1}", t.p50_micros, t.p90_micros, t.p99_micros);
        }
        out.push('\n');
    }
    out += &format!("total violations: {}\n", report.total_violations);
    for v in &report.violation_samples {
        out += &format!("  {v}\n");
    }
    out
}
