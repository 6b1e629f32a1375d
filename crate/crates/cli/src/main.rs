mod args;
mod report;

use std::fmt;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use nearclique::edgelist::load_edge_list;
use nearclique::estimators::{estimate, list_near_cliques, PhiTable, LOW_CONFIDENCE_NONZERO};
use nearclique::{degeneracy_order, exact_counts, Mode, PatternSpec, SamplingConfig};

use args::{Args, Command, OutputFormat};
use report::{emit, CountReport, ExactReport, GraphSummary, StatsReport};

enum Failure {
    Usage(String),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Io(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Io(msg) => f.write_str(msg),
        }
    }
}

fn usage(e: impl fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn io_error(e: impl fmt::Display) -> Failure {
    Failure::Io(e.to_string())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nearclique: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(args: &Args) -> Result<(), Failure> {
    let pattern = PatternSpec::new(args.pattern, args.k).map_err(usage)?;
    if let Some(threads) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads as usize)
            .build_global()
            .map_err(usage)?;
    }
    let (g, labels) = load_edge_list(&args.input).map_err(io_error)?;
    let started = Instant::now();
    let d = degeneracy_order(&g);
    let summary = GraphSummary {
        graph: args.input.display().to_string(),
        n: g.num_vertices(),
        m: g.num_edges(),
        degeneracy: d.degeneracy(),
        d_max: g.max_degree(),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());

    match args.command {
        Command::Count => {
            let cfg = SamplingConfig::new(args.samples, args.seed_or_clock())
                .with_batches(args.batches());
            let est = estimate(args.mode, &g, &d, pattern, cfg).map_err(usage)?;
            if est.low_confidence {
                advise(args.mode, est.nonzero_samples);
            }
            let report = CountReport {
                graph: summary,
                command: args.command.name(),
                pattern: pattern.kind().name(),
                k: pattern.k(),
                h: pattern.h(),
                mode: args.mode.name(),
                samples: est.samples,
                nonzero_samples: est.nonzero_samples,
                normalizer: est.normalizer,
                estimate: est.value,
                low_confidence: est.low_confidence,
                seed: est.seed,
                elapsed_seconds: est.elapsed_seconds,
            };
            emit(&report, args.output, &mut out).map_err(io_error)?;
        }
        Command::Exact => {
            let counts = exact_counts(&g, args.k).map_err(usage)?;
            let report = ExactReport {
                graph: summary,
                command: args.command.name(),
                pattern: pattern.kind().name(),
                k: pattern.k(),
                h: pattern.h(),
                mode: None,
                samples: None,
                nonzero_samples: None,
                normalizer: None,
                kclique: counts.kclique,
                k1: counts.k1,
                k2_type1: counts.k2_type1,
                k2_type2: counts.k2_type2,
                low_confidence: None,
                seed: None,
                elapsed_seconds: started.elapsed().as_secs_f64(),
            };
            emit(&report, args.output, &mut out).map_err(io_error)?;
        }
        Command::List => {
            let seed = args.seed_or_clock();
            let cfg = SamplingConfig::new(args.samples, seed).with_batches(args.batches());
            let found =
                list_near_cliques(&g, &d, pattern, cfg, args.mode, args.max_list).map_err(usage)?;
            for set in &found {
                let names: Vec<String> =
                    set.iter().map(|v| labels.original(v).to_string()).collect();
                let line = match args.output {
                    OutputFormat::Json => format!("[{}]", names.join(",")),
                    OutputFormat::Csv => names.join(","),
                };
                writeln!(out, "{line}").map_err(io_error)?;
            }
            eprintln!("nearclique: listed {} instances (seed {seed})", found.len());
        }
        Command::Stats => {
            let phi = PhiTable::new(&g, &d, pattern.h()).total();
            let exact = if args.with_exact {
                Some(exact_counts(&g, args.k).map_err(usage)?)
            } else {
                None
            };
            let ratio = |count: Option<u64>| {
                let cliques = exact.as_ref()?.kclique;
                let count = count?;
                (cliques > 0).then(|| count as f64 / cliques as f64)
            };
            let k1 = exact.as_ref().map(|e| e.k1);
            let t1 = exact.as_ref().and_then(|e| e.k2_type1);
            let t2 = exact.as_ref().and_then(|e| e.k2_type2);
            let report = StatsReport {
                graph: summary,
                command: args.command.name(),
                pattern: pattern.kind().name(),
                k: pattern.k(),
                h: pattern.h(),
                phi,
                kclique: exact.as_ref().map(|e| e.kclique),
                k1,
                k2_type1: t1,
                k2_type2: t2,
                k1_ratio: ratio(k1),
                k2_type1_ratio: ratio(t1),
                k2_type2_ratio: ratio(t2),
                elapsed_seconds: started.elapsed().as_secs_f64(),
            };
            emit(&report, args.output, &mut out).map_err(io_error)?;
        }
    }
    out.flush().map_err(io_error)
}

fn advise(mode: Mode, nonzero: u64) {
    eprintln!(
        "nearclique: only {nonzero} of the samples hit an instance (below {LOW_CONFIDENCE_NONZERO}); \
         the estimate has high variance"
    );
    if mode == Mode::InverseTs {
        eprintln!("nearclique: consider rerunning with --mode peanuts");
    }
}
