use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use idgraph_core::graph::{build_idempotent_graph, ComponentCensus, Shape};
use idgraph_core::ring::{FiniteRing, DEFAULT_SIZE_BOUND};
use idgraph_core::selftest::{run_selftest_with_threads, SelftestConfig, SelftestSummary};
use idgraph_core::sweep::{parse_catalog, run_sweep, SweepConfig, SweepSummary};
use idgraph_core::theorems::{cross_validate, ClassificationReport, Prediction};

const EXIT_INPUT: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

/// Idempotent graphs of finite commutative rings: build them, classify them,
/// and check the structural predictions against graph recognizers.
#[derive(Parser)]
#[command(name = "idgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the idempotent graph of one ring, e.g. "Z3[x]/(x^2) * Z2".
    Classify {
        spec: String,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Also write the graph in DOT format to this file.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Label DOT vertices with ring elements.
        #[arg(long)]
        labels: bool,
    },
    /// Cross-check predictions and recognizers over products of catalog rings.
    Verify {
        #[arg(long = "max-size", default_value_t = 256)]
        max_size: usize,
        #[arg(long = "max-factors", default_value_t = 3)]
        max_factors: usize,
        /// Local rings to combine, one spec per line, '#' comments.
        #[arg(long, value_name = "FILE")]
        catalog: Option<PathBuf>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare the fast recognizers with brute-force oracles.
    Selftest {
        #[arg(long = "exhaustive-n", default_value_t = 6)]
        exhaustive_n: usize,
        #[arg(long = "random-count", default_value_t = 500)]
        random_count: usize,
        #[arg(long = "random-n", default_value_t = 12)]
        random_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write the idempotent graph of a ring in DOT format.
    Export {
        spec: String,
        #[arg(long, value_name = "FILE")]
        dot: PathBuf,
        #[arg(long)]
        labels: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Classify {
            spec,
            json,
            dot,
            labels,
        } => {
            let ring = build(&spec)?;
            let report = cross_validate(&ring);
            if let Some(path) = dot {
                write_dot(&ring, &path, labels)?;
            }
            if json {
                println!("{}", report.to_json());
            } else {
                print_report(&report);
            }
            Ok(verdict(report.mismatches.is_empty()))
        }
        Command::Verify {
            max_size,
            max_factors,
            catalog,
            jobs,
            seed,
            json,
        } => {
            let mut config = SweepConfig {
                max_ring_size: max_size,
                max_factors,
                random_seed: seed,
                parallelism: jobs,
                ..SweepConfig::default()
            };
            if let Some(path) = catalog {
                let text = fs::read_to_string(&path)
                    .with_context(|| format!("reading catalog {}", path.display()))?;
                config.catalog = parse_catalog(&text)?;
            }
            let summary = run_sweep(&config)?.summary();
            if json {
                println!("{}", summary.to_json());
            } else {
                print_sweep(&summary);
            }
            Ok(verdict(summary.mismatch_count == 0))
        }
        Command::Selftest {
            exhaustive_n,
            random_count,
            random_n,
            seed,
            jobs,
            json,
        } => {
            let config = SelftestConfig {
                exhaustive_n,
                random_count,
                random_n,
                seed,
            };
            let summary = run_selftest_with_threads(&config, jobs)?;
            if json {
                println!("{}", summary.to_json());
            } else {
                print_selftest(&summary);
            }
            Ok(verdict(summary.agreed()))
        }
        Command::Export { spec, dot, labels } => {
            let ring = build(&spec)?;
            write_dot(&ring, &dot, labels)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build(spec: &str) -> Result<FiniteRing> {
    let ring = FiniteRing::parse(spec).with_context(|| format!("invalid ring {spec:?}"))?;
    debug_assert!(ring.size() <= DEFAULT_SIZE_BOUND);
    Ok(ring)
}

fn write_dot(ring: &FiniteRing, path: &PathBuf, labels: bool) -> Result<()> {
    let dot = build_idempotent_graph(ring).to_dot(labels);
    fs::write(path, dot).with_context(|| format!("writing {}", path.display()))
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn describe_census(census: &ComponentCensus) -> String {
    census
        .components
        .iter()
        .map(|c| {
            let letter = match c.shape {
                Shape::Path => "P",
                Shape::EvenCycle | Shape::OddCycle => "C",
                Shape::Complete => "K",
                Shape::Other => "G",
            };
            format!("{letter}{}", c.size)
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn print_report(r: &ClassificationReport) {
    println!("ring            {}", r.spec);
    println!(
        "size            {} (characteristic {})",
        r.size, r.characteristic
    );
    println!(
        "idempotents     {} ({})",
        r.idempotent_count,
        if r.local { "local" } else { "non-local" }
    );
    for p in &r.profiles {
        println!(
            "  factor e={:<10} size {}, characteristic {}{}",
            p.idempotent,
            p.factor_size,
            p.factor_char,
            if p.generated_by_idempotents {
                ", generated by idempotents"
            } else {
                ""
            }
        );
    }
    println!(
        "graph           {} vertices, {} edges, {} component(s): {}",
        r.graph.n,
        r.graph.edges,
        r.graph.components,
        describe_census(&r.graph.census)
    );
    println!("{:<16}{:<16}recognized", "property", "predicted");
    let p = &r.predicted;
    let g = &r.recognized;
    let rows: [(&str, Prediction, bool); 9] = [
        ("connected", p.connected, g.connected),
        ("path_graph", p.path_graph, g.path_graph),
        ("planar", p.planar, g.planar),
        ("outerplanar", p.outerplanar, g.outerplanar),
        ("split", p.split, g.split),
        ("threshold", p.threshold, g.threshold),
        ("cograph", p.cograph, g.cograph),
        ("cactus", p.cactus, g.cactus),
        ("unicyclic", p.unicyclic, g.unicyclic),
    ];
    for (name, pred, seen) in rows {
        println!("{name:<16}{:<16}{seen}", pred.to_string());
    }
    println!("degree formula  {}", r.degree_formula);
    if let Some(ok) = r.component_structure {
        println!(
            "components      {}",
            if ok {
                "paths/even cycles, uniform"
            } else {
                "irregular"
            }
        );
    }
    print_mismatches(r.mismatches.iter().map(|m| {
        format!(
            "{}: predicted {}, recognized {}",
            m.property, m.predicted, m.recognized
        )
    }));
}

fn print_mismatches(lines: impl Iterator<Item = String>) {
    let lines: Vec<String> = lines.collect();
    if lines.is_empty() {
        println!("mismatches      none");
    } else {
        println!("mismatches      {}", lines.len());
        for line in lines {
            println!("  {line}");
        }
    }
}

fn print_sweep(s: &SweepSummary) {
    println!(
        "rings checked       {} ({} products, {} local)",
        s.rings_checked, s.product_rings, s.local_rings
    );
    println!("properties checked  {}", s.properties_checked);
    println!("vertices checked    {}", s.vertices_checked);
    print_mismatches(s.rings.iter().flat_map(|r| {
        r.mismatches.iter().map(move |m| {
            format!(
                "{}: {} predicted {}, recognized {}",
                r.spec, m.property, m.predicted, m.recognized
            )
        })
    }));
}

fn print_selftest(s: &SelftestSummary) {
    println!(
        "graphs              {} exhaustive (n = {}), {} random (n = {}, seed {})",
        s.exhaustive_graphs,
        s.config.exhaustive_n,
        s.random_graphs,
        s.config.random_n,
        s.config.seed
    );
    for c in &s.classes {
        println!(
            "  {:<12} {:>7} members, {} disagreements",
            c.class, c.members, c.disagreements
        );
    }
    println!("invalid witnesses   {}", s.invalid_witnesses);
    print_mismatches(s.disagreements.iter().map(|d| {
        format!(
            "{} on {}: fast {}, oracle {}",
            d.class, d.source, d.fast, d.oracle
        )
    }));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let code = |c: ExitCode| format!("{c:?}");
        assert_eq!(code(verdict(true)), code(ExitCode::SUCCESS));
        assert_eq!(code(verdict(false)), code(ExitCode::from(2)));
    }

    #[test]
    fn census_descriptions() {
        let ring = FiniteRing::parse("Z3[x]/(x^2)").unwrap();
        let census = build_idempotent_graph(&ring).census();
        assert_eq!(describe_census(&census), "P3 + C6");
    }
}
