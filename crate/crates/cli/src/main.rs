use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::process::ExitCode;

use alphaspec::census::{run_census, CensusOptions, CensusOutput, Strategy};
use alphaspec::coeffs::decode_invariants;
use alphaspec::poly::{bipoly_eval_alpha, parse_bipoly, parse_rational, render_rational};
use alphaspec::verify::{check_identities, Identity};
use alphaspec::{alpha_charpoly, parse_graph6, FamilySpec, Graph};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

#[derive(Parser)]
#[command(name = "alphaspec", version, about = "Exact A-alpha characteristic polynomials of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Hash,
    SortMerge,
}

#[derive(Subcommand)]
enum Command {
    /// Print the A-alpha characteristic polynomial of one graph.
    Charpoly {
        /// Graph in graph6 format.
        graph6: Option<String>,
        /// Family spec such as `K:3`, `K:2,3` or `H:2,3,2`.
        #[arg(long, conflicts_with = "graph6")]
        family: Option<String>,
        /// Evaluate at this alpha (`p/q` or an exact decimal).
        #[arg(long, value_parser = parse_alpha)]
        at: Option<BigRational>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Group graph6 records by A-alpha polynomial and report the census row.
    Census {
        /// graph6 file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Worker threads; defaults to one per core.
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        threads: Option<u16>,
        /// Also print every cospectral family.
        #[arg(long)]
        families: bool,
        #[arg(long, value_enum, default_value = "hash")]
        strategy: StrategyArg,
        /// Report progress on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Recover n, m, degree power sums and triangles from the polynomial.
    Decode {
        /// graph6 file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        /// Decode this polynomial text instead of graphs.
        #[arg(long, conflicts_with = "input")]
        poly: Option<String>,
    },
    /// Check the coefficient identities for every graph in a stream.
    Verify {
        /// graph6 file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the graph6 string of a family member.
    Family { spec: String },
}

fn parse_alpha(s: &str) -> Result<BigRational, String> {
    parse_rational(s)
}

fn open(input: &str) -> Result<Box<dyn BufRead + Send>> {
    if input == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(input).with_context(|| format!("cannot open {input}"))?;
    Ok(Box::new(BufReader::with_capacity(1 << 20, f)))
}

fn graph_lines(input: &str) -> Result<Vec<(usize, String, Graph)>> {
    let mut out = Vec::new();
    for (i, line) in open(input)?.lines().enumerate() {
        let line = line?;
        let rec = line.trim();
        if rec.is_empty() {
            continue;
        }
        let g = parse_graph6(rec.as_bytes()).with_context(|| format!("line {}", i + 1))?;
        out.push((i + 1, rec.to_string(), g));
    }
    Ok(out)
}

fn family_graph(spec: &str) -> Result<Graph> {
    let spec: FamilySpec = spec.parse()?;
    Ok(spec.build()?)
}

fn charpoly(graph6: Option<String>, family: Option<String>, at: Option<BigRational>, format: Format) -> Result<()> {
    let (label, g) = match (graph6, family) {
        (Some(s), None) => {
            let g = parse_graph6(s.trim().as_bytes()).map_err(|e| anyhow!("{s}: {e}"))?;
            (s, g)
        }
        (None, Some(f)) => {
            let g = family_graph(&f)?;
            (f, g)
        }
        _ => bail!("give a graph6 string or --family"),
    };
    let p = alpha_charpoly(&g)?;
    let evaluated = at.as_ref().map(|a| render_rational(&bipoly_eval_alpha(&p, a), "x"));
    match format {
        Format::Json => {
            let mut v = json!({ "graph": label, "n": g.n(), "polynomial": p.to_string() });
            if let (Some(a), Some(e)) = (&at, &evaluated) {
                v["alpha"] = json!(a.to_string());
                v["evaluated"] = json!(e);
            }
            println!("{v}");
        }
        _ => println!("{}", evaluated.unwrap_or_else(|| p.to_string())),
    }
    Ok(())
}

fn families_json(out: &CensusOutput) -> serde_json::Value {
    out.families
        .iter()
        .map(|f| json!({ "polynomial": f.poly.to_string(), "members": f.members }))
        .collect()
}

fn census(input: &str, format: Format, threads: Option<u16>, families: bool, strategy: StrategyArg, progress: bool) -> Result<()> {
    let opts = CensusOptions {
        threads: threads.map_or(0, usize::from),
        strategy: match strategy {
            StrategyArg::Hash => Strategy::HashTable,
            StrategyArg::SortMerge => Strategy::SortMerge,
        },
        progress,
        ..Default::default()
    };
    let out = run_census(open(input)?, &opts)?;
    let r = &out.report;
    let (num, den) = r.fraction_with_mate();
    match format {
        Format::Json => {
            let mut v = json!({
                "n": r.n,
                "graphs": r.graphs,
                "distinct_polys": r.distinct_polys,
                "with_mate": r.with_mate,
                "fraction_with_mate": format!("{num}/{den}"),
                "max_family": r.max_family,
            });
            if families {
                v["families"] = families_json(&out);
            }
            println!("{v}");
        }
        Format::Tsv => {
            println!("{}", r.tsv_row());
            if families {
                println!("{}", families_json(&out));
            }
        }
        Format::Text => {
            println!("n               {}", r.n);
            println!("graphs          {}", r.graphs);
            println!("distinct polys  {}", r.distinct_polys);
            println!("with mate       {} ({num}/{den} = {})", r.with_mate, r.fraction_decimal(9));
            println!("max family      {}", r.max_family);
            if families {
                for f in &out.families {
                    println!("{}\t{}", f.members.join(" "), f.poly);
                }
            }
        }
    }
    Ok(())
}

fn decode(input: &str, poly: Option<String>) -> Result<()> {
    let stdout = io::stdout();
    let mut w = stdout.lock();
    if let Some(text) = poly {
        let p = parse_bipoly(&text).map_err(|e| anyhow!("cannot parse polynomial: {e}"))?;
        writeln!(w, "{}", serde_json::to_string(&decode_invariants(&p)?)?)?;
        return Ok(());
    }
    for (_, _, g) in graph_lines(input)? {
        let d = decode_invariants(&alpha_charpoly(&g)?)?;
        writeln!(w, "{}", serde_json::to_string(&d)?)?;
    }
    Ok(())
}

/// Returns whether every identity held.
fn verify(input: &str, format: Format) -> Result<bool> {
    let order = [
        Identity::FirstFour,
        Identity::LoopWeight,
        Identity::Specialisations,
        Identity::TraceMoments,
        Identity::BipartiteLq,
    ];
    let mut passed = [0u64; 5];
    let mut failed = [0u64; 5];
    let mut failures = Vec::new();
    let mut graphs = 0u64;
    for (line, g6, g) in graph_lines(input)? {
        graphs += 1;
        let report = check_identities(&g)?;
        for (id, ok) in &report.results {
            let k = order.iter().position(|o| o == id).expect("known identity");
            if *ok {
                passed[k] += 1;
            } else {
                failed[k] += 1;
                failures.push(json!({ "line": line, "graph": g6, "identity": id }));
            }
        }
    }
    let all_ok = failures.is_empty();
    match format {
        Format::Json => {
            let checks: Vec<_> = order
                .iter()
                .enumerate()
                .map(|(k, id)| json!({ "identity": id, "passed": passed[k], "failed": failed[k] }))
                .collect();
            println!("{}", json!({ "graphs": graphs, "checks": checks, "failures": failures }));
        }
        _ => {
            let names = ["first_four", "loop_weight", "specialisations", "trace_moments", "bipartite_lq"];
            println!("graphs\t{graphs}");
            for k in 0..order.len() {
                println!("{}\t{} passed\t{} failed", names[k], passed[k], failed[k]);
            }
            for f in &failures {
                eprintln!("FAIL {f}");
            }
        }
    }
    Ok(all_ok)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Charpoly { graph6, family, at, format } => charpoly(graph6, family, at, format)?,
        Command::Census { input, format, threads, families, strategy, progress } => {
            census(&input, format, threads, families, strategy, progress)?
        }
        Command::Decode { input, poly } => decode(&input, poly)?,
        Command::Verify { input, format } => {
            if !verify(&input, format)? {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Family { spec } => {
            let g = family_graph(&spec)?;
            println!("{}", String::from_utf8(g.to_graph6()).expect("graph6 is ASCII"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
