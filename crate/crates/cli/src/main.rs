//! Command-line front end: instance I/O, profile and earliest-arrival
//! queries, gadget and random instance generation, and a wall-clock
//! benchmark of the profile sweep.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use itg_core::{error::Error, graph::Time, io as tgio, profile, reductions, routing};

#[derive(Parser)]
#[command(name = "itg", version, about = "Interval temporal graph queries, generators and benchmarks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the source-target profile triples and the fastest duration.
    ///
    /// The instance must be undirected with all delays zero. One line
    /// `alpha beta slope` per triple, then `fastest <duration> depart
    /// <time>`, or `unreachable` for an empty profile.
    Profile {
        /// Instance in the text format (`tg` header)
        file: PathBuf,
        #[arg(long)]
        source: u32,
        #[arg(long)]
        target: u32,
    },
    /// Print per-vertex earliest arrival times for a departure bound.
    ///
    /// One line `<v> <arrival>` or `<v> unreachable` per vertex.
    Foremost {
        /// Instance in the text format (`tg` header)
        file: PathBuf,
        #[arg(long)]
        source: u32,
        #[arg(long)]
        depart: Time,
    },
    /// Generate instances: triangle-reduction gadgets or random graphs.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Time the profile sweep across instance sizes; CSV on stdout.
    ///
    /// For each size a seeded random zero-delay undirected instance with
    /// `records` presences on `records/10` vertices is generated and the
    /// 1-2 profile is computed. The exact oracle column is only filled
    /// where the time-expanded grid fits its capacity bound.
    Bench {
        /// Comma-separated record counts, e.g. 10000,100000,1000000
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Timed runs per size; the median is reported
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Negative-triangle gadget from a weighted edge list: fastest
    /// duration below 2T iff the input has a negative triangle.
    Thm1 {
        /// Static graph: `graph <n> <m>` header, then `u v w` lines
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Delay-one triangle gadget: fastest duration 4 iff a triangle.
    Thm2 {
        /// Static graph: `graph <n> <m>` header, then `u v` lines
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Directed zero-delay triangle gadget: duration 3 iff a triangle.
    Thm3 {
        /// Static graph: `graph <n> <m>` header, then `u v` lines
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Shortest-path gadget: some path with at most n+4 edges iff a
    /// triangle.
    Sec5 {
        /// Static graph: `graph <n> <m>` header, then `u v` lines
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Seeded random undirected instance.
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        records: usize,
        #[arg(long, default_value_t = 100)]
        time_max: Time,
        #[arg(long)]
        zero_delay: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("itg: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Usage(_) => 2,
        Error::Parse { .. } => 3,
        Error::Unsupported(_) => 4,
        Error::Capacity(_) => 5,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Profile { file, source, target } => cmd_profile(&file, source, target),
        Cmd::Foremost { file, source, depart } => cmd_foremost(&file, source, depart),
        Cmd::Gen(gen) => cmd_gen(gen),
        Cmd::Bench { sizes, seed, runs, out } => cmd_bench(&sizes, seed, runs, out.as_deref()),
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), Error> {
    std::fs::write(path, content)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn cmd_profile(file: &Path, source: u32, target: u32) -> Result<(), Error> {
    if source == target {
        return Err(Error::Usage("source and target must differ".into()));
    }
    let g = tgio::parse(&read_file(file)?)?;
    let pr = profile::profile_st(&g, source, target)?;
    let mut out = String::new();
    for t in pr.triples() {
        writeln!(out, "{} {} {}", t.alpha, t.beta, t.slope).unwrap();
    }
    match profile::fastest_from_profile(&pr)? {
        Some(f) => writeln!(out, "fastest {} depart {}", f.duration, f.depart).unwrap(),
        None => writeln!(out, "unreachable").unwrap(),
    }
    print!("{out}");
    Ok(())
}

fn cmd_foremost(file: &Path, source: u32, depart: Time) -> Result<(), Error> {
    let g = tgio::parse(&read_file(file)?)?;
    let ea = routing::earliest_arrival(&g, source, depart)?;
    let mut out = String::new();
    for v in 1..=g.n() {
        match ea.arrival(v) {
            Some(a) => writeln!(out, "{v} {a}").unwrap(),
            None => writeln!(out, "{v} unreachable").unwrap(),
        }
    }
    print!("{out}");
    Ok(())
}

/// Static graph input: header `graph <n> <m>`, then one `u v` (or
/// `u v w` when `weighted`) line per edge. `#` comments and blank lines
/// are ignored.
fn parse_static(text: &str, weighted: bool) -> Result<(u32, Vec<(u32, u32, i64)>), Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "graph" {
        return Err(Error::Parse {
            line: line_no,
            msg: "expected `graph <n> <m>`".into(),
        });
    }
    let n: u32 = fields[1].parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: "bad vertex count".into(),
    })?;
    let m: usize = fields[2].parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: "bad edge count".into(),
    })?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let bad = |msg: String| Error::Parse { line: line_no, msg };
        let nums: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse::<i64>).collect();
        let nums = nums.map_err(|_| bad("expected integers".into()))?;
        let expect = if weighted { 3 } else { 2 };
        if nums.len() != expect {
            return Err(bad(format!("expected {expect} fields, found {}", nums.len())));
        }
        let u = u32::try_from(nums[0]).map_err(|_| bad("bad vertex".into()))?;
        let v = u32::try_from(nums[1]).map_err(|_| bad("bad vertex".into()))?;
        let w = if weighted { nums[2] } else { 0 };
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok((n, edges))
}

fn candidates_field(candidates: &[Time]) -> String {
    candidates
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_gen(gen: GenCmd) -> Result<(), Error> {
    match gen {
        GenCmd::Thm1 { input, out } => {
            let (n, edges) = parse_static(&read_file(&input)?, true)?;
            let g = reductions::WeightedGraph::new(n, edges)?;
            let (inst, t_bound) = reductions::gen_negative_triangle_instance(&g)?;
            let mut text = format!(
                "# s={} t={} T={} candidates={}\n",
                inst.source,
                inst.target,
                t_bound,
                candidates_field(&inst.candidates)
            );
            text.push_str(&tgio::serialize(&inst.graph));
            write_file(&out, &text)
        }
        GenCmd::Thm2 { input, out } => {
            let (n, edges) = parse_static(&read_file(&input)?, false)?;
            let g = reductions::SimpleGraph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))?;
            let (inst, _) = reductions::gen_triangle_delay_one(&g)?;
            let mut text = format!(
                "# s={} t={} target_duration=4 candidates={}\n",
                inst.source,
                inst.target,
                candidates_field(&inst.candidates)
            );
            text.push_str(&tgio::serialize(&inst.graph));
            write_file(&out, &text)
        }
        GenCmd::Thm3 { input, out } => {
            let (n, edges) = parse_static(&read_file(&input)?, false)?;
            let g = reductions::SimpleGraph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))?;
            let inst = reductions::gen_triangle_directed_zero(&g)?;
            let mut text = format!(
                "# s={} t={} target_duration=3 candidates={}\n",
                inst.source,
                inst.target,
                candidates_field(&inst.candidates)
            );
            text.push_str(&tgio::serialize(&inst.graph));
            write_file(&out, &text)
        }
        GenCmd::Sec5 { input, out } => {
            let (n, edges) = parse_static(&read_file(&input)?, false)?;
            let g = reductions::SimpleGraph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))?;
            let (inst, threshold) = reductions::gen_shortest_instance(&g)?;
            let mut text = format!(
                "# s={} t={} threshold={threshold}\n",
                inst.source, inst.target
            );
            text.push_str(&tgio::serialize(&inst.graph));
            write_file(&out, &text)
        }
        GenCmd::Random { n, records, time_max, zero_delay, seed, out } => {
            let g = reductions::gen_random_temporal(n, records, time_max, zero_delay, seed)?;
            write_file(&out, &tgio::serialize(&g))
        }
    }
}

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

fn cmd_bench(sizes: &[usize], seed: u64, runs: usize, out: Option<&Path>) -> Result<(), Error> {
    if runs == 0 {
        return Err(Error::Usage("--runs must be at least 1".into()));
    }
    let mut csv = String::from("label,n,records,M,t_profile_ns,t_oracle_ns,duration\n");
    for (i, &records) in sizes.iter().enumerate() {
        let n = (records / 10).max(2) as u32;
        let time_max = 2 * records.max(1) as Time;
        let g = reductions::gen_random_temporal(n, records, time_max, true, seed.wrapping_add(i as u64))?;
        let (s, t) = (1, 2);

        let mut profile_times = Vec::with_capacity(runs);
        let mut pr = profile::Profile::empty();
        for _ in 0..runs {
            let start = Instant::now();
            pr = profile::profile_st(&g, s, t)?;
            profile_times.push(start.elapsed().as_nanos());
        }
        let t_profile = median(profile_times);

        let mut oracle_times = Vec::with_capacity(runs);
        for _ in 0..runs {
            let start = Instant::now();
            match routing::oracle_time_expanded(&g, s, t) {
                Ok(_) => oracle_times.push(start.elapsed().as_nanos()),
                Err(Error::Capacity(_)) => break,
                Err(e) => return Err(e),
            }
        }
        let t_oracle = if oracle_times.len() == runs {
            median(oracle_times).to_string()
        } else {
            String::new()
        };

        let duration = match profile::fastest_from_profile(&pr)? {
            Some(f) => f.duration.to_string(),
            None => String::new(),
        };
        writeln!(
            csv,
            "random-{records}-seed{seed},{n},{records},{},{t_profile},{t_oracle},{duration}",
            g.temporal_edge_count()
        )
        .unwrap();
    }
    match out {
        Some(path) => write_file(path, &csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}
