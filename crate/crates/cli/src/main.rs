mod registry;

use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use walkbij::arcdiag::DiagramKind;
use walkbij::composite::{conjecture_table, vacillating_table};
use walkbij::schnyder::{narayana, narayana2, narayana_tuple};
use walkbij::series::{gessel_even, gessel_odd};
use walkbij::verify::{run_suite, Suite, VerificationReport};
use walkbij::walks::{count_dp_from, enumerate_from, Domain, EndPredicate, Point, StepModel};
use walkbij::young::count_syt;

use registry::{Bijection, MapError, MapOptions};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "walkbij",
    version,
    about = "Lattice walk bijections, counts and verification suites"
)]
struct Cli {
    /// Emit one JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count walks by dynamic programming (or by enumeration).
    Count(WalkArgs),
    /// List walks, one per line.
    Enumerate(WalkArgs),
    /// Apply a named bijection to a JSON object on stdin or to `--text`.
    Map(MapArgs),
    /// Run verification suites.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Thick-diagonal counts of hesitating octant walks against Baxter numbers.
    Conjecture {
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
    /// Vacillating axis-walk and excursion counts.
    Vacillating {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Determinant series against tableau counts.
    Gessel {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        order: usize,
        /// Use the odd-height determinant (at most 2k+1 rows).
        #[arg(long)]
        odd: bool,
    },
    /// Narayana tables and non-crossing tuple counts.
    Narayana {
        #[arg(long)]
        n: usize,
        /// Comma-separated peak counts, bottom path first.
        #[arg(long, value_delimiter = ',')]
        peaks: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Simple,
    Hesitating,
    Vacillating,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Quadrant,
    Octant,
    TiltedQuadrant,
    WeylC,
    WeylD,
    StrictWeylD,
    FullSpace,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dp,
    Enumerate,
}

#[derive(Args)]
struct WalkArgs {
    #[arg(long, value_enum, default_value = "simple")]
    model: ModelArg,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, value_enum)]
    domain: DomainArg,
    #[arg(long)]
    length: usize,
    /// origin, x-axis, diagonal, thick-diagonal, anywhere, or a point such as (1,0).
    #[arg(long, default_value = "anywhere", value_parser = parse_end)]
    end: EndPredicate,
    /// Starting point such as (1/2,1/2); the origin by default.
    #[arg(long, value_parser = parse_point)]
    start: Option<Point>,
    /// Coordinate bound for the DP, relative to the start; the length by default.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value = "dp")]
    method: Method,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long, value_enum)]
    bijection: Bijection,
    #[arg(long)]
    inverse: bool,
    /// Print every intermediate stage.
    #[arg(long)]
    trace: bool,
    /// Text encoding of the input instead of JSON on stdin.
    #[arg(long)]
    text: Option<String>,
    /// Marked steps or down-steps (1-based), for marked inputs given as text.
    #[arg(long, value_delimiter = ',')]
    marks: Vec<usize>,
    /// Open-arc weights as gap:weight pairs, for weighted excursions given as text.
    #[arg(long, value_delimiter = ',', value_parser = parse_weight)]
    weights: Vec<(usize, usize)>,
    /// Dimension of walks given as text.
    #[arg(long)]
    dim: Option<usize>,
    /// Chamber rank for diagram and tableau maps.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Matching,
    Partition,
}

fn parse_point(s: &str) -> Result<Point, String> {
    Point::parse(s).map_err(|e| e.to_string())
}

fn parse_end(s: &str) -> Result<EndPredicate, String> {
    Ok(match s {
        "origin" => EndPredicate::Origin,
        "x-axis" => EndPredicate::XAxis,
        "diagonal" => EndPredicate::Diagonal,
        "thick-diagonal" => EndPredicate::ThickDiagonal,
        "anywhere" => EndPredicate::Anywhere,
        _ => EndPredicate::Fixed(parse_point(s)?),
    })
}

fn parse_weight(s: &str) -> Result<(usize, usize), String> {
    let (g, w) = s
        .split_once(':')
        .ok_or_else(|| format!("expected gap:weight, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(g)?, num(w)?))
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn domain_violation(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("domain violation: {msg}");
    ExitCode::from(EXIT_DOMAIN)
}

fn walk_setup(a: &WalkArgs) -> Result<(StepModel, Domain, Point), String> {
    let model = match a.model {
        ModelArg::Simple => StepModel::simple(a.dim),
        ModelArg::Hesitating => StepModel::hesitating(a.dim),
        ModelArg::Vacillating => StepModel::vacillating(a.dim),
    };
    let domain = match a.domain {
        DomainArg::Quadrant => Domain::Quadrant,
        DomainArg::Octant => Domain::Octant,
        DomainArg::TiltedQuadrant => Domain::TiltedQuadrant,
        DomainArg::WeylC => Domain::WeylC(a.dim),
        DomainArg::WeylD => Domain::WeylD(a.dim),
        DomainArg::StrictWeylD => Domain::StrictWeylD(a.dim),
        DomainArg::FullSpace => Domain::FullSpace,
    };
    if matches!(domain, Domain::Quadrant | Domain::Octant | Domain::TiltedQuadrant) && a.dim != 2 {
        return Err(format!("domain {domain} is 2-dimensional, got --dim {}", a.dim));
    }
    if a.dim == 0 {
        return Err("--dim must be positive".into());
    }
    let start = a.start.clone().unwrap_or_else(|| Point::origin(a.dim));
    if start.dim() != a.dim {
        return Err(format!("start {start} does not have dimension {}", a.dim));
    }
    if let EndPredicate::Fixed(p) = &a.end {
        if p.dim() != a.dim {
            return Err(format!("end point {p} does not have dimension {}", a.dim));
        }
    }
    Ok((model, domain, start))
}

fn cmd_count(a: &WalkArgs, as_json: bool) -> ExitCode {
    let (model, domain, start) = match walk_setup(a) {
        Ok(x) => x,
        Err(e) => return usage(e),
    };
    if !domain.contains(&start) {
        return domain_violation(format!("start {start} lies outside {domain}"));
    }
    let count = match a.method {
        Method::Dp => count_dp_from(model, &domain, &start, a.length, &a.end, a.bound.unwrap_or(a.length)),
        Method::Enumerate => enumerate_from(model, &domain, &start, a.length, &a.end).len().into(),
    };
    if as_json {
        print_json(&json!({"count": count.to_string()}));
    } else {
        println!("{count}");
    }
    ExitCode::SUCCESS
}

fn cmd_enumerate(a: &WalkArgs, as_json: bool) -> ExitCode {
    let (model, domain, start) = match walk_setup(a) {
        Ok(x) => x,
        Err(e) => return usage(e),
    };
    if !domain.contains(&start) {
        return domain_violation(format!("start {start} lies outside {domain}"));
    }
    for w in enumerate_from(model, &domain, &start, a.length, &a.end) {
        if as_json {
            print_json(&w);
        } else {
            println!(
                "{}",
                if w.is_empty() {
                    "(empty)".to_string()
                } else {
                    w.to_text()
                }
            );
        }
    }
    ExitCode::SUCCESS
}

fn cmd_map(a: &MapArgs, as_json: bool) -> ExitCode {
    let opts = MapOptions {
        dim: a.dim,
        k: a.k,
        marks: a.marks.clone(),
        weights: a.weights.clone(),
        kind: a.kind.map(|k| match k {
            KindArg::Matching => DiagramKind::Matching,
            KindArg::Partition => DiagramKind::Partition,
        }),
    };
    let input = match &a.text {
        Some(t) => a.bijection.text_input(a.inverse, t, &opts),
        None => {
            let mut buf = String::new();
            match io::stdin().read_to_string(&mut buf) {
                Ok(_) => serde_json::from_str::<Value>(&buf).map_err(|e| MapError::Input(format!("stdin: {e}"))),
                Err(e) => Err(MapError::Input(format!("stdin: {e}"))),
            }
        }
    };
    let stages = match input.and_then(|v| a.bijection.apply(a.inverse, v, &opts)) {
        Ok(s) => s,
        Err(MapError::Input(e)) => return usage(e),
        Err(MapError::Domain(e)) => return domain_violation(e),
    };
    let result = stages.last().map(|s| s.1.clone()).unwrap_or(Value::Null);
    let out = if a.trace {
        let trace: Vec<Value> = stages
            .into_iter()
            .map(|(stage, value)| json!({"stage": stage, "value": value}))
            .collect();
        json!({"trace": trace, "result": result})
    } else {
        result
    };
    if as_json {
        print_json(&out);
    } else {
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    }
    ExitCode::SUCCESS
}

fn thread_count() -> usize {
    std::env::var("WALKBIJ_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| t > 0)
        .unwrap_or(1)
}

fn run_suites(suites: &[Suite], max_n: Option<usize>) -> Vec<VerificationReport> {
    let threads = thread_count().min(suites.len().max(1));
    if threads <= 1 {
        return suites.iter().map(|&s| run_suite(s, max_n)).collect();
    }
    let mut slots: Vec<Option<VerificationReport>> = vec![None; suites.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    (t..suites.len())
                        .step_by(threads)
                        .map(|i| (i, run_suite(suites[i], max_n)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("suite thread panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every suite ran")).collect()
}

fn cmd_verify(suite: &str, max_n: Option<usize>, as_json: bool) -> ExitCode {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match suite.parse() {
            Ok(s) => vec![s],
            Err(e) => return usage(e),
        }
    };
    let reports = run_suites(&suites, max_n);
    let mut ok = true;
    for r in &reports {
        ok &= r.passed();
        if as_json {
            print_json(r);
            continue;
        }
        println!(
            "{} (max-n {}): {} [{} checks]",
            r.suite,
            r.max_n,
            r.status,
            r.checks.len()
        );
        for c in r.failures() {
            println!(
                "  FAIL {} [{}] {}: expected {}, got {}",
                c.description, c.anchor, c.parameters, c.expected, c.actual
            );
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn print_table(header: &[&str], rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([header[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        println!("{}", parts.join("  ").trim_end());
    };
    line(header.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn cmd_conjecture(max_n: usize, as_json: bool) -> ExitCode {
    if max_n < 1 {
        return usage("--max-n must be at least 1");
    }
    let rows = conjecture_table(max_n);
    if as_json {
        rows.iter().for_each(print_json);
    } else {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.u.to_string(),
                    r.v.to_string(),
                    r.sum.to_string(),
                    r.baxter.to_string(),
                    yes_no(r.equal),
                ]
            })
            .collect();
        print_table(&["n", "u_n", "v_n", "u_n+v_n", "B_{n+1}", "equal"], &cells);
        let bad: Vec<String> = rows.iter().filter(|r| !r.equal).map(|r| r.n.to_string()).collect();
        if bad.is_empty() {
            println!("u_n + v_n = B_(n+1) for all n <= {max_n}");
        } else {
            println!("mismatch at n = {}", bad.join(", "));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_vacillating(max_n: usize, as_json: bool) -> ExitCode {
    if max_n < 1 {
        return usage("--max-n must be at least 1");
    }
    let rows = vacillating_table(max_n);
    let roundtrip = run_suite(Suite::Vacillating, Some(max_n.min(4)));
    let ok = rows.iter().all(|r| r.twice && r.formula) && roundtrip.passed();
    if as_json {
        rows.iter().for_each(print_json);
        print_json(&roundtrip);
    } else {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.octant_axis_walks.to_string(),
                    r.quadrant_excursions.to_string(),
                    r.binomial_baxter_sum.to_string(),
                    yes_no(r.twice),
                    yes_no(r.formula),
                ]
            })
            .collect();
        print_table(
            &[
                "n",
                "axis-walks",
                "excursions",
                "sum C(n-1,k)B_(k+1)",
                "twice",
                "formula",
            ],
            &cells,
        );
        println!(
            "decomposition roundtrip (n <= {}): {}",
            roundtrip.max_n, roundtrip.status
        );
        for c in roundtrip.failures() {
            println!(
                "  FAIL {} {}: expected {}, got {}",
                c.description, c.parameters, c.expected, c.actual
            );
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_gessel(k: usize, order: usize, odd: bool, as_json: bool) -> ExitCode {
    if k == 0 {
        return usage("--k must be positive");
    }
    let (det, rows) = if odd {
        (gessel_odd(k, order), 2 * k + 1)
    } else {
        (gessel_even(k, order), 2 * k)
    };
    let mut ok = true;
    let mut cells = Vec::new();
    for (n, d) in det.into_iter().enumerate() {
        let e = count_syt(n, rows);
        ok &= d == e;
        if as_json {
            print_json(&json!({"n": n, "determinant": d.to_string(), "enumeration": e.to_string(), "pass": d == e}));
        } else {
            cells.push(vec![n.to_string(), d.to_string(), e.to_string()]);
        }
    }
    let status = if ok { "PASS" } else { "FAIL" };
    if as_json {
        print_json(&json!({"k": k, "order": order, "odd": odd, "status": status}));
    } else {
        print_table(&["n", "determinant", "enumeration"], &cells);
        println!("{status}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_narayana(n: usize, peaks: &[usize], as_json: bool) -> ExitCode {
    if !peaks.is_empty() {
        let v = narayana_tuple(n, peaks);
        if as_json {
            print_json(&json!({"n": n, "peaks": peaks, "count": v.to_string()}));
        } else {
            println!("{v}");
        }
        return ExitCode::SUCCESS;
    }
    if as_json {
        for m in 1..=n {
            for p in 1..=m {
                print_json(&json!({"n": m, "peaks": [p], "count": narayana(m, p).to_string()}));
            }
        }
        for p in 1..=n {
            for q in 1..=n {
                print_json(&json!({"n": n, "peaks": [p, q], "count": narayana2(n, p, q).to_string()}));
            }
        }
        return ExitCode::SUCCESS;
    }
    let header: Vec<String> = std::iter::once("n\\p".to_string())
        .chain((1..=n).map(|p| p.to_string()))
        .collect();
    let cells: Vec<Vec<String>> = (1..=n)
        .map(|m| {
            std::iter::once(m.to_string())
                .chain((1..=n).map(|p| {
                    if p <= m {
                        narayana(m, p).to_string()
                    } else {
                        String::new()
                    }
                }))
                .collect()
        })
        .collect();
    println!("paths of half-length n with p peaks");
    print_table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &cells);
    println!();
    println!("non-crossing pairs of half-length {n}, lower with p peaks, upper with q peaks");
    let header: Vec<String> = std::iter::once("p\\q".to_string())
        .chain((1..=n).map(|q| q.to_string()))
        .collect();
    let cells: Vec<Vec<String>> = (1..=n)
        .map(|p| {
            std::iter::once(p.to_string())
                .chain((1..=n).map(|q| narayana2(n, p, q).to_string()))
                .collect()
        })
        .collect();
    print_table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &cells);
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let j = cli.json;
    match &cli.command {
        Command::Count(a) => cmd_count(a, j),
        Command::Enumerate(a) => cmd_enumerate(a, j),
        Command::Map(a) => cmd_map(a, j),
        Command::Verify { suite, max_n } => cmd_verify(suite, *max_n, j),
        Command::Conjecture { max_n } => cmd_conjecture(*max_n, j),
        Command::Vacillating { max_n } => cmd_vacillating(*max_n, j),
        Command::Gessel { k, order, odd } => cmd_gessel(*k, *order, *odd, j),
        Command::Narayana { n, peaks } => cmd_narayana(*n, peaks, j),
    }
}
