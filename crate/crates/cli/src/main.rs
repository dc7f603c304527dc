use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use deltacat::dyck::{cat_poly, cat_rise, enumerate_decorations, enumerate_paths, CatMethod, DecoratedPath, MultiPoly};
use deltacat::macdonald::htilde::try_htilde_table;
use deltacat::macdonald::identities::cat_rise_coefficient;
use deltacat::symfunc::{Composition, Partition};
use deltacat::verify::{prepare_tables, Suite, VerifyOptions};
use deltacat::Error;

#[derive(Parser)]
#[command(name = "deltacat", version, about = "Four-variable q,t-Catalan polynomials and their Macdonald-operator side")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory holding cached H̃ tables.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Decorated,
    Product,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Main,
    Comb,
    Sf,
    Macdonald,
}

#[derive(Subcommand)]
enum Command {
    /// List Dyck paths of size n with their statistics.
    Paths {
        #[arg(long)]
        n: usize,
        /// Also list every decoration.
        #[arg(long)]
        decorated: bool,
    },
    /// The polynomial Cat_n(q,t,z,w), or its value at a point.
    Cat {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Decorated)]
        method: Method,
        /// Evaluation point such as q=1,t=1,z=0,w=0.
        #[arg(long, value_parser = parse_point)]
        eval: Option<[i64; 4]>,
    },
    /// Generating polynomial of decorated paths by rise-touch composition.
    Catrise {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        ell: i64,
    },
    /// Hook Schur coefficient of Δ_{h_ℓ}∇C_α.
    Coeff {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        ell: i64,
    },
    /// Schur expansion of H̃_μ.
    Htilde {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<usize>,
        /// Omit per-case timings so reports are reproducible byte for byte.
        #[arg(long)]
        no_timings: bool,
    },
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    Composition::parse(s).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_point(s: &str) -> Result<[i64; 4], String> {
    let mut point = [None; 4];
    for item in s.split(',') {
        let (name, value) = item.split_once('=').ok_or_else(|| format!("expected name=value, got '{item}'"))?;
        let slot = match name.trim() {
            "q" => 0,
            "t" => 1,
            "z" => 2,
            "w" => 3,
            other => return Err(format!("unknown variable '{other}'")),
        };
        point[slot] = Some(value.trim().parse::<i64>().map_err(|_| format!("bad value '{value}'"))?);
    }
    let mut out = [0; 4];
    for (i, v) in point.iter().enumerate() {
        out[i] = v.ok_or_else(|| format!("missing value for {}", ["q", "t", "z", "w"][i]))?;
    }
    Ok(out)
}

fn csv_out(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn poly_out(p: &MultiPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(p).expect("serializable")),
        Format::Csv => csv_out(
            &["q", "t", "z", "w", "coeff"],
            p.terms().map(|(e, c)| e.iter().map(|x| x.to_string()).chain([c.to_string()]).collect()).collect(),
        ),
    }
}

fn paths_out(n: usize, decorated: bool, format: Format) -> String {
    let mut rows = Vec::new();
    for path in enumerate_paths(n) {
        let items: Vec<DecoratedPath> = if decorated {
            enumerate_decorations(&path).collect()
        } else {
            vec![DecoratedPath::undecorated(path.clone())]
        };
        for dp in items {
            let s = dp.stats();
            rows.push((dp.path.to_string(), dp.decorated_rows(), s));
        }
    }
    match format {
        Format::Text => rows
            .iter()
            .map(|(p, d, s)| {
                let deco = if decorated { format!(" decorated={d:?}") } else { String::new() };
                format!("{p}{deco} area={} dinv={} b={:?}\n", s.area_circ, s.dinv_circ, s.b_seq)
            })
            .collect(),
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(p, d, s)| {
                    json!({"path": p, "decorated": d, "area": s.area_circ, "dinv": s.dinv_circ, "b": s.b_seq})
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        }
        Format::Csv => csv_out(
            &["path", "decorated", "area", "dinv"],
            rows.iter()
                .map(|(p, d, s)| vec![p.clone(), format!("{d:?}"), s.area_circ.to_string(), s.dinv_circ.to_string()])
                .collect(),
        ),
    }
}

fn prepare(cache_dir: &Option<PathBuf>, degree: usize) -> Result<(), Error> {
    if let Some(dir) = cache_dir {
        for w in prepare_tables(Some(dir), degree)?.warnings {
            eprintln!("warning: {w}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    let out = match cli.command {
        Command::Paths { n, decorated } => paths_out(n, decorated, format),
        Command::Cat { n, method, eval } => {
            let method = match method {
                Method::Decorated => CatMethod::DecoratedSum,
                Method::Product => CatMethod::ProductForm,
            };
            let p = cat_poly(n, method);
            match eval {
                None => poly_out(&p, format),
                Some(point) => {
                    let v = p.eval(point);
                    match format {
                        Format::Text => format!("{v}\n"),
                        Format::Json => format!("{}\n", json!({"n": n, "point": point, "value": v.to_string()})),
                        Format::Csv => csv_out(&["value"], vec![vec![v.to_string()]]),
                    }
                }
            }
        }
        Command::Catrise { alpha, k, ell } => poly_out(&cat_rise(&alpha, k, ell), format),
        Command::Coeff { alpha, k, ell } => {
            prepare(&cli.cache_dir, alpha.size())?;
            let v = cat_rise_coefficient(&alpha, k, ell).to_string();
            match format {
                Format::Text => format!("{v}\n"),
                Format::Json => {
                    format!("{}\n", json!({"alpha": alpha.parts(), "k": k, "ell": ell, "value": v}))
                }
                Format::Csv => csv_out(&["value"], vec![vec![v]]),
            }
        }
        Command::Htilde { mu } => {
            prepare(&cli.cache_dir, mu.size())?;
            let table = try_htilde_table(mu.size())?;
            let terms: Vec<(Partition, String)> = table
                .parts
                .iter()
                .map(|lam| (lam.clone(), table.entry(lam, &mu)))
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| (l, c.to_string()))
                .collect();
            match format {
                Format::Text => format!("{}\n", table.column(&mu)),
                Format::Json => {
                    let v: Vec<_> = terms.iter().map(|(l, c)| json!({"lambda": l.parts(), "coeff": c})).collect();
                    format!("{}\n", serde_json::to_string_pretty(&json!({"mu": mu.parts(), "schur": v})).expect("json"))
                }
                Format::Csv => csv_out(&["lambda", "coeff"], terms.into_iter().map(|(l, c)| vec![l.to_string(), c]).collect()),
            }
        }
        Command::Verify { suite, max_n, no_timings } => {
            let suite = match suite {
                SuiteArg::Main => Suite::Main,
                SuiteArg::Comb => Suite::Comb,
                SuiteArg::Sf => Suite::Sf,
                SuiteArg::Macdonald => Suite::Macdonald,
            };
            let max_n = max_n.unwrap_or_else(|| suite.default_max_n());
            if max_n == 0 {
                return Err(Error::Invalid("--max-n must be at least 1".into()));
            }
            let opts = VerifyOptions { max_n, timings: !no_timings, cache_dir: cli.cache_dir.clone() };
            let report = suite.run(&opts)?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => format!("{}\n", report.to_json()),
                Format::Csv => report.to_csv(),
            };
            print!("{text}");
            return Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(Error::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
