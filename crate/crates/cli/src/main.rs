use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qshuffle::alternating::{
    d_coeff_pointwise, d_element, growth_stats, identity_suite, Mode,
};
use qshuffle::catalan::{catalan_number, elevation, enumerate_catalan, is_catalan, profile};
use qshuffle::{Element, Error, LaurentPoly, Word};

const DEFAULT_MAX_N: usize = 12;
const MAX_N_ENV: &str = "QSHUFFLE_MAX_N";

#[derive(Parser, Debug)]
#[command(name = "qshuffle", version, about = "Exact q-shuffle algebra computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0, global = true)]
    parallelism: usize,

    /// Largest accepted n or order (default 12, or $QSHUFFLE_MAX_N).
    #[arg(long, global = true)]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print D_n.
    Dn {
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::OneStep)]
        mode: ModeArg,
    },
    /// Print the q-shuffle product of two words.
    Shuffle { left: String, right: String },
    /// List the Catalan words of length 2n.
    Catalan { n: usize },
    /// Print the elevation sequence and profile of a word.
    Profile { word: String },
    /// Print the coefficient of a word in D_n.
    Coeff {
        word: String,
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::OneStep)]
        mode: ModeArg,
    },
    /// Check every identity and the series inversion through the given order.
    Verify {
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Time the three constructions of D_n and report term growth.
    Bench {
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Recursive,
    Closed,
    OneStep,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Recursive => Mode::Recursive,
            ModeArg::Closed => Mode::Closed,
            ModeArg::OneStep => Mode::OneStep,
        }
    }
}

enum Failure {
    Usage(String),
    Internal(Error),
    IdentitiesFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Internal(e)
    }
}

struct Output {
    text: String,
    command: &'static str,
    args: Value,
    result: Value,
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn max_n(cli: &Cli) -> Result<usize, Failure> {
    if let Some(m) = cli.max_n {
        return Ok(m);
    }
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_N_ENV} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_cap(what: &str, n: usize, cap: usize) -> Result<(), Failure> {
    if n > cap {
        return Err(Failure::Usage(format!(
            "{what} = {n} exceeds the cap {cap}; raise it with --max-n or {MAX_N_ENV}"
        )));
    }
    Ok(())
}

fn element_json(e: &Element) -> Value {
    serde_json::to_value(e).expect("elements serialize")
}

fn poly_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let cap = max_n(cli)?;
    match &cli.command {
        Command::Dn { n, mode } => {
            check_cap("n", *n, cap)?;
            let d = d_element(*n, (*mode).into())?;
            Ok(Output {
                text: d.to_string(),
                command: "dn",
                args: json!({ "n": n, "mode": Mode::from(*mode).name() }),
                result: element_json(&d),
            })
        }
        Command::Shuffle { left, right } => {
            let (u, v) = (parse_word(left)?, parse_word(right)?);
            if u.len() + v.len() > Word::MAX_LEN {
                return Err(Failure::Usage(format!(
                    "the product would have {} letters; at most {} are supported",
                    u.len() + v.len(),
                    Word::MAX_LEN
                )));
            }
            let p = Element::from_word(u).shuffle(&Element::from_word(v));
            Ok(Output {
                text: p.to_string(),
                command: "shuffle",
                args: json!({ "left": u.to_string(), "right": v.to_string() }),
                result: element_json(&p),
            })
        }
        Command::Catalan { n } => {
            check_cap("n", *n, cap)?;
            let words = enumerate_catalan(*n);
            let names: Vec<String> = words.iter().map(Word::to_string).collect();
            Ok(Output {
                text: names.join("\n"),
                command: "catalan",
                args: json!({ "n": n }),
                result: json!({ "count": catalan_number(*n).to_string(), "words": names }),
            })
        }
        Command::Profile { word } => {
            let w = parse_word(word)?;
            let e = elevation(&w);
            let p = profile(&w);
            let cat = is_catalan(&w);
            Ok(Output {
                text: format!("elevation {e}\nprofile {p}\ncatalan {cat}"),
                command: "profile",
                args: json!({ "word": w.to_string() }),
                result: json!({ "elevation": e.values(), "profile": p.values(), "catalan": cat }),
            })
        }
        Command::Coeff { word, n, mode } => {
            check_cap("n", *n, cap)?;
            let w = parse_word(word)?;
            let mode = Mode::from(*mode);
            let c = match mode {
                Mode::Closed if w.len() == 2 * n && is_catalan(&w) => {
                    let c = d_coeff_pointwise(&w)?;
                    if n % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                }
                Mode::Closed => LaurentPoly::zero(),
                _ => d_element(*n, mode)?.coeff(&w),
            };
            Ok(Output {
                text: c.to_string(),
                command: "coeff",
                args: json!({ "word": w.to_string(), "n": n, "mode": mode.name() }),
                result: poly_json(&c),
            })
        }
        Command::Verify { order } => {
            check_cap("order", *order, cap)?;
            let report = identity_suite(*order);
            let summary = report.summary();
            let mut text = String::new();
            for (identity, passed, total) in &summary {
                let tag = if passed == total { "PASS" } else { "FAIL" };
                text.push_str(&format!("{tag} {passed:>3}/{total:<3} {identity}\n"));
            }
            for c in report.failures() {
                text.push_str(&format!("failed: {} at {}", c.identity, c.index));
                if let Some(e) = &c.error {
                    text.push_str(&format!(" ({e})"));
                }
                text.push('\n');
            }
            let ok = report.all_passed();
            text.push_str(&format!(
                "{} ({} checks, order {order})",
                if ok { "all identities hold" } else { "some identities FAILED" },
                report.checks.len()
            ));
            let identities: Vec<Value> = summary
                .iter()
                .map(|(i, p, t)| json!({ "identity": i, "passed": p, "total": t }))
                .collect();
            let out = Output {
                text,
                command: "verify",
                args: json!({ "order": order }),
                result: json!({ "all_passed": ok, "identities": identities, "checks": report.checks }),
            };
            if ok {
                Ok(out)
            } else {
                emit(cli.format, &out);
                Err(Failure::IdentitiesFailed)
            }
        }
        Command::Bench { order } => {
            check_cap("order", *order, cap)?;
            let mut rows = Vec::new();
            let mut text = format!(
                "{:>3} {:>8} {:>8} {:>9} {:>13} {:>13} {:>13}\n",
                "n", "|Cat_n|", "terms", "max_bits", "one-step_ms", "closed_ms", "recursive_ms"
            );
            for n in 0..=*order {
                let mut times = Vec::new();
                let mut stats = None;
                for mode in [Mode::OneStep, Mode::Closed, Mode::Recursive] {
                    let start = Instant::now();
                    let d = d_element(n, mode)?;
                    times.push(start.elapsed().as_secs_f64() * 1e3);
                    stats.get_or_insert_with(|| growth_stats(n, &d));
                }
                let stats = stats.unwrap();
                let cat = catalan_number(n);
                text.push_str(&format!(
                    "{:>3} {:>8} {:>8} {:>9} {:>13.3} {:>13.3} {:>13.3}\n",
                    n, cat, stats.terms, stats.max_coeff_bits, times[0], times[1], times[2]
                ));
                rows.push(json!({
                    "n": n,
                    "catalan": cat.to_string(),
                    "terms": stats.terms,
                    "max_coeff_bits": stats.max_coeff_bits,
                    "ms": { "one-step": times[0], "closed": times[1], "recursive": times[2] },
                }));
            }
            text.pop();
            Ok(Output {
                text,
                command: "bench",
                args: json!({ "order": order }),
                result: Value::Array(rows),
            })
        }
    }
}

fn emit(format: Format, out: &Output) {
    match format {
        Format::Text => println!("{}", out.text),
        Format::Json => {
            let doc = json!({ "command": out.command, "args": out.args, "result": out.result });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json renders"));
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.parallelism > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.parallelism)
            .build_global()
        {
            eprintln!("qshuffle: cannot configure thread pool: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(out) => {
            emit(cli.format, &out);
            ExitCode::SUCCESS
        }
        Err(Failure::IdentitiesFailed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("qshuffle: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("qshuffle: internal error: {e}");
            ExitCode::from(3)
        }
    }
}
