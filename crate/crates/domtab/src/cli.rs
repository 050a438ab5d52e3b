//! The `domtab` command line.
//!
//! Exit codes: 0 on success, 1 when the answer is a domain-level negative
//! (a counterexample, an empty search, a tableau that is not fixed by `D`),
//! 2 for usage and input errors.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use domtab_core::verify::compositions;
use domtab_core::{
    apply_word, check_identity, count_self_evacuating, domino_from_tableau, domino_weights,
    enumerate_domino, enumerate_tableaux, enumerate_tableaux_weight, kostka, kostka2, parse_word,
    tableau_from_domino, Bounds, DominoError, DominoWeight, Outcome, Partition, Report, Suite,
    Tableau, Weight,
};

use crate::format::{
    parse_box, parse_domino, parse_grid, parse_list, parse_partition, parse_tableau, render_domino,
    DominoJson, FormatError, ReportJson, SuiteConfig, TableauJson, WitnessJson,
};
use crate::harness;

#[derive(Debug, Parser)]
#[command(
    name = "domtab",
    version,
    about = "Tableau operators, domino tableaux and exhaustive relation checks"
)]
pub struct Cli {
    /// Output format for tableaux and reports.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Grid)]
    pub format: OutputFormat,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for `verify`.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Grid,
}

#[derive(Debug, Args)]
pub struct TableauInput {
    /// Tableau JSON, inline, as a file path, or `-` for stdin.
    #[arg(long)]
    pub tableau: Option<String>,
    /// A filling such as `[[1,2],[3]]`; needs `--n`.
    #[arg(long)]
    pub grid: Option<String>,
    /// Entry bound for `--grid`.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply an operator word, rightmost factor first.
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        input: TableauInput,
    },
    /// Convert between D-fixed tableaux and domino tableaux.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        #[command(flatten)]
        input: TableauInput,
        /// Domino tableau JSON for `to-tableau`, inline, path or `-`.
        #[arg(long)]
        domino: Option<String>,
    },
    /// Count tableaux.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[arg(long)]
        shape: String,
        /// Weight (β′ for kostka2), comma separated; padded with zeros.
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        n: usize,
        /// Print a table over every weight of the right size.
        #[arg(long)]
        all_weights: bool,
    },
    /// Run a verification suite, or `identity` with `--lhs` and `--rhs`.
    Verify {
        suite: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Shape box as ROWSxCOLS.
        #[arg(long = "box", default_value = "3x4")]
        bounds: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        weight: Option<String>,
        /// Suite configuration JSON file.
        #[arg(long)]
        config: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lhs: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        rhs: Option<String>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Print tableaux or domino tableaux as JSON lines.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumKind,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
        /// Print only the number of objects.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    ToDomino,
    ToTableau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Kostka,
    Kostka2,
    Selfevac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Tableaux,
    Domino,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Negative(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut text = String::new();
    let result = dispatch(&cli, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Negative(m)) => {
            let _ = writeln!(err, "{m}");
            1
        }
    }
}

fn json_output(cli: &Cli) -> bool {
    cli.json || cli.format == OutputFormat::Json
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32, Failure> {
    let json = json_output(cli);
    match &cli.command {
        Command::Apply { word, input } => {
            let t = read_tableau(input)?;
            let w = parse_word(word, t.n()).map_err(usage)?;
            let u = apply_word(&w, &t).map_err(usage)?;
            print_tableau(out, &u, json);
            Ok(0)
        }
        Command::Convert {
            direction: Direction::ToDomino,
            input,
            ..
        } => {
            let t = read_tableau(input)?;
            match domino_from_tableau(&t) {
                Ok(dt) => {
                    if json {
                        writeln!(out, "{}", to_json(&DominoJson::of(&dt))).unwrap();
                    } else {
                        writeln!(out, "{}", render_domino(&dt)).unwrap();
                    }
                    Ok(0)
                }
                Err(DominoError::NotDominoFixed { generator }) => Err(Failure::Negative(format!(
                    "not a domino tableau: t{generator} does not fix the input, so D(T) != T"
                ))),
                Err(e) => Err(usage(e)),
            }
        }
        Command::Convert {
            direction: Direction::ToTableau,
            domino,
            ..
        } => {
            let text = read_source(domino.as_deref().unwrap_or("-"))?;
            let dt = parse_domino(&text)?;
            let t = tableau_from_domino(&dt).map_err(usage)?;
            print_tableau(out, &t, json);
            Ok(0)
        }
        Command::Count {
            kind,
            shape,
            weight,
            n,
            all_weights,
        } => count(
            out,
            *kind,
            &parse_partition(shape)?,
            weight.as_deref(),
            *n,
            *all_weights,
            json,
        ),
        Command::Verify {
            suite,
            n,
            bounds,
            max_size,
            shape,
            weight,
            config,
            lhs,
            rhs,
            timing,
        } => {
            let (name, b) = match config {
                Some(path) => {
                    let cfg: SuiteConfig =
                        serde_json::from_str(&read_source(path)?).map_err(usage)?;
                    (cfg.suite.clone(), cfg.to_bounds()?)
                }
                None => {
                    let name = suite
                        .clone()
                        .ok_or_else(|| usage("a suite name or --config is required"))?;
                    if name != "identity" && Suite::from_name(&name).is_err() {
                        return Err(usage(format!("unknown suite '{name}'")));
                    }
                    let n = n.ok_or_else(|| usage("--n is required"))?;
                    let (rows, cols) = parse_box(bounds)?;
                    let mut b = Bounds::boxed(n, rows, cols);
                    b.max_size = *max_size;
                    b.shape = shape.as_deref().map(parse_partition).transpose()?;
                    b.weight = weight.as_deref().map(parse_list).transpose()?;
                    (name, b)
                }
            };
            let mut report = if name == "identity" {
                let (l, r) = lhs
                    .as_ref()
                    .zip(rhs.as_ref())
                    .ok_or_else(|| usage("identity needs --lhs and --rhs"))?;
                let l = parse_word(l, b.n).map_err(usage)?;
                let r = parse_word(r, b.n).map_err(usage)?;
                let start = std::time::Instant::now();
                let mut rep = check_identity(&l, &r, &b).map_err(usage)?;
                rep.elapsed = Some(start.elapsed());
                rep
            } else {
                harness::run_named(&name, &b, cli.threads).map_err(usage)?
            };
            if !timing {
                report.elapsed = None;
            }
            print_report(out, &report, json);
            Ok(if report.is_verified() { 0 } else { 1 })
        }
        Command::Enumerate {
            kind,
            shape,
            n,
            weight,
            limit,
            count,
        } => enumerate(
            out,
            *kind,
            &parse_partition(shape)?,
            weight.as_deref(),
            *n,
            *limit,
            *count,
        ),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn print_tableau(out: &mut String, t: &Tableau, json: bool) {
    if json {
        writeln!(out, "{}", to_json(&TableauJson::grid_of(t))).unwrap();
    } else {
        let text = t.to_string();
        if !text.is_empty() {
            writeln!(out, "{text}").unwrap();
        }
    }
}

fn print_report(out: &mut String, r: &Report, json: bool) {
    if json {
        writeln!(out, "{}", to_json(&ReportJson::of(r))).unwrap();
        return;
    }
    writeln!(out, "{r}").unwrap();
    if let Outcome::Counterexample(w) = &r.outcome {
        writeln!(out, "witness json: {}", to_json(&WitnessJson::of(w))).unwrap();
    }
}

/// Inline JSON, `-` for stdin, or a file path.
fn read_source(src: &str) -> Result<String, Failure> {
    let trimmed = src.trim_start();
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(usage)?;
        Ok(s)
    } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(src.to_string())
    } else {
        std::fs::read_to_string(src).map_err(|e| usage(format!("cannot read {src}: {e}")))
    }
}

fn read_tableau(input: &TableauInput) -> Result<Tableau, Failure> {
    let t = match (&input.tableau, &input.grid) {
        (Some(_), Some(_)) => return Err(usage("give either --tableau or --grid")),
        (None, Some(g)) => {
            let n = input.n.ok_or_else(|| usage("--grid needs --n"))?;
            parse_grid(g, n)?
        }
        (Some(src), None) => parse_tableau(&read_source(src)?)?,
        (None, None) => parse_tableau(&read_source("-")?)?,
    };
    if let Some(n) = input.n {
        if n != t.n() {
            return Err(usage(format!(
                "--n {n} disagrees with the tableau's n = {}",
                t.n()
            )));
        }
    }
    Ok(t)
}

fn padded(list: Vec<usize>, len: usize, what: &str) -> Result<Vec<usize>, Failure> {
    if list.len() > len {
        return Err(usage(format!(
            "{what} has {} entries, at most {len} allowed",
            list.len()
        )));
    }
    let mut v = list;
    v.resize(len, 0);
    Ok(v)
}

fn count(
    out: &mut String,
    kind: CountKind,
    shape: &Partition,
    weight: Option<&str>,
    n: usize,
    all: bool,
    json: bool,
) -> Result<i32, Failure> {
    if n == 0 {
        return Err(usage("--n must be positive"));
    }
    let size = shape.size();
    let one = |w: &[usize]| -> u64 {
        match kind {
            CountKind::Kostka => kostka(shape, &Weight(w.to_vec())),
            CountKind::Kostka2 => kostka2(shape, &DominoWeight(w.to_vec()), n),
            CountKind::Selfevac => count_self_evacuating(shape, &Weight(w.to_vec())),
        }
    };
    let len = match kind {
        CountKind::Kostka2 => n.div_ceil(2),
        _ => n,
    };
    let mut emit = |w: &[usize], k: u64| {
        if json {
            writeln!(out, "{}", serde_json::json!({ "weight": w, "count": k })).unwrap();
        } else if all {
            let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}\t{k}", ws.join(",")).unwrap();
        } else {
            writeln!(out, "{k}").unwrap();
        }
    };
    if all {
        let weights: Vec<Vec<usize>> = match kind {
            CountKind::Kostka2 => domino_weights(size, n).into_iter().map(|w| w.0).collect(),
            _ => compositions(size, n).into_iter().map(|w| w.0).collect(),
        };
        for w in weights {
            let k = one(&w);
            emit(&w, k);
        }
        return Ok(0);
    }
    let w = padded(
        parse_list(weight.ok_or_else(|| usage("--weight or --all-weights is required"))?)?,
        len,
        "weight",
    )?;
    let cells = match kind {
        CountKind::Kostka2 => DominoWeight(w.clone()).cells(n),
        _ => w.iter().sum(),
    };
    if cells != size {
        return Err(usage(format!(
            "weight covers {cells} cells but the shape has {size}"
        )));
    }
    let k = one(&w);
    emit(&w, k);
    Ok(0)
}

fn enumerate(
    out: &mut String,
    kind: EnumKind,
    shape: &Partition,
    weight: Option<&str>,
    n: usize,
    limit: Option<usize>,
    count_only: bool,
) -> Result<i32, Failure> {
    if n == 0 {
        return Err(usage("--n must be positive"));
    }
    let limit = limit.unwrap_or(usize::MAX);
    let lines: Box<dyn Iterator<Item = String>> = match kind {
        EnumKind::Tableaux => {
            let it: Box<dyn Iterator<Item = Tableau>> = match weight {
                Some(w) => {
                    let w = padded(parse_list(w)?, n, "weight")?;
                    Box::new(enumerate_tableaux_weight(shape, &Weight(w)))
                }
                None => Box::new(enumerate_tableaux(shape, n)),
            };
            Box::new(it.map(|t| to_json(&TableauJson::grid_of(&t))))
        }
        EnumKind::Domino => {
            let weights = match weight {
                Some(w) => vec![DominoWeight(padded(
                    parse_list(w)?,
                    n.div_ceil(2),
                    "weight",
                )?)],
                None => domino_weights(shape.size(), n),
            };
            let shape = shape.clone();
            Box::new(
                weights
                    .into_iter()
                    .flat_map(move |w| enumerate_domino(&shape, &w, n).collect::<Vec<_>>())
                    .map(|dt| to_json(&DominoJson::of(&dt))),
            )
        }
    };
    let lines = lines.take(limit);
    if count_only {
        writeln!(out, "{}", lines.count()).unwrap();
    } else {
        for l in lines {
            writeln!(out, "{l}").unwrap();
        }
    }
    Ok(0)
}
