use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wythoff_core::automatic::{
    catalog, infer_morphism, infer_morphism_auto, promote, walnut, Coding, Dfao,
};
use wythoff_core::characterize::mex_sequence;
use wythoff_core::game::{cache, ppos_list, solve, GameSpec};
use wythoff_core::verify::{run_suite, Suite, SuiteParams};
use wythoff_core::PposSequence;

#[derive(Parser)]
#[command(
    name = "wythoff",
    version,
    about = "Wythoff variants: solving, verification and automatic sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    K,
    W,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Cache,
}

#[derive(clap::Args)]
struct GameArgs {
    /// K: terminal positions x + y ≤ ell; W: blocking up to k − 1 options
    #[arg(long, value_enum, ignore_case = true)]
    game: Variant,
    #[arg(long)]
    ell: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
}

impl GameArgs {
    fn spec(&self) -> Result<GameSpec, Failure> {
        match (self.game, self.ell, self.k) {
            (Variant::K, Some(ell), None) => Ok(GameSpec::terminal(ell)),
            (Variant::W, None, Some(k)) => {
                GameSpec::blocking(k).map_err(|e| Failure::Usage(e.to_string()))
            }
            (Variant::K, _, _) => Err(Failure::Usage("--game K needs --ell and no --k".into())),
            (Variant::W, _, _) => Err(Failure::Usage("--game W needs --k and no --ell".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game and write its non-terminal P-pairs or the raw table
    Solve {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run a verification suite and print its report
    Verify {
        /// kernel, closed-forms, mex, blocking, discrepancy, redundancy, morphic or all
        suite: String,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        bound: Option<u64>,
        /// Largest index for the discrepancy suite
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Infer a Fibonacci automaton from a sequence prefix
    Infer {
        /// File of whitespace-separated symbols
        input: PathBuf,
        /// `auto` or the type depth t
        #[arg(long, default_value = "auto")]
        types: String,
        /// Walnut output file (stdout if absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an automaton (Walnut file or catalog name) on 0..count
    EvalDfao {
        automaton: String,
        #[arg(long, default_value_t = 21)]
        count: u64,
    },
    /// Write a catalog automaton in Walnut format, or the mex pairs
    Export {
        /// g, g3, g4, f1g1, f2g2, f3g3 or mex
        name: String,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Check(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

fn io_err(path: &Path) -> impl Fn(io::Error) -> Failure + '_ {
    move |e| Failure::Io(format!("{}: {e}", path.display()))
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(io_err(path)),
        None => io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn encode_pairs(pp: &PposSequence, format: Format) -> Result<Vec<u8>, Failure> {
    match format {
        Format::Csv => {
            let mut buf = Vec::new();
            pp.write_csv(&mut buf)
                .map_err(|e| Failure::Io(e.to_string()))?;
            Ok(buf)
        }
        Format::Json => {
            let mut text = pp.to_json().map_err(|e| Failure::Io(e.to_string()))?;
            text.push('\n');
            Ok(text.into_bytes())
        }
        Format::Cache => Err(Failure::Usage("cache format only applies to solve".into())),
    }
}

fn cmd_solve(
    game: &GameArgs,
    bound: u64,
    out: Option<&Path>,
    format: Format,
) -> Result<(), Failure> {
    let spec = game.spec()?;
    let table = solve(spec, bound).map_err(|e| Failure::Usage(e.to_string()))?;
    if format == Format::Cache {
        let path = out.ok_or_else(|| Failure::Usage("--format cache needs --out".into()))?;
        return cache::save(&table, path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())));
    }
    emit(out, &encode_pairs(&ppos_list(&table), format)?)
}

fn cmd_verify(suite: &str, params: SuiteParams) -> Result<(), Failure> {
    let suite: Suite = suite
        .parse()
        .map_err(|e: wythoff_core::verify::VerifyError| Failure::Usage(e.to_string()))?;
    let report = run_suite(suite, &params).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} check(s) failed",
            report.failures().count()
        )))
    }
}

/// Symbols as outputs: numbers keep their value, anything else is numbered
/// by first appearance. A lone token of digits is read one digit at a time.
fn read_symbols(text: &str) -> (Vec<u32>, Vec<String>) {
    let mut tokens: Vec<&str> = text.split_whitespace().collect();
    let split;
    if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].chars().all(|c| c.is_ascii_digit()) {
        split = tokens[0]
            .char_indices()
            .map(|(i, _)| &tokens[0][i..i + 1])
            .collect::<Vec<_>>();
        tokens = split;
    }
    if tokens.iter().all(|t| t.parse::<u32>().is_ok()) {
        return (
            tokens.iter().map(|t| t.parse().unwrap()).collect(),
            Vec::new(),
        );
    }
    let mut legend: Vec<String> = Vec::new();
    let values = tokens
        .iter()
        .map(|t| match legend.iter().position(|l| l == t) {
            Some(i) => i as u32,
            None => {
                legend.push(t.to_string());
                legend.len() as u32 - 1
            }
        })
        .collect();
    (values, legend)
}

fn cmd_infer(input: &Path, types: &str, out: Option<&Path>) -> Result<(), Failure> {
    let text = fs::read_to_string(input).map_err(io_err(input))?;
    let (prefix, legend) = read_symbols(&text);
    let result = match types {
        "auto" => infer_morphism_auto(&prefix),
        t => {
            let t: usize = t.parse().map_err(|_| {
                Failure::Usage(format!("--types expects auto or a number, got {t:?}"))
            })?;
            infer_morphism(&prefix, t)
        }
    };
    let inference = result.map_err(|e| Failure::Check(e.to_string()))?;
    let coding: Coding<u32> = inference.coding.clone();
    let dfao = promote(&inference.morphism, &coding).map_err(|e| Failure::Check(e.to_string()))?;

    eprintln!(
        "t = {}, {} letters",
        inference.t(),
        inference.morphism.alphabet_size()
    );
    eprintln!("morphism: {}", inference.morphism);
    eprintln!("coding:   {}", inference.coding);
    for (i, symbol) in legend.iter().enumerate() {
        eprintln!("output {i} = {symbol}");
    }
    emit(out, walnut::export(&dfao).as_bytes())
}

fn load_dfao(name: &str) -> Result<Dfao, Failure> {
    if let Some(d) = catalog::named_dfao(name) {
        return Ok(d);
    }
    let path = Path::new(name);
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    walnut::import(&text).map_err(|e| Failure::Usage(format!("{name}: {e}")))
}

fn cmd_eval(automaton: &str, count: u64) -> Result<(), Failure> {
    let d = load_dfao(automaton)?;
    let values = d
        .eval_prefix(count)
        .map_err(|e| Failure::Check(e.to_string()))?;
    let line: Vec<String> = values.iter().map(u32::to_string).collect();
    println!("{}", line.join(" "));
    Ok(())
}

fn cmd_export(
    name: &str,
    ell: Option<u32>,
    count: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if name == "mex" {
        let ell = ell.ok_or_else(|| Failure::Usage("export mex needs --ell".into()))?;
        return emit(out, &encode_pairs(&mex_sequence(ell, count), format)?);
    }
    let d = catalog::named_dfao(name).ok_or_else(|| {
        let names: Vec<&str> = catalog::NAMED.iter().map(|(n, _, _)| *n).collect();
        Failure::Usage(format!(
            "unknown automaton {name:?}; expected mex or one of {}",
            names.join(", ")
        ))
    })?;
    emit(out, walnut::export(&d).as_bytes())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            game,
            bound,
            out,
            format,
        } => cmd_solve(&game, bound, out.as_deref(), format),
        Command::Verify {
            suite,
            ell,
            k,
            bound,
            horizon,
        } => cmd_verify(
            &suite,
            SuiteParams {
                ell,
                k,
                bound,
                horizon,
            },
        ),
        Command::Infer { input, types, out } => cmd_infer(&input, &types, out.as_deref()),
        Command::EvalDfao { automaton, count } => cmd_eval(&automaton, count),
        Command::Export {
            name,
            ell,
            count,
            format,
            out,
        } => cmd_export(&name, ell, count, format, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
