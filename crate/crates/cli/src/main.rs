//! Command-line surface for the two-bridge pipeline: every stage from
//! fraction to tb is scriptable, plus the catalog report and the
//! exhaustive consistency sweeps.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal consistency failure,
//! 4 resource limit. Results go to standard output, diagnostics to
//! standard error, and identical invocations produce byte-identical output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twobridge::catalog::{emit_table, load_catalog, reproduce_table, CatalogError, TableFormat};
use twobridge::diagram::{
    build_diagram, orient_with, pd_code, skein_kauffman_l, DiagramError, LinkOrientation,
};
use twobridge::fraction::legendrian_form;
use twobridge::kauffman::{f_polynomial_with, kauffman_bound, transcription_check};
use twobridge::legendrian::{max_tb_with, render_front, FrontStyle, TbError};
use twobridge::verify::{lemma_sweep, oracle_sweep, VerifyError};
use twobridge::{l_polynomial, Fraction, TwistWord};

#[derive(Parser)]
#[command(
    name = "twobridge",
    version,
    about = "Maximal Thurston-Bennequin numbers of two-bridge knots and links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a fraction p/q to its all-entries >= 2 twist word
    Form {
        /// Fraction naming the link, e.g. 7/5
        fraction: String,
    },
    /// Print the Kauffman polynomial of a twist word or fraction
    Kauffman(KauffmanArgs),
    /// Print tb of a fraction's link and of its mirror image
    Tb {
        /// Fraction naming the link, e.g. 7/5
        fraction: String,
        /// Orientation of the second component of a two-component link
        #[arg(long, value_enum, default_value_t)]
        orientation: Orientation,
    },
    /// Render the Legendrian front of a twist word or fraction
    Front(FrontArgs),
    /// Recompute every catalog row and report its status
    Table(TableArgs),
    /// Run the exhaustive consistency sweeps
    Verify(VerifyArgs),
}

#[derive(Args)]
struct KauffmanArgs {
    /// Fraction naming the link, e.g. 7/5
    #[arg(conflicts_with = "twists")]
    fraction: Option<String>,
    /// Twist word of the diagram, e.g. 2,2,3
    #[arg(short = 't', long = "twists")]
    twists: Option<String>,
    /// Which polynomial to print: regular-isotopy L or invariant F = a^w L
    #[arg(short = 'P', long = "polynomial", value_enum, default_value_t = PolyChoice::L)]
    polynomial: PolyChoice,
    /// Print min-deg_a of the selected polynomial minus 1 instead
    #[arg(long)]
    bound: bool,
    /// Recompute L by the skein recursion and fail on any mismatch
    #[arg(long)]
    oracle: bool,
    /// Print the diagram's PD code instead of a polynomial
    #[arg(long, conflicts_with_all = ["polynomial", "bound", "oracle"])]
    pd: bool,
    /// Orientation of the second component of a two-component link
    #[arg(long, value_enum, default_value_t)]
    orientation: Orientation,
}

#[derive(Args)]
struct FrontArgs {
    /// Fraction naming the link, e.g. 7/5
    #[arg(conflicts_with = "twists")]
    fraction: Option<String>,
    /// Twist word of the diagram, e.g. 2,2,3
    #[arg(short = 't', long = "twists")]
    twists: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = FrontFormat::Ascii)]
    format: FrontFormat,
}

#[derive(Args)]
struct TableArgs {
    /// Catalog file to recompute
    #[arg(long, default_value = "data/knots.tsv")]
    catalog: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = TableChoice::Text)]
    format: TableChoice,
}

#[derive(Args)]
struct VerifyArgs {
    /// Crossing budget for the lemma and writhe-consistency sweeps
    #[arg(long = "max-sum", default_value_t = 10)]
    max_sum: i64,
    /// Crossing budget for the skein-oracle sweep; defaults to
    /// min(max-sum, 12) and cannot exceed 14
    #[arg(long = "oracle-max-sum")]
    oracle_max_sum: Option<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyChoice {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "F", alias = "f")]
    F,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Orientation {
    /// Second component along its reference edge west to east
    #[default]
    LeftRight,
    /// Second component reversed
    RightLeft,
}

impl From<Orientation> for LinkOrientation {
    fn from(o: Orientation) -> LinkOrientation {
        match o {
            Orientation::LeftRight => LinkOrientation::TemplateLeftToRight,
            Orientation::RightLeft => LinkOrientation::TemplateRightToLeft,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FrontFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableChoice {
    Text,
    Markdown,
    Csv,
}

impl From<TableChoice> for TableFormat {
    fn from(c: TableChoice) -> TableFormat {
        match c {
            TableChoice::Text => TableFormat::Text,
            TableChoice::Markdown => TableFormat::Markdown,
            TableChoice::Csv => TableFormat::Csv,
        }
    }
}

/// A failure carrying its exit code: 2 invalid input, 3 consistency, 4 limit.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn consistency(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn limit(message: impl Into<String>) -> Failure {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

fn parse_fraction(text: &str) -> Result<Fraction, Failure> {
    text.parse::<Fraction>()
        .map_err(|e| Failure::usage(e.to_string()))
}

/// Resolves the one-of-two input rule: a fraction is converted through its
/// normal form, a twist word is taken as written.
fn resolve_word(fraction: &Option<String>, twists: &Option<String>) -> Result<TwistWord, Failure> {
    match (fraction, twists) {
        (Some(f), None) => {
            let fraction = parse_fraction(f)?;
            legendrian_form(&fraction).map_err(|e| Failure::usage(e.to_string()))
        }
        (None, Some(t)) => t
            .parse::<TwistWord>()
            .map_err(|e| Failure::usage(e.to_string())),
        (None, None) => Err(Failure::usage(
            "expected a fraction argument or a twist word via -t",
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects conflicting inputs"),
    }
}

fn run_form(fraction: &str) -> Result<(), Failure> {
    let fraction = parse_fraction(fraction)?;
    let word = legendrian_form(&fraction).map_err(|e| Failure::usage(e.to_string()))?;
    println!("{word}");
    Ok(())
}

fn run_kauffman(args: &KauffmanArgs) -> Result<(), Failure> {
    let word = resolve_word(&args.fraction, &args.twists)?;
    if args.pd {
        let od = orient_with(&build_diagram(&word), args.orientation.into());
        print!("{}", pd_code(&od));
        return Ok(());
    }

    let l = l_polynomial(&word);
    if args.oracle {
        let recomputed = skein_kauffman_l(&build_diagram(&word)).map_err(|e| match e {
            DiagramError::CrossingLimit { .. } => Failure::limit(e.to_string()),
            other => Failure::consistency(other.to_string()),
        })?;
        if recomputed != l {
            return Err(Failure::consistency(format!(
                "skein oracle disagrees with the matrix formula for ({word}): {recomputed} vs {l}"
            )));
        }
    }

    let poly = match args.polynomial {
        PolyChoice::L => l,
        PolyChoice::F => f_polynomial_with(&word, args.orientation.into()),
    };
    if args.bound {
        let bound = kauffman_bound(&poly).map_err(|e| Failure::consistency(e.to_string()))?;
        println!("{bound}");
    } else {
        println!("{poly}");
    }
    Ok(())
}

fn run_tb(fraction: &str, orientation: Orientation) -> Result<(), Failure> {
    let fraction = parse_fraction(fraction)?;
    let result = max_tb_with(&fraction, orientation.into()).map_err(|e| match e {
        TbError::Fraction(inner) => Failure::usage(inner.to_string()),
        other => Failure::consistency(other.to_string()),
    })?;
    println!("tb={} mirror={}", result.tb, result.tb_mirror);
    Ok(())
}

fn run_front(args: &FrontArgs) -> Result<(), Failure> {
    let word = resolve_word(&args.fraction, &args.twists)?;
    let style = match args.format {
        FrontFormat::Ascii => FrontStyle::Ascii,
        FrontFormat::Svg => FrontStyle::Svg,
    };
    let rendered = render_front(&word, style).map_err(|e| Failure::usage(e.to_string()))?;
    print!("{rendered}");
    Ok(())
}

fn run_table(args: &TableArgs) -> Result<(), Failure> {
    let records = load_catalog(&args.catalog).map_err(|e| match e {
        CatalogError::Io { .. } | CatalogError::Line { .. } => Failure::usage(e.to_string()),
    })?;
    let report = reproduce_table(&records);
    print!("{}", emit_table(&report, args.format.into()));
    if report.mismatches > 0 || report.errors > 0 {
        return Err(Failure::consistency(format!(
            "{} mismatched and {} errored rows",
            report.mismatches, report.errors
        )));
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    if args.max_sum < 1 {
        return Err(Failure::usage("--max-sum must be at least 1"));
    }
    let oracle_budget = args.oracle_max_sum.unwrap_or(args.max_sum.min(12));
    if !(1..=14).contains(&oracle_budget) {
        return Err(Failure::limit(
            "the skein-oracle sweep is limited to budgets between 1 and 14 crossings",
        ));
    }

    transcription_check().map_err(|e| Failure::consistency(e.to_string()))?;
    println!("transcription guard: ok");

    let verify_failure = |e: VerifyError| match e {
        VerifyError::Diagram(DiagramError::CrossingLimit { .. }) => Failure::limit(e.to_string()),
        other => Failure::consistency(other.to_string()),
    };

    let report = lemma_sweep(8, args.max_sum, true).map_err(verify_failure)?;
    println!(
        "lemma sweep: {} words, min-deg_a L = -1 with product-form witness",
        report.words
    );
    println!(
        "writhe consistency: {} normal-form words, writhe - 2 = min-deg_a F - 1",
        report.normal_form_words
    );

    let words = oracle_sweep(oracle_budget).map_err(verify_failure)?;
    println!("oracle equivalence: {words} words through {oracle_budget} crossings");

    println!("all checks passed");
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Form { fraction } => run_form(fraction),
        Command::Kauffman(args) => run_kauffman(args),
        Command::Tb {
            fraction,
            orientation,
        } => run_tb(fraction, *orientation),
        Command::Front(args) => run_front(args),
        Command::Table(args) => run_table(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
