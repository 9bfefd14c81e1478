//! Command-line front end: atlases, the adjoint-model checks, the
//! parabolic report and the self-test.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tnn_springer::adjoint::{self, CheckResult};
use tnn_springer::coxeter::{IndexSet, WeylGroup};
use tnn_springer::doc::{
    atlas_document, compact_word, diff_golden, flag_atlas_document, load_golden, parse_word,
    GoldenDiff,
};
use tnn_springer::flag::flag_atlas;
use tnn_springer::parabolic::{assemble_from_str, parabolic_report, Tolerances};
use tnn_springer::selftest::{self, Level};
use tnn_springer::springer::{piece_of, springer_atlas, PieceLabel};
use tnn_springer::{Error, Result};

#[derive(Parser)]
#[command(name = "tnn-springer", version, about = "Cells of totally nonnegative Springer fibres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cell atlas of one unipotent piece.
    Atlas(AtlasArgs),
    /// Cell atlas of one piece in the partial flag manifold `G/P_H`.
    FlagAtlas {
        #[command(flatten)]
        atlas: AtlasArgs,
        /// Comma-separated index set `H`; empty for the full flag manifold.
        #[arg(long = "H", default_value = "")]
        h: String,
    },
    /// Runs every check of the SL_3 adjoint model.
    VerifyAdjoint {
        /// Replace one support-table entry by a wrong value (negative control).
        #[arg(long, hide = true)]
        corrupt_fixture: bool,
    },
    /// Eigenvalue splitting and parabolic of a product of generators.
    Parabolic {
        #[arg(long)]
        n: usize,
        /// Generator word, e.g. "y1:1,t:2,0.5,x1:1".
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
    },
    /// Runs the built-in property suites.
    Selftest {
        /// quick or full.
        #[arg(default_value = "quick")]
        level: String,
    },
}

#[derive(Args)]
struct AtlasArgs {
    /// Diagram type (A or D).
    #[arg(short = 't', long = "type")]
    diagram: String,
    #[arg(short, long)]
    rank: usize,
    /// Reduced word of z, comma separated.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    y_word: String,
    /// Reduced word of z', comma separated.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    x_word: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Golden file to compare against (transcribed or regenerated).
    #[arg(long)]
    golden: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn build_piece(args: &AtlasArgs) -> Result<(WeylGroup, PieceLabel)> {
    let group = WeylGroup::build(&args.diagram, args.rank)?;
    let z = parse_word(&args.y_word)?;
    let zp = parse_word(&args.x_word)?;
    let piece = piece_of(&group, &z, &zp)?;
    Ok((group, piece))
}

fn histogram_line(h: &std::collections::BTreeMap<usize, usize>) -> String {
    h.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(" ")
}

fn report_diff(diff: &GoldenDiff) {
    eprintln!(
        "golden {}: {} ({} differences, {} unflagged)",
        diff.golden,
        if diff.matches { "match" } else { "mismatch" },
        diff.entries.len(),
        diff.unflagged
    );
    for e in &diff.entries {
        eprintln!(
            "  {:?} ({}, {}){}",
            e.side,
            e.v,
            e.w,
            if e.flagged { " [flagged]" } else { "" }
        );
    }
}

fn emit(json: String) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(json.as_bytes());
}

fn cmd_atlas(args: &AtlasArgs) -> Result<u8> {
    let (group, piece) = build_piece(args)?;
    let atlas = springer_atlas(&group, piece)?;
    let mut doc = atlas_document(&group, &atlas);
    let mut code = 0;
    if let Some(path) = &args.golden {
        let golden = load_golden(path)?;
        let diff = diff_golden(&group, &atlas, &golden, &path.display().to_string())?;
        report_diff(&diff);
        if !diff.acceptable() {
            code = 3;
        }
        doc.golden_diff = Some(diff);
    }
    match args.format {
        Format::Json => emit(doc.to_json()),
        Format::Table => {
            let mut out = format!(
                "{}_{} piece ({}, {})\n",
                group.diagram(),
                group.rank(),
                compact_word(&doc.piece.y_word),
                compact_word(&doc.piece.x_word)
            );
            for c in &doc.cells {
                out += &format!("{}\t{}\t{}\n", c.dim, compact_word(&c.v), compact_word(&c.w));
            }
            out += &format!("histogram {}\n", histogram_line(&doc.dim_histogram));
            emit(out);
        }
    }
    Ok(code)
}

fn cmd_flag_atlas(args: &AtlasArgs, h: &str) -> Result<u8> {
    let (group, piece) = build_piece(args)?;
    let h: IndexSet = group.index_set(&parse_word(h)?)?;
    let atlas = flag_atlas(&group, h, piece)?;
    let doc = flag_atlas_document(&group, &atlas);
    if args.golden.is_some() {
        return Err(Error::Validation("golden files are only supported by atlas".into()));
    }
    match args.format {
        Format::Json => emit(doc.to_json()),
        Format::Table => {
            let mut out = String::new();
            for c in &doc.cells {
                out += &format!(
                    "{}\t({}, {})\t({}, {})\n",
                    c.dim,
                    compact_word(&c.rt[0]),
                    compact_word(&c.rt[1]),
                    compact_word(&c.rpt[0]),
                    compact_word(&c.rpt[1])
                );
            }
            out += &format!("histogram {}\n", histogram_line(&doc.dim_histogram));
            emit(out);
        }
    }
    Ok(0)
}

fn print_checks(checks: &[CheckResult]) -> u8 {
    for c in checks {
        eprintln!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let passed = checks.iter().all(|c| c.passed);
    let report = serde_json::json!({ "passed": passed, "checks": checks });
    emit(serde_json::to_string_pretty(&report).expect("report serializes") + "\n");
    if passed {
        0
    } else {
        3
    }
}

fn cmd_verify_adjoint(corrupt: bool) -> Result<u8> {
    let group = WeylGroup::build("A", 2)?;
    let table = if corrupt {
        adjoint::corrupted_table(&group)?
    } else {
        adjoint::SupportTable::stored(&group)?
    };
    Ok(print_checks(&adjoint::verify_with_table(&group, &table)?))
}

fn cmd_parabolic(n: usize, gens: &str) -> Result<u8> {
    let g = assemble_from_str(n, gens)?;
    let report = parabolic_report(&g, &Tolerances::default())?;
    emit(serde_json::to_string_pretty(&report).expect("report serializes") + "\n");
    Ok(0)
}

fn cmd_selftest(level: &str) -> Result<u8> {
    let level: Level = level.parse()?;
    Ok(print_checks(&selftest::run(level)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Atlas(args) => cmd_atlas(args),
        Command::FlagAtlas { atlas, h } => cmd_flag_atlas(atlas, h),
        Command::VerifyAdjoint { corrupt_fixture } => cmd_verify_adjoint(*corrupt_fixture),
        Command::Parabolic { n, gens } => cmd_parabolic(*n, gens),
        Command::Selftest { level } => cmd_selftest(level),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
