//! `tricomb`: count, enumerate, render and verify comb tilings.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` usage error.

mod render;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tricomb::identities::{self, Domain, Variant, VerificationReport};
use tricomb::metatiles::SigmaSignature;
use tricomb::sequences::Sequence;
use tricomb::{board, Enumerator, ExecMode, TileSet};

use report::ReportDocument;

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tricomb",
    version,
    about = "Tilings of n-boards by half-squares, fences and combs"
)]
struct Cli {
    /// Largest board enumerated exhaustively (overrides COMB_ENUM_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one term of a sequence.
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Count tilings of an n-board (transfer counter, no enumeration).
    Count {
        n: usize,
        #[arg(long, default_value = "hfc")]
        tiles: TileSet,
    },
    /// Verify identities exactly, optionally against brute-force enumeration.
    Verify(VerifyArgs),
    /// List the metatiles of one length.
    Metatiles {
        #[arg(long)]
        length: usize,
        #[arg(long, default_value = "hfc")]
        tiles: TileSet,
        /// Keep only metatiles whose final slots hold these kinds, e.g. 12.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Draw a tiling given as a slot-label row (e.g. `abab`), or all tilings of a board.
    Render {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        spec: Option<String>,
        #[arg(long, value_name = "N")]
        all: Option<usize>,
        #[arg(long, default_value = "hfc")]
        tiles: TileSet,
    },
    /// List the registered identities.
    Identities,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeqName {
    Tribonacci,
    Fibonacci,
    Narayana,
    Padovan,
}

impl From<SeqName> for Sequence {
    fn from(s: SeqName) -> Sequence {
        match s {
            SeqName::Tribonacci => Sequence::Tribonacci,
            SeqName::Fibonacci => Sequence::Fibonacci,
            SeqName::Narayana => Sequence::Narayana,
            SeqName::Padovan => Sequence::Padovan,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    AsStated,
    Corrected,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity id, or `all`.
    #[arg(long, default_value = "all")]
    identity: String,
    #[arg(long, default_value_t = 200)]
    max_n: i64,
    #[arg(long, value_enum, default_value = "corrected")]
    variant: VariantArg,
    /// Also recount each identity's combinatorial quantity by enumeration,
    /// on boards of at most min(max-n, cap) cells.
    #[arg(long)]
    cross_check: bool,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn enumerator(cli: &Cli) -> tricomb::Result<Enumerator> {
    let mut e = Enumerator::from_env()?;
    if let Some(cap) = cli.cap {
        e = e.with_cap(cap);
    }
    if cli.sequential {
        e = e.with_mode(ExecMode::Sequential);
    }
    Ok(e)
}

fn run(cli: Cli) -> tricomb::Result<u8> {
    let e = enumerator(&cli)?;
    let mut out = std::io::stdout().lock();
    let text = match &cli.command {
        Command::Seq { name, n } => format!("{}\n", Sequence::from(*name).get(*n)),
        Command::Count { n, tiles } => format!("{}\n", board::count_tilings(*n, tiles)),
        Command::Metatiles { length, tiles, sigma } => metatiles(&e, *length, tiles, sigma.as_deref())?,
        Command::Render { spec, all, tiles } => match (spec, all) {
            (_, Some(n)) => {
                let ts = e.tilings(*n, tiles)?;
                let mut s: String = ts.iter().map(|t| render::render(t) + "\n").collect();
                s.push_str(&format!("{} tilings\n", ts.len()));
                s
            }
            (Some(spec), None) => {
                let t = render::parse_labels(spec)?;
                if !t.is_valid() {
                    return Err(tricomb::Error::InvalidTiling(spec.clone()));
                }
                render::render(&t)
            }
            (None, None) => unreachable!("clap requires one of spec / --all"),
        },
        Command::Identities => identities::registry()
            .iter()
            .map(|d| {
                let variants: Vec<String> = d.variants().iter().map(ToString::to_string).collect();
                format!(
                    "{:<10} [{}] {}\n    {}\n",
                    d.id,
                    variants.join(", "),
                    d.counts,
                    d.statement
                )
            })
            .collect(),
        Command::Verify(args) => {
            let (doc, json) = verify(&e, args)?;
            let text = if json { doc.to_json() + "\n" } else { doc.to_table() };
            let _ = out.write_all(text.as_bytes());
            return Ok(if doc.pass { EXIT_OK } else { EXIT_FAILED });
        }
    };
    let _ = out.write_all(text.as_bytes());
    Ok(EXIT_OK)
}

fn metatiles(e: &Enumerator, length: usize, tiles: &TileSet, sigma: Option<&str>) -> tricomb::Result<String> {
    let sigma = sigma.map(SigmaSignature::parse).transpose()?;
    let ms: Vec<_> = e
        .metatiles(length, tiles)?
        .into_iter()
        .filter(|m| sigma.is_none_or(|s| m.sigma() == s))
        .collect();
    let mut s = String::new();
    for m in &ms {
        s.push_str(&format!(
            "{:<12} sigma={} {} {}\n",
            m.symbolic(),
            m.sigma(),
            render::label_row(m.body()),
            if m.is_mixed() { "mixed" } else { "unmixed" }
        ));
    }
    let mixed = ms.iter().filter(|m| m.is_mixed()).count();
    s.push_str(&format!("{} metatiles of length {length} ({mixed} mixed)\n", ms.len()));
    Ok(s)
}

fn verify(e: &Enumerator, args: &VerifyArgs) -> tricomb::Result<(ReportDocument, bool)> {
    let selected: Vec<_> = if args.identity == "all" {
        identities::registry().iter().collect()
    } else {
        vec![identities::find(&args.identity)?]
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut cross: Vec<VerificationReport> = Vec::new();
    let cross_n = args.max_n.clamp(0, e.cap() as i64) as usize;
    for desc in selected {
        let variants = match args.variant {
            VariantArg::AsStated => vec![Variant::AsStated],
            VariantArg::Corrected => vec![desc.resolve(Variant::Corrected)],
            VariantArg::All => desc.variants(),
        };
        for v in variants {
            reports.push(identities::verify(desc.id, v, &Domain::new(args.max_n), e.mode())?);
            if args.cross_check && desc.cross_check.is_some() {
                cross.push(identities::cross_check(desc.id, v, cross_n, e)?);
            }
        }
    }
    let command = std::env::args().skip(1).collect();
    Ok((ReportDocument::new(command, reports, cross), args.json))
}
