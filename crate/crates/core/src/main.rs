use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use braidforge::braid::{parse_braid, BraidWord};
use braidforge::error::{Error, Result};
use braidforge::families::{
    companion_mid_t, companion_t, companion_v, satellite_family_t, satellite_family_v,
    t_link_braid, v_link_braid, FamilyParams, TLinkSpec, VLinkSpec,
};
use braidforge::garside::{extract_full_twists, normal_form};
use braidforge::invariants::{closure_components, invariant_bundle, linking_matrix};
use braidforge::report::{default_grid, parse_grid, verify_all, VerifyConfig};
use braidforge::satellite::{adjoin_axis, delete_components, deletion_chain, match_case2_form};

#[derive(Parser)]
#[command(
    name = "braidforge",
    version,
    about = "Exact computations with positive braids and their closures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on a single braid.
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
    /// T-link and V-link constructions.
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
    /// Verification pipelines for the satellite construction.
    Paper {
        #[command(subcommand)]
        op: PaperOp,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BraidInput {
    /// Braid in the form "<strands>: g1 g2 ...", e.g. "3: 1 -2 1".
    braid: Option<String>,
    /// T-link literal, e.g. "T((3,1),(7,3))".
    #[arg(long)]
    tlink: Option<String>,
    /// V-link literal, e.g. "V((2,~2),(3,3))".
    #[arg(long)]
    vlink: Option<String>,
}

impl BraidInput {
    fn word(&self) -> Result<BraidWord> {
        match (&self.braid, &self.tlink, &self.vlink) {
            (Some(b), _, _) => parse_braid(b),
            (_, Some(t), _) => Ok(t_link_braid(&t.parse::<TLinkSpec>()?)),
            (_, _, Some(v)) => Ok(v_link_braid(&v.parse::<VLinkSpec>()?)),
            _ => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Subcommand)]
enum BraidOp {
    /// Garside left normal form.
    Normalize(BraidInput),
    /// Closure components as cycles of the permutation.
    Components(BraidInput),
    /// Pairwise linking numbers of the closure.
    Linking(BraidInput),
    /// Number of full twists the positive word factors through.
    Twists(BraidInput),
    /// Components, Euler characteristic, linking numbers and Alexander polynomial.
    Invariants(BraidInput),
    /// Delete closure components by id (least top position).
    Delete {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, value_delimiter = ',', required = true)]
        components: Vec<usize>,
    },
    /// Add the braid axis as a new component.
    AdjoinAxis(BraidInput),
    /// Match the form B0 (s1...s_{a-2})^j D^2 with B0 on the first a-1 strands.
    MatchCase2 {
        #[command(flatten)]
        input: BraidInput,
        /// Pin the wheel exponent to (K-1)(a-1).
        #[arg(long)]
        twists: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    SatelliteT,
    SatelliteV,
    CompanionT,
    CompanionMidT,
    CompanionV,
}

#[derive(Subcommand)]
enum FamilyOp {
    /// Braid word of a T-link literal.
    Tlink { literal: String },
    /// Braid word of a V-link literal.
    Vlink { literal: String },
    /// Build a member of one of the standard families.
    Make {
        #[arg(value_enum)]
        kind: FamilyKind,
        #[arg(long, default_value_t = 1)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, default_value_t = 2)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum PaperOp {
    /// Run every verification pipeline.
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        /// Family grid, e.g. "a=1..3,b=1..3,c=1..3,k=0..3".
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show the component-deletion reduction for one family point.
    DeletionChain {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        k: usize,
    },
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(2);
    }
}

fn print_json<T: Serialize>(value: &T) {
    emit(&(serde_json::to_string_pretty(value).expect("serializable output") + "\n"));
}

fn run_braid(op: BraidOp) -> Result<()> {
    match op {
        BraidOp::Normalize(input) => {
            let w = input.word()?;
            let nf = normal_form(&w)?;
            print_json(&json!({
                "input": w,
                "normal_form": nf,
                "word": nf.to_word(),
            }));
        }
        BraidOp::Components(input) => print_json(&closure_components(&input.word()?)),
        BraidOp::Linking(input) => print_json(&linking_matrix(&input.word()?)?),
        BraidOp::Twists(input) => print_json(&extract_full_twists(&input.word()?)?),
        BraidOp::Invariants(input) => print_json(&invariant_bundle(&input.word()?)?),
        BraidOp::Delete { input, components } => {
            let ids: BTreeSet<usize> = components.into_iter().collect();
            print_json(&delete_components(&input.word()?, &ids)?);
        }
        BraidOp::AdjoinAxis(input) => print_json(&adjoin_axis(&input.word()?)?),
        BraidOp::MatchCase2 { input, twists } => {
            print_json(&match_case2_form(&input.word()?, twists)?)
        }
    }
    Ok(())
}

fn run_family(op: FamilyOp) -> Result<()> {
    match op {
        FamilyOp::Tlink { literal } => {
            let spec: TLinkSpec = literal.parse()?;
            print_json(&json!({ "spec": spec, "braid": t_link_braid(&spec) }));
        }
        FamilyOp::Vlink { literal } => {
            let spec: VLinkSpec = literal.parse()?;
            print_json(&json!({ "spec": spec, "braid": v_link_braid(&spec) }));
        }
        FamilyOp::Make { kind, a, b, c, k } => {
            let p = FamilyParams::new(a, b, c, k);
            let (spec, braid) = match kind {
                FamilyKind::SatelliteT => {
                    let s = satellite_family_t(p)?;
                    (json!(s), t_link_braid(&s))
                }
                FamilyKind::SatelliteV => {
                    let s = satellite_family_v(p)?;
                    (json!(s), v_link_braid(&s))
                }
                FamilyKind::CompanionT => (json!(companion_t(k)), t_link_braid(&companion_t(k))),
                FamilyKind::CompanionMidT => {
                    (json!(companion_mid_t(k)), t_link_braid(&companion_mid_t(k)))
                }
                FamilyKind::CompanionV => (json!(companion_v(k)), v_link_braid(&companion_v(k))),
            };
            print_json(&json!({ "spec": spec, "braid": braid }));
        }
    }
    Ok(())
}

fn run_paper(op: PaperOp) -> Result<bool> {
    match op {
        PaperOp::VerifyAll {
            kmax,
            grid,
            format,
            out,
        } => {
            let grid = match grid {
                Some(spec) => parse_grid(&spec)?,
                None => default_grid(),
            };
            let config = VerifyConfig {
                k_max: kmax,
                grid,
                ..VerifyConfig::default()
            };
            let report = verify_all(&config);
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| {
                        Error::InvalidParams(format!("cannot write {}: {e}", path.display()))
                    })?;
                    eprintln!(
                        "{} pass, {} fail; report written to {}",
                        report.summary.pass,
                        report.summary.fail,
                        path.display()
                    );
                }
                None => emit(&text),
            }
            Ok(report.all_passed())
        }
        PaperOp::DeletionChain { a, b, c, k } => {
            let chain = deletion_chain(FamilyParams::new(a, b, c, k))?;
            print_json(&chain);
            Ok(chain.first.bundle_matches && chain.second.bundle_matches)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Braid { op } => run_braid(op).map(|()| true),
        Command::Family { op } => run_family(op).map(|()| true),
        Command::Paper { op } => run_paper(op),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
