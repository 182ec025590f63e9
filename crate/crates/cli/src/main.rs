//! `warp`: warping polynomials of knot diagrams from the command line.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 property violations
//! (`verify`), 3 polynomial rejected where a witness was requested
//! (`witness`). `checkpoly` reports rejection with exit code 0.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use warp_core::characterize::{recognize, witness};
use warp_core::notation::{braid_closure, canonical_form, format_poly_list, parse_gauss, parse_poly, BraidWord};
use warp_core::search::{dealternating_number, run_property_suite};
use warp_core::transform::{connected_sum, insert_kink, KinkKind};
use warp_core::warping::{fg_decomposition, labeling, predict_crossing_change};
use warp_core::{GaussDiagram, WarpPoly};

#[derive(Parser)]
#[command(name = "warp", version, about = "Warping degrees and warping polynomials of oriented knot diagrams")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// Render Gauss codes in canonical form (ids by first appearance, least rotation)
    #[arg(long, global = true)]
    canonical: bool,
    #[command(subcommand)]
    command: Command,
}

/// A diagram given as a Gauss code, or as a braid word to close up.
#[derive(Args)]
struct DiagramInput {
    /// Gauss code, e.g. "O1 U2 O3 U1 O2 U3"
    code: Option<String>,
    /// Braid word letters, e.g. "1 2 -1". Letter i crosses positions i and
    /// i+1; for positive letters the strand at position i passes over.
    #[arg(long, allow_hyphen_values = true, requires = "strands", conflicts_with = "code")]
    braid: Option<String>,
    /// Number of braid strands
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KinkType {
    /// over pass first: W + t^i (1 + t)
    #[value(name = "1a")]
    OverFirst,
    /// under pass first: t W + t^i (1 + t)
    #[value(name = "1b")]
    UnderFirst,
}

#[derive(Subcommand)]
enum Command {
    /// Warping polynomial
    Poly(DiagramInput),
    /// Warping degree of every edge (edge j follows pass j)
    Label(DiagramInput),
    /// Span of the warping polynomial
    Span(DiagramInput),
    /// Warping degree d(D)
    Degree(DiagramInput),
    /// Whether d(D) = 0
    Monotone(DiagramInput),
    /// Whether over and under passes alternate
    Alternating(DiagramInput),
    /// Whether the diagram has exactly one bridge
    Onebridge(DiagramInput),
    /// Mirror image
    Mirror(DiagramInput),
    /// Orientation reversal
    Reverse(DiagramInput),
    /// Crossing change
    Cc {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long)]
        crossing: u32,
    },
    /// Reidemeister-1 kink insertion after pass EDGE
    Kink {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long = "type", value_enum)]
        kind: KinkType,
        #[arg(long)]
        edge: usize,
    },
    /// Connected sum at edge EDGE of the first code and EDGE2 of the second
    Connect {
        first: String,
        #[arg(long)]
        edge: usize,
        second: String,
        #[arg(long)]
        edge2: usize,
    },
    /// Decide whether a polynomial is a warping polynomial
    Checkpoly { poly: String },
    /// Build a diagram with the given warping polynomial
    Witness { poly: String },
    /// f/g split of the polynomial at a crossing and the post-change prediction
    Fg {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long)]
        crossing: u32,
    },
    /// Dealternating number by brute force
    Dalt(DiagramInput),
    /// Check every identity on all Gauss codes up to N crossings
    Verify {
        #[arg(long = "max-crossings", default_value_t = 5)]
        max_crossings: usize,
    },
}

struct Reply {
    text: String,
    json: Value,
    code: u8,
}

impl Reply {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Reply { text: text.into(), json, code: 0 }
    }
}

type CmdResult = Result<Reply, String>;

struct Ctx {
    canonical: bool,
}

impl Ctx {
    fn render(&self, d: &GaussDiagram) -> String {
        if self.canonical {
            canonical_form(d).to_string()
        } else {
            d.to_string()
        }
    }

    fn diagram(&self, input: &DiagramInput) -> Result<GaussDiagram, String> {
        match (&input.code, &input.braid) {
            (Some(code), None) => parse_gauss(code).map_err(|e| e.to_string()),
            (None, Some(word)) => {
                let n = input.strands.ok_or("--braid needs --strands")?;
                let w = BraidWord::parse(n, word).map_err(|e| e.to_string())?;
                braid_closure(&w).map_err(|e| e.to_string())
            }
            _ => Err("give a Gauss code or --braid with --strands".into()),
        }
    }

    fn transformed(&self, d: &GaussDiagram) -> CmdResult {
        let p = poly_of(d)?;
        let code = self.render(d);
        Ok(Reply::ok(format!("{code}\n{p}"), json!({ "code": code, "poly": p.to_string() })))
    }
}

fn poly_of(d: &GaussDiagram) -> Result<WarpPoly, String> {
    warp_core::polynomial(d).map_err(|e| e.to_string())
}

fn err(e: warp_core::Error) -> String {
    e.to_string()
}

fn run(cli: Cli) -> CmdResult {
    let ctx = Ctx { canonical: cli.canonical };
    match cli.command {
        Command::Poly(input) => {
            let d = ctx.diagram(&input)?;
            let p = poly_of(&d)?;
            Ok(Reply::ok(p.to_string(), json!({ "code": ctx.render(&d), "poly": p.to_string(), "list": format_poly_list(&p) })))
        }
        Command::Label(input) => {
            let d = ctx.diagram(&input)?;
            let labels = labeling(&d).map_err(err)?.labels().to_vec();
            let text = labels.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            Ok(Reply::ok(text, json!({ "code": ctx.render(&d), "labels": labels })))
        }
        Command::Span(input) => {
            let d = ctx.diagram(&input)?;
            let lab = labeling(&d).map_err(err)?;
            Ok(Reply::ok(lab.span().to_string(), json!({ "code": ctx.render(&d), "span": lab.span() })))
        }
        Command::Degree(input) => {
            let d = ctx.diagram(&input)?;
            let lab = labeling(&d).map_err(err)?;
            Ok(Reply::ok(
                lab.min().to_string(),
                json!({ "code": ctx.render(&d), "degree": lab.min(), "max_degree": lab.max() }),
            ))
        }
        Command::Monotone(input) => {
            let d = ctx.diagram(&input)?;
            let v = labeling(&d).map_err(err)?.min() == 0;
            Ok(Reply::ok(v.to_string(), json!({ "code": ctx.render(&d), "monotone": v })))
        }
        Command::Alternating(input) => {
            let d = ctx.diagram(&input)?;
            let v = d.is_alternating();
            Ok(Reply::ok(v.to_string(), json!({ "code": ctx.render(&d), "alternating": v })))
        }
        Command::Onebridge(input) => {
            let d = ctx.diagram(&input)?;
            let v = d.is_one_bridge().map_err(err)?;
            Ok(Reply::ok(v.to_string(), json!({ "code": ctx.render(&d), "one_bridge": v })))
        }
        Command::Mirror(input) => ctx.transformed(&ctx.diagram(&input)?.mirror()),
        Command::Reverse(input) => ctx.transformed(&ctx.diagram(&input)?.reverse()),
        Command::Cc { input, crossing } => ctx.transformed(&ctx.diagram(&input)?.crossing_change(crossing).map_err(err)?),
        Command::Kink { input, kind, edge } => {
            let kind = match kind {
                KinkType::OverFirst => KinkKind::OverFirst,
                KinkType::UnderFirst => KinkKind::UnderFirst,
            };
            ctx.transformed(&insert_kink(&ctx.diagram(&input)?, edge, kind).map_err(err)?)
        }
        Command::Connect { first, edge, second, edge2 } => {
            let d = parse_gauss(&first).map_err(err)?;
            let e = parse_gauss(&second).map_err(err)?;
            ctx.transformed(&connected_sum(&d, edge, &e, edge2).map_err(err)?)
        }
        Command::Checkpoly { poly } => {
            let p = parse_poly(&poly).map_err(err)?;
            Ok(match recognize(&p) {
                Ok(form) => Reply::ok(
                    format!("Accept: {form}"),
                    json!({ "poly": p.to_string(), "accept": true, "k": form.k, "l": form.l, "m": form.m }),
                ),
                Err(reason) => Reply::ok(
                    format!("Reject: {reason}"),
                    json!({ "poly": p.to_string(), "accept": false, "reason": reason.to_string() }),
                ),
            })
        }
        Command::Witness { poly } => {
            let p = parse_poly(&poly).map_err(err)?;
            match recognize(&p) {
                Ok(form) => {
                    let d = witness(&form).map_err(err)?;
                    let code = ctx.render(&d);
                    Ok(Reply::ok(code.clone(), json!({ "poly": p.to_string(), "code": code })))
                }
                Err(reason) => Ok(Reply {
                    text: format!("Reject: {reason}"),
                    json: json!({ "poly": p.to_string(), "accept": false, "reason": reason.to_string() }),
                    code: 3,
                }),
            }
        }
        Command::Fg { input, crossing } => {
            let d = ctx.diagram(&input)?;
            let (f, g) = fg_decomposition(&d, crossing).map_err(err)?;
            let predicted = predict_crossing_change(&d, crossing).map_err(err)?;
            Ok(Reply::ok(
                format!("f: {f}\ng: {g}\npredicted: {predicted}"),
                json!({
                    "code": ctx.render(&d),
                    "crossing": crossing,
                    "f": f.to_string(),
                    "g": g.to_string(),
                    "predicted": predicted.to_string(),
                }),
            ))
        }
        Command::Dalt(input) => {
            let d = ctx.diagram(&input)?;
            let dalt = dealternating_number(&d).map_err(err)?;
            Ok(Reply::ok(dalt.to_string(), json!({ "code": ctx.render(&d), "dalt": dalt })))
        }
        Command::Verify { max_crossings } => {
            let report = run_property_suite(max_crossings).map_err(err)?;
            let mut text = format!(
                "checked {} diagrams with {}..={} crossings: {} violations",
                report.diagrams_checked,
                report.crossings_checked.min,
                report.crossings_checked.max,
                report.violations.len()
            );
            for v in &report.violations {
                text.push_str(&format!("\n{}: {} ({})", v.property, v.code, v.detail));
            }
            let json = serde_json::to_value(&report).map_err(|e| e.to_string())?;
            Ok(Reply { text, json, code: if report.is_clean() { 0 } else { 2 } })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(reply) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&reply.json).expect("json value"));
            } else {
                println!("{}", reply.text);
            }
            ExitCode::from(reply.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
