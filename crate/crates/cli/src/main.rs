use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thompson_core::geodesy::{
    bfs_ball_with, fellow_traveller_demo, greedy_geodesic, BallLimits, TieBreak, DEFAULT_CAPACITY,
};
use thompson_core::normal_form::{NormalForm, XWord};
use thompson_core::{
    length, multiply, reducing_generators, seesaw_word, verify_swing, Generator, SeesawParams, TreePair,
};

mod render;

const CAPACITY_VAR: &str = "THOMPSON_BFS_CAPACITY";

#[derive(Parser)]
#[command(name = "thompson", version, about = "Thompson's group F as tree pair diagrams")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Word length of an element.
    Len {
        #[command(flatten)]
        element: Element,
    },
    /// Product of two elements.
    Mul { a: String, b: String },
    /// Inverse of an element.
    Inv {
        #[command(flatten)]
        element: Element,
    },
    /// Normal form of an element.
    Nf {
        #[command(flatten)]
        element: Element,
    },
    /// Expand a normal form into a word in x0, x1.
    Word {
        #[command(flatten)]
        normal_form: Element,
    },
    /// Generators that shorten an element.
    Reducers {
        #[command(flatten)]
        element: Element,
    },
    /// A geodesic word found by greedy descent.
    Geodesic {
        #[command(flatten)]
        element: Element,
        /// Generator tried first at every step.
        #[arg(long)]
        prefer: Option<String>,
    },
    #[command(subcommand)]
    Seesaw(SeesawCommand),
    /// Breadth-first ball around the identity.
    Ball {
        #[arg(long)]
        radius: u32,
        /// Write one "<NEG:POS> <distance>" line per element.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Compare word length with breadth-first distance on a whole ball.
    OracleCheck {
        #[arg(long)]
        radius: u32,
    },
    #[command(subcommand)]
    Demo(DemoCommand),
    /// Draw both trees of an element.
    Render {
        #[command(flatten)]
        element: Element,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
}

#[derive(Subcommand)]
enum SeesawCommand {
    /// Build S(l, m).
    Gen {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
    },
    /// Check that S(l, m) has swing k; defaults to l = m = k.
    Verify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Two geodesics around S(s, s) that drift apart.
    FellowTraveller {
        #[arg(long)]
        s: u32,
    },
}

/// An element given as one or more whitespace-separated tokens.
#[derive(Args)]
struct Element {
    #[arg(value_name = "ELEMENT", required = true, num_args = 1..)]
    tokens: Vec<String>,
}

impl Element {
    fn parse(&self) -> anyhow::Result<TreePair> {
        parse_element(&self.tokens.join(" "))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Dot,
}

/// A check that ran to completion and found a discrepancy.
#[derive(Debug)]
struct VerificationFailure;

/// Pair encoding if the text contains ':', otherwise a product of `x<n>^e`
/// factors (generator words are the special case n <= 1), `e` for identity.
fn parse_element(text: &str) -> anyhow::Result<TreePair> {
    let text = text.trim();
    if text.contains(':') {
        return Ok(TreePair::decode(text)?);
    }
    Ok(text.parse::<XWord>()?.evaluate())
}

fn capacity() -> anyhow::Result<usize> {
    match std::env::var(CAPACITY_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{CAPACITY_VAR}={v:?} is not a nonnegative integer")),
        Err(_) => Ok(DEFAULT_CAPACITY),
    }
}

fn limits() -> anyhow::Result<BallLimits> {
    Ok(BallLimits {
        capacity: capacity()?,
        ..BallLimits::default()
    })
}

fn names(gs: &[Generator]) -> Vec<&'static str> {
    gs.iter().map(|g| g.name()).collect()
}

fn element_json(w: &TreePair) -> serde_json::Value {
    json!({
        "pair": w.encode(),
        "normal_form": NormalForm::from_pair(w).to_string(),
        "length": length(w),
    })
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Result<(), VerificationFailure>> {
    let json = cli.json;
    match cli.command {
        Command::Len { element } => {
            let w = element.parse()?;
            if json {
                print_json(&json!({ "pair": w.encode(), "length": length(&w) }))?;
            } else {
                println!("{}", length(&w));
            }
        }
        Command::Mul { a, b } => {
            let w = multiply(&parse_element(&a)?, &parse_element(&b)?);
            if json {
                print_json(&element_json(&w))?;
            } else {
                println!("{w}");
            }
        }
        Command::Inv { element } => {
            let w = element.parse()?.inverse();
            if json {
                print_json(&element_json(&w))?;
            } else {
                println!("{w}");
            }
        }
        Command::Nf { element } => {
            let nf = NormalForm::from_pair(&element.parse()?);
            if json {
                print_json(&json!({ "normal_form": nf }))?;
            } else {
                println!("{nf}");
            }
        }
        Command::Word { normal_form } => {
            let word = NormalForm::from_pair(&normal_form.parse()?).to_genword();
            if json {
                print_json(&json!({ "word": word, "word_length": word.len() }))?;
            } else {
                println!("{word}");
            }
        }
        Command::Reducers { element } => {
            let reducers = reducing_generators(&element.parse()?);
            if json {
                print_json(&json!({ "reducers": names(&reducers) }))?;
            } else {
                println!("{}", names(&reducers).join(" "));
            }
        }
        Command::Geodesic { element, prefer } => {
            let w = element.parse()?;
            let tie_break = match prefer {
                Some(g) => TieBreak::prefer(g.parse()?),
                None => TieBreak::default(),
            };
            let word = greedy_geodesic(&w, tie_break);
            if json {
                print_json(&json!({ "word": word, "length": word.len() }))?;
            } else {
                println!("{word}");
            }
        }
        Command::Seesaw(SeesawCommand::Gen { l, m }) => {
            let params = SeesawParams::new(l, m)?;
            let w = seesaw_word(params);
            if json {
                let mut v = element_json(&w);
                v["l"] = l.into();
                v["m"] = m.into();
                print_json(&v)?;
            } else {
                println!("{w}\n{}", NormalForm::from_pair(&w));
            }
        }
        Command::Seesaw(SeesawCommand::Verify { k, l, m }) => {
            let params = SeesawParams::new(l.unwrap_or(k), m.unwrap_or(k))?;
            let report = verify_swing(&seesaw_word(params), Generator::X0, k);
            print_json(&report)?;
            if report.swing < k {
                return Ok(Err(VerificationFailure));
            }
        }
        Command::Ball { radius, dump } => {
            let ball = bfs_ball_with(radius, limits()?)?;
            if let Some(path) = dump {
                let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                let mut out = BufWriter::new(file);
                ball.dump(&mut out)?;
                out.flush()?;
            }
            if json {
                print_json(&json!({
                    "radius": radius,
                    "size": ball.len(),
                    "sphere_sizes": ball.sphere_sizes(),
                }))?;
            } else {
                let sizes: Vec<String> = ball.sphere_sizes().iter().map(ToString::to_string).collect();
                println!("sphere sizes: {}\nball size: {}", sizes.join(" "), ball.len());
            }
        }
        Command::OracleCheck { radius } => {
            let ball = bfs_ball_with(radius, limits()?)?;
            let mut mismatches = Vec::new();
            for (key, d) in ball.iter() {
                let w = TreePair::decode(key)?;
                let len = length(&w);
                if len != d {
                    mismatches.push(json!({ "pair": key, "length": len, "distance": d }));
                }
            }
            if json {
                print_json(&json!({
                    "radius": radius,
                    "size": ball.len(),
                    "mismatches": mismatches,
                }))?;
            } else {
                println!("radius {radius}: {} elements, {} mismatches", ball.len(), mismatches.len());
                for m in &mismatches {
                    println!("  {m}");
                }
            }
            if !mismatches.is_empty() {
                return Ok(Err(VerificationFailure));
            }
        }
        Command::Demo(DemoCommand::FellowTraveller { s }) => {
            if !(1..=32).contains(&s) {
                anyhow::bail!("--s must be between 1 and 32 (got {s})");
            }
            print_json(&fellow_traveller_demo(s)?)?;
        }
        Command::Render { element, format } => {
            let w = element.parse()?;
            let text = match format {
                RenderFormat::Ascii => render::ascii(&w),
                RenderFormat::Dot => render::dot(&w),
            };
            print!("{text}");
        }
    }
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(VerificationFailure)) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
