//! The `basecover` command line.
//!
//! ```text
//! basecover base skew "9^3,7^2,4/4,3,1"
//! basecover cover product "4,3,1" "5,2,2" --rect 7x4
//! basecover decompose skew "2,1/1"
//! basecover verify thm34 --max-boxes 12 --seed 7 --count 200
//! ```

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::base_cover::{
    base_product, base_skew, cover_product, cover_skew, ordinary_rectangle, product_shape,
};
use crate::error::{Error, Result};
use crate::lr::{Oracle, DEFAULT_MAX_BOXES};
use crate::partition::{Partition, Rectangle};
use crate::skew::SkewShape;
use crate::verify::{verify, Scope, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "basecover", version, about = "Base and cover partitions of skew characters and products")]
pub struct Cli {
    /// Print a JSON object {command, inputs, result, elapsed_ms} instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full decomposition by LR tableau enumeration.
    Decompose(ShapeArgs),
    /// Base partition (row-wise minimum of all constituents).
    Base(ShapeArgs),
    /// Cover partition (row-wise maximum of all constituents).
    Cover(ShapeArgs),
    /// Durfee size of the character.
    Durfee(ShapeArgs),
    /// Row multisets of the diagrams with the top i-1 boxes of each column removed.
    Rho(RhoArgs),
    /// Maximal rectangle placements inside the diagram.
    Rectangles(ShapeArgs),
    /// Cross-check the closed forms against the oracle on seeded random instances.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// One argument OUTER/INNER, e.g. "11,6,5^3,4/3^2".
    Skew,
    /// Two factors; with --rect this is the Schubert product.
    Product,
    /// Two factors and a mandatory --rect.
    Schubert,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    pub target: Target,

    /// The skew shape, or the two factors.
    #[arg(required = true, num_args = 1..=2)]
    pub args: Vec<String>,

    /// Bounding rectangle KxL: K columns, L rows.
    #[arg(long, value_parser = parse_rect)]
    pub rect: Option<Rectangle>,

    /// Draw the diagram under the answer.
    #[arg(long)]
    pub draw: bool,

    /// Box ceiling for the enumeration oracle.
    #[arg(long, default_value_t = DEFAULT_MAX_BOXES)]
    pub max_boxes: usize,
}

#[derive(Debug, Args)]
pub struct RhoArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,

    /// Only this level (1-based); all nonempty levels otherwise.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub index: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_scope)]
    pub scope: Scope,

    #[arg(long, default_value_t = 12)]
    pub max_boxes: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 100)]
    pub count: usize,
}

fn parse_rect(s: &str) -> std::result::Result<Rectangle, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_scope(s: &str) -> std::result::Result<Scope, String> {
    s.parse()
        .map_err(|_| format!("unknown scope {s:?}; expected thm34, thm42, thm43, thm45, symmetries or all"))
}

/// What a finished invocation printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A computed answer in both renderings.
struct Answer {
    text: String,
    result: Value,
    success: bool,
}

impl Answer {
    fn ok(text: String, result: Value) -> Self {
        Answer {
            text,
            result,
            success: true,
        }
    }

    fn partition(p: &Partition) -> Self {
        Answer::ok(format!("{p}\n"), json!(p))
    }
}

/// Parses `args` (program name first) and runs the request.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let rendered = e.to_string();
            if !e.use_stderr() {
                return Execution {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                };
            }
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            Execution {
                code: 2,
                stdout: String::new(),
                stderr: format!("{line}\n"),
            }
        }
    }
}

pub fn run(cli: &Cli) -> Execution {
    let started = Instant::now();
    match answer(&cli.command) {
        Ok(answer) => {
            let stdout = if cli.json {
                let doc = json!({
                    "command": command_name(&cli.command),
                    "inputs": inputs(&cli.command),
                    "result": answer.result,
                    "elapsed_ms": started.elapsed().as_millis() as u64,
                });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
            } else {
                answer.text
            };
            Execution {
                code: if answer.success { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Execution {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {}: {e}\n", e.name()),
        },
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Decompose(_) => "decompose",
        Command::Base(_) => "base",
        Command::Cover(_) => "cover",
        Command::Durfee(_) => "durfee",
        Command::Rho(_) => "rho",
        Command::Rectangles(_) => "rectangles",
        Command::Verify(_) => "verify",
    }
}

fn inputs(command: &Command) -> Value {
    let shape_inputs = |a: &ShapeArgs| {
        json!({
            "target": a.target,
            "args": a.args,
            "rect": a.rect.map(|r| r.to_string()),
        })
    };
    match command {
        Command::Verify(v) => json!({
            "scope": v.scope,
            "max_boxes": v.max_boxes,
            "seed": v.seed,
            "count": v.count,
        }),
        Command::Rho(r) => {
            let mut v = shape_inputs(&r.shape);
            v["index"] = json!(r.index);
            v
        }
        Command::Decompose(a)
        | Command::Base(a)
        | Command::Cover(a)
        | Command::Durfee(a)
        | Command::Rectangles(a) => shape_inputs(a),
    }
}

/// The parsed operands of a shape command.
enum Operands {
    Skew(SkewShape),
    Product {
        mu: Partition,
        nu: Partition,
        rect: Option<Rectangle>,
    },
}

impl Operands {
    fn parse(a: &ShapeArgs) -> Result<Self> {
        let arity = |n: usize| -> Result<()> {
            if a.args.len() != n {
                return Err(Error::parse(
                    &a.args.join(" "),
                    format!("expected {n} argument(s) for this target"),
                ));
            }
            Ok(())
        };
        match a.target {
            Target::Skew => {
                arity(1)?;
                if a.rect.is_some() {
                    return Err(Error::parse("--rect", "only products take a rectangle"));
                }
                Ok(Operands::Skew(a.args[0].parse()?))
            }
            Target::Product | Target::Schubert => {
                arity(2)?;
                if a.target == Target::Schubert && a.rect.is_none() {
                    return Err(Error::parse(&a.args.join(" "), "schubert needs --rect KxL"));
                }
                Ok(Operands::Product {
                    mu: a.args[0].parse()?,
                    nu: a.args[1].parse()?,
                    rect: a.rect,
                })
            }
        }
    }

    /// The diagram whose pictures, rho levels and rectangles describe the request.
    fn diagram(&self) -> Result<SkewShape> {
        match self {
            Operands::Skew(a) => Ok(a.clone()),
            Operands::Product { mu, nu, rect } => match rect.or_else(|| ordinary_rectangle(mu, nu)) {
                Some(r) => product_shape(mu, nu, r),
                None => Ok(SkewShape::empty()),
            },
        }
    }
}

fn answer(command: &Command) -> Result<Answer> {
    let (args, mut answer) = match command {
        Command::Verify(v) => return verify_answer(v),
        Command::Decompose(a) => (a, decompose_answer(a)?),
        Command::Base(a) => (a, base_answer(a)?),
        Command::Cover(a) => (a, cover_answer(a)?),
        Command::Durfee(a) => (a, durfee_answer(a)?),
        Command::Rho(r) => (&r.shape, rho_answer(r)?),
        Command::Rectangles(a) => (a, rectangles_answer(a)?),
    };
    if args.draw {
        let picture = Operands::parse(args)?.diagram()?.render();
        answer.text.push('\n');
        answer.text.push_str(&picture);
    }
    Ok(answer)
}

fn decompose_answer(a: &ShapeArgs) -> Result<Answer> {
    let oracle = Oracle::with_max_boxes(a.max_boxes);
    let d = match Operands::parse(a)? {
        Operands::Skew(shape) => oracle.decompose(&shape)?,
        Operands::Product { mu, nu, rect: None } => oracle.outer_product(&mu, &nu)?,
        Operands::Product { mu, nu, rect: Some(r) } => oracle.schubert_product(&mu, &nu, r)?,
    };
    Ok(Answer::ok(d.to_text(), json!(d)))
}

fn base_answer(a: &ShapeArgs) -> Result<Answer> {
    let p = match Operands::parse(a)? {
        Operands::Skew(shape) => base_skew(&shape)?,
        Operands::Product { mu, nu, rect: None } => base_product(&mu, &nu),
        // No closed form inside a rectangle; ask the oracle.
        Operands::Product { mu, nu, rect: Some(r) } => Oracle::with_max_boxes(a.max_boxes)
            .schubert_product(&mu, &nu, r)?
            .base()?,
    };
    Ok(Answer::partition(&p))
}

fn cover_answer(a: &ShapeArgs) -> Result<Answer> {
    let p = match Operands::parse(a)? {
        Operands::Skew(shape) => cover_skew(&shape)?,
        Operands::Product { mu, nu, rect } => cover_product(&mu, &nu, rect)?,
    };
    Ok(Answer::partition(&p))
}

fn durfee_answer(a: &ShapeArgs) -> Result<Answer> {
    let d = match Operands::parse(a)? {
        Operands::Skew(shape) => match cover_skew(&shape) {
            Ok(cover) => cover.durfee(),
            Err(Error::ConstraintViolated(_)) => {
                Oracle::with_max_boxes(a.max_boxes).decompose(&shape)?.durfee()
            }
            Err(Error::EmptyShape) => 0,
            Err(e) => return Err(e),
        },
        Operands::Product { mu, nu, rect } => cover_product(&mu, &nu, rect)?.durfee(),
    };
    Ok(Answer::ok(format!("{d}\n"), json!(d)))
}

fn rho_answer(r: &RhoArgs) -> Result<Answer> {
    let shape = Operands::parse(&r.shape)?.diagram()?;
    let levels: Vec<usize> = match r.index {
        Some(i) => vec![i as usize],
        None => (1..=shape.num_rows()).filter(|&i| !shape.rho(i).is_empty()).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for i in levels {
        let parts = shape.rho(i);
        let shown = Partition::new(parts.clone()).expect("rho is sorted descending");
        writeln!(text, "{i}\t{shown}").expect("writing to a String");
        rows.push(json!({ "index": i, "parts": parts }));
    }
    Ok(Answer::ok(text, Value::Array(rows)))
}

fn rectangles_answer(a: &ShapeArgs) -> Result<Answer> {
    let shape = Operands::parse(a)?.diagram()?;
    let placements = shape.max_rectangle_placements();
    let text = placements.iter().map(|p| format!("{p}\n")).collect();
    Ok(Answer::ok(text, json!(placements)))
}

fn verify_answer(v: &VerifyArgs) -> Result<Answer> {
    let report = verify(
        v.scope,
        VerifyConfig {
            max_boxes: v.max_boxes,
            seed: v.seed,
            count: v.count,
        },
    )?;
    Ok(Answer {
        text: report.to_text(),
        result: json!(report),
        success: report.passed(),
    })
}
