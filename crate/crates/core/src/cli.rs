//! Command-line front end. `run` does all the work and returns what the
//! binary should print, so tests can drive it without a subprocess.
//!
//! Exit codes: 0 success, 1 invalid input, 2 valid input with a negative
//! verdict (a frieze that does not close, a dissection whose sign disagrees).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::arith::ExtRational;
use crate::contfrac::{
    bamboo_triangulation, convergents_negative, convergents_positive, evaluate_negative, evaluate_positive,
    expand_negative, expand_positive, matrix_negative, matrix_positive, negative_to_positive, positive_to_negative,
    NegativeCF, PositiveCF,
};
use crate::error::Error;
use crate::frieze::{build_frieze, default_max_rows, parse_rational_sequence, parse_sequence, FriezeBuild, Quiddity};
use crate::modular::{
    check_ovsienko_sign, dissection_quiddity, expected_verdict, rl_word_from_fraction, stern_brocot_locate,
    stern_brocot_sequence, verify_quiddity_identity, Dissection3d, Verdict,
};
use crate::render::{render_svg, Model, RenderConfig, RenderTarget};
use crate::triangulation::{dual_tree, enumerate_triangulations, farey_labels, triangulation_from_quiddity, Triangulation};

#[derive(Debug, Parser)]
#[command(name = "friezes", version, about = "Frieze patterns, continued fractions and the Farey graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the frieze with the given second row, e.g. `2,1,4,2,1,3,2`
    Frieze {
        #[arg(allow_hyphen_values = true)]
        row: String,
        #[arg(long)]
        json: bool,
        /// Row bound, counting the top row of ones (default 4p + 4 or FRIEZE_MAX_ROWS)
        #[arg(long)]
        max_rows: Option<usize>,
    },
    /// Continued fractions of p/q > 1, or conversion of a literal `[..]` / `[[..]]`
    Cf(CfArgs),
    /// Stern–Brocot tree: locate a fraction, list a sequence or print a path word
    Stern {
        #[arg(conflicts_with_all = ["sequence", "word"], required_unless_present_any = ["sequence", "word"])]
        fraction: Option<String>,
        #[arg(long, conflicts_with = "word")]
        sequence: Option<u32>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Check whether M(c_1, ..., c_n) is -I, +I or neither
    Verify {
        #[arg(allow_hyphen_values = true, conflicts_with = "dissection", required_unless_present = "dissection")]
        quiddity: Option<String>,
        /// JSON file `{"n": .., "cells": [[..], ..]}`
        #[arg(long)]
        dissection: Option<PathBuf>,
    },
    /// Triangulations as JSON, dual-tree DOT or Farey labels
    Triangulation {
        #[command(flatten)]
        source: Source,
        /// Print every triangulation of an n-gon, one JSON object per line
        #[arg(long, conflicts_with_all = ["quiddity", "cf", "file"])]
        enumerate: Option<usize>,
        #[arg(long, conflicts_with = "labels")]
        dot: bool,
        /// Farey labels with 1/0 at vertex 1 and 0/1 at vertex n
        #[arg(long)]
        labels: bool,
    },
    /// SVG drawing of the Farey graph, a triangulation or a bamboo
    Render {
        #[arg(value_parser = ["farey", "triangulation", "bamboo"])]
        target: String,
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "halfplane")]
        model: String,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 450)]
        height: u32,
        #[arg(long, default_value_t = 1.0)]
        stroke: f64,
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
}

#[derive(Debug, Args)]
struct CfArgs {
    #[arg(allow_hyphen_values = true)]
    input: String,
    #[arg(long)]
    positive: bool,
    #[arg(long)]
    negative: bool,
    #[arg(long, conflicts_with_all = ["convergents", "matrix"])]
    convert: bool,
    #[arg(long, conflicts_with = "matrix")]
    convergents: bool,
    #[arg(long)]
    matrix: bool,
}

#[derive(Debug, Args)]
struct Source {
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["cf", "file"])]
    quiddity: Option<String>,
    /// Positive continued fraction literal; its bamboo triangulation is used
    #[arg(long, conflicts_with = "file")]
    cf: Option<String>,
    /// Triangulation JSON `{"n": .., "triangles": [[..], ..]}`
    #[arg(long)]
    file: Option<PathBuf>,
}

/// What the binary prints and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn invalid(input: &str, e: &Error) -> Self {
        let mut stderr = format!("error: {e}\n");
        if let Error::Parse { position, .. } = e {
            let _ = writeln!(stderr, "  {input}\n  {}^", " ".repeat(*position));
        }
        CliOutput {
            stdout: String::new(),
            stderr,
            code: 1,
        }
    }
}

/// Run one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    stdout: String::new(),
                    stderr: text,
                    code: 1,
                }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    match cli.command {
        Command::Frieze { row, json, max_rows } => cmd_frieze(&row, json, max_rows),
        Command::Cf(args) => cmd_cf(&args),
        Command::Stern { fraction, sequence, word } => cmd_stern(fraction, sequence, word),
        Command::Verify { quiddity, dissection } => cmd_verify(quiddity, dissection),
        Command::Triangulation {
            source,
            enumerate,
            dot,
            labels,
        } => cmd_triangulation(&source, enumerate, dot, labels),
        Command::Render {
            target,
            source,
            model,
            width,
            height,
            stroke,
            depth,
        } => {
            let model = match model.parse::<Model>() {
                Ok(m) => m,
                Err(e) => return CliOutput::invalid(&model, &e),
            };
            let cfg = RenderConfig {
                width,
                height,
                model,
                stroke,
                depth,
            };
            cmd_render(&target, &source, &cfg)
        }
    }
}

fn cmd_frieze(row: &str, json: bool, max_rows: Option<usize>) -> CliOutput {
    let second = match parse_rational_sequence(row) {
        Ok(r) => r,
        Err(e) => return CliOutput::invalid(row, &e),
    };
    let bound = max_rows.unwrap_or_else(|| default_max_rows(second.len()));
    let pretty = |v: serde_json::Value| serde_json::to_string_pretty(&v).expect("json") + "\n";
    match build_frieze(&second, bound) {
        Ok(FriezeBuild::Closed(f)) => CliOutput::ok(if json { pretty(f.to_json()) } else { f.to_text() }),
        Ok(FriezeBuild::NonClosing(prefix)) => CliOutput {
            stdout: if json { pretty(prefix.to_json()) } else { prefix.to_text() },
            stderr: format!("no row of ones within {bound} rows; the frieze does not close\n"),
            code: 2,
        },
        // a row past the second turning non-positive is a verdict on valid input
        Err(e @ Error::NonPositiveEntry { row: r, .. }) if r > 2 => CliOutput {
            stdout: String::new(),
            stderr: format!("{e}; the frieze does not close\n"),
            code: 2,
        },
        Err(e) => CliOutput::invalid(row, &e),
    }
}

enum CfInput {
    Value(ExtRational),
    Positive(PositiveCF),
    Negative(NegativeCF),
}

fn parse_cf_input(s: &str) -> Result<CfInput, Error> {
    let t = s.trim_start();
    if t.starts_with("[[") {
        Ok(CfInput::Negative(s.parse()?))
    } else if t.starts_with('[') {
        Ok(CfInput::Positive(s.parse()?))
    } else {
        Ok(CfInput::Value(s.parse()?))
    }
}

fn cmd_cf(args: &CfArgs) -> CliOutput {
    match cf_text(args) {
        Ok(text) => CliOutput::ok(text),
        Err(e) => CliOutput::invalid(&args.input, &e),
    }
}

fn spaced(xs: &[ExtRational]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cf_text(args: &CfArgs) -> Result<String, Error> {
    let input = parse_cf_input(&args.input)?;
    let (want_pos, want_neg) = match (args.positive, args.negative) {
        (false, false) => (true, true),
        other => other,
    };
    let literal = !matches!(input, CfInput::Value(_));
    let mut lines = Vec::new();
    if args.convert {
        match input {
            CfInput::Positive(p) => lines.push(positive_to_negative(&p).to_string()),
            CfInput::Negative(c) => lines.push(negative_to_positive(&c).to_string()),
            CfInput::Value(x) => {
                if want_pos {
                    lines.push(negative_to_positive(&expand_negative(&x)?).to_string());
                }
                if want_neg {
                    lines.push(positive_to_negative(&expand_positive(&x)?).to_string());
                }
            }
        }
        return Ok(lines.join("\n") + "\n");
    }
    let x = match input {
        CfInput::Value(x) => x,
        CfInput::Positive(p) => evaluate_positive(p.coeffs())?,
        CfInput::Negative(c) => evaluate_negative(c.coeffs())?,
    };
    if literal && !(args.positive || args.negative || args.convergents || args.matrix) {
        return Ok(format!("{x}\n"));
    }
    if want_pos {
        let a = expand_positive(&x)?;
        lines.push(if args.matrix {
            matrix_positive(a.coeffs()).to_string()
        } else if args.convergents {
            spaced(&convergents_positive(&a))
        } else {
            a.to_string()
        });
    }
    if want_neg {
        let c = expand_negative(&x)?;
        lines.push(if args.matrix {
            matrix_negative(c.coeffs()).to_string()
        } else if args.convergents {
            spaced(&convergents_negative(&c))
        } else {
            c.to_string()
        });
    }
    Ok(lines.join("\n") + "\n")
}

fn cmd_stern(fraction: Option<String>, sequence: Option<u32>, word: Option<String>) -> CliOutput {
    if let Some(k) = sequence {
        if k > 20 {
            return CliOutput::invalid(&k.to_string(), &Error::DepthLimit(k, 20));
        }
        return CliOutput::ok(spaced(&stern_brocot_sequence(k)) + "\n");
    }
    if let Some(w) = word {
        let x = match w.parse::<ExtRational>() {
            Ok(x) => x,
            Err(e) => return CliOutput::invalid(&w, &e),
        };
        return match rl_word_from_fraction(&x) {
            Ok(word) => CliOutput::ok(word.to_compact().unwrap_or_else(|| word.to_string()) + "\n"),
            Err(e) => CliOutput::invalid(&w, &e),
        };
    }
    let f = fraction.expect("clap requires one of the three");
    let x = match f.parse::<ExtRational>() {
        Ok(x) => x,
        Err(e) => return CliOutput::invalid(&f, &e),
    };
    match stern_brocot_locate(&x) {
        Ok(loc) => {
            let mut out = format!("{x}\ndepth {}\nbetween {} and {}\n", loc.depth, loc.left, loc.right);
            if let Some(path) = loc.path.to_compact().filter(|p| !p.is_empty()) {
                let _ = writeln!(out, "path {path}");
            }
            CliOutput::ok(out)
        }
        Err(e) => CliOutput::invalid(&f, &e),
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::MinusI => "MinusI",
        Verdict::PlusI => "PlusI",
        Verdict::Other => "Other",
    }
}

fn cmd_verify(quiddity: Option<String>, dissection: Option<PathBuf>) -> CliOutput {
    if let Some(q) = quiddity {
        let c: Vec<BigInt> = match parse_sequence(&q) {
            Ok(c) if !c.is_empty() => c,
            Ok(_) => return CliOutput::invalid(&q, &Error::EmptyRow),
            Err(e) => return CliOutput::invalid(&q, &e),
        };
        let v = verify_quiddity_identity(&c);
        let mut out = CliOutput::ok(format!("{}\n", verdict_name(v)));
        if v == Verdict::Other {
            out.code = 1;
        }
        return out;
    }
    let path = dissection.expect("clap requires one of the two");
    let shown = path.display().to_string();
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return CliOutput::invalid(&shown, &Error::InvalidDissection(format!("{shown}: {e}"))),
    };
    let d: Dissection3d = match serde_json::from_str(&text) {
        Ok(d) => d,
        Err(e) => return CliOutput::invalid(&shown, &Error::InvalidDissection(e.to_string())),
    };
    let computed = verify_quiddity_identity(&dissection_quiddity(&d));
    let expected = expected_verdict(&d);
    if check_ovsienko_sign(&d) {
        CliOutput::ok(format!("{}, consistent\n", verdict_name(computed)))
    } else {
        CliOutput {
            stdout: format!(
                "{}, inconsistent (predicted {})\n",
                verdict_name(computed),
                verdict_name(expected)
            ),
            stderr: String::new(),
            code: 2,
        }
    }
}

fn load_triangulation(source: &Source) -> Result<Option<Triangulation>, (String, Error)> {
    if let Some(q) = &source.quiddity {
        let t = q
            .parse::<Quiddity>()
            .and_then(|q| triangulation_from_quiddity(&q))
            .map_err(|e| (q.clone(), e))?;
        return Ok(Some(t));
    }
    if let Some(cf) = &source.cf {
        let t = cf
            .parse::<PositiveCF>()
            .and_then(|a| bamboo_triangulation(&a))
            .map_err(|e| (cf.clone(), e))?;
        return Ok(Some(t.triangulation));
    }
    if let Some(path) = &source.file {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path)
            .map_err(|e| (shown.clone(), Error::InvalidTriangulation(format!("{shown}: {e}"))))?;
        let t: Triangulation =
            serde_json::from_str(&text).map_err(|e| (shown, Error::InvalidTriangulation(e.to_string())))?;
        return Ok(Some(t));
    }
    Ok(None)
}

fn cmd_triangulation(source: &Source, enumerate: Option<usize>, dot: bool, labels: bool) -> CliOutput {
    if let Some(n) = enumerate {
        if !(3..=14).contains(&n) {
            return CliOutput::invalid(
                &n.to_string(),
                &Error::InvalidTriangulation(format!("enumeration needs 3 <= n <= 14, got {n}")),
            );
        }
        let mut out = String::new();
        for t in enumerate_triangulations(n) {
            out.push_str(&t.to_json().to_string());
            out.push('\n');
        }
        return CliOutput::ok(out);
    }
    let t = match load_triangulation(source) {
        Ok(Some(t)) => t,
        Ok(None) => {
            return CliOutput::invalid(
                "",
                &Error::InvalidTriangulation("give --quiddity, --cf, --file or --enumerate".into()),
            )
        }
        Err((input, e)) => return CliOutput::invalid(&input, &e),
    };
    if dot {
        return CliOutput::ok(dual_tree(&t).to_dot());
    }
    if labels {
        return match farey_labels(&t, (1, t.n())) {
            Ok(l) => CliOutput::ok(spaced(&l) + "\n"),
            Err(e) => CliOutput::invalid("", &e),
        };
    }
    CliOutput::ok(t.to_json().to_string() + "\n")
}

fn cmd_render(target: &str, source: &Source, cfg: &RenderConfig) -> CliOutput {
    let loaded = match load_triangulation(source) {
        Ok(t) => t,
        Err((input, e)) => return CliOutput::invalid(&input, &e),
    };
    let result = match target {
        "farey" => render_svg(&RenderTarget::Farey, cfg),
        "bamboo" => {
            let Some(cf) = &source.cf else {
                return CliOutput::invalid("", &Error::InvalidConfig("bamboo needs --cf".into()));
            };
            match cf.parse::<PositiveCF>() {
                Ok(a) => render_svg(&RenderTarget::Bamboo(&a), cfg),
                Err(e) => Err(e),
            }
        }
        _ => match &loaded {
            Some(t) => render_svg(&RenderTarget::Triangulation(t), cfg),
            None => Err(Error::InvalidConfig("triangulation needs --quiddity, --cf or --file".into())),
        },
    };
    match result {
        Ok(svg) => CliOutput::ok(svg),
        Err(e) => CliOutput::invalid(target, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(line: &str) -> CliOutput {
        run(std::iter::once("friezes").chain(line.split_whitespace()))
    }

    #[test]
    fn cf_outputs() {
        assert_eq!(sh("cf 7/5 --positive").stdout, "[1,2,1,1]\n");
        assert_eq!(sh("cf 7/5 --negative").stdout, "[[2,2,3]]\n");
        assert_eq!(sh("cf 7/5 --matrix --negative").stdout, "[[7,-3],[5,-2]]\n");
        assert_eq!(sh("cf 7/5 --matrix --positive").stdout, "[[7,4],[5,3]]\n");
        assert_eq!(sh("cf 7/5 --convergents --negative").stdout, "2/1 3/2 7/5\n");
        assert_eq!(sh("cf [1,2,1,1] --convert").stdout, "[[2,2,3]]\n");
        assert_eq!(sh("cf [[2,2,3]] --convert").stdout, "[1,2,1,1]\n");
        assert_eq!(sh("cf [[2,2,3]]").stdout, "7/5\n");
        assert_eq!(sh("cf 1/2").code, 1);
        let bad = sh("cf 7/x");
        assert_eq!(bad.code, 1);
        assert!(bad.stderr.contains("position 2"));
    }

    #[test]
    fn frieze_exit_codes() {
        let ok = sh("frieze 2,1,4,2,1,3,2");
        assert_eq!(ok.code, 0);
        assert_eq!(ok.stdout.lines().count(), 6);
        let open = sh("frieze 2,2");
        assert_eq!(open.code, 2);
        assert!(!open.stderr.is_empty());
        let j = sh("frieze 1,1,1 --json");
        let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
        assert_eq!(v["order"], 3);
        assert_eq!(sh("frieze 2,x,3").code, 1);
        assert_eq!(sh("frieze 1,1,2,3").code, 1);
        assert_eq!(sh("frieze 1,2,2").code, 2);
    }

    #[test]
    fn stern_and_verify() {
        assert_eq!(sh("stern --word 4/3").stdout, "RLL\n");
        assert!(sh("stern 1/1").stdout.contains("depth 0"));
        assert_eq!(sh("stern --sequence 0").stdout, "0/1 1/1 1/0\n");
        let v = sh("verify 1,1,1");
        assert_eq!((v.stdout.as_str(), v.code), ("MinusI\n", 0));
        let v = sh("verify 2,2");
        assert_eq!((v.stdout.as_str(), v.code), ("Other\n", 1));
        assert_eq!(sh("verify 1,1,1,1,1,1").stdout, "PlusI\n");
    }

    #[test]
    fn triangulation_outputs() {
        let t = sh("triangulation --cf [1,2,1,1]");
        let back: Triangulation = serde_json::from_str(&t.stdout).unwrap();
        assert_eq!(back.n(), 7);
        assert_eq!(sh("triangulation --enumerate 6").stdout.lines().count(), 14);
        assert!(sh("triangulation --quiddity 1,2,2,1,3 --dot").stdout.starts_with("graph dual {"));
        assert!(sh("triangulation --cf [1,2,1,1] --labels").stdout.contains("7/5"));
        assert_eq!(sh("triangulation --quiddity 1,2,3,1,2").code, 1);
    }

    #[test]
    fn render_outputs() {
        let a = sh("render bamboo --cf [1,2,1,1]");
        assert_eq!(a.code, 0);
        assert_eq!(a, sh("render bamboo --cf [1,2,1,1]"));
        assert_eq!(sh("render farey --depth 11").code, 1);
        assert_eq!(sh("render farey --model sphere").code, 1);
        assert_eq!(sh("render triangulation --quiddity 1,2,2,1,3 --model disk").code, 0);
    }
}
