//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 usage error, 2 violated precondition,
//! 3 internal consistency failure.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::classification::{self, AffineInN, EpsFilter, SRange, SweepSpec};
use crate::emit::{self, Document, Format, Record};
use crate::error::Error;
use crate::scroll::ScrollType;
use crate::{chow, expr, hilbert, linkage, transforms};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "scrollink", version, about = "Divisor, genus-bound and linkage arithmetic on rational normal scrolls")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "table")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Dns {
    d: i64,
    n: i64,
    s: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parameter decomposition of (d, n, s).
    Params(Dns),
    /// Maximal genus bound from the Δh profile, with the closed-form comparison.
    Bound(Dns),
    /// The extremal Δh profile and its Hilbert function.
    Deltah(Dns),
    /// Structure of the scroll with the given splitting type.
    Scroll {
        /// Comma separated splitting degrees, e.g. 0,1,2.
        degrees: ScrollType,
        /// Also test reflexivity of O_X(a, b), given as a,b.
        #[arg(long, value_parser = parse_pair)]
        reflexive: Option<(i64, i64)>,
    },
    /// Intersection number of a product of classes in H and R.
    Intersect {
        #[arg(long)]
        scroll: ScrollType,
        expr: String,
    },
    /// Total or proper transforms and vertex multiplicities.
    Transform(TransformArgs),
    /// Degree, ruling degree and genus of a complete intersection of type (a, b).
    Cigenus {
        #[arg(long)]
        scroll: ScrollType,
        a: i64,
        b: i64,
    },
    /// Genus of the curve linked to a known curve by a complete intersection.
    Link(LinkArgs),
    /// Invariants of the residual to a scroll in a complete intersection of quadrics.
    QuadricResidual { n: i64 },
    /// Castelnuovo bound for a degree-s curve in P^N.
    Castelnuovo {
        s: i64,
        #[arg(value_name = "N")]
        big_n: i64,
    },
    /// Classify the residual curve of a maximal-genus curve.
    Classify(Dns),
    /// Check that linkage reproduces the bound in the planar range.
    Verify(Dns),
    /// Lower bound for forms through the residual curve on a line-vertex scroll.
    LowerBound {
        d: i64,
        n: i64,
        s: i64,
        i: i64,
    },
    /// Classify every (d, n, s) described by a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(long)]
    scroll: ScrollType,
    /// Integral total transform of an effective divisor d·R.
    #[arg(long = "d", conflicts_with_all = ["cut", "mult"])]
    d: Option<i64>,
    /// Degree of a hypersurface through the singular line.
    #[arg(long, requires = "mult")]
    cut: Option<i64>,
    /// Its multiplicity along the singular line.
    #[arg(long, requires = "cut")]
    mult: Option<i64>,
    /// Second hypersurface degree, for the multiplicity of the line in the intersection.
    #[arg(long, requires_all = ["cut", "mult2"])]
    cut2: Option<i64>,
    #[arg(long, requires = "cut2")]
    mult2: Option<i64>,
    /// Intersect the first divisor with a ruling plane instead.
    #[arg(long, requires = "cut", conflicts_with = "cut2")]
    ruling_plane: bool,
}

#[derive(Debug, Args)]
struct LinkArgs {
    #[arg(long)]
    scroll: ScrollType,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    #[arg(long)]
    known_degree: i64,
    #[arg(long, allow_negative_numbers = true)]
    known_genus: i64,
    #[arg(long)]
    known_ruling: i64,
    #[arg(long)]
    unknown_degree: i64,
    #[arg(long)]
    unknown_ruling: i64,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b, got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition { .. } => EXIT_DOMAIN,
        Error::Consistency(_) => EXIT_INTERNAL,
        Error::Parse { .. } => EXIT_USAGE,
    }
}

/// Runs the program on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    match execute(cli.command) {
        Ok(doc) => Outcome::ok(doc.render(cli.format)),
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Lib(e)) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

fn execute(command: Command) -> Result<Document, Failure> {
    let doc = match command {
        Command::Params(Dns { d, n, s }) => Document::Record(emit::params_record(&hilbert::decompose(d, n, s)?)),
        Command::Bound(Dns { d, n, s }) => {
            let p = hilbert::decompose(d, n, s)?;
            let rep = hilbert::genus_closed_form(&p)?;
            // hyperplane section lives in P^{n-1}
            let cast = hilbert::castelnuovo_genus(s, n - 1)?;
            let printed = hilbert::castelnuovo_genus_printed(s, n - 1)?;
            Document::Record(emit::bound_record(&p, &rep, cast, printed))
        }
        Command::Deltah(Dns { d, n, s }) => {
            let p = hilbert::decompose(d, n, s)?;
            emit::profile_document(&p, &hilbert::profile(&p)?)
        }
        Command::Scroll { degrees, reflexive } => {
            let mut rec = emit::scroll_record(&degrees);
            if let Ok(hs) = degrees.hyperplane_section() {
                rec = rec
                    .with("section_dim", hs.dim)
                    .with("section_degree", hs.degree)
                    .with("section_smooth", hs.smooth);
            }
            if let Some((a, b)) = reflexive {
                rec = rec.with("reflexive", degrees.is_reflexive(a, b)?);
            }
            Document::Record(rec)
        }
        Command::Intersect { scroll, expr } => {
            let value = expr::evaluate(&scroll, &expr)?;
            Document::Record(
                Record::new()
                    .with("scroll", emit::Field::Ints(scroll.degrees().to_vec()))
                    .with("expr", expr)
                    .with("value", value),
            )
        }
        Command::Transform(t) => transform(t)?,
        Command::Cigenus { scroll, a, b } => Document::Record(emit::ci_record(&scroll, &chow::ci_invariants(&scroll, a, b)?)),
        Command::Link(l) => {
            let known = linkage::CurveInvariants::new(l.known_degree, l.known_genus, l.known_ruling);
            let linked = linkage::link_genus(&l.scroll, l.a, l.b, known, l.unknown_degree, l.unknown_ruling)?;
            Document::Record(emit::link_record(&linked))
        }
        Command::QuadricResidual { n } => Document::Record(emit::quadric_record(&linkage::residual_quadric_invariants(n)?)),
        Command::Castelnuovo { s, big_n } => Document::Record(
            Record::new()
                .with("s", s)
                .with("N", big_n)
                .with("genus", hilbert::castelnuovo_genus(s, big_n)?)
                .with("genus_printed_variant", hilbert::castelnuovo_genus_printed(s, big_n)?),
        ),
        Command::Classify(Dns { d, n, s }) => Document::Record(emit::classification_record(&classification::classify(d, n, s)?)),
        Command::Verify(Dns { d, n, s }) => {
            let p = hilbert::decompose(d, n, s)?;
            Document::Record(emit::closure_record(&p, &classification::verify_closure(d, n, s)?))
        }
        Command::LowerBound { d, n, s, i } => {
            let lb = classification::line_vertex_lower_bound(d, n, s, i)?;
            Document::Record(
                Record::new()
                    .with("d", d)
                    .with("n", n)
                    .with("s", s)
                    .with("i", i)
                    .with("kind", "LOWER BOUND")
                    .with("h0_at_least", lb.0),
            )
        }
        Command::Sweep { config, threads } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", config.display())))?;
            let (spec, cfg_threads) = parse_sweep_config(&text).map_err(Failure::Usage)?;
            emit::sweep_document(&classification::sweep(&spec, threads.or(cfg_threads))?)
        }
    };
    Ok(doc)
}

fn transform(t: TransformArgs) -> Result<Document, Failure> {
    let scroll = &t.scroll;
    let base = Record::new().with("scroll", emit::Field::Ints(scroll.degrees().to_vec()));
    let rec = match (t.d, t.cut, t.mult) {
        (Some(d), None, None) => {
            let c = transforms::total_transform(scroll, d)?;
            base.with("d", d).with("total_transform", c.to_string()).with("h", c.h).with("r", c.rr)
        }
        (None, Some(cut), Some(mult)) => {
            let c = transforms::proper_transform_through_vertex(scroll, cut, mult)?;
            let mut rec = base
                .with("cut_degree", cut)
                .with("mult", mult)
                .with("proper_transform", c.to_string())
                .with("h", c.h)
                .with("r", c.rr);
            if let (Some(cut2), Some(mult2)) = (t.cut2, t.mult2) {
                rec = rec
                    .with("cut_degree2", cut2)
                    .with("mult2", mult2)
                    .with("line_multiplicity", transforms::vertex_multiplicity_ci(scroll, cut, mult, cut2, mult2)?);
            } else if t.ruling_plane {
                rec = rec.with(
                    "line_multiplicity_in_ruling_plane",
                    transforms::vertex_multiplicity_in_ruling_plane(scroll, cut, mult)?,
                );
            }
            rec
        }
        _ => return Err(Failure::Usage("transform needs either --d or both --cut and --mult".into())),
    };
    Ok(Document::Record(rec))
}

fn parse_affine(t: &str) -> Result<AffineInN, String> {
    let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(idx) = t.find('n') else {
        return t.parse().map(AffineInN::constant).map_err(|e| format!("bad bound {t:?}: {e}"));
    };
    let coef = match &t[..idx] {
        "" | "+" => 1,
        "-" => -1,
        c => c.trim_end_matches('*').parse().map_err(|e| format!("bad coefficient in {t:?}: {e}"))?,
    };
    let rest = &t[idx + 1..];
    let offset = if rest.is_empty() {
        0
    } else {
        rest.trim_start_matches('+').parse().map_err(|e| format!("bad offset in {t:?}: {e}"))?
    };
    Ok(AffineInN { coef, offset })
}

fn parse_range(v: &str) -> Result<(String, String), String> {
    match v.split_once("..") {
        Some((lo, hi)) => Ok((lo.trim().to_string(), hi.trim().trim_start_matches('=').to_string())),
        None => Ok((v.trim().to_string(), v.trim().to_string())),
    }
}

fn parse_int_range(key: &str, v: &str) -> Result<std::ops::RangeInclusive<i64>, String> {
    let (lo, hi) = parse_range(v)?;
    let p = |t: &str| t.parse::<i64>().map_err(|e| format!("{key}: bad integer {t:?}: {e}"));
    Ok(p(&lo)?..=p(&hi)?)
}

/// Parses a flat `key = value` sweep configuration.
///
/// Keys: `n`, `s`, `m` (ranges `lo..hi`, inclusive, or single integers;
/// the bounds of `s` may be affine in `n`, e.g. `2n-1..2n+8`), `eps`
/// (`all`, `planar` or a range, default `all`) and optional `threads`.
/// Lines starting with `#` are comments.
pub fn parse_sweep_config(text: &str) -> Result<(SweepSpec, Option<usize>), String> {
    let (mut n, mut s, mut m, mut eps, mut threads) = (None, None, None, EpsFilter::All, None);
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "n" => n = Some(parse_int_range(key, value)?),
            "m" => m = Some(parse_int_range(key, value)?),
            "s" => {
                let (lo, hi) = parse_range(value)?;
                s = Some(SRange { lo: parse_affine(&lo)?, hi: parse_affine(&hi)? });
            }
            "eps" => {
                eps = match value {
                    "all" => EpsFilter::All,
                    "planar" => EpsFilter::Planar,
                    r => EpsFilter::Range(parse_int_range(key, r)?),
                }
            }
            "threads" => threads = Some(value.parse::<usize>().map_err(|e| format!("threads: {e}"))?),
            other => return Err(format!("line {}: unknown key {other:?}", lineno + 1)),
        }
    }
    let missing = |k: &str| format!("sweep config is missing `{k}`");
    Ok((
        SweepSpec {
            n: n.ok_or_else(|| missing("n"))?,
            s: s.ok_or_else(|| missing("s"))?,
            m: m.ok_or_else(|| missing("m"))?,
            eps,
        },
        threads,
    ))
}
