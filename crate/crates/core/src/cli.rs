//! Command-line front end. The `chi` binary only forwards to [`main_with`].

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{class_upper_bound, run_verifications, ChiComputation};
use crate::chi::{chi_alphabet, chi_direct_presentation, direct_alphabet, enumerate_relators, ChiModel};
use crate::chi::{PresentationSpec, Relator, TailReading};
use crate::gs::{reduce_set, GSBasis};
use crate::lie::{
    enumerate_regular_words, format_element, parse_element, witt_dim, Alphabet, AssocWord, FreeLie, LieElement,
};

/// Exit code for a successful run or a passing verification.
pub const EXIT_OK: i32 = 0;
/// Exit code for a failed verification or a failed computation.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for malformed flags or inputs.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] crate::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use crate::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Algebra(e) => match e {
                E::Syntax { .. }
                | E::UnknownLetter(_)
                | E::InvalidArgument(_)
                | E::OddN(_)
                | E::UnsupportedClass(_)
                | E::NotRegular(_)
                | E::ZeroElementInInput
                | E::NonHomogeneousInput(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            },
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "chi", version, about = "Free Lie algebras, Groebner-Shirshov bases and weak commutativity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Tab separated columns.
    Table,
    Json,
    /// One JSON object per line.
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of the free Lie algebra by degree.
    Witt {
        #[arg(long)]
        rank: u64,
        #[arg(long)]
        upto: u64,
    },
    /// Regular words and their bracketings.
    Lyndon {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long)]
        upto: u32,
    },
    /// Completes a relator set up to a degree and dumps the basis.
    GsComplete {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Relator source (see `--help` of `gs-member`).
        #[arg(long)]
        relators: String,
        /// Completion degree; defaults to the largest relator degree.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Normal form of an element modulo a relator set.
    GsNf {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Element text, or `@file`.
        #[arg(long)]
        element: String,
        #[arg(long)]
        relators: String,
    },
    /// Decides ideal membership of a homogeneous element.
    ///
    /// Relator sources: `chi:L:bound=K[,class=c][,tail=positional]`,
    /// `chi:direct:bound=K[,class=c]`, `@file` with one element per line, or
    /// elements separated by `;`.
    GsMember {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long)]
        element: String,
        #[arg(long)]
        relators: String,
    },
    /// Relators of the presentation of the ideal L.
    #[command(alias = "relators")]
    ChiRelators {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        bound: u32,
        /// Nilpotency class of the base algebra; free if omitted.
        #[arg(long)]
        c: Option<u32>,
        #[arg(long, value_enum, default_value_t = VariantArg::L)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = TailArg::Generic)]
        tail: TailArg,
    },
    /// The element f_n of the ideal.
    #[command(alias = "fn")]
    ChiFn {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Dimension report for a free nilpotent base algebra.
    #[command(alias = "report")]
    ChiDims {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        c: u32,
    },
    /// Nilpotency class of the weak commutativity algebra.
    ChiClass {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        c: u32,
    },
    /// Runs the verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct AlphabetArgs {
    /// `chi`, `direct`, `free`, or an explicit list like `b:2,a:1,c:1`
    /// (greatest letter first).
    #[arg(long)]
    pub alphabet: Option<String>,
    /// Rank of the base algebra for the `chi` and `direct` alphabets.
    #[arg(long)]
    pub m: Option<usize>,
    /// Rank of the `free` alphabet.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    L,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TailArg {
    Generic,
    Positional,
}

/// Parses `args`, runs the command and writes the report. Returns the exit code.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => {
            let written = match &cli.output {
                Some(path) => {
                    fs::write(path, &text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
                }
                None => {
                    stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "stdout".into(), source })
                }
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

impl Cli {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format.unwrap_or(Format::Table)
        }
    }
}

/// Runs a parsed command, returning the report text and the exit code.
pub fn dispatch(cli: &Cli) -> CliResult<(String, i32)> {
    let format = cli.format();
    let text = match &cli.command {
        Command::Witt { rank, upto } => witt(*rank, *upto, format)?,
        Command::Lyndon { alphabet, upto } => lyndon(alphabet, *upto, format)?,
        Command::GsComplete { alphabet, relators, bound } => gs_complete(alphabet, relators, *bound, format)?,
        Command::GsNf { alphabet, element, relators } => gs_nf(alphabet, element, relators, format)?.0,
        Command::GsMember { alphabet, element, relators } => gs_member(alphabet, element, relators, format)?,
        Command::ChiRelators { m, bound, c, variant, tail } => chi_relators(*m, *bound, *c, *variant, *tail, format)?,
        Command::ChiFn { n, m } => chi_fn(*n, *m, format)?,
        Command::ChiDims { m, c } => chi_dims(*m, *c, format)?,
        Command::ChiClass { m, c } => chi_class(*m, *c, format)?,
        Command::Verify { suite, max_m } => return verify(suite, *max_m, format),
    };
    Ok((text, EXIT_OK))
}

fn no_jsonl(format: Format) -> CliResult<()> {
    if format == Format::Jsonl {
        Err(usage("this command has no jsonl output; use table or json"))
    } else {
        Ok(())
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn witt(rank: u64, upto: u64, format: Format) -> CliResult<String> {
    no_jsonl(format)?;
    if rank == 0 {
        return Err(usage("--rank must be positive"));
    }
    let dims: Vec<u64> = (1..=upto).map(|k| witt_dim(rank, k)).collect();
    Ok(match format {
        Format::Json => to_json(&json!({ "rank": rank, "upto": upto, "dims": dims })),
        _ => {
            let mut out = String::from("degree\tdim\n");
            for (k, d) in dims.iter().enumerate() {
                let _ = writeln!(out, "{}\t{d}", k + 1);
            }
            out
        }
    })
}

fn resolve_alphabet(args: &AlphabetArgs, relators: Option<&str>) -> CliResult<Alphabet> {
    let source_kind = relators.and_then(|r| {
        let rest = r.strip_prefix("chi:")?;
        Some(if rest.starts_with("direct") { "direct" } else { "chi" })
    });
    let kind = args.alphabet.as_deref().or(source_kind).unwrap_or(if args.rank.is_some() { "free" } else { "chi" });
    let need_m = || args.m.ok_or_else(|| usage(format!("alphabet `{kind}` needs --m")));
    match kind {
        "chi" => Ok(chi_alphabet(need_m()?)),
        "direct" => Ok(direct_alphabet(need_m()?)),
        "free" => Ok(Alphabet::free(args.rank.ok_or_else(|| usage("alphabet `free` needs --rank"))?)),
        list => {
            let letters = list
                .split(',')
                .map(|item| {
                    let (name, weight) = item.split_once(':').unwrap_or((item, "1"));
                    let weight = weight.trim().parse::<u32>().map_err(|_| usage(format!("bad weight in `{item}`")))?;
                    Ok((name.trim().to_string(), weight))
                })
                .collect::<CliResult<Vec<_>>>()?;
            Ok(Alphabet::new(letters)?)
        }
    }
}

fn lyndon(args: &AlphabetArgs, upto: u32, format: Format) -> CliResult<String> {
    let lie = FreeLie::new(resolve_alphabet(args, None)?);
    let words = enumerate_regular_words(lie.alphabet(), upto);
    let row = |w: &AssocWord| (w.degree(), lie.alphabet().format_word(w), lie.render_word(w));
    Ok(match format {
        Format::Table => {
            let mut out = String::from("degree\tword\tbracketing\n");
            for w in &words {
                let (d, word, br) = row(w);
                let _ = writeln!(out, "{d}\t{word}\t{br}");
            }
            out
        }
        Format::Json => to_json(
            &words
                .iter()
                .map(|w| {
                    let (d, word, br) = row(w);
                    json!({ "degree": d, "word": word, "bracketing": br })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Jsonl => words
            .iter()
            .map(|w| {
                let (d, word, br) = row(w);
                json!({ "degree": d, "word": word, "bracketing": br }).to_string() + "\n"
            })
            .collect(),
    })
}

fn read_arg(text: &str) -> CliResult<String> {
    match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source }),
        None => Ok(text.to_string()),
    }
}

/// Relators named by a source string, together with the default completion
/// degree it implies.
fn load_relators(lie: &FreeLie, args: &AlphabetArgs, source: &str) -> CliResult<(Vec<LieElement>, Option<u32>)> {
    if let Some(rest) = source.strip_prefix("chi:") {
        let (variant, opts) = rest.split_once(':').unwrap_or((rest, ""));
        let m = args.m.ok_or_else(|| usage("chi relator sources need --m"))?;
        let (mut bound, mut class, mut tail) = (None, None, TailReading::Generic);
        for opt in opts.split(',').filter(|o| !o.is_empty()) {
            let (key, value) = opt.split_once('=').ok_or_else(|| usage(format!("expected key=value, got `{opt}`")))?;
            let number = || value.parse::<u32>().map_err(|_| usage(format!("bad number in `{opt}`")));
            match key {
                "bound" => bound = Some(number()?),
                "class" => class = Some(number()?),
                "tail" => {
                    tail = match value {
                        "generic" => TailReading::Generic,
                        "positional" => TailReading::Positional,
                        _ => return Err(usage(format!("unknown tail reading `{value}`"))),
                    }
                }
                _ => return Err(usage(format!("unknown relator option `{key}`"))),
            }
        }
        let bound = bound.ok_or_else(|| usage("chi relator sources need bound=K"))?;
        let relators = match variant {
            "L" | "l" => {
                let model = ChiModel::new(m)?;
                let spec = PresentationSpec { tail_reading: tail, ..PresentationSpec::l(m, class, bound) };
                enumerate_relators(&model, &spec)?
            }
            "direct" => chi_direct_presentation(m, class, bound)?.relators,
            _ => return Err(usage(format!("unknown presentation `{variant}`"))),
        };
        return Ok((relators.into_iter().map(|r| r.element).collect(), Some(bound)));
    }
    let text = read_arg(source)?;
    let separator = if source.starts_with('@') { '\n' } else { ';' };
    let relators = text
        .split(separator)
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_element(lie, l))
        .collect::<crate::Result<Vec<_>>>()?;
    Ok((relators, None))
}

fn build_basis(lie: Arc<FreeLie>, relators: &[LieElement], degree: u32) -> CliResult<GSBasis> {
    let kept: Vec<LieElement> = relators.iter().filter(|r| r.degree().is_some_and(|d| d <= degree)).cloned().collect();
    let mut basis = reduce_set(lie, &kept)?;
    basis.complete_bounded(degree);
    Ok(basis)
}

fn gs_complete(args: &AlphabetArgs, source: &str, bound: Option<u32>, format: Format) -> CliResult<String> {
    let lie = Arc::new(FreeLie::new(resolve_alphabet(args, Some(source))?));
    let (relators, implied) = load_relators(&lie, args, source)?;
    let bound = bound.or(implied).or_else(|| relators.iter().filter_map(|r| r.degree()).max()).unwrap_or(0);
    let basis = build_basis(lie.clone(), &relators, bound)?;
    let rule = |r: &crate::gs::RewriteRule| {
        json!({
            "degree": r.degree(),
            "carrier": lie.alphabet().format_word(r.carrier()),
            "element": format_element(&lie, r.element()),
        })
    };
    Ok(match format {
        Format::Table => basis.dump(),
        Format::Json => to_json(&json!({
            "complete_to": basis.complete_to(),
            "rules": basis.rules().map(rule).collect::<Vec<_>>(),
        })),
        Format::Jsonl => basis.rules().map(|r| rule(r).to_string() + "\n").collect(),
    })
}

/// Normal form of the element modulo the relators, completed to its degree.
/// Also returns whether the normal form vanished.
fn gs_nf(args: &AlphabetArgs, element: &str, source: &str, format: Format) -> CliResult<(String, bool)> {
    no_jsonl(format)?;
    let lie = Arc::new(FreeLie::new(resolve_alphabet(args, Some(source))?));
    let f = parse_element(&lie, read_arg(element)?.trim())?;
    if !f.is_homogeneous() {
        return Err(crate::Error::NonHomogeneousInput("element".into()).into());
    }
    let (relators, _) = load_relators(&lie, args, source)?;
    let degree = f.degree().unwrap_or(0);
    let basis = build_basis(lie.clone(), &relators, degree)?;
    let nf = basis.normal_form(&f);
    let text = match format {
        Format::Json => to_json(&json!({
            "element": format_element(&lie, &f),
            "degree": degree,
            "normal_form": format_element(&lie, &nf),
            "rules": basis.len(),
        })),
        _ => format_element(&lie, &nf) + "\n",
    };
    Ok((text, nf.is_zero()))
}

fn gs_member(args: &AlphabetArgs, element: &str, source: &str, format: Format) -> CliResult<String> {
    let (nf_text, member) = gs_nf(args, element, source, format)?;
    Ok(match format {
        Format::Json => {
            let mut value: serde_json::Value = serde_json::from_str(&nf_text).expect("own json");
            value["member"] = json!(member);
            to_json(&value)
        }
        _ => if member { "MEMBER\n" } else { "NOT MEMBER\n" }.to_string(),
    })
}

#[derive(Serialize)]
struct RelatorRow<'a> {
    family: &'a str,
    degree: u32,
    carrier: String,
    element: String,
}

fn chi_relators(
    m: usize,
    bound: u32,
    c: Option<u32>,
    variant: VariantArg,
    tail: TailArg,
    format: Format,
) -> CliResult<String> {
    let (lie, relators): (Arc<FreeLie>, Vec<Relator>) = match variant {
        VariantArg::L => {
            let model = ChiModel::new(m)?;
            let tail_reading = match tail {
                TailArg::Generic => TailReading::Generic,
                TailArg::Positional => TailReading::Positional,
            };
            let spec = PresentationSpec { tail_reading, ..PresentationSpec::l(m, c, bound) };
            let relators = enumerate_relators(&model, &spec)?;
            (model.lie().clone(), relators)
        }
        VariantArg::Direct => {
            let p = chi_direct_presentation(m, c, bound)?;
            (p.lie, p.relators)
        }
    };
    let rows: Vec<RelatorRow> = relators
        .iter()
        .map(|r| RelatorRow {
            family: r.family.tag(),
            degree: r.element.degree().expect("relators are nonzero"),
            carrier: lie.alphabet().format_word(r.element.carrier().expect("nonzero")),
            element: format_element(&lie, &r.element),
        })
        .collect();
    Ok(match format {
        Format::Table => {
            let mut out = String::from("family\tdegree\tcarrier\telement\n");
            for r in &rows {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", r.family, r.degree, r.carrier, r.element);
            }
            out
        }
        Format::Json => to_json(&json!({
            "m": m,
            "bound": bound,
            "class": c,
            "count": rows.len(),
            "relators": rows,
        })),
        Format::Jsonl => rows.iter().map(|r| serde_json::to_string(r).expect("row serializes") + "\n").collect(),
    })
}

fn chi_fn(n: u32, m: usize, format: Format) -> CliResult<String> {
    no_jsonl(format)?;
    let model = ChiModel::new(m)?;
    let f = model.f_n(n)?;
    let text = model.format(&f);
    Ok(match format {
        Format::Json => to_json(&json!({
            "n": n,
            "degree": f.degree(),
            "carrier": f.carrier().map(|w| model.lie().alphabet().format_word(w)),
            "terms": f.len(),
            "element": text,
        })),
        _ => text + "\n",
    })
}

fn check_class(c: u32) -> CliResult<()> {
    if matches!(c, 2 | 3) {
        Ok(())
    } else {
        Err(crate::Error::UnsupportedClass(c).into())
    }
}

fn chi_dims(m: usize, c: u32, format: Format) -> CliResult<String> {
    no_jsonl(format)?;
    check_class(c)?;
    let report = ChiComputation::new(m, c)?.report()?;
    Ok(match format {
        Format::Json => to_json(&report),
        _ => {
            let value = serde_json::to_value(&report).expect("report serializes");
            let mut out = String::from("key\tvalue\n");
            for (k, v) in value.as_object().expect("object") {
                let _ = writeln!(out, "{k}\t{v}");
            }
            out
        }
    })
}

fn chi_class(m: usize, c: u32, format: Format) -> CliResult<String> {
    no_jsonl(format)?;
    check_class(c)?;
    let comp = ChiComputation::new(m, c)?;
    let class = comp.chi.algebra().nilpotency_class();
    let bound = class_upper_bound(m, c);
    Ok(match format {
        Format::Json => to_json(&json!({ "m": m, "c": c, "class": class, "upper_bound": bound })),
        _ => format!("m\tc\tclass\tupper_bound\n{m}\t{c}\t{class}\t{bound}\n"),
    })
}

fn verify(suite: &str, max_m: usize, format: Format) -> CliResult<(String, i32)> {
    no_jsonl(format)?;
    if suite != "paper" {
        return Err(usage(format!("unknown suite `{suite}` (available: paper)")));
    }
    if max_m == 0 {
        return Err(usage("--max-m must be positive"));
    }
    let report = run_verifications(max_m);
    let code = if report.passed { EXIT_OK } else { EXIT_FAIL };
    let text = match format {
        Format::Json => report.to_json() + "\n",
        _ => {
            let mut out = String::from("status\tcheck\tparams\tvalue\n");
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status}\t{}\t{}\t{}", c.name, c.params, c.value);
            }
            let failed = report.failures().count();
            let _ = writeln!(out, "{} checks, {failed} failed", report.checks.len());
            out
        }
    };
    Ok((text, code))
}
