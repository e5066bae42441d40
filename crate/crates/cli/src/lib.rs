//! Batch front end for `nearholo`: argv in, one JSON document out.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nearholo::category_o::{catalog, classify_block, identify_module};
use nearholo::decompose::decompose_level1;
use nearholo::generators::{e2_paper, eisenstein, theta_series, BinaryForm};
use nearholo::laurent::{constant_term_report, CharacterTag, ConstantTermInput};
use nearholo::operators::{casimir, infinitesimal_character, iterate_lower, iterate_raise};
use nearholo::quadratic::{
    enumerate_definite_spaces, hilbert_symbol, is_coherent, local_invariants, reducibility, unramified_eigenvalue,
    CharDescriptor, CharOrder, Coherence, Collection, Place, QuadSpace2D, Residue, SParam,
};
use nearholo::series::{format_rational, parse_rational, NearlyHolomorphicForm, Rational};

mod verify;

pub use verify::{run_suite, Check};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCode {
    Usage,
    MalformedInput,
    Io,
    Domain,
    VerificationFailed,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Usage => "usage",
            ErrorCode::MalformedInput => "malformed_input",
            ErrorCode::Io => "io",
            ErrorCode::Domain => "domain",
            ErrorCode::VerificationFailed => "verification_failed",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCode::Usage => 2,
            ErrorCode::MalformedInput => 3,
            ErrorCode::Io => 4,
            ErrorCode::Domain => 5,
            ErrorCode::VerificationFailed => 6,
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one invocation. Error results carry `code` and a `message`.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    pub code: Option<ErrorCode>,
    pub out: Option<PathBuf>,
    pub indent: Option<usize>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult { status: Status::Ok, payload, diagnostics: Vec::new(), code: None, out: None, indent: None }
    }

    fn error(code: ErrorCode, message: impl Into<String>) -> Self {
        CommandResult {
            status: Status::Error,
            payload: json!({ "message": message.into() }),
            diagnostics: Vec::new(),
            code: Some(code),
            out: None,
            indent: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn exit_code(&self) -> i32 {
        self.code.map_or(0, ErrorCode::exit_code)
    }

    /// The error envelope written to stderr.
    pub fn envelope(&self) -> Value {
        json!({
            "status": if self.is_ok() { "ok" } else { "error" },
            "code": self.code.map(ErrorCode::as_str),
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        })
    }

    /// Help and version text are plain strings and print verbatim.
    pub fn render_payload(&self) -> String {
        if let Value::String(text) = &self.payload {
            return text.trim_end().to_string();
        }
        render(&self.payload, self.indent)
    }
}

/// Compact for `None` or `0`, otherwise pretty with that many spaces.
pub fn render(value: &Value, indent: Option<usize>) -> String {
    match indent {
        None | Some(0) => value.to_string(),
        Some(n) => {
            use serde::Serialize;
            let pad = vec![b' '; n];
            let mut buf = Vec::new();
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            value.serialize(&mut ser).expect("JSON values always serialize");
            String::from_utf8(buf).expect("serde_json emits UTF-8")
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: ErrorCode,
    message: String,
    payload: Option<Value>,
}

impl Failure {
    fn new(code: ErrorCode, message: impl fmt::Display) -> Self {
        Failure { code, message: message.to_string(), payload: None }
    }

    fn domain(e: impl fmt::Display) -> Self {
        Failure::new(ErrorCode::Domain, e)
    }

    fn usage(e: impl fmt::Display) -> Self {
        Failure::new(ErrorCode::Usage, e)
    }

    fn malformed(e: impl fmt::Display) -> Self {
        Failure::new(ErrorCode::MalformedInput, e)
    }
}

type Outcome = Result<Value, Failure>;

#[derive(Debug, Parser)]
#[command(name = "nearholo", version, about = "Exact computations with nearly holomorphic modular forms")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Input form file or JSON document.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Highest q-exponent kept.
    #[arg(long, global = true, value_name = "N")]
    trunc: Option<usize>,
    #[arg(long, global = true)]
    k: Option<i64>,
    #[arg(long, global = true)]
    d: Option<u32>,
    /// One of trivial, sgn, quadratic, other.
    #[arg(long, global = true)]
    character: Option<CharacterTag>,
    /// Pretty-print with this many spaces; 0 is compact.
    #[arg(long = "json-indent", global = true, value_name = "N")]
    json_indent: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Holomorphic Eisenstein series E_k, normalized with constant term 1.
    Eis,
    /// The weight-two series 12X - 1 + 24 Σ σ(n) qⁿ.
    E2,
    /// Theta series of the binary form ax² + bxy + cy².
    Theta {
        a: i64,
        b: i64,
        c: i64,
    },
    /// Apply δ the given number of times.
    Raise {
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Apply Λ the given number of times.
    Lower {
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Apply the Casimir and report the eigenvalue if there is one.
    Casimir,
    /// Structure-theorem decomposition over the level-one basis.
    Decompose,
    /// Category O class of the module a Casimir eigenform generates.
    Identify {
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Laurent analysis of the Eisenstein constant term at s = k - 1.
    ConstantTerm,
    /// Local quadratic invariants and the reducibility table.
    Local {
        #[command(subcommand)]
        command: LocalCommand,
    },
    /// Decomposition catalog for parallel weight k over a field of degree d.
    Catalog,
    /// Indecomposables of the block of λ.
    Block {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Run the invariant suite.
    Verify,
}

#[derive(Debug, Subcommand)]
enum LocalCommand {
    /// Hilbert symbol (a, b)_v; v is a prime or "real".
    Hilbert {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        v: String,
    },
    /// Local invariants of ⟨a1, a2⟩ at the given places, or at every place
    /// where they can be nontrivial.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(long = "place")]
        places: Vec<String>,
    },
    /// Coherence of a collection {"discriminant": "...", "epsilons": {...}},
    /// inline or from --in.
    Coherent { json: Option<String> },
    /// Definite collections with discriminant Δ < 0 supported on primes <= bound.
    Definite {
        #[arg(allow_hyphen_values = true)]
        discriminant: String,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Reducibility of I(μ, s).
    Reducible(ReducibleArgs),
    /// Eigenvalue of the intertwining operator on R(V^ε), unramified χ.
    Eigenvalue {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: i8,
        /// χ is trivial or ramified.
        #[arg(long)]
        not_unramified_nontrivial: bool,
    },
}

#[derive(Debug, Args)]
struct ReducibleArgs {
    /// A prime power q, or "real".
    #[arg(long)]
    residue: String,
    /// Order of μ: 1, 2 or other.
    #[arg(long)]
    order: String,
    #[arg(long)]
    ramified: bool,
    /// μ = sgn^{real_sign} at the real place.
    #[arg(long, default_value_t = 0)]
    real_sign: u8,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    re: String,
    /// Coefficient of π√-1 / log q.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    im: String,
}

const DEFAULT_TRUNCATION: usize = 10;

/// Parses and executes one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CommandResult::ok(Value::String(e.to_string()));
            }
            let mut r = CommandResult::error(ErrorCode::Usage, e.kind().to_string());
            r.diagnostics = e.to_string().lines().map(str::to_string).collect();
            return r;
        }
    };
    let mut result = match dispatch(&cli) {
        Ok(payload) => CommandResult::ok(payload),
        Err(Failure { code, message, payload }) => {
            let mut r = CommandResult::error(code, message);
            if let Some(payload) = payload {
                r.payload = payload;
            }
            r
        }
    };
    result.out = cli.out.clone();
    result.indent = cli.json_indent;
    result
}

/// Runs `argv`, writes the payload to stdout or `--out`, and the envelope to
/// stderr on failure. Returns the process exit code.
pub fn main_with<I, T>(argv: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let result = run(argv);
    if !result.is_ok() {
        let _ = writeln!(stderr, "{}", render(&result.envelope(), result.indent));
        return result.exit_code();
    }
    let text = result.render_payload();
    let written = match &result.out {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => writeln!(stdout, "{text}"),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let failed = CommandResult::error(ErrorCode::Io, e.to_string());
            let _ = writeln!(stderr, "{}", render(&failed.envelope(), None));
            failed.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let trunc = cli.trunc.unwrap_or(DEFAULT_TRUNCATION);
    match &cli.command {
        Command::Eis => {
            let k = require(cli.k, "--k")?;
            Ok(eisenstein(k, trunc).map_err(Failure::domain)?.to_json_value())
        }
        Command::E2 => Ok(e2_paper(trunc).to_json_value()),
        Command::Theta { a, b, c } => {
            let form = BinaryForm::new(*a, *b, *c).map_err(Failure::domain)?;
            Ok(theta_series(&form, trunc).to_json_value())
        }
        Command::Raise { times } => {
            let f = read_form(cli)?;
            Ok(iterate_raise(&f, *times).map_err(Failure::domain)?.to_json_value())
        }
        Command::Lower { times } => {
            let f = read_form(cli)?;
            Ok(iterate_lower(&f, *times).map_err(Failure::domain)?.to_json_value())
        }
        Command::Casimir => {
            let f = read_form(cli)?;
            let image = casimir(&f).map_err(Failure::domain)?;
            let character = infinitesimal_character(&f).ok();
            Ok(json!({
                "form": image.to_json_value(),
                "eigenvalue": character.as_ref().map(|c| format_rational(&c.casimir_eigenvalue())),
                "lambda": character.as_ref().map(|c| format_rational(c.lambda())),
            }))
        }
        Command::Decompose => {
            let f = read_form(cli)?;
            Ok(decompose_level1(&f).map_err(Failure::domain)?.to_json_value())
        }
        Command::Identify { max_steps } => {
            let f = read_form(cli)?;
            let class = identify_module(&f, *max_steps).map_err(Failure::domain)?;
            let mut v = class.to_json_value();
            let lambda = infinitesimal_character(&f).map_err(Failure::domain)?;
            v["infinitesimal_character"] = Value::String(format_rational(lambda.lambda()));
            Ok(v)
        }
        Command::ConstantTerm => {
            let k = require(cli.k, "--k")?;
            let d = require(cli.d, "--d")?;
            let mut input = ConstantTermInput::unramified(k, d);
            if let Some(c) = cli.character {
                input.character = c;
            }
            Ok(constant_term_report(&input).map_err(Failure::domain)?.to_json_value())
        }
        Command::Local { command } => local(cli, command),
        Command::Catalog => {
            let k = require(cli.k, "--k")?;
            let d = require(cli.d, "--d")?;
            Ok(catalog(d as usize, k).map_err(Failure::domain)?.to_json_value())
        }
        Command::Block { lambda } => Ok(classify_block(&rational(lambda)?).to_json_value()),
        Command::Verify => {
            let checks = run_suite();
            let failed = checks.iter().filter(|c| !c.passed).count();
            let payload = json!({
                "checks": checks.iter().map(Check::to_json_value).collect::<Vec<_>>(),
                "passed": checks.len() - failed,
                "failed": failed,
            });
            if failed == 0 {
                Ok(payload)
            } else {
                Err(Failure { payload: Some(payload), ..Failure::new(ErrorCode::VerificationFailed, "invariant suite failed") })
            }
        }
    }
}

fn local(cli: &Cli, command: &LocalCommand) -> Outcome {
    match command {
        LocalCommand::Hilbert { a, b, v } => {
            let place = place(v)?;
            let symbol = hilbert_symbol(&rational(a)?, &rational(b)?, place).map_err(Failure::domain)?;
            Ok(json!({ "a": a, "b": b, "place": place.to_string(), "symbol": symbol }))
        }
        LocalCommand::Invariants { a1, a2, places } => {
            let space = QuadSpace2D::new(rational(a1)?, rational(a2)?).map_err(Failure::domain)?;
            let places = if places.is_empty() {
                space.relevant_places()
            } else {
                places.iter().map(|p| place(p)).collect::<Result<_, _>>()?
            };
            let mut list = Vec::new();
            for p in places {
                let inv = local_invariants(&space, p).map_err(Failure::domain)?;
                list.push(serde_json::to_value(inv).expect("invariants serialize"));
            }
            Ok(json!({
                "discriminant": format_rational(&space.discriminant()),
                "invariants": list,
            }))
        }
        LocalCommand::Coherent { json } => {
            let text = match (json, &cli.input) {
                (Some(text), _) => text.clone(),
                (None, Some(path)) => read_text(path)?,
                (None, None) => return Err(Failure::usage("local coherent needs a JSON argument or --in")),
            };
            let value: Value = serde_json::from_str(&text).map_err(Failure::malformed)?;
            let collection = Collection::from_json_value(&value).map_err(Failure::malformed)?;
            let verdict = is_coherent(&collection).map_err(Failure::domain)?;
            let witness = match &verdict {
                Coherence::Coherent(Some(w)) => {
                    let (a1, a2) = w.entries();
                    json!([format_rational(a1), format_rational(a2)])
                }
                _ => Value::Null,
            };
            Ok(json!({
                "collection": collection.to_json_value(),
                "coherent": verdict.is_coherent(),
                "witness": witness,
            }))
        }
        LocalCommand::Definite { discriminant, bound } => {
            let list = enumerate_definite_spaces(&rational(discriminant)?, *bound).map_err(Failure::domain)?;
            Ok(json!({
                "count": list.len(),
                "collections": list.iter().map(Collection::to_json_value).collect::<Vec<_>>(),
            }))
        }
        LocalCommand::Reducible(args) => {
            let residue = match args.residue.as_str() {
                "real" | "inf" => Residue::Real,
                q => Residue::Finite(q.parse().map_err(|_| Failure::usage(format!("bad residue {q:?}")))?),
            };
            let order = match args.order.as_str() {
                "1" | "trivial" => CharOrder::Trivial,
                "2" | "quadratic" => CharOrder::Quadratic,
                "other" => CharOrder::Other,
                o => return Err(Failure::usage(format!("bad character order {o:?}"))),
            };
            let mu = CharDescriptor { order, unramified: !args.ramified, real_sign: args.real_sign };
            let s = SParam { re: rational(&args.re)?, im: rational(&args.im)? };
            let verdict = reducibility(residue, mu, &s).map_err(Failure::domain)?;
            Ok(verdict.to_json_value())
        }
        LocalCommand::Eigenvalue { q, epsilon, not_unramified_nontrivial } => {
            let e = unramified_eigenvalue(*q, !not_unramified_nontrivial, *epsilon).map_err(Failure::domain)?;
            Ok(json!({ "q": q, "epsilon": epsilon, "eigenvalue": format_rational(&e) }))
        }
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::usage(format!("missing {flag}")))
}

/// Accepts any integer or fraction, not only canonical text.
fn rational(s: &str) -> Result<Rational, Failure> {
    if let Ok(r) = parse_rational(s) {
        return Ok(r);
    }
    s.parse::<Rational>().map_err(|_| Failure::usage(format!("not a rational number: {s:?}")))
}

fn place(s: &str) -> Result<Place, Failure> {
    s.parse().map_err(Failure::usage)
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(ErrorCode::Io, format!("{}: {e}", path.display())))
}

fn read_form(cli: &Cli) -> Result<NearlyHolomorphicForm, Failure> {
    let path = cli.input.as_ref().ok_or_else(|| Failure::usage("missing --in"))?;
    NearlyHolomorphicForm::from_json(&read_text(path)?).map_err(Failure::malformed)
}
