//! Command dispatch for the `linkalg` binary.
//!
//! Everything here is plumbing around the engine crate: argument parsing,
//! expression loading (argument, `-` for stdin, or `--file`), diagnostics
//! with position carets, and the interactive session. Output is fully
//! deterministic for a given argv + stdin + seed.
//!
//! Exit codes: 0 success, 1 parse error, 2 evaluation or analysis error,
//! 3 usage error, 4 law counterexample found.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkalg::{
    check_law, complement, complement_literal, default_catalog, eval, isomorphic_exact,
    law_catalog, lexer::is_reserved_word, parse, render, solve_union, star_composed_form,
    scf_equivalent, EvalContext, Expr, Form, LawReport, Limits, Mode, ParseError, RenderFormat,
    RenderOptions, VertexAtom,
};

#[derive(Parser, Debug)]
#[command(
    name = "linkalg",
    version,
    about = "Evaluate, analyze and fuzz signed-graph expressions"
)]
struct Cli {
    /// Algebra to evaluate in: base, arith, oriented or mixed.
    #[arg(long, global = true, default_value = "base", value_parser = mode_from_str)]
    mode: Mode,
    #[command(subcommand)]
    cmd: Cmd,
}

fn mode_from_str(s: &str) -> Result<Mode, String> {
    Mode::from_str(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the syntax tree of an expression without evaluating it.
    Parse(ExprInput),
    /// Evaluate an expression to its canonical form.
    Eval(EvalArgs),
    /// Complement of a plain graph: vertices kept, edges inverted.
    Complement(ComplementArgs),
    /// Star-composed form of a plain graph, largest star first.
    Scf(ExprInput),
    /// Compare two graphs by star shape and by exact isomorphism.
    Iso(IsoArgs),
    /// Solve target = known + X for the unknown X.
    Solve(SolveArgs),
    /// Run the randomized law catalog.
    CheckLaws(CheckLawsArgs),
    /// Interactive session with let-bindings.
    Repl(ReplArgs),
}

#[derive(Args, Debug)]
struct ExprInput {
    /// Expression text, or `-` to read it from standard input.
    expr: Option<String>,
    /// Read the expression from a file instead; `#` starts a comment.
    #[arg(long, value_name = "PATH", conflicts_with = "expr")]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    input: ExprInput,
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

impl From<FormatArg> for RenderFormat {
    fn from(f: FormatArg) -> RenderFormat {
        match f {
            FormatArg::Text => RenderFormat::CanonicalText,
            FormatArg::Json => RenderFormat::Json,
            FormatArg::Dot => RenderFormat::Dot,
        }
    }
}

#[derive(Args, Debug)]
struct ComplementArgs {
    #[command(flatten)]
    input: ExprInput,
    /// Print only the vertex-free edge difference, not the whole graph.
    #[arg(long)]
    literal: bool,
}

#[derive(Args, Debug)]
struct IsoArgs {
    /// First expression (`-` reads it from standard input).
    left: String,
    /// Second expression (`-` reads it from standard input).
    right: String,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// The fused whole.
    #[arg(long, value_name = "EXPR")]
    target: String,
    /// The part already known.
    #[arg(long, value_name = "EXPR")]
    known: String,
}

#[derive(Args, Debug)]
struct CheckLawsArgs {
    /// Check one law by name instead of the whole default catalog.
    #[arg(long, value_name = "NAME")]
    law: Option<String>,
    /// Trials per law.
    #[arg(long, default_value_t = 200)]
    trials: u32,
    /// Base seed for the deterministic trial stream.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// List every law in the catalog and exit.
    #[arg(long)]
    list_laws: bool,
}

#[derive(Args, Debug)]
struct ReplArgs {
    /// Run a script of session lines and exit; `#` starts a comment.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

/// Streams and presentation state threaded through every command.
struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    interactive: bool,
    color: bool,
}

enum CliError {
    Parse { src: String, err: ParseError },
    Eval(String),
    Usage(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 1,
            CliError::Eval(_) => 2,
            CliError::Usage(_) => 3,
        }
    }

    fn report(&self, io: &mut Io) {
        let head = if io.color { "\x1b[31merror\x1b[0m" } else { "error" };
        match self {
            CliError::Parse { src, err } => {
                let _ = writeln!(io.stderr, "{head}: {err}");
                if let Some(line) = src.lines().nth(err.line as usize - 1) {
                    let _ = writeln!(io.stderr, "  {line}");
                    let _ = writeln!(io.stderr, "  {}^", " ".repeat(err.col as usize - 1));
                }
            }
            CliError::Eval(msg) | CliError::Usage(msg) => {
                let _ = writeln!(io.stderr, "{head}: {msg}");
            }
        }
    }
}

/// Entry point shared by the binary and the tests. Returns the exit code.
pub fn run(
    argv: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    interactive: bool,
) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{rendered}");
                0
            } else {
                let _ = write!(stderr, "{rendered}");
                3
            };
        }
    };
    let color = interactive && std::env::var_os("NO_COLOR").is_none();
    let mut io = Io { stdin, stdout, stderr, interactive, color };
    match dispatch(cli.cmd, cli.mode, &mut io) {
        Ok(code) => code,
        Err(err) => {
            err.report(&mut io);
            err.code()
        }
    }
}

fn dispatch(cmd: Cmd, mode: Mode, io: &mut Io) -> Result<u8, CliError> {
    match cmd {
        Cmd::Parse(input) => cmd_parse(&input, io),
        Cmd::Eval(args) => cmd_eval(&args, mode, io),
        Cmd::Complement(args) => cmd_complement(&args, mode, io),
        Cmd::Scf(input) => cmd_scf(&input, mode, io),
        Cmd::Iso(args) => cmd_iso(&args, mode, io),
        Cmd::Solve(args) => cmd_solve(&args, mode, io),
        Cmd::CheckLaws(args) => cmd_check_laws(&args, io),
        Cmd::Repl(args) => cmd_repl(&args, mode, io),
    }
}

// ---------------------------------------------------------------------------
// Expression loading and shared helpers
// ---------------------------------------------------------------------------

fn read_stdin(io: &mut Io) -> Result<String, CliError> {
    let mut buf = String::new();
    io.stdin
        .read_to_string(&mut buf)
        .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
    Ok(buf)
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_source(input: &ExprInput, io: &mut Io) -> Result<String, CliError> {
    if let Some(path) = &input.file {
        return read_file(path);
    }
    match input.expr.as_deref() {
        Some("-") => read_stdin(io),
        Some(text) => Ok(text.to_string()),
        None => Err(CliError::Usage("an expression argument or --file is required".into())),
    }
}

fn parse_source(src: &str) -> Result<Expr, CliError> {
    parse(src).map_err(|err| CliError::Parse { src: src.to_string(), err })
}

fn eval_expr(e: &Expr, mode: Mode) -> Result<Form, CliError> {
    eval(e, &EvalContext::new(mode)).map_err(|err| CliError::Eval(err.to_string()))
}

fn analysis_err(e: impl std::fmt::Display) -> CliError {
    CliError::Eval(e.to_string())
}

// ---------------------------------------------------------------------------
// One-shot subcommands
// ---------------------------------------------------------------------------

fn cmd_parse(input: &ExprInput, io: &mut Io) -> Result<u8, CliError> {
    let src = load_source(input, io)?;
    let e = parse_source(&src)?;
    let _ = write!(io.stdout, "{}", linkalg::print_ast(&e));
    Ok(0)
}

fn cmd_eval(args: &EvalArgs, mode: Mode, io: &mut Io) -> Result<u8, CliError> {
    let src = load_source(&args.input, io)?;
    let form = eval_expr(&parse_source(&src)?, mode)?;
    let opts = RenderOptions { format: args.format.into(), ..RenderOptions::default() };
    let _ = writeln!(io.stdout, "{}", render(&form, &opts));
    Ok(0)
}

fn cmd_complement(args: &ComplementArgs, mode: Mode, io: &mut Io) -> Result<u8, CliError> {
    let src = load_source(&args.input, io)?;
    let form = eval_expr(&parse_source(&src)?, mode)?;
    let out = if args.literal {
        complement_literal(&form).map_err(analysis_err)?
    } else {
        complement(&form).map_err(analysis_err)?
    };
    let _ = writeln!(io.stdout, "{out}");
    Ok(0)
}

fn cmd_scf(input: &ExprInput, mode: Mode, io: &mut Io) -> Result<u8, CliError> {
    let src = load_source(input, io)?;
    let form = eval_expr(&parse_source(&src)?, mode)?;
    let decomposition = star_composed_form(&form).map_err(analysis_err)?;
    let _ = writeln!(io.stdout, "{decomposition}");
    Ok(0)
}

fn cmd_iso(args: &IsoArgs, mode: Mode, io: &mut Io) -> Result<u8, CliError> {
    if args.left == "-" && args.right == "-" {
        return Err(CliError::Usage("only one expression can come from standard input".into()));
    }
    let left_src = if args.left == "-" { read_stdin(io)? } else { args.left.clone() };
    let right_src = if args.right == "-" { read_stdin(io)? } else { args.right.clone() };
    let a = eval_expr(&parse_source(&left_src)?, mode)?;
    let b = eval_expr(&parse_source(&right_src)?, mode)?;
    let shape = scf_equivalent(&a, &b).map_err(analysis_err)?;
    let _ = writeln!(io.stdout, "scf-equivalent: {}", yes_no(shape));
    match isomorphic_exact(&a, &b).map_err(analysis_err)? {
        Some(bijection) => {
            let mut rendered = String::new();
            for (from, to) in &bijection {
                if !rendered.is_empty() {
                    rendered.push_str(", ");
                }
                let _ = write!(rendered, "{from} -> {to}");
            }
            let _ = writeln!(io.stdout, "exact: yes ({rendered})");
        }
        None => {
            let _ = writeln!(io.stdout, "exact: no");
        }
    }
    Ok(0)
}

fn cmd_solve(args: &SolveArgs, mode: Mode, io: &mut Io) -> Result<u8, CliError> {
    let target = eval_expr(&parse_source(&args.target)?, mode)?;
    let known = eval_expr(&parse_source(&args.known)?, mode)?;
    let solution = solve_union(&target, &known).map_err(analysis_err)?;
    let _ = writeln!(io.stdout, "X = {}", solution.x);
    let _ = writeln!(io.stdout, "verified: {}", yes_no(solution.verified));
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

// ---------------------------------------------------------------------------
// Law checking
// ---------------------------------------------------------------------------

fn cmd_check_laws(args: &CheckLawsArgs, io: &mut Io) -> Result<u8, CliError> {
    if args.list_laws {
        for law in law_catalog() {
            let marker = if law.expect_fail { " [expected to fail]" } else { "" };
            let _ = writeln!(io.stdout, "{} [{}]: {}{}", law.name, law.mode, law.about, marker);
        }
        return Ok(0);
    }
    let limits = Limits::default();
    let mut found_counterexample = false;
    if let Some(name) = &args.law {
        let report = check_law(name, args.trials, args.seed, &limits)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        found_counterexample |= print_report(&report, io);
    } else {
        for law in default_catalog() {
            let report = linkalg::run_law(law, args.trials, args.seed, &limits);
            found_counterexample |= print_report(&report, io);
        }
    }
    Ok(if found_counterexample { 4 } else { 0 })
}

/// Prints one report line; true when the run found a counterexample.
fn print_report(report: &LawReport, io: &mut Io) -> bool {
    match &report.counterexample {
        None => {
            let _ = writeln!(io.stdout, "law {}: ok ({} trials)", report.name, report.trials);
            false
        }
        Some((trial, detail)) => {
            let note = if report.expected_failure { " (expected)" } else { "" };
            let _ = writeln!(
                io.stdout,
                "law {}: counterexample at trial {trial}{note}: {detail}",
                report.name
            );
            true
        }
    }
}

// ---------------------------------------------------------------------------
// Interactive session
// ---------------------------------------------------------------------------

struct Session {
    mode: Mode,
    bindings: BTreeMap<String, Expr>,
    history: Vec<String>,
}

/// Replaces bound names in the tree. Replacement bodies were closed at
/// binding time, so they are inserted as-is.
fn substitute(e: &Expr, bindings: &BTreeMap<String, Expr>) -> Expr {
    match e {
        Expr::Atom(a) => bindings.get(a.as_str()).cloned().unwrap_or_else(|| e.clone()),
        Expr::Phi | Expr::Generator(_) => e.clone(),
        Expr::Union(l, r) => Expr::union(substitute(l, bindings), substitute(r, bindings)),
        Expr::Link(l, r) => Expr::link(substitute(l, bindings), substitute(r, bindings)),
        Expr::DirectedLink { left, right, reversed } => Expr::directed_link(
            substitute(left, bindings),
            substitute(right, bindings),
            *reversed,
        ),
        Expr::Anti(inner) => Expr::anti(substitute(inner, bindings)),
        Expr::Scale(n, inner) => Expr::scale(*n, substitute(inner, bindings)),
        Expr::Twist(inner) => Expr::twist(substitute(inner, bindings)),
    }
}

fn cmd_repl(args: &ReplArgs, mode: Mode, io: &mut Io) -> Result<u8, CliError> {
    let mut session = Session { mode, bindings: BTreeMap::new(), history: Vec::new() };
    if let Some(path) = &args.file {
        let script = read_file(path)?;
        for line in script.lines() {
            if !session_line(line, &mut session, io) {
                break;
            }
        }
        return Ok(0);
    }
    loop {
        if io.interactive {
            let _ = write!(io.stdout, "> ");
            let _ = io.stdout.flush();
        }
        let mut line = String::new();
        match io.stdin.read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => return Err(CliError::Usage(format!("cannot read standard input: {e}"))),
        }
        if !session_line(&line, &mut session, io) {
            break;
        }
    }
    Ok(0)
}

/// Handles one session line; false means quit.
fn session_line(raw: &str, session: &mut Session, io: &mut Io) -> bool {
    let line = raw.split('#').next().unwrap_or("").trim();
    if line.is_empty() {
        return true;
    }
    session.history.push(line.to_string());
    if let Some(cmd) = line.strip_prefix(':') {
        return session_command(cmd, session, io);
    }
    if let Some(rest) = line.strip_prefix("let ") {
        session_let(rest, session, io);
        return true;
    }
    let expr_text = line.strip_prefix("eval ").unwrap_or(line);
    match parse_source(expr_text) {
        Ok(e) => {
            let closed = substitute(&e, &session.bindings);
            match eval_expr(&closed, session.mode) {
                Ok(form) => {
                    let _ = writeln!(io.stdout, "{form}");
                }
                Err(err) => err.report(io),
            }
        }
        Err(err) => err.report(io),
    }
    true
}

fn session_command(cmd: &str, session: &mut Session, io: &mut Io) -> bool {
    let mut parts = cmd.split_whitespace();
    match (parts.next(), parts.next()) {
        (Some("quit"), None) => false,
        (Some("mode"), Some(name)) => {
            match Mode::from_str(name) {
                Ok(mode) => session.mode = mode,
                Err(e) => CliError::Usage(e.to_string()).report(io),
            }
            true
        }
        (Some("mode"), None) => {
            let _ = writeln!(io.stdout, "{}", session.mode);
            true
        }
        (Some("history"), None) => {
            for (i, line) in session.history.iter().enumerate() {
                let _ = writeln!(io.stdout, "{:>3}  {line}", i + 1);
            }
            true
        }
        _ => {
            CliError::Usage(format!(
                "unknown command `:{cmd}`; available: :mode, :history, :quit"
            ))
            .report(io);
            true
        }
    }
}

fn session_let(rest: &str, session: &mut Session, io: &mut Io) {
    let Some((name, body)) = rest.split_once('=') else {
        CliError::Usage("expected `let NAME = EXPR`".into()).report(io);
        return;
    };
    let name = name.trim();
    if VertexAtom::new(name).is_err() || is_reserved_word(name) {
        CliError::Usage(format!("`{name}` cannot be used as a binding name")).report(io);
        return;
    }
    match parse_source(body.trim()) {
        Ok(e) => {
            let closed = substitute(&e, &session.bindings);
            session.bindings.insert(name.to_string(), closed);
        }
        Err(err) => err.report(io),
    }
}
