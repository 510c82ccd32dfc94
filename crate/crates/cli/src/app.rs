//! Command definitions and dispatch.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};
use tdhopf_core::{Coefficient, Counterexample, HopfReport, OperatorId, Rational, Space, Tally, TdAlgebra, TensorElement};

use crate::laws::{self, SuiteConfig};
use crate::parse::{self, Diagnostic};
use crate::random::Shape;
use crate::render::{self, Format};

#[derive(Debug, Parser)]
#[command(name = "tdhopf", version, about = "Exact computation in free commutative λ-TD algebras over k[x1..xv]")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Number of primitive generators x1..xv of the base.
    #[arg(long, global = true, env = "TDHOPF_VARS", default_value_t = 2)]
    pub vars: usize,
    /// The weight: `L` for a formal symbol, or a rational such as `1/2`.
    #[arg(long, global = true, default_value = "L", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub output: Format,
    /// Syntax of element arguments.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub input: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// a ⊔ b in Ш⁺; bare scalars are multiples of the empty word.
    Shuffle { a: String, b: String },
    /// a ⋄ b in Ш_Λ.
    Diamond { a: String, b: String },
    /// Apply an operator: `P` (right shift), `zero`, or `scale:<c>`.
    Op {
        #[arg(long, default_value = "P")]
        operator: String,
        e: String,
    },
    /// x ∗ y built from an operator.
    Star {
        #[arg(long, default_value = "P")]
        operator: String,
        a: String,
        b: String,
    },
    /// Δ(e).
    Coprod { e: String },
    /// ε(e).
    Counit { e: String },
    /// S(e), the right antipode.
    Antipode { e: String },
    /// Exhaustive antipode and filtration check on every word of degree ≤ bound.
    HopfCheck {
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Seeded randomized law checks.
    Laws {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
    },
    /// Evaluate an expression; the result is in Ш⁺ if it has an empty word.
    Eval { expression: String },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(stderr: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Session {
    alg: TdAlgebra,
    input: Format,
    output: Format,
}

fn weight(text: &str) -> Result<Coefficient, String> {
    let t = text.trim();
    if t == "L" || t == "λ" || t == "symbolic" {
        return Ok(Coefficient::lambda());
    }
    t.parse::<Rational>()
        .map(Coefficient::constant)
        .map_err(|e| format!("invalid --lambda '{text}': {e}"))
}

impl Session {
    fn new(g: &Global) -> Result<Self, String> {
        if g.vars == 0 {
            return Err("--vars must be at least 1".into());
        }
        let lambda = weight(&g.lambda)?;
        let alg = TdAlgebra::new(std::sync::Arc::new(tdhopf_core::PolynomialBialgebra::new(g.vars)), lambda);
        Ok(Session {
            alg,
            input: g.input,
            output: g.output,
        })
    }

    fn diag(&self, input: &str, d: Diagnostic) -> String {
        match self.input {
            Format::Text => d.render(input),
            Format::Json => d.to_string(),
        }
    }

    fn read(&self, input: &str, space: Space) -> Result<TensorElement, String> {
        let e = match self.input {
            Format::Json => render::parse_element_json(input, &self.alg).map_err(|d| self.diag(input, d))?,
            Format::Text => match space {
                Space::Plus => parse::parse_plus(input, &self.alg).map_err(|d| self.diag(input, d))?,
                Space::Lambda => parse::parse_lambda(input, &self.alg).map_err(|d| self.diag(input, d))?,
            },
        };
        match space {
            Space::Plus => Ok(e.embed_plus()),
            Space::Lambda => e.to_lambda().map_err(|err| err.to_string()),
        }
    }

    fn operator(&self, text: &str) -> Result<OperatorId, String> {
        match text.trim() {
            "P" | "shift" => Ok(OperatorId::RightShift),
            "zero" | "0" => Ok(OperatorId::Zero),
            other => match other.strip_prefix("scale:") {
                Some(c) => parse::parse_coefficient(c, &self.alg)
                    .map(OperatorId::Scale)
                    .map_err(|d| d.render(c)),
                None => Err(format!("unknown operator '{other}' (expected P, zero or scale:<c>)")),
            },
        }
    }

    fn element(&self, e: &TensorElement) -> String {
        match self.output {
            Format::Text => format!("{e}\n"),
            Format::Json => format!("{}\n", render::element_json(e)),
        }
    }
}

fn counterexample_text(c: &Counterexample) -> Vec<String> {
    match c {
        Counterexample::Antipode { word, computed, expected } => vec![
            format!("word = {word}"),
            format!("(id ∗ S)(w) = {computed}"),
            format!("e(w) = {expected}"),
        ],
        Counterexample::Product { left, right, product, term, term_degree, bound } => vec![
            format!("u = {left}, v = {right}"),
            format!("u <> v = {product}"),
            format!("term {term} has degree {term_degree} > {bound}"),
        ],
        Counterexample::Coproduct { word, degree, coproduct, left, right, left_degree, right_degree } => vec![
            format!("word = {word} of degree {degree}"),
            format!("Δ(w) = {coproduct}"),
            format!("pair {left} ⊗ {right} has degrees {left_degree} + {right_degree} > {degree}"),
        ],
    }
}

fn counterexample_json(c: &Counterexample) -> Json {
    match c {
        Counterexample::Antipode { word, computed, expected } => json!({
            "kind": "antipode",
            "word": render::word_json(word),
            "text": word.to_string(),
            "computed": render::combination_json(computed),
            "expected": render::combination_json(expected),
        }),
        Counterexample::Product { left, right, product, term, term_degree, bound } => json!({
            "kind": "product",
            "left": render::word_json(left),
            "right": render::word_json(right),
            "product": render::combination_json(product),
            "term": render::word_json(term),
            "term_degree": term_degree,
            "bound": bound,
        }),
        Counterexample::Coproduct { word, degree, coproduct, left, right, left_degree, right_degree } => json!({
            "kind": "coproduct",
            "word": render::word_json(word),
            "degree": degree,
            "coproduct": render::square_json(coproduct),
            "left": render::word_json(left),
            "right": render::word_json(right),
            "left_degree": left_degree,
            "right_degree": right_degree,
        }),
    }
}

fn tally_json(t: &Tally) -> Json {
    json!({
        "name": t.name,
        "checked": t.checked,
        "failed": t.failed,
        "passed": t.passed(),
        "first": t.first.as_ref().map(counterexample_json),
    })
}

pub fn hopf_text(r: &HopfReport) -> String {
    let mut out = format!("hopf-check: degree ≤ {}, vars {}, {} words\n", r.bound, r.vars, r.words);
    for t in r.tallies() {
        let status = if t.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!("  {status}  {:<20}  {} checked, {} failed\n", t.name, t.checked, t.failed));
        if let Some(c) = &t.first {
            for line in counterexample_text(c) {
                out.push_str(&format!("        {line}\n"));
            }
        }
    }
    let l = &r.left_convolution;
    out.push_str(&format!(
        "  note  S ∗ id = e on {} words, differs on {} (reported only)\n",
        l.agrees, l.differs
    ));
    if let Some((w, v)) = &l.first_difference {
        out.push_str(&format!("        first: (S ∗ id)({w}) = {v}\n"));
    }
    out.push_str(&format!("result: {}\n", if r.passed() { "pass" } else { "FAIL" }));
    out
}

pub fn hopf_json(r: &HopfReport) -> Json {
    let l = &r.left_convolution;
    json!({
        "bound": r.bound,
        "vars": r.vars,
        "words": r.words,
        "checks": r.tallies().iter().map(|t| tally_json(t)).collect::<Vec<_>>(),
        "s_star_id": {
            "asserted": false,
            "agrees": l.agrees,
            "differs": l.differs,
            "first_difference": l.first_difference.as_ref().map(|(w, v)| json!({
                "word": render::word_json(w),
                "value": render::combination_json(v),
            })),
        },
        "passed": r.passed(),
    })
}

fn execute(s: &Session, command: &Command) -> Result<Outcome, String> {
    let alg = &s.alg;
    let core = |e: tdhopf_core::Error| e.to_string();
    let out = match command {
        Command::Shuffle { a, b } => {
            let (x, y) = (s.read(a, Space::Plus)?, s.read(b, Space::Plus)?);
            s.element(&alg.shuffle(&x, &y))
        }
        Command::Diamond { a, b } => {
            let (x, y) = (s.read(a, Space::Lambda)?, s.read(b, Space::Lambda)?);
            s.element(&alg.diamond(&x, &y).map_err(core)?)
        }
        Command::Op { operator, e } => {
            let op = s.operator(operator)?;
            s.element(&alg.apply_operator(&op, &s.read(e, Space::Lambda)?))
        }
        Command::Star { operator, a, b } => {
            let op = s.operator(operator)?;
            let (x, y) = (s.read(a, Space::Lambda)?, s.read(b, Space::Lambda)?);
            s.element(&alg.star_lambda(&x, &y, &op).map_err(core)?)
        }
        Command::Coprod { e } => {
            let d = alg.coproduct(&s.read(e, Space::Lambda)?).map_err(core)?;
            match s.output {
                Format::Text => format!("{d}\n"),
                Format::Json => format!("{}\n", render::square_json(&d)),
            }
        }
        Command::Counit { e } => {
            let c = alg.counit(&s.read(e, Space::Lambda)?).map_err(core)?;
            match s.output {
                Format::Text => format!("{c}\n"),
                Format::Json => format!("{}\n", render::coefficient_json(&c)),
            }
        }
        Command::Antipode { e } => s.element(&alg.antipode(&s.read(e, Space::Lambda)?).map_err(core)?),
        Command::HopfCheck { bound } => {
            let r = alg.hopf_check(*bound).map_err(core)?;
            let text = match s.output {
                Format::Text => hopf_text(&r),
                Format::Json => format!("{}\n", hopf_json(&r)),
            };
            return Ok(Outcome {
                code: if r.passed() { 0 } else { 1 },
                stdout: text,
                stderr: String::new(),
            });
        }
        Command::Laws { suite, seed, trials, max_degree, max_length } => {
            let config = SuiteConfig {
                suite: suite.clone(),
                seed: *seed,
                trials: *trials,
                shape: Shape {
                    vars: alg.vars(),
                    max_degree: *max_degree,
                    max_length: *max_length,
                },
            };
            let Some(r) = laws::run_suite(alg, config) else {
                return Err(format!("unknown suite '{suite}' (expected one of: {})", laws::suite_names().join(", ")));
            };
            let text = match s.output {
                Format::Text => r.text(),
                Format::Json => format!("{}\n", r.json()),
            };
            return Ok(Outcome {
                code: if r.violations() == 0 { 0 } else { 1 },
                stdout: text,
                stderr: String::new(),
            });
        }
        Command::Eval { expression } => {
            let e = match s.input {
                Format::Text => parse::parse_value(expression, alg)
                    .map_err(|d| s.diag(expression, d))?
                    .resolve(alg),
                Format::Json => render::parse_element_json(expression, alg).map_err(|d| s.diag(expression, d))?,
            };
            s.element(&e)
        }
    };
    Ok(Outcome::ok(out))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let session = match Session::new(&cli.global) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(format!("{e}\n")),
    };
    match execute(&session, &cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::usage(format!("{e}\n")),
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            }
        }
    }
}
