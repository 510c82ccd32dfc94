//! Surface syntax for elements.
//!
//! ```text
//! sum     := term (("+" | "-") term)*
//! term    := ("+" | "-")* product
//! product := power (("#" | "⊔" | "<>" | "⋄" | "*")? power)*
//! power   := atom ("^" integer)?
//! atom    := integer ("/" integer)? | "L" | "λ" | "x" index | "[" (sum ("," sum)*)? "]"
//!          | name "(" sum ("," sum)* ")" | "(" sum ")"
//! ```
//!
//! `#` is `⊔` and `<>` is `⋄`; both bind tighter than `+` and looser than
//! `*` or juxtaposition, and associate to the left. Bracketed letters are
//! polynomials in the generators; outside brackets only scalars, words and
//! `P(...)` make sense.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use tdhopf_core::{
    BaseElement, Coefficient, Error as CoreError, Monomial, Rational, Space, TdAlgebra, TensorElement, TensorWord,
    WordCombination,
};

pub type Span = Range<usize>;

/// A positioned diagnostic. `offset` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl Diagnostic {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            offset,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    fn expecting(offset: usize, message: impl Into<String>, expected: &[&'static str]) -> Self {
        Diagnostic {
            offset,
            message: message.into(),
            expected: expected.to_vec(),
        }
    }

    /// The message with the offending input line and a caret under the offset.
    pub fn render(&self, input: &str) -> String {
        let column = input[..self.offset.min(input.len())].chars().count();
        format!("{self}\n  {input}\n  {}^", " ".repeat(column))
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Shuffle,
    Diamond,
    Lambda,
    Generator(usize),
    Name(String),
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("number {n}"),
            Token::Slash => "'/'".into(),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::LBracket => "'['".into(),
            Token::RBracket => "']'".into(),
            Token::Comma => "','".into(),
            Token::Shuffle => "'#'".into(),
            Token::Diamond => "'<>'".into(),
            Token::Lambda => "'L'".into(),
            Token::Generator(i) => format!("generator x{i}"),
            Token::Name(n) => format!("'{n}'"),
            Token::End => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Token, Span)>, Diagnostic> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '/' => Some(Token::Slash),
            '+' => Some(Token::Plus),
            '-' | '−' => Some(Token::Minus),
            '*' | '·' => Some(Token::Star),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '[' => Some(Token::LBracket),
            ']' => Some(Token::RBracket),
            ',' => Some(Token::Comma),
            '#' | '⊔' => Some(Token::Shuffle),
            '⋄' => Some(Token::Diamond),
            'λ' => Some(Token::Lambda),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            out.push((t, start..start + c.len_utf8()));
            continue;
        }
        if c == '<' {
            chars.next();
            match chars.peek() {
                Some(&(_, '>')) => {
                    chars.next();
                    out.push((Token::Diamond, start..start + 2));
                    continue;
                }
                _ => return Err(Diagnostic::expecting(start + 1, "incomplete operator '<'", &["'>'"])),
            }
        }
        if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            let n: BigInt = input[start..end].parse().expect("digits");
            out.push((Token::Int(n), start..end));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let word = &input[start..end];
            let token = if word == "L" {
                Token::Lambda
            } else if let Some(index) = word.strip_prefix('x').filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())) {
                match index.parse::<usize>() {
                    Ok(i) => Token::Generator(i),
                    Err(_) => return Err(Diagnostic::new(start, format!("generator index too large in '{word}'"))),
                }
            } else {
                Token::Name(word.to_string())
            };
            out.push((token, start..end));
            continue;
        }
        return Err(Diagnostic::new(start, format!("unexpected character '{c}'")));
    }
    out.push((Token::End, input.len()..input.len()));
    Ok(out)
}

/// Parsed surface syntax, before elaboration against an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Integer(BigInt),
    Ratio(BigInt, BigInt),
    Lambda,
    Generator(usize),
    Word(Vec<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Shuffle(Box<Expr>, Box<Expr>),
    Diamond(Box<Expr>, Box<Expr>),
    Apply(String, Vec<Expr>),
}

struct Parser {
    tokens: Vec<(Token, Span)>,
    pos: usize,
}

const ATOM_START: &[&str] = &["number", "'L'", "generator", "'['", "'P('", "'('"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].1.clone()
    }

    fn bump(&mut self) -> (Token, Span) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, label: &'static str) -> Result<Span, Diagnostic> {
        if *self.peek() == want {
            Ok(self.bump().1)
        } else {
            Err(Diagnostic::expecting(
                self.span().start,
                format!("unexpected {}", self.peek().describe()),
                &[label],
            ))
        }
    }

    fn sum(&mut self) -> Result<Expr, Diagnostic> {
        let mut left = self.term()?;
        loop {
            let sub = match self.peek() {
                Token::Plus => false,
                Token::Minus => true,
                _ => return Ok(left),
            };
            self.bump();
            let right = self.term()?;
            let span = left.span.start..right.span.end;
            let kind = if sub {
                ExprKind::Sub(Box::new(left), Box::new(right))
            } else {
                ExprKind::Add(Box::new(left), Box::new(right))
            };
            left = Expr { kind, span };
        }
    }

    fn term(&mut self) -> Result<Expr, Diagnostic> {
        match self.peek() {
            Token::Minus => {
                let start = self.bump().1.start;
                let inner = self.term()?;
                let span = start..inner.span.end;
                Ok(Expr {
                    kind: ExprKind::Neg(Box::new(inner)),
                    span,
                })
            }
            Token::Plus => {
                self.bump();
                self.term()
            }
            _ => self.product(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Token::Int(_) | Token::Lambda | Token::Generator(_) | Token::LBracket | Token::LParen | Token::Name(_)
        )
    }

    /// Products, with `⊔`/`⋄` looser than `*` and juxtaposition.
    fn product(&mut self) -> Result<Expr, Diagnostic> {
        let mut left = self.factor()?;
        loop {
            let shuffle = match self.peek() {
                Token::Shuffle => true,
                Token::Diamond => false,
                _ => return Ok(left),
            };
            self.bump();
            let right = self.factor()?;
            let span = left.span.start..right.span.end;
            let kind = if shuffle {
                ExprKind::Shuffle(Box::new(left), Box::new(right))
            } else {
                ExprKind::Diamond(Box::new(left), Box::new(right))
            };
            left = Expr { kind, span };
        }
    }

    fn factor(&mut self) -> Result<Expr, Diagnostic> {
        let mut left = self.power()?;
        loop {
            if *self.peek() == Token::Star {
                self.bump();
            } else if !self.starts_atom() {
                return Ok(left);
            }
            let right = self.power()?;
            let span = left.span.start..right.span.end;
            left = Expr {
                kind: ExprKind::Mul(Box::new(left), Box::new(right)),
                span,
            };
        }
    }

    fn power(&mut self) -> Result<Expr, Diagnostic> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let (token, span) = self.bump();
        let exponent = match token {
            Token::Int(n) => u32::try_from(n).map_err(|_| Diagnostic::new(span.start, "exponent too large"))?,
            other => {
                return Err(Diagnostic::expecting(
                    span.start,
                    format!("unexpected {}", other.describe()),
                    &["exponent"],
                ))
            }
        };
        Ok(Expr {
            span: base.span.start..span.end,
            kind: ExprKind::Pow(Box::new(base), exponent),
        })
    }

    fn atom(&mut self) -> Result<Expr, Diagnostic> {
        let (token, span) = self.bump();
        match token {
            Token::Int(n) => {
                if *self.peek() == Token::Slash {
                    self.bump();
                    let (d, dspan) = self.bump();
                    match d {
                        Token::Int(d) if d != BigInt::from(0) => Ok(Expr {
                            kind: ExprKind::Ratio(n, d),
                            span: span.start..dspan.end,
                        }),
                        Token::Int(_) => Err(Diagnostic::new(dspan.start, "zero denominator")),
                        other => Err(Diagnostic::expecting(
                            dspan.start,
                            format!("unexpected {}", other.describe()),
                            &["denominator"],
                        )),
                    }
                } else {
                    Ok(Expr {
                        kind: ExprKind::Integer(n),
                        span,
                    })
                }
            }
            Token::Lambda => Ok(Expr {
                kind: ExprKind::Lambda,
                span,
            }),
            Token::Generator(i) => Ok(Expr {
                kind: ExprKind::Generator(i),
                span,
            }),
            Token::LParen => {
                let inner = self.sum()?;
                let end = self.expect(Token::RParen, "')'")?.end;
                Ok(Expr {
                    kind: inner.kind,
                    span: span.start..end,
                })
            }
            Token::LBracket => {
                let mut letters = Vec::new();
                if *self.peek() != Token::RBracket {
                    letters.push(self.sum()?);
                    while *self.peek() == Token::Comma {
                        self.bump();
                        letters.push(self.sum()?);
                    }
                }
                let end = match self.peek() {
                    Token::RBracket => self.bump().1.end,
                    other => {
                        return Err(Diagnostic::expecting(
                            self.span().start,
                            format!("unexpected {}", other.describe()),
                            &["','", "']'"],
                        ))
                    }
                };
                Ok(Expr {
                    kind: ExprKind::Word(letters),
                    span: span.start..end,
                })
            }
            Token::Name(name) => {
                self.expect(Token::LParen, "'('")?;
                let mut args = Vec::new();
                if *self.peek() != Token::RParen {
                    args.push(self.sum()?);
                    while *self.peek() == Token::Comma {
                        self.bump();
                        args.push(self.sum()?);
                    }
                }
                let end = self.expect(Token::RParen, "')'")?.end;
                Ok(Expr {
                    kind: ExprKind::Apply(name, args),
                    span: span.start..end,
                })
            }
            other => Err(Diagnostic::expecting(span.start, format!("unexpected {}", other.describe()), ATOM_START)),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, Diagnostic> {
    let mut p = Parser {
        tokens: lex(input)?,
        pos: 0,
    };
    let e = p.sum()?;
    match p.peek() {
        Token::End => Ok(e),
        other => Err(Diagnostic::expecting(
            p.span().start,
            format!("unexpected {}", other.describe()),
            &["operator", "end of input"],
        )),
    }
}

/// An elaborated value. A bare scalar stays unresolved until it meets a
/// context: it is the empty word in `Ш⁺` and `c·[1]` in `Ш_Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Value {
    pub scalar: Coefficient,
    pub words: WordCombination,
}

impl Value {
    fn scalar(c: Coefficient) -> Self {
        Value {
            scalar: c,
            words: WordCombination::zero(),
        }
    }

    fn is_scalar(&self) -> bool {
        self.words.is_zero()
    }

    fn plus(&self, other: &Value) -> Value {
        Value {
            scalar: &self.scalar + &other.scalar,
            words: self.words.plus(&other.words),
        }
    }

    fn scale(&self, c: &Coefficient) -> Value {
        Value {
            scalar: &self.scalar * c,
            words: self.words.scale(c),
        }
    }

    /// Resolves the scalar part as the empty word.
    pub fn in_plus(&self) -> TensorElement {
        let mut words = self.words.clone();
        words.add_term(TensorWord::empty(), self.scalar.clone());
        TensorElement::new(Space::Plus, words).expect("Ш⁺ accepts every word")
    }

    /// Resolves the scalar part as a multiple of `[1]`.
    pub fn in_lambda(&self, alg: &TdAlgebra) -> Result<TensorElement, CoreError> {
        let mut words = self.words.clone();
        words.add_term(alg.unit_word(), self.scalar.clone());
        TensorElement::new(Space::Lambda, words)
    }

    /// `Ш⁺` when an explicit empty word is present, `Ш_Λ` otherwise.
    pub fn resolve(&self, alg: &TdAlgebra) -> TensorElement {
        if self.words.keys().any(TensorWord::is_empty) {
            self.in_plus()
        } else {
            self.in_lambda(alg).expect("no empty word")
        }
    }
}

struct Elaborator<'a> {
    alg: &'a TdAlgebra,
}

fn core_error(span: &Span, e: CoreError) -> Diagnostic {
    Diagnostic::new(span.start, e.to_string())
}

impl Elaborator<'_> {
    fn lambda(&self) -> Coefficient {
        self.alg.lambda().clone()
    }

    fn scalar(&self, e: &Expr) -> Result<Coefficient, Diagnostic> {
        let v = self.value(e)?;
        if v.is_scalar() {
            Ok(v.scalar)
        } else {
            Err(Diagnostic::new(e.span.start, "expected a scalar"))
        }
    }

    fn lambda_operand(&self, e: &Expr) -> Result<TensorElement, Diagnostic> {
        self.value(e)?.in_lambda(self.alg).map_err(|err| core_error(&e.span, err))
    }

    fn value(&self, e: &Expr) -> Result<Value, Diagnostic> {
        match &e.kind {
            ExprKind::Integer(n) => Ok(Value::scalar(Coefficient::constant(Rational::from(n.clone())))),
            ExprKind::Ratio(n, d) => Ok(Value::scalar(Coefficient::constant(Rational::from_bigints(n.clone(), d.clone())))),
            ExprKind::Lambda => Ok(Value::scalar(self.lambda())),
            ExprKind::Generator(i) => Err(Diagnostic::new(
                e.span.start,
                format!("generator x{i} outside a word; write [x{i}]"),
            )),
            ExprKind::Word(letters) => {
                let factors = letters.iter().map(|l| self.letter(l)).collect::<Result<Vec<_>, _>>()?;
                let el = TensorElement::from_pure(Space::Plus, &factors).map_err(|err| core_error(&e.span, err))?;
                Ok(Value {
                    scalar: Coefficient::zero(),
                    words: el.into_terms(),
                })
            }
            ExprKind::Add(a, b) => Ok(self.value(a)?.plus(&self.value(b)?)),
            ExprKind::Sub(a, b) => Ok(self.value(a)?.plus(&self.value(b)?.scale(&Coefficient::from(-1)))),
            ExprKind::Neg(a) => Ok(self.value(a)?.scale(&Coefficient::from(-1))),
            ExprKind::Mul(a, b) => {
                let (va, vb) = (self.value(a)?, self.value(b)?);
                if va.is_scalar() {
                    Ok(vb.scale(&va.scalar))
                } else if vb.is_scalar() {
                    Ok(va.scale(&vb.scalar))
                } else {
                    Err(Diagnostic::new(
                        b.span.start,
                        "cannot multiply two tensor elements with '*'; use '<>' or '#'",
                    ))
                }
            }
            ExprKind::Pow(a, k) => {
                let v = self.value(a)?;
                if !v.is_scalar() {
                    return Err(Diagnostic::new(e.span.start, "powers apply to scalars only"));
                }
                let mut acc = Coefficient::one();
                for _ in 0..*k {
                    acc = &acc * &v.scalar;
                }
                Ok(Value::scalar(acc))
            }
            ExprKind::Shuffle(a, b) => {
                let (va, vb) = (self.value(a)?, self.value(b)?);
                let product = self.alg.shuffle(&va.in_plus(), &vb.in_plus());
                Ok(Value {
                    scalar: Coefficient::zero(),
                    words: product.into_terms(),
                })
            }
            ExprKind::Diamond(a, b) => {
                let (ea, eb) = (self.lambda_operand(a)?, self.lambda_operand(b)?);
                let product = self.alg.diamond(&ea, &eb).map_err(|err| core_error(&e.span, err))?;
                Ok(Value {
                    scalar: Coefficient::zero(),
                    words: product.into_terms(),
                })
            }
            ExprKind::Apply(name, args) => {
                if name != "P" {
                    return Err(Diagnostic::expecting(e.span.start, format!("unknown function '{name}'"), &["'P'"]));
                }
                if args.len() != 1 {
                    return Err(Diagnostic::new(
                        e.span.start,
                        format!("P takes exactly 1 argument, got {}", args.len()),
                    ));
                }
                let inner = self.lambda_operand(&args[0])?;
                let shifted = self.alg.p_shift(&inner).map_err(|err| core_error(&e.span, err))?;
                Ok(Value {
                    scalar: Coefficient::zero(),
                    words: shifted.into_terms(),
                })
            }
        }
    }

    fn generator(&self, i: usize, span: &Span) -> Result<Monomial, Diagnostic> {
        if i == 0 || i > self.alg.vars() {
            return Err(Diagnostic::new(
                span.start,
                format!("unknown generator x{i}: the base has generators x1..x{}", self.alg.vars()),
            ));
        }
        Ok(self.alg.generator(i - 1))
    }

    /// A letter: a polynomial in the generators with weight-polynomial coefficients.
    fn letter(&self, e: &Expr) -> Result<BaseElement, Diagnostic> {
        let unit = self.alg.unit_monomial();
        let constant = |c: Coefficient| BaseElement::term(unit.clone(), c);
        match &e.kind {
            ExprKind::Integer(_) | ExprKind::Ratio(_, _) | ExprKind::Lambda => Ok(constant(self.scalar(e)?)),
            ExprKind::Generator(i) => Ok(BaseElement::basis(self.generator(*i, &e.span)?)),
            ExprKind::Add(a, b) => Ok(self.letter(a)?.plus(&self.letter(b)?)),
            ExprKind::Sub(a, b) => Ok(self.letter(a)?.minus(&self.letter(b)?)),
            ExprKind::Neg(a) => Ok(self.letter(a)?.neg()),
            ExprKind::Mul(a, b) => Ok(self.alg.base().mul(&self.letter(a)?, &self.letter(b)?)),
            ExprKind::Pow(a, k) => {
                let base = self.letter(a)?;
                let mut acc = constant(Coefficient::one());
                for _ in 0..*k {
                    acc = self.alg.base().mul(&acc, &base);
                }
                Ok(acc)
            }
            ExprKind::Word(_) => Err(Diagnostic::new(e.span.start, "words cannot be nested")),
            ExprKind::Shuffle(_, _) | ExprKind::Diamond(_, _) | ExprKind::Apply(_, _) => Err(Diagnostic::new(
                e.span.start,
                "a letter must be a polynomial in the generators",
            )),
        }
    }
}

/// Evaluates parsed syntax in `alg`.
pub fn elaborate(e: &Expr, alg: &TdAlgebra) -> Result<Value, Diagnostic> {
    Elaborator { alg }.value(e)
}

pub fn parse_value(input: &str, alg: &TdAlgebra) -> Result<Value, Diagnostic> {
    elaborate(&parse(input)?, alg)
}

/// A scalar, in the syntax of rendered coefficients.
pub fn parse_coefficient(input: &str, alg: &TdAlgebra) -> Result<Coefficient, Diagnostic> {
    let e = parse(input)?;
    Elaborator { alg }.scalar(&e)
}

/// An element of `Ш_Λ`; scalars denote multiples of `[1]`.
pub fn parse_lambda(input: &str, alg: &TdAlgebra) -> Result<TensorElement, Diagnostic> {
    let v = parse_value(input, alg)?;
    v.in_lambda(alg).map_err(|err| Diagnostic::new(0, err.to_string()))
}

/// An element of `Ш⁺`; scalars denote multiples of the empty word.
pub fn parse_plus(input: &str, alg: &TdAlgebra) -> Result<TensorElement, Diagnostic> {
    Ok(parse_value(input, alg)?.in_plus())
}
