//! Exact coefficients: arbitrary-precision rationals and polynomials in the
//! formal weight `L` (written λ in the algebra).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Rational) -> Rational {
        Rational(&self.0 / &other.0)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with an optional leading sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_bigints(num, den))
    }
}

/// A polynomial in the formal weight `L` with rational coefficients.
///
/// Stored sparsely as `(exponent, coefficient)` pairs in increasing exponent
/// order with no zero coefficients, so derived equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    terms: Vec<(u32, Rational)>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Coefficient::constant(Rational::one())
    }

    /// The formal weight `L` itself.
    pub fn lambda() -> Self {
        Coefficient::monomial(1, Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        Coefficient::monomial(0, r)
    }

    pub fn from_integer(n: i64) -> Self {
        Coefficient::constant(Rational::from_integer(n))
    }

    /// `r * L^exp`.
    pub fn monomial(exp: u32, r: Rational) -> Self {
        if r.is_zero() {
            Coefficient::zero()
        } else {
            Coefficient {
                terms: vec![(exp, r)],
            }
        }
    }

    /// Builds a coefficient from arbitrary `(exponent, value)` pairs,
    /// collecting repeated exponents and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut raw: Vec<(u32, Rational)> = terms.into_iter().collect();
        raw.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(u32, Rational)> = Vec::with_capacity(raw.len());
        for (e, r) in raw {
            match out.last_mut() {
                Some((le, lr)) if *le == e => *lr = &*lr + &r,
                _ => out.push((e, r)),
            }
        }
        out.retain(|(_, r)| !r.is_zero());
        Coefficient { terms: out }
    }

    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The constant value, if this coefficient does not involve `L`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, r)] => Some(r.clone()),
            _ => None,
        }
    }

    /// Largest exponent of `L`, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Substitutes a rational value for `L`.
    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, r) in &self.terms {
            acc = &acc + &(r * &at.pow(*e));
        }
        acc
    }

    /// Substitutes an arbitrary coefficient for `L` (e.g. `L -> -L`).
    pub fn substitute(&self, value: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero();
        for (e, r) in &self.terms {
            let mut power = Coefficient::one();
            for _ in 0..*e {
                power = &power * value;
            }
            acc += &power.scale(r);
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Coefficient {
        if r.is_zero() {
            return Coefficient::zero();
        }
        Coefficient {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    /// True when the displayed form starts with a minus sign.
    pub fn leading_is_negative(&self) -> bool {
        self.terms.last().is_some_and(|(_, r)| r.is_negative())
    }
}

impl From<Rational> for Coefficient {
    fn from(r: Rational) -> Self {
        Coefficient::constant(r)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_integer(n)
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ra) = &self.terms[i];
            let (eb, rb) = &rhs.terms[j];
            match ea.cmp(eb) {
                Ordering::Less => {
                    out.push((*ea, ra.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*eb, rb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ra + rb;
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Coefficient { terms: out }
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        *self = &*self + rhs;
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0 == 0 {
            return self.scale(&rhs.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0 == 0 {
            return rhs.scale(&self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ra) in &self.terms {
            for (eb, rb) in &rhs.terms {
                raw.push((ea + eb, ra * rb));
            }
        }
        Coefficient::from_terms(raw)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            terms: self.terms.iter().map(|(e, r)| (*e, -r)).collect(),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

/// Renders as e.g. `(2/3)L^2 - L + 1`, highest power first.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, r)) in self.terms.iter().rev().enumerate() {
            let negative = r.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = r.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            if *e == 1 {
                f.write_str("L")?;
            } else {
                write!(f, "L^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coefficient({self})")
    }
}
