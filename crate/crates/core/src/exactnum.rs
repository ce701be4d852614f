//! Exact arithmetic in real quadratic fields `Q(sqrt(d))`.
//!
//! Every value is kept in canonical form: `a + b*sqrt(d)` with `a`, `b`
//! reduced rationals and `d` squarefree. Rationals are stored with `b = 0`
//! and `d = 0`, so structural equality is numeric equality. All
//! comparisons, floors and ceilings are decided with integer arithmetic
//! only.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix2;
use crate::scalar::Scalar;

/// Exact element `a + b*sqrt(d)` of a real quadratic field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticNumber<T: Scalar> {
    a: Ratio<T>,
    b: Ratio<T>,
    d: T,
}

/// Integer representation `(p + q*sqrt(d)) / r` with `r > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SurdParts<T> {
    pub p: T,
    pub q: T,
    pub d: T,
    pub r: T,
}

/// Splits `n >= 1` into `(s, c)` with `n = s^2 * c` and `c` squarefree.
fn squarefree_split<T: Scalar>(n: &T) -> (T, T) {
    let mut rest = n.clone();
    let mut square = T::one();
    let mut core = T::one();
    let mut f = T::one() + T::one();
    while f.clone() * f.clone() <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&f) {
            rest = rest / f.clone();
            e += 1;
        }
        for _ in 0..e / 2 {
            square = square * f.clone();
        }
        if e % 2 == 1 {
            core = core * f.clone();
        }
        f = f + T::one();
    }
    (square, core * rest)
}

/// `floor((p + q*sqrt(d)) / r)` for `r > 0`, `d` not a perfect square
/// whenever `q != 0`.
pub(crate) fn floor_surd<T: Scalar>(p: &T, q: &T, d: &T, r: &T) -> T {
    if q.is_zero() {
        return p.div_floor(r);
    }
    // m < |q|*sqrt(d) < m + 1
    let m = (q.clone() * q.clone() * d.clone()).sqrt();
    if q.is_positive() {
        (p.clone() + m).div_floor(r)
    } else {
        (p.clone() - m - T::one()).div_floor(r)
    }
}

pub(crate) fn ceil_surd<T: Scalar>(p: &T, q: &T, d: &T, r: &T) -> T {
    -floor_surd(&-p.clone(), &-q.clone(), d, r)
}

impl<T: Scalar> QuadraticNumber<T> {
    /// Builds `a + b*sqrt(d)` and canonicalizes it.
    pub fn new(a: Ratio<T>, b: Ratio<T>, d: T) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::Domain(format!("negative radicand {d}")));
        }
        if d.is_zero() || b.is_zero() {
            return Ok(Self::from_ratio(a));
        }
        let (square, core) = squarefree_split(&d);
        let b = b * Ratio::from_integer(square);
        if core.is_one() {
            return Ok(Self::from_ratio(a + b));
        }
        Ok(Self { a, b, d: core })
    }

    /// `(p + q*sqrt(d)) / r`.
    pub fn from_surd(p: T, q: T, d: T, r: T) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(Ratio::new(p, r.clone()), Ratio::new(q, r), d)
    }

    /// Convenience constructor from machine integers.
    pub fn from_surd_i64(p: i64, q: i64, d: i64, r: i64) -> Result<Self> {
        let conv = |v: i64| T::from_i64(v).ok_or_else(|| Error::Domain(format!("{v} does not fit")));
        Self::from_surd(conv(p)?, conv(q)?, conv(d)?, conv(r)?)
    }

    pub fn from_ratio(a: Ratio<T>) -> Self {
        Self {
            a,
            b: Ratio::zero(),
            d: T::zero(),
        }
    }

    pub fn from_integer(n: T) -> Self {
        Self::from_ratio(Ratio::from_integer(n))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_integer(T::from_i64(n).expect("i64 fits every scalar"))
    }

    /// `sqrt(d)`, canonicalized (so `sqrt(4)` is the rational `2`).
    pub fn sqrt(d: T) -> Result<Self> {
        Self::new(Ratio::zero(), Ratio::one(), d)
    }

    pub fn zero() -> Self {
        Self::from_integer(T::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(T::one())
    }

    pub fn rational_part(&self) -> &Ratio<T> {
        &self.a
    }

    pub fn irrational_coeff(&self) -> &Ratio<T> {
        &self.b
    }

    /// The squarefree radicand, `0` for rationals.
    pub fn radicand(&self) -> &T {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.a.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    pub fn as_ratio(&self) -> Option<&Ratio<T>> {
        self.is_rational().then_some(&self.a)
    }

    pub(crate) fn parts(&self) -> SurdParts<T> {
        let r = self.a.denom().lcm(self.b.denom());
        SurdParts {
            p: self.a.numer().clone() * (r.clone() / self.a.denom().clone()),
            q: self.b.numer().clone() * (r.clone() / self.b.denom().clone()),
            d: self.d.clone(),
            r,
        }
    }

    /// The common radicand of `self` and `other`, if they share a field.
    pub fn common_radicand(&self, other: &Self) -> Result<T> {
        if self.is_rational() {
            Ok(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::FieldMismatch(self.d.to_string(), other.d.to_string()))
        }
    }

    pub fn shares_field_with(&self, other: &Self) -> bool {
        self.common_radicand(other).is_ok()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Self::new(
            self.a.clone() + other.a.clone(),
            self.b.clone() + other.b.clone(),
            d,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dr = Ratio::from_integer(d.clone());
        Self::new(
            self.a.clone() * other.a.clone() + self.b.clone() * other.b.clone() * dr,
            self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone(),
            d,
        )
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.common_radicand(other)?;
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    pub fn negate(&self) -> Self {
        Self {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `x * conjugate(x) = a^2 - b^2 d`.
    pub fn norm(&self) -> Ratio<T> {
        self.a.clone() * self.a.clone()
            - self.b.clone() * self.b.clone() * Ratio::from_integer(self.d.clone())
    }

    /// `x + conjugate(x) = 2a`.
    pub fn trace(&self) -> Ratio<T> {
        self.a.clone() + self.a.clone()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self {
            a: self.a.clone() / n.clone(),
            b: -self.b.clone() / n,
            d: self.d.clone(),
        })
    }

    /// Sign of the value, decided on integers: when the rational and
    /// irrational parts disagree in sign, compare `a^2` with `b^2 d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Ratio::zero());
        let sb = self.b.cmp(&Ratio::zero());
        if sb == Ordering::Equal || sa == sb {
            return if sa == Ordering::Equal { sb } else { sa };
        }
        if sa == Ordering::Equal {
            return sb;
        }
        let a2 = self.a.clone() * self.a.clone();
        let b2d = self.b.clone() * self.b.clone() * Ratio::from_integer(self.d.clone());
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    /// Exact ordering of `self` against `other`.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.signum())
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    /// `true` iff `lo < self < hi` (open interval), with rational bounds.
    pub fn in_open_unit_interval(&self) -> bool {
        self.is_positive() && (Self::one() - self.clone()).is_positive()
    }

    pub fn floor(&self) -> T {
        let SurdParts { p, q, d, r } = self.parts();
        floor_surd(&p, &q, &d, &r)
    }

    pub fn ceil(&self) -> T {
        let SurdParts { p, q, d, r } = self.parts();
        ceil_surd(&p, &q, &d, &r)
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Self {
        self.clone() - Self::from_integer(self.floor())
    }

    pub fn to_f64(&self) -> f64 {
        let r =
            |x: &Ratio<T>| x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN);
        r(&self.a) + r(&self.b) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Continued fraction expansion with exact period detection.
    ///
    /// Quadratic irrationals run the surd recurrence on the state
    /// `(P + sqrt(D)) / Q` with `Q | D - P^2`; the first repeated state
    /// closes the (least) period. Rationals expand finitely.
    pub fn continued_fraction(&self, max_steps: usize) -> Result<ContinuedFraction<T>> {
        if self.is_rational() {
            let mut num = self.a.numer().clone();
            let mut den = self.a.denom().clone();
            let mut digits = Vec::new();
            while !den.is_zero() {
                if digits.len() >= max_steps {
                    return Err(Error::Resource(format!(
                        "continued fraction exceeded {max_steps} steps"
                    )));
                }
                let (quot, rem) = num.div_mod_floor(&den);
                digits.push(quot);
                num = den;
                den = rem;
            }
            return Ok(ContinuedFraction {
                preperiod: digits,
                period: Vec::new(),
            });
        }

        let SurdParts { p, q, d, r } = self.parts();
        let radicand = q.clone() * q.clone() * d;
        let (mut big_p, mut big_d, mut big_q) = if q.is_positive() {
            (p, radicand, r)
        } else {
            (-p, radicand, -r)
        };
        if !(big_d.clone() - big_p.clone() * big_p.clone()).is_multiple_of(&big_q) {
            let aq = big_q.abs();
            big_p = big_p * aq.clone();
            big_d = big_d * big_q.clone() * big_q.clone();
            big_q = big_q * aq;
        }
        let mut seen: HashMap<(T, T), usize> = HashMap::new();
        let mut digits: Vec<T> = Vec::new();
        loop {
            if let Some(&start) = seen.get(&(big_p.clone(), big_q.clone())) {
                let period = digits.split_off(start);
                return Ok(ContinuedFraction {
                    preperiod: digits,
                    period,
                });
            }
            if digits.len() >= max_steps {
                return Err(Error::Resource(format!(
                    "no period detected within {max_steps} steps"
                )));
            }
            seen.insert((big_p.clone(), big_q.clone()), digits.len());
            let digit = if big_q.is_positive() {
                floor_surd(&big_p, &T::one(), &big_d, &big_q)
            } else {
                floor_surd(&-big_p.clone(), &-T::one(), &big_d, &-big_q.clone())
            };
            let next_p = digit.clone() * big_q.clone() - big_p;
            let next_q = (big_d.clone() - next_p.clone() * next_p.clone()) / big_q;
            digits.push(digit);
            big_p = next_p;
            big_q = next_q;
        }
    }

    /// Allauzen's criterion: a quadratic irrational in `(0,1)` whose
    /// conjugate lies outside `[0,1]`.
    pub fn is_sturm_number(&self) -> bool {
        if self.is_rational() || !self.in_open_unit_interval() {
            return false;
        }
        let conj = self.conjugate();
        conj.is_negative() || (conj - Self::one()).is_positive()
    }

    /// Matches the expansion against `[0; 1+a0, (a1..ak)]` with
    /// `ak >= a0 >= 1` (slope below 1/2) or `[0; 1, a0, (a1..ak)]` with
    /// `ak >= a0` (slope above 1/2).
    pub fn cf_sturm_form(&self) -> Result<SturmForm<T>> {
        if self.is_rational() || !self.in_open_unit_interval() {
            return Err(Error::Domain(format!(
                "{self} is not a quadratic irrational in (0,1)"
            )));
        }
        let raw = self.continued_fraction(DEFAULT_CF_STEPS)?;
        let period_len = raw.period.len();
        let pre_len = raw.preperiod.len();
        let one = T::one();
        let d1 = raw.digit(1);
        let (case, a0, tail_start) = if d1 > one {
            (SturmCase::Small, d1 - one.clone(), 2)
        } else {
            (SturmCase::Large, raw.digit(2), 3)
        };
        // The tail must already sit inside the periodic part; equivalent
        // writings are rotations and repetitions of the least period.
        if tail_start >= pre_len && a0 >= one {
            for reps in 1..=CF_SEARCH_FACTOR {
                let k = period_len * reps;
                let digits: Vec<T> = (tail_start..tail_start + k).map(|i| raw.digit(i)).collect();
                if digits.last().is_some_and(|last| *last >= a0) {
                    return Ok(SturmForm {
                        case,
                        k,
                        a0,
                        period_digits: digits,
                        raw,
                    });
                }
            }
        }
        Err(Error::ClassificationFailed(format!(
            "{self} = {raw} has no writing of the required shape"
        )))
    }

    /// Yasutomi's criterion for substitution invariance of `s_{alpha,rho}`.
    pub fn yasutomi_invariant(alpha: &Self, rho: &Self) -> Result<bool> {
        if !alpha.in_open_unit_interval() {
            return Err(Error::Domain(format!("alpha = {alpha} not in (0,1)")));
        }
        if rho.is_negative() || (rho.clone() - Self::one()).is_positive() {
            return Err(Error::Domain(format!("rho = {rho} not in [0,1]")));
        }
        if alpha.is_rational() || !rho.shares_field_with(alpha) {
            return Ok(false);
        }
        let ca = alpha.conjugate();
        let cr = rho.conjugate();
        let one = Self::one();
        let le = |x: &Self, y: &Self| !(x.clone() - y.clone()).is_positive();
        if (ca.clone() - one.clone()).is_positive() {
            Ok(le(&(one - ca.clone()), &cr) && le(&cr, &ca))
        } else if ca.is_negative() {
            Ok(le(&ca, &cr) && le(&cr, &(one - ca.clone())))
        } else {
            Ok(false)
        }
    }
}

/// Step guard for expansions of canonical inputs.
pub const DEFAULT_CF_STEPS: usize = 100_000;

/// How many repetitions of the least period `cf_sturm_form` tries.
pub const CF_SEARCH_FACTOR: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction<T> {
    /// Leading partial quotients, starting with the integer part.
    pub preperiod: Vec<T>,
    /// Least period; empty for rationals.
    pub period: Vec<T>,
}

impl<T: Scalar> ContinuedFraction<T> {
    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Partial quotient `i` (index 0 is the integer part). Panics past the
    /// end of a finite expansion.
    pub fn digit(&self, i: usize) -> T {
        if i < self.preperiod.len() {
            self.preperiod[i].clone()
        } else {
            let j = i - self.preperiod.len();
            self.period[j % self.period.len()].clone()
        }
    }

    /// The convergent obtained from the preperiod followed by `cycles`
    /// copies of the period.
    pub fn truncated_value(&self, cycles: usize) -> Ratio<T> {
        // [[h_n, h_{n-1}], [k_n, k_{n-1}]] is the product of [[a_i, 1], [1, 0]]
        let mut m = digit_product(&self.preperiod);
        if cycles > 0 && !self.period.is_empty() {
            m = &m * &matrix_power(digit_product(&self.period), cycles);
        }
        let [[h, _], [k, _]] = m.m;
        if k.is_zero() {
            return Ratio::from_integer(T::zero());
        }
        // consecutive convergents are coprime
        if k.is_negative() {
            Ratio::new_raw(-h, -k)
        } else {
            Ratio::new_raw(h, k)
        }
    }
}

/// Balanced product of the digit matrices, so big multiplications pair
/// operands of similar size.
fn digit_product<T: Scalar>(digits: &[T]) -> Matrix2<T> {
    match digits {
        [] => Matrix2::identity(),
        [a] => Matrix2::new(a.clone(), T::one(), T::one(), T::zero()),
        _ => {
            let (l, r) = digits.split_at(digits.len() / 2);
            &digit_product(l) * &digit_product(r)
        }
    }
}

fn matrix_power<T: Scalar>(mut base: Matrix2<T>, mut e: usize) -> Matrix2<T> {
    let mut acc = Matrix2::identity();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl<T: Scalar> fmt::Display for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, digit) in self.preperiod.iter().enumerate() {
            match i {
                0 => write!(f, "{digit}")?,
                1 => write!(f, "; {digit}")?,
                _ => write!(f, ", {digit}")?,
            }
        }
        if !self.period.is_empty() {
            let sep = if self.preperiod.len() == 1 { "; " } else { ", " };
            let body: Vec<String> = self.period.iter().map(ToString::to_string).collect();
            write!(f, "{sep}({})", body.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SturmCase {
    /// `alpha < 1/2`, shape `[0; 1+a0, (a1..ak)]`.
    Small,
    /// `alpha > 1/2`, shape `[0; 1, a0, (a1..ak)]`.
    Large,
}

impl fmt::Display for SturmCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SturmCase::Small => "small",
            SturmCase::Large => "large",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmForm<T> {
    pub case: SturmCase,
    pub k: usize,
    pub a0: T,
    pub period_digits: Vec<T>,
    /// The expansion as computed, before matching.
    pub raw: ContinuedFraction<T>,
}

fn write_ratio<T: Scalar>(f: &mut fmt::Formatter<'_>, r: &Ratio<T>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Grammar: `(P+Q*sqrt(D))/R`, `P/R` or `P`.
impl<T: Scalar> fmt::Display for QuadraticNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write_ratio(f, &self.a);
        }
        let SurdParts { p, q, d, r } = self.parts();
        let sign = if q.is_negative() { '-' } else { '+' };
        write!(f, "({p}{sign}{}*sqrt({d}))/{r}", q.abs())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{lit}` at offset {}", self.pos)))
        }
    }

    fn int<T: Scalar>(&mut self) -> Result<T> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'+' | b'-')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        let text = text.strip_prefix('+').unwrap_or(text);
        T::from_str_radix(text, 10).map_err(|_| Error::Parse(format!("expected integer at offset {start}")))
    }
}

impl<T: Scalar> FromStr for QuadraticNumber<T> {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cur = Cursor {
            s: compact.as_bytes(),
            pos: 0,
        };
        let value = if cur.eat(b'(') {
            let p: T = cur.int()?;
            let negative = match cur.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Err(Error::Parse(format!("expected sign after `{p}`"))),
            };
            cur.pos += 1;
            let mut q: T = cur.int()?;
            if negative {
                q = -q;
            }
            cur.expect("*sqrt(")?;
            let d: T = cur.int()?;
            if d.is_negative() {
                return Err(Error::Parse("radicand must be non-negative".into()));
            }
            cur.expect("))")?;
            let r: T = if cur.eat(b'/') { cur.int()? } else { T::one() };
            if r.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Self::from_surd(p, q, d, r)?
        } else {
            let p: T = cur.int()?;
            let r: T = if cur.eat(b'/') { cur.int()? } else { T::one() };
            if r.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Self::from_ratio(Ratio::new(p, r))
        };
        if cur.pos != compact.len() {
            return Err(Error::Parse(format!(
                "trailing input at offset {} in `{input}`",
                cur.pos
            )));
        }
        Ok(value)
    }
}

impl<T: Scalar> PartialOrd for QuadraticNumber<T> {
    /// `None` when the operands live in different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Scalar> $trait for QuadraticNumber<T> {
            type Output = QuadraticNumber<T>;

            /// Panics when the operands live in different quadratic fields.
            fn $method(self, rhs: Self) -> Self {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl<'a, T: Scalar> $trait<&'a QuadraticNumber<T>> for &'a QuadraticNumber<T> {
            type Output = QuadraticNumber<T>;

            fn $method(self, rhs: Self) -> QuadraticNumber<T> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl<T: Scalar> Neg for QuadraticNumber<T> {
    type Output = Self;

    fn neg(self) -> Self {
        self.negate()
    }
}
